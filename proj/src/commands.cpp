#include <optional>
#include <stdexcept>

#include "tstar/cli.hpp"
#include "tstar/dsl.hpp"
#include "tstar/gallery.hpp"
#include "tstar/linalg.hpp"
#include "tstar/random.hpp"
#include "tstar/report.hpp"
#include "tstar/structure.hpp"

namespace tstar::cli {

namespace {

class InputError : public std::runtime_error {
 public:
  InputError(std::string kind, const std::string& what) : std::runtime_error(what), kind_(std::move(kind)) {}
  const std::string& kind() const { return kind_; }

 private:
  std::string kind_;
};

Json args_json(const Options& o) {
  Json a;
  a["format"] = o.json ? "json" : "text";
  if (!o.example.empty()) a["example"] = o.example;
  if (o.omega) a["omega"] = *o.omega;
  if (o.phi) a["phi"] = *o.phi;
  if (o.ideal) a["ideal"] = *o.ideal;
  if (o.command == "props") {
    a["seed"] = o.seed;
    a["trials"] = o.trials;
  }
  a["max_dim"] = o.max_dim;
  return a;
}

dsl::AlgebraDocument load(const Options& o, const std::string& input) {
  dsl::AlgebraDocument doc = dsl::parse(input);
  if (doc.basis.dim() > o.max_dim)
    throw InputError("size", "dimension " + std::to_string(doc.basis.dim()) + " exceeds --max-dim " +
                                 std::to_string(o.max_dim));
  return doc;
}

std::string emit_cochains(const GradedBasis& b, std::vector<std::pair<std::string, Cochain2Dual>> c2,
                          std::vector<std::pair<std::string, ScalarCochain3>> c3 = {}) {
  dsl::AlgebraDocument d;
  d.basis = b;
  d.brackets = Tensor3Q(b.dim());
  d.cochain2 = std::move(c2);
  d.cochain3 = std::move(c3);
  const std::string text = dsl::emit(d);
  const auto nl = text.find('\n');
  return nl == std::string::npos ? std::string() : text.substr(nl + 1);
}

Json vectors_json(const GradedBasis& b, const MatrixQ& m) {
  Json out = Json::array();
  for (Eigen::Index c = 0; c < m.cols(); ++c) out.push_back(dsl::format_vector(b, m.col(c)));
  return out;
}

// Grading, super-skew-symmetry and Jacobi on the raw tensor.
bool axiom_checks(Report& r, const dsl::AlgebraDocument& doc) {
  const AxiomReport rep = check_axioms(doc.basis, doc.brackets);
  const std::pair<AxiomKind, const char*> kinds[] = {
      {AxiomKind::Grading, "grading"}, {AxiomKind::SuperSkew, "super_skew"}, {AxiomKind::Jacobi, "jacobi"}};
  for (const auto& [k, name] : kinds) {
    const AxiomViolation* v = rep.first(k);
    r.check(name, v == nullptr, v ? labels(doc.basis, v->indices) : Json());
  }
  return rep.ok();
}

std::optional<QuadraticLieSuperalgebra> quadratic_checks(Report& r, const dsl::AlgebraDocument& doc) {
  if (!doc.gram) throw InputError("input", "this command needs form lines");
  const LieSuperalgebra g = doc.algebra();
  const EvenForm b = doc.form();
  const MatrixQ radical = linalg::kernel(b.gram());
  r.check("form_nondegenerate", radical.cols() == 0,
          radical.cols() ? Json(dsl::format_vector(doc.basis, radical.col(0))) : Json());
  const auto w = invariance_witness(g, b);
  r.check("form_invariant", !w, w ? labels(doc.basis, *w) : Json());
  if (radical.cols() || w) return std::nullopt;
  return QuadraticLieSuperalgebra(g, b);
}

Json properties(const LieSuperalgebra& g) {
  Json p;
  p["nilpotent"] = is_nilpotent(g);
  p["solvable"] = is_solvable(g);
  p["class_condition"] = class_condition(g);
  p["class_C"] = in_class_C(g);
  return p;
}

void base_dimensions(Report& r, const LieSuperalgebra& g) {
  r.dimensions()["total"] = g.dim();
  r.dimensions()["even"] = g.basis().even_dim();
  r.dimensions()["odd"] = g.basis().odd_dim();
}

// The cochain selected by --omega: zero when absent, a cochain2 as is, or the
// 2-cocycle of a closed cochain3.
std::optional<Cochain2Dual> resolve_omega(Report& r, const Options& o, const dsl::AlgebraDocument& doc,
                                          const LieSuperalgebra& g) {
  if (!o.omega) return zero_cochain2(g.dim());
  if (const Cochain2Dual* c = doc.find_cochain2(*o.omega)) return *c;
  if (const ScalarCochain3* f = doc.find_cochain3(*o.omega)) {
    const auto w = closed3_witness(g, *f);
    r.check("cochain3_closed", !w, w ? labels(doc.basis, *w) : Json());
    if (w) return std::nullopt;
    return unhat(g, *f);
  }
  throw InputError("input", "no cochain2 or cochain3 named '" + *o.omega + "'");
}

bool omega_checks(Report& r, const LieSuperalgebra& g, const Cochain2Dual& omega) {
  const auto cw = cocycle2_witness(g, omega);
  r.check("cocycle", !cw, cw ? labels(g.basis(), *cw) : Json());
  const auto sw = supercyclic_witness(g.basis(), omega);
  r.check("supercyclic", !sw, sw ? labels(g.basis(), *sw) : Json());
  return !cw && !sw;
}

void cmd_check(Report& r, const Options&, const dsl::AlgebraDocument& doc) {
  if (!axiom_checks(r, doc)) return;
  const LieSuperalgebra g = doc.algebra();
  base_dimensions(r, g);
  const Subspace z = center(g);
  r.dimensions()["center"] = z.dim();
  r.dimensions()["center_odd"] = z.dim(Parity::Odd);
  const Subspace derived = derived_subalgebra(g);
  r.dimensions()["derived"] = derived.dim();
  r.outputs()["properties"] = properties(g);
  if (doc.gram) {
    if (quadratic_checks(r, doc)) {
      const Subspace orth = orthogonal(doc.form(), derived);
      r.check("center_equals_orthogonal_of_derived", orth == z, Json::array({z.dim(), orth.dim()}));
    }
  }
  Json cochains = Json::array();
  for (const auto& [name, c] : doc.cochain2)
    cochains.push_back({{"name", name}, {"kind", "cochain2"}, {"cocycle", is_cocycle2(g, c)},
                        {"supercyclic", is_supercyclic(g.basis(), c)}});
  for (const auto& [name, f] : doc.cochain3)
    cochains.push_back({{"name", name}, {"kind", "cochain3"}, {"closed", is_closed3(g, f)}});
  for (const auto& [name, p] : doc.scalar2) {
    const ScalarCochain3 d = delta_scalar2(g, p);
    cochains.push_back({{"name", name}, {"kind", "scalar2"}, {"coboundary_zero", d.f.is_zero()}});
  }
  if (!cochains.empty()) r.outputs()["cochains"] = std::move(cochains);
}

void cmd_tstar(Report& r, const Options& o, const dsl::AlgebraDocument& doc, Outcome& out) {
  if (!axiom_checks(r, doc)) return;
  const LieSuperalgebra g = doc.algebra();
  const auto omega = resolve_omega(r, o, doc, g);
  if (!omega) return;
  const auto cw = cocycle2_witness(g, *omega);
  r.check("cocycle", !cw, cw ? labels(g.basis(), *cw) : Json());
  const auto sw = supercyclic_witness(g.basis(), *omega);
  r.check("supercyclic", !sw, sw ? labels(g.basis(), *sw) : Json());
  const GradedBasis ext = extension_basis(g.basis());
  if (cw) {
    const AxiomReport rep = check_axioms(tstar_algebra(g, *omega));
    const AxiomViolation* v = rep.first(AxiomKind::Jacobi);
    r.check("extension_jacobi", false, v ? labels(ext, v->indices) : Json("no violating triple found"));
    return;
  }
  if (sw) {
    r.check("extension_invariant", false, labels(ext, negative_test_invariance(g, *omega)));
    return;
  }
  const TStarExtension e = build(g, *omega);
  r.check("extension_jacobi", check_axioms(e.total.algebra()).ok());
  r.check("extension_invariant", is_invariant(e.total.algebra(), e.total.form()));
  r.check("extension_nondegenerate", is_nondegenerate(e.total.form()));
  r.check("dual_ideal_lagrangian_abelian", lagrangian_is_ideal(e.total, e.dual_ideal()));
  r.dimensions()["base"] = g.dim();
  base_dimensions(r, e.total.algebra());
  out.document = dsl::emit(dsl::document(e.total));
  r.outputs()["document"] = *out.document;
}

void cmd_cohomology(Report& r, const Options&, const dsl::AlgebraDocument& doc) {
  if (!axiom_checks(r, doc)) return;
  const LieSuperalgebra g = doc.algebra();
  const auto z2 = z2_basis(g);
  const auto sz2 = supercyclic_z2_basis(g);
  const auto z3 = z3_basis(g);
  const auto b3 = b3_basis(g);
  r.dimensions()["z2"] = z2.size();
  r.dimensions()["supercyclic_z2"] = sz2.size();
  r.dimensions()["z3"] = z3.size();
  r.dimensions()["b3"] = b3.size();
  r.dimensions()["h3"] = z3.size() - b3.size();
  r.check("hat_dimensions_agree", sz2.size() == z3.size(), Json::array({sz2.size(), z3.size()}));
  Json bad = nullptr;
  for (std::size_t i = 0; i < sz2.size() && bad.is_null(); ++i)
    if (!(unhat(g, hat(g, sz2[i])) == sz2[i])) bad = "supercyclic_z2_" + std::to_string(i + 1);
  for (std::size_t i = 0; i < z3.size() && bad.is_null(); ++i)
    if (!(hat(g, unhat(g, z3[i])) == z3[i])) bad = "z3_" + std::to_string(i + 1);
  r.check("hat_roundtrip", bad.is_null(), bad);
  std::vector<std::pair<std::string, Cochain2Dual>> c2;
  std::vector<std::pair<std::string, ScalarCochain3>> c3;
  for (std::size_t i = 0; i < sz2.size(); ++i) c2.emplace_back("sz2_" + std::to_string(i + 1), sz2[i]);
  for (std::size_t i = 0; i < z3.size(); ++i) c3.emplace_back("z3_" + std::to_string(i + 1), z3[i]);
  for (std::size_t i = 0; i < b3.size(); ++i) c3.emplace_back("b3_" + std::to_string(i + 1), b3[i]);
  r.outputs()["bases"] = emit_cochains(g.basis(), std::move(c2), std::move(c3));
}

void cmd_isometry(Report& r, const Options& o, const dsl::AlgebraDocument& doc, Outcome& out) {
  if (!o.phi) throw InputError("input", "isometry needs --phi NAME");
  const ScalarCochain2* phi = doc.find_scalar2(*o.phi);
  if (!phi) throw InputError("input", "no scalar2 named '" + *o.phi + "'");
  if (!axiom_checks(r, doc)) return;
  const LieSuperalgebra g = doc.algebra();
  const auto omega = resolve_omega(r, o, doc, g);
  if (!omega || !omega_checks(r, g, *omega)) return;
  try {
    const SPhiIsometry s = s_phi_isometry(g, *omega, *phi);
    r.check("s_phi_isometry", true);
    base_dimensions(r, s.target.total.algebra());
    r.outputs()["omega2"] = emit_cochains(g.basis(), {{"omega2", s.target.omega}});
    r.outputs()["map"] = matrix_json(s.map);
    out.document = dsl::emit(dsl::document(s.target.total));
    r.outputs()["target"] = *out.document;
  } catch (const VerificationError& e) {
    r.check("s_phi_isometry", false, e.what());
  }
}

void cmd_recognize(Report& r, const Options& o, const dsl::AlgebraDocument& doc, Outcome& out) {
  if (!o.ideal) throw InputError("input", "recognize needs --ideal \"v1, v2, ...\"");
  if (!axiom_checks(r, doc)) return;
  const auto q = quadratic_checks(r, doc);
  if (!q) return;
  const MatrixQ cols = dsl::parse_vectors(doc.basis, *o.ideal);
  Subspace ideal;
  try {
    ideal = Subspace::span(doc.basis, cols);
    r.check("ideal_graded", true);
  } catch (const PreconditionError&) {
    r.check("ideal_graded", false, vectors_json(doc.basis, cols));
    return;
  }
  const int n = q->dim();
  r.check("even_dimension", n % 2 == 0, Json::array({n}));
  r.check("half_dimension", 2 * ideal.dim() == n, Json::array({ideal.dim(), n / 2}));
  const MatrixQ ib = ideal.basis();
  const MatrixQ pairing = ib.transpose() * q->form().gram() * ib;
  r.check("totally_isotropic", linalg::is_zero_matrix(pairing), matrix_json(pairing));
  const bool is_id = is_ideal(q->algebra(), ideal);
  r.check("ideal", is_id, vectors_json(doc.basis, ib));
  if (r.failed()) return;
  try {
    r.check("ideal_iff_abelian", lagrangian_is_ideal(*q, ideal));
    const Recognition rec = recognize(*q, ideal);
    r.check("isometry", true);
    dsl::AlgebraDocument quotient = dsl::document(rec.extension.base);
    quotient.cochain2.emplace_back("omega", rec.extension.omega);
    out.document = dsl::emit(quotient);
    r.dimensions()["quotient"] = rec.extension.base.dim();
    r.outputs()["quotient"] = *out.document;
    r.outputs()["section"] = vectors_json(doc.basis, rec.section);
    r.outputs()["map"] = matrix_json(rec.map);
  } catch (const VerificationError& e) {
    r.check("isometry", false, e.what());
  }
}

void cmd_decompose(Report& r, const Options&, const dsl::AlgebraDocument& doc, Outcome& out) {
  if (!axiom_checks(r, doc)) return;
  const auto q = quadratic_checks(r, doc);
  if (!q) return;
  const LieSuperalgebra& g = q->algebra();
  const bool pre = is_nilpotent(g) || (is_solvable(g) && class_condition(g));
  r.check("nilpotent_or_solvable_with_class_condition", pre, properties(g));
  if (!pre) return;
  base_dimensions(r, g);
  try {
    const Decomposition d = decompose(*q);
    r.check("flag_dimension", d.flag.achieved_dim == q->dim() / 2, Json::array({d.flag.achieved_dim, q->dim() / 2}));
    r.check("embedding_verified", true);
    r.dimensions()["ideal"] = d.flag.achieved_dim;
    r.dimensions()["quotient"] = d.quotient.dim();
    r.dimensions()["extension"] = d.extension.total.dim();
    r.outputs()["parity_case"] = to_string(d.parity_case);
    r.outputs()["ideal"] = vectors_json(doc.basis, d.ideal.basis());
    dsl::AlgebraDocument quotient = dsl::document(d.quotient);
    quotient.cochain2.emplace_back("omega", d.extension.omega);
    out.document = dsl::emit(quotient);
    r.outputs()["quotient"] = *out.document;
    r.outputs()["embedding"] = matrix_json(d.embedding);
  } catch (const RationalPointNotFound& e) {
    r.check("rational_point", false, e.quadric().empty() ? Json(e.what()) : Json(e.quadric()));
    r.outputs()["quadric"] = e.quadric();
    r.outputs()["reason"] = e.what();
  } catch (const VerificationError& e) {
    r.check("internal_verification", false, e.what());
  }
}

int positive_count(const std::string& text, const Options& o) {
  int n = 0;
  try {
    std::size_t used = 0;
    n = std::stoi(text, &used);
    if (used != text.size()) throw std::invalid_argument(text);
  } catch (const std::exception&) {
    throw InputError("input", "expected a positive integer, got '" + text + "'");
  }
  if (n < 1) throw InputError("input", "n must be at least 1");
  if (n > 4 && !o.allow_large) throw InputError("size", "n > 4 needs --allow-large");
  return n;
}

std::string cmd_example(const Options& o) {
  if (o.example.size() != 2) throw InputError("input", "usage: example gn N | glnn N | class-c N | stock NAME");
  const std::string& family = o.example[0];
  if (family == "gn") return dsl::emit(dsl::document(build_gn(positive_count(o.example[1], o))));
  if (family == "glnn") return dsl::emit(dsl::document(build_glnn(positive_count(o.example[1], o))));
  if (family == "class-c") return dsl::emit(dsl::document(build_class_C_example(positive_count(o.example[1], o))));
  if (family == "stock") {
    StockAlgebra s;
    try {
      s = stock(o.example[1]);
    } catch (const std::invalid_argument& e) {
      throw InputError("input", e.what());
    }
    dsl::AlgebraDocument d = dsl::document(s.algebra);
    if (s.form) d.gram = s.form->gram();
    if (o.example[1] == "heisenberg3") {
      ScalarCochain3 vol = hat(s.algebra, heisenberg_volume_cocycle(s.algebra));
      d.cochain3.emplace_back("vol", vol);
    }
    return dsl::emit(d);
  }
  throw InputError("input", "unknown example family '" + family + "'");
}

template <typename Fn>
void property(Report& r, const std::string& name, int trials, Fn&& fn) {
  for (int t = 0; t < trials; ++t) {
    std::string why;
    if (!fn(t, why)) {
      r.check(name, false, Json{{"trial", t}, {"detail", why}});
      return;
    }
  }
  r.check(name, true);
}

void cmd_props(Report& r, const Options& o, const dsl::AlgebraDocument& doc) {
  if (!axiom_checks(r, doc)) return;
  const LieSuperalgebra g = doc.algebra();
  Rng rng(o.seed);
  const auto sz2 = supercyclic_z2_basis(g);
  const auto z2 = z2_basis(g);
  auto random_supercyclic = [&] {
    return random_combination(rng, sz2, zero_cochain2(g.dim()), [](auto& c) -> auto& { return c.w; });
  };
  r.dimensions()["supercyclic_z2"] = sz2.size();
  r.dimensions()["z2"] = z2.size();

  property(r, "build_iff_cocycle_and_supercyclic", o.trials, [&](int t, std::string& why) {
    Cochain2Dual w = t % 3 == 0   ? random_cochain2(rng, g.basis())
                     : t % 3 == 1 ? random_supercyclic()
                                  : random_combination(rng, z2, zero_cochain2(g.dim()),
                                                       [](auto& c) -> auto& { return c.w; });
    const bool valid = is_cocycle2(g, w) && is_supercyclic(g.basis(), w);
    bool built = true;
    try {
      build(g, w);
    } catch (const PreconditionError&) {
      built = false;
    }
    if (built != valid) why = built ? "built an invalid cochain" : "rejected a valid cochain";
    return built == valid;
  });
  property(r, "hat_roundtrip", o.trials, [&](int, std::string& why) {
    const Cochain2Dual w = random_supercyclic();
    why = "unhat(hat(omega)) != omega";
    return unhat(g, hat(g, w)) == w;
  });
  property(r, "s_phi_isometry", o.trials, [&](int, std::string& why) {
    const Cochain2Dual w = random_supercyclic();
    const ScalarCochain2 phi = random_scalar2(rng, g.basis());
    try {
      s_phi_isometry(g, w, phi);
    } catch (const Error& e) {
      why = e.what();
      return false;
    }
    return true;
  });
  property(r, "recognize_roundtrip", o.trials, [&](int, std::string& why) {
    const Cochain2Dual w = random_supercyclic();
    const TStarExtension e = build(g, w);
    const Recognition rec = recognize(e.total, e.dual_ideal());
    if (!(rec.extension.omega == w)) why = "recovered cocycle differs";
    if (!(rec.extension.base.constants() == g.constants())) why = "recovered algebra differs";
    return why.empty();
  });
}

}  // namespace

Outcome run(const Options& o, const std::string& input) {
  Outcome out;
  const bool reads_input = o.command != "example";
  Report r(o.command, args_json(o), reads_input ? input : std::string_view());
  try {
    if (o.command == "example") {
      out.document = cmd_example(o);
      out.stdout_text = *out.document;
      return out;
    }
    const dsl::AlgebraDocument doc = load(o, input);
    if (o.command == "check")
      cmd_check(r, o, doc);
    else if (o.command == "tstar")
      cmd_tstar(r, o, doc, out);
    else if (o.command == "cohomology")
      cmd_cohomology(r, o, doc);
    else if (o.command == "isometry")
      cmd_isometry(r, o, doc, out);
    else if (o.command == "recognize")
      cmd_recognize(r, o, doc, out);
    else if (o.command == "decompose")
      cmd_decompose(r, o, doc, out);
    else if (o.command == "props")
      cmd_props(r, o, doc);
    else
      throw InputError("input", "unknown command '" + o.command + "'");
  } catch (const dsl::ParseError& e) {
    r.input_error(dsl::to_string(e.kind()), e.what(), e.line(), e.column());
  } catch (const InputError& e) {
    r.input_error(e.kind(), e.what());
  } catch (const PreconditionError& e) {
    r.input_error("precondition", e.what());
  } catch (const std::invalid_argument& e) {
    r.input_error("input", e.what());
  } catch (const VerificationError& e) {
    r.check("internal_verification", false, e.what());
  }
  out.exit_code = r.exit_code();
  out.stdout_text = o.json ? r.to_json() : r.to_text();
  return out;
}

}  // namespace tstar::cli
