// Acceptance runner: one PASS/FAIL line per criterion, nonzero exit if any fail.
#include <array>
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>

#include "support.hpp"
#include "tstar/dsl.hpp"
#include "tstar/structure.hpp"
#include "tstar/tstar_ext.hpp"

using namespace tstar;

namespace {

/// Collects the first failure; later checks still run but do not overwrite it.
class Criterion {
 public:
  void require(bool ok, const std::string& what) {
    ++checks_;
    if (!ok && failure_.empty()) failure_ = what;
  }
  void note(const std::string& s) { notes_ += (notes_.empty() ? "" : ", ") + s; }
  bool ok() const { return failure_.empty(); }
  std::string detail() const {
    if (!ok()) return failure_;
    return std::to_string(checks_) + " checks" + (notes_.empty() ? "" : "; " + notes_);
  }

 private:
  int checks_ = 0;
  std::string failure_;
  std::string notes_;
};

Subspace coordinate_span(const GradedBasis& b, const std::vector<int>& idx) {
  MatrixQ m = MatrixQ::Zero(b.dim(), static_cast<Eigen::Index>(idx.size()));
  for (std::size_t c = 0; c < idx.size(); ++c) m(idx[c], static_cast<Eigen::Index>(c)) = 1;
  return idx.empty() ? Subspace::zero(b) : Subspace::span(b, m);
}

Cochain2Dual random_supercyclic(Rng& rng, const LieSuperalgebra& g) {
  return random_combination(rng, supercyclic_z2_basis(g), zero_cochain2(g.dim()), [](auto& c) -> auto& { return c.w; });
}

/// Graded Jacobiator of three vectors.
VectorQ jacobiator(const LieSuperalgebra& a, int x, int y, int z) {
  const int n = a.dim();
  const VectorQ ex = unit_vector(n, x), ey = unit_vector(n, y), ez = unit_vector(n, z);
  const int px = bit(a.parity(x)), py = bit(a.parity(y)), pz = bit(a.parity(z));
  return sign_pow(px * pz) * bracket(a, ex, bracket(a, ey, ez)) + sign_pow(px * py) * bracket(a, ey, bracket(a, ez, ex)) +
         sign_pow(py * pz) * bracket(a, ez, bracket(a, ex, ey));
}

bool breaks_invariance(const LieSuperalgebra& a, const EvenForm& b, const std::array<int, 3>& t) {
  const int m = a.dim();
  const VectorQ x = unit_vector(m, t[0]), y = unit_vector(m, t[1]), z = unit_vector(m, t[2]);
  return b(bracket(a, x, y), z) != b(x, bracket(a, y, z));
}

Subspace annihilator_of_derived(const LieSuperalgebra& g) {
  const int n = g.dim();
  const Subspace d = derived_subalgebra(g);
  const MatrixQ ann = d.dim() == 0 ? MatrixQ(MatrixQ::Identity(n, n)) : linalg::kernel(MatrixQ(d.basis().transpose()));
  return Subspace::span(g.basis(), ann);
}

// 1. Axioms on gl(n,n), g(n); structure of g(n).
void axioms(Criterion& c) {
  for (int n = 1; n <= 2; ++n) {
    const auto g = build_glnn(n);
    c.require(check_axioms(g).ok(), "gl(" + std::to_string(n) + "," + std::to_string(n) + ") fails an axiom");
    c.require(testing::jacobi_by_adjoint(g), "gl(n,n) fails the adjoint Jacobi oracle");
  }
  for (int n = 1; n <= 3; ++n) {
    const std::string tag = "g(" + std::to_string(n) + ")";
    const auto g = build_gn(n);
    const AxiomReport rep = check_axioms(g);
    c.require(rep.ok(AxiomKind::Grading) && rep.ok(AxiomKind::SuperSkew) && rep.ok(AxiomKind::Jacobi),
              tag + " fails an axiom");
    c.require(testing::jacobi_by_adjoint(g), tag + " fails the adjoint Jacobi oracle");
    c.require(g.dim() == n * (2 * n - 1), tag + " has the wrong dimension");
    c.require(is_nilpotent(g), tag + " is not nilpotent");
    const Subspace z = center(g);
    c.require(z.dim() == 1, tag + " center is not one-dimensional");
    c.require(z.dim(Parity::Even) == 0, tag + " center is not odd");
    if (n >= 2) {
      const Subspace g0 = coordinate_span(g.basis(), g.basis().indices(Parity::Even));
      const Subspace g1 = coordinate_span(g.basis(), g.basis().indices(Parity::Odd));
      c.require(bracket_span(g, g1, g1) == g0, tag + ": [g1,g1] != g0");
    }
  }
}

// 2. build succeeds iff cocycle and supercyclic; witnesses for both failures.
void build_iff(Criterion& c) {
  Rng rng(2002);
  int built = 0, non_cyclic = 0, non_cocycle = 0;
  for (const auto& [name, g] : testing::gallery()) {
    const auto z2 = z2_basis(g);
    const auto sz2 = supercyclic_z2_basis(g);
    const EvenForm pairing = canonical_pairing(g.basis());
    for (int t = 0; t < 60; ++t) {
      Cochain2Dual w = zero_cochain2(g.dim());
      if (t % 4 == 0)
        w = random_cochain2(rng, g.basis());
      else if (t % 4 == 1)
        w = random_combination(rng, z2, zero_cochain2(g.dim()), [](auto& x) -> auto& { return x.w; });
      else if (t % 4 == 2)
        w = random_combination(rng, sz2, zero_cochain2(g.dim()), [](auto& x) -> auto& { return x.w; });
      else
        w = as_cochain2(random_cochain3(rng, g.basis()));  // supercyclic, rarely closed
      const bool cocycle = is_cocycle2(g, w);
      const bool cyclic = is_supercyclic(g.basis(), w);
      bool ok = true;
      try {
        build(g, w);
      } catch (const PreconditionError&) {
        ok = false;
      }
      c.require(ok == (cocycle && cyclic), name + ": build disagrees with cocycle and supercyclic");
      built += ok;
      const LieSuperalgebra ext = tstar_algebra(g, w);
      if (cocycle && !cyclic) {
        ++non_cyclic;
        c.require(breaks_invariance(ext, pairing, negative_test_invariance(g, w)),
                  name + ": invariance triple does not violate invariance");
      }
      if (!cocycle) {
        ++non_cocycle;
        const auto wt = cocycle2_witness(g, w);
        c.require(wt.has_value(), name + ": no cocycle witness");
        if (wt) c.require(!jacobiator(ext, (*wt)[0], (*wt)[1], (*wt)[2]).isZero(), name + ": witness satisfies Jacobi");
      }
    }
  }
  c.require(non_cyclic > 0 && non_cocycle > 0 && built > 0, "a branch was never exercised");
  c.note(std::to_string(built) + " built, " + std::to_string(non_cyclic) + " non-supercyclic cocycles, " +
         std::to_string(non_cocycle) + " non-cocycles");
}

// 3. hat/unhat roundtrips and dim supercyclic Z2 = dim Z3.
void hat_roundtrip(Criterion& c) {
  Rng rng(3003);
  for (const std::string name : {"abelian(3|0)", "abelian(1|2)", "heisenberg3", "g(2)"}) {
    const LieSuperalgebra g = name == "g(2)" ? build_gn(2) : stock(name).algebra;
    const auto sz2 = supercyclic_z2_basis(g);
    const auto z3 = z3_basis(g);
    c.require(sz2.size() == z3.size(), name + ": dim supercyclic Z2 != dim Z3");
    for (const auto& z : z3) c.require(is_closed3(g, z), name + ": Z3 basis element not closed");
    for (int t = 0; t < 20; ++t) {
      const Cochain2Dual w = random_combination(rng, sz2, zero_cochain2(g.dim()), [](auto& x) -> auto& { return x.w; });
      c.require(unhat(g, hat(g, w)) == w, name + ": unhat(hat(w)) != w");
      const ScalarCochain3 f = random_combination(rng, z3, zero_cochain3(g.dim()), [](auto& x) -> auto& { return x.f; });
      c.require(hat(g, unhat(g, f)) == f, name + ": hat(unhat(f)) != f");
    }
    c.note(name + " " + std::to_string(z3.size()));
  }
}

// 4. S_phi isometries and their failure under a non-coboundary perturbation.
void s_phi(Criterion& c) {
  Rng rng(4004);
  int perturbed = 0;
  for (const auto& [name, g] : testing::gallery()) {
    for (int t = 0; t < 50; ++t) {
      const Cochain2Dual w1 = random_supercyclic(rng, g);
      const ScalarCochain2 phi = random_scalar2(rng, g.basis());
      const SPhiIsometry s = s_phi_isometry(g, w1, phi);
      c.require(!map_failure(s.source.total, s.target.total, s.map, true), name + ": S_phi is not an isometry");
      c.require(hat(g, s.target.omega).f == hat(g, w1).f - delta_scalar2(g, phi).f, name + ": target is not w1 - d phi");
    }
    std::optional<ScalarCochain3> f;
    for (const auto& z : z3_basis(g))
      if (!cohomologous(g, zero_cochain3(g.dim()), z)) f = z;
    if (!f) continue;
    const SPhiIsometry s = s_phi_isometry(g, random_supercyclic(rng, g), random_scalar2(rng, g.basis()));
    Cochain2Dual w2 = s.target.omega;
    w2.w += unhat(g, *f).w;
    const auto fail = map_failure(s.source.total, build(g, w2).total, s.map, true);
    c.require(fail && fail->kind == MapFailure::Kind::Bracket && fail->i >= 0 && fail->j >= 0,
              name + ": perturbed target still matches");
    ++perturbed;
  }
  c.require(perturbed > 0, "no gallery algebra with nonzero H3");
  c.note(std::to_string(perturbed) + " perturbation witnesses");
}

// 5. recognize inverts build; ideal iff abelian on random Lagrangians.
void recognition(Criterion& c) {
  Rng rng(5005);
  for (const auto& [name, g] : testing::gallery()) {
    for (int t = 0; t < 20; ++t) {
      const Cochain2Dual w = random_supercyclic(rng, g);
      const auto e = build(g, w);
      const Recognition r = recognize_with_section(e.total, e.dual_ideal(), e.base_embedding);
      c.require(r.extension.base.constants() == g.constants(), name + ": recovered algebra differs");
      c.require(r.extension.omega == w, name + ": recovered cocycle differs");
      c.require(!map_failure(e.total, r.extension.total, r.map, true), name + ": recognition map fails");
    }
  }
  // U + ann(U) for a random graded U in g, moved by a random S_phi.
  int agree = 0, ideals = 0, tried = 0;
  const auto gal = testing::gallery();
  for (int t = 0; t < 140; ++t) {
    const auto& [name, g] = gal[static_cast<std::size_t>(t) % gal.size()];
    const int n = g.dim();
    const auto e = build(g, random_supercyclic(rng, g));
    std::vector<int> picked;
    for (int i = 0; i < n; ++i)
      if (uniform_int(rng, 0, 1)) picked.push_back(i);
    MatrixQ u = MatrixQ::Zero(n, static_cast<Eigen::Index>(picked.size()));
    for (std::size_t k = 0; k < picked.size(); ++k) u(picked[k], static_cast<Eigen::Index>(k)) = 1;
    // Mix within each parity so U is not a coordinate subspace.
    const MatrixQ mix = testing::random_even_change(rng, g.basis());
    u = mix * u;
    const MatrixQ ann = u.cols() == 0 ? MatrixQ(MatrixQ::Identity(n, n)) : linalg::kernel(MatrixQ(u.transpose()));
    MatrixQ w(2 * n, u.cols() + ann.cols());
    w << e.base_embedding * u, e.dual_embedding * ann;
    w = s_phi_matrix(g, random_scalar2(rng, g.basis())) * w;
    const Subspace lag = Subspace::span(e.total.basis(), w);
    c.require(lag.dim() == n && is_totally_isotropic(e.total.form(), lag), name + ": sample is not Lagrangian");
    const bool ideal = is_ideal(e.total.algebra(), lag);
    const bool abelian = is_abelian(e.total.algebra(), lag);
    c.require(ideal == abelian, name + ": ideal and abelian disagree");
    ++tried;
    agree += ideal == abelian;
    ideals += ideal;
  }
  c.require(tried >= 100 && ideals > 0 && ideals < tried, "Lagrangian samples did not cover both outcomes");
  c.note(std::to_string(agree) + "/" + std::to_string(tried) + " Lagrangians agree, " + std::to_string(ideals) +
         " ideals");
}

// 6. Decompositions, even and odd; the euclidean plane certificate.
void decompositions(Criterion& c) {
  const auto h3 = stock("heisenberg3").algebra;
  const std::pair<std::string, QuadraticLieSuperalgebra> even[] = {
      {"T*_0 g(2)", build(build_gn(2), zero_cochain2(6)).total},
      {"T*_w h3", build(h3, heisenberg_volume_cocycle(h3)).total},
  };
  for (const auto& [name, q] : even) {
    const Decomposition d = decompose(q);
    c.require(d.parity_case == DimensionCase::Even, name + ": not the even case");
    c.require(d.flag.achieved_dim == q.dim() / 2, name + ": flag too short");
    c.require(!map_failure(q, d.extension.total, d.embedding, true), name + ": isometry fails");
    c.note(name + " " + std::to_string(d.flag.achieved_dim));
  }
  for (const std::string name : {"line", "heisenberg3-tstar-plus-line"}) {
    const auto q = stock(name).quadratic();
    const Decomposition d = decompose(q);
    c.require(d.parity_case == DimensionCase::Odd, name + ": not the odd case");
    c.require(d.flag.achieved_dim == q.dim() / 2, name + ": flag too short");
    const auto& big = d.extension.total;
    c.require(big.dim() == q.dim() + 1, name + ": extension is not one dimension larger");
    c.require(!map_failure(q, big, d.embedding, false), name + ": embedding fails");
    const Subspace image = Subspace::span(big.basis(), d.embedding);  // throws if not graded
    c.require(image.dim() == q.dim() && is_ideal(big.algebra(), image), name + ": image is not a codim-1 ideal");
    const MatrixQ ib = image.basis();
    c.require(linalg::rank(MatrixQ(ib.transpose() * big.form().gram() * ib)) == q.dim(),
              name + ": restricted form is degenerate");
  }
  const auto plane = stock("abelian(2|0)").algebra;
  const QuadraticLieSuperalgebra euclid(plane, EvenForm(plane.basis(), MatrixQ::Identity(2, 2)));
  try {
    decompose(euclid);
    c.require(false, "euclidean plane decomposed");
  } catch (const RationalPointNotFound& e) {
    c.require(e.quadric() == "x^2 + y^2", "euclidean plane quadric is '" + e.quadric() + "'");
  }
}

// 7. Center identities.
void centers(Criterion& c) {
  Rng rng(7007);
  std::vector<std::pair<std::string, QuadraticLieSuperalgebra>> quads;
  for (const auto& name : stock_names())
    if (name != "abelian(P|Q)" && stock(name).form) quads.emplace_back(name, stock(name).quadratic());
  quads.emplace_back("class-C(2)", build_class_C_example(2));
  for (const auto& [name, g] : testing::gallery()) {
    for (int t = 0; t < 3; ++t) {
      const auto e = build(g, t == 0 ? zero_cochain2(g.dim()) : random_supercyclic(rng, g));
      quads.emplace_back("T*" + name, e.total);
      if (is_nilpotent(g)) quads.emplace_back("decomposed T*" + name, decompose(e.total).extension.total);
    }
  }
  const std::size_t base = quads.size();
  for (std::size_t i = 0; i + 1 < base; i += 3) quads.emplace_back("sum", orthogonal_sum(quads[i].second, quads[i + 1].second));
  for (const auto& [name, q] : quads) {
    const Subspace perp = orthogonal(q.form(), derived_subalgebra(q.algebra()));
    c.require(perp == center(q.algebra()), name + ": orthogonal of [g,g] != center");
  }
  for (const auto& [name, g] : testing::gallery()) {
    const auto e = build(g, zero_cochain2(g.dim()));
    const Subspace zg = center(g);
    const Subspace ann = annihilator_of_derived(g);
    MatrixQ span(2 * g.dim(), zg.dim() + ann.dim());
    span << e.base_embedding * zg.basis(), e.dual_embedding * ann.basis();
    c.require(center(e.total.algebra()) == Subspace::span(e.total.basis(), span), name + ": center formula fails");
  }
  c.note(std::to_string(quads.size()) + " quadratic instances");
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

/// stdout and exit status of a shell pipeline.
std::pair<std::string, int> shell(const std::string& cmd) {
  std::string out;
  FILE* p = popen(cmd.c_str(), "r");
  if (!p) return {"", -1};
  std::array<char, 4096> buf{};
  std::size_t k;
  while ((k = fread(buf.data(), 1, buf.size(), p)) > 0) out.append(buf.data(), k);
  const int status = pclose(p);
  return {out, WIFEXITED(status) ? WEXITSTATUS(status) : -1};
}

// 8. DSL fixed points and CLI determinism.
void front_end(Criterion& c) {
  int files = 0;
  for (const auto& e : std::filesystem::directory_iterator(TSTAR_CORPUS_DIR)) {
    if (e.path().extension() != ".dsl") continue;
    const std::string name = e.path().filename().string();
    const auto doc = dsl::parse(slurp(e.path()));
    const std::string once = dsl::emit(doc);
    c.require(dsl::parse(once) == doc, name + ": emit does not parse back to the same document");
    c.require(dsl::emit(dsl::parse(once)) == once, name + ": emit is not a fixed point");
    ++files;
  }
  c.require(files >= 10, "fewer than 10 corpus files");
  const std::string cli = std::string("'") + TSTAR_CLI + "'";
  const std::string pipeline = "set -o pipefail 2>/dev/null; " + cli + " example class-c 2 | " + cli + " decompose";
  const auto [out1, rc1] = shell("bash -c \"" + pipeline + "\"");
  const auto [out2, rc2] = shell("bash -c \"" + pipeline + "\"");
  c.require(rc1 == 0 && rc2 == 0, "example class-c 2 | decompose exited " + std::to_string(rc1));
  c.require(!out1.empty() && out1 == out2, "reports differ between runs");
  const auto [t1, r1] = shell(cli + " example gn 3 | " + cli + " props --seed 5 --trials 5");
  const auto [t2, r2] = shell(cli + " example gn 3 | " + cli + " props --seed 5 --trials 5");
  c.require(r1 == 0 && t1 == t2, "props report differs between runs");
  c.note(std::to_string(files) + " corpus files");
}

}  // namespace

int main() {
  const std::pair<const char*, std::function<void(Criterion&)>> criteria[] = {
      {"axioms of gl(n,n) and g(n)", axioms},
      {"build iff cocycle and supercyclic", build_iff},
      {"hat/unhat and cohomology dimensions", hat_roundtrip},
      {"S_phi isometries", s_phi},
      {"recognize and Lagrangian ideals", recognition},
      {"decompositions", decompositions},
      {"center identities", centers},
      {"DSL fixed points and CLI determinism", front_end},
  };
  int failed = 0;
  int k = 0;
  for (const auto& [title, run] : criteria) {
    Criterion c;
    const auto start = std::chrono::steady_clock::now();
    try {
      run(c);
    } catch (const std::exception& e) {
      c.require(false, std::string("exception: ") + e.what());
    }
    failed += !c.ok();
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::cout << "criterion " << ++k << ": " << (c.ok() ? "PASS" : "FAIL") << "  " << title << " (" << c.detail()
              << ") [" << std::fixed << std::setprecision(1) << secs << "s]" << std::endl;
  }
  return failed == 0 ? 0 : 1;
}
