#include "tstar/tstar_ext.hpp"

#include <algorithm>

#include "tstar/linalg.hpp"

namespace tstar {

namespace {

std::vector<int> to_vec(const std::array<int, 3>& a) { return {a[0], a[1], a[2]}; }

}  // namespace

Subspace TStarExtension::dual_ideal() const { return Subspace::span(total.basis(), dual_embedding); }

GradedBasis extension_basis(const GradedBasis& base) {
  std::vector<std::string> names = base.names();
  std::vector<Parity> parities = base.parities();
  for (int i = 0; i < base.dim(); ++i) {
    // A base already holding both `a` and `a*` pushes the dual of `a` to `a**`.
    std::string dual = base.name(i) + "*";
    while (std::find(names.begin(), names.end(), dual) != names.end()) dual += "*";
    names.push_back(dual);
    parities.push_back(base.parity(i));
  }
  return GradedBasis(std::move(names), std::move(parities));
}

LieSuperalgebra tstar_algebra(const LieSuperalgebra& g, const Cochain2Dual& omega) {
  const int n = g.dim();
  if (const auto v = cochain2_violation(g.basis(), omega))
    throw PreconditionError("omega is not an even super-antisymmetric cochain", to_vec(*v));
  Tensor3Q c(2 * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      for (int k = 0; k < n; ++k) c(i, j, n + k) = omega.w(i, j, k);
      for (const auto& [k, v] : g.terms(i, j)) {
        c(i, j, k) = v;
        // [e_i, e_k^*] = pi(e_i) e_k^* has e_j^* coefficient -(-1)^{p_i p_k} c(i,j,k)
        c(i, n + k, n + j) = -koszul(g.parity(i), g.parity(k)) * v;
        c(n + k, i, n + j) = v;
      }
    }
  return LieSuperalgebra(extension_basis(g.basis()), std::move(c));
}

EvenForm canonical_pairing(const GradedBasis& base) {
  const int n = base.dim();
  MatrixQ gram = MatrixQ::Zero(2 * n, 2 * n);
  for (int i = 0; i < n; ++i) {
    gram(i, n + i) = sign_pow(bit(base.parity(i)));
    gram(n + i, i) = 1;
  }
  return EvenForm(extension_basis(base), std::move(gram));
}

TStarExtension build(const LieSuperalgebra& g, const Cochain2Dual& omega) {
  if (const auto v = cochain2_violation(g.basis(), omega))
    throw PreconditionError("omega is not an even super-antisymmetric cochain", to_vec(*v));
  if (const auto v = cocycle2_witness(g, omega))
    throw PreconditionError("omega is not a 2-cocycle; the extension bracket fails the Jacobi identity",
                            to_vec(*v));
  if (const auto v = supercyclic_witness(g.basis(), omega))
    throw PreconditionError("omega is not supercyclic; the canonical pairing is not invariant", to_vec(*v));

  LieSuperalgebra a = tstar_algebra(g, omega);
  if (!check_axioms(a).ok()) throw VerificationError("T*-extension of a 2-cocycle fails the super Jacobi identity");
  EvenForm b = canonical_pairing(g.basis());
  if (!is_invariant(a, b) || !is_nondegenerate(b))
    throw VerificationError("canonical pairing on a T*-extension is not an invariant scalar product");

  const int n = g.dim();
  TStarExtension out{g, omega, QuadraticLieSuperalgebra(std::move(a), std::move(b)), MatrixQ::Zero(2 * n, n),
                     MatrixQ::Zero(2 * n, n)};
  out.base_embedding.topRows(n) = MatrixQ::Identity(n, n);
  out.dual_embedding.bottomRows(n) = MatrixQ::Identity(n, n);
  return out;
}

std::array<int, 3> negative_test_invariance(const LieSuperalgebra& g, const Cochain2Dual& omega) {
  if (is_supercyclic(g.basis(), omega))
    throw PreconditionError("negative_test_invariance: omega is supercyclic");
  if (const auto v = cocycle2_witness(g, omega))
    throw PreconditionError("negative_test_invariance: omega is not a 2-cocycle", to_vec(*v));
  const auto w = invariance_witness(tstar_algebra(g, omega), canonical_pairing(g.basis()));
  if (!w) throw VerificationError("non-supercyclic omega produced an invariant pairing");
  return *w;
}

bool lagrangian_is_ideal(const QuadraticLieSuperalgebra& q, const Subspace& ideal) {
  if (q.dim() % 2 != 0) throw PreconditionError("lagrangian_is_ideal: dimension is odd");
  if (2 * ideal.dim() != q.dim()) throw PreconditionError("lagrangian_is_ideal: subspace is not half-dimensional");
  if (!is_totally_isotropic(q.form(), ideal)) throw PreconditionError("lagrangian_is_ideal: subspace is not isotropic");
  const bool ideal_ok = is_ideal(q.algebra(), ideal);
  const bool abelian = is_abelian(q.algebra(), ideal);
  if (ideal_ok != abelian)
    throw VerificationError("half-dimensional isotropic subspace: ideal and abelian tests disagree");
  return ideal_ok;
}

const char* to_string(MapFailure::Kind k) {
  switch (k) {
    case MapFailure::Kind::Shape: return "shape";
    case MapFailure::Kind::NotInjective: return "not injective";
    case MapFailure::Kind::NotEven: return "not even";
    case MapFailure::Kind::Bracket: return "bracket not preserved";
    case MapFailure::Kind::Form: return "form not preserved";
  }
  return "?";
}

std::optional<MapFailure> map_failure(const QuadraticLieSuperalgebra& from, const QuadraticLieSuperalgebra& to,
                                      const MatrixQ& map, bool onto) {
  using K = MapFailure::Kind;
  const int n = from.dim();
  if (map.rows() != to.dim() || map.cols() != n || (onto && to.dim() != n)) return MapFailure{K::Shape};
  if (linalg::rank(map) != n) return MapFailure{K::NotInjective};
  for (int j = 0; j < n; ++j)
    if (homogeneous_parity(to.basis(), map.col(j)) != from.basis().parity(j)) return MapFailure{K::NotEven, j};
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const VectorQ lhs = map * from.algebra().bracket_basis(i, j);
      const VectorQ rhs = bracket(to.algebra(), map.col(i), map.col(j));
      if (lhs != rhs) return MapFailure{K::Bracket, i, j};
    }
  const MatrixQ pulled = map.transpose() * to.form().gram() * map;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (pulled(i, j) != from.form().gram()(i, j)) return MapFailure{K::Form, i, j};
  return std::nullopt;
}

Recognition extension_along_section(const QuadraticLieSuperalgebra& q, const Subspace& ideal,
                                    const MatrixQ& section, std::vector<std::string> names) {
  const Quotient quo = quotient(q.algebra(), ideal, section, std::move(names));
  const LieSuperalgebra& gq = quo.algebra;
  const int m = gq.dim();
  const int n = q.dim();
  const MatrixQ& s = quo.section;
  const MatrixQ& p = quo.projection;

  // F_x(e_b) = B(x - s p x / 2, s_b)
  const MatrixQ corrected = MatrixQ::Identity(n, n) - (s * p) / Rational(2);
  const MatrixQ dual_part = s.transpose() * q.form().gram().transpose() * corrected;

  Cochain2Dual omega = zero_cochain2(m);
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b) {
      VectorQ val = dual_part * bracket(q.algebra(), s.col(a), s.col(b));
      val -= coadjoint_matrix(gq, a) * (dual_part * s.col(b));
      val += koszul(gq.parity(a), gq.parity(b)) * (coadjoint_matrix(gq, b) * (dual_part * s.col(a)));
      for (int k = 0; k < m; ++k) omega.w(a, b, k) = val(k);
    }

  Recognition out;
  try {
    out.extension = build(gq, omega);
  } catch (const PreconditionError& e) {
    throw VerificationError(std::string("cocycle read off along the section is invalid: ") + e.what());
  }
  out.map = MatrixQ(2 * m, n);
  out.map << p, dual_part;
  out.section = s;
  if (const auto f = map_failure(q, out.extension.total, out.map, 2 * m == n))
    throw VerificationError(std::string("extension map fails verification: ") + to_string(f->kind));
  return out;
}

namespace {

void require_lagrangian_ideal(const QuadraticLieSuperalgebra& q, const Subspace& ideal) {
  if (q.dim() % 2 != 0) throw PreconditionError("recognize: dimension is odd");
  if (ideal.ambient_dim() != q.dim()) throw PreconditionError("recognize: subspace lives in another space");
  if (2 * ideal.dim() != q.dim()) throw PreconditionError("recognize: ideal is not half-dimensional");
  if (!is_totally_isotropic(q.form(), ideal)) throw PreconditionError("recognize: ideal is not totally isotropic");
  if (!is_ideal(q.algebra(), ideal)) throw PreconditionError("recognize: subspace is not an ideal");
}

}  // namespace

std::vector<std::string> coordinate_names(const GradedBasis& b, const MatrixQ& unit_columns) {
  std::vector<std::string> names;
  for (Eigen::Index a = 0; a < unit_columns.cols(); ++a)
    for (int i = 0; i < b.dim(); ++i)
      if (!is_zero(unit_columns(i, a))) names.push_back(b.name(i));
  return names;
}

Recognition recognize(const QuadraticLieSuperalgebra& q, const Subspace& ideal) {
  require_lagrangian_ideal(q, ideal);
  return extension_along_section(q, ideal, isotropic_complement(q.form(), ideal),
                                 coordinate_names(q.basis(), ideal.coordinate_complement()));
}

Recognition recognize_with_section(const QuadraticLieSuperalgebra& q, const Subspace& ideal,
                                   const MatrixQ& section) {
  require_lagrangian_ideal(q, ideal);
  const Subspace c = Subspace::span(q.basis(), section);
  if (c.dim() != section.cols() || !is_totally_isotropic(q.form(), c))
    throw PreconditionError("recognize: section is not an isotropic graded complement");
  std::vector<std::string> names;
  for (Eigen::Index a = 0; a < section.cols(); ++a) names.push_back("q" + std::to_string(a + 1));
  return extension_along_section(q, ideal, section, std::move(names));
}

MatrixQ s_phi_matrix(const LieSuperalgebra& g, const ScalarCochain2& phi) {
  const int n = g.dim();
  MatrixQ s = MatrixQ::Identity(2 * n, 2 * n);
  s.bottomLeftCorner(n, n) = phi.p.transpose();
  return s;
}

SPhiIsometry s_phi_isometry(const LieSuperalgebra& g, const Cochain2Dual& omega1, const ScalarCochain2& phi) {
  if (const auto v = scalar2_violation(g.basis(), phi))
    throw PreconditionError("phi is not an even super-antisymmetric form", {(*v)[0], (*v)[1]});
  TStarExtension source = build(g, omega1);
  const ScalarCochain3 f2{hat(g, omega1).f - delta_scalar2(g, phi).f};
  TStarExtension target = build(g, unhat(g, f2));
  MatrixQ map = s_phi_matrix(g, phi);
  if (const auto f = map_failure(source.total, target.total, map, true))
    throw VerificationError(std::string("S_phi fails verification: ") + to_string(f->kind));
  return {std::move(source), std::move(target), std::move(map)};
}

}  // namespace tstar
