#include "tstar/superlie.hpp"

#include "tstar/linalg.hpp"

namespace tstar {

namespace {

void add_bracket_of_basis(const LieSuperalgebra& g, int i, int j, const Rational& s, VectorQ& out) {
  for (const auto& [k, v] : g.terms(i, j)) out(k) += s * v;
}

// [e_i, v] accumulated with weight s.
void add_ad_basis(const LieSuperalgebra& g, int i, const VectorQ& v, const Rational& s, VectorQ& out) {
  for (int j = 0; j < g.dim(); ++j) {
    if (is_zero(v(j))) continue;
    add_bracket_of_basis(g, i, j, s * v(j), out);
  }
}

MatrixQ columns(const std::vector<VectorQ>& vs, int n) {
  MatrixQ m(n, static_cast<Eigen::Index>(vs.size()));
  for (std::size_t k = 0; k < vs.size(); ++k) m.col(static_cast<Eigen::Index>(k)) = vs[k];
  return m;
}

}  // namespace

const char* to_string(AxiomKind k) {
  switch (k) {
    case AxiomKind::Grading: return "grading";
    case AxiomKind::SuperSkew: return "super-skew-symmetry";
    case AxiomKind::Jacobi: return "super-Jacobi";
  }
  return "?";
}

bool AxiomReport::ok(AxiomKind k) const { return first(k) == nullptr; }

const AxiomViolation* AxiomReport::first(AxiomKind k) const {
  for (const auto& v : violations)
    if (v.kind == k) return &v;
  return nullptr;
}

LieSuperalgebra::LieSuperalgebra(GradedBasis basis, Tensor3Q constants)
    : basis_(std::move(basis)), c_(std::move(constants)) {
  const int n = basis_.dim();
  if (c_.size() != n) throw std::invalid_argument("LieSuperalgebra: tensor size does not match the basis");
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) {
        const Rational& v = c_(i, j, k);
        if (is_zero(v) && is_zero(c_(j, i, k))) continue;
        if (!is_zero(v) && parity(i) + parity(j) != parity(k))
          throw PreconditionError("structure constants violate the grading", {i, j, k});
        if (v != -koszul(parity(i), parity(j)) * c_(j, i, k))
          throw PreconditionError("structure constants violate super-skew-symmetry", {i, j, k});
      }
  terms_.resize(static_cast<std::size_t>(n) * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        if (!is_zero(c_(i, j, k))) terms_[static_cast<std::size_t>(i) * n + j].emplace_back(k, c_(i, j, k));
}

LieSuperalgebra LieSuperalgebra::from_upper(GradedBasis basis, const Tensor3Q& upper) {
  const int n = basis.dim();
  Tensor3Q c(n);
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j)
      for (int k = 0; k < n; ++k) {
        c(i, j, k) = upper(i, j, k);
        if (i != j) c(j, i, k) = -koszul(basis.parity(i), basis.parity(j)) * upper(i, j, k);
      }
  return LieSuperalgebra(std::move(basis), std::move(c));
}

LieSuperalgebra LieSuperalgebra::abelian(GradedBasis basis) {
  const int n = basis.dim();
  return LieSuperalgebra(std::move(basis), Tensor3Q(n));
}

VectorQ LieSuperalgebra::bracket_basis(int i, int j) const {
  VectorQ out = VectorQ::Zero(dim());
  for (const auto& [k, v] : terms(i, j)) out(k) = v;
  return out;
}

MatrixQ LieSuperalgebra::ad(int i) const {
  MatrixQ m = MatrixQ::Zero(dim(), dim());
  for (int j = 0; j < dim(); ++j)
    for (const auto& [k, v] : terms(i, j)) m(k, j) = v;
  return m;
}

MatrixQ LieSuperalgebra::ad(const VectorQ& x) const {
  MatrixQ m = MatrixQ::Zero(dim(), dim());
  for (int i = 0; i < dim(); ++i) {
    if (is_zero(x(i))) continue;
    for (int j = 0; j < dim(); ++j)
      for (const auto& [k, v] : terms(i, j)) m(k, j) += x(i) * v;
  }
  return m;
}

VectorQ bracket(const LieSuperalgebra& g, const VectorQ& x, const VectorQ& y) {
  if (x.size() != g.dim() || y.size() != g.dim())
    throw std::invalid_argument("bracket: vector length does not match the algebra");
  VectorQ out = VectorQ::Zero(g.dim());
  for (int i = 0; i < g.dim(); ++i) {
    if (is_zero(x(i))) continue;
    for (int j = 0; j < g.dim(); ++j) {
      if (is_zero(y(j))) continue;
      add_bracket_of_basis(g, i, j, x(i) * y(j), out);
    }
  }
  return out;
}

AxiomReport check_axioms(const GradedBasis& basis, const Tensor3Q& c) {
  const int n = basis.dim();
  AxiomReport report;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) {
        if (!is_zero(c(i, j, k)) && basis.parity(i) + basis.parity(j) != basis.parity(k))
          report.violations.push_back({AxiomKind::Grading, {i, j, k}});
        if (c(i, j, k) != -koszul(basis.parity(i), basis.parity(j)) * c(j, i, k))
          report.violations.push_back({AxiomKind::SuperSkew, {i, j, k}});
      }
  if (!report.ok()) return report;  // Jacobi is only meaningful on a well-formed bracket

  const LieSuperalgebra g(basis, c);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int z = 0; z < n; ++z) {
        const Parity px = basis.parity(x), py = basis.parity(y), pz = basis.parity(z);
        VectorQ acc = VectorQ::Zero(n);
        add_ad_basis(g, x, g.bracket_basis(y, z), koszul(px, pz), acc);
        add_ad_basis(g, y, g.bracket_basis(z, x), koszul(px, py), acc);
        add_ad_basis(g, z, g.bracket_basis(x, y), koszul(py, pz), acc);
        if (!linalg::is_zero_matrix(acc)) report.violations.push_back({AxiomKind::Jacobi, {x, y, z}});
      }
  return report;
}

AxiomReport check_axioms(const LieSuperalgebra& g) { return check_axioms(g.basis(), g.constants()); }

Subspace center(const LieSuperalgebra& g) {
  const int n = g.dim();
  std::vector<VectorQ> found;
  for (Parity p : {Parity::Even, Parity::Odd}) {
    const auto idx = g.basis().indices(p);
    if (idx.empty()) continue;
    // Row (j, k), column t: coefficient of e_k in [e_idx[t], e_j].
    MatrixQ sys = MatrixQ::Zero(static_cast<Eigen::Index>(n) * n, static_cast<Eigen::Index>(idx.size()));
    for (std::size_t t = 0; t < idx.size(); ++t)
      for (int j = 0; j < n; ++j)
        for (const auto& [k, v] : g.terms(idx[t], j)) sys(j * n + k, static_cast<Eigen::Index>(t)) = v;
    const MatrixQ ker = linalg::kernel(sys);
    for (Eigen::Index col = 0; col < ker.cols(); ++col) {
      VectorQ v = VectorQ::Zero(n);
      for (std::size_t t = 0; t < idx.size(); ++t) v(idx[t]) = ker(static_cast<Eigen::Index>(t), col);
      found.push_back(v);
    }
  }
  return Subspace::span(g.basis(), columns(found, n));
}

Subspace bracket_span(const LieSuperalgebra& g, const Subspace& s, const Subspace& t) {
  const MatrixQ a = s.basis();
  const MatrixQ b = t.basis();
  std::vector<VectorQ> out;
  for (Eigen::Index i = 0; i < a.cols(); ++i)
    for (Eigen::Index j = 0; j < b.cols(); ++j) {
      VectorQ v = bracket(g, a.col(i), b.col(j));
      if (!linalg::is_zero_matrix(v)) out.push_back(std::move(v));
    }
  return Subspace::span(g.basis(), columns(out, g.dim()));
}

Subspace derived_subalgebra(const LieSuperalgebra& g) {
  std::vector<VectorQ> out;
  for (int i = 0; i < g.dim(); ++i)
    for (int j = i; j < g.dim(); ++j)
      if (!g.terms(i, j).empty()) out.push_back(g.bracket_basis(i, j));
  return Subspace::span(g.basis(), columns(out, g.dim()));
}

std::vector<Subspace> derived_series(const LieSuperalgebra& g) {
  std::vector<Subspace> series{Subspace::whole(g.basis())};
  while (true) {
    Subspace next = bracket_span(g, series.back(), series.back());
    const bool stable = next.dim() == series.back().dim();
    series.push_back(std::move(next));
    if (stable) return series;
  }
}

std::vector<Subspace> lower_central_series(const LieSuperalgebra& g) {
  const Subspace whole = Subspace::whole(g.basis());
  std::vector<Subspace> series{whole};
  while (true) {
    Subspace next = bracket_span(g, whole, series.back());
    const bool stable = next.dim() == series.back().dim();
    series.push_back(std::move(next));
    if (stable) return series;
  }
}

bool is_solvable(const LieSuperalgebra& g) { return derived_series(g).back().is_zero(); }
bool is_nilpotent(const LieSuperalgebra& g) { return lower_central_series(g).back().is_zero(); }

bool class_condition(const LieSuperalgebra& g) {
  std::vector<VectorQ> odd, even;
  for (int i = 0; i < g.dim(); ++i)
    for (int j = i; j < g.dim(); ++j) {
      if (g.parity(i) != g.parity(j) || g.terms(i, j).empty()) continue;
      (g.parity(i) == Parity::Odd ? odd : even).push_back(g.bracket_basis(i, j));
    }
  return linalg::spans_contain(columns(even, g.dim()), columns(odd, g.dim()));
}

bool is_ideal(const LieSuperalgebra& g, const Subspace& s) {
  return s.contains(bracket_span(g, Subspace::whole(g.basis()), s));
}

bool is_abelian(const LieSuperalgebra& g, const Subspace& s) { return bracket_span(g, s, s).is_zero(); }

DualVector coadjoint(const LieSuperalgebra& g, const VectorQ& x, const DualVector& f) {
  const auto px = homogeneous_parity(g.basis(), x);
  if (!px) throw PreconditionError("coadjoint: X is not homogeneous");
  for (int k = 0; k < g.dim(); ++k)
    if (!is_zero(f.coeffs(k)) && g.parity(k) != f.parity)
      throw PreconditionError("coadjoint: F is not homogeneous of its stated parity", {k});
  DualVector out;
  out.parity = *px + f.parity;
  out.coeffs = VectorQ::Zero(g.dim());
  const int s = -koszul(*px, f.parity);
  for (int j = 0; j < g.dim(); ++j) {
    const VectorQ xy = bracket(g, x, unit_vector(g.dim(), j));
    out.coeffs(j) = s * f.coeffs.dot(xy);
  }
  return out;
}

MatrixQ coadjoint_matrix(const LieSuperalgebra& g, int i) {
  MatrixQ m = MatrixQ::Zero(g.dim(), g.dim());
  for (int j = 0; j < g.dim(); ++j)
    for (const auto& [k, v] : g.terms(i, j)) m(j, k) = -koszul(g.parity(i), g.parity(k)) * v;
  return m;
}

Quotient quotient(const LieSuperalgebra& g, const Subspace& ideal) {
  const MatrixQ section = ideal.coordinate_complement();
  std::vector<std::string> names;
  for (Eigen::Index a = 0; a < section.cols(); ++a)
    for (int i = 0; i < g.dim(); ++i)
      if (!is_zero(section(i, a))) names.push_back(g.basis().name(i));
  return quotient(g, ideal, section, std::move(names));
}

Quotient quotient(const LieSuperalgebra& g, const Subspace& ideal, const MatrixQ& section,
                  std::vector<std::string> names) {
  if (!is_ideal(g, ideal)) throw PreconditionError("quotient: subspace is not an ideal");
  const int q = static_cast<int>(section.cols());
  if (q + ideal.dim() != g.dim()) throw PreconditionError("quotient: section is not a complement of the ideal");
  std::vector<Parity> parities;
  for (int a = 0; a < q; ++a) {
    const auto p = homogeneous_parity(g.basis(), section.col(a));
    if (!p) throw PreconditionError("quotient: section vector is not homogeneous", {a});
    parities.push_back(*p);
  }
  MatrixQ frame(g.dim(), g.dim());
  frame << section, ideal.basis();
  const MatrixQ coords = linalg::inverse(frame);  // throws if not a complement

  Quotient out;
  out.section = section;
  out.projection = coords.topRows(q);
  Tensor3Q c(q);
  for (int a = 0; a < q; ++a)
    for (int b = 0; b < q; ++b) {
      const VectorQ img = out.projection * bracket(g, section.col(a), section.col(b));
      for (int k = 0; k < q; ++k) c(a, b, k) = img(k);
    }
  out.algebra = LieSuperalgebra(GradedBasis(std::move(names), parities), std::move(c));
  return out;
}

LieSuperalgebra direct_sum(const LieSuperalgebra& g1, const LieSuperalgebra& g2) {
  const int n1 = g1.dim();
  const int n = n1 + g2.dim();
  Tensor3Q c(n);
  for (int i = 0; i < n1; ++i)
    for (int j = 0; j < n1; ++j)
      for (const auto& [k, v] : g1.terms(i, j)) c(i, j, k) = v;
  for (int i = 0; i < g2.dim(); ++i)
    for (int j = 0; j < g2.dim(); ++j)
      for (const auto& [k, v] : g2.terms(i, j)) c(n1 + i, n1 + j, n1 + k) = v;
  return LieSuperalgebra(concat(g1.basis(), g2.basis()), std::move(c));
}

}  // namespace tstar
