#include "tstar/forms.hpp"

#include <cassert>

#include "tstar/linalg.hpp"

namespace tstar {

EvenForm::EvenForm(GradedBasis basis, MatrixQ gram) : basis_(std::move(basis)), gram_(std::move(gram)) {
  const int n = basis_.dim();
  if (gram_.rows() != n || gram_.cols() != n)
    throw std::invalid_argument("EvenForm: Gram matrix does not match the basis");
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (!is_zero(gram_(i, j)) && basis_.parity(i) != basis_.parity(j))
        throw PreconditionError("form is not even", {i, j});
      if (gram_(i, j) != koszul(basis_.parity(i), basis_.parity(j)) * gram_(j, i))
        throw PreconditionError("form is not supersymmetric", {i, j});
    }
}

EvenForm EvenForm::zero(GradedBasis basis) {
  const int n = basis.dim();
  return EvenForm(std::move(basis), MatrixQ::Zero(n, n));
}

EvenForm orthogonal_sum(const EvenForm& a, const EvenForm& b) {
  MatrixQ g = MatrixQ::Zero(a.dim() + b.dim(), a.dim() + b.dim());
  g.topLeftCorner(a.dim(), a.dim()) = a.gram();
  g.bottomRightCorner(b.dim(), b.dim()) = b.gram();
  return EvenForm(concat(a.basis(), b.basis()), std::move(g));
}

bool is_nondegenerate(const EvenForm& b) { return linalg::rank(b.gram()) == b.dim(); }

std::optional<std::array<int, 3>> invariance_witness(const LieSuperalgebra& g, const EvenForm& b) {
  const int n = g.dim();
  const MatrixQ& gr = b.gram();
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int z = 0; z < n; ++z) {
        Rational lhs = 0, rhs = 0;
        for (const auto& [k, v] : g.terms(x, y)) lhs += v * gr(k, z);
        for (const auto& [k, v] : g.terms(y, z)) rhs += v * gr(x, k);
        if (lhs != rhs) return std::array{x, y, z};
      }
  return std::nullopt;
}

bool is_invariant(const LieSuperalgebra& g, const EvenForm& b) { return !invariance_witness(g, b); }

std::optional<std::array<int, 3>> osp_witness(const LieSuperalgebra& g, const EvenForm& b) {
  const int n = g.dim();
  const MatrixQ& gr = b.gram();
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int z = 0; z < n; ++z) {
        Rational s = 0;
        for (const auto& [k, v] : g.terms(x, y)) s += v * gr(k, z);
        Rational t = 0;
        for (const auto& [k, v] : g.terms(x, z)) t += v * gr(y, k);
        if (s + koszul(g.parity(x), g.parity(y)) * t != 0) return std::array{x, y, z};
      }
  return std::nullopt;
}

QuadraticLieSuperalgebra::QuadraticLieSuperalgebra(LieSuperalgebra algebra, EvenForm form)
    : algebra_(std::move(algebra)), form_(std::move(form)) {
  if (!(form_.basis() == algebra_.basis()))
    throw std::invalid_argument("QuadraticLieSuperalgebra: form and algebra use different bases");
  if (!is_nondegenerate(form_)) throw PreconditionError("form is degenerate");
  if (const auto w = invariance_witness(algebra_, form_))
    throw PreconditionError("form is not invariant", {(*w)[0], (*w)[1], (*w)[2]});
}

QuadraticLieSuperalgebra orthogonal_sum(const QuadraticLieSuperalgebra& a,
                                        const QuadraticLieSuperalgebra& b) {
  return {direct_sum(a.algebra(), b.algebra()), orthogonal_sum(a.form(), b.form())};
}

Subspace orthogonal(const EvenForm& b, const Subspace& w) {
  const int n = b.dim();
  std::vector<VectorQ> found;
  for (Parity p : {Parity::Even, Parity::Odd}) {
    const auto idx = b.basis().indices(p);
    if (idx.empty()) continue;
    const MatrixQ& wb = w.basis_of(p);  // B is even, so only same-parity vectors constrain
    MatrixQ sys(wb.cols(), static_cast<Eigen::Index>(idx.size()));
    const MatrixQ gw = b.gram() * wb;
    for (Eigen::Index r = 0; r < wb.cols(); ++r)
      for (std::size_t t = 0; t < idx.size(); ++t) sys(r, static_cast<Eigen::Index>(t)) = gw(idx[t], r);
    const MatrixQ ker = linalg::kernel(sys);
    for (Eigen::Index col = 0; col < ker.cols(); ++col) {
      VectorQ v = VectorQ::Zero(n);
      for (std::size_t t = 0; t < idx.size(); ++t) v(idx[t]) = ker(static_cast<Eigen::Index>(t), col);
      found.push_back(std::move(v));
    }
  }
  MatrixQ m(n, static_cast<Eigen::Index>(found.size()));
  for (std::size_t k = 0; k < found.size(); ++k) m.col(static_cast<Eigen::Index>(k)) = found[k];
  return Subspace::span(b.basis(), m);
}

bool is_totally_isotropic(const EvenForm& b, const Subspace& w) {
  const MatrixQ m = w.basis();
  return linalg::is_zero_matrix(MatrixQ(m.transpose() * b.gram() * m));
}

MatrixQ isotropic_complement(const EvenForm& b, const Subspace& ideal) {
  assert(Rational(2) != 0 && "the Witt correction divides by 2");
  if (!is_nondegenerate(b)) throw PreconditionError("isotropic_complement: form is degenerate");
  if (2 * ideal.dim() != b.dim())
    throw PreconditionError("isotropic_complement: subspace is not half-dimensional");
  if (!is_totally_isotropic(b, ideal))
    throw PreconditionError("isotropic_complement: subspace is not totally isotropic");

  const MatrixQ w = ideal.coordinate_complement();
  MatrixQ out = w;
  for (Eigen::Index a = 0; a < w.cols(); ++a) {
    const Parity p = *homogeneous_parity(b.basis(), w.col(a));
    const MatrixQ& ib = ideal.basis_of(p);
    std::vector<Eigen::Index> same;
    for (Eigen::Index c = 0; c < w.cols(); ++c)
      if (*homogeneous_parity(b.basis(), w.col(c)) == p) same.push_back(c);
    // Row r: B(u_t, w_r) for the ideal basis u_t; rhs: B(w_a, w_r) / 2.
    MatrixQ sys(static_cast<Eigen::Index>(same.size()), ib.cols());
    VectorQ rhs(static_cast<Eigen::Index>(same.size()));
    for (std::size_t r = 0; r < same.size(); ++r) {
      const VectorQ wr = w.col(same[r]);
      for (Eigen::Index t = 0; t < ib.cols(); ++t) sys(static_cast<Eigen::Index>(r), t) = b(ib.col(t), wr);
      rhs(static_cast<Eigen::Index>(r)) = half(b(w.col(a), wr));
    }
    const auto sol = linalg::solve(sys, rhs);
    if (!sol.particular || sol.kernel_basis.cols() != 0)
      throw PreconditionError("isotropic_complement: subspace is not its own orthogonal");
    out.col(a) = w.col(a) - ib * *sol.particular;
  }
  return out;
}

}  // namespace tstar
