#ifndef TSTAR_LINALG_HPP
#define TSTAR_LINALG_HPP

#include <optional>
#include <stdexcept>
#include <vector>

#include <Eigen/Dense>

#include "tstar/rational.hpp"

/// Exact dense linear algebra over a field scalar.
///
/// Everything here is plain Gauss-Jordan elimination with "first nonzero"
/// pivoting, which is what an exact scalar wants: there is no rounding, so
/// magnitude-based pivoting would only cost time. Vectors are columns; a
/// "basis" is a matrix whose columns are the basis vectors.
namespace tstar::linalg {

template <typename Scalar>
using Mat = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
template <typename Scalar>
using Vec = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

template <typename Scalar>
struct RowEchelon {
  Mat<Scalar> reduced;               // reduced row echelon form
  std::vector<Eigen::Index> pivots;  // pivot column of each nonzero row
};

template <typename Derived>
RowEchelon<typename Derived::Scalar> rref(const Eigen::MatrixBase<Derived>& input) {
  using Scalar = typename Derived::Scalar;
  RowEchelon<Scalar> out;
  Mat<Scalar>& m = out.reduced;
  m = input;
  const Eigen::Index rows = m.rows();
  const Eigen::Index cols = m.cols();
  Eigen::Index r = 0;
  for (Eigen::Index c = 0; c < cols && r < rows; ++c) {
    Eigen::Index p = r;
    while (p < rows && m(p, c) == Scalar(0)) ++p;
    if (p == rows) continue;
    if (p != r) m.row(p).swap(m.row(r));
    if (m(r, c) != Scalar(1)) {
      const Scalar inv = Scalar(1) / m(r, c);
      for (Eigen::Index j = c; j < cols; ++j)
        if (m(r, j) != Scalar(0)) m(r, j) *= inv;
    }
    for (Eigen::Index i = 0; i < rows; ++i) {
      if (i == r || m(i, c) == Scalar(0)) continue;
      const Scalar f = m(i, c);
      for (Eigen::Index j = c; j < cols; ++j)
        if (m(r, j) != Scalar(0)) m(i, j) -= f * m(r, j);
    }
    out.pivots.push_back(c);
    ++r;
  }
  return out;
}

template <typename Derived>
Eigen::Index rank(const Eigen::MatrixBase<Derived>& a) {
  return static_cast<Eigen::Index>(rref(a).pivots.size());
}

/// Null-space basis as columns; there are cols(a) - rank(a) of them.
template <typename Derived>
Mat<typename Derived::Scalar> kernel(const Eigen::MatrixBase<Derived>& a) {
  using Scalar = typename Derived::Scalar;
  const auto e = rref(a);
  const Eigen::Index cols = a.cols();
  std::vector<bool> is_pivot(static_cast<std::size_t>(cols), false);
  for (auto p : e.pivots) is_pivot[static_cast<std::size_t>(p)] = true;

  Mat<Scalar> basis = Mat<Scalar>::Zero(cols, cols - static_cast<Eigen::Index>(e.pivots.size()));
  Eigen::Index k = 0;
  for (Eigen::Index f = 0; f < cols; ++f) {
    if (is_pivot[static_cast<std::size_t>(f)]) continue;
    basis(f, k) = Scalar(1);
    for (std::size_t r = 0; r < e.pivots.size(); ++r)
      basis(e.pivots[r], k) = -e.reduced(static_cast<Eigen::Index>(r), f);
    ++k;
  }
  return basis;
}

template <typename Scalar>
struct SolutionSet {
  std::optional<Vec<Scalar>> particular;  // present iff the system is consistent
  Mat<Scalar> kernel_basis;               // columns span ker(A)
};

template <typename DerivedA, typename DerivedB>
SolutionSet<typename DerivedA::Scalar> solve(const Eigen::MatrixBase<DerivedA>& a,
                                             const Eigen::MatrixBase<DerivedB>& b) {
  using Scalar = typename DerivedA::Scalar;
  if (a.rows() != b.rows() || b.cols() != 1)
    throw std::invalid_argument("solve: right-hand side length does not match the system");
  Mat<Scalar> aug(a.rows(), a.cols() + 1);
  aug << a, b;
  const auto e = rref(aug);

  SolutionSet<Scalar> out;
  out.kernel_basis = kernel(a);
  if (!e.pivots.empty() && e.pivots.back() == a.cols()) return out;  // 0 = 1 row
  Vec<Scalar> x = Vec<Scalar>::Zero(a.cols());
  for (std::size_t r = 0; r < e.pivots.size(); ++r)
    x(e.pivots[r]) = e.reduced(static_cast<Eigen::Index>(r), a.cols());
  out.particular = std::move(x);
  return out;
}

/// Indices of a maximal independent subset of the columns, chosen greedily
/// from the left.
template <typename Derived>
std::vector<Eigen::Index> independent_columns(const Eigen::MatrixBase<Derived>& a) {
  return rref(a).pivots;
}

template <typename Derived>
Mat<typename Derived::Scalar> column_basis(const Eigen::MatrixBase<Derived>& a) {
  const auto idx = independent_columns(a);
  Mat<typename Derived::Scalar> out(a.rows(), static_cast<Eigen::Index>(idx.size()));
  for (std::size_t k = 0; k < idx.size(); ++k) out.col(static_cast<Eigen::Index>(k)) = a.col(idx[k]);
  return out;
}

/// Canonical basis of the column space: the transposed nonzero rows of
/// rref(a^T). Two matrices span the same space iff these agree.
template <typename Derived>
Mat<typename Derived::Scalar> canonical_column_basis(const Eigen::MatrixBase<Derived>& a) {
  const auto e = rref(a.transpose());
  const auto r = static_cast<Eigen::Index>(e.pivots.size());
  return e.reduced.topRows(r).transpose();
}

template <typename Derived>
Mat<typename Derived::Scalar> inverse(const Eigen::MatrixBase<Derived>& a) {
  using Scalar = typename Derived::Scalar;
  if (a.rows() != a.cols()) throw std::invalid_argument("inverse: matrix is not square");
  const Eigen::Index n = a.rows();
  Mat<Scalar> aug(n, 2 * n);
  aug << a, Mat<Scalar>::Identity(n, n);
  const auto e = rref(aug);
  if (static_cast<Eigen::Index>(e.pivots.size()) < n || (n > 0 && e.pivots[n - 1] >= n))
    throw std::domain_error("inverse: matrix is singular");
  return e.reduced.rightCols(n);
}

/// True iff every column of `vectors` lies in the column span of `basis`.
template <typename DerivedA, typename DerivedB>
bool spans_contain(const Eigen::MatrixBase<DerivedA>& basis,
                   const Eigen::MatrixBase<DerivedB>& vectors) {
  if (vectors.cols() == 0) return true;
  using Scalar = typename DerivedA::Scalar;
  Mat<Scalar> joined(basis.rows(), basis.cols() + vectors.cols());
  joined << basis, vectors;
  return rank(joined) == rank(basis);
}

template <typename Derived>
bool is_zero_matrix(const Eigen::MatrixBase<Derived>& a) {
  using Scalar = typename Derived::Scalar;
  for (Eigen::Index j = 0; j < a.cols(); ++j)
    for (Eigen::Index i = 0; i < a.rows(); ++i)
      if (a(i, j) != Scalar(0)) return false;
  return true;
}

/// Coefficients c_0..c_n of det(t I - a), lowest degree first
/// (Faddeev-LeVerrier; needs characteristic zero).
template <typename Derived>
std::vector<typename Derived::Scalar> characteristic_polynomial(const Eigen::MatrixBase<Derived>& a) {
  using Scalar = typename Derived::Scalar;
  if (a.rows() != a.cols()) throw std::invalid_argument("characteristic_polynomial: matrix is not square");
  const Eigen::Index n = a.rows();
  std::vector<Scalar> c(static_cast<std::size_t>(n) + 1, Scalar(0));
  c[static_cast<std::size_t>(n)] = Scalar(1);
  Mat<Scalar> m = Mat<Scalar>::Zero(n, n);
  for (Eigen::Index k = 1; k <= n; ++k) {
    m = a * m;
    for (Eigen::Index i = 0; i < n; ++i) m(i, i) += c[static_cast<std::size_t>(n - k + 1)];
    const Mat<Scalar> am = a * m;
    c[static_cast<std::size_t>(n - k)] = -am.trace() / Scalar(static_cast<long>(k));
  }
  return c;
}

}  // namespace tstar::linalg

#endif  // TSTAR_LINALG_HPP
