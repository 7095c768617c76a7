#include "tstar/subspace.hpp"

#include "tstar/linalg.hpp"

namespace tstar {

namespace {

MatrixQ canonical(const MatrixQ& columns, int n) {
  if (columns.cols() == 0) return MatrixQ(n, 0);
  return linalg::canonical_column_basis(columns);
}

MatrixQ hcat(const MatrixQ& a, const MatrixQ& b) {
  MatrixQ out(a.rows(), a.cols() + b.cols());
  out << a, b;
  return out;
}

}  // namespace

Subspace Subspace::span(const GradedBasis& ambient, const MatrixQ& vectors) {
  const int n = ambient.dim();
  if (vectors.rows() != n && vectors.cols() != 0)
    throw std::invalid_argument("Subspace::span: vectors have the wrong length");
  MatrixQ even(n, vectors.cols());
  MatrixQ odd(n, vectors.cols());
  for (Eigen::Index j = 0; j < vectors.cols(); ++j) {
    even.col(j) = parity_component(ambient, vectors.col(j), Parity::Even);
    odd.col(j) = parity_component(ambient, vectors.col(j), Parity::Odd);
  }
  Subspace s;
  s.parities_ = ambient.parities();
  s.even_ = canonical(even, n);
  s.odd_ = canonical(odd, n);
  if (vectors.cols() > 0 && s.dim() != linalg::rank(vectors))
    throw PreconditionError("spanning set does not span a graded subspace");
  return s;
}

Subspace Subspace::zero(const GradedBasis& ambient) { return span(ambient, MatrixQ(ambient.dim(), 0)); }

Subspace Subspace::whole(const GradedBasis& ambient) {
  return span(ambient, MatrixQ::Identity(ambient.dim(), ambient.dim()));
}

MatrixQ Subspace::basis() const { return hcat(even_, odd_); }

bool Subspace::contains(const VectorQ& v) const {
  for (int p = 0; p < 2; ++p) {
    const auto parity = static_cast<Parity>(p);
    VectorQ comp = VectorQ::Zero(v.size());
    for (int i = 0; i < v.size(); ++i)
      if (parities_[static_cast<std::size_t>(i)] == parity) comp(i) = v(i);
    if (linalg::is_zero_matrix(comp)) continue;
    if (!linalg::spans_contain(basis_of(parity), comp)) return false;
  }
  return true;
}

bool Subspace::contains(const Subspace& other) const {
  return linalg::spans_contain(even_, other.even_) && linalg::spans_contain(odd_, other.odd_);
}

Subspace operator+(const Subspace& a, const Subspace& b) {
  Subspace s;
  s.parities_ = a.parities_;
  const int n = a.ambient_dim();
  s.even_ = canonical(hcat(a.even_, b.even_), n);
  s.odd_ = canonical(hcat(a.odd_, b.odd_), n);
  return s;
}

MatrixQ Subspace::coordinate_complement() const {
  // Rows of a canonical basis are in rref, so its pivot coordinates are the
  // leading nonzeros; the remaining coordinate vectors are a complement.
  std::vector<bool> pivot(parities_.size(), false);
  for (const MatrixQ* m : {&even_, &odd_}) {
    const auto e = linalg::rref(MatrixQ(m->transpose()));
    for (auto p : e.pivots) pivot[static_cast<std::size_t>(p)] = true;
  }
  const int n = ambient_dim();
  MatrixQ out(n, n - dim());
  Eigen::Index k = 0;
  for (int i = 0; i < n; ++i)
    if (!pivot[static_cast<std::size_t>(i)]) out.col(k++) = unit_vector(n, i);
  return out;
}

}  // namespace tstar
