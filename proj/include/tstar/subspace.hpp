#ifndef TSTAR_SUBSPACE_HPP
#define TSTAR_SUBSPACE_HPP

#include <vector>

#include "tstar/graded.hpp"

namespace tstar {

/// Graded subspace of a graded coordinate space, stored as a homogeneous
/// basis: independent even vectors followed by independent odd vectors.
class Subspace {
 public:
  Subspace() = default;

  /// Span of the columns of `vectors`. Inhomogeneous columns are split into
  /// their parity components; if that enlarges the span the input does not
  /// span a graded subspace and PreconditionError is thrown.
  static Subspace span(const GradedBasis& ambient, const MatrixQ& vectors);
  static Subspace zero(const GradedBasis& ambient);
  static Subspace whole(const GradedBasis& ambient);

  int ambient_dim() const { return static_cast<int>(parities_.size()); }
  int dim() const { return static_cast<int>(even_.cols() + odd_.cols()); }
  int dim(Parity p) const { return static_cast<int>(p == Parity::Even ? even_.cols() : odd_.cols()); }
  bool is_zero() const { return dim() == 0; }

  const MatrixQ& even_basis() const { return even_; }
  const MatrixQ& odd_basis() const { return odd_; }
  const MatrixQ& basis_of(Parity p) const { return p == Parity::Even ? even_ : odd_; }
  /// Even columns then odd columns.
  MatrixQ basis() const;
  Parity basis_parity(int column) const {
    return column < even_.cols() ? Parity::Even : Parity::Odd;
  }

  bool contains(const VectorQ& v) const;
  bool contains(const Subspace& other) const;

  /// Double inclusion.
  friend bool operator==(const Subspace& a, const Subspace& b) {
    return a.dim() == b.dim() && a.contains(b);
  }

  /// Sum of two subspaces of the same ambient space.
  friend Subspace operator+(const Subspace& a, const Subspace& b);

  /// Graded complement spanned by coordinate unit vectors.
  MatrixQ coordinate_complement() const;

 private:
  std::vector<Parity> parities_;
  MatrixQ even_;
  MatrixQ odd_;
};

}  // namespace tstar

#endif  // TSTAR_SUBSPACE_HPP
