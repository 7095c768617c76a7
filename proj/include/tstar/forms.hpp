#ifndef TSTAR_FORMS_HPP
#define TSTAR_FORMS_HPP

#include <array>
#include <optional>

#include "tstar/superlie.hpp"

namespace tstar {

/// Even supersymmetric bilinear form B(x, y) = x^T G y on a graded basis:
/// G(i, j) = 0 across parities and G(i, j) = (-1)^{p_i p_j} G(j, i).
class EvenForm {
 public:
  EvenForm() = default;
  /// Throws PreconditionError (with the offending index pair) if `gram`
  /// is not even and supersymmetric.
  EvenForm(GradedBasis basis, MatrixQ gram);

  static EvenForm zero(GradedBasis basis);

  const GradedBasis& basis() const { return basis_; }
  const MatrixQ& gram() const { return gram_; }
  int dim() const { return basis_.dim(); }

  Rational operator()(const VectorQ& x, const VectorQ& y) const { return x.dot(gram_ * y); }

  friend bool operator==(const EvenForm&, const EvenForm&) = default;

 private:
  GradedBasis basis_;
  MatrixQ gram_;
};

/// Orthogonal sum on the concatenated basis.
EvenForm orthogonal_sum(const EvenForm& a, const EvenForm& b);

bool is_nondegenerate(const EvenForm& b);

/// First basis triple (x, y, z) with B([x,y],z) != B(x,[y,z]).
std::optional<std::array<int, 3>> invariance_witness(const LieSuperalgebra& g, const EvenForm& b);
bool is_invariant(const LieSuperalgebra& g, const EvenForm& b);

/// Lie superalgebra with an invariant scalar product.
class QuadraticLieSuperalgebra {
 public:
  QuadraticLieSuperalgebra() = default;
  /// Throws PreconditionError unless the form lives on the algebra's basis,
  /// is nondegenerate and is invariant.
  QuadraticLieSuperalgebra(LieSuperalgebra algebra, EvenForm form);

  const LieSuperalgebra& algebra() const { return algebra_; }
  const EvenForm& form() const { return form_; }
  const GradedBasis& basis() const { return algebra_.basis(); }
  int dim() const { return algebra_.dim(); }

 private:
  LieSuperalgebra algebra_;
  EvenForm form_;
};

QuadraticLieSuperalgebra orthogonal_sum(const QuadraticLieSuperalgebra& a,
                                        const QuadraticLieSuperalgebra& b);

/// W^perp = {v : B(v, w) = 0 for all w in W}.
Subspace orthogonal(const EvenForm& b, const Subspace& w);

bool is_totally_isotropic(const EvenForm& b, const Subspace& w);

/// Totally isotropic graded complement of a graded subspace I with I = I^perp.
///
/// Starting from the coordinate complement W of I, each w is corrected by
/// h(w) in I with B(h(w), w') = B(w, w') / 2 for all w' in W; the result is
/// spanned by the w - h(w). Needs characteristic != 2.
MatrixQ isotropic_complement(const EvenForm& b, const Subspace& ideal);

/// First homogeneous basis triple (x, y, z) with
/// B([x,y],z) + (-1)^{xy} B(y,[x,z]) != 0, i.e. ad_x outside osp(g, B).
std::optional<std::array<int, 3>> osp_witness(const LieSuperalgebra& g, const EvenForm& b);

}  // namespace tstar

#endif  // TSTAR_FORMS_HPP
