#ifndef TSTAR_SUPERLIE_HPP
#define TSTAR_SUPERLIE_HPP

#include <array>
#include <string>
#include <utility>
#include <vector>

#include "tstar/graded.hpp"
#include "tstar/subspace.hpp"
#include "tstar/tensor.hpp"

namespace tstar {

/// Finite-dimensional Lie superalgebra given by structure constants
/// [e_i, e_j] = sum_k c(i, j, k) e_k over a graded basis.
///
/// Constants are stored for every ordered pair. Construction rejects a
/// tensor that breaks the grading or super-skew-symmetry (the report of
/// check_axioms is attached to the exception); the Jacobi identity is not
/// checked on construction, see check_axioms.
class LieSuperalgebra {
 public:
  using Term = std::pair<int, Rational>;

  LieSuperalgebra() = default;
  LieSuperalgebra(GradedBasis basis, Tensor3Q constants);

  /// Builds from the entries with i <= j, completing
  /// c(j, i, k) = -(-1)^{p_i p_j} c(i, j, k). Entries below the diagonal
  /// of `upper` are ignored.
  static LieSuperalgebra from_upper(GradedBasis basis, const Tensor3Q& upper);

  static LieSuperalgebra abelian(GradedBasis basis);

  int dim() const { return basis_.dim(); }
  const GradedBasis& basis() const { return basis_; }
  Parity parity(int i) const { return basis_.parity(i); }
  const Tensor3Q& constants() const { return c_; }
  const Rational& c(int i, int j, int k) const { return c_(i, j, k); }

  /// Nonzero entries of [e_i, e_j].
  const std::vector<Term>& terms(int i, int j) const {
    return terms_[static_cast<std::size_t>(i) * dim() + j];
  }
  VectorQ bracket_basis(int i, int j) const;

  /// Matrix of ad(e_i): column j holds [e_i, e_j].
  MatrixQ ad(int i) const;
  /// Matrix of ad(x) for an arbitrary coordinate vector x.
  MatrixQ ad(const VectorQ& x) const;

  friend bool operator==(const LieSuperalgebra& a, const LieSuperalgebra& b) {
    return a.basis_ == b.basis_ && a.c_ == b.c_;
  }

 private:
  GradedBasis basis_;
  Tensor3Q c_;
  std::vector<std::vector<Term>> terms_;
};

/// Bilinear extension of the structure constants.
VectorQ bracket(const LieSuperalgebra& g, const VectorQ& x, const VectorQ& y);

enum class AxiomKind { Grading, SuperSkew, Jacobi };
const char* to_string(AxiomKind k);

struct AxiomViolation {
  AxiomKind kind;
  std::vector<int> indices;  // (i, j, k) for grading/skew, (x, y, z) for Jacobi
};

struct AxiomReport {
  std::vector<AxiomViolation> violations;
  bool ok() const { return violations.empty(); }
  bool ok(AxiomKind k) const;
  const AxiomViolation* first(AxiomKind k) const;
};

/// Grading, super-skew-symmetry and the graded Jacobi identity
///   (-1)^{xz}[X,[Y,Z]] + (-1)^{xy}[Y,[Z,X]] + (-1)^{yz}[Z,[X,Y]] = 0
/// on all basis triples. Every violated triple is listed.
AxiomReport check_axioms(const GradedBasis& basis, const Tensor3Q& constants);
AxiomReport check_axioms(const LieSuperalgebra& g);

/// The graded subspace {x : [x, g] = 0}.
Subspace center(const LieSuperalgebra& g);

/// [S, T] for subspaces given by homogeneous spanning sets.
Subspace bracket_span(const LieSuperalgebra& g, const Subspace& s, const Subspace& t);
Subspace derived_subalgebra(const LieSuperalgebra& g);

/// g, [g,g], [[g,g],[g,g]], ... up to and including the first repeat.
std::vector<Subspace> derived_series(const LieSuperalgebra& g);
/// g, [g,g], [g,[g,g]], ... up to and including the first repeat.
std::vector<Subspace> lower_central_series(const LieSuperalgebra& g);
bool is_solvable(const LieSuperalgebra& g);
bool is_nilpotent(const LieSuperalgebra& g);

/// [g_1, g_1] is contained in [g_0, g_0].
bool class_condition(const LieSuperalgebra& g);

bool is_ideal(const LieSuperalgebra& g, const Subspace& s);
bool is_abelian(const LieSuperalgebra& g, const Subspace& s);

/// Homogeneous element of g*: F(e_k) = coeffs(k).
struct DualVector {
  VectorQ coeffs;
  Parity parity = Parity::Even;
};

/// (pi(X) F)(Y) = -(-1)^{xf} F([X, Y]). Throws PreconditionError when x or
/// F is not homogeneous.
DualVector coadjoint(const LieSuperalgebra& g, const VectorQ& x, const DualVector& f);

/// Matrix of pi(e_i) on dual coordinates: (pi(e_i) e_k^*)(e_j) = entry (j, k).
MatrixQ coadjoint_matrix(const LieSuperalgebra& g, int i);

struct Quotient {
  LieSuperalgebra algebra;
  MatrixQ projection;  // dim(g/I) x dim(g)
  MatrixQ section;     // dim(g) x dim(g/I), homogeneous columns
};

/// g / I on the coordinate complement of I. Throws PreconditionError if I
/// is not an ideal.
Quotient quotient(const LieSuperalgebra& g, const Subspace& ideal);

/// g / I realised on the complement spanned by the homogeneous columns of
/// `section`; basis vector a of the quotient is named names[a].
Quotient quotient(const LieSuperalgebra& g, const Subspace& ideal, const MatrixQ& section,
                  std::vector<std::string> names);

/// g1 x g2 with basis g1's followed by g2's (see concat for clashing labels).
LieSuperalgebra direct_sum(const LieSuperalgebra& g1, const LieSuperalgebra& g2);

}  // namespace tstar

#endif  // TSTAR_SUPERLIE_HPP
