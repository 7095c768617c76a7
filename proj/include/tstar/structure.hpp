#ifndef TSTAR_STRUCTURE_HPP
#define TSTAR_STRUCTURE_HPP

#include <string>
#include <vector>

#include "tstar/forms.hpp"
#include "tstar/tstar_ext.hpp"

namespace tstar {

struct IsotropicFlagResult {
  Subspace w_max;
  std::vector<Subspace> chain;  // {0} = W_0 < W_1 < ... < W_max
  int achieved_dim = 0;
};

/// The flag construction needed a rational point that does not exist (or
/// was not found): either an isotropic vector on a quadric, or a rational
/// eigenvalue of the induced action.
class RationalPointNotFound : public Error {
 public:
  RationalPointNotFound(const std::string& what, std::string quadric, MatrixQ gram)
      : Error(what), quadric_(std::move(quadric)), gram_(std::move(gram)) {}
  /// The quadric in the coordinates of the searched block, e.g. "x^2 + y^2";
  /// empty when the failure is a missing eigenvalue.
  const std::string& quadric() const { return quadric_; }
  const MatrixQ& gram() const { return gram_; }

 private:
  std::string quadric_;
  MatrixQ gram_;
};

/// Quadratic form x^T G x written out, with variables x, y, z, w (or
/// x1, x2, ... beyond four).
std::string quadric_string(const MatrixQ& gram);

/// A nonzero isotropic vector of the symmetric form `gram`, if one is found:
/// zero diagonal entries, the radical, then a diagonalisation. On the
/// diagonal form it tests pairs exactly, then ternary subforms
/// <a_k, a_l, q(v)> (v a third diagonal vector or a small combination of two)
/// by Hilbert symbols and Legendre descent. Coefficients that cannot be
/// factored are skipped, so a miss is possible only in dimension >= 4.
std::optional<VectorQ> find_isotropic_vector(const MatrixQ& gram);

/// Grows a flag of graded totally isotropic ideals one dimension at a time
/// until dim = floor(n/2), then checks W = W^perp (n even) or
/// dim W^perp - dim W = 1 (n odd), and [g, W^perp] in W.
///
/// Each step works inside S = {v in W^perp : [h, v] in W} with
/// h = [g, g] + g_1, which acts nilpotently on W^perp / W under the
/// hypotheses; the even part then acts on S / W by commuting operators and a
/// common eigenvector is chosen among rational eigenvalues. Odd candidates
/// come first, then even ones of nonzero weight (automatically isotropic),
/// then an isotropic vector of the zero-weight block.
///
/// Requires Q nilpotent, or solvable with [g_1, g_1] in [g_0, g_0].
IsotropicFlagResult max_isotropic_ideal(const QuadraticLieSuperalgebra& q);

enum class DimensionCase { Even, Odd };
const char* to_string(DimensionCase c);

struct Decomposition {
  IsotropicFlagResult flag;
  Subspace ideal;
  LieSuperalgebra quotient;
  TStarExtension extension;
  MatrixQ embedding;  // Q -> extension.total
  DimensionCase parity_case = DimensionCase::Even;
};

/// Even n: Q is isometric to T*_omega(Q/I) for I = W_max. Odd n: Q embeds as
/// a graded nondegenerate ideal of codimension 1 in T*_omega(Q/I). The
/// embedding is verified exactly in both cases.
Decomposition decompose(const QuadraticLieSuperalgebra& q);

}  // namespace tstar

#endif  // TSTAR_STRUCTURE_HPP
