#ifndef TSTAR_TSTAR_EXT_HPP
#define TSTAR_TSTAR_EXT_HPP

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "tstar/cochains.hpp"
#include "tstar/forms.hpp"

namespace tstar {

/// T*_omega g: the space g + g* (basis of g, then the dual basis, e_k^*
/// having the parity of e_k) with bracket
///   [X+F, Y+H] = [X,Y] + omega(X,Y) + pi(X)H - (-1)^{xy} pi(Y)F
/// and the canonical pairing B(X+F, Y+H) = F(Y) + (-1)^{xy} H(X).
struct TStarExtension {
  LieSuperalgebra base;
  Cochain2Dual omega;
  QuadraticLieSuperalgebra total;
  MatrixQ base_embedding;  // 2n x n
  MatrixQ dual_embedding;  // 2n x n

  /// The copy of g* inside the extension.
  Subspace dual_ideal() const;
};

/// Basis of g followed by the dual vectors, named `<name>*` (more stars if
/// that name is already taken).
GradedBasis extension_basis(const GradedBasis& base);

/// The extension bracket for any even super-antisymmetric omega, without
/// the cocycle or supercyclicity requirements.
LieSuperalgebra tstar_algebra(const LieSuperalgebra& g, const Cochain2Dual& omega);

/// Canonical pairing on extension_basis(base).
EvenForm canonical_pairing(const GradedBasis& base);

/// Builds and verifies T*_omega g. Rejects omega (PreconditionError with a
/// witnessing basis triple) when it is not a 2-cocycle or not supercyclic.
TStarExtension build(const LieSuperalgebra& g, const Cochain2Dual& omega);

/// For a 2-cocycle omega that is not supercyclic: a basis triple of the
/// extension where B([X,Y],Z) != B(X,[Y,Z]).
std::array<int, 3> negative_test_invariance(const LieSuperalgebra& g, const Cochain2Dual& omega);

/// Whether a half-dimensional graded totally isotropic subspace is an ideal.
/// Cross-checks against [I, I] = 0 and throws VerificationError if the two
/// disagree.
bool lagrangian_is_ideal(const QuadraticLieSuperalgebra& q, const Subspace& ideal);

/// Why a linear map fails to be an isometric homomorphism.
struct MapFailure {
  enum class Kind { Shape, NotInjective, NotEven, Bracket, Form } kind;
  int i = -1;
  int j = -1;
};
const char* to_string(MapFailure::Kind k);

/// Checks that `map` (columns: images of the basis of `from`) is injective,
/// even, bracket-preserving and form-preserving; with `onto`, also square.
std::optional<MapFailure> map_failure(const QuadraticLieSuperalgebra& from, const QuadraticLieSuperalgebra& to,
                                      const MatrixQ& map, bool onto);

struct Recognition {
  TStarExtension extension;
  MatrixQ map;      // Q -> extension.total
  MatrixQ section;  // columns: the chosen complement of the ideal in Q
};

/// Extension of Q/I read off along a graded section s of Q -> Q/I, where I
/// is a graded totally isotropic ideal with [Q, I^perp] in I whenever
/// dim I < dim Q / 2. The map is x -> p(x) + B(x - s p(x) / 2, s(.)) and
/// omega is the cocycle making it a homomorphism. Verified on exit.
Recognition extension_along_section(const QuadraticLieSuperalgebra& q, const Subspace& ideal,
                                    const MatrixQ& section, std::vector<std::string> names);

/// Names of the basis vectors picked out by coordinate unit columns.
std::vector<std::string> coordinate_names(const GradedBasis& b, const MatrixQ& unit_columns);

/// Presents Q as T*_omega(Q/I) along a half-dimensional graded totally
/// isotropic ideal, using the isotropic complement of I as section.
Recognition recognize(const QuadraticLieSuperalgebra& q, const Subspace& ideal);

/// As recognize, along a caller-chosen totally isotropic graded complement.
Recognition recognize_with_section(const QuadraticLieSuperalgebra& q, const Subspace& ideal,
                                   const MatrixQ& section);

/// S_phi(X + F) = X + phi(X, .) + F on g + g*.
MatrixQ s_phi_matrix(const LieSuperalgebra& g, const ScalarCochain2& phi);

struct SPhiIsometry {
  TStarExtension source;  // T*_{omega1}
  TStarExtension target;  // T*_{omega1 - d phi}
  MatrixQ map;
};

SPhiIsometry s_phi_isometry(const LieSuperalgebra& g, const Cochain2Dual& omega1, const ScalarCochain2& phi);

}  // namespace tstar

#endif  // TSTAR_TSTAR_EXT_HPP
