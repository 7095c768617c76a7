#ifndef TSTAR_COCHAINS_HPP
#define TSTAR_COCHAINS_HPP

#include <array>
#include <optional>
#include <vector>

#include "tstar/superlie.hpp"

namespace tstar {

/// Even bilinear map g x g -> g*, stored as w(i, j, k) = omega(e_i, e_j)(e_k).
/// Container invariants: w(i,j,k) = 0 unless p_i + p_j + p_k is even, and
/// w(i,j,k) = -(-1)^{p_i p_j} w(j,i,k).
struct Cochain2Dual {
  Tensor3Q w;
  friend bool operator==(const Cochain2Dual&, const Cochain2Dual&) = default;
};

/// Even super-alternating scalar trilinear form f(i, j, k):
/// f(X,Y,Z) = -(-1)^{xy} f(Y,X,Z) = -(-1)^{yz} f(X,Z,Y).
struct ScalarCochain3 {
  Tensor3Q f;
  friend bool operator==(const ScalarCochain3&, const ScalarCochain3&) = default;
};

/// Even super-antisymmetric scalar bilinear form p(i, j):
/// p(i,j) = 0 across parities and p(i,j) = -(-1)^{p_i p_j} p(j,i).
struct ScalarCochain2 {
  MatrixQ p;
  friend bool operator==(const ScalarCochain2&, const ScalarCochain2&) = default;
};

Cochain2Dual zero_cochain2(int n);
ScalarCochain3 zero_cochain3(int n);
ScalarCochain2 zero_scalar2(int n);

/// Container-invariant checks; each returns the first violating index tuple.
std::optional<std::array<int, 3>> cochain2_violation(const GradedBasis& b, const Cochain2Dual& omega);
std::optional<std::array<int, 3>> cochain3_violation(const GradedBasis& b, const ScalarCochain3& f);
std::optional<std::array<int, 2>> scalar2_violation(const GradedBasis& b, const ScalarCochain2& phi);

// Free coordinates.
//
// A super-alternating tensor is determined by its entries on sorted index
// tuples. For ScalarCochain3 these are i <= j <= k with an even parity sum,
// where an index may repeat only if it is odd (swapping two equal odd
// arguments gives +1, two equal even arguments force 0). Cochain2Dual uses
// pairs i <= j (repeat only if odd) times any k with an even parity sum;
// ScalarCochain2 uses same-parity pairs i <= j (repeat only if odd).

std::vector<std::array<int, 3>> cochain3_free_coordinates(const GradedBasis& b);
std::vector<std::array<int, 3>> cochain2_free_coordinates(const GradedBasis& b);
std::vector<std::array<int, 2>> scalar2_free_coordinates(const GradedBasis& b);

ScalarCochain3 expand_cochain3(const GradedBasis& b, const VectorQ& coords);
Cochain2Dual expand_cochain2(const GradedBasis& b, const VectorQ& coords);
ScalarCochain2 expand_scalar2(const GradedBasis& b, const VectorQ& coords);

/// Sign s with t(a, b, c) = s * t(sorted) for a super-alternating t, or 0
/// when two equal even indices force the entry to vanish.
int super_sort_sign(const GradedBasis& b, std::array<int, 3>& idx);

/// First basis triple where the g*-valued 2-cocycle identity fails.
std::optional<std::array<int, 3>> cocycle2_witness(const LieSuperalgebra& g, const Cochain2Dual& omega);
bool is_cocycle2(const LieSuperalgebra& g, const Cochain2Dual& omega);

/// First basis triple with omega(X,Y)(Z) != (-1)^{x(y+z)} omega(Y,Z)(X).
std::optional<std::array<int, 3>> supercyclic_witness(const GradedBasis& b, const Cochain2Dual& omega);
bool is_supercyclic(const GradedBasis& b, const Cochain2Dual& omega);

/// First basis 4-tuple where the scalar 3-cocycle identity fails.
std::optional<std::array<int, 4>> closed3_witness(const LieSuperalgebra& g, const ScalarCochain3& f);
bool is_closed3(const LieSuperalgebra& g, const ScalarCochain3& f);

/// (d phi)(X,Y,Z) = -phi([X,Y],Z) + (-1)^{yz} phi([X,Z],Y) - (-1)^{x(y+z)} phi([Y,Z],X).
ScalarCochain3 delta_scalar2(const LieSuperalgebra& g, const ScalarCochain2& phi);

/// omega -> (X,Y,Z) -> omega(X,Y)(Z). Requires a supercyclic 2-cocycle.
ScalarCochain3 hat(const LieSuperalgebra& g, const Cochain2Dual& omega);
/// Inverse of hat. Requires a closed even super-alternating 3-form.
Cochain2Dual unhat(const LieSuperalgebra& g, const ScalarCochain3& f);
/// The tensor of f read as a g*-valued 2-cochain, without any checks.
Cochain2Dual as_cochain2(const ScalarCochain3& f);

/// Bases of the cochain spaces, computed by exact kernels over the free
/// coordinates.
std::vector<ScalarCochain3> z3_basis(const LieSuperalgebra& g);
std::vector<ScalarCochain3> b3_basis(const LieSuperalgebra& g);
int h3_dim(const LieSuperalgebra& g);
/// Even g*-valued 2-cocycles.
std::vector<Cochain2Dual> z2_basis(const LieSuperalgebra& g);
/// Even g*-valued 2-cocycles that are also supercyclic.
std::vector<Cochain2Dual> supercyclic_z2_basis(const LieSuperalgebra& g);

/// phi with f2 = f1 - d phi, if one exists. Throws PreconditionError when
/// f1 or f2 is not closed.
std::optional<ScalarCochain2> cohomologous(const LieSuperalgebra& g, const ScalarCochain3& f1,
                                           const ScalarCochain3& f2);

}  // namespace tstar

#endif  // TSTAR_COCHAINS_HPP
