#ifndef TSTAR_NUMBER_THEORY_HPP
#define TSTAR_NUMBER_THEORY_HPP

#include <array>
#include <optional>
#include <utility>
#include <vector>

#include "tstar/rational.hpp"

namespace tstar {

/// Prime factorisation of |n| as (prime, exponent) pairs, increasing.
/// Trial division to 10^5, then a probabilistic primality test on the
/// cofactor; empty when the cofactor is composite (not attempted further).
std::optional<std::vector<std::pair<Integer, int>>> factor(const Integer& n);

/// n = root^2 * core with core squarefree (sign kept in core).
struct SquarefreeDecomposition {
  Integer core;
  Integer root;
};
std::optional<SquarefreeDecomposition> squarefree_decomposition(const Integer& n);

/// Hilbert symbol (a, b)_p of nonzero integers; p = 0 is the real place.
int hilbert_symbol(const Integer& a, const Integer& b, const Integer& p);

/// Nonzero integer solution of a x^2 + b y^2 + c z^2 = 0 for nonzero a, b,
/// c: a Hilbert-symbol test at every relevant place, then Legendre descent.
/// Empty when no solution exists or a coefficient cannot be factored.
std::optional<std::array<Integer, 3>> solve_ternary(const Integer& a, const Integer& b, const Integer& c);

}  // namespace tstar

#endif  // TSTAR_NUMBER_THEORY_HPP
