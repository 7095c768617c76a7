#ifndef TSTAR_RANDOM_HPP
#define TSTAR_RANDOM_HPP

#include <cstdint>
#include <random>
#include <vector>

#include "tstar/cochains.hpp"

namespace tstar {

/// Fixed engine so that a seed reproduces the same draws everywhere.
using Rng = std::mt19937_64;

/// Integer in [lo, hi]. Plain modulo reduction: distribution libraries are
/// allowed to differ between standard libraries, this is not.
std::int64_t uniform_int(Rng& rng, std::int64_t lo, std::int64_t hi);

/// p/q with |p| <= bound and 1 <= q <= 3; zero with probability about 1/3.
Rational random_rational(Rng& rng, int bound = 3);

VectorQ random_vector(Rng& rng, int n, int bound = 3);

/// Uniform over the free coordinates, so the container invariants hold.
Cochain2Dual random_cochain2(Rng& rng, const GradedBasis& b);
ScalarCochain3 random_cochain3(Rng& rng, const GradedBasis& b);
ScalarCochain2 random_scalar2(Rng& rng, const GradedBasis& b);

/// Random rational combination of tensors exposing a data() view.
template <typename T, typename Access>
T random_combination(Rng& rng, const std::vector<T>& basis, T zero, Access field) {
  for (const T& b : basis) {
    const Rational c = random_rational(rng);
    if (!is_zero(c)) field(zero) += c * field(b);
  }
  return zero;
}

}  // namespace tstar

#endif  // TSTAR_RANDOM_HPP
