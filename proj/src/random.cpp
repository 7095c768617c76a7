#include "tstar/random.hpp"

namespace tstar {

std::int64_t uniform_int(Rng& rng, std::int64_t lo, std::int64_t hi) {
  const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
  return lo + static_cast<std::int64_t>(rng() % span);
}

Rational random_rational(Rng& rng, int bound) {
  if (uniform_int(rng, 0, 2) == 0) return 0;
  const auto p = uniform_int(rng, -bound, bound);
  const auto q = uniform_int(rng, 1, 3);
  return Rational(Integer(p), Integer(q));
}

VectorQ random_vector(Rng& rng, int n, int bound) {
  VectorQ v(n);
  for (int i = 0; i < n; ++i) v(i) = random_rational(rng, bound);
  return v;
}

Cochain2Dual random_cochain2(Rng& rng, const GradedBasis& b) {
  return expand_cochain2(b, random_vector(rng, static_cast<int>(cochain2_free_coordinates(b).size())));
}

ScalarCochain3 random_cochain3(Rng& rng, const GradedBasis& b) {
  return expand_cochain3(b, random_vector(rng, static_cast<int>(cochain3_free_coordinates(b).size())));
}

ScalarCochain2 random_scalar2(Rng& rng, const GradedBasis& b) {
  return expand_scalar2(b, random_vector(rng, static_cast<int>(scalar2_free_coordinates(b).size())));
}

}  // namespace tstar
