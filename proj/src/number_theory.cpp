#include "tstar/number_theory.hpp"

#include <algorithm>

#include <boost/multiprecision/miller_rabin.hpp>

namespace tstar {

namespace {

using boost::multiprecision::powm;

Integer mod(const Integer& a, const Integer& m) {
  Integer r = a % m;
  return r < 0 ? r + m : r;
}

// x with x^2 = n mod p for an odd prime p and n a square mod p (Tonelli-Shanks).
Integer sqrt_mod_prime(const Integer& n0, const Integer& p) {
  const Integer n = mod(n0, p);
  if (n == 0) return 0;
  if (p == 2) return n;
  Integer q = p - 1;
  int s = 0;
  while (q % 2 == 0) q /= 2, ++s;
  Integer z = 2;
  while (powm(z, (p - 1) / 2, p) != p - 1) ++z;
  Integer m = s, c = powm(z, q, p), t = powm(n, q, p), r = powm(n, (q + 1) / 2, p);
  while (t != 1) {
    Integer i = 0, tt = t;
    while (tt != 1) tt = tt * tt % p, ++i;
    Integer b = c;
    for (Integer k = 0; k < m - i - 1; ++k) b = b * b % p;
    m = i;
    c = b * b % p;
    t = t * c % p;
    r = r * b % p;
  }
  return r;
}

// t with t^2 = b mod |a| and |t| <= |a| / 2, for squarefree a.
std::optional<Integer> sqrt_mod_squarefree(const Integer& b, const Integer& a) {
  const Integer m = abs(a);
  if (m == 1) return Integer(0);
  const auto f = factor(m);
  if (!f) return std::nullopt;
  Integer x = 0, modulus = 1;
  for (const auto& [p, e] : *f) {
    (void)e;
    const Integer bp = mod(b, p);
    if (p != 2 && bp != 0 && powm(bp, (p - 1) / 2, p) != 1) return std::nullopt;
    const Integer r = sqrt_mod_prime(bp, p);
    // Chinese remainder: x = x mod modulus, x = r mod p.
    const Integer inv = p == 2 ? Integer(1) : powm(mod(modulus, p), p - 2, p);
    const Integer k = mod((r - x) * inv, p);
    x += modulus * k;
    modulus *= p;
  }
  x = mod(x, modulus);
  if (2 * x > modulus) x -= modulus;
  return x;
}

// Nonzero (X, Y, Z) with a X^2 + b Y^2 = Z^2 for squarefree a, b.
std::optional<std::array<Integer, 3>> legendre_descent(const Integer& a, const Integer& b, int depth) {
  if (depth > 400) return std::nullopt;
  if (a == 1) return std::array<Integer, 3>{1, 0, 1};
  if (b == 1) return std::array<Integer, 3>{0, 1, 1};
  if (a == -b) return std::array<Integer, 3>{1, 1, 0};
  if (abs(a) < abs(b)) {
    auto s = legendre_descent(b, a, depth + 1);
    if (!s) return std::nullopt;
    return std::array<Integer, 3>{(*s)[1], (*s)[0], (*s)[2]};
  }
  if (abs(a) == 1) return std::nullopt;  // a = b = -1
  const auto t = sqrt_mod_squarefree(b, a);
  if (!t) return std::nullopt;
  const Integer k = (*t * *t - b) / a;
  const auto sk = squarefree_decomposition(k);
  if (!sk) return std::nullopt;
  auto s = legendre_descent(sk->core, b, depth + 1);
  if (!s) return std::nullopt;
  const auto& [x1, y1, z1] = *s;
  // m X1^2 = N(Z1 + Y1 sqrt b) and a m r^2 = N(t + sqrt b).
  return std::array<Integer, 3>{sk->core * sk->root * x1, *t * y1 + z1, *t * z1 + b * y1};
}

}  // namespace

std::optional<std::vector<std::pair<Integer, int>>> factor(const Integer& n0) {
  Integer n = abs(n0);
  std::vector<std::pair<Integer, int>> out;
  if (n == 0) return std::nullopt;
  for (Integer f = 2; f <= 100000 && f * f <= n; ++f) {
    int e = 0;
    while (n % f == 0) n /= f, ++e;
    if (e > 0) out.push_back({f, e});
  }
  if (n > 1) {
    if (n > Integer(100000) * 100000 && !boost::multiprecision::miller_rabin_test(n, 25)) {
      // A perfect square of a prime is the one composite case worth catching.
      const Integer r = sqrt(n);
      if (r * r != n || !boost::multiprecision::miller_rabin_test(r, 25)) return std::nullopt;
      out.push_back({r, 2});
    } else {
      out.push_back({n, 1});
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::optional<SquarefreeDecomposition> squarefree_decomposition(const Integer& n) {
  const auto f = factor(n);
  if (!f) return std::nullopt;
  SquarefreeDecomposition out{n < 0 ? Integer(-1) : Integer(1), 1};
  for (const auto& [p, e] : *f) {
    for (int i = 0; i < e / 2; ++i) out.root *= p;
    if (e % 2) out.core *= p;
  }
  return out;
}

int hilbert_symbol(const Integer& a0, const Integer& b0, const Integer& p) {
  if (p == 0) return (a0 < 0 && b0 < 0) ? -1 : 1;
  Integer a = a0, b = b0;
  int al = 0, be = 0;
  while (a % p == 0) a /= p, ++al;
  while (b % p == 0) b /= p, ++be;
  if (p == 2) {
    auto eps = [](const Integer& u) { return static_cast<int>((mod(u, 4) - 1) / 2); };
    auto omg = [](const Integer& u) {
      const int r = mod(u, 8).convert_to<int>();
      return (r * r - 1) / 8 % 2;
    };
    return (eps(a) * eps(b) + al * omg(b) + be * omg(a)) % 2 ? -1 : 1;
  }
  auto legendre = [&p](const Integer& u) { return powm(mod(u, p), (p - 1) / 2, p) == 1 ? 1 : -1; };
  int s = (al * be % 2 == 1 && mod(p, 4) == 3) ? -1 : 1;
  if (be % 2) s *= legendre(a);
  if (al % 2) s *= legendre(b);
  return s;
}

std::optional<std::array<Integer, 3>> solve_ternary(const Integer& a, const Integer& b, const Integer& c) {
  if (a == 0 || b == 0 || c == 0) return std::nullopt;
  // a x^2 + b y^2 = -c z^2, times -c: A x^2 + B y^2 = (c z)^2.
  const auto sa = squarefree_decomposition(-a * c);
  const auto sb = squarefree_decomposition(-b * c);
  if (!sa || !sb) return std::nullopt;
  std::vector<Integer> places{0, 2};
  for (const Integer& x : {sa->core, sb->core}) {
    const auto f = factor(x);
    if (!f) return std::nullopt;
    for (const auto& [p, e] : *f) places.push_back(p);
  }
  for (const Integer& v : places)
    if (hilbert_symbol(sa->core, sb->core, v) != 1) return std::nullopt;
  const auto s = legendre_descent(sa->core, sb->core, 0);
  if (!s) return std::nullopt;
  // x = X / ra, y = Y / rb, z = Z / c; clear denominators.
  const auto& [xx, yy, zz] = *s;
  std::array<Integer, 3> out{xx * sb->root * c, yy * sa->root * c, zz * sa->root * sb->root};
  Integer g = gcd(gcd(abs(out[0]), abs(out[1])), abs(out[2]));
  if (g == 0) return std::nullopt;
  for (auto& v : out) v /= g;
  if (a * out[0] * out[0] + b * out[1] * out[1] + c * out[2] * out[2] != 0) return std::nullopt;
  return out;
}

}  // namespace tstar
