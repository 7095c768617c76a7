#include "tstar/rational.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

namespace tstar {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

std::vector<Integer> divisors(Integer a) {
  static const Integer cap("1000000000000");
  a = abs(a);
  if (a > cap) throw std::domain_error("rational_roots: coefficient too large for divisor enumeration");
  std::vector<Integer> out;
  for (Integer d = 1; d * d <= a; ++d)
    if (a % d == 0) {
      out.push_back(d);
      if (d * d != a) out.push_back(a / d);
    }
  return out;
}

Rational evaluate(const std::vector<Rational>& c, const Rational& t) {
  Rational v = 0;
  for (auto it = c.rbegin(); it != c.rend(); ++it) v = v * t + *it;
  return v;
}

}  // namespace

std::vector<Rational> rational_roots(const std::vector<Rational>& coeffs) {
  std::vector<Rational> c = coeffs;
  while (!c.empty() && is_zero(c.back())) c.pop_back();
  if (c.size() <= 1) {
    if (c.empty()) throw std::invalid_argument("rational_roots: zero polynomial");
    return {};
  }
  std::vector<Rational> roots;
  std::size_t low = 0;
  while (is_zero(c[low])) ++low;
  if (low > 0) roots.push_back(0);
  c.erase(c.begin(), c.begin() + static_cast<std::ptrdiff_t>(low));
  if (c.size() > 1) {
    Integer l = 1;
    for (const Rational& q : c) l = lcm(l, Integer(denominator(q)));
    std::vector<Integer> a;
    for (const Rational& q : c) a.push_back(Integer(numerator(q)) * (l / Integer(denominator(q))));
    for (const Integer& p : divisors(a.front()))
      for (const Integer& q : divisors(a.back()))
        for (int s : {1, -1}) {
          const Rational t(Integer(s * p), q);
          if (is_zero(evaluate(c, t)) && std::find(roots.begin(), roots.end(), t) == roots.end())
            roots.push_back(t);
        }
  }
  std::sort(roots.begin(), roots.end());
  return roots;
}

std::optional<Rational> rational_sqrt(const Rational& q) {
  if (q < 0) return std::nullopt;
  const Integer n = numerator(q);
  const Integer d = denominator(q);
  const Integer rn = sqrt(n);
  const Integer rd = sqrt(d);
  if (rn * rn != n || rd * rd != d) return std::nullopt;
  return Rational(rn, rd);
}

Rational parse_rational(std::string_view text) {
  bool negative = false;
  if (!text.empty() && (text.front() == '-' || text.front() == '+')) {
    negative = text.front() == '-';
    text.remove_prefix(1);
  }
  const auto slash = text.find('/');
  const std::string_view num = text.substr(0, slash);
  const std::string_view den = slash == std::string_view::npos ? std::string_view("1")
                                                               : text.substr(slash + 1);
  if (!all_digits(num) || !all_digits(den))
    throw std::invalid_argument("malformed rational '" + std::string(text) + "'");
  const Integer n{std::string(num)};
  const Integer d{std::string(den)};
  if (d.is_zero()) throw std::invalid_argument("zero denominator");
  Rational q(n, d);
  return negative ? Rational(-q) : q;
}

std::string to_string(const Rational& q) { return q.str(); }

}  // namespace tstar
