#ifndef TSTAR_RATIONAL_HPP
#define TSTAR_RATIONAL_HPP

#include <string>
#include <optional>
#include <string_view>
#include <vector>

#include <boost/multiprecision/gmp.hpp>
#include <boost/multiprecision/eigen.hpp>
#include <Eigen/Dense>

namespace tstar {

/// Exact rational scalar. GMP keeps every value in lowest terms with a
/// positive denominator; expression templates are disabled so the type
/// composes cleanly with Eigen.
using Rational = boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                               boost::multiprecision::et_off>;
using Integer = boost::multiprecision::number<boost::multiprecision::gmp_int,
                                              boost::multiprecision::et_off>;

using MatrixQ = Eigen::Matrix<Rational, Eigen::Dynamic, Eigen::Dynamic>;
using VectorQ = Eigen::Matrix<Rational, Eigen::Dynamic, 1>;
using RowVectorQ = Eigen::Matrix<Rational, 1, Eigen::Dynamic>;

inline bool is_zero(const Rational& q) { return q.is_zero(); }

/// Parses `p`, `-p`, `p/q`. Throws std::invalid_argument on malformed text
/// or a zero denominator.
Rational parse_rational(std::string_view text);

/// `p` for integers, `p/q` otherwise.
std::string to_string(const Rational& q);

/// Distinct rational roots of sum_i coeffs[i] t^i, in increasing order.
/// Candidates come from the rational root theorem; throws std::domain_error
/// when a coefficient is too large to enumerate divisors (above 10^12 after
/// clearing denominators).
std::vector<Rational> rational_roots(const std::vector<Rational>& coeffs);

/// r >= 0 with r^2 = q, if q is the square of a rational.
std::optional<Rational> rational_sqrt(const Rational& q);

inline Rational half(const Rational& q) { return q / Rational(2); }

}  // namespace tstar

#endif  // TSTAR_RATIONAL_HPP
