#ifndef TSTAR_GRADED_HPP
#define TSTAR_GRADED_HPP

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "tstar/rational.hpp"

namespace tstar {

enum class Parity : std::uint8_t { Even = 0, Odd = 1 };

constexpr Parity operator+(Parity a, Parity b) {
  return static_cast<Parity>(static_cast<std::uint8_t>(a) ^ static_cast<std::uint8_t>(b));
}
constexpr int bit(Parity p) { return static_cast<int>(p); }

/// (-1)^e
constexpr int sign_pow(int e) { return (e & 1) ? -1 : 1; }
/// Koszul sign (-1)^{ab}.
constexpr int koszul(Parity a, Parity b) { return sign_pow(bit(a) * bit(b)); }

const char* to_string(Parity p);

/// Base class of every error the library throws.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A documented precondition of an operation did not hold for the input.
class PreconditionError : public Error {
 public:
  explicit PreconditionError(const std::string& what, std::vector<int> witness = {})
      : Error(what), witness_(std::move(witness)) {}
  /// Basis indices of a tuple exhibiting the failure (may be empty).
  const std::vector<int>& witness() const { return witness_; }

 private:
  std::vector<int> witness_;
};

/// An internal post-verification failed; always a library bug.
class VerificationError : public Error {
 public:
  using Error::Error;
};

/// Ordered, named basis with a parity per vector.
class GradedBasis {
 public:
  GradedBasis() = default;
  GradedBasis(std::vector<std::string> names, std::vector<Parity> parities);

  /// Unnamed basis; vectors are called e1, e2, ...
  static GradedBasis anonymous(const std::vector<Parity>& parities);

  int dim() const { return static_cast<int>(parities_.size()); }
  Parity parity(int i) const { return parities_[static_cast<std::size_t>(i)]; }
  const std::string& name(int i) const { return names_[static_cast<std::size_t>(i)]; }
  const std::vector<Parity>& parities() const { return parities_; }
  const std::vector<std::string>& names() const { return names_; }
  std::optional<int> index_of(const std::string& name) const;

  int even_dim() const;
  int odd_dim() const { return dim() - even_dim(); }
  std::vector<int> indices(Parity p) const;

  friend bool operator==(const GradedBasis&, const GradedBasis&) = default;

 private:
  std::vector<std::string> names_;
  std::vector<Parity> parities_;
};

/// a's basis followed by b's; labels of b already taken get a trailing '.
GradedBasis concat(const GradedBasis& a, const GradedBasis& b);

/// Parity of a vector whose support lies in one graded component; the zero
/// vector counts as even. Empty when the vector is not homogeneous.
std::optional<Parity> homogeneous_parity(const GradedBasis& basis, const VectorQ& v);

/// Component of `v` on the coordinates of parity `p`.
VectorQ parity_component(const GradedBasis& basis, const VectorQ& v, Parity p);

VectorQ unit_vector(int n, int i);

}  // namespace tstar

#endif  // TSTAR_GRADED_HPP
