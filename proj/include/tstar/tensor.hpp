#ifndef TSTAR_TENSOR_HPP
#define TSTAR_TENSOR_HPP

#include <cstddef>
#include <vector>

#include "tstar/rational.hpp"

namespace tstar {

/// Dense cubic tensor t(i, j, k) with all three indices in [0, n).
template <typename Scalar>
class Tensor3 {
 public:
  Tensor3() = default;
  explicit Tensor3(int n) : n_(n), data_(static_cast<std::size_t>(n) * n * n) {}

  int size() const { return n_; }

  Scalar& operator()(int i, int j, int k) { return data_[offset(i, j, k)]; }
  const Scalar& operator()(int i, int j, int k) const { return data_[offset(i, j, k)]; }

  bool is_zero() const {
    for (const auto& x : data_)
      if (x != Scalar(0)) return false;
    return true;
  }

  Tensor3& operator+=(const Tensor3& o) {
    for (std::size_t t = 0; t < data_.size(); ++t) data_[t] += o.data_[t];
    return *this;
  }
  Tensor3& operator-=(const Tensor3& o) {
    for (std::size_t t = 0; t < data_.size(); ++t) data_[t] -= o.data_[t];
    return *this;
  }
  Tensor3& operator*=(const Scalar& s) {
    for (auto& x : data_) x *= s;
    return *this;
  }
  friend Tensor3 operator+(Tensor3 a, const Tensor3& b) { return a += b; }
  friend Tensor3 operator-(Tensor3 a, const Tensor3& b) { return a -= b; }
  friend Tensor3 operator*(const Scalar& s, Tensor3 a) { return a *= s; }
  friend bool operator==(const Tensor3&, const Tensor3&) = default;

  /// Flattened view, index (i * n + j) * n + k.
  const std::vector<Scalar>& data() const { return data_; }

 private:
  std::size_t offset(int i, int j, int k) const {
    return (static_cast<std::size_t>(i) * n_ + j) * n_ + k;
  }

  int n_ = 0;
  std::vector<Scalar> data_;
};

using Tensor3Q = Tensor3<Rational>;

}  // namespace tstar

#endif  // TSTAR_TENSOR_HPP
