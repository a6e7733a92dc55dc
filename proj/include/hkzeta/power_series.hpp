#pragma once

// Truncated formal power series sum_{i=0}^{order} c_i u^i over a field-like
// coefficient type (exact rationals or floating point). Binary operations
// truncate to the smaller order.

#include <algorithm>
#include <stdexcept>
#include <utility>
#include <vector>

namespace hkzeta {

template <class T>
class PowerSeries {
 public:
  explicit PowerSeries(int order = 0) : c_(order + 1, T(0)) {
    if (order < 0) throw std::invalid_argument("PowerSeries: order >= 0");
  }
  explicit PowerSeries(std::vector<T> coeffs) : c_(std::move(coeffs)) {
    if (c_.empty()) throw std::invalid_argument("PowerSeries: no coefficients");
  }

  int order() const { return static_cast<int>(c_.size()) - 1; }
  const T& operator[](int i) const { return c_.at(i); }
  T& operator[](int i) { return c_.at(i); }
  const std::vector<T>& coefficients() const { return c_; }

  PowerSeries truncated(int order) const {
    std::vector<T> c(c_.begin(), c_.begin() + std::min(order, this->order()) + 1);
    return PowerSeries(std::move(c));
  }

  friend PowerSeries operator+(const PowerSeries& a, const PowerSeries& b) {
    PowerSeries out(std::min(a.order(), b.order()));
    for (int i = 0; i <= out.order(); ++i) out.c_[i] = a.c_[i] + b.c_[i];
    return out;
  }
  friend PowerSeries operator-(const PowerSeries& a, const PowerSeries& b) {
    PowerSeries out(std::min(a.order(), b.order()));
    for (int i = 0; i <= out.order(); ++i) out.c_[i] = a.c_[i] - b.c_[i];
    return out;
  }
  friend PowerSeries operator*(const PowerSeries& a, const PowerSeries& b) {
    PowerSeries out(std::min(a.order(), b.order()));
    for (int i = 0; i <= out.order(); ++i)
      for (int j = 0; i + j <= out.order(); ++j) out.c_[i + j] += a.c_[i] * b.c_[j];
    return out;
  }
  friend PowerSeries operator*(const T& s, const PowerSeries& a) {
    PowerSeries out = a;
    for (auto& v : out.c_) v *= s;
    return out;
  }
  friend bool operator==(const PowerSeries& a, const PowerSeries& b) {
    return a.c_ == b.c_;
  }

  /// d/du; the result has order one less (at least 0).
  PowerSeries derivative() const {
    PowerSeries out(std::max(order() - 1, 0));
    for (int i = 1; i <= order(); ++i) out.c_[i - 1] = c_[i] * T(i);
    return out;
  }

  /// exp of a series with zero constant term, via n s_n = sum_k k a_k s_{n-k}.
  PowerSeries exp() const {
    if (c_[0] != T(0)) throw std::domain_error("PowerSeries::exp needs c_0 = 0");
    PowerSeries s(order());
    s.c_[0] = T(1);
    for (int n = 1; n <= order(); ++n) {
      T acc(0);
      for (int k = 1; k <= n; ++k) acc += T(k) * c_[k] * s.c_[n - k];
      s.c_[n] = acc / T(n);
    }
    return s;
  }

  /// log of a series with constant term 1, via n a_n = n s_n - sum_{k<n} k a_k s_{n-k}.
  PowerSeries log() const {
    if (c_[0] != T(1)) throw std::domain_error("PowerSeries::log needs c_0 = 1");
    PowerSeries a(order());
    for (int n = 1; n <= order(); ++n) {
      T acc = T(n) * c_[n];
      for (int k = 1; k < n; ++k) acc -= T(k) * a.c_[k] * c_[n - k];
      a.c_[n] = acc / T(n);
    }
    return a;
  }

  /// Horner evaluation at u.
  template <class R>
  R evaluate(R u) const {
    R acc(0);
    for (int i = order(); i >= 0; --i) acc = acc * u + static_cast<R>(c_[i]);
    return acc;
  }

 private:
  std::vector<T> c_;
};

}  // namespace hkzeta
