#pragma once

/**
 * @file series.hpp
 * @brief Exact integer/rational scalars and truncated univariate power series.
 *
 * A TruncatedSeries<T> stores the coefficients of a_0 + a_1 h + ... + a_k h^k
 * in the ring T[h]/(h^{k+1}). Every operation keeps the truncation order of
 * its operands; mixing two different orders is a logic error.
 */

#include <boost/multiprecision/cpp_int.hpp>

#include <cstddef>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

namespace fanohost {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Raised when two exact computations that must agree do not (always a bug).
class InvariantViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Raised for inputs that violate a documented precondition.
class InvalidInput : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

inline bool fits_int64(const Integer& v) {
  return v >= std::numeric_limits<std::int64_t>::min() &&
         v <= std::numeric_limits<std::int64_t>::max();
}

inline std::string to_string(const Integer& v) { return v.str(); }

template <typename T>
class TruncatedSeries {
 public:
  /// Zero series modulo h^{order+1}.
  explicit TruncatedSeries(std::size_t order) : coeffs_(order + 1, T(0)) {}

  static TruncatedSeries constant(std::size_t order, const T& c) {
    TruncatedSeries s(order);
    s.coeffs_[0] = c;
    return s;
  }

  /// c * h^k (zero when k exceeds the order).
  static TruncatedSeries monomial(std::size_t order, const T& c, std::size_t k) {
    TruncatedSeries s(order);
    if (k <= order) s.coeffs_[k] = c;
    return s;
  }

  /// exp(t*h), truncated.
  static TruncatedSeries exp_scaled(std::size_t order, const T& t) {
    TruncatedSeries s(order);
    T term(1);
    for (std::size_t k = 0; k <= order; ++k) {
      s.coeffs_[k] = term;
      term = term * t / T(static_cast<long long>(k + 1));
    }
    return s;
  }

  std::size_t order() const { return coeffs_.size() - 1; }
  const T& operator[](std::size_t k) const { return coeffs_.at(k); }
  T& operator[](std::size_t k) { return coeffs_.at(k); }
  const std::vector<T>& coefficients() const { return coeffs_; }

  TruncatedSeries& operator+=(const TruncatedSeries& o) {
    check_order(o);
    for (std::size_t k = 0; k < coeffs_.size(); ++k) coeffs_[k] += o.coeffs_[k];
    return *this;
  }
  TruncatedSeries& operator-=(const TruncatedSeries& o) {
    check_order(o);
    for (std::size_t k = 0; k < coeffs_.size(); ++k) coeffs_[k] -= o.coeffs_[k];
    return *this;
  }
  TruncatedSeries& operator*=(const T& c) {
    for (auto& a : coeffs_) a *= c;
    return *this;
  }

  friend TruncatedSeries operator+(TruncatedSeries a, const TruncatedSeries& b) { return a += b; }
  friend TruncatedSeries operator-(TruncatedSeries a, const TruncatedSeries& b) { return a -= b; }
  friend TruncatedSeries operator*(TruncatedSeries a, const T& c) { return a *= c; }

  friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
    a.check_order(b);
    TruncatedSeries r(a.order());
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
      if (a.coeffs_[i] == 0) continue;
      for (std::size_t j = 0; i + j < a.coeffs_.size(); ++j) r.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    return r;
  }
  TruncatedSeries& operator*=(const TruncatedSeries& o) { return *this = *this * o; }

  /// Substitutes h -> k*h (the action of Adams operations on a Chern character).
  TruncatedSeries rescale(const T& k) const {
    TruncatedSeries r(*this);
    T power(1);
    for (auto& a : r.coeffs_) {
      a *= power;
      power *= k;
    }
    return r;
  }

  /// Multiplicative inverse; the constant term must be a unit of T.
  TruncatedSeries inverse() const {
    if (coeffs_[0] == 0) throw std::domain_error("series with zero constant term is not invertible");
    TruncatedSeries r(order());
    r.coeffs_[0] = T(1) / coeffs_[0];
    for (std::size_t k = 1; k < coeffs_.size(); ++k) {
      T acc(0);
      for (std::size_t j = 1; j <= k; ++j) acc += coeffs_[j] * r.coeffs_[k - j];
      r.coeffs_[k] = -acc / coeffs_[0];
    }
    return r;
  }

  friend bool operator==(const TruncatedSeries& a, const TruncatedSeries& b) { return a.coeffs_ == b.coeffs_; }

 private:
  void check_order(const TruncatedSeries& o) const {
    if (o.coeffs_.size() != coeffs_.size()) throw std::logic_error("truncation order mismatch");
  }

  std::vector<T> coeffs_;
};

template <typename T>
TruncatedSeries<T> pow(TruncatedSeries<T> base, unsigned exponent) {
  auto result = TruncatedSeries<T>::constant(base.order(), T(1));
  while (exponent) {
    if (exponent & 1U) result *= base;
    exponent >>= 1U;
    if (exponent) base *= base;
  }
  return result;
}

}  // namespace fanohost
