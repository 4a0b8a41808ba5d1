#pragma once

/**
 * @file complete_intersection.hpp
 * @brief Smooth complete intersections Y in P^n and their classical invariants.
 *
 * Y is recorded only through its numerical type: the ambient dimension n and
 * the multidegree (d_1 >= ... >= d_c). Smoothness is assumed, never checked.
 *
 * Two independent routes are provided:
 *  - euler_char_ci: top Chern class of T_Y, from the normal-bundle sequence;
 *  - hodge_numbers: Hirzebruch-Riemann-Roch on exterior powers of Omega_Y,
 *    with the exterior powers built by Newton's identities from Adams
 *    operations on the Chern character.
 * Their agreement (alternating sum of the Hodge table equals chi_top) is the
 * main self-check of this module.
 */

#include "fanohost/series.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

namespace fanohost {

class CompleteIntersection {
 public:
  /// Validates and normalizes: 1 <= c <= n, all degrees >= 1, sorted descending.
  static CompleteIntersection make(int n, std::vector<int> degrees) {
    if (n < 1) throw InvalidInput("ambient dimension n must be at least 1 (got " + std::to_string(n) + ")");
    if (degrees.empty()) throw InvalidInput("at least one degree is required");
    if (static_cast<int>(degrees.size()) > n)
      throw InvalidInput("codimension c=" + std::to_string(degrees.size()) + " exceeds n=" + std::to_string(n) +
                         " (negative-dimensional intersection)");
    for (int d : degrees)
      if (d < 1) throw InvalidInput("degrees must be positive (got " + std::to_string(d) + ")");
    std::sort(degrees.begin(), degrees.end(), std::greater<>());
    return CompleteIntersection(n, std::move(degrees));
  }

  int ambient_dim() const { return n_; }
  const std::vector<int>& degrees() const { return degrees_; }
  int codim() const { return static_cast<int>(degrees_.size()); }
  int dimension() const { return n_ - codim(); }
  int degree_sum() const { return std::accumulate(degrees_.begin(), degrees_.end(), 0); }

  /// K_Y = O_Y(canonical_twist()): sum(d_i) - (n+1).
  int canonical_twist() const { return degree_sum() - (n_ + 1); }
  bool is_calabi_yau() const { return canonical_twist() == 0; }

  /// Bezout degree prod(d_i).
  Integer degree() const {
    Integer p = 1;
    for (int d : degrees_) p *= d;
    return p;
  }

  std::string label() const {
    std::ostringstream os;
    os << "CI(" << n_ << ";";
    for (std::size_t i = 0; i < degrees_.size(); ++i) os << (i ? "," : "") << degrees_[i];
    os << ")";
    return os.str();
  }

  friend bool operator==(const CompleteIntersection&, const CompleteIntersection&) = default;

 private:
  CompleteIntersection(int n, std::vector<int> degrees) : n_(n), degrees_(std::move(degrees)) {}

  int n_;
  std::vector<int> degrees_;
};

inline CompleteIntersection make_ci(int n, std::vector<int> degrees) {
  return CompleteIntersection::make(n, std::move(degrees));
}

inline int canonical_twist(const CompleteIntersection& ci) { return ci.canonical_twist(); }

/// Hodge diamond h^{p,q}, 0 <= p,q <= dim.
class HodgeTable {
 public:
  explicit HodgeTable(int dim)
      : dim_(dim), entries_(static_cast<std::size_t>(dim + 1), std::vector<Integer>(static_cast<std::size_t>(dim + 1))) {}

  int dim() const { return dim_; }
  const Integer& at(int p, int q) const { return entries_.at(static_cast<std::size_t>(p)).at(static_cast<std::size_t>(q)); }
  Integer& at(int p, int q) { return entries_.at(static_cast<std::size_t>(p)).at(static_cast<std::size_t>(q)); }
  const std::vector<std::vector<Integer>>& rows() const { return entries_; }

  /// sum (-1)^{p+q} h^{p,q}
  Integer euler_characteristic() const {
    Integer chi = 0;
    for (int p = 0; p <= dim_; ++p)
      for (int q = 0; q <= dim_; ++q) chi += ((p + q) % 2 ? -1 : 1) * at(p, q);
    return chi;
  }

  /// Hochschild-type diagonal sum: sum over q - p = k of h^{p,q}, for |k| <= dim.
  Integer diagonal_sum(int k) const {
    Integer s = 0;
    for (int p = 0; p <= dim_; ++p) {
      int q = p + k;
      if (q >= 0 && q <= dim_) s += at(p, q);
    }
    return s;
  }

  /// Hodge symmetry, Serre duality, Lefschetz shape and nonnegativity.
  bool satisfies_invariants() const {
    for (int p = 0; p <= dim_; ++p)
      for (int q = 0; q <= dim_; ++q) {
        const auto& v = at(p, q);
        if (v < 0) return false;
        if (v != at(q, p) || v != at(dim_ - p, dim_ - q)) return false;
        if (p + q != dim_ && v != (p == q ? 1 : 0)) return false;
      }
    return true;
  }

  friend bool operator==(const HodgeTable&, const HodgeTable&) = default;

 private:
  int dim_;
  std::vector<std::vector<Integer>> entries_;
};

/// Topological Euler characteristic: Prod(d_i) times the h^{n-c} coefficient of (1+h)^{n+1}/Prod(1+d_i h).
inline Integer euler_char_ci(const CompleteIntersection& ci) {
  const auto order = static_cast<std::size_t>(ci.ambient_dim());
  using S = TruncatedSeries<Integer>;
  S one_plus_h = S::constant(order, 1) + S::monomial(order, 1, 1);
  S total = pow(one_plus_h, static_cast<unsigned>(ci.ambient_dim() + 1));
  for (int d : ci.degrees()) total *= (S::constant(order, 1) + S::monomial(order, d, 1)).inverse();
  return ci.degree() * total[static_cast<std::size_t>(ci.dimension())];
}

namespace detail {

using QSeries = TruncatedSeries<Rational>;

/// (1 - e^{-t})/t evaluated at t = k*h.
inline QSeries todd_inverse_factor(std::size_t order, long long k) {
  QSeries s(order);
  Rational term = 1;  // (-k)^j / j!
  for (std::size_t j = 0; j <= order; ++j) {
    s[j] = term / Rational(static_cast<long long>(j + 1));
    term *= Rational(-k);
    term /= Rational(static_cast<long long>(j + 1));
  }
  return s;
}

/// Chern character of Omega_Y in the K-theory of P^n, pulled back: (n+1)e^{-h} - 1 - sum e^{-d_i h}.
inline QSeries cotangent_chern_character(const CompleteIntersection& ci) {
  const auto order = static_cast<std::size_t>(ci.ambient_dim());
  QSeries ch = QSeries::exp_scaled(order, -1) * Rational(ci.ambient_dim() + 1);
  ch -= QSeries::constant(order, 1);
  for (int d : ci.degrees()) ch -= QSeries::exp_scaled(order, Rational(-d));
  return ch;
}

/// Chern characters of Lambda^p of a class, p = 0..max_p, via p*lambda^p = sum_k (-1)^{k-1} psi^k(x) lambda^{p-k}.
inline std::vector<QSeries> exterior_powers(const QSeries& ch, int max_p) {
  const auto order = ch.order();
  std::vector<QSeries> adams;
  adams.reserve(static_cast<std::size_t>(max_p) + 1);
  adams.push_back(QSeries(order));  // psi^0 unused
  for (int k = 1; k <= max_p; ++k) adams.push_back(ch.rescale(Rational(k)));

  std::vector<QSeries> lambda;
  lambda.push_back(QSeries::constant(order, 1));
  for (int p = 1; p <= max_p; ++p) {
    QSeries acc(order);
    for (int k = 1; k <= p; ++k) {
      QSeries term = adams[static_cast<std::size_t>(k)] * lambda[static_cast<std::size_t>(p - k)];
      if (k % 2) acc += term;
      else acc -= term;
    }
    lambda.push_back(acc * Rational(1, p));
  }
  return lambda;
}

/// td(T_Y) = Prod g(d_i h) / g(h)^{n+1}, g(t) = (1-e^{-t})/t.
inline QSeries todd_class(const CompleteIntersection& ci) {
  const auto order = static_cast<std::size_t>(ci.ambient_dim());
  QSeries td = pow(todd_inverse_factor(order, 1), static_cast<unsigned>(ci.ambient_dim() + 1)).inverse();
  for (int d : ci.degrees()) td *= todd_inverse_factor(order, d);
  return td;
}

/// Integral over Y of a class pulled back from P^n.
inline Rational integrate_over(const CompleteIntersection& ci, const QSeries& alpha) {
  return Rational(ci.degree()) * alpha[static_cast<std::size_t>(ci.dimension())];
}

}  // namespace detail

/// chi^p(Y) = chi(Y, Omega^p_Y) for p = 0..dim Y, by Hirzebruch-Riemann-Roch.
inline std::vector<Integer> holomorphic_euler_characteristics(const CompleteIntersection& ci) {
  const int dim = ci.dimension();
  const auto lambdas = detail::exterior_powers(detail::cotangent_chern_character(ci), dim);
  const auto td = detail::todd_class(ci);
  std::vector<Integer> chis;
  for (int p = 0; p <= dim; ++p) {
    Rational v = detail::integrate_over(ci, lambdas[static_cast<std::size_t>(p)] * td);
    if (boost::multiprecision::denominator(v) != 1)
      throw InvariantViolation("chi^" + std::to_string(p) + " of " + ci.label() + " is not integral: " + v.str());
    chis.push_back(boost::multiprecision::numerator(v));
  }
  return chis;
}

/// Full Hodge table: off-middle entries are those of P^n, the middle row is solved from chi^p.
inline HodgeTable hodge_numbers(const CompleteIntersection& ci) {
  const int dim = ci.dimension();
  const auto chis = holomorphic_euler_characteristics(ci);
  HodgeTable table(dim);
  for (int p = 0; p <= dim; ++p)
    for (int q = 0; q <= dim; ++q)
      if (p + q != dim) table.at(p, q) = (p == q) ? 1 : 0;
  for (int p = 0; p <= dim; ++p) {
    const int q = dim - p;
    // chi^p = (-1)^q h^{p,q} + (-1)^p [p != q]
    Integer rest = (p != q) ? Integer(p % 2 ? -1 : 1) : Integer(0);
    Integer middle = chis[static_cast<std::size_t>(p)] - rest;
    if (q % 2) middle = -middle;
    if (middle < 0)
      throw InvariantViolation("negative Hodge number h^{" + std::to_string(p) + "," + std::to_string(q) + "} for " +
                               ci.label());
    table.at(p, q) = middle;
  }
  if (!table.satisfies_invariants()) throw InvariantViolation("Hodge table of " + ci.label() + " breaks symmetry");
  return table;
}

}  // namespace fanohost
