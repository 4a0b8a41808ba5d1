#pragma once

/**
 * @file chow_ring.hpp
 * @brief Exact intersection theory on a split projective bundle over P^m.
 *
 * A^*(P(E^v)) = Z[h, xi] / (h^{m+1}, Prod_i (xi - a_i h)), with the degree map
 * normalized by  deg(h^m xi^{N-1}) = 1.  Elements are stored densely in the
 * monomial basis h^p xi^q, 0 <= p <= m, 0 <= q <= N-1.
 *
 * This module is the independent oracle for the closed-form pairing table of
 * split_bundle.hpp and for Euler characteristics of hypersurfaces in |xi|.
 */

#include "fanohost/split_bundle.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <vector>

namespace fanohost {

class ChowElement {
 public:
  static ChowElement zero(const SplitProjBundle& P) { return ChowElement(P); }

  static ChowElement one(const SplitProjBundle& P) { return monomial(P, 0, 0, 1); }

  /// c * h^p xi^q, reduced (so out-of-range exponents are rewritten or vanish).
  static ChowElement monomial(const SplitProjBundle& P, int p, int q, const Integer& c) {
    if (p < 0 || q < 0) throw InvalidInput("negative exponent in Chow monomial");
    ChowElement e(P);
    if (p > P.base_dim()) return e;
    if (q < P.rank()) {
      e.ref(p, q) = c;
      return e;
    }
    ChowElement xi_power = one(P);
    for (int k = 0; k < q; ++k) xi_power = xi_power * xi(P);
    return xi_power * monomial(P, p, 0, c);
  }

  static ChowElement h(const SplitProjBundle& P) { return monomial(P, 1, 0, 1); }
  static ChowElement xi(const SplitProjBundle& P) {
    ChowElement e(P);
    e.ref(0, 1) = 1;
    return e;
  }

  static ChowElement divisor(const SplitProjBundle& P, const DivisorClass& L) {
    ChowElement e(P);
    e.ref(0, 1) = L.xi;
    e.ref(1, 0) = L.hh;
    return e;
  }

  const SplitProjBundle& bundle() const { return bundle_; }

  const Integer& at(int p, int q) const { return coeffs_.at(index(p, q)); }

  /// Component of total degree k (p + q = k).
  ChowElement homogeneous_part(int k) const {
    ChowElement out(bundle_);
    for (int p = 0; p <= bundle_.base_dim(); ++p) {
      int q = k - p;
      if (q >= 0 && q < bundle_.rank()) out.ref(p, q) = at(p, q);
    }
    return out;
  }

  bool is_zero() const {
    for (const auto& c : coeffs_)
      if (c != 0) return false;
    return true;
  }

  ChowElement& operator+=(const ChowElement& o) {
    check_same(o);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    return *this;
  }
  ChowElement& operator-=(const ChowElement& o) {
    check_same(o);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
    return *this;
  }
  ChowElement& operator*=(const Integer& k) {
    for (auto& c : coeffs_) c *= k;
    return *this;
  }

  friend ChowElement operator+(ChowElement a, const ChowElement& b) { return a += b; }
  friend ChowElement operator-(ChowElement a, const ChowElement& b) { return a -= b; }
  friend ChowElement operator*(ChowElement a, const Integer& k) { return a *= k; }
  friend ChowElement operator*(const Integer& k, ChowElement a) { return a *= k; }

  friend ChowElement operator*(const ChowElement& x, const ChowElement& y) {
    x.check_same(y);
    const SplitProjBundle& P = x.bundle_;
    const int m = P.base_dim();
    const int N = P.rank();
    // h-degree is truncated at m right away; xi-degree up to 2N-2 waits for the relation.
    const int qmax = 2 * N - 2;
    std::vector<Integer> buf(static_cast<std::size_t>((m + 1) * (qmax + 1)));
    auto slot = [&](int p, int q) -> Integer& { return buf[static_cast<std::size_t>(p * (qmax + 1) + q)]; };

    const ChowElement& sparse = x.nonzeros() <= y.nonzeros() ? x : y;
    const ChowElement& dense = (&sparse == &x) ? y : x;
    for (int p1 = 0; p1 <= m; ++p1)
      for (int q1 = 0; q1 < N; ++q1) {
        const Integer& a = sparse.at(p1, q1);
        if (a == 0) continue;
        for (int p2 = 0; p1 + p2 <= m; ++p2)
          for (int q2 = 0; q2 < N; ++q2) {
            const Integer& b = dense.at(p2, q2);
            if (b != 0) slot(p1 + p2, q1 + q2) += a * b;
          }
      }

    // xi^N = sum_{k=1..N} (-1)^{k+1} e_k(a) h^k xi^{N-k}
    const auto relation = x.relation_coefficients();
    for (int q = qmax; q >= N; --q)
      for (int p = 0; p <= m; ++p) {
        Integer c = slot(p, q);
        if (c == 0) continue;
        slot(p, q) = 0;
        for (int k = 1; k <= N && p + k <= m; ++k) slot(p + k, q - k) += c * relation[static_cast<std::size_t>(k)];
      }

    ChowElement out(P);
    for (int p = 0; p <= m; ++p)
      for (int q = 0; q < N; ++q) out.ref(p, q) = slot(p, q);
    return out;
  }

  friend bool operator==(const ChowElement&, const ChowElement&) = default;

 private:
  explicit ChowElement(const SplitProjBundle& P)
      : bundle_(P), coeffs_(static_cast<std::size_t>((P.base_dim() + 1) * P.rank())) {}

  std::size_t index(int p, int q) const {
    if (p < 0 || p > bundle_.base_dim() || q < 0 || q >= bundle_.rank())
      throw std::out_of_range("Chow monomial exponent out of range");
    return static_cast<std::size_t>(p * bundle_.rank() + q);
  }
  Integer& ref(int p, int q) { return coeffs_.at(index(p, q)); }

  std::size_t nonzeros() const {
    return static_cast<std::size_t>(std::count_if(coeffs_.begin(), coeffs_.end(), [](const Integer& c) { return c != 0; }));
  }

  void check_same(const ChowElement& o) const {
    if (!(bundle_ == o.bundle_)) throw InvalidInput("Chow elements live on different bundles");
  }

  /// Entry k is (-1)^{k+1} e_k(a_1..a_N); entry 0 unused.
  std::vector<Integer> relation_coefficients() const {
    const int N = bundle_.rank();
    std::vector<Integer> e(static_cast<std::size_t>(N + 1));
    e[0] = 1;
    for (auto a : bundle_.twists())
      for (int k = N; k >= 1; --k) e[static_cast<std::size_t>(k)] += e[static_cast<std::size_t>(k - 1)] * a;
    for (int k = 1; k <= N; ++k)
      if (k % 2 == 0) e[static_cast<std::size_t>(k)] = -e[static_cast<std::size_t>(k)];
    return e;
  }

  SplitProjBundle bundle_;
  std::vector<Integer> coeffs_;
};

inline ChowElement mul(const ChowElement& x, const ChowElement& y) { return x * y; }

/// Degree map: coefficient of h^m xi^{N-1}.
inline Integer integrate(const ChowElement& x) {
  const auto& P = x.bundle();
  return x.at(P.base_dim(), P.rank() - 1);
}

inline ChowElement power(const ChowElement& x, int k) {
  ChowElement r = ChowElement::one(x.bundle());
  for (int i = 0; i < k; ++i) r = r * x;
  return r;
}

/// Cycle class of an invariant curve: Fiber = h^m xi^{N-2}, Section(i) = h^{m-1} Prod_{j != i}(xi - a_j h).
inline ChowElement curve_cycle(const SplitProjBundle& P, const CurveClass& C) {
  const int m = P.base_dim();
  if (const auto* s = std::get_if<Section>(&C)) {
    if (s->index < 1 || s->index > P.rank()) throw InvalidInput("section index out of range");
    ChowElement cyc = ChowElement::monomial(P, m - 1, 0, 1);
    for (int j = 1; j <= P.rank(); ++j) {
      if (j == s->index) continue;
      cyc = cyc * ChowElement::divisor(P, {1, -P.twists()[static_cast<std::size_t>(j - 1)]});
    }
    return cyc;
  }
  return ChowElement::monomial(P, m, P.rank() - 2, 1);
}

/// Total Chern class of T_P: (1+h)^{m+1} Prod_i (1 + xi - a_i h).
inline ChowElement chern_tangent(const SplitProjBundle& P) {
  const ChowElement one = ChowElement::one(P);
  ChowElement c = one;
  const ChowElement base_factor = one + ChowElement::h(P);
  for (int i = 0; i <= P.base_dim(); ++i) c = c * base_factor;
  for (auto a : P.twists()) c = c * (one + ChowElement::divisor(P, {1, -a}));
  return c;
}

/**
 * Topological Euler characteristic of a smooth hypersurface X in |D|:
 * deg( [c(T_P) / (1 + D)]_{dim X} . D ). D defaults to the Serre class xi;
 * pass the translated class when working in twisted coordinates.
 */
inline Integer euler_char_hypersurface(const SplitProjBundle& P, const DivisorClass& D = {1, 0}) {
  const int dim_x = P.dimension() - 1;
  const ChowElement d = ChowElement::divisor(P, D);
  const ChowElement minus_d = ChowElement::divisor(P, -D);
  // c(T_P) * sum_k (-D)^k, the series stops by itself past dim P
  ChowElement term = chern_tangent(P);
  ChowElement total = term;
  for (int k = 1; k <= P.dimension(); ++k) {
    term = term * minus_d;
    total += term;
  }
  return integrate(total.homogeneous_part(dim_x) * d);
}

/// (-K_X)^{dim X} for X in |D|: deg(antiK^{dim X} . D).
inline Integer anticanonical_degree(const SplitProjBundle& P, const DivisorClass& anti_k, const DivisorClass& D = {1, 0}) {
  const int dim_x = P.dimension() - 1;
  return integrate(power(ChowElement::divisor(P, anti_k), dim_x) * ChowElement::divisor(P, D));
}

/// Largest q with anti_k / q an ample integral class of the ambient lattice.
inline std::int64_t fano_index(const SplitProjBundle& P, const DivisorClass& anti_k) {
  if (!is_ample(P, anti_k)) throw InvalidInput("class " + anti_k.str() + " is not ample on " + P.label());
  // curve degrees of anti_k / q are those of anti_k divided by q > 0, so every divisor qualifies
  return std::gcd(anti_k.xi, anti_k.hh);
}

}  // namespace fanohost
