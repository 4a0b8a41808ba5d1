#pragma once

/**
 * @file split_bundle.hpp
 * @brief The projective bundle P(E^v) = Proj Sym E over P^m for split E = (+) O(a_i).
 *
 * Pic is free of rank 2 on the Serre class xi (H^0(xi) = H^0(E)) and the
 * pulled-back hyperplane class h. Positivity is decided by the toric Kleiman
 * criterion on the torus-invariant curves:
 *
 *   Fiber       a line in a fiber           xi.Fiber = 1,     h.Fiber = 0
 *   Section(i)  the section over a line     xi.Section(i) = a_i, h.Section(i) = 1
 *               given by the i-th summand
 *
 * The table is cross-checked against Chow-ring integration in chow_ring.hpp.
 */

#include "fanohost/series.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

namespace fanohost {

struct DivisorClass {
  std::int64_t xi = 0;
  std::int64_t hh = 0;

  friend DivisorClass operator+(DivisorClass a, DivisorClass b) { return {a.xi + b.xi, a.hh + b.hh}; }
  friend DivisorClass operator-(DivisorClass a, DivisorClass b) { return {a.xi - b.xi, a.hh - b.hh}; }
  friend DivisorClass operator-(DivisorClass a) { return {-a.xi, -a.hh}; }
  friend DivisorClass operator*(std::int64_t k, DivisorClass a) { return {k * a.xi, k * a.hh}; }
  friend bool operator==(const DivisorClass&, const DivisorClass&) = default;

  std::string str() const {
    std::ostringstream os;
    os << xi << "xi" << (hh < 0 ? "-" : "+") << (hh < 0 ? -hh : hh) << "h";
    return os.str();
  }
};

struct Fiber {
  friend bool operator==(const Fiber&, const Fiber&) = default;
};

/// Section over a line of the i-th summand, 1-based.
struct Section {
  int index = 1;
  friend bool operator==(const Section&, const Section&) = default;
};

using CurveClass = std::variant<Fiber, Section>;

class SplitProjBundle {
 public:
  static SplitProjBundle make(int m, std::vector<std::int64_t> twists) {
    if (m < 1) throw InvalidInput("base dimension m must be at least 1 (got " + std::to_string(m) + ")");
    if (twists.size() < 2) throw InvalidInput("bundle rank must be at least 2");
    return SplitProjBundle(m, std::move(twists));
  }

  int base_dim() const { return m_; }
  const std::vector<std::int64_t>& twists() const { return twists_; }
  int rank() const { return static_cast<int>(twists_.size()); }
  int dimension() const { return m_ + rank() - 1; }
  std::int64_t twist_sum() const { return std::accumulate(twists_.begin(), twists_.end(), std::int64_t{0}); }

  std::string label() const {
    std::ostringstream os;
    os << "P(";
    for (std::size_t i = 0; i < twists_.size(); ++i) os << (i ? "+" : "") << "O(" << twists_[i] << ")";
    os << ")^v over P^" << m_;
    return os.str();
  }

  friend bool operator==(const SplitProjBundle&, const SplitProjBundle&) = default;

 private:
  SplitProjBundle(int m, std::vector<std::int64_t> twists) : m_(m), twists_(std::move(twists)) {}

  int m_;
  std::vector<std::int64_t> twists_;
};

/// Fiber first, then Section(1..N).
inline std::vector<CurveClass> invariant_curves(const SplitProjBundle& P) {
  std::vector<CurveClass> curves{Fiber{}};
  for (int i = 1; i <= P.rank(); ++i) curves.emplace_back(Section{i});
  return curves;
}

inline std::int64_t pairing(const SplitProjBundle& P, const DivisorClass& L, const CurveClass& C) {
  if (const auto* s = std::get_if<Section>(&C)) {
    if (s->index < 1 || s->index > P.rank())
      throw InvalidInput("section index " + std::to_string(s->index) + " out of range");
    return L.xi * P.twists()[static_cast<std::size_t>(s->index - 1)] + L.hh;
  }
  return L.xi;
}

/// Degrees of L on invariant_curves(P), in that order.
inline std::vector<std::int64_t> curve_degrees(const SplitProjBundle& P, const DivisorClass& L) {
  std::vector<std::int64_t> out;
  for (const auto& c : invariant_curves(P)) out.push_back(pairing(P, L, c));
  return out;
}

inline bool is_nef(const SplitProjBundle& P, const DivisorClass& L) {
  const auto deg = curve_degrees(P, L);
  return std::all_of(deg.begin(), deg.end(), [](std::int64_t v) { return v >= 0; });
}

inline bool is_ample(const SplitProjBundle& P, const DivisorClass& L) {
  const auto deg = curve_degrees(P, L);
  return std::all_of(deg.begin(), deg.end(), [](std::int64_t v) { return v > 0; });
}

/// K = -N xi + (sum a_i - m - 1) h.
inline DivisorClass canonical_class(const SplitProjBundle& P) {
  return {-static_cast<std::int64_t>(P.rank()), P.twist_sum() - P.base_dim() - 1};
}

/**
 * Lattice isomorphism induced by E -> E(t): the two bundles have the same
 * total space, with xi_{E(t)} = xi_E + t h. Classes written in E-coordinates
 * are rewritten in E(t)-coordinates.
 */
struct ClassMap {
  std::int64_t shift = 0;

  DivisorClass operator()(const DivisorClass& old_coords) const {
    return {old_coords.xi, old_coords.hh - shift * old_coords.xi};
  }
  DivisorClass inverse(const DivisorClass& new_coords) const {
    return {new_coords.xi, new_coords.hh + shift * new_coords.xi};
  }
};

struct TwistedBundle {
  SplitProjBundle bundle;
  ClassMap map;
};

inline TwistedBundle twist_translate(const SplitProjBundle& P, std::int64_t t) {
  auto twists = P.twists();
  for (auto& a : twists) a += t;
  return {SplitProjBundle::make(P.base_dim(), std::move(twists)), ClassMap{t}};
}

}  // namespace fanohost
