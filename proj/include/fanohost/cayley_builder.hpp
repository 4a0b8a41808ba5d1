#pragma once

/**
 * @file cayley_builder.hpp
 * @brief Fano hosts of complete intersections via the Cayley trick.
 *
 * Y = s^{-1}(0) in S for a regular section s of a split bundle E of rank N
 * gives the hypersurface X = w^{-1}(0) in P(E^v) cut by the matching section
 * of the Serre class. Every builder returns a HostConstruction carrying the
 * data needed to check, by exact arithmetic, that X is Fano:
 *
 *  - GeneralCayley  any Y, S = P^{n+r}, E = O(1)^r (+) (+)O(d_i)
 *  - CYBlowup       Calabi-Yau hypersurface, S = P^{n+1}, E = O(1) (+) O(n+1)
 *  - CYDirect       Calabi-Yau of codim >= 2, S = P^n, E = (+)O(d_i)
 *  - Ouchi          Calabi-Yau of codim >= 3, S = the CI cut by the last c-2
 *                   equations, E = O(d_1) (+) O(d_2) restricted to S
 *
 * Smoothness of Y, of X and (for Ouchi) of S is assumed and recorded in
 * HostConstruction::assumptions.
 */

#include "fanohost/chow_ring.hpp"
#include "fanohost/complete_intersection.hpp"
#include "fanohost/split_bundle.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace fanohost {

enum class HostKind { GeneralCayley, CYDirect, CYBlowup, Ouchi };

inline std::string to_string(HostKind k) {
  switch (k) {
    case HostKind::GeneralCayley: return "GeneralCayley";
    case HostKind::CYDirect: return "CYDirect";
    case HostKind::CYBlowup: return "CYBlowup";
    case HostKind::Ouchi: return "Ouchi";
  }
  return "?";
}

inline HostKind host_kind_from_string(const std::string& s) {
  for (auto k : {HostKind::GeneralCayley, HostKind::CYDirect, HostKind::CYBlowup, HostKind::Ouchi})
    if (to_string(k) == s) return k;
  throw InvalidInput("unknown host kind '" + s + "'");
}

/// The base S: a projective space P^dim, or a complete intersection.
struct BaseSpace {
  int dim = 0;
  std::optional<CompleteIntersection> ci;

  static BaseSpace projective(int d) { return {d, std::nullopt}; }
  static BaseSpace complete_intersection(const CompleteIntersection& c) { return {c.dimension(), c}; }

  bool is_projective_space() const { return !ci.has_value(); }

  /// K_S = O_S(canonical_twist()).
  int canonical_twist() const { return ci ? ci->canonical_twist() : -(dim + 1); }

  std::string label() const { return ci ? ci->label() : "P^" + std::to_string(dim); }

  friend bool operator==(const BaseSpace&, const BaseSpace&) = default;
};

struct HostConstruction {
  HostKind kind = HostKind::GeneralCayley;
  CompleteIntersection visitor = make_ci(1, {1});
  std::optional<int> r;  // only for GeneralCayley
  BaseSpace base;
  std::vector<std::int64_t> twists;
  std::optional<SplitProjBundle> bundle;  // absent for Ouchi hosts
  int dim_x = 0;
  DivisorClass anti_canonical;    // E-coordinates (xi_E, h)
  DivisorClass anti_canonical_f;  // F = E(-1) coordinates, xi_F = xi_E - h
  bool fano = false;
  std::vector<std::int64_t> curve_degrees;  // Fiber, Section(1..N); empty without a toric ambient
  bool lemma31 = false;                     // sufficient criterion: (K_S + det E)^{-1} nef and E ample
  bool blowup = false;                      // rank E = 2: X is the blowup of S along Y
  std::vector<std::string> assumptions;

  int rank() const { return static_cast<int>(twists.size()); }
};

struct Unsupported {
  std::string reason;
};

/// Least positive r with r > d - n - c and r > 1 - c.
inline int minimal_r(const CompleteIntersection& ci) {
  const int n = ci.ambient_dim(), c = ci.codim(), d = ci.degree_sum();
  return std::max({1, d - n - c + 1, 2 - c});
}

/// The inequality test of the general construction: r > d - n - c and r > 1 - c.
inline bool inequality_certificate(const CompleteIntersection& ci, int r) {
  const int n = ci.ambient_dim(), c = ci.codim(), d = ci.degree_sum();
  return r > d - n - c && r > 1 - c;
}

/// X is Fano if K_S (x) det E is anti-nef and every summand of E is ample.
inline bool lemma31_check(int base_canonical_twist, const std::vector<std::int64_t>& twists) {
  const std::int64_t det = std::accumulate(twists.begin(), twists.end(), std::int64_t{0});
  const bool anti_nef = base_canonical_twist + det <= 0;
  const bool ample = std::all_of(twists.begin(), twists.end(), [](std::int64_t a) { return a > 0; });
  return anti_nef && ample;
}

inline bool lemma31_check(const BaseSpace& base, const std::vector<std::int64_t>& twists) {
  return lemma31_check(base.canonical_twist(), twists);
}

/// -K_X = -(K_P + xi) by adjunction.
inline DivisorClass adjunction_anti_canonical(const SplitProjBundle& P) {
  return -(canonical_class(P) + DivisorClass{1, 0});
}

namespace detail {

inline std::vector<std::string> base_assumptions() {
  return {"Y is smooth (assumed, not verified)",
          "the section s of E cutting out Y is regular (general choice)",
          "X = w^{-1}(0) is smooth (local calculation, assumed)"};
}

/// Fills the fields shared by every host over a projective-space base.
inline HostConstruction bundle_host(HostKind kind, const CompleteIntersection& ci, int base_dim,
                                    std::vector<std::int64_t> twists) {
  HostConstruction h;
  h.kind = kind;
  h.visitor = ci;
  h.base = BaseSpace::projective(base_dim);
  h.twists = twists;
  h.bundle = SplitProjBundle::make(base_dim, std::move(twists));
  h.dim_x = base_dim + h.rank() - 2;
  h.anti_canonical = adjunction_anti_canonical(*h.bundle);
  const auto f = twist_translate(*h.bundle, -1);
  h.anti_canonical_f = f.map(h.anti_canonical);
  h.curve_degrees = curve_degrees(f.bundle, h.anti_canonical_f);
  h.fano = is_ample(f.bundle, h.anti_canonical_f);
  h.lemma31 = lemma31_check(h.base, h.twists);
  h.blowup = h.rank() == 2;
  h.assumptions = base_assumptions();
  return h;
}

}  // namespace detail

/// Structural invariants every host must satisfy; throws InvariantViolation otherwise.
inline void validate_host(const HostConstruction& h) {
  auto fail = [&](const std::string& what) {
    throw InvariantViolation(to_string(h.kind) + " host of " + h.visitor.label() + ": " + what);
  };
  if (h.dim_x != h.base.dim + h.rank() - 2) fail("dim X != dim S + rank E - 2");
  if (h.visitor.dimension() != h.base.dim - h.rank()) fail("dim Y != dim S - rank E");
  if (ClassMap{-1}(h.anti_canonical) != h.anti_canonical_f) fail("E- and F-coordinate anticanonical classes disagree");
  if (h.blowup != (h.rank() == 2)) fail("blowup annotation does not match rank E = 2");
  if (h.bundle) {
    if (adjunction_anti_canonical(*h.bundle) != h.anti_canonical) fail("anticanonical class breaks adjunction");
    if (curve_degrees(*h.bundle, h.anti_canonical) != h.curve_degrees)
      fail("curve degrees change under E -> E(-1)");
  }
}

/// General construction over S = P^{n+r}; r defaults to minimal_r. Sub-threshold r yields fano = false.
inline HostConstruction build_general_host(const CompleteIntersection& ci, std::optional<int> r = std::nullopt) {
  const int rr = r.value_or(minimal_r(ci));
  if (rr <= 0) throw InvalidInput("r must be a positive integer (got " + std::to_string(rr) + ")");
  std::vector<std::int64_t> twists(static_cast<std::size_t>(rr), 1);
  for (int d : ci.degrees()) twists.push_back(d);
  auto h = detail::bundle_host(HostKind::GeneralCayley, ci, ci.ambient_dim() + rr, std::move(twists));
  h.r = rr;
  validate_host(h);
  return h;
}

/// Calabi-Yau hosts: blowup of P^{n+1} for hypersurfaces, the direct bundle over P^n otherwise.
inline HostConstruction build_cy_host(const CompleteIntersection& ci) {
  if (!ci.is_calabi_yau())
    throw InvalidInput(ci.label() + " is not Calabi-Yau (canonical twist " + std::to_string(ci.canonical_twist()) +
                       " != 0)");
  HostConstruction h;
  if (ci.codim() == 1) {
    h = detail::bundle_host(HostKind::CYBlowup, ci, ci.ambient_dim() + 1, {1, ci.ambient_dim() + 1});
  } else {
    std::vector<std::int64_t> twists(ci.degrees().begin(), ci.degrees().end());
    h = detail::bundle_host(HostKind::CYDirect, ci, ci.ambient_dim(), std::move(twists));
  }
  if (h.lemma31 != h.fano || !h.fano)
    throw InvariantViolation("Calabi-Yau host of " + ci.label() + ": sufficient criterion and curve degrees disagree");
  validate_host(h);
  return h;
}

/// Blowup of the Fano complete intersection cut by the last c-2 equations, along Y.
inline std::variant<HostConstruction, Unsupported> build_ouchi_host(const CompleteIntersection& ci) {
  if (!ci.is_calabi_yau()) return Unsupported{ci.label() + " is not Calabi-Yau"};
  if (ci.codim() < 3)
    return Unsupported{ci.label() + " has codimension " + std::to_string(ci.codim()) +
                       " < 3; the Calabi-Yau host already has dimension dim Y + 2"};
  const auto& d = ci.degrees();
  const auto base_ci = make_ci(ci.ambient_dim(), std::vector<int>(d.begin() + 2, d.end()));
  if (base_ci.canonical_twist() >= 0) throw InvariantViolation("Ouchi base " + base_ci.label() + " is not Fano");

  HostConstruction h;
  h.kind = HostKind::Ouchi;
  h.visitor = ci;
  h.base = BaseSpace::complete_intersection(base_ci);
  h.twists = {d[0], d[1]};
  h.dim_x = ci.dimension() + 2;
  // K_S + det E = O_S(0): -K_X = xi
  h.anti_canonical = {1, -(base_ci.canonical_twist() + d[0] + d[1])};
  h.anti_canonical_f = ClassMap{-1}(h.anti_canonical);
  h.lemma31 = lemma31_check(h.base, h.twists);
  h.fano = h.lemma31;
  h.blowup = true;
  h.assumptions = detail::base_assumptions();
  h.assumptions.push_back("the base S = " + base_ci.label() + " cut out by the last " + std::to_string(ci.codim() - 2) +
                          " equations is smooth (Y general)");
  validate_host(h);
  return h;
}

/// Every applicable construction, in a fixed order: general (minimal r), Calabi-Yau, Ouchi.
inline std::vector<HostConstruction> candidate_hosts(const CompleteIntersection& ci) {
  std::vector<HostConstruction> out{build_general_host(ci)};
  if (ci.is_calabi_yau()) {
    out.push_back(build_cy_host(ci));
    if (auto o = build_ouchi_host(ci); std::holds_alternative<HostConstruction>(o))
      out.push_back(std::get<HostConstruction>(std::move(o)));
  }
  return out;
}

struct FanoDimensionBound {
  int bound = 0;                              // upper bound on the Fano dimension
  std::vector<HostConstruction> candidates;   // all constructions considered
  std::vector<std::size_t> best;              // indices into candidates attaining the bound
  std::vector<std::string> notes;
};

inline FanoDimensionBound fano_dimension_upper_bound(const CompleteIntersection& ci) {
  FanoDimensionBound out;
  out.candidates = candidate_hosts(ci);
  std::optional<int> best;
  for (const auto& h : out.candidates)
    if (h.fano && (!best || h.dim_x < *best)) best = h.dim_x;
  if (!best) throw InvariantViolation("no Fano host found for " + ci.label());
  out.bound = *best;
  for (std::size_t i = 0; i < out.candidates.size(); ++i)
    if (out.candidates[i].fano && out.candidates[i].dim_x == out.bound) out.best.push_back(i);
  out.notes.push_back("upper bound: the Fano dimension is the minimum over all Fano hosts, not only these");
  if (ci.dimension() == 1 && ci.is_calabi_yau() && out.bound == 3)
    out.notes.push_back(
        "exact for genus-one curves: K-groups of Fano surfaces are finitely generated, those of elliptic curves are not");
  return out;
}

}  // namespace fanohost
