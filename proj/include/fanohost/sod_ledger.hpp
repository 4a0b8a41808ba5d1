#pragma once

/**
 * @file sod_ledger.hpp
 * @brief Bookkeeping for the semiorthogonal decomposition each host inherits.
 *
 * Over a projective-space base P^s a host of rank N carries
 *   D^b(X) = < D^b(P^s), D^b(P^s)(1), ..., D^b(P^s)(N-2), D^b(Y) >,
 * i.e. N-1 Beilinson blocks of s+1 exceptional objects followed by D^b(Y).
 * Ouchi hosts are blowups of a Fano complete intersection S along Y:
 *   D^b(X) = < D^b(S), D^b(Y) >.
 *
 * Hochschild homology and the topological Euler characteristic are additive
 * over such decompositions; euler_consistency compares the additive
 * prediction against the Chow-ring computation of chi(X).
 */

#include "fanohost/cayley_builder.hpp"
#include "fanohost/chow_ring.hpp"
#include "fanohost/complete_intersection.hpp"

#include <algorithm>
#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace fanohost {

struct ExceptionalBlock {
  int count = 0;
  std::string label;
  friend bool operator==(const ExceptionalBlock&, const ExceptionalBlock&) = default;
};

/// A component with no exceptional collection asserted (D^b of a CI base).
struct OpaqueBlock {
  CompleteIntersection base;
  friend bool operator==(const OpaqueBlock&, const OpaqueBlock&) = default;
};

struct VisitorBlock {
  CompleteIntersection ci;
  friend bool operator==(const VisitorBlock&, const VisitorBlock&) = default;
};

using SodBlock = std::variant<ExceptionalBlock, OpaqueBlock, VisitorBlock>;

struct SODSummary {
  std::vector<SodBlock> blocks;

  int exceptional_count() const {
    int total = 0;
    for (const auto& b : blocks)
      if (const auto* e = std::get_if<ExceptionalBlock>(&b)) total += e->count;
    return total;
  }

  int visitor_blocks() const {
    return static_cast<int>(std::count_if(blocks.begin(), blocks.end(),
                                          [](const SodBlock& b) { return std::holds_alternative<VisitorBlock>(b); }));
  }

  friend bool operator==(const SODSummary&, const SODSummary&) = default;
};

inline SODSummary sod_of_host(const HostConstruction& host) {
  SODSummary sod;
  if (host.kind == HostKind::Ouchi) {
    sod.blocks.emplace_back(OpaqueBlock{*host.base.ci});
  } else {
    const int s = host.base.dim;
    for (int k = 0; k + 1 < host.rank(); ++k)
      sod.blocks.emplace_back(ExceptionalBlock{s + 1, "q*D^b(P^" + std::to_string(s) + ")(" + std::to_string(k) + ")"});
  }
  sod.blocks.emplace_back(VisitorBlock{host.visitor});
  return sod;
}

/// HH_k for |k| <= span, stored with offset span.
struct HochschildVector {
  int span = 0;
  std::vector<Integer> values;

  explicit HochschildVector(int s = 0) : span(s), values(static_cast<std::size_t>(2 * s + 1)) {}

  Integer at(int k) const {
    if (k < -span || k > span) return 0;
    return values[static_cast<std::size_t>(k + span)];
  }
  void add(int k, const Integer& v) {
    if (k < -span || k > span) throw std::out_of_range("Hochschild degree out of range");
    values[static_cast<std::size_t>(k + span)] += v;
  }

  /// sum (-1)^k HH_k = chi_top.
  Integer alternating_sum() const {
    Integer s = 0;
    for (int k = -span; k <= span; ++k) s += (k % 2 ? -1 : 1) * at(k);
    return s;
  }
};

namespace detail {

inline void add_hodge_diagonals(HochschildVector& hh, const HodgeTable& t) {
  for (int k = -t.dim(); k <= t.dim(); ++k) hh.add(k, t.diagonal_sum(k));
}

}  // namespace detail

/// Predicted HH_*(X) from the blocks: exceptional objects contribute to HH_0, D^b(Y) its Hodge diagonals.
inline HochschildVector hh_prediction(const HostConstruction& host) {
  const HodgeTable y = hodge_numbers(host.visitor);
  if (host.kind == HostKind::Ouchi) {
    const HodgeTable s = hodge_numbers(*host.base.ci);
    HochschildVector hh(std::max(y.dim(), s.dim()));
    detail::add_hodge_diagonals(hh, s);
    detail::add_hodge_diagonals(hh, y);
    return hh;
  }
  HochschildVector hh(y.dim());
  hh.add(0, sod_of_host(host).exceptional_count());
  detail::add_hodge_diagonals(hh, y);
  return hh;
}

struct EulerCheck {
  std::optional<Integer> lhs;  // chi(X) from the Chow ring
  std::optional<Integer> rhs;  // additive prediction from the blocks
  std::optional<bool> pass;    // empty when skipped
  std::string status;
};

inline EulerCheck euler_consistency(const HostConstruction& host) {
  if (!host.bundle) return {std::nullopt, std::nullopt, std::nullopt, "skipped: no independent lhs available"};
  EulerCheck out;
  out.lhs = euler_char_hypersurface(*host.bundle);
  out.rhs = Integer(host.rank() - 1) * (host.base.dim + 1) + euler_char_ci(host.visitor);
  out.pass = *out.lhs == *out.rhs;
  out.status = *out.pass ? "pass" : "fail";
  return out;
}

}  // namespace fanohost
