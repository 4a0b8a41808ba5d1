#pragma once

/**
 * @file cli.hpp
 * @brief The `fanohost` command line: build, verify and bound subcommands.
 *
 * run_cli is the whole program minus process plumbing, so it can be driven
 * from tests with in-memory streams.
 *
 * Exit codes: 0 success, 2 bad input, 3 the requested construction is not
 * Fano, 4 internal invariant violation.
 */

#include "fanohost/cayley_builder.hpp"
#include "fanohost/chow_ring.hpp"
#include "fanohost/report.hpp"
#include "fanohost/sod_ledger.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <atomic>
#include <exception>
#include <functional>
#include <iostream>
#include <mutex>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

namespace fanohost {

enum ExitCode : int { kOk = 0, kBadInput = 2, kNotFano = 3, kInvariantViolation = 4 };

enum class BuildMode { Auto, General, CY, Ouchi, Blowup };

struct InstanceOptions {
  int n = 0;
  std::string degrees;
  std::string mode = "auto";
  std::optional<int> r;
  std::string format = "text";
};

inline std::vector<int> parse_degree_list(const std::string& text) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(item, &used);
    } catch (const std::exception&) {
      throw InvalidInput("malformed degree list '" + text + "'");
    }
    if (used != item.size()) throw InvalidInput("malformed degree list '" + text + "'");
    out.push_back(v);
  }
  if (out.empty()) throw InvalidInput("empty degree list");
  return out;
}

inline BuildMode parse_mode(const std::string& s) {
  if (s == "auto") return BuildMode::Auto;
  if (s == "general") return BuildMode::General;
  if (s == "cy") return BuildMode::CY;
  if (s == "ouchi") return BuildMode::Ouchi;
  if (s == "blowup") return BuildMode::Blowup;
  throw InvalidInput("unknown mode '" + s + "'");
}

/// Hosts requested by a mode. Auto returns every applicable construction.
inline std::vector<HostConstruction> hosts_for_mode(const CompleteIntersection& ci, BuildMode mode, std::optional<int> r) {
  if (r && *r <= 0) throw InvalidInput("--r must be a positive integer");
  switch (mode) {
    case BuildMode::Auto: {
      auto hosts = candidate_hosts(ci);
      if (r) hosts.front() = build_general_host(ci, r);
      return hosts;
    }
    case BuildMode::General: return {build_general_host(ci, r)};
    case BuildMode::CY: return {build_cy_host(ci)};
    case BuildMode::Ouchi: {
      auto o = build_ouchi_host(ci);
      if (auto* u = std::get_if<Unsupported>(&o)) throw InvalidInput("ouchi construction unsupported: " + u->reason);
      return {std::get<HostConstruction>(std::move(o))};
    }
    case BuildMode::Blowup: {
      // the rank-2 construction: hypersurfaces use r = 1, Calabi-Yau of codim 2 the direct host, codim >= 3 Ouchi
      if (ci.codim() == 1) return {ci.is_calabi_yau() ? build_cy_host(ci) : build_general_host(ci, 1)};
      if (!ci.is_calabi_yau())
        throw InvalidInput("blowup mode needs a hypersurface or a Calabi-Yau complete intersection");
      if (ci.codim() == 2) return {build_cy_host(ci)};
      return hosts_for_mode(ci, BuildMode::Ouchi, std::nullopt);
    }
  }
  throw InvalidInput("unknown mode");
}

inline ReportDocument build_report(const CompleteIntersection& ci, const std::vector<HostConstruction>& hosts) {
  ReportDocument doc;
  doc.visitor = make_visitor_report(ci);
  for (const auto& h : hosts) doc.hosts.push_back(make_host_report(h));
  for (std::size_t i = 0; i < hosts.size(); ++i)
    if (hosts[i].fano && (!doc.selected || hosts[i].dim_x < hosts[*doc.selected].dim_x)) doc.selected = i;
  if (doc.selected) doc.bound = hosts[*doc.selected].dim_x;
  return doc;
}

/// One verification line.
struct CheckResult {
  std::string name;
  bool pass = false;
  std::string detail;
};

/// The invariant battery for one instance and its requested hosts.
inline std::vector<CheckResult> verify_instance(const CompleteIntersection& ci, const std::vector<HostConstruction>& hosts) {
  std::vector<CheckResult> out;
  const auto table = hodge_numbers(ci);
  const auto chi = euler_char_ci(ci);
  out.push_back({"hodge_euler", table.euler_characteristic() == chi,
                 to_string(table.euler_characteristic()) + " = " + to_string(chi)});
  out.push_back({"hodge_shape", table.satisfies_invariants(), "symmetry, Serre duality, Lefschetz"});

  int disagreements = 0, cases = 0;
  for (int r = 1; r <= minimal_r(ci) + 3; ++r, ++cases)
    if (inequality_certificate(ci, r) != build_general_host(ci, r).fano) ++disagreements;
  out.push_back({"certificate_sweep", disagreements == 0,
                 std::to_string(cases - disagreements) + "/" + std::to_string(cases) + " values of r agree"});

  for (const auto& h : hosts) {
    const std::string tag = to_string(h.kind) + (h.r ? "(r=" + std::to_string(*h.r) + ")" : "");
    out.push_back({tag + " certificate_agreement", certificate_agreement(h), "fano=" + std::string(h.fano ? "true" : "false")});
    out.push_back({tag + " coordinate_change", coordinate_change_holds(h), h.anti_canonical.str() + " -> " + h.anti_canonical_f.str()});
    if (auto adj = adjunction_holds(h)) out.push_back({tag + " adjunction", *adj, "-K_X = " + h.anti_canonical.str()});
    const auto e = euler_consistency(h);
    if (e.pass)
      out.push_back({tag + " euler", *e.pass, to_string(*e.lhs) + " = " + to_string(*e.rhs)});
    const auto hh = hh_prediction(h);
    if (e.rhs)
      out.push_back({tag + " hh_alternating_sum", hh.alternating_sum() == *e.rhs,
                     to_string(hh.alternating_sum()) + " = " + to_string(*e.rhs)});
    if (h.bundle) {
      bool ok = true;
      for (const auto& curve : invariant_curves(*h.bundle))
        for (DivisorClass basis : {DivisorClass{1, 0}, DivisorClass{0, 1}})
          ok = ok && Integer(pairing(*h.bundle, basis, curve)) ==
                         integrate(ChowElement::divisor(*h.bundle, basis) * curve_cycle(*h.bundle, curve));
      out.push_back({tag + " pairing_oracle", ok, "closed-form pairings match Chow integration"});
      const auto c1 = chern_tangent(*h.bundle).homogeneous_part(1);
      out.push_back({tag + " chern_c1", c1 == ChowElement::divisor(*h.bundle, -canonical_class(*h.bundle)),
                     "c_1(T_P) = -K_P"});
    }
  }
  return out;
}

struct BoundRow {
  CompleteIntersection ci;
  FanoDimensionBound result;
};

/// Degree multisets (descending) of length c with entries in [1, dmax].
inline void for_each_degree_vector(int c, int dmax, const std::function<void(const std::vector<int>&)>& fn) {
  std::vector<int> v(static_cast<std::size_t>(c), dmax);
  while (true) {
    fn(v);
    int i = c - 1;
    while (i >= 0 && v[static_cast<std::size_t>(i)] == 1) --i;
    if (i < 0) return;
    --v[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < c; ++j) v[static_cast<std::size_t>(j)] = v[static_cast<std::size_t>(i)];
  }
}

/// All instances with n <= nmax, c <= min(cmax, n), degrees <= dmax, in a fixed order.
inline std::vector<CompleteIntersection> sweep_instances(int nmax, int cmax, int dmax) {
  std::vector<CompleteIntersection> out;
  for (int n = 1; n <= nmax; ++n)
    for (int c = 1; c <= std::min(cmax, n); ++c)
      for_each_degree_vector(c, dmax, [&](const std::vector<int>& d) { out.push_back(make_ci(n, d)); });
  return out;
}

/// Evaluates instances on worker threads; rows keep input order.
inline std::vector<BoundRow> evaluate_bounds(const std::vector<CompleteIntersection>& instances) {
  std::vector<std::optional<FanoDimensionBound>> results(instances.size());
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto worker = [&] {
    for (std::size_t i = next++; i < instances.size(); i = next++) {
      try {
        results[i] = fano_dimension_upper_bound(instances[i]);
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
      }
    }
  };
  const unsigned threads = std::max(1U, std::min(8U, std::thread::hardware_concurrency()));
  std::vector<std::thread> pool;
  for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
  for (auto& t : pool) t.join();
  if (failure) std::rethrow_exception(failure);
  std::vector<BoundRow> rows;
  for (std::size_t i = 0; i < instances.size(); ++i) rows.push_back({instances[i], std::move(*results[i])});
  return rows;
}

inline json bound_row_json(const BoundRow& row) {
  json cands = json::array();
  for (const auto& h : row.result.candidates)
    cands.push_back({{"kind", to_string(h.kind)}, {"r", h.r}, {"base", h.base.label()}, {"dim_x", h.dim_x}, {"fano", h.fano}});
  return {{"n", row.ci.ambient_dim()},
          {"degrees", row.ci.degrees()},
          {"dim", row.ci.dimension()},
          {"calabi_yau", row.ci.is_calabi_yau()},
          {"candidates", cands},
          {"bound", row.result.bound},
          {"notes", row.result.notes}};
}

inline void write_bound_row_text(std::ostream& os, const BoundRow& row) {
  os << row.ci.label() << " dim=" << row.ci.dimension() << " bound=" << row.result.bound << " candidates=";
  bool first = true;
  for (const auto& h : row.result.candidates) {
    os << (first ? "" : ";") << to_string(h.kind) << (h.r ? "(r=" + std::to_string(*h.r) + ")" : "") << ":" << h.dim_x
       << (h.fano ? "" : "(not Fano)");
    first = false;
  }
  os << "\n";
}

namespace detail {

inline void add_instance_options(CLI::App* cmd, InstanceOptions& o, bool instance_required) {
  auto* n = cmd->add_option("--n", o.n, "ambient projective dimension");
  auto* d = cmd->add_option("--degrees", o.degrees, "comma-separated degrees d_1,...,d_c");
  if (instance_required) {
    n->required();
    d->required();
  }
  cmd->add_option("--mode", o.mode, "auto|general|cy|ouchi|blowup")->capture_default_str();
  cmd->add_option("--r", o.r, "number of O(1) summands in the general construction");
  cmd->add_option("--format", o.format, "text|json")->check(CLI::IsMember({"text", "json"}))->capture_default_str();
}

inline CompleteIntersection instance_from(const InstanceOptions& o) {
  return make_ci(o.n, parse_degree_list(o.degrees));
}

}  // namespace detail

inline int cmd_build(const InstanceOptions& o, std::ostream& out) {
  const auto ci = detail::instance_from(o);
  const auto mode = parse_mode(o.mode);
  const auto hosts = hosts_for_mode(ci, mode, o.r);
  auto doc = build_report(ci, hosts);
  if (o.format == "json") out << json(doc).dump(2) << "\n";
  else write_text(out, doc);
  for (const auto& h : doc.hosts) {
    const auto& c = h.checks;
    if (!c.certificate_agreement || !c.coordinate_change || c.adjunction == false || c.euler.pass == false)
      throw InvariantViolation("consistency check failed for " + h.kind + " host");
  }
  return doc.selected ? kOk : kNotFano;
}

inline int cmd_verify(const InstanceOptions& o, std::ostream& out) {
  const auto ci = detail::instance_from(o);
  const auto hosts = hosts_for_mode(ci, parse_mode(o.mode), o.r);
  const auto checks = verify_instance(ci, hosts);
  bool all = true;
  if (o.format == "json") {
    json arr = json::array();
    for (const auto& c : checks) arr.push_back({{"check", c.name}, {"pass", c.pass}, {"detail", c.detail}});
    for (const auto& c : checks) all = all && c.pass;
    out << json{{"instance", ci.label()}, {"checks", arr}, {"pass", all}}.dump(2) << "\n";
  } else {
    for (const auto& c : checks) {
      out << (c.pass ? "PASS " : "FAIL ") << c.name << ": " << c.detail << "\n";
      all = all && c.pass;
    }
    out << (all ? "PASS" : "FAIL") << " overall " << ci.label() << "\n";
  }
  return all ? kOk : kInvariantViolation;
}

inline int cmd_bound(const InstanceOptions& o, const std::vector<int>& sweep, std::ostream& out) {
  std::vector<CompleteIntersection> instances;
  if (!sweep.empty()) {
    if (sweep.size() != 3 || *std::min_element(sweep.begin(), sweep.end()) < 1)
      throw InvalidInput("--sweep takes three positive integers: nmax cmax dmax");
    instances = sweep_instances(sweep[0], sweep[1], sweep[2]);
  } else {
    if (o.n == 0 || o.degrees.empty()) throw InvalidInput("bound needs --n and --degrees, or --sweep");
    instances.push_back(detail::instance_from(o));
  }
  const auto rows = evaluate_bounds(instances);
  if (o.format == "json") {
    json arr = json::array();
    for (const auto& row : rows) arr.push_back(bound_row_json(row));
    out << (sweep.empty() ? arr.front() : arr).dump(2) << "\n";
  } else {
    for (const auto& row : rows) write_bound_row_text(out, row);
    if (sweep.empty())
      for (const auto& note : rows.front().result.notes) out << "note " << note << "\n";
  }
  return kOk;
}

inline int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Fano hosts of smooth complete intersections"};
  app.require_subcommand(1);
  InstanceOptions build_opts, verify_opts, bound_opts;
  std::vector<int> sweep;
  auto* build = app.add_subcommand("build", "construct Fano hosts and report their invariants");
  detail::add_instance_options(build, build_opts, true);
  auto* verify = app.add_subcommand("verify", "run the consistency checks for one instance");
  detail::add_instance_options(verify, verify_opts, true);
  auto* bound = app.add_subcommand("bound", "upper bounds on the Fano dimension");
  detail::add_instance_options(bound, bound_opts, false);
  bound->add_option("--sweep", sweep, "nmax cmax dmax")->expected(3);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kBadInput;
  }

  try {
    if (*build) return cmd_build(build_opts, out);
    if (*verify) return cmd_verify(verify_opts, out);
    return cmd_bound(bound_opts, sweep, out);
  } catch (const InvalidInput& e) {
    err << "error: " << e.what() << "\n";
    return kBadInput;
  } catch (const InvariantViolation& e) {
    err << "internal invariant violation: " << e.what() << "\n";
    return kInvariantViolation;
  }
}

}  // namespace fanohost
