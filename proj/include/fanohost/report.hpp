#pragma once

/**
 * @file report.hpp
 * @brief Machine- and human-readable host reports.
 *
 * ReportDocument is a plain snapshot of a computation (no domain objects), so
 * it serializes to JSON and back without loss. Integers that do not fit in
 * int64 are written as decimal strings.
 */

#include "fanohost/cayley_builder.hpp"
#include "fanohost/sod_ledger.hpp"

#include <json.hpp>

#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

namespace nlohmann {

template <>
struct adl_serializer<fanohost::Integer> {
  static void to_json(json& j, const fanohost::Integer& v) {
    if (fanohost::fits_int64(v)) j = static_cast<std::int64_t>(v);
    else j = v.str();
  }
  static void from_json(const json& j, fanohost::Integer& v) {
    if (j.is_string()) v = fanohost::Integer(j.get<std::string>());
    else v = fanohost::Integer(j.get<std::int64_t>());
  }
};

template <typename T>
struct adl_serializer<std::optional<T>> {
  static void to_json(json& j, const std::optional<T>& v) {
    if (v) j = *v;
    else j = nullptr;
  }
  static void from_json(const json& j, std::optional<T>& v) {
    if (j.is_null()) v.reset();
    else v = j.get<T>();
  }
};

}  // namespace nlohmann

namespace fanohost {

using json = nlohmann::json;

struct VisitorReport {
  int n = 0;
  std::vector<int> degrees;
  int dim = 0;
  bool calabi_yau = false;
  Integer chi;
  std::vector<std::vector<Integer>> hodge;
  friend bool operator==(const VisitorReport&, const VisitorReport&) = default;
};

struct BaseReport {
  std::string type;  // "projective_space" | "complete_intersection"
  int dim = 0;
  std::optional<int> n;
  std::vector<int> degrees;
  std::string label;
  friend bool operator==(const BaseReport&, const BaseReport&) = default;
};

struct BlockReport {
  std::string type;  // "exceptional" | "opaque" | "visitor"
  std::optional<int> count;
  std::string label;
  friend bool operator==(const BlockReport&, const BlockReport&) = default;
};

struct EulerReport {
  std::optional<Integer> lhs;
  std::optional<Integer> rhs;
  std::optional<bool> pass;
  std::string status;
  friend bool operator==(const EulerReport&, const EulerReport&) = default;
};

struct ChecksReport {
  bool certificate_agreement = false;
  bool coordinate_change = false;
  std::optional<bool> adjunction;
  EulerReport euler;
  friend bool operator==(const ChecksReport&, const ChecksReport&) = default;
};

struct InvariantsReport {
  std::optional<Integer> chi_x;
  std::optional<Integer> anticanonical_degree;
  std::optional<std::int64_t> fano_index;
  std::string fano_index_label;
  int hh_span = 0;
  std::vector<Integer> hh;  // HH_k for k = -hh_span..hh_span
  friend bool operator==(const InvariantsReport&, const InvariantsReport&) = default;
};

struct HostReport {
  std::string kind;
  std::optional<int> r;
  BaseReport base;
  std::vector<std::int64_t> twists;
  int dim_x = 0;
  DivisorClass anti_canonical;
  DivisorClass anti_canonical_f;
  std::vector<std::int64_t> curve_degrees;
  bool fano = false;
  bool lemma31 = false;
  bool blowup = false;
  std::vector<BlockReport> sod;
  ChecksReport checks;
  InvariantsReport invariants;
  std::vector<std::string> assumptions;
  friend bool operator==(const HostReport&, const HostReport&) = default;
};

struct ReportDocument {
  VisitorReport visitor;
  std::vector<HostReport> hosts;
  std::optional<std::size_t> selected;  // index into hosts
  std::optional<int> bound;             // upper bound on the Fano dimension
  std::vector<std::string> notes;
  friend bool operator==(const ReportDocument&, const ReportDocument&) = default;
};

// ---- JSON ----------------------------------------------------------------

inline void to_json(json& j, const DivisorClass& d) { j = json{{"xi", d.xi}, {"h", d.hh}}; }
inline void from_json(const json& j, DivisorClass& d) {
  j.at("xi").get_to(d.xi);
  j.at("h").get_to(d.hh);
}

NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE(VisitorReport, n, degrees, dim, calabi_yau, chi, hodge)
NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE(BaseReport, type, dim, n, degrees, label)
NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE(BlockReport, type, count, label)
NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE(EulerReport, lhs, rhs, pass, status)
NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE(ChecksReport, certificate_agreement, coordinate_change, adjunction, euler)
NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE(InvariantsReport, chi_x, anticanonical_degree, fano_index, fano_index_label,
                                   hh_span, hh)

inline void to_json(json& j, const HostReport& h) {
  j = json{{"kind", h.kind},
           {"r", h.r},
           {"base", h.base},
           {"twists", h.twists},
           {"dim_x", h.dim_x},
           {"anti_canonical", h.anti_canonical},
           {"anti_canonical_f", h.anti_canonical_f},
           {"curve_degrees", h.curve_degrees},
           {"fano", h.fano},
           {"lemma31", h.lemma31},
           {"blowup", h.blowup},
           {"sod", json{{"blocks", h.sod}}},
           {"checks", h.checks},
           {"invariants", h.invariants},
           {"assumptions", h.assumptions}};
}

inline void from_json(const json& j, HostReport& h) {
  j.at("kind").get_to(h.kind);
  j.at("r").get_to(h.r);
  j.at("base").get_to(h.base);
  j.at("twists").get_to(h.twists);
  j.at("dim_x").get_to(h.dim_x);
  j.at("anti_canonical").get_to(h.anti_canonical);
  j.at("anti_canonical_f").get_to(h.anti_canonical_f);
  j.at("curve_degrees").get_to(h.curve_degrees);
  j.at("fano").get_to(h.fano);
  j.at("lemma31").get_to(h.lemma31);
  j.at("blowup").get_to(h.blowup);
  j.at("sod").at("blocks").get_to(h.sod);
  j.at("checks").get_to(h.checks);
  j.at("invariants").get_to(h.invariants);
  j.at("assumptions").get_to(h.assumptions);
}

NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE(ReportDocument, visitor, hosts, selected, bound, notes)

// ---- construction --------------------------------------------------------

inline VisitorReport make_visitor_report(const CompleteIntersection& ci) {
  VisitorReport v;
  v.n = ci.ambient_dim();
  v.degrees = ci.degrees();
  v.dim = ci.dimension();
  v.calabi_yau = ci.is_calabi_yau();
  v.chi = euler_char_ci(ci);
  v.hodge = hodge_numbers(ci).rows();
  return v;
}

/// Certificate agreement: the independent Fano tests available for this host give the same answer.
inline bool certificate_agreement(const HostConstruction& h) {
  switch (h.kind) {
    case HostKind::GeneralCayley: return inequality_certificate(h.visitor, *h.r) == h.fano;
    case HostKind::CYDirect:
    case HostKind::CYBlowup: return h.lemma31 == h.fano;
    case HostKind::Ouchi: return h.lemma31 == h.fano;
  }
  return false;
}

/// Coordinate change E -> F = E(-1): classes correspond and curve degrees are unchanged.
inline bool coordinate_change_holds(const HostConstruction& h) {
  if (ClassMap{-1}(h.anti_canonical) != h.anti_canonical_f) return false;
  if (h.kind == HostKind::GeneralCayley) {
    const auto& ci = h.visitor;
    const std::int64_t r = *h.r, n = ci.ambient_dim(), c = ci.codim(), d = ci.degree_sum();
    if (h.anti_canonical_f != DivisorClass{r + c - 1, n + r + c - d}) return false;
  }
  if (h.bundle) {
    const auto f = twist_translate(*h.bundle, -1);
    if (curve_degrees(*h.bundle, h.anti_canonical) != curve_degrees(f.bundle, h.anti_canonical_f)) return false;
  }
  return true;
}

/// -K_X = -(K_P + xi), and for general hosts the closed form (r+c-1) xi + (n+1-d) h.
inline std::optional<bool> adjunction_holds(const HostConstruction& h) {
  if (!h.bundle) return std::nullopt;
  if (adjunction_anti_canonical(*h.bundle) != h.anti_canonical) return false;
  if (h.kind == HostKind::GeneralCayley) {
    const auto& ci = h.visitor;
    const std::int64_t r = *h.r, n = ci.ambient_dim(), c = ci.codim(), d = ci.degree_sum();
    if (h.anti_canonical != DivisorClass{r + c - 1, n + 1 - d}) return false;
  }
  return true;
}

inline BaseReport make_base_report(const BaseSpace& b) {
  BaseReport r;
  r.dim = b.dim;
  r.label = b.label();
  if (b.ci) {
    r.type = "complete_intersection";
    r.n = b.ci->ambient_dim();
    r.degrees = b.ci->degrees();
  } else {
    r.type = "projective_space";
  }
  return r;
}

inline std::vector<BlockReport> make_sod_report(const SODSummary& sod) {
  std::vector<BlockReport> out;
  for (const auto& b : sod.blocks) {
    if (const auto* e = std::get_if<ExceptionalBlock>(&b)) out.push_back({"exceptional", e->count, e->label});
    else if (const auto* o = std::get_if<OpaqueBlock>(&b)) out.push_back({"opaque", std::nullopt, "D^b(" + o->base.label() + ")"});
    else out.push_back({"visitor", std::nullopt, "D^b(" + std::get<VisitorBlock>(b).ci.label() + ")"});
  }
  return out;
}

inline HostReport make_host_report(const HostConstruction& h) {
  HostReport r;
  r.kind = to_string(h.kind);
  r.r = h.r;
  r.base = make_base_report(h.base);
  r.twists = h.twists;
  r.dim_x = h.dim_x;
  r.anti_canonical = h.anti_canonical;
  r.anti_canonical_f = h.anti_canonical_f;
  r.curve_degrees = h.curve_degrees;
  r.fano = h.fano;
  r.lemma31 = h.lemma31;
  r.blowup = h.blowup;
  r.sod = make_sod_report(sod_of_host(h));
  r.checks.certificate_agreement = certificate_agreement(h);
  r.checks.coordinate_change = coordinate_change_holds(h);
  r.checks.adjunction = adjunction_holds(h);
  const auto e = euler_consistency(h);
  r.checks.euler = {e.lhs, e.rhs, e.pass, e.status};
  r.invariants.chi_x = e.lhs;
  if (h.bundle) {
    r.invariants.anticanonical_degree = anticanonical_degree(*h.bundle, h.anti_canonical);
    if (h.fano) r.invariants.fano_index = fano_index(*h.bundle, h.anti_canonical);
  }
  r.invariants.fano_index_label = h.dim_x >= 3 ? "index" : "ambient-lattice index";
  const auto hh = hh_prediction(h);
  r.invariants.hh_span = hh.span;
  r.invariants.hh = hh.values;
  r.assumptions = h.assumptions;
  return r;
}

// ---- text ----------------------------------------------------------------

namespace detail {

template <typename Range>
std::string join(const Range& xs, const char* sep = ",") {
  std::ostringstream os;
  bool first = true;
  for (const auto& x : xs) {
    os << (first ? "" : sep) << x;
    first = false;
  }
  return os.str();
}

template <typename T>
std::string opt_str(const std::optional<T>& v) {
  if (!v) return "none";
  std::ostringstream os;
  if constexpr (std::is_same_v<T, bool>) os << (*v ? "true" : "false");
  else os << *v;
  return os.str();
}

inline const char* verdict(bool ok) { return ok ? "PASS" : "FAIL"; }

}  // namespace detail

/// Line-oriented key=value rendering with the same numbers as the JSON form.
inline void write_text(std::ostream& os, const ReportDocument& doc) {
  using detail::join;
  const auto& v = doc.visitor;
  os << "visitor n=" << v.n << " degrees=" << join(v.degrees) << " dim=" << v.dim
     << " calabi_yau=" << (v.calabi_yau ? "true" : "false") << " chi=" << v.chi << "\n";
  for (std::size_t p = 0; p < v.hodge.size(); ++p) os << "hodge p=" << p << " row=" << join(v.hodge[p]) << "\n";
  for (std::size_t i = 0; i < doc.hosts.size(); ++i) {
    const auto& h = doc.hosts[i];
    os << "host index=" << i << " kind=" << h.kind << " r=" << detail::opt_str(h.r) << " base=" << h.base.label
       << " twists=" << join(h.twists) << " dim_x=" << h.dim_x << " fano=" << (h.fano ? "true" : "false")
       << " selected=" << (doc.selected && *doc.selected == i ? "true" : "false") << "\n";
    os << "  anti_canonical xi=" << h.anti_canonical.xi << " h=" << h.anti_canonical.hh
       << " f_xi=" << h.anti_canonical_f.xi << " f_h=" << h.anti_canonical_f.hh << "\n";
    os << "  certificate curve_degrees=" << (h.curve_degrees.empty() ? "none" : join(h.curve_degrees))
       << " lemma31=" << (h.lemma31 ? "true" : "false") << " blowup=" << (h.blowup ? "true" : "false") << "\n";
    os << "  sod";
    for (const auto& b : h.sod) os << " [" << b.type << (b.count ? ":" + std::to_string(*b.count) : "") << " " << b.label << "]";
    os << "\n";
    const auto& c = h.checks;
    os << "  checks certificate_agreement=" << detail::verdict(c.certificate_agreement)
       << " coordinate_change=" << detail::verdict(c.coordinate_change)
       << " adjunction=" << (c.adjunction ? detail::verdict(*c.adjunction) : "SKIP")
       << " euler_lhs=" << detail::opt_str(c.euler.lhs) << " euler_rhs=" << detail::opt_str(c.euler.rhs)
       << " euler=" << (c.euler.pass ? detail::verdict(*c.euler.pass) : "SKIP") << "\n";
    const auto& inv = h.invariants;
    os << "  invariants chi_x=" << detail::opt_str(inv.chi_x)
       << " anticanonical_degree=" << detail::opt_str(inv.anticanonical_degree)
       << " fano_index=" << detail::opt_str(inv.fano_index) << " (" << inv.fano_index_label << ")\n";
    os << "  hh span=" << inv.hh_span << " values=" << join(inv.hh) << "\n";
    for (const auto& a : h.assumptions) os << "  assume " << a << "\n";
  }
  if (doc.bound) os << "bound=" << *doc.bound << "\n";
  for (const auto& n : doc.notes) os << "note " << n << "\n";
}

}  // namespace fanohost
