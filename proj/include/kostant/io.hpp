#pragma once

#include <iomanip>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "kostant/graphs.hpp"
#include "kostant/hermitian.hpp"
#include "kostant/kostant_system.hpp"
#include "kostant/root_system.hpp"
#include "kostant/theorems.hpp"

namespace kostant {

using Json = nlohmann::ordered_json;

inline Json to_json(const RationalVector& v) {
  Json out = Json::array();
  for (const auto& c : v) out.push_back(to_string(c));
  return out;
}

inline Json to_json(const std::vector<RationalVector>& vs) {
  Json out = Json::array();
  for (const auto& v : vs) out.push_back(to_json(v));
  return out;
}

inline const char* mask_name(ParityMask m) {
  if (m == (kEvenBit | kOddBit)) return "mixed";
  return (m & kOddBit) ? "odd" : "even";
}

inline Json root_set_json(const RootSet& s) {
  Json out = Json::array();
  for (std::size_t i = 0; i < s.size(); ++i) out.push_back({{"coords", to_json(s[i])}, {"parity", mask_name(s.mask(i))}});
  return out;
}

inline Json algebra_params_json(const AlgebraSpec& a) {
  switch (a.family) {
    case Family::lie:
      return {{"type", std::string(1, a.lie_type)}, {"rank", a.m}};
    case Family::sl:
    case Family::gl:
      return {{"m", a.m}, {"n", a.n}};
    case Family::osp:
      return {{"m", a.m}, {"2n", 2 * a.n}};
    default:
      return Json::object();
  }
}

inline Json root_system_json(const RootSystem& s) {
  return {{"family", s.spec.family_name()},
          {"name", s.name()},
          {"params", algebra_params_json(s.spec)},
          {"coord_labels", s.coord_labels},
          {"roots", root_set_json(s.roots)}};
}

inline std::string root_system_text(const RootSystem& s) {
  std::ostringstream out;
  out << s.name() << ": " << s.size() << " roots (" << s.count(Parity::even) << " even, " << s.count(Parity::odd)
      << " odd), coordinates";
  for (const auto& l : s.coord_labels) out << " " << l;
  out << "\n";
  for (std::size_t i = 0; i < s.roots.size(); ++i) {
    out << s.roots[i].to_short_string() << " " << parity_name(s.roots.parity(i)) << "\n";
  }
  return out.str();
}

inline Json bases_json(const RootSet& roots, const std::vector<Base>& bases) {
  Json out = Json::array();
  for (const auto& b : bases) out.push_back(to_json(roots.select(b)));
  return out;
}

inline std::string bases_text(const RootSet& roots, const std::vector<Base>& bases) {
  std::ostringstream out;
  for (std::size_t k = 0; k < bases.size(); ++k) {
    out << k << ":";
    for (auto i : bases[k]) out << " " << roots[i].to_short_string();
    out << "\n";
  }
  return out.str();
}

inline Json kostant_json(const KostantSystem& k) {
  const RootSet& roots = k.source->roots;
  Json fibers = Json::object();
  for (std::size_t r = 0; r < k.R.size(); ++r) fibers[k.R[r].to_short_string()] = to_json(roots.select(k.fibers[r]));
  return {{"algebra", k.source->name()},
          {"collapse", to_json(roots.select(k.I))},
          {"R", root_set_json(k.R)},
          {"fibers", fibers},
          {"centralizer", to_json(roots.select(k.centralizer))}};
}

inline std::string kostant_text(const KostantSystem& k) {
  const RootSet& roots = k.source->roots;
  std::ostringstream out;
  out << k.source->name() << " collapsed along " << detail::describe_set(roots, k.I) << ": " << k.R.size()
      << " Kostant roots, centralizer " << detail::describe_set(roots, k.centralizer) << "\n";
  for (std::size_t r = 0; r < k.R.size(); ++r) {
    out << k.R[r].to_short_string() << " " << mask_name(k.R.mask(r)) << " <- "
        << detail::describe_set(roots, k.fibers[r]) << "\n";
  }
  return out.str();
}

inline Json graph_json(const LabeledGraph& g) {
  Json edges = Json::array();
  std::vector<std::vector<std::size_t>> adjacency(g.vertices.size());
  for (const auto& e : g.edges) {
    edges.push_back({{"source", e.u}, {"target", e.v}, {"label", e.label.name}, {"label_vector", to_json(e.label.vector)}});
    adjacency[e.u].push_back(e.v);
    adjacency[e.v].push_back(e.u);
  }
  for (auto& a : adjacency) std::sort(a.begin(), a.end());
  return {{"vertices", to_json(g.vertices)},
          {"edges", edges},
          {"adjacency", adjacency},
          {"components", component_count(g)}};
}

inline Json report_json(const VerificationReport& r) {
  return {{"claim", r.claim},        {"algebra", r.algebra},       {"universe", r.universe},
          {"instances", r.instances}, {"failures", r.failures},     {"passed", r.passed()},
          {"witnesses", r.witnesses}, {"notes", r.notes}};
}

inline std::string report_text(const VerificationReport& r) {
  std::ostringstream out;
  out << (r.passed() ? "PASS " : "FAIL ") << r.claim << " " << r.algebra << ": " << r.instances << " checks, "
      << r.failures << " failures";
  if (!r.universe.empty()) out << " [" << r.universe << "]";
  out << "\n";
  for (const auto& n : r.notes) out << "  note: " << n << "\n";
  for (const auto& w : r.witnesses) out << "  witness: " << w << "\n";
  return out.str();
}

inline std::string reports_text(const std::vector<VerificationReport>& reports) {
  std::string out;
  std::size_t failed = 0;
  for (const auto& r : reports) {
    out += report_text(r);
    failed += !r.passed();
  }
  if (failed == 0) return out + "PASS\n";
  return out + "FAIL (" + std::to_string(failed) + " of " + std::to_string(reports.size()) + " reports)\n";
}

/// One row of the Hermitian table, with every check that backs it.
struct HermitianRow {
  HermitianPair pair;
  HermitianCounts counts;
  bool uniform = false;
  bool span_closed = false;
  bool lists_match = false;
  bool extensions_ok = false;
  std::string error;

  bool ok() const {
    return error.empty() && uniform && span_closed && lists_match && extensions_ok && counts == pair.expected;
  }
};

inline HermitianRow hermitian_row(const HermitianPair& pair) {
  HermitianRow row;
  row.pair = pair;
  try {
    const auto d = analyze_pair(pair);
    const auto c = count_positive_systems(d);
    row.counts = c.counts;
    row.uniform = c.uniform;
    row.span_closed = d.span_closed();
    row.lists_match = d.R0_matches() && d.R1_matches();
    row.extensions_ok = true;
    for (const auto& even : standard_even_systems(d)) {
      const auto ext = extend_admissible(d, even);
      row.extensions_ok = row.extensions_ok && is_admissible(d, ext.system, false);
    }
  } catch (const ConsistencyError& e) {
    row.error = e.what();
  }
  return row;
}

inline std::string join(const std::vector<std::string>& xs, const std::string& sep) {
  std::string out;
  for (std::size_t i = 0; i < xs.size(); ++i) out += (i ? sep : "") + xs[i];
  return out;
}

inline Json hermitian_json(const HermitianRow& r) {
  Json out = {{"case", r.pair.id},
              {"algebra", r.pair.algebra.name()},
              {"R0", r.pair.R0},
              {"R1", r.pair.R1},
              {"n_pos", r.counts.n_pos},
              {"n_pos_even", r.counts.n_pos_even},
              {"n_ext", r.counts.n_ext},
              {"ok", r.ok()}};
  if (!r.error.empty()) out["error"] = r.error;
  return out;
}

inline std::string hermitian_text(const std::vector<HermitianRow>& rows) {
  std::ostringstream out;
  out << std::left << std::setw(13) << "case" << std::setw(10) << "algebra" << std::setw(20) << "R0" << std::setw(40)
      << "R1" << std::right << std::setw(6) << "n_pos" << std::setw(11) << "n_pos_even" << std::setw(6) << "n_ext"
      << "  status\n";
  auto width = [](const std::string& s, std::size_t w) {
    // pad by code points so "±" counts once
    std::size_t cps = 0;
    for (unsigned char c : s) cps += (c & 0xC0) != 0x80;
    return s + std::string(cps < w ? w - cps : 1, ' ');
  };
  bool all = true;
  for (const auto& r : rows) {
    all = all && r.ok();
    out << width(r.pair.id, 13) << width(r.pair.algebra.name(), 10)
        << width(r.pair.R0.empty() ? "{}" : join(r.pair.R0, ", "), 20) << width(join(r.pair.R1, ", "), 40)
        << std::setw(6) << r.counts.n_pos << std::setw(11) << r.counts.n_pos_even << std::setw(6) << r.counts.n_ext
        << "  " << (r.ok() ? "ok" : "MISMATCH") << "\n";
    if (!r.error.empty()) out << "  error: " << r.error << "\n";
  }
  out << (all ? "PASS\n" : "FAIL\n");
  return out.str();
}

}  // namespace kostant
