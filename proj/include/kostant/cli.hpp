#pragma once

#include <atomic>
#include <exception>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>

#include "kostant/io.hpp"

namespace kostant::cli {

inline constexpr const char* kAlgebraHelp =
    "algebra: sl(M|N) with M != N, gl(M|M), osp(M|2N), D(2,1;a), G3 or G(3), F4 or F(4), "
    "or a simple Lie algebra A1.., B2.., C3.., D4.., E6, E7, E8, G2, F_4";

inline constexpr const char* kClaims = "thm3i|thm3ii|thm3iii|thm2|lemma47|rem54|rem58|superization|e8|structural|all";

/// Runs fn(0..n-1) on up to `jobs` threads; results keep index order.
template <class T>
std::vector<T> parallel_map(std::size_t n, const std::function<T(std::size_t)>& fn, unsigned jobs) {
  std::vector<std::optional<T>> slots(n);
  std::vector<std::exception_ptr> errors(n);
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < n; i = next++) {
      try {
        slots[i] = fn(i);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  const unsigned threads = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(n)));
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  std::vector<T> out;
  out.reserve(n);
  for (auto& s : slots) out.push_back(std::move(*s));
  return out;
}

inline std::string trim(std::string s) {
  const auto b = s.find_first_not_of(" \t");
  if (b == std::string::npos) return "";
  return s.substr(b, s.find_last_not_of(" \t") - b + 1);
}

/// "(1,-1,0),(0,1,-1)" names roots by coordinates; "0,2" names positions
/// in the chosen base.
inline std::vector<std::size_t> resolve_collapse(const RootSystem& sys, const std::string& text, const Base* base) {
  const std::string s = trim(text);
  std::vector<std::size_t> out;
  if (s.empty()) return out;
  if (s.find('(') != std::string::npos) {
    std::size_t pos = 0;
    while ((pos = s.find('(', pos)) != std::string::npos) {
      const auto close = s.find(')', pos);
      if (close == std::string::npos) throw UsageError("unbalanced parenthesis in --collapse");
      const RationalVector v = parse_vector(s.substr(pos, close - pos + 1));
      if (v.size() != sys.ambient_dim()) throw UsageError(v.to_short_string() + " has the wrong number of coordinates");
      const auto i = sys.roots.find(v);
      if (!i) throw UsageError(v.to_short_string() + " is not a root of " + sys.name());
      out.push_back(*i);
      pos = close + 1;
    }
    return out;
  }
  if (!base) throw UsageError("--collapse given as indices needs --base");
  std::string cleaned = s;
  for (auto& c : cleaned) {
    if (c == ',') c = ' ';
  }
  std::istringstream in(cleaned);
  std::string tok;
  while (in >> tok) {
    std::size_t used = 0;
    long j = -1;
    try {
      j = std::stol(tok, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != tok.size() || j < 0 || static_cast<std::size_t>(j) >= base->size()) {
      throw UsageError("collapse index '" + tok + "' is not a position in the base (0.." +
                       std::to_string(base->size() - 1) + ")");
    }
    out.push_back((*base)[static_cast<std::size_t>(j)]);
  }
  return out;
}

inline const Base& pick_base(const std::vector<Base>& bases, long index) {
  if (index < 0 || static_cast<std::size_t>(index) >= bases.size()) {
    throw UsageError("--base must be in 0.." + std::to_string(bases.size() - 1));
  }
  return bases[static_cast<std::size_t>(index)];
}

inline void require_format(const std::string& format, bool graph) {
  if (format == "dot" && !graph) throw UsageError("dot output is only available for graphs");
}

struct Settings {
  std::string algebra;
  std::string format = "text";
  std::string collapse;
  bool collapse_given = false;
  long base = -1;
  std::string fiber;
  bool up_to_weyl = false;
  std::string claim;
  int rank_bound = 0;
  bool counts = false;
  std::string case_id;
  std::string output;
  unsigned jobs = 0;
};

inline int rank_bound(const Settings& s) {
  if (s.rank_bound == 0) return rank_bound_from_env();
  if (s.rank_bound < 1 || s.rank_bound > 8) throw UsageError("--rank-bound must be in 1..8");
  return s.rank_bound;
}

inline std::string emit_json(const Json& j) { return j.dump(2) + "\n"; }

inline std::string cmd_list(const Settings& s) {
  require_format(s.format, false);
  const auto cat = default_catalog(rank_bound(s));
  Json arr = Json::array();
  std::string text;
  for (const auto& a : cat) {
    const auto sys = build_root_system(a);
    arr.push_back({{"name", a.name()}, {"roots", sys.size()}, {"rank", sys.roots.rank()}});
    text += a.name() + "\n";
  }
  return s.format == "json" ? emit_json(arr) : text;
}

inline std::string cmd_roots(const Settings& s) {
  require_format(s.format, false);
  const auto sys = build_root_system(parse_algebra(s.algebra));
  return s.format == "json" ? emit_json(root_system_json(sys)) : root_system_text(sys);
}

inline std::string cmd_bases(const Settings& s) {
  require_format(s.format, false);
  const auto spec = parse_algebra(s.algebra);
  std::vector<Base> bases;
  std::shared_ptr<const RootSystem> sys;
  if (s.up_to_weyl) {
    const auto d = analyze(spec);
    sys = d.sys;
    for (const auto& c : d.classes.classes) bases.push_back(c.representative);
    std::sort(bases.begin(), bases.end());
  } else {
    sys = make_root_system(spec);
    bases = enumerate_bases(sys->roots);
  }
  return s.format == "json" ? emit_json(bases_json(sys->roots, bases)) : bases_text(sys->roots, bases);
}

inline std::string cmd_kostant(const Settings& s) {
  require_format(s.format, false);
  const auto sys = make_root_system(parse_algebra(s.algebra));
  std::vector<Base> bases;
  const Base* base = nullptr;
  if (s.base >= 0) {
    bases = enumerate_bases(sys->roots);
    base = &pick_base(bases, s.base);
  }
  const auto k = project(sys, resolve_collapse(*sys, s.collapse, base));
  return s.format == "json" ? emit_json(kostant_json(k)) : kostant_text(k);
}

inline std::string cmd_graph(const Settings& s) {
  if (s.format == "text") throw UsageError("graph output is dot or json");
  const auto sys = make_root_system(parse_algebra(s.algebra));
  const auto bases = enumerate_bases(sys->roots);
  const Base& base = pick_base(bases, s.base < 0 ? 0 : s.base);
  LabeledGraph g;
  if (!s.collapse_given) {
    if (!s.fiber.empty()) throw UsageError("--fiber needs --collapse");
    g = graph_of(sys->roots, base);
  } else {
    const auto k = project(sys, resolve_collapse(*sys, s.collapse, &base));
    if (!s.fiber.empty()) {
      g = fiber_graph(k, base, parse_vector(s.fiber));
    } else {
      // every fiber graph at once: roots off the centralizer, edges by ±I
      std::vector<std::size_t> outside;
      for (std::size_t i = 0; i < sys->roots.size(); ++i) {
        if (k.image[i] >= 0) outside.push_back(i);
      }
      std::vector<RationalVector> labels;
      std::vector<std::string> names;
      for (std::size_t j = 0; j < base.size(); ++j) {
        if (std::binary_search(k.I.begin(), k.I.end(), base[j])) {
          labels.push_back(sys->roots[base[j]]);
          names.push_back("a" + std::to_string(j + 1));
        }
      }
      g = detail::graph_on(sys->roots.select(outside), labels, names);
    }
  }
  return s.format == "json" ? emit_json(graph_json(g)) : to_dot(g);
}

using ReportTask = std::function<std::vector<VerificationReport>()>;

inline bool is_classical_super(const AlgebraSpec& a) {
  return a.family == Family::sl || a.family == Family::gl || a.family == Family::osp;
}

inline std::vector<VerificationReport> suites_for(const AlgebraSpec& a, const std::string& claim) {
  const auto d = analyze(a);
  std::vector<VerificationReport> out;
  const bool all = claim == "all";
  if (all || claim == "thm3i") out.push_back(verify_theorem3_i(d));
  if (all || claim == "thm3ii") out.push_back(verify_theorem3_ii(d));
  if (all || claim == "thm3iii") out.push_back(verify_theorem3_iii(d));
  if (all || claim == "thm2") out.push_back(verify_theorem2(d));
  if (all || claim == "lemma47") out.push_back(verify_edge_lifting(d));
  if (all || claim == "structural") out.push_back(verify_structural(d));
  if (all && is_classical_super(a)) out.push_back(verify_superization(a));
  return out;
}

inline std::vector<ReportTask> verify_tasks(const Settings& s) {
  const std::string& c = s.claim;
  std::optional<AlgebraSpec> one;
  if (!s.algebra.empty()) one = parse_algebra(s.algebra);
  std::vector<ReportTask> tasks;
  auto single = [&](std::function<VerificationReport()> f) { tasks.push_back([f] { return std::vector{f()}; }); };

  if (c == "rem54") {
    if (one) throw UsageError("rem54 is a fixed example and takes no --algebra");
    single([] { return counterexample_remark_5_4(); });
    return tasks;
  }
  if (c == "rem58") {
    if (one && (one->family != Family::gl || one->m < 3)) throw UsageError("rem58 needs gl(m|m) with m >= 3");
    for (int m : one ? std::vector<int>{one->m} : std::vector<int>{3, 4}) {
      single([m] { return counterexample_remark_5_8(m); });
    }
    return tasks;
  }
  if (c == "e8") {
    if (one && *one != lie('E', 8)) throw UsageError("e8 takes no --algebra other than E8");
    single([] { return verify_e8(); });
    return tasks;
  }
  const std::vector<AlgebraSpec> algebras = one ? std::vector<AlgebraSpec>{*one} : default_catalog(rank_bound(s));
  if (c == "superization") {
    if (one && !is_classical_super(*one)) throw UsageError("superization applies to sl, gl and osp only");
    for (const auto& a : algebras) {
      if (is_classical_super(a)) single([a] { return verify_superization(a); });
    }
    return tasks;
  }
  for (const auto& a : algebras) {
    tasks.push_back([a, c] { return suites_for(a, c); });
  }
  if (c == "all" && !one) {
    single([] { return verify_e8(); });
    single([] { return counterexample_remark_5_4(); });
    single([] { return counterexample_remark_5_8(3); });
    single([] { return counterexample_remark_5_8(4); });
  }
  return tasks;
}

inline std::string cmd_verify(const Settings& s, bool& passed) {
  require_format(s.format, false);
  const auto tasks = verify_tasks(s);
  const unsigned jobs = s.jobs ? s.jobs : std::max(1u, std::thread::hardware_concurrency());
  const auto chunks = parallel_map<std::vector<VerificationReport>>(
      tasks.size(), [&](std::size_t i) { return tasks[i](); }, jobs);
  std::vector<VerificationReport> reports;
  for (const auto& ch : chunks) reports.insert(reports.end(), ch.begin(), ch.end());
  passed = std::all_of(reports.begin(), reports.end(), [](const VerificationReport& r) { return r.passed(); });
  if (s.format == "json") {
    Json arr = Json::array();
    for (const auto& r : reports) arr.push_back(report_json(r));
    return emit_json({{"claim", s.claim}, {"passed", passed}, {"reports", arr}});
  }
  return reports_text(reports);
}

inline std::string cmd_hermitian(const Settings& s, bool& passed) {
  require_format(s.format, false);
  std::vector<HermitianPair> pairs;
  if (!s.case_id.empty()) {
    pairs.push_back(hermitian_case(s.case_id));
  } else {
    pairs = hermitian_catalog();
  }
  if (!s.counts) {
    Json arr = Json::array();
    std::string text;
    for (const auto& p : pairs) {
      arr.push_back({{"case", p.id}, {"algebra", p.algebra.name()}, {"real_form", p.real_form}});
      text += p.id + "  " + p.algebra.name() + "  " + p.real_form + "\n";
    }
    return s.format == "json" ? emit_json(arr) : text;
  }
  std::vector<HermitianRow> rows;
  for (const auto& p : pairs) rows.push_back(hermitian_row(p));
  passed = std::all_of(rows.begin(), rows.end(), [](const HermitianRow& r) { return r.ok(); });
  if (s.format == "json") {
    Json arr = Json::array();
    for (const auto& r : rows) arr.push_back(hermitian_json(r));
    return emit_json(arr);
  }
  return hermitian_text(rows);
}

/// Parses and runs one command line. Exit codes: 0 success, 1 a check
/// failed, 2 usage error.
inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  Settings s;
  CLI::App app{"Kostant root systems of Lie superalgebras: construction and exhaustive verification", "kostant"};
  app.require_subcommand(1);
  app.add_option("-o,--output", s.output, "write the result to this file instead of stdout");
  app.add_option("-j,--jobs", s.jobs, "worker threads for verify (default: hardware concurrency)");
  app.footer(std::string(kAlgebraHelp) +
             "\nKOSTANT_RANK_BOUND overrides the default rank bound of the verification catalog.");

  const auto formats = CLI::IsMember({"json", "text", "dot"});
  auto algebra_opt = [&](CLI::App* sub, bool required) {
    auto* o = sub->add_option("-a,--algebra", s.algebra, kAlgebraHelp);
    if (required) o->required();
  };

  auto* list = app.add_subcommand("list-algebras", "algebras of the verification catalog");
  list->add_option("--rank-bound", s.rank_bound, "maximal root rank (1..8)");
  list->add_option("-f,--format", s.format)->check(formats);

  auto* roots = app.add_subcommand("roots", "root system of an algebra");
  algebra_opt(roots, true);
  roots->add_option("-f,--format", s.format)->check(formats);

  auto* bases = app.add_subcommand("bases", "all bases, in lexicographic order");
  algebra_opt(bases, true);
  bases->add_flag("--up-to-weyl", s.up_to_weyl, "one representative per Weyl group orbit");
  bases->add_option("-f,--format", s.format)->check(formats);

  auto* kostant = app.add_subcommand("kostant", "Kostant root system of a collapse set");
  algebra_opt(kostant, true);
  kostant->add_option("-c,--collapse", s.collapse, "roots as tuples, or positions in --base")->required();
  kostant->add_option("-b,--base", s.base, "index into the ordered list of bases");
  kostant->add_option("-f,--format", s.format)->check(formats);

  auto* graph = app.add_subcommand("graph", "root graph, or fiber graphs of a collapse");
  algebra_opt(graph, true);
  graph->add_option("-b,--base", s.base, "index into the ordered list of bases (default 0)");
  auto* collapse = graph->add_option("-c,--collapse", s.collapse, "roots as tuples, or positions in the base");
  graph->add_option("--fiber", s.fiber, "Kostant root whose fiber graph to draw");
  graph->add_option("-f,--format", s.format)->check(formats)->default_str("dot");

  auto* verify = app.add_subcommand("verify", "run verification suites");
  verify->add_option("--claim", s.claim, kClaims)
      ->required()
      ->check(CLI::IsMember({"thm3i", "thm3ii", "thm3iii", "thm2", "lemma47", "rem54", "rem58", "superization", "e8",
                             "structural", "all"}));
  algebra_opt(verify, false);
  verify->add_option("--rank-bound", s.rank_bound, "maximal root rank of the catalog (1..8)");
  verify->add_option("-f,--format", s.format)->check(formats);

  auto* herm = app.add_subcommand("hermitian", "Hermitian symmetric pair catalog");
  herm->add_flag("--counts", s.counts, "count positive systems and extensions");
  herm->add_option("--case", s.case_id, "a single catalog case");
  herm->add_option("-f,--format", s.format)->check(formats);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    bool passed = true;
    std::string result;
    if (graph->parsed()) {
      s.collapse_given = collapse->count() > 0;
      if (graph->get_option("--format")->count() == 0) s.format = "dot";
      result = cmd_graph(s);
    } else if (list->parsed()) {
      result = cmd_list(s);
    } else if (roots->parsed()) {
      result = cmd_roots(s);
    } else if (bases->parsed()) {
      result = cmd_bases(s);
    } else if (kostant->parsed()) {
      result = cmd_kostant(s);
    } else if (verify->parsed()) {
      result = cmd_verify(s, passed);
    } else if (herm->parsed()) {
      result = cmd_hermitian(s, passed);
    }
    if (s.output.empty()) {
      out << result;
    } else {
      std::ofstream f(s.output, std::ios::binary);
      if (!f) throw UsageError("cannot write " + s.output);
      f << result;
    }
    return passed ? 0 : 1;
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const PreconditionError& e) {
    err << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    err << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const ConsistencyError& e) {
    err << "check failed: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace kostant::cli
