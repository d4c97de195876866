// Acceptance criteria AC1-AC11. One line per criterion; exit status 1 if any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <map>
#include <set>
#include <sstream>

#include "kostant/cli.hpp"
#include "kostant/kostant.hpp"

using namespace kostant;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

class Timer {
 public:
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

int failed = 0;

void criterion(int id, const std::string& title, double limit_seconds, const std::function<Outcome()>& body) {
  const Timer t;
  Outcome o;
  try {
    o = body();
  } catch (const std::exception& e) {
    o = {false, std::string("exception: ") + e.what()};
  }
  const double s = t.seconds();
  if (limit_seconds > 0 && s >= limit_seconds) {
    o.pass = false;
    o.detail += " [over the " + std::to_string(static_cast<int>(limit_seconds)) + " s bound]";
  }
  char time[32];
  std::snprintf(time, sizeof time, "%.2f s", s);
  std::cout << (o.pass ? "[PASS] " : "[FAIL] ") << "AC" << id << " " << title << ": " << o.detail << " (" << time
            << ")" << std::endl;
  failed += !o.pass;
}

RationalVector iv(std::initializer_list<Integer> xs) { return RationalVector::from_integers(xs); }
RationalVector half(std::initializer_list<Integer> xs) { return Rational(1, 2) * RationalVector::from_integers(xs); }

Base base_of(const RootSet& roots, const std::vector<RationalVector>& vs) {
  Base b;
  for (const auto& v : vs) b.push_back(roots.index_of(v));
  std::sort(b.begin(), b.end());
  return b;
}

bool is_classical_or_exceptional_super(const AlgebraSpec& a) { return a.is_super(); }

struct Catalog {
  std::vector<AlgebraData> data;
};

const Catalog& catalog() {
  static const Catalog c = [] {
    Catalog out;
    for (const auto& a : default_catalog(rank_bound_from_env())) out.data.push_back(analyze(a));
    return out;
  }();
  return c;
}

void accumulate(Outcome& o, const VerificationReport& r, std::size_t& instances) {
  instances += r.instances;
  if (!r.passed()) {
    o.pass = false;
    o.detail += " " + r.claim + " fails on " + r.algebra + (r.witnesses.empty() ? "" : " (" + r.witnesses[0] + ")");
  }
}

}  // namespace

int main() {
  criterion(1, "D(2,1;a) positive systems", 1, [] {
    const auto sys = make_root_system(d21a());
    const auto all = enumerate_positive_systems(sys->roots);
    std::vector<std::size_t> even_idx;
    for (std::size_t i = 0; i < sys->roots.size(); ++i) {
      if (sys->roots.has_even(i)) even_idx.push_back(i);
    }
    const RootSet even = sys->roots.subset(even_idx);
    const auto evens = enumerate_positive_systems(even);
    std::map<PositiveSystem, std::size_t> ext;
    for (const auto& p : evens) ext[p] = 0;
    for (const auto& p : all) {
      PositiveSystem r(even.size());
      for (std::size_t j = 0; j < even.size(); ++j) r[j] = p[sys->roots.index_of(even[j])];
      ++ext.at(r);
    }
    std::set<std::size_t> per;
    for (const auto& [p, n] : ext) per.insert(n);
    Outcome o;
    o.pass = all.size() == 32 && evens.size() == 8 && per == std::set<std::size_t>{4};
    o.detail = std::to_string(all.size()) + " positive systems, " + std::to_string(evens.size()) + " even, " +
               (per.size() == 1 ? std::to_string(*per.begin()) : std::string("non-uniform")) +
               " extensions each (expected 32, 8, 4)";
    return o;
  });

  criterion(2, "Hermitian count table", 5, [] {
    Outcome o;
    std::size_t ok = 0;
    const auto cat = hermitian_catalog();
    for (const auto& p : cat) {
      const auto row = hermitian_row(p);
      if (row.ok()) {
        ++ok;
      } else {
        o.pass = false;
        o.detail += " " + p.id + " gives (" + std::to_string(row.counts.n_pos) + "," +
                    std::to_string(row.counts.n_pos_even) + "," + std::to_string(row.counts.n_ext) + ")";
      }
    }
    o.detail = std::to_string(ok) + "/" + std::to_string(cat.size()) + " cases match" + o.detail;
    return o;
  });

  criterion(3, "Weyl classes of bases and listed bases", 30, [] {
    Outcome o;
    const auto g = analyze(g3());
    const auto f = analyze(f4());
    const auto d = analyze(d21a());
    const RationalVector e1 = iv({1, 0, 0}), e2 = iv({0, 1, 0}), e3 = iv({-1, -1, 0}), dl = iv({0, 0, 1});
    const std::vector<std::vector<RationalVector>> g_listed = {
        {e2, e3 - e2, dl + e1}, {dl - e3, e3 - e2, -dl - e1}, {-dl + e3, dl - e2, e2}, {e3 - e2, -dl + e2, dl}};
    const std::vector<std::vector<RationalVector>> f_listed = {
        {half({1, 1, 1, 1}), iv({1, -1, 0, 0}), iv({0, 1, -1, 0}), iv({-1, 0, 0, 0})},
        {half({-1, -1, -1, -1}), iv({1, -1, 0, 0}), iv({0, 1, -1, 0}), half({-1, 1, 1, 1})},
        {iv({-1, 0, 0, 0}), half({1, -1, 1, 1}), iv({0, 1, -1, 0}), half({1, -1, -1, -1})},
        {half({-1, -1, 1, 1}), half({-1, 1, -1, -1}), half({1, 1, -1, 1}), iv({1, -1, 0, 0})},
        {half({1, 1, -1, -1}), iv({-1, 0, 0, 0}), iv({0, 0, 0, 1}), iv({1, -1, 0, 0})},
        {iv({0, 0, 0, 1}), iv({0, 1, -1, 0}), half({-1, -1, 1, -1}), iv({1, -1, 0, 0})}};
    const std::vector<std::vector<RationalVector>> d_listed = {{iv({1, -1, -1}), iv({0, 2, 0}), iv({0, 0, 2})}};
    // listed bases must be present and pairwise inequivalent
    auto classes_hit = [&](const AlgebraData& a, const std::vector<std::vector<RationalVector>>& listed) {
      std::set<std::size_t> hit;
      for (const auto& vs : listed) {
        const Base b = base_of(a.roots(), vs);
        const auto it = std::lower_bound(a.bases.begin(), a.bases.end(), b);
        if (it == a.bases.end() || *it != b) return std::size_t{0};
        const std::size_t k = static_cast<std::size_t>(it - a.bases.begin());
        for (std::size_t c = 0; c < a.classes.classes.size(); ++c) {
          const auto& m = a.classes.classes[c].members;
          if (std::find(m.begin(), m.end(), k) != m.end()) hit.insert(c);
        }
      }
      return hit.size();
    };
    const std::size_t gc = g.classes.classes.size(), fc = f.classes.classes.size();
    const std::size_t gh = classes_hit(g, g_listed), fh = classes_hit(f, f_listed), dh = classes_hit(d, d_listed);
    o.pass = gc == 4 && fc == 6 && gh == 4 && fh == 6 && dh == 1;
    o.detail = "G(3) " + std::to_string(gc) + " classes, F(4) " + std::to_string(fc) +
               " classes (expected 4, 6); listed bases found in distinct classes: G(3) " + std::to_string(gh) +
               "/4, F(4) " + std::to_string(fh) + "/6, D(2,1;a) " + std::to_string(dh) + "/1";
    return o;
  });

  std::set<std::string> thm3i_passed;
  criterion(4, "fiber graph connectivity", 0, [&] {
    Outcome o;
    std::size_t instances = 0;
    double exceptional = 0, classical = 0;
    for (const auto& d : catalog().data) {
      if (!is_classical_or_exceptional_super(d.sys->spec)) continue;
      const Timer t;
      const auto r = verify_theorem3_i(d);
      (d.sys->spec.is_exceptional_super() ? exceptional : classical) += t.seconds();
      accumulate(o, r, instances);
      if (r.passed()) thm3i_passed.insert(d.name());
    }
    if (exceptional >= 120 || classical >= 300) {
      o.pass = false;
      o.detail += " over the time bound";
    }
    char buf[96];
    std::snprintf(buf, sizeof buf, " (exceptionals %.2f s, classical %.2f s)", exceptional, classical);
    o.detail = std::to_string(instances) + " checks over " + std::to_string(thm3i_passed.size()) + " algebras" + buf +
               o.detail;
    return o;
  });

  criterion(5, "lifting of simple pairs", 0, [] {
    Outcome o;
    std::size_t instances = 0;
    for (const auto& d : catalog().data) accumulate(o, verify_theorem3_ii(d), instances);
    accumulate(o, verify_e8(), instances);
    o.detail = std::to_string(instances) + " checks, including E8 with sigma minus alpha4 and alpha5" + o.detail;
    return o;
  });

  criterion(6, "unbroken root strings", 0, [] {
    Outcome o;
    std::size_t instances = 0;
    for (const auto& d : catalog().data) accumulate(o, verify_theorem3_iii(d), instances);
    o.detail = std::to_string(instances) + " checks" + o.detail;
    return o;
  });

  criterion(7, "bases of Kostant systems", 0, [] {
    Outcome o;
    std::size_t instances = 0;
    for (const auto& d : catalog().data) accumulate(o, verify_theorem2(d), instances);
    o.detail = std::to_string(instances) + " checks" + o.detail;
    return o;
  });

  criterion(8, "Counterexample fidelity", 0, [] {
    Outcome o;
    const auto r54 = counterexample_remark_5_4();
    std::size_t reducible = 0;
    for (const auto& n : r54.notes) reducible += n.find("reducible, 2 vertices, 0 edges") != std::string::npos;
    o.pass = r54.passed() && reducible == 2;
    o.detail = "rem54: " + std::to_string(reducible) + " two-element disconnected fibers";
    for (int m : {3, 4}) {
      const auto r = counterexample_remark_5_8(m);
      o.pass = o.pass && r.passed();
      o.detail += std::string("; rem58 m=") + std::to_string(m) + (r.passed() ? " reproduced" : " NOT reproduced");
    }
    return o;
  });

  criterion(9, "E8 facts", 1, [] {
    const auto f = e8_facts();
    const auto sys = make_root_system(lie('E', 8));
    Outcome o;
    o.pass = sys->roots.size() == 240 && f.highest_root == std::vector<Integer>{2, 3, 4, 6, 5, 4, 3, 2} &&
             f.roots_with_double_five == 0;
    std::string hr;
    for (auto c : f.highest_root) hr += std::to_string(c);
    o.detail = std::to_string(sys->roots.size()) + " roots, highest root " + hr + ", " +
               std::to_string(f.roots_with_double_five) + " roots with 5 at alpha4 and alpha5";
    return o;
  });

  criterion(10, "edge lifting", 0, [&] {
    Outcome o;
    std::size_t instances = 0, algebras = 0;
    for (const auto& d : catalog().data) {
      if (!thm3i_passed.count(d.name())) continue;
      ++algebras;
      accumulate(o, verify_edge_lifting(d), instances);
    }
    o.detail = std::to_string(instances) + " checks over " + std::to_string(algebras) + " algebras" + o.detail;
    return o;
  });

  criterion(11, "verify --claim all", 0, [] {
    const char* argv[] = {"kostant", "verify", "--claim", "all", "--format", "json"};
    std::ostringstream out, err;
    const int code = cli::run(6, argv, out, err);
    Outcome o;
    if (code != 0) {
      o.pass = false;
      o.detail = "exit code " + std::to_string(code) + " " + err.str();
      return o;
    }
    const auto j = Json::parse(out.str());
    std::size_t structural = 0, reports = 0;
    for (const auto& r : j["reports"]) {
      ++reports;
      if (r["claim"] == "structural") {
        ++structural;
        o.pass = o.pass && r["passed"].get<bool>();
      }
    }
    o.pass = o.pass && j["passed"].get<bool>() && structural == catalog().data.size();
    o.detail = std::to_string(reports) + " reports, " + std::to_string(structural) + " structural suites, all passed";
    return o;
  });

  std::cout << (failed == 0 ? "ALL CRITERIA PASS" : std::to_string(failed) + " CRITERIA FAIL") << std::endl;
  return failed == 0 ? 0 : 1;
}
