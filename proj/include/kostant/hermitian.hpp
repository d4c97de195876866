#pragma once

#include <algorithm>
#include <cctype>
#include <map>
#include <memory>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "kostant/bases.hpp"
#include "kostant/errors.hpp"
#include "kostant/kostant_system.hpp"

namespace kostant {

/// Coordinates whose even roots are compact: every even root supported in
/// the block, restricted to coordinate sum zero when traceless (the sl_n
/// part of a gl_n).
struct CompactBlock {
  std::vector<std::size_t> coords;
  bool traceless = false;
};

/// A named ambient vector; quotient roots are written in terms of the
/// images of these.
struct QuotientSymbol {
  std::string name;
  RationalVector vector;
};

struct HermitianCounts {
  std::size_t n_pos = 0;
  std::size_t n_pos_even = 0;
  std::size_t n_ext = 0;

  friend bool operator==(const HermitianCounts&, const HermitianCounts&) = default;
};

struct HermitianPair {
  std::string id;
  AlgebraSpec algebra;
  std::string real_form;  // documentation only
  std::vector<CompactBlock> compact;
  std::vector<QuotientSymbol> symbols;
  std::vector<std::string> R0;  // expected, e.g. "±(e1-e2)"
  std::vector<std::string> R1;
  HermitianCounts expected;
};

namespace detail {

inline bool starts_with_pm(std::string_view s, std::size_t pos) { return s.substr(pos, 2) == "±"; }

/// Expands a listed element such as "±(e1-d2)", "±e±d" or "±1/2e" into
/// the coefficient vectors over the symbols.
inline std::vector<std::vector<Rational>> expand_listed(std::string_view text, const std::vector<QuotientSymbol>& symbols) {
  struct Term {
    int sign;  // 1, -1, or 0 for ±
    Rational coef;
    std::size_t symbol;
  };
  const auto fail = [&](const std::string& why) { return UsageError("bad listed root '" + std::string(text) + "': " + why); };
  std::size_t pos = 0;
  bool outer_pm = false;
  bool paren = false;
  if (starts_with_pm(text, pos) && pos + 2 < text.size() && text[pos + 2] == '(') {
    outer_pm = true;
    paren = true;
    pos += 3;
  }
  std::vector<Term> terms;
  while (pos < text.size() && text[pos] != ')') {
    int sign = 1;
    if (starts_with_pm(text, pos)) {
      sign = 0;
      pos += 2;
    } else if (text[pos] == '+' || text[pos] == '-') {
      sign = text[pos] == '-' ? -1 : 1;
      ++pos;
    } else if (!terms.empty()) {
      throw fail("missing sign");
    }
    std::size_t start = pos;
    while (pos < text.size() && (std::isdigit(static_cast<unsigned char>(text[pos])) || text[pos] == '/')) ++pos;
    const Rational coef = pos == start ? Rational(1) : parse_rational(text.substr(start, pos - start));
    start = pos;
    while (pos < text.size() && std::isalnum(static_cast<unsigned char>(text[pos]))) ++pos;
    const std::string_view name = text.substr(start, pos - start);
    auto it = std::find_if(symbols.begin(), symbols.end(), [&](const QuotientSymbol& s) { return s.name == name; });
    if (it == symbols.end()) throw fail("unknown symbol '" + std::string(name) + "'");
    terms.push_back({sign, coef, static_cast<std::size_t>(it - symbols.begin())});
  }
  if (paren != (pos < text.size())) throw fail("unbalanced parenthesis");
  if (terms.empty()) throw fail("empty");

  std::vector<std::vector<Rational>> out = {std::vector<Rational>(symbols.size())};
  for (const auto& t : terms) {
    std::vector<std::vector<Rational>> next;
    for (const auto& c : out) {
      for (int s : t.sign == 0 ? std::vector<int>{1, -1} : std::vector<int>{t.sign}) {
        auto d = c;
        d[t.symbol] += Rational(s) * t.coef;
        next.push_back(std::move(d));
      }
    }
    out = std::move(next);
  }
  if (outer_pm) {
    const std::size_t n = out.size();
    for (std::size_t i = 0; i < n; ++i) {
      auto d = out[i];
      for (auto& x : d) x = -x;
      out.push_back(std::move(d));
    }
  }
  return out;
}

inline std::vector<std::size_t> range(std::size_t lo, std::size_t hi) {
  std::vector<std::size_t> out;
  for (std::size_t i = lo; i < hi; ++i) out.push_back(i);
  return out;
}

}  // namespace detail

/// One pair per case of the classification, at the smallest size where the
/// quotient is not the whole root system (except where k is a Cartan).
inline std::vector<HermitianPair> hermitian_catalog() {
  using detail::range;
  auto unit = [](std::size_t dim, std::size_t i) { return RationalVector::unit(dim, i); };
  std::vector<HermitianPair> out;

  // sl(3|2): coordinates eps1..3, delta1..2
  out.push_back({"sl-pq",
                 sl(3, 2),
                 "su(1,2) + su(1,1) + u(1)",
                 {{{1, 2}}},
                 {{"e1", unit(5, 0)}, {"e2", unit(5, 1)}, {"d1", unit(5, 3)}, {"d2", unit(5, 4)}},
                 {"±(e1-e2)", "±(d1-d2)"},
                 {"±(e1-d1)", "±(e1-d2)", "±(e2-d1)", "±(e2-d2)"},
                 {24, 4, 6}});
  out.push_back({"sl-p0",
                 sl(3, 2),
                 "su(3) + su(1,1) + u(1)",
                 {{{0, 1, 2}}},
                 {{"e", unit(5, 0)}, {"d1", unit(5, 3)}, {"d2", unit(5, 4)}},
                 {"±(d1-d2)"},
                 {"±(e-d1)", "±(e-d2)"},
                 {6, 2, 3}});
  out.push_back({"sl-p0-r0",
                 sl(2, 1),
                 "su(2) + su(1) + u(1)",
                 {{{0, 1}}},
                 {{"e", unit(3, 0)}, {"d", unit(3, 2)}},
                 {},
                 {"±(e-d)"},
                 {2, 1, 2}});
  // osp(5|4): coordinates eps1..2, delta1..2
  out.push_back({"osp-odd",
                 osp(5, 4),
                 "so(2,3) + sp(2,R)",
                 {{{1}}, {{2, 3}, true}},
                 {{"e", unit(4, 0)}, {"d", unit(4, 2)}},
                 {"±e", "±2d"},
                 {"±e±d", "±d"},
                 {8, 4, 2}});
  out.push_back({"osp-1", osp(1, 4), "sp(2,R)", {{{0, 1}, true}}, {{"d", unit(2, 0)}}, {"±2d"}, {"±d"}, {2, 2, 1}});
  // osp(2|4): coordinates eps1, delta1..2
  out.push_back({"osp-2-sl",
                 osp(2, 4),
                 "so(2) + sp(2,R)",
                 {{{1, 2}, true}},
                 {{"e", unit(3, 0)}, {"d", unit(3, 1)}},
                 {"±2d"},
                 {"±e±d"},
                 {6, 2, 3}});
  out.push_back({"osp-2-sp",
                 osp(2, 4),
                 "so(2) + sp(2)",
                 {{{1, 2}}},
                 {{"e", unit(3, 0)}},
                 {},
                 {"±e"},
                 {2, 1, 2}});
  // osp(6|4): coordinates eps1..3, delta1..2
  out.push_back({"osp-even-so",
                 osp(6, 4),
                 "so(2,4) + sp(2,R)",
                 {{{1, 2}}, {{3, 4}, true}},
                 {{"e", unit(5, 0)}, {"d", unit(5, 3)}},
                 {"±e", "±2d"},
                 {"±e±d", "±d"},
                 {8, 4, 2}});
  // osp(4|4): coordinates eps1..2, delta1..2
  out.push_back({"osp-even-gl",
                 osp(4, 4),
                 "so*(4) + sp(2)",
                 {{{0, 1}, true}, {{2, 3}, true}},
                 {{"e", unit(4, 0)}, {"d", unit(4, 2)}},
                 {"±2e", "±2d"},
                 {"±e±d"},
                 {8, 4, 2}});
  out.push_back({"d21a-cartan",
                 d21a(),
                 "sl(2,R) + sl(2,R) + sl(2,R)",
                 {},
                 {{"e1", unit(3, 0)}, {"e2", unit(3, 1)}, {"e3", unit(3, 2)}},
                 {"±2e1", "±2e2", "±2e3"},
                 {"±e1±e2±e3"},
                 {32, 8, 4}});
  out.push_back({"d21a-sl2",
                 d21a(),
                 "sl(2,R) + su(2) + su(2)",
                 {{{1}}, {{2}}},
                 {{"e", unit(3, 0)}},
                 {"±2e"},
                 {"±e"},
                 {2, 2, 1}});
  // F(4): coordinates eps1..3, delta
  out.push_back({"f4-so5",
                 f4(),
                 "su(2) + so(2,5)",
                 {{{1, 2}}, {{3}}},
                 {{"e", unit(4, 0)}},
                 {"±e"},
                 {"±1/2e"},
                 {2, 2, 1}});
  out.push_back({"f4-so7",
                 f4(),
                 "sl(2,R) + so(7)",
                 {{range(0, 3)}},
                 {{"d", unit(4, 3)}},
                 {"±d"},
                 {"±1/2d"},
                 {2, 2, 1}});
  // G(3): coordinates eps1, eps2, delta
  out.push_back({"g3", g3(), "G2 + sl(2,R)", {{{0, 1}}}, {{"d", unit(3, 2)}}, {"±2d"}, {"±d"}, {2, 2, 1}});
  return out;
}

inline const HermitianPair& hermitian_case(std::string_view id) {
  static const std::vector<HermitianPair> catalog = hermitian_catalog();
  for (const auto& p : catalog) {
    if (p.id == id) return p;
  }
  std::string known;
  for (const auto& p : catalog) known += (known.empty() ? "" : ", ") + p.id;
  throw UsageError("unknown Hermitian case '" + std::string(id) + "' (known: " + known + ")");
}

inline bool is_compact(const RootSystem& sys, std::size_t i, const std::vector<CompactBlock>& blocks) {
  if (!sys.roots.has_even(i) || sys.roots.has_odd(i)) return false;
  const RationalVector& v = sys.roots[i];
  for (const auto& b : blocks) {
    bool inside = true;
    Rational total(0);
    for (std::size_t c = 0; c < v.size(); ++c) {
      if (v[c] == 0) continue;
      if (std::find(b.coords.begin(), b.coords.end(), c) == b.coords.end()) {
        inside = false;
        break;
      }
      total += v[c];
    }
    if (inside && (!b.traceless || total == 0)) return true;
  }
  return false;
}

/// Everything derived from a catalog pair.
struct HermitianData {
  HermitianPair pair;
  std::shared_ptr<const RootSystem> sys;
  std::vector<std::size_t> compact;  // Delta_k, sorted source indices
  KostantSystem K;                   // Delta / <Delta_k>
  RootSet R0;                        // even part of R
  std::vector<std::size_t> R0_in_R;  // index in R of each element of R0
  std::vector<RationalVector> R0_expected, R1_expected;
  std::vector<RationalVector> R0_computed, R1_computed;

  bool span_closed() const { return elements_in_span(sys->roots, compact) == compact; }
  bool R0_matches() const { return R0_computed == R0_expected; }
  bool R1_matches() const { return R1_computed == R1_expected; }
};

inline HermitianData analyze_pair(const HermitianPair& pair) {
  HermitianData d;
  d.pair = pair;
  d.sys = make_root_system(pair.algebra);
  const RootSet& roots = d.sys->roots;
  for (std::size_t i = 0; i < roots.size(); ++i) {
    if (is_compact(*d.sys, i, pair.compact)) d.compact.push_back(i);
  }
  d.K = kostant_from_map(d.sys, quotient_by(d.sys->ambient_dim(), roots.select(d.compact)).map);

  std::vector<std::pair<RationalVector, ParityMask>> even;
  for (std::size_t r = 0; r < d.K.R.size(); ++r) {
    if (d.K.R.has_even(r)) even.emplace_back(d.K.R[r], kEvenBit);
  }
  d.R0 = RootSet(d.K.R.dim(), std::move(even));
  for (const auto& v : d.R0.vectors()) d.R0_in_R.push_back(d.K.R.index_of(v));

  std::set<RationalVector> r0, r1;
  for (std::size_t i = 0; i < roots.size(); ++i) {
    const RationalVector img = d.K.project(roots[i]);
    if (roots.has_even(i) && !img.is_zero()) r0.insert(img);
    if (roots.has_odd(i)) r1.insert(img);
  }
  d.R0_computed.assign(r0.begin(), r0.end());
  d.R1_computed.assign(r1.begin(), r1.end());

  std::vector<RationalVector> images;
  for (const auto& s : pair.symbols) images.push_back(d.K.project(s.vector));
  auto expected = [&](const std::vector<std::string>& listed) {
    std::set<RationalVector> out;
    for (const auto& text : listed) {
      for (const auto& c : detail::expand_listed(text, pair.symbols)) {
        RationalVector v(d.K.R.dim());
        for (std::size_t j = 0; j < c.size(); ++j) v += c[j] * images[j];
        out.insert(v);
      }
    }
    return std::vector<RationalVector>(out.begin(), out.end());
  };
  d.R0_expected = expected(pair.R0);
  d.R1_expected = expected(pair.R1);
  return d;
}

struct HermitianCountResult {
  HermitianCounts counts;
  bool uniform = false;  // every R0+ has the same number of extensions
  std::vector<std::size_t> per_even;
};

/// Brute-force counts over the chambers of R and of R0.
inline HermitianCountResult count_positive_systems(const HermitianData& d) {
  HermitianCountResult out;
  const auto all = enumerate_positive_systems(d.K.R);
  const auto even = enumerate_positive_systems(d.R0);
  out.counts.n_pos = all.size();
  out.counts.n_pos_even = even.size();
  std::map<PositiveSystem, std::size_t> by_even;
  for (const auto& p : even) by_even.emplace(p, 0);
  for (const auto& p : all) {
    PositiveSystem restricted(d.R0.size());
    for (std::size_t j = 0; j < d.R0.size(); ++j) restricted[j] = p[d.R0_in_R[j]];
    auto it = by_even.find(restricted);
    if (it == by_even.end()) throw ConsistencyError("a positive system of R restricts to no positive system of R0");
    ++it->second;
  }
  for (const auto& [p, n] : by_even) out.per_even.push_back(n);
  out.uniform = !out.per_even.empty() &&
                std::all_of(out.per_even.begin(), out.per_even.end(), [&](std::size_t n) { return n == out.per_even[0]; });
  out.counts.n_ext = out.uniform ? out.per_even[0] : 0;
  return out;
}

/// Positive roots split into compact and non-compact parts; indices into the
/// source root set.
struct AdmissibleSystem {
  std::vector<std::size_t> positive;
  std::vector<std::size_t> compact;
  std::vector<std::size_t> noncompact;
};

inline AdmissibleSystem split_admissible(const HermitianData& d, std::vector<std::size_t> positive) {
  std::sort(positive.begin(), positive.end());
  AdmissibleSystem a;
  a.positive = positive;
  for (auto i : positive) {
    (std::binary_search(d.compact.begin(), d.compact.end(), i) ? a.compact : a.noncompact).push_back(i);
  }
  return a;
}

/// (Delta_k + Delta_p+) and (Delta_p+ + Delta_p+) stay in Delta_p+, with sums
/// taken inside the given universe of roots (Delta or Delta_0).
inline bool is_admissible(const HermitianData& d, const AdmissibleSystem& a, bool even_only) {
  const RootSet& roots = d.sys->roots;
  std::vector<bool> in_p(roots.size(), false);
  for (auto i : a.noncompact) in_p[i] = true;
  auto in_universe = [&](int s) { return s >= 0 && (!even_only || roots.has_even(static_cast<std::size_t>(s))); };
  for (auto p : a.noncompact) {
    for (auto k : d.compact) {
      const int s = roots.sum(k, p);
      if (in_universe(s) && !in_p[static_cast<std::size_t>(s)]) return false;
    }
    for (auto q : a.noncompact) {
      const int s = roots.sum(p, q);
      if (in_universe(s) && !in_p[static_cast<std::size_t>(s)]) return false;
    }
  }
  return true;
}

inline std::vector<std::size_t> even_roots(const RootSystem& sys) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < sys.roots.size(); ++i) {
    if (sys.roots.has_even(i)) out.push_back(i);
  }
  return out;
}

/// Is the given set of even roots a positive system of Delta_0?
inline bool is_even_positive_system(const HermitianData& d, const std::vector<std::size_t>& positive) {
  const auto even = even_roots(*d.sys);
  const RootSet e = d.sys->roots.subset(even);
  PositiveSystem p(e.size(), false);
  for (auto i : positive) {
    if (!d.sys->roots.has_even(i)) return false;
    p[e.index_of(d.sys->roots[i])] = true;
  }
  return is_positive_system(e, p);
}

/// Admissible even positive systems built from the positive systems of R0
/// and a fixed positive system of Delta_k: roots over R0+ plus the compact
/// roots positive for the first generic functional.
inline std::vector<AdmissibleSystem> standard_even_systems(const HermitianData& d) {
  const RootSet& roots = d.sys->roots;
  const RationalVector f = generic_functional(roots.dim(), roots.vectors());
  std::vector<AdmissibleSystem> out;
  for (const auto& p0 : enumerate_positive_systems(d.R0)) {
    std::vector<std::size_t> positive;
    for (std::size_t i = 0; i < roots.size(); ++i) {
      if (!roots.has_even(i)) continue;
      if (d.K.image[i] < 0) {
        if (f.dot(roots[i]) > 0) positive.push_back(i);
      } else if (p0[d.R0.index_of(d.K.R[static_cast<std::size_t>(d.K.image[i])])]) {
        positive.push_back(i);
      }
    }
    out.push_back(split_admissible(d, std::move(positive)));
  }
  return out;
}

struct Extension {
  AdmissibleSystem system;
  Base base;              // of Delta
  std::vector<std::size_t> I;  // S_0 ∩ Delta_k
  Base base_of_R;         // indices into R
};

/// Extends an admissible positive system of Delta_0 to one of Delta:
/// I = S_0 ∩ Delta_k is a base of Delta_k, pick a positive system of
/// R containing pi(Delta_0+), and lift it along <I>.
inline Extension extend_admissible(const HermitianData& d, const AdmissibleSystem& even) {
  const RootSet& roots = d.sys->roots;
  if (!is_even_positive_system(d, even.positive)) throw PreconditionError("not a positive system of the even roots");
  const AdmissibleSystem checked = split_admissible(d, even.positive);
  if (!is_admissible(d, checked, true)) throw PreconditionError("the even positive system is not admissible");

  const auto evens = even_roots(*d.sys);
  const RootSet e = roots.subset(evens);
  PositiveSystem p0(e.size(), false);
  for (auto i : checked.positive) p0[e.index_of(roots[i])] = true;
  Extension ext;
  for (auto s : indecomposables(e, p0)) {
    const std::size_t i = roots.index_of(e[s]);
    if (std::binary_search(d.compact.begin(), d.compact.end(), i)) ext.I.push_back(i);
  }
  std::sort(ext.I.begin(), ext.I.end());
  if (rank_of(roots.dim(), roots.select(ext.I)) != rank_of(roots.dim(), roots.select(d.compact))) {
    throw ConsistencyError("S_0 ∩ Delta_k is not a base of Delta_k");
  }

  std::vector<bool> want(d.K.R.size(), false);
  for (auto i : checked.noncompact) want[static_cast<std::size_t>(d.K.image[i])] = true;
  const auto systems = enumerate_positive_systems(d.K.R);
  auto it = std::find_if(systems.begin(), systems.end(), [&](const PositiveSystem& p) {
    for (std::size_t r = 0; r < p.size(); ++r) {
      if (want[r] && !p[r]) return false;
    }
    return true;
  });
  if (it == systems.end()) throw ConsistencyError("no positive system of R contains pi(Delta_0+)");
  const PositiveSystem& rplus = *it;

  std::vector<std::size_t> positive;
  for (std::size_t i = 0; i < roots.size(); ++i) {
    const int r = d.K.image[i];
    const bool pos = r < 0 ? std::binary_search(checked.positive.begin(), checked.positive.end(), i)
                           : rplus[static_cast<std::size_t>(r)];
    if (pos) positive.push_back(i);
  }
  ext.system = split_admissible(d, positive);
  PositiveSystem p(roots.size(), false);
  for (auto i : positive) p[i] = true;
  if (!is_positive_system(roots, p)) throw ConsistencyError("the lift is not a positive system of Delta");
  ext.base = indecomposables(roots, p);
  if (!std::includes(ext.base.begin(), ext.base.end(), ext.I.begin(), ext.I.end())) {
    throw ConsistencyError("the lifted base does not contain I");
  }
  const KostantSystem along_I = project(d.sys, ext.I);
  const BaseOfR b = base_of_R(along_I, ext.base);
  if (!b.is_base) throw ConsistencyError("the lifted base does not project to a base of R: " + b.witness);
  const Base expected = indecomposables(d.K.R, rplus);
  std::vector<RationalVector> lifted_images, chosen;
  for (auto s : ext.base) {
    if (d.K.image[s] >= 0) lifted_images.push_back(d.K.R[static_cast<std::size_t>(d.K.image[s])]);
  }
  for (auto r : expected) chosen.push_back(d.K.R[r]);
  std::sort(lifted_images.begin(), lifted_images.end());
  if (lifted_images != chosen) throw ConsistencyError("the lifted base projects to a different base of R");
  ext.base_of_R = expected;
  if (!std::includes(positive.begin(), positive.end(), checked.positive.begin(), checked.positive.end())) {
    throw ConsistencyError("the extension does not contain Delta_0+");
  }
  if (!is_admissible(d, ext.system, false)) throw ConsistencyError("the extension is not admissible");
  return ext;
}

}  // namespace kostant
