#pragma once

#include <algorithm>
#include <cstddef>
#include <deque>
#include <optional>
#include <set>
#include <unordered_set>
#include <vector>

#include "kostant/errors.hpp"
#include "kostant/linalg.hpp"
#include "kostant/root_system.hpp"

namespace kostant {

/// Indices into a RootSet, kept sorted, so a base compares as its sorted
/// list of coordinate tuples.
using Base = std::vector<std::size_t>;

/// positives[i] is true when element i is positive.
using PositiveSystem = std::vector<bool>;

inline std::vector<std::size_t> members(const PositiveSystem& p) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (p[i]) out.push_back(i);
  }
  return out;
}

/// Coefficients of every element with respect to a candidate base, or
/// nullopt when the candidate is dependent or fails to span.
inline std::optional<std::vector<std::vector<Rational>>> base_coordinates(const RootSet& set, const Base& cand) {
  const auto vecs = set.select(cand);
  if (rank_of(set.dim(), vecs) != vecs.size()) return std::nullopt;
  const Decomposer d(set.dim(), vecs);
  std::vector<std::vector<Rational>> out;
  out.reserve(set.size());
  for (std::size_t i = 0; i < set.size(); ++i) {
    auto c = d.solve(set[i]);
    if (!c) return std::nullopt;
    out.push_back(std::move(*c));
  }
  return out;
}

inline bool one_signed_integral(const std::vector<Rational>& c) {
  bool pos = false, neg = false;
  for (const auto& x : c) {
    if (!is_integer(x)) return false;
    pos = pos || x > 0;
    neg = neg || x < 0;
  }
  return !(pos && neg);
}

/// Linear independence plus one-signed integral generation of every element.
inline bool is_base(const RootSet& set, const Base& cand) {
  if (cand.size() != set.rank()) return false;
  if (set.empty()) return cand.empty();
  const auto coords = base_coordinates(set, cand);
  if (!coords) return false;
  return std::all_of(coords->begin(), coords->end(), one_signed_integral);
}

/// Integer coefficient matrix of every element; throws unless cand is a base.
inline std::vector<std::vector<Integer>> base_coefficients(const RootSet& set, const Base& cand) {
  const auto coords = base_coordinates(set, cand);
  if (!coords || cand.size() != set.rank()) throw PreconditionError("not a base");
  std::vector<std::vector<Integer>> out;
  for (const auto& row : *coords) {
    if (!one_signed_integral(row)) throw PreconditionError("not a base");
    std::vector<Integer> r;
    for (const auto& x : row) r.push_back(x.numerator());
    out.push_back(std::move(r));
  }
  return out;
}

inline PositiveSystem positives_of_functional(const RootSet& set, const RationalVector& f) {
  PositiveSystem p(set.size());
  for (std::size_t i = 0; i < set.size(); ++i) {
    const Rational v = f.dot(set[i]);
    if (v == 0) throw PreconditionError("functional vanishes on " + set[i].to_short_string());
    p[i] = v > 0;
  }
  return p;
}

/// Elements that are nonnegative combinations of the base.
inline PositiveSystem positives_of_base(const RootSet& set, const Base& base) {
  const auto coords = base_coordinates(set, base);
  if (!coords) throw PreconditionError("not a base");
  PositiveSystem p(set.size());
  for (std::size_t i = 0; i < set.size(); ++i) {
    p[i] = std::any_of((*coords)[i].begin(), (*coords)[i].end(), [](const Rational& x) { return x > 0; });
  }
  return p;
}

/// Positive elements that are not a sum of two positive elements (a sum
/// of an element with itself counts).
inline Base indecomposables(const RootSet& set, const PositiveSystem& p) {
  std::vector<bool> decomposable(set.size(), false);
  for (std::size_t i = 0; i < set.size(); ++i) {
    if (!p[i]) continue;
    for (std::size_t j = i; j < set.size(); ++j) {
      if (!p[j]) continue;
      const int s = set.sum(i, j);
      if (s >= 0) decomposable[static_cast<std::size_t>(s)] = true;
    }
  }
  Base out;
  for (std::size_t i = 0; i < set.size(); ++i) {
    if (p[i] && !decomposable[i]) out.push_back(i);
  }
  return out;
}

/// R = P u -P disjointly and sums of positives that lie in R are positive.
inline bool is_positive_system(const RootSet& set, const PositiveSystem& p) {
  if (p.size() != set.size()) return false;
  for (std::size_t i = 0; i < set.size(); ++i) {
    if (p[i] == p[set.neg(i)]) return false;
  }
  for (std::size_t i = 0; i < set.size(); ++i) {
    if (!p[i]) continue;
    for (std::size_t j = i; j < set.size(); ++j) {
      if (!p[j]) continue;
      const int s = set.sum(i, j);
      if (s >= 0 && !p[static_cast<std::size_t>(s)]) return false;
    }
  }
  return true;
}

/// Some f with f(s) = 1 for every s in the base: a witness functional
/// for the positive system the base generates.
inline RationalVector functional_for_base(const RootSet& set, const Base& base) {
  auto f = solve_system(set.dim(), set.select(base), RationalVector(std::vector<Rational>(base.size(), Rational(1))));
  if (!f) throw PreconditionError("base elements are dependent");
  return *f;
}

/// One positive system, from the first generic functional (1, t, t^2, ...).
inline PositiveSystem some_positive_system(const RootSet& set) {
  return positives_of_functional(set, generic_functional(set.dim(), set.vectors()));
}

/// A single base, for systems too large to enumerate.
inline Base find_base(const RootSet& set) {
  Base b = indecomposables(set, some_positive_system(set));
  if (!is_base(set, b)) throw ConsistencyError("indecomposables of a chamber are not a base");
  return b;
}

/// All positive systems cut out by generic functionals. Walks the chamber
/// graph: the walls of a chamber are the kernels of its simple elements and
/// crossing the wall of s flips exactly the elements on the line through s.
inline std::vector<PositiveSystem> enumerate_positive_systems(const RootSet& set, std::size_t limit = 2000000) {
  if (set.empty()) return {PositiveSystem{}};
  std::unordered_set<PositiveSystem> seen;
  std::deque<PositiveSystem> queue;
  PositiveSystem start = some_positive_system(set);
  seen.insert(start);
  queue.push_back(std::move(start));
  while (!queue.empty()) {
    PositiveSystem p = std::move(queue.front());
    queue.pop_front();
    for (std::size_t s : indecomposables(set, p)) {
      PositiveSystem q = p;
      for (std::size_t i = 0; i < set.size(); ++i) {
        if (set.line(i) == set.line(s)) q[i] = !q[i];
      }
      if (seen.insert(q).second) {
        if (seen.size() > limit) throw PreconditionError("too many positive systems to enumerate");
        queue.push_back(std::move(q));
      }
    }
  }
  std::vector<std::pair<Base, PositiveSystem>> keyed;
  keyed.reserve(seen.size());
  for (const auto& p : seen) keyed.emplace_back(indecomposables(set, p), p);
  std::sort(keyed.begin(), keyed.end());
  std::vector<PositiveSystem> out;
  out.reserve(keyed.size());
  for (auto& [b, p] : keyed) out.push_back(std::move(p));
  return out;
}

/// Oracle: every choice of sign per {v, -v} pair that satisfies the axioms.
inline std::vector<PositiveSystem> positive_systems_by_axioms(const RootSet& set) {
  std::vector<std::size_t> reps;
  for (std::size_t i = 0; i < set.size(); ++i) {
    if (i < set.neg(i)) reps.push_back(i);
  }
  if (reps.size() > 24) throw PreconditionError("too many roots for the axiom filter");
  std::vector<PositiveSystem> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << reps.size()); ++mask) {
    PositiveSystem p(set.size());
    for (std::size_t k = 0; k < reps.size(); ++k) {
      const bool pos = (mask >> k) & 1;
      p[reps[k]] = pos;
      p[set.neg(reps[k])] = !pos;
    }
    if (is_positive_system(set, p)) out.push_back(std::move(p));
  }
  return out;
}

/// Bases in canonical order (lexicographic on sorted index lists).
inline std::vector<Base> enumerate_bases(const RootSet& set) {
  std::vector<Base> out;
  for (const auto& p : enumerate_positive_systems(set)) {
    Base b = indecomposables(set, p);
    if (!is_base(set, b)) throw ConsistencyError("indecomposables of a positive system are not a base");
    out.push_back(std::move(b));
  }
  std::sort(out.begin(), out.end());
  return out;
}

inline std::size_t binomial(std::size_t n, std::size_t k) {
  if (k > n) return 0;
  long double r = 1;
  for (std::size_t i = 1; i <= k; ++i) r = r * static_cast<long double>(n - k + i) / static_cast<long double>(i);
  return static_cast<std::size_t>(r + 0.5L);
}

/// Oracle: is_base over every rank-sized subset. Returns nullopt when the
/// number of subsets exceeds the guard.
inline std::optional<std::vector<Base>> bases_by_subset_filter(const RootSet& set, std::size_t guard = 1000000) {
  const std::size_t n = set.size(), k = set.rank();
  if (binomial(n, k) > guard) return std::nullopt;
  std::vector<Base> out;
  Base cur;
  auto rec = [&](auto&& self, std::size_t from) -> void {
    if (cur.size() == k) {
      if (is_base(set, cur)) out.push_back(cur);
      return;
    }
    for (std::size_t i = from; i + (k - cur.size()) <= n; ++i) {
      cur.push_back(i);
      self(self, i + 1);
      cur.pop_back();
    }
  };
  rec(rec, 0);
  return out;
}

namespace detail {

/// h = M * (phi o q) + g where phi is generic on the quotient by W and
/// M is large enough that h has the sign of phi o q off W.
inline RationalVector dominant_functional(const RootSet& set, const Quotient& q, const RationalVector& g) {
  std::vector<RationalVector> images;
  for (const auto& v : set.vectors()) {
    RationalVector w = q.map.apply(v);
    if (!w.is_zero()) images.push_back(std::move(w));
  }
  RationalVector h = g;
  if (images.empty()) return h;
  const RationalVector phi = generic_functional(q.map.target_dim(), images);
  Rational min_phi(-1), max_g(0);
  for (const auto& v : set.vectors()) {
    max_g = std::max(max_g, abs(g.dot(v)));
    const Rational p = abs(phi.dot(q.map.apply(v)));
    if (p != 0 && (min_phi < 0 || p < min_phi)) min_phi = p;
  }
  const Rational big = max_g / min_phi + 1;
  for (std::size_t j = 0; j < phi.size(); ++j) h += (big * phi[j]) * q.map.rows[j];
  return h;
}

}  // namespace detail

/// A base whose intersection with W generates every element of W one-signedly.
inline Base adapted_base(const RootSet& set, const std::vector<RationalVector>& w_span) {
  const Quotient q = quotient_by(set.dim(), w_span);
  std::vector<RationalVector> inside;
  for (const auto& v : set.vectors()) {
    if (q.kernel.contains(v)) inside.push_back(v);
  }
  const RationalVector g = generic_functional(set.dim(), inside);
  const RationalVector h = detail::dominant_functional(set, q, g);
  Base b = indecomposables(set, positives_of_functional(set, h));
  if (!is_base(set, b)) throw ConsistencyError("adapted base construction produced a non-base");
  return b;
}

/// Every element of W is a one-signed integral combination of base elements lying in W.
inline bool is_adapted(const RootSet& set, const Base& base, const std::vector<RationalVector>& w_span) {
  const RowEchelon w = row_reduce(set.dim(), w_span);
  Base in_w;
  for (auto s : base) {
    if (w.contains(set[s])) in_w.push_back(s);
  }
  if (in_w.empty()) {
    for (const auto& v : set.vectors()) {
      if (w.contains(v)) return false;
    }
    return true;
  }
  const Decomposer d(set.dim(), set.select(in_w));
  for (const auto& v : set.vectors()) {
    if (!w.contains(v)) continue;
    auto c = d.solve(v);
    if (!c || !one_signed_integral(*c)) return false;
  }
  return true;
}

/// Elements of the set lying in the span of the given elements.
inline std::vector<std::size_t> elements_in_span(const RootSet& set, const std::vector<std::size_t>& gens) {
  const RowEchelon e = row_reduce(set.dim(), set.select(gens));
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < set.size(); ++i) {
    if (e.contains(set[i])) out.push_back(i);
  }
  return out;
}

/// A base of the whole set containing I, if one exists. I extends to a
/// base exactly when it is a base of the elements in its span.
inline std::optional<Base> base_containing(const RootSet& set, std::vector<std::size_t> I) {
  std::sort(I.begin(), I.end());
  I.erase(std::unique(I.begin(), I.end()), I.end());
  if (I.empty()) return find_base(set);
  const auto inside = elements_in_span(set, I);
  const RootSet sub = set.subset(inside);
  Base sub_I;
  for (auto i : I) sub_I.push_back(sub.index_of(set[i]));
  std::sort(sub_I.begin(), sub_I.end());
  if (!is_base(sub, sub_I)) return std::nullopt;
  // g: height with respect to I on span(I), zero on the free unit vectors.
  const Quotient q = quotient_by(set.dim(), set.select(I));
  std::vector<RationalVector> rows = set.select(I);
  RationalVector rhs(rows.size() + q.map.target_dim());
  for (std::size_t k = 0; k < I.size(); ++k) rhs[k] = 1;
  for (std::size_t c : q.kernel.free_columns()) rows.push_back(RationalVector::unit(set.dim(), c));
  auto g = solve_system(set.dim(), rows, rhs);
  if (!g) throw ConsistencyError("height functional is inconsistent");
  const RationalVector h = detail::dominant_functional(set, q, *g);
  Base b = indecomposables(set, positives_of_functional(set, h));
  if (!is_base(set, b) || !std::includes(b.begin(), b.end(), I.begin(), I.end())) {
    throw ConsistencyError("failed to extend a collapse set to a base");
  }
  return b;
}

inline bool extends_to_base(const RootSet& set, const std::vector<std::size_t>& I) {
  return base_containing(set, I).has_value();
}

}  // namespace kostant
