#pragma once

#include <algorithm>
#include <cstdint>
#include <deque>
#include <map>
#include <set>
#include <unordered_set>
#include <vector>

#include "kostant/bases.hpp"
#include "kostant/errors.hpp"
#include "kostant/linalg.hpp"
#include "kostant/root_system.hpp"
#include "kostant/union_find.hpp"

namespace kostant {

/// perm[i] is the index of the image of root i.
using RootPermutation = std::vector<std::uint32_t>;

struct WeylGroup {
  std::vector<std::size_t> reflection_roots;  // one even root per reflection
  std::vector<LinearMap> generator_matrices;
  std::vector<RootPermutation> generators;
  std::vector<RootPermutation> elements;  // sorted; contains the identity

  std::size_t order() const { return elements.size(); }
};

/// The linear map on the ambient space that sends each root to the given
/// image and fixes the complement of the root span pointwise. Checks that
/// the result really maps roots as prescribed and preserves parity.
inline LinearMap linear_extension(const RootSet& set, const RootPermutation& perm) {
  const std::size_t dim = set.dim();
  const RowEchelon span = row_reduce(dim, set.vectors());
  std::vector<std::size_t> basis;
  {
    RowEchelon grow;
    grow.dim = dim;
    for (std::size_t i = 0; i < set.size() && grow.rank() < span.rank(); ++i) {
      if (grow.insert(set[i])) basis.push_back(i);
    }
  }
  const auto free = span.free_columns();
  std::vector<RationalVector> src;
  for (auto b : basis) src.push_back(set[b]);
  for (auto c : free) src.push_back(RationalVector::unit(dim, c));
  LinearMap m;
  m.source_dim = dim;
  for (std::size_t row = 0; row < dim; ++row) {
    RationalVector rhs(src.size());
    for (std::size_t k = 0; k < basis.size(); ++k) rhs[k] = set[perm[basis[k]]][row];
    for (std::size_t k = 0; k < free.size(); ++k) rhs[basis.size() + k] = free[k] == row ? 1 : 0;
    auto r = solve_system(dim, src, rhs);
    if (!r) throw ConsistencyError("root permutation has no linear extension");
    m.rows.push_back(std::move(*r));
  }
  for (std::size_t i = 0; i < set.size(); ++i) {
    if (m.apply(set[i]) != set[perm[i]]) throw ConsistencyError("root permutation is not linear");
    if (set.mask(i) != set.mask(perm[i])) throw ConsistencyError("root permutation does not preserve parity");
  }
  return m;
}

/// Reflection in an even root, computed from root strings:
/// s(b) = b - (p - q) a where b - p a, ..., b + q a is the a-string through b
/// (0 counts as a member of the string).
inline RootPermutation reflection(const RootSet& set, std::size_t a) {
  if (!set.has_even(a)) throw PreconditionError("reflections are taken in even roots only");
  const RationalVector& alpha = set[a];
  auto in_closure = [&](const RationalVector& v) { return v.is_zero() || set.contains(v); };
  RootPermutation perm(set.size());
  for (std::size_t b = 0; b < set.size(); ++b) {
    Integer p = 0, q = 0;
    RationalVector v = set[b];
    while (in_closure(v - alpha)) {
      v -= alpha;
      ++p;
      if (p > static_cast<Integer>(set.size()) + 2) throw ConsistencyError("unbounded root string");
    }
    v = set[b];
    while (in_closure(v + alpha)) {
      v += alpha;
      ++q;
      if (q > static_cast<Integer>(set.size()) + 2) throw ConsistencyError("unbounded root string");
    }
    const RationalVector image = set[b] - Rational(p - q) * alpha;
    auto idx = set.find(image);
    if (!idx) throw ConsistencyError("reflection in " + alpha.to_short_string() + " leaves the root set");
    perm[b] = static_cast<std::uint32_t>(*idx);
  }
  std::vector<bool> hit(set.size(), false);
  for (auto x : perm) hit[x] = true;
  if (std::find(hit.begin(), hit.end(), false) != hit.end()) throw ConsistencyError("reflection is not a bijection");
  return perm;
}

inline RootPermutation compose(const RootPermutation& a, const RootPermutation& b) {
  RootPermutation out(b.size());
  for (std::size_t i = 0; i < b.size(); ++i) out[i] = a[b[i]];
  return out;
}

inline RootPermutation permutation_of(const RootSet& set, const LinearMap& m) {
  RootPermutation perm(set.size());
  for (std::size_t i = 0; i < set.size(); ++i) {
    auto idx = set.find(m.apply(set[i]));
    if (!idx) throw PreconditionError("linear map does not preserve the root set");
    perm[i] = static_cast<std::uint32_t>(*idx);
  }
  return perm;
}

inline std::vector<RootPermutation> closure(const std::vector<RootPermutation>& gens, std::size_t n, std::size_t limit) {
  struct Hash {
    std::size_t operator()(const RootPermutation& p) const {
      std::size_t h = p.size();
      for (auto x : p) h = h * 1000003u + x;
      return h;
    }
  };
  RootPermutation id(n);
  for (std::size_t i = 0; i < n; ++i) id[i] = static_cast<std::uint32_t>(i);
  std::unordered_set<RootPermutation, Hash> seen{id};
  std::deque<RootPermutation> queue{id};
  while (!queue.empty()) {
    RootPermutation cur = std::move(queue.front());
    queue.pop_front();
    for (const auto& g : gens) {
      RootPermutation next = compose(g, cur);
      if (seen.insert(next).second) {
        if (seen.size() > limit) throw PreconditionError("group too large to enumerate");
        queue.push_back(std::move(next));
      }
    }
  }
  std::vector<RootPermutation> out(seen.begin(), seen.end());
  std::sort(out.begin(), out.end());
  return out;
}

/// Group generated by the reflections in the even roots.
inline WeylGroup weyl_group(const RootSet& set, std::size_t limit = 400000) {
  WeylGroup w;
  std::set<RootPermutation> distinct;
  for (std::size_t a = 0; a < set.size(); ++a) {
    if (!set.has_even(a) || set.neg(a) < a) continue;
    RootPermutation r = reflection(set, a);
    if (!distinct.insert(r).second) continue;
    w.reflection_roots.push_back(a);
    w.generator_matrices.push_back(linear_extension(set, r));
    w.generators.push_back(std::move(r));
  }
  w.elements = closure(w.generators, set.size(), limit);
  return w;
}

inline WeylGroup weyl_group(const RootSystem& sys, std::size_t limit = 400000) { return weyl_group(sys.roots, limit); }

inline Base apply(const RootPermutation& perm, const Base& b) {
  Base out;
  out.reserve(b.size());
  for (auto i : b) out.push_back(perm[i]);
  std::sort(out.begin(), out.end());
  return out;
}

struct BaseClass {
  Base representative;  // lexicographically smallest member
  std::vector<std::size_t> members;  // indices into the base list
};

/// Orbits of the given bases under the group generated by `gens`.
inline std::vector<BaseClass> base_orbits(const std::vector<Base>& bases, const std::vector<RootPermutation>& gens) {
  std::map<Base, std::size_t> id;
  for (std::size_t i = 0; i < bases.size(); ++i) id.emplace(bases[i], i);
  UnionFind uf(bases.size());
  for (std::size_t i = 0; i < bases.size(); ++i) {
    for (const auto& g : gens) {
      auto it = id.find(apply(g, bases[i]));
      if (it == id.end()) throw ConsistencyError("a symmetry maps a base to a non-base");
      uf.unite(i, it->second);
    }
  }
  std::map<std::size_t, BaseClass> by_root;
  for (std::size_t i = 0; i < bases.size(); ++i) {
    auto& c = by_root[uf.find(i)];
    if (c.members.empty() || bases[i] < c.representative) c.representative = bases[i];
    c.members.push_back(i);
  }
  std::vector<BaseClass> out;
  for (auto& [k, c] : by_root) out.push_back(std::move(c));
  std::sort(out.begin(), out.end(), [](const BaseClass& a, const BaseClass& b) { return a.representative < b.representative; });
  return out;
}

/// Coordinate permutations that preserve the root set and parities but lie
/// outside W. Only D(2,1;a) has them in this catalog (permuting delta_i).
inline std::vector<RootPermutation> extra_symmetries(const RootSystem& sys) {
  std::vector<RootPermutation> out;
  if (sys.spec.family != Family::d21a) return out;
  const std::vector<std::vector<int>> swaps = {{1, 0, 2}, {0, 2, 1}};
  for (const auto& s : swaps) {
    LinearMap m;
    m.source_dim = 3;
    for (int i = 0; i < 3; ++i) m.rows.push_back(RationalVector::unit(3, s[i]));
    RootPermutation p = permutation_of(sys.roots, m);
    linear_extension(sys.roots, p);
    out.push_back(std::move(p));
  }
  return out;
}

struct WeylClassification {
  std::size_t base_count = 0;
  std::size_t group_order = 0;
  std::vector<BaseClass> classes;            // W-orbits
  std::vector<BaseClass> collapsed_classes;  // orbits of W together with extra symmetries
};

inline WeylClassification base_classes_up_to_W(const RootSystem& sys, const std::vector<Base>& bases, const WeylGroup& w) {
  WeylClassification out;
  out.base_count = bases.size();
  out.group_order = w.order();
  out.classes = base_orbits(bases, w.generators);
  auto gens = w.generators;
  for (auto& g : extra_symmetries(sys)) gens.push_back(std::move(g));
  out.collapsed_classes = base_orbits(bases, gens);
  return out;
}

inline WeylClassification base_classes_up_to_W(const RootSystem& sys) {
  return base_classes_up_to_W(sys, enumerate_bases(sys.roots), weyl_group(sys));
}

}  // namespace kostant
