#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "kostant/algebra_spec.hpp"
#include "kostant/errors.hpp"
#include "kostant/linalg.hpp"
#include "kostant/vector.hpp"

namespace kostant {

enum class Parity : std::uint8_t { even = 1, odd = 2 };

/// Bit set of parities present over a fiber; a root of a superalgebra has exactly one.
using ParityMask = std::uint8_t;
inline constexpr ParityMask kEvenBit = 1;
inline constexpr ParityMask kOddBit = 2;

inline const char* parity_name(Parity p) { return p == Parity::even ? "even" : "odd"; }

struct Root {
  RationalVector vector;
  Parity parity = Parity::even;
};

/// A finite, negation-closed set of nonzero vectors sorted lexicographically.
/// Used both for root systems and for Kostant root systems. Every algorithm
/// addresses elements by index, and index order is vector order.
class RootSet {
 public:
  static constexpr int kZero = -1;
  static constexpr int kNone = -2;

  RootSet() = default;

  /// Duplicate vectors are merged by OR-ing their parity masks.
  RootSet(std::size_t dim, std::vector<std::pair<RationalVector, ParityMask>> elems) : dim_(dim) {
    std::sort(elems.begin(), elems.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    for (auto& [v, mask] : elems) {
      if (v.size() != dim) throw std::invalid_argument("root of wrong dimension");
      if (v.is_zero()) throw std::invalid_argument("zero vector in a root set");
      if (!vectors_.empty() && vectors_.back() == v) {
        masks_.back() |= mask;
        continue;
      }
      vectors_.push_back(std::move(v));
      masks_.push_back(mask);
    }
    index_.reserve(vectors_.size() * 2);
    for (std::size_t i = 0; i < vectors_.size(); ++i) index_.emplace(vectors_[i], i);
    neg_.resize(vectors_.size());
    for (std::size_t i = 0; i < vectors_.size(); ++i) {
      auto it = index_.find(-vectors_[i]);
      if (it == index_.end()) throw ConsistencyError("root set is not closed under negation: missing " + (-vectors_[i]).to_short_string());
      neg_[i] = it->second;
    }
    const std::size_t n = vectors_.size();
    sum_.assign(n * n, kNone);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i; j < n; ++j) {
        int s = kNone;
        if (neg_[i] == j) {
          s = kZero;
        } else if (auto it = index_.find(vectors_[i] + vectors_[j]); it != index_.end()) {
          s = static_cast<int>(it->second);
        }
        sum_[i * n + j] = s;
        sum_[j * n + i] = s;
      }
    }
    std::map<RationalVector, int> line_ids;
    lines_.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
      RationalVector d = vectors_[i];
      std::size_t p = 0;
      while (d[p] == 0) ++p;
      d *= Rational(1) / d[p];
      auto [it, inserted] = line_ids.emplace(std::move(d), static_cast<int>(line_ids.size()));
      lines_[i] = it->second;
    }
    line_count_ = line_ids.size();
    rank_ = rank_of(dim_, vectors_);
  }

  std::size_t size() const { return vectors_.size(); }
  bool empty() const { return vectors_.empty(); }
  std::size_t dim() const { return dim_; }
  std::size_t rank() const { return rank_; }
  const RationalVector& operator[](std::size_t i) const { return vectors_[i]; }
  const std::vector<RationalVector>& vectors() const { return vectors_; }
  ParityMask mask(std::size_t i) const { return masks_[i]; }
  bool has_even(std::size_t i) const { return masks_[i] & kEvenBit; }
  bool has_odd(std::size_t i) const { return masks_[i] & kOddBit; }
  /// Parity of a root of a superalgebra (mask with a single bit).
  Parity parity(std::size_t i) const { return (masks_[i] & kOddBit) ? Parity::odd : Parity::even; }
  std::size_t neg(std::size_t i) const { return neg_[i]; }
  /// Index of v_i + v_j, or kZero, or kNone.
  int sum(std::size_t i, std::size_t j) const { return sum_[i * vectors_.size() + j]; }
  int line(std::size_t i) const { return lines_[i]; }
  std::size_t line_count() const { return line_count_; }

  std::optional<std::size_t> find(const RationalVector& v) const {
    auto it = index_.find(v);
    if (it == index_.end()) return std::nullopt;
    return it->second;
  }
  bool contains(const RationalVector& v) const { return index_.count(v) != 0; }
  std::size_t index_of(const RationalVector& v) const {
    auto it = index_.find(v);
    if (it == index_.end()) throw PreconditionError(v.to_short_string() + " is not a root");
    return it->second;
  }

  std::vector<RationalVector> select(const std::vector<std::size_t>& idx) const {
    std::vector<RationalVector> out;
    out.reserve(idx.size());
    for (auto i : idx) out.push_back(vectors_[i]);
    return out;
  }

  /// Elements whose index is listed, as a new root set with the same masks.
  RootSet subset(const std::vector<std::size_t>& idx) const {
    std::vector<std::pair<RationalVector, ParityMask>> e;
    for (auto i : idx) e.emplace_back(vectors_[i], masks_[i]);
    return RootSet(dim_, std::move(e));
  }

 private:
  std::size_t dim_ = 0;
  std::vector<RationalVector> vectors_;
  std::vector<ParityMask> masks_;
  std::unordered_map<RationalVector, std::size_t, RationalVectorHash> index_;
  std::vector<std::size_t> neg_;
  std::vector<int> sum_;
  std::vector<int> lines_;
  std::size_t line_count_ = 0;
  std::size_t rank_ = 0;
};

struct RootSystem {
  AlgebraSpec spec;
  std::vector<std::string> coord_labels;
  RootSet roots;
  int dim_h = 0;
  int dim_center = 0;

  std::size_t ambient_dim() const { return coord_labels.size(); }
  std::size_t size() const { return roots.size(); }
  std::string name() const { return spec.name(); }

  std::size_t count(Parity p) const {
    std::size_t c = 0;
    for (std::size_t i = 0; i < roots.size(); ++i) c += roots.parity(i) == p;
    return c;
  }

  std::vector<Root> root_list() const {
    std::vector<Root> out;
    for (std::size_t i = 0; i < roots.size(); ++i) out.push_back({roots[i], roots.parity(i)});
    return out;
  }
};

namespace detail {

class RootBuilder {
 public:
  explicit RootBuilder(std::size_t dim) : dim_(dim) {}

  void add(RationalVector v, Parity p) { elems_.emplace_back(std::move(v), static_cast<ParityMask>(p)); }
  void add_pm(const RationalVector& v, Parity p) {
    add(v, p);
    add(-v, p);
  }
  RationalVector e(std::size_t i) const { return RationalVector::unit(dim_, i); }

  RootSet finish() {
    // Different formulas never produce the same root; catch it if they do.
    std::sort(elems_.begin(), elems_.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    for (std::size_t i = 1; i < elems_.size(); ++i) {
      if (elems_[i].first == elems_[i - 1].first) throw ConsistencyError("duplicate root " + elems_[i].first.to_short_string());
    }
    return RootSet(dim_, std::move(elems_));
  }

 private:
  std::size_t dim_;
  std::vector<std::pair<RationalVector, ParityMask>> elems_;
};

inline std::vector<std::string> numbered(const std::string& stem, int count, int first = 1) {
  std::vector<std::string> out;
  for (int i = 0; i < count; ++i) out.push_back(stem + std::to_string(first + i));
  return out;
}

/// Roots e_a - e_b for a != b; odd when exactly one index is below `split`.
inline void add_type_a(RootBuilder& b, std::size_t size, std::size_t split) {
  for (std::size_t a = 0; a < size; ++a) {
    for (std::size_t c = 0; c < size; ++c) {
      if (a == c) continue;
      const bool odd = (a < split) != (c < split);
      b.add(b.e(a) - b.e(c), odd ? Parity::odd : Parity::even);
    }
  }
}

/// +-e_i +- e_j for i < j inside [lo, hi)
inline void add_pairs(RootBuilder& b, std::size_t lo, std::size_t hi, Parity p) {
  for (std::size_t i = lo; i < hi; ++i) {
    for (std::size_t j = i + 1; j < hi; ++j) {
      b.add_pm(b.e(i) + b.e(j), p);
      b.add_pm(b.e(i) - b.e(j), p);
    }
  }
}

inline RootSet e8_roots() {
  RootBuilder b(8);
  add_pairs(b, 0, 8, Parity::even);
  for (int mask = 0; mask < 256; ++mask) {
    if (__builtin_popcount(static_cast<unsigned>(mask)) % 2 != 0) continue;
    RationalVector v(8);
    for (int i = 0; i < 8; ++i) v[i] = (mask >> i & 1) ? Rational(-1, 2) : Rational(1, 2);
    b.add(v, Parity::even);
  }
  return b.finish();
}

/// Roots of the ambient set orthogonal (standard dot product) to every vector given.
inline RootSet orthogonal_subset(const RootSet& all, const std::vector<RationalVector>& against) {
  std::vector<std::size_t> keep;
  for (std::size_t i = 0; i < all.size(); ++i) {
    bool ok = true;
    for (const auto& v : against) ok = ok && all[i].dot(v) == 0;
    if (ok) keep.push_back(i);
  }
  return all.subset(keep);
}

inline RootSystem build_lie(const AlgebraSpec& spec) {
  RootSystem s;
  s.spec = spec;
  const int r = spec.m;
  s.dim_h = r;
  s.dim_center = 0;
  switch (spec.lie_type) {
    case 'A': {
      RootBuilder b(r + 1);
      add_type_a(b, r + 1, r + 1);
      s.roots = b.finish();
      s.coord_labels = numbered("e", r + 1);
      break;
    }
    case 'B':
    case 'C':
    case 'D': {
      RootBuilder b(r);
      add_pairs(b, 0, r, Parity::even);
      for (int i = 0; spec.lie_type != 'D' && i < r; ++i) {
        b.add_pm(spec.lie_type == 'B' ? b.e(i) : Rational(2) * b.e(i), Parity::even);
      }
      s.roots = b.finish();
      s.coord_labels = numbered("e", r);
      break;
    }
    case 'G': {
      // (e1, e2) with e3 = -e1 - e2
      RootBuilder b(2);
      const std::vector<RationalVector> eps = {b.e(0), b.e(1), -(b.e(0) + b.e(1))};
      for (int i = 0; i < 3; ++i) {
        for (int j = 0; j < 3; ++j) {
          if (i != j) b.add(eps[i] - eps[j], Parity::even);
        }
        b.add_pm(eps[i], Parity::even);
      }
      s.roots = b.finish();
      s.coord_labels = {"e1", "e2"};
      break;
    }
    case 'F': {
      RootBuilder b(4);
      add_pairs(b, 0, 4, Parity::even);
      for (int i = 0; i < 4; ++i) b.add_pm(b.e(i), Parity::even);
      for (int mask = 0; mask < 16; ++mask) {
        RationalVector v(4);
        for (int i = 0; i < 4; ++i) v[i] = (mask >> i & 1) ? Rational(-1, 2) : Rational(1, 2);
        b.add(v, Parity::even);
      }
      s.roots = b.finish();
      s.coord_labels = numbered("e", 4);
      break;
    }
    case 'E': {
      const RootSet e8 = e8_roots();
      s.coord_labels = numbered("e", 8);
      if (r == 8) {
        s.roots = e8;
      } else {
        // E7 is the centralizer of the root e7+e8; E6 additionally of e6-e7.
        std::vector<RationalVector> against = {RationalVector::unit(8, 6) + RationalVector::unit(8, 7)};
        if (r == 6) against.push_back(RationalVector::unit(8, 5) - RationalVector::unit(8, 6));
        s.roots = orthogonal_subset(e8, against);
      }
      break;
    }
    default:
      throw UsageError("unknown Lie type");
  }
  return s;
}

}  // namespace detail

inline RootSystem build_root_system(const AlgebraSpec& spec) {
  validate(spec);
  using detail::RootBuilder;
  RootSystem s;
  s.spec = spec;
  switch (spec.family) {
    case Family::lie:
      return detail::build_lie(spec);
    case Family::sl:
    case Family::gl: {
      const std::size_t m = spec.m, n = spec.n;
      RootBuilder b(m + n);
      detail::add_type_a(b, m + n, m);
      s.roots = b.finish();
      s.coord_labels = detail::numbered("eps", spec.m);
      for (auto& l : detail::numbered("delta", spec.n)) s.coord_labels.push_back(l);
      s.dim_h = spec.family == Family::sl ? spec.m + spec.n - 1 : 2 * spec.m;
      s.dim_center = spec.family == Family::sl ? 0 : 1;
      return s;
    }
    case Family::osp: {
      const std::size_t k = spec.m / 2, n = spec.n;
      const bool odd_m = spec.m % 2 == 1;
      RootBuilder b(k + n);
      detail::add_pairs(b, 0, k, Parity::even);
      detail::add_pairs(b, k, k + n, Parity::even);
      for (std::size_t j = k; j < k + n; ++j) b.add_pm(Rational(2) * b.e(j), Parity::even);
      for (std::size_t i = 0; odd_m && i < k; ++i) b.add_pm(b.e(i), Parity::even);
      for (std::size_t i = 0; i < k; ++i) {
        for (std::size_t j = k; j < k + n; ++j) {
          b.add_pm(b.e(i) + b.e(j), Parity::odd);
          b.add_pm(b.e(i) - b.e(j), Parity::odd);
        }
      }
      for (std::size_t j = k; odd_m && j < k + n; ++j) b.add_pm(b.e(j), Parity::odd);
      s.roots = b.finish();
      s.coord_labels = detail::numbered("eps", static_cast<int>(k));
      for (auto& l : detail::numbered("delta", spec.n)) s.coord_labels.push_back(l);
      s.dim_h = static_cast<int>(k + n);
      s.dim_center = 0;
      return s;
    }
    case Family::d21a: {
      RootBuilder b(3);
      for (int i = 0; i < 3; ++i) b.add_pm(Rational(2) * b.e(i), Parity::even);
      for (int mask = 0; mask < 8; ++mask) {
        RationalVector v(3);
        for (int i = 0; i < 3; ++i) v[i] = (mask >> i & 1) ? -1 : 1;
        b.add(v, Parity::odd);
      }
      s.roots = b.finish();
      s.coord_labels = {"delta1", "delta2", "delta3"};
      s.dim_h = 3;
      s.dim_center = 0;
      return s;
    }
    case Family::g3: {
      // coordinates (eps1, eps2, delta); eps3 = -eps1 - eps2
      RootBuilder b(3);
      const std::vector<RationalVector> eps = {b.e(0), b.e(1), -(b.e(0) + b.e(1))};
      const RationalVector delta = b.e(2);
      for (int i = 0; i < 3; ++i) {
        for (int j = 0; j < 3; ++j) {
          if (i != j) b.add(eps[i] - eps[j], Parity::even);
        }
        b.add_pm(eps[i], Parity::even);
        b.add_pm(eps[i] + delta, Parity::odd);
        b.add_pm(eps[i] - delta, Parity::odd);
      }
      b.add_pm(Rational(2) * delta, Parity::even);
      b.add_pm(delta, Parity::odd);
      s.roots = b.finish();
      s.coord_labels = {"eps1", "eps2", "delta"};
      s.dim_h = 3;
      s.dim_center = 0;
      return s;
    }
    case Family::f4: {
      RootBuilder b(4);
      detail::add_pairs(b, 0, 3, Parity::even);
      for (int i = 0; i < 4; ++i) b.add_pm(b.e(i), Parity::even);
      for (int mask = 0; mask < 16; ++mask) {
        RationalVector v(4);
        for (int i = 0; i < 4; ++i) v[i] = (mask >> i & 1) ? Rational(-1, 2) : Rational(1, 2);
        b.add(v, Parity::odd);
      }
      s.roots = b.finish();
      s.coord_labels = {"eps1", "eps2", "eps3", "delta"};
      s.dim_h = 4;
      s.dim_center = 0;
      return s;
    }
  }
  throw UsageError("unknown family");
}

inline std::shared_ptr<const RootSystem> make_root_system(const AlgebraSpec& spec) {
  return std::make_shared<const RootSystem>(build_root_system(spec));
}

enum class BracketSupport { root, zero, none };

inline const char* bracket_support_name(BracketSupport b) {
  switch (b) {
    case BracketSupport::root: return "root";
    case BracketSupport::zero: return "zero";
    case BracketSupport::none: return "none";
  }
  return "?";
}

/// Whether alpha + beta is a root, zero, or neither. Both must be roots.
inline BracketSupport bracket_support(const RootSystem& sys, const RationalVector& alpha, const RationalVector& beta) {
  const auto i = sys.roots.index_of(alpha);
  const auto j = sys.roots.index_of(beta);
  const int s = sys.roots.sum(i, j);
  if (s == RootSet::kZero) return BracketSupport::zero;
  if (s == RootSet::kNone) return BracketSupport::none;
  return BracketSupport::root;
}

struct DimensionReport {
  std::string algebra;
  int rank = 0;
  int dim_center = 0;
  int dim_h = 0;
  bool holds = false;
};

/// rank of the span of the roots plus dim of the center against dim h.
inline DimensionReport verify_dimension_identity(const RootSystem& sys) {
  DimensionReport r;
  r.algebra = sys.name();
  r.rank = static_cast<int>(sys.roots.rank());
  r.dim_center = sys.dim_center;
  r.dim_h = sys.dim_h;
  r.holds = r.rank + r.dim_center == r.dim_h;
  return r;
}

/// Parity-respecting negation closure, checked independently of the RootSet constructor.
inline bool negation_symmetric(const RootSystem& sys) {
  for (std::size_t i = 0; i < sys.roots.size(); ++i) {
    auto j = sys.roots.find(-sys.roots[i]);
    if (!j || sys.roots.parity(*j) != sys.roots.parity(i)) return false;
  }
  return true;
}

}  // namespace kostant
