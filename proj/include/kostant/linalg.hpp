#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "kostant/vector.hpp"

namespace kostant {

/// Reduced row echelon form of a list of row vectors. Pivots are taken
/// left to right, so the form depends only on the span.
struct RowEchelon {
  std::size_t dim = 0;
  std::vector<RationalVector> rows;
  std::vector<std::size_t> pivots;

  std::size_t rank() const { return rows.size(); }

  /// v minus its component along the span; zero at every pivot column.
  RationalVector reduce(RationalVector v) const {
    for (std::size_t r = 0; r < rows.size(); ++r) {
      const Rational f = v[pivots[r]];
      if (f != 0) v -= f * rows[r];
    }
    return v;
  }

  bool contains(const RationalVector& v) const { return reduce(v).is_zero(); }

  /// Adds v to the span; returns false if it was already there.
  bool insert(const RationalVector& v) {
    RationalVector w = reduce(v);
    std::size_t p = 0;
    while (p < w.size() && w[p] == 0) ++p;
    if (p == w.size()) return false;
    w *= Rational(1) / w[p];
    for (auto& row : rows) {
      const Rational f = row[p];
      if (f != 0) row -= f * w;
    }
    std::size_t at = 0;
    while (at < pivots.size() && pivots[at] < p) ++at;
    rows.insert(rows.begin() + static_cast<std::ptrdiff_t>(at), std::move(w));
    pivots.insert(pivots.begin() + static_cast<std::ptrdiff_t>(at), p);
    return true;
  }

  std::vector<std::size_t> free_columns() const {
    std::vector<std::size_t> out;
    std::size_t r = 0;
    for (std::size_t c = 0; c < dim; ++c) {
      if (r < pivots.size() && pivots[r] == c) {
        ++r;
      } else {
        out.push_back(c);
      }
    }
    return out;
  }
};

inline RowEchelon row_reduce(std::size_t dim, const std::vector<RationalVector>& vectors) {
  RowEchelon e;
  e.dim = dim;
  for (const auto& v : vectors) e.insert(v);
  return e;
}

inline std::size_t rank_of(std::size_t dim, const std::vector<RationalVector>& vectors) {
  return row_reduce(dim, vectors).rank();
}

/// Exact coordinates with respect to a fixed independent list.
class Decomposer {
 public:
  Decomposer(std::size_t dim, const std::vector<RationalVector>& basis) : dim_(dim), k_(basis.size()) {
    for (std::size_t i = 0; i < basis.size(); ++i) {
      RationalVector v = basis[i];
      RationalVector combo(k_);
      combo[i] = 1;
      for (std::size_t r = 0; r < rows_.size(); ++r) {
        const Rational f = v[pivots_[r]];
        if (f != 0) {
          v -= f * rows_[r];
          combo -= f * combos_[r];
        }
      }
      std::size_t p = 0;
      while (p < v.size() && v[p] == 0) ++p;
      if (p == v.size()) throw std::invalid_argument("decomposition basis is linearly dependent");
      const Rational inv = Rational(1) / v[p];
      v *= inv;
      combo *= inv;
      for (std::size_t r = 0; r < rows_.size(); ++r) {
        const Rational f = rows_[r][p];
        if (f != 0) {
          rows_[r] -= f * v;
          combos_[r] -= f * combo;
        }
      }
      rows_.push_back(std::move(v));
      combos_.push_back(std::move(combo));
      pivots_.push_back(p);
    }
  }

  std::size_t size() const { return k_; }

  /// Coefficients c with v = sum c_i basis_i, or nullopt if v is outside the span.
  std::optional<std::vector<Rational>> solve(RationalVector v) const {
    RationalVector coeff(k_);
    for (std::size_t r = 0; r < rows_.size(); ++r) {
      const Rational f = v[pivots_[r]];
      if (f != 0) {
        v -= f * rows_[r];
        coeff += f * combos_[r];
      }
    }
    if (!v.is_zero()) return std::nullopt;
    return std::vector<Rational>(coeff.begin(), coeff.end());
  }

 private:
  std::size_t dim_;
  std::size_t k_;
  std::vector<RationalVector> rows_;
  std::vector<RationalVector> combos_;
  std::vector<std::size_t> pivots_;
};

/// A linear map given by its rows: apply(v)_i = rows[i] . v
struct LinearMap {
  std::size_t source_dim = 0;
  std::vector<RationalVector> rows;

  std::size_t target_dim() const { return rows.size(); }

  RationalVector apply(const RationalVector& v) const {
    if (v.size() != source_dim) throw std::invalid_argument("linear map applied to vector of wrong dimension");
    RationalVector out(rows.size());
    for (std::size_t i = 0; i < rows.size(); ++i) out[i] = rows[i].dot(v);
    return out;
  }

  static LinearMap identity(std::size_t dim) {
    LinearMap m;
    m.source_dim = dim;
    for (std::size_t i = 0; i < dim; ++i) m.rows.push_back(RationalVector::unit(dim, i));
    return m;
  }

  friend bool operator==(const LinearMap&, const LinearMap&) = default;
};

/// (a o b)(v) = a(b(v))
inline LinearMap compose(const LinearMap& a, const LinearMap& b) {
  if (a.source_dim != b.target_dim()) throw std::invalid_argument("cannot compose linear maps of mismatched dimensions");
  LinearMap out;
  out.source_dim = b.source_dim;
  for (const auto& row : a.rows) {
    RationalVector r(b.source_dim);
    for (std::size_t k = 0; k < row.size(); ++k) {
      if (row[k] != 0) r += row[k] * b.rows[k];
    }
    out.rows.push_back(std::move(r));
  }
  return out;
}

/// Projection onto a complement of span(kernel) with a right inverse.
/// The complement is spanned by the unit vectors at the free columns of
/// the echelon form, so coordinates are reproducible.
struct Quotient {
  RowEchelon kernel;
  LinearMap map;
  LinearMap section;
};

inline Quotient quotient_by(std::size_t dim, const std::vector<RationalVector>& kernel_vectors) {
  Quotient q;
  q.kernel = row_reduce(dim, kernel_vectors);
  const auto free = q.kernel.free_columns();
  q.map.source_dim = dim;
  for (std::size_t c : free) {
    RationalVector row = RationalVector::unit(dim, c);
    for (std::size_t r = 0; r < q.kernel.rows.size(); ++r) row[q.kernel.pivots[r]] -= q.kernel.rows[r][c];
    q.map.rows.push_back(std::move(row));
  }
  q.section.source_dim = free.size();
  for (std::size_t i = 0; i < dim; ++i) q.section.rows.emplace_back(free.size());
  for (std::size_t j = 0; j < free.size(); ++j) q.section.rows[free[j]][j] = 1;
  return q;
}

/// Basis of {v : rows . v = 0 for every row}.
inline std::vector<RationalVector> null_space(std::size_t dim, const std::vector<RationalVector>& rows) {
  const RowEchelon e = row_reduce(dim, rows);
  std::vector<RationalVector> out;
  for (std::size_t c : e.free_columns()) {
    RationalVector v = RationalVector::unit(dim, c);
    for (std::size_t r = 0; r < e.rows.size(); ++r) v[e.pivots[r]] = -e.rows[r][c];
    out.push_back(std::move(v));
  }
  return out;
}

/// Some x with rows[i] . x = rhs[i] for all i (free variables set to 0),
/// or nullopt if the system is inconsistent.
inline std::optional<RationalVector> solve_system(std::size_t dim, const std::vector<RationalVector>& rows,
                                                  const RationalVector& rhs) {
  if (rows.size() != rhs.size()) throw std::invalid_argument("right-hand side has wrong length");
  RowEchelon e;
  e.dim = dim + 1;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    std::vector<Rational> aug(rows[i].begin(), rows[i].end());
    aug.push_back(rhs[i]);
    e.insert(RationalVector(std::move(aug)));
  }
  RationalVector x(dim);
  for (std::size_t r = 0; r < e.rows.size(); ++r) {
    if (e.pivots[r] == dim) return std::nullopt;
    x[e.pivots[r]] = e.rows[r][dim];
  }
  return x;
}

/// A functional (1, t, t^2, ...) that is nonzero on every given vector.
/// The first t = 1, 2, ... that works is used.
inline RationalVector generic_functional(std::size_t dim, const std::vector<RationalVector>& avoid) {
  for (Integer t = 1;; ++t) {
    RationalVector f(dim);
    Rational p(1);
    for (std::size_t i = 0; i < dim; ++i) {
      f[i] = p;
      p *= t;
    }
    bool ok = true;
    for (const auto& v : avoid) {
      if (!v.is_zero() && f.dot(v) == 0) {
        ok = false;
        break;
      }
    }
    if (ok) return f;
    if (t > 100000) throw std::logic_error("no generic functional found");
  }
}

}  // namespace kostant
