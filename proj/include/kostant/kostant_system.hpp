#pragma once

#include <algorithm>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "kostant/bases.hpp"
#include "kostant/errors.hpp"
#include "kostant/linalg.hpp"
#include "kostant/root_system.hpp"

namespace kostant {

/// Image of a root system under a linear projection of its weight space.
struct KostantSystem {
  std::shared_ptr<const RootSystem> source;
  LinearMap projection;
  std::optional<LinearMap> section;     // right inverse, present for projections along span(I)
  std::vector<std::size_t> I;           // collapse set (source indices) when built from one
  bool from_toral = false;
  RootSet R;                            // nonzero images, masks record the parities in each fiber
  std::vector<std::vector<std::size_t>> fibers;  // per element of R, source indices
  std::vector<int> image;               // per source root: index into R, or -1 if in the kernel
  std::vector<std::size_t> centralizer; // source roots in the kernel

  RationalVector project(const RationalVector& v) const { return projection.apply(v); }
  std::size_t size() const { return R.size(); }
};

inline KostantSystem kostant_from_map(std::shared_ptr<const RootSystem> src, LinearMap map) {
  KostantSystem k;
  k.source = std::move(src);
  k.projection = std::move(map);
  const RootSet& roots = k.source->roots;
  std::vector<RationalVector> images(roots.size());
  std::vector<std::pair<RationalVector, ParityMask>> elems;
  for (std::size_t i = 0; i < roots.size(); ++i) {
    images[i] = k.projection.apply(roots[i]);
    if (images[i].is_zero()) {
      k.centralizer.push_back(i);
    } else {
      elems.emplace_back(images[i], roots.mask(i));
    }
  }
  k.R = RootSet(k.projection.target_dim(), std::move(elems));
  k.fibers.assign(k.R.size(), {});
  k.image.assign(roots.size(), -1);
  for (std::size_t i = 0; i < roots.size(); ++i) {
    if (images[i].is_zero()) continue;
    const std::size_t r = k.R.index_of(images[i]);
    k.image[i] = static_cast<int>(r);
    k.fibers[r].push_back(i);
  }
  return k;
}

/// Projection along span(I). I must be contained in some base.
inline KostantSystem project(std::shared_ptr<const RootSystem> src, std::vector<std::size_t> I) {
  std::sort(I.begin(), I.end());
  I.erase(std::unique(I.begin(), I.end()), I.end());
  for (auto i : I) {
    if (i >= src->roots.size()) throw PreconditionError("collapse index out of range");
  }
  if (!base_containing(src->roots, I)) {
    throw PreconditionError("the collapse set is not contained in any base; projections are only defined along subsets of a base");
  }
  const Quotient q = quotient_by(src->ambient_dim(), src->roots.select(I));
  KostantSystem k = kostant_from_map(std::move(src), q.map);
  k.section = q.section;
  k.I = std::move(I);
  return k;
}

inline KostantSystem project(std::shared_ptr<const RootSystem> src, const std::vector<RationalVector>& I) {
  std::vector<std::size_t> idx;
  for (const auto& v : I) idx.push_back(src->roots.index_of(v));
  return project(std::move(src), std::move(idx));
}

namespace detail {

/// Linear conditions cutting the modeled Cartan subalgebra out of the
/// diagonal coordinates, for the matrix families.
inline std::vector<RationalVector> cartan_conditions(const RootSystem& sys, bool supertraceless) {
  const std::size_t d = sys.ambient_dim();
  std::vector<RationalVector> out;
  const auto& spec = sys.spec;
  const bool a_type = spec.family == Family::sl || spec.family == Family::gl ||
                      (spec.family == Family::lie && spec.lie_type == 'A');
  if (a_type && (supertraceless || spec.family == Family::sl || spec.family == Family::lie)) {
    RationalVector str(d);
    const std::size_t m = spec.family == Family::lie ? d : static_cast<std::size_t>(spec.m);
    for (std::size_t i = 0; i < d; ++i) str[i] = i < m ? 1 : -1;
    out.push_back(std::move(str));
  }
  return out;
}

inline bool toral_model_supported(const AlgebraSpec& spec) {
  if (spec.family == Family::sl || spec.family == Family::gl || spec.family == Family::osp) return true;
  return spec.family == Family::lie && std::string("ABCD").find(spec.lie_type) != std::string::npos;
}

}  // namespace detail

/// pi(alpha) = (alpha(t_1), ..., alpha(t_k)) for diagonal elements t_i of
/// the matrix model. For sl-type models (and gl(m|m) when `supertraceless`
/// is set, which models sl(m|m)) each t_i must have supertrace zero.
inline KostantSystem project_by_toral(std::shared_ptr<const RootSystem> src, const std::vector<RationalVector>& t,
                                      bool supertraceless = false) {
  if (!detail::toral_model_supported(src->spec)) {
    throw PreconditionError(src->name() + " has no diagonal matrix model; toral projections need sl, gl, osp or a classical Lie type");
  }
  if (supertraceless && src->spec.family != Family::gl) {
    throw PreconditionError("the supertrace-zero quotient applies to gl(m|m) only");
  }
  const auto conditions = detail::cartan_conditions(*src, supertraceless);
  LinearMap map;
  map.source_dim = src->ambient_dim();
  for (const auto& ti : t) {
    if (ti.size() != src->ambient_dim()) {
      throw PreconditionError("toral element " + ti.to_short_string() + " has " + std::to_string(ti.size()) +
                              " diagonal entries; the model of " + src->name() + " has " +
                              std::to_string(src->ambient_dim()));
    }
    for (const auto& c : conditions) {
      if (c.dot(ti) != 0) throw PreconditionError("toral element " + ti.to_short_string() + " does not have supertrace zero");
    }
    map.rows.push_back(ti);
  }
  KostantSystem k = kostant_from_map(std::move(src), std::move(map));
  k.from_toral = true;
  return k;
}

struct CenterCheck {
  std::size_t dim_t = 0;
  std::size_t dim_center = 0;  // dim of the center of the centralizer m
  std::size_t dim_algebra_center = 0;
  bool equal = false;                // t = z(m)
  bool equal_modulo_center = false;  // t + z(g) = z(m)
};

/// For toral systems: compares t with the center of its centralizer, which
/// is the subspace of the Cartan killed by every root of m.
inline CenterCheck check_center_condition(const KostantSystem& k, bool supertraceless = false) {
  const RootSystem& sys = *k.source;
  const std::size_t d = sys.ambient_dim();
  auto rows = detail::cartan_conditions(sys, supertraceless);
  for (auto i : k.centralizer) rows.push_back(sys.roots[i]);
  const auto zm = null_space(d, rows);
  // z(g) inside the model: Cartan elements killed by every root.
  auto all = detail::cartan_conditions(sys, supertraceless);
  for (const auto& v : sys.roots.vectors()) all.push_back(v);
  const auto zg = null_space(d, all);
  CenterCheck c;
  c.dim_t = rank_of(d, k.projection.rows);
  c.dim_center = zm.size();
  c.dim_algebra_center = zg.size();
  c.equal = c.dim_t == c.dim_center;
  std::vector<RationalVector> t_plus = k.projection.rows;
  for (const auto& z : zg) t_plus.push_back(z);
  c.equal_modulo_center = rank_of(d, t_plus) == c.dim_center;
  return c;
}

inline std::vector<std::size_t> fiber_of(const KostantSystem& k, const RationalVector& nu) {
  auto r = k.R.find(nu);
  if (!r) throw PreconditionError(nu.to_short_string() + " is not a Kostant root");
  return k.fibers[*r];
}

struct BaseOfR {
  bool is_base = false;
  Base base;                      // indices into R, valid when is_base
  std::vector<int> images;        // per element of sigma: index into R or -1
  bool contains_centralizer_base = false;
  std::string witness;            // why the images fail to be a base
};

/// Sigma contains a base of the centralizer roots exactly when sigma meets
/// the kernel in a base of them.
inline bool contains_centralizer_base(const KostantSystem& k, const Base& sigma) {
  const RootSet& roots = k.source->roots;
  const RootSet dm = roots.subset(k.centralizer);
  Base inside;
  for (auto s : sigma) {
    if (k.image[s] < 0) inside.push_back(dm.index_of(roots[s]));
  }
  std::sort(inside.begin(), inside.end());
  return is_base(dm, inside);
}

/// pi(sigma) \ {0} as a base of R, or a witness of failure. Coincident
/// images count as failure rather than being merged.
inline BaseOfR base_of_R(const KostantSystem& k, const Base& sigma) {
  const RootSet& roots = k.source->roots;
  if (!is_base(roots, sigma)) throw PreconditionError("sigma is not a base of the source root system");
  BaseOfR out;
  out.contains_centralizer_base = contains_centralizer_base(k, sigma);
  std::map<int, std::size_t> seen;
  for (auto s : sigma) {
    const int r = k.image[s];
    out.images.push_back(r);
    if (r < 0) continue;
    if (auto it = seen.find(r); it != seen.end()) {
      if (out.witness.empty()) {
        out.witness = "coincident images: " + roots[it->second].to_short_string() + " and " + roots[s].to_short_string() +
                      " both map to " + k.R[static_cast<std::size_t>(r)].to_short_string();
      }
      continue;
    }
    seen.emplace(r, s);
    out.base.push_back(static_cast<std::size_t>(r));
  }
  std::sort(out.base.begin(), out.base.end());
  if (out.witness.empty()) {
    const auto vecs = k.R.select(out.base);
    RowEchelon e;
    e.dim = k.R.dim();
    for (std::size_t j = 0; j < vecs.size(); ++j) {
      if (!e.insert(vecs[j])) {
        out.witness = "dependent images: " + vecs[j].to_short_string() + " lies in the span of the others";
        break;
      }
    }
  }
  if (out.witness.empty() && !is_base(k.R, out.base)) {
    out.witness = out.base.size() == k.R.rank() ? "images do not generate R one-signedly" : "images do not span R";
  }
  out.is_base = out.witness.empty();
  if (!out.is_base) out.base.clear();
  return out;
}

struct BasesOfR {
  std::vector<Base> lifted;          // {pi(sigma) \ {0} : sigma base containing I}, sorted
  std::vector<Base> direct;          // enumerate_bases(R)
  std::size_t source_bases_containing_I = 0;
  bool injective = false;
  bool equal = false;
};

/// Both enumerations of the bases of R for an I-based system.
inline BasesOfR enumerate_bases_of_R(const KostantSystem& k, const std::vector<Base>& source_bases) {
  BasesOfR out;
  std::set<Base> lifted;
  for (const auto& sigma : source_bases) {
    if (!std::includes(sigma.begin(), sigma.end(), k.I.begin(), k.I.end())) continue;
    ++out.source_bases_containing_I;
    const BaseOfR b = base_of_R(k, sigma);
    if (!b.is_base) throw ConsistencyError("a base containing I did not project to a base: " + b.witness);
    lifted.insert(b.base);
  }
  out.lifted.assign(lifted.begin(), lifted.end());
  out.direct = enumerate_bases(k.R);
  out.injective = out.lifted.size() == out.source_bases_containing_I;
  out.equal = out.lifted == out.direct;
  return out;
}

inline BasesOfR enumerate_bases_of_R(const KostantSystem& k) {
  return enumerate_bases_of_R(k, enumerate_bases(k.source->roots));
}

struct Composition {
  KostantSystem by_I;
  KostantSystem by_J;
  LinearMap pi_IJ;          // quotient-by-I coordinates to quotient-by-J coordinates
  bool commutes = false;    // pi_J = pi_IJ o pi_I on every root
};

inline Composition compose_projections(std::shared_ptr<const RootSystem> src, std::vector<std::size_t> I,
                                       std::vector<std::size_t> J) {
  std::sort(I.begin(), I.end());
  std::sort(J.begin(), J.end());
  if (!std::includes(J.begin(), J.end(), I.begin(), I.end())) throw PreconditionError("I is not a subset of J");
  Composition c{project(src, I), project(src, J), {}, false};
  c.pi_IJ = compose(c.by_J.projection, *c.by_I.section);
  c.commutes = true;
  for (const auto& v : src->roots.vectors()) {
    if (c.pi_IJ.apply(c.by_I.project(v)) != c.by_J.project(v)) c.commutes = false;
  }
  return c;
}

/// No element rho of R and integer k >= 2 with nu = k rho.
inline bool is_primitive(const RootSet& R, std::size_t nu) {
  const RationalVector& v = R[nu];
  for (std::size_t r = 0; r < R.size(); ++r) {
    if (r == nu || R.line(r) != R.line(nu)) continue;
    std::size_t p = 0;
    while (R[r][p] == 0) ++p;
    const Rational ratio = v[p] / R[r][p];
    if (is_integer(ratio) && ratio.numerator() >= 2) return false;
  }
  return true;
}

inline bool is_primitive(const KostantSystem& k, const RationalVector& nu) { return is_primitive(k.R, k.R.index_of(nu)); }

/// gamma = g_1, ..., g_N, 0 with every g_i positive and g_i - g_{i+1} in sigma.
/// Larger simple elements are subtracted first.
inline std::vector<RationalVector> chain_to_zero(const RootSet& set, const Base& sigma, std::size_t gamma) {
  const PositiveSystem pos = positives_of_base(set, sigma);
  if (!pos[gamma]) throw PreconditionError("chain_to_zero needs a positive root");
  std::vector<int> dead(set.size(), 0);
  std::vector<RationalVector> chain;
  auto dfs = [&](auto&& self, std::size_t g) -> bool {
    chain.push_back(set[g]);
    for (auto s : sigma) {
      if (s == g) {
        chain.push_back(RationalVector(set.dim()));
        return true;
      }
    }
    for (auto it = sigma.rbegin(); it != sigma.rend(); ++it) {
      auto next = set.find(set[g] - set[*it]);
      if (next && pos[*next] && !dead[*next] && self(self, *next)) return true;
    }
    dead[g] = 1;
    chain.pop_back();
    return false;
  };
  if (!dfs(dfs, gamma)) throw ConsistencyError("no chain to zero from " + set[gamma].to_short_string());
  return chain;
}

/// Roots whose coefficient at sigma[alpha_pos] is divisible by s.
inline RootSystem sub_system_divisible(const RootSystem& sys, const Base& sigma, std::size_t alpha_pos, Integer s) {
  if (s < 1) throw PreconditionError("divisor must be positive");
  if (alpha_pos >= sigma.size()) throw PreconditionError("alpha must belong to the base");
  const auto coeffs = base_coefficients(sys.roots, sigma);
  std::vector<std::size_t> keep;
  for (std::size_t i = 0; i < sys.size(); ++i) {
    if (coeffs[i][alpha_pos] % s == 0) keep.push_back(i);
  }
  RootSystem out = sys;
  out.roots = sys.roots.subset(keep);
  if (!out.roots.empty() && !is_base(out.roots, find_base(out.roots))) {
    throw ConsistencyError("divisibility subsystem admits no base");
  }
  return out;
}

/// {j : mu + j nu lies in R or is zero}. Zero is included so that strings
/// through multiples of nu are measured in R u {0}.
inline std::vector<Integer> root_string(const RootSet& R, std::size_t mu, std::size_t nu) {
  std::vector<Integer> out;
  const RationalVector& n = R[nu];
  std::size_t p = 0;
  while (n[p] == 0) ++p;
  auto consider = [&](const RationalVector& target) {
    const RationalVector diff = target - R[mu];
    const Rational j = diff[p] / n[p];
    if (is_integer(j) && diff == j * n) out.push_back(j.numerator());
  };
  for (const auto& v : R.vectors()) consider(v);
  consider(RationalVector(R.dim()));
  std::sort(out.begin(), out.end());
  return out;
}

/// A set of integers is an unbroken interval containing 0.
inline bool is_interval_through_zero(const std::vector<Integer>& js) {
  if (js.empty()) return false;
  if (!std::binary_search(js.begin(), js.end(), Integer{0})) return false;
  for (std::size_t i = 1; i < js.size(); ++i) {
    if (js[i] != js[i - 1] + 1) return false;
  }
  return true;
}

}  // namespace kostant
