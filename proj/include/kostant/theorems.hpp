#pragma once

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "kostant/bases.hpp"
#include "kostant/graphs.hpp"
#include "kostant/kostant_system.hpp"
#include "kostant/root_system.hpp"
#include "kostant/weyl.hpp"

namespace kostant {

struct VerificationReport {
  static constexpr std::size_t kMaxWitnesses = 20;

  std::string claim;
  std::string algebra;
  std::string universe;
  std::size_t instances = 0;
  std::size_t failures = 0;
  std::vector<std::string> witnesses;
  std::vector<std::string> notes;
  double seconds = 0;

  bool passed() const { return failures == 0; }

  template <class Describe>
  void check(bool ok, Describe&& describe) {
    ++instances;
    if (ok) return;
    ++failures;
    if (witnesses.size() < kMaxWitnesses) witnesses.push_back(describe());
  }
};

namespace detail {

class Stopwatch {
 public:
  Stopwatch() : start_(std::chrono::steady_clock::now()) {}
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_;
};

inline std::string describe_set(const RootSet& roots, const std::vector<std::size_t>& idx) {
  std::string s = "{";
  for (std::size_t i = 0; i < idx.size(); ++i) {
    if (i) s += ", ";
    s += roots[idx[i]].to_short_string();
  }
  return s + "}";
}

}  // namespace detail

/// Everything the suites need about one algebra, computed once.
struct AlgebraData {
  std::shared_ptr<const RootSystem> sys;
  std::vector<Base> bases;
  WeylGroup weyl;
  WeylClassification classes;

  const RootSet& roots() const { return sys->roots; }
  std::string name() const { return sys->name(); }
};

inline AlgebraData analyze(const AlgebraSpec& spec) {
  AlgebraData d;
  d.sys = make_root_system(spec);
  d.bases = enumerate_bases(d.sys->roots);
  d.weyl = weyl_group(*d.sys);
  d.classes = base_classes_up_to_W(*d.sys, d.bases, d.weyl);
  return d;
}

struct CollapseCase {
  Base sigma;
  std::vector<std::size_t> I;
};

enum class Dedup { by_collapse_set, by_span };

/// Pairs (sigma, I) with sigma a representative of a W-class of bases and
/// I any subset of sigma. Every pair is W-conjugate to one of these, and
/// the checked properties are W-invariant. With by_span, pairs giving the
/// same centralizer roots are listed once.
inline std::vector<CollapseCase> collapse_cases(const AlgebraData& d, Dedup dedup) {
  std::vector<CollapseCase> out;
  std::set<std::vector<std::size_t>> seen;
  for (const auto& cls : d.classes.classes) {
    const Base& sigma = cls.representative;
    const std::size_t n = sigma.size();
    for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
      std::vector<std::size_t> I;
      for (std::size_t j = 0; j < n; ++j) {
        if (mask >> j & 1) I.push_back(sigma[j]);
      }
      auto key = dedup == Dedup::by_span ? elements_in_span(d.roots(), I) : I;
      if (!seen.insert(std::move(key)).second) continue;
      out.push_back({sigma, std::move(I)});
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Centralizer classification

struct DynkinComponent {
  std::vector<std::size_t> simple;  // indices into the source roots
  std::string type;                 // e.g. "A2", "sl(3|1)", "gl(1|1)", "osp(3|2)", "?"
  bool needs_gl_completion = false; // root set of type gl(k|k)
  int k = 0;                        // the k of gl(k|k) when flagged
};

namespace detail {

struct ShapeSignature {
  std::size_t rank = 0, even = 0, odd = 0, doublings = 0, nonisotropic = 0;
  // sorted (parity mask, number of ordered ways to write the root as a sum of two roots)
  std::vector<std::pair<int, std::size_t>> decompositions;
  friend auto operator<=>(const ShapeSignature&, const ShapeSignature&) = default;
};

/// Linear invariants of a root set: for each root, its parity and the number
/// of ways it splits as a sum of two roots; the ordered pairs with
/// alpha + 2 beta a root; and the odd roots whose double is a root.
inline ShapeSignature shape_signature(const RootSet& s) {
  ShapeSignature sig;
  sig.rank = s.rank();
  std::vector<std::size_t> splits(s.size(), 0);
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s.has_even(i)) ++sig.even;
    if (s.has_odd(i)) {
      ++sig.odd;
      if (s.contains(Rational(2) * s[i])) ++sig.nonisotropic;
    }
    for (std::size_t j = 0; j < s.size(); ++j) {
      const int k = s.sum(i, j);
      if (k >= 0) ++splits[static_cast<std::size_t>(k)];
      if (i != j && s.contains(s[i] + Rational(2) * s[j])) ++sig.doublings;
    }
  }
  for (std::size_t i = 0; i < s.size(); ++i) sig.decompositions.emplace_back(s.mask(i), splits[i]);
  std::sort(sig.decompositions.begin(), sig.decompositions.end());
  return sig;
}

struct ShapeCandidate {
  std::string type;
  ShapeSignature signature;
  bool gl_type = false;
  int k = 0;
};

/// Candidate simple types of the given rank, in naming priority order.
inline std::vector<AlgebraSpec> candidate_specs(std::size_t rank) {
  std::vector<AlgebraSpec> out;
  const int r = static_cast<int>(rank);
  out.push_back(lie('A', r));
  if (r >= 2) out.push_back(lie('B', r));
  if (r >= 3) out.push_back(lie('C', r));
  if (r >= 4) out.push_back(lie('D', r));
  if (r >= 6 && r <= 8) out.push_back(lie('E', r));
  if (r == 4) out.push_back(lie('F', 4));
  if (r == 2) out.push_back(lie('G', 2));
  for (int p = 1; p <= r; ++p) {
    const int q = r + 1 - p;
    if (p > q) out.push_back(sl(p, q));
  }
  if (r % 2 == 1) out.push_back(gl((r + 1) / 2));
  for (int n = 1; n <= r; ++n) {
    const int eps = r - n;
    out.push_back(osp(2 * eps + 1, 2 * n));
    if (eps == 0) continue;
    out.push_back(osp(2 * eps, 2 * n));
  }
  if (r == 3) {
    out.push_back(d21a());
    out.push_back(g3());
  }
  if (r == 4) out.push_back(f4());
  return out;
}

inline const std::vector<ShapeCandidate>& candidates_of_rank(std::size_t rank) {
  static std::mutex guard;
  static std::map<std::size_t, std::vector<ShapeCandidate>> cache;
  const std::lock_guard<std::mutex> lock(guard);
  auto it = cache.find(rank);
  if (it != cache.end()) return it->second;
  std::vector<ShapeCandidate> list;
  for (const auto& spec : candidate_specs(rank)) {
    const RootSystem s = build_root_system(spec);
    if (s.roots.rank() != rank) continue;
    ShapeCandidate c{spec.name(), shape_signature(s.roots), spec.family == Family::gl, spec.m};
    list.push_back(std::move(c));
  }
  return cache.emplace(rank, std::move(list)).first->second;
}

}  // namespace detail

/// Type of a root set by matching its shape signature against the simple
/// types of the same rank. Returns "?" when nothing matches.
inline DynkinComponent classify_root_set(const RootSet& s) {
  DynkinComponent c;
  c.type = "?";
  if (s.rank() == 0 || s.rank() > 8) return c;
  const auto sig = detail::shape_signature(s);
  for (const auto& cand : detail::candidates_of_rank(s.rank())) {
    if (cand.signature == sig) {
      c.type = cand.type;
      c.needs_gl_completion = cand.gl_type;
      c.k = cand.gl_type ? cand.k : 0;
      return c;
    }
  }
  return c;
}

/// Connected components of I (alpha ~ beta when alpha + beta is a root),
/// each classified by the root set it spans.
inline std::vector<DynkinComponent> classify_centralizer(const RootSystem& sys, const Base& sigma,
                                                         std::vector<std::size_t> I) {
  std::sort(I.begin(), I.end());
  if (!std::includes(sigma.begin(), sigma.end(), I.begin(), I.end())) {
    throw PreconditionError("the collapse set is not contained in the base");
  }
  const RootSet& roots = sys.roots;
  UnionFind uf(I.size());
  for (std::size_t a = 0; a < I.size(); ++a) {
    for (std::size_t b = a + 1; b < I.size(); ++b) {
      if (roots.sum(I[a], I[b]) >= 0) uf.unite(a, b);
    }
  }
  std::map<std::size_t, std::vector<std::size_t>> groups;
  for (std::size_t a = 0; a < I.size(); ++a) groups[uf.find(a)].push_back(I[a]);
  std::vector<DynkinComponent> out;
  for (auto& [root, simple] : groups) {
    DynkinComponent c = classify_root_set(roots.subset(elements_in_span(roots, simple)));
    c.simple = simple;
    out.push_back(std::move(c));
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.simple < b.simple; });
  return out;
}

// ---------------------------------------------------------------------------
// Listed collapse sets for the exceptional algebras

struct ListedCollapseSet {
  std::string label;
  std::vector<RationalVector> roots;
};

namespace detail {

inline RationalVector rv(std::initializer_list<Rational> xs) { return RationalVector(std::vector<Rational>(xs)); }

}  // namespace detail

/// The collapse sets enumerated by hand for D(2,1;a), G(3), F(4), in the
/// coordinates of the root models here.
inline std::vector<ListedCollapseSet> listed_collapse_sets(const AlgebraSpec& spec) {
  using detail::rv;
  const Rational h(1, 2);
  std::vector<ListedCollapseSet> out;
  switch (spec.family) {
    case Family::d21a: {
      const auto a = rv({1, -1, -1});
      out.push_back({"I1", {a}});
      out.push_back({"I2", {a, rv({2, 0, 0})}});
      break;
    }
    case Family::g3: {
      // (eps1, eps2, delta) with eps3 = -eps1 - eps2
      const auto e1 = rv({1, 0, 0}), e2 = rv({0, 1, 0}), e3 = rv({-1, -1, 0}), d = rv({0, 0, 1});
      const auto i1 = d + e1;
      out.push_back({"I1", {i1}});
      out.push_back({"I2 delta+eps2", {i1, d + e2}});
      out.push_back({"I2 delta-eps2", {i1, d - e2}});
      const std::vector<std::pair<std::string, RationalVector>> alphas = {
          {"delta", d}, {"eps1", e1}, {"eps2", e2}, {"eps1+eps2", e1 + e2},
          {"eps1-eps2", e1 - e2}, {"eps2+eps3", e2 + e3}, {"eps2-eps3", e2 - e3}};
      for (const auto& [name, alpha] : alphas) out.push_back({"I2 " + name, {i1, alpha}});
      break;
    }
    case Family::f4: {
      // (eps1, eps2, eps3, delta)
      const auto i1 = rv({h, h, h, h});
      out.push_back({"I1", {i1}});
      out.push_back({"I2^1", {i1, rv({-h, h, h, h})}});
      out.push_back({"I2^2", {i1, rv({h, h, -h, -h})}});
      out.push_back({"I2^3", {i1, rv({h, -h, -h, -h})}});
      out.push_back({"I2^4", {i1, rv({-h, -h, -h, h})}});
      out.push_back({"I2^5", {i1, rv({h, -h, -h, h})}});
      const std::vector<std::pair<std::string, RationalVector>> alphas = {
          {"delta", rv({0, 0, 0, 1})}, {"eps1", rv({1, 0, 0, 0})},
          {"eps1+eps2", rv({1, 1, 0, 0})}, {"eps1-eps2", rv({1, -1, 0, 0})}};
      for (const auto& [name, alpha] : alphas) out.push_back({"I2 " + name, {i1, alpha}});
      out.push_back({"I3 odd roots of S4", {rv({-h, -h, h, h}), rv({-h, h, -h, -h}), rv({h, h, -h, h})}});
      for (std::size_t a = 0; a < alphas.size(); ++a) {
        for (std::size_t b = a + 1; b < alphas.size(); ++b) {
          out.push_back({"I3 " + alphas[a].first + "," + alphas[b].first, {i1, alphas[a].second, alphas[b].second}});
        }
      }
      for (int i = 1; i <= 5; ++i) {
        const auto& base2 = out[static_cast<std::size_t>(i)];
        for (const auto& [name, alpha] : alphas) {
          out.push_back({base2.label + " + " + name, {base2.roots[0], base2.roots[1], alpha}});
        }
      }
      break;
    }
    default:
      break;
  }
  return out;
}

// ---------------------------------------------------------------------------
// Theorem suites

/// Every fiber graph over every (sigma, I) is connected.
inline VerificationReport verify_theorem3_i(const AlgebraData& d) {
  detail::Stopwatch sw;
  VerificationReport rep;
  rep.claim = "thm3i";
  rep.algebra = d.name();
  const auto cases = collapse_cases(d, Dedup::by_collapse_set);
  rep.universe = std::to_string(d.classes.classes.size()) + " W-classes of bases, all subsets I: " +
                 std::to_string(cases.size()) + " collapse sets";
  const RootSet& roots = d.roots();
  std::set<std::vector<std::size_t>> verified_spans;
  for (const auto& c : cases) {
    const auto k = project(d.sys, c.I);
    verified_spans.insert(k.centralizer);
    for (const auto& tau : k.R.vectors()) {
      const auto g = fiber_graph(k, c.sigma, tau);
      rep.check(is_connected(g), [&] {
        return "sigma=" + detail::describe_set(roots, c.sigma) + " I=" + detail::describe_set(roots, c.I) +
               " tau=" + tau.to_short_string() + " has " + std::to_string(component_count(g)) + " components";
      });
    }
    if (d.sys->spec.is_exceptional_super()) {
      const auto comps = classify_centralizer(*d.sys, c.sigma, c.I);
      std::size_t flagged = 0;
      bool small = true;
      for (const auto& comp : comps) {
        if (comp.needs_gl_completion) {
          ++flagged;
          small = small && comp.k == 1;
        }
      }
      rep.check(flagged <= 1 && small, [&] {
        return "I=" + detail::describe_set(roots, c.I) + " has " + std::to_string(flagged) + " gl(k|k) components";
      });
    }
  }
  // The hand-listed collapse sets must be covered up to symmetry.
  const auto listed = listed_collapse_sets(d.sys->spec);
  if (!listed.empty()) {
    auto gens = d.weyl.generators;
    for (auto& g : extra_symmetries(*d.sys)) gens.push_back(std::move(g));
    const auto group = closure(gens, roots.size(), 400000);
    std::size_t outside_bases = 0;
    for (const auto& l : listed) {
      std::vector<std::size_t> idx;
      for (const auto& v : l.roots) idx.push_back(roots.index_of(v));
      const auto span = elements_in_span(roots, idx);
      bool covered = false;
      for (const auto& w : group) {
        if (verified_spans.count(apply(w, span))) {
          covered = true;
          break;
        }
      }
      if (!extends_to_base(roots, idx)) ++outside_bases;
      rep.check(covered, [&] { return "listed set " + l.label + " is not covered by the enumeration"; });
    }
    rep.notes.push_back(std::to_string(listed.size()) + " hand-listed collapse sets covered up to symmetry (" +
                        std::to_string(outside_bases) + " of them lie in no base and were matched by span)");
  }
  rep.seconds = sw.seconds();
  return rep;
}

inline void check_theorem3_ii(VerificationReport& rep, const KostantSystem& k) {
  const RootSet& R = k.R;
  const RootSet& roots = k.source->roots;
  for (std::size_t mu = 0; mu < R.size(); ++mu) {
    for (std::size_t nu = 0; nu < R.size(); ++nu) {
      if (R.sum(mu, nu) < 0) continue;
      bool found = false;
      for (auto a : k.fibers[mu]) {
        for (auto b : k.fibers[nu]) {
          if (roots.sum(a, b) >= 0) {
            found = true;
            break;
          }
        }
        if (found) break;
      }
      rep.check(found, [&] {
        return "I=" + detail::describe_set(roots, k.I) + " mu=" + R[mu].to_short_string() +
               " nu=" + R[nu].to_short_string() + " has no lifting pair";
      });
    }
  }
}

/// Whenever mu + nu is a Kostant root, some alpha over mu and beta over nu
/// have alpha + beta a root.
inline VerificationReport verify_theorem3_ii(const AlgebraData& d) {
  detail::Stopwatch sw;
  VerificationReport rep;
  rep.claim = "thm3ii";
  rep.algebra = d.name();
  const auto cases = collapse_cases(d, Dedup::by_span);
  rep.universe = std::to_string(cases.size()) + " collapse spans from W-class representatives";
  for (const auto& c : cases) check_theorem3_ii(rep, project(d.sys, c.I));
  rep.seconds = sw.seconds();
  return rep;
}

inline VerificationReport verify_theorem3_ii(std::shared_ptr<const RootSystem> sys, const std::vector<std::size_t>& I) {
  detail::Stopwatch sw;
  VerificationReport rep;
  rep.claim = "thm3ii";
  rep.algebra = sys->name();
  rep.universe = "I=" + detail::describe_set(sys->roots, I);
  check_theorem3_ii(rep, project(std::move(sys), I));
  rep.seconds = sw.seconds();
  return rep;
}

/// Root strings through R u {0} are unbroken intervals.
inline VerificationReport verify_theorem3_iii(const AlgebraData& d) {
  detail::Stopwatch sw;
  VerificationReport rep;
  rep.claim = "thm3iii";
  rep.algebra = d.name();
  const auto cases = collapse_cases(d, Dedup::by_span);
  rep.universe = std::to_string(cases.size()) + " collapse spans from W-class representatives, all (mu, nu)";
  for (const auto& c : cases) {
    const auto k = project(d.sys, c.I);
    for (std::size_t mu = 0; mu < k.R.size(); ++mu) {
      for (std::size_t nu = 0; nu < k.R.size(); ++nu) {
        const auto js = root_string(k.R, mu, nu);
        rep.check(is_interval_through_zero(js), [&] {
          std::string s;
          for (auto j : js) s += std::to_string(j) + " ";
          return "I=" + detail::describe_set(d.roots(), c.I) + " mu=" + k.R[mu].to_short_string() +
                 " nu=" + k.R[nu].to_short_string() + " string " + s;
        });
      }
    }
  }
  rep.seconds = sw.seconds();
  return rep;
}

/// Both directions of the base correspondence, and the bijection between
/// bases containing I and bases of R.
inline VerificationReport verify_theorem2(const AlgebraData& d) {
  detail::Stopwatch sw;
  VerificationReport rep;
  rep.claim = "thm2";
  rep.algebra = d.name();
  const auto cases = collapse_cases(d, Dedup::by_span);
  rep.universe = std::to_string(cases.size()) + " collapse spans x all " + std::to_string(d.bases.size()) + " bases";
  const RootSet& roots = d.roots();
  for (const auto& c : cases) {
    const auto k = project(d.sys, c.I);
    std::set<Base> produced;
    for (const auto& sigma : d.bases) {
      const auto b = base_of_R(k, sigma);
      rep.check(b.is_base == b.contains_centralizer_base, [&] {
        return "I=" + detail::describe_set(roots, c.I) + " sigma=" + detail::describe_set(roots, sigma) +
               (b.is_base ? " projects to a base without containing a base of the centralizer"
                          : " contains a base of the centralizer but " + b.witness);
      });
      if (b.is_base) produced.insert(b.base);
    }
    const auto both = enumerate_bases_of_R(k, d.bases);
    for (const auto& s : both.direct) {
      rep.check(produced.count(s) > 0, [&] {
        return "I=" + detail::describe_set(roots, c.I) + " base " + detail::describe_set(k.R, s) + " of R is not a projection";
      });
    }
    rep.check(both.equal && both.injective, [&] {
      return "I=" + detail::describe_set(roots, c.I) + ": " + std::to_string(both.lifted.size()) + " lifted vs " +
             std::to_string(both.direct.size()) + " direct bases of R from " +
             std::to_string(both.source_bases_containing_I) + " bases containing I";
    });
  }
  rep.seconds = sw.seconds();
  return rep;
}

/// For I in J in sigma: projected fiber graphs over J have the vertex and
/// edge sets of the quotient fiber graphs.
inline VerificationReport verify_edge_lifting(const AlgebraData& d) {
  detail::Stopwatch sw;
  VerificationReport rep;
  rep.claim = "lemma47";
  rep.algebra = d.name();
  const RootSet& roots = d.roots();
  std::set<std::pair<std::vector<std::size_t>, std::vector<std::size_t>>> seen;
  for (const auto& cls : d.classes.classes) {
    const Base& sigma = cls.representative;
    const std::size_t n = sigma.size();
    for (std::size_t J = 0; J < (std::size_t{1} << n); ++J) {
      for (std::size_t I = J;; I = (I - 1) & J) {
        std::vector<std::size_t> iv, jv;
        for (std::size_t j = 0; j < n; ++j) {
          if (I >> j & 1) iv.push_back(sigma[j]);
          if (J >> j & 1) jv.push_back(sigma[j]);
        }
        if (seen.insert({iv, jv}).second) {
          const auto c = compose_projections(d.sys, iv, jv);
          for (const auto& nu : c.by_J.R.vectors()) {
            const auto r = edge_lifting_report(c, sigma, nu);
            rep.check(r.edges_equal, [&] {
              return "I=" + detail::describe_set(roots, iv) + " J=" + detail::describe_set(roots, jv) +
                     " nu=" + nu.to_short_string() + (r.vertices_equal ? "" : " vertex sets differ") +
                     " unlifted=" + std::to_string(r.unlifted.size()) + " extra=" + std::to_string(r.extra.size());
            });
          }
        }
        if (I == 0) break;
      }
    }
  }
  rep.universe = std::to_string(seen.size()) + " nested pairs I in J inside W-class representatives";
  rep.seconds = sw.seconds();
  return rep;
}

// ---------------------------------------------------------------------------
// Counterexamples

/// sl_3 with t spanned by E11 - E33: the fibers over ±1 are reducible.
inline VerificationReport counterexample_remark_5_4() {
  detail::Stopwatch sw;
  VerificationReport rep;
  rep.claim = "rem54";
  rep.algebra = "A2";
  rep.universe = "t = E11 - E33, all Kostant roots";
  const auto sys = make_root_system(lie('A', 2));
  const auto k = project_by_toral(sys, {RationalVector::from_integers({1, 0, -1})});
  std::set<RationalVector> R(k.R.vectors().begin(), k.R.vectors().end());
  const std::set<RationalVector> expected = {RationalVector::from_integers({-2}), RationalVector::from_integers({-1}),
                                             RationalVector::from_integers({1}), RationalVector::from_integers({2})};
  rep.check(R == expected, [] { return "R differs from {-2,-1,1,2}"; });
  rep.check(!check_center_condition(k).equal, [] { return "t equals z(m), the example would not be a counterexample"; });
  for (const auto& tau : k.R.vectors()) {
    // m is the Cartan subalgebra, so the fiber graphs have no labels at all.
    const auto g = fiber_graph(k, std::vector<RationalVector>{}, tau);
    const bool unit = tau[0] == 1 || tau[0] == -1;
    const bool connected = is_connected(g);
    rep.notes.push_back("fiber(" + tau.to_short_string() + ") = " + detail::describe_set(sys->roots, fiber_of(k, tau)) +
                        (connected ? ": irreducible" : ": reducible, " + std::to_string(g.vertices.size()) +
                                                           " vertices, " + std::to_string(g.edges.size()) + " edges"));
    rep.check(unit ? (g.vertices.size() == 2 && !connected) : connected, [&] {
      return "fiber over " + tau.to_short_string() + " is " + (connected ? "connected" : "disconnected");
    });
  }
  rep.seconds = sw.seconds();
  return rep;
}

/// gl(m|m) modulo the identity with t = <H1, H2, H3>: the fiber over
/// (1, 0, -1) is spanned by two root vectors that m does not connect.
inline VerificationReport counterexample_remark_5_8(int m) {
  if (m < 3) throw PreconditionError("the example needs m >= 3");
  detail::Stopwatch sw;
  VerificationReport rep;
  rep.claim = "rem58";
  rep.algebra = "gl(" + std::to_string(m) + "|" + std::to_string(m) + ")";
  rep.universe = "t = <H1, H2, H3>, nu = (1,0,-1)";
  const auto sys = make_root_system(gl(m));
  const std::size_t n = static_cast<std::size_t>(2 * m);
  auto e = [&](std::size_t i) { return RationalVector::unit(n, i - 1); };
  RationalVector h2(n);
  for (std::size_t i = 3; i <= n - 2; ++i) h2 += e(i);
  const std::vector<RationalVector> t = {e(1) - e(2), h2, e(n - 1) - e(n)};
  const auto k = project_by_toral(sys, t, true);
  const RationalVector nu = RationalVector::from_integers({1, 0, -1});
  const std::set<RationalVector> expected = {e(1) - e(n - 1), e(n) - e(2)};
  std::set<RationalVector> fiber;
  for (auto i : fiber_of(k, nu)) fiber.insert(sys->roots[i]);
  rep.check(fiber == expected, [&] {
    return "fiber over (1,0,-1) is " + detail::describe_set(sys->roots, fiber_of(k, nu));
  });
  const auto center = check_center_condition(k, true);
  rep.check(center.equal_modulo_center, [] { return "t differs from z(m) modulo the center"; });
  rep.notes.push_back("dim t = " + std::to_string(center.dim_t) + ", dim z(m) = " + std::to_string(center.dim_center) +
                      ", equal modulo the identity matrix");
  // No root of m moves one fiber root onto the other, or onto any root.
  for (auto a : fiber_of(k, nu)) {
    for (auto c : k.centralizer) {
      rep.check(sys->roots.sum(a, c) == RootSet::kNone, [&] {
        return sys->roots[a].to_short_string() + " + " + sys->roots[c].to_short_string() + " is a root";
      });
    }
  }
  const auto g = fiber_graph(k, sys->roots.select(k.centralizer), nu);
  rep.check(g.vertices.size() == 2 && !is_connected(g), [] { return "fiber graph over (1,0,-1) is connected"; });
  rep.notes.push_back("fiber(1,0,-1) = " + detail::describe_set(sys->roots, fiber_of(k, nu)) + ": reducible, " +
                      std::to_string(g.vertices.size()) + " vertices, " + std::to_string(g.edges.size()) + " edges");
  rep.seconds = sw.seconds();
  return rep;
}

// ---------------------------------------------------------------------------
// Superization

namespace detail {

/// Roots of so_{2N} (D) or so_{2N+1} (B) for any N >= 1, without the
/// rank restrictions of the simple Lie catalog.
inline RootSet orthogonal_roots(bool odd, int N) {
  RootBuilder b(static_cast<std::size_t>(N));
  add_pairs(b, 0, N, Parity::even);
  for (int i = 0; odd && i < N; ++i) b.add_pm(b.e(i), Parity::even);
  return b.finish();
}

}  // namespace detail

/// The root set of sl/gl/osp forgetting parity is a Kostant system of a
/// classical Lie algebra: A for sl and gl, D_N or B_N with N = m + 2n
/// collapsed along e_{m+2j-1} - e_{m+2j} for osp.
inline VerificationReport verify_superization(const AlgebraSpec& spec) {
  detail::Stopwatch sw;
  VerificationReport rep;
  rep.claim = "superization";
  rep.algebra = spec.name();
  const RootSystem sys = build_root_system(spec);
  RootSet tilde;
  LinearMap P;
  std::vector<RationalVector> I;
  if (spec.family == Family::sl || spec.family == Family::gl) {
    const int N = spec.m + spec.n;
    detail::RootBuilder b(static_cast<std::size_t>(N));
    detail::add_type_a(b, N, N);
    tilde = b.finish();
    P = LinearMap::identity(static_cast<std::size_t>(N));
    rep.universe = "A" + std::to_string(N - 1) + ", I empty";
  } else if (spec.family == Family::osp) {
    const int m = spec.m / 2, n = spec.n, N = m + 2 * n;
    const bool odd = spec.m % 2 == 1;
    tilde = detail::orthogonal_roots(odd, N);
    P.source_dim = static_cast<std::size_t>(N);
    const std::size_t target = static_cast<std::size_t>(m + n);
    P.rows.assign(target, RationalVector(static_cast<std::size_t>(N)));
    for (int i = 0; i < m; ++i) P.rows[i][i] = 1;
    for (int j = 0; j < n; ++j) {
      P.rows[m + j][m + 2 * j] = 1;
      P.rows[m + j][m + 2 * j + 1] = 1;
      I.push_back(RationalVector::unit(N, m + 2 * j) - RationalVector::unit(N, m + 2 * j + 1));
    }
    rep.universe = std::string(odd ? "B" : "D") + std::to_string(N) + ", I = " + std::to_string(n) + " roots";
  } else {
    throw PreconditionError("superization applies to sl, gl and osp only");
  }
  // I must sit in a base of the classical system and span the kernel of P.
  std::vector<std::size_t> idx;
  for (const auto& v : I) idx.push_back(tilde.index_of(v));
  rep.check(extends_to_base(tilde, idx), [] { return "collapse set is not contained in a base"; });
  const auto kernel = null_space(P.source_dim, P.rows);
  rep.check(rank_of(P.source_dim, I) == kernel.size() &&
                rank_of(P.source_dim, [&] { auto all = I; for (auto& v : kernel) all.push_back(v); return all; }()) ==
                    kernel.size(),
            [] { return "the coordinate map does not collapse exactly span(I)"; });
  std::set<RationalVector> image;
  for (const auto& v : tilde.vectors()) {
    RationalVector w = P.apply(v);
    if (!w.is_zero()) image.insert(std::move(w));
  }
  const std::set<RationalVector> roots(sys.roots.vectors().begin(), sys.roots.vectors().end());
  rep.check(image == roots, [&] {
    return std::to_string(image.size()) + " projected roots vs " + std::to_string(roots.size()) + " roots";
  });
  rep.seconds = sw.seconds();
  return rep;
}

// ---------------------------------------------------------------------------
// E8

/// Bourbaki simple roots of E8 in the even-coordinate model.
inline std::vector<RationalVector> e8_simple_roots() {
  const Rational h(1, 2);
  std::vector<RationalVector> s;
  s.push_back(RationalVector({h, -h, -h, -h, -h, -h, -h, h}));
  s.push_back(RationalVector::unit(8, 0) + RationalVector::unit(8, 1));
  s.push_back(RationalVector::unit(8, 1) - RationalVector::unit(8, 0));
  for (std::size_t i = 2; i <= 6; ++i) s.push_back(RationalVector::unit(8, i) - RationalVector::unit(8, i - 1));
  return s;
}

struct E8Facts {
  std::vector<Integer> highest_root;  // in Bourbaki order
  Integer max_coefficient = 0;
  std::size_t roots_with_double_five = 0;
};

inline E8Facts e8_facts() {
  const auto sys = make_root_system(lie('E', 8));
  const auto simple = e8_simple_roots();
  const Decomposer dec(8, simple);
  E8Facts f;
  Integer best_height = -1;
  for (const auto& v : sys->roots.vectors()) {
    const auto c = *dec.solve(v);
    std::vector<Integer> coeffs;
    Integer height = 0;
    for (const auto& x : c) {
      if (!is_integer(x)) throw ConsistencyError("non-integral coefficient in E8");
      coeffs.push_back(x.numerator());
      height += x.numerator();
      f.max_coefficient = std::max(f.max_coefficient, x.numerator() < 0 ? -x.numerator() : x.numerator());
    }
    if (height > best_height) {
      best_height = height;
      f.highest_root = coeffs;
    }
    if ((coeffs[3] == 5 || coeffs[3] == -5) && (coeffs[4] == 5 || coeffs[4] == -5)) ++f.roots_with_double_five;
  }
  return f;
}

inline VerificationReport verify_e8() {
  detail::Stopwatch sw;
  VerificationReport rep;
  rep.claim = "e8";
  rep.algebra = "E8";
  rep.universe = "all 240 roots; collapse sets sigma minus alpha4, sigma minus alpha5";
  const auto f = e8_facts();
  const std::vector<Integer> expected = {2, 3, 4, 6, 5, 4, 3, 2};
  rep.check(f.highest_root == expected, [&] {
    std::string s;
    for (auto c : f.highest_root) s += std::to_string(c) + " ";
    return "highest root coefficients " + s;
  });
  rep.check(f.max_coefficient == 6, [&] { return "max coefficient " + std::to_string(f.max_coefficient); });
  rep.check(f.roots_with_double_five == 0, [&] {
    return std::to_string(f.roots_with_double_five) + " roots with coefficient 5 at both alpha4 and alpha5";
  });
  const auto sys = make_root_system(lie('E', 8));
  std::vector<std::size_t> sigma;
  for (const auto& v : e8_simple_roots()) sigma.push_back(sys->roots.index_of(v));
  rep.check(is_base(sys->roots, [&] { auto s = sigma; std::sort(s.begin(), s.end()); return s; }()),
            [] { return "Bourbaki simple roots are not a base"; });
  for (std::size_t drop : {std::size_t{3}, std::size_t{4}}) {
    std::vector<std::size_t> I;
    for (std::size_t j = 0; j < sigma.size(); ++j) {
      if (j != drop) I.push_back(sigma[j]);
    }
    const auto sub = verify_theorem3_ii(sys, I);
    rep.instances += sub.instances;
    rep.failures += sub.failures;
    for (const auto& w : sub.witnesses) rep.witnesses.push_back(w);
    // R is a line here; the proof singles out mu = 2 mu', nu = 3 mu'.
    const auto k = project(sys, I);
    const RationalVector unit = k.project(sys->roots[sigma[drop]]);
    const auto mu = k.R.find(Rational(2) * unit), nu = k.R.find(Rational(3) * unit);
    bool found = false;
    if (mu && nu) {
      for (auto a : k.fibers[*mu]) {
        for (auto b : k.fibers[*nu]) found = found || sys->roots.sum(a, b) >= 0;
      }
    }
    rep.check(found, [&] { return "no lifting pair for 2mu' + 3mu' with alpha" + std::to_string(drop + 1) + " kept"; });
  }
  rep.seconds = sw.seconds();
  return rep;
}

// ---------------------------------------------------------------------------
// Structural properties

inline VerificationReport verify_structural(const AlgebraData& d, std::uint32_t seed = 20240611u,
                                            std::size_t samples = 100) {
  detail::Stopwatch sw;
  VerificationReport rep;
  rep.claim = "structural";
  rep.algebra = d.name();
  const RootSet& roots = d.roots();

  rep.check(negation_symmetric(*d.sys), [] { return "root set is not symmetric under negation"; });
  const auto dim = verify_dimension_identity(*d.sys);
  rep.check(dim.holds, [&] {
    return "rank " + std::to_string(dim.rank) + " + center " + std::to_string(dim.dim_center) + " != dim h " +
           std::to_string(dim.dim_h);
  });

  // Positive systems and bases determine each other.
  const auto systems = enumerate_positive_systems(roots);
  std::set<Base> from_systems;
  for (const auto& p : systems) {
    const Base b = indecomposables(roots, p);
    rep.check(is_base(roots, b) && positives_of_base(roots, b) == p,
              [&] { return "positive system with indecomposables " + detail::describe_set(roots, b) + " is not regenerated"; });
    from_systems.insert(b);
  }
  rep.check(from_systems.size() == systems.size() &&
                std::vector<Base>(from_systems.begin(), from_systems.end()) == d.bases,
            [&] { return std::to_string(systems.size()) + " positive systems vs " + std::to_string(d.bases.size()) + " bases"; });

  // Kostant systems are symmetric, and projections keep fiber graphs connected.
  for (const auto& c : collapse_cases(d, Dedup::by_collapse_set)) {
    const auto kJ = project(d.sys, c.I);
    bool symmetric = true;
    for (const auto& v : kJ.R.vectors()) symmetric = symmetric && kJ.R.contains(-v);
    rep.check(symmetric, [&] { return "R is not symmetric for I=" + detail::describe_set(roots, c.I); });
    for (std::size_t drop = 0; drop < c.I.size(); ++drop) {
      std::vector<std::size_t> I;
      for (std::size_t j = 0; j < c.I.size(); ++j) {
        if (j != drop) I.push_back(c.I[j]);
      }
      const auto kI = project(d.sys, I);
      for (const auto& tau : kJ.R.vectors()) {
        const auto g = fiber_graph(kJ, c.sigma, tau);
        if (!is_connected(g)) continue;
        rep.check(is_connected(project_graph(g, kI.projection)), [&] {
          return "projection of the connected fiber graph over " + tau.to_short_string() + " is disconnected";
        });
      }
    }
  }

  // Adapted bases for random root-spanned subspaces.
  std::mt19937 rng(seed);
  for (std::size_t s = 0; s < samples; ++s) {
    std::uniform_int_distribution<std::size_t> count(0, roots.rank());
    std::uniform_int_distribution<std::size_t> pick(0, roots.size() - 1);
    std::vector<RationalVector> w;
    const std::size_t k = count(rng);
    for (std::size_t j = 0; j < k; ++j) w.push_back(roots[pick(rng)]);
    const Base b = adapted_base(roots, w);
    rep.check(is_base(roots, b) && is_adapted(roots, b, w), [&] {
      std::string span;
      for (const auto& v : w) span += v.to_short_string() + " ";
      return "adapted base fails for the span of " + span;
    });
  }
  rep.universe = "negation, dimension, " + std::to_string(systems.size()) + " positive systems, collapse sets, " +
                 std::to_string(samples) + " random subspaces (seed " + std::to_string(seed) + ")";
  rep.seconds = sw.seconds();
  return rep;
}

// ---------------------------------------------------------------------------
// Catalog

inline constexpr int kDefaultRankBound = 5;

/// KOSTANT_RANK_BOUND if set to a positive integer, else the default.
inline int rank_bound_from_env() {
  if (const char* v = std::getenv("KOSTANT_RANK_BOUND")) {
    char* end = nullptr;
    const long b = std::strtol(v, &end, 10);
    if (end != v && *end == '\0' && b > 0 && b <= 8) return static_cast<int>(b);
    throw UsageError(std::string("KOSTANT_RANK_BOUND must be an integer in 1..8, got '") + v + "'");
  }
  return kDefaultRankBound;
}

/// Algebras covered by the verification suites: sl(m|n) with m + n <= 6,
/// gl(m|m) with m <= 3, osp(m|2n) with m + 2n <= 7, the three exceptional
/// superalgebras, and the simple Lie types, all of root rank at most `rank_bound`.
inline std::vector<AlgebraSpec> default_catalog(int rank_bound = kDefaultRankBound) {
  std::vector<AlgebraSpec> out;
  auto keep = [&](const AlgebraSpec& a) {
    if (build_root_system(a).roots.rank() <= static_cast<std::size_t>(rank_bound)) out.push_back(a);
  };
  for (int total = 2; total <= 6; ++total) {
    for (int m = 1; m < total; ++m) {
      if (m != total - m) keep(sl(m, total - m));
    }
  }
  for (int m = 1; m <= 3; ++m) keep(gl(m));
  for (int m = 1; m <= 5; ++m) {
    for (int n = 1; m + 2 * n <= 7; ++n) keep(osp(m, 2 * n));
  }
  keep(d21a());
  keep(g3());
  keep(f4());
  for (int r = 1; r <= rank_bound; ++r) keep(lie('A', r));
  for (int r = 2; r <= rank_bound; ++r) keep(lie('B', r));
  for (int r = 3; r <= rank_bound; ++r) keep(lie('C', r));
  for (int r = 4; r <= rank_bound; ++r) keep(lie('D', r));
  if (rank_bound >= 2) keep(lie('G', 2));
  if (rank_bound >= 4) keep(lie('F', 4));
  if (rank_bound >= 6) keep(lie('E', 6));
  return out;
}

}  // namespace kostant
