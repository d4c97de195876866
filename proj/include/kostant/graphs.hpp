#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "kostant/bases.hpp"
#include "kostant/errors.hpp"
#include "kostant/kostant_system.hpp"
#include "kostant/union_find.hpp"

namespace kostant {

/// Label of an edge, stored as the representative of ±label whose first
/// nonzero coordinate is positive.
struct EdgeLabel {
  RationalVector vector;
  std::string name;

  friend bool operator==(const EdgeLabel&, const EdgeLabel&) = default;
};

/// Edge {u, v} with u < v; vertices[u] - vertices[v] = negative ? -label : label.
struct GraphEdge {
  std::size_t u = 0;
  std::size_t v = 0;
  EdgeLabel label;
  bool negative = false;
};

struct LabeledGraph {
  std::vector<RationalVector> vertices;  // sorted
  std::vector<GraphEdge> edges;          // sorted by (u, v), no loops, no parallel edges

  std::optional<std::size_t> vertex_index(const RationalVector& v) const {
    auto it = std::lower_bound(vertices.begin(), vertices.end(), v);
    if (it == vertices.end() || *it != v) return std::nullopt;
    return static_cast<std::size_t>(it - vertices.begin());
  }

  /// Edges as pairs of vertex vectors, for comparisons across graphs.
  std::vector<std::pair<RationalVector, RationalVector>> edge_pairs() const {
    std::vector<std::pair<RationalVector, RationalVector>> out;
    for (const auto& e : edges) out.emplace_back(vertices[e.u], vertices[e.v]);
    return out;
  }
};

namespace detail {

inline bool leading_positive(const RationalVector& v) {
  for (const auto& c : v) {
    if (c != 0) return c > 0;
  }
  return false;
}

inline std::pair<RationalVector, bool> canonical_label(const RationalVector& diff) {
  if (leading_positive(diff)) return {diff, false};
  return {-diff, true};
}

inline std::vector<RationalVector> sorted_unique(std::vector<RationalVector> v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

/// Edge between u and v iff their difference is ± one of the labels.
inline LabeledGraph graph_on(std::vector<RationalVector> vertices, const std::vector<RationalVector>& labels,
                             const std::vector<std::string>& names) {
  LabeledGraph g;
  g.vertices = sorted_unique(std::move(vertices));
  std::map<RationalVector, std::size_t> by_rep;
  for (std::size_t j = 0; j < labels.size(); ++j) by_rep.emplace(canonical_label(labels[j]).first, j);
  for (std::size_t u = 0; u < g.vertices.size(); ++u) {
    for (std::size_t v = u + 1; v < g.vertices.size(); ++v) {
      auto [rep, neg] = canonical_label(g.vertices[u] - g.vertices[v]);
      auto it = by_rep.find(rep);
      if (it == by_rep.end()) continue;
      g.edges.push_back({u, v, {rep, names[it->second]}, neg});
    }
  }
  return g;
}

inline std::vector<std::string> simple_names(std::size_t n) {
  std::vector<std::string> out;
  for (std::size_t j = 0; j < n; ++j) out.push_back("a" + std::to_string(j + 1));
  return out;
}

}  // namespace detail

/// Gamma_{R,S}: vertices R, an edge labeled s whenever mu - nu = ±s.
/// Labels are named a1, a2, ... in the order of S.
inline LabeledGraph graph_of(const RootSet& R, const Base& S) {
  if (!is_base(R, S)) throw PreconditionError("graph_of needs a base of the root set");
  return detail::graph_on(R.vectors(), R.select(S), detail::simple_names(S.size()));
}

/// Fiber graph over tau for a system collapsed along I inside the base sigma.
/// Vertices are the roots over tau, edges are labeled by ±I with the names
/// of their positions in sigma.
inline LabeledGraph fiber_graph(const KostantSystem& k, const Base& sigma, const RationalVector& tau) {
  if (tau.is_zero()) throw PreconditionError("fiber graphs are defined over nonzero Kostant roots only");
  if (!k.R.contains(tau)) throw PreconditionError(tau.to_short_string() + " is not a Kostant root");
  if (!std::includes(sigma.begin(), sigma.end(), k.I.begin(), k.I.end())) {
    throw PreconditionError("the collapse set is not contained in the given base");
  }
  const RootSet& roots = k.source->roots;
  std::vector<RationalVector> labels;
  std::vector<std::string> names;
  for (std::size_t j = 0; j < sigma.size(); ++j) {
    if (std::binary_search(k.I.begin(), k.I.end(), sigma[j])) {
      labels.push_back(roots[sigma[j]]);
      names.push_back("a" + std::to_string(j + 1));
    }
  }
  return detail::graph_on(roots.select(fiber_of(k, tau)), labels, names);
}

/// Fiber graph with explicit labels, for systems not built from a base
/// (toral projections, where m may have no roots at all).
inline LabeledGraph fiber_graph(const KostantSystem& k, const std::vector<RationalVector>& labels,
                                const RationalVector& tau) {
  if (tau.is_zero()) throw PreconditionError("fiber graphs are defined over nonzero Kostant roots only");
  return detail::graph_on(k.source->roots.select(fiber_of(k, tau)), labels, detail::simple_names(labels.size()));
}

/// pi(Gamma): images of vertices and edges, loops dropped, parallel edges merged.
inline LabeledGraph project_graph(const LabeledGraph& g, const LinearMap& pi) {
  std::vector<RationalVector> images;
  for (const auto& v : g.vertices) {
    RationalVector w = pi.apply(v);
    if (w.is_zero()) throw PreconditionError("vertex " + v.to_short_string() + " lies in the kernel of the projection");
    images.push_back(std::move(w));
  }
  LabeledGraph out;
  out.vertices = detail::sorted_unique(images);
  std::map<std::pair<std::size_t, std::size_t>, GraphEdge> merged;
  for (const auto& e : g.edges) {
    std::size_t a = *out.vertex_index(images[e.u]);
    std::size_t b = *out.vertex_index(images[e.v]);
    if (a == b) continue;
    if (a > b) std::swap(a, b);
    auto [rep, neg] = detail::canonical_label(out.vertices[a] - out.vertices[b]);
    merged.try_emplace({a, b}, GraphEdge{a, b, {rep, e.label.name}, neg});
  }
  for (auto& [key, e] : merged) out.edges.push_back(std::move(e));
  return out;
}

inline std::size_t component_count(const LabeledGraph& g) {
  UnionFind uf(g.vertices.size());
  for (const auto& e : g.edges) uf.unite(e.u, e.v);
  return uf.components();
}

inline bool is_connected(const LabeledGraph& g) { return g.vertices.size() <= 1 || component_count(g) == 1; }

struct EdgeLiftingReport {
  RationalVector nu;
  bool vertices_equal = false;
  bool edges_included = false;   // every edge of the quotient fiber graph lifts
  bool edges_equal = false;
  std::vector<std::pair<RationalVector, RationalVector>> unlifted;  // quotient edges with no lift
  std::vector<std::pair<RationalVector, RationalVector>> extra;     // projected edges absent from the quotient graph
};

/// Compares pi_I(Gamma^nu over J) with the fiber graph over nu of the
/// quotient system, whose labels are pi_I(J \ I).
inline EdgeLiftingReport edge_lifting_report(const Composition& c, const Base& sigma, const RationalVector& nu) {
  const RootSet& roots = c.by_J.source->roots;
  EdgeLiftingReport rep;
  rep.nu = nu;
  const LabeledGraph upstairs = project_graph(fiber_graph(c.by_J, sigma, nu), c.by_I.projection);

  std::vector<RationalVector> verts;
  for (const auto& mu : c.by_I.R.vectors()) {
    if (c.pi_IJ.apply(mu) == nu) verts.push_back(mu);
  }
  std::vector<RationalVector> labels;
  std::vector<std::string> names;
  for (std::size_t j = 0; j < sigma.size(); ++j) {
    const bool in_J = std::binary_search(c.by_J.I.begin(), c.by_J.I.end(), sigma[j]);
    const bool in_I = std::binary_search(c.by_I.I.begin(), c.by_I.I.end(), sigma[j]);
    if (in_J && !in_I) {
      labels.push_back(c.by_I.project(roots[sigma[j]]));
      names.push_back("a" + std::to_string(j + 1));
    }
  }
  const LabeledGraph quotient = detail::graph_on(verts, labels, names);

  rep.vertices_equal = upstairs.vertices == quotient.vertices;
  const auto up = upstairs.edge_pairs();
  const auto down = quotient.edge_pairs();
  for (const auto& e : down) {
    if (!std::binary_search(up.begin(), up.end(), e)) rep.unlifted.push_back(e);
  }
  for (const auto& e : up) {
    if (!std::binary_search(down.begin(), down.end(), e)) rep.extra.push_back(e);
  }
  rep.edges_included = rep.unlifted.empty();
  rep.edges_equal = rep.vertices_equal && rep.unlifted.empty() && rep.extra.empty();
  return rep;
}

inline EdgeLiftingReport edge_lifting_report(std::shared_ptr<const RootSystem> src, const Base& sigma,
                                             const std::vector<std::size_t>& I, const std::vector<std::size_t>& J,
                                             const RationalVector& nu) {
  return edge_lifting_report(compose_projections(std::move(src), I, J), sigma, nu);
}

/// Graphviz text with lexicographically ordered vertices.
inline std::string to_dot(const LabeledGraph& g, const std::string& name = "G") {
  std::ostringstream out;
  out << "graph \"" << name << "\" {\n";
  for (const auto& v : g.vertices) out << "  \"" << v.to_short_string() << "\";\n";
  for (const auto& e : g.edges) {
    out << "  \"" << g.vertices[e.u].to_short_string() << "\" -- \"" << g.vertices[e.v].to_short_string()
        << "\" [label=\"" << e.label.name << "\"];\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace kostant
