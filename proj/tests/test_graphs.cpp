#include <gtest/gtest.h>

#include "kostant/graphs.hpp"

using namespace kostant;

namespace {

RationalVector iv(std::initializer_list<Integer> xs) { return RationalVector::from_integers(xs); }

std::shared_ptr<const RootSystem> sys(const AlgebraSpec& a) { return make_root_system(a); }

Base base_of(const RootSystem& s, std::vector<RationalVector> vs) {
  Base b;
  for (const auto& v : vs) b.push_back(s.roots.index_of(v));
  std::sort(b.begin(), b.end());
  return b;
}

// Count of unordered pairs whose difference is ±s for some s in S.
std::size_t brute_edges(const std::vector<RationalVector>& verts, const std::vector<RationalVector>& S) {
  std::size_t n = 0;
  for (std::size_t i = 0; i < verts.size(); ++i) {
    for (std::size_t j = i + 1; j < verts.size(); ++j) {
      for (const auto& s : S) {
        if (verts[i] - verts[j] == s || verts[j] - verts[i] == s) {
          ++n;
          break;
        }
      }
    }
  }
  return n;
}

}  // namespace

TEST(GraphOf, A1HasNoEdge) {
  const auto s = sys(lie('A', 1));
  const auto g = graph_of(s->roots, base_of(*s, {iv({1, -1})}));
  EXPECT_EQ(g.vertices.size(), 2u);
  EXPECT_TRUE(g.edges.empty());
  EXPECT_FALSE(is_connected(g));
}

TEST(GraphOf, A2EdgesAndLabels) {
  const auto s = sys(lie('A', 2));
  const RationalVector a = iv({1, -1, 0}), b = iv({0, 1, -1});
  const Base S = base_of(*s, {a, b});
  const auto g = graph_of(s->roots, S);
  EXPECT_EQ(g.vertices.size(), 6u);
  EXPECT_EQ(g.edges.size(), brute_edges(s->roots.vectors(), {a, b}));
  bool found = false;
  for (const auto& e : g.edges) {
    const auto pair = std::minmax(g.vertices[e.u], g.vertices[e.v]);
    if (pair == std::minmax(a, a + b)) {
      found = true;
      EXPECT_EQ(e.label.vector, b);
    }
  }
  EXPECT_TRUE(found);
  EXPECT_EQ(component_count(g), 2u);
  EXPECT_THROW(graph_of(s->roots, base_of(*s, {a, -b})), PreconditionError);
}

TEST(GraphOf, Sl21HandListing) {
  const auto s = sys(sl(2, 1));
  const Base S = base_of(*s, {iv({1, -1, 0}), iv({0, 1, -1})});
  const auto g = graph_of(s->roots, S);
  // Positive roots form one path through eps1-delta1, negatives the mirror path.
  EXPECT_EQ(g.edges.size(), 4u);
  EXPECT_EQ(component_count(g), 2u);
  for (const auto& e : g.edges) {
    EXPECT_TRUE(g.vertices[e.u] == iv({1, 0, -1}) || g.vertices[e.v] == iv({1, 0, -1}) ||
                g.vertices[e.u] == iv({-1, 0, 1}) || g.vertices[e.v] == iv({-1, 0, 1}));
  }
}

TEST(FiberGraph, EmptyCollapseGivesSingletons) {
  const auto s = sys(osp(3, 2));
  const Base S = find_base(s->roots);
  const auto k = project(s, std::vector<std::size_t>{});
  for (const auto& tau : k.R.vectors()) {
    const auto g = fiber_graph(k, S, tau);
    EXPECT_EQ(g.vertices.size(), 1u);
    EXPECT_TRUE(is_connected(g));
  }
}

TEST(FiberGraph, Sl3ToralFiberIsDisconnected) {
  const auto k = project_by_toral(sys(lie('A', 2)), {iv({1, 0, -1})});
  const auto g = fiber_graph(k, std::vector<RationalVector>{}, iv({1}));
  EXPECT_EQ(g.vertices.size(), 2u);
  EXPECT_TRUE(g.edges.empty());
  EXPECT_FALSE(is_connected(g));
  EXPECT_TRUE(is_connected(fiber_graph(k, std::vector<RationalVector>{}, iv({2}))));
}

TEST(FiberGraph, Preconditions) {
  const auto s = sys(lie('A', 2));
  const Base S = find_base(s->roots);
  const auto k = project(s, std::vector<std::size_t>{S[0]});
  EXPECT_THROW(fiber_graph(k, S, RationalVector(k.R.dim())), PreconditionError);
  EXPECT_THROW(fiber_graph(k, S, RationalVector::unit(k.R.dim(), 0) * Rational(7)), PreconditionError);
}

TEST(FiberGraph, F4OddVectorCollapseConnected) {
  const auto s = sys(f4());
  const Rational h(1, 2);
  const std::size_t i = s->roots.index_of(RationalVector({h, h, h, h}));
  const Base S = *base_containing(s->roots, {i});
  const auto k = project(s, std::vector<std::size_t>{i});
  for (const auto& tau : k.R.vectors()) {
    const auto g = fiber_graph(k, S, tau);
    EXPECT_TRUE(is_connected(g)) << tau.to_short_string();
    // Vertices of one fiber differ by integer multiples of the collapsed root.
    for (const auto& v : g.vertices) {
      const RationalVector d = v - g.vertices.front();
      const Rational c = d[0] / h;
      EXPECT_TRUE(d == c * s->roots[i] && is_integer(c));
    }
  }
}

TEST(ProjectGraph, IdentityAndPreconditions) {
  const auto s = sys(lie('A', 3));
  const Base S = find_base(s->roots);
  const auto g = graph_of(s->roots, S);
  const auto same = project_graph(g, LinearMap::identity(s->ambient_dim()));
  EXPECT_EQ(same.vertices, g.vertices);
  EXPECT_EQ(same.edge_pairs(), g.edge_pairs());
  const auto k = project(s, std::vector<std::size_t>{S[0]});
  EXPECT_THROW(project_graph(g, k.projection), PreconditionError);
}

TEST(ProjectGraph, ConnectedImagesOfConnectedFibers) {
  for (const auto& a : {lie('A', 3), sl(3, 1), osp(3, 2), gl(2), d21a()}) {
    const auto s = sys(a);
    const Base S = find_base(s->roots);
    const std::size_t n = S.size();
    for (unsigned J = 1; J < (1u << n); ++J) {
      std::vector<std::size_t> jv;
      for (std::size_t j = 0; j < n; ++j) {
        if (J >> j & 1) jv.push_back(S[j]);
      }
      const auto kJ = project(s, jv);
      for (std::size_t x = 0; x < n; ++x) {
        if (!(J >> x & 1)) continue;
        const auto kI = project(s, std::vector<std::size_t>{S[x]});
        for (const auto& tau : kJ.R.vectors()) {
          const auto g = fiber_graph(kJ, S, tau);
          const auto img = project_graph(g, kI.projection);
          if (is_connected(g)) EXPECT_TRUE(is_connected(img)) << s->name();
          EXPECT_LE(img.vertices.size(), g.vertices.size());
        }
      }
    }
  }
}

TEST(EdgeLifting, Sl4SingleRoot) {
  const auto s = sys(lie('A', 3));
  const Base S = find_base(s->roots);
  for (auto j : S) {
    const auto kJ = project(s, std::vector<std::size_t>{j});
    for (const auto& nu : kJ.R.vectors()) {
      const auto r = edge_lifting_report(s, S, {}, {j}, nu);
      EXPECT_TRUE(r.vertices_equal);
      EXPECT_TRUE(r.edges_included);
      EXPECT_TRUE(r.edges_equal);
    }
  }
}

TEST(EdgeLifting, F4NestedCollapse) {
  const auto s = sys(f4());
  const Rational h(1, 2);
  const std::size_t i = s->roots.index_of(RationalVector({h, h, h, h}));
  const std::size_t e = s->roots.index_of(iv({1, -1, 0, 0}));
  const auto S = base_containing(s->roots, {i, e});
  ASSERT_TRUE(S.has_value());
  const auto kJ = project(s, std::vector<std::size_t>{i, e});
  for (const auto& nu : kJ.R.vectors()) {
    const auto r = edge_lifting_report(s, *S, {i}, {std::min(i, e), std::max(i, e)}, nu);
    EXPECT_TRUE(r.vertices_equal);
    EXPECT_TRUE(r.edges_included);
    EXPECT_TRUE(r.edges_equal) << nu.to_short_string();
  }
}

TEST(EdgeLifting, EqualCollapseSetsCoincide) {
  const auto s = sys(g3());
  const Base S = find_base(s->roots);
  const auto k = project(s, std::vector<std::size_t>{S[1]});
  for (const auto& nu : k.R.vectors()) {
    const auto r = edge_lifting_report(s, S, {S[1]}, {S[1]}, nu);
    EXPECT_TRUE(r.edges_equal);
  }
}

TEST(Dot, ByteStableA2) {
  const auto s = sys(lie('A', 2));
  // Base order follows vector order: a1 = (0,1,-1), a2 = (1,-1,0).
  const auto g = graph_of(s->roots, base_of(*s, {iv({1, -1, 0}), iv({0, 1, -1})}));
  const std::string expected =
      "graph \"G\" {\n"
      "  \"(-1,0,1)\";\n"
      "  \"(-1,1,0)\";\n"
      "  \"(0,-1,1)\";\n"
      "  \"(0,1,-1)\";\n"
      "  \"(1,-1,0)\";\n"
      "  \"(1,0,-1)\";\n"
      "  \"(-1,0,1)\" -- \"(-1,1,0)\" [label=\"a1\"];\n"
      "  \"(-1,0,1)\" -- \"(0,-1,1)\" [label=\"a2\"];\n"
      "  \"(0,1,-1)\" -- \"(1,0,-1)\" [label=\"a2\"];\n"
      "  \"(1,-1,0)\" -- \"(1,0,-1)\" [label=\"a1\"];\n"
      "}\n";
  EXPECT_EQ(to_dot(g), expected);
}
