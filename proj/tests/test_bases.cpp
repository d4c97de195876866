#include <gtest/gtest.h>

#include <algorithm>
#include <set>

#include "kostant/bases.hpp"
#include "kostant/weyl.hpp"

using namespace kostant;

namespace {

RationalVector iv(std::initializer_list<Integer> xs) { return RationalVector::from_integers(xs); }

RationalVector half(std::initializer_list<Integer> xs) {
  RationalVector v = RationalVector::from_integers(xs);
  return Rational(1, 2) * v;
}

Base base_of(const RootSet& set, const std::vector<RationalVector>& vs) {
  Base b;
  for (const auto& v : vs) b.push_back(set.index_of(v));
  std::sort(b.begin(), b.end());
  return b;
}

bool contains_base(const std::vector<Base>& all, const Base& b) {
  return std::binary_search(all.begin(), all.end(), b);
}

// G(3) coordinates (eps1, eps2, delta) with eps3 = -eps1 - eps2.
const RationalVector g_e1 = iv({1, 0, 0}), g_e2 = iv({0, 1, 0}), g_e3 = iv({-1, -1, 0}), g_d = iv({0, 0, 1});

std::vector<AlgebraSpec> small_catalog() {
  return {lie('A', 1), lie('A', 2), lie('B', 2), lie('G', 2), sl(2, 1), sl(3, 1), gl(1), gl(2),
          osp(1, 2),   osp(2, 2),   osp(3, 2),   osp(1, 4),   d21a()};
}

}  // namespace

TEST(PositiveSystems, A1HasTwo) {
  const auto s = build_root_system(lie('A', 1));
  EXPECT_EQ(enumerate_positive_systems(s.roots).size(), 2u);
  const auto bases = enumerate_bases(s.roots);
  ASSERT_EQ(bases.size(), 2u);
  EXPECT_EQ(s.roots[bases[0][0]], iv({-1, 1}));
  EXPECT_EQ(s.roots[bases[1][0]], iv({1, -1}));
}

TEST(PositiveSystems, D21aHas32) {
  const auto s = build_root_system(d21a());
  EXPECT_EQ(enumerate_positive_systems(s.roots).size(), 32u);
  EXPECT_EQ(enumerate_bases(s.roots).size(), 32u);
}

TEST(PositiveSystems, Sl21HasSix) {
  const auto s = build_root_system(sl(2, 1));
  EXPECT_EQ(enumerate_positive_systems(s.roots).size(), 6u);
}

TEST(PositiveSystems, ChambersAgreeWithAxiomFilter) {
  for (const auto& a : small_catalog()) {
    const auto s = build_root_system(a);
    ASSERT_LE(s.size(), 20u);
    auto chambers = enumerate_positive_systems(s.roots);
    auto axioms = positive_systems_by_axioms(s.roots);
    std::sort(chambers.begin(), chambers.end());
    std::sort(axioms.begin(), axioms.end());
    EXPECT_EQ(chambers, axioms) << s.name();
  }
}

TEST(PositiveSystems, EachHasAWitnessFunctional) {
  const auto s = build_root_system(f4());
  for (const auto& p : enumerate_positive_systems(s.roots)) {
    const Base b = indecomposables(s.roots, p);
    EXPECT_EQ(positives_of_functional(s.roots, functional_for_base(s.roots, b)), p);
  }
}

TEST(Indecomposables, A2) {
  const auto s = build_root_system(lie('A', 2));
  const RationalVector a = iv({1, -1, 0}), b = iv({0, 1, -1});
  const PositiveSystem p = positives_of_functional(s.roots, iv({2, 1, 0}));
  EXPECT_EQ(indecomposables(s.roots, p), base_of(s.roots, {a, b}));
}

TEST(Indecomposables, D21aListedBase) {
  const auto s = build_root_system(d21a());
  const PositiveSystem p = positives_of_functional(s.roots, iv({4, 2, 1}));
  EXPECT_EQ(indecomposables(s.roots, p), base_of(s.roots, {iv({1, -1, -1}), iv({0, 2, 0}), iv({0, 0, 2})}));
}

TEST(Indecomposables, RegenerateThePositiveSystem) {
  for (const auto& a : small_catalog()) {
    const auto s = build_root_system(a);
    for (const auto& p : enumerate_positive_systems(s.roots)) {
      const Base b = indecomposables(s.roots, p);
      EXPECT_TRUE(is_base(s.roots, b));
      EXPECT_EQ(positives_of_base(s.roots, b), p) << s.name();
    }
  }
}

TEST(Bases, ChambersAgreeWithSubsetFilter) {
  for (const auto& a : {sl(2, 1), gl(2), osp(3, 2), d21a(), g3(), f4(), lie('B', 3), sl(3, 2)}) {
    const auto s = build_root_system(a);
    const auto filtered = bases_by_subset_filter(s.roots);
    ASSERT_TRUE(filtered.has_value()) << s.name();
    EXPECT_EQ(enumerate_bases(s.roots), *filtered) << s.name();
  }
}

TEST(Bases, G3ListedBasesPresent) {
  const auto s = build_root_system(g3());
  const auto all = enumerate_bases(s.roots);
  EXPECT_TRUE(contains_base(all, base_of(s.roots, {g_e2, g_e3 - g_e2, g_d + g_e1})));
  EXPECT_TRUE(contains_base(all, base_of(s.roots, {g_d - g_e3, g_e3 - g_e2, -g_d - g_e1})));
  EXPECT_TRUE(contains_base(all, base_of(s.roots, {-g_d + g_e3, g_d - g_e2, g_e2})));
  EXPECT_TRUE(contains_base(all, base_of(s.roots, {g_e3 - g_e2, -g_d + g_e2, g_d})));
}

TEST(Bases, F4ListedBasesPresent) {
  const auto s = build_root_system(f4());
  const auto all = enumerate_bases(s.roots);
  const std::vector<std::vector<RationalVector>> listed = {
      {half({1, 1, 1, 1}), iv({1, -1, 0, 0}), iv({0, 1, -1, 0}), iv({-1, 0, 0, 0})},
      {half({-1, -1, -1, -1}), iv({1, -1, 0, 0}), iv({0, 1, -1, 0}), half({-1, 1, 1, 1})},
      {iv({-1, 0, 0, 0}), half({1, -1, 1, 1}), iv({0, 1, -1, 0}), half({1, -1, -1, -1})},
      {half({-1, -1, 1, 1}), half({-1, 1, -1, -1}), half({1, 1, -1, 1}), iv({1, -1, 0, 0})},
      {half({1, 1, -1, -1}), iv({-1, 0, 0, 0}), iv({0, 0, 0, 1}), iv({1, -1, 0, 0})},
      {iv({0, 0, 0, 1}), iv({0, 1, -1, 0}), half({-1, -1, 1, -1}), iv({1, -1, 0, 0})},
  };
  for (const auto& b : listed) EXPECT_TRUE(contains_base(all, base_of(s.roots, b)));
}

TEST(IsBase, Examples) {
  const auto s = build_root_system(sl(2, 1));
  EXPECT_TRUE(is_base(s.roots, base_of(s.roots, {iv({1, -1, 0}), iv({0, 1, -1})})));
  // {eps1-delta1, -(eps2-delta1)} is a base: eps1-eps2 is their sum.
  EXPECT_TRUE(is_base(s.roots, base_of(s.roots, {iv({1, 0, -1}), iv({0, -1, 1})})));
  // eps1-eps2 = (eps1-delta1) - (eps2-delta1) needs mixed signs.
  EXPECT_FALSE(is_base(s.roots, base_of(s.roots, {iv({1, 0, -1}), iv({0, 1, -1})})));
  EXPECT_FALSE(is_base(s.roots, {}));
  EXPECT_TRUE(is_base(RootSet(), {}));
}

TEST(Weyl, Orders) {
  EXPECT_EQ(weyl_group(build_root_system(d21a())).order(), 8u);
  EXPECT_EQ(weyl_group(build_root_system(g3())).order(), 24u);
  EXPECT_EQ(weyl_group(build_root_system(f4())).order(), 96u);
  EXPECT_EQ(weyl_group(build_root_system(lie('A', 3))).order(), 24u);
  EXPECT_EQ(weyl_group(build_root_system(lie('F', 4))).order(), 1152u);
  EXPECT_EQ(weyl_group(build_root_system(gl(3))).order(), 36u);
}

TEST(Weyl, ElementsPermuteRootsAndBases) {
  const auto s = build_root_system(g3());
  const auto w = weyl_group(s);
  const auto bases = enumerate_bases(s.roots);
  for (const auto& g : w.elements) {
    linear_extension(s.roots, g);
    for (const auto& b : bases) EXPECT_TRUE(contains_base(bases, apply(g, b)));
  }
}

TEST(Weyl, BaseClasses) {
  const auto g = base_classes_up_to_W(build_root_system(g3()));
  EXPECT_EQ(g.classes.size(), 4u);
  const auto f = base_classes_up_to_W(build_root_system(f4()));
  EXPECT_EQ(f.classes.size(), 6u);
  const auto d = base_classes_up_to_W(build_root_system(d21a()));
  EXPECT_EQ(d.classes.size(), 4u);
  // The number of odd simple roots is invariant under every parity-preserving
  // linear symmetry, and D(2,1;a) has bases with one and with three.
  std::set<std::size_t> odd_counts;
  const auto ds = build_root_system(d21a());
  for (const auto& b : enumerate_bases(ds.roots)) {
    odd_counts.insert(std::count_if(b.begin(), b.end(), [&](std::size_t i) { return ds.roots.parity(i) == Parity::odd; }));
  }
  EXPECT_EQ(odd_counts, (std::set<std::size_t>{1, 3}));
  EXPECT_EQ(d.collapsed_classes.size(), odd_counts.size());
  for (const auto* c : {&g, &f, &d}) {
    for (const auto& cls : c->classes) EXPECT_EQ(c->group_order % cls.members.size(), 0u);
  }
}

TEST(Weyl, LieTypesHaveOneClass) {
  for (const auto& a : {lie('A', 3), lie('B', 3), lie('C', 3), lie('G', 2), lie('D', 4)}) {
    const auto c = base_classes_up_to_W(build_root_system(a));
    EXPECT_EQ(c.classes.size(), 1u) << a.name();
    EXPECT_EQ(c.base_count, c.group_order) << a.name();
  }
}

TEST(AdaptedBase, TrivialSubspaces) {
  const auto s = build_root_system(g3());
  const Base b0 = adapted_base(s.roots, {});
  EXPECT_TRUE(is_base(s.roots, b0));
  EXPECT_TRUE(is_adapted(s.roots, b0, {}));
  const std::vector<RationalVector> all = {iv({1, 0, 0}), iv({0, 1, 0}), iv({0, 0, 1})};
  const Base b1 = adapted_base(s.roots, all);
  EXPECT_TRUE(is_adapted(s.roots, b1, all));
}

TEST(AdaptedBase, Sl21Line) {
  const auto s = build_root_system(sl(2, 1));
  const std::vector<RationalVector> w = {iv({1, 0, -1})};
  const Base b = adapted_base(s.roots, w);
  EXPECT_TRUE(is_base(s.roots, b));
  EXPECT_TRUE(is_adapted(s.roots, b, w));
  const bool has = std::any_of(b.begin(), b.end(), [&](std::size_t i) {
    return s.roots[i] == iv({1, 0, -1}) || s.roots[i] == iv({-1, 0, 1});
  });
  EXPECT_TRUE(has);
}

TEST(BaseContaining, AgreesWithEnumeration) {
  for (const auto& a : {sl(2, 1), osp(3, 2), d21a(), g3(), lie('B', 2)}) {
    const auto s = build_root_system(a);
    const auto bases = enumerate_bases(s.roots);
    for (std::size_t i = 0; i < s.size(); ++i) {
      for (std::size_t j = i + 1; j < s.size(); ++j) {
        const std::vector<std::size_t> I = {i, j};
        const bool oracle = std::any_of(bases.begin(), bases.end(), [&](const Base& b) {
          return std::includes(b.begin(), b.end(), I.begin(), I.end());
        });
        const auto got = base_containing(s.roots, I);
        EXPECT_EQ(got.has_value(), oracle) << a.name() << " " << s.roots[i].to_short_string() << " "
                                           << s.roots[j].to_short_string();
        if (got) EXPECT_TRUE(contains_base(bases, *got));
      }
    }
  }
}
