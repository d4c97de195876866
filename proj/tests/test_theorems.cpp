#include <gtest/gtest.h>

#include "kostant/theorems.hpp"

using namespace kostant;

namespace {

RationalVector iv(std::initializer_list<Integer> xs) { return RationalVector::from_integers(xs); }

std::string failures(const VerificationReport& r) {
  std::string s = r.claim + " " + r.algebra + ":";
  for (const auto& w : r.witnesses) s += "\n  " + w;
  return s;
}

}  // namespace

TEST(Classify, CandidateSignaturesSeparateNonIsomorphicTypes) {
  // Known coincidences of root sets: sl(2|1) and osp(2|2), osp(4|2) and D(2,1;a).
  const std::set<std::set<std::string>> isomorphic = {{"sl(2|1)", "osp(2|2)"}, {"osp(4|2)", "D(2,1;a)"}};
  for (std::size_t r = 1; r <= 5; ++r) {
    const auto& cands = detail::candidates_of_rank(r);
    for (std::size_t a = 0; a < cands.size(); ++a) {
      for (std::size_t b = a + 1; b < cands.size(); ++b) {
        if (cands[a].signature != cands[b].signature) continue;
        EXPECT_TRUE(isomorphic.count({cands[a].type, cands[b].type})) << cands[a].type << " vs " << cands[b].type;
      }
    }
  }
}

TEST(Classify, WholeRootSetsClassifyAsThemselves) {
  for (const auto& a : {lie('A', 3), lie('B', 3), lie('C', 3), lie('D', 4), lie('G', 2), lie('F', 4), sl(3, 1),
                        gl(2), osp(3, 2), osp(1, 4), osp(6, 2), g3(), f4()}) {
    const auto s = build_root_system(a);
    EXPECT_EQ(classify_root_set(s.roots).type, a.name());
  }
  // D(2,1;a) has the root set of osp(4|2); the name priority picks the latter.
  EXPECT_EQ(classify_root_set(build_root_system(d21a()).roots).type, "osp(4|2)");
}

TEST(Classify, EmptyAndGlComponents) {
  const auto g = make_root_system(gl(3));
  const Base sigma = [&] {
    Base b;
    for (const auto& v : {iv({1, -1, 0, 0, 0, 0}), iv({0, 1, -1, 0, 0, 0}), iv({0, 0, 1, -1, 0, 0}),
                          iv({0, 0, 0, 1, -1, 0}), iv({0, 0, 0, 0, 1, -1})}) {
      b.push_back(g->roots.index_of(v));
    }
    std::sort(b.begin(), b.end());
    return b;
  }();
  EXPECT_TRUE(classify_centralizer(*g, sigma, {}).empty());
  std::vector<std::size_t> I = {g->roots.index_of(iv({0, 1, -1, 0, 0, 0})), g->roots.index_of(iv({0, 0, 1, -1, 0, 0})),
                                g->roots.index_of(iv({0, 0, 0, 1, -1, 0}))};
  const auto comps = classify_centralizer(*g, sigma, I);
  ASSERT_EQ(comps.size(), 1u);
  EXPECT_EQ(comps[0].type, "gl(2|2)");
  EXPECT_TRUE(comps[0].needs_gl_completion);
  EXPECT_EQ(comps[0].k, 2);
}

TEST(Classify, F4OddRootsOfS4) {
  const auto f = make_root_system(f4());
  const Rational h(1, 2);
  std::vector<RationalVector> s4 = {RationalVector({-h, -h, h, h}), RationalVector({-h, h, -h, -h}),
                                    RationalVector({h, h, -h, h}), iv({1, -1, 0, 0})};
  Base sigma;
  for (const auto& v : s4) sigma.push_back(f->roots.index_of(v));
  std::sort(sigma.begin(), sigma.end());
  ASSERT_TRUE(is_base(f->roots, sigma));
  std::vector<std::size_t> I;
  for (std::size_t j = 0; j < 3; ++j) I.push_back(f->roots.index_of(s4[j]));
  const auto comps = classify_centralizer(*f, sigma, I);
  std::size_t flagged = 0;
  for (const auto& c : comps) {
    EXPECT_NE(c.type, "?");
    if (c.needs_gl_completion) {
      ++flagged;
      EXPECT_EQ(c.k, 1);
    }
  }
  EXPECT_LE(flagged, 1u);
}

TEST(Theorem3, ExceptionalsAllFibersConnected) {
  for (const auto& a : {d21a(), g3(), f4()}) {
    const auto d = analyze(a);
    const auto r = verify_theorem3_i(d);
    EXPECT_TRUE(r.passed()) << failures(r);
    EXPECT_GT(r.instances, 0u);
  }
}

TEST(Theorem3, SmallClassicalFamilies) {
  for (const auto& a : {gl(2), sl(2, 1), osp(2, 4), osp(3, 2)}) {
    const auto d = analyze(a);
    for (const auto& r : {verify_theorem3_i(d), verify_theorem3_ii(d), verify_theorem3_iii(d), verify_theorem2(d),
                          verify_edge_lifting(d)}) {
      EXPECT_TRUE(r.passed()) << failures(r);
    }
  }
}

TEST(Theorem3, G3LiftingPairs) {
  const auto g = make_root_system(g3());
  const auto r = verify_theorem3_ii(g, {g->roots.index_of(iv({1, 0, 1}))});
  EXPECT_TRUE(r.passed()) << failures(r);
  EXPECT_GT(r.instances, 0u);
}

TEST(Theorem3, Gl22StringsOfLengthThree) {
  const auto g = make_root_system(gl(2));
  const Base sigma = find_base(g->roots);
  bool long_string = false;
  for (auto s : sigma) {
    if (!g->roots.has_odd(s)) continue;
    const auto k = project(g, std::vector<std::size_t>{s});
    for (std::size_t mu = 0; mu < k.R.size(); ++mu) {
      for (std::size_t nu = 0; nu < k.R.size(); ++nu) {
        const auto js = root_string(k.R, mu, nu);
        EXPECT_TRUE(is_interval_through_zero(js));
        if (js.back() >= 2) long_string = true;
      }
    }
  }
  EXPECT_TRUE(long_string);
}

TEST(Counterexamples, Remark54) {
  const auto r = counterexample_remark_5_4();
  EXPECT_TRUE(r.passed()) << failures(r);
  EXPECT_EQ(r.notes.size(), 4u);
}

TEST(Counterexamples, Remark58) {
  for (int m : {3, 4}) {
    const auto r = counterexample_remark_5_8(m);
    EXPECT_TRUE(r.passed()) << failures(r);
  }
  EXPECT_THROW(counterexample_remark_5_8(2), PreconditionError);
}

TEST(Superization, ClassicalModels) {
  for (const auto& a : {sl(2, 1), sl(3, 2), gl(2), osp(1, 2), osp(2, 2), osp(3, 2), osp(4, 2), osp(5, 4), osp(2, 4)}) {
    const auto r = verify_superization(a);
    EXPECT_TRUE(r.passed()) << failures(r);
  }
  EXPECT_THROW(verify_superization(g3()), PreconditionError);
}

TEST(E8, Facts) {
  const auto f = e8_facts();
  EXPECT_EQ(f.highest_root, (std::vector<Integer>{2, 3, 4, 6, 5, 4, 3, 2}));
  EXPECT_EQ(f.max_coefficient, 6);
  EXPECT_EQ(f.roots_with_double_five, 0u);
  const auto r = verify_e8();
  EXPECT_TRUE(r.passed()) << failures(r);
}

TEST(Structural, SmallAlgebras) {
  for (const auto& a : {sl(2, 1), osp(3, 2), d21a(), lie('B', 3)}) {
    const auto r = verify_structural(analyze(a), 7u, 20);
    EXPECT_TRUE(r.passed()) << failures(r);
  }
}

TEST(Catalog, DefaultContents) {
  const auto c = default_catalog();
  auto has = [&](const AlgebraSpec& a) { return std::find(c.begin(), c.end(), a) != c.end(); };
  EXPECT_TRUE(has(sl(5, 1)));
  EXPECT_TRUE(has(gl(3)));
  EXPECT_TRUE(has(osp(1, 6)));
  EXPECT_TRUE(has(f4()));
  EXPECT_TRUE(has(lie('B', 5)));
  EXPECT_FALSE(has(lie('E', 6)));
  EXPECT_FALSE(has(osp(2, 6)));
  for (const auto& a : c) EXPECT_LE(build_root_system(a).roots.rank(), 5u) << a.name();
  EXPECT_FALSE(has(lie('A', 3)) && default_catalog(2).size() >= c.size());
}
