#include <gtest/gtest.h>

#include <algorithm>

#include "klab/error.hpp"
#include "klab/fpmodules.hpp"
#include "klab/koszul.hpp"
#include "test_util.hpp"

using namespace klab;
using namespace klab::testing;

namespace {

const char* kF1n2 = "z^16 - z^2*x^2, y^2 - z^2*x, x^3 - x*z^14 + y*z^2";

void expect_complex(const KoszulComplex& k) {
  for (std::size_t i = 2; i < k.differentials.size(); ++i) {
    for (const auto& col : k.differentials[i]) {
      EXPECT_TRUE(apply_columns(k.differentials[i - 1], col, k.ranks[i - 2]).is_zero()) << "d_" << i - 1 << " d_" << i;
    }
  }
}

std::vector<std::uint64_t> homology_lengths(const KoszulComplex& k) {
  std::vector<std::uint64_t> out;
  for (std::size_t i = 0; i <= k.length(); ++i) {
    auto c = koszul_homology_length(k, i);
    EXPECT_TRUE(c.certified());
    out.push_back(c.value);
  }
  return out;
}

}  // namespace

TEST(Subsets, LexicographicOrder) {
  auto s = subsets(4, 2);
  ASSERT_EQ(s.size(), 6u);
  EXPECT_EQ(s.front(), (std::vector<std::size_t>{0, 1}));
  EXPECT_EQ(s[2], (std::vector<std::size_t>{0, 3}));
  EXPECT_EQ(s.back(), (std::vector<std::size_t>{2, 3}));
  EXPECT_EQ(subsets(3, 0).size(), 1u);
  EXPECT_TRUE(subsets(2, 3).empty());
}

TEST(BuildKoszul, Examples) {
  auto r1 = make_ring("x");
  auto a = build_koszul(PL(r1, "x"), ModulePresentation::free(r1, 1));
  EXPECT_EQ(a.ranks, (std::vector<std::size_t>{1, 1}));
  EXPECT_EQ(a.differentials[1][0], V(r1, {"x"}));

  auto r2 = make_ring("x, y");
  auto b = build_koszul(PL(r2, "x, y"), ModulePresentation::free(r2, 1));
  EXPECT_EQ(b.ranks, (std::vector<std::size_t>{1, 2, 1}));
  EXPECT_EQ(b.differentials[1][0], V(r2, {"x"}));
  EXPECT_EQ(b.differentials[1][1], V(r2, {"y"}));
  EXPECT_EQ(b.differentials[2][0], V(r2, {"-y", "x"}));

  auto r3 = make_ring("x, y, z");
  auto m = present_ideal_module(PL(r3, "x, y"), r3);
  auto c = build_koszul(PL(r3, kF1n2), m);
  EXPECT_EQ(c.ranks, (std::vector<std::size_t>{2, 6, 6, 2}));
  EXPECT_EQ(c.term(1).relations().size(), 3 * m.relations().size());
  expect_complex(c);

  EXPECT_THROW(build_koszul({}, m), ArgumentError);
  EXPECT_THROW(build_koszul(PL(r2, "x"), m), StructuralError);
}

TEST(BuildKoszul, DifferentialsSquareToZero) {
  std::mt19937_64 rng(7);
  auto r = make_ring("x, y, z");
  for (int trial = 0; trial < 10; ++trial) {
    std::vector<Polynomial> f;
    for (int j = 0; j < 3; ++j) f.push_back(random_poly(r, rng, 3, 3, 1));
    expect_complex(build_koszul(f, ModulePresentation::free(r, 2)));
  }
  auto q = make_ring("x, y, z", "x*z, y*z");
  expect_complex(build_koszul(PL(q, "x^2 - z^8, y^2"), quotient_presentation({}, q)));
}

TEST(KoszulHomology, RegularSequence) {
  auto r = make_ring("x, y, z");
  auto k = build_koszul(PL(r, "x, y, z"), ModulePresentation::free(r, 1));
  EXPECT_EQ(homology_lengths(k), (std::vector<std::uint64_t>{1, 0, 0, 0}));
}

TEST(KoszulHomology, NonUnmixedRing) {
  // On k[x,y,z]/(xz,yz) the sequence (x^2 - z^8, y^2) leaves H_1 of length 8.
  auto q = make_ring("x, y, z", "x*z, y*z");
  auto k = build_koszul(PL(q, "x^2 - z^8, y^2"), quotient_presentation({}, q));
  auto h = homology_lengths(k);
  EXPECT_EQ(h[2], 0u);
  EXPECT_EQ(h[1], 8u);
  EXPECT_EQ(h[0], 12u);
}

TEST(KoszulHomology, PowersOfVariablesOnResidueField) {
  // On S/m every Koszul differential vanishes, so H_i = C(d, i).
  auto r = make_ring("x, y, z");
  auto k = build_koszul(PL(r, "x^2, y, z^3"), quotient_presentation(PL(r, "x, y, z"), r));
  EXPECT_EQ(homology_lengths(k), (std::vector<std::uint64_t>{1, 3, 3, 1}));
}

TEST(KoszulCohomologyProfile, Examples) {
  auto r = make_ring("x, y, z");
  auto m = present_ideal_module(PL(r, "x, y"), r);
  auto a = koszul_cohomology_profile(PL(r, "x, y, z"), m);
  ASSERT_EQ(a.cohomology.size(), 4u);
  EXPECT_EQ(a.cohomology[0].value, 0u);
  EXPECT_EQ(a.cohomology[1].value, 0u);
  EXPECT_TRUE(a.top_consistent);

  auto f1 = koszul_cohomology_profile(PL(r, kF1n2), m);
  EXPECT_EQ(f1.cohomology[0].value, 0u);
  EXPECT_EQ(f1.cohomology[1].value, 0u);
  EXPECT_EQ(f1.cohomology[2].value, 16u);
  EXPECT_TRUE(f1.top_consistent);

  auto t = make_ring("x1, x2");
  auto n = quotient_presentation(PL(t, "x1"), t);
  auto f4 = koszul_cohomology_profile(PL(t, "x1^3 - x1*x2^2, x2^8 + x1^2"), n);
  EXPECT_EQ(f4.cohomology[1].value, 8u);
  EXPECT_EQ(f4.top_direct.value, 8u);
  EXPECT_TRUE(f4.top_consistent);

  auto free2 = koszul_cohomology_profile(PL(make_ring("x, y"), "x, y"), ModulePresentation::free(make_ring("x, y"), 2));
  EXPECT_EQ(free2.cohomology[0].value, 0u);
  EXPECT_EQ(free2.cohomology[1].value, 0u);
  EXPECT_EQ(free2.cohomology[2].value, 2u);
}

TEST(KoszulHomology, GeneratorOrderInvariance) {
  auto r = make_ring("x, y, z");
  auto m = present_ideal_module(PL(r, "x, y"), r);
  auto f = PL(r, kF1n2);
  auto base = homology_lengths(build_koszul(f, m));
  std::vector<std::size_t> order{0, 1, 2};
  while (std::next_permutation(order.begin(), order.end())) {
    std::vector<Polynomial> g;
    for (auto j : order) g.push_back(f[j]);
    EXPECT_EQ(homology_lengths(build_koszul(g, m)), base);
  }

  auto q = make_ring("x, y, z", "x*z, y*z");
  auto rq = quotient_presentation({}, q);
  EXPECT_EQ(homology_lengths(build_koszul(PL(q, "y^2, x^2 - z^8"), rq)),
            homology_lengths(build_koszul(PL(q, "x^2 - z^8, y^2"), rq)));
}

TEST(KoszulHomology, DepthSensitivity) {
  std::mt19937_64 rng(11);
  auto r = make_ring("x, y, z");
  auto m = present_ideal_module(PL(r, "x, y"), r);
  for (int trial = 0; trial < 4; ++trial) {
    std::vector<Polynomial> f = PL(r, "x^2, y^3, z^2");
    for (auto& g : f) g += random_poly(r, rng, 2, 4, 3);
    auto free_profile = koszul_cohomology_profile(f, ModulePresentation::free(r, 1));
    for (std::size_t i = 0; i < 3; ++i) EXPECT_EQ(free_profile.cohomology[i].value, 0u) << "free, i=" << i;
    EXPECT_TRUE(free_profile.top_consistent);
    auto mp = koszul_cohomology_profile(f, m);
    for (std::size_t i = 0; i < 2; ++i) EXPECT_EQ(mp.cohomology[i].value, 0u) << "(x,y), i=" << i;
    EXPECT_TRUE(mp.top_consistent);
  }
}
