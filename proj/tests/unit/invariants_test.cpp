#include <gtest/gtest.h>

#include "klab/error.hpp"
#include "klab/families.hpp"
#include "klab/invariants.hpp"
#include "test_util.hpp"

using namespace klab;
using namespace klab::testing;

TEST(IdealPower, CountsProducts) {
  auto r = make_ring("x, y, z");
  EXPECT_EQ(ideal_power(PL(r, "x, y, z"), 2).size(), 6u);
  EXPECT_EQ(ideal_power(PL(r, "x, y"), 3), PL(r, "x^3, x^2*y, x*y^2, y^3"));
  EXPECT_THROW(ideal_power({}, 2), ArgumentError);
}

TEST(LocalDimension, Examples) {
  EXPECT_EQ(local_dimension(ring_of(make_ring("x, y, z"))), 3);
  EXPECT_EQ(local_dimension(ring_of(make_ring("x, y, z", "x*z, y*z"))), 2);
  EXPECT_EQ(local_dimension(quotient_presentation(PL(make_ring("x, y"), "x - 1"), make_ring("x, y"))), 0);
  // Line through the origin plus a plane away from it.
  auto r = make_ring("x, y, z");
  EXPECT_EQ(local_dimension(quotient_presentation(PL(r, "x*(x - 1), y*(x - 1)"), r)), 1);
}

TEST(HsMultiplicity, Examples) {
  auto r3 = make_ring("x, y, z");
  auto a = hs_multiplicity(PL(r3, "x, y, z"), ring_of(r3));
  EXPECT_TRUE(a.stabilized());
  EXPECT_EQ(a.value, 1u);

  auto r2 = make_ring("x, y");
  auto b = hs_multiplicity(PL(r2, "x, y^2"), ring_of(r2));
  EXPECT_EQ(b.lengths, (std::vector<std::uint64_t>{2, 6, 12, 20, 30, 42}));
  EXPECT_EQ(b.value, 2u);

  auto q = make_ring("x, y, z", "x*z, y*z");
  auto c = hs_multiplicity(PL(q, "x^2 - z^8, y^2"), ring_of(q));
  EXPECT_EQ(c.dimension, 2);
  EXPECT_TRUE(c.stabilized());
  EXPECT_EQ(c.value, 4u);

  EXPECT_THROW(hs_multiplicity(PL(r3, "x, y"), ring_of(r3)), PreconditionError);
}

TEST(HsMultiplicity, GeneratorPermutationInvariance) {
  auto r = make_ring("x, y");
  auto m = ring_of(r);
  auto a = hs_multiplicity(PL(r, "x^2 + y^3, x*y"), m);
  auto b = hs_multiplicity(PL(r, "x*y, x^2 + y^3"), m);
  EXPECT_EQ(a.value, b.value);
  EXPECT_EQ(a.lengths, b.lengths);
  EXPECT_EQ(a.value, 5u);
}

TEST(SerreCheck, Examples) {
  auto q = make_ring("x, y, z", "x*z, y*z");
  auto a = serre_check(PL(q, "x^2 - z^8, y^2"), ring_of(q));
  EXPECT_TRUE(a.pass);
  EXPECT_EQ(a.multiplicity.value, 4u);
  EXPECT_EQ(a.lengths, (std::vector<std::uint64_t>{0, 8, 12}));
  EXPECT_EQ(a.alternating_sum, 4);

  auto r = make_ring("x, y, z");
  auto b = serre_check(PL(r, "x, y, z"), ring_of(r));
  EXPECT_TRUE(b.pass);
  EXPECT_EQ(b.alternating_sum, 1);

  auto f1 = instantiate_family("F1", 2);
  auto c = serre_check(f1.ideal, f1.target("M").module);
  EXPECT_TRUE(c.pass);
  EXPECT_EQ(c.lengths[0], 0u);
  EXPECT_EQ(c.lengths[1], 0u);
  EXPECT_EQ(c.lengths[2], 16u);
  EXPECT_EQ(static_cast<std::int64_t>(c.multiplicity.value), static_cast<std::int64_t>(c.lengths[3]) - 16);

  EXPECT_THROW(serre_check(PL(r, "x, y"), ring_of(r)), PreconditionError);
  EXPECT_THROW(serre_check(PL(r, "x, y, x + y"), ring_of(r)), PreconditionError);
}

TEST(LechCheck, Examples) {
  auto r2 = make_ring("x, y");
  auto a = lech_check(PL(r2, "x^2, y^3"), r2);
  EXPECT_EQ(a.lhs, 6u);
  EXPECT_EQ(a.rhs, 12u);
  EXPECT_TRUE(a.pass);

  auto r3 = make_ring("x, y, z");
  auto b = lech_check(PL(r3, "x, y, z"), r3);
  EXPECT_EQ(b.lhs, 1u);
  EXPECT_EQ(b.rhs, 6u);

  auto q = make_ring("x, y, z", "x*z, y*z");
  auto c = lech_check(PL(q, "x^2 - z^8, y^2"), q);
  EXPECT_EQ(c.e_maximal, 1u);
  EXPECT_EQ(c.lhs, 4u);
  EXPECT_EQ(c.rhs, 2u * c.e_maximal * 12u);
  EXPECT_TRUE(c.pass);
}

TEST(RandomParameterIdeals, SerreAndLech) {
  std::mt19937_64 rng(20240917);
  int checked = 0;
  for (const char* vars : {"x, y", "x, y, z"}) {
    auto r = make_ring(vars);
    int here = 0;
    while (here < 12) {
      // Pure powers plus random higher terms keep the ideal m-primary.
      std::vector<Polynomial> f;
      for (std::size_t v = 0; v < r.nvars(); ++v) {
        unsigned e = std::uniform_int_distribution<unsigned>(1, 3)(rng);
        f.push_back(r.var(v, e) + random_poly(r, rng, 2, 4, e + 1) + random_poly(r, rng, 1, 3, 2));
      }
      if (!local_colength(f, r).certified()) continue;
      ++here;
      auto s = serre_check(f, ring_of(r));
      EXPECT_TRUE(s.pass) << "serre " << f[0].to_string(r.variables()) << " e=" << s.multiplicity.value
                          << " alt=" << s.alternating_sum;
      auto l = lech_check(f, r);
      EXPECT_TRUE(l.pass) << "lech " << l.lhs << " " << l.rhs;
      ++checked;
    }
  }
  EXPECT_GE(checked, 20);
}

TEST(FinitenessProfile, Examples) {
  auto r = make_ring("x, y, z");
  auto a = lc_finiteness_profile(ring_of(r));
  ASSERT_EQ(a.entries.size(), 4u);
  for (int i = 0; i < 3; ++i) {
    EXPECT_EQ(a.entries[i].finite, Finiteness::kYes);
    EXPECT_EQ(a.entries[i].length->value, 0u);
  }
  EXPECT_EQ(a.entries[3].finite, Finiteness::kNo);
  EXPECT_EQ(a.certified_asydepth, 3);

  auto b = lc_finiteness_profile(present_ideal_module(PL(r, "x, y"), r));
  EXPECT_EQ(b.entries[0].finite, Finiteness::kYes);
  EXPECT_EQ(b.entries[1].finite, Finiteness::kYes);
  EXPECT_EQ(b.entries[2].finite, Finiteness::kNo);
  EXPECT_EQ(b.entries[2].support->dimension, 1);
  EXPECT_EQ(b.certified_asydepth, 2);

  auto q = make_ring("x, y, z", "x*z, y*z");
  auto c = lc_finiteness_profile(ring_of(q));
  EXPECT_EQ(c.dimension, 2);
  EXPECT_EQ(c.entries[0].finite, Finiteness::kYes);
  EXPECT_EQ(c.entries[1].finite, Finiteness::kNo);
  EXPECT_EQ(c.certified_asydepth, 1);
  EXPECT_FALSE(c.semi);
}

TEST(FinitenessProfile, FiniteLocalCohomologyWithLength) {
  // S/(x) ⊕ S/m over k[x,y]: H^0_m = S/m has length 1, H^1_m is infinite.
  auto r = make_ring("x, y");
  auto p = direct_sum(quotient_presentation(PL(r, "x"), r), quotient_presentation(PL(r, "x, y"), r));
  auto a = lc_finiteness_profile(p);
  EXPECT_EQ(a.dimension, 1);
  EXPECT_EQ(a.entries[0].finite, Finiteness::kYes);
  EXPECT_EQ(a.entries[0].length->value, 1u);
  EXPECT_EQ(a.entries[1].finite, Finiteness::kNo);
}

TEST(CertifiedAsydepth, Examples) {
  auto r = make_ring("x, y, z");
  EXPECT_EQ(certified_asydepth(ring_of(r)).value, 3);
  EXPECT_EQ(certified_asydepth(present_ideal_module(PL(r, "x, y"), r)).value, 2);
  auto q = make_ring("x, y, z", "x*z, y*z");
  EXPECT_EQ(certified_asydepth(ring_of(q)).value, 1);
  EXPECT_THROW(certified_asydepth(quotient_presentation(PL(r, "x"), r)), PreconditionError);
}

TEST(BackwardBound, Examples) {
  auto r = make_ring("x, y, z");
  auto witness = direct_sum(ring_of(r), quotient_presentation(PL(r, "x, y, z"), r));
  auto a = backward_bound_check(witness, PL(r, "x, y, z"), 1);
  EXPECT_TRUE(a.applicable);
  EXPECT_EQ(a.measured, 3u);
  EXPECT_EQ(a.bound, 3u);
  EXPECT_TRUE(a.pass);

  for (std::size_t i = 0; i < 3; ++i) {
    auto b = backward_bound_check(ring_of(r), PL(r, "x^2 + y*z, y^3, z^2 - x*y"), i);
    EXPECT_TRUE(b.pass);
    EXPECT_EQ(b.measured, 0u);
  }

  auto c = backward_bound_check(present_ideal_module(PL(r, "x, y"), r), PL(r, "x, y, z"), 1);
  EXPECT_EQ(c.measured, 0u);
  EXPECT_EQ(c.bound, 0u);
  EXPECT_TRUE(c.pass);

  EXPECT_FALSE(backward_bound_check(present_ideal_module(PL(r, "x, y"), r), PL(r, "x, y, z"), 2).applicable);
}

TEST(BackwardBound, HoldsWhereProfileIsFinite) {
  std::mt19937_64 rng(5);
  auto r = make_ring("x, y, z");
  auto m = present_ideal_module(PL(r, "x, y"), r);
  for (int trial = 0; trial < 5; ++trial) {
    std::vector<Polynomial> f;
    for (std::size_t v = 0; v < 3; ++v) f.push_back(r.var(v, 2) + random_poly(r, rng, 2, 4, 3));
    for (std::size_t i = 0; i < 2; ++i) EXPECT_TRUE(backward_bound_check(m, f, i).pass);
  }
}

TEST(EffaceabilitySeries, F4AndF3) {
  auto f4 = effaceability_series([](unsigned n) { return instantiate_family("F4", n); }, "N", 1, 2, 4);
  ASSERT_EQ(f4.size(), 3u);
  const std::uint64_t hi[] = {8, 27, 64}, ri[] = {12, 36, 80};
  for (std::size_t k = 0; k < 3; ++k) {
    EXPECT_TRUE(f4[k].complete);
    EXPECT_EQ(f4[k].len_hi, hi[k]);
    EXPECT_EQ(f4[k].len_r_mod_i, ri[k]);
    EXPECT_EQ(f4[k].len_m_mod_im, hi[k]);
  }
  auto f3 = effaceability_series([](unsigned n) { return instantiate_family("F3", n); }, "R", 1, 2, 3);
  EXPECT_EQ(f3[0].len_hi, 8u);
  EXPECT_EQ(f3[0].len_r_mod_i, 12u);
  EXPECT_EQ(f3[1].len_hi, 27u);
  EXPECT_EQ(f3[1].len_r_mod_i, 36u);

  auto bad = effaceability_series([](unsigned n) { return instantiate_family("F4", n); }, "M", 1, 2, 2);
  EXPECT_FALSE(bad[0].complete);
  EXPECT_FALSE(bad[0].error.empty());
}

TEST(EffaceabilitySeries, RegularSequenceOnFreeModule) {
  auto rows = effaceability_series([](unsigned n) { return instantiate_family("F1", n); }, "R", 0, 2, 3);
  for (const auto& row : rows) EXPECT_EQ(row.len_hi, 0u);
  rows = effaceability_series([](unsigned n) { return instantiate_family("F1", n); }, "R", 2, 2, 2);
  EXPECT_EQ(rows[0].len_hi, 0u);
}
