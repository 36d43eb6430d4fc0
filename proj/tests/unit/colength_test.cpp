#include <gtest/gtest.h>

#include <random>

#include "klab/colength.hpp"
#include "klab/error.hpp"
#include "test_util.hpp"

namespace klab {
namespace {

using testing::make_ring;
using testing::P;
using testing::PL;
using testing::V;

/// Staircase count for a monomial ideal by direct membership over a box.
std::uint64_t staircase(const std::vector<Monomial>& gens, std::size_t nvars, unsigned box) {
  std::uint64_t count = 0;
  std::vector<unsigned> e(nvars, 0);
  for (;;) {
    Monomial m(nvars, std::span<const unsigned>(e));
    bool inside = false;
    for (const auto& g : gens) {
      bool div = true;
      for (std::size_t i = 0; i < nvars; ++i) div = div && g[i] <= e[i];
      inside = inside || div;
    }
    if (!inside) ++count;
    std::size_t i = 0;
    while (i < nvars && ++e[i] > box) e[i++] = 0;
    if (i == nvars) break;
  }
  return count;
}

ModulePresentation cyclic(const RingSpec& r, const std::string& rels) {
  std::vector<ModuleElement> cols;
  for (const auto& f : PL(r, rels)) cols.push_back(ModuleElement::from_polynomial(f));
  return ModulePresentation(r, 1, cols);
}

TEST(RrefRank, Examples) {
  PrimeField f(32003);
  EXPECT_EQ(rref_rank({{1, 0}, {0, 1}}, f).rank, 2u);
  EXPECT_EQ(rref_rank({{1, 2}, {2, 4}}, PrimeField(7)).rank, 1u);
  auto r = rref_rank({{2, 4, 1}, {1, 2, 3}}, PrimeField(7));
  ASSERT_EQ(r.rank, 2u);
  EXPECT_EQ(r.basis[0][0], 1u);
  EXPECT_EQ(r.basis[1][0], 0u);
}

TEST(RrefRank, AgreesWithIndependentElimination) {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 5; ++trial) {
    std::vector<std::vector<std::int64_t>> rows(50, std::vector<std::int64_t>(40));
    std::uniform_int_distribution<std::int64_t> c(0, 32002);
    // force some dependency
    for (std::size_t i = 0; i < 50; ++i) {
      for (auto& x : rows[i]) x = (i % 7 == 3) ? 0 : c(rng);
    }
    for (std::size_t i = 30; i < 50; ++i) {
      for (std::size_t j = 0; j < 40; ++j) rows[i][j] = (rows[i - 30][j] * 3 + rows[i - 29][j]) % 32003;
    }
    EXPECT_EQ(rref_rank(rows, PrimeField(32003)).rank, testing::oracle_rank(rows, 32003));
  }
}

TEST(EchelonBasis, IncrementalRankMatchesDense) {
  std::mt19937_64 rng(23);
  PrimeField f(101);
  EchelonBasis e(f, 12);
  std::vector<std::vector<std::int64_t>> dense;
  for (int k = 0; k < 30; ++k) {
    SparseVector v;
    std::vector<std::int64_t> d(12, 0);
    for (std::uint32_t i = 0; i < 12; ++i) {
      if (rng() % 4 == 0) {
        Coeff c = 1 + rng() % 100;
        v.push_back({i, c});
        d[i] = c;
      }
    }
    e.insert(v);
    dense.push_back(d);
    EXPECT_EQ(e.rank(), testing::oracle_rank(dense, 101));
  }
}

TEST(DimQuotientAt, Examples) {
  auto r3 = make_ring("x,y,z");
  EXPECT_EQ(dim_quotient_at(PL(r3, "x,y,z"), r3, 1), 1u);
  auto r2 = make_ring("x,y");
  EXPECT_EQ(dim_quotient_at(PL(r2, "x^2,y^3"), r2, 5), 6u);
  EXPECT_EQ(dim_quotient_at(PL(r2, "x^2,y^3"), r2, 2), 3u);
}

TEST(LocalColength, Examples) {
  auto r2 = make_ring("x,y");
  auto c = local_colength(PL(r2, "x^2, y^3"), r2);
  EXPECT_TRUE(c.certified());
  EXPECT_EQ(c.value, 6u);
  EXPECT_TRUE(certificate_consistent(c));

  auto r3 = make_ring("x,y,z", "x*z, y*z");
  // staircase {1, z..z^8, x, y, x*y}; x^2 = z^8 and x^2*y = 0 in R/I
  auto f3 = local_colength(PL(r3, "x^2 - z^8, y^2"), r3);
  EXPECT_EQ(f3.value, 12u);
  EXPECT_TRUE(f3.certified());

  auto s = make_ring("x1,x2");
  auto f4 = local_colength(PL(s, "x1^3 - x1*x2^2, x2^8 + x1^2"), s);
  EXPECT_EQ(f4.value, 12u);
  EXPECT_TRUE(certificate_consistent(f4));
}

TEST(LocalColength, AllMethodsAgree) {
  auto s = make_ring("x1,x2");
  auto gens = PL(s, "x1^3 - x1*x2^2, x2^8 + x1^2");
  for (auto m : {LengthMethod::kFiltration, LengthMethod::kTruncatedBasis, LengthMethod::kLinearAlgebra}) {
    auto c = local_colength(gens, s, LengthOptions{64, m});
    EXPECT_EQ(c.value, 12u) << to_string(m);
    EXPECT_TRUE(c.certified());
    EXPECT_TRUE(certificate_consistent(c));
  }
  auto r3 = make_ring("x,y,z", "x*z, y*z");
  auto a = local_colength(PL(r3, "x^2 - z^8, y^2"), r3, LengthOptions{64, LengthMethod::kLinearAlgebra});
  auto b = local_colength(PL(r3, "x^2 - z^8, y^2"), r3, LengthOptions{64, LengthMethod::kFiltration});
  EXPECT_EQ(a.value, b.value);
  EXPECT_EQ(a.truncation_degree, b.truncation_degree);
}

TEST(LocalColength, IgnoresPointsAwayFromTheOrigin) {
  // V(x - x^2, y) = {0, 1}: only the origin counts
  auto r = make_ring("x,y");
  auto c = local_colength(PL(r, "x - x^2, y"), r);
  EXPECT_EQ(c.value, 1u);
  auto d = local_colength(PL(r, "x^2*(x-1)^3, y^2"), r);
  EXPECT_EQ(d.value, 4u);
}

TEST(LocalColength, CapExceededIsAStatus) {
  auto r = make_ring("x,y");
  auto c = local_colength(PL(r, "x"), r, 6);
  EXPECT_EQ(c.status, LengthStatus::kCapExceeded);
  EXPECT_THROW(local_colength(PL(r, "x"), r, 1), ArgumentError);
}

TEST(LocalColength, MonomialIdealsMatchStaircase) {
  std::mt19937_64 rng(41);
  auto r = make_ring("x,y,z");
  for (int trial = 0; trial < 15; ++trial) {
    std::vector<Monomial> gens{Monomial(3, {1 + static_cast<unsigned>(rng() % 5), 0, 0}),
                               Monomial(3, {0, 1 + static_cast<unsigned>(rng() % 5), 0}),
                               Monomial(3, {0, 0, 1 + static_cast<unsigned>(rng() % 5)})};
    for (int k = 0; k < 3; ++k) {
      gens.push_back(Monomial(3, {static_cast<unsigned>(rng() % 4), static_cast<unsigned>(rng() % 4),
                                  static_cast<unsigned>(rng() % 4)}));
    }
    std::vector<Polynomial> polys;
    for (const auto& m : gens) polys.push_back(Polynomial::monomial(r.field(), m));
    auto c = local_colength(polys, r);
    EXPECT_EQ(c.value, staircase(gens, 3, 6));
  }
}

TEST(LocalColength, MonotoneAndStablePastCertificate) {
  auto r3 = make_ring("x,y,z", "x*z, y*z");
  auto gens = PL(r3, "x^2 - z^8, y^2");
  auto c = local_colength(gens, r3);
  ASSERT_TRUE(c.certified());
  std::uint64_t prev = 0;
  for (unsigned n = 1; n <= c.truncation_degree + 4; ++n) {
    std::uint64_t h = dim_quotient_at(gens, r3, n);
    EXPECT_GE(h, prev);
    if (n >= c.truncation_degree) EXPECT_EQ(h, c.value);
    prev = h;
  }
}

TEST(LocalColength, PrimeIndependence) {
  for (std::uint64_t p : {101u, 32003u}) {
    auto r3 = make_ring("x,y,z", "x*z, y*z", p);
    EXPECT_EQ(local_colength(PL(r3, "x^3 - z^27, y^3"), r3).value, 36u);
    auto s = make_ring("x1,x2", "", p);
    EXPECT_EQ(local_colength(PL(s, "x1^4 - x1*x2^3, x2^27 + x1^3"), s).value, 36u);
  }
}

TEST(ModuleLocalColength, Examples) {
  auto r = make_ring("x,y,z");
  EXPECT_EQ(module_local_colength(cyclic(r, "x,y,z")).value, 1u);
  std::vector<ModuleElement> rels;
  for (std::size_t i = 0; i < 2; ++i) {
    for (const auto& v : {"x", "y", "z"}) rels.push_back(ModuleElement::basis(P(r, v), 2, i));
  }
  EXPECT_EQ(module_local_colength(ModulePresentation(r, 2, rels)).value, 2u);
}

TEST(ModuleLocalColength, MatchesIdealVersion) {
  auto r3 = make_ring("x,y,z", "x*z, y*z");
  auto gens = PL(r3, "x^2 - z^8, y^2");
  std::vector<ModuleElement> cols;
  for (const auto& g : gens) cols.push_back(ModuleElement::from_polynomial(g));
  EXPECT_EQ(module_local_colength(ModulePresentation(r3, 1, cols)).value, local_colength(gens, r3).value);
}

TEST(GrowthDegree, Examples) {
  auto r = make_ring("x,y");
  auto a = growth_degree(cyclic(r, "x"), 6);
  EXPECT_EQ(a.degree, 1);
  EXPECT_EQ(a.dims, (std::vector<std::uint64_t>{1, 2, 3, 4, 5, 6}));
  auto b = growth_degree(ModulePresentation::free(r, 1), 6);
  EXPECT_EQ(b.degree, 2);
  EXPECT_EQ(b.dims[3], 10u);
  auto c = growth_degree(cyclic(r, "x,y"), 5);
  EXPECT_EQ(c.degree, 0);
  EXPECT_EQ(c.leading_difference, 1u);
  EXPECT_THROW(growth_degree(cyclic(r, "x"), 3), ArgumentError);
}

}  // namespace
}  // namespace klab
