#include "equinorm/core.hpp"
#include "equinorm/errors.hpp"
#include "equinorm/lattice.hpp"

#include "oracles.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <cstdlib>
#include <random>

using namespace equinorm;

namespace {

PrimitiveSolution canon(std::vector<long long> x, std::vector<long long> y) {
  return PrimitiveSolution::canonicalize(IntegerVector(std::vector<Integer>(x.begin(), x.end())),
                                         IntegerVector(std::vector<Integer>(y.begin(), y.end())));
}

std::set<oracle::Class> as_classes(const SolutionSet& set) {
  std::set<oracle::Class> out;
  for (const auto& s : set) {
    oracle::Vec x, y;
    for (const auto& c : s.x()) x.push_back(c.convert_to<long long>());
    for (const auto& c : s.y()) y.push_back(c.convert_to<long long>());
    out.insert({x, y});
  }
  return out;
}

}  // namespace

TEST(Canonicalize, SortsScalesAndOrders) {
  const auto c = canon({0, 5}, {-3, 4});
  EXPECT_EQ(c.x(), IntegerVector({4, 3}));
  EXPECT_EQ(c.y(), IntegerVector({5, 0}));
  EXPECT_EQ(canon({6, 8}, {10, 0}), c);
  EXPECT_THROW(canon({1, 1}, {2, 0}), NotASolution);
  EXPECT_THROW(canon({0, 0}, {0, 0}), DomainError);
}

TEST(Canonicalize, InvariantUnderSignsSwapAndIdempotent) {
  std::mt19937_64 rng(83);
  const auto classes = brute_force_solutions(3, 8);
  for (const auto& s : classes) {
    std::vector<Integer> x(s.x().begin(), s.x().end());
    std::vector<Integer> y(s.y().begin(), s.y().end());
    std::shuffle(x.begin(), x.end(), rng);
    for (auto& c : y) {
      if (rng() % 2) c = -c;
    }
    const Integer k = 1 + rng() % 5;
    for (auto& c : x) c *= k;
    for (auto& c : y) c *= k;
    EXPECT_EQ(PrimitiveSolution::canonicalize(IntegerVector(y), IntegerVector(x)), s);
    EXPECT_EQ(PrimitiveSolution::canonicalize(s.x(), s.y()), s);
  }
}

TEST(BruteForce, Examples) {
  const auto n2 = brute_force_solutions(2, 5);
  EXPECT_TRUE(n2.contains(canon({3, 4}, {5, 0})));
  EXPECT_EQ(n2.size(), 12u);

  // x = y classes are kept; (0,1)/(1,0) collapses onto ((1,0),(1,0)).
  const auto tiny = brute_force_solutions(2, 1);
  EXPECT_EQ(tiny, (SolutionSet{canon({1, 0}, {1, 0}), canon({1, 1}, {1, 1})}));
  EXPECT_TRUE(tiny.contains(canon({0, 1}, {1, 0})));

  const auto n3 = brute_force_solutions(3, 3);
  EXPECT_TRUE(n3.contains(canon({1, 2, 2}, {3, 0, 0})));
  EXPECT_EQ(n3.size(), 14u);
}

TEST(BruteForce, MatchesUnreducedScan) {
  for (auto [n, bound] : {std::pair<std::size_t, long long>{2, 20}, {3, 6}, {4, 3}}) {
    EXPECT_EQ(as_classes(brute_force_solutions(n, bound)), oracle::equal_norm_classes(n, bound))
        << "n=" << n << " bound=" << bound;
  }
}

TEST(BruteForce, FrozenCounts) {
  // Counts from an independent exhaustive scan.
  EXPECT_EQ(brute_force_solutions(2, 30).size(), 354u);
  EXPECT_EQ(brute_force_solutions(2, 50).size(), 1036u);
  EXPECT_EQ(brute_force_solutions(3, 12).size(), 586u);
  EXPECT_EQ(brute_force_solutions(4, 6).size(), 292u);
}

TEST(BruteForce, EveryClassSolvesTheEquation) {
  for (const auto& s : brute_force_solutions(3, 10)) {
    EXPECT_TRUE(verify_equal_norm(s.x().to_rational(), s.y().to_rational()));
  }
}

TEST(BruteForce, Deterministic) { EXPECT_EQ(brute_force_solutions(3, 9), brute_force_solutions(3, 9)); }

TEST(BruteForce, Limits) {
  EXPECT_THROW(brute_force_solutions(1, 5), UsageError);
  EXPECT_THROW(brute_force_solutions(2, 0), UsageError);
  EXPECT_THROW(brute_force_solutions(2, 201), LimitExceeded);
  EXPECT_THROW(brute_force_solutions(3, 41), LimitExceeded);
  EXPECT_THROW(brute_force_solutions(4, 16), LimitExceeded);
  EXPECT_THROW(brute_force_solutions(7, 1), LimitExceeded);
  EXPECT_EQ(scan_limit(2), 200);
  EXPECT_EQ(scan_limit(3), 40);
  EXPECT_EQ(scan_limit(4), 15);
}

TEST(BruteForce, LimitOverrideFromEnvironment) {
  ASSERT_EQ(setenv("EQUINORM_SCAN_LIMIT", "3", 1), 0);
  EXPECT_EQ(scan_limit(2), 3);
  EXPECT_THROW(brute_force_solutions(2, 4), LimitExceeded);
  ASSERT_EQ(setenv("EQUINORM_SCAN_LIMIT", "garbage", 1), 0);
  EXPECT_EQ(scan_limit(2), 200);
  ASSERT_EQ(unsetenv("EQUINORM_SCAN_LIMIT"), 0);
}

TEST(EnumerateViaParams, Examples) {
  const auto n2 = enumerate_via_params(2, 2);
  EXPECT_TRUE(n2.contains(canon({3, 4}, {5, 0})));
  EXPECT_FALSE(enumerate_via_params(3, 1).empty());
  EXPECT_FALSE(enumerate_via_params(4, 1).empty());
  EXPECT_TRUE(enumerate_via_params(2, 0).empty());
}

TEST(EnumerateViaParams, LambdaZeroSliceGivesDiagonalClasses) {
  for (const auto& s : enumerate_via_params(2, 1)) {
    const auto p = inverse_with_pivot(EqualNormPair(s.x().to_rational(), s.y().to_rational()));
    if (std::all_of(p.lambda().begin(), p.lambda().end(), [](const Rational& l) { return l.is_zero(); })) {
      EXPECT_EQ(s.x(), s.y());
    }
  }
}

TEST(EnumerateViaParams, SoundAndPrimitive) {
  for (const auto& s : enumerate_via_params(3, 2)) {
    EXPECT_TRUE(verify_equal_norm(s.x().to_rational(), s.y().to_rational()));
    EXPECT_EQ(PrimitiveSolution::canonicalize(s.x(), s.y()), s);
  }
}

TEST(CoverageCheck, InverseReachesEveryClass) {
  const auto r2 = coverage_check(2, 50, ParamSource::Inverse);
  EXPECT_EQ(r2.total, 1036u);
  EXPECT_EQ(r2.reachable, r2.total);
  EXPECT_TRUE(r2.unreachable.empty());

  const auto r3 = coverage_check(3, 12, ParamSource::Inverse);
  EXPECT_EQ(r3.total, 586u);
  EXPECT_TRUE(r3.unreachable.empty());
}

TEST(CoverageCheck, Sweep) {
  const auto empty = coverage_check(2, 5, ParamSource::Sweep, 0);
  EXPECT_EQ(empty.reachable, 0u);
  EXPECT_LT(empty.reachable, empty.total);
  EXPECT_EQ(empty.unreachable.size(), empty.total);

  const auto some = coverage_check(2, 5, ParamSource::Sweep, 3);
  EXPECT_EQ(some.total, some.reachable + some.unreachable.size());
  EXPECT_GT(some.reachable, 0u);
  EXPECT_THROW(coverage_check(2, 5, ParamSource::Sweep), UsageError);
}

TEST(BenchGeneration, RowsPerMethod) {
  auto rows = bench_generation(2, 30, 2);
  ASSERT_EQ(rows.size(), 2u);
  EXPECT_EQ(rows[0].method, "brute");
  EXPECT_EQ(rows[0].count, 354u);
  EXPECT_EQ(rows[1].method, "params");
  EXPECT_EQ(rows[1].count, enumerate_via_params(2, 2).size());

  EXPECT_EQ(bench_generation(2, 1, 1)[0].count, 2u);
  rows = bench_generation(4, 6, 1);
  EXPECT_EQ(rows[0].dimension, 4u);
  EXPECT_EQ(rows[0].count, 292u);
}
