#include "equinorm/errors.hpp"
#include "equinorm/reductions.hpp"

#include "generators.hpp"
#include "oracles.hpp"

#include <gtest/gtest.h>

using namespace equinorm;

namespace {

Rational q(long long n, long long d = 1) { return Rational(Integer(n), Integer(d)); }

std::vector<std::array<long long, 3>> as_arrays(const std::vector<PythagoreanTriple>& triples) {
  std::vector<std::array<long long, 3>> out;
  for (const auto& t : triples) {
    out.push_back({t.odd_leg.convert_to<long long>(), t.even_leg.convert_to<long long>(),
                   t.hypotenuse.convert_to<long long>()});
  }
  return out;
}

}  // namespace

TEST(PythagoreanForward, Examples) {
  auto t = pythagorean_forward({q(2), {q(1, 2)}});
  EXPECT_EQ(t.x, RationalVector({q(3, 2), q(2)}));
  EXPECT_EQ(t.y1, q(5, 2));

  t = pythagorean_forward({q(1), {q(0), q(0), q(0)}});
  EXPECT_EQ(t.x, RationalVector({q(1), q(0), q(0), q(0)}));
  EXPECT_EQ(t.y1, q(1));

  t = pythagorean_forward({q(3), {q(1, 3), q(2, 3)}});
  EXPECT_EQ(t.x, RationalVector({q(4, 3), q(2), q(4)}));
  EXPECT_EQ(t.y1, q(14, 3));
  std::vector<Rational> all(t.x.begin(), t.x.end());
  all.push_back(t.y1);
  EXPECT_EQ(primitive_normalize(clear_denominators(RationalVector(all)).values), IntegerVector({2, 3, 6, 7}));
}

TEST(PythagoreanForward, MatchesClassicalTwoDimensionalForm) {
  std::mt19937_64 rng(41);
  for (int i = 0; i < 300; ++i) {
    const Rational s1 = gen::nonzero_rational(rng);
    const Rational l = gen::small_rational(rng);
    const auto t = pythagorean_forward({s1, {l}});
    EXPECT_EQ(t.x[0], s1 * (Rational(1) - l * l));
    EXPECT_EQ(t.x[1], Rational(2) * s1 * l);
    EXPECT_EQ(t.y1, s1 * (Rational(1) + l * l));
  }
}

TEST(PythagoreanForward, IdentityAndRoundTrip) {
  std::mt19937_64 rng(43);
  for (int i = 0; i < 1000; ++i) {
    std::vector<Rational> lambda;
    for (int k = 0; k <= i % 5; ++k) lambda.push_back(gen::small_rational(rng));
    const PythagoreanParams p(gen::nonzero_rational(rng), lambda);
    const auto t = pythagorean_forward(p);
    EXPECT_EQ(norm_sq(t.x), t.y1 * t.y1);
    EXPECT_EQ(pythagorean_inverse(t.x, t.y1), p);
  }
}

TEST(PythagoreanInverse, Examples) {
  auto p = pythagorean_inverse({q(3), q(4)}, q(5));
  EXPECT_EQ(p.s1(), q(4));
  EXPECT_EQ(p.lambda(), std::vector<Rational>{q(1, 2)});

  p = pythagorean_inverse({q(1), q(0)}, q(1));
  EXPECT_EQ(p.s1(), q(1));
  EXPECT_EQ(p.lambda(), std::vector<Rational>{q(0)});

  p = pythagorean_inverse({q(2), q(3), q(6)}, q(7));
  EXPECT_EQ(p.s1(), q(9, 2));
  EXPECT_EQ(p.lambda(), (std::vector<Rational>{q(1, 3), q(2, 3)}));
  const auto t = pythagorean_forward(p);
  EXPECT_EQ(t.x, RationalVector({q(2), q(3), q(6)}));
  EXPECT_EQ(t.y1, q(7));
}

TEST(PythagoreanInverse, Errors) {
  EXPECT_THROW(pythagorean_inverse({q(-5), q(0)}, q(5)), DegenerateAxis);
  EXPECT_THROW(pythagorean_inverse({q(1), q(1)}, q(1)), NotASolution);
  EXPECT_THROW(PythagoreanParams(q(0), {q(1)}), DegenerateAxis);
}

TEST(GeneratePythagoreanTriples, SmallBounds) {
  EXPECT_EQ(as_arrays(generate_pythagorean_triples(5)), (std::vector<std::array<long long, 3>>{{3, 4, 5}}));
  EXPECT_EQ(as_arrays(generate_pythagorean_triples(25)),
            (std::vector<std::array<long long, 3>>{{3, 4, 5}, {5, 12, 13}, {15, 8, 17}, {7, 24, 25}}));
  EXPECT_THROW(generate_pythagorean_triples(4), UsageError);
}

TEST(GeneratePythagoreanTriples, MatchesBruteForce) {
  for (long long bound : {5, 13, 30, 100, 250}) {
    auto expected = oracle::pythagorean_triples(bound);
    std::sort(expected.begin(), expected.end(), [](const auto& a, const auto& b) {
      return std::tie(a[2], a[0]) < std::tie(b[2], b[0]);
    });
    EXPECT_EQ(as_arrays(generate_pythagorean_triples(bound)), expected) << "bound " << bound;
  }
}
