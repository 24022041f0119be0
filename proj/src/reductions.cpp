#include "equinorm/reductions.hpp"

#include "equinorm/errors.hpp"

#include <numeric>
#include <set>

namespace equinorm {

PythagoreanParams::PythagoreanParams(Rational s1, std::vector<Rational> lambda)
    : s1_(std::move(s1)), lambda_(std::move(lambda)) {
  if (s1_.is_zero()) throw DegenerateAxis(0);
  if (lambda_.empty()) throw DimensionMismatch("need at least one lambda");
}

PythagoreanTuple pythagorean_forward(const PythagoreanParams& params) {
  const auto& s1 = params.s1();
  Rational lambda_sq;
  for (const auto& l : params.lambda()) lambda_sq += l * l;

  std::vector<Rational> x;
  x.reserve(params.lambda().size() + 1);
  x.push_back(s1 * (Rational(1) - lambda_sq));
  for (const auto& l : params.lambda()) x.push_back(Rational(2) * s1 * l);
  return {RationalVector(std::move(x)), s1 * (Rational(1) + lambda_sq)};
}

PythagoreanParams pythagorean_inverse(const RationalVector& x, const Rational& y1) {
  if (norm_sq(x) != y1 * y1) throw NotASolution("sum of squares does not equal y1^2");
  const Rational s1 = (x[0] + y1) / Rational(2);
  if (s1.is_zero()) throw DegenerateAxis(0);
  std::vector<Rational> lambda;
  lambda.reserve(x.size() - 1);
  for (std::size_t k = 1; k < x.size(); ++k) lambda.push_back(x[k] / (Rational(2) * s1));
  return PythagoreanParams(s1, std::move(lambda));
}

std::vector<PythagoreanTriple> generate_pythagorean_triples(long long max_hypotenuse) {
  if (max_hypotenuse < 5) throw UsageError("max hypotenuse must be at least 5");

  // Before normalization the hypotenuse is a^2 + b^2, and the primitive
  // scaling divides it by at most 2, so b^2 < 2 * max bounds the sweep.
  std::set<PythagoreanTriple> found;
  for (long long b = 2; b * b < 2 * max_hypotenuse; ++b) {
    for (long long a = 1; a < b; ++a) {
      if (std::gcd(a, b) != 1) continue;
      const PythagoreanParams params(Rational(b * b), {Rational(Integer(a), Integer(b))});
      const auto [x, y1] = pythagorean_forward(params);
      const auto cleared = clear_denominators(RationalVector{x[0], x[1], y1});
      const auto triple = primitive_normalize(cleared.values);
      if (triple[2] > max_hypotenuse) continue;
      const Integer leg1 = boost::multiprecision::abs(triple[0]);
      const Integer leg2 = boost::multiprecision::abs(triple[1]);
      if (leg1 % 2 == 1) {
        found.insert({leg1, leg2, triple[2]});
      } else {
        found.insert({leg2, leg1, triple[2]});
      }
    }
  }
  return {found.begin(), found.end()};
}

}  // namespace equinorm
