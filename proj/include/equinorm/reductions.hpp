#pragma once

#include "equinorm/rational.hpp"

#include <vector>

namespace equinorm {

// Special cases of the equal-norm parameterization where y = (y1, 0, ..., 0),
// i.e. x1^2 + ... + xn^2 = y1^2.

/// s1 != 0 and one lambda per axis 2..n. With y_k = 0 the chart forces
/// s_k = lambda_k * s1, so these n parameters determine the whole pair.
class PythagoreanParams {
 public:
  PythagoreanParams(Rational s1, std::vector<Rational> lambda);

  const Rational& s1() const noexcept { return s1_; }
  const std::vector<Rational>& lambda() const noexcept { return lambda_; }

  friend bool operator==(const PythagoreanParams&, const PythagoreanParams&) = default;

 private:
  Rational s1_;
  std::vector<Rational> lambda_;
};

struct PythagoreanTuple {
  RationalVector x;
  Rational y1;
};

/// x1 = s1 (1 - sum lambda^2), x_k = 2 s1 lambda_k, y1 = s1 (1 + sum lambda^2).
PythagoreanTuple pythagorean_forward(const PythagoreanParams& params);

/// s1 = (x1 + y1)/2, lambda_k = x_k / (2 s1). Throws NotASolution if
/// sum x_i^2 != y1^2 and DegenerateAxis if x1 + y1 = 0.
PythagoreanParams pythagorean_inverse(const RationalVector& x, const Rational& y1);

/// Primitive triple in canonical order: odd leg, even leg, hypotenuse.
struct PythagoreanTriple {
  Integer odd_leg;
  Integer even_leg;
  Integer hypotenuse;

  friend bool operator==(const PythagoreanTriple&, const PythagoreanTriple&) = default;
  /// Orders by hypotenuse, then odd leg.
  friend bool operator<(const PythagoreanTriple& a, const PythagoreanTriple& b) {
    if (a.hypotenuse != b.hypotenuse) return a.hypotenuse < b.hypotenuse;
    return a.odd_leg < b.odd_leg;
  }
};

/// Every primitive triple with hypotenuse <= max_hypotenuse, obtained by
/// sweeping lambda = a/b (0 < a < b, gcd 1) through pythagorean_forward.
/// Sorted by hypotenuse. Throws UsageError when max_hypotenuse < 5.
std::vector<PythagoreanTriple> generate_pythagorean_triples(long long max_hypotenuse);

}  // namespace equinorm
