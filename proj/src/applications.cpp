#include "equinorm/applications.hpp"

#include "equinorm/core.hpp"
#include "equinorm/errors.hpp"

namespace equinorm {

ParallelogramQuad::ParallelogramQuad(Rational u1, Rational u2, Rational u3, Rational u4)
    : u1_(std::move(u1)), u2_(std::move(u2)), u3_(std::move(u3)), u4_(std::move(u4)) {
  if (Rational(2) * (u1_ * u1_ + u2_ * u2_) != u3_ * u3_ + u4_ * u4_) {
    throw NotASolution("not a solution of 2u1^2 + 2u2^2 = u3^2 + u4^2");
  }
}

ParallelogramQuad plg_forward(const ParallelogramParams& p) {
  const Rational mn = p.m * p.n;
  return ParallelogramQuad((Rational(1) - mn) * p.u, (p.m + p.n) * p.u, (Rational(1) + mn - p.n + p.m) * p.u,
                           (Rational(1) + mn + p.n - p.m) * p.u);
}

ParallelogramParams plg_inverse(const ParallelogramQuad& q) {
  const Rational four_u = Rational(2) * q.u1() + q.u4() + q.u3();
  if (four_u.is_zero()) throw DegenerateAxis(0, "degenerate axis: 2u1 + u4 + u3 = 0");
  const Rational two_u2 = Rational(2) * q.u2();
  return {(two_u2 - q.u4() + q.u3()) / four_u, (two_u2 + q.u4() - q.u3()) / four_u, four_u / Rational(4)};
}

ParallelogramChain plg_via_core(const ParallelogramQuad& q) {
  const Rational half(1, 2);
  const Rational u_plus = (q.u4() + q.u3()) * half;
  const Rational u_minus = (q.u4() - q.u3()) * half;
  const EqualNormPair pair(RationalVector{q.u1(), q.u2()}, RationalVector{u_plus, u_minus});
  ParamSet params = [&] {
    try {
      return inverse(pair);
    } catch (const DegenerateAxis&) {
      throw DegenerateAxis(0, "degenerate axis: 2u1 + u4 + u3 = 0");
    }
  }();
  return {u_plus, u_minus, params.s()[0], params.s()[1], params.lambda()[0]};
}

ThreeSquareIntParams::ThreeSquareIntParams(std::array<Integer, 3> m, std::array<Integer, 3> n)
    : m_(std::move(m)), n_(std::move(n)) {
  for (const auto& ni : n_) {
    if (ni.is_zero()) throw UsageError("denominators n1, n2, n3 must be nonzero");
  }
}

ThreeSquareSolution::ThreeSquareSolution(Rational x, Rational y, Rational z, Rational w)
    : x_(std::move(x)), y_(std::move(y)), z_(std::move(z)), w_(std::move(w)) {
  if (x_ * x_ + y_ * y_ + z_ * z_ != Rational(3) * w_ * w_) {
    throw NotASolution("not a solution of x^2 + y^2 + z^2 = 3w^2");
  }
}

IntegerVector ThreeSquareSolution::primitive() const {
  return primitive_normalize(clear_denominators(RationalVector{x_, y_, z_, w_}).values);
}

namespace {

Rational sum_of(const ThreeSquareParams& p) {
  Rational q = p.s1 + p.s2 + p.s3;
  if (q.is_zero()) throw DegenerateSum("degenerate sum: q = 0 (s1 + s2 + s3 vanishes)");
  return q;
}

}  // namespace

ThreeSquareSolution tsq_rational(const ThreeSquareParams& params) {
  const auto& [s1, s2, s3] = params;
  const Rational q = sum_of(params);
  const Rational two_p = Rational(2) * (s1 * s2 + s2 * s3 + s3 * s1);
  return ThreeSquareSolution(two_p + q * (s1 - s2 - s3), two_p + q * (s2 - s3 - s1), two_p + q * (s3 - s1 - s2),
                             s1 * s1 + s2 * s2 + s3 * s3);
}

ThreeSquareSolution tsq_unscaled(const ThreeSquareParams& params) {
  const auto& [s1, s2, s3] = params;
  const Rational q = sum_of(params);
  const Rational w = (s1 * s1 + s2 * s2 + s3 * s3) / q;
  const Rational two(2);
  return ThreeSquareSolution(two * s1 - w, two * s2 - w, two * s3 - w, w);
}

ThreeSquareLambdas tsq_lambdas(const ThreeSquareParams& params) {
  const auto& [s1, s2, s3] = params;
  const Rational q = sum_of(params);
  if (s1.is_zero()) throw DegenerateAxis(0);
  const Rational lambda2 = (s2 - s1 + s3 * (s2 - s3) / s1) / q;
  return {lambda2, lambda2 + (s3 - s2) / s1};
}

ThreeSquareParams tsq_inverse(const ThreeSquareSolution& sol) {
  if ((sol.x() + sol.y() + sol.z() + Rational(3) * sol.w()).is_zero()) {
    throw DegenerateSum("degenerate sum: x + y + z + 3w = 0 gives q = 0");
  }
  const Rational half(1, 2);
  return {(sol.x() + sol.w()) * half, (sol.y() + sol.w()) * half, (sol.z() + sol.w()) * half};
}

ThreeSquareSolution tsq_integer(const ThreeSquareIntParams& params) {
  const auto& [m1, m2, m3] = params.m();
  const auto& [n1, n2, n3] = params.n();
  // a_i = m_i times the product of the other two denominators.
  const Integer a1 = m1 * n2 * n3;
  const Integer a2 = m2 * n3 * n1;
  const Integer a3 = m3 * n1 * n2;
  const Integer big_p = m1 * n1 * m2 * n2 * n3 * n3 + m2 * n2 * m3 * n3 * n1 * n1 + m3 * n3 * m1 * n1 * n2 * n2;
  const Integer big_q = a1 + a2 + a3;
  if (big_q.is_zero()) throw DegenerateSum("degenerate sum: Q = 0");
  return ThreeSquareSolution(2 * big_p + big_q * (a1 - a2 - a3), 2 * big_p + big_q * (a2 - a3 - a1),
                             2 * big_p + big_q * (a3 - a1 - a2), a1 * a1 + a2 * a2 + a3 * a3);
}

}  // namespace equinorm
