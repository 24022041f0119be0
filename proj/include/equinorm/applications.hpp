#pragma once

#include "equinorm/rational.hpp"

#include <array>

namespace equinorm {

// ---------------------------------------------------------------------------
// Parallelogram equation 2 u1^2 + 2 u2^2 = u3^2 + u4^2
// ---------------------------------------------------------------------------

/// (m, n, u) stand for lambda2 = m, s1 = u, s2 = n u in the n = 2 chart.
struct ParallelogramParams {
  Rational m;
  Rational n;
  Rational u;

  friend bool operator==(const ParallelogramParams&, const ParallelogramParams&) = default;
};

/// Validated on construction; throws NotASolution.
class ParallelogramQuad {
 public:
  ParallelogramQuad(Rational u1, Rational u2, Rational u3, Rational u4);

  const Rational& u1() const noexcept { return u1_; }
  const Rational& u2() const noexcept { return u2_; }
  const Rational& u3() const noexcept { return u3_; }
  const Rational& u4() const noexcept { return u4_; }

  friend bool operator==(const ParallelogramQuad&, const ParallelogramQuad&) = default;

 private:
  Rational u1_, u2_, u3_, u4_;
};

/// Intermediate values of the reduction to the n = 2 core chart:
/// u_plus = (u4+u3)/2, u_minus = (u4-u3)/2, then (u1, u2) vs (u_plus, u_minus)
/// is an equal-norm pair whose chart parameters are s1, s2, lambda2.
struct ParallelogramChain {
  Rational u_plus;
  Rational u_minus;
  Rational s1;
  Rational s2;
  Rational lambda2;
};

/// u1 = (1-mn)u, u2 = (m+n)u, u3 = (1+mn-n+m)u, u4 = (1+mn+n-m)u.
ParallelogramQuad plg_forward(const ParallelogramParams& params);

/// u = (2u1+u4+u3)/4, m = (2u2-u4+u3)/(4u), n = (2u2+u4-u3)/(4u).
/// Throws DegenerateAxis when 2u1+u4+u3 = 0.
ParallelogramParams plg_inverse(const ParallelogramQuad& quad);

/// Runs the quad through the core inverse instead of the closed form.
ParallelogramChain plg_via_core(const ParallelogramQuad& quad);

// ---------------------------------------------------------------------------
// x^2 + y^2 + z^2 = 3 w^2
// ---------------------------------------------------------------------------

struct ThreeSquareParams {
  Rational s1;
  Rational s2;
  Rational s3;

  friend bool operator==(const ThreeSquareParams&, const ThreeSquareParams&) = default;
};

/// Six integers with s_i = m_i / n_i. Throws UsageError if any n_i is zero.
class ThreeSquareIntParams {
 public:
  ThreeSquareIntParams(std::array<Integer, 3> m, std::array<Integer, 3> n);

  const std::array<Integer, 3>& m() const noexcept { return m_; }
  const std::array<Integer, 3>& n() const noexcept { return n_; }

 private:
  std::array<Integer, 3> m_;
  std::array<Integer, 3> n_;
};

/// Validated on construction; throws NotASolution.
class ThreeSquareSolution {
 public:
  ThreeSquareSolution(Rational x, Rational y, Rational z, Rational w);

  const Rational& x() const noexcept { return x_; }
  const Rational& y() const noexcept { return y_; }
  const Rational& z() const noexcept { return z_; }
  const Rational& w() const noexcept { return w_; }

  /// Cleared of denominators and normalized so the first nonzero of
  /// (x, y, z, w) is positive.
  IntegerVector primitive() const;

  friend bool operator==(const ThreeSquareSolution&, const ThreeSquareSolution&) = default;

 private:
  Rational x_, y_, z_, w_;
};

/// p = s1 s2 + s2 s3 + s3 s1, q = s1 + s2 + s3;
/// x = 2p + q(s1-s2-s3), y = 2p + q(s2-s3-s1), z = 2p + q(s3-s1-s2),
/// w = s1^2 + s2^2 + s3^2. Throws DegenerateSum when q = 0.
ThreeSquareSolution tsq_rational(const ThreeSquareParams& params);

/// The same solution before multiplying through by q:
/// w = (s1^2+s2^2+s3^2)/q and x = 2 s1 - w etc.
ThreeSquareSolution tsq_unscaled(const ThreeSquareParams& params);

/// Chart coefficients of the n = 3 core parameterization with
/// y = (w, w, w). Requires s1 != 0 (DegenerateAxis) and q != 0 (DegenerateSum).
struct ThreeSquareLambdas {
  Rational lambda2;
  Rational lambda3;
};
ThreeSquareLambdas tsq_lambdas(const ThreeSquareParams& params);

/// s_i = (x_i + w)/2. Throws DegenerateSum when x+y+z+3w = 0.
ThreeSquareParams tsq_inverse(const ThreeSquareSolution& solution);

/// Degree-six integer polynomial form; equals tsq_rational(m_i/n_i) times
/// (n1 n2 n3)^2. Throws DegenerateSum when Q = 0.
ThreeSquareSolution tsq_integer(const ThreeSquareIntParams& params);

}  // namespace equinorm
