#pragma once

#include "equinorm/rational.hpp"

#include <cstddef>
#include <vector>

namespace equinorm {

/// Two vectors of the same dimension with equal squared norms.
/// Construction checks the norm equality exactly and throws NotASolution.
class EqualNormPair {
 public:
  EqualNormPair(RationalVector x, RationalVector y);

  const RationalVector& x() const noexcept { return x_; }
  const RationalVector& y() const noexcept { return y_; }
  std::size_t dimension() const noexcept { return x_.size(); }

  friend bool operator==(const EqualNormPair&, const EqualNormPair&) = default;

 private:
  RationalVector x_;
  RationalVector y_;
};

/// Half-sum s = (x+y)/2 and half-difference d = (x-y)/2.
struct SDDecomposition {
  RationalVector s;
  RationalVector d;
};

/// Chart coordinates of an equal-norm pair: the half-sum s together with the
/// coefficients of d in the basis orthogonal to s.
///
/// `pivot` is zero-based and s[pivot] must be nonzero. `lambda` holds one
/// coefficient per non-pivot axis, in ascending axis order.
class ParamSet {
 public:
  ParamSet(RationalVector s, std::vector<Rational> lambda, std::size_t pivot = 0);

  const RationalVector& s() const noexcept { return s_; }
  const std::vector<Rational>& lambda() const noexcept { return lambda_; }
  std::size_t pivot() const noexcept { return pivot_; }
  std::size_t dimension() const noexcept { return s_.size(); }

  friend bool operator==(const ParamSet&, const ParamSet&) = default;

 private:
  RationalVector s_;
  std::vector<Rational> lambda_;
  std::size_t pivot_;
};

bool verify_equal_norm(const RationalVector& x, const RationalVector& y);

SDDecomposition decompose(const EqualNormPair& pair);

/// x = s + d, y = s - d. Throws NotASolution unless dot(s, d) = 0.
EqualNormPair recompose(const SDDecomposition& sd);

/// For every axis k != pivot, the vector with -s[k] at the pivot and
/// s[pivot] at k. These n-1 vectors span the complement of s.
/// Throws DegenerateAxis if s[pivot] is zero.
std::vector<RationalVector> orthogonal_basis(const RationalVector& s, std::size_t pivot = 0);

EqualNormPair forward(const ParamSet& params);

/// Chart inverse through a fixed pivot: s = (x+y)/2 and
/// lambda_k = (x_k - y_k) / (2 s_pivot). Throws DegenerateAxis when
/// x_pivot + y_pivot = 0.
ParamSet inverse(const EqualNormPair& pair, std::size_t pivot = 0);

/// Chart inverse through the smallest axis with x_i + y_i != 0.
/// Throws Unrepresentable when x = -y.
ParamSet inverse_with_pivot(const EqualNormPair& pair);

}  // namespace equinorm
