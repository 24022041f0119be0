#include "equinorm/core.hpp"

#include "equinorm/errors.hpp"

#include <string>

namespace equinorm {

namespace {

const Rational kHalf(1, 2);

void require_same_dimension(const RationalVector& a, const RationalVector& b) {
  if (a.size() != b.size()) {
    throw DimensionMismatch("dimension mismatch: " + std::to_string(a.size()) + " vs " + std::to_string(b.size()));
  }
}

}  // namespace

EqualNormPair::EqualNormPair(RationalVector x, RationalVector y) : x_(std::move(x)), y_(std::move(y)) {
  if (!verify_equal_norm(x_, y_)) throw NotASolution("not an equal-norm pair");
}

ParamSet::ParamSet(RationalVector s, std::vector<Rational> lambda, std::size_t pivot)
    : s_(std::move(s)), lambda_(std::move(lambda)), pivot_(pivot) {
  if (pivot_ >= s_.size()) {
    throw UsageError("pivot " + std::to_string(pivot_ + 1) + " outside dimension " + std::to_string(s_.size()));
  }
  if (lambda_.size() + 1 != s_.size()) {
    throw DimensionMismatch("expected " + std::to_string(s_.size() - 1) + " lambda values, got " +
                            std::to_string(lambda_.size()));
  }
  if (s_[pivot_].is_zero()) throw DegenerateAxis(pivot_);
}

bool verify_equal_norm(const RationalVector& x, const RationalVector& y) {
  require_same_dimension(x, y);
  return norm_sq(x) == norm_sq(y);
}

SDDecomposition decompose(const EqualNormPair& pair) {
  return {(pair.x() + pair.y()) * kHalf, (pair.x() - pair.y()) * kHalf};
}

EqualNormPair recompose(const SDDecomposition& sd) {
  require_same_dimension(sd.s, sd.d);
  if (!dot(sd.s, sd.d).is_zero()) throw NotASolution("s and d are not orthogonal");
  return EqualNormPair(sd.s + sd.d, sd.s - sd.d);
}

std::vector<RationalVector> orthogonal_basis(const RationalVector& s, std::size_t pivot) {
  if (pivot >= s.size()) throw UsageError("pivot outside dimension");
  if (s[pivot].is_zero()) throw DegenerateAxis(pivot);
  std::vector<RationalVector> basis;
  basis.reserve(s.size() - 1);
  for (std::size_t k = 0; k < s.size(); ++k) {
    if (k == pivot) continue;
    auto e = RationalVector::zeros(s.size());
    e[pivot] = -s[k];
    e[k] = s[pivot];
    basis.push_back(std::move(e));
  }
  return basis;
}

EqualNormPair forward(const ParamSet& params) {
  const auto& s = params.s();
  const auto basis = orthogonal_basis(s, params.pivot());
  auto d = RationalVector::zeros(s.size());
  for (std::size_t j = 0; j < basis.size(); ++j) d += basis[j] * params.lambda()[j];
  return EqualNormPair(s + d, s - d);
}

ParamSet inverse(const EqualNormPair& pair, std::size_t pivot) {
  if (pivot >= pair.dimension()) throw UsageError("pivot outside dimension");
  auto [s, d] = decompose(pair);
  if (s[pivot].is_zero()) throw DegenerateAxis(pivot);
  // d_k = lambda_k * s_pivot on every non-pivot axis.
  std::vector<Rational> lambda;
  lambda.reserve(s.size() - 1);
  for (std::size_t k = 0; k < s.size(); ++k) {
    if (k != pivot) lambda.push_back(d[k] / s[pivot]);
  }
  return ParamSet(std::move(s), std::move(lambda), pivot);
}

ParamSet inverse_with_pivot(const EqualNormPair& pair) {
  for (std::size_t i = 0; i < pair.dimension(); ++i) {
    if (!(pair.x()[i] + pair.y()[i]).is_zero()) return inverse(pair, i);
  }
  throw Unrepresentable("unrepresentable: x = -y lies in no chart");
}

}  // namespace equinorm
