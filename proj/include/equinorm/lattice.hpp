#pragma once

#include "equinorm/rational.hpp"

#include <chrono>
#include <cstddef>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace equinorm {

/// Canonical representative of an integer equal-norm class.
///
/// The class is taken up to scaling, signs of individual components, the
/// order of components within each side, and the x <-> y swap. The canonical
/// form has nonnegative components, each side sorted descending, gcd 1 over
/// all 2n components, and x <= y lexicographically.
class PrimitiveSolution {
 public:
  /// Canonicalizes any nonzero equal-norm integer pair.
  /// Throws NotASolution on unequal norms and DomainError on the zero pair.
  static PrimitiveSolution canonicalize(const IntegerVector& x, const IntegerVector& y);

  const IntegerVector& x() const noexcept { return x_; }
  const IntegerVector& y() const noexcept { return y_; }
  std::size_t dimension() const noexcept { return x_.size(); }

  friend bool operator==(const PrimitiveSolution&, const PrimitiveSolution&) = default;
  friend bool operator<(const PrimitiveSolution& a, const PrimitiveSolution& b) {
    if (a.x_ != b.x_) return a.x_ < b.x_;
    return a.y_ < b.y_;
  }

 private:
  PrimitiveSolution(IntegerVector x, IntegerVector y) : x_(std::move(x)), y_(std::move(y)) {}

  IntegerVector x_;
  IntegerVector y_;
};

using SolutionSet = std::set<PrimitiveSolution>;

/// Largest admissible brute-force bound for a dimension. The environment
/// variable EQUINORM_SCAN_LIMIT, when set to a positive integer, replaces the
/// built-in table (200 / 40 / 15 / 8 / 5 for n = 2..6; n > 6 has no default).
long long scan_limit(std::size_t dimension);

/// Every canonical class with all components in [0, bound], excluding the
/// zero pair. Classes with x = y are included. Throws UsageError for n < 2 or
/// bound < 1 and LimitExceeded above scan_limit(n).
SolutionSet brute_force_solutions(std::size_t dimension, long long bound);

/// Image of the pivot-1 chart over rational parameters whose numerator and
/// denominator magnitudes are at most param_bound. param_bound = 0 yields the
/// empty set.
SolutionSet enumerate_via_params(std::size_t dimension, long long param_bound);

enum class ParamSource { Inverse, Sweep };

struct CoverageReport {
  std::size_t dimension = 0;
  long long bound = 0;
  ParamSource source = ParamSource::Inverse;
  std::optional<long long> param_bound;
  std::size_t total = 0;
  std::size_t reachable = 0;
  std::vector<PrimitiveSolution> unreachable;
  std::chrono::nanoseconds elapsed{0};
};

/// Checks every brute-force class against the parameterization.
/// Inverse: inverse_with_pivot then forward must reproduce the class exactly.
/// Sweep: the class must appear in enumerate_via_params(n, param_bound).
CoverageReport coverage_check(std::size_t dimension, long long bound, ParamSource source,
                              std::optional<long long> param_bound = std::nullopt);

struct BenchRow {
  std::string method;
  std::size_t dimension;
  long long bound;
  std::size_t count;
  std::chrono::nanoseconds elapsed;
};

/// Times brute_force_solutions(n, bound) against enumerate_via_params(n, param_bound).
std::vector<BenchRow> bench_generation(std::size_t dimension, long long bound, long long param_bound);

}  // namespace equinorm
