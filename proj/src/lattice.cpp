#include "equinorm/lattice.hpp"

#include "equinorm/core.hpp"
#include "equinorm/errors.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <cstring>
#include <functional>
#include <future>
#include <map>
#include <numeric>
#include <thread>

namespace equinorm {

namespace mp = boost::multiprecision;

namespace {

using Clock = std::chrono::steady_clock;

std::vector<Integer> sorted_abs_descending(const IntegerVector& v, const Integer& divisor) {
  std::vector<Integer> out;
  out.reserve(v.size());
  for (const auto& c : v) out.push_back(mp::abs(c) / divisor);
  std::sort(out.begin(), out.end(), std::greater<>());
  return out;
}

// Calls visit(v) for every vector of the given length with entries in
// [0, bound] sorted descending.
template <typename Visit>
void for_each_descending(std::size_t length, long long bound, Visit&& visit) {
  std::vector<long long> v(length, 0);
  std::function<void(std::size_t, long long)> fill = [&](std::size_t pos, long long cap) {
    if (pos == length) {
      visit(v);
      return;
    }
    for (long long c = 0; c <= cap; ++c) {
      v[pos] = c;
      fill(pos + 1, c);
    }
  };
  fill(0, bound);
}

std::vector<Rational> bounded_rationals(long long param_bound) {
  std::set<Rational> values;
  for (long long den = 1; den <= param_bound; ++den) {
    for (long long num = -param_bound; num <= param_bound; ++num) values.insert(Rational(Integer(num), Integer(den)));
  }
  return {values.begin(), values.end()};
}

IntegerVector to_integer_vector(const std::vector<long long>& v) {
  return IntegerVector(std::vector<Integer>(v.begin(), v.end()));
}

}  // namespace

PrimitiveSolution PrimitiveSolution::canonicalize(const IntegerVector& x, const IntegerVector& y) {
  if (x.size() != y.size()) throw DimensionMismatch("x and y differ in dimension");
  Integer gcd = 0;
  Integer norm_x = 0;
  Integer norm_y = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    gcd = mp::gcd(gcd, mp::gcd(mp::abs(x[i]), mp::abs(y[i])));
    norm_x += x[i] * x[i];
    norm_y += y[i] * y[i];
  }
  if (norm_x != norm_y) throw NotASolution("not an equal-norm pair");
  if (gcd.is_zero()) throw DomainError("the zero pair has no primitive form");
  IntegerVector a(sorted_abs_descending(x, gcd));
  IntegerVector b(sorted_abs_descending(y, gcd));
  if (b < a) std::swap(a, b);
  return PrimitiveSolution(std::move(a), std::move(b));
}

long long scan_limit(std::size_t dimension) {
  if (const char* env = std::getenv("EQUINORM_SCAN_LIMIT"); env != nullptr && *env != '\0') {
    long long value = 0;
    const auto [end, ec] = std::from_chars(env, env + std::strlen(env), value);
    if (ec == std::errc() && *end == '\0' && value > 0) return value;
  }
  switch (dimension) {
    case 2: return 200;
    case 3: return 40;
    case 4: return 15;
    case 5: return 8;
    case 6: return 5;
    default: return 0;
  }
}

SolutionSet brute_force_solutions(std::size_t dimension, long long bound) {
  if (dimension < 2) throw UsageError("dimension must be at least 2");
  if (bound < 1) throw UsageError("bound must be at least 1");
  const long long limit = scan_limit(dimension);
  if (bound > limit) {
    throw LimitExceeded("bound " + std::to_string(bound) + " exceeds the scan limit " + std::to_string(limit) +
                        " for dimension " + std::to_string(dimension));
  }

  // Group descending vectors by squared norm; every pair within a group is a
  // solution. Vectors arrive in lexicographic order, so i <= j already gives
  // x <= y.
  std::map<long long, std::vector<std::vector<long long>>> by_norm;
  for_each_descending(dimension, bound, [&](const std::vector<long long>& v) {
    const long long norm = std::inner_product(v.begin(), v.end(), v.begin(), 0LL);
    if (norm != 0) by_norm[norm].push_back(v);
  });

  SolutionSet out;
  for (auto& [norm, group] : by_norm) {
    std::sort(group.begin(), group.end());
    for (std::size_t i = 0; i < group.size(); ++i) {
      const long long gx = std::accumulate(group[i].begin(), group[i].end(), 0LL,
                                           [](long long g, long long c) { return std::gcd(g, c); });
      for (std::size_t j = i; j < group.size(); ++j) {
        const long long g = std::accumulate(group[j].begin(), group[j].end(), gx,
                                            [](long long acc, long long c) { return std::gcd(acc, c); });
        if (g != 1) continue;
        out.insert(PrimitiveSolution::canonicalize(to_integer_vector(group[i]), to_integer_vector(group[j])));
      }
    }
  }
  return out;
}

SolutionSet enumerate_via_params(std::size_t dimension, long long param_bound) {
  if (dimension < 2) throw UsageError("dimension must be at least 2");
  if (param_bound < 0) throw UsageError("param bound must be nonnegative");
  if (param_bound == 0) return {};

  const auto values = bounded_rationals(param_bound);
  std::vector<Rational> pivots;
  std::copy_if(values.begin(), values.end(), std::back_inserter(pivots), [](const Rational& r) { return !r.is_zero(); });

  // 2n-1 parameters: s1 is fixed per task, then s2..sn and lambda2..lambdan.
  const std::size_t free_count = 2 * dimension - 2;
  auto sweep = [&](const Rational& s1) {
    SolutionSet local;
    std::vector<std::size_t> index(free_count, 0);
    while (true) {
      std::vector<Rational> s{s1};
      for (std::size_t i = 0; i + 1 < dimension; ++i) s.push_back(values[index[i]]);
      std::vector<Rational> lambda;
      for (std::size_t i = dimension - 1; i < free_count; ++i) lambda.push_back(values[index[i]]);

      const auto pair = forward(ParamSet(RationalVector(std::move(s)), std::move(lambda)));
      std::vector<Rational> both(pair.x().begin(), pair.x().end());
      both.insert(both.end(), pair.y().begin(), pair.y().end());
      const auto cleared = clear_denominators(RationalVector(std::move(both))).values.components();
      const IntegerVector x(std::vector<Integer>(cleared.begin(), cleared.begin() + dimension));
      const IntegerVector y(std::vector<Integer>(cleared.begin() + dimension, cleared.end()));
      local.insert(PrimitiveSolution::canonicalize(x, y));

      std::size_t pos = 0;
      while (pos < free_count && ++index[pos] == values.size()) index[pos++] = 0;
      if (pos == free_count) break;
    }
    return local;
  };

  const std::size_t workers = std::max(1u, std::thread::hardware_concurrency());
  SolutionSet out;
  for (std::size_t start = 0; start < pivots.size(); start += workers) {
    std::vector<std::future<SolutionSet>> batch;
    for (std::size_t i = start; i < std::min(pivots.size(), start + workers); ++i) {
      batch.push_back(std::async(std::launch::async, sweep, std::cref(pivots[i])));
    }
    for (auto& f : batch) out.merge(f.get());
  }
  return out;
}

CoverageReport coverage_check(std::size_t dimension, long long bound, ParamSource source,
                              std::optional<long long> param_bound) {
  const auto start = Clock::now();
  CoverageReport report;
  report.dimension = dimension;
  report.bound = bound;
  report.source = source;
  report.param_bound = param_bound;

  const auto oracle = brute_force_solutions(dimension, bound);
  report.total = oracle.size();

  if (source == ParamSource::Inverse) {
    for (const auto& sol : oracle) {
      const EqualNormPair pair(sol.x().to_rational(), sol.y().to_rational());
      bool ok = false;
      try {
        ok = forward(inverse_with_pivot(pair)) == pair;
      } catch (const Unrepresentable&) {
      }
      if (ok) {
        ++report.reachable;
      } else {
        report.unreachable.push_back(sol);
      }
    }
  } else {
    if (!param_bound) throw UsageError("sweep coverage needs a param bound");
    const auto swept = enumerate_via_params(dimension, *param_bound);
    for (const auto& sol : oracle) {
      if (swept.contains(sol)) {
        ++report.reachable;
      } else {
        report.unreachable.push_back(sol);
      }
    }
  }
  report.elapsed = std::chrono::duration_cast<std::chrono::nanoseconds>(Clock::now() - start);
  return report;
}

std::vector<BenchRow> bench_generation(std::size_t dimension, long long bound, long long param_bound) {
  std::vector<BenchRow> rows;
  auto t0 = Clock::now();
  const auto brute = brute_force_solutions(dimension, bound);
  auto t1 = Clock::now();
  rows.push_back({"brute", dimension, bound, brute.size(), t1 - t0});

  t0 = Clock::now();
  const auto swept = enumerate_via_params(dimension, param_bound);
  t1 = Clock::now();
  rows.push_back({"params", dimension, param_bound, swept.size(), t1 - t0});
  return rows;
}

}  // namespace equinorm
