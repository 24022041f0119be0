#pragma once

// Text encodings shared by the CLI and tests. JSON keys are emitted in a
// fixed order and every number that is a Rational or Integer is a string.

#include "equinorm/applications.hpp"
#include "equinorm/core.hpp"
#include "equinorm/lattice.hpp"
#include "equinorm/reductions.hpp"

#include <json.hpp>

#include <string>
#include <vector>

namespace equinorm::format {

using Json = nlohmann::ordered_json;

Json to_json(const std::vector<Rational>& values);
Json to_json(const RationalVector& v);
Json to_json(const IntegerVector& v);

/// {"x":[...],"y":[...]}
Json to_json(const EqualNormPair& pair);
/// {"s":[...],"lambda":[...],"pivot":k} with a one-based pivot.
Json to_json(const ParamSet& params);
/// Inverse of to_json(ParamSet). Throws UsageError on schema violations.
ParamSet param_set_from_json(const Json& j);
EqualNormPair pair_from_json(const Json& j);

Json to_json(const PythagoreanTuple& t);
Json to_json(const PythagoreanParams& p);
Json to_json(const ParallelogramParams& p);
Json to_json(const ParallelogramQuad& q);
Json to_json(const ParallelogramChain& c);
Json to_json(const ThreeSquareParams& p);
/// {"x":..,"y":..,"z":..,"w":..}
Json to_json(const ThreeSquareSolution& s);
Json three_square_report(const ThreeSquareSolution& raw);
Json to_json(const PrimitiveSolution& s);
Json to_json(const CoverageReport& report, bool with_timing);

/// Header `x1,..,xn,y1,..,yn`, then one canonical class per row.
std::string solutions_csv(std::size_t dimension, const SolutionSet& solutions);
/// Header `a,b,c` (odd leg, even leg, hypotenuse).
std::string triples_csv(const std::vector<PythagoreanTriple>& triples);
/// Header `method,n,bound,count,elapsed_us`.
std::string bench_csv(const std::vector<BenchRow>& rows);

}  // namespace equinorm::format
