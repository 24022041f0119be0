#include "equinorm/format.hpp"

#include "equinorm/errors.hpp"

#include <chrono>
#include <sstream>

namespace equinorm::format {

Json to_json(const std::vector<Rational>& values) {
  Json out = Json::array();
  for (const auto& v : values) out.push_back(v.to_string());
  return out;
}

Json to_json(const RationalVector& v) { return to_json(v.components()); }

Json to_json(const IntegerVector& v) {
  Json out = Json::array();
  for (const auto& c : v) out.push_back(c.str());
  return out;
}

Json to_json(const EqualNormPair& pair) {
  Json out;
  out["x"] = to_json(pair.x());
  out["y"] = to_json(pair.y());
  return out;
}

Json to_json(const ParamSet& params) {
  Json out;
  out["s"] = to_json(params.s());
  out["lambda"] = to_json(params.lambda());
  out["pivot"] = params.pivot() + 1;
  return out;
}

namespace {

std::vector<Rational> rationals_from(const Json& j, const char* key) {
  if (!j.contains(key) || !j.at(key).is_array()) throw UsageError(std::string("missing array '") + key + "'");
  std::vector<Rational> out;
  for (const auto& item : j.at(key)) {
    if (item.is_string()) {
      out.push_back(parse_rational(item.get<std::string>()));
    } else if (item.is_number_integer()) {
      out.emplace_back(item.get<long long>());
    } else {
      throw UsageError(std::string("non-rational entry in '") + key + "'");
    }
  }
  return out;
}

}  // namespace

ParamSet param_set_from_json(const Json& j) {
  std::size_t pivot = 1;
  if (j.contains("pivot")) {
    if (!j.at("pivot").is_number_integer() || j.at("pivot").get<long long>() < 1) {
      throw UsageError("pivot must be a positive integer");
    }
    pivot = j.at("pivot").get<std::size_t>();
  }
  return ParamSet(RationalVector(rationals_from(j, "s")), rationals_from(j, "lambda"), pivot - 1);
}

EqualNormPair pair_from_json(const Json& j) {
  return EqualNormPair(RationalVector(rationals_from(j, "x")), RationalVector(rationals_from(j, "y")));
}

Json to_json(const PythagoreanTuple& t) {
  Json out;
  out["x"] = to_json(t.x);
  out["y1"] = t.y1.to_string();
  return out;
}

Json to_json(const PythagoreanParams& p) {
  Json out;
  out["s1"] = p.s1().to_string();
  out["lambda"] = to_json(p.lambda());
  return out;
}

Json to_json(const ParallelogramParams& p) {
  Json out;
  out["m"] = p.m.to_string();
  out["n"] = p.n.to_string();
  out["u"] = p.u.to_string();
  return out;
}

Json to_json(const ParallelogramQuad& q) {
  Json out;
  out["u1"] = q.u1().to_string();
  out["u2"] = q.u2().to_string();
  out["u3"] = q.u3().to_string();
  out["u4"] = q.u4().to_string();
  return out;
}

Json to_json(const ParallelogramChain& c) {
  Json out;
  out["u_plus"] = c.u_plus.to_string();
  out["u_minus"] = c.u_minus.to_string();
  out["s1"] = c.s1.to_string();
  out["s2"] = c.s2.to_string();
  out["lambda2"] = c.lambda2.to_string();
  return out;
}

Json to_json(const ThreeSquareParams& p) {
  Json out;
  out["s"] = to_json(std::vector<Rational>{p.s1, p.s2, p.s3});
  return out;
}

Json to_json(const ThreeSquareSolution& s) {
  Json out;
  out["x"] = s.x().to_string();
  out["y"] = s.y().to_string();
  out["z"] = s.z().to_string();
  out["w"] = s.w().to_string();
  return out;
}

Json three_square_report(const ThreeSquareSolution& raw) {
  const auto p = raw.primitive();
  Json out;
  out["raw"] = to_json(raw);
  out["primitive"] = to_json(ThreeSquareSolution(p[0], p[1], p[2], p[3]));
  return out;
}

Json to_json(const PrimitiveSolution& s) {
  Json out;
  out["x"] = to_json(s.x());
  out["y"] = to_json(s.y());
  return out;
}

Json to_json(const CoverageReport& report, bool with_timing) {
  Json out;
  out["dimension"] = report.dimension;
  out["bound"] = report.bound;
  out["source"] = report.source == ParamSource::Inverse ? "inverse" : "sweep";
  if (report.param_bound) {
    out["param_bound"] = *report.param_bound;
  } else {
    out["param_bound"] = nullptr;
  }
  out["total"] = report.total;
  out["reachable"] = report.reachable;
  out["unreachable"] = Json::array();
  for (const auto& s : report.unreachable) out["unreachable"].push_back(to_json(s));
  if (with_timing) {
    out["elapsed_us"] = std::chrono::duration_cast<std::chrono::microseconds>(report.elapsed).count();
  }
  return out;
}

std::string solutions_csv(std::size_t dimension, const SolutionSet& solutions) {
  std::ostringstream os;
  for (std::size_t i = 1; i <= dimension; ++i) os << 'x' << i << ',';
  for (std::size_t i = 1; i <= dimension; ++i) os << 'y' << i << (i == dimension ? '\n' : ',');
  for (const auto& s : solutions) {
    for (const auto& c : s.x()) os << c << ',';
    for (std::size_t i = 0; i < dimension; ++i) os << s.y()[i] << (i + 1 == dimension ? '\n' : ',');
  }
  return os.str();
}

std::string triples_csv(const std::vector<PythagoreanTriple>& triples) {
  std::ostringstream os;
  os << "a,b,c\n";
  for (const auto& t : triples) os << t.odd_leg << ',' << t.even_leg << ',' << t.hypotenuse << '\n';
  return os.str();
}

std::string bench_csv(const std::vector<BenchRow>& rows) {
  std::ostringstream os;
  os << "method,n,bound,count,elapsed_us\n";
  for (const auto& r : rows) {
    os << r.method << ',' << r.dimension << ',' << r.bound << ',' << r.count << ','
       << std::chrono::duration_cast<std::chrono::microseconds>(r.elapsed).count() << '\n';
  }
  return os.str();
}

}  // namespace equinorm::format
