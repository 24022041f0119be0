#include "equinorm/cli.hpp"

#include "equinorm/errors.hpp"
#include "equinorm/format.hpp"

#include <CLI11.hpp>

#include <functional>
#include <optional>
#include <ostream>

namespace equinorm::cli {

namespace {

using format::Json;

RationalVector parse_vector(const std::string& text) { return RationalVector(parse_rationals(text)); }

std::vector<Rational> parse_list(const std::string& text, std::size_t expected, const char* what) {
  auto values = parse_rationals(text);
  if (values.size() != expected) {
    throw DimensionMismatch(std::string(what) + " needs " + std::to_string(expected) + " values");
  }
  return values;
}

std::array<Integer, 3> parse_integer_triple(const std::string& text, const char* what) {
  const auto values = parse_list(text, 3, what);
  std::array<Integer, 3> out;
  for (std::size_t i = 0; i < 3; ++i) {
    if (!values[i].is_integer()) throw ParseError(std::string(what) + " must be integers");
    out[i] = values[i].numerator();
  }
  return out;
}

struct Options {
  // forward / inverse
  std::string s, lambda, x, y;
  std::size_t pivot = 1;
  bool auto_pivot = false;
  // pythagorean
  long long max_hypotenuse = 0;
  std::string s1, y1;
  // parallelogram
  std::string m, n, u, quad;
  // three squares
  std::string sol;
  // enumerate
  std::size_t dim = 0;
  long long bound = 0;
  std::string method = "brute";
  std::string source = "inverse";
  std::optional<long long> param_bound;
  std::string fmt = "csv";
  bool timing = false;
};

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact parameterization of equal sums of squares", "equinorm"};
  app.require_subcommand(1);
  Options o;
  std::function<void()> action;

  auto* fwd = app.add_subcommand("forward", "Map chart parameters (s, lambda) to an equal-norm pair");
  fwd->add_option("--s", o.s, "s vector, e.g. 4,2")->required();
  fwd->add_option("--lambda", o.lambda, "lambda values for the non-pivot axes")->required();
  fwd->add_option("--pivot", o.pivot, "one-based pivot axis")->check(CLI::PositiveNumber);
  fwd->callback([&] {
    action = [&] {
      const ParamSet params(parse_vector(o.s), parse_rationals(o.lambda), o.pivot - 1);
      out << format::to_json(forward(params)).dump() << '\n';
    };
  });

  auto* inv = app.add_subcommand("inverse", "Recover chart parameters from an equal-norm pair");
  inv->add_option("--x", o.x)->required();
  inv->add_option("--y", o.y)->required();
  inv->add_flag("--auto-pivot", o.auto_pivot, "use the first axis with x_i + y_i != 0");
  inv->callback([&] {
    action = [&] {
      const EqualNormPair pair(parse_vector(o.x), parse_vector(o.y));
      const auto params = o.auto_pivot ? inverse_with_pivot(pair) : inverse(pair);
      out << format::to_json(params).dump() << '\n';
    };
  });

  auto* pyth = app.add_subcommand("pythagorean", "x1^2 + ... + xn^2 = y1^2");
  pyth->require_subcommand(1);
  auto* pgen = pyth->add_subcommand("generate", "primitive triples as CSV");
  pgen->add_option("--max", o.max_hypotenuse, "largest hypotenuse")->required();
  pgen->callback([&] { action = [&] { out << format::triples_csv(generate_pythagorean_triples(o.max_hypotenuse)); }; });
  auto* pfwd = pyth->add_subcommand("forward");
  pfwd->add_option("--s1", o.s1)->required();
  pfwd->add_option("--lambda", o.lambda)->required();
  pfwd->callback([&] {
    action = [&] {
      const PythagoreanParams params(parse_rational(o.s1), parse_rationals(o.lambda));
      out << format::to_json(pythagorean_forward(params)).dump() << '\n';
    };
  });
  auto* pinv = pyth->add_subcommand("inverse");
  pinv->add_option("--x", o.x)->required();
  pinv->add_option("--y1", o.y1)->required();
  pinv->callback([&] {
    action = [&] { out << format::to_json(pythagorean_inverse(parse_vector(o.x), parse_rational(o.y1))).dump() << '\n'; };
  });

  auto* plg = app.add_subcommand("parallelogram", "2u1^2 + 2u2^2 = u3^2 + u4^2");
  plg->require_subcommand(1);
  auto* plg_fwd = plg->add_subcommand("forward");
  plg_fwd->add_option("--m", o.m)->required();
  plg_fwd->add_option("--n", o.n)->required();
  plg_fwd->add_option("--u", o.u)->required();
  plg_fwd->callback([&] {
    action = [&] {
      const ParallelogramParams params{parse_rational(o.m), parse_rational(o.n), parse_rational(o.u)};
      out << format::to_json(plg_forward(params)).dump() << '\n';
    };
  });
  auto parse_quad = [&] {
    const auto v = parse_list(o.quad, 4, "--quad");
    return ParallelogramQuad(v[0], v[1], v[2], v[3]);
  };
  auto* plg_inv = plg->add_subcommand("inverse");
  plg_inv->add_option("--quad", o.quad, "u1,u2,u3,u4")->required();
  plg_inv->callback([&] { action = [&] { out << format::to_json(plg_inverse(parse_quad())).dump() << '\n'; }; });
  auto* plg_chain = plg->add_subcommand("chain", "intermediate values of the reduction to the n = 2 chart");
  plg_chain->add_option("--quad", o.quad, "u1,u2,u3,u4")->required();
  plg_chain->callback([&] { action = [&] { out << format::to_json(plg_via_core(parse_quad())).dump() << '\n'; }; });

  auto* tsq = app.add_subcommand("three-squares", "x^2 + y^2 + z^2 = 3w^2");
  tsq->require_subcommand(1);
  auto* tsq_rat = tsq->add_subcommand("rational");
  tsq_rat->add_option("--s", o.s, "s1,s2,s3")->required();
  tsq_rat->callback([&] {
    action = [&] {
      const auto s = parse_list(o.s, 3, "--s");
      out << format::three_square_report(tsq_rational({s[0], s[1], s[2]})).dump() << '\n';
    };
  });
  auto* tsq_int = tsq->add_subcommand("integer");
  tsq_int->add_option("--m", o.m, "m1,m2,m3")->required();
  tsq_int->add_option("--n", o.n, "n1,n2,n3")->required();
  tsq_int->callback([&] {
    action = [&] {
      const ThreeSquareIntParams params(parse_integer_triple(o.m, "--m"), parse_integer_triple(o.n, "--n"));
      out << format::three_square_report(tsq_integer(params)).dump() << '\n';
    };
  });
  auto* tsq_inv = tsq->add_subcommand("inverse");
  tsq_inv->add_option("--sol", o.sol, "x,y,z,w")->required();
  tsq_inv->callback([&] {
    action = [&] {
      const auto v = parse_list(o.sol, 4, "--sol");
      out << format::to_json(tsq_inverse(ThreeSquareSolution(v[0], v[1], v[2], v[3]))).dump() << '\n';
    };
  });

  auto* en = app.add_subcommand("enumerate", "Desk-scale enumeration of primitive equal-norm classes");
  en->add_option("--dim", o.dim, "dimension n")->required();
  en->add_option("--bound", o.bound, "component bound for the brute-force scan")->required();
  en->add_option("--method", o.method)->check(CLI::IsMember({"brute", "params", "coverage", "bench"}));
  en->add_option("--source", o.source, "coverage source")->check(CLI::IsMember({"inverse", "sweep"}));
  en->add_option("--param-bound", o.param_bound, "numerator/denominator bound of the parameter sweep");
  en->add_option("--format", o.fmt)->check(CLI::IsMember({"csv", "json"}));
  en->add_flag("--timing", o.timing, "include elapsed time in JSON reports");
  en->callback([&] {
    action = [&] {
      if (o.dim < 2) throw UsageError("--dim must be at least 2");
      auto emit = [&](const SolutionSet& set) {
        if (o.fmt == "json") {
          Json j;
          j["dimension"] = o.dim;
          j["solutions"] = Json::array();
          for (const auto& s : set) j["solutions"].push_back(format::to_json(s));
          out << j.dump() << '\n';
        } else {
          out << format::solutions_csv(o.dim, set);
        }
      };
      if (o.method == "brute") {
        emit(brute_force_solutions(o.dim, o.bound));
      } else if (o.method == "params") {
        if (!o.param_bound) throw UsageError("--method params needs --param-bound");
        emit(enumerate_via_params(o.dim, *o.param_bound));
      } else if (o.method == "coverage") {
        const auto source = o.source == "sweep" ? ParamSource::Sweep : ParamSource::Inverse;
        out << format::to_json(coverage_check(o.dim, o.bound, source, o.param_bound), o.timing).dump() << '\n';
      } else {
        if (!o.param_bound) throw UsageError("--method bench needs --param-bound");
        out << format::bench_csv(bench_generation(o.dim, o.bound, *o.param_bound));
      }
    };
  });

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }

  try {
    if (action) action();
    return kExitOk;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
    return kExitDomain;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
}

}  // namespace equinorm::cli
