#include "equinorm/applications.hpp"
#include "equinorm/core.hpp"
#include "equinorm/errors.hpp"
#include "equinorm/lattice.hpp"
#include "equinorm/reductions.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <chrono>
#include <optional>

namespace py = pybind11;
using namespace equinorm;

namespace {

// Rationals cross the boundary as fractions.Fraction and integers as int.
// Inputs may be int, Fraction, or "p/q" strings; floats are rejected.

Rational to_rational(const py::handle& obj) {
  if (py::isinstance<py::float_>(obj)) throw UsageError("floats are not accepted; pass int, Fraction or 'p/q'");
  return parse_rational(py::str(obj).cast<std::string>());
}

py::object to_py(const Rational& r) {
  return py::module_::import("fractions").attr("Fraction")(r.to_string());
}

py::int_ to_py(const Integer& i) {
  return py::reinterpret_steal<py::int_>(PyLong_FromString(i.str().c_str(), nullptr, 10));
}

std::vector<Rational> to_rationals(const py::iterable& values) {
  std::vector<Rational> out;
  for (const auto& v : values) out.push_back(to_rational(v));
  return out;
}

RationalVector to_vector(const py::iterable& values) { return RationalVector(to_rationals(values)); }

template <typename Range>
py::tuple to_py_tuple(const Range& values) {
  py::tuple out(values.size());
  std::size_t i = 0;
  for (const auto& v : values) out[i++] = to_py(v);
  return out;
}

IntegerVector to_integer_vector(const py::iterable& values) {
  std::vector<Integer> out;
  for (const auto& v : values) {
    if (!py::isinstance<py::int_>(v)) throw UsageError("expected integers");
    out.emplace_back(py::str(v).cast<std::string>());
  }
  return IntegerVector(std::move(out));
}

std::size_t to_pivot(long long one_based) {
  if (one_based < 1) throw UsageError("pivot is one-based and must be positive");
  return static_cast<std::size_t>(one_based - 1);
}

py::dict params_to_py(const ParamSet& p) {
  py::dict d;
  d["s"] = to_py_tuple(p.s());
  d["lambda"] = to_py_tuple(p.lambda());
  d["pivot"] = p.pivot() + 1;
  return d;
}

py::tuple pair_to_py(const EqualNormPair& pair) { return py::make_tuple(to_py_tuple(pair.x()), to_py_tuple(pair.y())); }

py::tuple solution_to_py(const ThreeSquareSolution& s) {
  return py::make_tuple(to_py(s.x()), to_py(s.y()), to_py(s.z()), to_py(s.w()));
}

py::list solutions_to_py(const SolutionSet& set) {
  py::list out;
  for (const auto& s : set) out.append(py::make_tuple(to_py_tuple(s.x()), to_py_tuple(s.y())));
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact bijective parameterization of equal sums of squares.";

  auto error = py::register_exception<Error>(m, "Error", PyExc_ValueError);
  auto usage = py::register_exception<UsageError>(m, "UsageError", error.ptr());
  py::register_exception<ParseError>(m, "ParseError", usage.ptr());
  py::register_exception<DimensionMismatch>(m, "DimensionMismatch", usage.ptr());
  py::register_exception<LimitExceeded>(m, "LimitExceeded", usage.ptr());
  auto domain = py::register_exception<DomainError>(m, "DomainError", error.ptr());
  py::register_exception<DegenerateAxis>(m, "DegenerateAxis", domain.ptr());
  py::register_exception<DegenerateSum>(m, "DegenerateSum", domain.ptr());
  py::register_exception<Unrepresentable>(m, "Unrepresentable", domain.ptr());
  py::register_exception<NotASolution>(m, "NotASolution", domain.ptr());

  m.def("parse_rational", [](const std::string& text) { return to_py(parse_rational(text)); }, py::arg("text"));
  m.def("dot", [](const py::iterable& a, const py::iterable& b) { return to_py(dot(to_vector(a), to_vector(b))); },
        py::arg("a"), py::arg("b"));
  m.def("norm_sq", [](const py::iterable& a) { return to_py(norm_sq(to_vector(a))); }, py::arg("a"));
  m.def(
      "clear_denominators",
      [](const py::iterable& v) {
        const auto c = clear_denominators(to_vector(v));
        return py::make_tuple(to_py_tuple(c.values), to_py(c.scale));
      },
      py::arg("v"), "Returns (integer tuple, scale) with integers = scale * v.");
  m.def(
      "primitive_normalize", [](const py::iterable& w) { return to_py_tuple(primitive_normalize(to_integer_vector(w))); },
      py::arg("w"));

  m.def("verify_equal_norm", [](const py::iterable& x, const py::iterable& y) {
    return verify_equal_norm(to_vector(x), to_vector(y));
  }, py::arg("x"), py::arg("y"));
  m.def(
      "decompose",
      [](const py::iterable& x, const py::iterable& y) {
        const auto sd = decompose(EqualNormPair(to_vector(x), to_vector(y)));
        return py::make_tuple(to_py_tuple(sd.s), to_py_tuple(sd.d));
      },
      py::arg("x"), py::arg("y"));
  m.def(
      "recompose",
      [](const py::iterable& s, const py::iterable& d) { return pair_to_py(recompose({to_vector(s), to_vector(d)})); },
      py::arg("s"), py::arg("d"));
  m.def(
      "orthogonal_basis",
      [](const py::iterable& s, long long pivot) {
        py::list out;
        for (const auto& e : orthogonal_basis(to_vector(s), to_pivot(pivot))) out.append(to_py_tuple(e));
        return out;
      },
      py::arg("s"), py::arg("pivot") = 1);
  m.def(
      "forward",
      [](const py::iterable& s, const py::iterable& lambda, long long pivot) {
        return pair_to_py(forward(ParamSet(to_vector(s), to_rationals(lambda), to_pivot(pivot))));
      },
      py::arg("s"), py::arg("lam"), py::arg("pivot") = 1, "Chart parameters to (x, y). Pivot is one-based.");
  m.def(
      "inverse",
      [](const py::iterable& x, const py::iterable& y, long long pivot) {
        return params_to_py(inverse(EqualNormPair(to_vector(x), to_vector(y)), to_pivot(pivot)));
      },
      py::arg("x"), py::arg("y"), py::arg("pivot") = 1);
  m.def(
      "inverse_with_pivot",
      [](const py::iterable& x, const py::iterable& y) {
        return params_to_py(inverse_with_pivot(EqualNormPair(to_vector(x), to_vector(y))));
      },
      py::arg("x"), py::arg("y"));

  m.def(
      "pythagorean_forward",
      [](const py::handle& s1, const py::iterable& lambda) {
        const auto t = pythagorean_forward(PythagoreanParams(to_rational(s1), to_rationals(lambda)));
        return py::make_tuple(to_py_tuple(t.x), to_py(t.y1));
      },
      py::arg("s1"), py::arg("lam"));
  m.def(
      "pythagorean_inverse",
      [](const py::iterable& x, const py::handle& y1) {
        const auto p = pythagorean_inverse(to_vector(x), to_rational(y1));
        return py::make_tuple(to_py(p.s1()), to_py_tuple(p.lambda()));
      },
      py::arg("x"), py::arg("y1"));
  m.def(
      "generate_pythagorean_triples",
      [](long long max_hypotenuse) {
        py::list out;
        for (const auto& t : generate_pythagorean_triples(max_hypotenuse)) {
          out.append(py::make_tuple(to_py(t.odd_leg), to_py(t.even_leg), to_py(t.hypotenuse)));
        }
        return out;
      },
      py::arg("max_hypotenuse"));

  m.def(
      "plg_forward",
      [](const py::handle& mm, const py::handle& n, const py::handle& u) {
        const auto q = plg_forward({to_rational(mm), to_rational(n), to_rational(u)});
        return py::make_tuple(to_py(q.u1()), to_py(q.u2()), to_py(q.u3()), to_py(q.u4()));
      },
      py::arg("m"), py::arg("n"), py::arg("u"));
  auto to_quad = [](const py::iterable& quad) {
    const auto v = to_rationals(quad);
    if (v.size() != 4) throw DimensionMismatch("a quad has four entries");
    return ParallelogramQuad(v[0], v[1], v[2], v[3]);
  };
  m.def(
      "plg_inverse",
      [to_quad](const py::iterable& quad) {
        const auto p = plg_inverse(to_quad(quad));
        return py::make_tuple(to_py(p.m), to_py(p.n), to_py(p.u));
      },
      py::arg("quad"), "Returns (m, n, u).");
  m.def(
      "plg_via_core",
      [to_quad](const py::iterable& quad) {
        const auto c = plg_via_core(to_quad(quad));
        py::dict d;
        d["u_plus"] = to_py(c.u_plus);
        d["u_minus"] = to_py(c.u_minus);
        d["s1"] = to_py(c.s1);
        d["s2"] = to_py(c.s2);
        d["lambda2"] = to_py(c.lambda2);
        return d;
      },
      py::arg("quad"));

  auto to_solution = [](const py::iterable& sol) {
    const auto v = to_rationals(sol);
    if (v.size() != 4) throw DimensionMismatch("a solution has four entries (x, y, z, w)");
    return ThreeSquareSolution(v[0], v[1], v[2], v[3]);
  };
  m.def(
      "tsq_rational",
      [](const py::handle& s1, const py::handle& s2, const py::handle& s3) {
        return solution_to_py(tsq_rational({to_rational(s1), to_rational(s2), to_rational(s3)}));
      },
      py::arg("s1"), py::arg("s2"), py::arg("s3"));
  m.def(
      "tsq_integer",
      [](const std::array<py::int_, 3>& mm, const std::array<py::int_, 3>& n) {
        std::array<Integer, 3> mi, ni;
        for (std::size_t i = 0; i < 3; ++i) {
          mi[i] = Integer(py::str(mm[i]).cast<std::string>());
          ni[i] = Integer(py::str(n[i]).cast<std::string>());
        }
        return solution_to_py(tsq_integer(ThreeSquareIntParams(mi, ni)));
      },
      py::arg("m"), py::arg("n"));
  m.def(
      "tsq_inverse",
      [to_solution](const py::iterable& sol) {
        const auto p = tsq_inverse(to_solution(sol));
        return py::make_tuple(to_py(p.s1), to_py(p.s2), to_py(p.s3));
      },
      py::arg("sol"));
  m.def(
      "tsq_primitive", [to_solution](const py::iterable& sol) { return to_py_tuple(to_solution(sol).primitive()); },
      py::arg("sol"));

  m.def(
      "brute_force_solutions",
      [](std::size_t n, long long bound) {
        SolutionSet set;
        {
          py::gil_scoped_release release;
          set = brute_force_solutions(n, bound);
        }
        return solutions_to_py(set);
      },
      py::arg("n"), py::arg("bound"), "Canonical classes as sorted list of (x, y) tuples.");
  m.def(
      "enumerate_via_params",
      [](std::size_t n, long long param_bound) {
        SolutionSet set;
        {
          py::gil_scoped_release release;
          set = enumerate_via_params(n, param_bound);
        }
        return solutions_to_py(set);
      },
      py::arg("n"), py::arg("param_bound"));
  m.def(
      "coverage_check",
      [](std::size_t n, long long bound, const std::string& source, std::optional<long long> param_bound) {
        if (source != "inverse" && source != "sweep") throw UsageError("source must be 'inverse' or 'sweep'");
        CoverageReport r;
        {
          py::gil_scoped_release release;
          r = coverage_check(n, bound, source == "sweep" ? ParamSource::Sweep : ParamSource::Inverse, param_bound);
        }
        py::dict d;
        d["dimension"] = r.dimension;
        d["bound"] = r.bound;
        d["source"] = source;
        d["param_bound"] = param_bound ? py::object(py::int_(*param_bound)) : py::object(py::none());
        d["total"] = r.total;
        d["reachable"] = r.reachable;
        py::list unreachable;
        for (const auto& s : r.unreachable) unreachable.append(py::make_tuple(to_py_tuple(s.x()), to_py_tuple(s.y())));
        d["unreachable"] = unreachable;
        d["elapsed_seconds"] = std::chrono::duration<double>(r.elapsed).count();
        return d;
      },
      py::arg("n"), py::arg("bound"), py::arg("source") = "inverse", py::arg("param_bound") = py::none());
}
