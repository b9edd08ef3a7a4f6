// Python bindings for the core operations. Coordinates may be ints, "p/q"
// strings (exact mode) or floats (float mode); exact results come back as
// strings, float results as floats.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>
#include <variant>
#include <vector>

#include "pentalimit/axis_aligned.hpp"
#include "pentalimit/collineation.hpp"
#include "pentalimit/limit.hpp"
#include "pentalimit/pentagram.hpp"

namespace py = pybind11;
using namespace pentalimit;

namespace {

using AnyPolygon = std::variant<Polygon<Rat>, Polygon<double>>;

AnyPolygon parse_vertices(const py::sequence& verts) {
  bool any_float = false;
  std::vector<std::pair<py::object, py::object>> raw;
  for (const auto& item : verts) {
    py::sequence pair = py::cast<py::sequence>(item);
    if (py::len(pair) != 2)
      throw py::value_error("each vertex must be an (x, y) pair");
    py::object x = pair[0], y = pair[1];
    for (const auto& c : {x, y})
      if (py::isinstance<py::float_>(c)) any_float = true;
    raw.emplace_back(x, y);
  }

  auto to_rat = [](const py::object& c) -> Rat {
    if (py::isinstance<py::str>(c)) return Rat::parse(py::cast<std::string>(c));
    if (py::isinstance<py::int_>(c)) return Rat::parse(py::cast<std::string>(py::str(c)));
    return Rat::from_double(py::cast<double>(c));
  };
  auto to_dbl = [&](const py::object& c) -> double {
    if (py::isinstance<py::str>(c))
      return Rat::parse(py::cast<std::string>(c)).to_double();
    return py::cast<double>(c);
  };

  if (any_float) {
    std::vector<Point2<double>> pts;
    for (auto& [x, y] : raw) pts.push_back({to_dbl(x), to_dbl(y)});
    return Polygon<double>(std::move(pts));
  }
  std::vector<Point2<Rat>> pts;
  for (auto& [x, y] : raw) pts.push_back({to_rat(x), to_rat(y)});
  return Polygon<Rat>(std::move(pts));
}

py::object coord_out(const Rat& x) { return py::str(x.str()); }
py::object coord_out(double x) { return py::float_(x); }

template <class S>
py::list vertices_out(const Polygon<S>& A) {
  py::list out;
  for (const auto& p : A.vertices())
    out.append(py::make_tuple(coord_out(p.x), coord_out(p.y)));
  return out;
}

template <class S>
py::list matrix_out(const Mat3<S>& m) {
  py::list rows;
  for (int i = 0; i < 3; ++i) {
    py::list row;
    for (int j = 0; j < 3; ++j) row.append(coord_out(m.m[i][j]));
    rows.append(row);
  }
  return rows;
}

py::dict limit_result_out(const LimitResult& r) {
  py::dict d;
  d["limit"] = py::make_tuple(r.limit.x, r.limit.y);
  d["eigenvalue"] = r.lambda;
  d["real_eigenvalues"] = py::cast(r.real_eigenvalues);
  d["has_complex_pair"] = r.has_complex_pair;
  d["residual"] = r.residual;
  d["selected_largest_root"] = r.selected_largest_root;
  if (r.iteration_deviation)
    d["iteration_deviation"] = *r.iteration_deviation;
  else
    d["iteration_deviation"] = py::none();
  py::list cands;
  for (const auto& c : r.candidates) {
    py::dict cd;
    cd["eigenvalue"] = c.lambda;
    if (c.point) {
      cd["point"] = py::make_tuple(c.point->x, c.point->y);
      cd["in_hull"] = c.in_hull;
      cd["residual"] = c.residual;
    } else {
      cd["failure"] = c.failure;
    }
    cands.append(cd);
  }
  d["candidates"] = cands;
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Pentagram-map limit points via the conserved collineation";

  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      PyErr_SetString(PyExc_ValueError, e.what());
    }
  });

  m.def(
      "la_matrix",
      [](const py::sequence& verts) {
        return std::visit(
            [](const auto& A) -> py::object {
              return matrix_out(build_la(A).matrix);
            },
            parse_vertices(verts));
      },
      py::arg("vertices"),
      "3x3 matrix of the conserved collineation (exact strings or floats).");

  m.def(
      "la_trace",
      [](const py::sequence& verts) {
        return std::visit(
            [](const auto& A) -> py::object {
              return coord_out(trace(build_la(A)));
            },
            parse_vertices(verts));
      },
      py::arg("vertices"));

  m.def(
      "charpoly",
      [](const py::sequence& verts) {
        return std::visit(
            [](const auto& A) -> py::object {
              const auto cp = charpoly(build_la(A));
              py::list out;
              out.append(coord_out(cp.c2));
              out.append(coord_out(cp.c1));
              out.append(coord_out(cp.c0));
              return out;
            },
            parse_vertices(verts));
      },
      py::arg("vertices"),
      "Monic characteristic polynomial as [c2, c1, c0].");

  m.def(
      "limit_point",
      [](const py::sequence& verts, bool cross_check, double tol) {
        LimitOptions opts;
        opts.iteration_cross_check = cross_check;
        opts.iteration_tol = tol;
        return std::visit(
            [&](const auto& A) { return limit_result_out(limit_point(A, opts)); },
            parse_vertices(verts));
      },
      py::arg("vertices"), py::arg("cross_check") = false,
      py::arg("tol") = 1e-9,
      "Eigenvector limit point with selection diagnostics.");

  m.def(
      "limit_by_iteration",
      [](const py::sequence& verts, double tol) {
        return std::visit(
            [&](const auto& A) {
              const Point2<double> p = limit_by_iteration(A, tol);
              return py::make_tuple(p.x, p.y);
            },
            parse_vertices(verts));
      },
      py::arg("vertices"), py::arg("tol") = 1e-9,
      "Iterate the map until the diameter drops below tol.");

  m.def(
      "pentagram",
      [](const py::sequence& verts) {
        return std::visit(
            [](const auto& A) -> py::object { return vertices_out(pentagram(A)); },
            parse_vertices(verts));
      },
      py::arg("vertices"), "One application of the pentagram map.");

  m.def(
      "pentagram_inverse",
      [](const py::sequence& verts) {
        return std::visit(
            [](const auto& A) -> py::object {
              return vertices_out(pentagram_inverse(A));
            },
            parse_vertices(verts));
      },
      py::arg("vertices"));

  m.def(
      "iterate",
      [](const py::sequence& verts, long k) {
        return std::visit(
            [&](const auto& A) -> py::object {
              return vertices_out(iterate(A, k));
            },
            parse_vertices(verts));
      },
      py::arg("vertices"), py::arg("k"));

  m.def(
      "is_convex",
      [](const py::sequence& verts) {
        return std::visit([](const auto& A) { return is_convex(A); },
                          parse_vertices(verts));
      },
      py::arg("vertices"));

  m.def(
      "is_generic",
      [](const py::sequence& verts, bool strict) {
        const auto mode =
            strict ? GenericityMode::strict : GenericityMode::consecutive;
        return std::visit([&](const auto& A) { return is_generic(A, mode); },
                          parse_vertices(verts));
      },
      py::arg("vertices"), py::arg("strict") = false);

  m.def(
      "detect_axis_aligned",
      [](const py::sequence& verts) -> py::object {
        return std::visit(
            [](const auto& A) -> py::object {
              const auto shape = detect(A);
              if (!shape) return py::none();
              py::dict d;
              d["m"] = shape->m;
              d["vertical_first"] = shape->vertical_first;
              d["start_offset"] = shape->start_offset;
              py::list xs, ys;
              for (const auto& x : shape->odd_x) xs.append(coord_out(x));
              for (const auto& y : shape->even_y) ys.append(coord_out(y));
              d["odd_x"] = xs;
              d["even_y"] = ys;
              const auto cp = collapse_point(*shape);
              d["collapse_point"] =
                  py::make_tuple(coord_out(cp.x), coord_out(cp.y));
              return d;
            },
            parse_vertices(verts));
      },
      py::arg("vertices"),
      "Axis-aligned pattern data and collapse point, or None.");

  m.def(
      "collapse_point",
      [](const py::sequence& verts) {
        return std::visit(
            [](const auto& A) -> py::object {
              const auto shape = detect(A);
              if (!shape)
                throw Error(ErrorCode::InvalidInput,
                            "polygon is not axis-aligned");
              const auto cp = collapse_point(*shape);
              return py::make_tuple(coord_out(cp.x), coord_out(cp.y));
            },
            parse_vertices(verts));
      },
      py::arg("vertices"),
      "Vertex centroid / point of collapse of an axis-aligned 2m-gon.");

  m.def(
      "verify_conservation",
      [](const py::sequence& verts) {
        return std::visit(
            [](const auto& A) {
              const auto r = verify_conservation(A);
              py::dict d;
              d["equal"] = r.exact_equal;
              d["max_deviation"] = r.max_deviation;
              d["pass"] = r.pass();
              return d;
            },
            parse_vertices(verts));
      },
      py::arg("vertices"),
      "Compare the collineation of A and of T(A).");

  m.def(
      "verify_small_n",
      [](const py::sequence& verts) {
        return std::visit(
            [](const auto& A) {
              const SmallNReport r = verify_small_n(A);
              py::dict d;
              d["matched"] = r.matched;
              d["iterate_power"] = r.iterate_power;
              d["matching"] = py::cast(r.matching);
              d["is_cyclic_shift"] = r.is_cyclic_shift;
              d["shift"] = r.shift;
              return d;
            },
            parse_vertices(verts));
      },
      py::arg("vertices"),
      "Check (L - 3I) maps the vertex set onto T(A) (n=5) or T^2(A) (n=6).");

  m.def(
      "verify_incidence",
      [](const py::sequence& verts) {
        return std::visit(
            [](const auto& A) {
              const auto shape = detect(A);
              if (!shape)
                throw Error(ErrorCode::InvalidInput,
                            "polygon is not axis-aligned");
              const auto r = verify_incidence(*shape);
              py::dict d;
              d["steps"] = r.steps;
              d["alternating_collinear"] = r.alternating_collinear;
              d["max_det_deviation"] = r.max_det_deviation;
              d["meet_point"] = py::make_tuple(coord_out(r.meet_point.x),
                                               coord_out(r.meet_point.y));
              d["pass"] = r.pass();
              return d;
            },
            parse_vertices(verts));
      },
      py::arg("vertices"),
      "Two-line incidence of T^(m-2) for an axis-aligned 2m-gon.");

#ifdef PENTALIMIT_VERSION
  m.attr("__version__") = PENTALIMIT_VERSION;
#else
  m.attr("__version__") = "dev";
#endif
}
