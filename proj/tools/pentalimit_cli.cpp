// pentalimit: conserved-collineation limit points for the pentagram map.
//
// Subcommands: la, limit, iterate, collapse, verify, render.
// Exit codes: 0 success, 1 verification failure, 2 invalid input,
// 3 eigenvector selection failure, 4 degeneracy while iterating.

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "pentalimit/axis_aligned.hpp"
#include "pentalimit/collineation.hpp"
#include "pentalimit/limit.hpp"
#include "pentalimit/pentagram.hpp"
#include "pentalimit/polygon_doc.hpp"
#include "pentalimit/random_polygons.hpp"
#include "pentalimit/svg.hpp"

using nlohmann::ordered_json;
using namespace pentalimit;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitInvalidInput = 2;
constexpr int kExitSelectionFailed = 3;
constexpr int kExitIterationDegenerate = 4;

struct CommonOpts {
  std::string input_path;
  double eps = kDefaultEpsilon;
  bool timing = false;
};

struct LoadedInput {
  PolygonDocument doc;
  std::string digest;
};

LoadedInput load_input(const CommonOpts& o) {
  const std::string raw = read_file(o.input_path);
  return {PolygonDocument::parse(raw), fnv1a_hex(raw)};
}

ordered_json input_block(const CommonOpts& o, const LoadedInput& in) {
  ordered_json j;
  j["path"] = o.input_path;
  j["digest"] = in.digest;
  if (!in.doc.name.empty()) j["name"] = in.doc.name;
  j["n"] = in.doc.size();
  j["mode"] = in.doc.mode_name();
  return j;
}

ordered_json rat_row(const Mat3<Rat>& m, int i) {
  return ordered_json::array(
      {m.m[i][0].str(), m.m[i][1].str(), m.m[i][2].str()});
}

ordered_json matrix_json(const Mat3<Rat>& m, bool as_float) {
  ordered_json rows = ordered_json::array();
  for (int i = 0; i < 3; ++i) {
    if (as_float)
      rows.push_back(ordered_json::array({m.m[i][0].to_double(),
                                          m.m[i][1].to_double(),
                                          m.m[i][2].to_double()}));
    else
      rows.push_back(rat_row(m, i));
  }
  return rows;
}

ordered_json matrix_json(const Mat3<double>& m) {
  ordered_json rows = ordered_json::array();
  for (int i = 0; i < 3; ++i)
    rows.push_back(ordered_json::array({m.m[i][0], m.m[i][1], m.m[i][2]}));
  return rows;
}

ordered_json point_json(const Point2<Rat>& p, bool as_float) {
  if (as_float)
    return ordered_json::array({p.x.to_double(), p.y.to_double()});
  return ordered_json::array({p.x.str(), p.y.str()});
}

ordered_json point_json(const Point2<double>& p) {
  return ordered_json::array({p.x, p.y});
}

class Timer {
 public:
  Timer() : start_(std::chrono::steady_clock::now()) {}
  double ms() const {
    return std::chrono::duration<double, std::milli>(
               std::chrono::steady_clock::now() - start_)
        .count();
  }

 private:
  std::chrono::steady_clock::time_point start_;
};

// Timing is opt-in so that default reports are byte-stable.
void emit(ordered_json& report, const CommonOpts& o, const Timer& t) {
  if (o.timing) report["timing_ms"] = t.ms();
  std::cout << report.dump(2) << "\n";
}

int exit_code_for(const Error& e, bool iterating) {
  switch (e.code()) {
    case ErrorCode::NoCandidateInHull:
    case ErrorCode::AmbiguousSelection:
      return kExitSelectionFailed;
    case ErrorCode::DegenerateOutput:
    case ErrorCode::IterationLimitExceeded:
      return kExitIterationDegenerate;
    case ErrorCode::DegenerateJoin:
    case ErrorCode::DegenerateMeet:
    case ErrorCode::DegenerateTriple:
    case ErrorCode::PointAtInfinity:
      return iterating ? kExitIterationDegenerate : kExitInvalidInput;
    default:
      return kExitInvalidInput;
  }
}

int report_error(const std::string& command, const Error& e,
                 bool iterating = false) {
  ordered_json j;
  j["command"] = command;
  ordered_json err;
  err["code"] = error_code_name(e.code());
  err["message"] = e.what();
  if (e.index() >= 0) err["index"] = e.index();
  j["error"] = std::move(err);
  std::cout << j.dump(2) << "\n";
  std::cerr << "pentalimit " << command << ": " << e.what() << "\n";
  return exit_code_for(e, iterating);
}

// ---------------------------------------------------------------- la ------

int run_la(const CommonOpts& o, bool as_float) {
  Timer t;
  ordered_json rep;
  rep["command"] = "la";
  try {
    const LoadedInput in = load_input(o);
    rep["input"] = input_block(o, in);
    ordered_json res;
    if (in.doc.mode == ScalarMode::exact) {
      const auto L = build_la(in.doc.exact_polygon(), o.eps);
      res["matrix"] = matrix_json(L.matrix, as_float);
      const Rat tr = trace(L);
      res["trace"] = as_float ? ordered_json(tr.to_double())
                              : ordered_json(tr.str());
      const auto cp = charpoly(L);
      res["charpoly"] =
          as_float
              ? ordered_json::array({cp.c2.to_double(), cp.c1.to_double(),
                                     cp.c0.to_double()})
              : ordered_json::array({cp.c2.str(), cp.c1.str(), cp.c0.str()});
    } else {
      const auto L = build_la(in.doc.float_polygon(), o.eps);
      res["matrix"] = matrix_json(L.matrix);
      res["trace"] = trace(L);
      const auto cp = charpoly(L);
      res["charpoly"] = ordered_json::array({cp.c2, cp.c1, cp.c0});
    }
    rep["results"] = std::move(res);
  } catch (const Error& e) {
    return report_error("la", e);
  }
  emit(rep, o, t);
  return kExitOk;
}

// ------------------------------------------------------------- limit ------

ordered_json limit_result_json(const LimitResult& r) {
  ordered_json res;
  res["limit"] = point_json(r.limit);
  res["eigenvalue"] = r.lambda;
  res["real_eigenvalues"] = r.real_eigenvalues;
  res["has_complex_pair"] = r.has_complex_pair;
  res["residual"] = r.residual;
  res["selected_largest_root"] = r.selected_largest_root;
  ordered_json cands = ordered_json::array();
  for (const auto& c : r.candidates) {
    ordered_json cj;
    cj["eigenvalue"] = c.lambda;
    if (c.point) {
      cj["point"] = point_json(*c.point);
      cj["in_hull"] = c.in_hull;
      cj["residual"] = c.residual;
    } else {
      cj["failure"] = c.failure;
    }
    cands.push_back(std::move(cj));
  }
  res["candidates"] = std::move(cands);
  if (r.iteration_deviation)
    res["iteration_deviation"] = *r.iteration_deviation;
  return res;
}

int run_limit(const CommonOpts& o, const std::string& method, double tol) {
  Timer t;
  ordered_json rep;
  rep["command"] = "limit";
  try {
    const LoadedInput in = load_input(o);
    rep["input"] = input_block(o, in);
    ordered_json res;
    res["method"] = method;

    LimitOptions lopts;
    lopts.eps = o.eps;
    lopts.iteration_tol = tol;
    lopts.iteration_cross_check = (method == "both");

    const bool exact = in.doc.mode == ScalarMode::exact;
    if (method == "iterate") {
      const Point2<double> p =
          exact ? limit_by_iteration(in.doc.exact_polygon(), tol)
                : limit_by_iteration(in.doc.float_polygon(), tol);
      res["limit"] = point_json(p);
      res["tol"] = tol;
    } else {
      const LimitResult r = exact
                                ? limit_point(in.doc.exact_polygon(), lopts)
                                : limit_point(in.doc.float_polygon(), lopts);
      res.update(limit_result_json(r));
    }
    rep["results"] = std::move(res);
  } catch (const Error& e) {
    return report_error("limit", e, method == "iterate");
  }
  emit(rep, o, t);
  return kExitOk;
}

// ----------------------------------------------------------- iterate ------

int run_iterate(const CommonOpts& o, long k, long exact_steps) {
  Timer t;
  ordered_json rep;
  rep["command"] = "iterate";
  try {
    const LoadedInput in = load_input(o);
    rep["input"] = input_block(o, in);
    ordered_json res;
    res["k"] = k;

    ordered_json verts = ordered_json::array();
    if (in.doc.mode == ScalarMode::exact && exact_steps < 0) {
      const Polygon<Rat> out = iterate(in.doc.exact_polygon(), k, o.eps);
      for (const auto& p : out.vertices()) verts.push_back(point_json(p, false));
    } else if (in.doc.mode == ScalarMode::exact) {
      // Promote to float after the requested number of exact steps.
      const long ke = std::min(k, exact_steps);
      const Polygon<Rat> mid = iterate(in.doc.exact_polygon(), ke, o.eps);
      const Polygon<double> out = iterate(to_float_polygon(mid), k - ke, o.eps);
      for (const auto& p : out.vertices()) verts.push_back(point_json(p));
    } else {
      const Polygon<double> out = iterate(in.doc.float_polygon(), k, o.eps);
      for (const auto& p : out.vertices()) verts.push_back(point_json(p));
    }
    res["vertices"] = std::move(verts);
    rep["results"] = std::move(res);
  } catch (const Error& e) {
    return report_error("iterate", e, true);
  }
  emit(rep, o, t);
  return kExitOk;
}

// ---------------------------------------------------------- collapse ------

int run_collapse(const CommonOpts& o, bool verify) {
  Timer t;
  ordered_json rep;
  rep["command"] = "collapse";
  int rc = kExitOk;
  try {
    const LoadedInput in = load_input(o);
    rep["input"] = input_block(o, in);
    ordered_json res;

    if (in.doc.mode == ScalarMode::exact) {
      const Polygon<Rat> A = in.doc.exact_polygon();
      const auto shape = detect(A, o.eps);
      if (!shape)
        throw Error(ErrorCode::InvalidInput, "polygon is not axis-aligned");
      res["m"] = shape->m;
      res["vertical_first"] = shape->vertical_first;
      res["start_offset"] = shape->start_offset;
      res["collapse_point"] = point_json(collapse_point(*shape), false);
      res["matrix"] = matrix_json(la_closed_form(*shape).matrix, false);
      if (verify) {
        const auto inc = verify_incidence(*shape, 6, o.eps);
        ordered_json vj;
        vj["steps"] = inc.steps;
        vj["alternating_collinear"] = inc.alternating_collinear;
        vj["max_det_deviation"] = inc.max_det_deviation;
        vj["meet_point"] = point_json(inc.meet_point, false);
        vj["meet_equals_collapse"] = inc.meet_equals_collapse;
        vj["status"] = inc.pass() ? "pass" : "fail";
        res["incidence"] = std::move(vj);
        if (!inc.pass()) rc = kExitVerifyFailed;
      }
    } else {
      const Polygon<double> A = in.doc.float_polygon();
      const auto shape = detect(A, o.eps);
      if (!shape)
        throw Error(ErrorCode::InvalidInput, "polygon is not axis-aligned");
      res["m"] = shape->m;
      res["vertical_first"] = shape->vertical_first;
      res["start_offset"] = shape->start_offset;
      res["collapse_point"] = point_json(collapse_point(*shape));
      res["matrix"] = matrix_json(la_closed_form(*shape).matrix);
      if (verify) {
        const auto inc = verify_incidence(*shape, 6, o.eps);
        ordered_json vj;
        vj["steps"] = inc.steps;
        vj["alternating_collinear"] = inc.alternating_collinear;
        vj["max_det_deviation"] = inc.max_det_deviation;
        vj["meet_point"] = point_json(inc.meet_point);
        vj["meet_equals_collapse"] = inc.meet_equals_collapse;
        vj["status"] = inc.pass() ? "pass" : "fail";
        res["incidence"] = std::move(vj);
        if (!inc.pass()) rc = kExitVerifyFailed;
      }
    }
    rep["results"] = std::move(res);
  } catch (const Error& e) {
    return report_error("collapse", e);
  }
  emit(rep, o, t);
  return rc;
}

// ------------------------------------------------------------ verify ------

struct VerifyContext {
  CommonOpts common;
  std::vector<std::string> checks;
  unsigned long seed = 0;
  bool corrupt_la = false;  // negative-control hook used by the test suite
};

bool wants(const VerifyContext& v, const std::string& name) {
  if (v.checks.empty()) return true;
  for (const auto& c : v.checks)
    if (c == name) return true;
  return false;
}

template <class Fn>
void run_check(ordered_json& out, const std::string& name, Fn&& fn) {
  ordered_json cj;
  cj["name"] = name;
  try {
    fn(cj);  // sets "status" and detail fields
  } catch (const Error& e) {
    cj["status"] = "skip";
    cj["reason"] = e.what();
  }
  out.push_back(std::move(cj));
}

template <class S>
void verify_checks(const VerifyContext& v, const Polygon<S>& A,
                   ordered_json& checks) {
  const double eps = v.common.eps;
  std::mt19937_64 rng(v.seed);

  if (wants(v, "conservation"))
    run_check(checks, "conservation", [&](ordered_json& cj) {
      ConservationReport<S> r = verify_conservation(A, eps);
      if (v.corrupt_la) {
        r.la_a.m[0][0] = r.la_a.m[0][0] + S(1);
        r.exact_equal = false;
        r.max_deviation = std::max(r.max_deviation, 1.0);
      }
      cj["max_deviation"] = r.max_deviation;
      cj["status"] = r.pass(eps) ? "pass" : "fail";
    });

  if (wants(v, "trace"))
    run_check(checks, "trace", [&](ordered_json& cj) {
      const S tr = trace(build_la(A, eps));
      const S expected = S(2 * static_cast<long>(A.size()));
      const bool ok = scalar_traits<S>::exact
                          ? tr == expected
                          : std::abs(scalar_to_double(tr) -
                                     scalar_to_double(expected)) < eps;
      cj["trace"] = scalar_to_double(tr);
      cj["status"] = ok ? "pass" : "fail";
    });

  if (wants(v, "invariance"))
    run_check(checks, "invariance", [&](ordered_json& cj) {
      const auto L = build_la(A, eps);
      const auto cp = charpoly(L);
      bool ok = true;
      double max_dev = 0;
      for (int trial = 0; trial < 10; ++trial) {
        Mat3<Rat> psi_r = random_unimodular(rng);
        Mat3<S> psi;
        for (int i = 0; i < 3; ++i)
          for (int j = 0; j < 3; ++j)
            if constexpr (scalar_traits<S>::exact)
              psi.m[i][j] = psi_r.m[i][j];
            else
              psi.m[i][j] = psi_r.m[i][j].to_double();
        const auto cpc = charpoly(conjugate(L, psi, eps));
        const double dev =
            std::max({std::abs(scalar_to_double(cpc.c2 - cp.c2)),
                      std::abs(scalar_to_double(cpc.c1 - cp.c1)),
                      std::abs(scalar_to_double(cpc.c0 - cp.c0))});
        max_dev = std::max(max_dev, dev);
        if (scalar_traits<S>::exact ? !(cpc == cp) : dev >= eps) ok = false;
      }
      cj["trials"] = 10;
      cj["max_deviation"] = max_dev;
      cj["status"] = ok ? "pass" : "fail";
    });

  if (wants(v, "hull"))
    run_check(checks, "hull", [&](ordered_json& cj) {
      if (!is_convex(A, eps))
        throw Error(ErrorCode::NotConvex, "hull check needs a convex polygon");
      const auto u = A.lifts();
      bool ok = true;
      const int trials = 25;
      std::uniform_int_distribution<long> weight(1, 12);
      for (int trial = 0; trial < trials; ++trial) {
        // Random exact convex combination of the vertices.
        S wx(0), wy(0), wsum(0);
        for (const auto& p : A.vertices()) {
          const S w(weight(rng));
          wx += w * p.x;
          wy += w * p.y;
          wsum += w;
        }
        const Point2<S> q{wx / wsum, wy / wsum};
        for (const S& c : hull_coefficients(A, q, eps))
          if (scalar_traits<S>::exact ? !(scalar_sign(c, eps) > 0)
                                      : scalar_to_double(c) <= -eps)
            ok = false;
        const HPoint<S> img = la_apply_direct(u, lift(q), eps);
        if (!in_hull(A, project(img, eps), eps)) ok = false;
      }
      cj["trials"] = trials;
      cj["status"] = ok ? "pass" : "fail";
    });

  if (wants(v, "smalln"))
    run_check(checks, "smalln", [&](ordered_json& cj) {
      const SmallNReport r = verify_small_n(A, eps);
      cj["iterate_power"] = r.iterate_power;
      cj["matching"] = r.matching;
      if (r.is_cyclic_shift) cj["shift"] = r.shift;
      cj["status"] = r.matched ? "pass" : "fail";
    });

  if (wants(v, "duality"))
    run_check(checks, "duality", [&](ordered_json& cj) {
      const DualityReport r = verify_duality(A, eps);
      cj["max_deviation"] = r.max_deviation;
      cj["status"] =
          (r.alpha1_transpose && r.alpha2_transpose) ? "pass" : "fail";
    });

  if (wants(v, "incidence"))
    run_check(checks, "incidence", [&](ordered_json& cj) {
      const auto shape = detect(A, eps);
      if (!shape)
        throw Error(ErrorCode::InvalidInput, "polygon is not axis-aligned");
      const auto inc = verify_incidence(*shape, 6, eps);
      cj["steps"] = inc.steps;
      cj["max_det_deviation"] = inc.max_det_deviation;
      cj["status"] = inc.pass() ? "pass" : "fail";
    });
}

int run_verify(const VerifyContext& v) {
  Timer t;
  ordered_json rep;
  rep["command"] = "verify";
  int rc = kExitOk;
  try {
    const LoadedInput in = load_input(v.common);
    rep["input"] = input_block(v.common, in);
    ordered_json checks = ordered_json::array();
    if (in.doc.mode == ScalarMode::exact)
      verify_checks(v, in.doc.exact_polygon(), checks);
    else
      verify_checks(v, in.doc.float_polygon(), checks);
    for (const auto& c : checks)
      if (c.at("status") == "fail") rc = kExitVerifyFailed;
    rep["checks"] = std::move(checks);
    rep["pass"] = (rc == kExitOk);
  } catch (const Error& e) {
    return report_error("verify", e);
  }
  emit(rep, v.common, t);
  return rc;
}

// ------------------------------------------------------------ render ------

int run_render(const CommonOpts& o, long k, const std::string& out_path,
               bool mark_limit) {
  Timer t;
  ordered_json rep;
  rep["command"] = "render";
  try {
    const LoadedInput in = load_input(o);
    rep["input"] = input_block(o, in);

    std::vector<Polygon<double>> rings;
    try {
      if (in.doc.mode == ScalarMode::exact) {
        Polygon<Rat> cur = in.doc.exact_polygon();
        rings.push_back(to_float_polygon(cur));
        for (long s = 1; s <= k; ++s) {
          cur = pentagram(cur, o.eps);
          rings.push_back(to_float_polygon(cur));
        }
      } else {
        Polygon<double> cur = in.doc.float_polygon();
        rings.push_back(cur);
        for (long s = 1; s <= k; ++s) {
          cur = pentagram(cur, o.eps);
          rings.push_back(cur);
        }
      }
    } catch (const Error& e) {
      return report_error("render", e, true);
    }

    std::optional<Point2<double>> marker;
    if (mark_limit) {
      LimitOptions lopts;
      lopts.eps = o.eps;
      marker = (in.doc.mode == ScalarMode::exact)
                   ? limit_point(in.doc.exact_polygon(), lopts).limit
                   : limit_point(in.doc.float_polygon(), lopts).limit;
    }

    const std::string svg = render_svg(rings, marker);
    std::ofstream out(out_path, std::ios::binary);
    if (!out)
      throw Error(ErrorCode::InvalidInput, "cannot write '" + out_path + "'");
    out << svg;
    out.close();

    ordered_json res;
    res["k"] = k;
    res["output"] = out_path;
    res["bytes"] = svg.size();
    if (marker) res["limit"] = point_json(*marker);
    rep["results"] = std::move(res);
  } catch (const Error& e) {
    return report_error("render", e);
  }
  emit(rep, o, t);
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Limit points of the pentagram map via the conserved collineation"};
  app.require_subcommand(1);

  CommonOpts common;
  app.add_option("--epsilon", common.eps,
                 "absolute tolerance for float-mode degeneracy predicates")
      ->capture_default_str();
  app.add_flag("--timing", common.timing, "include timing_ms in the report");

  auto add_input = [&](CLI::App* sub) {
    sub->add_option("input", common.input_path,
                    "polygon file (JSON or CSV)")
        ->required();
  };

  auto* la = app.add_subcommand("la", "conserved collineation matrix, trace, charpoly");
  bool la_float = false;
  add_input(la);
  la->add_flag("--float", la_float, "print decimals instead of exact rationals");

  auto* limit = app.add_subcommand("limit", "limit point of the iterated map");
  std::string method = "both";
  double tol = 1e-9;
  add_input(limit);
  limit->add_option("--method", method, "eigen, iterate, or both")
      ->check(CLI::IsMember({"eigen", "iterate", "both"}))
      ->capture_default_str();
  limit->add_option("--tol", tol, "iteration stopping diameter")
      ->capture_default_str();

  auto* iter = app.add_subcommand("iterate", "apply the pentagram map k times");
  long k = 1;
  long exact_steps = -1;
  add_input(iter);
  iter->add_option("-k,--steps", k, "number of applications")
      ->capture_default_str();
  iter->add_option("--exact-steps", exact_steps,
                   "exact steps before switching to floats (-1 = all exact)");

  auto* collapse = app.add_subcommand("collapse", "axis-aligned point of collapse");
  bool collapse_verify = false;
  add_input(collapse);
  collapse->add_flag("--verify", collapse_verify,
                     "verify the two-line incidence at T^(m-2)");

  auto* verify = app.add_subcommand("verify", "run conservation/invariance checks");
  VerifyContext vctx;
  add_input(verify);
  verify->add_option("--checks", vctx.checks,
                     "subset of conservation,trace,invariance,hull,smalln,"
                     "duality,incidence")
      ->delimiter(',');
  verify->add_option("--seed", vctx.seed, "seed for randomized checks")
      ->capture_default_str();
  verify->add_flag("--corrupt-la", vctx.corrupt_la)->group("");

  auto* render = app.add_subcommand("render", "render iterates as SVG");
  long render_k = 5;
  std::string out_path;
  bool mark_limit = false;
  add_input(render);
  render->add_option("-k,--steps", render_k, "iterates to draw")
      ->capture_default_str();
  render->add_option("-o,--output", out_path, "output SVG path")->required();
  render->add_flag("--mark-limit", mark_limit, "mark the eigenvector limit point");

  CLI11_PARSE(app, argc, argv);

  try {
    if (app.got_subcommand(la)) return run_la(common, la_float);
    if (app.got_subcommand(limit)) return run_limit(common, method, tol);
    if (app.got_subcommand(iter)) return run_iterate(common, k, exact_steps);
    if (app.got_subcommand(collapse)) return run_collapse(common, collapse_verify);
    if (app.got_subcommand(verify)) {
      vctx.common = common;
      return run_verify(vctx);
    }
    if (app.got_subcommand(render))
      return run_render(common, render_k, out_path, mark_limit);
  } catch (const Error& e) {
    std::cerr << "pentalimit: " << e.what() << "\n";
    return kExitInvalidInput;
  }
  return kExitInvalidInput;
}
