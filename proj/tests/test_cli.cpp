#include <doctest.h>

#include <nlohmann/json.hpp>

#include <array>
#include <cstdio>
#include <fstream>
#include <string>

#include "pentalimit/polygon_doc.hpp"

using nlohmann::json;

namespace {

struct RunResult {
  int exit_code = -1;
  std::string out;
};

RunResult run_cli(const std::string& args) {
  const std::string cmd = std::string(PENTALIMIT_CLI_PATH) + " " + args +
                          " 2>/dev/null";
  RunResult r;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::array<char, 4096> buf;
  while (std::size_t n = fread(buf.data(), 1, buf.size(), pipe))
    r.out.append(buf.data(), n);
  const int status = pclose(pipe);
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::string data(const std::string& name) {
  return std::string(PENTALIMIT_DATA_DIR) + "/" + name;
}

std::string tmp_path(const std::string& name) {
  return std::string(PENTALIMIT_TMP_DIR) + "/" + name;
}

}  // namespace

TEST_CASE("cli la prints the exact matrix, trace and charpoly") {
  const auto r = run_cli("la " + data("heptagon.json"));
  REQUIRE(r.exit_code == 0);
  const json rep = json::parse(r.out);
  CHECK(rep["input"]["mode"] == "exact");
  CHECK(rep["results"]["matrix"][0] == json::array({"-6", "-4", "49"}));
  CHECK(rep["results"]["matrix"][1] == json::array({"-1", "-7", "51"}));
  CHECK(rep["results"]["matrix"][2] == json::array({"-1", "-3", "27"}));
  CHECK(rep["results"]["trace"] == "14");
  CHECK(rep["results"]["charpoly"] == json::array({"-14", "-111", "-116"}));
}

TEST_CASE("cli la --float prints decimals") {
  const auto r = run_cli("la --float " + data("heptagon.json"));
  REQUIRE(r.exit_code == 0);
  const json rep = json::parse(r.out);
  CHECK(rep["results"]["matrix"][0][2] == 49.0);
  CHECK(rep["results"]["trace"] == 14.0);
}

TEST_CASE("cli la exits 2 and names the collinear triple") {
  const auto r = run_cli("la " + data("collinear.json"));
  CHECK(r.exit_code == 2);
  const json rep = json::parse(r.out);
  CHECK(rep["error"]["code"] == "DegenerateTriple");
  CHECK(rep["error"]["index"] == 1);
}

TEST_CASE("cli la reads the axis-aligned hexagon") {
  const auto r = run_cli("la " + data("hexagon_axis.json"));
  REQUIRE(r.exit_code == 0);
  const json rep = json::parse(r.out);
  CHECK(rep["results"]["matrix"][0] == json::array({"3", "0", "8"}));
  CHECK(rep["results"]["matrix"][1] == json::array({"0", "3", "5"}));
  CHECK(rep["results"]["matrix"][2] == json::array({"0", "0", "6"}));
}

TEST_CASE("cli la output is byte deterministic") {
  const auto a = run_cli("la " + data("heptagon.json"));
  const auto b = run_cli("la " + data("heptagon.json"));
  CHECK(a.out == b.out);
}

TEST_CASE("cli limit reports the worked example with cross-check") {
  const auto r = run_cli("limit " + data("heptagon.json"));
  REQUIRE(r.exit_code == 0);
  const json rep = json::parse(r.out);
  CHECK(std::abs(rep["results"]["limit"][0].get<double>() - 1.609) < 1e-3);
  CHECK(std::abs(rep["results"]["limit"][1].get<double>() - 1.838) < 1e-3);
  CHECK(std::abs(rep["results"]["eigenvalue"].get<double>() - 19.878) < 1e-3);
  CHECK(rep["results"]["iteration_deviation"].get<double>() < 1e-6);
}

TEST_CASE("cli limit method variants") {
  const auto eigen = run_cli("limit --method eigen " + data("heptagon.json"));
  REQUIRE(eigen.exit_code == 0);
  CHECK_FALSE(json::parse(eigen.out)["results"].contains("iteration_deviation"));

  const auto iter = run_cli("limit --method iterate --tol 1e-8 " +
                            data("heptagon.json"));
  REQUIRE(iter.exit_code == 0);
  const json rep = json::parse(iter.out);
  CHECK(std::abs(rep["results"]["limit"][0].get<double>() - 1.609) < 1e-3);
}

TEST_CASE("cli limit on a float-mode regular pentagon") {
  const auto r = run_cli("limit " + data("pentagon_regular.json"));
  REQUIRE(r.exit_code == 0);
  const json rep = json::parse(r.out);
  CHECK(rep["input"]["mode"] == "float");
  CHECK(std::abs(rep["results"]["limit"][0].get<double>()) < 1e-9);
  CHECK(std::abs(rep["results"]["limit"][1].get<double>()) < 1e-9);
}

TEST_CASE("cli limit rejects non-convex input with exit 2") {
  const auto r = run_cli("limit --method eigen " + data("nonconvex.json"));
  CHECK(r.exit_code == 2);
  CHECK(json::parse(r.out)["error"]["code"] == "NotConvex");
}

TEST_CASE("cli iterate k=5 matches the printed figure") {
  const auto r = run_cli("iterate -k 5 " + data("heptagon.json"));
  REQUIRE(r.exit_code == 0);
  const json rep = json::parse(r.out);
  const auto& verts = rep["results"]["vertices"];
  REQUIRE(verts.size() == 7);
  // one of the innermost heptagon's vertices, to 1e-3
  bool found = false;
  for (const auto& v : verts) {
    const double x = pentalimit::Rat::parse(v[0].get<std::string>()).to_double();
    const double y = pentalimit::Rat::parse(v[1].get<std::string>()).to_double();
    if (std::abs(x - 1.4771) < 1e-3 && std::abs(y - 1.7189) < 1e-3) found = true;
  }
  CHECK(found);
}

TEST_CASE("cli iterate k=0 echoes the input") {
  const auto r = run_cli("iterate -k 0 " + data("heptagon.json"));
  REQUIRE(r.exit_code == 0);
  const json rep = json::parse(r.out);
  CHECK(rep["results"]["vertices"][0] == json::array({"2", "0"}));
}

TEST_CASE("cli iterate --exact-steps switches to floats") {
  const auto r = run_cli("iterate -k 3 --exact-steps 1 " + data("heptagon.json"));
  REQUIRE(r.exit_code == 0);
  const json rep = json::parse(r.out);
  CHECK(rep["results"]["vertices"][0][0].is_number());
}

TEST_CASE("cli iterate exits 4 on the square") {
  const auto r = run_cli("iterate -k 1 " + data("square_unit.json"));
  CHECK(r.exit_code == 4);
  const json rep = json::parse(r.out);
  CHECK(rep["error"]["code"] == "DegenerateOutput");
  CHECK(rep["error"]["index"] == 1);
}

TEST_CASE("cli collapse") {
  const auto r = run_cli("collapse --verify " + data("hexagon_axis.json"));
  REQUIRE(r.exit_code == 0);
  const json rep = json::parse(r.out);
  CHECK(rep["results"]["m"] == 3);
  CHECK(rep["results"]["collapse_point"] == json::array({"8/3", "5/3"}));
  CHECK(rep["results"]["incidence"]["status"] == "pass");
  CHECK(rep["results"]["incidence"]["meet_point"] ==
        json::array({"8/3", "5/3"}));

  const auto sq = run_cli("collapse " + data("square_unit.json"));
  REQUIRE(sq.exit_code == 0);
  CHECK(json::parse(sq.out)["results"]["collapse_point"] ==
        json::array({"1/2", "1/2"}));

  const auto bad = run_cli("collapse " + data("heptagon.json"));
  CHECK(bad.exit_code == 2);
}

TEST_CASE("cli verify passes on the heptagon and skips inapplicable checks") {
  const auto r = run_cli("verify --seed 5 " + data("heptagon.json"));
  REQUIRE(r.exit_code == 0);
  const json rep = json::parse(r.out);
  CHECK(rep["pass"] == true);
  bool saw_smalln_skip = false, saw_incidence_skip = false,
       saw_conservation_pass = false;
  for (const auto& c : rep["checks"]) {
    if (c["name"] == "smalln" && c["status"] == "skip") saw_smalln_skip = true;
    if (c["name"] == "incidence" && c["status"] == "skip")
      saw_incidence_skip = true;
    if (c["name"] == "conservation" && c["status"] == "pass")
      saw_conservation_pass = true;
  }
  CHECK(saw_smalln_skip);
  CHECK(saw_incidence_skip);
  CHECK(saw_conservation_pass);
}

TEST_CASE("cli verify smalln reports the matched shift on a pentagon") {
  const auto r = run_cli("verify --checks smalln " + data("pentagon_int.json"));
  REQUIRE(r.exit_code == 0);
  const json rep = json::parse(r.out);
  REQUIRE(rep["checks"].size() == 1);
  CHECK(rep["checks"][0]["status"] == "pass");
  CHECK(rep["checks"][0].contains("matching"));
}

TEST_CASE("cli verify detects an injected corruption") {
  const auto r = run_cli("verify --checks conservation --corrupt-la " +
                         data("heptagon.json"));
  CHECK(r.exit_code == 1);
  const json rep = json::parse(r.out);
  CHECK(rep["pass"] == false);
  CHECK(rep["checks"][0]["status"] == "fail");
}

TEST_CASE("cli verify runs incidence on axis-aligned input") {
  const auto r = run_cli("verify --checks incidence,trace " +
                         data("hexagon_axis.json"));
  REQUIRE(r.exit_code == 0);
  const json rep = json::parse(r.out);
  for (const auto& c : rep["checks"]) CHECK(c["status"] == "pass");
}

TEST_CASE("cli render writes a deterministic SVG") {
  const std::string out1 = tmp_path("fig_a.svg");
  const std::string out2 = tmp_path("fig_b.svg");
  const auto r1 = run_cli("render -k 5 --mark-limit -o " + out1 + " " +
                          data("heptagon.json"));
  REQUIRE(r1.exit_code == 0);
  const auto r2 = run_cli("render -k 5 --mark-limit -o " + out2 + " " +
                          data("heptagon.json"));
  REQUIRE(r2.exit_code == 0);
  const std::string svg1 = pentalimit::read_file(out1);
  const std::string svg2 = pentalimit::read_file(out2);
  CHECK(svg1 == svg2);
  CHECK(svg1.rfind("<?xml", 0) == 0);
  CHECK(svg1.find("<circle") != std::string::npos);

  const auto k0 = run_cli("render -k 0 -o " + tmp_path("fig_k0.svg") + " " +
                          data("heptagon.json"));
  CHECK(k0.exit_code == 0);

  const auto sq = run_cli("render -k 1 -o " + tmp_path("fig_sq.svg") + " " +
                          data("square_unit.json"));
  CHECK(sq.exit_code == 4);
}

TEST_CASE("cli csv input agrees with json input") {
  const auto a = run_cli("la " + data("heptagon.json"));
  const auto b = run_cli("la " + data("heptagon.csv"));
  REQUIRE(a.exit_code == 0);
  REQUIRE(b.exit_code == 0);
  CHECK(json::parse(a.out)["results"] == json::parse(b.out)["results"]);
}

TEST_CASE("cli rational file stays exact end to end") {
  const auto r = run_cli("la " + data("thirds.json"));
  REQUIRE(r.exit_code == 0);
  const json rep = json::parse(r.out);
  CHECK(rep["input"]["mode"] == "exact");
  CHECK(rep["results"]["trace"] == "10");
}
