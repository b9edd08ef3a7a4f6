#include "pentalimit/polygon_doc.hpp"

#include <array>
#include <cctype>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace pentalimit {

namespace {

using nlohmann::json;
using nlohmann::ordered_json;

bool token_is_float(const std::string& tok) {
  return tok.find('.') != std::string::npos ||
         tok.find('e') != std::string::npos ||
         tok.find('E') != std::string::npos;
}

struct RawCoord {
  std::string text;   // textual form when given as string/CSV token
  double number = 0;  // numeric form when given as a JSON number
  bool is_text = false;
  bool forces_float = false;
};

PolygonDocument assemble(const std::string& name,
                         const std::vector<std::array<RawCoord, 2>>& coords,
                         const std::string& mode_hint) {
  PolygonDocument doc;
  doc.name = name;

  bool any_float = false;
  for (const auto& v : coords)
    for (const auto& c : v)
      if (c.forces_float) any_float = true;

  if (mode_hint == "exact")
    doc.mode = ScalarMode::exact;
  else if (mode_hint == "float")
    doc.mode = ScalarMode::floating;
  else if (mode_hint.empty())
    doc.mode = any_float ? ScalarMode::floating : ScalarMode::exact;
  else
    throw Error(ErrorCode::InvalidInput, "unknown mode '" + mode_hint + "'");

  auto to_rat = [](const RawCoord& c) {
    return c.is_text ? Rat::parse(c.text) : Rat::from_double(c.number);
  };
  auto to_dbl = [](const RawCoord& c) {
    return c.is_text ? Rat::parse(c.text).to_double() : c.number;
  };

  for (const auto& v : coords) {
    if (doc.mode == ScalarMode::exact)
      doc.exact.push_back({to_rat(v[0]), to_rat(v[1])});
    else
      doc.floating.push_back({to_dbl(v[0]), to_dbl(v[1])});
  }

  if (doc.size() < 3)
    throw Error(ErrorCode::InvalidInput, "polygon needs at least 3 vertices");
  return doc;
}

RawCoord raw_from_json(const json& j) {
  RawCoord c;
  if (j.is_string()) {
    c.is_text = true;
    c.text = j.get<std::string>();
  } else if (j.is_number_integer()) {
    c.is_text = true;
    c.text = std::to_string(j.get<long long>());
  } else if (j.is_number_float()) {
    c.number = j.get<double>();
    c.forces_float = true;
  } else {
    throw Error(ErrorCode::InvalidInput, "coordinate must be number or string");
  }
  return c;
}

}  // namespace

PolygonDocument PolygonDocument::parse_json(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw Error(ErrorCode::InvalidInput, std::string("bad JSON: ") + e.what());
  }
  if (!j.is_object() || !j.contains("vertices") || !j["vertices"].is_array())
    throw Error(ErrorCode::InvalidInput, "expected {\"vertices\": [[x, y], ...]}");

  std::vector<std::array<RawCoord, 2>> coords;
  for (const auto& v : j["vertices"]) {
    if (!v.is_array() || v.size() != 2)
      throw Error(ErrorCode::InvalidInput, "each vertex must be an [x, y] pair");
    coords.push_back({raw_from_json(v[0]), raw_from_json(v[1])});
  }
  const std::string name = j.value("name", std::string());
  const std::string hint = j.value("mode", std::string());
  return assemble(name, coords, hint);
}

PolygonDocument PolygonDocument::parse_csv(const std::string& text) {
  std::vector<std::array<RawCoord, 2>> coords;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    for (char& ch : line)
      if (ch == ',' || ch == ';' || ch == '\t') ch = ' ';
    std::istringstream ls(line);
    std::string xs, ys;
    if (!(ls >> xs)) continue;  // blank line
    if (xs[0] == '#') continue;
    if (!(ls >> ys))
      throw Error(ErrorCode::InvalidInput, "CSV line needs two coordinates");
    RawCoord cx, cy;
    cx.is_text = !token_is_float(xs);
    cy.is_text = !token_is_float(ys);
    if (cx.is_text) cx.text = xs; else { cx.number = std::stod(xs); cx.forces_float = true; }
    if (cy.is_text) cy.text = ys; else { cy.number = std::stod(ys); cy.forces_float = true; }
    coords.push_back({cx, cy});
  }
  return assemble("", coords, "");
}

PolygonDocument PolygonDocument::parse(const std::string& text) {
  for (char c : text) {
    if (std::isspace(static_cast<unsigned char>(c))) continue;
    return c == '{' ? parse_json(text) : parse_csv(text);
  }
  throw Error(ErrorCode::InvalidInput, "empty input");
}

PolygonDocument PolygonDocument::load(const std::string& path) {
  return parse(read_file(path));
}

ordered_json PolygonDocument::to_json() const {
  ordered_json j;
  if (!name.empty()) j["name"] = name;
  j["mode"] = mode_name();
  ordered_json verts = ordered_json::array();
  if (mode == ScalarMode::exact) {
    for (const auto& p : exact)
      verts.push_back(ordered_json::array({p.x.str(), p.y.str()}));
  } else {
    for (const auto& p : floating)
      verts.push_back(ordered_json::array({p.x, p.y}));
  }
  j["vertices"] = std::move(verts);
  return j;
}

Polygon<Rat> PolygonDocument::exact_polygon() const {
  if (mode != ScalarMode::exact)
    throw Error(ErrorCode::InvalidInput,
                "operation requires exact-mode input");
  return Polygon<Rat>(exact);
}

Polygon<double> PolygonDocument::float_polygon() const {
  if (mode == ScalarMode::floating) return Polygon<double>(floating);
  std::vector<Point2<double>> pts;
  pts.reserve(exact.size());
  for (const auto& p : exact) pts.push_back({p.x.to_double(), p.y.to_double()});
  return Polygon<double>(std::move(pts));
}

std::string fnv1a_hex(const std::string& bytes) {
  std::uint64_t h = 14695981039346656037ull;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 1099511628211ull;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in)
    throw Error(ErrorCode::InvalidInput, "cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace pentalimit
