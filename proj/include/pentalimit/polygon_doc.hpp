#pragma once

#include <nlohmann/json.hpp>

#include <string>
#include <vector>

#include "pentalimit/geom.hpp"

namespace pentalimit {

enum class ScalarMode { exact, floating };

// Parsed polygon input. Exact mode is used whenever every coordinate arrives
// as an integer, a "p/q" string, or a decimal string; a bare JSON float (or a
// bare decimal token in CSV) forces float mode. An explicit mode hint wins
// and triggers the corresponding explicit conversion.
struct PolygonDocument {
  std::string name;  // empty when absent
  ScalarMode mode = ScalarMode::exact;
  std::vector<Point2<Rat>> exact;        // populated in exact mode
  std::vector<Point2<double>> floating;  // populated in float mode

  static PolygonDocument parse_json(const std::string& text);
  static PolygonDocument parse_csv(const std::string& text);
  // Dispatches on content: leading '{' means JSON, anything else CSV.
  static PolygonDocument parse(const std::string& text);
  static PolygonDocument load(const std::string& path);

  nlohmann::ordered_json to_json() const;

  std::size_t size() const {
    return mode == ScalarMode::exact ? exact.size() : floating.size();
  }

  const char* mode_name() const {
    return mode == ScalarMode::exact ? "exact" : "float";
  }

  Polygon<Rat> exact_polygon() const;    // requires exact mode
  Polygon<double> float_polygon() const;  // works in either mode
};

// FNV-1a 64-bit, as a 16-digit hex string; used as the input digest in
// reports.
std::string fnv1a_hex(const std::string& bytes);

std::string read_file(const std::string& path);

}  // namespace pentalimit
