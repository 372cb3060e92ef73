#include "cantor/serialize.hpp"

#include <cstdio>
#include <sstream>

#include "cantor/errors.hpp"

namespace cantor {

namespace {

constexpr double kSvgWidth = 1000.0;
constexpr double kSvgHeight = 600.0;
constexpr double kSvgYRange = 1.3;

std::string svg_x(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f", x * kSvgWidth);
  return buf;
}

std::string svg_y(double y) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f", kSvgHeight / 2 - y * (kSvgHeight / 2) / kSvgYRange);
  return buf;
}

void add_exact(Json& j, const std::string& key, const Rational& r, int digits) {
  j[key] = r.to_string();
  j[key + "_float"] = r.to_decimal(digits);
}

Rational exact_field(const Json& j, const char* key) {
  if (!j.contains(key) || !j.at(key).is_string()) {
    throw ValidationError(std::string("certificate field '") + key + "' missing or not a p/q string");
  }
  return Rational::parse(j.at(key).get<std::string>());
}

unsigned level_field(const Json& j, const char* key) {
  if (!j.contains(key) || !j.at(key).is_number_unsigned()) {
    throw ValidationError(std::string("certificate field '") + key + "' missing or not a level");
  }
  return j.at(key).get<unsigned>();
}

}  // namespace

std::string to_csv(const PLFunction& f, int float_digits) {
  std::ostringstream os;
  os << "x_exact,y_exact,x_float,y_float\n";
  for (const auto& p : f.breakpoints()) {
    os << p.x.to_string() << ',' << p.y.to_string() << ',' << p.x.to_decimal(float_digits) << ','
       << p.y.to_decimal(float_digits) << '\n';
  }
  return os.str();
}

PLFunction parse_breakpoint_csv(const std::string& text) {
  std::istringstream is(text);
  std::string line;
  if (!std::getline(is, line) || line != "x_exact,y_exact,x_float,y_float") {
    throw ParseError("breakpoint CSV: missing header");
  }
  std::vector<Breakpoint> pts;
  while (std::getline(is, line)) {
    if (line.empty()) continue;
    const auto c1 = line.find(',');
    const auto c2 = c1 == std::string::npos ? c1 : line.find(',', c1 + 1);
    if (c2 == std::string::npos) throw ParseError("breakpoint CSV: short row '" + line + "'");
    pts.push_back({Rational::parse(line.substr(0, c1)), Rational::parse(line.substr(c1 + 1, c2 - c1 - 1))});
  }
  return PLFunction::make(std::move(pts));
}

Json to_json(const PLFunction& f, int float_digits) {
  Json rows = Json::array();
  for (const auto& p : f.breakpoints()) {
    Json row;
    add_exact(row, "x", p.x, float_digits);
    add_exact(row, "y", p.y, float_digits);
    rows.push_back(std::move(row));
  }
  Json j;
  j["breakpoint_count"] = f.size();
  j["breakpoints"] = std::move(rows);
  return j;
}

std::string to_svg(const PLFunction& f) {
  std::ostringstream os;
  os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
     << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"1000\" height=\"600\" viewBox=\"0 0 1000 600\">\n"
     << "  <g stroke=\"#999\" stroke-width=\"1\">\n"
     << "    <line x1=\"0\" y1=\"" << svg_y(0) << "\" x2=\"1000\" y2=\"" << svg_y(0) << "\"/>\n";
  for (double x : {0.0, 1.0 / 3.0, 2.0 / 3.0, 1.0}) {
    os << "    <line x1=\"" << svg_x(x) << "\" y1=\"0\" x2=\"" << svg_x(x) << "\" y2=\"600\"/>\n";
  }
  os << "  </g>\n  <polyline fill=\"none\" stroke=\"#1f4e9c\" stroke-width=\"1\" points=\"";
  bool first = true;
  for (const auto& p : f.breakpoints()) {
    if (!first) os << ' ';
    first = false;
    os << svg_x(p.x.to_double()) << ',' << svg_y(p.y.to_double());
  }
  os << "\"/>\n</svg>\n";
  return os.str();
}

Json to_json(const WitnessFamily& w, const Rational& epsilon, const WitnessVerdict& verdict,
             int float_digits) {
  Json j;
  j["policy"] = std::string(to_string(w.policy));
  add_exact(j, "delta", w.delta, float_digits);
  add_exact(j, "epsilon", epsilon, float_digits);
  add_exact(j, "delta_bar", w.delta_bar, float_digits);
  j["k"] = w.k;
  j["m"] = w.m;
  Json intervals = Json::array();
  for (const auto& iv : w.intervals) {
    Json row;
    row["level"] = iv.level;
    add_exact(row, "a", iv.a, float_digits);
    add_exact(row, "b", iv.b, float_digits);
    intervals.push_back(std::move(row));
  }
  j["intervals"] = std::move(intervals);
  add_exact(j, "length_sum", w.length_sum, float_digits);
  add_exact(j, "variation_sum", w.variation_sum, float_digits);
  j["verification"] = {
      {"passed", verdict.passed()},
      {"length_sum_matches", verdict.length_sum_matches},
      {"length_below_delta", verdict.length_below_delta},
      {"left_ends_vanish", verdict.left_ends_vanish},
      {"midpoints_at_height", verdict.midpoints_at_height},
      {"variation_sum_matches", verdict.variation_sum_matches},
      {"exceeds_harmonic", verdict.exceeds_harmonic},
      {"exceeds_epsilon", verdict.exceeds_epsilon},
  };
  return j;
}

ParsedCertificate witness_from_json(const Json& j) {
  ParsedCertificate out;
  auto& w = out.family;
  if (!j.contains("policy") || !j.at("policy").is_string()) {
    throw ValidationError("certificate field 'policy' missing");
  }
  w.policy = parse_policy(j.at("policy").get<std::string>());
  w.delta = exact_field(j, "delta");
  out.epsilon = exact_field(j, "epsilon");
  w.delta_bar = exact_field(j, "delta_bar");
  w.k = level_field(j, "k");
  w.m = level_field(j, "m");
  if (!j.contains("intervals") || !j.at("intervals").is_array()) {
    throw ValidationError("certificate field 'intervals' missing");
  }
  for (const auto& row : j.at("intervals")) {
    w.intervals.push_back({level_field(row, "level"), exact_field(row, "a"), exact_field(row, "b")});
  }
  w.length_sum = exact_field(j, "length_sum");
  w.variation_sum = exact_field(j, "variation_sum");
  return out;
}

Json to_json(const CutReport& report, int float_digits) {
  Json j;
  add_exact(j, "x", report.x, float_digits);
  j["depth"] = report.depth;
  j["policy"] = std::string(to_string(report.policy));
  j["positive_values_exist"] = report.positive_values_exist;
  j["cuts_at_every_radius"] = report.cuts_at_every_radius;
  Json radii = Json::array();
  for (const auto& f : report.findings) {
    Json row;
    row["exponent"] = f.exponent;
    add_exact(row, "radius", f.radius, float_digits);
    for (const auto* side : {&f.negative, &f.positive}) {
      const char* key = side == &f.negative ? "negative" : "positive";
      if (*side) {
        Json p;
        add_exact(p, "x", (*side)->x, float_digits);
        add_exact(p, "value", (*side)->value, float_digits);
        p["gap"] = (*side)->gap.to_string();
        row[key] = std::move(p);
      } else {
        row[key] = nullptr;
      }
    }
    radii.push_back(std::move(row));
  }
  j["radii"] = std::move(radii);
  return j;
}

Json location_to_json(const Rational& x, const CantorLocation& loc) {
  Json j;
  j["x"] = x.to_string();
  j["in_cantor"] = in_cantor(loc);
  if (const auto* gap = std::get_if<InGap>(&loc)) {
    const Interval iv = gap_interval(gap->address);
    j["gap"] = gap->address.to_string();
    j["left"] = iv.left().to_string();
    j["right"] = iv.right().to_string();
    j["offset"] = gap->offset.to_string();
  }
  return j;
}

}  // namespace cantor
