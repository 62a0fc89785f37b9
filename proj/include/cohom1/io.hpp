#pragma once

// File formats: subalgebra descriptions (JSON), point clouds (CSV, PLY).

#include "cohom1/catalog.hpp"
#include "cohom1/subalgebra.hpp"

#include <json.hpp>

#include <charconv>
#include <cstdio>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <system_error>
#include <vector>

namespace cohom1 {

/// Thrown on malformed input files; `what()` carries the location.
struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Shortest decimal string that parses back to exactly v.
inline std::string format_double(double v)
{
  if (v == 0.0) return std::signbit(v) ? "-0" : "0";
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

/// Fixed number of significant digits, for human-facing reports.
inline std::string format_short(double v, int digits = 10)
{
  if (std::abs(v) < 1e-300) v = 0.0;
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*g", digits, v);
  return buf;
}

inline double parse_double(const std::string& s, const std::string& what)
{
  double v = 0.0;
  const char* b = s.data();
  const char* e = b + s.size();
  while (b < e && (*b == ' ' || *b == '\t')) ++b;
  while (e > b && (e[-1] == ' ' || e[-1] == '\t' || e[-1] == '\r')) --e;
  if (b < e && *b == '+') ++b;
  const auto res = std::from_chars(b, e, v);
  if (res.ec != std::errc() || res.ptr != e || b == e || !std::isfinite(v))
    throw ParseError(what + ": '" + s + "' is not a finite real number");
  return v;
}

/// "1,2,3" -> (1, 2, 3).
inline std::vector<double> parse_real_list(const std::string& s, const std::string& what)
{
  std::vector<double> out;
  std::string item;
  std::istringstream in(s);
  while (std::getline(in, item, ',')) out.push_back(parse_double(item, what));
  if (!s.empty() && s.back() == ',') throw ParseError(what + ": trailing comma");
  if (out.empty()) throw ParseError(what + ": empty list");
  return out;
}

// ---------------------------------------------------------------------------
// Subalgebra files
//
//   {"ambient_dim": 3,
//    "basis": [{"matrix": [[0,0,0],[0,0,-1],[0,-1,0]], "vector": [2,0,0]},
//              {"vector": [0,1,-1]}]}
//
// "matrix" may also be a flat row-major list; a missing matrix or vector is zero.

namespace detail {

inline int line_of_offset(const std::string& text, std::size_t offset)
{
  int line = 1;
  for (std::size_t i = 0; i < offset && i < text.size(); ++i)
    if (text[i] == '\n') ++line;
  return line;
}

inline double json_real(const nlohmann::json& j, const std::string& field)
{
  if (!j.is_number()) throw ParseError(field + ": expected a number");
  const double v = j.get<double>();
  if (!std::isfinite(v)) throw ParseError(field + ": expected a finite number");
  return v;
}

}  // namespace detail

inline Subalgebra parse_subalgebra_json(const std::string& text)
{
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError("line " + std::to_string(detail::line_of_offset(text, e.byte > 0 ? e.byte - 1 : 0)) +
                     ": malformed JSON (" + e.what() + ")");
  }
  if (!doc.is_object()) throw ParseError("top level: expected an object");
  if (!doc.contains("ambient_dim")) throw ParseError("ambient_dim: missing");
  if (!doc["ambient_dim"].is_number_integer()) throw ParseError("ambient_dim: expected an integer");
  const int d = doc["ambient_dim"].get<int>();
  if (d < 2) throw ParseError("ambient_dim: must be >= 2, got " + std::to_string(d));
  if (!doc.contains("basis") || !doc["basis"].is_array()) throw ParseError("basis: expected an array");
  const auto& basis = doc["basis"];
  if (basis.empty()) throw ParseError("basis: must be nonempty");

  std::vector<LieElement> out;
  for (std::size_t i = 0; i < basis.size(); ++i) {
    const std::string at = "basis[" + std::to_string(i) + "]";
    const auto& el = basis[i];
    if (!el.is_object()) throw ParseError(at + ": expected an object with 'matrix' and/or 'vector'");
    for (auto it = el.begin(); it != el.end(); ++it)
      if (it.key() != "matrix" && it.key() != "vector") throw ParseError(at + "." + it.key() + ": unknown field");
    LieElement e = LieElement::zero(d);
    if (el.contains("matrix")) {
      const auto& m = el["matrix"];
      const std::string f = at + ".matrix";
      if (!m.is_array()) throw ParseError(f + ": expected an array");
      if (!m.empty() && m[0].is_array()) {
        if (m.size() != static_cast<std::size_t>(d))
          throw ParseError(f + ": expected " + std::to_string(d) + " rows, got " + std::to_string(m.size()));
        for (int r = 0; r < d; ++r) {
          const std::string fr = f + "[" + std::to_string(r) + "]";
          if (!m[r].is_array() || m[r].size() != static_cast<std::size_t>(d))
            throw ParseError(fr + ": expected a row of " + std::to_string(d) + " numbers");
          for (int c = 0; c < d; ++c) e.linear(r, c) = detail::json_real(m[r][c], fr + "[" + std::to_string(c) + "]");
        }
      } else {
        if (m.size() != static_cast<std::size_t>(d * d))
          throw ParseError(f + ": expected " + std::to_string(d * d) + " entries (row-major), got " +
                           std::to_string(m.size()));
        for (int k = 0; k < d * d; ++k)
          e.linear(k / d, k % d) = detail::json_real(m[k], f + "[" + std::to_string(k) + "]");
      }
      if (!is_lorentz_algebra(e.linear, 1e-9))
        throw ParseError(f + ": not in so(" + std::to_string(d - 1) + ",1) (J X^T J != -X)");
    }
    if (el.contains("vector")) {
      const auto& v = el["vector"];
      const std::string f = at + ".vector";
      if (!v.is_array() || v.size() != static_cast<std::size_t>(d))
        throw ParseError(f + ": expected " + std::to_string(d) + " numbers");
      for (int k = 0; k < d; ++k) e.trans(k) = detail::json_real(v[k], f + "[" + std::to_string(k) + "]");
    }
    out.push_back(std::move(e));
  }
  return {std::move(out), d};
}

inline Subalgebra read_subalgebra_file(std::istream& in)
{
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_subalgebra_json(ss.str());
}

inline std::string to_json(const Subalgebra& h)
{
  nlohmann::json doc;
  doc["ambient_dim"] = h.ambient_dim;
  doc["basis"] = nlohmann::json::array();
  for (const auto& e : h.basis) {
    nlohmann::json m = nlohmann::json::array();
    for (int r = 0; r < e.dim(); ++r) {
      nlohmann::json row = nlohmann::json::array();
      for (int c = 0; c < e.dim(); ++c) row.push_back(e.linear(r, c));
      m.push_back(row);
    }
    nlohmann::json v = nlohmann::json::array();
    for (int k = 0; k < e.dim(); ++k) v.push_back(e.trans(k));
    doc["basis"].push_back({{"matrix", m}, {"vector", v}});
  }
  return doc.dump(2);
}

// ---------------------------------------------------------------------------
// Point clouds

struct PointCloud {
  int dim = 0;
  std::vector<Vector> points;
  std::vector<std::string> labels;
};

/// Compact label text: stratum kind, then invariants to 10 significant digits.
inline std::string label_text(const OrbitLabel& l)
{
  std::string s = to_string(stratum_kind(l));
  for (double v : l.invariants) s += ";" + format_short(v, 10);
  return s;
}

inline void write_csv(std::ostream& out, const PointCloud& cloud)
{
  for (int i = 0; i < cloud.dim; ++i) out << 'x' << (i + 1) << ',';
  out << "label\n";
  for (std::size_t r = 0; r < cloud.points.size(); ++r) {
    for (int i = 0; i < cloud.dim; ++i) out << format_double(cloud.points[r](i)) << ',';
    out << (r < cloud.labels.size() ? cloud.labels[r] : std::string()) << '\n';
  }
}

inline PointCloud read_csv(std::istream& in)
{
  PointCloud cloud;
  std::string line;
  if (!std::getline(in, line)) throw ParseError("line 1: missing header");
  if (!line.empty() && line.back() == '\r') line.pop_back();
  std::vector<std::string> head;
  {
    std::istringstream hs(line);
    std::string f;
    while (std::getline(hs, f, ',')) head.push_back(f);
  }
  if (head.size() < 2 || head.back() != "label") throw ParseError("line 1: header must end with 'label'");
  cloud.dim = static_cast<int>(head.size()) - 1;
  for (int i = 0; i < cloud.dim; ++i)
    if (head[i] != "x" + std::to_string(i + 1)) throw ParseError("line 1: column " + std::to_string(i + 1) + " must be x" + std::to_string(i + 1));
  int lineno = 1;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    Vector p(cloud.dim);
    std::size_t pos = 0;
    for (int i = 0; i < cloud.dim; ++i) {
      const auto comma = line.find(',', pos);
      if (comma == std::string::npos)
        throw ParseError("line " + std::to_string(lineno) + ": expected " + std::to_string(cloud.dim + 1) + " columns");
      p(i) = parse_double(line.substr(pos, comma - pos), "line " + std::to_string(lineno) + " x" + std::to_string(i + 1));
      pos = comma + 1;
    }
    cloud.points.push_back(p);
    cloud.labels.push_back(line.substr(pos));
  }
  return cloud;
}

/// ASCII PLY, vertices only. Coordinates beyond the third are extra properties.
inline void write_ply(std::ostream& out, const PointCloud& cloud)
{
  static const char* names[] = {"x", "y", "z", "w"};
  out << "ply\nformat ascii 1.0\ncomment orbit point cloud\n";
  out << "element vertex " << cloud.points.size() << '\n';
  for (int i = 0; i < cloud.dim; ++i) {
    out << "property double ";
    if (i < 4) out << names[i];
    else out << 'x' << (i + 1);
    out << '\n';
  }
  out << "end_header\n";
  for (const auto& p : cloud.points) {
    for (int i = 0; i < cloud.dim; ++i) out << (i ? " " : "") << format_double(p(i));
    out << '\n';
  }
}

}  // namespace cohom1
