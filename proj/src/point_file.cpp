#include "ordtri/point_file.hpp"

#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <vector>

namespace ordtri {

namespace {

Rational parse_coordinate(const std::string& token, std::size_t line_no) {
  if (token.find_first_of(".eE") != std::string::npos) {
    throw ParseError(line_no, "floating-point literal '" + token + "' rejected; use an integer or p/q");
  }
  try {
    return Rational::parse(token);
  } catch (const Error& e) {
    throw ParseError(line_no, e.what());
  }
}

}  // namespace

PointSet parse_point_file(std::istream& in) {
  std::vector<Point> pts;
  std::map<Point, std::size_t> first_seen;
  std::string duplicates;
  std::string raw;
  std::size_t line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    const auto start = raw.find_first_not_of(" \t\r");
    if (start == std::string::npos || raw[start] == '#') continue;
    std::istringstream fields(raw);
    std::string xs, ys, extra;
    if (!(fields >> xs >> ys) || (fields >> extra)) throw ParseError(line_no, "expected two coordinates 'x y'");
    Point p{parse_coordinate(xs, line_no), parse_coordinate(ys, line_no)};
    auto [it, inserted] = first_seen.emplace(p, line_no);
    if (!inserted) {
      if (!duplicates.empty()) duplicates += ", ";
      duplicates += std::to_string(it->second) + " and " + std::to_string(line_no);
    }
    pts.push_back(std::move(p));
  }
  if (!duplicates.empty()) throw ParseError(0, "duplicate points on lines " + duplicates);
  return PointSet(std::move(pts));
}

PointSet parse_point_file(std::string_view text) {
  std::istringstream in{std::string(text)};
  return parse_point_file(in);
}

PointSet load_point_file(const std::string& path) {
  if (path == "-") return parse_point_file(std::cin);
  std::ifstream in(path);
  if (!in) throw ParseError(0, "cannot open '" + path + "'");
  return parse_point_file(in);
}

void write_point_file(std::ostream& out, const PointSet& points) {
  for (const auto& p : points) out << p.x.to_string() << ' ' << p.y.to_string() << '\n';
}

}  // namespace ordtri
