#pragma once

#include <istream>
#include <ostream>
#include <string>
#include <string_view>

#include "ordtri/error.hpp"
#include "ordtri/point_set.hpp"

namespace ordtri {

// Input error tied to a 1-based line of a point file (0 when not line-specific).
class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : Error(line ? "line " + std::to_string(line) + ": " + what : what), line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

// One point per line as "x y", each coordinate an integer or "p/q". Blank
// lines and lines starting with '#' are skipped. Decimal literals are rejected
// and duplicate points are reported with both line numbers.
PointSet parse_point_file(std::istream& in);
PointSet parse_point_file(std::string_view text);
PointSet load_point_file(const std::string& path);  // "-" reads standard input

void write_point_file(std::ostream& out, const PointSet& points);

}  // namespace ordtri
