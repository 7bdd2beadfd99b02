#pragma once

#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <utility>
#include <vector>

#include "ordtri/geometry.hpp"
#include "ordtri/point_set.hpp"

namespace ordtri {

struct LineEntry {
  CanonicalLine line;
  std::size_t multiplicity;
};

// Every line determined by a point set together with its multiplicity.
//
// Lines with three or more points are stored explicitly with their member
// indices; ordinary lines are implicit in the pair table. The pair table
// answers "which line does {i, j} span" in O(1), which is what triangle
// validation needs.
class IncidenceProfile {
 public:
  static constexpr std::uint32_t kOrdinary = std::numeric_limits<std::uint32_t>::max();

  std::size_t point_count() const { return n_; }
  // f(2): number of determined lines.
  std::size_t line_count() const { return ordinary_count_ + rich_.size(); }
  std::size_t ordinary_count() const { return ordinary_count_; }
  std::size_t max_multiplicity() const;

  // Lines with at least three points; members sorted ascending.
  const std::vector<std::vector<Index>>& rich_lines() const { return rich_; }

  // Id into rich_lines() of the line spanned by i and j, or kOrdinary.
  std::uint32_t line_id(Index i, Index j) const { return pair_line_[pair_slot(i, j)]; }
  std::size_t multiplicity(Index i, Index j) const {
    const auto id = line_id(i, j);
    return id == kOrdinary ? 2 : rich_[id].size();
  }
  // Collinearity of three distinct indices from the line table alone.
  bool collinear(Index i, Index j, Index k) const {
    const auto id = line_id(i, j);
    return id != kOrdinary && id == line_id(i, k);
  }

  // Number of lines with exactly m points (index m; entries 0 and 1 are zero).
  const std::vector<std::size_t>& histogram() const { return histogram_; }

  // Sum of C(l_i, 2) over all determined lines, computed from the lines.
  BigInt pair_sum() const;

  // All lines in canonical triple order. Materializes one CanonicalLine per
  // determined line, so it is O(n^2) on general-position input.
  std::vector<LineEntry> entries(const PointSet& points) const;

 private:
  friend IncidenceProfile enumerate_lines(const PointSet& points);

  std::size_t pair_slot(Index i, Index j) const {
    if (i > j) std::swap(i, j);
    return static_cast<std::size_t>(i) * (2 * n_ - i - 1) / 2 + (j - i - 1);
  }

  std::size_t n_ = 0;
  std::vector<std::uint32_t> pair_line_;
  std::vector<std::vector<Index>> rich_;
  std::size_t ordinary_count_ = 0;
  std::vector<std::size_t> histogram_;
};

// Throws Error("underdetermined") for fewer than two points.
IncidenceProfile enumerate_lines(const PointSet& points);

// f(k) = number of lines with at least k points. Throws for k < 2.
std::size_t spectrum_f(const IncidenceProfile& profile, std::size_t k);

enum class Degeneracy { TooSmall, AllCollinear, TwoLineUnion, NonDegenerate };

const char* to_string(Degeneracy d);

struct DegeneracyClass {
  Degeneracy tag;
  std::vector<CanonicalLine> witnesses;  // 1 for AllCollinear, 2 for TwoLineUnion
};

DegeneracyClass classify_degeneracy(const PointSet& points);

struct OrdinaryLine {
  CanonicalLine line;
  Index q;
  Index r;  // q < r
};

// Ordinary line with the smallest canonical triple. Throws
// Error("Sylvester–Gallai hypothesis violated") on collinear or tiny input.
OrdinaryLine find_ordinary_line(const PointSet& points, const IncidenceProfile& profile);
OrdinaryLine find_ordinary_line(const PointSet& points);

// Multiplicity of the line through p and q; throws if either is not in the
// set or they coincide.
std::size_t pair_line_multiplicity(const IncidenceProfile& profile, const PointSet& points, const Point& p,
                                   const Point& q);

bool is_collinear(const PointSet& points);

}  // namespace ordtri
