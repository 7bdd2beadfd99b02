#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "ordtri/geometry.hpp"

namespace ordtri {

using Index = std::uint32_t;

// An ordered set of pairwise distinct points. Point order is the identity
// used in every index-based result.
//
// Alongside the rational coordinates the set keeps an integer frame: all
// points multiplied by the lcm of their denominators. Collinearity is
// invariant under that scaling, so index predicates run on integers, in
// 64/128-bit words when every scaled coordinate fits and in GMP otherwise.
class PointSet {
 public:
  PointSet() = default;
  // Throws Error listing the duplicated positions if points repeat.
  explicit PointSet(std::vector<Point> points);

  static PointSet from_integers(std::initializer_list<std::pair<long, long>> coords);
  static PointSet from_integers(std::span<const std::pair<long, long>> coords);

  std::size_t size() const { return points_.size(); }
  bool empty() const { return points_.empty(); }
  const Point& operator[](std::size_t i) const { return points_[i]; }
  const std::vector<Point>& points() const { return points_; }
  auto begin() const { return points_.begin(); }
  auto end() const { return points_.end(); }

  std::optional<Index> index_of(const Point& p) const;

  // Subset in the order given by `indices`.
  PointSet subset(std::span<const Index> indices) const;

  // Exact orientation of points i, j, k.
  int orientation(Index i, Index j, Index k) const;

  bool word_sized() const { return word_sized_; }
  const BigInt& frame_scale() const { return scale_; }
  const BigInt& frame_x(Index i) const { return xs_[i]; }
  const BigInt& frame_y(Index i) const { return ys_[i]; }
  std::int64_t frame_x64(Index i) const { return xs64_[i]; }
  std::int64_t frame_y64(Index i) const { return ys64_[i]; }

  // Canonical line through points i and j (i != j).
  CanonicalLine line(Index i, Index j) const;

 private:
  std::vector<Point> points_;
  std::map<Point, Index> lookup_;
  BigInt scale_ = 1;
  std::vector<BigInt> xs_, ys_;
  bool word_sized_ = true;
  std::vector<std::int64_t> xs64_, ys64_;
};

}  // namespace ordtri
