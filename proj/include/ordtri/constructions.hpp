#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ordtri/geometry.hpp"
#include "ordtri/point_set.hpp"

namespace ordtri {

// {0..g-1}^2 in row-major order (x varies fastest within a row of fixed y).
PointSet gen_grid(std::int64_t g);

// (1..n1, 0) followed by (0, 1..n2).
PointSet gen_two_line_union(std::int64_t n1, std::int64_t n2);

// P1 together with the intersection of `ell` with every line P1 determines.
// Throws when P1 is collinear, a point of P1 lies on ell, or a determined line
// is parallel to (or equal to) ell.
PointSet gen_projection_augmented(const PointSet& p1, const CanonicalLine& ell);

// (0,0), (1,0), ..., (k-1,0) followed by `extras`.
PointSet gen_rich_line_plus(std::int64_t k, const std::vector<Point>& extras);

// Name of the sampler behind gen_random. Bump the suffix if the sampling
// procedure ever changes; seeded outputs are only stable within a version.
inline constexpr const char* kRandomGenerator = "mt19937_64-rejection/v1";

// n distinct integer points drawn uniformly from [0, bound]^2.
PointSet gen_random(std::int64_t n, std::int64_t bound, std::uint64_t seed);

// (t, t^3) for t = -m..m.
PointSet gen_cubic_progression(std::int64_t m);

}  // namespace ordtri
