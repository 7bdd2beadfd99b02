#include "ordtri/constructions.hpp"

#include <limits>
#include <random>
#include <set>
#include <variant>

#include "ordtri/error.hpp"
#include "ordtri/incidence.hpp"

namespace ordtri {

namespace {

Point ipt(std::int64_t x, std::int64_t y) { return Point{Rational(x), Rational(y)}; }

// Uniform draw from [0, bound] by rejection on the top of the 64-bit range.
std::uint64_t draw(std::mt19937_64& rng, std::uint64_t bound) {
  const std::uint64_t span = bound + 1;
  if (span == 0) return rng();
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % span;
  std::uint64_t v;
  do {
    v = rng();
  } while (v >= limit);
  return v % span;
}

}  // namespace

PointSet gen_grid(std::int64_t g) {
  if (g < 1) throw Error("grid size must be at least 1");
  std::vector<Point> pts;
  pts.reserve(static_cast<std::size_t>(g * g));
  for (std::int64_t y = 0; y < g; ++y) {
    for (std::int64_t x = 0; x < g; ++x) pts.push_back(ipt(x, y));
  }
  return PointSet(std::move(pts));
}

PointSet gen_two_line_union(std::int64_t n1, std::int64_t n2) {
  if (n1 < 1 || n2 < 1) throw Error("two-line sizes must be at least 1");
  std::vector<Point> pts;
  for (std::int64_t i = 1; i <= n1; ++i) pts.push_back(ipt(i, 0));
  for (std::int64_t j = 1; j <= n2; ++j) pts.push_back(ipt(0, j));
  return PointSet(std::move(pts));
}

PointSet gen_projection_augmented(const PointSet& p1, const CanonicalLine& ell) {
  if (p1.size() < 3 || is_collinear(p1)) throw Error("P1 must be non-collinear");
  for (const auto& p : p1) {
    if (incident(ell, p)) throw Error("point " + to_string(p) + " of P1 lies on the projection line");
  }
  const auto profile = enumerate_lines(p1);
  std::vector<Point> pts = p1.points();
  std::set<Point> added;
  for (const auto& entry : profile.entries(p1)) {
    auto hit = intersect(ell, entry.line);
    const auto* point = std::get_if<Point>(&hit);
    if (!point) throw Error("ℓ not generic: determined line " + entry.line.to_string() + " does not cross it");
    if (added.insert(*point).second) pts.push_back(*point);
  }
  return PointSet(std::move(pts));
}

PointSet gen_rich_line_plus(std::int64_t k, const std::vector<Point>& extras) {
  if (k < 2) throw Error("rich line needs k >= 2");
  std::vector<Point> pts;
  for (std::int64_t i = 0; i < k; ++i) pts.push_back(ipt(i, 0));
  for (const auto& e : extras) {
    if (e.y.sign() == 0) throw Error("extra point " + to_string(e) + " lies on the x-axis");
  }
  if (extras.size() >= 3 && is_collinear(PointSet(extras))) throw Error("extra points are collinear");
  pts.insert(pts.end(), extras.begin(), extras.end());
  return PointSet(std::move(pts));
}

PointSet gen_random(std::int64_t n, std::int64_t bound, std::uint64_t seed) {
  if (n < 1) throw Error("random set needs n >= 1");
  if (bound < n) throw Error("cannot place " + std::to_string(n) + " distinct points: bound must be >= n");
  std::mt19937_64 rng(seed);
  std::set<std::pair<std::int64_t, std::int64_t>> seen;
  std::vector<Point> pts;
  pts.reserve(static_cast<std::size_t>(n));
  while (pts.size() < static_cast<std::size_t>(n)) {
    const auto x = static_cast<std::int64_t>(draw(rng, static_cast<std::uint64_t>(bound)));
    const auto y = static_cast<std::int64_t>(draw(rng, static_cast<std::uint64_t>(bound)));
    if (seen.emplace(x, y).second) pts.push_back(ipt(x, y));
  }
  return PointSet(std::move(pts));
}

PointSet gen_cubic_progression(std::int64_t m) {
  if (m < 1) throw Error("cubic progression needs m >= 1");
  std::vector<Point> pts;
  for (std::int64_t t = -m; t <= m; ++t) pts.push_back(ipt(t, t * t * t));
  return PointSet(std::move(pts));
}

}  // namespace ordtri
