#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "ordtri/graph.hpp"
#include "ordtri/incidence.hpp"
#include "ordtri/rational.hpp"
#include "ordtri/triangles.hpp"

namespace ordtri {

// One verified inequality, normalized so that satisfied <=> checked <= threshold.
struct BoundReport {
  std::string name;
  std::string instance;
  Rational checked;
  Rational threshold;
  bool satisfied = false;
  double ratio = 0.0;  // checked / threshold, informational only
  bool vacuous = false;
  std::string note;
};

// c' n^2 / k^3 when k^2 <= n, else c' n / k.
Rational st_threshold(std::int64_t n, std::int64_t k, std::int64_t c_prime);

// f(k) <= st_threshold(n, k, c') for every k from 2 to the largest multiplicity.
std::vector<BoundReport> check_st(const IncidenceProfile& profile, std::int64_t c_prime);

// I <= 2.5 m^{2/3} n^{2/3} + m + n, decided exactly as
// 8 (I - m - n)^3 <= 125 (m n)^2.
BoundReport check_incidence_bound(const PointSet& points, std::span<const CanonicalLine> lines);
// Same bound for the determined lines of a profile, where I = sum of l_i.
BoundReport check_incidence_bound(const IncidenceProfile& profile);

// m (4m - n^2) / (3n); negative values are vacuous.
Rational eg_lower_bound(std::int64_t n, std::int64_t m);

// t3(G) >= eg_lower_bound(n, m), reported as checked = bound, threshold = t3.
BoundReport check_eg(const SimpleGraph& g);

// c = 96 c', alpha = 4 / (c + 1).
Constants derive_constants(std::int64_t c_prime);

// Requires every l_i <= alpha n; throws Error("case (ii) hypothesis fails")
// otherwise. Returns, in order: the low range (c < l_i <= sqrt n) against
// 8c'n^2/(c+1), the high range (l_i > max(c, sqrt n), l_i <= alpha n) against
// 16c'n^2/(c+1), their union against 24c'n^2/(c+1), and the edge-count
// corollary |E(G)| >= C(n,2) - 24c'n^2/(c+1).
std::vector<BoundReport> check_medium_sum(const IncidenceProfile& profile, const Constants& constants);

struct BoundSuite {
  std::vector<BoundReport> reports;
  std::vector<std::string> skipped;
  bool all_satisfied() const;
};

// Every applicable theorem-backed check for one point set.
BoundSuite verify_bounds(const PointSet& points, const IncidenceProfile& profile, const Constants& constants);

}  // namespace ordtri
