#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "ordtri/error.hpp"
#include "ordtri/graph.hpp"
#include "ordtri/incidence.hpp"
#include "ordtri/point_set.hpp"
#include "ordtri/rational.hpp"

namespace ordtri {

// Richness threshold c, incidence constant c' and the case split ratio
// alpha = 4 / (c + 1).
struct Constants {
  std::int64_t c = 12000;
  std::int64_t c_prime = 125;

  Rational alpha() const { return Rational(BigInt(4), BigInt(c + 1)); }
  // l > alpha * n, decided as l * (c + 1) > 4 * n.
  bool exceeds_alpha(std::size_t multiplicity, std::size_t n) const;
};

// Library-level gate: c >= 2 (the CLI additionally requires c >= 3).
Constants make_constants(std::int64_t c, std::int64_t c_prime = 125);

using Triangle = std::array<Index, 3>;  // ascending

// Raised when a case-specific precondition fails; callers fall back.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

bool validate_c_ordinary(const PointSet& points, const IncidenceProfile& profile, Triangle t, std::int64_t c);

struct OracleResult {
  std::uint64_t count = 0;
  std::vector<Triangle> triangles;  // first `limit` in lexicographic order
};

// Brute force over all triples, O(1) per triple from the pair table.
OracleResult enumerate_all_c_ordinary(const PointSet& points, const IncidenceProfile& profile, std::int64_t c,
                                      std::optional<std::size_t> limit = std::nullopt);
OracleResult enumerate_all_c_ordinary(const PointSet& points, std::int64_t c,
                                      std::optional<std::size_t> limit = std::nullopt);

// Edge {p, p'} iff the line through them has at most c points.
SimpleGraph build_poor_graph(const PointSet& points, const IncidenceProfile& profile, std::int64_t c);

struct RichCaseWitness {
  CanonicalLine rich_line;
  std::size_t multiplicity;
  Index q, r;                          // ordinary pair of P minus the rich line
  std::vector<Index> p_q, p_r;         // rich-line points whose line to q (r) has > c points
  std::vector<Index> collinear_with_qr;  // at most one point: where line qr meets the rich line
  std::vector<Index> survivors;
  std::size_t qr_multiplicity;
};

struct RichCaseResult {
  RichCaseWitness witness;
  std::vector<Triangle> triangles;
};

// Members of the line the dispatcher would treat as rich: maximum
// multiplicity, ties broken by canonical triple.
std::vector<Index> richest_line(const PointSet& points, const IncidenceProfile& profile);

// Throws PreconditionError when the line is not rich enough or the points
// off it are collinear.
RichCaseResult find_case_rich_line(const PointSet& points, const IncidenceProfile& profile,
                                   std::span<const Index> line_members, const Constants& constants);

struct PoorCaseResult {
  std::vector<Triangle> triangles;
  std::uint64_t count = 0;               // non-collinear triangles of G
  std::uint64_t collinear_filtered = 0;  // triangles of G on one line
  std::size_t edge_count = 0;
};

PoorCaseResult find_case_poor_graph(const PointSet& points, const IncidenceProfile& profile, std::int64_t c,
                                    std::optional<std::size_t> limit = std::nullopt);

// Count-only variant: t3(G) by bitset/merge counting minus the collinear
// triangles of G, which are exactly the triples on lines with 3..c points.
PoorCaseResult count_case_poor_graph(const PointSet& points, const IncidenceProfile& profile, std::int64_t c);

enum class Mode { Fast, Exhaustive, CountOnly };
enum class CaseTaken { RichLine, PoorGraph, BruteForceFallback, Degenerate };

const char* to_string(Mode m);
const char* to_string(CaseTaken c);

struct TriangleReport {
  DegeneracyClass classification;
  CaseTaken case_taken = CaseTaken::Degenerate;
  Constants constants;
  std::vector<Triangle> triangles;
  bool truncated = false;
  std::uint64_t count = 0;
  bool count_exact = true;  // false: count is a lower bound
  std::optional<RichCaseWitness> rich;
  std::optional<std::size_t> poor_edge_count;
  std::optional<std::uint64_t> collinear_filtered;
};

TriangleReport find_c_ordinary(const PointSet& points, const Constants& constants, Mode mode,
                               std::optional<std::size_t> limit = std::nullopt);
// Same, reusing a profile already computed for `points` (needs >= 2 points).
TriangleReport find_c_ordinary(const PointSet& points, const IncidenceProfile& profile, const Constants& constants,
                               Mode mode, std::optional<std::size_t> limit = std::nullopt);

}  // namespace ordtri
