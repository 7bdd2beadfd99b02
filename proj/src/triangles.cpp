#include "ordtri/triangles.hpp"

#include <algorithm>

namespace ordtri {

bool Constants::exceeds_alpha(std::size_t multiplicity, std::size_t n) const {
  return BigInt(multiplicity) * BigInt(c + 1) > BigInt(4) * BigInt(n);
}

Constants make_constants(std::int64_t c, std::int64_t c_prime) {
  if (c < 2) throw Error("c must be at least 2");
  if (c_prime < 1) throw Error("c' must be positive");
  return Constants{c, c_prime};
}

const char* to_string(Mode m) {
  switch (m) {
    case Mode::Fast: return "fast";
    case Mode::Exhaustive: return "exhaustive";
    case Mode::CountOnly: return "count";
  }
  return "?";
}

const char* to_string(CaseTaken c) {
  switch (c) {
    case CaseTaken::RichLine: return "RichLine";
    case CaseTaken::PoorGraph: return "PoorGraph";
    case CaseTaken::BruteForceFallback: return "BruteForceFallback";
    case CaseTaken::Degenerate: return "Degenerate";
  }
  return "?";
}

bool validate_c_ordinary(const PointSet& points, const IncidenceProfile& profile, Triangle t, std::int64_t c) {
  const auto n = points.size();
  auto [i, j, k] = t;
  if (i >= n || j >= n || k >= n) throw Error("triangle index out of range");
  if (i == j || j == k || i == k) throw Error("triangle indices not distinct");
  if (points.orientation(i, j, k) == 0) return false;
  const auto limit = static_cast<std::size_t>(c);
  return profile.multiplicity(i, j) <= limit && profile.multiplicity(i, k) <= limit &&
         profile.multiplicity(j, k) <= limit;
}

OracleResult enumerate_all_c_ordinary(const PointSet& points, const IncidenceProfile& profile, std::int64_t c,
                                      std::optional<std::size_t> limit) {
  OracleResult out;
  const auto n = static_cast<Index>(points.size());
  if (n < 3) return out;
  const auto cap = static_cast<std::size_t>(c);
  for (Index i = 0; i < n; ++i) {
    for (Index j = i + 1; j < n; ++j) {
      if (profile.multiplicity(i, j) > cap) continue;
      for (Index k = j + 1; k < n; ++k) {
        if (profile.multiplicity(i, k) > cap || profile.multiplicity(j, k) > cap) continue;
        if (profile.collinear(i, j, k)) continue;
        ++out.count;
        if (!limit || out.triangles.size() < *limit) out.triangles.push_back({i, j, k});
      }
    }
  }
  return out;
}

OracleResult enumerate_all_c_ordinary(const PointSet& points, std::int64_t c, std::optional<std::size_t> limit) {
  if (points.size() < 3) return {};
  return enumerate_all_c_ordinary(points, enumerate_lines(points), c, limit);
}

SimpleGraph build_poor_graph(const PointSet& points, const IncidenceProfile& profile, std::int64_t c) {
  const auto n = static_cast<Index>(points.size());
  const auto cap = static_cast<std::size_t>(c);
  std::vector<std::vector<Index>> adj(n);
  for (Index i = 0; i < n; ++i) {
    for (Index j = i + 1; j < n; ++j) {
      if (profile.multiplicity(i, j) <= cap) {
        adj[i].push_back(j);
        adj[j].push_back(i);
      }
    }
  }
  // Rows fill in increasing neighbor order, so they are already sorted.
  return SimpleGraph::from_sorted_adjacency(std::move(adj));
}

std::vector<Index> richest_line(const PointSet& points, const IncidenceProfile& profile) {
  const auto& rich = profile.rich_lines();
  if (rich.empty()) {
    if (points.size() < 3) return {0, 1};
    const auto ord = find_ordinary_line(points, profile);
    return {ord.q, ord.r};
  }
  const std::size_t top = profile.max_multiplicity();
  std::optional<CanonicalLine> best_line;
  const std::vector<Index>* best = nullptr;
  for (const auto& members : rich) {
    if (members.size() != top) continue;
    CanonicalLine line = points.line(members[0], members[1]);
    if (!best_line || line < *best_line) {
      best_line = std::move(line);
      best = &members;
    }
  }
  return *best;
}

RichCaseResult find_case_rich_line(const PointSet& points, const IncidenceProfile& profile,
                                   std::span<const Index> line_members, const Constants& constants) {
  const std::size_t n = points.size();
  const std::size_t l = line_members.size();
  if (l < 2) throw PreconditionError("rich line needs at least two points");
  if (!constants.exceeds_alpha(l, n)) throw PreconditionError("line is not rich: l <= alpha n");

  std::vector<bool> on_line(n, false);
  for (Index m : line_members) on_line.at(m) = true;
  std::vector<Index> rest;
  rest.reserve(n - l);
  for (Index i = 0; i < n; ++i) {
    if (!on_line[i]) rest.push_back(i);
  }
  const PointSet remainder = points.subset(rest);
  if (remainder.size() < 3 || is_collinear(remainder)) {
    throw PreconditionError("points off the rich line are collinear");
  }
  const auto ord = find_ordinary_line(remainder);
  const Index q = rest[ord.q];
  const Index r = rest[ord.r];

  const auto cap = static_cast<std::size_t>(constants.c);
  RichCaseWitness w{points.line(line_members[0], line_members[1]), l, q, r, {}, {}, {}, {}, profile.multiplicity(q, r)};
  for (Index s : line_members) {
    const bool in_pq = profile.multiplicity(s, q) > cap;
    const bool in_pr = profile.multiplicity(s, r) > cap;
    const bool on_qr = points.orientation(s, q, r) == 0;
    if (in_pq) w.p_q.push_back(s);
    if (in_pr) w.p_r.push_back(s);
    if (on_qr) w.collinear_with_qr.push_back(s);
    if (!in_pq && !in_pr && !on_qr && w.qr_multiplicity <= cap) w.survivors.push_back(s);
  }

  RichCaseResult out{std::move(w), {}};
  out.triangles.reserve(out.witness.survivors.size());
  for (Index s : out.witness.survivors) {
    Triangle t{s, q, r};
    std::sort(t.begin(), t.end());
    out.triangles.push_back(t);
  }
  std::sort(out.triangles.begin(), out.triangles.end());
  return out;
}

PoorCaseResult find_case_poor_graph(const PointSet& points, const IncidenceProfile& profile, std::int64_t c,
                                    std::optional<std::size_t> limit) {
  PoorCaseResult out;
  const SimpleGraph g = build_poor_graph(points, profile, c);
  out.edge_count = g.edge_count();
  for_each_triangle(g, [&](Index i, Index j, Index k) {
    if (points.orientation(i, j, k) == 0) {
      ++out.collinear_filtered;
      return true;
    }
    ++out.count;
    if (!limit || out.triangles.size() < *limit) out.triangles.push_back({i, j, k});
    return true;
  });
  return out;
}

PoorCaseResult count_case_poor_graph(const PointSet& points, const IncidenceProfile& profile, std::int64_t c) {
  PoorCaseResult out;
  const SimpleGraph g = build_poor_graph(points, profile, c);
  out.edge_count = g.edge_count();
  const std::uint64_t all = count_triangles(g);
  const auto cap = static_cast<std::size_t>(c);
  for (const auto& members : profile.rich_lines()) {
    const std::uint64_t m = members.size();
    if (m <= cap) out.collinear_filtered += m * (m - 1) * (m - 2) / 6;
  }
  out.count = all - out.collinear_filtered;
  return out;
}

TriangleReport find_c_ordinary(const PointSet& points, const Constants& constants, Mode mode,
                               std::optional<std::size_t> limit) {
  if (points.size() < 3) {
    TriangleReport report;
    report.classification = classify_degeneracy(points);
    report.constants = constants;
    return report;
  }
  return find_c_ordinary(points, enumerate_lines(points), constants, mode, limit);
}

TriangleReport find_c_ordinary(const PointSet& points, const IncidenceProfile& profile, const Constants& constants,
                               Mode mode, std::optional<std::size_t> limit) {
  TriangleReport report;
  report.classification = classify_degeneracy(points);
  report.constants = constants;
  const auto c = constants.c;
  const auto list_limit = mode == Mode::CountOnly ? std::optional<std::size_t>(0) : limit;

  auto take_oracle = [&](CaseTaken taken) {
    auto oracle = enumerate_all_c_ordinary(points, profile, c, list_limit);
    report.case_taken = taken;
    report.count = oracle.count;
    report.count_exact = true;
    report.triangles = std::move(oracle.triangles);
    report.truncated = report.triangles.size() < report.count;
  };
  auto take_poor = [&] {
    auto poor = mode == Mode::CountOnly ? count_case_poor_graph(points, profile, c)
                                        : find_case_poor_graph(points, profile, c, list_limit);
    report.count = poor.count;
    report.count_exact = true;
    report.triangles = std::move(poor.triangles);
    report.truncated = report.triangles.size() < report.count;
    report.poor_edge_count = poor.edge_count;
    report.collinear_filtered = poor.collinear_filtered;
  };

  switch (report.classification.tag) {
    case Degeneracy::TooSmall:
      report.case_taken = CaseTaken::Degenerate;
      return report;
    case Degeneracy::AllCollinear:
      take_oracle(CaseTaken::Degenerate);
      return report;
    case Degeneracy::TwoLineUnion:
    case Degeneracy::NonDegenerate:
      // Two-line unions still get the full search: the poor-graph count is
      // exact on any input, and the oracle fallback covers empty results.
      break;
  }

  // Count-only needs an exact count, which only the poor-graph route gives.
  bool rich_done = false;
  if (mode != Mode::CountOnly) {
    const auto line = richest_line(points, profile);
    if (constants.exceeds_alpha(line.size(), points.size())) {
      try {
        auto rich = find_case_rich_line(points, profile, line, constants);
        report.case_taken = CaseTaken::RichLine;
        report.rich = std::move(rich.witness);
        if (mode == Mode::Fast) {
          report.count = rich.triangles.size();
          report.count_exact = false;
          if (limit && rich.triangles.size() > *limit) rich.triangles.resize(*limit);
          report.triangles = std::move(rich.triangles);
          report.truncated = report.triangles.size() < report.count;
        } else {
          take_poor();
        }
        rich_done = true;
      } catch (const PreconditionError&) {
        rich_done = false;
      }
    }
  }
  if (!rich_done) {
    report.case_taken = CaseTaken::PoorGraph;
    take_poor();
  }
  if (report.count == 0) take_oracle(CaseTaken::BruteForceFallback);
  if (mode == Mode::CountOnly) report.truncated = false;
  return report;
}

}  // namespace ordtri
