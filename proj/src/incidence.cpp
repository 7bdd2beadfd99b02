#include "ordtri/incidence.hpp"

#include <algorithm>
#include <numeric>
#include <tuple>

#include "ordtri/error.hpp"

namespace ordtri {

namespace {

struct WordDir {
  std::int64_t dx, dy;
  Index j;
  auto key() const { return std::tie(dx, dy, j); }
  bool same_dir(const WordDir& o) const { return dx == o.dx && dy == o.dy; }
};

struct BigDir {
  BigInt dx, dy;
  Index j;
  bool same_dir(const BigDir& o) const { return dx == o.dx && dy == o.dy; }
};

std::uint64_t uabs(std::int64_t v) { return v < 0 ? 0 - static_cast<std::uint64_t>(v) : static_cast<std::uint64_t>(v); }

// Primitive direction from i to j with the sign rule dx > 0, or dx == 0 and dy > 0.
WordDir word_dir(const PointSet& p, Index i, Index j) {
  std::int64_t dx = p.frame_x64(j) - p.frame_x64(i);
  std::int64_t dy = p.frame_y64(j) - p.frame_y64(i);
  const auto g = static_cast<std::int64_t>(std::gcd(uabs(dx), uabs(dy)));
  dx /= g;
  dy /= g;
  if (dx < 0 || (dx == 0 && dy < 0)) {
    dx = -dx;
    dy = -dy;
  }
  return {dx, dy, j};
}

BigDir big_dir(const PointSet& p, Index i, Index j) {
  BigDir d{p.frame_x(j) - p.frame_x(i), p.frame_y(j) - p.frame_y(i), j};
  BigInt g;
  mpz_gcd(g.get_mpz_t(), d.dx.get_mpz_t(), d.dy.get_mpz_t());
  mpz_divexact(d.dx.get_mpz_t(), d.dx.get_mpz_t(), g.get_mpz_t());
  mpz_divexact(d.dy.get_mpz_t(), d.dy.get_mpz_t(), g.get_mpz_t());
  if (d.dx < 0 || (d.dx == 0 && d.dy < 0)) {
    d.dx = -d.dx;
    d.dy = -d.dy;
  }
  return d;
}

bool big_less(const BigDir& a, const BigDir& b) {
  if (int c = cmp(a.dx, b.dx)) return c < 0;
  if (int c = cmp(a.dy, b.dy)) return c < 0;
  return a.j < b.j;
}

}  // namespace

std::size_t IncidenceProfile::max_multiplicity() const {
  return histogram_.empty() ? 0 : histogram_.size() - 1;
}

BigInt IncidenceProfile::pair_sum() const {
  BigInt total = BigInt(ordinary_count_);
  for (const auto& members : rich_) {
    const BigInt l(members.size());
    total += l * (l - 1) / 2;
  }
  return total;
}

std::vector<LineEntry> IncidenceProfile::entries(const PointSet& points) const {
  std::vector<LineEntry> out;
  out.reserve(line_count());
  for (const auto& members : rich_) out.push_back({points.line(members[0], members[1]), members.size()});
  for (Index i = 0; i < n_; ++i) {
    for (Index j = i + 1; j < n_; ++j) {
      if (line_id(i, j) == kOrdinary) out.push_back({points.line(i, j), 2});
    }
  }
  std::sort(out.begin(), out.end(), [](const LineEntry& a, const LineEntry& b) { return a.line < b.line; });
  return out;
}

// Lines are discovered per point by grouping the other points by primitive
// direction. A group {j...} seen from i is the line through i with
// multiplicity |group| + 1; it is recorded when i is its smallest member.
IncidenceProfile enumerate_lines(const PointSet& points) {
  const std::size_t n = points.size();
  if (n < 2) throw Error("underdetermined");

  IncidenceProfile prof;
  prof.n_ = n;
  prof.pair_line_.assign(n * (n - 1) / 2, IncidenceProfile::kOrdinary);

  auto process_group = [&](Index i, auto first, auto last) {
    const std::size_t g = static_cast<std::size_t>(last - first);
    if (g == 1) {
      if (i < first->j) ++prof.ordinary_count_;
      return;
    }
    Index lowest = first->j;
    for (auto it = first; it != last; ++it) lowest = std::min(lowest, it->j);
    std::uint32_t id;
    if (i < lowest) {
      std::vector<Index> members;
      members.reserve(g + 1);
      members.push_back(i);
      for (auto it = first; it != last; ++it) members.push_back(it->j);
      std::sort(members.begin(), members.end());
      id = static_cast<std::uint32_t>(prof.rich_.size());
      prof.rich_.push_back(std::move(members));
    } else {
      id = prof.line_id(lowest, i);
    }
    for (auto it = first; it != last; ++it) {
      if (it->j > i) prof.pair_line_[prof.pair_slot(i, it->j)] = id;
    }
  };

  if (points.word_sized()) {
    std::vector<WordDir> dirs;
    dirs.reserve(n - 1);
    for (Index i = 0; i < n; ++i) {
      dirs.clear();
      for (Index j = 0; j < n; ++j) {
        if (j != i) dirs.push_back(word_dir(points, i, j));
      }
      std::sort(dirs.begin(), dirs.end(), [](const WordDir& a, const WordDir& b) { return a.key() < b.key(); });
      for (auto it = dirs.begin(); it != dirs.end();) {
        auto stop = it + 1;
        while (stop != dirs.end() && stop->same_dir(*it)) ++stop;
        process_group(i, it, stop);
        it = stop;
      }
    }
  } else {
    std::vector<BigDir> dirs;
    dirs.reserve(n - 1);
    for (Index i = 0; i < n; ++i) {
      dirs.clear();
      for (Index j = 0; j < n; ++j) {
        if (j != i) dirs.push_back(big_dir(points, i, j));
      }
      std::sort(dirs.begin(), dirs.end(), big_less);
      for (auto it = dirs.begin(); it != dirs.end();) {
        auto stop = it + 1;
        while (stop != dirs.end() && stop->same_dir(*it)) ++stop;
        process_group(i, it, stop);
        it = stop;
      }
    }
  }

  std::size_t max_mult = prof.ordinary_count_ > 0 ? 2 : 0;
  for (const auto& m : prof.rich_) max_mult = std::max(max_mult, m.size());
  prof.histogram_.assign(max_mult + 1, 0);
  if (prof.ordinary_count_ > 0) prof.histogram_[2] = prof.ordinary_count_;
  for (const auto& m : prof.rich_) ++prof.histogram_[m.size()];
  return prof;
}

std::size_t spectrum_f(const IncidenceProfile& profile, std::size_t k) {
  if (k < 2) throw Error("spectrum undefined");
  const auto& h = profile.histogram();
  std::size_t total = 0;
  for (std::size_t m = k; m < h.size(); ++m) total += h[m];
  return total;
}

const char* to_string(Degeneracy d) {
  switch (d) {
    case Degeneracy::TooSmall: return "TooSmall";
    case Degeneracy::AllCollinear: return "AllCollinear";
    case Degeneracy::TwoLineUnion: return "TwoLineUnion";
    case Degeneracy::NonDegenerate: return "NonDegenerate";
  }
  return "?";
}

bool is_collinear(const PointSet& points) {
  const auto n = static_cast<Index>(points.size());
  for (Index k = 2; k < n; ++k) {
    if (points.orientation(0, 1, k) != 0) return false;
  }
  return true;
}

namespace {

// Line through p parallel to l.
CanonicalLine parallel_through(const CanonicalLine& l, const Point& p) {
  const mpq_class c = -(l.a() * p.x.raw() + l.b() * p.y.raw());
  return CanonicalLine::normalize(l.a() * c.get_den(), l.b() * c.get_den(), c.get_num());
}

}  // namespace

DegeneracyClass classify_degeneracy(const PointSet& points) {
  const auto n = static_cast<Index>(points.size());
  if (n < 3) return {Degeneracy::TooSmall, {}};
  Index third = 2;
  while (third < n && points.orientation(0, 1, third) == 0) ++third;
  if (third == n) return {Degeneracy::AllCollinear, {points.line(0, 1)}};

  // If P lies on two lines, two of the triple {0, 1, third} share one of
  // them, so one of the triple's three lines is a cover line.
  const std::pair<Index, Index> candidates[] = {{0, 1}, {0, third}, {1, third}};
  for (auto [u, v] : candidates) {
    std::vector<Index> rest;
    for (Index k = 0; k < n; ++k) {
      if (k != u && k != v && points.orientation(u, v, k) != 0) rest.push_back(k);
    }
    bool rest_collinear = true;
    for (std::size_t t = 2; t < rest.size() && rest_collinear; ++t) {
      rest_collinear = points.orientation(rest[0], rest[1], rest[t]) == 0;
    }
    if (!rest_collinear) continue;
    CanonicalLine cover = points.line(u, v);
    CanonicalLine other = rest.size() >= 2 ? points.line(rest[0], rest[1]) : parallel_through(cover, points[rest[0]]);
    return {Degeneracy::TwoLineUnion, {std::move(cover), std::move(other)}};
  }
  return {Degeneracy::NonDegenerate, {}};
}

namespace {

using u128 = unsigned __int128;

u128 uabs128(__int128 v) { return v < 0 ? static_cast<u128>(0) - static_cast<u128>(v) : static_cast<u128>(v); }

u128 gcd128(u128 a, u128 b) {
  while (b != 0) {
    const u128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

struct WordLine {
  __int128 a, b, c;
  auto key() const { return std::tie(a, b, c); }
};

// Canonical triple in 128-bit words; valid for integral word-sized sets.
WordLine word_line(const PointSet& p, Index i, Index j) {
  __int128 a = static_cast<__int128>(p.frame_y64(i)) - p.frame_y64(j);
  __int128 b = static_cast<__int128>(p.frame_x64(j)) - p.frame_x64(i);
  __int128 c = static_cast<__int128>(p.frame_x64(i)) * p.frame_y64(j) -
               static_cast<__int128>(p.frame_x64(j)) * p.frame_y64(i);
  const auto g = static_cast<__int128>(gcd128(gcd128(uabs128(a), uabs128(b)), uabs128(c)));
  a /= g;
  b /= g;
  c /= g;
  if (a < 0 || (a == 0 && b < 0)) {
    a = -a;
    b = -b;
    c = -c;
  }
  return {a, b, c};
}

}  // namespace

OrdinaryLine find_ordinary_line(const PointSet& points, const IncidenceProfile& profile) {
  const auto n = static_cast<Index>(points.size());
  // Non-collinear sets always have an ordinary line, so its absence means the
  // input was collinear.
  if (n < 3 || profile.ordinary_count() == 0) throw Error("Sylvester–Gallai hypothesis violated");
  std::optional<Index> best_i, best_j;
  if (points.word_sized() && points.frame_scale() == 1) {
    WordLine best{};
    for (Index i = 0; i < n; ++i) {
      for (Index j = i + 1; j < n; ++j) {
        if (profile.line_id(i, j) != IncidenceProfile::kOrdinary) continue;
        const WordLine cand = word_line(points, i, j);
        if (!best_i || cand.key() < best.key()) {
          best = cand;
          best_i = i;
          best_j = j;
        }
      }
    }
    return {points.line(*best_i, *best_j), *best_i, *best_j};
  }
  std::optional<CanonicalLine> best;
  for (Index i = 0; i < n; ++i) {
    for (Index j = i + 1; j < n; ++j) {
      if (profile.line_id(i, j) != IncidenceProfile::kOrdinary) continue;
      CanonicalLine cand = points.line(i, j);
      if (!best || cand < *best) {
        best = std::move(cand);
        best_i = i;
        best_j = j;
      }
    }
  }
  return {std::move(*best), *best_i, *best_j};
}

OrdinaryLine find_ordinary_line(const PointSet& points) {
  if (points.size() < 3 || is_collinear(points)) throw Error("Sylvester–Gallai hypothesis violated");
  return find_ordinary_line(points, enumerate_lines(points));
}

std::size_t pair_line_multiplicity(const IncidenceProfile& profile, const PointSet& points, const Point& p,
                                   const Point& q) {
  const auto i = points.index_of(p);
  const auto j = points.index_of(q);
  if (!i || !j) throw Error("unknown point");
  if (*i == *j) throw Error("degenerate pair");
  return profile.multiplicity(*i, *j);
}

}  // namespace ordtri
