#include "ordtri/bounds.hpp"

#include <algorithm>
#include <cmath>

#include "ordtri/error.hpp"

namespace ordtri {

namespace {

BoundReport make_report(std::string name, std::string instance, Rational checked, Rational threshold,
                        std::string note = {}) {
  BoundReport r;
  r.name = std::move(name);
  r.instance = std::move(instance);
  r.satisfied = checked <= threshold;
  r.ratio = threshold.sign() == 0 ? 0.0 : (checked / threshold).raw().get_d();
  r.checked = std::move(checked);
  r.threshold = std::move(threshold);
  r.note = std::move(note);
  return r;
}

BigInt choose2(std::size_t l) {
  const BigInt v(l);
  return v * (v - 1) / 2;
}

std::string nk(std::size_t n, std::size_t k) { return "n=" + std::to_string(n) + " k=" + std::to_string(k); }

BoundReport incidence_report(const BigInt& incidences, const BigInt& m, const BigInt& n) {
  const BigInt excess = incidences - m - n;
  const BigInt mn = m * n;
  BoundReport r = make_report("incidence", "n=" + n.get_str() + " m=" + m.get_str() + " I=" + incidences.get_str(),
                              Rational(BigInt(8 * excess * excess * excess)), Rational(BigInt(125 * mn * mn)),
                              "8(I-m-n)^3 <= 125(mn)^2");
  const double real_bound = 2.5 * std::cbrt(mn.get_d() * mn.get_d()) + m.get_d() + n.get_d();
  r.ratio = real_bound > 0 ? incidences.get_d() / real_bound : 0.0;
  return r;
}

}  // namespace

Rational st_threshold(std::int64_t n, std::int64_t k, std::int64_t c_prime) {
  if (n < 2 || k < 2) throw Error("st_threshold needs n, k >= 2");
  const BigInt bn(n), bk(k), cp(c_prime);
  if (bk * bk <= bn) return Rational(BigInt(cp * bn * bn), BigInt(bk * bk * bk));
  return Rational(BigInt(cp * bn), bk);
}

std::vector<BoundReport> check_st(const IncidenceProfile& profile, std::int64_t c_prime) {
  std::vector<BoundReport> out;
  const std::size_t n = profile.point_count();
  for (std::size_t k = 2; k <= profile.max_multiplicity(); ++k) {
    const auto fk = spectrum_f(profile, k);
    out.push_back(make_report("st", nk(n, k), Rational(static_cast<long>(fk)),
                              st_threshold(static_cast<std::int64_t>(n), static_cast<std::int64_t>(k), c_prime),
                              BigInt(k) * BigInt(k) <= BigInt(n) ? "c'n^2/k^3" : "c'n/k"));
  }
  return out;
}

BoundReport check_incidence_bound(const PointSet& points, std::span<const CanonicalLine> lines) {
  std::vector<const CanonicalLine*> sorted;
  sorted.reserve(lines.size());
  for (const auto& l : lines) sorted.push_back(&l);
  std::sort(sorted.begin(), sorted.end(), [](auto* a, auto* b) { return *a < *b; });
  for (std::size_t i = 1; i < sorted.size(); ++i) {
    if (*sorted[i] == *sorted[i - 1]) throw Error("duplicate lines");
  }
  // a x + b y + c = 0 in the integer frame: a X + b Y + c s = 0.
  BigInt incidences = 0;
  const auto n = static_cast<Index>(points.size());
  for (const auto& l : lines) {
    const BigInt cs = l.c() * points.frame_scale();
    for (Index i = 0; i < n; ++i) {
      if (l.a() * points.frame_x(i) + l.b() * points.frame_y(i) + cs == 0) ++incidences;
    }
  }
  return incidence_report(incidences, BigInt(lines.size()), BigInt(points.size()));
}

BoundReport check_incidence_bound(const IncidenceProfile& profile) {
  BigInt incidences = 2 * BigInt(profile.ordinary_count());
  for (const auto& members : profile.rich_lines()) incidences += members.size();
  return incidence_report(incidences, BigInt(profile.line_count()), BigInt(profile.point_count()));
}

Rational eg_lower_bound(std::int64_t n, std::int64_t m) {
  if (n == 0) throw Error("eg_lower_bound needs n >= 1");
  const BigInt bn(n), bm(m);
  return Rational(BigInt(bm * (4 * bm - bn * bn)), BigInt(3 * bn));
}

BoundReport check_eg(const SimpleGraph& g) {
  const auto n = static_cast<std::int64_t>(g.vertex_count());
  const auto m = static_cast<std::int64_t>(g.edge_count());
  const std::uint64_t t3 = count_triangles(g);
  BoundReport r = make_report("eg", "n=" + std::to_string(n) + " m=" + std::to_string(m),
                              n == 0 ? Rational(0) : eg_lower_bound(n, m), Rational(BigInt(std::to_string(t3))),
                              "t3(G) >= m(4m-n^2)/(3n)");
  r.vacuous = r.checked.sign() < 0;
  return r;
}

Constants derive_constants(std::int64_t c_prime) {
  if (c_prime < 1) throw Error("c' must be positive");
  return make_constants(96 * c_prime, c_prime);
}

std::vector<BoundReport> check_medium_sum(const IncidenceProfile& profile, const Constants& constants) {
  const std::size_t n = profile.point_count();
  if (constants.exceeds_alpha(profile.max_multiplicity(), n)) throw Error("case (ii) hypothesis fails");

  const BigInt bn(n);
  const auto c = static_cast<std::size_t>(constants.c);
  const Rational scale = Rational(BigInt(constants.c_prime * bn * bn), BigInt(constants.c + 1));
  BigInt low = 0, high = 0, poor = BigInt(profile.ordinary_count());
  auto add = [&](std::size_t l, std::size_t count) {
    const BigInt pairs = choose2(l) * count;
    if (l <= c) {
      poor += pairs;
    } else if (BigInt(l) * BigInt(l) <= bn) {
      low += pairs;
    } else {
      high += pairs;
    }
  };
  for (const auto& members : profile.rich_lines()) add(members.size(), 1);

  const std::string inst = "n=" + std::to_string(n) + " c=" + std::to_string(constants.c) +
                           " c'=" + std::to_string(constants.c_prime);
  const Rational total_threshold = Rational(24) * scale;
  std::vector<BoundReport> out;
  out.push_back(make_report("medium-sum-low", inst, Rational(low), Rational(8) * scale, "8c'n^2/(c+1)"));
  out.push_back(make_report("medium-sum-high", inst, Rational(high), Rational(16) * scale, "16c'n^2/(c+1)"));
  out.push_back(make_report("medium-sum", inst, Rational(BigInt(low + high)), total_threshold, "24c'n^2/(c+1)"));
  const Rational all_pairs(choose2(n));
  out.push_back(make_report("edge-count", inst, all_pairs - total_threshold, Rational(poor),
                            "|E(G)| >= C(n,2) - 24c'n^2/(c+1)"));
  out.back().vacuous = out.back().checked.sign() < 0;
  return out;
}

bool BoundSuite::all_satisfied() const {
  return std::all_of(reports.begin(), reports.end(), [](const BoundReport& r) { return r.satisfied; });
}

BoundSuite verify_bounds(const PointSet& points, const IncidenceProfile& profile, const Constants& constants) {
  BoundSuite suite;
  suite.reports = check_st(profile, constants.c_prime);
  suite.reports.push_back(check_incidence_bound(profile));
  suite.reports.push_back(check_eg(build_poor_graph(points, profile, constants.c)));
  if (constants.exceeds_alpha(profile.max_multiplicity(), profile.point_count())) {
    suite.skipped.push_back("medium-sum: skipped: rich line present");
  } else {
    auto medium = check_medium_sum(profile, constants);
    suite.reports.insert(suite.reports.end(), medium.begin(), medium.end());
  }
  return suite;
}

}  // namespace ordtri
