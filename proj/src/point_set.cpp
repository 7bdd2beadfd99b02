#include "ordtri/point_set.hpp"

#include <limits>
#include <string>

#include "ordtri/error.hpp"

namespace ordtri {

namespace {

const BigInt kWordLimit = BigInt(1) << 61;

}  // namespace

PointSet::PointSet(std::vector<Point> points) : points_(std::move(points)) {
  if (points_.size() > std::numeric_limits<Index>::max() / 2) throw Error("point set too large");
  std::string duplicates;
  for (Index i = 0; i < points_.size(); ++i) {
    auto [it, inserted] = lookup_.emplace(points_[i], i);
    if (!inserted) {
      if (!duplicates.empty()) duplicates += ", ";
      duplicates += std::to_string(it->second) + "=" + std::to_string(i);
    }
  }
  if (!duplicates.empty()) throw Error("duplicate points at indices " + duplicates);

  for (const auto& p : points_) {
    mpz_lcm(scale_.get_mpz_t(), scale_.get_mpz_t(), p.x.raw().get_den_mpz_t());
    mpz_lcm(scale_.get_mpz_t(), scale_.get_mpz_t(), p.y.raw().get_den_mpz_t());
  }
  xs_.reserve(points_.size());
  ys_.reserve(points_.size());
  for (const auto& p : points_) {
    xs_.emplace_back(p.x.numerator() * (scale_ / p.x.denominator()));
    ys_.emplace_back(p.y.numerator() * (scale_ / p.y.denominator()));
  }
  for (std::size_t i = 0; i < points_.size() && word_sized_; ++i) {
    word_sized_ = abs(xs_[i]) <= kWordLimit && abs(ys_[i]) <= kWordLimit;
  }
  if (word_sized_) {
    xs64_.reserve(points_.size());
    ys64_.reserve(points_.size());
    for (std::size_t i = 0; i < points_.size(); ++i) {
      xs64_.push_back(xs_[i].get_si());
      ys64_.push_back(ys_[i].get_si());
    }
  }
}

PointSet PointSet::from_integers(std::initializer_list<std::pair<long, long>> coords) {
  return from_integers(std::span<const std::pair<long, long>>(coords.begin(), coords.size()));
}

PointSet PointSet::from_integers(std::span<const std::pair<long, long>> coords) {
  std::vector<Point> pts;
  pts.reserve(coords.size());
  for (auto [x, y] : coords) pts.push_back(Point{Rational(x), Rational(y)});
  return PointSet(std::move(pts));
}

std::optional<Index> PointSet::index_of(const Point& p) const {
  auto it = lookup_.find(p);
  if (it == lookup_.end()) return std::nullopt;
  return it->second;
}

PointSet PointSet::subset(std::span<const Index> indices) const {
  std::vector<Point> pts;
  pts.reserve(indices.size());
  for (Index i : indices) pts.push_back(points_.at(i));
  return PointSet(std::move(pts));
}

int PointSet::orientation(Index i, Index j, Index k) const {
  if (word_sized_) {
    const __int128 ux = xs64_[j] - xs64_[i], uy = ys64_[j] - ys64_[i];
    const __int128 vx = xs64_[k] - xs64_[i], vy = ys64_[k] - ys64_[i];
    const __int128 det = ux * vy - uy * vx;
    return (det > 0) - (det < 0);
  }
  const BigInt det = (xs_[j] - xs_[i]) * (ys_[k] - ys_[i]) - (ys_[j] - ys_[i]) * (xs_[k] - xs_[i]);
  return sgn(det);
}

CanonicalLine PointSet::line(Index i, Index j) const {
  if (i == j) throw Error("degenerate pair");
  // A X + B Y + C = 0 in the frame becomes (A s) x + (B s) y + C = 0.
  BigInt a = ys_[i] - ys_[j];
  BigInt b = xs_[j] - xs_[i];
  BigInt c = xs_[i] * ys_[j] - xs_[j] * ys_[i];
  if (scale_ != 1) {
    a *= scale_;
    b *= scale_;
  }
  return CanonicalLine::normalize(std::move(a), std::move(b), std::move(c));
}

}  // namespace ordtri
