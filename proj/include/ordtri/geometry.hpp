#pragma once

#include <compare>
#include <cstddef>
#include <string>
#include <variant>

#include "ordtri/rational.hpp"

namespace ordtri {

struct Point {
  Rational x;
  Rational y;

  friend bool operator==(const Point&, const Point&) = default;
  friend auto operator<=>(const Point&, const Point&) = default;
};

std::string to_string(const Point& p);

// The line a*x + b*y + c = 0 with (a, b, c) a primitive integer triple and
// a > 0, or a == 0 and b > 0. Two lines are the same set of points iff their
// triples are identical, so the triple doubles as an identity key.
class CanonicalLine {
 public:
  // Scales and re-signs an arbitrary nonzero-normal triple into canonical form.
  static CanonicalLine normalize(BigInt a, BigInt b, BigInt c);

  const BigInt& a() const { return a_; }
  const BigInt& b() const { return b_; }
  const BigInt& c() const { return c_; }

  std::string to_string() const;

  friend bool operator==(const CanonicalLine& l, const CanonicalLine& r) {
    return l.a_ == r.a_ && l.b_ == r.b_ && l.c_ == r.c_;
  }
  friend std::strong_ordering operator<=>(const CanonicalLine& l, const CanonicalLine& r);

 private:
  CanonicalLine(BigInt a, BigInt b, BigInt c) : a_(std::move(a)), b_(std::move(b)), c_(std::move(c)) {}
  BigInt a_, b_, c_;
};

struct CanonicalLineHash {
  std::size_t operator()(const CanonicalLine& l) const;
};

// Sign of det(q - p, r - p): +1 counterclockwise, -1 clockwise, 0 collinear
// (coincident points included).
int orientation(const Point& p, const Point& q, const Point& r);

// Throws Error("degenerate pair") when p == q.
CanonicalLine line_through(const Point& p, const Point& q);

bool incident(const CanonicalLine& l, const Point& p);

struct Parallel {
  friend bool operator==(Parallel, Parallel) { return true; }
};
struct Identical {
  friend bool operator==(Identical, Identical) { return true; }
};
using Intersection = std::variant<Point, Parallel, Identical>;

Intersection intersect(const CanonicalLine& l1, const CanonicalLine& l2);

}  // namespace ordtri
