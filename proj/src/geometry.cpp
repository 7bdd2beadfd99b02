#include "ordtri/geometry.hpp"

#include <functional>

#include "ordtri/error.hpp"

namespace ordtri {

std::string to_string(const Point& p) { return "(" + p.x.to_string() + ", " + p.y.to_string() + ")"; }

CanonicalLine CanonicalLine::normalize(BigInt a, BigInt b, BigInt c) {
  if (a == 0 && b == 0) throw Error("line normal is zero");
  BigInt g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
  if (g != 1) {
    mpz_divexact(a.get_mpz_t(), a.get_mpz_t(), g.get_mpz_t());
    mpz_divexact(b.get_mpz_t(), b.get_mpz_t(), g.get_mpz_t());
    mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
  }
  if (a < 0 || (a == 0 && b < 0)) {
    a = -a;
    b = -b;
    c = -c;
  }
  return CanonicalLine(std::move(a), std::move(b), std::move(c));
}

std::string CanonicalLine::to_string() const {
  return "(" + a_.get_str() + "," + b_.get_str() + "," + c_.get_str() + ")";
}

std::strong_ordering operator<=>(const CanonicalLine& l, const CanonicalLine& r) {
  for (auto [x, y] : {std::pair{&l.a_, &r.a_}, std::pair{&l.b_, &r.b_}, std::pair{&l.c_, &r.c_}}) {
    const int c = cmp(*x, *y);
    if (c != 0) return c < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
  }
  return std::strong_ordering::equal;
}

std::size_t CanonicalLineHash::operator()(const CanonicalLine& l) const {
  auto limb = [](const BigInt& v) -> std::size_t {
    const auto* z = v.get_mpz_t();
    std::size_t h = static_cast<std::size_t>(z->_mp_size);
    if (z->_mp_size != 0) h ^= static_cast<std::size_t>(z->_mp_d[0]) * 0x9e3779b97f4a7c15ULL;
    return h;
  };
  std::size_t h = limb(l.a());
  h = h * 31 + limb(l.b());
  h = h * 31 + limb(l.c());
  return h;
}

int orientation(const Point& p, const Point& q, const Point& r) {
  const mpq_class det = (q.x.raw() - p.x.raw()) * (r.y.raw() - p.y.raw()) -
                        (q.y.raw() - p.y.raw()) * (r.x.raw() - p.x.raw());
  return sgn(det);
}

CanonicalLine line_through(const Point& p, const Point& q) {
  if (p == q) throw Error("degenerate pair");
  const mpq_class a = q.y.raw() - p.y.raw();
  const mpq_class b = p.x.raw() - q.x.raw();
  const mpq_class c = -(a * p.x.raw() + b * p.y.raw());
  BigInt scale;
  mpz_lcm(scale.get_mpz_t(), a.get_den_mpz_t(), b.get_den_mpz_t());
  mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(), c.get_den_mpz_t());
  auto clear = [&scale](const mpq_class& v) { return BigInt(v.get_num() * (scale / v.get_den())); };
  return CanonicalLine::normalize(clear(a), clear(b), clear(c));
}

bool incident(const CanonicalLine& l, const Point& p) {
  const mpq_class v = l.a() * p.x.raw() + l.b() * p.y.raw() + l.c();
  return sgn(v) == 0;
}

Intersection intersect(const CanonicalLine& l1, const CanonicalLine& l2) {
  if (l1 == l2) return Identical{};
  const BigInt det = l1.a() * l2.b() - l2.a() * l1.b();
  if (det == 0) return Parallel{};
  // Cramer's rule on a1 x + b1 y = -c1, a2 x + b2 y = -c2.
  const BigInt x_num = l1.b() * l2.c() - l2.b() * l1.c();
  const BigInt y_num = l2.a() * l1.c() - l1.a() * l2.c();
  return Point{Rational(x_num, det), Rational(y_num, det)};
}

}  // namespace ordtri
