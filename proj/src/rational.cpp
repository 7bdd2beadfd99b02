#include "ordtri/rational.hpp"

#include <cctype>

#include "ordtri/error.hpp"

namespace ordtri {

namespace {

bool parse_integer(std::string_view s, BigInt& out) {
  std::string_view digits = s;
  if (!digits.empty() && (digits.front() == '-' || digits.front() == '+')) digits.remove_prefix(1);
  if (digits.empty()) return false;
  for (char ch : digits) {
    if (!std::isdigit(static_cast<unsigned char>(ch))) return false;
  }
  std::string buf(s.front() == '+' ? s.substr(1) : s);
  return out.set_str(buf, 10) == 0;
}

}  // namespace

Rational::Rational(const BigInt& num, const BigInt& den) {
  if (den == 0) throw Error("zero denominator");
  value_ = mpq_class(num, den);
  value_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
  const auto slash = text.find('/');
  BigInt num;
  BigInt den = 1;
  if (slash == std::string_view::npos) {
    if (!parse_integer(text, num)) throw Error("malformed rational '" + std::string(text) + "'");
  } else {
    const auto den_text = text.substr(slash + 1);
    if (!parse_integer(text.substr(0, slash), num) || den_text.empty() || den_text.front() == '-' ||
        den_text.front() == '+' || !parse_integer(den_text, den)) {
      throw Error("malformed rational '" + std::string(text) + "'");
    }
  }
  return Rational(num, den);
}

std::string Rational::to_string() const {
  if (is_integer()) return value_.get_num().get_str();
  return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

Rational operator/(const Rational& a, const Rational& b) {
  if (b.sign() == 0) throw Error("division by zero");
  return Rational(mpq_class(a.value_ / b.value_));
}

std::string to_string(const BigInt& v) { return v.get_str(); }

}  // namespace ordtri
