#include "fthresh/rational.hpp"

#include <cctype>
#include <numeric>
#include <stdexcept>

#include "fthresh/errors.hpp"

namespace fthresh {
namespace {

__extension__ typedef __int128 Wide;

std::int64_t narrow(Wide v) {
  if (v > INT64_MAX || v < INT64_MIN) throw std::overflow_error("rational overflow");
  return static_cast<std::int64_t>(v);
}

Rational make(Wide num, Wide den) {
  if (den == 0) throw PreconditionError("zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  Wide a = num < 0 ? -num : num, b = den;
  while (b) {
    Wide t = a % b;
    a = b;
    b = t;
  }
  if (a > 1) {
    num /= a;
    den /= a;
  }
  return Rational(narrow(num), narrow(den));
}

}  // namespace

Rational::Rational(std::int64_t num, std::int64_t den) {
  if (den == 0) throw PreconditionError("zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  std::int64_t g = std::gcd(num, den);
  if (g > 1) {
    num /= g;
    den /= g;
  }
  num_ = num;
  den_ = den;
}

Rational Rational::operator+(const Rational& o) const {
  return make(static_cast<Wide>(num_) * o.den_ + static_cast<Wide>(o.num_) * den_,
              static_cast<Wide>(den_) * o.den_);
}

Rational Rational::operator-(const Rational& o) const {
  return make(static_cast<Wide>(num_) * o.den_ - static_cast<Wide>(o.num_) * den_,
              static_cast<Wide>(den_) * o.den_);
}

Rational Rational::operator*(const Rational& o) const {
  return make(static_cast<Wide>(num_) * o.num_, static_cast<Wide>(den_) * o.den_);
}

Rational Rational::operator/(const Rational& o) const {
  return make(static_cast<Wide>(num_) * o.den_, static_cast<Wide>(den_) * o.num_);
}

std::strong_ordering Rational::operator<=>(const Rational& o) const noexcept {
  Wide l = static_cast<Wide>(num_) * o.den_;
  Wide r = static_cast<Wide>(o.num_) * den_;
  if (l < r) return std::strong_ordering::less;
  if (l > r) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

std::int64_t Rational::floor() const noexcept {
  std::int64_t q = num_ / den_;
  if (num_ % den_ != 0 && num_ < 0) --q;
  return q;
}

std::string Rational::to_string() const {
  if (den_ == 1) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

Rational Rational::parse(const std::string& text) {
  std::size_t pos = 0;
  auto fail = [&]() -> Rational { throw ParseError("malformed rational '" + text + "'", pos); };
  bool negative = false;
  if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) negative = text[pos++] == '-';
  auto digits = [&](Wide& value, std::int64_t* count) {
    std::size_t start = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
      value = value * 10 + (text[pos] - '0');
      if (value > INT64_MAX) throw std::overflow_error("rational overflow");
      ++pos;
    }
    if (count) *count = static_cast<std::int64_t>(pos - start);
    return pos > start;
  };
  Wide num = 0, den = 1;
  if (!digits(num, nullptr)) return fail();
  if (pos < text.size() && text[pos] == '/') {
    ++pos;
    den = 0;
    if (!digits(den, nullptr) || den == 0) return fail();
  } else if (pos < text.size() && text[pos] == '.') {
    ++pos;
    Wide frac = 0;
    std::int64_t count = 0;
    digits(frac, &count);
    for (std::int64_t i = 0; i < count; ++i) {
      num *= 10;
      den *= 10;
    }
    num += frac;
  }
  if (pos != text.size()) return fail();
  return make(negative ? -num : num, den);
}

Rational simplest_in(const Rational& lo, const Rational& hi) {
  if (hi < lo) throw PreconditionError("empty interval");
  if (lo <= Rational(0) && Rational(0) <= hi) return Rational(0);
  if (hi < Rational(0)) return Rational(0) - simplest_in(Rational(0) - hi, Rational(0) - lo);
  std::int64_t n = lo.floor();
  if (Rational(n) == lo) return lo;
  if (Rational(n + 1) <= hi) return Rational(n + 1);
  // lo, hi in (n, n + 1): recurse on the reciprocals of the fractional parts.
  Rational one(1);
  return Rational(n) + one / simplest_in(one / (hi - Rational(n)), one / (lo - Rational(n)));
}

}  // namespace fthresh
