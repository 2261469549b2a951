#include "fthresh/parser.hpp"

#include <cctype>
#include <stdexcept>
#include <string>

#include "fthresh/errors.hpp"

namespace fthresh {
namespace {

class Parser {
 public:
  Parser(std::string_view src, const PolyRingPtr& ring) : src_(src), ring_(ring) {}

  Polynomial parse() {
    Polynomial f = expr();
    skip_space();
    if (pos_ != src_.size()) fail("unexpected character '" + std::string(1, src_[pos_]) + "'");
    return f;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, pos_); }

  void skip_space() {
    while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_space();
    if (pos_ < src_.size() && src_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  Polynomial expr() {
    Polynomial f = term();
    for (;;) {
      if (accept('+')) f += term();
      else if (accept('-')) f -= term();
      else return f;
    }
  }

  Polynomial term() {
    Polynomial f = factor();
    while (accept('*')) f *= factor();
    return f;
  }

  Polynomial factor() {
    Polynomial f = primary();
    while (accept('^')) {
      skip_space();
      std::size_t at = pos_;
      std::uint64_t k = exponent();
      try {
        f = f.pow(k);
      } catch (const std::overflow_error&) {
        throw ParseError("exponent overflow", at);
      }
    }
    return f;
  }

  std::uint64_t exponent() {
    if (pos_ >= src_.size() || !std::isdigit(static_cast<unsigned char>(src_[pos_])))
      fail("expected integer exponent");
    std::size_t start = pos_;
    std::uint64_t k = 0;
    while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) {
      k = k * 10 + static_cast<std::uint64_t>(src_[pos_] - '0');
      if (k > kMaxExponent) throw ParseError("exponent overflow", start);
      ++pos_;
    }
    return k;
  }

  Polynomial primary() {
    skip_space();
    if (pos_ >= src_.size()) fail("unexpected end of input");
    char c = src_[pos_];
    if (c == '(') {
      ++pos_;
      Polynomial f = expr();
      if (!accept(')')) fail("expected ')'");
      return f;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      const std::uint64_t p = ring_->characteristic();
      std::uint64_t v = 0;
      while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) {
        v = (v * 10 + static_cast<std::uint64_t>(src_[pos_] - '0')) % p;
        ++pos_;
      }
      return Polynomial::constant(ring_, static_cast<std::int64_t>(v));
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = pos_;
      while (pos_ < src_.size() &&
             (std::isalnum(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '_'))
        ++pos_;
      std::string_view name = src_.substr(start, pos_ - start);
      auto index = ring_->variable_index(name);
      if (!index) throw ParseError("unknown variable '" + std::string(name) + "'", start);
      return Polynomial::variable(ring_, *index);
    }
    fail("unexpected character '" + std::string(1, c) + "'");
  }

  std::string_view src_;
  const PolyRingPtr& ring_;
  std::size_t pos_ = 0;
};

}  // namespace

Polynomial parse_polynomial(std::string_view source, const PolyRingPtr& ring) {
  return Parser(source, ring).parse();
}

}  // namespace fthresh
