#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "fthresh/errors.hpp"
#include "fthresh/ideal.hpp"

namespace fthresh::cli {

using Json = nlohmann::ordered_json;

// Malformed session document. The message names the offending field, and
// for syntax errors the byte offset.
class SessionError : public Error {
 public:
  using Error::Error;
};

struct SessionOptions {
  std::optional<unsigned> D;
  std::optional<unsigned> e_max;
  std::optional<std::uint64_t> seed;
  std::optional<std::int64_t> max_denominator;
};

// One ring S/L plus named ideals and elements. The canonical text form is
// to_text(); parsing it back reproduces it byte for byte.
class Session {
 public:
  static Session parse(const std::string& text);
  static Session load(const std::string& path);

  const RingPtr& ring() const noexcept { return ring_; }
  const SessionOptions& options() const noexcept { return options_; }
  const std::vector<std::pair<std::string, std::vector<std::string>>>& ideals() const noexcept {
    return ideals_;
  }
  const std::vector<std::pair<std::string, std::string>>& elements() const noexcept { return elements_; }

  // "m", a session ideal name, or a literal "(g1, g2, ...)".
  Ideal ideal(const std::string& ref) const;
  // A session element name or a polynomial literal.
  Polynomial element(const std::string& ref) const;

  Json to_json() const;
  std::string to_text() const;

 private:
  std::uint32_t p_ = 0;
  std::vector<std::string> variables_;
  std::vector<std::string> relations_;
  std::vector<std::pair<std::string, std::vector<std::string>>> ideals_;
  std::vector<std::pair<std::string, std::string>> elements_;
  SessionOptions options_;
  RingPtr ring_;
};

// Splits "(a, b, c)" at top-level commas.
std::vector<std::string> split_generators(const std::string& literal);

}  // namespace fthresh::cli
