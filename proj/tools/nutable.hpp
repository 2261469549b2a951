#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "fthresh/frobenius.hpp"

namespace fthresh::cli {

// CSV columns: e,q,nu,lower_num,lower_den,upper_num,upper_den
struct NuTableRow {
  unsigned e = 0;
  std::uint64_t q = 0;
  std::uint64_t nu = 0;
  Rational lower;
  Rational upper;

  bool operator==(const NuTableRow&) const = default;
};

struct NuTable {
  std::vector<NuTableRow> rows;

  static NuTable from_estimate(const ThresholdEstimate& estimate);
  // Throws ParseError with the byte offset of the bad line.
  static NuTable parse_csv(const std::string& text);

  std::string to_csv() const;
  Rational lower() const;  // max over rows
  Rational upper() const;  // min over rows
  std::optional<Rational> guess(std::int64_t max_denominator) const;
};

// Throws PreconditionError on an empty estimate and Error on an empty or
// unwritable path.
void emit_nu_table(const ThresholdEstimate& estimate, const std::string& path);
NuTable read_nu_table(const std::string& path);

}  // namespace fthresh::cli
