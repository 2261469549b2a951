#include "nutable.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

#include "fthresh/errors.hpp"

namespace fthresh::cli {

namespace {

constexpr const char* kHeader = "e,q,nu,lower_num,lower_den,upper_num,upper_den";

std::int64_t to_int(const std::string& cell, std::size_t offset) {
  std::int64_t v = 0;
  auto [ptr, ec] = std::from_chars(cell.data(), cell.data() + cell.size(), v);
  if (ec != std::errc() || ptr != cell.data() + cell.size() || cell.empty())
    throw ParseError("expected an integer, got \"" + cell + "\"", offset);
  return v;
}

}  // namespace

NuTable NuTable::from_estimate(const ThresholdEstimate& estimate) {
  NuTable table;
  for (const auto& rec : estimate.records) {
    Bracket b = bracket_of(rec.q, rec.nu, estimate.generator_count);
    table.rows.push_back({rec.e, rec.q, rec.nu, b.lower, b.upper});
  }
  return table;
}

NuTable NuTable::parse_csv(const std::string& text) {
  NuTable table;
  std::size_t offset = 0;
  bool header = true;
  while (offset < text.size()) {
    std::size_t end = text.find('\n', offset);
    if (end == std::string::npos) end = text.size();
    std::string line = text.substr(offset, end - offset);
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (header) {
      if (line != kHeader) throw ParseError("expected header " + std::string(kHeader), offset);
      header = false;
    } else if (!line.empty()) {
      std::vector<std::string> cells;
      std::stringstream ss(line);
      for (std::string cell; std::getline(ss, cell, ',');) cells.push_back(cell);
      if (cells.size() != 7) throw ParseError("expected 7 columns", offset);
      std::int64_t v[7];
      for (int i = 0; i < 7; ++i) v[i] = to_int(cells[i], offset);
      if (v[0] < 1 || v[1] < 2 || v[2] < 0 || v[4] < 1 || v[6] < 1) throw ParseError("out of range value", offset);
      NuTableRow row{static_cast<unsigned>(v[0]), static_cast<std::uint64_t>(v[1]),
                     static_cast<std::uint64_t>(v[2]), Rational(v[3], v[4]), Rational(v[5], v[6])};
      if (row.lower != Rational(v[2], v[1])) throw ParseError("lower bound is not nu/q", offset);
      if (row.upper < row.lower) throw ParseError("upper bound below lower bound", offset);
      table.rows.push_back(row);
    }
    offset = end + 1;
  }
  if (header) throw ParseError("empty table", 0);
  return table;
}

std::string NuTable::to_csv() const {
  std::string out = std::string(kHeader) + "\n";
  for (const auto& r : rows) {
    out += std::to_string(r.e) + "," + std::to_string(r.q) + "," + std::to_string(r.nu) + "," +
           std::to_string(r.lower.num()) + "," + std::to_string(r.lower.den()) + "," +
           std::to_string(r.upper.num()) + "," + std::to_string(r.upper.den()) + "\n";
  }
  return out;
}

Rational NuTable::lower() const {
  if (rows.empty()) throw PreconditionError("empty table");
  Rational best = rows.front().lower;
  for (const auto& r : rows) best = std::max(best, r.lower);
  return best;
}

Rational NuTable::upper() const {
  if (rows.empty()) throw PreconditionError("empty table");
  Rational best = rows.front().upper;
  for (const auto& r : rows) best = std::min(best, r.upper);
  return best;
}

std::optional<Rational> NuTable::guess(std::int64_t max_denominator) const {
  const Rational lo = lower(), hi = upper();
  if (hi - lo > Rational(1)) return std::nullopt;
  return guess_rational(lo, hi, max_denominator);
}

void emit_nu_table(const ThresholdEstimate& estimate, const std::string& path) {
  if (estimate.records.empty()) throw PreconditionError("no records to write");
  if (path.empty()) throw Error("empty output path");
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error("cannot write " + path);
  out << NuTable::from_estimate(estimate).to_csv();
  if (!out) throw Error("write failed for " + path);
}

NuTable read_nu_table(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot read " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return NuTable::parse_csv(buf.str());
}

}  // namespace fthresh::cli
