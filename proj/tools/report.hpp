#pragma once

#include <string>
#include <string_view>

#include <nlohmann/json.hpp>

#include "fthresh/frobenius.hpp"
#include "fthresh/fsing.hpp"
#include "fthresh/graded.hpp"
#include "fthresh/verifier.hpp"
#include "nutable.hpp"

namespace fthresh::cli {

using Json = nlohmann::ordered_json;

// Rationals are [num, den]; no floating point ever reaches a report.
Json to_json(const Rational& r);
Json to_json(const Polynomial& f);
Json to_json(const Ideal& a);
Json to_json(const std::vector<Polynomial>& gens);
Json to_json(const Order& o);
Json to_json(const HilbertData& h);
Json to_json(const GradedPresentation& gr);
Json to_json(const GrClaimReport& r);
Json to_json(const NuRecord& r);
Json to_json(const ThresholdEstimate& est);
Json to_json(const NuTable& table, std::int64_t max_denominator);
Json to_json(const TheoremAReport& r);
Json to_json(const FptRecord& r);
Json to_json(const FptEstimate& est);
Json to_json(const TcVerdict& v);
Json to_json(const FRationalReport& r);
Json to_json(const CheckReport& r);

std::string sha256_hex(std::string_view data);

}  // namespace fthresh::cli
