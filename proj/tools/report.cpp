#include "report.hpp"

#include <openssl/evp.h>

#include <array>
#include <cstdio>

#include "fthresh/errors.hpp"

namespace fthresh::cli {

namespace {

Json fields(const Fields& f) {
  Json out = Json::object();
  for (const auto& [k, v] : f) out[k] = v;
  return out;
}

template <typename T>
Json optional_json(const std::optional<T>& v) {
  return v ? Json(*v) : Json(nullptr);
}

}  // namespace

Json to_json(const Rational& r) { return Json::array({r.num(), r.den()}); }
Json to_json(const Polynomial& f) { return f.to_string(); }
Json to_json(const Ideal& a) { return to_json(a.generators()); }

Json to_json(const std::vector<Polynomial>& gens) {
  Json out = Json::array();
  for (const auto& g : gens) out.push_back(g.to_string());
  return out;
}

Json to_json(const Order& o) { return {{"value", o.value}, {"at_least", o.at_least}}; }

Json to_json(const HilbertData& h) { return h.values; }

Json to_json(const GradedPresentation& gr) {
  return {{"relations", to_json(gr.initial_relations)},
          {"truncation_degree", gr.truncation_degree},
          {"exact", gr.exact}};
}

Json to_json(const GrClaimReport& r) {
  return {{"pass", r.pass},
          {"reason", r.reason},
          {"realizations", to_json(r.realizations)},
          {"hilbert_ring", to_json(r.ring_side)},
          {"hilbert_claim", to_json(r.claim_side)}};
}

Json to_json(const NuRecord& r) {
  return {{"e", r.e},
          {"q", r.q},
          {"nu", r.nu},
          {"witness", to_json(r.witness)},
          {"witness_word", r.witness_word},
          {"containment_enumerated", r.containment_enumerated}};
}

Json to_json(const ThresholdEstimate& est) {
  Json records = Json::array();
  for (const auto& r : est.records) {
    Json row = to_json(r);
    Bracket b = bracket_of(r.q, r.nu, est.generator_count);
    row["lower"] = to_json(b.lower);
    row["upper"] = to_json(b.upper);
    records.push_back(std::move(row));
  }
  return {{"records", records},
          {"generator_count", est.generator_count},
          {"lower", to_json(est.lower)},
          {"upper", to_json(est.upper)},
          {"guess", est.guess ? to_json(*est.guess) : Json(nullptr)}};
}

Json to_json(const NuTable& table, std::int64_t max_denominator) {
  Json rows = Json::array();
  for (const auto& r : table.rows)
    rows.push_back({{"e", r.e}, {"q", r.q}, {"nu", r.nu}, {"lower", to_json(r.lower)}, {"upper", to_json(r.upper)}});
  auto guess = table.guess(max_denominator);
  return {{"rows", rows},
          {"lower", to_json(table.lower())},
          {"upper", to_json(table.upper())},
          {"guess", guess ? to_json(*guess) : Json(nullptr)}};
}

Json to_json(const TheoremAReport& r) {
  Json rows = Json::array();
  for (const auto& row : r.rows)
    rows.push_back({{"e", row.e},
                    {"q", row.q},
                    {"nu_ring", row.nu_ring},
                    {"nu_graded", row.nu_graded},
                    {"nu_ring_m", row.nu_ring_m},
                    {"nu_graded_n", row.nu_graded_n},
                    {"certified", row.certified},
                    {"holds", row.holds}});
  return {{"verdict", to_string(r.verdict)},
          {"reason", r.reason},
          {"gr", to_json(r.gr)},
          {"initial_ideal", to_json(r.initial_ideal)},
          {"strict_somewhere", r.strict_somewhere},
          {"rows", rows}};
}

Json to_json(const FptRecord& r) {
  return {{"e", r.e},
          {"q", r.q},
          {"b", r.b},
          {"multiplier", to_json(r.multiplier)},
          {"witness", to_json(r.witness)},
          {"witness_word", r.witness_word},
          {"containment_enumerated", r.containment_enumerated}};
}

Json to_json(const FptEstimate& est) {
  Json records = Json::array();
  for (const auto& r : est.records) {
    Json row = to_json(r);
    Bracket b = bracket_of(r.q, r.b, est.generator_count);
    row["lower"] = to_json(b.lower);
    row["upper"] = to_json(b.upper);
    records.push_back(std::move(row));
  }
  return {{"records", records},
          {"generator_count", est.generator_count},
          {"lower", to_json(est.lower)},
          {"upper", to_json(est.upper)},
          {"guess", est.guess ? to_json(*est.guess) : Json(nullptr)},
          {"realization", "Fedder colon (L^[q] : L)"}};
}

Json to_json(const TcVerdict& v) {
  return {{"kind", to_string(v.kind)},
          {"checked_through", v.checked_through},
          {"witness_e", optional_json(v.witness_e)},
          {"failed_element", v.failed_element ? to_json(*v.failed_element) : Json(nullptr)},
          {"domain", to_string(v.domain)},
          {"test_element_asserted", v.test_element_asserted}};
}

Json to_json(const FRationalReport& r) {
  Json probes = Json::array();
  for (const auto& p : r.probes) {
    Json row = {{"element", to_json(p.element)}, {"verdict", to_json(p.verdict)}};
    if (p.cross_check) {
      row["cross_check"] = {{"lower", to_json(p.cross_check->lower)},
                            {"upper", to_json(p.cross_check->upper)},
                            {"excludes_dimension", *p.excludes_dimension}};
    } else {
      row["cross_check"] = nullptr;
    }
    probes.push_back(std::move(row));
  }
  return {{"kind", to_string(r.kind)},
          {"dimension", r.dimension},
          {"probes", probes},
          {"basis_only", r.basis_only},
          {"exhaustive", r.exhaustive},
          {"combinations_checked", r.combinations_checked},
          {"uncertified_combination",
           r.uncertified_combination ? to_json(*r.uncertified_combination) : Json(nullptr)}};
}

Json to_json(const CheckReport& r) {
  Json witnesses = Json::array();
  for (const auto& w : r.witnesses)
    witnesses.push_back({{"ring", w.ring},
                         {"ideals", fields(w.ideals)},
                         {"e", optional_json(w.e)},
                         {"t", optional_json(w.t)},
                         {"seed", optional_json(w.seed)},
                         {"note", w.note}});
  return {{"name", r.name},
          {"inputs", fields(r.inputs)},
          {"verdict", to_string(r.verdict)},
          {"reason", r.reason},
          {"results", fields(r.results)},
          {"trials", r.trials},
          {"failures", r.failures},
          {"seeds", r.seeds},
          {"witnesses", witnesses}};
}

std::string sha256_hex(std::string_view data) {
  std::array<unsigned char, EVP_MAX_MD_SIZE> digest{};
  unsigned int length = 0;
  if (EVP_Digest(data.data(), data.size(), digest.data(), &length, EVP_sha256(), nullptr) != 1)
    throw Error("sha256 failed");
  std::string out;
  char buf[3];
  for (unsigned i = 0; i < length; ++i) {
    std::snprintf(buf, sizeof buf, "%02x", digest[i]);
    out += buf;
  }
  return out;
}

}  // namespace fthresh::cli
