#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include <json.hpp>

#include "reciplab/identity.hpp"

namespace reciplab {

/// Run-wide configuration shared by all CLI subcommands.
struct RunConfig {
  Precision precision_bits = kDefaultPrecision;
  std::uint64_t seed = kDefaultSeed;
  unsigned samples = 20;
  long tolerance_exponent = 0;  // 0 means precision_bits / 2
  std::optional<std::string> output_path;

  long effective_tolerance_exponent() const {
    return tolerance_exponent == 0 ? precision_bits / 2 : tolerance_exponent;
  }

  void validate() const {
    if (precision_bits < kMinPrecision)
      throw UsageError("precision must be at least 53 bits");
    if (tolerance_exponent < 0 || tolerance_exponent > precision_bits)
      throw UsageError("tolerance exponent must lie in [0, precision]");
  }
};

inline nlohmann::ordered_json params_json(const Params& p) {
  nlohmann::ordered_json j;
  j["r"] = p.r();
  j["a"] = p.a;
  j["m"] = p.m;
  auto w = nlohmann::ordered_json::array();
  for (const Rational& wl : p.w) w.push_back(wl.str());
  j["w"] = std::move(w);
  j["j"] = {p.j_I, p.j_II};
  return j;
}

inline nlohmann::ordered_json complex_json(const Complex& z, int digits) {
  return nlohmann::ordered_json::array({z.re().str(digits), z.im().str(digits)});
}

/// Fixed-field-order JSON document for a verification run. All reals are
/// decimal strings with a digit count faithful to the working precision,
/// and rationals cross as "num/den" strings.
inline nlohmann::ordered_json emit_report(const VerificationReport& rep, const RunConfig& cfg,
                                          long wall_time_ms) {
  const int digits = decimal_digits(cfg.precision_bits);
  nlohmann::ordered_json j;
  j["law"] = rep.law;
  j["params"] = params_json(rep.params);
  j["case"] = to_string(rep.case_tag);
  j["precision_bits"] = static_cast<long>(cfg.precision_bits);
  j["samples"] = rep.samples;
  j["max_abs_err"] = rep.max_abs_err.str(digits);
  j["max_rel_err"] = rep.max_rel_err.str(digits);
  j["tolerance"] = rep.tolerance.str(digits);
  j["passed"] = rep.passed;
  auto witnesses = nlohmann::ordered_json::array();
  for (const Witness& w : rep.witnesses) {
    nlohmann::ordered_json wj;
    wj["z"] = complex_json(w.z, digits);
    wj["lhs"] = complex_json(w.lhs, digits);
    wj["rhs"] = complex_json(w.rhs, digits);
    witnesses.push_back(std::move(wj));
  }
  j["witnesses"] = std::move(witnesses);
  j["wall_time_ms"] = wall_time_ms;
  return j;
}

/// Merges single-point reports of one law into a sampled report.
inline VerificationReport merge_reports(std::vector<VerificationReport> reports) {
  if (reports.empty()) throw Error("nothing to merge");
  VerificationReport out = reports.front();
  for (std::size_t i = 1; i < reports.size(); ++i) {
    const VerificationReport& r = reports[i];
    out.samples += r.samples;
    if (r.max_abs_err > out.max_abs_err) out.max_abs_err = r.max_abs_err;
    if (r.max_rel_err > out.max_rel_err) out.max_rel_err = r.max_rel_err;
    out.passed = out.passed && r.passed;
    for (const Witness& w : r.witnesses)
      if (out.witnesses.size() < 3) out.witnesses.push_back(w);
  }
  if (out.passed) out.witnesses.clear();
  return out;
}

}  // namespace reciplab
