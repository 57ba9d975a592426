#pragma once

// Machine-readable reports. JSON objects keep a fixed key order; CSV columns
// mirror the JSON keys, with list values joined by ';'.

#include <string>

#include "json.hpp"

#include "cubic27/fibration.hpp"
#include "cubic27/lines27.hpp"
#include "cubic27/sweep.hpp"

namespace cubic27 {

using Json = nlohmann::ordered_json;

Json to_json(const DivisorClass &c);
Json to_json(const InvariantFactors &f);
Json to_json(const Signature &s);
/// {signature, rank_fixed, quotient, fixed_line, h1, pass}
Json to_json(const NormReport &r);
Json to_json(const SixthLineReport &r);

Json lines_json(const LineTable &table);
Json fibrations_json();
Json verify_json(const SweepConfig &config, const VerifyResult &result);
Json sections_json(const SweepConfig &config, const SectionSweepResult &result);

std::string lines_csv(const LineTable &table);
std::string sixth_line_csv(const SixthLineReport &r);
std::string fibrations_csv();
std::string verify_csv(const SweepConfig &config, const VerifyResult &result);
std::string sections_csv(const SweepConfig &config, const SectionSweepResult &result);

/// Serialized report text for `format`, newline-terminated.
std::string render(const Json &j);

} // namespace cubic27
