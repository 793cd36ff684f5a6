#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "avwc/canonical.hpp"
#include "avwc/channel.hpp"
#include "avwc/codes.hpp"
#include "avwc/suites.hpp"

namespace avwc {

/// JSON schemas (all parse errors name the offending row index):
///   channel:  {"input_alphabet": int, "output_alphabet": int, "rows": [[...]]}
///   family:   {"states": [strings], "channels": [channel objects]}
///   wiretap:  {"legitimate": family, "eavesdropper": family}
///   code:     {"n": int, "messages": int, "encoder": [[...]],
///              "decoder": [int per y^n, row-major y-sequence order, 0-based]}
nlohmann::json to_json(const Channel& channel);
nlohmann::json to_json(const ChannelFamily& family);
nlohmann::json to_json(const WiretapUncertainty& uncertainty);
nlohmann::json to_json(const WiretapCode& code);

Channel channel_from_json(const nlohmann::json& j);
ChannelFamily family_from_json(const nlohmann::json& j);
WiretapUncertainty wiretap_from_json(const nlohmann::json& j);
WiretapCode code_from_json(const nlohmann::json& j);

nlohmann::json load_json_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& content);

/// Fixed-format float for CSV cells; deterministic for a given value.
std::string format_double(double value);

/// #schema=avwc.verify.v1
/// suite,seed,trial,epsilon,lhs,rhs,slack,holds
std::string render_trials_csv(const std::vector<TrialRow>& rows);

/// #schema=avwc.sweep.v1
/// lambda,min_f,symmetrizable,cr_bits,cs_bits
std::string render_sweep_csv(const std::vector<SweepRow>& rows);

nlohmann::json trials_to_json(const std::vector<TrialRow>& rows);
nlohmann::json sweep_to_json(const std::vector<SweepRow>& rows);

}  // namespace avwc
