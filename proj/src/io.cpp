#include "avwc/io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "avwc/errors.hpp"

namespace avwc {

namespace {

std::vector<std::vector<double>> rows_from_json(const nlohmann::json& j, const char* what) {
    if (!j.is_array() || j.empty()) fail("RaggedRows", std::string(what) + " must be a non-empty array");
    std::vector<std::vector<double>> rows;
    rows.reserve(j.size());
    for (std::size_t r = 0; r < j.size(); ++r) {
        const auto& row = j[r];
        if (!row.is_array())
            fail("RaggedRows", std::string(what) + " row " + std::to_string(r) + " is not an array");
        std::vector<double> values;
        values.reserve(row.size());
        for (const auto& v : row) {
            if (!v.is_number())
                fail("NonStochasticRow",
                     std::string(what) + " row " + std::to_string(r) + " has a non-numeric entry");
            values.push_back(v.get<double>());
        }
        rows.push_back(std::move(values));
    }
    return rows;
}

// Integer n-th root with exactness check; the code schema stores only
// (n, rows), so alphabet sizes are recovered from row lengths.
int exact_root(std::int64_t total, int n, const char* what) {
    for (int base = 1; base <= total; ++base) {
        const std::int64_t p = pow_size(base, n);
        if (p == total) return base;
        if (p > total) break;
    }
    fail("DimensionMismatch",
         std::string(what) + " length " + std::to_string(total) + " is not a perfect power for n");
}

}  // namespace

nlohmann::json to_json(const Channel& channel) {
    return nlohmann::json{{"input_alphabet", channel.input_size()},
                          {"output_alphabet", channel.output_size()},
                          {"rows", channel.rows()}};
}

nlohmann::json to_json(const ChannelFamily& family) {
    nlohmann::json channels = nlohmann::json::array();
    for (const Channel& member : family.members) channels.push_back(to_json(member));
    return nlohmann::json{{"states", family.state_labels}, {"channels", channels}};
}

nlohmann::json to_json(const WiretapUncertainty& uncertainty) {
    return nlohmann::json{{"legitimate", to_json(uncertainty.legitimate)},
                          {"eavesdropper", to_json(uncertainty.eavesdropper)}};
}

nlohmann::json to_json(const WiretapCode& code) {
    return nlohmann::json{{"n", code.n},
                          {"messages", code.message_count},
                          {"encoder", code.encoder},
                          {"decoder", code.decoder}};
}

Channel channel_from_json(const nlohmann::json& j) {
    if (!j.contains("rows")) fail("RaggedRows", "channel object needs a 'rows' field");
    const Channel channel = make_channel(rows_from_json(j.at("rows"), "channel"));
    if (j.contains("input_alphabet") && j.at("input_alphabet").get<int>() != channel.input_size())
        fail("DimensionMismatch", "declared input_alphabet does not match the rows");
    if (j.contains("output_alphabet") && j.at("output_alphabet").get<int>() != channel.output_size())
        fail("DimensionMismatch", "declared output_alphabet does not match the rows");
    return channel;
}

ChannelFamily family_from_json(const nlohmann::json& j) {
    if (!j.contains("channels")) fail("DimensionMismatch", "family object needs a 'channels' field");
    std::vector<Channel> members;
    for (const auto& c : j.at("channels")) members.push_back(channel_from_json(c));
    if (j.contains("states")) {
        std::vector<std::string> labels = j.at("states").get<std::vector<std::string>>();
        return make_family(std::move(labels), std::move(members));
    }
    return make_family(std::move(members));
}

WiretapUncertainty wiretap_from_json(const nlohmann::json& j) {
    if (!j.contains("legitimate") || !j.contains("eavesdropper"))
        fail("DimensionMismatch", "wiretap object needs 'legitimate' and 'eavesdropper' families");
    return make_wiretap(family_from_json(j.at("legitimate")), family_from_json(j.at("eavesdropper")));
}

WiretapCode code_from_json(const nlohmann::json& j) {
    for (const char* key : {"n", "messages", "encoder", "decoder"})
        if (!j.contains(key)) fail("DimensionMismatch", std::string("code object needs '") + key + "'");
    const int n = j.at("n").get<int>();
    const int messages = j.at("messages").get<int>();
    if (n < 1 || messages < 1) fail("DimensionMismatch", "code needs n >= 1 and messages >= 1");
    std::vector<std::vector<double>> encoder = rows_from_json(j.at("encoder"), "encoder");
    std::vector<int> decoder = j.at("decoder").get<std::vector<int>>();
    const int x_size = exact_root(static_cast<std::int64_t>(encoder[0].size()), n, "encoder row");
    const int y_size = exact_root(static_cast<std::int64_t>(decoder.size()), n, "decoder");
    return make_wiretap_code(n, messages, x_size, y_size, std::move(encoder), std::move(decoder));
}

nlohmann::json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) fail("FileNotFound", "cannot open '" + path + "'");
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        fail("BadJson", "cannot parse '" + path + "': " + e.what());
    }
    return j;
}

void write_text_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) fail("FileNotFound", "cannot write '" + path + "'");
    out << content;
}

std::string format_double(double value) {
    char buffer[64];
    std::snprintf(buffer, sizeof(buffer), "%.12g", value);
    return buffer;
}

std::string render_trials_csv(const std::vector<TrialRow>& rows) {
    std::string out = "#schema=avwc.verify.v1\n";
    out += "suite,seed,trial,epsilon,lhs,rhs,slack,holds\n";
    for (const TrialRow& row : rows) {
        out += suite_name(row.suite);
        out += ',' + std::to_string(row.seed);
        out += ',' + std::to_string(row.trial);
        out += ',' + format_double(row.epsilon);
        out += ',' + format_double(row.lhs);
        out += ',' + format_double(row.rhs);
        out += ',' + format_double(row.slack);
        out += row.holds ? ",1\n" : ",0\n";
    }
    return out;
}

std::string render_sweep_csv(const std::vector<SweepRow>& rows) {
    std::string out = "#schema=avwc.sweep.v1\n";
    out += "lambda,min_f,symmetrizable,cr_bits,cs_bits\n";
    for (const SweepRow& row : rows) {
        out += format_double(row.lambda);
        out += ',' + format_double(row.min_f);
        out += row.symmetrizable ? ",1" : ",0";
        out += ',' + format_double(row.cr_capacity);
        out += ',' + format_double(row.cs_capacity);
        out += '\n';
    }
    return out;
}

nlohmann::json trials_to_json(const std::vector<TrialRow>& rows) {
    nlohmann::json arr = nlohmann::json::array();
    for (const TrialRow& row : rows)
        arr.push_back(nlohmann::json{{"suite", suite_name(row.suite)},
                                     {"seed", row.seed},
                                     {"trial", row.trial},
                                     {"epsilon", row.epsilon},
                                     {"lhs", row.lhs},
                                     {"rhs", row.rhs},
                                     {"slack", row.slack},
                                     {"holds", row.holds}});
    return nlohmann::json{{"schema_version", 1}, {"rows", arr}};
}

nlohmann::json sweep_to_json(const std::vector<SweepRow>& rows) {
    nlohmann::json arr = nlohmann::json::array();
    for (const SweepRow& row : rows)
        arr.push_back(nlohmann::json{{"lambda", row.lambda},
                                     {"min_f", row.min_f},
                                     {"symmetrizable", row.symmetrizable},
                                     {"cr_bits", row.cr_capacity},
                                     {"cs_bits", row.cs_capacity}});
    return nlohmann::json{{"schema_version", 1}, {"rows", arr}};
}

}  // namespace avwc
