#include "twt/io.hpp"

#include <cstdio>

#include <json.hpp>

namespace twt {

namespace {

using nlohmann::json;

[[noreturn]] void fail(const std::string& what) { throw std::invalid_argument(what); }

double num_field(const json& obj, const char* key) {
    if (!obj.contains(key)) fail(std::string(key) + ": missing field");
    const auto& v = obj.at(key);
    if (!v.is_number()) fail(std::string(key) + ": must be a number");
    return v.get<double>();
}

json& section(json& root, const char* name) {
    if (!root.contains(name) || !root.at(name).is_object())
        fail(std::string("expected an object under key \"") + name + "\"");
    return root.at(name);
}

json parse(const std::string& text) {
    json root = json::parse(text, nullptr, false);
    if (root.is_discarded()) fail("malformed JSON");
    if (!root.is_object()) fail("top-level JSON value must be an object");
    return root;
}

json region_vertices(const RegionPolytope& region) {
    json verts = json::array();
    for (const auto& v : region.vertices) verts.push_back({v.r_1, v.r_2});
    return verts;
}

std::vector<std::uint32_t> parse_book(const json& arr, int n, int count, const char* name) {
    if (!arr.is_array() || static_cast<int>(arr.size()) != count)
        fail(std::string(name) + ": expected an array of " + std::to_string(count) + " codewords");
    std::vector<std::uint32_t> book;
    book.reserve(arr.size());
    for (const auto& item : arr) {
        if (!item.is_string()) fail(std::string(name) + ": codewords must be '0'/'1' strings");
        const std::string s = item.get<std::string>();
        if (static_cast<int>(s.size()) != n)
            fail(std::string(name) + ": codeword length must equal n");
        std::uint32_t w = 0;
        for (int i = 0; i < n; ++i) {
            if (s[i] == '1')
                w |= 1u << i;
            else if (s[i] != '0')
                fail(std::string(name) + ": codewords must contain only '0' and '1'");
        }
        book.push_back(w);
    }
    return book;
}

}  // namespace

ChannelFile parse_channel_json(const std::string& text) {
    json root = parse(text);
    ChannelFile out;
    if (root.contains("gaussian")) {
        json& g = section(root, "gaussian");
        if (g.contains("gain_main_1")) {
            out.kind = ChannelKind::GaussianRaw;
            out.raw.gain_main_1 = num_field(g, "gain_main_1");
            out.raw.gain_main_2 = num_field(g, "gain_main_2");
            out.raw.gain_tap_1 = num_field(g, "gain_tap_1");
            out.raw.gain_tap_2 = num_field(g, "gain_tap_2");
            out.raw.noise_var_1 = num_field(g, "noise_var_1");
            out.raw.noise_var_2 = num_field(g, "noise_var_2");
            out.raw.noise_var_tap = num_field(g, "noise_var_tap");
            out.raw.pmax_1 = num_field(g, "pmax_1");
            out.raw.pmax_2 = num_field(g, "pmax_2");
            out.standard = standardize(out.raw);
        } else {
            out.kind = ChannelKind::GaussianStandard;
            out.standard.pmax_1 = num_field(g, "pmax_1");
            out.standard.pmax_2 = num_field(g, "pmax_2");
            out.standard.h_1 = num_field(g, "h_1");
            out.standard.h_2 = num_field(g, "h_2");
            out.standard.alpha_1 = g.contains("alpha_1") ? num_field(g, "alpha_1") : 1.0;
            out.standard.alpha_2 = g.contains("alpha_2") ? num_field(g, "alpha_2") : 1.0;
            validate(out.standard);
        }
    } else if (root.contains("batw")) {
        json& b = section(root, "batw");
        out.kind = ChannelKind::Batw;
        out.batw.eps_1 = num_field(b, "eps_1");
        out.batw.eps_2 = num_field(b, "eps_2");
        out.batw.eps_w = num_field(b, "eps_w");
        validate_batw(out.batw);
    } else {
        fail("channel document must contain a \"gaussian\" or \"batw\" object");
    }
    return out;
}

BinaryScheme parse_scheme_json(const std::string& text,
                               std::optional<std::uint64_t> seed_override,
                               std::optional<std::uint64_t> budget_override) {
    json root = parse(text);
    json& s = section(root, "scheme");
    SchemeConfig config;
    config.n = static_cast<int>(num_field(s, "n"));
    config.m_1 = static_cast<int>(num_field(s, "m_1"));
    config.m_2 = static_cast<int>(num_field(s, "m_2"));
    config.mx_1 = static_cast<int>(num_field(s, "mx_1"));
    config.mx_2 = static_cast<int>(num_field(s, "mx_2"));
    if (s.contains("seed")) config.seed = s.at("seed").get<std::uint64_t>();
    if (s.contains("budget")) config.budget = s.at("budget").get<std::uint64_t>();
    if (seed_override) config.seed = *seed_override;
    if (budget_override) config.budget = *budget_override;
    if (!s.contains("books")) return build_scheme(config);

    validate(config);
    const json& books = s.at("books");
    if (!books.is_object()) fail("books: must be an object");
    for (const char* key : {"secret_1", "secret_2", "rand_1", "rand_2"})
        if (!books.contains(key)) fail(std::string("books.") + key + ": missing");
    return assemble_scheme(config,
                           parse_book(books.at("secret_1"), config.n, config.m_1, "secret_1"),
                           parse_book(books.at("secret_2"), config.n, config.m_2, "secret_2"),
                           parse_book(books.at("rand_1"), config.n, config.mx_1, "rand_1"),
                           parse_book(books.at("rand_2"), config.n, config.mx_2, "rand_2"));
}

std::string raw_to_json(const RawGtwChannel& ch) {
    return json{{"gaussian",
                 {{"gain_main_1", ch.gain_main_1},
                  {"gain_main_2", ch.gain_main_2},
                  {"gain_tap_1", ch.gain_tap_1},
                  {"gain_tap_2", ch.gain_tap_2},
                  {"noise_var_1", ch.noise_var_1},
                  {"noise_var_2", ch.noise_var_2},
                  {"noise_var_tap", ch.noise_var_tap},
                  {"pmax_1", ch.pmax_1},
                  {"pmax_2", ch.pmax_2}}}}
        .dump(2);
}

std::string standard_to_json(const StandardGtwChannel& ch) {
    return json{{"gaussian",
                 {{"pmax_1", ch.pmax_1},
                  {"pmax_2", ch.pmax_2},
                  {"h_1", ch.h_1},
                  {"h_2", ch.h_2},
                  {"alpha_1", ch.alpha_1},
                  {"alpha_2", ch.alpha_2}}}}
        .dump(2);
}

std::string batw_to_json(const BatwChannel& ch) {
    return json{{"batw", {{"eps_1", ch.eps_1}, {"eps_2", ch.eps_2}, {"eps_w", ch.eps_w}}}}
        .dump(2);
}

std::string region_to_csv(const RegionPolytope& region) {
    std::string out = "r1_bits_per_use,r2_bits_per_use\n";
    for (const auto& v : region.vertices)
        out += format_sig12(v.r_1) + "," + format_sig12(v.r_2) + "\n";
    return out;
}

std::string region_to_json(const RegionPolytope& region) {
    return json{{"unit", "bits_per_channel_use"}, {"vertices", region_vertices(region)}}.dump(2);
}

std::string allocation_to_json(const PowerAllocation& alloc, std::optional<double> oracle_gap) {
    json j{{"allocation", {alloc.p.p_1, alloc.p.p_2}},
           {"case", to_string(alloc.case_label)},
           {"objective_bits", alloc.objective_value},
           {"oracle_gap", nullptr}};
    if (oracle_gap) j["oracle_gap"] = *oracle_gap;
    return j.dump(2);
}

std::string secrecy_report_to_json(const SecrecyReport& report,
                                   std::optional<std::array<double, 2>> decode_err) {
    json j{{"h_w", report.h_w},
           {"h_w_given_z", report.h_w_given_z},
           {"ratio", report.ratio},
           {"i_xsum_z", report.i_xsum_z},
           {"per_user_ratios", {report.per_user_ratio[0], report.per_user_ratio[1]}},
           {"secret_rates", {report.secret_rate[0], report.secret_rate[1]}},
           {"extra_rates", {report.extra_rate[0], report.extra_rate[1]}},
           {"tap_capacity", report.tap_capacity},
           {"rate_target_gap", report.rate_target_gap},
           {"rate_target_met", report.rate_target_met},
           {"decode_error", nullptr}};
    if (decode_err) j["decode_error"] = {(*decode_err)[0], (*decode_err)[1]};
    return j.dump(2);
}

std::string batw_jam_to_json(const BatwJamReport& report) {
    return json{{"rate", report.rate}, {"jamming_needed", report.jamming_needed}}.dump(2);
}

std::uint64_t fnv1a64(std::string_view data) {
    std::uint64_t h = 0xcbf29ce484222325ull;
    for (unsigned char c : data) {
        h ^= c;
        h *= 0x100000001b3ull;
    }
    return h;
}

std::string canonical_digest(const std::string& json_text) {
    const json root = json::parse(json_text);  // keys re-serialize sorted
    const std::uint64_t h = fnv1a64(root.dump());
    char buf[32];
    std::snprintf(buf, sizeof buf, "fnv1a64:%016llx", static_cast<unsigned long long>(h));
    return buf;
}

std::string manifest_to_json(const RunManifest& manifest) {
    return json{{"command", manifest.command},
                {"input_digest", manifest.input_digest},
                {"parameters", json::parse(manifest.parameters_json)},
                {"tool_version", manifest.tool_version},
                {"duration_seconds", manifest.duration_seconds}}
        .dump(2);
}

std::string format_sig12(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

}  // namespace twt
