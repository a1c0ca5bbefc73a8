#include <chrono>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "twt/info.hpp"
#include "twt/io.hpp"
#include "twt/version.hpp"

namespace {

using nlohmann::json;

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::invalid_argument("cannot open input file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

/// Writes the payload to --out (plus a .manifest.json sidecar) or stdout.
void emit(const std::string& command, const std::string& input_text, const json& parameters,
          const std::string& payload, const std::string& out_path,
          std::chrono::steady_clock::time_point started) {
    if (out_path.empty()) {
        std::cout << payload;
        if (!payload.empty() && payload.back() != '\n') std::cout << '\n';
        return;
    }
    std::ofstream out(out_path, std::ios::binary);
    if (!out) throw std::invalid_argument("cannot open output file: " + out_path);
    out << payload;
    if (!payload.empty() && payload.back() != '\n') out << '\n';

    twt::RunManifest manifest;
    manifest.command = command;
    manifest.input_digest = twt::canonical_digest(input_text);
    manifest.parameters_json = parameters.dump();
    manifest.tool_version = twt::kVersion;
    manifest.duration_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
    std::ofstream mf(out_path + ".manifest.json", std::ios::binary);
    if (!mf) throw std::invalid_argument("cannot open manifest file");
    mf << twt::manifest_to_json(manifest) << '\n';
}

void print_verify_table(const twt::SecrecyReport& r,
                        std::optional<std::array<double, 2>> decode_err) {
    auto row = [](const char* k, const std::string& v) {
        std::fprintf(stderr, "  %-22s %s\n", k, v.c_str());
    };
    std::fprintf(stderr, "secrecy report (bits):\n");
    row("H(W)", twt::format_sig12(r.h_w));
    row("H(W|Z)", twt::format_sig12(r.h_w_given_z));
    row("ratio", twt::format_sig12(r.ratio));
    row("I(Xsum;Z)", twt::format_sig12(r.i_xsum_z));
    row("per-user ratios", twt::format_sig12(r.per_user_ratio[0]) + ", " +
                               twt::format_sig12(r.per_user_ratio[1]));
    row("secret rates R_k", twt::format_sig12(r.secret_rate[0]) + ", " +
                                twt::format_sig12(r.secret_rate[1]));
    row("extra rates Rx_k", twt::format_sig12(r.extra_rate[0]) + ", " +
                                twt::format_sig12(r.extra_rate[1]));
    row("tap capacity C_W", twt::format_sig12(r.tap_capacity));
    row("Rx_1+Rx_2 - C_W", twt::format_sig12(r.rate_target_gap));
    if (decode_err)
        row("decode error", twt::format_sig12((*decode_err)[0]) + ", " +
                                twt::format_sig12((*decode_err)[1]));
    if (!r.rate_target_met)
        std::fprintf(stderr,
                     "warning: randomization rates miss the tap capacity by %s bits\n",
                     twt::format_sig12(r.rate_target_gap).c_str());
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"two-way wiretap channel secrecy toolkit"};
    app.require_subcommand(1);
    app.fallthrough();

    std::string out_path;
    std::optional<std::uint64_t> seed, budget;
    app.add_option("--out", out_path, "write the payload here plus a .manifest.json sidecar");
    app.add_option("--seed", seed, "override the scheme seed");
    app.add_option("--budget", budget, "override the enumeration budget (weighted states)");

    std::string input;
    std::string mode;
    int grid = 64;
    int points = 65;
    int oracle_grid = 0;
    double eps_w = 0.0;
    std::optional<double> eps_self;

    auto* c_std = app.add_subcommand("standardize", "raw Gaussian channel -> standard form");
    c_std->add_option("input", input, "raw Gaussian channel JSON")->required();

    auto* c_region = app.add_subcommand("region", "achievable secrecy region as CSV vertices");
    c_region->add_option("input", input, "channel JSON")->required();
    c_region->add_option("--grid", grid, "power lattice points per axis (Gaussian closure)");

    auto* c_opt = app.add_subcommand("optimize", "closed-form optimal power allocation");
    c_opt->add_option("input", input, "Gaussian channel JSON")->required();
    c_opt->add_option("--mode", mode, "sum | jam")->required();
    c_opt->add_option("--oracle-grid", oracle_grid, "also run the grid oracle and report the gap");

    auto* c_sweep = app.add_subcommand("jam-sweep", "user-1 jamming rate vs p_2 as CSV");
    c_sweep->add_option("input", input, "Gaussian channel JSON")->required();
    c_sweep->add_option("--points", points, "number of sweep points")->check(CLI::PositiveNumber);

    auto* c_verify = app.add_subcommand("verify", "exact equivocation of a binary scheme");
    c_verify->add_option("input", input, "scheme JSON")->required();
    c_verify->add_option("--eps-w", eps_w, "eavesdropper crossover probability")->required();
    c_verify->add_option("--eps-self", eps_self, "also report ML decode error at this crossover");

    auto* c_bjam = app.add_subcommand("batw-jam", "binary-channel jamming rate");
    c_bjam->add_option("input", input, "BATW channel JSON")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    const auto started = std::chrono::steady_clock::now();
    try {
        const std::string text = read_file(input);
        json params{{"input", input}};
        if (seed) params["seed"] = *seed;
        if (budget) params["budget"] = *budget;

        if (*c_std) {
            const auto ch = twt::parse_channel_json(text);
            if (ch.kind != twt::ChannelKind::GaussianRaw)
                throw std::invalid_argument("standardize expects a raw Gaussian channel");
            emit("standardize", text, params, twt::standard_to_json(ch.standard), out_path,
                 started);
        } else if (*c_region) {
            const auto ch = twt::parse_channel_json(text);
            twt::RegionPolytope region;
            if (ch.kind == twt::ChannelKind::Batw) {
                region = twt::batw_region(ch.batw);
            } else {
                region = twt::gtw_region_closure(ch.standard, grid);
                params["grid"] = grid;
            }
            emit("region", text, params, twt::region_to_csv(region), out_path, started);
        } else if (*c_opt) {
            const auto ch = twt::parse_channel_json(text);
            if (ch.kind == twt::ChannelKind::Batw)
                throw std::invalid_argument(
                    "optimize expects a Gaussian channel (see batw-jam for BATW)");
            params["mode"] = mode;
            twt::PowerAllocation alloc;
            std::optional<double> gap;
            if (mode == "sum") {
                alloc = twt::optimal_power(ch.standard);
                if (oracle_grid > 0)
                    gap = alloc.objective_value -
                          twt::optimal_power_oracle(ch.standard, oracle_grid).objective_value;
            } else if (mode == "jam") {
                alloc = twt::optimal_jamming(ch.standard);
                if (oracle_grid > 0)
                    gap = alloc.objective_value -
                          twt::jamming_oracle(ch.standard, oracle_grid).objective_value;
            } else {
                throw std::invalid_argument("--mode must be sum or jam");
            }
            if (oracle_grid > 0) params["oracle_grid"] = oracle_grid;
            const auto advice = twt::jamming_advice(ch.standard);
            std::fprintf(stderr,
                         "advice: sum-rate objective %s, jamming objective %s -> user 2 "
                         "should %s%s\n",
                         twt::format_sig12(advice.sum_objective).c_str(),
                         twt::format_sig12(advice.jam_objective).c_str(),
                         advice.prefer_jamming ? "jam" : "transmit",
                         advice.user2_single_user_decodable
                             ? " (user 2 is single-user decodable)"
                             : "");
            emit("optimize", text, params, twt::allocation_to_json(alloc, gap), out_path,
                 started);
        } else if (*c_sweep) {
            const auto ch = twt::parse_channel_json(text);
            if (ch.kind == twt::ChannelKind::Batw)
                throw std::invalid_argument("jam-sweep expects a Gaussian channel");
            params["points"] = points;
            std::string csv = "p2,secrecy_rate_bits_per_use\n";
            for (int i = 0; i < points; ++i) {
                const double p2 = points == 1 ? 0.0
                                              : (i == points - 1
                                                     ? ch.standard.pmax_2
                                                     : ch.standard.pmax_2 * i / (points - 1));
                const double rate = twt::pos_part(
                    twt::jamming_rate(ch.standard, {ch.standard.pmax_1, p2}));
                csv += twt::format_sig12(p2) + "," + twt::format_sig12(rate) + "\n";
            }
            emit("jam-sweep", text, params, csv, out_path, started);
        } else if (*c_verify) {
            const auto scheme = twt::parse_scheme_json(text, seed, budget);
            params["eps_w"] = eps_w;
            const auto report = twt::exact_equivocation(scheme, eps_w);
            std::optional<std::array<double, 2>> derr;
            if (eps_self) {
                params["eps_self"] = *eps_self;
                derr = twt::decode_error(scheme, *eps_self);
            }
            print_verify_table(report, derr);
            emit("verify", text, params, twt::secrecy_report_to_json(report, derr), out_path,
                 started);
        } else if (*c_bjam) {
            const auto ch = twt::parse_channel_json(text);
            if (ch.kind != twt::ChannelKind::Batw)
                throw std::invalid_argument("batw-jam expects a BATW channel");
            emit("batw-jam", text, params, twt::batw_jam_to_json(twt::batw_jamming(ch.batw)),
                 out_path, started);
        }
    } catch (const twt::budget_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return 0;
}
