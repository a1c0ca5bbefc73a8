#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "twt/channel.hpp"
#include "twt/power.hpp"
#include "twt/region.hpp"
#include "twt/secrecy.hpp"

namespace twt {

/// A channel document is {"gaussian": {...}} or {"batw": {...}}.  A gaussian
/// object with raw keys (gain_main_1, ...) parses as raw form; one with
/// standard keys (pmax_1, h_1, ...) parses as standard form directly.
enum class ChannelKind { GaussianRaw, GaussianStandard, Batw };

struct ChannelFile {
    ChannelKind kind = ChannelKind::GaussianStandard;
    RawGtwChannel raw;
    StandardGtwChannel standard;  ///< standardized view (also set for raw input)
    BatwChannel batw;
};

/// Parses and validates a channel JSON document.  Throws
/// std::invalid_argument on malformed input or invariant violations.
ChannelFile parse_channel_json(const std::string& text);

/// Parses a {"scheme": {...}} document with keys n, m_1, m_2, mx_1, mx_2,
/// seed, and an optional "books" object giving the four codebooks as arrays
/// of '0'/'1' strings (keys secret_1, secret_2, rand_1, rand_2; character i
/// of a string is symbol i).  When books are present they are injected
/// verbatim; otherwise the scheme is generated from the seed.
BinaryScheme parse_scheme_json(const std::string& text,
                               std::optional<std::uint64_t> seed_override,
                               std::optional<std::uint64_t> budget_override);

std::string raw_to_json(const RawGtwChannel& ch);
std::string standard_to_json(const StandardGtwChannel& ch);
std::string batw_to_json(const BatwChannel& ch);

/// CSV with one `r1,r2` vertex per line, counterclockwise; the header row
/// names the unit (bits per channel use).  Values use 12 significant digits.
std::string region_to_csv(const RegionPolytope& region);
std::string region_to_json(const RegionPolytope& region);

/// {"allocation": [p1, p2], "case": ..., "objective_bits": ...,
///  "oracle_gap": number|null} with oracle_gap = closed-form objective minus
/// oracle objective when an oracle run is supplied.
std::string allocation_to_json(const PowerAllocation& alloc,
                               std::optional<double> oracle_gap);

std::string secrecy_report_to_json(const SecrecyReport& report,
                                   std::optional<std::array<double, 2>> decode_err);

std::string batw_jam_to_json(const BatwJamReport& report);

/// 64-bit FNV-1a.
std::uint64_t fnv1a64(std::string_view data);

/// Stable digest of a JSON document: parse, re-serialize with sorted keys,
/// FNV-1a of the canonical bytes.  Formatted as "fnv1a64:%016x".
std::string canonical_digest(const std::string& json_text);

/// Run manifest emitted alongside every output file.
struct RunManifest {
    std::string command;
    std::string input_digest;
    std::string parameters_json;  ///< flag values as a JSON object
    std::string tool_version;
    double duration_seconds = 0.0;
};

std::string manifest_to_json(const RunManifest& manifest);

/// Formats a double with 12 significant digits, '.' decimal separator.
std::string format_sig12(double v);

}  // namespace twt
