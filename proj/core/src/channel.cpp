#include "twt/channel.hpp"

#include <cmath>
#include <string>

namespace twt {

namespace {

void require(bool ok, const char* field, const char* what) {
    if (!ok) throw std::invalid_argument(std::string(field) + ": " + what);
}

bool pos_finite(double v) { return v > 0.0 && std::isfinite(v); }
bool nonneg_finite(double v) { return v >= 0.0 && std::isfinite(v); }

}  // namespace

void validate(const RawGtwChannel& ch) {
    require(pos_finite(ch.gain_main_1), "gain_main_1", "must be finite and > 0");
    require(pos_finite(ch.gain_main_2), "gain_main_2", "must be finite and > 0");
    require(nonneg_finite(ch.gain_tap_1), "gain_tap_1", "must be finite and >= 0");
    require(nonneg_finite(ch.gain_tap_2), "gain_tap_2", "must be finite and >= 0");
    require(pos_finite(ch.noise_var_1), "noise_var_1", "must be finite and > 0");
    require(pos_finite(ch.noise_var_2), "noise_var_2", "must be finite and > 0");
    require(pos_finite(ch.noise_var_tap), "noise_var_tap", "must be finite and > 0");
    require(nonneg_finite(ch.pmax_1), "pmax_1", "must be finite and >= 0");
    require(nonneg_finite(ch.pmax_2), "pmax_2", "must be finite and >= 0");
}

void validate(const StandardGtwChannel& ch) {
    require(nonneg_finite(ch.pmax_1), "pmax_1", "must be finite and >= 0");
    require(nonneg_finite(ch.pmax_2), "pmax_2", "must be finite and >= 0");
    require(nonneg_finite(ch.h_1), "h_1", "must be finite and >= 0");
    require(nonneg_finite(ch.h_2), "h_2", "must be finite and >= 0");
    require(pos_finite(ch.alpha_1), "alpha_1", "must be finite and > 0");
    require(pos_finite(ch.alpha_2), "alpha_2", "must be finite and > 0");
}

BatwChannel validate_batw(const BatwChannel& ch) {
    require(ch.eps_1 >= 0.0 && ch.eps_1 < 0.5, "eps_1", "must be in [0, 0.5)");
    require(ch.eps_2 >= 0.0 && ch.eps_2 < 0.5, "eps_2", "must be in [0, 0.5)");
    require(ch.eps_w >= 0.0 && ch.eps_w <= 0.5, "eps_w", "must be in [0, 0.5]");
    return ch;
}

StandardGtwChannel standardize(const RawGtwChannel& raw) {
    validate(raw);
    StandardGtwChannel out;
    out.pmax_1 = raw.gain_main_1 / raw.noise_var_2 * raw.pmax_1;
    out.pmax_2 = raw.gain_main_2 / raw.noise_var_1 * raw.pmax_2;
    out.h_1 = raw.gain_tap_1 * raw.noise_var_2 / (raw.gain_main_1 * raw.noise_var_tap);
    out.h_2 = raw.gain_tap_2 * raw.noise_var_1 / (raw.gain_main_2 * raw.noise_var_tap);
    out.alpha_1 = raw.noise_var_2 / (raw.gain_main_1 * raw.noise_var_1);
    out.alpha_2 = raw.noise_var_1 / (raw.gain_main_2 * raw.noise_var_2);
    validate(out);
    return out;
}

}  // namespace twt
