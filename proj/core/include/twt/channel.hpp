#pragma once

#include <stdexcept>

namespace twt {

/// Gaussian two-way wiretap channel in raw (physical) form: linear power
/// gains toward the receivers and the tap, per-receiver noise variances,
/// and raw transmit power limits.
struct RawGtwChannel {
    double gain_main_1 = 1.0;  ///< gain user 1 -> receiver 2, > 0
    double gain_main_2 = 1.0;  ///< gain user 2 -> receiver 1, > 0
    double gain_tap_1 = 0.0;   ///< gain user 1 -> eavesdropper, >= 0
    double gain_tap_2 = 0.0;   ///< gain user 2 -> eavesdropper, >= 0
    double noise_var_1 = 1.0;  ///< receiver 1 noise variance, > 0
    double noise_var_2 = 1.0;  ///< receiver 2 noise variance, > 0
    double noise_var_tap = 1.0;  ///< eavesdropper noise variance, > 0
    double pmax_1 = 0.0;       ///< raw power limit user 1, >= 0, finite
    double pmax_2 = 0.0;       ///< raw power limit user 2, >= 0, finite
};

/// Standard-form Gaussian two-way wiretap channel: unit main gains and unit
/// noise variances, so only the power limits, the eavesdropper gains and the
/// self-interference gains remain.  The alphas never enter any rate formula
/// (each receiver subtracts its own signal); they are carried for
/// completeness.
struct StandardGtwChannel {
    double pmax_1 = 0.0;  ///< standardized power limit, >= 0
    double pmax_2 = 0.0;
    double h_1 = 0.0;     ///< eavesdropper gain for user 1, >= 0
    double h_2 = 0.0;
    double alpha_1 = 1.0;  ///< self-interference gain, > 0
    double alpha_2 = 1.0;
};

/// Binary additive two-way wiretap channel: three crossover probabilities.
/// eps_k < 0.5 strictly for the receivers; eps_w = 0.5 is admitted as the
/// useless-eavesdropper limit.
struct BatwChannel {
    double eps_1 = 0.0;
    double eps_2 = 0.0;
    double eps_w = 0.0;
};

/// Throws std::invalid_argument naming the offending field.
void validate(const RawGtwChannel& ch);
void validate(const StandardGtwChannel& ch);

/// Returns ch unchanged if its invariants hold; throws std::invalid_argument
/// naming the offending field otherwise.
BatwChannel validate_batw(const BatwChannel& ch);

/// Raw -> standard form transformation.  Scales powers by the main gains and
/// noise variances so that the standardized channel has unit main gains and
/// unit noise everywhere:
///   pmax_1 = (gain_main_1 / noise_var_2) * raw pmax_1
///   h_1    = gain_tap_1 * noise_var_2 / (gain_main_1 * noise_var_tap)
///   alpha_1 = noise_var_2 / (gain_main_1 * noise_var_1)
/// and symmetrically for user 2 (with noise_var_1 in place of noise_var_2).
StandardGtwChannel standardize(const RawGtwChannel& raw);

}  // namespace twt
