#pragma once

#include "twt/channel.hpp"
#include "twt/region.hpp"

namespace twt {

/// Provenance label of a power allocation.  The closed-form labels follow
/// the canonical user ordering h_1 <= h_2 (users are relabeled internally
/// when needed, results are reported in original indices); OracleGrid marks
/// a grid-search result that coincides with no closed-form corner.
enum class AllocationCase {
    BothMax,
    User1MaxUser2Zero,
    BothZero,
    JamBothMax,
    JamBothZero,
    OracleGrid,
};

const char* to_string(AllocationCase c);

struct PowerAllocation {
    PowerPoint p;
    AllocationCase case_label = AllocationCase::BothZero;
    double objective_value = 0.0;  ///< clamped objective in bits/use
};

/// Phi_j(p) = (1 + h_1 p_1 + h_2 p_2) / (1 + p_j), j in {1,2}.
double phi(const StandardGtwChannel& ch, PowerPoint p, int user);

/// Partial derivative of rho with respect to p_j:
/// rho_dot_j = (h_j - Phi_j(p)) / ((1 + p_1)(1 + p_2)).
double rho_dot(const StandardGtwChannel& ch, PowerPoint p, int user);

/// Closed-form secrecy sum-rate maximizer.  With users ordered so that
/// h_1 <= h_2:
///   (pmax_1, pmax_2)  if h_1 <= 1 + h_2 pmax_2 and h_2 < 1 + h_1 pmax_1
///   (pmax_1, 0)       if h_1 < 1 and h_2 >= 1 + h_1 pmax_1
///   (0, 0)            otherwise
/// A selected allocation whose unclamped sum rate is negative falls back to
/// (0, 0)/BothZero: it ties the clamped objective and minimizes rho, so the
/// result is always the rho-minimizing corner of the power box.
/// objective_value = [sum_rate at the allocation]^+.
PowerAllocation optimal_power(const StandardGtwChannel& ch);

/// Independent exhaustive check: minimizes rho over a grid x grid power
/// lattice, ties broken toward smaller p_1 then smaller p_2. grid >= 2.
PowerAllocation optimal_power_oracle(const StandardGtwChannel& ch, int grid);

/// Unclamped user-1 secrecy rate when user 2 transmits noise:
/// g(p_1) - g(h_1 p_1 / (1 + h_2 p_2)).  Throws outside the power box.
double jamming_rate(const StandardGtwChannel& ch, PowerPoint p);

/// phi2(p_2) = (1 + h_2 p_2) / (1 + p_2); jamming_rate = -0.5*log2(rho/phi2).
double phi2(const StandardGtwChannel& ch, double p_2);

/// Closed-form cooperative-jamming optimum: (pmax_1, pmax_2) if
/// h_1 < 1 + h_2 pmax_2, else (0, 0).
PowerAllocation optimal_jamming(const StandardGtwChannel& ch);

/// Exhaustive counterpart of optimal_jamming: maximizes the unclamped
/// jamming rate over the lattice, same tie-breaking as optimal_power_oracle.
PowerAllocation jamming_oracle(const StandardGtwChannel& ch, int grid);

/// Side-by-side comparison of the two closed-form strategies for user 2:
/// transmitting (sum-rate optimum) versus jamming for user 1.  Reported as
/// advice only, never applied automatically.
struct JammingAdvice {
    double sum_objective = 0.0;  ///< optimal_power objective, bits/use
    double jam_objective = 0.0;  ///< optimal_jamming objective, bits/use
    bool prefer_jamming = false;                ///< jam beats sum + user-2 zero
    bool user2_single_user_decodable = false;   ///< h_2 >= 1 + h_1 pmax_1
};

JammingAdvice jamming_advice(const StandardGtwChannel& ch);

struct BatwJamReport {
    double rate = 0.0;           ///< 1 - h(min(eps_1, eps_2)), bits/use
    bool jamming_needed = false; ///< h(eps_1) + h(eps_2) >= 1 + h(eps_w)
};

/// Binary-channel jamming: the user with the better receive channel sends,
/// the other transmits uniform bits; the sender reaches its single-user
/// capacity.  jamming_needed reports whether the plain secrecy sum bound
/// is zero (labeling of users does not affect the result).
BatwJamReport batw_jamming(const BatwChannel& ch);

}  // namespace twt
