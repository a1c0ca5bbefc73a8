#include "twt/power.hpp"

#include <cassert>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "twt/info.hpp"

namespace twt {

namespace {

void check_in_box(const StandardGtwChannel& ch, PowerPoint p) {
    if (!(p.p_1 >= 0.0 && p.p_1 <= ch.pmax_1 && p.p_2 >= 0.0 && p.p_2 <= ch.pmax_2))
        throw std::domain_error("power point outside the channel's power box");
}

double lattice(double pmax, int i, int grid) {
    return i == grid - 1 ? pmax : pmax * i / (grid - 1);
}

AllocationCase match_sum_case(const StandardGtwChannel& ch, PowerPoint p) {
    if (p.p_1 == ch.pmax_1 && p.p_2 == ch.pmax_2) return AllocationCase::BothMax;
    if ((p.p_1 == ch.pmax_1 && p.p_2 == 0.0) || (p.p_1 == 0.0 && p.p_2 == ch.pmax_2))
        return AllocationCase::User1MaxUser2Zero;
    if (p.p_1 == 0.0 && p.p_2 == 0.0) return AllocationCase::BothZero;
    return AllocationCase::OracleGrid;
}

}  // namespace

const char* to_string(AllocationCase c) {
    switch (c) {
        case AllocationCase::BothMax: return "BothMax";
        case AllocationCase::User1MaxUser2Zero: return "User1MaxUser2Zero";
        case AllocationCase::BothZero: return "BothZero";
        case AllocationCase::JamBothMax: return "JamBothMax";
        case AllocationCase::JamBothZero: return "JamBothZero";
        case AllocationCase::OracleGrid: return "OracleGrid";
    }
    return "?";
}

double phi(const StandardGtwChannel& ch, PowerPoint p, int user) {
    assert(user == 1 || user == 2);
    const double num = 1.0 + ch.h_1 * p.p_1 + ch.h_2 * p.p_2;
    return num / (1.0 + (user == 1 ? p.p_1 : p.p_2));
}

double rho_dot(const StandardGtwChannel& ch, PowerPoint p, int user) {
    const double h_j = user == 1 ? ch.h_1 : ch.h_2;
    return (h_j - phi(ch, p, user)) / ((1.0 + p.p_1) * (1.0 + p.p_2));
}

PowerAllocation optimal_power(const StandardGtwChannel& ch) {
    validate(ch);
    // The closed form is stated for h_1 <= h_2; relabel internally and map
    // the allocation back so outputs stay in original user indices.
    const bool swapped = ch.h_1 > ch.h_2;
    const double h_a = swapped ? ch.h_2 : ch.h_1;
    const double h_b = swapped ? ch.h_1 : ch.h_2;
    const double pmax_a = swapped ? ch.pmax_2 : ch.pmax_1;
    const double pmax_b = swapped ? ch.pmax_1 : ch.pmax_2;

    double pa = 0.0, pb = 0.0;
    AllocationCase label = AllocationCase::BothZero;
    if (h_a <= 1.0 + h_b * pmax_b && h_b < 1.0 + h_a * pmax_a) {
        pa = pmax_a;
        pb = pmax_b;
        label = AllocationCase::BothMax;
    } else if (h_a < 1.0 && h_b >= 1.0 + h_a * pmax_a) {
        pa = pmax_a;
        pb = 0.0;
        label = AllocationCase::User1MaxUser2Zero;
    }

    PowerAllocation out;
    out.p = swapped ? PowerPoint{pb, pa} : PowerPoint{pa, pb};
    out.case_label = label;
    // Above single-user decodability on both sides the stationarity
    // conditions also admit full power with a negative sum rate; silence
    // attains the same clamped objective with the smaller rho.
    if (sum_rate(ch, out.p) < 0.0) {
        out.p = {0.0, 0.0};
        out.case_label = AllocationCase::BothZero;
    }
    out.objective_value = pos_part(sum_rate(ch, out.p));
    return out;
}

PowerAllocation optimal_power_oracle(const StandardGtwChannel& ch, int grid) {
    validate(ch);
    if (grid < 2) throw std::invalid_argument("grid: must be >= 2");
    PowerPoint best{0.0, 0.0};
    double best_rho = std::numeric_limits<double>::infinity();
    for (int i = 0; i < grid; ++i) {
        for (int j = 0; j < grid; ++j) {
            const PowerPoint p{lattice(ch.pmax_1, i, grid), lattice(ch.pmax_2, j, grid)};
            const double r = rho(ch, p);
            if (r < best_rho) {  // strict: ties keep the lex-smaller point
                best_rho = r;
                best = p;
            }
        }
    }
    PowerAllocation out;
    out.p = best;
    out.case_label = match_sum_case(ch, best);
    out.objective_value = pos_part(sum_rate(ch, best));
    return out;
}

double phi2(const StandardGtwChannel& ch, double p_2) {
    return (1.0 + ch.h_2 * p_2) / (1.0 + p_2);
}

double jamming_rate(const StandardGtwChannel& ch, PowerPoint p) {
    check_in_box(ch, p);
    return gauss_cap(p.p_1) - gauss_cap(ch.h_1 * p.p_1 / (1.0 + ch.h_2 * p.p_2));
}

PowerAllocation optimal_jamming(const StandardGtwChannel& ch) {
    validate(ch);
    PowerAllocation out;
    if (ch.h_1 < 1.0 + ch.h_2 * ch.pmax_2) {
        out.p = {ch.pmax_1, ch.pmax_2};
        out.case_label = AllocationCase::JamBothMax;
    } else {
        out.p = {0.0, 0.0};
        out.case_label = AllocationCase::JamBothZero;
    }
    out.objective_value = pos_part(jamming_rate(ch, out.p));
    return out;
}

PowerAllocation jamming_oracle(const StandardGtwChannel& ch, int grid) {
    validate(ch);
    if (grid < 2) throw std::invalid_argument("grid: must be >= 2");
    PowerPoint best{0.0, 0.0};
    double best_rate = -std::numeric_limits<double>::infinity();
    for (int i = 0; i < grid; ++i) {
        for (int j = 0; j < grid; ++j) {
            const PowerPoint p{lattice(ch.pmax_1, i, grid), lattice(ch.pmax_2, j, grid)};
            const double r = jamming_rate(ch, p);
            if (r > best_rate) {
                best_rate = r;
                best = p;
            }
        }
    }
    PowerAllocation out;
    out.p = best;
    if (best.p_1 == ch.pmax_1 && best.p_2 == ch.pmax_2)
        out.case_label = AllocationCase::JamBothMax;
    else if (best.p_1 == 0.0 && best.p_2 == 0.0)
        out.case_label = AllocationCase::JamBothZero;
    else
        out.case_label = AllocationCase::OracleGrid;
    out.objective_value = pos_part(best_rate);
    return out;
}

JammingAdvice jamming_advice(const StandardGtwChannel& ch) {
    JammingAdvice advice;
    advice.sum_objective = optimal_power(ch).objective_value;
    advice.jam_objective = optimal_jamming(ch).objective_value;
    advice.prefer_jamming = advice.jam_objective > advice.sum_objective;
    advice.user2_single_user_decodable = ch.h_2 >= 1.0 + ch.h_1 * ch.pmax_1;
    return advice;
}

BatwJamReport batw_jamming(const BatwChannel& ch) {
    validate_batw(ch);
    // The user with the smaller crossover probability is the message sender;
    // the other transmits uniform bits that its own receiver can cancel.
    const double eps_tx = std::min(ch.eps_1, ch.eps_2);
    BatwJamReport out;
    out.rate = 1.0 - bin_entropy(eps_tx);
    out.jamming_needed =
        bin_entropy(ch.eps_1) + bin_entropy(ch.eps_2) >= 1.0 + bin_entropy(ch.eps_w);
    return out;
}

}  // namespace twt
