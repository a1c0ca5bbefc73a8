#pragma once

#include <array>
#include <cstdint>
#include <stdexcept>
#include <vector>

namespace twt {

/// Enumeration budget exceeded; carries the offending state count.
class budget_error : public std::runtime_error {
  public:
    explicit budget_error(const std::string& what) : std::runtime_error(what) {}
};

/// Parameters of the two-codebook stochastic encoder at block length n.
/// Each user k has m_k secret messages and mx_k randomization codewords;
/// the secret rate is R_k = log2(m_k)/n and the extra (non-secret) rate is
/// Rx_k = log2(mx_k)/n.  The exact-enumeration cost is
/// m_1*mx_1*m_2*mx_2*2^n weighted states and must stay within `budget`.
struct SchemeConfig {
    int n = 1;          ///< block length, 1 <= n <= 30
    int m_1 = 1;        ///< secret-message count, user 1 (>= 1)
    int m_2 = 1;
    int mx_1 = 1;       ///< randomization-codeword count, user 1 (>= 1)
    int mx_2 = 1;
    std::uint64_t seed = 0;
    std::uint64_t budget = std::uint64_t{1} << 28;  ///< max weighted states
};

/// Throws std::invalid_argument on bad counts, budget_error (naming the
/// offending product) when the enumeration cost exceeds the budget.
void validate(const SchemeConfig& config);

/// The four codebooks of the stochastic encoder.  A codeword is an n-bit
/// mask; bit i is symbol i of the codeword.
struct BinaryScheme {
    SchemeConfig config;
    std::vector<std::uint32_t> secret_1;  ///< m_1 codewords
    std::vector<std::uint32_t> secret_2;  ///< m_2 codewords
    std::vector<std::uint32_t> rand_1;    ///< mx_1 codewords
    std::vector<std::uint32_t> rand_2;    ///< mx_2 codewords
};

/// Draws all four codebooks with fair-coin symbols from mt19937_64(seed):
/// books are generated in the order secret_1, rand_1, secret_2, rand_2,
/// codewords in index order, symbols in position order, each symbol being
/// the low bit of one generator output.  Deterministic for a fixed config.
BinaryScheme build_scheme(const SchemeConfig& config);

/// Builds a scheme from explicitly given codebooks (no random generation);
/// book sizes and codeword widths must match the config.
BinaryScheme assemble_scheme(const SchemeConfig& config,
                             std::vector<std::uint32_t> secret_1,
                             std::vector<std::uint32_t> secret_2,
                             std::vector<std::uint32_t> rand_1,
                             std::vector<std::uint32_t> rand_2);

/// Stochastic encoding: user k transmits secret_k[w_k] xor rand_k[r_k].
/// Throws std::out_of_range on bad indices.
std::array<std::uint32_t, 2> encode(const BinaryScheme& scheme, int w_1, int w_2,
                                    int r_1, int r_2);

/// Exact secrecy figures of a scheme against an eavesdropper that sees
/// Z = X_1 xor X_2 xor E with E ~ iid Bernoulli(eps_w).  All entropies in
/// bits.  Ratios with a zero denominator (a user with a single message has
/// no secret to leak) are reported as 1.
struct SecrecyReport {
    double h_w = 0.0;          ///< H(W) = H(W_1, W_2)
    double h_w_given_z = 0.0;  ///< equivocation H(W | Z)
    double ratio = 0.0;        ///< H(W|Z) / H(W), in [0,1]
    double i_xsum_z = 0.0;     ///< I(X_sum; Z), X_sum = X_1 xor X_2
    std::array<double, 2> per_user_ratio{1.0, 1.0};  ///< H(W_k|Z) / H(W_k)
    std::array<double, 2> secret_rate{0.0, 0.0};     ///< R_k = log2(m_k)/n
    std::array<double, 2> extra_rate{0.0, 0.0};      ///< Rx_k = log2(mx_k)/n
    double tap_capacity = 0.0;     ///< C_W = 1 - h(eps_w)
    double rate_target_gap = 0.0;  ///< Rx_1 + Rx_2 - C_W
    bool rate_target_met = false;  ///< |rate_target_gap| <= 0.05 bits
};

/// Computes the exact joint distribution of (W_1, W_2, Z) by enumerating all
/// message pairs (uniform), randomization indices (uniform) and eavesdropper
/// error vectors (iid Bernoulli(eps_w)), then returns H(W), H(W|Z),
/// I(X_sum; Z) and per-user equivocation ratios by direct entropy summation.
/// No sampling is involved.  Probabilities below 1e-300 are treated as zero.
/// Throws budget_error when the state count exceeds config.budget, and
/// std::domain_error unless 0 <= eps_w <= 0.5.
SecrecyReport exact_equivocation(const BinaryScheme& scheme, double eps_w);

/// Exact average probability that receiver k fails to recover the OTHER
/// user's combined codeword (secret xor randomization, m*mx candidates)
/// under maximum-likelihood decoding over a BSC(eps_self), averaged
/// uniformly over messages and randomization indices with the error vectors
/// enumerated exactly.  Likelihood ties go to the lowest combined index
/// (index = w*mx + r); at eps_self = 0.5 every candidate ties, so the
/// decoder always outputs index 0.  Element k of the result is the error
/// probability at receiver k+1.  Cost is (m*mx)^2 * 2^n per user, checked
/// against config.budget.
std::array<double, 2> decode_error(const BinaryScheme& scheme, double eps_self);

}  // namespace twt
