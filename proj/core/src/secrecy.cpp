#include "twt/secrecy.hpp"

#include <bit>
#include <cmath>
#include <random>
#include <string>

#include "twt/info.hpp"

namespace twt {

namespace {

constexpr int kMaxBlockLength = 30;
constexpr double kProbFloor = 1e-300;  // smaller masses count as zero

void require(bool ok, const char* what) {
    if (!ok) throw std::invalid_argument(what);
}

long double enumeration_cost(const SchemeConfig& c) {
    return static_cast<long double>(c.m_1) * c.mx_1 * c.m_2 * c.mx_2 *
           std::exp2l(static_cast<long double>(c.n));
}

double plog2p(double p) { return p > kProbFloor ? p * std::log2(p) : 0.0; }

/// P(weight-d error pattern) = eps^d (1-eps)^(n-d), with 0^0 = 1.
std::vector<double> error_weight_probs(int n, double eps) {
    std::vector<double> pow_e(n + 1), pow_q(n + 1);
    pow_e[0] = pow_q[0] = 1.0;
    for (int d = 1; d <= n; ++d) {
        pow_e[d] = pow_e[d - 1] * eps;
        pow_q[d] = pow_q[d - 1] * (1.0 - eps);
    }
    std::vector<double> out(n + 1);
    for (int d = 0; d <= n; ++d) out[d] = pow_e[d] * pow_q[n - d];
    return out;
}

/// H(Z | X_sum = x) in bits; independent of x for an additive error vector,
/// computed by summing -p log p over the 2^n patterns grouped by weight.
double noise_entropy(int n, const std::vector<double>& weight_prob) {
    double h = 0.0;
    double binom = 1.0;  // C(n, d)
    for (int d = 0; d <= n; ++d) {
        h -= binom * plog2p(weight_prob[d]);
        binom = binom * (n - d) / (d + 1);
    }
    return h;
}

double entropy(const std::vector<double>& dist) {
    double h = 0.0;
    for (double p : dist) h -= plog2p(p);
    return h;
}

void check_books(const SchemeConfig& c, const std::vector<std::uint32_t>& book, int count,
                 const char* name) {
    if (static_cast<int>(book.size()) != count)
        throw std::invalid_argument(std::string(name) + ": book size does not match config");
    const std::uint32_t mask = c.n == 32 ? ~0u : (1u << c.n) - 1;
    for (std::uint32_t w : book)
        if ((w & ~mask) != 0)
            throw std::invalid_argument(std::string(name) + ": codeword wider than n symbols");
}

}  // namespace

void validate(const SchemeConfig& config) {
    require(config.n >= 1 && config.n <= kMaxBlockLength, "n: must be in [1, 30]");
    require(config.m_1 >= 1, "m_1: must be >= 1");
    require(config.m_2 >= 1, "m_2: must be >= 1");
    require(config.mx_1 >= 1, "mx_1: must be >= 1");
    require(config.mx_2 >= 1, "mx_2: must be >= 1");
    const long double cost = enumeration_cost(config);
    if (cost > static_cast<long double>(config.budget))
        throw budget_error("enumeration cost m_1*mx_1*m_2*mx_2*2^n = " +
                           std::to_string(static_cast<double>(cost)) + " exceeds budget " +
                           std::to_string(config.budget));
}

BinaryScheme build_scheme(const SchemeConfig& config) {
    validate(config);
    BinaryScheme scheme;
    scheme.config = config;
    std::mt19937_64 rng(config.seed);
    const auto draw_book = [&](int count) {
        std::vector<std::uint32_t> book(count);
        for (auto& word : book) {
            std::uint32_t w = 0;
            for (int i = 0; i < config.n; ++i) w |= static_cast<std::uint32_t>(rng() & 1u) << i;
            word = w;
        }
        return book;
    };
    scheme.secret_1 = draw_book(config.m_1);
    scheme.rand_1 = draw_book(config.mx_1);
    scheme.secret_2 = draw_book(config.m_2);
    scheme.rand_2 = draw_book(config.mx_2);
    return scheme;
}

BinaryScheme assemble_scheme(const SchemeConfig& config, std::vector<std::uint32_t> secret_1,
                             std::vector<std::uint32_t> secret_2,
                             std::vector<std::uint32_t> rand_1,
                             std::vector<std::uint32_t> rand_2) {
    validate(config);
    check_books(config, secret_1, config.m_1, "secret_1");
    check_books(config, secret_2, config.m_2, "secret_2");
    check_books(config, rand_1, config.mx_1, "rand_1");
    check_books(config, rand_2, config.mx_2, "rand_2");
    BinaryScheme scheme;
    scheme.config = config;
    scheme.secret_1 = std::move(secret_1);
    scheme.secret_2 = std::move(secret_2);
    scheme.rand_1 = std::move(rand_1);
    scheme.rand_2 = std::move(rand_2);
    return scheme;
}

std::array<std::uint32_t, 2> encode(const BinaryScheme& scheme, int w_1, int w_2, int r_1,
                                    int r_2) {
    const auto pick = [](const std::vector<std::uint32_t>& book, int i, const char* name) {
        if (i < 0 || static_cast<size_t>(i) >= book.size())
            throw std::out_of_range(std::string(name) + ": index out of range");
        return book[static_cast<size_t>(i)];
    };
    return {pick(scheme.secret_1, w_1, "w_1") ^ pick(scheme.rand_1, r_1, "r_1"),
            pick(scheme.secret_2, w_2, "w_2") ^ pick(scheme.rand_2, r_2, "r_2")};
}

SecrecyReport exact_equivocation(const BinaryScheme& scheme, double eps_w) {
    const SchemeConfig& c = scheme.config;
    validate(c);
    if (!(eps_w >= 0.0 && eps_w <= 0.5))
        throw std::domain_error("eps_w: must be in [0, 0.5]");

    const int n = c.n;
    const size_t z_count = size_t{1} << n;
    const size_t w_count = static_cast<size_t>(c.m_1) * c.m_2;
    const auto weight_prob = error_weight_probs(n, eps_w);

    // Pass 1: count how often each (message pair, sum codeword) occurs over
    // the uniform randomization indices.
    std::vector<double> count_wx(w_count * z_count, 0.0);
    for (int w1 = 0; w1 < c.m_1; ++w1)
        for (int r1 = 0; r1 < c.mx_1; ++r1)
            for (int w2 = 0; w2 < c.m_2; ++w2)
                for (int r2 = 0; r2 < c.mx_2; ++r2) {
                    const std::uint32_t x_sum = scheme.secret_1[w1] ^ scheme.rand_1[r1] ^
                                                scheme.secret_2[w2] ^ scheme.rand_2[r2];
                    count_wx[(static_cast<size_t>(w1) * c.m_2 + w2) * z_count + x_sum] += 1.0;
                }
    const double tuple_count =
        static_cast<double>(c.m_1) * c.mx_1 * static_cast<double>(c.m_2) * c.mx_2;

    // Pass 2: convolve with the eavesdropper noise to get p(w, z); this is
    // the budgeted enumeration (every nonzero (w, x) against every z).
    std::vector<double> joint_wz(w_count * z_count, 0.0);
    std::vector<double> p_xsum(z_count, 0.0);
    for (size_t w = 0; w < w_count; ++w)
        for (size_t x = 0; x < z_count; ++x) {
            const double cnt = count_wx[w * z_count + x];
            if (cnt == 0.0) continue;
            const double mass = cnt / tuple_count;
            p_xsum[x] += mass;
            double* row = &joint_wz[w * z_count];
            for (size_t z = 0; z < z_count; ++z)
                row[z] += mass * weight_prob[std::popcount(static_cast<std::uint32_t>(x ^ z))];
        }

    // Marginals.
    std::vector<double> p_z(z_count, 0.0);
    std::vector<double> p_w(w_count, 0.0);
    std::vector<double> p_w1z(static_cast<size_t>(c.m_1) * z_count, 0.0);
    std::vector<double> p_w2z(static_cast<size_t>(c.m_2) * z_count, 0.0);
    std::vector<double> p_w1(c.m_1, 0.0), p_w2(c.m_2, 0.0);
    for (size_t w = 0; w < w_count; ++w) {
        const size_t w1 = w / c.m_2, w2 = w % c.m_2;
        for (size_t z = 0; z < z_count; ++z) {
            const double p = joint_wz[w * z_count + z];
            p_z[z] += p;
            p_w[w] += p;
            p_w1z[w1 * z_count + z] += p;
            p_w2z[w2 * z_count + z] += p;
        }
        p_w1[w1] += p_w[w];
        p_w2[w2] += p_w[w];
    }

    const double h_z = entropy(p_z);
    const double h_wz = entropy(joint_wz);
    const double h_w = entropy(p_w);
    const double h_w_given_z = h_wz - h_z;

    // I(X_sum; Z) = H(Z) - H(Z | X_sum); the conditional term is the same
    // for every sum codeword.
    const double h_noise = noise_entropy(n, weight_prob);
    double h_z_given_x = 0.0;
    for (double px : p_xsum) h_z_given_x += px * h_noise;
    const double i_xsum_z = h_z - h_z_given_x;

    SecrecyReport report;
    report.h_w = h_w;
    report.h_w_given_z = h_w_given_z;
    report.ratio = h_w > 0.0 ? h_w_given_z / h_w : 1.0;
    report.i_xsum_z = i_xsum_z;
    const double h_w1 = entropy(p_w1), h_w2 = entropy(p_w2);
    report.per_user_ratio[0] = h_w1 > 0.0 ? (entropy(p_w1z) - h_z) / h_w1 : 1.0;
    report.per_user_ratio[1] = h_w2 > 0.0 ? (entropy(p_w2z) - h_z) / h_w2 : 1.0;
    report.secret_rate = {std::log2(static_cast<double>(c.m_1)) / n,
                          std::log2(static_cast<double>(c.m_2)) / n};
    report.extra_rate = {std::log2(static_cast<double>(c.mx_1)) / n,
                         std::log2(static_cast<double>(c.mx_2)) / n};
    report.tap_capacity = 1.0 - bin_entropy(eps_w);
    report.rate_target_gap = report.extra_rate[0] + report.extra_rate[1] - report.tap_capacity;
    report.rate_target_met = std::abs(report.rate_target_gap) <= 0.05;
    return report;
}

std::array<double, 2> decode_error(const BinaryScheme& scheme, double eps_self) {
    const SchemeConfig& c = scheme.config;
    validate(c);
    if (!(eps_self >= 0.0 && eps_self <= 0.5))
        throw std::domain_error("eps_self: must be in [0, 0.5]");

    const int n = c.n;
    const size_t z_count = size_t{1} << n;
    const auto weight_prob = error_weight_probs(n, eps_self);

    // Receiver k faces the other user's combined book after canceling its
    // own codeword.
    const auto book_error = [&](const std::vector<std::uint32_t>& secret,
                                const std::vector<std::uint32_t>& rand_book) {
        const size_t m = secret.size(), mx = rand_book.size();
        const size_t total = m * mx;
        const long double cost =
            static_cast<long double>(total) * total * std::exp2l(static_cast<long double>(n));
        if (cost > static_cast<long double>(c.budget))
            throw budget_error("decode enumeration cost (m*mx)^2*2^n = " +
                               std::to_string(static_cast<double>(cost)) + " exceeds budget " +
                               std::to_string(c.budget));
        std::vector<std::uint32_t> combined(total);
        for (size_t w = 0; w < m; ++w)
            for (size_t r = 0; r < mx; ++r) combined[w * mx + r] = secret[w] ^ rand_book[r];

        // At eps = 0.5 every candidate has the same likelihood, so the
        // lowest-index tie rule makes the decoder constant.
        if (eps_self == 0.5) return 1.0 - 1.0 / static_cast<double>(total);

        double p_err = 0.0;
        for (size_t truth = 0; truth < total; ++truth) {
            for (size_t e = 0; e < z_count; ++e) {
                const std::uint32_t y = combined[truth] ^ static_cast<std::uint32_t>(e);
                size_t decoded = 0;
                int best_d = n + 1;
                for (size_t i = 0; i < total; ++i) {
                    const int d = std::popcount(combined[i] ^ y);
                    if (d < best_d) {  // strict: ties keep the lowest index
                        best_d = d;
                        decoded = i;
                    }
                }
                if (decoded != truth)
                    p_err += weight_prob[std::popcount(static_cast<std::uint32_t>(e))];
            }
        }
        return p_err / static_cast<double>(total);
    };

    return {book_error(scheme.secret_2, scheme.rand_2),
            book_error(scheme.secret_1, scheme.rand_1)};
}

}  // namespace twt
