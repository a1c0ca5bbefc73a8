#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <bit>
#include <cmath>
#include <random>
#include <vector>

#include "twt/info.hpp"
#include "twt/secrecy.hpp"

using namespace twt;

namespace {

// Test-only oracle: the literal five-deep loop over messages, randomization
// indices and error vectors, with no aggregation shortcuts.
struct LiteralFigures {
    double h_w, h_w_given_z, i_xsum_z;
};

LiteralFigures literal_enumeration(const BinaryScheme& s, double eps) {
    const int n = s.config.n;
    const size_t z_count = size_t{1} << n;
    const double tuples = static_cast<double>(s.config.m_1) * s.config.mx_1 * s.config.m_2 *
                          s.config.mx_2;
    const size_t w_count = static_cast<size_t>(s.config.m_1) * s.config.m_2;
    std::vector<double> p_wz(w_count * z_count, 0.0);
    std::vector<double> p_xz(z_count * z_count, 0.0);
    for (int w1 = 0; w1 < s.config.m_1; ++w1)
        for (int r1 = 0; r1 < s.config.mx_1; ++r1)
            for (int w2 = 0; w2 < s.config.m_2; ++w2)
                for (int r2 = 0; r2 < s.config.mx_2; ++r2)
                    for (size_t e = 0; e < z_count; ++e) {
                        double pe = 1.0;
                        for (int b = 0; b < n; ++b) pe *= ((e >> b) & 1u) ? eps : (1.0 - eps);
                        const std::uint32_t x = s.secret_1[w1] ^ s.rand_1[r1] ^ s.secret_2[w2] ^
                                                s.rand_2[r2];
                        const std::uint32_t z = x ^ static_cast<std::uint32_t>(e);
                        p_wz[(static_cast<size_t>(w1) * s.config.m_2 + w2) * z_count + z] +=
                            pe / tuples;
                        p_xz[x * z_count + z] += pe / tuples;
                    }
    const auto entropy = [](const std::vector<double>& d) {
        double h = 0.0;
        for (double p : d)
            if (p > 0.0) h -= p * std::log2(p);
        return h;
    };
    std::vector<double> p_z(z_count, 0.0), p_w(w_count, 0.0), p_x(z_count, 0.0);
    for (size_t w = 0; w < w_count; ++w)
        for (size_t z = 0; z < z_count; ++z) {
            p_z[z] += p_wz[w * z_count + z];
            p_w[w] += p_wz[w * z_count + z];
        }
    for (size_t x = 0; x < z_count; ++x)
        for (size_t z = 0; z < z_count; ++z) p_x[x] += p_xz[x * z_count + z];
    LiteralFigures out;
    out.h_w = entropy(p_w);
    out.h_w_given_z = entropy(p_wz) - entropy(p_z);
    out.i_xsum_z = entropy(p_x) + entropy(p_z) - entropy(p_xz);
    return out;
}

BinaryScheme one_time_pad() {
    SchemeConfig c;
    c.n = 1;
    c.m_1 = 2;
    c.m_2 = 1;
    c.mx_1 = 1;
    c.mx_2 = 2;
    return assemble_scheme(c, {0u, 1u}, {0u}, {0u}, {0u, 1u});
}

BinaryScheme plaintext() {
    SchemeConfig c;
    c.n = 1;
    c.m_1 = 2;
    c.m_2 = 1;
    c.mx_1 = 1;
    c.mx_2 = 1;
    return assemble_scheme(c, {0u, 1u}, {0u}, {0u}, {0u});
}

SchemeConfig random_config(std::mt19937_64& rng) {
    SchemeConfig c;
    c.n = 1 + static_cast<int>(rng() % 6);
    c.m_1 = 1 << (rng() % 3);
    c.m_2 = 1 << (rng() % 3);
    c.mx_1 = 1 << (rng() % 3);
    c.mx_2 = 1 << (rng() % 3);
    c.seed = rng();
    return c;
}

}  // namespace

TEST_CASE("build_scheme: shapes, determinism, budget") {
    SchemeConfig c;
    c.n = 1;
    c.m_1 = 1;
    c.m_2 = 1;
    c.mx_1 = 1;
    c.mx_2 = 2;
    c.seed = 99;
    const auto s = build_scheme(c);
    CHECK(s.secret_1.size() == 1);
    CHECK(s.secret_2.size() == 1);
    CHECK(s.rand_1.size() == 1);
    CHECK(s.rand_2.size() == 2);
    for (auto w : s.rand_2) CHECK(w <= 1u);  // one-bit words

    const auto again = build_scheme(c);
    CHECK(s.secret_1 == again.secret_1);
    CHECK(s.secret_2 == again.secret_2);
    CHECK(s.rand_1 == again.rand_1);
    CHECK(s.rand_2 == again.rand_2);

    SchemeConfig other = c;
    other.seed = 100;
    int diffs = 0;
    for (int trial = 0; trial < 16; ++trial) {
        other.seed = 100 + trial;
        if (build_scheme(other).rand_2 != s.rand_2) ++diffs;
    }
    CHECK(diffs > 0);

    SchemeConfig big;
    big.n = 30;
    big.m_1 = big.m_2 = big.mx_1 = big.mx_2 = 2;
    CHECK_THROWS_AS(build_scheme(big), budget_error);

    SchemeConfig bad;
    bad.n = 0;
    CHECK_THROWS_AS(build_scheme(bad), std::invalid_argument);
    bad.n = 31;
    CHECK_THROWS_AS(build_scheme(bad), std::invalid_argument);
    bad.n = 2;
    bad.m_1 = 0;
    CHECK_THROWS_AS(build_scheme(bad), std::invalid_argument);
}

TEST_CASE("assemble_scheme validates book shapes") {
    SchemeConfig c;
    c.n = 2;
    c.m_1 = 2;
    c.m_2 = 1;
    c.mx_1 = 1;
    c.mx_2 = 1;
    CHECK_NOTHROW(assemble_scheme(c, {0u, 3u}, {1u}, {2u}, {0u}));
    CHECK_THROWS_AS(assemble_scheme(c, {0u}, {1u}, {2u}, {0u}), std::invalid_argument);
    CHECK_THROWS_AS(assemble_scheme(c, {0u, 4u}, {1u}, {2u}, {0u}), std::invalid_argument);
}

TEST_CASE("encode") {
    SchemeConfig c;
    c.n = 4;
    c.m_1 = 2;
    c.m_2 = 2;
    c.mx_1 = 2;
    c.mx_2 = 2;
    c.seed = 5;
    const auto s = build_scheme(c);

    SUBCASE("xor with the all-zero randomization word is the identity") {
        auto zeroed = s;
        zeroed.rand_1[0] = 0u;
        const auto x = encode(zeroed, 1, 0, 0, 0);
        CHECK(x[0] == zeroed.secret_1[1]);
    }
    SUBCASE("deterministic and involutive") {
        const auto a = encode(s, 1, 1, 0, 1);
        const auto b = encode(s, 1, 1, 0, 1);
        CHECK(a == b);
        CHECK((a[0] ^ s.rand_1[0]) == s.secret_1[1]);
        CHECK((a[1] ^ s.rand_2[1]) == s.secret_2[1]);
    }
    SUBCASE("index range") {
        CHECK_THROWS_AS(encode(s, 2, 0, 0, 0), std::out_of_range);
        CHECK_THROWS_AS(encode(s, 0, 0, -1, 0), std::out_of_range);
    }
}

TEST_CASE("exact_equivocation: one-time pad and plaintext") {
    const auto otp = one_time_pad();
    for (double eps : {0.0, 0.17, 0.5}) {
        const auto report = exact_equivocation(otp, eps);
        CHECK(report.ratio == doctest::Approx(1.0).epsilon(1e-12));
        CHECK(report.h_w == doctest::Approx(1.0).epsilon(1e-12));
        CHECK(report.per_user_ratio[0] == doctest::Approx(1.0).epsilon(1e-12));
        CHECK(report.per_user_ratio[1] == 1.0);  // no secret on user 2
    }

    const auto plain = plaintext();
    const auto leak = exact_equivocation(plain, 0.0);
    CHECK(leak.ratio == doctest::Approx(0.0).epsilon(1e-12));
    CHECK(leak.h_w_given_z == doctest::Approx(0.0).epsilon(1e-12));
    CHECK(leak.i_xsum_z == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("exact_equivocation: pure-noise tap hides everything") {
    std::mt19937_64 rng(61);
    for (int trial = 0; trial < 10; ++trial) {
        const auto s = build_scheme(random_config(rng));
        const auto report = exact_equivocation(s, 0.5);
        CHECK(report.ratio == doctest::Approx(1.0).epsilon(1e-12));
        CHECK(report.i_xsum_z == doctest::Approx(0.0).epsilon(1e-9));
    }
}

TEST_CASE("exact_equivocation agrees with the literal enumeration") {
    std::mt19937_64 rng(67);
    std::uniform_real_distribution<double> ueps(0.0, 0.5);
    for (int trial = 0; trial < 25; ++trial) {
        SchemeConfig c = random_config(rng);
        c.n = 1 + static_cast<int>(rng() % 4);
        const auto s = build_scheme(c);
        const double eps = ueps(rng);
        const auto report = exact_equivocation(s, eps);
        const auto lit = literal_enumeration(s, eps);
        CHECK(report.h_w == doctest::Approx(lit.h_w).epsilon(1e-12));
        CHECK(report.h_w_given_z == doctest::Approx(lit.h_w_given_z).scale(1.0).epsilon(1e-11));
        CHECK(report.i_xsum_z == doctest::Approx(lit.i_xsum_z).scale(1.0).epsilon(1e-11));
    }
}

TEST_CASE("exact_equivocation: information inequalities hold") {
    std::mt19937_64 rng(71);
    std::uniform_real_distribution<double> ueps(0.0, 0.5);
    for (int trial = 0; trial < 60; ++trial) {
        const auto s = build_scheme(random_config(rng));
        const double eps = ueps(rng);
        const auto r = exact_equivocation(s, eps);
        CHECK(r.ratio >= -1e-9);
        CHECK(r.ratio <= 1.0 + 1e-9);
        const double i_wz = r.h_w - r.h_w_given_z;
        CHECK(i_wz <= r.i_xsum_z + 1e-9);                          // Markov chain
        CHECK(r.i_xsum_z <= s.config.n * (1.0 - bin_entropy(eps)) + 1e-9);
        CHECK(r.h_w_given_z >= r.h_w - r.i_xsum_z - 1e-9);
    }
}

TEST_CASE("exact_equivocation: noisier taps never leak more") {
    std::mt19937_64 rng(73);
    for (int trial = 0; trial < 10; ++trial) {
        const auto s = build_scheme(random_config(rng));
        double prev = -1.0;
        for (int k = 0; k <= 5; ++k) {
            const auto r = exact_equivocation(s, 0.1 * k);
            CHECK(r.ratio >= prev - 1e-12);
            prev = r.ratio;
        }
    }
}

TEST_CASE("exact_equivocation: reference block-length-6 ensemble") {
    SchemeConfig c;
    c.n = 6;
    c.m_1 = c.m_2 = 2;
    c.mx_1 = c.mx_2 = 4;
    double mean_ratio = 0.0;
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        c.seed = seed;
        const auto r = exact_equivocation(build_scheme(c), 0.1);
        CHECK(r.ratio >= 0.0);
        CHECK(r.ratio <= 1.0 + 1e-9);
        CHECK(r.secret_rate[0] == doctest::Approx(1.0 / 6.0).epsilon(1e-15));
        CHECK(r.extra_rate[0] == doctest::Approx(2.0 / 6.0).epsilon(1e-15));
        mean_ratio += r.ratio / 20.0;
    }
    MESSAGE("mean equivocation ratio over 20 seeds: ", mean_ratio);
    CHECK(mean_ratio > 0.5);  // randomization close to the tap capacity keeps W mostly hidden
}

TEST_CASE("decode_error") {
    SchemeConfig c;
    c.n = 2;
    c.m_1 = 2;
    c.m_2 = 1;
    c.mx_1 = 1;
    c.mx_2 = 1;

    SUBCASE("noiseless channel, distinct codewords: no errors") {
        const auto s = assemble_scheme(c, {0u, 3u}, {1u}, {0u}, {0u});
        const auto err = decode_error(s, 0.0);
        CHECK(err[0] == 0.0);
        CHECK(err[1] == 0.0);
    }
    SUBCASE("duplicate codewords force tie-break errors") {
        const auto s = assemble_scheme(c, {1u, 1u}, {0u}, {0u}, {0u});
        const auto err = decode_error(s, 0.0);
        CHECK(err[1] == doctest::Approx(0.5).epsilon(1e-15));  // 1/(m*mx) contribution
    }
    SUBCASE("useless channel: only the constant guess survives") {
        const auto s = assemble_scheme(c, {0u, 3u}, {1u}, {0u}, {0u});
        const auto err = decode_error(s, 0.5);
        CHECK(err[1] == doctest::Approx(1.0 - 0.5).epsilon(1e-15));
        CHECK(err[0] == doctest::Approx(0.0).epsilon(1e-15));  // single codeword
    }
    SUBCASE("nondecreasing in the crossover probability") {
        SchemeConfig cc;
        cc.n = 5;
        cc.m_1 = 2;
        cc.m_2 = 2;
        cc.mx_1 = 2;
        cc.mx_2 = 2;
        cc.seed = 123;
        const auto s = build_scheme(cc);
        std::array<double, 2> prev{-1.0, -1.0};
        for (int k = 0; k <= 10; ++k) {
            const auto err = decode_error(s, 0.05 * k);
            CHECK(err[0] >= prev[0] - 1e-12);
            CHECK(err[1] >= prev[1] - 1e-12);
            prev = err;
        }
    }
    SUBCASE("budget guard on the combined-book cost") {
        SchemeConfig cc;
        cc.n = 10;
        cc.m_1 = 64;
        cc.mx_1 = 64;
        cc.m_2 = 1;
        cc.mx_2 = 1;
        const auto s = build_scheme(cc);  // equivocation cost fits the budget
        CHECK_THROWS_AS(decode_error(s, 0.1), budget_error);
    }
}
