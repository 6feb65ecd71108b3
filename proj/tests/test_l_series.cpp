#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include <dirichlet/l_series.hpp>

#include "oracles.hpp"

using namespace dirichlet;

namespace {

constexpr double pi = std::numbers::pi;
constexpr double zeta_3_2 = 2.612375348685488343;  // zeta(3/2)

const DirichletCharacter& mod4_nonprincipal() {
    static const auto chi = enumerate_characters(4)[1];
    return chi;
}

DirichletCharacter mod5_with_i_at_2() {
    for (const auto& chi : enumerate_characters(5)) {
        if (chi(2) == CharacterValue(RootOfUnity(1, 4))) return chi;
    }
    throw std::logic_error("missing character");
}

struct Oracle {
    std::complex<long double> value;
    long double error;
};

// Plain partial sum over n <= N (N a multiple of k) for non-principal chi.
// The tail is bounded by Abel summation: 2 H N^{-s}, H the largest period partial sum.
Oracle naive_l(const DirichletCharacter& chi, double s, std::int64_t n_max) {
    const std::int64_t k = chi.modulus();
    std::complex<long double> sum = 0.0L, running = 0.0L;
    long double h = 0.0L;
    for (std::int64_t x = 1; x <= k; ++x) {
        const auto c = chi(x).to_complex();
        running += std::complex<long double>(c.real(), c.imag());
        h = std::max(h, std::abs(running));
    }
    for (std::int64_t n = n_max; n >= 1; --n) {
        const auto c = chi(n).to_complex();
        if (c == 0.0) continue;
        sum += std::complex<long double>(c.real(), c.imag()) * std::pow(static_cast<long double>(n), -static_cast<long double>(s));
    }
    return {sum, 2.0L * h * std::pow(static_cast<long double>(n_max), -static_cast<long double>(s))};
}

std::vector<std::int64_t> oracle_primes(std::int64_t bound) {
    std::vector<std::int64_t> out;
    for (std::int64_t n = 2; n <= bound; ++n) {
        if (oracle::is_prime(n)) out.push_back(n);
    }
    return out;
}

}  // namespace

TEST(ZetaPartial, Examples) {
    const auto z2 = zeta_partial(2.0, 1'000'000);
    EXPECT_NEAR(z2.value.real(), pi * pi / 6.0, 1e-5);
    EXPECT_LE(pi * pi / 6.0 - z2.value.real(), z2.tail_bound);
    EXPECT_EQ(z2.truncation, 1'000'000);

    for (double s : {1.5, 2.0, 7.0}) {
        const auto one = zeta_partial(s, 1);
        EXPECT_EQ(one.value.real(), 1.0);
        EXPECT_DOUBLE_EQ(one.tail_bound, 1.0 / (s - 1.0));
    }
    EXPECT_NEAR(zeta_partial(4.0, 10'000).value.real(), std::pow(pi, 4) / 90.0, 1e-9);
}

TEST(ZetaPartial, RejectsBadArguments) {
    EXPECT_THROW(zeta_partial(1.0, 10), domain_error);
    EXPECT_THROW(zeta_partial(0.5, 10), domain_error);
    EXPECT_THROW(zeta_partial(2.0, 0), domain_error);
}

TEST(LDirect, Examples) {
    EXPECT_NEAR(l_direct(2.0, principal_character(1)).value.real(), pi * pi / 6.0, 1e-10);
    const auto catalan = l_direct(2.0, mod4_nonprincipal());
    EXPECT_NEAR(catalan.value.real(), 0.915966, 1e-6);
    const auto oracle = naive_l(mod4_nonprincipal(), 2.0, 2'000'000);
    EXPECT_NEAR(catalan.value.real(), static_cast<double>(oracle.value.real()), static_cast<double>(oracle.error) + 1e-10);
    EXPECT_NEAR(l_direct(2.0, principal_character(2)).value.real(), 0.75 * pi * pi / 6.0, 1e-10);
    EXPECT_NEAR(l_direct(2.0, principal_character(2)).value.real(), 1.233700, 1e-6);
}

TEST(LDirect, AgreesWithPartialSumOracleWithinReportedBounds) {
    for (std::int64_t k = 3; k <= 12; ++k) {
        for (const auto& chi : enumerate_characters(k)) {
            if (classify(chi) == CharacterClass::Principal) continue;
            for (double s : {1.5, 2.0, 3.0}) {
                const auto got = l_direct(s, chi, 1e-10);
                ASSERT_LT(got.tail_bound, 1e-10);
                const std::int64_t n_max = 600'000 / k * k;
                const auto want = naive_l(chi, s, n_max);
                const double diff = std::abs(std::complex<double>(static_cast<double>(want.value.real()),
                                                                  static_cast<double>(want.value.imag())) -
                                             got.value);
                ASSERT_LE(diff, got.tail_bound + static_cast<double>(want.error) + 1e-13) << "k=" << k << " s=" << s;
            }
        }
    }
}

TEST(LDirect, PrincipalCharactersAreZetaWithEulerFactorsRemoved) {
    for (std::int64_t k : {1, 2, 3, 4, 6, 10, 12}) {
        double factor = 1.0;
        for (const auto& pp : factorize(k).factors) factor *= 1.0 - std::pow(static_cast<double>(pp.prime), -1.5);
        EXPECT_NEAR(l_direct(1.5, principal_character(k), 1e-10).value.real(), zeta_3_2 * factor, 1e-9) << k;
    }
}

TEST(LDirect, ConjugateCharacterGivesConjugateValue) {
    for (std::int64_t k : {5, 7, 13, 16}) {
        for (const auto& chi : enumerate_characters(k)) {
            const auto a = l_direct(2.0, chi).value;
            const auto b = l_direct(2.0, char_conj(chi)).value;
            EXPECT_NEAR(std::abs(b - std::conj(a)), 0.0, 1e-12);
        }
    }
}

TEST(LDirect, ComplexArgument) {
    const auto chi = mod5_with_i_at_2();
    const auto real_path = l_direct(2.0, chi, 1e-10).value;
    const auto complex_path = l_direct(std::complex<double>(2.0, 0.0), chi, 1e-6);
    EXPECT_NEAR(std::abs(complex_path.value - real_path), 0.0, complex_path.tail_bound);
    const std::complex<double> s(1.8, 3.0);
    const auto a = l_direct(s, chi, 1e-5);
    const auto b = l_direct(std::conj(s), char_conj(chi), 1e-5);
    EXPECT_NEAR(std::abs(b.value - std::conj(a.value)), 0.0, 1e-12);
    EXPECT_THROW(l_direct(std::complex<double>(1.0, 2.0), chi), domain_error);
}

TEST(LDirect, RejectsSAtMostOne) {
    EXPECT_THROW(l_direct(1.0, mod4_nonprincipal()), domain_error);
    EXPECT_THROW(l_direct(0.9, principal_character(3)), domain_error);
}

TEST(EulerProduct, Examples) {
    EXPECT_NEAR(euler_product(2.0, principal_character(1), 100'000).value.real(), zeta_partial(2.0, 1'000'000).value.real(),
                1e-4);
    for (std::int64_t p : {-3, 0, 1}) {
        const auto e = euler_product(2.0, mod4_nonprincipal(), p);
        EXPECT_EQ(e.value, std::complex<double>(1.0, 0.0));
    }
    EXPECT_NEAR(euler_product(2.0, mod4_nonprincipal(), 100'000).value.real(), l_direct(2.0, mod4_nonprincipal()).value.real(),
                1e-4);
}

TEST(EulerProduct, TailBoundCoversTheDirectValue) {
    const auto primes = oracle_primes(10'000);
    for (std::int64_t k = 1; k <= 12; ++k) {
        for (const auto& chi : enumerate_characters(k)) {
            for (double s : {1.5, 2.0, 3.0}) {
                const auto product = euler_product(s, chi, primes, 10'000);
                const auto direct = l_direct(s, chi, 1e-10);
                ASSERT_LE(std::abs(product.value - direct.value), product.tail_bound + direct.tail_bound)
                    << "k=" << k << " s=" << s;
            }
        }
    }
}

TEST(LogExpansion, Examples) {
    const auto primes = oracle_primes(10'000);
    for (std::int64_t k : {1, 4, 5, 7, 12}) {
        for (const auto& chi : enumerate_characters(k)) {
            const auto parts = log_l_expansion(2.0, chi, primes, 10'000, 40);
            const auto product = euler_product(2.0, chi, primes, 10'000).value;
            EXPECT_NEAR(std::abs(parts.main_term + parts.higher_terms - std::log(product)), 0.0, 1e-9) << k;
        }
    }
    for (const auto& chi : enumerate_characters(7)) {
        const auto empty = log_l_expansion(2.0, chi, 1, 30);
        EXPECT_EQ(empty.main_term, std::complex<double>(0.0, 0.0));
        EXPECT_EQ(empty.higher_terms, std::complex<double>(0.0, 0.0));
    }
}

TEST(LogExpansion, HigherTermsForZetaAtTwo) {
    // sum_q sum_{j >= 2} q^{-2j}/j = sum_q (-log(1 - q^{-2}) - q^{-2})
    long double expected = 0.0L;
    for (auto q : oracle_primes(100'000)) {
        const long double x = 1.0L / (static_cast<long double>(q) * q);
        expected += -std::log1p(-x) - x;
    }
    const auto parts = log_l_expansion(2.0, principal_character(1), 100'000, 50);
    EXPECT_NEAR(parts.higher_terms.real(), static_cast<double>(expected), 1e-12);
    EXPECT_NEAR(parts.higher_terms.real(), 0.0454528824, 1e-9);
    EXPECT_EQ(parts.higher_terms.imag(), 0.0);
}

TEST(LogExpansion, HigherTermsBoundedByOne) {
    const auto primes = oracle_primes(20'000);
    for (std::int64_t k = 1; k <= 12; ++k) {
        for (const auto& chi : enumerate_characters(k)) {
            for (double s : {1.01, 1.05, 1.5, 3.0}) {
                ASSERT_LT(std::abs(log_l_expansion(s, chi, primes, 20'000, 50).higher_terms), 1.0);
            }
        }
    }
}

TEST(LogExpansion, RejectsBadArguments) {
    EXPECT_THROW(log_l_expansion(1.0, mod4_nonprincipal(), 100, 5), domain_error);
    EXPECT_THROW(log_l_expansion(2.0, mod4_nonprincipal(), 100, 1), domain_error);
}

TEST(FundamentalIdentity, Examples) {
    EXPECT_LT(fundamental_identity_check(4, 1, 1.5, 10'000, 30).residual, 1e-9);
    EXPECT_LT(fundamental_identity_check(5, 2, 1.2, 10'000, 30).residual, 1e-9);
}

TEST(FundamentalIdentity, RightSideMatchesSieveOracle) {
    const std::int64_t k = 4, m = 3;
    const double s = 1.1;
    const auto check = fundamental_identity_check(k, m, s, 10'000, 30);
    long double first = 0.0L, all = 0.0L;
    for (auto q : oracle_primes(10'000)) {
        std::int64_t power = 1;
        for (int j = 1; j <= 30; ++j) {
            power = power * q % k;
            if (power != m) continue;
            const long double term = std::pow(static_cast<long double>(q), -j * static_cast<long double>(s)) / j;
            all += term;
            if (j == 1) first += term;
        }
    }
    EXPECT_NEAR(check.rhs, static_cast<double>(2.0L * all), 1e-12);
    EXPECT_LT(check.residual, 1e-9);
    // Dominated by q = 3 mod 4 at the first power; cubes such as 27 supply most of the rest.
    EXPECT_GT(static_cast<double>(first / all), 0.95);
}

TEST(FundamentalIdentity, ResidualSmallForAllUnitsSmallModuli) {
    const auto primes = oracle_primes(2'000);
    for (std::int64_t k = 1; k <= 12; ++k) {
        const auto chars = enumerate_characters(k);
        for (auto m : oracle::units(k)) {
            for (double s : {1.1, 2.0}) {
                ASSERT_LT(fundamental_identity_check(chars, m, s, primes, 2'000, 20).residual, 1e-9) << k << " " << m;
            }
        }
    }
}

TEST(FundamentalIdentity, RejectsNonUnits) {
    EXPECT_THROW(fundamental_identity_check(4, 2, 1.5, 100, 5), not_a_unit_error);
    EXPECT_THROW(fundamental_identity_check(4, 1, 1.0, 100, 5), domain_error);
}

TEST(LAtOne, Examples) {
    const auto leibniz = l_at_one(mod4_nonprincipal(), 1e-7);
    EXPECT_NEAR(leibniz.value.real(), pi / 4.0, 1e-6);
    EXPECT_LE(std::abs(leibniz.value.real() - pi / 4.0), leibniz.error_bound);

    const auto chi3 = enumerate_characters(3)[1];
    const auto l3 = l_at_one(chi3, 1e-7);
    EXPECT_NEAR(l3.value.real(), 0.604600, 1e-5);
    const auto oracle3 = naive_l(chi3, 1.0, 3'000'000);
    EXPECT_NEAR(l3.value.real(), static_cast<double>(oracle3.value.real()), l3.error_bound + static_cast<double>(oracle3.error));

    const auto chi5 = mod5_with_i_at_2();
    const auto a = l_at_one(chi5);
    const auto b = l_at_one(char_conj(chi5));
    EXPECT_GT(std::abs(a.value), 0.0);
    EXPECT_NEAR(std::abs(b.value - std::conj(a.value)), 0.0, 1e-12);
}

TEST(LAtOne, ErrorBoundCoversOracleAndCertifiesNonvanishing) {
    for (std::int64_t k = 3; k <= 15; ++k) {
        for (const auto& chi : enumerate_characters(k)) {
            if (classify(chi) == CharacterClass::Principal) continue;
            const auto got = l_at_one(chi, 1e-6);
            EXPECT_TRUE(got.nonzero_certified) << k;
            EXPECT_EQ(got.truncation % k, 0);
            const auto want = naive_l(chi, 1.0, 4'000'000 / k * k);
            const double diff = std::abs(std::complex<double>(static_cast<double>(want.value.real()),
                                                              static_cast<double>(want.value.imag())) -
                                         got.value);
            ASSERT_LE(diff, got.error_bound + static_cast<double>(want.error)) << k;
        }
    }
}

TEST(LAtOne, PrincipalHasAPole) {
    EXPECT_THROW(l_at_one(principal_character(4)), domain_error);
    EXPECT_THROW(l_at_one(principal_character(1)), domain_error);
}

TEST(DivergenceProfile, Examples) {
    const std::vector<double> s_values{2.0, 1.5, 1.1};
    const auto rows = divergence_profile(4, 1, s_values, 1'000'000);
    ASSERT_EQ(rows.size(), 3u);
    EXPECT_LT(rows[0].value, rows[1].value);
    EXPECT_LT(rows[1].value, rows[2].value);
    EXPECT_TRUE(increases_as_s_decreases(rows));

    const std::vector<double> one_s{1.5};
    EXPECT_EQ(divergence_profile(7, 3, one_s, 1).front().value, 0.0);

    long double expected = 0.0L;
    for (auto q : oracle_primes(1'000'000)) expected += 1.0L / (static_cast<long double>(q) * q);
    const std::vector<double> two{2.0};
    const auto zeta_primes = divergence_profile(1, 1, two, 1'000'000).front();
    EXPECT_NEAR(zeta_primes.value, static_cast<double>(expected), 1e-12);
    EXPECT_NEAR(zeta_primes.value, 0.45224, 1e-5);
}

TEST(DivergenceProfile, TailBoundAndRejections) {
    const std::vector<double> s_values{2.0};
    const auto row = divergence_profile(4, 3, s_values, 1000).front();
    EXPECT_DOUBLE_EQ(row.tail_bound, 1.0 / 1000.0);
    const std::vector<double> bad{1.0};
    EXPECT_THROW(divergence_profile(4, 3, bad, 1000), domain_error);
    EXPECT_THROW(divergence_profile(0, 1, s_values, 1000), domain_error);
}
