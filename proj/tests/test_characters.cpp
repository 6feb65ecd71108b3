#include <gtest/gtest.h>

#include <algorithm>
#include <random>
#include <set>

#include <dirichlet/characters.hpp>

#include "oracles.hpp"

using namespace dirichlet;

namespace {

const RootOfUnity one_ = RootOfUnity::one();
const RootOfUnity minus_one{1, 2};
const RootOfUnity i_{1, 4};
const RootOfUnity minus_i{3, 4};

DirichletCharacter mod5_with_value_at_2(const RootOfUnity& v) {
    for (const auto& chi : enumerate_characters(5)) {
        if (chi(2) == CharacterValue(v)) return chi;
    }
    throw std::logic_error("missing character mod 5");
}

std::vector<CharacterValue> to_values(const oracle::Table& t) {
    std::vector<CharacterValue> out;
    for (const auto& v : t) out.push_back(v ? CharacterValue(*v) : CharacterValue::zero());
    return out;
}

}  // namespace

TEST(PrincipalCharacter, Examples) {
    const auto chi4 = principal_character(4);
    EXPECT_EQ(chi4(1), CharacterValue(one_));
    EXPECT_EQ(chi4(3), CharacterValue(one_));
    EXPECT_TRUE(chi4(2).is_zero());
    const auto chi1 = principal_character(1);
    for (std::int64_t n = -5; n <= 5; ++n) EXPECT_EQ(chi1(n), CharacterValue(one_));
    EXPECT_TRUE(evaluate(principal_character(6), 4).is_zero());
    EXPECT_THROW(principal_character(0), domain_error);
}

TEST(Evaluate, Examples) {
    const auto chars4 = enumerate_characters(4);
    ASSERT_EQ(chars4.size(), 2u);
    EXPECT_EQ(evaluate(chars4[1], 3), CharacterValue(minus_one));
    for (std::int64_t k : {1, 2, 7, 12, 30}) {
        for (const auto& chi : enumerate_characters(k)) EXPECT_EQ(evaluate(chi, 1), CharacterValue(one_));
    }
    for (const auto& chi : enumerate_characters(10)) EXPECT_TRUE(evaluate(chi, 15).is_zero());
}

TEST(Evaluate, ReducesNegativeArguments) {
    for (const auto& chi : enumerate_characters(7)) {
        for (std::int64_t n = -30; n < 30; ++n) EXPECT_EQ(chi(n), chi(n + 7 * 100));
    }
}

TEST(Enumerate, Examples) {
    const auto c4 = enumerate_characters(4);
    EXPECT_EQ(c4[0], principal_character(4));
    EXPECT_EQ(c4[1](3), CharacterValue(minus_one));

    const auto c5 = enumerate_characters(5);
    ASSERT_EQ(c5.size(), 4u);
    std::set<RootOfUnity> at2;
    for (const auto& chi : c5) at2.insert(chi(2).root());
    EXPECT_EQ(at2, (std::set<RootOfUnity>{one_, i_, minus_one, minus_i}));

    const auto c1 = enumerate_characters(1);
    ASSERT_EQ(c1.size(), 1u);
    EXPECT_EQ(classify(c1[0]), CharacterClass::Principal);
}

TEST(Enumerate, EqualsAllHomomorphismsUpTo30) {
    for (std::int64_t k = 1; k <= 30; ++k) {
        std::set<DirichletCharacter> expected;
        for (const auto& t : oracle::all_homomorphisms(k)) expected.insert(make_unchecked_character(k, to_values(t)));
        const auto got = enumerate_characters(k);
        const std::set<DirichletCharacter> got_set(got.begin(), got.end());
        ASSERT_EQ(got_set.size(), got.size()) << "duplicates at k=" << k;
        ASSERT_EQ(got_set, expected) << "k=" << k;
    }
}

TEST(Enumerate, CountIsPhiAndTablesAreValid) {
    for (std::int64_t k = 1; k <= 300; ++k) {
        const auto chars = enumerate_characters(k);
        ASSERT_EQ(static_cast<std::int64_t>(chars.size()), oracle::coprime_count(k)) << k;
        ASSERT_EQ(chars.front(), principal_character(k));
        if (k <= 60) {
            for (const auto& chi : chars) {
                ASSERT_NO_THROW(DirichletCharacter(k, {chi.table().begin(), chi.table().end()})) << k;
            }
        }
    }
}

TEST(Enumerate, OrderedLexicographicallyByExponentTuple) {
    for (std::int64_t k : {8, 15, 24, 63, 120}) {
        const auto s = structure(k);
        const auto chars = enumerate_characters(s);
        for (std::size_t c = 0; c < chars.size(); ++c) {
            ASSERT_EQ(exponent_tuple(chars[c], s), s.tuple_at(static_cast<std::int64_t>(c)).exponents);
        }
    }
}

TEST(DirichletCharacter, RejectsInvalidTables) {
    const CharacterValue z = CharacterValue::zero();
    EXPECT_THROW(DirichletCharacter(4, {z, one_, z}), domain_error);                 // wrong length
    EXPECT_THROW(DirichletCharacter(4, {z, one_, one_, one_}), domain_error);        // nonzero off units
    EXPECT_THROW(DirichletCharacter(4, {z, minus_one, z, minus_one}), domain_error); // chi(1) != 1
    EXPECT_THROW(DirichletCharacter(5, {z, one_, i_, i_, minus_one}), domain_error); // not multiplicative
    EXPECT_NO_THROW(DirichletCharacter(5, {z, one_, i_, minus_i, minus_one}));
    EXPECT_THROW(DirichletCharacter(0, {}), domain_error);
}

TEST(CharMul, Examples) {
    for (std::int64_t k : {5, 12, 21}) {
        const auto chi0 = principal_character(k);
        for (const auto& chi : enumerate_characters(k)) {
            EXPECT_EQ(char_mul(chi, chi0), chi);
            EXPECT_EQ(char_mul(chi, char_conj(chi)), chi0);
        }
    }
    const auto chi_i = mod5_with_value_at_2(i_);
    EXPECT_EQ(char_mul(chi_i, chi_i), mod5_with_value_at_2(minus_one));
    EXPECT_THROW(char_mul(principal_character(4), principal_character(5)), domain_error);
}

TEST(CharConj, Examples) {
    EXPECT_EQ(char_conj(principal_character(9)), principal_character(9));
    for (const auto& chi : enumerate_characters(24)) EXPECT_EQ(char_conj(chi), chi);  // every character mod 24 is real
    EXPECT_EQ(char_conj(mod5_with_value_at_2(i_))(2), CharacterValue(minus_i));
}

TEST(Classify, Examples) {
    EXPECT_EQ(classify(principal_character(7)), CharacterClass::Principal);
    EXPECT_EQ(classify(enumerate_characters(4)[1]), CharacterClass::RealNonPrincipal);
    EXPECT_EQ(classify(mod5_with_value_at_2(i_)), CharacterClass::Complex);
    EXPECT_EQ(class_name(CharacterClass::Principal), "principal");
    EXPECT_EQ(class_name(CharacterClass::RealNonPrincipal), "real");
    EXPECT_EQ(class_name(CharacterClass::Complex), "complex");
}

TEST(Classify, PartitionsWithConjugatePairs) {
    for (std::int64_t k = 1; k <= 200; ++k) {
        const auto chars = enumerate_characters(k);
        const std::set<DirichletCharacter> members(chars.begin(), chars.end());
        std::int64_t principal = 0, real = 0, complex = 0;
        for (const auto& chi : chars) {
            switch (classify(chi)) {
            case CharacterClass::Principal: ++principal; break;
            case CharacterClass::RealNonPrincipal: ++real; break;
            case CharacterClass::Complex:
                ++complex;
                ASSERT_NE(char_conj(chi), chi);
                ASSERT_TRUE(members.contains(char_conj(chi)));
                ASSERT_EQ(classify(char_conj(chi)), CharacterClass::Complex);
                break;
            }
        }
        ASSERT_EQ(principal, 1);
        ASSERT_EQ(complex % 2, 0);
        ASSERT_EQ(principal + real + complex, static_cast<std::int64_t>(chars.size()));
        // Real characters form the 2-torsion, of size 2^(number of even-order cyclic factors).
        std::int64_t two_torsion = 1;
        for (const auto& g : structure(k).generators()) two_torsion *= g.order % 2 == 0 ? 2 : 1;
        ASSERT_EQ(principal + real, two_torsion) << k;
    }
}

TEST(SumOverGroup, Examples) {
    EXPECT_TRUE(sum_over_group(principal_character(5)).is_exact_integer(4));
    EXPECT_TRUE(sum_over_group(mod5_with_value_at_2(i_)).is_exact_zero());
    EXPECT_TRUE(sum_over_group(principal_character(1)).is_exact_integer(1));
}

TEST(SumOverCharacters, Examples) {
    EXPECT_TRUE(sum_over_characters(5, 1).is_exact_integer(4));
    EXPECT_TRUE(sum_over_characters(5, 2).is_exact_zero());
    EXPECT_TRUE(sum_over_characters(4, 2).is_exact_zero());
}

TEST(OrthogonalityPairSum, Examples) {
    EXPECT_TRUE(orthogonality_pair_sum(5, 3, 3).is_exact_integer(4));
    EXPECT_TRUE(orthogonality_pair_sum(5, 2, 3).is_exact_zero());
    for (std::int64_t k : {1, 2, 9, 40}) EXPECT_TRUE(orthogonality_pair_sum(k, 1, 1).is_exact_integer(euler_phi(k)));
    EXPECT_THROW(orthogonality_pair_sum(6, 2, 1), not_a_unit_error);
}

TEST(Orthogonality, ExactUpTo60) {
    for (std::int64_t k = 1; k <= 60; ++k) {
        const auto chars = enumerate_characters(k);
        const auto phi = static_cast<std::int64_t>(chars.size());
        for (const auto& chi : chars) {
            const bool principal = classify(chi) == CharacterClass::Principal;
            ASSERT_TRUE(sum_over_group(chi).is_exact_integer(principal ? phi : 0)) << k;
        }
        const auto us = oracle::units(k);
        for (auto g : us) {
            ASSERT_TRUE(sum_over_characters(chars, g).is_exact_integer(g == 1 % k ? phi : 0)) << k;
            for (auto h : us) ASSERT_TRUE(orthogonality_pair_sum(chars, g, h).is_exact_integer(g == h ? phi : 0));
        }
    }
}

TEST(Landau, MultiplicativePeriodicZeroOffUnitsUpTo60) {
    for (std::int64_t k = 1; k <= 60; ++k) {
        for (const auto& chi : enumerate_characters(k)) {
            for (std::int64_t n = 0; n < k; ++n) {
                ASSERT_EQ(chi(n).is_zero(), oracle::naive_gcd(n, k) != 1);
                ASSERT_EQ(chi(n + 3 * k), chi(n));
                for (std::int64_t m = 0; m < k; ++m) ASSERT_EQ(chi(n * m), chi(n) * chi(m));
            }
        }
    }
}

TEST(GroupAxioms, CharactersFormAGroupUpTo60) {
    for (std::int64_t k = 1; k <= 60; ++k) {
        const auto chars = enumerate_characters(k);
        const std::set<DirichletCharacter> members(chars.begin(), chars.end());
        for (const auto& a : chars) {
            ASSERT_TRUE(members.contains(char_conj(a)));
            for (const auto& b : chars) {
                const auto ab = char_mul(a, b);
                ASSERT_TRUE(members.contains(ab));
                ASSERT_EQ(ab, char_mul(b, a));
            }
        }
    }
}

TEST(Fourier, Examples) {
    const auto chars = enumerate_characters(5);
    UnitFunction indicator{{1, 1.0}, {2, 0.0}, {3, 0.0}, {4, 0.0}};
    for (const auto& c : fourier_transform(chars, indicator)) EXPECT_NEAR(std::abs(c - 1.0), 0.0, 1e-15);

    UnitFunction constant{{1, 1.0}, {2, 1.0}, {3, 1.0}, {4, 1.0}};
    const auto fhat = fourier_transform(chars, constant);
    for (std::size_t c = 0; c < chars.size(); ++c) {
        const double expected = classify(chars[c]) == CharacterClass::Principal ? 4.0 : 0.0;
        EXPECT_NEAR(std::abs(fhat[c] - expected), 0.0, 1e-12);
    }
}

TEST(Fourier, RoundTripRandomFunctionsMod12) {
    std::mt19937_64 rng(31);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    for (int trial = 0; trial < 50; ++trial) {
        UnitFunction f;
        for (auto r : oracle::units(12)) f[r] = {u(rng), u(rng)};
        const auto back = fourier_invert(12, fourier_transform(12, f));
        ASSERT_EQ(back.size(), f.size());
        for (const auto& [r, v] : f) ASSERT_NEAR(std::abs(back.at(r) - v), 0.0, 1e-12);
    }
}

TEST(Fourier, RoundTripComplexCharactersMod7) {
    std::mt19937_64 rng(32);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    const auto chars = enumerate_characters(7);
    UnitFunction f;
    for (auto r : oracle::units(7)) f[r] = {u(rng), u(rng)};
    const auto back = fourier_invert(chars, fourier_transform(chars, f));
    for (const auto& [r, v] : f) EXPECT_NEAR(std::abs(back.at(r) - v), 0.0, 1e-12);
}

TEST(Fourier, IndicatorExpansionSelectsOneResidue) {
    const std::int64_t k = 7, m = 3;
    const auto chars = enumerate_characters(k);
    UnitFunction indicator;
    for (auto r : oracle::units(k)) indicator[r] = r == m ? 1.0 : 0.0;
    const auto coeff = expansion_coefficients(chars, indicator);
    for (std::size_t c = 0; c < chars.size(); ++c) {
        EXPECT_NEAR(std::abs(coeff[c] - std::conj(chars[c](m).to_complex()) / 6.0), 0.0, 1e-15);
    }
    for (auto n : oracle::units(k)) {
        std::complex<double> acc = 0.0;
        for (std::size_t c = 0; c < chars.size(); ++c) acc += coeff[c] * chars[c](n).to_complex();
        EXPECT_NEAR(std::abs(acc - indicator[n]), 0.0, 1e-12);
    }
}

TEST(Fourier, RejectsIncompleteInput) {
    EXPECT_THROW(fourier_transform(5, UnitFunction{{1, 1.0}}), domain_error);
    const std::vector<std::complex<double>> too_short(2);
    EXPECT_THROW(fourier_invert(5, too_short), domain_error);
}
