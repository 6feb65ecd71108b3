#pragma once

/**
 * @file verify.hpp
 * @brief Invariant suites over a single modulus, reporting the first counterexample.
 *
 *  - orthogonality: both orthogonality relations and the pair-sum corollary.
 *  - landau: multiplicativity on all residues, periodicity, and both
 *    orthogonality sums over complete residue systems.
 *  - historical: tuple construction equals the extensional enumeration, the
 *    tuple multiplication law, and random root choices yield characters.
 *  - group-axioms: closure, identity, inverse = conjugate, commutativity.
 */

#include <cstdint>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <string_view>

#include "characters.hpp"
#include "historical.hpp"

namespace dirichlet::verify {

struct SuiteResult {
    std::int64_t checks = 0;
    std::optional<std::string> counterexample;

    bool passed() const { return !counterexample.has_value(); }
};

namespace detail {

inline std::string describe(const RootSum& s) {
    if (s.exact) return std::to_string(s.integer_part);
    return "(" + std::to_string(s.value.real()) + ", " + std::to_string(s.value.imag()) + ")";
}

class Recorder {
public:
    bool check(bool ok, const std::string& what) {
        ++result_.checks;
        if (!ok && !result_.counterexample) result_.counterexample = what;
        return ok;
    }
    bool failed() const { return !result_.passed(); }
    SuiteResult take() { return std::move(result_); }

private:
    SuiteResult result_;
};

} // namespace detail

inline SuiteResult orthogonality(std::int64_t k) {
    detail::Recorder rec;
    const auto chars = enumerate_characters(k);
    const std::int64_t phi = euler_phi(k);
    const std::string at = "k=" + std::to_string(k);

    for (std::size_t i = 0; i < chars.size(); ++i) {
        const auto sum = sum_over_group(chars[i]);
        const bool principal = classify(chars[i]) == CharacterClass::Principal;
        if (!rec.check(sum.is_exact_integer(principal ? phi : 0),
                       at + " character #" + std::to_string(i) + ": sum over group = " + detail::describe(sum))) {
            return rec.take();
        }
    }
    std::vector<std::int64_t> units;
    for (std::int64_t r = 0; r < k; ++r) {
        if (gcd(r, k) == 1) units.push_back(r);
    }
    for (auto n : units) {
        const auto sum = sum_over_characters(chars, n);
        if (!rec.check(sum.is_exact_integer(n % k == 1 % k ? phi : 0),
                       at + " n=" + std::to_string(n) + ": sum over characters = " + detail::describe(sum))) {
            return rec.take();
        }
    }
    for (auto g : units) {
        for (auto h : units) {
            const auto sum = orthogonality_pair_sum(chars, g, h);
            if (!rec.check(sum.is_exact_integer(g == h ? phi : 0),
                           at + " (g,h)=(" + std::to_string(g) + "," + std::to_string(h) +
                               "): pair sum = " + detail::describe(sum))) {
                return rec.take();
            }
        }
    }
    return rec.take();
}

inline SuiteResult landau(std::int64_t k) {
    detail::Recorder rec;
    const auto chars = enumerate_characters(k);
    const std::int64_t phi = euler_phi(k);
    const std::string at = "k=" + std::to_string(k);

    for (std::size_t i = 0; i < chars.size(); ++i) {
        const auto& chi = chars[i];
        const std::string who = at + " character #" + std::to_string(i);
        for (std::int64_t n = 0; n < k; ++n) {
            for (std::int64_t m = n; m < k; ++m) {
                if (!rec.check(chi(n * m) == chi(n) * chi(m),
                               who + ": chi(" + std::to_string(n) + "*" + std::to_string(m) + ") != product")) {
                    return rec.take();
                }
            }
            for (std::int64_t shift : {-2 * k, -k, k, 3 * k}) {
                if (!rec.check(chi(n + shift) == chi(n), who + ": not periodic at " + std::to_string(n))) return rec.take();
            }
        }
        const auto sum = sum_over_group(chi);
        const bool principal = classify(chi) == CharacterClass::Principal;
        if (!rec.check(sum.is_exact_integer(principal ? phi : 0), who + ": complete residue sum = " + detail::describe(sum))) {
            return rec.take();
        }
    }
    for (std::int64_t n = 0; n < k; ++n) {
        const auto sum = sum_over_characters(chars, n);
        const std::int64_t expected = (gcd(n, k) == 1 && n == 1 % k) ? phi : 0;
        if (!rec.check(sum.is_exact_integer(expected),
                       at + " n=" + std::to_string(n) + ": sum over characters = " + detail::describe(sum))) {
            return rec.take();
        }
    }
    return rec.take();
}

inline SuiteResult historical(std::int64_t k, std::uint64_t seed = 0) {
    detail::Recorder rec;
    const UnitGroupStructure s(k);
    const std::string at = "k=" + std::to_string(k);

    const auto extensional = enumerate_characters(s);
    const auto via_tuples = enumerate_via_tuples(s);
    if (!rec.check(same_character_set(via_tuples, extensional), at + ": tuple characters differ from enumeration")) {
        return rec.take();
    }
    // Kronecker's multiplication law on all tuple pairs for small groups, a sample otherwise.
    const auto tuples = all_tuples(s);
    std::mt19937_64 rng(seed ^ static_cast<std::uint64_t>(k));
    std::uniform_int_distribution<std::size_t> pick(0, tuples.size() - 1);
    const bool exhaustive = tuples.size() <= 24;
    const std::size_t pairs = exhaustive ? tuples.size() * tuples.size() : 400;
    for (std::size_t p = 0; p < pairs; ++p) {
        const auto& a = exhaustive ? tuples[p / tuples.size()] : tuples[pick(rng)];
        const auto& b = exhaustive ? tuples[p % tuples.size()] : tuples[pick(rng)];
        const auto lhs = char_mul(character_from_exponent_tuple(s, a), character_from_exponent_tuple(s, b));
        const auto rhs = character_from_exponent_tuple(s, add_tuples(s, a, b));
        if (!rec.check(lhs == rhs, at + ": tuple multiplication law fails")) return rec.take();
    }
    for (int trial = 0; trial < 8; ++trial) {
        const auto chi = character_from_roots(s, random_root_choice(s, rng));
        bool valid = true;
        try {
            DirichletCharacter checked(k, {chi.table().begin(), chi.table().end()});
        } catch (const domain_error&) {
            valid = false;
        }
        if (!rec.check(valid, at + ": random root choice produced an invalid character")) return rec.take();
    }
    return rec.take();
}

inline SuiteResult group_axioms(std::int64_t k) {
    detail::Recorder rec;
    const auto chars = enumerate_characters(k);
    const std::set<DirichletCharacter> members(chars.begin(), chars.end());
    const auto principal = principal_character(k);
    const std::string at = "k=" + std::to_string(k);

    if (!rec.check(members.size() == chars.size(), at + ": duplicate characters in enumeration")) return rec.take();
    if (!rec.check(members.contains(principal), at + ": principal character missing")) return rec.take();
    for (std::size_t i = 0; i < chars.size(); ++i) {
        const auto& chi = chars[i];
        const std::string who = at + " #" + std::to_string(i);
        if (!rec.check(char_mul(chi, principal) == chi, who + ": chi * chi0 != chi")) return rec.take();
        if (!rec.check(char_mul(chi, char_conj(chi)) == principal, who + ": chi * conj(chi) != chi0")) return rec.take();
        if (!rec.check(members.contains(char_conj(chi)), who + ": conjugate not in the group")) return rec.take();
        for (std::size_t j = i; j < chars.size(); ++j) {
            const auto prod = char_mul(chi, chars[j]);
            if (!rec.check(prod == char_mul(chars[j], chi), who + ": product not commutative")) return rec.take();
            if (!rec.check(members.contains(prod), who + " * #" + std::to_string(j) + ": product not in the group")) {
                return rec.take();
            }
        }
    }
    return rec.take();
}

inline constexpr std::string_view suite_names[] = {"orthogonality", "landau", "historical", "group-axioms"};

/// Runs a named suite; nullopt for an unknown name.
inline std::optional<SuiteResult> run_suite(std::string_view name, std::int64_t k, std::uint64_t seed = 0) {
    if (name == "orthogonality") return orthogonality(k);
    if (name == "landau") return landau(k);
    if (name == "historical") return historical(k, seed);
    if (name == "group-axioms") return group_axioms(k);
    return std::nullopt;
}

} // namespace dirichlet::verify
