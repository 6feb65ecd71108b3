#pragma once

/**
 * @file historical.hpp
 * @brief Intensional constructions of Dirichlet characters.
 *
 * A character is presented by a structure (chosen primitive elements) plus
 * a root of unity per generator, and computed pointwise as the power
 * product of those roots raised to the index vector of n. Kronecker's
 * labelling uses the canonical primitive roots e^{2 pi i/order} raised to
 * an exponent tuple.
 *
 * The equivalence oracle regenerates the character set from other choices
 * of primitive elements and primitive roots of unity and compares it
 * extensionally with enumerate_characters().
 */

#include <algorithm>
#include <cstdint>
#include <random>
#include <span>
#include <vector>

#include "characters.hpp"
#include "cyclotomic.hpp"
#include "unit_group.hpp"

namespace dirichlet {

/// One root of unity per generator of a structure.
struct RootChoice {
    std::vector<RootOfUnity> roots;
};

/// Exponents against a structure's generators, each reduced mod its order.
struct ExponentTuple {
    std::vector<std::int64_t> exponents;

    bool operator==(const ExponentTuple&) const = default;
};

inline void validate_root_choice(const UnitGroupStructure& s, const RootChoice& rc) {
    const auto gens = s.generators();
    if (rc.roots.size() != gens.size()) throw domain_error("RootChoice: need one root per generator");
    for (std::size_t i = 0; i < gens.size(); ++i) {
        if (!rc.roots[i].pow(gens[i].order).is_one()) {
            throw domain_error("RootChoice: root " + rc.roots[i].to_string() + " has order not dividing " +
                               std::to_string(gens[i].order));
        }
    }
}

/// chi(n) = prod_i roots[i]^{index_i(n)} on units, 0 elsewhere.
inline DirichletCharacter character_from_roots(const UnitGroupStructure& s, const RootChoice& rc) {
    validate_root_choice(s, rc);
    const std::int64_t k = s.modulus();
    std::vector<CharacterValue> table(static_cast<std::size_t>(k));
    for (std::int64_t n = 0; n < k; ++n) {
        if (gcd(n, k) != 1) continue;
        const auto idx = s.index_vector(n);
        RootOfUnity value;
        for (std::size_t i = 0; i < rc.roots.size(); ++i) value *= rc.roots[i].pow(idx.exponents[i]);
        table[static_cast<std::size_t>(n)] = value;
    }
    return make_unchecked_character(k, std::move(table));
}

inline void validate_tuple(const UnitGroupStructure& s, const ExponentTuple& t) {
    const auto gens = s.generators();
    if (t.exponents.size() != gens.size()) throw domain_error("ExponentTuple: wrong length");
    for (std::size_t i = 0; i < gens.size(); ++i) {
        if (t.exponents[i] < 0 || t.exponents[i] >= gens[i].order) {
            throw domain_error("ExponentTuple: exponent out of range");
        }
    }
}

inline DirichletCharacter character_from_exponent_tuple(const UnitGroupStructure& s, const ExponentTuple& t) {
    validate_tuple(s, t);
    RootChoice rc;
    for (std::size_t i = 0; i < t.exponents.size(); ++i) {
        rc.roots.push_back(RootOfUnity::primitive(s.generators()[i].order).pow(t.exponents[i]));
    }
    return character_from_roots(s, rc);
}

inline ExponentTuple add_tuples(const UnitGroupStructure& s, const ExponentTuple& a, const ExponentTuple& b) {
    validate_tuple(s, a);
    validate_tuple(s, b);
    ExponentTuple out;
    for (std::size_t i = 0; i < a.exponents.size(); ++i) {
        out.exponents.push_back((a.exponents[i] + b.exponents[i]) % s.generators()[i].order);
    }
    return out;
}

inline ExponentTuple negate_tuple(const UnitGroupStructure& s, const ExponentTuple& a) {
    validate_tuple(s, a);
    ExponentTuple out;
    for (std::size_t i = 0; i < a.exponents.size(); ++i) {
        out.exponents.push_back(mod_reduce(-a.exponents[i], s.generators()[i].order));
    }
    return out;
}

/// All exponent tuples of a structure, lexicographic.
inline std::vector<ExponentTuple> all_tuples(const UnitGroupStructure& s) {
    std::vector<ExponentTuple> out;
    out.reserve(static_cast<std::size_t>(s.order()));
    for (std::int64_t slot = 0; slot < s.order(); ++slot) out.push_back({s.tuple_at(slot).exponents});
    return out;
}

inline std::vector<DirichletCharacter> enumerate_via_tuples(const UnitGroupStructure& s) {
    std::vector<DirichletCharacter> out;
    for (const auto& t : all_tuples(s)) out.push_back(character_from_exponent_tuple(s, t));
    return out;
}

inline std::vector<DirichletCharacter> enumerate_via_tuples(std::int64_t k) {
    return enumerate_via_tuples(UnitGroupStructure(k));
}

/// Same character set, compared as sets of value tables.
inline bool same_character_set(std::vector<DirichletCharacter> a, std::vector<DirichletCharacter> b) {
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    if (std::adjacent_find(a.begin(), a.end()) != a.end()) return false;
    return a == b;
}

/**
 * A presentation choice: primitive elements plus, per generator, which
 * primitive root of unity plays the role of e^{2 pi i/order}
 * (root_exponents[i] is a unit mod order_i).
 */
struct AlternativeChoice {
    std::vector<Generator> generators;
    std::vector<std::int64_t> root_exponents;

    bool operator==(const AlternativeChoice&) const = default;
};

/// Characters generated by ranging all tuples over the choice.
inline std::vector<DirichletCharacter> characters_from_choice(std::int64_t k, const AlternativeChoice& choice) {
    const UnitGroupStructure s(k, choice.generators);
    if (choice.root_exponents.size() != s.rank()) throw domain_error("AlternativeChoice: need one root exponent per generator");
    std::vector<RootOfUnity> primitive;
    for (std::size_t i = 0; i < s.rank(); ++i) {
        const auto order = s.generators()[i].order;
        if (gcd(choice.root_exponents[i], order) != 1) {
            throw domain_error("AlternativeChoice: root exponent must be a unit mod the generator order");
        }
        primitive.push_back(RootOfUnity(choice.root_exponents[i], order));
    }
    std::vector<DirichletCharacter> out;
    for (const auto& t : all_tuples(s)) {
        RootChoice rc;
        for (std::size_t i = 0; i < s.rank(); ++i) rc.roots.push_back(primitive[i].pow(t.exponents[i]));
        out.push_back(character_from_roots(s, rc));
    }
    return out;
}

/// The extensional set from `choice` equals enumerate_characters(k). Throws for invalid choices.
inline bool representation_independence_check(std::int64_t k, const AlternativeChoice& choice) {
    return same_character_set(characters_from_choice(k, choice), enumerate_characters(k));
}

/// Alternative primitive elements only; the canonical roots e^{2 pi i/order} are kept.
inline bool representation_independence_check(std::int64_t k, const std::vector<Generator>& generators) {
    return representation_independence_check(k, AlternativeChoice{generators, std::vector<std::int64_t>(generators.size(), 1)});
}

namespace detail {

inline void collect_generator_lists(std::int64_t k, std::span<const std::int64_t> orders,
                                    const std::vector<std::vector<std::int64_t>>& candidates, std::vector<Generator>& current,
                                    std::vector<std::vector<Generator>>& out, std::size_t limit) {
    if (out.size() >= limit) return;
    const std::size_t i = current.size();
    if (i == orders.size()) {
        try {
            UnitGroupStructure check(k, current);
            out.push_back(current);
        } catch (const domain_error&) {
        }
        return;
    }
    for (auto r : candidates[i]) {
        current.push_back({r, orders[i]});
        collect_generator_lists(k, orders, candidates, current, out, limit);
        current.pop_back();
        if (out.size() >= limit) return;
    }
}

inline bool advance_odometer(std::vector<std::size_t>& pick, const std::vector<std::vector<std::int64_t>>& options) {
    for (std::size_t i = pick.size(); i-- > 0;) {
        if (++pick[i] < options[i].size()) return true;
        pick[i] = 0;
    }
    return false;
}

} // namespace detail

/**
 * Up to `count` presentation choices other than the canonical one, in a
 * deterministic order: generator lists by increasing residues (same orders as
 * the canonical structure, at most phi(k) candidates per slot), and for each
 * list every combination of primitive roots of unity.
 */
inline std::vector<AlternativeChoice> find_alternative_choices(std::int64_t k, std::size_t count) {
    const UnitGroupStructure canonical(k);
    std::vector<std::int64_t> orders;
    for (const auto& g : canonical.generators()) orders.push_back(g.order);

    std::vector<std::vector<std::int64_t>> candidates(orders.size());
    for (std::size_t i = 0; i < orders.size(); ++i) {
        for (std::int64_t r = 1; r < k && static_cast<std::int64_t>(candidates[i].size()) < canonical.order(); ++r) {
            if (gcd(r, k) == 1 && multiplicative_order(r, k) == orders[i]) candidates[i].push_back(r);
        }
    }

    // Enough generator lists to fill `count` even if each admits one root choice.
    std::vector<std::vector<Generator>> lists;
    std::vector<Generator> current;
    detail::collect_generator_lists(k, orders, candidates, current, lists, count + 1);

    AlternativeChoice canonical_choice{std::vector<Generator>(canonical.generators().begin(), canonical.generators().end()),
                                       std::vector<std::int64_t>(orders.size(), 1)};
    std::vector<std::vector<std::int64_t>> root_options(orders.size());
    for (std::size_t i = 0; i < orders.size(); ++i) {
        for (std::int64_t u = 1; u <= orders[i]; ++u) {
            if (gcd(u, orders[i]) == 1) root_options[i].push_back(u % orders[i] == 0 ? 1 : u);
        }
    }

    std::vector<AlternativeChoice> out;
    for (const auto& gens : lists) {
        std::vector<std::size_t> pick(orders.size(), 0);
        for (;;) {
            AlternativeChoice choice{gens, {}};
            for (std::size_t i = 0; i < orders.size(); ++i) choice.root_exponents.push_back(root_options[i][pick[i]]);
            if (!(choice == canonical_choice)) {
                out.push_back(std::move(choice));
                if (out.size() >= count) return out;
            }
            if (!detail::advance_odometer(pick, root_options)) break;
        }
    }
    return out;
}

/// Random valid RootChoice for a structure: each root is a random element of mu_{order_i}.
template <class Rng>
RootChoice random_root_choice(const UnitGroupStructure& s, Rng& rng) {
    RootChoice rc;
    for (const auto& g : s.generators()) {
        std::uniform_int_distribution<std::int64_t> pick(0, g.order - 1);
        rc.roots.emplace_back(pick(rng), g.order);
    }
    return rc;
}

} // namespace dirichlet
