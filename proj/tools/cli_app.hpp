#pragma once

// Command-line front end. Kept in a header so tests can drive it in-process.
//
// Exit codes: 0 success, 1 verification failure, 2 usage or domain error,
// 3 resource limit.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include <dirichlet/dirichlet.hpp>
#include <dirichlet/io.hpp>
#include <dirichlet/verify.hpp>

namespace dirichlet::cli {

enum ExitCode : int { ok = 0, verification_failed = 1, usage_error = 2, resource_failure = 3 };

enum class Format { table, json, csv };

struct Context {
    std::ostream& out;
    std::ostream& err;
    bool interactive;
};

namespace detail {

using ordered_json = nlohmann::ordered_json;

inline Format resolve_format(const std::string& requested, bool interactive) {
    if (requested == "json") return Format::json;
    if (requested == "csv") return Format::csv;
    if (requested == "table") return Format::table;
    return interactive ? Format::table : Format::json;
}

inline std::vector<std::int64_t> parse_int_list(const std::string& text) {
    std::vector<std::int64_t> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            std::size_t used = 0;
            out.push_back(std::stoll(item, &used));
            if (used != item.size()) throw std::invalid_argument(item);
        } catch (const std::logic_error&) {
            throw domain_error("expected a comma-separated integer list, got '" + text + "'");
        }
    }
    return out;
}

inline std::vector<double> parse_real_list(const std::string& text) {
    std::vector<double> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            out.push_back(std::stod(item));
        } catch (const std::logic_error&) {
            throw domain_error("expected a comma-separated list of reals, got '" + text + "'");
        }
    }
    return out;
}

/// Writes to --out when given, else to the context stream.
class Sink {
public:
    Sink(const Context& ctx, const std::string& path) : ctx_(ctx) {
        if (!path.empty()) {
            file_.open(path);
            if (!file_) throw domain_error("cannot open output file '" + path + "'");
        }
    }
    std::ostream& stream() { return file_.is_open() ? static_cast<std::ostream&>(file_) : ctx_.out; }

private:
    const Context& ctx_;
    std::ofstream file_;
};

inline std::string num(double x) { return io::format_number(x); }

inline std::string complex_text(std::complex<double> z) {
    if (z.imag() == 0.0) return num(z.real());
    return num(z.real()) + (z.imag() < 0 ? " - " : " + ") + num(std::abs(z.imag())) + "i";
}

inline std::string cell(const ordered_json& v) {
    if (v.is_number_float()) return num(v.get<double>());
    if (v.is_string()) return v.get<std::string>();
    if (v.is_array()) return io::join_ints(v.get<std::vector<std::int64_t>>(), ';');
    return v.dump();
}

/// One header line of keys and one line of values.
inline void write_flat(std::ostream& os, const ordered_json& doc, char sep) {
    std::string keys, values;
    for (auto it = doc.begin(); it != doc.end(); ++it) {
        if (it != doc.begin()) {
            keys += sep;
            values += sep;
        }
        keys += it.key();
        values += cell(*it);
    }
    os << keys << '\n' << values << '\n';
}

/// Character by canonical tuple or by enumeration index.
inline DirichletCharacter select_character(std::int64_t k, const std::string& tuple_text, std::optional<std::int64_t> index) {
    const UnitGroupStructure s(k);
    if (!tuple_text.empty()) {
        ExponentTuple t{parse_int_list(tuple_text)};
        return character_from_exponent_tuple(s, t);
    }
    auto chars = enumerate_characters(s);
    const std::int64_t i = index.value_or(0);
    if (i < 0 || i >= static_cast<std::int64_t>(chars.size())) {
        throw domain_error("character index " + std::to_string(i) + " out of range [0, " + std::to_string(chars.size()) + ")");
    }
    return chars[static_cast<std::size_t>(i)];
}

} // namespace detail

inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err, bool interactive) {
    using namespace detail;
    Context ctx{out, err, interactive};

    CLI::App app{"Dirichlet characters, L-series and primes in arithmetic progressions"};
    app.require_subcommand(1);
    app.fallthrough();
    std::string format_text = "auto";
    std::string out_path;
    app.add_option("--format", format_text, "Output format")->check(CLI::IsMember({"auto", "table", "json", "csv"}));
    app.add_option("--out", out_path, "Write output to a file");

    // characters
    auto* characters = app.add_subcommand("characters", "Enumerate the Dirichlet characters mod k");
    std::int64_t char_k = 0;
    characters->add_option("k", char_k, "Modulus")->required();

    // verify
    auto* verify_cmd = app.add_subcommand("verify", "Run an invariant suite over a range of moduli");
    std::string range_text;
    std::string suite = "orthogonality";
    std::uint64_t seed = 0;
    verify_cmd->add_option("range", range_text, "Modulus or range A..B")->required();
    verify_cmd->add_option("--suite", suite, "orthogonality | landau | historical | group-axioms");
    verify_cmd->add_option("--seed", seed, "Seed for sampled checks");

    // lseries
    auto* lseries = app.add_subcommand("lseries", "Evaluate L(s, chi)");
    std::int64_t l_k = 0;
    double l_s = 2.0;
    std::string l_tuple;
    std::optional<std::int64_t> l_index;
    std::string l_mode = "direct";
    double l_tol = 0.0;
    std::int64_t l_primes = 100000;
    int l_terms = 40;
    lseries->add_option("k", l_k, "Modulus")->required();
    lseries->add_option("s", l_s, "Real s >= 1")->required();
    lseries->add_option("--tuple", l_tuple, "Canonical exponent tuple, e.g. 1,0");
    lseries->add_option("--index", l_index, "Enumeration index");
    lseries->add_option("--mode", l_mode, "direct | euler | log")->check(CLI::IsMember({"direct", "euler", "log"}));
    lseries->add_option("--tol", l_tol, "Requested absolute tolerance");
    lseries->add_option("--primes", l_primes, "Prime bound P for euler/log modes");
    lseries->add_option("--terms", l_terms, "Power bound J for log mode");

    // identity
    auto* identity = app.add_subcommand("identity", "Check the character-sum identity isolating primes = m mod k");
    std::int64_t id_k = 0, id_m = 0;
    std::string id_s = "1.5";
    std::int64_t id_primes = 10000;
    int id_terms = 30;
    std::string id_profile;
    identity->add_option("k", id_k, "Modulus")->required();
    identity->add_option("m", id_m, "Residue class (a unit mod k)")->required();
    identity->add_option("s", id_s, "s > 1, or a comma-separated list")->required();
    identity->add_option("P", id_primes, "Prime bound");
    identity->add_option("J", id_terms, "Power bound");
    identity->add_option("--profile", id_profile, "Also emit sum_{q = m} q^-s at these s values");

    // primes
    auto* primes_cmd = app.add_subcommand("primes", "Primes in arithmetic progressions");
    primes_cmd->require_subcommand(1);
    std::int64_t p_x = 0, p_k = 1, p_m = 0;
    auto* p_count = primes_cmd->add_subcommand("count", "Count primes <= x that are = m mod k");
    auto* p_search = primes_cmd->add_subcommand("search", "Smallest prime > mu that is = m mod k");
    auto* p_ratio = primes_cmd->add_subcommand("ratio", "count * phi(k) * ln(x) / x");
    for (auto* sub : {p_count, p_search, p_ratio}) {
        sub->add_option(sub == p_search ? "mu" : "x", p_x, sub == p_search ? "Lower end (exclusive)" : "Upper bound")->required();
        sub->add_option("k", p_k, "Modulus")->required();
        sub->add_option("m", p_m, "Residue")->required();
    }

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? ok : usage_error;
    }

    try {
        Sink sink(ctx, out_path);
        auto& os = sink.stream();
        const bool to_file = !out_path.empty();
        const Format fmt = resolve_format(format_text, interactive && !to_file);

        if (*characters) {
            if (char_k < 1) throw domain_error("modulus must be >= 1");
            const auto records = io::character_records(char_k);
            switch (fmt) {
            case Format::json: os << io::to_json(char_k, records).dump(2) << '\n'; break;
            case Format::csv: io::write_csv(os, char_k, records); break;
            case Format::table: io::write_table(os, char_k, records); break;
            }
            return ok;
        }

        if (*verify_cmd) {
            std::int64_t lo = 0, hi = 0;
            if (auto dots = range_text.find(".."); dots != std::string::npos) {
                lo = std::stoll(range_text.substr(0, dots));
                hi = std::stoll(range_text.substr(dots + 2));
            } else {
                lo = hi = std::stoll(range_text);
            }
            if (lo < 1 || hi < lo) throw domain_error("range must satisfy 1 <= A <= B");
            if (!verify::run_suite(suite, 1, seed)) {
                err << "unknown suite '" << suite << "'; expected orthogonality, landau, historical or group-axioms\n";
                return usage_error;
            }
            ordered_json summary;
            summary["suite"] = suite;
            summary["from"] = lo;
            summary["to"] = hi;
            auto& per_k = summary["moduli"] = ordered_json::array();
            std::int64_t total = 0;
            std::optional<std::string> failure;
            for (std::int64_t k = lo; k <= hi && !failure; ++k) {
                auto result = *verify::run_suite(suite, k, seed);
                total += result.checks;
                per_k.push_back({{"k", k}, {"checks", result.checks}, {"passed", result.passed()}});
                if (fmt == Format::table) {
                    os << "k=" << k << "  checks=" << result.checks << "  " << (result.passed() ? "pass" : "FAIL") << '\n';
                } else if (fmt == Format::csv) {
                    if (k == lo) os << "k,checks,passed\n";
                    os << k << ',' << result.checks << ',' << (result.passed() ? 1 : 0) << '\n';
                }
                failure = result.counterexample;
            }
            summary["checks"] = total;
            summary["passed"] = !failure.has_value();
            if (failure) summary["counterexample"] = *failure;
            if (fmt == Format::json) {
                os << summary.dump(2) << '\n';
            } else if (fmt == Format::table) {
                os << suite << ": " << total << " checks, " << (failure ? "FAILED" : "all passed") << '\n';
            }
            if (failure) err << "counterexample: " << *failure << '\n';
            return failure ? verification_failed : ok;
        }

        if (*lseries) {
            const auto chi = select_character(l_k, l_tuple, l_index);
            const auto tuple = exponent_tuple(chi);
            ordered_json doc;
            doc["modulus"] = l_k;
            doc["tuple"] = tuple;
            doc["class"] = std::string(class_name(classify(chi)));
            doc["s"] = l_s;
            if (l_s < 1.0) throw domain_error("s must be >= 1");
            if (l_s == 1.0) {
                const auto r = l_at_one(chi, l_tol > 0 ? l_tol : 1e-7);
                doc["mode"] = "at_one";
                doc["value_re"] = r.value.real();
                doc["value_im"] = r.value.imag();
                doc["truncation"] = r.truncation;
                doc["tail_bound"] = r.error_bound;
                doc["nonzero_certified"] = r.nonzero_certified;
            } else if (l_mode == "direct") {
                const auto r = l_direct(l_s, chi, l_tol > 0 ? l_tol : 1e-10);
                doc["mode"] = "direct";
                doc["value_re"] = r.value.real();
                doc["value_im"] = r.value.imag();
                doc["truncation"] = r.truncation;
                doc["tail_bound"] = r.tail_bound;
            } else if (l_mode == "euler") {
                const auto r = euler_product(l_s, chi, l_primes);
                doc["mode"] = "euler";
                doc["value_re"] = r.value.real();
                doc["value_im"] = r.value.imag();
                doc["truncation"] = r.truncation;
                doc["tail_bound"] = r.tail_bound;
            } else {
                const auto r = log_l_expansion(l_s, chi, l_primes, l_terms);
                doc["mode"] = "log";
                doc["main_re"] = r.main_term.real();
                doc["main_im"] = r.main_term.imag();
                doc["higher_re"] = r.higher_terms.real();
                doc["higher_im"] = r.higher_terms.imag();
                doc["truncation"] = l_primes;
                doc["terms"] = l_terms;
                // |higher terms| < 1 for every character and s > 1.
                doc["tail_bound"] = 1.0;
            }
            if (fmt == Format::json) {
                os << doc.dump(2) << '\n';
            } else if (fmt == Format::csv) {
                write_flat(os, doc, ',');
            } else {
                for (auto it = doc.begin(); it != doc.end(); ++it) os << it.key() << ": " << cell(*it) << '\n';
            }
            return ok;
        }

        if (*identity) {
            if (id_k < 1) throw domain_error("modulus must be >= 1");
            if (gcd(id_m, id_k) != 1) throw not_a_unit_error("m must be coprime to k");
            const auto s_values = parse_real_list(id_s);
            const auto chars = enumerate_characters(id_k);
            const auto primes = id_primes >= 2 ? PrimeTable(id_primes).primes() : std::vector<std::int64_t>{};
            const double phi = static_cast<double>(chars.size());

            ordered_json rows = ordered_json::array();
            bool all_ok = true;
            if (fmt == Format::csv) os << "k,m,s,value,truncation,tail_bound,lhs_re,lhs_im,residual\n";
            for (double s : s_values) {
                const auto r = fundamental_identity_check(chars, id_m, s, primes, id_primes, id_terms);
                // Omitted prime powers: q > P, or j > J for q <= P.
                const double p = static_cast<double>(std::max<std::int64_t>(id_primes, 1));
                double tail = phi * std::pow(p, 1.0 - s) / ((s - 1.0) * (1.0 - std::pow(std::max(p, 2.0), -s)));
                for (auto q : primes) {
                    const double base = std::pow(static_cast<double>(q), -s);
                    tail += phi * std::pow(base, id_terms + 1) / ((id_terms + 1) * (1.0 - base));
                }
                const bool passed = r.residual < 1e-9;
                all_ok = all_ok && passed;
                rows.push_back({{"k", id_k}, {"m", id_m}, {"s", s}, {"value", r.rhs}, {"truncation", id_primes},
                                {"tail_bound", tail}, {"lhs_re", r.lhs.real()}, {"lhs_im", r.lhs.imag()},
                                {"residual", r.residual}, {"passed", passed}});
                if (fmt == Format::csv) {
                    os << id_k << ',' << id_m << ',' << num(s) << ',' << num(r.rhs) << ',' << id_primes << ',' << num(tail)
                       << ',' << num(r.lhs.real()) << ',' << num(r.lhs.imag()) << ',' << num(r.residual) << '\n';
                } else if (fmt == Format::table) {
                    os << "k=" << id_k << " m=" << id_m << " s=" << num(s) << "  lhs=" << complex_text(r.lhs)
                       << "  rhs=" << num(r.rhs) << "  residual=" << num(r.residual) << (passed ? "  ok" : "  FAIL") << '\n';
                }
            }
            ordered_json profile = ordered_json::array();
            if (!id_profile.empty()) {
                const auto ps = parse_real_list(id_profile);
                const auto table = divergence_profile(id_k, id_m, ps, primes, id_primes);
                if (fmt == Format::csv) os << "k,m,s,value,truncation,tail_bound\n";
                for (const auto& row : table) {
                    profile.push_back({{"k", id_k}, {"m", id_m}, {"s", row.s}, {"value", row.value},
                                       {"truncation", row.truncation}, {"tail_bound", row.tail_bound}});
                    if (fmt == Format::csv) {
                        os << id_k << ',' << id_m << ',' << num(row.s) << ',' << num(row.value) << ',' << row.truncation
                           << ',' << num(row.tail_bound) << '\n';
                    } else if (fmt == Format::table) {
                        os << "profile s=" << num(row.s) << "  sum=" << num(row.value) << "  tail<=" << num(row.tail_bound)
                           << '\n';
                    }
                }
                if (fmt == Format::table) {
                    os << "increasing as s decreases: " << (increases_as_s_decreases(table) ? "yes" : "no") << '\n';
                }
            }
            if (fmt == Format::json) {
                ordered_json doc{{"identity", rows}, {"passed", all_ok}};
                if (!id_profile.empty()) doc["profile"] = profile;
                os << doc.dump(2) << '\n';
            }
            return all_ok ? ok : verification_failed;
        }

        if (*primes_cmd) {
            if (p_k < 1) throw domain_error("modulus must be >= 1");
            ordered_json doc;
            if (*p_search) {
                const auto r = kronecker_search(p_x, p_k, p_m);
                doc = {{"mu", p_x}, {"k", p_k}, {"m", p_m}, {"prime", r.prime}, {"interval", r.interval},
                       {"searched_to", r.searched_to}, {"rounds", r.rounds}};
            } else {
                if (p_x < 2) throw domain_error("x must be >= 2");
                const PrimeTable table(p_x);
                const auto count = table.count_in_progression(p_x, p_k, p_m);
                doc = {{"x", p_x}, {"k", p_k}, {"m", p_m}, {"count", count}};
                if (*p_ratio || (p_x >= 100 && gcd(p_m, p_k) == 1)) doc["ratio"] = pnt_ap_ratio(table, p_x, p_k, p_m);
            }
            if (fmt == Format::json) {
                os << doc.dump(2) << '\n';
            } else {
                write_flat(os, doc, fmt == Format::csv ? ',' : ' ');
            }
            return ok;
        }
    } catch (const resource_error& e) {
        err << "error: " << e.what() << '\n';
        return resource_failure;
    } catch (const std::logic_error& e) {
        // domain_error and std::stoll failures
        err << "error: " << e.what() << '\n';
        return usage_error;
    }
    return usage_error;
}

} // namespace dirichlet::cli
