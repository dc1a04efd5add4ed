#include <CLI11.hpp>
#include <json.hpp>

#include <cstdint>
#include <iostream>
#include <optional>
#include <string>

#include "edom/gaussian.hpp"
#include "edom/harness.hpp"
#include "edom/integers.hpp"
#include "edom/modular.hpp"

namespace {

using namespace edom;
using nlohmann::ordered_json;

ordered_json elem_json(const IntegerRing& d, const BigInt& v) { return d.format(v); }
ordered_json elem_json(const GaussianRing&, const GaussianInt& v) {
    return ordered_json{{"re", format_decimal(v.re)}, {"im", format_decimal(v.im)}};
}
ordered_json elem_json(const ModularRing& d, const ModElement& v) { return d.format(v); }

// Domain selectors: z | zi | fp:<prime> | zmod:<n>, n >= 2. Selector errors
// are usage errors, reported before any algebra runs.
struct DomainSelector {
    enum class Kind { z, zi, fp, zmod } kind;
    std::uint64_t modulus = 0;
};

std::uint64_t parse_selector_modulus(const std::string& text, const std::string& selector) {
    BigInt n = parse_decimal(text);
    if (n < 2 || n > BigInt(1) * (std::uint64_t(1) << 32))
        throw parse_error("modulus out of range in domain selector: " + selector);
    return to_u64(n);
}

DomainSelector parse_domain(const std::string& s) {
    if (s == "z") return {DomainSelector::Kind::z};
    if (s == "zi") return {DomainSelector::Kind::zi};
    if (s.rfind("fp:", 0) == 0) {
        std::uint64_t p = parse_selector_modulus(s.substr(3), s);
        if (!is_irreducible_integer(BigInt(static_cast<unsigned long>(p))))
            throw parse_error("fp modulus must be prime: " + s);
        return {DomainSelector::Kind::fp, p};
    }
    if (s.rfind("zmod:", 0) == 0)
        return {DomainSelector::Kind::zmod, parse_selector_modulus(s.substr(5), s)};
    throw parse_error("unknown domain selector: " + s + " (expected z, zi, fp:<p>, zmod:<n>)");
}

template <typename Fn>
int with_domain(const std::string& selector, Fn&& fn) {
    DomainSelector ds = parse_domain(selector);
    switch (ds.kind) {
        case DomainSelector::Kind::z:
            return fn(IntegerRing{});
        case DomainSelector::Kind::zi:
            return fn(GaussianRing{});
        case DomainSelector::Kind::fp:
            return fn(PrimeField{ds.modulus});
        case DomainSelector::Kind::zmod:
            return fn(ModularRing{ds.modulus});
    }
    return 2;
}

template <typename D>
int run_gcd_cmd(const D& d, const std::string& lit_a, const std::string& lit_b, bool json,
                bool with_trace, bool canonical) {
    if constexpr (!euclidean_domain<D>) {
        (void)lit_a, (void)lit_b, (void)json, (void)with_trace, (void)canonical;
        throw parse_error("gcd requires a Euclidean domain: z, zi, or fp:<p>");
    } else {
        element_t<D> a = d.parse(lit_a);
        element_t<D> b = d.parse(lit_b);
        GcdTrace<element_t<D>> trace;
        element_t<D> g = euclidean_gcd(d, a, b, with_trace ? &trace : nullptr);
        element_t<D> shown = canonical ? d.canonical_associate(g) : g;
        if (json) {
            ordered_json j;
            j["domain"] = d.name();
            j["a"] = elem_json(d, a);
            j["b"] = elem_json(d, b);
            j["gcd"] = elem_json(d, shown);
            j["canonical"] = canonical;
            if (with_trace) {
                ordered_json steps = ordered_json::array();
                for (const GcdStep<element_t<D>>& s : trace.steps) {
                    ordered_json step;
                    step["a"] = elem_json(d, s.a);
                    step["b"] = elem_json(d, s.b);
                    if (s.division.has_value()) {
                        step["q"] = elem_json(d, s.division->first);
                        step["r"] = elem_json(d, s.division->second);
                    }
                    step["measure"] = {format_decimal(s.measure_b), format_decimal(s.measure_a)};
                    steps.push_back(step);
                }
                j["trace"] = steps;
            }
            std::cout << j.dump(2) << "\n";
        } else {
            if (with_trace) {
                for (const GcdStep<element_t<D>>& s : trace.steps) {
                    std::cout << "step a=" << d.format(s.a) << " b=" << d.format(s.b);
                    if (s.division.has_value())
                        std::cout << " q=" << d.format(s.division->first)
                                  << " r=" << d.format(s.division->second);
                    std::cout << " measure=(" << format_decimal(s.measure_b) << ","
                              << format_decimal(s.measure_a) << ")\n";
                }
            }
            std::cout << d.format(shown) << "\n";
        }
        return 0;
    }
}

template <typename D>
int run_divrem_cmd(const D& d, const std::string& lit_a, const std::string& lit_b, bool json) {
    if constexpr (!euclidean_domain<D>) {
        (void)lit_a, (void)lit_b, (void)json;
        throw parse_error("divrem requires a Euclidean domain: z, zi, or fp:<p>");
    } else {
        element_t<D> a = d.parse(lit_a);
        element_t<D> b = d.parse(lit_b);
        auto [q, r] = d.div_rem(a, b);
        if (json) {
            ordered_json j;
            j["domain"] = d.name();
            j["a"] = elem_json(d, a);
            j["b"] = elem_json(d, b);
            j["q"] = elem_json(d, q);
            j["r"] = elem_json(d, r);
            std::cout << j.dump(2) << "\n";
        } else {
            std::cout << "(" << d.format(q) << ", " << d.format(r) << ")\n";
        }
        return 0;
    }
}

template <typename D>
int run_factor_cmd(const D& d, const std::string& lit_x, bool json) {
    if constexpr (!requires(const D& dd, const element_t<D>& x) { dd.factor(x); }) {
        (void)lit_x, (void)json;
        throw parse_error("factor supports domains z and zi");
    } else {
        element_t<D> x = d.parse(lit_x);
        Factorization<element_t<D>> f = d.factor(x);
        if (json) {
            ordered_json j;
            j["domain"] = d.name();
            j["x"] = elem_json(d, x);
            j["unit"] = elem_json(d, f.unit);
            ordered_json fs = ordered_json::array();
            for (const element_t<D>& p : f.factors) fs.push_back(elem_json(d, p));
            j["factors"] = fs;
            std::cout << j.dump(2) << "\n";
        } else {
            // Gaussian factors are parenthesized so signs stay unambiguous.
            const bool wrap = std::is_same_v<D, GaussianRing>;
            std::cout << d.format(f.unit);
            for (const element_t<D>& p : f.factors)
                std::cout << " * " << (wrap ? "(" + d.format(p) + ")" : d.format(p));
            std::cout << "\n";
        }
        return 0;
    }
}

struct Classification {
    bool zero, unit, prime, irreducible;
};

Classification classify_element(const IntegerRing& d, const BigInt& x) {
    return {x == 0, abs_value(x) == 1, d.is_prime_element(x), d.is_irreducible(x)};
}

Classification classify_element(const GaussianRing& d, const GaussianInt& x) {
    // Prime and irreducible coincide in Z[i].
    bool irr = d.is_irreducible(x);
    return {d.eq(x, d.zero()), is_unit(d, x), irr, irr};
}

Classification classify_element(const ModularRing& d, const ModElement& x) {
    return {d.eq(x, d.zero()), is_unit(d, x), d.is_prime_element(x), d.is_irreducible(x)};
}

template <typename D>
int run_classify_cmd(const D& d, const std::string& lit_x, bool json) {
    element_t<D> x = d.parse(lit_x);
    Classification c = classify_element(d, x);
    if (json) {
        ordered_json j;
        j["domain"] = d.name();
        j["x"] = elem_json(d, x);
        j["zero"] = c.zero;
        j["unit"] = c.unit;
        j["prime"] = c.prime;
        j["irreducible"] = c.irreducible;
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << std::boolalpha << "zero=" << c.zero << " unit=" << c.unit
                  << " prime=" << c.prime << " irreducible=" << c.irreducible << "\n";
    }
    return 0;
}

int run_ideal_cmd(std::uint64_t modulus, const std::string& lit_gen, bool json) {
    if (modulus < 2) throw parse_error("ideal: modulus must be at least 2");
    ModularRing ring(modulus);
    ModElement g = ring.parse(lit_gen);
    IdealSet ideal = principal_ideal(ring, g);
    bool prime = is_prime_ideal(ring, ideal);
    // The full ring is not a proper ideal; report false rather than reject.
    bool maximal = ideal.count() == modulus ? false : is_maximal_principal(ring, ideal);
    if (json) {
        ordered_json j;
        j["modulus"] = modulus;
        j["generator"] = ring.format(g);
        j["members"] = ideal.members();
        j["prime"] = prime;
        j["maximal_principal"] = maximal;
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << "{";
        bool first = true;
        for (std::uint64_t m : ideal.members()) {
            if (!first) std::cout << ",";
            std::cout << m;
            first = false;
        }
        std::cout << std::boolalpha << "} prime=" << prime << " maximal_principal=" << maximal
                  << "\n";
    }
    return 0;
}

int run_verify_cmd(const std::string& suite, std::optional<std::uint64_t> bound_all,
                   std::optional<std::uint64_t> seed, std::optional<std::uint64_t> samples,
                   bool serial, const std::string& mutate, bool json) {
    harness::Bound bound;
    if (bound_all.has_value()) {
        bound.integer_abs_bound = *bound_all;
        bound.gaussian_norm_bound = *bound_all;
        bound.modulus_bound = *bound_all;
    }
    if (seed.has_value()) bound.random_seed = *seed;
    if (samples.has_value()) bound.random_sample_count = *samples;

    harness::Mutations mutations;
    const harness::Mutations* mp = nullptr;
    if (mutate == "drop-divrem-shift") {
        mutations.div_rem_nearest_override = harness::div_rem_nearest_drop_shift;
        mp = &mutations;
    } else if (!mutate.empty()) {
        throw parse_error("unknown mutation: " + mutate);
    }

    harness::SuiteReport report = harness::run_suite(
        suite, bound, serial ? harness::RunMode::serial : harness::RunMode::parallel, mp);
    std::cout << (json ? harness::report_to_json(report) + "\n"
                       : harness::report_to_text(report));
    return report.passed() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"algebra kernel for Euclidean domains: gcd, division, factorization, verification"};
    app.require_subcommand(1);

    std::string domain = "z";
    std::string lit_a, lit_b, lit_x, ideal_gen;
    bool json = false, trace_flag = false, canonical = false, serial = false;
    std::uint64_t ideal_modulus = 0;

    CLI::App* gcd_cmd = app.add_subcommand("gcd", "gcd of two elements by norm descent");
    gcd_cmd->add_option("--domain", domain, "domain selector: z, zi, fp:<p>");
    gcd_cmd->add_flag("--json", json, "emit JSON");
    gcd_cmd->add_flag("--trace", trace_flag, "show every state with its termination measure");
    gcd_cmd->add_flag("--canonical", canonical, "emit the canonical associate of the result");
    gcd_cmd->add_option("a", lit_a, "first element")->required();
    gcd_cmd->add_option("b", lit_b, "second element (nonzero)")->required();

    CLI::App* divrem_cmd = app.add_subcommand("divrem", "norm-reducing division");
    divrem_cmd->add_option("--domain", domain, "domain selector: z, zi, fp:<p>");
    divrem_cmd->add_flag("--json", json, "emit JSON");
    divrem_cmd->add_option("a", lit_a, "dividend")->required();
    divrem_cmd->add_option("b", lit_b, "divisor (nonzero)")->required();

    CLI::App* factor_cmd = app.add_subcommand("factor", "factor into unit * irreducibles");
    factor_cmd->add_option("--domain", domain, "domain selector: z or zi");
    factor_cmd->add_flag("--json", json, "emit JSON");
    factor_cmd->add_option("x", lit_x, "element to factor (nonzero non-unit)")->required();

    CLI::App* classify_cmd =
        app.add_subcommand("classify", "zero/unit/prime/irreducible classification");
    classify_cmd->add_option("--domain", domain, "domain selector: z, zi, fp:<p>, zmod:<n>");
    classify_cmd->add_flag("--json", json, "emit JSON");
    classify_cmd->add_option("x", lit_x, "element to classify")->required();

    CLI::App* ideal_cmd = app.add_subcommand("ideal", "principal ideal of a residue ring");
    ideal_cmd->add_option("--modulus", ideal_modulus, "ring modulus n >= 2")->required();
    ideal_cmd->add_flag("--json", json, "emit JSON");
    ideal_cmd->add_option("generator", ideal_gen, "generator residue")->required();

    std::string suite, mutate;
    std::optional<std::uint64_t> bound_all, seed, samples;
    CLI::App* verify_cmd = app.add_subcommand("verify", "run a property-verification suite");
    verify_cmd->add_option("--suite", suite, "suite name (see README)")->required();
    verify_cmd->add_option("--bound", bound_all, "sets every enumeration bound");
    verify_cmd->add_option("--seed", seed, "seed for sampled cases");
    verify_cmd->add_option("--samples", samples, "number of sampled cases per block");
    verify_cmd->add_flag("--serial", serial, "use the serial reference runner");
    verify_cmd->add_flag("--json", json, "emit the report as JSON");
    verify_cmd->add_option("--mutate", mutate, "fault injection (drop-divrem-shift)")
        ->group("");  // hidden: sensitivity testing only

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (gcd_cmd->parsed())
            return with_domain(domain, [&](const auto& d) {
                return run_gcd_cmd(d, lit_a, lit_b, json, trace_flag, canonical);
            });
        if (divrem_cmd->parsed())
            return with_domain(domain,
                               [&](const auto& d) { return run_divrem_cmd(d, lit_a, lit_b, json); });
        if (factor_cmd->parsed())
            return with_domain(domain, [&](const auto& d) { return run_factor_cmd(d, lit_x, json); });
        if (classify_cmd->parsed())
            return with_domain(domain,
                               [&](const auto& d) { return run_classify_cmd(d, lit_x, json); });
        if (ideal_cmd->parsed()) return run_ideal_cmd(ideal_modulus, ideal_gen, json);
        if (verify_cmd->parsed())
            return run_verify_cmd(suite, bound_all, seed, samples, serial, mutate, json);
    } catch (const parse_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    }
    return 2;
}
