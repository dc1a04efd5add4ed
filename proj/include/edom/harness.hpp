#pragma once

// Property-verification harness: executable suites that sweep the concrete
// domains for violations of the algebraic contracts, checked against
// independent brute-force oracles. Sweeps run serially or OpenMP-parallel;
// both produce identical reports for a fixed seed.

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "edom/core.hpp"
#include "edom/gaussian.hpp"
#include "edom/integers.hpp"

namespace edom::harness {

// Enumeration limits. Suites are exhaustive up to the relevant bound and draw
// `random_sample_count` seeded samples from magnitudes/norms in (B, 4B]
// where the domain is infinite.
struct Bound {
    std::uint64_t integer_abs_bound = 50;
    std::uint64_t gaussian_norm_bound = 30;
    std::uint64_t modulus_bound = 12;
    std::uint64_t random_seed = 0xc0ffee;
    std::uint64_t random_sample_count = 100;

    friend bool operator==(const Bound&, const Bound&) = default;
};

// A violated clause with the inputs that violated it, rendered as literals
// so the case can be replayed.
struct Counterexample {
    std::string clause;
    std::vector<std::pair<std::string, std::string>> inputs;
};

struct SuiteReport {
    std::string suite;
    std::string domain;
    Bound bound;
    std::uint64_t cases_checked = 0;
    std::uint64_t cases_exhaustive = 0;
    std::uint64_t cases_sampled = 0;
    std::vector<Counterexample> counterexamples;  // first 10 per clause
    double elapsed_ms = 0.0;

    bool passed() const { return counterexamples.empty(); }
};

enum class RunMode { serial, parallel };

// Fault-injection hooks for sensitivity tests: a suite run with a mutation
// must fail.
struct Mutations {
    // Replaces div_rem_nearest in the contract checks that exercise it.
    std::function<std::pair<BigInt, BigInt>(const BigInt&, const BigInt&)> div_rem_nearest_override;
};

// Catalog order is fixed and user-visible.
const std::vector<std::string>& suite_names();

SuiteReport run_suite(const std::string& name, const Bound& bound,
                      RunMode mode = RunMode::parallel, const Mutations* mutations = nullptr);

std::string report_to_json(const SuiteReport& report, int indent = 2);
std::string report_to_text(const SuiteReport& report);

// ---- oracles: independent routes the suites compare against ----

// Largest d >= 1 dividing both a and b, by descending scan; (a, b) != (0, 0).
BigInt brute_force_gcd(const BigInt& a, const BigInt& b);

// All common divisors of x and y != 0: every element of norm up to the
// smallest operand norm, filtered by division, ordered by (norm, re, im).
std::vector<GaussianInt> common_divisors_gaussian(const GaussianInt& x, const GaussianInt& y);

// 0 (optional), 1, -1, 2, -2, ..., up to magnitude `bound`.
std::vector<BigInt> integers_by_magnitude(std::uint64_t bound, bool include_zero);

// Zero (optional), then all elements of norm 1..norm_bound ordered by
// (norm, re, im).
std::vector<GaussianInt> gaussians_by_norm(std::uint64_t norm_bound, bool include_zero);

// Scans candidate pairs (a, b) in order for a violation of the prime-element
// definition for x — x | ab with x dividing neither — returning the first
// violating pair. x must be a nonzero non-unit.
template <ring_domain D>
std::optional<std::pair<element_t<D>, element_t<D>>> falsify_prime_definition(
    const D& d, const element_t<D>& x, std::span<const element_t<D>> candidates) {
    if (is_zero(d, x) || is_unit(d, x))
        throw std::domain_error("falsify_prime_definition: x must be a nonzero non-unit");
    for (const element_t<D>& a : candidates) {
        for (const element_t<D>& b : candidates) {
            element_t<D> ab = d.mul(a, b);
            if (d.exact_divide(x, ab).has_value() && !d.exact_divide(x, a).has_value() &&
                !d.exact_divide(x, b).has_value())
                return std::pair<element_t<D>, element_t<D>>{a, b};
        }
    }
    return std::nullopt;
}

// div_rem_nearest with the quotient-adjustment step removed: the remainder is
// left in [0, |b|) instead of being pulled within |b|/2. For fault injection.
std::pair<BigInt, BigInt> div_rem_nearest_drop_shift(const BigInt& a, const BigInt& b);

}  // namespace edom::harness
