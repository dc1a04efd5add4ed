#pragma once

// The ring of integers as a Euclidean domain: absolute-value norm, division
// with nonnegative remainder, trial-division irreducibility and factoring.

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "edom/core.hpp"

namespace edom {

// Division of i by nonzero j with remainder in [0, |j|):
// i = q*j + r, 0 <= r < |j|.
std::pair<BigInt, BigInt> div_rem_nonneg(const BigInt& i, const BigInt& j);

// Irreducible in Z means |n| is a rational prime. Trial division; intended
// for desk-scale inputs.
bool is_irreducible_integer(const BigInt& n);

class IntegerRing {
public:
    using element = BigInt;

    element zero() const { return 0; }
    element one() const { return 1; }
    element add(const element& a, const element& b) const { return a + b; }
    element mul(const element& a, const element& b) const { return a * b; }
    element neg(const element& a) const { return -a; }
    bool eq(const element& a, const element& b) const { return a == b; }
    bool less(const element& a, const element& b) const { return a < b; }
    std::string format(const element& a) const { return format_decimal(a); }
    element parse(std::string_view text) const { return parse_decimal(text); }

    // Euclidean norm |a|; zero has no norm.
    BigInt norm(const element& a) const;

    std::pair<element, element> div_rem(const element& a, const element& b) const {
        return div_rem_nonneg(a, b);
    }

    // Quotient b/a when a divides b exactly; a must be nonzero.
    std::optional<element> exact_divide(const element& a, const element& b) const;

    bool is_irreducible(const element& a) const { return is_irreducible_integer(a); }

    // In Z a prime element is a nonzero non-unit p with p | ab => p | a or
    // p | b, which coincides with irreducibility.
    bool is_prime_element(const element& a) const;

    element canonical_associate(const element& a) const;

    // Every divisor of nonzero x, i.e. +-d for each d dividing |x|, ordered
    // by magnitude with the positive sign first. Unbounded for x = 0.
    std::vector<element> divisor_candidates(const element& x) const;

    // Factors |n| >= 2 into sign * ascending primes.
    Factorization<element> factor(const element& n) const;

    std::string name() const { return "z"; }
};

}  // namespace edom
