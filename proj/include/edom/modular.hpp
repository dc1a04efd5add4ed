#pragma once

// Residue rings Z_n with zero divisors kept in play: divisibility, units,
// associates, and prime/irreducible elements diverge here, and the finite
// setting makes every definition decidable by exhaustion. PrimeField refines
// Z_p (p prime) into a Euclidean domain with constant norm 1.

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "edom/core.hpp"

namespace edom {

// A residue tagged with its modulus; ops across moduli are rejected.
struct ModElement {
    std::uint64_t value;
    std::uint64_t modulus;

    friend bool operator==(const ModElement&, const ModElement&) = default;
};

class ModularRing {
public:
    using element = ModElement;

    // 2 <= n <= 2^32, so products fit in uint64.
    explicit ModularRing(std::uint64_t n);

    std::uint64_t modulus() const { return n_; }

    // Wraps a residue; v must already lie in [0, n).
    element make(std::uint64_t v) const;

    element zero() const { return {0, n_}; }
    element one() const { return {1 % n_, n_}; }
    element add(const element& a, const element& b) const;
    element mul(const element& a, const element& b) const;
    element neg(const element& a) const;
    bool eq(const element& a, const element& b) const;
    bool less(const element& a, const element& b) const;
    std::string format(const element& a) const;

    // Strict decimal literal in [0, n).
    element parse(std::string_view text) const;

    // Smallest x with a*x = b, if any; a must be nonzero. With zero divisors
    // the witness need not be unique; the smallest is a canonical choice.
    std::optional<element> exact_divide(const element& a, const element& b) const;

    // Nonzero non-unit p such that p | ab implies p | a or p | b, checked
    // over all pairs.
    bool is_prime_element(const element& p) const;

    // Nonzero non-unit x whose every factorization x = ab has a unit factor.
    bool is_irreducible(const element& x) const;

    // Smallest element of the associate class of nonzero a.
    element canonical_associate(const element& a) const;

    // All nonzero residues: a complete divisor-candidate set for any element,
    // including zero (every nonzero element divides zero).
    std::vector<element> divisor_candidates(const element& x) const;

    std::vector<element> all_elements() const;

    std::string name() const { return "zmod:" + std::to_string(n_); }

private:
    std::uint64_t n_;

    void check_operand(const element& a) const;
};

// A subset of Z_n closed under addition and ring multiplication.
struct IdealSet {
    std::uint64_t modulus;
    std::vector<bool> member;  // indexed by residue

    std::vector<std::uint64_t> members() const;
    std::size_t count() const;

    friend bool operator==(const IdealSet&, const IdealSet&) = default;
};

IdealSet principal_ideal(const ModularRing& ring, const ModElement& a);

bool is_ideal(const ModularRing& ring, const IdealSet& ideal);

// Proper ideal I with ab in I implying a in I or b in I. Rejects sets that
// are not ideals of the ring.
bool is_prime_ideal(const ModularRing& ring, const IdealSet& ideal);

// Whether the proper principal ideal I is maximal among proper principal
// ideals. Rejects non-ideals, the full ring, and non-principal sets.
bool is_maximal_principal(const ModularRing& ring, const IdealSet& ideal);

// Exhaustive check of one theorem clause over a ring, with the first few
// violating tuples rendered for replay.
struct TheoremReport {
    std::uint64_t modulus = 0;
    std::string clause;
    std::uint64_t checked_count = 0;
    std::vector<std::string> counterexamples;  // capped at the first 10
};

// Divisibility-vs-ideal characterizations over Z_n: containment order,
// associates as equal ideals, units as universal divisors, the associate
// equivalence relation, and unit multiples; the unit-multiple converse is
// asserted only for prime moduli.
std::vector<TheoremReport> theorem21_suite(const ModularRing& ring);

// Prime elements vs nonzero prime ideals, and divisors of irreducibles being
// units or associates.
std::vector<TheoremReport> theorem22_suite(const ModularRing& ring);

class PrimeField : public ModularRing {
public:
    // p must be prime.
    explicit PrimeField(std::uint64_t p);

    // Constant norm: every nonzero element is a unit.
    BigInt norm(const element& a) const;

    // Exact division a * b^{-1} with remainder zero; b must be nonzero.
    std::pair<element, element> div_rem(const element& a, const element& b) const;

    std::string name() const { return "fp:" + std::to_string(modulus()); }
};

}  // namespace edom
