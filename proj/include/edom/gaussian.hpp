#pragma once

// Gaussian integers Z[i] as a Euclidean domain under the norm re^2 + im^2,
// with nearest-quotient division, irreducibility by norm-divisor search, and
// factorization into canonical irreducibles.

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "edom/core.hpp"

namespace edom {

struct GaussianInt {
    BigInt re;
    BigInt im;

    friend bool operator==(const GaussianInt&, const GaussianInt&) = default;
};

inline GaussianInt conjugate(const GaussianInt& x) { return {x.re, -x.im}; }

// Integer division of a by nonzero b selecting the quotient whose remainder
// has minimal magnitude, ties resolved toward the positive remainder:
// a = q*b + r with 2|r| <= |b|.
std::pair<BigInt, BigInt> div_rem_nearest(const BigInt& a, const BigInt& b);

// Literal grammar: "3", "-2", "4i", "-1i", "3+1i", "-2-5i". A pure imaginary
// unit is written "1i"/"-1i"; the imaginary part always carries a digit.
GaussianInt parse_gaussian(std::string_view text);
std::string format_gaussian(const GaussianInt& x);

// All lattice points with re^2 + im^2 = k, ordered by (re, im) ascending.
std::vector<GaussianInt> gaussian_elements_with_norm(const BigInt& k);

class GaussianRing {
public:
    using element = GaussianInt;

    element zero() const { return {0, 0}; }
    element one() const { return {1, 0}; }
    element add(const element& a, const element& b) const { return {a.re + b.re, a.im + b.im}; }
    element neg(const element& a) const { return {-a.re, -a.im}; }
    element mul(const element& a, const element& b) const {
        return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
    }
    bool eq(const element& a, const element& b) const { return a == b; }

    // Deterministic order by (norm, re, im); used for canonical sorting.
    bool less(const element& a, const element& b) const;

    std::string format(const element& a) const { return format_gaussian(a); }
    element parse(std::string_view text) const { return parse_gaussian(text); }

    // Euclidean norm re^2 + im^2; zero has no norm.
    BigInt norm(const element& a) const;

    // Nearest-quotient Gaussian division: q has each component of
    // y * conj(x) divided by norm(x) under div_rem_nearest, r = y - q*x.
    // Guarantees r = 0 or norm(r) < norm(x).
    std::pair<element, element> div_rem(const element& y, const element& x) const;

    std::optional<element> exact_divide(const element& a, const element& b) const;

    bool is_irreducible(const element& a) const;

    // The unique associate with re > 0 and im >= 0.
    element canonical_associate(const element& a) const;

    // Every divisor of nonzero x: elements whose norm divides norm(x),
    // filtered by exact division. Unbounded for x = 0.
    std::vector<element> divisor_candidates(const element& x) const;

    // Factors a nonzero non-unit into unit * canonical irreducibles sorted
    // by (norm, re, im).
    Factorization<element> factor(const element& x) const;

    std::string name() const { return "zi"; }
};

}  // namespace edom
