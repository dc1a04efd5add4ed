#pragma once

// Generic algebra over Euclidean domains: the domain contract as C++20
// concepts, the norm-driven gcd algorithm with its termination measure, the
// gcd decision procedure, and factorization checking/equivalence.

#include <algorithm>
#include <concepts>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "edom/bigint.hpp"

namespace edom {

template <typename D>
using element_t = typename D::element;

// A commutative ring with identity, decidable equality, exact division, and a
// deterministic element order (used only for canonical sorting and reports).
template <typename D>
concept ring_domain = requires(const D& d, const element_t<D>& a, const element_t<D>& b) {
    { d.zero() } -> std::convertible_to<element_t<D>>;
    { d.one() } -> std::convertible_to<element_t<D>>;
    { d.add(a, b) } -> std::convertible_to<element_t<D>>;
    { d.mul(a, b) } -> std::convertible_to<element_t<D>>;
    { d.neg(a) } -> std::convertible_to<element_t<D>>;
    { d.eq(a, b) } -> std::convertible_to<bool>;
    { d.exact_divide(a, b) } -> std::convertible_to<std::optional<element_t<D>>>;
    { d.less(a, b) } -> std::convertible_to<bool>;
    { d.format(a) } -> std::convertible_to<std::string>;
};

// Adds the Euclidean structure: a norm into the nonnegative integers and a
// division witness div_rem(a, b) = (q, r) with a = q*b + r and either r = 0
// or norm(r) < norm(b).
template <typename D>
concept euclidean_domain = ring_domain<D> &&
    requires(const D& d, const element_t<D>& a, const element_t<D>& b) {
        { d.norm(a) } -> std::convertible_to<BigInt>;
        { d.div_rem(a, b) } -> std::convertible_to<std::pair<element_t<D>, element_t<D>>>;
    };

// Irreducibility decision plus a canonical representative per associate class.
template <typename D>
concept factor_domain = ring_domain<D> && requires(const D& d, const element_t<D>& a) {
    { d.is_irreducible(a) } -> std::convertible_to<bool>;
    { d.canonical_associate(a) } -> std::convertible_to<element_t<D>>;
};

// Finite, complete candidate set for the divisors of an element; every
// divisor of x is listed. Rings where this set would be unbounded throw.
template <typename D>
concept divisor_enumerable = ring_domain<D> && requires(const D& d, const element_t<D>& a) {
    { d.divisor_candidates(a) } -> std::convertible_to<std::vector<element_t<D>>>;
};

template <ring_domain D>
bool is_zero(const D& d, const element_t<D>& a) {
    return d.eq(a, d.zero());
}

// Whether a divides b. The divisor must be nonzero.
template <ring_domain D>
bool divides(const D& d, const element_t<D>& a, const element_t<D>& b) {
    if (is_zero(d, a)) throw std::domain_error("divides: divisor must be nonzero");
    return d.exact_divide(a, b).has_value();
}

// Mutual divisibility of nonzero elements.
template <ring_domain D>
bool associates(const D& d, const element_t<D>& a, const element_t<D>& b) {
    if (is_zero(d, a) || is_zero(d, b))
        throw std::domain_error("associates: both arguments must be nonzero");
    return divides(d, a, b) && divides(d, b, a);
}

template <ring_domain D>
bool is_unit(const D& d, const element_t<D>& u) {
    if (is_zero(d, u)) return false;
    return d.exact_divide(u, d.one()).has_value();
}

// Product of a (possibly empty) sequence; the empty product is one.
template <ring_domain D>
element_t<D> product_of_sequence(const D& d, std::span<const element_t<D>> xs) {
    element_t<D> acc = d.one();
    for (const element_t<D>& x : xs) acc = d.mul(acc, x);
    return acc;
}

// A unit times a sequence of irreducible factors.
template <typename E>
struct Factorization {
    E unit;
    std::vector<E> factors;
};

// One state of the gcd iteration. `division` is set when norm(a) >= norm(b)
// and holds the (quotient, remainder) pair produced by div_rem. The measure
// is the lexicographic pair (norm(b), a = 0 ? 0 : norm(a)) that strictly
// decreases across states, witnessing termination.
template <typename E>
struct GcdStep {
    E a;
    E b;
    std::optional<std::pair<E, E>> division;
    BigInt measure_b;
    BigInt measure_a;
};

template <typename E>
struct GcdTrace {
    std::vector<GcdStep<E>> steps;
};

// Greatest common divisor of (a, b) with b nonzero, by norm descent:
//   a = 0                 -> b
//   norm(a) >= norm(b)    -> r := div_rem(a, b); r = 0 ? b : continue (b, r)
//   otherwise             -> continue (b, a)
// The result is a gcd up to associates; no representative is chosen here.
template <euclidean_domain D>
element_t<D> euclidean_gcd(const D& d, element_t<D> a, element_t<D> b,
                           GcdTrace<element_t<D>>* trace = nullptr) {
    if (is_zero(d, b)) throw std::domain_error("euclidean_gcd: b must be nonzero");
    for (;;) {
        const bool a_zero = is_zero(d, a);
        GcdStep<element_t<D>> step;
        if (trace) {
            step.a = a;
            step.b = b;
            step.measure_b = d.norm(b);
            step.measure_a = a_zero ? BigInt(0) : d.norm(a);
        }
        if (a_zero) {
            if (trace) trace->steps.push_back(std::move(step));
            return b;
        }
        if (d.norm(a) >= d.norm(b)) {
            std::pair<element_t<D>, element_t<D>> qr = d.div_rem(a, b);
            if (trace) {
                step.division = qr;
                trace->steps.push_back(std::move(step));
            }
            if (is_zero(d, qr.second)) return b;
            a = b;
            b = qr.second;
        } else {
            if (trace) trace->steps.push_back(std::move(step));
            std::swap(a, b);
        }
    }
}

// Decides whether g is a gcd of the nonempty set X: g divides every member,
// and every common divisor of X divides g. The second clause is decided by
// enumerating the divisor candidates of one member (a minimum-norm nonzero
// member when a norm is available), which bound all common divisors.
template <divisor_enumerable D>
bool is_gcd(const D& d, std::span<const element_t<D>> xs, const element_t<D>& g) {
    if (xs.empty()) throw std::domain_error("is_gcd: X must be nonempty");
    if (is_zero(d, g)) throw std::domain_error("is_gcd: gcd candidate must be nonzero");
    for (const element_t<D>& x : xs)
        if (!d.exact_divide(g, x).has_value()) return false;
    const element_t<D>* pivot = nullptr;
    for (const element_t<D>& x : xs) {
        if (is_zero(d, x)) continue;
        if constexpr (euclidean_domain<D>) {
            if (pivot == nullptr || d.norm(x) < d.norm(*pivot)) pivot = &x;
        } else {
            pivot = &x;
            break;
        }
    }
    // With no nonzero member the candidate set comes from zero itself; finite
    // rings enumerate it, unbounded rings reject.
    const element_t<D>& bound_member = pivot ? *pivot : xs.front();
    for (const element_t<D>& c : d.divisor_candidates(bound_member)) {
        bool common = true;
        for (const element_t<D>& x : xs) {
            if (!d.exact_divide(c, x).has_value()) {
                common = false;
                break;
            }
        }
        if (common && !d.exact_divide(c, g).has_value()) return false;
    }
    return true;
}

// Checks that f is a factorization of x: the unit is a unit, every factor is
// irreducible, and unit * product(factors) = x. x must be a nonzero non-unit.
template <factor_domain D>
bool verify_factorization(const D& d, const element_t<D>& x, const Factorization<element_t<D>>& f) {
    if (is_zero(d, x) || is_unit(d, x))
        throw std::domain_error("verify_factorization: x must be a nonzero non-unit");
    if (!is_unit(d, f.unit)) return false;
    for (const element_t<D>& p : f.factors)
        if (!d.is_irreducible(p)) return false;
    element_t<D> prod = d.mul(f.unit, product_of_sequence(d, std::span<const element_t<D>>(f.factors)));
    return d.eq(prod, x);
}

// Two factorizations are equivalent when their factor multisets agree up to
// associates: map each factor to its canonical associate, sort, compare.
template <factor_domain D>
bool factorization_equivalent(const D& d, const Factorization<element_t<D>>& f1,
                              const Factorization<element_t<D>>& f2) {
    if (f1.factors.size() != f2.factors.size()) return false;
    auto canonical_sorted = [&d](const std::vector<element_t<D>>& v) {
        std::vector<element_t<D>> out;
        out.reserve(v.size());
        for (const element_t<D>& p : v) out.push_back(d.canonical_associate(p));
        std::sort(out.begin(), out.end(),
                  [&d](const element_t<D>& a, const element_t<D>& b) { return d.less(a, b); });
        return out;
    };
    std::vector<element_t<D>> c1 = canonical_sorted(f1.factors);
    std::vector<element_t<D>> c2 = canonical_sorted(f2.factors);
    for (std::size_t i = 0; i < c1.size(); ++i)
        if (!d.eq(c1[i], c2[i])) return false;
    return true;
}

}  // namespace edom
