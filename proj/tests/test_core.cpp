#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <vector>

#include "edom/core.hpp"
#include "edom/gaussian.hpp"
#include "edom/integers.hpp"
#include "edom/modular.hpp"

using namespace edom;

namespace {

const IntegerRing zr;
const GaussianRing gr;

// Independent divisibility oracle: search for a witness x with a*x = b by
// bounded enumeration, instead of asking the ring's exact_divide.
bool divides_by_search(const BigInt& a, const BigInt& b, long witness_bound) {
    for (long x = -witness_bound; x <= witness_bound; ++x)
        if (a * BigInt(x) == b) return true;
    return false;
}

GaussianInt gi(long re, long im) { return {BigInt(re), BigInt(im)}; }

}  // namespace

TEST_CASE("divides agrees with witness search on small integers") {
    for (long a = -12; a <= 12; ++a) {
        if (a == 0) continue;
        for (long b = -12; b <= 12; ++b) {
            CAPTURE(a);
            CAPTURE(b);
            CHECK(divides(zr, BigInt(a), BigInt(b)) == divides_by_search(a, b, 144));
        }
    }
}

TEST_CASE("divides handles zero and rejects a zero divisor") {
    CHECK(divides(zr, BigInt(3), BigInt(12)));
    CHECK(divides(zr, BigInt(-3), BigInt(12)));
    CHECK(divides(zr, BigInt(7), BigInt(0)));
    CHECK_FALSE(divides(zr, BigInt(5), BigInt(12)));
    CHECK_THROWS_AS(divides(zr, BigInt(0), BigInt(12)), std::domain_error);
    CHECK(divides(gr, gi(2, -1), gi(5, 0)));
    CHECK_FALSE(divides(gr, gi(3, 0), gi(5, 0)));
    CHECK_THROWS_AS(divides(gr, gr.zero(), gi(1, 0)), std::domain_error);
}

TEST_CASE("associates: frozen examples and precondition") {
    CHECK(associates(zr, BigInt(3), BigInt(-3)));
    CHECK_FALSE(associates(zr, BigInt(2), BigInt(4)));
    CHECK(associates(gr, gi(2, -1), gi(1, 2)));
    CHECK_FALSE(associates(gr, gi(1, 1), gi(1, 2)));
    CHECK_THROWS_AS(associates(zr, BigInt(0), BigInt(3)), std::domain_error);
    CHECK_THROWS_AS(associates(zr, BigInt(3), BigInt(0)), std::domain_error);
}

TEST_CASE("associates is an equivalence relation on nonzero integers") {
    std::vector<BigInt> xs;
    for (long v = -20; v <= 20; ++v)
        if (v != 0) xs.push_back(BigInt(v));
    for (const BigInt& a : xs) CHECK(associates(zr, a, a));
    for (const BigInt& a : xs)
        for (const BigInt& b : xs) CHECK(associates(zr, a, b) == associates(zr, b, a));
    for (const BigInt& a : xs)
        for (const BigInt& b : xs) {
            if (!associates(zr, a, b)) continue;
            for (const BigInt& c : xs)
                if (associates(zr, b, c)) CHECK(associates(zr, a, c));
        }
}

TEST_CASE("in Z associates are exactly sign flips") {
    for (long a = -20; a <= 20; ++a) {
        if (a == 0) continue;
        for (long b = -20; b <= 20; ++b) {
            if (b == 0) continue;
            CHECK(associates(zr, BigInt(a), BigInt(b)) == (a == b || a == -b));
        }
    }
}

TEST_CASE("unit-multiples are associates in Z[i]") {
    const std::array<GaussianInt, 4> units = {gi(1, 0), gi(-1, 0), gi(0, 1), gi(0, -1)};
    for (const GaussianInt& x : gaussian_elements_with_norm(BigInt(5)))
        for (const GaussianInt& u : units) CHECK(associates(gr, x, gr.mul(u, x)));
}

TEST_CASE("is_unit: frozen examples across domains") {
    CHECK(is_unit(zr, BigInt(1)));
    CHECK(is_unit(zr, BigInt(-1)));
    CHECK_FALSE(is_unit(zr, BigInt(2)));
    CHECK_FALSE(is_unit(zr, BigInt(0)));
    CHECK(is_unit(gr, gi(0, 1)));
    CHECK(is_unit(gr, gi(-1, 0)));
    CHECK_FALSE(is_unit(gr, gi(1, 1)));
    ModularRing z6(6);
    CHECK(is_unit(z6, z6.make(5)));
    CHECK(is_unit(z6, z6.make(1)));
    CHECK_FALSE(is_unit(z6, z6.make(2)));
    CHECK_FALSE(is_unit(z6, z6.make(0)));
}

TEST_CASE("product_of_sequence: empty product is one") {
    std::vector<BigInt> empty;
    CHECK(product_of_sequence(zr, std::span<const BigInt>(empty)) == 1);
    std::vector<BigInt> xs = {2, 3, 5};
    CHECK(product_of_sequence(zr, std::span<const BigInt>(xs)) == 30);
    std::vector<GaussianInt> gs = {gi(1, 1), gi(1, 1)};
    CHECK(product_of_sequence(gr, std::span<const GaussianInt>(gs)) == gi(0, 2));
}

TEST_CASE("euclidean_gcd: frozen values") {
    CHECK(euclidean_gcd(zr, BigInt(0), BigInt(7)) == 7);
    CHECK(euclidean_gcd(zr, BigInt(12), BigInt(18)) == 6);
    CHECK(euclidean_gcd(zr, BigInt(5), BigInt(-3)) == 1);
    CHECK(euclidean_gcd(gr, gi(5, 0), gi(3, 1)) == gi(1, 2));
    CHECK_THROWS_AS(euclidean_gcd(zr, BigInt(5), BigInt(0)), std::domain_error);
    CHECK_THROWS_AS(euclidean_gcd(zr, BigInt(0), BigInt(0)), std::domain_error);
}

TEST_CASE("euclidean_gcd can return a negative associate") {
    BigInt g = euclidean_gcd(zr, BigInt(6), BigInt(-6));
    CHECK(g == -6);
    CHECK(zr.canonical_associate(g) == 6);
}

TEST_CASE("gcd trace on (12, 18): swap, divide, terminate") {
    GcdTrace<BigInt> trace;
    BigInt g = euclidean_gcd(zr, BigInt(12), BigInt(18), &trace);
    CHECK(g == 6);
    REQUIRE(trace.steps.size() == 3);

    CHECK(trace.steps[0].a == 12);
    CHECK(trace.steps[0].b == 18);
    CHECK_FALSE(trace.steps[0].division.has_value());
    CHECK(trace.steps[0].measure_b == 18);
    CHECK(trace.steps[0].measure_a == 12);

    CHECK(trace.steps[1].a == 18);
    CHECK(trace.steps[1].b == 12);
    REQUIRE(trace.steps[1].division.has_value());
    CHECK(trace.steps[1].division->first == 1);
    CHECK(trace.steps[1].division->second == 6);

    CHECK(trace.steps[2].a == 12);
    CHECK(trace.steps[2].b == 6);
    REQUIRE(trace.steps[2].division.has_value());
    CHECK(trace.steps[2].division->second == 0);
}

TEST_CASE("is_gcd: frozen decisions and preconditions") {
    std::array<BigInt, 2> xs{12, 18};
    std::span<const BigInt> span_xs(xs);
    CHECK(is_gcd(zr, span_xs, BigInt(6)));
    CHECK(is_gcd(zr, span_xs, BigInt(-6)));
    CHECK_FALSE(is_gcd(zr, span_xs, BigInt(3)));
    CHECK_FALSE(is_gcd(zr, span_xs, BigInt(12)));

    std::array<BigInt, 1> single{5};
    CHECK(is_gcd(zr, std::span<const BigInt>(single), BigInt(5)));
    CHECK(is_gcd(zr, std::span<const BigInt>(single), BigInt(-5)));

    std::array<BigInt, 2> with_zero{0, 9};
    CHECK(is_gcd(zr, std::span<const BigInt>(with_zero), BigInt(9)));

    CHECK_THROWS_AS(is_gcd(zr, std::span<const BigInt>(), BigInt(1)), std::domain_error);
    CHECK_THROWS_AS(is_gcd(zr, span_xs, BigInt(0)), std::domain_error);
    std::array<BigInt, 2> zeros{0, 0};
    CHECK_THROWS_AS(is_gcd(zr, std::span<const BigInt>(zeros), BigInt(1)), std::domain_error);
}

TEST_CASE("all-zero sets are decidable in finite rings") {
    ModularRing z6(6);
    std::array<ModElement, 1> zeros{z6.zero()};
    // Every nonzero element is a common divisor of {0}, and no nonzero
    // element of Z_6 is divisible by all of them, so nothing is a gcd of {0}
    // - but the question is decidable, unlike in Z.
    for (std::uint64_t d = 1; d < 6; ++d)
        CHECK_FALSE(is_gcd(z6, std::span<const ModElement>(zeros), z6.make(d)));
}

TEST_CASE("gcd is symmetric up to associates in Z") {
    for (long a = -30; a <= 30; ++a)
        for (long b = -30; b <= 30; ++b) {
            if (a == 0 || b == 0) continue;
            BigInt g1 = euclidean_gcd(zr, BigInt(a), BigInt(b));
            BigInt g2 = euclidean_gcd(zr, BigInt(b), BigInt(a));
            CHECK(associates(zr, g1, g2));
        }
}

TEST_CASE("gcd is symmetric up to associates in Z[i]") {
    std::vector<GaussianInt> elems;
    for (long k = 1; k <= 10; ++k)
        for (const GaussianInt& g : gaussian_elements_with_norm(BigInt(k))) elems.push_back(g);
    for (const GaussianInt& x : elems)
        for (const GaussianInt& y : elems) {
            GaussianInt g1 = euclidean_gcd(gr, x, y);
            GaussianInt g2 = euclidean_gcd(gr, y, x);
            CHECK(associates(gr, g1, g2));
        }
}

TEST_CASE("verify_factorization: frozen decisions") {
    Factorization<BigInt> ok{1, {2, 2, 3}};
    CHECK(verify_factorization(zr, BigInt(12), ok));
    Factorization<BigInt> wrong_product{1, {2, 3}};
    CHECK_FALSE(verify_factorization(zr, BigInt(12), wrong_product));
    Factorization<BigInt> composite_factor{1, {4, 3}};
    CHECK_FALSE(verify_factorization(zr, BigInt(12), composite_factor));
    Factorization<BigInt> non_unit_unit{2, {2, 3}};
    CHECK_FALSE(verify_factorization(zr, BigInt(12), non_unit_unit));

    Factorization<GaussianInt> two{gi(0, -1), {gi(1, 1), gi(1, 1)}};
    CHECK(verify_factorization(gr, gi(2, 0), two));

    CHECK_THROWS_AS(verify_factorization(zr, BigInt(0), ok), std::domain_error);
    CHECK_THROWS_AS(verify_factorization(zr, BigInt(1), ok), std::domain_error);
    CHECK_THROWS_AS(verify_factorization(zr, BigInt(-1), ok), std::domain_error);
}

TEST_CASE("factorization_equivalent: up to order and associates") {
    Factorization<BigInt> a{1, {2, 3}};
    Factorization<BigInt> b{-1, {-3, -2}};
    CHECK(factorization_equivalent(zr, a, b));
    Factorization<BigInt> c{1, {2, 2, 3}};
    CHECK_FALSE(factorization_equivalent(zr, a, c));
    CHECK_FALSE(factorization_equivalent(zr, c, a));

    Factorization<GaussianInt> f1{gi(1, 0), {gi(2, -1)}};
    Factorization<GaussianInt> f2{gi(0, 1), {gi(1, 2)}};
    CHECK(factorization_equivalent(gr, f1, f2));
}

TEST_CASE("one Euclid step preserves the gcd relation (small sweep)") {
    for (long a = -12; a <= 12; ++a)
        for (long b = -12; b <= 12; ++b) {
            if (b == 0) continue;
            auto [q, r] = zr.div_rem(BigInt(a), BigInt(b));
            for (long g = -12; g <= 12; ++g) {
                if (g == 0) continue;
                std::array<BigInt, 2> before{BigInt(a), BigInt(b)}, after{BigInt(b), r};
                CHECK(is_gcd(zr, std::span<const BigInt>(before), BigInt(g)) ==
                      is_gcd(zr, std::span<const BigInt>(after), BigInt(g)));
            }
        }
}
