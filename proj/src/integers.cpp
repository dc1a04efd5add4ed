#include "edom/integers.hpp"

#include <stdexcept>

namespace edom {
namespace {

// Smallest prime factor of m >= 2 by trial division, with a word-sized fast
// path. Returns m itself when m is prime.
BigInt smallest_prime_factor(const BigInt& m) {
    if (mpz_fits_ulong_p(m.get_mpz_t())) {
        unsigned long v = mpz_get_ui(m.get_mpz_t());
        if (v % 2 == 0) return 2;
        for (unsigned long d = 3; d <= v / d; d += 2)
            if (v % d == 0) return BigInt(d);
        return m;
    }
    if (divides_exactly(2, m)) return 2;
    for (BigInt d = 3; d * d <= m; d += 2)
        if (divides_exactly(d, m)) return d;
    return m;
}

}  // namespace

std::pair<BigInt, BigInt> div_rem_nonneg(const BigInt& i, const BigInt& j) {
    if (j == 0) throw std::domain_error("div_rem_nonneg: divisor must be nonzero");
    BigInt r = mod_nonneg(i, j);
    BigInt q = exact_quotient(i - r, j);
    return {q, r};
}

bool is_irreducible_integer(const BigInt& n) {
    BigInt m = abs_value(n);
    if (m < 2) return false;
    return smallest_prime_factor(m) == m;
}

BigInt IntegerRing::norm(const element& a) const {
    if (a == 0) throw std::domain_error("norm: zero has no norm");
    return abs_value(a);
}

std::optional<BigInt> IntegerRing::exact_divide(const element& a, const element& b) const {
    if (a == 0) throw std::domain_error("exact_divide: divisor must be nonzero");
    if (!divides_exactly(a, b)) return std::nullopt;
    return exact_quotient(b, a);
}

bool IntegerRing::is_prime_element(const element& a) const {
    return is_irreducible_integer(a);
}

BigInt IntegerRing::canonical_associate(const element& a) const {
    if (a == 0) throw std::domain_error("canonical_associate: zero has no associates");
    return abs_value(a);
}

std::vector<BigInt> IntegerRing::divisor_candidates(const element& x) const {
    if (x == 0)
        throw std::domain_error("divisor_candidates: divisors of zero are unbounded in Z");
    BigInt m = abs_value(x);
    std::vector<BigInt> small, large;
    for (BigInt d = 1; d * d <= m; ++d) {
        if (!divides_exactly(d, m)) continue;
        small.push_back(d);
        BigInt cofactor = exact_quotient(m, d);
        if (cofactor != d) large.push_back(cofactor);
    }
    std::vector<BigInt> out;
    out.reserve(2 * (small.size() + large.size()));
    for (const BigInt& d : small) {
        out.push_back(d);
        out.push_back(-d);
    }
    for (auto it = large.rbegin(); it != large.rend(); ++it) {
        out.push_back(*it);
        out.push_back(-*it);
    }
    return out;
}

Factorization<BigInt> IntegerRing::factor(const element& n) const {
    BigInt m = abs_value(n);
    if (m < 2) throw std::domain_error("factor: |n| must be at least 2");
    Factorization<BigInt> f;
    f.unit = n < 0 ? -1 : 1;
    while (m > 1) {
        BigInt p = smallest_prime_factor(m);
        f.factors.push_back(p);
        m = exact_quotient(m, p);
    }
    return f;
}

}  // namespace edom
