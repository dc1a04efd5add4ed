#include "edom/gaussian.hpp"

#include <cctype>
#include <stdexcept>

namespace edom {
namespace {

// Divisors of m >= 1 in ascending order.
std::vector<BigInt> divisors_ascending(const BigInt& m) {
    std::vector<BigInt> small, large;
    for (BigInt d = 1; d * d <= m; ++d) {
        if (!divides_exactly(d, m)) continue;
        small.push_back(d);
        BigInt cofactor = exact_quotient(m, d);
        if (cofactor != d) large.push_back(cofactor);
    }
    for (auto it = large.rbegin(); it != large.rend(); ++it) small.push_back(*it);
    return small;
}

BigInt norm_raw(const GaussianInt& a) { return a.re * a.re + a.im * a.im; }

struct ParseCursor {
    std::string_view text;
    std::size_t pos = 0;

    bool done() const { return pos == text.size(); }
    char peek() const { return text[pos]; }

    [[noreturn]] void fail() const {
        throw parse_error("malformed Gaussian literal: '" + std::string(text) + "'");
    }

    // sign? nat, e.g. "-12"; the sign is optional only when `sign_required`
    // is false.
    BigInt take_signed_nat(bool sign_required) {
        bool negative = false;
        if (!done() && (peek() == '+' || peek() == '-')) {
            negative = peek() == '-';
            ++pos;
        } else if (sign_required) {
            fail();
        }
        if (done() || !std::isdigit(static_cast<unsigned char>(peek()))) fail();
        BigInt value = 0;
        while (!done() && std::isdigit(static_cast<unsigned char>(peek()))) {
            value = value * 10 + (peek() - '0');
            ++pos;
        }
        return negative ? BigInt(-value) : value;
    }
};

}  // namespace

std::pair<BigInt, BigInt> div_rem_nearest(const BigInt& a, const BigInt& b) {
    if (b == 0) throw std::domain_error("div_rem_nearest: divisor must be nonzero");
    BigInt mag = abs_value(b);
    BigInt r = mod_nonneg(a, b);
    BigInt q = exact_quotient(a - r, b);
    if (2 * r <= mag) return {q, r};
    if (b > 0) return {q + 1, r - mag};
    return {q - 1, r - mag};
}

GaussianInt parse_gaussian(std::string_view text) {
    ParseCursor cur{text};
    BigInt first = cur.take_signed_nat(false);
    if (cur.done()) return {first, 0};
    if (cur.peek() == 'i') {
        ++cur.pos;
        if (!cur.done()) cur.fail();
        return {0, first};
    }
    BigInt second = cur.take_signed_nat(true);
    if (cur.done() || cur.peek() != 'i') cur.fail();
    ++cur.pos;
    if (!cur.done()) cur.fail();
    return {first, second};
}

std::string format_gaussian(const GaussianInt& x) {
    if (x.im == 0) return format_decimal(x.re);
    if (x.re == 0) return format_decimal(x.im) + "i";
    std::string out = format_decimal(x.re);
    out += x.im > 0 ? '+' : '-';
    out += format_decimal(abs_value(x.im));
    out += 'i';
    return out;
}

std::vector<GaussianInt> gaussian_elements_with_norm(const BigInt& k) {
    std::vector<GaussianInt> out;
    if (k == 0) {
        out.push_back({0, 0});
        return out;
    }
    BigInt limit = isqrt(k);
    for (BigInt re = -limit; re <= limit; ++re) {
        BigInt rest = k - re * re;
        if (!is_perfect_square(rest)) continue;
        BigInt im = isqrt(rest);
        if (im == 0) {
            out.push_back({re, 0});
        } else {
            out.push_back({re, -im});
            out.push_back({re, im});
        }
    }
    return out;
}

bool GaussianRing::less(const element& a, const element& b) const {
    BigInt na = norm_raw(a), nb = norm_raw(b);
    if (na != nb) return na < nb;
    if (a.re != b.re) return a.re < b.re;
    return a.im < b.im;
}

BigInt GaussianRing::norm(const element& a) const {
    if (a == zero()) throw std::domain_error("norm: zero has no norm");
    return norm_raw(a);
}

std::pair<GaussianInt, GaussianInt> GaussianRing::div_rem(const element& y, const element& x) const {
    if (x == zero()) throw std::domain_error("div_rem: divisor must be nonzero");
    GaussianInt num = mul(y, conjugate(x));
    BigInt n = norm_raw(x);
    GaussianInt q{div_rem_nearest(num.re, n).first, div_rem_nearest(num.im, n).first};
    GaussianInt r = add(y, neg(mul(q, x)));
    return {q, r};
}

std::optional<GaussianInt> GaussianRing::exact_divide(const element& a, const element& b) const {
    if (a == zero()) throw std::domain_error("exact_divide: divisor must be nonzero");
    GaussianInt num = mul(b, conjugate(a));
    BigInt n = norm_raw(a);
    if (!divides_exactly(n, num.re) || !divides_exactly(n, num.im)) return std::nullopt;
    return GaussianInt{exact_quotient(num.re, n), exact_quotient(num.im, n)};
}

bool GaussianRing::is_irreducible(const element& a) const {
    if (a == zero()) return false;
    BigInt n = norm_raw(a);
    if (n == 1) return false;
    for (const BigInt& k : divisors_ascending(n)) {
        if (k == 1 || k == n) continue;
        for (const GaussianInt& d : gaussian_elements_with_norm(k))
            if (exact_divide(d, a).has_value()) return false;
    }
    return true;
}

GaussianInt GaussianRing::canonical_associate(const element& a) const {
    if (a == zero()) throw std::domain_error("canonical_associate: zero has no associates");
    GaussianInt c = a;
    for (int i = 0; i < 3 && !(c.re > 0 && c.im >= 0); ++i) c = {-c.im, c.re};
    return c;
}

std::vector<GaussianInt> GaussianRing::divisor_candidates(const element& x) const {
    if (x == zero())
        throw std::domain_error("divisor_candidates: divisors of zero are unbounded in Z[i]");
    BigInt n = norm_raw(x);
    std::vector<GaussianInt> out;
    for (const BigInt& k : divisors_ascending(n))
        for (const GaussianInt& d : gaussian_elements_with_norm(k))
            if (exact_divide(d, x).has_value()) out.push_back(d);
    return out;
}

Factorization<GaussianInt> GaussianRing::factor(const element& x) const {
    if (x == zero() || norm_raw(x) == 1)
        throw std::domain_error("factor: x must be a nonzero non-unit");
    Factorization<GaussianInt> f;
    GaussianInt cur = x;
    while (norm_raw(cur) > 1) {
        // The smallest-norm nontrivial divisor is necessarily irreducible.
        GaussianInt found = zero();
        BigInt n = norm_raw(cur);
        for (const BigInt& k : divisors_ascending(n)) {
            if (k == 1) continue;
            for (const GaussianInt& d : gaussian_elements_with_norm(k)) {
                if (exact_divide(d, cur).has_value()) {
                    found = canonical_associate(d);
                    break;
                }
            }
            if (!(found == zero())) break;
        }
        f.factors.push_back(found);
        auto [q, r] = div_rem(cur, found);
        if (!(r == zero())) throw std::logic_error("factor: removing a known divisor left a remainder");
        cur = q;
    }
    f.unit = cur;
    std::sort(f.factors.begin(), f.factors.end(),
              [this](const GaussianInt& a, const GaussianInt& b) { return less(a, b); });
    return f;
}

}  // namespace edom
