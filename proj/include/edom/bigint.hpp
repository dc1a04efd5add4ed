#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace edom {

// Arbitrary-precision signed integer. All element arithmetic in the concrete
// domains is exact; Euclidean norms are nonnegative BigInts.
using BigInt = mpz_class;

// Raised when a literal does not match the expected grammar.
struct parse_error : std::runtime_error {
    explicit parse_error(const std::string& what) : std::runtime_error(what) {}
};

inline int sign_of(const BigInt& x) { return sgn(x); }

inline BigInt abs_value(const BigInt& x) { return abs(x); }

// Remainder of i modulo |j|, always in [0, |j|). j must be nonzero.
inline BigInt mod_nonneg(const BigInt& i, const BigInt& j) {
    BigInt r;
    mpz_mod(r.get_mpz_t(), i.get_mpz_t(), j.get_mpz_t());
    return r;
}

inline bool divides_exactly(const BigInt& d, const BigInt& n) {
    return mpz_divisible_p(n.get_mpz_t(), d.get_mpz_t()) != 0;
}

// Quotient n/d when d divides n exactly; unspecified otherwise.
inline BigInt exact_quotient(const BigInt& n, const BigInt& d) {
    BigInt q;
    mpz_divexact(q.get_mpz_t(), n.get_mpz_t(), d.get_mpz_t());
    return q;
}

inline BigInt isqrt(const BigInt& x) {
    BigInt r;
    mpz_sqrt(r.get_mpz_t(), x.get_mpz_t());
    return r;
}

inline bool is_perfect_square(const BigInt& x) {
    return sgn(x) >= 0 && mpz_perfect_square_p(x.get_mpz_t()) != 0;
}

inline bool fits_u64(const BigInt& x) {
    return sgn(x) >= 0 && mpz_fits_ulong_p(x.get_mpz_t()) != 0;
}

inline std::uint64_t to_u64(const BigInt& x) {
    if (!fits_u64(x)) throw std::overflow_error("BigInt does not fit in uint64");
    return static_cast<std::uint64_t>(mpz_get_ui(x.get_mpz_t()));
}

// Strict decimal integer literal: optional '+'/'-' followed by one or more
// digits. No whitespace, no base prefixes.
BigInt parse_decimal(std::string_view text);

std::string format_decimal(const BigInt& x);

}  // namespace edom
