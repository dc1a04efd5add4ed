#include <algorithm>
#include <stdexcept>

#include "edom/harness.hpp"

namespace edom::harness {

BigInt brute_force_gcd(const BigInt& a, const BigInt& b) {
    if (a == 0 && b == 0) throw std::domain_error("brute_force_gcd: (0, 0) has no gcd");
    BigInt ma = abs_value(a), mb = abs_value(b);
    BigInt start = ma == 0 ? mb : (mb == 0 ? ma : std::min(ma, mb));
    for (BigInt d = start; d > 1; --d)
        if (divides_exactly(d, a) && divides_exactly(d, b)) return d;
    return 1;
}

std::vector<GaussianInt> common_divisors_gaussian(const GaussianInt& x, const GaussianInt& y) {
    const GaussianRing ring;
    if (y == ring.zero()) throw std::domain_error("common_divisors_gaussian: y must be nonzero");
    BigInt limit = ring.norm(y);
    if (!(x == ring.zero())) limit = std::min(limit, ring.norm(x));
    std::vector<GaussianInt> out;
    for (BigInt k = 1; k <= limit; ++k) {
        for (const GaussianInt& d : gaussian_elements_with_norm(k)) {
            if (ring.exact_divide(d, x).has_value() && ring.exact_divide(d, y).has_value())
                out.push_back(d);
        }
    }
    return out;
}

std::vector<BigInt> integers_by_magnitude(std::uint64_t bound, bool include_zero) {
    std::vector<BigInt> out;
    out.reserve(2 * bound + 1);
    if (include_zero) out.push_back(0);
    for (std::uint64_t m = 1; m <= bound; ++m) {
        out.push_back(BigInt(static_cast<unsigned long>(m)));
        out.push_back(-BigInt(static_cast<unsigned long>(m)));
    }
    return out;
}

std::vector<GaussianInt> gaussians_by_norm(std::uint64_t norm_bound, bool include_zero) {
    std::vector<GaussianInt> out;
    if (include_zero) out.push_back({0, 0});
    for (std::uint64_t k = 1; k <= norm_bound; ++k) {
        for (const GaussianInt& g : gaussian_elements_with_norm(BigInt(static_cast<unsigned long>(k))))
            out.push_back(g);
    }
    return out;
}

std::pair<BigInt, BigInt> div_rem_nearest_drop_shift(const BigInt& a, const BigInt& b) {
    if (b == 0) throw std::domain_error("div_rem_nearest: divisor must be nonzero");
    BigInt r = mod_nonneg(a, b);
    BigInt q = exact_quotient(a - r, b);
    return {q, r};
}

}  // namespace edom::harness
