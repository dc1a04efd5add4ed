#include <array>
#include <memory>
#include <random>
#include <stdexcept>

#include "edom/modular.hpp"
#include "suite_internal.hpp"

namespace edom::harness {
namespace {

using Inputs = std::vector<std::pair<std::string, std::string>>;

std::uint64_t fnv1a(std::string_view s) {
    std::uint64_t h = 1469598103934665603ull;
    for (char c : s) {
        h ^= static_cast<unsigned char>(c);
        h *= 1099511628211ull;
    }
    return h;
}

// Deterministic sampler. mt19937_64 plus modulo reduction gives identical
// streams on every platform, which the byte-identical-report guarantee needs;
// std::uniform_int_distribution does not.
struct SampleRng {
    std::mt19937_64 eng;

    explicit SampleRng(std::uint64_t seed) : eng(seed) {}

    std::uint64_t below(std::uint64_t n) { return eng() % n; }

    std::uint64_t in_range(std::uint64_t lo, std::uint64_t hi) {
        return lo + below(hi - lo + 1);
    }

    BigInt signed_in_range(std::uint64_t lo, std::uint64_t hi) {
        BigInt m(static_cast<unsigned long>(in_range(lo, hi)));
        return below(2) == 0 ? m : BigInt(-m);
    }

    GaussianInt gaussian_norm_in_range(std::uint64_t lo, std::uint64_t hi) {
        std::uint64_t lim = 1;
        while ((lim + 1) * (lim + 1) <= hi) ++lim;
        BigInt lo_b(static_cast<unsigned long>(lo)), hi_b(static_cast<unsigned long>(hi));
        for (;;) {
            BigInt re(static_cast<long>(in_range(0, 2 * lim)) - static_cast<long>(lim));
            BigInt im(static_cast<long>(in_range(0, 2 * lim)) - static_cast<long>(lim));
            BigInt n = re * re + im * im;
            if (n > lo_b && n <= hi_b) return {re, im};
        }
    }
};

std::vector<std::uint64_t> primes_up_to(std::uint64_t n) {
    std::vector<std::uint64_t> out;
    for (std::uint64_t p = 2; p <= n; ++p)
        if (is_irreducible_integer(BigInt(static_cast<unsigned long>(p)))) out.push_back(p);
    return out;
}

// ---- ring axiom checks, generic over the domain ----

template <typename D>
std::uint64_t axioms_single(const D& d, const std::string& label, const element_t<D>& a,
                            std::vector<Counterexample>& out) {
    Inputs in{{"domain", label}, {"a", d.format(a)}};
    if (!d.eq(d.add(a, d.zero()), a)) out.push_back({"ring.add_identity", in});
    if (!d.eq(d.mul(a, d.one()), a)) out.push_back({"ring.mul_identity", in});
    if (!d.eq(d.add(a, d.neg(a)), d.zero())) out.push_back({"ring.add_inverse", in});
    return 1;
}

template <typename D>
std::uint64_t axioms_pair(const D& d, const std::string& label, const element_t<D>& a,
                          const element_t<D>& b, std::vector<Counterexample>& out) {
    Inputs in{{"domain", label}, {"a", d.format(a)}, {"b", d.format(b)}};
    if (!d.eq(d.add(a, b), d.add(b, a))) out.push_back({"ring.add_commutes", in});
    if (!d.eq(d.mul(a, b), d.mul(b, a))) out.push_back({"ring.mul_commutes", in});
    return 1;
}

template <typename D>
std::uint64_t axioms_triple(const D& d, const std::string& label, const element_t<D>& a,
                            const element_t<D>& b, const element_t<D>& c,
                            std::vector<Counterexample>& out) {
    Inputs in{{"domain", label}, {"a", d.format(a)}, {"b", d.format(b)}, {"c", d.format(c)}};
    if (!d.eq(d.add(d.add(a, b), c), d.add(a, d.add(b, c)))) out.push_back({"ring.add_associates", in});
    if (!d.eq(d.mul(d.mul(a, b), c), d.mul(a, d.mul(b, c)))) out.push_back({"ring.mul_associates", in});
    if (!d.eq(d.mul(a, d.add(b, c)), d.add(d.mul(a, b), d.mul(a, c))))
        out.push_back({"ring.left_distributes", in});
    if (!d.eq(d.mul(d.add(a, b), c), d.add(d.mul(a, c), d.mul(b, c))))
        out.push_back({"ring.right_distributes", in});
    return 1;
}

template <typename D>
std::uint64_t axioms_all_for_ring(const D& d, const std::string& label,
                                  const std::vector<element_t<D>>& elems,
                                  std::vector<Counterexample>& out) {
    std::uint64_t w = 0;
    for (const auto& a : elems) w += axioms_single(d, label, a, out);
    for (const auto& a : elems)
        for (const auto& b : elems) w += axioms_pair(d, label, a, b, out);
    for (const auto& a : elems)
        for (const auto& b : elems)
            for (const auto& c : elems) w += axioms_triple(d, label, a, b, c, out);
    return w;
}

SuiteDef build_ring_axioms(const Bound& bound) {
    SuiteDef def;
    def.domain = "z,zi,zmod,fp";
    const IntegerRing zr;
    const GaussianRing gr;

    auto zs = std::make_shared<std::vector<BigInt>>(
        integers_by_magnitude(bound.integer_abs_bound, true));
    const std::uint64_t zn = zs->size();
    def.blocks.push_back({zn, false, [zr, zs](std::uint64_t i, std::vector<Counterexample>& out) {
                              return axioms_single(zr, "z", (*zs)[i], out);
                          }});
    def.blocks.push_back({zn * zn, false, [zr, zs, zn](std::uint64_t i, std::vector<Counterexample>& out) {
                              return axioms_pair(zr, "z", (*zs)[i / zn], (*zs)[i % zn], out);
                          }});
    def.blocks.push_back(
        {zn * zn * zn, false, [zr, zs, zn](std::uint64_t i, std::vector<Counterexample>& out) {
             return axioms_triple(zr, "z", (*zs)[i / (zn * zn)], (*zs)[(i / zn) % zn], (*zs)[i % zn],
                                  out);
         }});

    auto gs = std::make_shared<std::vector<GaussianInt>>(
        gaussians_by_norm(bound.gaussian_norm_bound, true));
    const std::uint64_t gn = gs->size();
    def.blocks.push_back({gn, false, [gr, gs](std::uint64_t i, std::vector<Counterexample>& out) {
                              return axioms_single(gr, "zi", (*gs)[i], out);
                          }});
    def.blocks.push_back({gn * gn, false, [gr, gs, gn](std::uint64_t i, std::vector<Counterexample>& out) {
                              return axioms_pair(gr, "zi", (*gs)[i / gn], (*gs)[i % gn], out);
                          }});
    def.blocks.push_back(
        {gn * gn * gn, false, [gr, gs, gn](std::uint64_t i, std::vector<Counterexample>& out) {
             return axioms_triple(gr, "zi", (*gs)[i / (gn * gn)], (*gs)[(i / gn) % gn],
                                  (*gs)[i % gn], out);
         }});

    const std::uint64_t nmods = bound.modulus_bound >= 2 ? bound.modulus_bound - 1 : 0;
    if (nmods > 0)
        def.blocks.push_back({nmods, false, [](std::uint64_t i, std::vector<Counterexample>& out) {
                                  ModularRing ring(i + 2);
                                  return axioms_all_for_ring(ring, ring.name(), ring.all_elements(),
                                                             out);
                              }});

    auto ps = std::make_shared<std::vector<std::uint64_t>>(primes_up_to(bound.modulus_bound));
    if (!ps->empty())
        def.blocks.push_back(
            {ps->size(), false, [ps](std::uint64_t i, std::vector<Counterexample>& out) {
                 PrimeField field((*ps)[i]);
                 return axioms_all_for_ring(field, field.name(), field.all_elements(), out);
             }});

    if (bound.random_sample_count > 0) {
        const std::uint64_t zb = bound.integer_abs_bound;
        SampleRng zrng(bound.random_seed ^ fnv1a("ring_axioms.z"));
        auto ztrip = std::make_shared<std::vector<std::array<BigInt, 3>>>();
        for (std::uint64_t i = 0; i < bound.random_sample_count; ++i)
            ztrip->push_back({zrng.signed_in_range(zb + 1, 4 * zb),
                              zrng.signed_in_range(zb + 1, 4 * zb),
                              zrng.signed_in_range(zb + 1, 4 * zb)});
        def.blocks.push_back(
            {ztrip->size(), true, [zr, ztrip](std::uint64_t i, std::vector<Counterexample>& out) {
                 const auto& t = (*ztrip)[i];
                 return axioms_triple(zr, "z", t[0], t[1], t[2], out);
             }});

        const std::uint64_t gb = bound.gaussian_norm_bound;
        SampleRng grng(bound.random_seed ^ fnv1a("ring_axioms.zi"));
        auto gtrip = std::make_shared<std::vector<std::array<GaussianInt, 3>>>();
        for (std::uint64_t i = 0; i < bound.random_sample_count; ++i)
            gtrip->push_back({grng.gaussian_norm_in_range(gb, 4 * gb),
                              grng.gaussian_norm_in_range(gb, 4 * gb),
                              grng.gaussian_norm_in_range(gb, 4 * gb)});
        def.blocks.push_back(
            {gtrip->size(), true, [gr, gtrip](std::uint64_t i, std::vector<Counterexample>& out) {
                 const auto& t = (*gtrip)[i];
                 return axioms_triple(gr, "zi", t[0], t[1], t[2], out);
             }});
    }
    return def;
}

// ---- Euclidean contract checks ----

std::uint64_t check_z_div_case(const IntegerRing& zr, const BigInt& a, const BigInt& b,
                               std::vector<Counterexample>& out) {
    Inputs in{{"i", zr.format(a)}, {"j", zr.format(b)}};
    auto [q, r] = zr.div_rem(a, b);
    if (!zr.eq(zr.add(zr.mul(q, b), r), a)) out.push_back({"div_rem_z.equation", in});
    if (!(r >= 0 && r < abs_value(b))) out.push_back({"div_rem_z.remainder_range", in});
    if (a == 0 && !(q == 0 && r == 0)) out.push_back({"div_rem_z.zero_case", in});
    if (a != 0 && !(zr.norm(a) <= zr.norm(zr.mul(a, b)))) out.push_back({"norm_monotonic_z", in});
    return 1;
}

using NearestDiv = std::function<std::pair<BigInt, BigInt>(const BigInt&, const BigInt&)>;

std::uint64_t check_nearest_div_case(const NearestDiv& drn, const BigInt& a, const BigInt& b,
                                     std::vector<Counterexample>& out) {
    Inputs in{{"a", format_decimal(a)}, {"b", format_decimal(b)}};
    auto [q, r] = drn(a, b);
    if (a != q * b + r) out.push_back({"div_rem_nearest.equation", in});
    if (!(2 * abs_value(r) <= abs_value(b))) out.push_back({"div_rem_nearest.half_bound", in});
    return 1;
}

std::uint64_t check_gauss_div_case(const GaussianRing& gr, const GaussianInt& y,
                                   const GaussianInt& x, std::vector<Counterexample>& out) {
    Inputs in{{"y", gr.format(y)}, {"x", gr.format(x)}};
    auto [q, r] = gr.div_rem(y, x);
    if (!gr.eq(gr.add(gr.mul(q, x), r), y)) out.push_back({"div_rem_zi.equation", in});
    if (!(gr.eq(r, gr.zero()) || gr.norm(r) < gr.norm(x)))
        out.push_back({"div_rem_zi.remainder_norm", in});
    if (gr.eq(y, gr.zero()) && !(gr.eq(q, gr.zero()) && gr.eq(r, gr.zero())))
        out.push_back({"div_rem_zi.zero_case", in});
    if (!gr.eq(y, gr.zero())) {
        GaussianInt prod = gr.mul(y, x);
        if (gr.norm(prod) != gr.norm(y) * gr.norm(x)) out.push_back({"norm_multiplicative_zi", in});
        if (!(gr.norm(y) <= gr.norm(prod))) out.push_back({"norm_monotonic_zi", in});
    }
    return 1;
}

SuiteDef build_euclid_contract(const Bound& bound, const Mutations* mutations) {
    SuiteDef def;
    def.domain = "z,zi,fp";
    const IntegerRing zr;
    const GaussianRing gr;
    NearestDiv drn = (mutations && mutations->div_rem_nearest_override)
                         ? mutations->div_rem_nearest_override
                         : NearestDiv(
                               [](const BigInt& a, const BigInt& b) { return div_rem_nearest(a, b); });

    const std::uint64_t zb = bound.integer_abs_bound;
    auto any_z = std::make_shared<std::vector<BigInt>>(integers_by_magnitude(zb, true));
    auto nonzero_z = std::make_shared<std::vector<BigInt>>(integers_by_magnitude(zb, false));
    const std::uint64_t an = any_z->size(), nn = nonzero_z->size();

    def.blocks.push_back(
        {an * nn, false, [zr, any_z, nonzero_z, nn](std::uint64_t i, std::vector<Counterexample>& out) {
             return check_z_div_case(zr, (*any_z)[i / nn], (*nonzero_z)[i % nn], out);
         }});
    def.blocks.push_back(
        {an * nn, false, [drn, any_z, nonzero_z, nn](std::uint64_t i, std::vector<Counterexample>& out) {
             return check_nearest_div_case(drn, (*any_z)[i / nn], (*nonzero_z)[i % nn], out);
         }});

    auto any_g = std::make_shared<std::vector<GaussianInt>>(
        gaussians_by_norm(bound.gaussian_norm_bound, true));
    auto nonzero_g = std::make_shared<std::vector<GaussianInt>>(
        gaussians_by_norm(bound.gaussian_norm_bound, false));
    const std::uint64_t gn = nonzero_g->size();
    def.blocks.push_back(
        {any_g->size() * gn, false,
         [gr, any_g, nonzero_g, gn](std::uint64_t i, std::vector<Counterexample>& out) {
             return check_gauss_div_case(gr, (*any_g)[i / gn], (*nonzero_g)[i % gn], out);
         }});

    auto ps = std::make_shared<std::vector<std::uint64_t>>(primes_up_to(bound.modulus_bound));
    if (!ps->empty())
        def.blocks.push_back(
            {ps->size(), false, [ps](std::uint64_t i, std::vector<Counterexample>& out) {
                 PrimeField field((*ps)[i]);
                 const std::string p = std::to_string(field.modulus());
                 std::uint64_t w = 0;
                 for (const ModElement& a : field.all_elements()) {
                     for (const ModElement& b : field.all_elements()) {
                         if (field.eq(b, field.zero())) continue;
                         ++w;
                         Inputs in{{"p", p}, {"a", field.format(a)}, {"b", field.format(b)}};
                         auto [q, r] = field.div_rem(a, b);
                         if (!field.eq(field.add(field.mul(q, b), r), a))
                             out.push_back({"div_rem_fp.equation", in});
                         if (!field.eq(r, field.zero()))
                             out.push_back({"div_rem_fp.zero_remainder", in});
                         if (field.norm(b) != 1) out.push_back({"norm_fp_constant", in});
                     }
                 }
                 return w;
             }});

    if (bound.random_sample_count > 0) {
        SampleRng zrng(bound.random_seed ^ fnv1a("euclid_contract.z"));
        auto zsamp = std::make_shared<std::vector<std::array<BigInt, 2>>>();
        for (std::uint64_t i = 0; i < bound.random_sample_count; ++i)
            zsamp->push_back(
                {zrng.signed_in_range(zb + 1, 4 * zb), zrng.signed_in_range(zb + 1, 4 * zb)});
        def.blocks.push_back(
            {zsamp->size(), true, [zr, drn, zsamp](std::uint64_t i, std::vector<Counterexample>& out) {
                 const auto& s = (*zsamp)[i];
                 check_z_div_case(zr, s[0], s[1], out);
                 check_nearest_div_case(drn, s[0], s[1], out);
                 return 1;
             }});

        const std::uint64_t gb = bound.gaussian_norm_bound;
        SampleRng grng(bound.random_seed ^ fnv1a("euclid_contract.zi"));
        auto gsamp = std::make_shared<std::vector<std::array<GaussianInt, 2>>>();
        for (std::uint64_t i = 0; i < bound.random_sample_count; ++i)
            gsamp->push_back(
                {grng.gaussian_norm_in_range(gb, 4 * gb), grng.gaussian_norm_in_range(gb, 4 * gb)});
        def.blocks.push_back(
            {gsamp->size(), true, [gr, gsamp](std::uint64_t i, std::vector<Counterexample>& out) {
                 const auto& s = (*gsamp)[i];
                 return check_gauss_div_case(gr, s[0], s[1], out);
             }});
    }
    return def;
}

// ---- gcd vs oracle ----

std::uint64_t check_gcd_z_case(const IntegerRing& zr, const BigInt& a, const BigInt& b,
                               std::vector<Counterexample>& out) {
    Inputs in{{"a", zr.format(a)}, {"b", zr.format(b)}};
    BigInt g = euclidean_gcd(zr, a, b);
    if (abs_value(g) != brute_force_gcd(a, b)) out.push_back({"gcd_matches_brute_force", in});
    std::array<BigInt, 2> xs{a, b};
    if (!is_gcd(zr, std::span<const BigInt>(xs), g)) out.push_back({"gcd_satisfies_definition", in});
    return 1;
}

SuiteDef build_gcd_oracle_z(const Bound& bound) {
    SuiteDef def;
    def.domain = "z";
    const IntegerRing zr;
    const std::uint64_t zb = bound.integer_abs_bound;
    auto any_z = std::make_shared<std::vector<BigInt>>(integers_by_magnitude(zb, true));
    auto nonzero_z = std::make_shared<std::vector<BigInt>>(integers_by_magnitude(zb, false));
    const std::uint64_t nn = nonzero_z->size();
    def.blocks.push_back(
        {any_z->size() * nn, false,
         [zr, any_z, nonzero_z, nn](std::uint64_t i, std::vector<Counterexample>& out) {
             return check_gcd_z_case(zr, (*any_z)[i / nn], (*nonzero_z)[i % nn], out);
         }});
    if (bound.random_sample_count > 0) {
        SampleRng rng(bound.random_seed ^ fnv1a("gcd_oracle_z"));
        auto samp = std::make_shared<std::vector<std::array<BigInt, 2>>>();
        for (std::uint64_t i = 0; i < bound.random_sample_count; ++i)
            samp->push_back(
                {rng.signed_in_range(zb + 1, 4 * zb), rng.signed_in_range(zb + 1, 4 * zb)});
        def.blocks.push_back(
            {samp->size(), true, [zr, samp](std::uint64_t i, std::vector<Counterexample>& out) {
                 return check_gcd_z_case(zr, (*samp)[i][0], (*samp)[i][1], out);
             }});
    }
    return def;
}

std::uint64_t check_gcd_zi_case(const GaussianRing& gr, const GaussianInt& x, const GaussianInt& y,
                                std::vector<Counterexample>& out) {
    Inputs in{{"x", gr.format(x)}, {"y", gr.format(y)}};
    GaussianInt g = euclidean_gcd(gr, x, y);
    if (!gr.exact_divide(g, x).has_value() || !gr.exact_divide(g, y).has_value())
        out.push_back({"gcd_divides_members", in});
    for (const GaussianInt& d : common_divisors_gaussian(x, y)) {
        if (!gr.exact_divide(d, g).has_value()) {
            Inputs in_d = in;
            in_d.emplace_back("d", gr.format(d));
            out.push_back({"common_divisors_divide_gcd", in_d});
            break;
        }
    }
    std::array<GaussianInt, 2> xs{x, y};
    if (!is_gcd(gr, std::span<const GaussianInt>(xs), g))
        out.push_back({"gcd_satisfies_definition", in});
    return 1;
}

SuiteDef build_gcd_oracle_zi(const Bound& bound) {
    SuiteDef def;
    def.domain = "zi";
    const GaussianRing gr;
    const std::uint64_t gb = bound.gaussian_norm_bound;
    auto any_g = std::make_shared<std::vector<GaussianInt>>(gaussians_by_norm(gb, true));
    auto nonzero_g = std::make_shared<std::vector<GaussianInt>>(gaussians_by_norm(gb, false));
    const std::uint64_t gn = nonzero_g->size();
    def.blocks.push_back(
        {any_g->size() * gn, false,
         [gr, any_g, nonzero_g, gn](std::uint64_t i, std::vector<Counterexample>& out) {
             return check_gcd_zi_case(gr, (*any_g)[i / gn], (*nonzero_g)[i % gn], out);
         }});
    if (bound.random_sample_count > 0) {
        SampleRng rng(bound.random_seed ^ fnv1a("gcd_oracle_zi"));
        auto samp = std::make_shared<std::vector<std::array<GaussianInt, 2>>>();
        for (std::uint64_t i = 0; i < bound.random_sample_count; ++i)
            samp->push_back(
                {rng.gaussian_norm_in_range(gb, 4 * gb), rng.gaussian_norm_in_range(gb, 4 * gb)});
        def.blocks.push_back(
            {samp->size(), true, [gr, samp](std::uint64_t i, std::vector<Counterexample>& out) {
                 return check_gcd_zi_case(gr, (*samp)[i][0], (*samp)[i][1], out);
             }});
    }
    return def;
}

// ---- one Euclid step preserves the gcd relation ----

std::uint64_t check_euclid_step_case(const IntegerRing& zr, const BigInt& a, const BigInt& b,
                                     const BigInt& g, std::vector<Counterexample>& out) {
    auto [q, r] = zr.div_rem(a, b);
    std::array<BigInt, 2> before{a, b}, after{b, r};
    bool lhs = is_gcd(zr, std::span<const BigInt>(before), g);
    bool rhs = is_gcd(zr, std::span<const BigInt>(after), g);
    if (lhs != rhs)
        out.push_back({"euclid_step_preserves_gcd",
                       {{"a", zr.format(a)}, {"b", zr.format(b)}, {"g", zr.format(g)}}});
    return 1;
}

SuiteDef build_euclid_step(const Bound& bound) {
    SuiteDef def;
    def.domain = "z";
    const IntegerRing zr;
    const std::uint64_t zb = bound.integer_abs_bound;
    auto any_z = std::make_shared<std::vector<BigInt>>(integers_by_magnitude(zb, true));
    auto nonzero_z = std::make_shared<std::vector<BigInt>>(integers_by_magnitude(zb, false));
    const std::uint64_t nn = nonzero_z->size();
    def.blocks.push_back(
        {any_z->size() * nn * nn, false,
         [zr, any_z, nonzero_z, nn](std::uint64_t i, std::vector<Counterexample>& out) {
             return check_euclid_step_case(zr, (*any_z)[i / (nn * nn)], (*nonzero_z)[(i / nn) % nn],
                                           (*nonzero_z)[i % nn], out);
         }});
    if (bound.random_sample_count > 0) {
        SampleRng rng(bound.random_seed ^ fnv1a("euclid_step"));
        auto samp = std::make_shared<std::vector<std::array<BigInt, 3>>>();
        for (std::uint64_t i = 0; i < bound.random_sample_count; ++i)
            samp->push_back({rng.signed_in_range(zb + 1, 4 * zb),
                             rng.signed_in_range(zb + 1, 4 * zb),
                             rng.signed_in_range(zb + 1, 4 * zb)});
        def.blocks.push_back(
            {samp->size(), true, [zr, samp](std::uint64_t i, std::vector<Counterexample>& out) {
                 const auto& s = (*samp)[i];
                 return check_euclid_step_case(zr, s[0], s[1], s[2], out);
             }});
    }
    return def;
}

// ---- exhaustive theorem clauses over residue rings ----

template <typename SuiteFn>
SuiteDef build_theorem_suite(const Bound& bound, SuiteFn&& suite_fn) {
    SuiteDef def;
    def.domain = "zmod";
    const std::uint64_t nmods = bound.modulus_bound >= 2 ? bound.modulus_bound - 1 : 0;
    def.blocks.push_back({nmods, false, [suite_fn](std::uint64_t i, std::vector<Counterexample>& out) {
                              ModularRing ring(i + 2);
                              std::uint64_t w = 0;
                              for (const TheoremReport& rep : suite_fn(ring)) {
                                  w += rep.checked_count;
                                  for (const std::string& s : rep.counterexamples)
                                      out.push_back({rep.clause,
                                                     {{"modulus", std::to_string(rep.modulus)},
                                                      {"inputs", s}}});
                              }
                              return w;
                          }});
    return def;
}

// ---- prime vs irreducible, against the definition-level falsifier ----

SuiteDef build_prime_irreducible(const Bound& bound) {
    SuiteDef def;
    def.domain = "z,zi";
    const IntegerRing zr;
    const GaussianRing gr;

    const std::uint64_t zb = bound.integer_abs_bound;
    auto zcand = std::make_shared<std::vector<BigInt>>(integers_by_magnitude(zb, true));
    auto zxs = std::make_shared<std::vector<BigInt>>();
    for (std::uint64_t m = 2; m <= zb; ++m) {
        zxs->push_back(BigInt(static_cast<unsigned long>(m)));
        zxs->push_back(-BigInt(static_cast<unsigned long>(m)));
    }
    def.blocks.push_back(
        {zxs->size(), false, [zr, zxs, zcand](std::uint64_t i, std::vector<Counterexample>& out) {
             const BigInt& x = (*zxs)[i];
             bool irreducible = zr.is_irreducible(x);
             bool violated =
                 falsify_prime_definition(zr, x, std::span<const BigInt>(*zcand)).has_value();
             if (irreducible == violated)
                 out.push_back({"prime_iff_irreducible_z", {{"x", zr.format(x)}}});
             return 1;
         }});

    const std::uint64_t gb = bound.gaussian_norm_bound;
    auto gcand = std::make_shared<std::vector<GaussianInt>>(gaussians_by_norm(gb, true));
    auto gxs = std::make_shared<std::vector<GaussianInt>>();
    for (const GaussianInt& g : gaussians_by_norm(gb, false))
        if (g.re * g.re + g.im * g.im >= 2) gxs->push_back(g);
    def.blocks.push_back(
        {gxs->size(), false, [gr, gxs, gcand](std::uint64_t i, std::vector<Counterexample>& out) {
             const GaussianInt& x = (*gxs)[i];
             bool irreducible = gr.is_irreducible(x);
             bool violated =
                 falsify_prime_definition(gr, x, std::span<const GaussianInt>(*gcand)).has_value();
             if (irreducible == violated)
                 out.push_back({"prime_iff_irreducible_zi", {{"x", gr.format(x)}}});
             return 1;
         }});
    return def;
}

// ---- termination measure and recursion shape of the gcd loop ----

template <typename D>
std::uint64_t check_measure_case(const D& d, const std::string& label, const element_t<D>& a,
                                 const element_t<D>& b, std::vector<Counterexample>& out) {
    GcdTrace<element_t<D>> tr;
    element_t<D> g = euclidean_gcd(d, a, b, &tr);
    Inputs in{{"domain", label}, {"a", d.format(a)}, {"b", d.format(b)}};
    bool lex_ok = true;
    bool shape_ok = !tr.steps.empty();
    for (std::size_t i = 0; shape_ok && i < tr.steps.size(); ++i) {
        const GcdStep<element_t<D>>& s = tr.steps[i];
        const bool last = i + 1 == tr.steps.size();
        const bool a_zero = is_zero(d, s.a);
        if (s.measure_b != d.norm(s.b) || s.measure_a != (a_zero ? BigInt(0) : d.norm(s.a))) {
            shape_ok = false;
            break;
        }
        if (i > 0) {
            const GcdStep<element_t<D>>& p = tr.steps[i - 1];
            if (!(s.measure_b < p.measure_b ||
                  (s.measure_b == p.measure_b && s.measure_a < p.measure_a)))
                lex_ok = false;
        }
        if (a_zero) {
            shape_ok = last && !s.division.has_value() && d.eq(g, s.b);
        } else if (d.norm(s.a) >= d.norm(s.b)) {
            if (!s.division.has_value()) {
                shape_ok = false;
                break;
            }
            const auto& [q, r] = *s.division;
            if (!d.eq(d.add(d.mul(q, s.b), r), s.a)) {
                shape_ok = false;
                break;
            }
            if (is_zero(d, r)) {
                shape_ok = last && d.eq(g, s.b);
            } else if (last) {
                shape_ok = false;
            } else {
                shape_ok = d.eq(tr.steps[i + 1].a, s.b) && d.eq(tr.steps[i + 1].b, r);
            }
        } else {
            shape_ok = !s.division.has_value() && !last && d.eq(tr.steps[i + 1].a, s.b) &&
                       d.eq(tr.steps[i + 1].b, s.a);
        }
    }
    if (!lex_ok) out.push_back({"measure.lex_decreases", in});
    if (!shape_ok) out.push_back({"measure.recursion_shape", in});
    return 1;
}

SuiteDef build_measure_decrease(const Bound& bound) {
    SuiteDef def;
    def.domain = "z,zi";
    const IntegerRing zr;
    const GaussianRing gr;

    const std::uint64_t zb = bound.integer_abs_bound;
    auto any_z = std::make_shared<std::vector<BigInt>>(integers_by_magnitude(zb, true));
    auto nonzero_z = std::make_shared<std::vector<BigInt>>(integers_by_magnitude(zb, false));
    const std::uint64_t nn = nonzero_z->size();
    def.blocks.push_back(
        {any_z->size() * nn, false,
         [zr, any_z, nonzero_z, nn](std::uint64_t i, std::vector<Counterexample>& out) {
             return check_measure_case(zr, "z", (*any_z)[i / nn], (*nonzero_z)[i % nn], out);
         }});

    auto any_g = std::make_shared<std::vector<GaussianInt>>(
        gaussians_by_norm(bound.gaussian_norm_bound, true));
    auto nonzero_g = std::make_shared<std::vector<GaussianInt>>(
        gaussians_by_norm(bound.gaussian_norm_bound, false));
    const std::uint64_t gn = nonzero_g->size();
    def.blocks.push_back(
        {any_g->size() * gn, false,
         [gr, any_g, nonzero_g, gn](std::uint64_t i, std::vector<Counterexample>& out) {
             return check_measure_case(gr, "zi", (*any_g)[i / gn], (*nonzero_g)[i % gn], out);
         }});

    if (bound.random_sample_count > 0) {
        SampleRng zrng(bound.random_seed ^ fnv1a("measure_decrease.z"));
        auto zsamp = std::make_shared<std::vector<std::array<BigInt, 2>>>();
        for (std::uint64_t i = 0; i < bound.random_sample_count; ++i)
            zsamp->push_back(
                {zrng.signed_in_range(zb + 1, 4 * zb), zrng.signed_in_range(zb + 1, 4 * zb)});
        def.blocks.push_back(
            {zsamp->size(), true, [zr, zsamp](std::uint64_t i, std::vector<Counterexample>& out) {
                 return check_measure_case(zr, "z", (*zsamp)[i][0], (*zsamp)[i][1], out);
             }});

        const std::uint64_t gb = bound.gaussian_norm_bound;
        SampleRng grng(bound.random_seed ^ fnv1a("measure_decrease.zi"));
        auto gsamp = std::make_shared<std::vector<std::array<GaussianInt, 2>>>();
        for (std::uint64_t i = 0; i < bound.random_sample_count; ++i)
            gsamp->push_back(
                {grng.gaussian_norm_in_range(gb, 4 * gb), grng.gaussian_norm_in_range(gb, 4 * gb)});
        def.blocks.push_back(
            {gsamp->size(), true, [gr, gsamp](std::uint64_t i, std::vector<Counterexample>& out) {
                 return check_measure_case(gr, "zi", (*gsamp)[i][0], (*gsamp)[i][1], out);
             }});
    }
    return def;
}

// ---- factor / verify / equivalence round trips ----

template <typename D>
std::uint64_t check_ufd_case(const D& d, const element_t<D>& unit_i, const element_t<D>& x,
                             std::vector<Counterexample>& out) {
    Inputs in{{"x", d.format(x)}};
    Factorization<element_t<D>> f = d.factor(x);
    if (!verify_factorization(d, x, f)) out.push_back({"ufd.round_trip_verifies", in});

    bool canon = true;
    for (std::size_t j = 0; j < f.factors.size(); ++j) {
        if (!d.eq(d.canonical_associate(f.factors[j]), f.factors[j])) canon = false;
        if (j > 0 && d.less(f.factors[j], f.factors[j - 1])) canon = false;
    }
    if (!canon) out.push_back({"ufd.factors_canonical_sorted", in});

    // Unit-perturbed and rotated: still verifies, still equivalent.
    Factorization<element_t<D>> g = f;
    g.unit = d.mul(g.unit, d.exact_divide(unit_i, d.one()).value());  // unit^{-1}
    g.factors[0] = d.mul(unit_i, g.factors[0]);
    std::rotate(g.factors.begin(), g.factors.begin() + 1, g.factors.end());
    if (!verify_factorization(d, x, g) || !factorization_equivalent(d, f, g))
        out.push_back({"ufd.equivalent_accepted", in});

    // Extra multiplicity: no longer equivalent, no longer verifies.
    Factorization<element_t<D>> h = f;
    h.factors.push_back(f.factors.front());
    if (factorization_equivalent(d, f, h)) out.push_back({"ufd.multiplicity_rejected", in});
    if (verify_factorization(d, x, h)) out.push_back({"ufd.altered_product_rejected", in});
    return 1;
}

SuiteDef build_ufd_roundtrip_z(const Bound& bound) {
    SuiteDef def;
    def.domain = "z";
    const IntegerRing zr;
    const std::uint64_t zb = bound.integer_abs_bound;
    auto xs = std::make_shared<std::vector<BigInt>>();
    for (std::uint64_t m = 2; m <= zb; ++m) {
        xs->push_back(BigInt(static_cast<unsigned long>(m)));
        xs->push_back(-BigInt(static_cast<unsigned long>(m)));
    }
    def.blocks.push_back({xs->size(), false, [zr, xs](std::uint64_t i, std::vector<Counterexample>& out) {
                              return check_ufd_case(zr, BigInt(-1), (*xs)[i], out);
                          }});
    if (bound.random_sample_count > 0) {
        SampleRng rng(bound.random_seed ^ fnv1a("ufd_roundtrip_z"));
        auto samp = std::make_shared<std::vector<BigInt>>();
        for (std::uint64_t i = 0; i < bound.random_sample_count; ++i)
            samp->push_back(rng.signed_in_range(zb + 1, 4 * zb));
        def.blocks.push_back(
            {samp->size(), true, [zr, samp](std::uint64_t i, std::vector<Counterexample>& out) {
                 return check_ufd_case(zr, BigInt(-1), (*samp)[i], out);
             }});
    }
    return def;
}

SuiteDef build_ufd_roundtrip_zi(const Bound& bound) {
    SuiteDef def;
    def.domain = "zi";
    const GaussianRing gr;
    const GaussianInt iu{0, 1};
    const std::uint64_t gb = bound.gaussian_norm_bound;
    auto xs = std::make_shared<std::vector<GaussianInt>>();
    for (const GaussianInt& g : gaussians_by_norm(gb, false))
        if (g.re * g.re + g.im * g.im >= 2) xs->push_back(g);
    def.blocks.push_back(
        {xs->size(), false, [gr, iu, xs](std::uint64_t i, std::vector<Counterexample>& out) {
             return check_ufd_case(gr, iu, (*xs)[i], out);
         }});
    if (bound.random_sample_count > 0) {
        SampleRng rng(bound.random_seed ^ fnv1a("ufd_roundtrip_zi"));
        auto samp = std::make_shared<std::vector<GaussianInt>>();
        for (std::uint64_t i = 0; i < bound.random_sample_count; ++i)
            samp->push_back(rng.gaussian_norm_in_range(gb, 4 * gb));
        def.blocks.push_back(
            {samp->size(), true, [gr, iu, samp](std::uint64_t i, std::vector<Counterexample>& out) {
                 return check_ufd_case(gr, iu, (*samp)[i], out);
             }});
    }
    return def;
}

// ---- prime fields: division always exact, gcds always units ----

SuiteDef build_field_instance(const Bound& bound) {
    SuiteDef def;
    def.domain = "fp";
    auto ps = std::make_shared<std::vector<std::uint64_t>>(primes_up_to(bound.modulus_bound));
    def.blocks.push_back({ps->size(), false, [ps](std::uint64_t i, std::vector<Counterexample>& out) {
                              PrimeField field((*ps)[i]);
                              const std::string p = std::to_string(field.modulus());
                              std::uint64_t w = 0;
                              std::vector<ModElement> elems = field.all_elements();
                              for (const ModElement& a : elems) {
                                  for (const ModElement& b : elems) {
                                      if (field.eq(b, field.zero())) continue;
                                      ++w;
                                      Inputs in{{"p", p}, {"a", field.format(a)}, {"b", field.format(b)}};
                                      auto [q, r] = field.div_rem(a, b);
                                      if (!field.eq(r, field.zero()))
                                          out.push_back({"field.zero_remainder", in});
                                      if (!field.eq(field.add(field.mul(q, b), r), a))
                                          out.push_back({"field.division_equation", in});
                                      if (field.eq(a, field.zero())) continue;
                                      ModElement g = euclidean_gcd(field, a, b);
                                      if (!is_unit(field, g)) out.push_back({"field.gcd_is_unit", in});
                                      std::array<ModElement, 2> xs{a, b};
                                      if (!is_gcd(field, std::span<const ModElement>(xs), g))
                                          out.push_back({"field.gcd_satisfies_definition", in});
                                  }
                                  if (!field.eq(a, field.zero())) {
                                      ++w;
                                      if (field.norm(a) != 1)
                                          out.push_back({"field.norm_one", {{"p", p}, {"a", field.format(a)}}});
                                  }
                              }
                              return w;
                          }});
    return def;
}

}  // namespace

SuiteDef build_suite(const std::string& name, const Bound& bound, const Mutations* mutations) {
    if (name == "ring_axioms") return build_ring_axioms(bound);
    if (name == "euclid_contract") return build_euclid_contract(bound, mutations);
    if (name == "gcd_oracle_z") return build_gcd_oracle_z(bound);
    if (name == "gcd_oracle_zi") return build_gcd_oracle_zi(bound);
    if (name == "euclid_step") return build_euclid_step(bound);
    if (name == "thm21")
        return build_theorem_suite(bound, [](const ModularRing& r) { return theorem21_suite(r); });
    if (name == "thm22")
        return build_theorem_suite(bound, [](const ModularRing& r) { return theorem22_suite(r); });
    if (name == "prime_irreducible") return build_prime_irreducible(bound);
    if (name == "measure_decrease") return build_measure_decrease(bound);
    if (name == "ufd_roundtrip_z") return build_ufd_roundtrip_z(bound);
    if (name == "ufd_roundtrip_zi") return build_ufd_roundtrip_zi(bound);
    if (name == "field_instance") return build_field_instance(bound);
    throw std::invalid_argument("unknown suite: " + name);
}

}  // namespace edom::harness
