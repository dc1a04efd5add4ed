#include "edom/modular.hpp"

#include <stdexcept>

#include "edom/integers.hpp"

namespace edom {
namespace {

constexpr std::uint64_t kMaxModulus = std::uint64_t(1) << 32;

std::string render_pair(const char* x, std::uint64_t xv, const char* y, std::uint64_t yv) {
    return std::string(x) + "=" + std::to_string(xv) + " " + y + "=" + std::to_string(yv);
}

bool subset(const IdealSet& inner, const IdealSet& outer) {
    for (std::size_t i = 0; i < inner.member.size(); ++i)
        if (inner.member[i] && !outer.member[i]) return false;
    return true;
}

// Accumulates one clause: every tuple bumps the count, the first 10 failures
// are rendered for the report.
struct ClauseCollector {
    TheoremReport report;

    explicit ClauseCollector(std::uint64_t modulus, std::string clause) {
        report.modulus = modulus;
        report.clause = std::move(clause);
    }

    template <typename Render>
    void check(bool ok, Render&& render) {
        ++report.checked_count;
        if (!ok && report.counterexamples.size() < 10) report.counterexamples.push_back(render());
    }
};

// Memoized results of the real ring operations, shared by the theorem
// clauses: divisibility, unit flags, and principal ideals.
struct RingTables {
    std::uint64_t n;
    std::vector<ModElement> elems;
    std::vector<std::vector<bool>> div;  // div[a][b]: a | b, a >= 1
    std::vector<bool> unit;
    std::vector<IdealSet> ideal;

    explicit RingTables(const ModularRing& ring) : n(ring.modulus()), elems(ring.all_elements()) {
        div.assign(n, std::vector<bool>(n, false));
        unit.assign(n, false);
        ideal.reserve(n);
        for (std::uint64_t a = 0; a < n; ++a) {
            ideal.push_back(principal_ideal(ring, elems[a]));
            if (a == 0) continue;
            unit[a] = is_unit(ring, elems[a]);
            for (std::uint64_t b = 0; b < n; ++b)
                div[a][b] = ring.exact_divide(elems[a], elems[b]).has_value();
        }
    }

    bool assoc(std::uint64_t a, std::uint64_t b) const { return div[a][b] && div[b][a]; }
};

}  // namespace

ModularRing::ModularRing(std::uint64_t n) : n_(n) {
    if (n < 2) throw std::domain_error("ModularRing: modulus must be at least 2");
    if (n > kMaxModulus) throw std::domain_error("ModularRing: modulus exceeds 2^32");
}

void ModularRing::check_operand(const element& a) const {
    if (a.modulus != n_) throw std::domain_error("ModularRing: operand from a different modulus");
    if (a.value >= n_) throw std::domain_error("ModularRing: residue out of range");
}

ModElement ModularRing::make(std::uint64_t v) const {
    if (v >= n_) throw std::domain_error("ModularRing: residue out of range");
    return {v, n_};
}

ModElement ModularRing::add(const element& a, const element& b) const {
    check_operand(a);
    check_operand(b);
    return {(a.value + b.value) % n_, n_};
}

ModElement ModularRing::mul(const element& a, const element& b) const {
    check_operand(a);
    check_operand(b);
    return {(a.value * b.value) % n_, n_};
}

ModElement ModularRing::neg(const element& a) const {
    check_operand(a);
    return {(n_ - a.value) % n_, n_};
}

bool ModularRing::eq(const element& a, const element& b) const {
    check_operand(a);
    check_operand(b);
    return a.value == b.value;
}

bool ModularRing::less(const element& a, const element& b) const {
    check_operand(a);
    check_operand(b);
    return a.value < b.value;
}

std::string ModularRing::format(const element& a) const {
    check_operand(a);
    return std::to_string(a.value);
}

ModElement ModularRing::parse(std::string_view text) const {
    BigInt v = parse_decimal(text);
    if (v < 0 || v >= BigInt(static_cast<unsigned long>(n_)))
        throw parse_error("residue literal out of range [0, " + std::to_string(n_) + ")");
    return {to_u64(v), n_};
}

std::optional<ModElement> ModularRing::exact_divide(const element& a, const element& b) const {
    check_operand(a);
    check_operand(b);
    if (a.value == 0) throw std::domain_error("exact_divide: divisor must be nonzero");
    for (std::uint64_t x = 0; x < n_; ++x)
        if (a.value * x % n_ == b.value) return make(x);
    return std::nullopt;
}

bool ModularRing::is_prime_element(const element& p) const {
    check_operand(p);
    if (p.value == 0 || is_unit(*this, p)) return false;
    // Membership in the divisibility image of p, built in one pass.
    std::vector<bool> multiple(n_, false);
    for (std::uint64_t x = 0; x < n_; ++x) multiple[p.value * x % n_] = true;
    for (std::uint64_t a = 0; a < n_; ++a)
        for (std::uint64_t b = 0; b < n_; ++b)
            if (multiple[a * b % n_] && !multiple[a] && !multiple[b]) return false;
    return true;
}

bool ModularRing::is_irreducible(const element& x) const {
    check_operand(x);
    if (x.value == 0 || is_unit(*this, x)) return false;
    std::vector<bool> unit_flag(n_, false);
    for (std::uint64_t u = 1; u < n_; ++u)
        for (std::uint64_t v = 0; v < n_; ++v)
            if (u * v % n_ == 1 % n_) {
                unit_flag[u] = true;
                break;
            }
    for (std::uint64_t a = 0; a < n_; ++a)
        for (std::uint64_t b = a; b < n_; ++b)
            if (a * b % n_ == x.value && !unit_flag[a] && !unit_flag[b]) return false;
    return true;
}

ModElement ModularRing::canonical_associate(const element& a) const {
    check_operand(a);
    if (a.value == 0) throw std::domain_error("canonical_associate: zero has no associates");
    for (std::uint64_t b = 1; b < n_; ++b) {
        element cand = make(b);
        if (exact_divide(a, cand).has_value() && exact_divide(cand, a).has_value()) return cand;
    }
    return a;  // unreachable: a is an associate of itself
}

std::vector<ModElement> ModularRing::divisor_candidates(const element& x) const {
    check_operand(x);
    std::vector<element> out;
    out.reserve(n_ - 1);
    for (std::uint64_t v = 1; v < n_; ++v) out.push_back({v, n_});
    return out;
}

std::vector<ModElement> ModularRing::all_elements() const {
    std::vector<element> out;
    out.reserve(n_);
    for (std::uint64_t v = 0; v < n_; ++v) out.push_back({v, n_});
    return out;
}

std::vector<std::uint64_t> IdealSet::members() const {
    std::vector<std::uint64_t> out;
    for (std::size_t i = 0; i < member.size(); ++i)
        if (member[i]) out.push_back(i);
    return out;
}

std::size_t IdealSet::count() const { return members().size(); }

IdealSet principal_ideal(const ModularRing& ring, const ModElement& a) {
    std::uint64_t n = ring.modulus();
    IdealSet ideal{n, std::vector<bool>(n, false)};
    for (std::uint64_t r = 0; r < n; ++r)
        ideal.member[ring.mul(a, ring.make(r)).value] = true;
    return ideal;
}

bool is_ideal(const ModularRing& ring, const IdealSet& ideal) {
    std::uint64_t n = ring.modulus();
    if (ideal.modulus != n || ideal.member.size() != n) return false;
    if (!ideal.member[0]) return false;
    std::vector<std::uint64_t> ms = ideal.members();
    for (std::uint64_t a : ms) {
        for (std::uint64_t b : ms)
            if (!ideal.member[(a + b) % n]) return false;
        for (std::uint64_t r = 0; r < n; ++r)
            if (!ideal.member[a * r % n]) return false;
    }
    return true;
}

bool is_prime_ideal(const ModularRing& ring, const IdealSet& ideal) {
    if (!is_ideal(ring, ideal)) throw std::domain_error("is_prime_ideal: set is not an ideal");
    std::uint64_t n = ring.modulus();
    if (ideal.count() == n) return false;  // not proper
    for (std::uint64_t a = 0; a < n; ++a)
        for (std::uint64_t b = 0; b < n; ++b)
            if (ideal.member[a * b % n] && !ideal.member[a] && !ideal.member[b]) return false;
    return true;
}

bool is_maximal_principal(const ModularRing& ring, const IdealSet& ideal) {
    if (!is_ideal(ring, ideal)) throw std::domain_error("is_maximal_principal: set is not an ideal");
    std::uint64_t n = ring.modulus();
    if (ideal.count() == n) throw std::domain_error("is_maximal_principal: ideal must be proper");
    bool principal = false;
    for (std::uint64_t a = 0; a < n && !principal; ++a)
        principal = principal_ideal(ring, ring.make(a)) == ideal;
    if (!principal) throw std::domain_error("is_maximal_principal: ideal is not principal");
    for (std::uint64_t a = 0; a < n; ++a) {
        IdealSet other = principal_ideal(ring, ring.make(a));
        if (other.count() < n && subset(ideal, other) && !(other == ideal)) return false;
    }
    return true;
}

std::vector<TheoremReport> theorem21_suite(const ModularRing& ring) {
    const RingTables t(ring);
    const std::uint64_t n = t.n;
    std::vector<TheoremReport> out;

    // (i) a | b iff (b) is contained in (a)
    {
        ClauseCollector c(n, "thm21.i");
        for (std::uint64_t a = 1; a < n; ++a)
            for (std::uint64_t b = 0; b < n; ++b)
                c.check(t.div[a][b] == subset(t.ideal[b], t.ideal[a]),
                        [&] { return render_pair("a", a, "b", b); });
        out.push_back(std::move(c.report));
    }
    // (ii) a ~ b iff (a) = (b)
    {
        ClauseCollector c(n, "thm21.ii");
        for (std::uint64_t a = 1; a < n; ++a)
            for (std::uint64_t b = 1; b < n; ++b)
                c.check(t.assoc(a, b) == (t.ideal[a] == t.ideal[b]),
                        [&] { return render_pair("a", a, "b", b); });
        out.push_back(std::move(c.report));
    }
    // (iii) u is a unit iff u divides every element
    {
        ClauseCollector c(n, "thm21.iii");
        for (std::uint64_t u = 1; u < n; ++u) {
            bool divides_all = true;
            for (std::uint64_t r = 0; r < n && divides_all; ++r) divides_all = t.div[u][r];
            c.check(t.unit[u] == divides_all, [&] { return "u=" + std::to_string(u); });
        }
        out.push_back(std::move(c.report));
    }
    // (iv) u is a unit iff (u) is the whole ring
    {
        ClauseCollector c(n, "thm21.iv");
        for (std::uint64_t u = 0; u < n; ++u) {
            bool whole = t.ideal[u].count() == n;
            bool unit = u != 0 && t.unit[u];
            c.check(unit == whole, [&] { return "u=" + std::to_string(u); });
        }
        out.push_back(std::move(c.report));
    }
    // (v) associate-of is an equivalence relation on nonzero elements
    {
        ClauseCollector c(n, "thm21.v_refl");
        for (std::uint64_t a = 1; a < n; ++a)
            c.check(t.assoc(a, a), [&] { return "a=" + std::to_string(a); });
        out.push_back(std::move(c.report));
    }
    {
        ClauseCollector c(n, "thm21.v_symm");
        for (std::uint64_t a = 1; a < n; ++a)
            for (std::uint64_t b = 1; b < n; ++b)
                c.check(!t.assoc(a, b) || t.assoc(b, a),
                        [&] { return render_pair("a", a, "b", b); });
        out.push_back(std::move(c.report));
    }
    {
        ClauseCollector c(n, "thm21.v_trans");
        for (std::uint64_t a = 1; a < n; ++a)
            for (std::uint64_t b = 1; b < n; ++b)
                for (std::uint64_t d = 1; d < n; ++d)
                    c.check(!(t.assoc(a, b) && t.assoc(b, d)) || t.assoc(a, d), [&] {
                        return render_pair("a", a, "b", b) + " c=" + std::to_string(d);
                    });
        out.push_back(std::move(c.report));
    }
    // (vi) a unit multiple of b is an associate of b ...
    {
        ClauseCollector c(n, "thm21.vi");
        for (std::uint64_t b = 1; b < n; ++b)
            for (std::uint64_t r = 1; r < n; ++r) {
                if (!t.unit[r]) continue;
                std::uint64_t a = b * r % n;
                c.check(t.assoc(a, b), [&] { return render_pair("b", b, "r", r); });
            }
        out.push_back(std::move(c.report));
    }
    // ... and conversely when the modulus is prime
    {
        ClauseCollector c(n, "thm21.vi_converse");
        if (is_irreducible_integer(BigInt(static_cast<unsigned long>(n)))) {
            for (std::uint64_t a = 1; a < n; ++a)
                for (std::uint64_t b = 1; b < n; ++b) {
                    if (!t.assoc(a, b)) continue;
                    bool witnessed = false;
                    for (std::uint64_t r = 1; r < n && !witnessed; ++r)
                        witnessed = t.unit[r] && b * r % n == a;
                    c.check(witnessed, [&] { return render_pair("a", a, "b", b); });
                }
        }
        out.push_back(std::move(c.report));
    }
    return out;
}

std::vector<TheoremReport> theorem22_suite(const ModularRing& ring) {
    const RingTables t(ring);
    const std::uint64_t n = t.n;
    std::vector<TheoremReport> out;

    // (i) p != 0 is a prime element iff (p) is a nonzero prime ideal
    {
        ClauseCollector c(n, "thm22.i");
        IdealSet zero_ideal = t.ideal[0];
        for (std::uint64_t p = 1; p < n; ++p) {
            bool elem = ring.is_prime_element(t.elems[p]);
            bool ideal = is_prime_ideal(ring, t.ideal[p]) && !(t.ideal[p] == zero_ideal);
            c.check(elem == ideal, [&] { return "p=" + std::to_string(p); });
        }
        out.push_back(std::move(c.report));
    }
    // (vi) every nonzero divisor of an irreducible is a unit or an associate
    {
        ClauseCollector c(n, "thm22.vi");
        for (std::uint64_t x = 1; x < n; ++x) {
            if (!ring.is_irreducible(t.elems[x])) continue;
            for (std::uint64_t d = 1; d < n; ++d) {
                if (!t.div[d][x]) continue;
                c.check(t.unit[d] || t.assoc(d, x), [&] { return render_pair("x", x, "d", d); });
            }
        }
        out.push_back(std::move(c.report));
    }
    return out;
}

PrimeField::PrimeField(std::uint64_t p) : ModularRing(p) {
    if (!is_irreducible_integer(BigInt(static_cast<unsigned long>(p))))
        throw std::domain_error("PrimeField: modulus must be prime");
}

BigInt PrimeField::norm(const element& a) const {
    if (eq(a, zero())) throw std::domain_error("norm: zero has no norm");
    return 1;
}

std::pair<ModElement, ModElement> PrimeField::div_rem(const element& a, const element& b) const {
    if (eq(b, zero())) throw std::domain_error("div_rem: divisor must be nonzero");
    std::optional<element> q = exact_divide(b, a);
    if (!q.has_value()) throw std::logic_error("div_rem: field division must succeed");
    return {*q, zero()};
}

}  // namespace edom
