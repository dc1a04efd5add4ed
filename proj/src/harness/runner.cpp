#include <algorithm>
#include <chrono>
#include <map>
#include <sstream>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "suite_internal.hpp"

namespace edom::harness {
namespace {

constexpr std::size_t kMaxPerClause = 10;

// A counterexample tagged with its position (case index, emission order
// within the case) so parallel results can be merged back into the order the
// serial sweep would produce.
struct Tagged {
    std::uint64_t case_index;
    std::uint32_t seq;
    Counterexample cx;
};

void sort_tagged(std::vector<Tagged>& v) {
    std::sort(v.begin(), v.end(), [](const Tagged& a, const Tagged& b) {
        if (a.case_index != b.case_index) return a.case_index < b.case_index;
        return a.seq < b.seq;
    });
}

// Keeps only the first kMaxPerClause entries per clause, preserving order.
// Applied per-thread (sound under static scheduling, where each thread's
// iterations arrive in ascending index order) and again on the merged list.
void cap_per_clause(std::vector<Tagged>& v) {
    std::map<std::string, std::size_t> seen;
    std::vector<Tagged> kept;
    kept.reserve(v.size());
    for (Tagged& t : v)
        if (seen[t.cx.clause]++ < kMaxPerClause) kept.push_back(std::move(t));
    v = std::move(kept);
}

struct BlockResult {
    std::uint64_t weight = 0;
    std::vector<Tagged> tagged;
};

BlockResult run_block_serial(const CaseBlock& block) {
    BlockResult res;
    std::vector<Counterexample> local;
    for (std::uint64_t i = 0; i < block.count; ++i) {
        local.clear();
        res.weight += block.check(i, local);
        for (std::uint32_t s = 0; s < local.size(); ++s)
            res.tagged.push_back({i, s, std::move(local[s])});
    }
    cap_per_clause(res.tagged);
    return res;
}

BlockResult run_block_parallel(const CaseBlock& block) {
#ifndef _OPENMP
    return run_block_serial(block);
#else
    BlockResult res;
    const long long count = static_cast<long long>(block.count);
#pragma omp parallel
    {
        std::uint64_t my_weight = 0;
        std::vector<Tagged> my_tagged;
        std::vector<Counterexample> local;
#pragma omp for schedule(static) nowait
        for (long long i = 0; i < count; ++i) {
            local.clear();
            my_weight += block.check(static_cast<std::uint64_t>(i), local);
            for (std::uint32_t s = 0; s < local.size(); ++s)
                my_tagged.push_back({static_cast<std::uint64_t>(i), s, std::move(local[s])});
        }
        cap_per_clause(my_tagged);
#pragma omp critical
        {
            res.weight += my_weight;
            for (Tagged& t : my_tagged) res.tagged.push_back(std::move(t));
        }
    }
    sort_tagged(res.tagged);
    cap_per_clause(res.tagged);
    return res;
#endif
}

}  // namespace

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names = {
        "ring_axioms",    "euclid_contract", "gcd_oracle_z",     "gcd_oracle_zi",
        "euclid_step",    "thm21",           "thm22",            "prime_irreducible",
        "measure_decrease", "ufd_roundtrip_z", "ufd_roundtrip_zi", "field_instance",
    };
    return names;
}

SuiteReport run_suite(const std::string& name, const Bound& bound, RunMode mode,
                      const Mutations* mutations) {
    const auto start = std::chrono::steady_clock::now();
    SuiteDef def = build_suite(name, bound, mutations);

    SuiteReport report;
    report.suite = name;
    report.domain = def.domain;
    report.bound = bound;

    std::vector<Tagged> all;
    for (const CaseBlock& block : def.blocks) {
        BlockResult res =
            mode == RunMode::parallel ? run_block_parallel(block) : run_block_serial(block);
        report.cases_checked += res.weight;
        (block.sampled ? report.cases_sampled : report.cases_exhaustive) += res.weight;
        for (Tagged& t : res.tagged) all.push_back(std::move(t));
    }
    cap_per_clause(all);
    report.counterexamples.reserve(all.size());
    for (Tagged& t : all) report.counterexamples.push_back(std::move(t.cx));

    const auto stop = std::chrono::steady_clock::now();
    report.elapsed_ms = std::chrono::duration<double, std::milli>(stop - start).count();
    return report;
}

std::string report_to_text(const SuiteReport& report) {
    std::ostringstream os;
    os << "suite=" << report.suite << " domain=" << report.domain
       << " cases=" << report.cases_checked << " (exhaustive=" << report.cases_exhaustive
       << " sampled=" << report.cases_sampled << ")"
       << " counterexamples=" << report.counterexamples.size() << " elapsed_ms=" << report.elapsed_ms
       << "\n";
    for (const Counterexample& cx : report.counterexamples) {
        os << "counterexample clause=" << cx.clause;
        for (const auto& [key, value] : cx.inputs) os << " " << key << "=" << value;
        os << "\n";
    }
    os << (report.passed() ? "PASS" : "FAIL") << "\n";
    return os.str();
}

}  // namespace edom::harness
