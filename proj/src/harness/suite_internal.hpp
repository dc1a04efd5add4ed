#pragma once

// Internal glue between the suite builders and the runner: a suite is an
// ordered list of case blocks, each a pure indexed check suitable for
// data-parallel execution.

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "edom/harness.hpp"

namespace edom::harness {

// `check(i, out)` evaluates case i, appends any counterexamples, and returns
// the number of input tuples it covered (1 for plain cases, more for batch
// cases such as one whole modulus). It must be pure: no order dependence, no
// shared mutable state.
struct CaseBlock {
    std::uint64_t count = 0;
    bool sampled = false;
    std::function<std::uint64_t(std::uint64_t, std::vector<Counterexample>&)> check;
};

struct SuiteDef {
    std::string domain;
    std::vector<CaseBlock> blocks;
};

SuiteDef build_suite(const std::string& name, const Bound& bound, const Mutations* mutations);

}  // namespace edom::harness
