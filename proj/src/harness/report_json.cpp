#include <json.hpp>

#include "edom/harness.hpp"

namespace edom::harness {

std::string report_to_json(const SuiteReport& report, int indent) {
    nlohmann::ordered_json j;
    j["suite"] = report.suite;
    j["domain"] = report.domain;
    j["bound"] = {
        {"integer_abs_bound", report.bound.integer_abs_bound},
        {"gaussian_norm_bound", report.bound.gaussian_norm_bound},
        {"modulus_bound", report.bound.modulus_bound},
        {"random_seed", report.bound.random_seed},
        {"random_sample_count", report.bound.random_sample_count},
    };
    j["cases_checked"] = report.cases_checked;
    j["cases_exhaustive"] = report.cases_exhaustive;
    j["cases_sampled"] = report.cases_sampled;
    j["passed"] = report.passed();
    nlohmann::ordered_json cxs = nlohmann::ordered_json::array();
    for (const Counterexample& cx : report.counterexamples) {
        nlohmann::ordered_json inputs = nlohmann::ordered_json::object();
        for (const auto& [key, value] : cx.inputs) inputs[key] = value;
        cxs.push_back({{"clause", cx.clause}, {"inputs", inputs}});
    }
    j["counterexamples"] = cxs;
    j["elapsed_ms"] = report.elapsed_ms;
    return j.dump(indent);
}

}  // namespace edom::harness
