#pragma once

#include "fpsl/report.hpp"

namespace fpsl {

struct SuiteOptions {
    int order = 12;
    bool parallel = false;
    std::optional<Fault> fault;
};

// section1, section2, section3, appendix-a, appendix-b
const std::vector<std::string>& suite_names();

// Config error for unknown names. Results are ordered identically with or without parallelism.
Report run_suite(const std::string& name, const SuiteOptions& options);
// Accepts "all" in addition to the individual names.
std::vector<Report> run_suites(const std::string& name, const SuiteOptions& options);

} // namespace fpsl
