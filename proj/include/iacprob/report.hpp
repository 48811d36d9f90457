#pragma once

#include "iacprob/rational.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace iacprob {

struct ReductionSummary {
    int D = 0;
    std::vector<int> sizes;
    int weight_degree = 0;
};

struct RunReport {
    std::string command;  // echo of the invocation
    std::vector<std::pair<std::string, std::string>> inputs;
    Rational result;
    int digits = 10;
    std::vector<std::pair<std::string, Rational>> derived;
    std::optional<ReductionSummary> reduction;
    std::vector<std::string> extra;  // preformatted lines (groupings, quasi-polynomials)
    long long ms = 0;
};

std::string render_text(const RunReport& report);
// Single JSON object {"result": "p/q", "decimal": "...", "reduction": {...},
// "ms": ...}; the decimal is a display of the exact rational, never the
// source of truth.
std::string render_json(const RunReport& report);

}  // namespace iacprob
