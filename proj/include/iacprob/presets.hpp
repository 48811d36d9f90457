#pragma once

#include "iacprob/counting.hpp"

#include <string>
#include <vector>

namespace iacprob {

// A quantity derived from the base ratio r, reported as offset + scale * r
// (e.g. Condorcet existence m*r and paradox 1 - m*r).
struct DerivedQuantity {
    std::string label;
    Rational offset;
    Rational scale;

    Rational apply(const Rational& base) const { return offset + scale * base; }
};

struct EventPreset {
    ProbabilityRecipe recipe;
    std::string base_label;
    std::vector<DerivedQuantity> derived;
    int default_period = 0;  // 0: no preset period, search trial periods
};

// Preset names: "condorcet-winner", "condorcet-efficiency-violation" (alias
// "condorcet-efficiency"), "runoff-reversal".
bool is_preset(const std::string& name);
std::vector<std::string> preset_names();
EventPreset make_preset(const std::string& name, int m);
// A user-supplied numerator over the full orthant, multipliers 1.
EventPreset make_custom(ConstraintSystem numerator);

}  // namespace iacprob
