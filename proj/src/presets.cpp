#include "iacprob/presets.hpp"

#include "iacprob/errors.hpp"

namespace iacprob {

bool is_preset(const std::string& name) {
    return name == "condorcet-winner" || name == "condorcet-efficiency-violation" ||
           name == "condorcet-efficiency" || name == "runoff-reversal";
}

std::vector<std::string> preset_names() {
    return {"condorcet-winner", "condorcet-efficiency-violation", "runoff-reversal"};
}

EventPreset make_preset(const std::string& name, int m) {
    EventPreset preset;
    preset.recipe.name = name;
    preset.recipe.m = m;
    if (name == "condorcet-winner") {
        // Probability that the fixed candidate a is the Condorcet winner; any
        // of the m candidates could take that role, and the events are
        // disjoint, so existence is m times the base ratio.
        preset.recipe.numerator = event_condorcet_winner(m, 'a');
        preset.recipe.denominator = full_orthant(m);
        preset.base_label = "condorcet-winner(a)";
        preset.derived.push_back({"condorcet-existence", Rational(0), Rational(m)});
        preset.derived.push_back({"condorcet-paradox", Rational(1), Rational(-m)});
        preset.default_period = 2;
    } else if (name == "condorcet-efficiency-violation" || name == "condorcet-efficiency") {
        // Conditional probability that the plurality winner differs from the
        // Condorcet winner, given that one exists: m(m-1) labelled violation
        // events over m labelled Condorcet-winner events.
        preset.recipe.numerator = event_condorcet_efficiency_violation(m, 'a', 'b');
        preset.recipe.denominator = event_condorcet_winner(m, 'a');
        preset.recipe.numerator_multiplier = Integer(m) * (m - 1);
        preset.recipe.denominator_multiplier = m;
        preset.base_label = "efficiency-violation (conditional)";
        preset.derived.push_back({"condorcet-efficiency", Rational(1), Rational(-1)});
        preset.default_period = 6;
    } else if (name == "runoff-reversal") {
        // Probability that the plurality runner-up wins the runoff; the top
        // two plurality positions can be taken by any ordered candidate pair.
        preset.recipe.numerator = event_runoff_reversal(m);
        preset.recipe.denominator = full_orthant(m);
        preset.recipe.numerator_multiplier = Integer(m) * (m - 1);
        preset.base_label = "runoff-reversal";
        preset.default_period = 12;
    } else {
        throw InputError("unknown preset '" + name + "'; available: condorcet-winner, "
                         "condorcet-efficiency-violation, runoff-reversal");
    }
    return preset;
}

EventPreset make_custom(ConstraintSystem numerator) {
    EventPreset preset;
    int m = candidates_for_dimension(numerator.d);
    preset.recipe.name = "custom";
    preset.recipe.m = m;
    preset.recipe.denominator = full_orthant(m);
    preset.recipe.numerator = std::move(numerator);
    preset.base_label = "event";
    return preset;
}

}  // namespace iacprob
