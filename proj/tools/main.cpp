#include "iacprob/counting.hpp"
#include "iacprob/errors.hpp"
#include "iacprob/geometry.hpp"
#include "iacprob/integration.hpp"
#include "iacprob/presets.hpp"
#include "iacprob/report.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

namespace {

using namespace iacprob;

struct Options {
    std::string event;
    int m = 0;
    long long n = 0;
    int period = 0;
    int threads = 0;  // 0: all available cores
    int digits = 10;
    bool json = false;
    bool reduced = false;
    bool unreduced = false;
};

EventPreset resolve_event(const Options& opt) {
    if (is_preset(opt.event)) {
        if (opt.m < 2) throw InputError("presets require --m (the number of candidates)");
        return make_preset(opt.event, opt.m);
    }
    EventPreset preset = make_custom(load_event_file(opt.event));
    if (opt.m != 0 && opt.m != preset.recipe.m)
        throw InputError("--m disagrees with the event file (file has m = " +
                         std::to_string(preset.recipe.m) + ")");
    return preset;
}

ReductionSummary summarize(const ReducedSystem& reduced) {
    return ReductionSummary{reduced.base.d, reduced.weight.sizes(), reduced.weight.degree()};
}

std::string render_row(const ConstraintRow& row, const std::vector<std::string>& names) {
    std::ostringstream out;
    bool first = true;
    for (size_t j = 0; j < row.coeffs.size(); ++j) {
        long long c = row.coeffs[j];
        if (c == 0) continue;
        if (first) {
            if (c < 0) out << "-";
        } else {
            out << (c < 0 ? " - " : " + ");
        }
        if (c != 1 && c != -1) out << (c < 0 ? -c : c) << "*";
        out << "n_" << names[j];
        first = false;
    }
    if (first) out << "0";
    out << (row.strict ? " > 0" : " >= 0");
    return out.str();
}

std::string render_weight(const ReducedSystem& reduced) {
    std::ostringstream out;
    bool first = true;
    const auto& sizes = reduced.weight.sizes();
    for (size_t i = 0; i < sizes.size(); ++i) {
        int k = sizes[i];
        if (k == 1) continue;
        if (!first) out << " * ";
        first = false;
        if (k == 2) out << "(n_" << reduced.names[i] << " + 1)";
        else out << "binom(n_" << reduced.names[i] << " + " << k - 1 << ", " << k - 1 << ")";
    }
    if (first) out << "1";
    return out.str();
}

std::vector<std::string> display_names(const ReducedSystem& reduced) {
    std::vector<std::string> names;
    names.reserve(reduced.names.size());
    for (const auto& name : reduced.names) names.push_back("n_" + name);
    return names;
}

void describe_reduction(const EventPreset& preset, const ReducedSystem& reduced, RunReport& report) {
    const auto& grouping = reduced.grouping;
    OrderIndexing indexing(preset.recipe.m);
    std::ostringstream head;
    head << "groups (" << grouping.total() << " variables -> " << reduced.base.d << "):";
    report.extra.push_back(head.str());
    for (size_t g = 0; g < grouping.groups.size(); ++g) {
        std::ostringstream line;
        line << "  n_" << reduced.names[g] << ": size " << grouping.groups[g].size() << " {";
        for (size_t i = 0; i < grouping.groups[g].size(); ++i) {
            if (i) line << ", ";
            line << indexing.order(grouping.groups[g][i]);
        }
        line << "}";
        report.extra.push_back(line.str());
    }
    report.extra.push_back("rows:");
    for (const auto& row : reduced.base.rows)
        report.extra.push_back("  " + render_row(row, reduced.names));
    report.extra.push_back("weight: " + render_weight(reduced));
    report.extra.push_back("leading term: " + reduced.weight.leading_term().to_string(display_names(reduced)));
}

int dispatch(const std::string& command, const Options& opt) {
    RunReport report;
    report.command = command;
    report.digits = opt.digits;
    auto start = std::chrono::steady_clock::now();

    EventPreset preset = resolve_event(opt);
    report.inputs.emplace_back("event", opt.event);
    report.inputs.emplace_back("m", std::to_string(preset.recipe.m));
    ReducedSystem reduced = reduce_event(preset.recipe.numerator, preset.recipe.m);

    if (command == "count") {
        report.inputs.emplace_back("n", std::to_string(opt.n));
        Integer count = opt.reduced ? weighted_count(reduced, opt.n, opt.threads)
                                    : count_points(preset.recipe.numerator, opt.n, opt.threads);
        report.result = Rational(count);
        report.reduction = summarize(reduced);
    } else if (command == "prob") {
        report.inputs.emplace_back("n", std::to_string(opt.n));
        report.result = probability(preset.recipe, opt.n, true, opt.threads);
        for (const auto& d : preset.derived) report.derived.emplace_back(d.label, d.apply(report.result));
        report.reduction = summarize(reduced);
    } else if (command == "limit") {
        LimitResult limit = limiting_probability_detailed(preset.recipe, opt.threads);
        report.result = limit.value;
        for (const auto& d : preset.derived) report.derived.emplace_back(d.label, d.apply(report.result));
        report.reduction = summarize(limit.numerator_reduced);
        report.extra.push_back("numerator integral: " + rational_to_string(limit.numerator_integral));
        report.extra.push_back("denominator integral: " + rational_to_string(limit.denominator_integral));
    } else if (command == "quasipoly") {
        int degree = preset.recipe.numerator.d - 1;
        auto sampler = [&](long long n) { return weighted_count(reduced, n, opt.threads); };
        int period = opt.period > 0 ? opt.period : preset.default_period;
        QuasiPolynomial fit = period > 0 ? interpolate_quasipolynomial(degree, period, sampler)
                                         : fit_quasipolynomial_auto(degree, sampler);
        report.result = fit.leading_coefficient(0);
        report.reduction = summarize(reduced);
        report.extra.push_back("degree: " + std::to_string(fit.degree()));
        report.extra.push_back("period: " + std::to_string(fit.period()));
        report.extra.push_back("per-residue form:");
        std::istringstream residues(fit.to_residue_string());
        for (std::string line; std::getline(residues, line);) report.extra.push_back("  " + line);
        report.extra.push_back("fractional-part form:");
        std::istringstream fractional(fit.to_fractional_string());
        for (std::string line; std::getline(fractional, line);) report.extra.push_back("  " + line);
    } else if (command == "reduce") {
        report.result = Rational(reduced.weight.degree());
        report.reduction = summarize(reduced);
        describe_reduction(preset, reduced, report);
    } else if (command == "volume") {
        Polytope poly = opt.unreduced ? polytope_of(preset.recipe.numerator) : polytope_of(reduced.base);
        report.result = relative_volume(poly, opt.threads);
        if (!opt.unreduced) report.reduction = summarize(reduced);
    } else {
        throw InputError("unknown subcommand '" + command + "'");
    }

    auto elapsed = std::chrono::steady_clock::now() - start;
    report.ms = std::chrono::duration_cast<std::chrono::milliseconds>(elapsed).count();
    std::cout << (opt.json ? render_json(report) : render_text(report));
    if (opt.json) std::cout << "\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact probabilities of voting events under the Impartial Anonymous Culture model"};
    app.require_subcommand(1);
    Options opt;

    auto add_common = [&](CLI::App* cmd, bool needs_n) {
        cmd->add_option("--event", opt.event, "Preset name or event file path")->required();
        cmd->add_option("--m", opt.m, "Number of candidates");
        if (needs_n) cmd->add_option("--n", opt.n, "Number of voters")->required();
        cmd->add_option("--threads", opt.threads, "Worker threads (default: all cores)");
        cmd->add_option("--digits", opt.digits, "Decimal digits in renderings");
        cmd->add_flag("--json", opt.json, "Emit the report as a JSON object");
    };

    CLI::App* count = app.add_subcommand("count", "Count voting situations of the event at a given n");
    add_common(count, true);
    count->add_flag("--reduced", opt.reduced, "Count via the weighted equal-column reduction");

    CLI::App* quasipoly = app.add_subcommand("quasipoly", "Fit the event's counting quasi-polynomial");
    add_common(quasipoly, false);
    quasipoly->add_option("--period", opt.period, "Residue period (default: preset period or trial search)");

    CLI::App* prob = app.add_subcommand("prob", "Exact event probability at a given n");
    add_common(prob, true);

    CLI::App* limit = app.add_subcommand("limit", "Exact limiting probability (n to infinity)");
    add_common(limit, false);

    CLI::App* reduce_cmd = app.add_subcommand("reduce", "Print the equal-column grouping and weight");
    add_common(reduce_cmd, false);

    CLI::App* volume = app.add_subcommand("volume", "Relative volume of the event's slice polytope");
    add_common(volume, false);
    volume->add_flag("--unreduced", opt.unreduced, "Use the unreduced system's polytope");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    std::string command;
    for (auto* sub : app.get_subcommands()) command = sub->get_name();
    try {
        return dispatch(command, opt);
    } catch (const GeometryError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
