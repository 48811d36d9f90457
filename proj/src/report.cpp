#include "iacprob/report.hpp"

#include <json.hpp>

#include <sstream>

namespace iacprob {

namespace {
std::string rational_line(const Rational& value, int digits) {
    return rational_to_string(value) + " (" + rational_to_decimal(value, digits) + ")";
}
}  // namespace

std::string render_text(const RunReport& report) {
    std::ostringstream out;
    out << "command: " << report.command << "\n";
    for (const auto& [key, value] : report.inputs) out << "input " << key << ": " << value << "\n";
    out << "result: " << rational_line(report.result, report.digits) << "\n";
    for (const auto& [label, value] : report.derived)
        out << label << ": " << rational_line(value, report.digits) << "\n";
    if (report.reduction) {
        out << "reduction: D=" << report.reduction->D << " sizes=[";
        for (size_t i = 0; i < report.reduction->sizes.size(); ++i) {
            if (i) out << ",";
            out << report.reduction->sizes[i];
        }
        out << "] weight_degree=" << report.reduction->weight_degree << "\n";
    }
    for (const auto& line : report.extra) out << line << "\n";
    out << "ms: " << report.ms << "\n";
    return out.str();
}

std::string render_json(const RunReport& report) {
    nlohmann::ordered_json doc;
    doc["result"] = rational_to_string(report.result);
    doc["decimal"] = rational_to_decimal(report.result, report.digits);
    if (report.reduction) {
        doc["reduction"] = {{"D", report.reduction->D},
                            {"sizes", report.reduction->sizes},
                            {"weight_degree", report.reduction->weight_degree}};
    } else {
        doc["reduction"] = nlohmann::ordered_json::object();
    }
    doc["ms"] = report.ms;
    return doc.dump();
}

}  // namespace iacprob
