#include "iacprob/voting.hpp"

#include "iacprob/errors.hpp"

#include <json.hpp>

#include <algorithm>
#include <fstream>
#include <sstream>

namespace iacprob {

namespace {
constexpr int kMaxCandidates = 8;  // 8! = 40320 keeps systems at desk scale

int position_of(const std::string& order, char c) {
    auto pos = order.find(c);
    if (pos == std::string::npos) throw InputError(std::string("unknown candidate label '") + c + "'");
    return static_cast<int>(pos);
}
}  // namespace

OrderIndexing::OrderIndexing(int m) : m_(m) {
    if (m < 2 || m > kMaxCandidates)
        throw InputError("candidate count must be between 2 and " + std::to_string(kMaxCandidates));
    std::string base;
    for (int i = 0; i < m; ++i) base.push_back(static_cast<char>('a' + i));
    std::string perm = base;
    do {
        orders_.push_back(perm);
    } while (std::next_permutation(perm.begin(), perm.end()));
}

int OrderIndexing::index_of(const std::string& order) const {
    auto it = std::lower_bound(orders_.begin(), orders_.end(), order);
    if (it == orders_.end() || *it != order) throw InputError("unknown preference order '" + order + "'");
    return static_cast<int>(it - orders_.begin());
}

void OrderIndexing::check_candidate(char c) const {
    if (c < 'a' || c >= static_cast<char>('a' + m_))
        throw InputError(std::string("unknown candidate label '") + c + "'");
}

std::vector<long long> pairwise_row(const OrderIndexing& indexing, char x, char y) {
    indexing.check_candidate(x);
    indexing.check_candidate(y);
    if (x == y) throw InputError("pairwise comparison needs two distinct candidates");
    std::vector<long long> row;
    row.reserve(static_cast<size_t>(indexing.order_count()));
    for (const auto& order : indexing.orders())
        row.push_back(position_of(order, x) < position_of(order, y) ? 1 : -1);
    return row;
}

std::vector<long long> plurality_row(const OrderIndexing& indexing, char x, char y) {
    indexing.check_candidate(x);
    indexing.check_candidate(y);
    if (x == y) throw InputError("plurality comparison needs two distinct candidates");
    std::vector<long long> row;
    row.reserve(static_cast<size_t>(indexing.order_count()));
    for (const auto& order : indexing.orders()) {
        if (order.front() == x) row.push_back(1);
        else if (order.front() == y) row.push_back(-1);
        else row.push_back(0);
    }
    return row;
}

ConstraintSystem full_orthant(int m) {
    OrderIndexing indexing(m);
    return ConstraintSystem{indexing.order_count(), {}};
}

ConstraintSystem event_condorcet_winner(int m, char w) {
    OrderIndexing indexing(m);
    indexing.check_candidate(w);
    ConstraintSystem system{indexing.order_count(), {}};
    for (int i = 0; i < m; ++i) {
        char other = static_cast<char>('a' + i);
        if (other == w) continue;
        system.rows.push_back({pairwise_row(indexing, w, other), true});
    }
    return system;
}

ConstraintSystem event_condorcet_efficiency_violation(int m, char cw, char pw) {
    if (cw == pw) throw InputError("Condorcet winner and plurality winner must differ");
    OrderIndexing indexing(m);
    indexing.check_candidate(cw);
    indexing.check_candidate(pw);
    ConstraintSystem system{indexing.order_count(), {}};
    for (int i = 0; i < m; ++i) {
        char other = static_cast<char>('a' + i);
        if (other == cw) continue;
        system.rows.push_back({pairwise_row(indexing, cw, other), true});
    }
    for (int i = 0; i < m; ++i) {
        char other = static_cast<char>('a' + i);
        if (other == pw) continue;
        system.rows.push_back({plurality_row(indexing, pw, other), true});
    }
    return system;
}

ConstraintSystem event_runoff_reversal(int m) {
    if (m < 3) throw InputError("runoff reversal needs at least three candidates");
    OrderIndexing indexing(m);
    ConstraintSystem system{indexing.order_count(), {}};
    system.rows.push_back({plurality_row(indexing, 'b', 'a'), true});
    for (int i = 2; i < m; ++i)
        system.rows.push_back({plurality_row(indexing, 'a', static_cast<char>('a' + i)), true});
    system.rows.push_back({pairwise_row(indexing, 'a', 'b'), true});
    return system;
}

namespace {

char parse_label(const nlohmann::json& value) {
    if (!value.is_string() || value.get<std::string>().size() != 1)
        throw InputError("candidate labels must be single-letter strings");
    return value.get<std::string>()[0];
}

}  // namespace

ConstraintSystem parse_event_json(const std::string& text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw InputError(std::string("event file is not valid JSON: ") + e.what());
    }
    if (!doc.is_object() || !doc.contains("m") || !doc.contains("rows"))
        throw InputError("event file must be an object with \"m\" and \"rows\"");
    if (!doc["m"].is_number_integer()) throw InputError("\"m\" must be an integer");
    int m = doc["m"].get<int>();
    bool strict = true;
    if (doc.contains("strict")) {
        if (!doc["strict"].is_boolean()) throw InputError("\"strict\" must be a boolean");
        strict = doc["strict"].get<bool>();
    }
    OrderIndexing indexing(m);
    ConstraintSystem system{indexing.order_count(), {}};
    if (!doc["rows"].is_array()) throw InputError("\"rows\" must be an array");
    for (const auto& row : doc["rows"]) {
        if (!row.is_object() || row.size() != 1)
            throw InputError("each row must be an object with exactly one of \"pairwise\" or \"plurality\"");
        const bool pairwise = row.contains("pairwise");
        const bool plurality = row.contains("plurality");
        if (!pairwise && !plurality)
            throw InputError("each row must be an object with exactly one of \"pairwise\" or \"plurality\"");
        const auto& pair = pairwise ? row["pairwise"] : row["plurality"];
        if (!pair.is_array() || pair.size() != 2)
            throw InputError("row comparisons must name exactly two candidates");
        char x = parse_label(pair[0]);
        char y = parse_label(pair[1]);
        std::vector<long long> coeffs =
            pairwise ? pairwise_row(indexing, x, y) : plurality_row(indexing, x, y);
        system.rows.push_back({std::move(coeffs), strict});
    }
    return system;
}

ConstraintSystem load_event_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open event file '" + path + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_event_json(buffer.str());
}

int candidates_for_dimension(int d) {
    int fact = 1;
    for (int m = 2; m <= kMaxCandidates; ++m) {
        fact *= m;
        if (fact == d) return m;
    }
    throw InputError("variable count " + std::to_string(d) + " is not m! for any supported m");
}

}  // namespace iacprob
