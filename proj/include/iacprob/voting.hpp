#pragma once

#include <string>
#include <vector>

namespace iacprob {

// One linear inequality a·x > 0 (strict) or a·x >= 0 over the voting-situation
// vector x.
struct ConstraintRow {
    std::vector<long long> coeffs;
    bool strict = true;
    bool operator==(const ConstraintRow&) const = default;
};

// Integer inequality system over d nonnegative integer variables.  Every use
// site additionally imposes x >= 0 componentwise and sum(x) = n, with the
// slice level n supplied at counting / slicing time.
struct ConstraintSystem {
    int d = 0;
    std::vector<ConstraintRow> rows;
    bool operator==(const ConstraintSystem&) const = default;
};

// All m! complete strict preference orders over candidates 'a', 'b', ...,
// listed in lexicographic order of their label strings; column i of every
// constraint system refers to orders()[i].
class OrderIndexing {
public:
    explicit OrderIndexing(int m);

    int m() const { return m_; }
    int order_count() const { return static_cast<int>(orders_.size()); }
    const std::vector<std::string>& orders() const { return orders_; }
    const std::string& order(int index) const { return orders_.at(static_cast<size_t>(index)); }
    int index_of(const std::string& order) const;
    void check_candidate(char c) const;

private:
    int m_;
    std::vector<std::string> orders_;
};

// +1 on orders ranking x above y, -1 otherwise; with a strict flag this models
// "x beats y" in a pairwise majority comparison.
std::vector<long long> pairwise_row(const OrderIndexing& indexing, char x, char y);
// +1 for orders with first preference x, -1 for first preference y, 0 else;
// models "x wins plurality over y".
std::vector<long long> plurality_row(const OrderIndexing& indexing, char x, char y);

// The unconstrained system (no rows): every voting situation.
ConstraintSystem full_orthant(int m);
// w beats every other candidate in a pairwise comparison.
ConstraintSystem event_condorcet_winner(int m, char w);
// cw is a Condorcet winner while pw beats everyone in plurality.
ConstraintSystem event_condorcet_efficiency_violation(int m, char cw, char pw);
// b and a are plurality winner and runner-up, but a wins the runoff:
// plurality(b > a), plurality(a > c_i) for every other candidate c_i, and a
// beats b pairwise.
ConstraintSystem event_runoff_reversal(int m);

// Event specification files:
//   { "m": 3,
//     "rows": [ { "pairwise": ["a","b"] }, { "plurality": ["b","a"] } ],
//     "strict": true }
ConstraintSystem parse_event_json(const std::string& text);
ConstraintSystem load_event_file(const std::string& path);

// Recovers m from a system over m! variables; throws if d is not a factorial.
int candidates_for_dimension(int d);

}  // namespace iacprob
