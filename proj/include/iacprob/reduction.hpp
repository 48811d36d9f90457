#pragma once

#include "iacprob/polynomial.hpp"
#include "iacprob/voting.hpp"

#include <span>
#include <string>
#include <vector>

namespace iacprob {

// Partition of the variable indices 0..d-1 into classes of identical
// constraint-matrix columns, ordered by lowest member index.
struct Grouping {
    std::vector<std::vector<int>> groups;

    std::vector<int> sizes() const;
    int total() const;
};

// The multiplicity weight of a grouping with sizes (k_1,...,k_D): a lattice
// point (N_1,...,N_D) of the reduced system represents
// prod_i binom(N_i + k_i - 1, k_i - 1) voting situations.
class WeightSpec {
public:
    WeightSpec() = default;
    explicit WeightSpec(std::vector<int> sizes);

    const std::vector<int>& sizes() const { return sizes_; }
    int degree() const;  // sum of (k_i - 1)

    Integer eval(std::span<const long long> point) const;

    // Full product expanded to a sparse polynomial.  Built on demand; the
    // expansion can be astronomically large for big groups (use eval /
    // leading_term for those).
    SparsePolynomial expanded_polynomial() const;
    // Single monomial prod_i N_i^(k_i-1) with coefficient prod_i 1/(k_i-1)!,
    // the highest-total-degree part of the expanded product.
    SparsePolynomial leading_term() const;

    bool operator==(const WeightSpec& other) const { return sizes_ == other.sizes_; }

private:
    std::vector<int> sizes_;
};

struct ReducedSystem {
    ConstraintSystem base;           // one representative column per group
    WeightSpec weight;
    Grouping grouping;               // in terms of the original columns
    std::vector<std::string> names;  // display name per group
};

Grouping group_equal_columns(const ConstraintSystem& system);

// Replaces each class of equal columns by the column of its lowest original
// index; strictness is preserved.  When indexing is supplied (and matches the
// system dimension) groups are named after the preference orders they merge;
// otherwise they are named G0..G{D-1}.
ReducedSystem reduce(const ConstraintSystem& system, const Grouping& grouping,
                     const OrderIndexing* indexing = nullptr);
ReducedSystem reduce(const ConstraintSystem& system);
// Convenience: reduce with order-aware group names for a system in m! variables.
ReducedSystem reduce_event(const ConstraintSystem& system, int m);

// Names for the groups of a system over the given order columns:
//   prefix classes        "a", "ba", ...   all orders sharing that prefix
//   suffix classes        "*a", "*ab", ... all orders sharing that suffix
//   first+last classes    "b*a"            fixed first and last candidate
//   first+pair classes    "c.a.b"          fixed first candidate, a before b
// and "G{i}" when no rule applies.
std::vector<std::string> group_names(const OrderIndexing& indexing, const Grouping& grouping);

// Direct construction of the reduced runoff-reversal system over the
// 2(m-1) variables (n_a, n_b, n_{c_i.a.b}, n_{c_i.b.a}, ...): the plurality
// rows b > a and a > c_i plus the pairwise row "a beats b".  Coincides with
// reduce(event_runoff_reversal(m)).
ReducedSystem runoff_reduced_system(int m);

}  // namespace iacprob
