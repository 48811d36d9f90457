#include "iacprob/reduction.hpp"

#include "iacprob/errors.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace iacprob {

std::vector<int> Grouping::sizes() const {
    std::vector<int> out;
    out.reserve(groups.size());
    for (const auto& g : groups) out.push_back(static_cast<int>(g.size()));
    return out;
}

int Grouping::total() const {
    int t = 0;
    for (const auto& g : groups) t += static_cast<int>(g.size());
    return t;
}

WeightSpec::WeightSpec(std::vector<int> sizes) : sizes_(std::move(sizes)) {
    for (int k : sizes_)
        if (k < 1) throw InputError("group sizes must be positive");
}

int WeightSpec::degree() const {
    int d = 0;
    for (int k : sizes_) d += k - 1;
    return d;
}

Integer WeightSpec::eval(std::span<const long long> point) const {
    if (point.size() != sizes_.size()) throw InputError("weight evaluated at wrong arity");
    Integer w = 1;
    for (size_t i = 0; i < sizes_.size(); ++i) {
        int k = sizes_[i];
        if (k == 1) continue;
        w *= binomial(Integer(point[i]) + (k - 1), static_cast<unsigned>(k - 1));
    }
    return w;
}

SparsePolynomial WeightSpec::expanded_polynomial() const {
    int vars = static_cast<int>(sizes_.size());
    SparsePolynomial p = SparsePolynomial::constant(vars, Rational(1));
    for (int i = 0; i < vars; ++i)
        p = p * SparsePolynomial::binomial_weight(vars, i, sizes_[static_cast<size_t>(i)]);
    return p;
}

SparsePolynomial WeightSpec::leading_term() const {
    int vars = static_cast<int>(sizes_.size());
    std::vector<unsigned> exps(static_cast<size_t>(vars));
    Rational coeff = 1;
    for (int i = 0; i < vars; ++i) {
        int k = sizes_[static_cast<size_t>(i)];
        exps[static_cast<size_t>(i)] = static_cast<unsigned>(k - 1);
        coeff /= Rational(factorial(static_cast<unsigned>(k - 1)));
    }
    return SparsePolynomial::monomial(vars, std::move(exps), coeff);
}

Grouping group_equal_columns(const ConstraintSystem& system) {
    // The implicit nonnegativity and sum rows are symmetric in all variables,
    // so only the explicit rows can separate columns.
    std::map<std::vector<long long>, int> seen;
    Grouping grouping;
    for (int j = 0; j < system.d; ++j) {
        std::vector<long long> column;
        column.reserve(system.rows.size());
        for (const auto& row : system.rows) column.push_back(row.coeffs.at(static_cast<size_t>(j)));
        auto [it, inserted] = seen.emplace(std::move(column), static_cast<int>(grouping.groups.size()));
        if (inserted) grouping.groups.emplace_back();
        grouping.groups[static_cast<size_t>(it->second)].push_back(j);
    }
    return grouping;
}

namespace {

Integer half_factorial(int n) { return factorial(static_cast<unsigned>(n)) / 2; }

std::string name_for_group(const OrderIndexing& indexing, const std::vector<int>& group, int ordinal) {
    const int m = indexing.m();
    std::vector<std::string> members;
    members.reserve(group.size());
    for (int idx : group) members.push_back(indexing.order(idx));
    const auto size = static_cast<Integer>(members.size());

    // Complete prefix classes, shortest prefix first.
    for (int p = 1; p < m; ++p) {
        const std::string prefix = members.front().substr(0, static_cast<size_t>(p));
        bool shared = std::all_of(members.begin(), members.end(), [&](const std::string& o) {
            return o.compare(0, static_cast<size_t>(p), prefix) == 0;
        });
        if (shared && size == factorial(static_cast<unsigned>(m - p))) return prefix;
    }
    // Complete suffix classes.
    for (int s = 1; s <= m - 2; ++s) {
        const std::string suffix = members.front().substr(static_cast<size_t>(m - s));
        bool shared = std::all_of(members.begin(), members.end(), [&](const std::string& o) {
            return o.compare(static_cast<size_t>(m - s), std::string::npos, suffix) == 0;
        });
        if (shared && size == factorial(static_cast<unsigned>(m - s))) return "*" + suffix;
    }
    // Fixed first and last candidate.
    {
        char first = members.front().front(), last = members.front().back();
        bool shared = std::all_of(members.begin(), members.end(), [&](const std::string& o) {
            return o.front() == first && o.back() == last;
        });
        if (shared && m >= 4 && size == factorial(static_cast<unsigned>(m - 2)))
            return std::string(1, first) + "*" + std::string(1, last);
    }
    // Fixed first candidate plus the relative order of one pair.
    {
        char first = members.front().front();
        bool shared = std::all_of(members.begin(), members.end(),
                                  [&](const std::string& o) { return o.front() == first; });
        if (shared && size == half_factorial(m - 1)) {
            for (char y = 'a'; y < static_cast<char>('a' + m); ++y) {
                for (char z = 'a'; z < static_cast<char>('a' + m); ++z) {
                    if (y == z || y == first || z == first) continue;
                    bool ordered = std::all_of(members.begin(), members.end(), [&](const std::string& o) {
                        return o.find(y) < o.find(z);
                    });
                    if (ordered)
                        return std::string(1, first) + "." + std::string(1, y) + "." + std::string(1, z);
                }
            }
        }
    }
    return "G" + std::to_string(ordinal);
}

}  // namespace

std::vector<std::string> group_names(const OrderIndexing& indexing, const Grouping& grouping) {
    std::vector<std::string> names;
    names.reserve(grouping.groups.size());
    for (size_t i = 0; i < grouping.groups.size(); ++i)
        names.push_back(name_for_group(indexing, grouping.groups[i], static_cast<int>(i)));
    return names;
}

ReducedSystem reduce(const ConstraintSystem& system, const Grouping& grouping,
                     const OrderIndexing* indexing) {
    // Validate that the grouping is a partition compatible with the columns.
    std::vector<int> owner(static_cast<size_t>(system.d), -1);
    for (size_t g = 0; g < grouping.groups.size(); ++g) {
        const auto& group = grouping.groups[g];
        if (group.empty()) throw InputError("grouping contains an empty group");
        for (int idx : group) {
            if (idx < 0 || idx >= system.d || owner[static_cast<size_t>(idx)] != -1)
                throw InputError("grouping is not a partition of the variable indices");
            owner[static_cast<size_t>(idx)] = static_cast<int>(g);
            for (const auto& row : system.rows)
                if (row.coeffs[static_cast<size_t>(idx)] != row.coeffs[static_cast<size_t>(group.front())])
                    throw InputError("grouping inconsistent with columns");
        }
    }
    if (grouping.total() != system.d)
        throw InputError("grouping is not a partition of the variable indices");

    ReducedSystem reduced;
    reduced.grouping = grouping;
    reduced.base.d = static_cast<int>(grouping.groups.size());
    for (const auto& row : system.rows) {
        ConstraintRow r{{}, row.strict};
        r.coeffs.reserve(grouping.groups.size());
        for (const auto& group : grouping.groups)
            r.coeffs.push_back(row.coeffs[static_cast<size_t>(group.front())]);
        reduced.base.rows.push_back(std::move(r));
    }
    reduced.weight = WeightSpec(grouping.sizes());
    if (indexing != nullptr && indexing->order_count() == system.d) {
        reduced.names = group_names(*indexing, grouping);
    } else {
        for (size_t i = 0; i < grouping.groups.size(); ++i) reduced.names.push_back("G" + std::to_string(i));
    }
    return reduced;
}

ReducedSystem reduce(const ConstraintSystem& system) {
    return reduce(system, group_equal_columns(system));
}

ReducedSystem reduce_event(const ConstraintSystem& system, int m) {
    OrderIndexing indexing(m);
    return reduce(system, group_equal_columns(system), &indexing);
}

ReducedSystem runoff_reduced_system(int m) {
    if (m < 3) throw InputError("runoff reversal needs at least three candidates");
    OrderIndexing indexing(m);
    const int D = 2 * (m - 1);
    ReducedSystem reduced;
    reduced.base.d = D;

    auto row = [&](std::vector<long long> coeffs) {
        reduced.base.rows.push_back({std::move(coeffs), true});
    };
    // Plurality: b beats a.
    {
        std::vector<long long> r(static_cast<size_t>(D), 0);
        r[0] = -1;
        r[1] = 1;
        row(std::move(r));
    }
    // Plurality: a beats each c_i.
    for (int i = 2; i < m; ++i) {
        std::vector<long long> r(static_cast<size_t>(D), 0);
        r[0] = 1;
        r[static_cast<size_t>(2 * i - 2)] = -1;
        r[static_cast<size_t>(2 * i - 1)] = -1;
        row(std::move(r));
    }
    // Pairwise: a beats b.
    {
        std::vector<long long> r(static_cast<size_t>(D), 0);
        r[0] = 1;
        r[1] = -1;
        for (int i = 2; i < m; ++i) {
            r[static_cast<size_t>(2 * i - 2)] = 1;
            r[static_cast<size_t>(2 * i - 1)] = -1;
        }
        row(std::move(r));
    }

    // Variable order: n_a, n_b, then (n for c_i with a over b, n for c_i with
    // b over a) for each remaining candidate c_i alphabetically; this is also
    // the lowest-original-column order the generic reduction produces.
    reduced.grouping.groups.assign(static_cast<size_t>(D), {});
    for (int idx = 0; idx < indexing.order_count(); ++idx) {
        const std::string& order = indexing.order(idx);
        int slot;
        if (order.front() == 'a') slot = 0;
        else if (order.front() == 'b') slot = 1;
        else {
            int c = order.front() - 'a';
            bool a_first = order.find('a') < order.find('b');
            slot = 2 * c - 2 + (a_first ? 0 : 1);
        }
        reduced.grouping.groups[static_cast<size_t>(slot)].push_back(idx);
    }
    reduced.weight = WeightSpec(reduced.grouping.sizes());
    reduced.names = group_names(indexing, reduced.grouping);
    return reduced;
}

}  // namespace iacprob
