#include "iacprob/counting.hpp"

#include "iacprob/errors.hpp"
#include "iacprob/linalg.hpp"
#include "iacprob/parallel.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace iacprob {

namespace {

// Enumeration-ready form of a (possibly weighted) sliced system.
struct Prepared {
    int D = 0;
    std::vector<int> k;                           // group size per variable (1 = unweighted)
    std::vector<std::vector<long long>> columns;  // per variable: coefficient in each row
    std::vector<long long> rhs;                   // strict rows become >= 1
    // Per suffix level: extreme coefficients over the remaining variables and
    // the total group size of the remaining variables.
    std::vector<std::vector<long long>> suffix_max, suffix_min;
    std::vector<long long> suffix_k;
};

Prepared prepare(const ConstraintSystem& base, const std::vector<int>& sizes, long long n) {
    Prepared prep;
    prep.D = base.d;
    prep.k = sizes;
    const size_t R = base.rows.size();
    prep.rhs.reserve(R);
    for (const auto& row : base.rows) prep.rhs.push_back(row.strict ? 1 : 0);

    // Enumerate heavy variables first: order by descending sum of absolute
    // coefficients so prunes fire early.
    std::vector<int> order(static_cast<size_t>(base.d));
    std::iota(order.begin(), order.end(), 0);
    std::vector<long long> load(static_cast<size_t>(base.d), 0);
    for (const auto& row : base.rows)
        for (int j = 0; j < base.d; ++j) load[static_cast<size_t>(j)] += std::abs(row.coeffs[static_cast<size_t>(j)]);
    std::stable_sort(order.begin(), order.end(),
                     [&](int a, int b) { return load[static_cast<size_t>(a)] > load[static_cast<size_t>(b)]; });

    prep.columns.resize(static_cast<size_t>(base.d));
    std::vector<int> reordered_k(static_cast<size_t>(base.d));
    for (int pos = 0; pos < base.d; ++pos) {
        int j = order[static_cast<size_t>(pos)];
        auto& col = prep.columns[static_cast<size_t>(pos)];
        col.reserve(R);
        for (const auto& row : base.rows) col.push_back(row.coeffs[static_cast<size_t>(j)]);
        reordered_k[static_cast<size_t>(pos)] = sizes[static_cast<size_t>(j)];
    }
    prep.k = std::move(reordered_k);

    prep.suffix_max.assign(static_cast<size_t>(base.d) + 1, std::vector<long long>(R, 0));
    prep.suffix_min.assign(static_cast<size_t>(base.d) + 1, std::vector<long long>(R, 0));
    prep.suffix_k.assign(static_cast<size_t>(base.d) + 1, 0);
    for (int lvl = base.d - 1; lvl >= 0; --lvl) {
        prep.suffix_k[static_cast<size_t>(lvl)] =
            prep.suffix_k[static_cast<size_t>(lvl) + 1] + prep.k[static_cast<size_t>(lvl)];
        for (size_t r = 0; r < R; ++r) {
            long long c = prep.columns[static_cast<size_t>(lvl)][r];
            if (lvl == base.d - 1) {
                prep.suffix_max[static_cast<size_t>(lvl)][r] = c;
                prep.suffix_min[static_cast<size_t>(lvl)][r] = c;
            } else {
                prep.suffix_max[static_cast<size_t>(lvl)][r] =
                    std::max(c, prep.suffix_max[static_cast<size_t>(lvl) + 1][r]);
                prep.suffix_min[static_cast<size_t>(lvl)][r] =
                    std::min(c, prep.suffix_min[static_cast<size_t>(lvl) + 1][r]);
            }
        }
    }
    (void)n;
    return prep;
}

// Binomial tables: weights[lvl][N] = binom(N + k - 1, k - 1) for the variable
// at lvl, and completions[lvl][R] = number of weighted ways to distribute R
// over the variables from lvl on, i.e. binom(R + K - 1, K - 1) with K the
// remaining group total.
struct Tables {
    std::vector<std::vector<Integer>> weights;
    std::vector<std::vector<Integer>> completions;
};

Tables build_tables(const Prepared& prep, long long n) {
    Tables t;
    t.weights.resize(static_cast<size_t>(prep.D));
    t.completions.resize(static_cast<size_t>(prep.D) + 1);
    for (int lvl = 0; lvl < prep.D; ++lvl) {
        int k = prep.k[static_cast<size_t>(lvl)];
        auto& w = t.weights[static_cast<size_t>(lvl)];
        w.resize(static_cast<size_t>(n) + 1);
        for (long long N = 0; N <= n; ++N)
            w[static_cast<size_t>(N)] = k == 1 ? Integer(1) : binomial(Integer(N + k - 1), static_cast<unsigned>(k - 1));
    }
    for (int lvl = 0; lvl <= prep.D; ++lvl) {
        long long K = prep.suffix_k[static_cast<size_t>(lvl)];
        auto& c = t.completions[static_cast<size_t>(lvl)];
        c.resize(static_cast<size_t>(n) + 1);
        for (long long R = 0; R <= n; ++R)
            c[static_cast<size_t>(R)] = K == 0 ? Integer(R == 0 ? 1 : 0)
                                               : binomial(Integer(R + K - 1), static_cast<unsigned>(K - 1));
    }
    return t;
}

void recurse(const Prepared& prep, const Tables& tables, int lvl, long long remaining,
             std::vector<long long>& sums, const Integer& prefix_weight, Integer& total) {
    const size_t R = prep.rhs.size();
    // Prune rows that cannot be satisfied and detect when every completion works.
    bool all_guaranteed = true;
    for (size_t r = 0; r < R; ++r) {
        long long best = sums[r], worst = sums[r];
        if (remaining > 0 && lvl < prep.D) {
            best += remaining * prep.suffix_max[static_cast<size_t>(lvl)][r];
            worst += remaining * prep.suffix_min[static_cast<size_t>(lvl)][r];
        }
        if (best < prep.rhs[r]) return;
        if (worst < prep.rhs[r]) all_guaranteed = false;
    }
    if (all_guaranteed) {
        total += prefix_weight * tables.completions[static_cast<size_t>(lvl)][static_cast<size_t>(remaining)];
        return;
    }
    // all_guaranteed is always true at lvl == D with remaining == 0, and the
    // prune above rejects unsatisfiable leaves, so lvl < D here.
    const auto& column = prep.columns[static_cast<size_t>(lvl)];
    const auto& weights = tables.weights[static_cast<size_t>(lvl)];
    for (long long N = 0; N <= remaining; ++N) {
        if (N > 0)
            for (size_t r = 0; r < R; ++r) sums[r] += column[r];
        recurse(prep, tables, lvl + 1, remaining - N, sums,
                prep.k[static_cast<size_t>(lvl)] == 1 ? prefix_weight : prefix_weight * weights[static_cast<size_t>(N)],
                total);
    }
    for (size_t r = 0; r < R; ++r) sums[r] -= remaining * column[r];
}

Integer counted_sum(const ConstraintSystem& base, const std::vector<int>& sizes, long long n,
                    int threads) {
    if (n < 0) throw InputError("voter count n must be nonnegative");
    if (base.d == 0) return Integer(n == 0 ? 1 : 0);
    for (const auto& row : base.rows)
        if (static_cast<int>(row.coeffs.size()) != base.d)
            throw InputError("constraint row arity mismatch");
    Prepared prep = prepare(base, sizes, n);
    Tables tables = build_tables(prep, n);

    int workers = std::min<long long>(resolve_threads(threads), n + 1);
    auto count_range = [&](long long first, long long last) {
        // Values [first, last] of the outermost enumeration variable.
        Integer partial = 0;
        std::vector<long long> sums(prep.rhs.size(), 0);
        const auto& column = prep.columns[0];
        const auto& weights = tables.weights[0];
        for (long long N = first; N <= last; ++N) {
            for (size_t r = 0; r < prep.rhs.size(); ++r) sums[r] = N * column[r];
            recurse(prep, tables, 1, n - N, sums, weights[static_cast<size_t>(N)], partial);
        }
        return partial;
    };
    if (workers <= 1 || prep.D == 1) {
        Integer total = 0;
        std::vector<long long> sums(prep.rhs.size(), 0);
        recurse(prep, tables, 0, n, sums, Integer(1), total);
        return total;
    }
    std::vector<std::pair<long long, long long>> chunks;
    long long per = (n + 1) / workers, extra = (n + 1) % workers, begin = 0;
    for (int w = 0; w < workers; ++w) {
        long long len = per + (w < extra ? 1 : 0);
        chunks.emplace_back(begin, begin + len - 1);
        begin += len;
    }
    auto partials = parallel_map<Integer>(chunks.size(), workers, [&](size_t i) {
        return count_range(chunks[i].first, chunks[i].second);
    });
    Integer total = 0;
    for (const auto& p : partials) total += p;
    return total;
}

}  // namespace

Integer count_points(const ConstraintSystem& system, long long n, int threads) {
    return counted_sum(system, std::vector<int>(static_cast<size_t>(system.d), 1), n, threads);
}

Integer weighted_count(const ReducedSystem& reduced, long long n, int threads) {
    return counted_sum(reduced.base, reduced.weight.sizes(), n, threads);
}

Rational probability(const ProbabilityRecipe& recipe, long long n, bool reduced, int threads) {
    Integer num, den;
    if (reduced) {
        num = weighted_count(reduce(recipe.numerator), n, threads);
        den = weighted_count(reduce(recipe.denominator), n, threads);
    } else {
        num = count_points(recipe.numerator, n, threads);
        den = count_points(recipe.denominator, n, threads);
    }
    den *= recipe.denominator_multiplier;
    if (den == 0) throw InputError("probability undefined at this n (zero denominator count)");
    return Rational(recipe.numerator_multiplier * num, den);
}

QuasiPolynomial interpolate_quasipolynomial(int degree, int period,
                                            const std::function<Integer(long long)>& sampler) {
    if (degree < 0) throw InputError("quasi-polynomial degree must be >= 0");
    if (period < 1) throw InputError("quasi-polynomial period must be >= 1");
    QuasiPolynomial q(period, degree);
    for (int r = 0; r < period; ++r) {
        long long base = r == 0 ? period : r;  // sample points start at n = period, never 0
        std::vector<long long> nodes;
        for (int j = 0; j <= degree; ++j) nodes.push_back(base + static_cast<long long>(j) * period);

        RatMatrix A(nodes.size(), RatVector(static_cast<size_t>(degree) + 1));
        RatVector b(nodes.size());
        for (size_t row = 0; row < nodes.size(); ++row) {
            Rational power = 1;
            for (int t = 0; t <= degree; ++t) {
                A[row][static_cast<size_t>(t)] = power;
                power *= Rational(nodes[row]);
            }
            b[row] = Rational(sampler(nodes[row]));
        }
        auto coeffs = solve_linear_system(A, b);
        if (!coeffs) throw FitError("rank-deficient interpolation system (repeated sample points?)");
        for (int t = 0; t <= degree; ++t) q.set_coeff(r, t, (*coeffs)[static_cast<size_t>(t)]);

        for (int extra = 1; extra <= 2; ++extra) {
            long long n = base + static_cast<long long>(degree + extra) * period;
            Rational predicted = q.eval(Integer(n));
            Integer actual = sampler(n);
            if (predicted != Rational(actual))
                throw FitError("period too small: fitted value disagrees with the count at n = " +
                               std::to_string(n));
        }
    }
    return q;
}

QuasiPolynomial interpolate_quasipolynomial(const ConstraintSystem& system, int degree, int period,
                                            int threads) {
    ReducedSystem reduced = reduce(system);
    return interpolate_quasipolynomial(
        degree, period, [&](long long n) { return weighted_count(reduced, n, threads); });
}

QuasiPolynomial fit_quasipolynomial_auto(int degree,
                                         const std::function<Integer(long long)>& sampler) {
    std::map<long long, Integer> cache;  // trial periods revisit the same n
    auto cached = [&](long long n) {
        auto it = cache.find(n);
        if (it == cache.end()) it = cache.emplace(n, sampler(n)).first;
        return it->second;
    };
    for (int period : {1, 2, 3, 4, 6, 12, 24}) {
        try {
            return interpolate_quasipolynomial(degree, period, cached);
        } catch (const FitError&) {
            // try the next period
        }
    }
    throw FitError("no trial period up to 24 validates; supply --period explicitly");
}

}  // namespace iacprob
