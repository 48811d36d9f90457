#include "iacprob/integration.hpp"

#include "iacprob/errors.hpp"
#include "iacprob/parallel.hpp"

#include <algorithm>

namespace iacprob {

namespace {

unsigned total_degree(const std::vector<unsigned>& exponents) {
    unsigned d = 0;
    for (unsigned e : exponents) d += e;
    return d;
}

void check_simplex(const Simplex& s, const Monomial& m) {
    if (s.points.empty()) throw GeometryError("empty simplex");
    const size_t D = s.points[0].size();
    if (s.points.size() != D) throw GeometryError("a slice simplex needs exactly D points");
    for (const auto& pt : s.points)
        if (pt.size() != D) throw GeometryError("simplex points have mixed dimensions");
    if (m.exponents.size() != D) throw InputError("monomial arity does not match the simplex");
}

}  // namespace

Monomial leading_monomial(const WeightSpec& weight) {
    Monomial m;
    m.coefficient = 1;
    for (int k : weight.sizes()) {
        m.exponents.push_back(static_cast<unsigned>(k - 1));
        m.coefficient /= Rational(factorial(static_cast<unsigned>(k - 1)));
    }
    return m;
}

Rational integrate_monomial_simplex(const Simplex& s, const Monomial& m) {
    check_simplex(s, m);
    const size_t D = s.points.size();
    const unsigned M = total_degree(m.exponents);
    Rational relvol = simplex_relative_volume(s);
    if (M == 0 || relvol == 0) return m.coefficient * relvol;

    // Scale the vertices to integers: with w_j = L * q_j every affine-form
    // value below is an integer, and one division by L^M at the end undoes it.
    Integer L = 1;
    for (const auto& pt : s.points)
        for (const auto& coord : pt) L = lcm(L, denominator(coord));
    std::vector<std::vector<Integer>> w(D);
    std::vector<size_t> support;
    for (size_t i = 0; i < D; ++i)
        if (m.exponents[i] > 0) support.push_back(i);
    for (size_t j = 0; j < D; ++j) {
        w[j].resize(support.size());
        for (size_t si = 0; si < support.size(); ++si) {
            Rational scaled = Rational(L) * s.points[j][support[si]];
            w[j][si] = numerator(scaled);  // exact: L clears every denominator
        }
    }

    // prod z_i^{e_i} = (1/M!) sum_{0 <= p <= e, p != 0} (-1)^{M-|p|}
    //                  prod binom(e_i, p_i) * (p·z)^M, and each power of an
    //                  affine form integrates to
    //                  relvol * (D-1)! * M! / (M+D-1)! * h_M(p·q_1,...,p·q_D).
    std::vector<unsigned> p(support.size(), 0);
    std::vector<Integer> h(M + 1);
    std::vector<Integer> values(D);
    Integer accumulated = 0;
    while (true) {
        // next multi-index 0 <= p <= e over the support (odometer)
        size_t pos = 0;
        while (pos < support.size() && p[pos] == m.exponents[support[pos]]) {
            p[pos] = 0;
            ++pos;
        }
        if (pos == support.size()) break;
        ++p[pos];

        unsigned weight = 0;
        Integer binprod = 1;
        for (size_t si = 0; si < support.size(); ++si) {
            weight += p[si];
            if (p[si] > 0) binprod *= binomial(Integer(m.exponents[support[si]]), p[si]);
        }
        for (size_t j = 0; j < D; ++j) {
            Integer v = 0;
            for (size_t si = 0; si < support.size(); ++si)
                if (p[si] > 0) v += Integer(p[si]) * w[j][si];
            values[j] = std::move(v);
        }
        // Complete homogeneous symmetric polynomial h_M of the vertex values:
        // absorb one value at a time via h_new[t] = h_old[t] + b * h_new[t-1].
        std::fill(h.begin(), h.end(), Integer(0));
        h[0] = 1;
        for (size_t j = 0; j < D; ++j) {
            const Integer& b = values[j];
            if (b == 0) continue;
            for (unsigned t = 1; t <= M; ++t) h[t] += b * h[t - 1];
        }
        if ((M - weight) % 2 == 0) accumulated += binprod * h[M];
        else accumulated -= binprod * h[M];
    }

    Integer scale = 1;
    for (unsigned t = 0; t < M; ++t) scale *= L;
    Rational result = relvol * Rational(factorial(static_cast<unsigned>(D - 1)));
    result /= Rational(factorial(M + static_cast<unsigned>(D) - 1));
    result *= Rational(accumulated, scale);
    return m.coefficient * result;
}

Rational integrate_monomial_simplex_reference(const Simplex& s, const Monomial& m) {
    check_simplex(s, m);
    const int D = static_cast<int>(s.points.size());
    const unsigned M = total_degree(m.exponents);
    Rational relvol = simplex_relative_volume(s);
    if (M == 0 || relvol == 0) return m.coefficient * relvol;

    // Substitute z = sum_j lambda_j q_j and expand into a polynomial in the
    // barycentric coordinates, combining terms as we multiply.
    SparsePolynomial expanded = SparsePolynomial::constant(D, Rational(1));
    for (int i = 0; i < D; ++i) {
        if (m.exponents[static_cast<size_t>(i)] == 0) continue;
        SparsePolynomial form(D);
        for (int j = 0; j < D; ++j)
            form += SparsePolynomial::variable(D, j) * s.points[static_cast<size_t>(j)][static_cast<size_t>(i)];
        expanded = expanded * form.pow(m.exponents[static_cast<size_t>(i)]);
    }
    // Dirichlet: the normalized integral of prod lambda_j^{t_j} equals
    // relvol * (D-1)! * prod t_j! / (M+D-1)!.
    Rational sum = 0;
    for (const auto& [exps, coeff] : expanded.terms()) {
        Rational term = coeff;
        for (unsigned t : exps) term *= Rational(factorial(t));
        sum += term;
    }
    sum *= relvol * Rational(factorial(static_cast<unsigned>(D - 1)));
    sum /= Rational(factorial(M + static_cast<unsigned>(D) - 1));
    return m.coefficient * sum;
}

Rational integrate_monomial_over_simplices(const std::vector<Simplex>& cells, const Monomial& m,
                                           int threads) {
    auto parts = parallel_map<Rational>(cells.size(), threads, [&](size_t i) {
        Monomial bare{m.exponents, Rational(1)};
        return integrate_monomial_simplex(cells[i], bare);
    });
    Rational total = 0;
    for (const auto& part : parts) total += part;
    return m.coefficient * total;
}

Rational integrate_monomial_polytope(const Polytope& p, const Monomial& m, int threads) {
    if (static_cast<int>(m.exponents.size()) != p.D)
        throw InputError("monomial arity does not match the polytope");
    VRep v = vertex_enumeration(p, threads);
    if (v.empty()) throw GeometryError("cannot integrate over an empty polytope");

    const size_t D = static_cast<size_t>(p.D);
    const size_t n = D - 1;
    const unsigned M = total_degree(m.exponents);
    const size_t count = v.vertices.size();

    // Everything that does not depend on the cell is prepared once: projected
    // points for the volume determinant, one global integer scale L, and the
    // L-scaled vertex coordinates restricted to the monomial's support.
    std::vector<RatVector> pts(count);
    for (size_t i = 0; i < count; ++i)
        pts[i] = RatVector(v.vertices[i].begin(), v.vertices[i].end() - 1);

    std::vector<size_t> support;
    for (size_t i = 0; i < D; ++i)
        if (m.exponents[i] > 0) support.push_back(i);
    const size_t S = support.size();

    Integer L = 1;
    for (const auto& vertex : v.vertices)
        for (size_t si = 0; si < S; ++si) L = lcm(L, denominator(vertex[support[si]]));
    // w[i][si] = L * q_i[support[si]], an exact integer.
    std::vector<std::vector<Integer>> w(count, std::vector<Integer>(S));
    // pre[i][si] = sum_{t < si} e_t * w[i][t]: subtracted when the odometer
    // rolls positions 0..si-1 from e back to 0.
    std::vector<std::vector<Integer>> pre(count, std::vector<Integer>(S + 1));
    for (size_t i = 0; i < count; ++i) {
        pre[i][0] = 0;
        for (size_t si = 0; si < S; ++si) {
            w[i][si] = numerator(Rational(L) * v.vertices[i][support[si]]);
            pre[i][si + 1] = pre[i][si] + Integer(m.exponents[support[si]]) * w[i][si];
        }
    }
    std::vector<unsigned> degree_prefix(S + 1, 0);
    for (size_t si = 0; si < S; ++si)
        degree_prefix[si + 1] = degree_prefix[si] + m.exponents[support[si]];
    std::vector<std::vector<Integer>> binom_table(S);
    for (size_t si = 0; si < S; ++si) {
        unsigned e = m.exponents[support[si]];
        binom_table[si].resize(e + 1);
        for (unsigned t = 0; t <= e; ++t) binom_table[si][t] = binomial(Integer(e), t);
    }

    std::vector<int> order(count);
    for (size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);

    // Per-cell workspaces, reused across the stream.
    RatMatrix diff(n, RatVector(n));
    std::vector<unsigned> pvec(S, 0);
    std::vector<Integer> values(D), h(M + 1);
    Rational total = 0;

    triangulate_index_stream(v, p, order, [&](const std::vector<int>& cell) {
        const RatVector& first = pts[static_cast<size_t>(cell[0])];
        for (size_t i = 1; i < D; ++i)
            for (size_t j = 0; j < n; ++j)
                diff[i - 1][j] = pts[static_cast<size_t>(cell[i])][j] - first[j];
        Rational det = determinant(diff);
        if (det < 0) det = -det;
        if (M == 0) {
            total += det;
            return;
        }

        // prod z_i^{e_i} = (1/M!) sum_{0 <= p <= e, p != 0} (-1)^{M-|p|}
        //                  prod binom(e_i, p_i) * (p·z)^M; each power of an
        //                  affine form integrates via the complete homogeneous
        //                  symmetric polynomial h_M of its vertex values.
        std::fill(pvec.begin(), pvec.end(), 0);
        for (size_t j = 0; j < D; ++j) values[j] = 0;
        unsigned weight = 0;
        Integer accumulated = 0;
        while (true) {
            size_t pos = 0;
            while (pos < S && pvec[pos] == m.exponents[support[pos]]) {
                pvec[pos] = 0;
                ++pos;
            }
            if (pos == S) break;
            ++pvec[pos];
            weight += 1 - degree_prefix[pos];
            for (size_t j = 0; j < D; ++j) {
                const auto& row = w[static_cast<size_t>(cell[j])];
                values[j] += row[pos] - pre[static_cast<size_t>(cell[j])][pos];
            }

            Integer binprod = 1;
            for (size_t si = 0; si < S; ++si)
                if (pvec[si] > 0) binprod *= binom_table[si][pvec[si]];

            std::fill(h.begin(), h.end(), Integer(0));
            h[0] = 1;
            for (size_t j = 0; j < D; ++j) {
                const Integer& b = values[j];
                if (b == 0) continue;
                for (unsigned t = 1; t <= M; ++t) h[t] += b * h[t - 1];
            }
            if ((M - weight) % 2 == 0) accumulated += binprod * h[M];
            else accumulated -= binprod * h[M];
        }
        total += det * Rational(accumulated);
    });

    // Per cell the integral is c * |det|/(D-1)! * (D-1)!/(M+D-1)! * S/L^M; the
    // (D-1)! cancels, so one global factor finishes the sum.
    Integer scale = factorial(M + static_cast<unsigned>(D) - 1);
    if (M > 0)
        for (unsigned t = 0; t < M; ++t) scale *= L;
    else
        scale = factorial(static_cast<unsigned>(D) - 1);
    return m.coefficient * total / Rational(scale);
}

LimitResult limiting_probability_detailed(const ProbabilityRecipe& recipe, int threads) {
    LimitResult result;
    auto reduce_side = [&](const ConstraintSystem& system) {
        return recipe.m >= 2 ? reduce_event(system, recipe.m) : reduce(system);
    };
    result.numerator_reduced = reduce_side(recipe.numerator);
    result.denominator_reduced = reduce_side(recipe.denominator);

    auto side_integral = [&](const ReducedSystem& reduced, bool numerator) {
        Polytope poly = polytope_of(reduced.base);
        Monomial mono = leading_monomial(reduced.weight);
        try {
            return integrate_monomial_polytope(poly, mono, threads);
        } catch (const GeometryError&) {
            // An empty or lower-dimensional event contributes no volume; for
            // the numerator the limit is simply 0.
            if (numerator) return Rational(0);
            throw;
        }
    };
    result.numerator_integral = side_integral(result.numerator_reduced, true);
    result.denominator_integral = side_integral(result.denominator_reduced, false);
    if (result.denominator_integral == 0) throw GeometryError("zero denominator integral");
    result.value = Rational(recipe.numerator_multiplier) * result.numerator_integral /
                   (Rational(recipe.denominator_multiplier) * result.denominator_integral);
    return result;
}

Rational limiting_probability(const ProbabilityRecipe& recipe, int threads) {
    return limiting_probability_detailed(recipe, threads).value;
}

}  // namespace iacprob
