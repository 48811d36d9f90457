#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "iacprob/errors.hpp"
#include "iacprob/integration.hpp"
#include "iacprob/presets.hpp"

#include <random>

using namespace iacprob;

namespace {

Simplex standard_simplex(int D) {
    Simplex s;
    for (int i = 0; i < D; ++i) {
        RatVector pt(static_cast<size_t>(D), Rational(0));
        pt[static_cast<size_t>(D - 1 - i)] = 1;
        s.points.push_back(std::move(pt));
    }
    return s;
}

// A random nondegenerate simplex inside the standard slice simplex, built by
// mixing each standard vertex toward random interior weights.
Simplex random_simplex(int D, std::mt19937& rng) {
    std::uniform_int_distribution<int> dist(1, 9);
    while (true) {
        Simplex s;
        for (int i = 0; i < D; ++i) {
            std::vector<long long> raw(static_cast<size_t>(D));
            long long sum = 0;
            for (auto& r : raw) {
                r = dist(rng);
                sum += r;
            }
            RatVector pt(static_cast<size_t>(D));
            for (int j = 0; j < D; ++j) pt[static_cast<size_t>(j)] = Rational(raw[static_cast<size_t>(j)], sum);
            s.points.push_back(std::move(pt));
        }
        if (simplex_relative_volume(s) != 0) return s;
    }
}

}  // namespace

// Dirichlet integrals over the standard slice simplex:
//   integral of z1*z2 over the 3-simplex slice is 2!*1!*1!/(2+1+1)! = 1/12,
//   integral of z1^2   over the 3-simplex slice is 2!*2!/(2+2)!     = 1/6
// after multiplying by the relative volume 1/2 of the slice: 1/24 and 1/12.
TEST_CASE("monomial integrals over the standard simplex") {
    Simplex s = standard_simplex(3);
    CHECK(integrate_monomial_simplex(s, {{1, 1, 0}, 1}) == Rational(1, 24));
    CHECK(integrate_monomial_simplex(s, {{2, 0, 0}, 1}) == Rational(1, 12));
    CHECK(integrate_monomial_simplex(s, {{0, 0, 0}, 1}) == Rational(1, 2));
    CHECK(integrate_monomial_simplex(s, {{1, 2, 3}, 1}) == Rational(1, 3360));
    CHECK(integrate_monomial_simplex(s, {{1, 1, 0}, {3, 7}}) == Rational(1, 56));
}

TEST_CASE("point simplex integral is the constant") {
    Simplex s = standard_simplex(1);
    CHECK(integrate_monomial_simplex(s, {{4}, {2, 3}}) == Rational(2, 3));
    CHECK(integrate_monomial_simplex(s, {{0}, 1}) == 1);
}

TEST_CASE("affine-form and barycentric evaluations agree") {
    std::mt19937 rng(97);
    for (int D : {3, 4}) {
        for (int trial = 0; trial < 5; ++trial) {
            Simplex s = random_simplex(D, rng);
            std::uniform_int_distribution<unsigned> edist(0, 3);
            Monomial m;
            m.exponents.resize(static_cast<size_t>(D));
            for (auto& e : m.exponents) e = edist(rng);
            m.coefficient = Rational(trial + 1, 5);
            CHECK(integrate_monomial_simplex(s, m) == integrate_monomial_simplex_reference(s, m));
        }
    }
}

TEST_CASE("polytope integral is triangulation independent") {
    ReducedSystem red = reduce_event(event_condorcet_winner(3, 'a'), 3);
    Polytope p = polytope_of(red.base);
    Monomial lead = leading_monomial(red.weight);
    Rational streamed = integrate_monomial_polytope(p, lead);

    VRep v = vertex_enumeration(p);
    std::vector<int> order(v.vertices.size());
    for (size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
    std::mt19937 rng(5);
    for (int trial = 0; trial < 4; ++trial) {
        std::shuffle(order.begin(), order.end(), rng);
        std::vector<Simplex> cells = triangulate_with_order(v, p, order);
        CHECK(integrate_monomial_over_simplices(cells, lead) == streamed);
    }
}

TEST_CASE("integrating over an empty polytope fails") {
    Polytope p;
    p.D = 2;
    p.halfspaces = {{-1, -1}};
    CHECK_THROWS_AS(integrate_monomial_polytope(p, {{1, 0}, 1}), GeometryError);
}

TEST_CASE("orthant leading integral") {
    // The full orthant reduces to one merged variable of size 6: the leading
    // monomial is N^5/5! and the slice is the single point z = 1.
    ReducedSystem red = reduce_event(full_orthant(3), 3);
    Monomial lead = leading_monomial(red.weight);
    CHECK(lead.exponents == std::vector<unsigned>{5});
    CHECK(lead.coefficient == Rational(1, 120));
    CHECK(integrate_monomial_polytope(polytope_of(red.base), lead) == Rational(1, 120));
}

TEST_CASE("limit of the Condorcet winner probability") {
    LimitResult res = limiting_probability_detailed(make_preset("condorcet-winner", 3).recipe);
    CHECK(res.numerator_integral == Rational(1, 384));
    CHECK(res.denominator_integral == Rational(1, 120));
    CHECK(res.value == Rational(5, 16));
    CHECK(res.numerator_reduced.base.d == 4);
    CHECK(res.denominator_reduced.base.d == 1);
}

TEST_CASE("limit of the conditional efficiency violation") {
    EventPreset preset = make_preset("condorcet-efficiency-violation", 3);
    LimitResult res = limiting_probability_detailed(preset.recipe);
    CHECK(res.numerator_integral == Rational(1, 6480));
    CHECK(res.denominator_integral == Rational(1, 384));
    CHECK(res.value == Rational(16, 135));
    CHECK(preset.derived[0].apply(res.value) == Rational(119, 135));
}

TEST_CASE("limit of the runoff reversal probability") {
    LimitResult res = limiting_probability_detailed(make_preset("runoff-reversal", 3).recipe);
    CHECK(res.numerator_integral == Rational(71, 414720));
    CHECK(res.denominator_integral == Rational(1, 120));
    CHECK(res.value == Rational(71, 576));
}

// The limit can also be computed without any reduction: the ratio of the two
// unreduced slice volumes.  This checks the lattice normalization across the
// reduced and unreduced formulations.
TEST_CASE("reduced limit agrees with the unreduced volume ratio") {
    Rational cw = relative_volume(polytope_of(event_condorcet_winner(3, 'a')));
    Rational all = relative_volume(polytope_of(full_orthant(3)));
    CHECK(cw / all == Rational(5, 16));
    CHECK(limiting_probability(make_preset("condorcet-winner", 3).recipe) == cw / all);
}

// In one fixed ambient dimension, the lattice volume is exactly the leading
// Ehrhart coefficient, so the volume ratio must equal the ratio of fitted
// leading coefficients.
TEST_CASE("volume ratio equals the quasi-polynomial leading coefficient ratio") {
    ConstraintSystem cw = event_condorcet_winner(3, 'a');
    Rational vol_cw = relative_volume(polytope_of(cw));
    Rational vol_all = relative_volume(polytope_of(full_orthant(3)));
    QuasiPolynomial q_cw = interpolate_quasipolynomial(cw, 5, 2);
    QuasiPolynomial q_all = interpolate_quasipolynomial(full_orthant(3), 5, 1);
    CHECK(vol_cw / vol_all == q_cw.leading_coefficient(0) / q_all.leading_coefficient(0));
    CHECK(vol_cw == q_cw.leading_coefficient(0));
}

TEST_CASE("finite-n probabilities approach the limit") {
    for (const char* name : {"condorcet-winner", "condorcet-efficiency-violation",
                             "runoff-reversal"}) {
        EventPreset preset = make_preset(name, 3);
        Rational limit = limiting_probability(preset.recipe);
        Rational err60 = probability(preset.recipe, 60) - limit;
        Rational err120 = probability(preset.recipe, 120) - limit;
        if (err60 < 0) err60 = -err60;
        if (err120 < 0) err120 = -err120;
        CHECK(err120 < err60);
        CHECK(err60 < Rational(1, 25));  // already close at n = 60
    }
}

// Both four-candidate Condorcet integrals, frozen: the numerator over the
// 8-variable reduced polytope and the denominator over the single merged
// orthant variable (1/23! in the lattice normalization).
TEST_CASE("four candidate Condorcet limit details") {
    LimitResult res = limiting_probability_detailed(make_preset("condorcet-winner", 4).recipe);
    CHECK(res.numerator_reduced.base.d == 8);
    CHECK(res.denominator_reduced.base.d == 1);
    CHECK(res.numerator_integral ==
          parse_rational("101/12457630654408572272640000"));
    CHECK(res.denominator_integral == Rational(1, factorial(23)));
    CHECK(res.value * 4 == Rational(1717, 2048));
}

TEST_CASE("an impossible event has limit zero") {
    // a beats b and b beats a cannot both hold: numerator polytope is
    // lower-dimensional, so its leading integral vanishes.
    ConstraintSystem sys = full_orthant(3);
    sys.rows.push_back({pairwise_row(OrderIndexing(3), 'a', 'b'), true});
    sys.rows.push_back({pairwise_row(OrderIndexing(3), 'b', 'a'), true});
    EventPreset preset = make_custom(sys);
    CHECK(limiting_probability(preset.recipe) == 0);
}
