#pragma once

#include "iacprob/counting.hpp"
#include "iacprob/geometry.hpp"
#include "iacprob/polynomial.hpp"
#include "iacprob/reduction.hpp"

#include <vector>

namespace iacprob {

// c * prod z_i^{e_i}; leading terms of reduction weights carry the
// prod 1/(k_i - 1)! constant in c.
struct Monomial {
    std::vector<unsigned> exponents;
    Rational coefficient = 1;
};

Monomial leading_monomial(const WeightSpec& weight);

// Exact integral of the monomial over the simplex under the drop-coordinate
// lattice normalization.  Decomposes the monomial into powers of affine forms
// and evaluates each with the complete homogeneous symmetric polynomial of
// the form's vertex values.
Rational integrate_monomial_simplex(const Simplex& s, const Monomial& m);
// Reference evaluation: substitute barycentric coordinates, expand with term
// combining, and apply the Dirichlet integral formula per term.
Rational integrate_monomial_simplex_reference(const Simplex& s, const Monomial& m);

// Sum over a triangulation; triangulation-independent.
Rational integrate_monomial_polytope(const Polytope& p, const Monomial& m, int threads = 1);
Rational integrate_monomial_over_simplices(const std::vector<Simplex>& cells, const Monomial& m,
                                           int threads = 1);

// lim_{n->inf} of the recipe's probability: both events are reduced, their
// weight leading terms integrated over their reduced slice polytopes, and the
// multiplier-adjusted ratio taken.  The lattice normalization makes the two
// integrals comparable even when the reductions have different dimensions.
struct LimitResult {
    Rational value;
    Rational numerator_integral;
    Rational denominator_integral;
    ReducedSystem numerator_reduced;
    ReducedSystem denominator_reduced;
};

LimitResult limiting_probability_detailed(const ProbabilityRecipe& recipe, int threads = 1);
Rational limiting_probability(const ProbabilityRecipe& recipe, int threads = 1);

}  // namespace iacprob
