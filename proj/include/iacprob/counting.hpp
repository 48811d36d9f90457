#pragma once

#include "iacprob/quasipoly.hpp"
#include "iacprob/reduction.hpp"
#include "iacprob/voting.hpp"

#include <functional>
#include <string>

namespace iacprob {

// Exact number of x in Z^d with x >= 0 componentwise, sum(x) = n, and every
// row satisfied; strict rows a·x > 0 are counted as a·x >= 1, which is
// equivalent over the integers.
Integer count_points(const ConstraintSystem& system, long long n, int threads = 1);

// Sum of the multiplicity weight over the lattice points of the reduced
// sliced system; equals count_points of the unreduced system at the same n.
Integer weighted_count(const ReducedSystem& reduced, long long n, int threads = 1);

// A probability is assembled from two counted events and symmetrization
// multipliers, e.g. the runoff-reversal probability multiplies the
// fixed-labels count by m(m-1) for the choice of the top two candidates.
struct ProbabilityRecipe {
    std::string name = "custom";
    int m = 0;
    ConstraintSystem numerator;
    ConstraintSystem denominator;
    Integer numerator_multiplier = 1;
    Integer denominator_multiplier = 1;
};

// (numerator_multiplier * count_P(n)) / (denominator_multiplier * count_S(n)).
Rational probability(const ProbabilityRecipe& recipe, long long n, bool reduced = true,
                     int threads = 1);

// Fits one polynomial of the given degree per residue class of n modulo
// period, sampling exact counts at degree+1 nodes per class (starting at
// n = period rather than 0), and checks two held-out counts per class;
// a validation mismatch throws FitError ("period too small").
QuasiPolynomial interpolate_quasipolynomial(int degree, int period,
                                            const std::function<Integer(long long)>& sampler);
// Same, sampling the system's counting function via its equal-column reduction.
QuasiPolynomial interpolate_quasipolynomial(const ConstraintSystem& system, int degree, int period,
                                            int threads = 1);

// Tries periods 1, 2, 3, 4, 6, 12, 24 in turn and returns the first fit whose
// validation points match exactly.
QuasiPolynomial fit_quasipolynomial_auto(int degree,
                                         const std::function<Integer(long long)>& sampler);

}  // namespace iacprob
