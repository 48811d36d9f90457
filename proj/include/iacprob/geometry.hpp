#pragma once

#include "iacprob/linalg.hpp"
#include "iacprob/voting.hpp"

#include <functional>
#include <vector>

namespace iacprob {

// The closed slice { z >= 0, a·z >= 0 for every halfspace, sum(z) = 1 } of a
// constraint system's cone.  Strict rows are closed here: boundaries carry no
// volume and do not affect integrals.
struct Polytope {
    int D = 0;
    std::vector<std::vector<long long>> halfspaces;
};

Polytope polytope_of(const ConstraintSystem& system);

struct VRep {
    std::vector<RatVector> vertices;  // ascending lexicographic order
    bool empty() const { return vertices.empty(); }
};

// D affinely independent points spanning a full-dimensional cell of the slice.
struct Simplex {
    std::vector<RatVector> points;
};

// Exact vertex set by constraint-subset solving: each vertex is the unique
// solution of D-1 constraints (halfspaces or nonnegativity) at equality plus
// the slice equation, feasible for all constraints.
VRep vertex_enumeration(const Polytope& p, int threads = 1);

// Streaming core of the placing triangulation: emits each cell as a sorted
// vector of vertex indices into v and keeps only the current hull boundary in
// memory, so arbitrarily large triangulations run in bounded space.
void triangulate_index_stream(const VRep& v, const Polytope& p, const std::vector<int>& order,
                              const std::function<void(const std::vector<int>&)>& emit);

// Placing (incremental) triangulation; vertices are inserted in their
// lexicographic order.  Simplices have pairwise disjoint interiors and their
// union is the polytope.
std::vector<Simplex> triangulate(const VRep& v, const Polytope& p);
// Same with an explicit insertion order (a permutation of vertex indices);
// every order yields the same total volume and integrals.
std::vector<Simplex> triangulate_with_order(const VRep& v, const Polytope& p,
                                            const std::vector<int>& order);

// Volume in the lattice normalization: drop the last coordinate (an affine
// bijection of the slice onto R^{D-1} mapping lattice to lattice) and take
// the standard (D-1)-volume there.  A single point (D = 1) has volume 1.
Rational simplex_relative_volume(const Simplex& s);
// 0 for empty or lower-dimensional input.
Rational relative_volume(const Polytope& p, int threads = 1);

}  // namespace iacprob
