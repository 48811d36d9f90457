#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "iacprob/errors.hpp"
#include "iacprob/geometry.hpp"
#include "iacprob/reduction.hpp"
#include "iacprob/voting.hpp"

#include <algorithm>
#include <random>

using namespace iacprob;

namespace {

Polytope orthant(int D) {
    Polytope p;
    p.D = D;
    return p;
}

RatVector vec(std::vector<Rational> values) { return values; }

Rational triangulated_volume(const Polytope& p, const std::vector<int>& order) {
    VRep v = vertex_enumeration(p);
    Rational total = 0;
    for (const Simplex& s : triangulate_with_order(v, p, order)) {
        total += simplex_relative_volume(s);
    }
    return total;
}

}  // namespace

TEST_CASE("unit simplex vertices are the standard basis") {
    VRep v = vertex_enumeration(orthant(3));
    REQUIRE(v.vertices.size() == 3);
    CHECK(v.vertices[0] == vec({0, 0, 1}));
    CHECK(v.vertices[1] == vec({0, 1, 0}));
    CHECK(v.vertices[2] == vec({1, 0, 0}));
}

TEST_CASE("halved segment") {
    // x1 >= x2 on the slice x1 + x2 = 1.
    Polytope p;
    p.D = 2;
    p.halfspaces = {{1, -1}};
    VRep v = vertex_enumeration(p);
    REQUIRE(v.vertices.size() == 2);
    CHECK(v.vertices[0] == vec({{1, 2}, {1, 2}}));
    CHECK(v.vertices[1] == vec({1, 0}));
    CHECK(relative_volume(p) == Rational(1, 2));
}

TEST_CASE("orthant slice volumes") {
    CHECK(relative_volume(orthant(1)) == 1);
    CHECK(relative_volume(orthant(2)) == 1);
    CHECK(relative_volume(orthant(3)) == Rational(1, 2));
    CHECK(relative_volume(orthant(4)) == Rational(1, 6));
    CHECK(relative_volume(orthant(5)) == Rational(1, 24));
    CHECK(relative_volume(orthant(6)) == Rational(1, 120));
}

TEST_CASE("single point slice") {
    Polytope p = orthant(1);
    VRep v = vertex_enumeration(p);
    REQUIRE(v.vertices.size() == 1);
    CHECK(v.vertices[0] == vec({1}));
    std::vector<Simplex> tri = triangulate(v, p);
    REQUIRE(tri.size() == 1);
    CHECK(simplex_relative_volume(tri[0]) == 1);
}

TEST_CASE("simplex volume formula") {
    Simplex s;
    s.points = {vec({0, 0, 1}), vec({0, 1, 0}), vec({1, 0, 0})};
    CHECK(simplex_relative_volume(s) == Rational(1, 2));
    s.points = {vec({0, 0, 1}), vec({0, {1, 3}, {2, 3}}), vec({{1, 2}, 0, {1, 2}})};
    CHECK(simplex_relative_volume(s) == Rational(1, 12));
    Simplex bad;
    bad.points = {vec({0, 0, 1}), vec({0, 1, 0})};
    CHECK_THROWS_AS(simplex_relative_volume(bad), GeometryError);
}

// The reduced Condorcet polytope (a beats b and c under the merged columns).
TEST_CASE("reduced Condorcet polytope geometry") {
    ReducedSystem red = reduce_event(event_condorcet_winner(3, 'a'), 3);
    Polytope p = polytope_of(red.base);
    VRep v = vertex_enumeration(p);
    REQUIRE(v.vertices.size() == 5);
    CHECK(v.vertices[0] == vec({0, {1, 2}, 0, {1, 2}}));
    CHECK(v.vertices[1] == vec({{1, 2}, 0, 0, {1, 2}}));
    CHECK(v.vertices[2] == vec({{1, 2}, 0, {1, 2}, 0}));
    CHECK(v.vertices[3] == vec({{1, 2}, {1, 2}, 0, 0}));
    CHECK(v.vertices[4] == vec({1, 0, 0, 0}));
    CHECK(relative_volume(p) == Rational(1, 24));
}

TEST_CASE("unreduced Condorcet polytope geometry") {
    Polytope p = polytope_of(event_condorcet_winner(3, 'a'));
    VRep v = vertex_enumeration(p);
    CHECK(v.vertices.size() == 11);
    CHECK(relative_volume(p) == Rational(1, 384));
}

TEST_CASE("triangulation covers the polytope once") {
    ReducedSystem red = reduce_event(event_runoff_reversal(3), 3);
    Polytope p = polytope_of(red.base);
    VRep v = vertex_enumeration(p);
    std::vector<Simplex> tri = triangulate(v, p);
    Rational total = 0;
    for (const Simplex& s : tri) {
        REQUIRE(s.points.size() == static_cast<size_t>(p.D));
        total += simplex_relative_volume(s);
    }
    CHECK(total == relative_volume(p));
}

TEST_CASE("insertion order does not change the total volume") {
    std::vector<Polytope> cases = {
        polytope_of(event_condorcet_winner(3, 'a')),
        polytope_of(reduce_event(event_condorcet_efficiency_violation(3, 'a', 'b'), 3).base),
        polytope_of(reduce_event(event_runoff_reversal(4), 4).base),
    };
    std::mt19937 rng(20260814);
    for (const Polytope& p : cases) {
        VRep v = vertex_enumeration(p);
        std::vector<int> order(v.vertices.size());
        for (size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
        Rational reference = triangulated_volume(p, order);
        CHECK(reference == relative_volume(p));
        for (int trial = 0; trial < 4; ++trial) {
            std::shuffle(order.begin(), order.end(), rng);
            CHECK(triangulated_volume(p, order) == reference);
        }
    }
}

// Capping the triangle { z1, z2 >= 0, z1 + z2 <= 1 } at z1 <= 1/2 and
// z2 <= 1/2 yields the square [0,1/2]^2, which splits into two triangles.
TEST_CASE("square cross-section") {
    Polytope p;
    p.D = 3;
    p.halfspaces = {{-1, 1, 1}, {1, -1, 1}};
    VRep v = vertex_enumeration(p);
    REQUIRE(v.vertices.size() == 4);
    std::vector<Simplex> tri = triangulate(v, p);
    CHECK(tri.size() == 2);
    CHECK(relative_volume(p) == Rational(1, 4));
}

TEST_CASE("empty polytope") {
    Polytope p;
    p.D = 2;
    p.halfspaces = {{-1, -1}};  // -x1 - x2 >= 0 is impossible on the slice
    VRep v = vertex_enumeration(p);
    CHECK(v.empty());
    CHECK(relative_volume(p) == 0);
    CHECK_THROWS_AS(triangulate(v, p), GeometryError);
}

TEST_CASE("lower dimensional slice") {
    Polytope p;
    p.D = 2;
    p.halfspaces = {{1, -1}, {-1, 1}};  // forces x1 = x2
    VRep v = vertex_enumeration(p);
    REQUIRE(v.vertices.size() == 1);
    CHECK(relative_volume(p) == 0);
    CHECK_THROWS_AS(triangulate(v, p), GeometryError);
}

TEST_CASE("insertion order is validated") {
    Polytope p = orthant(3);
    VRep v = vertex_enumeration(p);
    CHECK_THROWS_AS(triangulate_with_order(v, p, {0, 1}), InputError);
}
