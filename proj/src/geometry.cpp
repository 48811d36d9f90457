#include "iacprob/geometry.hpp"

#include "iacprob/errors.hpp"
#include "iacprob/parallel.hpp"
#include "iacprob/rational.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <utility>

namespace iacprob {

namespace {

RatVector project(const RatVector& point) {
    return RatVector(point.begin(), point.end() - 1);
}

// Normal vector and offset of the hyperplane through the given affinely
// independent points (in R^n, n = points.size()); orientation is arbitrary.
std::pair<RatVector, Rational> hyperplane_through(const std::vector<RatVector>& points) {
    const size_t n = points.size();
    RatMatrix diffs;
    for (size_t i = 1; i < n; ++i) {
        RatVector row(n);
        for (size_t j = 0; j < n; ++j) row[j] = points[i][j] - points[0][j];
        diffs.push_back(std::move(row));
    }
    // Row-reduce and read one null-space vector of the difference matrix.
    std::vector<int> pivot_col;
    size_t pivot_row = 0;
    for (size_t col = 0; col < n && pivot_row < diffs.size(); ++col) {
        size_t sel = pivot_row;
        while (sel < diffs.size() && diffs[sel][col] == 0) ++sel;
        if (sel == diffs.size()) continue;
        std::swap(diffs[sel], diffs[pivot_row]);
        for (size_t r = 0; r < diffs.size(); ++r) {
            if (r == pivot_row || diffs[r][col] == 0) continue;
            Rational f = diffs[r][col] / diffs[pivot_row][col];
            for (size_t j = col; j < n; ++j) diffs[r][j] -= f * diffs[pivot_row][j];
        }
        pivot_col.push_back(static_cast<int>(col));
        ++pivot_row;
    }
    if (pivot_col.size() + 1 != n) throw GeometryError("facet points are affinely dependent");
    std::vector<bool> is_pivot(n, false);
    for (int c : pivot_col) is_pivot[static_cast<size_t>(c)] = true;
    size_t free_col = 0;
    while (free_col < n && is_pivot[free_col]) ++free_col;
    RatVector normal(n, Rational(0));
    normal[free_col] = 1;
    for (size_t r = pivot_col.size(); r-- > 0;) {
        size_t c = static_cast<size_t>(pivot_col[r]);
        Rational sum = diffs[r][free_col];  // remaining columns are zero or free
        normal[c] = -sum / diffs[r][c];
    }
    Rational beta = 0;
    for (size_t j = 0; j < n; ++j) beta += normal[j] * points[0][j];
    return {std::move(normal), beta};
}

Rational dot(const RatVector& a, const RatVector& b) {
    Rational s = 0;
    for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

}  // namespace

Polytope polytope_of(const ConstraintSystem& system) {
    Polytope p;
    p.D = system.d;
    for (const auto& row : system.rows) p.halfspaces.push_back(row.coeffs);
    return p;
}

VRep vertex_enumeration(const Polytope& p, int threads) {
    if (p.D < 1) throw InputError("polytope must have at least one variable");
    std::vector<std::vector<long long>> constraints = p.halfspaces;
    for (int j = 0; j < p.D; ++j) {
        std::vector<long long> unit(static_cast<size_t>(p.D), 0);
        unit[static_cast<size_t>(j)] = 1;
        constraints.push_back(std::move(unit));
    }
    auto feasible = [&](const RatVector& x) {
        for (const auto& c : constraints) {
            Rational s = 0;
            for (int j = 0; j < p.D; ++j) s += Rational(c[static_cast<size_t>(j)]) * x[static_cast<size_t>(j)];
            if (s < 0) return false;
        }
        return true;
    };

    VRep rep;
    if (p.D == 1) {
        RatVector x{Rational(1)};
        if (feasible(x)) rep.vertices.push_back(std::move(x));
        return rep;
    }

    // Every vertex solves D-1 constraints at equality together with the slice
    // equation sum(z) = 1.
    const size_t pick = static_cast<size_t>(p.D - 1);
    std::vector<std::vector<int>> combos;
    std::vector<int> combo(pick);
    for (size_t i = 0; i < pick; ++i) combo[i] = static_cast<int>(i);
    while (true) {
        combos.push_back(combo);
        size_t i = pick;
        while (i > 0 && combo[i - 1] == static_cast<int>(constraints.size() - pick + i - 1)) --i;
        if (i == 0) break;
        ++combo[i - 1];
        for (size_t j = i; j < pick; ++j) combo[j] = combo[j - 1] + 1;
    }

    auto solutions = parallel_map<std::optional<RatVector>>(combos.size(), threads, [&](size_t ci) {
        RatMatrix A(static_cast<size_t>(p.D), RatVector(static_cast<size_t>(p.D)));
        RatVector b(static_cast<size_t>(p.D), Rational(0));
        for (size_t r = 0; r < pick; ++r)
            for (int j = 0; j < p.D; ++j)
                A[r][static_cast<size_t>(j)] = Rational(constraints[static_cast<size_t>(combos[ci][r])][static_cast<size_t>(j)]);
        for (int j = 0; j < p.D; ++j) A[pick][static_cast<size_t>(j)] = 1;
        b[pick] = 1;
        auto x = solve_linear_system(A, b);
        if (!x || !feasible(*x)) return std::optional<RatVector>{};
        return std::optional<RatVector>{std::move(*x)};
    });

    std::set<RatVector> unique;
    for (auto& s : solutions)
        if (s) unique.insert(std::move(*s));
    rep.vertices.assign(unique.begin(), unique.end());
    return rep;
}

// Streaming placing (beneath-beyond) triangulation over vertex indices.  Each
// produced cell is passed to `emit` as a sorted index vector and then
// forgotten; the working state holds only the boundary facets of the hull
// built so far, each with its outward-oriented hyperplane.  Facets that become
// shared by a second cell are interior forever and are erased, which keeps
// memory proportional to the current boundary rather than the full output.
void triangulate_index_stream(const VRep& v, const Polytope& p, const std::vector<int>& order,
                              const std::function<void(const std::vector<int>&)>& emit) {
    if (v.empty()) throw GeometryError("cannot triangulate an empty polytope");
    if (order.size() != v.vertices.size())
        throw InputError("insertion order must be a permutation of the vertex indices");
    if (p.D == 1) {
        if (v.vertices.size() != 1) throw GeometryError("a one-variable slice has a single point");
        emit({0});
        return;
    }
    const size_t n = static_cast<size_t>(p.D - 1);

    std::vector<RatVector> pts;
    pts.reserve(v.vertices.size());
    for (const auto& vertex : v.vertices) pts.push_back(project(vertex));
    if (affine_rank(pts) != static_cast<int>(n))
        throw GeometryError("polytope is not full-dimensional in the slice");

    // Initial simplex: first points of the insertion order that increase the
    // affine rank.  Skipped points are placed in the main loop below.
    std::vector<int> base;
    std::vector<RatVector> base_pts;
    std::vector<bool> in_base(v.vertices.size(), false);
    for (int idx : order) {
        base_pts.push_back(pts[static_cast<size_t>(idx)]);
        if (static_cast<size_t>(affine_rank(base_pts)) == base.size()) {
            base.push_back(idx);
            in_base[static_cast<size_t>(idx)] = true;
        } else {
            base_pts.pop_back();
        }
        if (base.size() == n + 1) break;
    }

    struct BoundaryFacet {
        RatVector normal;  // oriented outward: inside points give dot < beta
        Rational beta;
    };
    std::map<std::vector<int>, BoundaryFacet> boundary;

    auto add_simplex = [&](std::vector<int> cell) {
        std::sort(cell.begin(), cell.end());
        std::vector<int> facet(cell.size() - 1);
        for (size_t skip = 0; skip < cell.size(); ++skip) {
            for (size_t i = 0, o = 0; i < cell.size(); ++i)
                if (i != skip) facet[o++] = cell[i];
            auto it = boundary.find(facet);
            if (it != boundary.end()) {
                // Second owning cell: the facet is interior from now on.
                boundary.erase(it);
                continue;
            }
            std::vector<RatVector> fpts;
            fpts.reserve(facet.size());
            for (int f : facet) fpts.push_back(pts[static_cast<size_t>(f)]);
            auto [normal, beta] = hyperplane_through(fpts);
            Rational side = dot(normal, pts[static_cast<size_t>(cell[skip])]) - beta;
            if (side == 0) throw GeometryError("degenerate simplex in triangulation");
            if (side > 0) {
                for (auto& c : normal) c = -c;
                beta = -beta;
            }
            boundary.emplace(facet, BoundaryFacet{std::move(normal), std::move(beta)});
        }
        emit(cell);
    };

    add_simplex(base);

    std::vector<std::vector<int>> visible;
    for (int idx : order) {
        if (in_base[static_cast<size_t>(idx)]) continue;
        const RatVector& point = pts[static_cast<size_t>(idx)];
        visible.clear();
        for (const auto& [facet, plane] : boundary) {
            if (dot(plane.normal, point) > plane.beta) visible.push_back(facet);
        }
        if (visible.empty())
            throw GeometryError("vertex insertion found no visible facet (duplicate point?)");
        for (auto& facet : visible) {
            facet.push_back(idx);
            add_simplex(std::move(facet));
        }
    }
}

std::vector<Simplex> triangulate(const VRep& v, const Polytope& p) {
    std::vector<int> order(v.vertices.size());
    for (size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
    return triangulate_with_order(v, p, order);
}

std::vector<Simplex> triangulate_with_order(const VRep& v, const Polytope& p,
                                            const std::vector<int>& order) {
    std::vector<Simplex> out;
    triangulate_index_stream(v, p, order, [&](const std::vector<int>& cell) {
        Simplex s;
        s.points.reserve(cell.size());
        for (int idx : cell) s.points.push_back(v.vertices[static_cast<size_t>(idx)]);
        out.push_back(std::move(s));
    });
    return out;
}

Rational simplex_relative_volume(const Simplex& s) {
    if (s.points.empty()) throw GeometryError("empty simplex");
    const size_t D = s.points[0].size();
    if (s.points.size() != D) throw GeometryError("a slice simplex needs exactly D points");
    if (D == 1) return Rational(1);  // a single lattice point has unit measure
    const size_t n = D - 1;
    RatMatrix diff(n, RatVector(n));
    for (size_t i = 1; i < D; ++i)
        for (size_t j = 0; j < n; ++j) diff[i - 1][j] = s.points[i][j] - s.points[0][j];
    Rational det = determinant(diff);
    if (det < 0) det = -det;
    return det / Rational(factorial(static_cast<unsigned>(n)));
}

Rational relative_volume(const Polytope& p, int threads) {
    VRep v = vertex_enumeration(p, threads);
    if (v.empty()) return Rational(0);
    if (p.D == 1) return Rational(1);
    std::vector<RatVector> pts;
    pts.reserve(v.vertices.size());
    for (const auto& vertex : v.vertices) pts.push_back(project(vertex));
    if (affine_rank(pts) != p.D - 1)
        return Rational(0);  // lower-dimensional slice has zero measure

    const size_t n = static_cast<size_t>(p.D - 1);
    std::vector<int> order(v.vertices.size());
    for (size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
    Rational det_sum = 0;
    RatMatrix diff(n, RatVector(n));
    triangulate_index_stream(v, p, order, [&](const std::vector<int>& cell) {
        const RatVector& first = pts[static_cast<size_t>(cell[0])];
        for (size_t i = 1; i < cell.size(); ++i)
            for (size_t j = 0; j < n; ++j)
                diff[i - 1][j] = pts[static_cast<size_t>(cell[i])][j] - first[j];
        Rational det = determinant(diff);
        det_sum += det < 0 ? -det : det;
    });
    return det_sum / Rational(factorial(static_cast<unsigned>(n)));
}

}  // namespace iacprob
