#pragma once

#include <stdexcept>
#include <string>

namespace iacprob {

// Bad user input: unknown preset, malformed event file, invalid flag values.
struct InputError : std::runtime_error {
    explicit InputError(const std::string& what) : std::runtime_error(what) {}
};

// Infeasible or degenerate geometry: empty polytope where a full-dimensional
// one is required, lower-dimensional input to triangulation, zero denominator
// integral.
struct GeometryError : std::runtime_error {
    explicit GeometryError(const std::string& what) : std::runtime_error(what) {}
};

// Quasi-polynomial fitting failed, e.g. held-out validation points mismatch
// ("period too small") or rank-deficient sample matrix.
struct FitError : std::runtime_error {
    explicit FitError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace iacprob
