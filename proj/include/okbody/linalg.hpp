#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "okbody/rational.hpp"

namespace okb {

using VecQ = std::vector<Rational>;
using MatQ = std::vector<VecQ>;

Rational dot(const VecQ& a, const VecQ& b);
VecQ mat_vec(const MatQ& m, const VecQ& v);
VecQ scaled(const VecQ& v, const Rational& c);
VecQ vec_add(const VecQ& a, const VecQ& b);
VecQ vec_sub(const VecQ& a, const VecQ& b);
bool is_zero_vec(const VecQ& v);

Rational det(MatQ m);
int rank(MatQ m);

// Solve A x = b exactly; nullopt when A is singular. A must be square.
std::optional<VecQ> solve(MatQ a, VecQ b);

// Inertia (#positive, #negative, #zero) of a symmetric matrix, computed by
// exact congruence diagonalization.
struct Inertia {
    int positive = 0;
    int negative = 0;
    int zero = 0;
};
Inertia signature(MatQ q);

// Sylvester test for negative definiteness: (-1)^k det_k > 0 for every
// leading principal minor.
bool negative_definite(const MatQ& g);

// Scale a nonzero rational vector to a primitive integer vector (coprime
// entries), preserving direction.
VecQ primitive(const VecQ& v);

// Facets of the pointed full-dimensional cone spanned by `gens`, found by
// enumerating (dim-1)-subsets; meant for small dimensions. Each facet is a
// primitive covector f with f(g) >= 0 for every generator and f tight on a
// rank dim-1 subset. Returns nullopt when the generators do not span.
std::optional<std::vector<VecQ>> cone_facets_from_generators(
    const std::vector<VecQ>& gens, int dim);

// Extreme rays of { v : f(v) >= 0 for all f in facets }, dually.
std::optional<std::vector<VecQ>> cone_rays_from_facets(
    const std::vector<VecQ>& facets, int dim);

} // namespace okb
