// Exact halfspace-intersection geometry for small polytopes.
//
// Vertex enumeration is the brute-force one: intersect every dim-subset
// of facet hyperplanes and keep feasible solutions.  The polytopes this
// project enumerates have at most a few dozen facets in rank <= 3, so
// nothing smarter is warranted; in exchange there is no floating point
// anywhere.

#pragma once

#include <vector>

#include "fanopoly/linalg.hpp"

namespace fanopoly {

// The halfspace {y : normal . y <= offset} (plain dot product).
struct Halfspace {
    Vec normal;
    Rational offset;
};

struct Polytope {
    int dim = 0;
    std::vector<Vec> vertices;                 // lex-sorted, exact, deduplicated
    std::vector<Halfspace> facets;             // genuine facets only
    std::vector<std::vector<int>> incidence;   // facet -> sorted vertex indices
};

// True when the normals positively span R^dim, i.e. the intersection of
// {normal . y <= c} halfspaces is bounded for any offsets.
bool positively_spans(const std::vector<Vec>& normals, int dim);

struct HullResult {
    std::vector<Vec> vertices;
    std::vector<bool> genuine;                 // per input halfspace: supports a facet
    std::vector<std::vector<int>> incidence;   // per input halfspace
};

// Enumerates the vertices of the intersection of the given halfspaces.
// Throws input_error when the intersection is unbounded.
HullResult enumerate_vertices(const std::vector<Halfspace>& hs, int dim);

// Builds a Polytope, keeping only genuine facets.  Throws internal_error
// if the region is not full-dimensional.
Polytope make_polytope(const std::vector<Halfspace>& hs, int dim);

// Recursive star triangulation anchored at the lexicographically least
// (or, with anchor_greatest, greatest) vertex of every face.  Returns
// simplices as dim+1 vertex indices; the list is sorted by vertex key,
// so two calls yield the same simplices in the same order.
std::vector<std::vector<int>> triangulate(const Polytope& p, bool anchor_greatest = false);

bool polytope_contains(const Polytope& p, const Vec& y);

}  // namespace fanopoly
