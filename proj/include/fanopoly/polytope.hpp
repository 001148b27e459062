// Weyl-invariant Q-Fano moment polytopes.
//
// A polytope is specified by its outer facet normals: primitive lattice
// vectors in the closed (dual) positive chamber.  Support values are
// never inputs; they are forced to lambda = 1 + 2 rho(u), the
// anticanonical normalization.  The full facet set is the union of the
// Weyl orbits of the outer normals, and the positive part P+ is cut out
// by the outer representatives together with the chamber walls.

#pragma once

#include <memory>
#include <string>
#include <vector>

#include "fanopoly/geometry.hpp"
#include "fanopoly/rootsystem.hpp"

namespace fanopoly {

struct FacetSpec {
    Vec u;            // primitive integer normal
    Rational lambda;  // 1 + 2 rho(u)
};

struct GroupPolytope {
    std::shared_ptr<const RootSystem> rs;
    std::vector<FacetSpec> outer;  // canonical: lex-sorted chamber representatives
    std::vector<FacetSpec> full;   // all Weyl images
    Polytope geom;                 // the full polytope P
    Polytope positive;             // P+ = P intersect closed chamber
    // For each facet of `positive`: index into `outer`, or -1 for a wall.
    std::vector<int> positive_facet_origin;
    // For wall facets of `positive`: the simple root index, aligned with
    // positive.facets (-1 for outer facets).
    std::vector<int> positive_facet_wall;
};

GroupPolytope build_polytope(const std::shared_ptr<const RootSystem>& rs,
                             const std::vector<Vec>& normals);
GroupPolytope build_polytope(const RootSystem& rs, const std::vector<Vec>& normals);

struct PositivePart {
    std::vector<Vec> vertices;
    struct OuterFacet {
        FacetSpec spec;
        std::vector<int> vertex_indices;
    };
    struct WallFacet {
        int simple_root_index;
        std::vector<int> vertex_indices;
    };
    std::vector<OuterFacet> outer_facets;
    std::vector<WallFacet> wall_facets;
};

PositivePart positive_part(const GroupPolytope& p);

// Fine condition: every vertex of the full polytope lies on exactly
// rank facet hyperplanes.
bool is_fine(const GroupPolytope& p);

struct LabelResult {
    Rational I;     // max over outer facets of 2 rho(u)
    Rational t0;    // 2 (1 + 1/I); t0 * rho is on the boundary of P+
    Vec witness_u;  // a normal attaining the max
};

LabelResult label_I(const GroupPolytope& p);

}  // namespace fanopoly
