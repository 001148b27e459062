// Exact pi-weighted volumes and barycenters, plus a seeded Monte-Carlo
// estimator used as an independent cross-check.

#pragma once

#include <cstdint>

#include "fanopoly/polynomial.hpp"
#include "fanopoly/polytope.hpp"

namespace fanopoly {

// pi(y) = prod_{alpha in Phi+} <alpha, y>^2, expanded.  The empty product
// (torus) is the constant 1.
Polynomial pi_polynomial(const RootSystem& rs);

// Exact integral over a nondegenerate simplex (nvars+1 vertices) via
// barycentric substitution and the Dirichlet formula
//   int_simplex prod lambda_j^{a_j} dV = dim! vol * prod a_j! / (dim + sum a_j)!
Rational integrate_over_simplex(const Polynomial& poly, const std::vector<Vec>& simplex);

struct MomentResult {
    Rational vol_pi;   // int_P weight dy
    Vec barycenter;    // int_P y weight dy / vol_pi
    long simplex_count = 0;
};

// Moments of an arbitrary bounded region with an arbitrary weight.
MomentResult moments_of_polytope(const Polytope& region, const Polynomial& weight,
                                 bool anchor_greatest = false);

// Moments of P+ with the pi weight.  The barycenter always lands in the
// closed positive chamber; that is checked.
MomentResult weighted_moments(const GroupPolytope& p);

struct McMomentResult {
    double vol_pi = 0, vol_pi_se = 0;
    std::vector<double> barycenter, barycenter_se;
    long samples = 0, accepted = 0;
    std::uint64_t seed = 0;
};

// Rejection sampling in the bounding box of P+, weighted by pi.  The
// stream is counter-based (sample i is a pure function of seed and i),
// so results are reproducible and independent of any splitting.
McMomentResult mc_moments(const GroupPolytope& p, long samples, std::uint64_t seed);

// |exact - estimate| <= nsigma * se, for the volume and every barycenter
// coordinate.
bool mc_agrees(const MomentResult& exact, const McMomentResult& mc, double nsigma = 3.0);

}  // namespace fanopoly
