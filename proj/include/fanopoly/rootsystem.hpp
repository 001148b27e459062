// Root systems with exact rational realizations.
//
// Supported type labels: A1..A9, B2..B6, C2..C6, D3..D6, G2, torus factors
// T1..T4, and products joined with 'x' (e.g. "A1xT1", "A1xA1xA1").  The
// labels "so4" and "A1xA1" select the Z^2 realization with simple roots
// (1,1), (1,-1) and the identity Gram matrix, so that lattice vectors,
// the weight polynomial and 2*rho are all integral; its positive chamber
// is {x >= |y|}.  Every other semisimple factor is realized in
// simple-root coordinates (alpha_i = e_i) with Gram matrix d_i*C_ij, the
// symmetrized Cartan matrix.
//
// Vectors on the polytope side live in a* and pair with each other
// through the Gram matrix; facet normals live in the dual lattice
// N = Z^rank and pair with a* by the plain dot product.  The Weyl action
// on normals is the inverse-transpose ("dual") of the action on a*.

#pragma once

#include <string>
#include <vector>

#include "fanopoly/linalg.hpp"

namespace fanopoly {

struct RootSystem {
    std::string label;     // canonical label, e.g. "so4", "A2", "A1xT1"
    int rank = 0;          // ambient coordinate dimension
    int ss_rank = 0;       // number of simple roots
    Mat gram;              // W-invariant inner product on a*
    std::vector<Vec> simple_roots;
    std::vector<Vec> positive_roots;
    std::vector<Vec> fundamental_weights;  // in the span of the simple roots
    Vec two_rho;                           // sum of positive roots
    std::vector<Mat> weyl;                 // all elements, action on a*
    std::vector<Mat> weyl_dual;            // inverse-transpose, same indexing
    Mat cartan;                            // C_ij = 2<a_i,a_j>/|a_i|^2

    bool semisimple() const { return ss_rank == rank; }

    Rational inner(const Vec& x, const Vec& y) const { return dot(x, mat_vec(gram, y)); }
    Rational root_norm2(int i) const { return inner(simple_roots[i], simple_roots[i]); }

    // Canonical a x a* pairing: u is a normal (dual side), y a point.
    static Rational pair(const Vec& u, const Vec& y) { return dot(u, y); }
};

enum class ChamberPosition { interior, wall, outside };

RootSystem build_root_system(const std::string& type_label);

// Inverse of the Cartan matrix; throws internal_error if any entry is
// negative (they never are for valid input).
Mat inverse_cartan(const RootSystem& rs);

// (1/2) sum_{alpha in Phi+} |alpha(u)| for a normal u; equals rho(u) on
// the closed dual chamber.  Invariant under the dual Weyl action.
Rational rho_pairing(const RootSystem& rs, const Vec& u);

// Full W-orbit, duplicates removed, lexicographically sorted.
std::vector<Vec> weyl_orbit(const RootSystem& rs, const Vec& v);
std::vector<Vec> weyl_orbit_dual(const RootSystem& rs, const Vec& u);

// Position of a point in a* relative to the closed positive chamber
// {<alpha_i, y> >= 0}, and of a normal relative to the dual chamber
// {alpha_i(u) >= 0}.
ChamberPosition chamber_position(const RootSystem& rs, const Vec& v);
ChamberPosition chamber_position_dual(const RootSystem& rs, const Vec& u);

// Same root system with the inner product multiplied by s > 0.  Roots,
// weights, Weyl group and chambers are unchanged; only Gram-dependent
// quantities (pi, Futaki values) rescale.
RootSystem with_gram_scaled(const RootSystem& rs, const Rational& s);

}  // namespace fanopoly
