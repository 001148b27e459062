// The finiteness cutoff: bracket function and its root.
//
// For a polytope with label I = I(P) in complex dimension n, put
// t = 1 + 1/I.  When
//     [ n/(n+1) + t (t^n - 1) ] / t^n  <  1
// the ray-exit estimate forces the weighted barycenter strictly below
// the 2rho level of the exit facet, so no Kaehler-Einstein metric
// exists.  The bracket decreases to n/(n+1) as I grows, so the verdicts
// above its unique root I* are all negative.

#pragma once

#include "fanopoly/rational.hpp"

namespace fanopoly {

// Exact bracket value; requires I > 0, n >= 1.
Rational prop41_bracket(const Rational& I, int n);

struct OmegaResult {
    int n = 0;
    Rational lo, hi;  // enclosing interval for I*, in I-units (2 rho(u))
    Rational rho_lo() const { return lo / 2; }  // same threshold in rho-units
    Rational rho_hi() const { return hi / 2; }
};

// Bisection enclosure of the bracket root, after verifying a single sign
// change and monotone decrease past the root on a geometric grid in
// [1, 1024].  tol bounds the interval width (in I-units).
OmegaResult omega_generic(int n, const Rational& tol);

}  // namespace fanopoly
