// The Kaehler-Einstein criterion and K-instability certificates.
//
// Write b(P+) - 2rho = sum c_i alpha_i + z with z Gram-orthogonal to the
// simple roots.  The verdict is
//   KE        iff  z = 0 and every c_i > 0,
//   boundary  iff  z = 0, every c_i >= 0 and some c_i = 0 (no KE metric,
//             but no destabilizer follows from the test configurations
//             used here),
//   unstable  otherwise, with a certificate: for z != 0 a linear test
//             configuration xi = z with Futaki Vol_pi * <xi, b-2rho>; for
//             some c_i < 0 the fundamental-weight configuration
//             f = max_w <w varpi_i, y> with Futaki (1/2) c_i |alpha_i|^2
//             Vol_pi < 0, taken at the most negative c_i.

#pragma once

#include <optional>

#include "fanopoly/measure.hpp"

namespace fanopoly {

enum class KEStatus { KE, unstable, boundary };

const char* to_string(KEStatus s);

struct Certificate {
    enum class Kind { linear, fundamental_weight } kind;
    int index = -1;     // fundamental-weight index, 1-based
    Vec xi;             // linear kind: the central direction
    Rational futaki;
};

struct Decomposition {
    Vec c;       // simple-root coefficients of b - 2rho
    Vec center;  // Gram-orthogonal remainder; zero for semisimple groups
};

Decomposition decompose_relative_barycenter(const RootSystem& rs, const Vec& b);

// Fut for the linear test configuration f = <xi, y>.  xi must be central
// (Gram-orthogonal to every simple root); for semisimple groups only
// xi = 0 qualifies.
Rational futaki_linear(const RootSystem& rs, const MomentResult& m, const Vec& xi);

// Fut for the fundamental-weight configuration (index is 1-based).
Rational futaki_fundamental_weight(const RootSystem& rs, const MomentResult& m, int index);

struct Verdict {
    KEStatus status;
    Vec c;
    Vec center;
    std::optional<Certificate> certificate;
    MomentResult moments;
};

Verdict verdict_from_moments(const RootSystem& rs, const MomentResult& m);
Verdict ke_verdict(const RootSystem& rs, const GroupPolytope& p);

}  // namespace fanopoly
