#include "fanopoly/bound.hpp"

#include <vector>

namespace fanopoly {

namespace {

Rational rat_pow(const Rational& x, int e) {
    Rational r(1);
    for (int i = 0; i < e; ++i) r *= x;
    return r;
}

}  // namespace

Rational prop41_bracket(const Rational& I, int n) {
    if (I <= 0) throw input_error("prop41_bracket requires I > 0");
    if (n < 1) throw input_error("prop41_bracket requires n >= 1");
    Rational t = 1 + 1 / I;
    Rational tn = rat_pow(t, n);
    return (Rational(n, n + 1) + t * (tn - 1)) / tn;
}

OmegaResult omega_generic(int n, const Rational& tol) {
    if (n < 1) throw input_error("omega_generic requires n >= 1");
    if (tol <= 0) throw input_error("omega_generic requires tol > 0");

    // geometric grid over [1, 1024]: one sign change, then decreasing
    std::vector<Rational> grid;
    for (Rational I(1); I <= 1024; I *= 2) grid.push_back(I);
    int cross = -1;
    for (size_t i = 0; i + 1 < grid.size(); ++i) {
        bool pos_here = prop41_bracket(grid[i], n) > 1;
        bool pos_next = prop41_bracket(grid[i + 1], n) > 1;
        if (pos_here && !pos_next) {
            if (cross >= 0) throw internal_error("bracket has multiple sign changes");
            cross = static_cast<int>(i);
        } else if (!pos_here && pos_next) {
            throw internal_error("bracket increases through 1 on the grid");
        }
    }
    if (cross < 0) throw input_error("no bracket sign change in [1, 1024]");
    Rational prev = prop41_bracket(grid[static_cast<size_t>(cross) + 1], n);
    for (size_t i = static_cast<size_t>(cross) + 2; i < grid.size(); ++i) {
        Rational cur = prop41_bracket(grid[i], n);
        if (cur >= prev) throw internal_error("bracket not decreasing past its root");
        prev = cur;
    }

    Rational lo = grid[static_cast<size_t>(cross)];
    Rational hi = grid[static_cast<size_t>(cross) + 1];
    while (hi - lo > tol) {
        Rational mid = (lo + hi) / 2;
        if (prop41_bracket(mid, n) > 1)
            lo = mid;
        else
            hi = mid;
    }
    OmegaResult res;
    res.n = n;
    res.lo = lo;
    res.hi = hi;
    return res;
}

}  // namespace fanopoly
