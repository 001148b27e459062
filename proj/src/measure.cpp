#include "fanopoly/measure.hpp"

#include <algorithm>
#include <cmath>
#include <map>

namespace fanopoly {

Polynomial pi_polynomial(const RootSystem& rs) {
    Polynomial pi = Polynomial::constant(rs.rank, Rational(1));
    for (const auto& alpha : rs.positive_roots) {
        Polynomial form = Polynomial::linear(mat_vec(rs.gram, alpha));
        pi = pi * form * form;
    }
    return pi;
}

Rational integrate_over_simplex(const Polynomial& poly, const std::vector<Vec>& simplex) {
    int dim = poly.nvars();
    if (static_cast<int>(simplex.size()) != dim + 1)
        throw input_error("simplex needs dim+1 vertices");
    Mat edges;
    for (int i = 1; i <= dim; ++i) edges.push_back(vec_sub(simplex[i], simplex[0]));
    Rational d = det(edges);
    if (d == 0) throw input_error("degenerate simplex");
    Rational vol = abs(d) / Rational(factorial(static_cast<unsigned>(dim)));

    Rational total(0);
    for (const auto& [exp, coeff] : poly.terms()) {
        // expand prod_k (sum_j lambda_j v_j[k])^{e_k} as a polynomial in
        // the barycentric coordinates lambda_0..lambda_dim
        std::map<std::vector<unsigned>, Rational> lam{
            {std::vector<unsigned>(simplex.size(), 0), Rational(1)}};
        unsigned degree = 0;
        for (size_t k = 0; k < exp.size(); ++k) {
            for (unsigned rep = 0; rep < exp[k]; ++rep) {
                std::map<std::vector<unsigned>, Rational> next;
                for (const auto& [a, c] : lam) {
                    for (size_t j = 0; j < simplex.size(); ++j) {
                        if (simplex[j][k] == 0) continue;
                        auto b = a;
                        ++b[j];
                        next[b] += c * simplex[j][k];
                    }
                }
                lam = std::move(next);
                ++degree;
            }
        }
        Rational denom(factorial(static_cast<unsigned>(dim) + degree));
        for (const auto& [a, c] : lam) {
            if (c == 0) continue;
            Integer num = factorial(static_cast<unsigned>(dim));
            for (unsigned aj : a) num *= factorial(aj);
            total += coeff * c * vol * Rational(num) / denom;
        }
    }
    return total;
}

MomentResult moments_of_polytope(const Polytope& region, const Polynomial& weight,
                                 bool anchor_greatest) {
    if (weight.nvars() != region.dim) throw input_error("weight arity mismatch");
    auto simplices = triangulate(region, anchor_greatest);

    std::vector<Polynomial> integrands{weight};
    for (int k = 0; k < region.dim; ++k)
        integrands.push_back(weight * Polynomial::coordinate(region.dim, k));

    std::vector<Rational> sums(integrands.size(), Rational(0));
    for (const auto& simp : simplices) {
        std::vector<Vec> verts;
        for (int i : simp) verts.push_back(region.vertices[static_cast<size_t>(i)]);
        for (size_t q = 0; q < integrands.size(); ++q)
            sums[q] += integrate_over_simplex(integrands[q], verts);
    }

    MomentResult res;
    res.vol_pi = sums[0];
    res.simplex_count = static_cast<long>(simplices.size());
    if (res.vol_pi <= 0) throw internal_error("weighted volume is not positive");
    for (int k = 0; k < region.dim; ++k) res.barycenter.push_back(sums[k + 1] / res.vol_pi);
    return res;
}

MomentResult weighted_moments(const GroupPolytope& p) {
    MomentResult res = moments_of_polytope(p.positive, pi_polynomial(*p.rs));
    if (chamber_position(*p.rs, res.barycenter) == ChamberPosition::outside)
        throw internal_error("barycenter escaped the closed positive chamber");
    return res;
}

namespace {

// splitmix64: sample j of a stream is mix(seed + (j+1)*gamma).
inline std::uint64_t mix64(std::uint64_t x) {
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

inline double uniform01(std::uint64_t seed, std::uint64_t index) {
    std::uint64_t bits = mix64(seed + (index + 1) * 0x9E3779B97F4A7C15ULL);
    return static_cast<double>(bits >> 11) * 0x1.0p-53;
}

}  // namespace

McMomentResult mc_moments(const GroupPolytope& p, long samples, std::uint64_t seed) {
    if (samples < 1) throw input_error("mc_moments requires samples >= 1");
    const int dim = p.positive.dim;

    std::vector<double> lo(dim, 0), hi(dim, 0);
    for (int k = 0; k < dim; ++k) {
        Rational mn = p.positive.vertices[0][k], mx = mn;
        for (const auto& v : p.positive.vertices) {
            mn = std::min(mn, v[k]);
            mx = std::max(mx, v[k]);
        }
        lo[k] = mn.get_d();
        hi[k] = mx.get_d();
    }
    double box_vol = 1;
    for (int k = 0; k < dim; ++k) box_vol *= hi[k] - lo[k];

    std::vector<std::vector<double>> facet_normals;
    std::vector<double> facet_offsets;
    for (const auto& f : p.positive.facets) {
        std::vector<double> n;
        for (const auto& x : f.normal) n.push_back(x.get_d());
        facet_normals.push_back(std::move(n));
        facet_offsets.push_back(f.offset.get_d());
    }
    // pi in product form: more accurate than the expanded polynomial
    std::vector<std::vector<double>> root_forms;
    for (const auto& alpha : p.rs->positive_roots) {
        Vec ga = mat_vec(p.rs->gram, alpha);
        std::vector<double> f;
        for (const auto& x : ga) f.push_back(x.get_d());
        root_forms.push_back(std::move(f));
    }

    std::vector<double> y(dim);
    double sum_w = 0, sum_w2 = 0;
    std::vector<double> sum_wy(dim, 0);
    std::vector<std::vector<double>> pts_cache;  // (w, y) pairs for the SE pass
    std::vector<double> w_cache;
    long accepted = 0;
    for (long i = 0; i < samples; ++i) {
        for (int k = 0; k < dim; ++k)
            y[k] = lo[k] + (hi[k] - lo[k]) *
                               uniform01(seed, static_cast<std::uint64_t>(i) *
                                                       static_cast<std::uint64_t>(dim) +
                                                   static_cast<std::uint64_t>(k));
        bool inside = true;
        for (size_t f = 0; f < facet_normals.size() && inside; ++f) {
            double s = 0;
            for (int k = 0; k < dim; ++k) s += facet_normals[f][k] * y[k];
            if (s > facet_offsets[f]) inside = false;
        }
        if (!inside) continue;
        double w = 1;
        for (const auto& form : root_forms) {
            double s = 0;
            for (int k = 0; k < dim; ++k) s += form[k] * y[k];
            w *= s * s;
        }
        ++accepted;
        sum_w += w;
        sum_w2 += w * w;
        for (int k = 0; k < dim; ++k) sum_wy[k] += w * y[k];
        w_cache.push_back(w);
        pts_cache.push_back(y);
    }
    if (accepted == 0) throw input_error("no samples accepted (degenerate region)");

    McMomentResult res;
    res.samples = samples;
    res.accepted = accepted;
    res.seed = seed;
    double n = static_cast<double>(samples);
    double mean_w = sum_w / n;
    res.vol_pi = box_vol * mean_w;
    // sample variance of the per-draw weight (zero for rejected draws)
    double var_w = (sum_w2 / n - mean_w * mean_w) * n / (n - 1);
    res.vol_pi_se = box_vol * std::sqrt(var_w / n);

    res.barycenter.resize(dim);
    res.barycenter_se.resize(dim);
    for (int k = 0; k < dim; ++k) res.barycenter[k] = sum_wy[k] / sum_w;
    // ratio-estimator delta method: Var(R) ~ sum w^2 (y - R)^2 / (sum w)^2
    for (int k = 0; k < dim; ++k) {
        double s = 0;
        for (size_t i = 0; i < w_cache.size(); ++i) {
            double d = pts_cache[i][k] - res.barycenter[k];
            s += w_cache[i] * w_cache[i] * d * d;
        }
        res.barycenter_se[k] = std::sqrt(s) / sum_w;
    }
    return res;
}

bool mc_agrees(const MomentResult& exact, const McMomentResult& mc, double nsigma) {
    if (std::abs(exact.vol_pi.get_d() - mc.vol_pi) > nsigma * mc.vol_pi_se) return false;
    for (size_t k = 0; k < exact.barycenter.size(); ++k)
        if (std::abs(exact.barycenter[k].get_d() - mc.barycenter[k]) >
            nsigma * mc.barycenter_se[k])
            return false;
    return true;
}

}  // namespace fanopoly
