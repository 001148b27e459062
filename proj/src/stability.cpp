#include "fanopoly/stability.hpp"

namespace fanopoly {

const char* to_string(KEStatus s) {
    switch (s) {
        case KEStatus::KE: return "KE";
        case KEStatus::unstable: return "unstable";
        case KEStatus::boundary: return "boundary";
    }
    throw internal_error("bad status");
}

Decomposition decompose_relative_barycenter(const RootSystem& rs, const Vec& b) {
    if (static_cast<int>(b.size()) != rs.rank) throw input_error("barycenter dimension mismatch");
    Vec v = vec_sub(b, rs.two_rho);
    Decomposition d;
    d.c = zero_vec(rs.ss_rank);
    if (rs.ss_rank > 0) {
        // normal equations in the simple-root basis; Gram block is PD
        Mat a(rs.ss_rank, zero_vec(rs.ss_rank));
        Vec rhs(rs.ss_rank);
        for (int i = 0; i < rs.ss_rank; ++i) {
            for (int j = 0; j < rs.ss_rank; ++j)
                a[i][j] = rs.inner(rs.simple_roots[i], rs.simple_roots[j]);
            rhs[i] = rs.inner(rs.simple_roots[i], v);
        }
        auto c = solve(a, rhs);
        if (!c) throw internal_error("simple roots not independent");
        d.c = *c;
    }
    d.center = v;
    for (int i = 0; i < rs.ss_rank; ++i)
        d.center = vec_sub(d.center, vec_scale(d.c[i], rs.simple_roots[i]));
    // exactness of the split
    for (int i = 0; i < rs.ss_rank; ++i)
        if (rs.inner(rs.simple_roots[i], d.center) != 0)
            throw internal_error("center component not orthogonal to the roots");
    if (rs.semisimple() && !is_zero(d.center))
        throw internal_error("nonzero center component for a semisimple group");
    return d;
}

Rational futaki_linear(const RootSystem& rs, const MomentResult& m, const Vec& xi) {
    if (static_cast<int>(xi.size()) != rs.rank) throw input_error("xi dimension mismatch");
    for (int i = 0; i < rs.ss_rank; ++i)
        if (rs.inner(rs.simple_roots[i], xi) != 0)
            throw input_error("xi is not central (not orthogonal to the simple roots)");
    return m.vol_pi * rs.inner(xi, vec_sub(m.barycenter, rs.two_rho));
}

Rational futaki_fundamental_weight(const RootSystem& rs, const MomentResult& m, int index) {
    if (index < 1 || index > rs.ss_rank)
        throw input_error("fundamental weight index out of range");
    Decomposition d = decompose_relative_barycenter(rs, m.barycenter);
    return Rational(1, 2) * d.c[static_cast<size_t>(index - 1)] * rs.root_norm2(index - 1) *
           m.vol_pi;
}

Verdict verdict_from_moments(const RootSystem& rs, const MomentResult& m) {
    Verdict v;
    v.moments = m;
    Decomposition d = decompose_relative_barycenter(rs, m.barycenter);
    v.c = d.c;
    v.center = d.center;

    if (!is_zero(d.center)) {
        // Case 1: b - 2rho leaves the semisimple part
        Certificate cert;
        cert.kind = Certificate::Kind::linear;
        cert.xi = d.center;
        cert.futaki = futaki_linear(rs, m, d.center);
        if (cert.futaki == 0) throw internal_error("vanishing Futaki for nonzero center");
        v.certificate = cert;
        v.status = KEStatus::unstable;
        return v;
    }
    int worst = -1;
    bool any_zero = false;
    for (int i = 0; i < rs.ss_rank; ++i) {
        if (d.c[i] < 0 && (worst < 0 || d.c[i] < d.c[worst])) worst = i;
        if (d.c[i] == 0) any_zero = true;
    }
    if (worst >= 0) {
        // Case 2: destabilize along the fundamental weight of the most
        // negative coefficient
        Certificate cert;
        cert.kind = Certificate::Kind::fundamental_weight;
        cert.index = worst + 1;
        cert.futaki = futaki_fundamental_weight(rs, m, worst + 1);
        if (cert.futaki >= 0) throw internal_error("fundamental-weight Futaki not negative");
        v.certificate = cert;
        v.status = KEStatus::unstable;
        return v;
    }
    v.status = any_zero ? KEStatus::boundary : KEStatus::KE;
    return v;
}

Verdict ke_verdict(const RootSystem& rs, const GroupPolytope& p) {
    return verdict_from_moments(rs, weighted_moments(p));
}

}  // namespace fanopoly
