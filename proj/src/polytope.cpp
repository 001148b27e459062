#include "fanopoly/polytope.hpp"

#include <algorithm>
#include <set>
#include <string>

namespace fanopoly {

namespace {

std::string vec_key(const Vec& v) {
    std::string k;
    for (const auto& x : v) {
        k += x.get_str();
        k += ',';
    }
    return k;
}

}  // namespace

GroupPolytope build_polytope(const std::shared_ptr<const RootSystem>& rs_ptr,
                             const std::vector<Vec>& normals) {
    const RootSystem& rs = *rs_ptr;
    if (normals.empty()) throw input_error("no outer normals given");

    std::vector<Vec> outer = normals;
    std::sort(outer.begin(), outer.end(), lex_less);
    for (size_t i = 0; i + 1 < outer.size(); ++i)
        if (outer[i] == outer[i + 1]) throw input_error("duplicate outer normal");
    for (const auto& u : outer) {
        if (static_cast<int>(u.size()) != rs.rank)
            throw input_error("normal has wrong dimension");
        if (!is_primitive_integer_vec(u))
            throw input_error("normal is not a primitive lattice vector");
        if (chamber_position_dual(rs, u) == ChamberPosition::outside)
            throw input_error("normal lies outside the closed positive chamber");
    }

    GroupPolytope p;
    p.rs = rs_ptr;
    std::set<std::string> full_seen;
    for (const auto& u : outer) {
        Rational lambda = 1 + 2 * rho_pairing(rs, u);
        p.outer.push_back({u, lambda});
        for (const auto& img : weyl_orbit_dual(rs, u)) {
            if (!full_seen.insert(vec_key(img)).second)
                throw internal_error("two outer normals share a Weyl orbit");
            p.full.push_back({img, lambda});
        }
    }

    std::vector<Halfspace> hs;
    for (const auto& f : p.full) hs.push_back({f.u, f.lambda});
    HullResult hull = enumerate_vertices(hs, rs.rank);  // throws on unbounded
    for (size_t f = 0; f < hs.size(); ++f)
        if (!hull.genuine[f])
            throw input_error("redundant normal: (" + vec_key(p.full[f].u) +
                              ") supports no facet");
    p.geom.dim = rs.rank;
    p.geom.vertices = hull.vertices;
    p.geom.facets = hs;
    p.geom.incidence = hull.incidence;
    if (affine_dim(p.geom.vertices) != rs.rank)
        throw internal_error("polytope not full-dimensional");

    // W-invariance of the vertex set (a build-time consistency check).
    {
        std::set<std::string> vset;
        for (const auto& v : p.geom.vertices) vset.insert(vec_key(v));
        for (const auto& w : rs.weyl)
            for (const auto& v : p.geom.vertices)
                if (!vset.count(vec_key(mat_vec(w, v))))
                    throw internal_error("vertex set is not Weyl-invariant");
    }

    // P+ : outer representatives plus chamber walls.  For dominant y and
    // dominant u one has (w.u)(y) <= u(y), so the orbit images never cut
    // into the chamber and the representatives suffice.
    std::vector<Halfspace> pos_hs;
    std::vector<int> origin, wall;
    for (size_t i = 0; i < p.outer.size(); ++i) {
        pos_hs.push_back({p.outer[i].u, p.outer[i].lambda});
        origin.push_back(static_cast<int>(i));
        wall.push_back(-1);
    }
    for (int i = 0; i < rs.ss_rank; ++i) {
        // <alpha_i, y> >= 0  <=>  (-G alpha_i) . y <= 0
        Vec n = vec_scale(Rational(-1), mat_vec(rs.gram, rs.simple_roots[i]));
        pos_hs.push_back({n, Rational(0)});
        origin.push_back(-1);
        wall.push_back(i);
    }
    HullResult pos_hull = enumerate_vertices(pos_hs, rs.rank);
    if (affine_dim(pos_hull.vertices) != rs.rank)
        throw internal_error("positive part not full-dimensional");
    for (const auto& v : pos_hull.vertices)
        for (const auto& f : p.full)
            if (RootSystem::pair(f.u, v) > f.lambda)
                throw internal_error("positive part vertex escapes the polytope");
    p.positive.dim = rs.rank;
    p.positive.vertices = pos_hull.vertices;
    for (size_t f = 0; f < pos_hs.size(); ++f) {
        if (!pos_hull.genuine[f]) {
            if (wall[f] == -1)
                throw internal_error("outer facet vanished in the positive part");
            continue;  // a wall may be entirely cut away
        }
        p.positive.facets.push_back(pos_hs[f]);
        p.positive.incidence.push_back(pos_hull.incidence[f]);
        p.positive_facet_origin.push_back(origin[f]);
        p.positive_facet_wall.push_back(wall[f]);
    }
    return p;
}

GroupPolytope build_polytope(const RootSystem& rs, const std::vector<Vec>& normals) {
    return build_polytope(std::make_shared<const RootSystem>(rs), normals);
}

PositivePart positive_part(const GroupPolytope& p) {
    PositivePart out;
    out.vertices = p.positive.vertices;
    for (size_t f = 0; f < p.positive.facets.size(); ++f) {
        if (p.positive_facet_origin[f] >= 0)
            out.outer_facets.push_back(
                {p.outer[static_cast<size_t>(p.positive_facet_origin[f])],
                 p.positive.incidence[f]});
        else
            out.wall_facets.push_back({p.positive_facet_wall[f], p.positive.incidence[f]});
    }
    return out;
}

bool is_fine(const GroupPolytope& p) {
    for (const auto& v : p.geom.vertices) {
        int on = 0;
        for (const auto& f : p.full)
            if (RootSystem::pair(f.u, v) == f.lambda) ++on;
        if (on != p.rs->rank) return false;
    }
    return true;
}

LabelResult label_I(const GroupPolytope& p) {
    const RootSystem& rs = *p.rs;
    LabelResult res;
    bool first = true;
    for (const auto& f : p.outer) {
        Rational two_rho_u = 2 * rho_pairing(rs, f.u);
        if (first || two_rho_u > res.I) {
            res.I = two_rho_u;
            res.witness_u = f.u;
            first = false;
        }
    }
    if (res.I <= 0) throw internal_error("label I(P) must be positive");
    res.t0 = 2 * (1 + 1 / res.I);

    // t0 * rho lies on the witness facet and inside every other one.
    Vec rho = vec_scale(Rational(1, 2), rs.two_rho);
    Vec exit_point = vec_scale(res.t0, rho);
    for (const auto& f : p.outer) {
        Rational v = RootSystem::pair(f.u, exit_point);
        if (v > f.lambda) throw internal_error("t0*rho violates an outer facet");
        if (f.u == res.witness_u && v != f.lambda)
            throw internal_error("t0*rho misses the witness facet");
    }
    return res;
}

}  // namespace fanopoly
