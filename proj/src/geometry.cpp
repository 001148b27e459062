#include "fanopoly/geometry.hpp"

#include <algorithm>
#include <functional>
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

// Enumerate all (size)-subsets of [0, n).
void for_each_subset(int n, int size, const std::function<void(const std::vector<int>&)>& fn) {
    std::vector<int> idx(size);
    std::function<void(int, int)> rec = [&](int start, int depth) {
        if (depth == size) {
            fn(idx);
            return;
        }
        for (int i = start; i <= n - (size - depth); ++i) {
            idx[depth] = i;
            rec(i + 1, depth + 1);
        }
    };
    if (size == 0)
        fn({});
    else if (n >= size)
        rec(0, 0);
}

}  // namespace

bool positively_spans(const std::vector<Vec>& normals, int dim) {
    if (normals.empty()) return false;
    Mat m(normals.begin(), normals.end());
    if (rank_of(m) < dim) return false;
    // A nontrivial recession cone has an extreme ray lying on dim-1
    // independent active constraints (the lineality case is excluded by
    // the rank check above).
    bool unbounded = false;
    for_each_subset(static_cast<int>(normals.size()), dim - 1, [&](const std::vector<int>& sub) {
        if (unbounded) return;
        Mat rows;
        for (int i : sub) rows.push_back(normals[i]);
        auto ns = rows.empty() ? std::vector<Vec>{} : nullspace(rows);
        if (rows.empty()) {
            // dim == 1: the ray direction is just +-e_0
            ns = {Vec{Rational(1)}};
        }
        if (ns.size() != 1) return;
        for (const Vec& d : {ns[0], vec_scale(Rational(-1), ns[0])}) {
            bool recession = true;
            for (const auto& n : normals)
                if (dot(n, d) > 0) {
                    recession = false;
                    break;
                }
            if (recession) {
                unbounded = true;
                return;
            }
        }
    });
    return !unbounded;
}

HullResult enumerate_vertices(const std::vector<Halfspace>& hs, int dim) {
    std::vector<Vec> normals;
    for (const auto& h : hs) normals.push_back(h.normal);
    if (!positively_spans(normals, dim)) throw input_error("unbounded polytope");

    std::set<std::string> seen;
    std::vector<Vec> verts;
    for_each_subset(static_cast<int>(hs.size()), dim, [&](const std::vector<int>& sub) {
        Mat a;
        Vec b;
        for (int i : sub) {
            a.push_back(hs[i].normal);
            b.push_back(hs[i].offset);
        }
        auto y = solve(a, b);
        if (!y) return;
        for (const auto& h : hs)
            if (dot(h.normal, *y) > h.offset) return;
        if (seen.insert(vec_key(*y)).second) verts.push_back(std::move(*y));
    });
    std::sort(verts.begin(), verts.end(), lex_less);

    HullResult res;
    res.vertices = std::move(verts);
    res.genuine.resize(hs.size());
    res.incidence.resize(hs.size());
    for (size_t f = 0; f < hs.size(); ++f) {
        std::vector<Vec> on;
        for (size_t v = 0; v < res.vertices.size(); ++v)
            if (dot(hs[f].normal, res.vertices[v]) == hs[f].offset) {
                res.incidence[f].push_back(static_cast<int>(v));
                on.push_back(res.vertices[v]);
            }
        res.genuine[f] = affine_dim(on) == dim - 1;
    }
    return res;
}

Polytope make_polytope(const std::vector<Halfspace>& hs, int dim) {
    HullResult hull = enumerate_vertices(hs, dim);
    if (affine_dim(hull.vertices) != dim) throw internal_error("polytope not full-dimensional");
    Polytope p;
    p.dim = dim;
    p.vertices = hull.vertices;
    for (size_t f = 0; f < hs.size(); ++f) {
        if (!hull.genuine[f]) continue;
        p.facets.push_back(hs[f]);
        p.incidence.push_back(hull.incidence[f]);
    }
    return p;
}

namespace {

// Star-triangulate the face with the given vertex set (dimension k).
void triangulate_face(const Polytope& p, const std::vector<int>& face, int k, bool greatest,
                      std::vector<std::vector<int>>& out) {
    if (static_cast<int>(face.size()) == k + 1) {
        out.push_back(face);
        return;
    }
    // Vertices are globally lex-sorted, so the least/greatest index in the
    // face is its lex-least/greatest vertex.
    int anchor = greatest ? face.back() : face.front();
    // subfaces of the face = intersections with the polytope's facets
    std::set<std::vector<int>> subs;
    for (const auto& inc : p.incidence) {
        std::vector<int> cut;
        std::set_intersection(face.begin(), face.end(), inc.begin(), inc.end(),
                              std::back_inserter(cut));
        if (cut == face) continue;
        std::vector<Vec> pts;
        for (int i : cut) pts.push_back(p.vertices[i]);
        if (affine_dim(pts) == k - 1) subs.insert(cut);
    }
    if (subs.empty()) throw internal_error("face recursion found no subfaces");
    for (const auto& sub : subs) {
        if (std::binary_search(sub.begin(), sub.end(), anchor)) continue;
        std::vector<std::vector<int>> lower;
        triangulate_face(p, sub, k - 1, greatest, lower);
        for (auto& simp : lower) {
            simp.push_back(anchor);
            std::sort(simp.begin(), simp.end());
            out.push_back(std::move(simp));
        }
    }
}

}  // namespace

std::vector<std::vector<int>> triangulate(const Polytope& p, bool anchor_greatest) {
    std::vector<int> all(p.vertices.size());
    for (size_t i = 0; i < all.size(); ++i) all[i] = static_cast<int>(i);
    std::vector<std::vector<int>> out;
    triangulate_face(p, all, p.dim, anchor_greatest, out);
    std::sort(out.begin(), out.end());
    return out;
}

bool polytope_contains(const Polytope& p, const Vec& y) {
    for (const auto& h : p.facets)
        if (dot(h.normal, y) > h.offset) return false;
    return true;
}

}  // namespace fanopoly
