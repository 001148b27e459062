#include "fanopoly/enumerate.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <bitset>
#include <map>
#include <string>
#include <thread>

namespace fanopoly {

namespace {

long floor_rat(const Rational& r) {
    Integer q;
    mpz_fdiv_q(q.get_mpz_t(), r.get_num().get_mpz_t(), r.get_den().get_mpz_t());
    return q.get_si();
}

long ceil_rat(const Rational& r) {
    Integer q;
    mpz_cdiv_q(q.get_mpz_t(), r.get_num().get_mpz_t(), r.get_den().get_mpz_t());
    return q.get_si();
}

std::string vec_key(const Vec& v) {
    std::string k;
    for (const auto& x : v) {
        k += x.get_str();
        k += ',';
    }
    return k;
}

}  // namespace

std::vector<Vec> candidate_normals(const RootSystem& rs, const Rational& p_max) {
    if (rs.rank != 2 || rs.ss_rank != 2)
        throw input_error("candidate enumeration supports semisimple rank 2 only");
    if (p_max < 0) throw input_error("p_max must be nonnegative");

    std::vector<Vec> out;
    if (p_max == 0) return out;

    // Corner box from the coefficient bounds c_j = 2 alpha_j(u)/|alpha_j|^2
    // in [0, 4 p_max / |alpha_j|^2]: solve alpha_j(u) = c_j |alpha_j|^2 / 2
    // at the four corners and take the integer bounding box.
    Mat pairing{rs.simple_roots[0], rs.simple_roots[1]};
    Rational n1 = rs.root_norm2(0), n2 = rs.root_norm2(1);
    const Rational zero(0);
    const Rational c1_max = 4 * p_max / n1;
    const Rational c2_max = 4 * p_max / n2;
    std::vector<Vec> corners;
    for (const Rational& c1 : {zero, c1_max})
        for (const Rational& c2 : {zero, c2_max}) {
            Vec rhs{Rational(c1 * n1 / 2), Rational(c2 * n2 / 2)};
            auto u = solve(pairing, rhs);
            if (!u) throw internal_error("degenerate simple-root pairing");
            corners.push_back(*u);
        }
    long x_lo = 0, x_hi = 0, y_lo = 0, y_hi = 0;
    for (size_t i = 0; i < corners.size(); ++i) {
        long cx_lo = floor_rat(corners[i][0]), cx_hi = ceil_rat(corners[i][0]);
        long cy_lo = floor_rat(corners[i][1]), cy_hi = ceil_rat(corners[i][1]);
        if (i == 0) {
            x_lo = cx_lo, x_hi = cx_hi, y_lo = cy_lo, y_hi = cy_hi;
        } else {
            x_lo = std::min(x_lo, cx_lo), x_hi = std::max(x_hi, cx_hi);
            y_lo = std::min(y_lo, cy_lo), y_hi = std::max(y_hi, cy_hi);
        }
    }

    for (long x = x_lo; x <= x_hi; ++x)
        for (long y = y_lo; y <= y_hi; ++y) {
            Vec u{Rational(x), Rational(y)};
            if (!is_primitive_integer_vec(u)) continue;
            if (chamber_position_dual(rs, u) == ChamberPosition::outside) continue;
            Rational rho = rho_pairing(rs, u);
            if (rho <= 0 || rho > p_max) continue;
            out.push_back(std::move(u));
        }
    std::sort(out.begin(), out.end(), lex_less);

    // a posteriori check of the coefficient bound on every survivor
    for (const auto& u : out) {
        for (int j = 0; j < 2; ++j) {
            Rational cj = 2 * RootSystem::pair(u, rs.simple_roots[j]) / rs.root_norm2(j);
            if (cj > 4 * rho_pairing(rs, u) / rs.root_norm2(j))
                throw internal_error("candidate violates the coefficient bound");
        }
    }
    return out;
}

namespace {

constexpr size_t kMaxFacets = 128;
using FacetMask = std::bitset<kMaxFacets>;

struct SubsetTables {
    // per candidate: indices of its orbit facets, and its representative
    std::vector<std::vector<int>> facets_of;
    std::vector<int> rep_facet;
    std::vector<Vec> facet_normals;
    std::vector<Rational> facet_offsets;
    // per facet: recession masks for its two perpendicular directions
    std::vector<std::array<FacetMask, 2>> recession;
    // per candidate point: facets it violates / lies on
    std::vector<FacetMask> point_violates, point_on;
};

SubsetTables build_tables(const RootSystem& rs, const std::vector<Vec>& cands) {
    SubsetTables t;
    for (const auto& u : cands) {
        Rational lambda = 1 + 2 * rho_pairing(rs, u);
        std::vector<int> idx;
        int rep = -1;
        for (const auto& img : weyl_orbit_dual(rs, u)) {
            if (img == u) rep = static_cast<int>(t.facet_normals.size());
            idx.push_back(static_cast<int>(t.facet_normals.size()));
            t.facet_normals.push_back(img);
            t.facet_offsets.push_back(lambda);
        }
        if (rep < 0) throw internal_error("candidate missing from its own orbit");
        t.facets_of.push_back(std::move(idx));
        t.rep_facet.push_back(rep);
    }
    size_t nf = t.facet_normals.size();
    if (nf > kMaxFacets) throw input_error("cutoff too large for exhaustive enumeration");

    for (size_t f = 0; f < nf; ++f) {
        const Vec& n = t.facet_normals[f];
        Vec d{-n[1], n[0]};
        std::array<FacetMask, 2> masks;
        for (int s = 0; s < 2; ++s) {
            Vec dir = s == 0 ? d : vec_scale(Rational(-1), d);
            for (size_t g = 0; g < nf; ++g)
                if (dot(t.facet_normals[g], dir) <= 0) masks[s].set(g);
        }
        t.recession.push_back(masks);
    }

    std::map<std::string, size_t> point_index;
    std::vector<Vec> points;
    for (size_t f = 0; f < nf; ++f)
        for (size_t g = f + 1; g < nf; ++g) {
            Mat a{t.facet_normals[f], t.facet_normals[g]};
            auto y = solve(a, Vec{t.facet_offsets[f], t.facet_offsets[g]});
            if (!y) continue;
            auto key = vec_key(*y);
            if (!point_index.count(key)) {
                point_index.emplace(key, points.size());
                points.push_back(*y);
            }
        }
    t.point_violates.resize(points.size());
    t.point_on.resize(points.size());
    for (size_t p = 0; p < points.size(); ++p)
        for (size_t f = 0; f < nf; ++f) {
            Rational v = dot(t.facet_normals[f], points[p]);
            if (v > t.facet_offsets[f]) t.point_violates[p].set(f);
            if (v == t.facet_offsets[f]) t.point_on[p].set(f);
        }
    return t;
}

// Bounded and every chosen normal supports a facet, via the tables only.
bool subset_valid(const SubsetTables& t, unsigned long mask, size_t ncand) {
    FacetMask fm;
    for (size_t c = 0; c < ncand; ++c)
        if (mask >> c & 1)
            for (int f : t.facets_of[c]) fm.set(f);
    // bounded: no facet's perpendicular is a recession direction
    for (size_t c = 0; c < ncand; ++c) {
        if (!(mask >> c & 1)) continue;
        for (int f : t.facets_of[c])
            for (int s = 0; s < 2; ++s)
                if ((fm & ~t.recession[static_cast<size_t>(f)][s]).none()) return false;
    }
    // genuineness of each representative facet: two feasible points on it
    for (size_t c = 0; c < ncand; ++c) {
        if (!(mask >> c & 1)) continue;
        size_t rep = static_cast<size_t>(t.rep_facet[c]);
        int found = 0;
        for (size_t p = 0; p < t.point_on.size() && found < 2; ++p)
            if (t.point_on[p].test(rep) && (t.point_violates[p] & fm).none()) ++found;
        if (found < 2) return false;
    }
    return true;
}

}  // namespace

ClassificationReport classify(const std::shared_ptr<const RootSystem>& rs_ptr,
                              const Rational& p_max, int parallel) {
    const RootSystem& rs = *rs_ptr;
    if (!rs.semisimple())
        throw input_error("classification requires a semisimple group");
    if (rs.rank != 2) throw input_error("classification supports rank 2 only");
    if (p_max < 1) throw input_error("p_max must be at least 1");
    if (parallel < 1) throw input_error("parallel must be at least 1");

    ClassificationReport report;
    report.group = rs.label;
    report.rho_max = p_max;

    std::vector<Vec> cands = candidate_normals(rs, p_max);
    report.candidate_count = static_cast<long>(cands.size());
    if (cands.size() > 22) throw input_error("cutoff too large for exhaustive enumeration");
    unsigned long nmask = (1UL << cands.size()) - 1;
    report.subsets_considered = static_cast<long>(nmask);

    SubsetTables tables = build_tables(rs, cands);
    std::vector<unsigned long> valid_masks;
    for (unsigned long mask = 1; mask <= nmask; ++mask)
        if (subset_valid(tables, mask, cands.size())) valid_masks.push_back(mask);

    // exact rebuild + moments + verdict for the survivors, in parallel;
    // results land in mask-indexed slots, so the outcome is schedule-free
    std::vector<ClassifiedPolytope> slots(valid_masks.size());
    std::atomic<size_t> next{0};
    auto worker = [&]() {
        for (;;) {
            size_t i = next.fetch_add(1);
            if (i >= valid_masks.size()) return;
            unsigned long mask = valid_masks[i];
            std::vector<Vec> normals;
            for (size_t c = 0; c < cands.size(); ++c)
                if (mask >> c & 1) normals.push_back(cands[c]);
            ClassifiedPolytope entry;
            entry.polytope = build_polytope(rs_ptr, normals);
            LabelResult label = label_I(entry.polytope);
            entry.I = label.I;
            entry.t0 = label.t0;
            entry.fine = is_fine(entry.polytope);
            entry.verdict = ke_verdict(rs, entry.polytope);
            slots[i] = std::move(entry);
        }
    };
    if (parallel == 1 || valid_masks.size() < 2) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (int i = 0; i < parallel; ++i) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
    }

    std::sort(slots.begin(), slots.end(), [](const ClassifiedPolytope& a,
                                             const ClassifiedPolytope& b) {
        const auto& na = a.polytope.outer;
        const auto& nb = b.polytope.outer;
        for (size_t i = 0; i < std::min(na.size(), nb.size()); ++i) {
            if (na[i].u != nb[i].u) return lex_less(na[i].u, nb[i].u);
        }
        return na.size() < nb.size();
    });
    for (size_t i = 0; i + 1 < slots.size(); ++i) {
        if (slots[i].polytope.outer.size() == slots[i + 1].polytope.outer.size()) {
            bool same = true;
            for (size_t j = 0; j < slots[i].polytope.outer.size(); ++j)
                if (slots[i].polytope.outer[j].u != slots[i + 1].polytope.outer[j].u)
                    same = false;
            if (same) throw internal_error("duplicate canonical normal set in report");
        }
    }
    report.polytopes = std::move(slots);
    for (size_t i = 0; i < report.polytopes.size(); ++i)
        if (report.polytopes[i].verdict.status == KEStatus::KE) report.ke_indices.push_back(i);
    return report;
}

}  // namespace fanopoly
