// Exhaustive classification of rank-2 Q-Fano group polytopes up to a
// label cutoff.
//
// Candidates are the primitive lattice normals u in the closed dual
// chamber with 0 < rho(u) <= p_max; the coefficient bound
// c_j <= 4 rho(u)/|alpha_j|^2 makes this set finite and is re-verified
// on every returned normal.  Every nonempty candidate subset is tested
// for validity (bounded, every normal supports a facet); survivors get
// exact moments and a verdict.  Subset filtering runs on precomputed
// incidence tables, the survivors are rebuilt through build_polytope
// with all its exact checks.

#pragma once

#include "fanopoly/stability.hpp"

namespace fanopoly {

std::vector<Vec> candidate_normals(const RootSystem& rs, const Rational& p_max);

struct ClassifiedPolytope {
    GroupPolytope polytope;
    Rational I;
    Rational t0;
    bool fine = false;
    Verdict verdict;  // carries the moments
};

struct ClassificationReport {
    std::string group;
    Rational rho_max;
    long candidate_count = 0;
    long subsets_considered = 0;
    std::vector<ClassifiedPolytope> polytopes;  // sorted by canonical normal set
    std::vector<size_t> ke_indices;             // into `polytopes`
};

// parallel >= 1 threads; the report is byte-identical for any thread count.
ClassificationReport classify(const std::shared_ptr<const RootSystem>& rs,
                              const Rational& p_max, int parallel = 1);

}  // namespace fanopoly
