// JSON records with stable field order and canonical rational strings.
//
// Exact rationals are serialized as "p/q" strings in lowest terms with
// positive denominator ("p" when integral); floating values appear only
// inside "approx"/"mc" fields and carry a '~' prefix.  Records with the
// same content are byte-identical across runs.

#pragma once

#include <json.hpp>

#include <string>

#include "fanopoly/bound.hpp"
#include "fanopoly/enumerate.hpp"

namespace fanopoly {

using Json = nlohmann::ordered_json;

Json rat_json(const Rational& r);
Json vec_json(const Vec& v);
Json mat_json(const Mat& m);
Json int_vec_json(const Vec& v);  // lattice vector as JSON integers

// One classify/check record: polytope data, exact moments, verdict.
Json polytope_record(const ClassifiedPolytope& entry);

// MC oracle attachment.
Json mc_json(const McMomentResult& mc, bool agree);

Json classify_summary(const ClassificationReport& report);
Json omega_record(const OmegaResult& omega, const Rational& tol);
Json rootsys_record(const RootSystem& rs);

std::string dump_line(const Json& j);

struct PolytopeFile {
    std::string group;
    std::vector<Vec> outer_normals;
};

PolytopeFile parse_polytope_json(const std::string& text);
PolytopeFile load_polytope_file(const std::string& path);

}  // namespace fanopoly
