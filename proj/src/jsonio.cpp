#include "fanopoly/jsonio.hpp"

#include <fstream>
#include <sstream>

namespace fanopoly {

Json rat_json(const Rational& r) { return rat_to_string(r); }

Json vec_json(const Vec& v) {
    Json a = Json::array();
    for (const auto& x : v) a.push_back(rat_json(x));
    return a;
}

Json mat_json(const Mat& m) {
    Json a = Json::array();
    for (const auto& row : m) a.push_back(vec_json(row));
    return a;
}

Json int_vec_json(const Vec& v) {
    Json a = Json::array();
    for (const auto& x : v) {
        if (x.get_den() != 1) throw internal_error("lattice vector with non-integer entry");
        a.push_back(static_cast<long>(x.get_num().get_si()));
    }
    return a;
}

namespace {

Json approx_vec(const Vec& v) {
    Json a = Json::array();
    for (const auto& x : v) a.push_back(rat_to_approx_string(x));
    return a;
}

Json certificate_json(const Certificate& cert) {
    Json j;
    if (cert.kind == Certificate::Kind::fundamental_weight) {
        j["kind"] = "fundamental_weight";
        j["index"] = cert.index;
    } else {
        j["kind"] = "linear";
        j["xi"] = vec_json(cert.xi);
    }
    j["futaki"] = rat_json(cert.futaki);
    return j;
}

}  // namespace

Json polytope_record(const ClassifiedPolytope& entry) {
    const GroupPolytope& p = entry.polytope;
    Json j;
    j["group"] = p.rs->label;
    Json normals = Json::array();
    Json lambdas = Json::array();
    for (const auto& f : p.outer) {
        normals.push_back(int_vec_json(f.u));
        lambdas.push_back(rat_json(f.lambda));
    }
    j["outer_normals"] = normals;
    j["lambda"] = lambdas;
    j["I"] = rat_json(entry.I);
    j["t0"] = rat_json(entry.t0);
    j["fine"] = entry.fine;
    Json verts = Json::array();
    for (const auto& v : p.geom.vertices) verts.push_back(vec_json(v));
    j["vertices"] = verts;
    Json pverts = Json::array();
    for (const auto& v : p.positive.vertices) pverts.push_back(vec_json(v));
    j["positive_vertices"] = pverts;
    const Verdict& verdict = entry.verdict;
    j["vol_pi"] = rat_json(verdict.moments.vol_pi);
    j["barycenter"] = vec_json(verdict.moments.barycenter);
    j["simplex_count"] = verdict.moments.simplex_count;
    j["status"] = to_string(verdict.status);
    j["c"] = vec_json(verdict.c);
    j["center"] = vec_json(verdict.center);
    j["certificate"] = verdict.certificate ? certificate_json(*verdict.certificate)
                                           : Json(nullptr);
    Json approx;
    approx["vol_pi"] = rat_to_approx_string(verdict.moments.vol_pi);
    approx["barycenter"] = approx_vec(verdict.moments.barycenter);
    j["approx"] = approx;
    return j;
}

namespace {

std::string approx_double(double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "~%.9g", x);
    return buf;
}

}  // namespace

Json mc_json(const McMomentResult& mc, bool agree) {
    Json j;
    j["samples"] = mc.samples;
    j["accepted"] = mc.accepted;
    j["seed"] = mc.seed;
    j["vol_pi"] = approx_double(mc.vol_pi);
    j["vol_pi_se"] = approx_double(mc.vol_pi_se);
    Json b = Json::array(), se = Json::array();
    for (double x : mc.barycenter) b.push_back(approx_double(x));
    for (double x : mc.barycenter_se) se.push_back(approx_double(x));
    j["barycenter"] = b;
    j["barycenter_se"] = se;
    j["agree"] = agree;
    return j;
}

Json classify_summary(const ClassificationReport& report) {
    Json j;
    j["summary"] = true;
    j["group"] = report.group;
    j["rho_max"] = rat_json(report.rho_max);
    j["label_max"] = rat_json(2 * report.rho_max);
    j["candidates"] = report.candidate_count;
    j["subsets_considered"] = report.subsets_considered;
    j["valid_polytopes"] = static_cast<long>(report.polytopes.size());
    j["ke_count"] = static_cast<long>(report.ke_indices.size());
    Json ke = Json::array();
    for (size_t i : report.ke_indices) {
        Json normals = Json::array();
        for (const auto& f : report.polytopes[i].polytope.outer)
            normals.push_back(int_vec_json(f.u));
        ke.push_back(normals);
    }
    j["ke_outer_normals"] = ke;
    return j;
}

Json omega_record(const OmegaResult& omega, const Rational& tol) {
    Json j;
    j["dim"] = omega.n;
    j["tol"] = rat_json(tol);
    j["I_lo"] = rat_json(omega.lo);
    j["I_hi"] = rat_json(omega.hi);
    j["rho_lo"] = rat_json(omega.rho_lo());
    j["rho_hi"] = rat_json(omega.rho_hi());
    Json approx;
    approx["I"] = rat_to_approx_string((omega.lo + omega.hi) / 2);
    approx["rho"] = rat_to_approx_string((omega.rho_lo() + omega.rho_hi()) / 2);
    j["approx"] = approx;
    return j;
}

Json rootsys_record(const RootSystem& rs) {
    Json j;
    j["group"] = rs.label;
    j["rank"] = rs.rank;
    j["semisimple"] = rs.semisimple();
    Json simple = Json::array(), positive = Json::array(), weights = Json::array();
    for (const auto& a : rs.simple_roots) simple.push_back(vec_json(a));
    for (const auto& a : rs.positive_roots) positive.push_back(vec_json(a));
    for (const auto& w : rs.fundamental_weights) weights.push_back(vec_json(w));
    j["simple_roots"] = simple;
    j["positive_roots"] = positive;
    j["fundamental_weights"] = weights;
    j["two_rho"] = vec_json(rs.two_rho);
    j["gram"] = mat_json(rs.gram);
    j["cartan"] = mat_json(rs.cartan);
    j["inverse_cartan"] = mat_json(inverse_cartan(rs));
    j["weyl_order"] = static_cast<long>(rs.weyl.size());
    return j;
}

std::string dump_line(const Json& j) { return j.dump() + "\n"; }

PolytopeFile parse_polytope_json(const std::string& text) {
    Json j;
    try {
        j = Json::parse(text);
    } catch (const std::exception& e) {
        throw input_error(std::string("malformed polytope JSON: ") + e.what());
    }
    if (!j.is_object() || !j.contains("group") || !j.contains("outer_normals"))
        throw input_error("polytope JSON needs \"group\" and \"outer_normals\"");
    PolytopeFile f;
    if (!j["group"].is_string()) throw input_error("\"group\" must be a string");
    f.group = j["group"].get<std::string>();
    if (!j["outer_normals"].is_array() || j["outer_normals"].empty())
        throw input_error("\"outer_normals\" must be a nonempty array");
    for (const auto& row : j["outer_normals"]) {
        if (!row.is_array()) throw input_error("each outer normal must be an integer array");
        Vec u;
        for (const auto& x : row) {
            if (!x.is_number_integer())
                throw input_error("outer normal entries must be integers");
            u.push_back(Rational(x.get<long>()));
        }
        f.outer_normals.push_back(std::move(u));
    }
    return f;
}

PolytopeFile load_polytope_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw input_error("cannot open polytope file: " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_polytope_json(ss.str());
}

}  // namespace fanopoly
