#include <doctest.h>

#include <memory>
#include <set>
#include <sstream>

#include "fanopoly/enumerate.hpp"
#include "fanopoly/jsonio.hpp"

using namespace fanopoly;

namespace {

Vec v2(long x, long y) { return Vec{rat(x), rat(y)}; }

std::shared_ptr<const RootSystem> so4() {
    static auto rs = std::make_shared<const RootSystem>(build_root_system("so4"));
    return rs;
}

std::string report_to_jsonl(const ClassificationReport& report) {
    std::ostringstream out;
    for (const auto& entry : report.polytopes) out << dump_line(polytope_record(entry));
    out << dump_line(classify_summary(report));
    return out.str();
}

std::set<std::string> canonical_normal_sets(const ClassificationReport& report) {
    std::set<std::string> keys;
    for (const auto& entry : report.polytopes) {
        std::string k;
        for (const auto& f : entry.polytope.outer) {
            for (const auto& x : f.u) k += x.get_str() + ",";
            k += ";";
        }
        keys.insert(k);
    }
    return keys;
}

}  // namespace

TEST_CASE("candidate normals for so4") {
    auto c3 = candidate_normals(*so4(), rat(3));
    CHECK(c3 == std::vector<Vec>{v2(1, -1), v2(1, 0), v2(1, 1), v2(2, -1), v2(2, 1),
                                 v2(3, -2), v2(3, -1), v2(3, 1), v2(3, 2)});
    auto c1 = candidate_normals(*so4(), rat(1));
    CHECK(c1 == std::vector<Vec>{v2(1, -1), v2(1, 0), v2(1, 1)});
    CHECK(candidate_normals(*so4(), rat(0)).empty());
    // every candidate is primitive, in the dual chamber, with rho in range
    for (const auto& u : c3) {
        CHECK(is_primitive_integer_vec(u));
        CHECK(chamber_position_dual(*so4(), u) != ChamberPosition::outside);
        CHECK(rho_pairing(*so4(), u) >= 1);
        CHECK(rho_pairing(*so4(), u) <= 3);
    }
}

TEST_CASE("candidate enumeration rejects unsupported input") {
    RootSystem t2 = build_root_system("T2");
    CHECK_THROWS_AS(candidate_normals(t2, rat(3)), input_error);
    RootSystem a1 = build_root_system("A1");
    CHECK_THROWS_AS(candidate_normals(a1, rat(3)), input_error);
    CHECK_THROWS_AS(candidate_normals(*so4(), rat(-1)), input_error);
}

TEST_CASE("classification rejects non-semisimple or wrong-rank groups") {
    auto t2 = std::make_shared<const RootSystem>(build_root_system("T2"));
    CHECK_THROWS_AS(classify(t2, rat(3)), input_error);
    auto mixed = std::make_shared<const RootSystem>(build_root_system("A1xT1"));
    CHECK_THROWS_AS(classify(mixed, rat(3)), input_error);
    auto a1 = std::make_shared<const RootSystem>(build_root_system("A1"));
    CHECK_THROWS_AS(classify(a1, rat(3)), input_error);
    CHECK_THROWS_AS(classify(so4(), rat(1, 2)), input_error);
    CHECK_THROWS_AS(classify(so4(), rat(2), 0), input_error);
}

TEST_CASE("classification at p_max = 1") {
    ClassificationReport report = classify(so4(), rat(1));
    CHECK(report.candidate_count == 3);
    CHECK(report.subsets_considered == 7);
    // valid: the square, the diamond, and the two hexagons
    CHECK(report.polytopes.size() == 4);
    REQUIRE(report.ke_indices.size() == 2);
    std::set<std::string> ke_keys;
    for (size_t i : report.ke_indices) {
        std::string k;
        for (const auto& f : report.polytopes[i].polytope.outer) {
            for (const auto& x : f.u) k += x.get_str() + ",";
            k += ";";
        }
        ke_keys.insert(k);
    }
    CHECK(ke_keys == std::set<std::string>{"1,0,;", "1,-1,;1,1,;"});
}

TEST_CASE("every entry passes its own invariants") {
    ClassificationReport report = classify(so4(), rat(2));
    for (const auto& entry : report.polytopes) {
        CHECK(entry.fine);  // rank 2: always fine
        CHECK(entry.I <= 4);
        CHECK(entry.I >= 2);
        CHECK(entry.verdict.moments.vol_pi > 0);
        // canonical normal set: sorted, primitive, chamber
        for (const auto& f : entry.polytope.outer) {
            CHECK(is_primitive_integer_vec(f.u));
            CHECK(chamber_position_dual(*so4(), f.u) != ChamberPosition::outside);
        }
    }
    // no duplicate canonical sets
    CHECK(canonical_normal_sets(report).size() == report.polytopes.size());
}

TEST_CASE("reports grow monotonically with the cutoff") {
    auto keys1 = canonical_normal_sets(classify(so4(), rat(1)));
    auto keys2 = canonical_normal_sets(classify(so4(), rat(2)));
    for (const auto& k : keys1) CHECK(keys2.count(k) == 1);
    CHECK(keys2.size() > keys1.size());
}

TEST_CASE("classification output is byte-identical across thread counts") {
    std::string base = report_to_jsonl(classify(so4(), rat(2), 1));
    CHECK(report_to_jsonl(classify(so4(), rat(2), 4)) == base);
    CHECK(report_to_jsonl(classify(so4(), rat(2), 8)) == base);
    CHECK(!base.empty());
}

TEST_CASE("classification runs on other rank-2 semisimple groups") {
    // G2: the smallest label is rho(1,0) = 3, so the cutoff 2 is empty and
    // cutoff 3 holds exactly the wonderful-compactification polytope.
    auto g2 = std::make_shared<const RootSystem>(build_root_system("G2"));
    CHECK(classify(g2, rat(2)).polytopes.empty());
    ClassificationReport g2r = classify(g2, rat(3));
    REQUIRE(g2r.polytopes.size() == 1);
    CHECK(g2r.polytopes[0].I == 6);
    CHECK(g2r.polytopes[0].fine);
    CHECK(g2r.polytopes[0].verdict.status == KEStatus::KE);

    auto a2 = std::make_shared<const RootSystem>(build_root_system("A2"));
    ClassificationReport a2r = classify(a2, rat(2));
    CHECK(a2r.polytopes.size() == 7);
    for (const auto& entry : a2r.polytopes) CHECK(entry.fine);
}

TEST_CASE("prefilter agrees with the exact builder") {
    // every subset the tables accept builds cleanly (build_polytope throws
    // otherwise and classify would abort); conversely, subsets the tables
    // reject must fail the exact builder too
    auto cands = candidate_normals(*so4(), rat(2));
    ClassificationReport report = classify(so4(), rat(2));
    std::set<std::string> accepted = canonical_normal_sets(report);
    long rejected_checked = 0;
    for (unsigned long mask = 1; mask < (1UL << cands.size()); ++mask) {
        std::vector<Vec> normals;
        std::string key;
        for (size_t c = 0; c < cands.size(); ++c)
            if (mask >> c & 1) {
                normals.push_back(cands[c]);
                for (const auto& x : cands[c]) key += x.get_str() + ",";
                key += ";";
            }
        if (accepted.count(key)) continue;
        ++rejected_checked;
        CHECK_THROWS_AS(build_polytope(so4(), normals), input_error);
    }
    CHECK(rejected_checked + static_cast<long>(report.polytopes.size()) ==
          report.subsets_considered);
}
