#include "fanopoly/cli.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <memory>

#include "fanopoly/jsonio.hpp"

namespace fanopoly {

namespace {

constexpr std::uint64_t kDefaultSeed = 20240817;

std::uint64_t default_seed() {
    if (const char* env = std::getenv("FANOPOLY_SEED")) {
        try {
            return std::stoull(env);
        } catch (const std::exception&) {
            throw input_error("FANOPOLY_SEED must be an unsigned integer");
        }
    }
    return kDefaultSeed;
}

struct Options {
    std::string group = "so4";
    std::string rho_max = "3";
    std::string polytope_path;
    std::string output;
    std::string tol = "1/1000000000";
    long mc_samples = 1000000;
    std::uint64_t seed = 0;
    bool seed_given = false;
    bool verify = false;
    int parallel = 1;
    int dim = 6;
};

// Builds one classified entry for an explicitly given polytope.
ClassifiedPolytope check_one(const PolytopeFile& file) {
    auto rs = std::make_shared<const RootSystem>(build_root_system(file.group));
    ClassifiedPolytope entry;
    entry.polytope = build_polytope(rs, file.outer_normals);
    LabelResult label = label_I(entry.polytope);
    entry.I = label.I;
    entry.t0 = label.t0;
    entry.fine = is_fine(entry.polytope);
    entry.verdict = ke_verdict(*rs, entry.polytope);
    return entry;
}

// Appends the MC cross-check to a record; returns agreement.
bool attach_mc(Json& record, const ClassifiedPolytope& entry, long samples,
               std::uint64_t seed) {
    McMomentResult mc = mc_moments(entry.polytope, samples, seed);
    bool agree = mc_agrees(entry.verdict.moments, mc);
    record["mc"] = mc_json(mc, agree);
    return agree;
}

int dispatch(const Options& opt, const std::string& cmd, std::ostream& out,
             std::ostream& err) {
    std::ofstream file_out;
    std::ostream* sink = &out;
    if (!opt.output.empty() && opt.output != "-") {
        file_out.open(opt.output);
        if (!file_out) throw input_error("cannot open output file: " + opt.output);
        sink = &file_out;
    }
    std::uint64_t seed = opt.seed_given ? opt.seed : default_seed();

    if (cmd == "classify") {
        if (opt.mc_samples < 1 && opt.verify)
            throw input_error("--verify needs --mc-samples >= 1");
        auto rs = std::make_shared<const RootSystem>(build_root_system(opt.group));
        ClassificationReport report = classify(rs, rat_from_string(opt.rho_max), opt.parallel);
        bool all_agree = true;
        for (const auto& entry : report.polytopes) {
            Json record = polytope_record(entry);
            if (opt.verify) all_agree &= attach_mc(record, entry, opt.mc_samples, seed);
            *sink << dump_line(record);
        }
        *sink << dump_line(classify_summary(report));
        if (!all_agree) {
            err << "verification failed: Monte-Carlo oracle disagrees beyond 3 sigma\n";
            return 2;
        }
        return 0;
    }
    if (cmd == "check" || cmd == "barycenter") {
        if (opt.polytope_path.empty()) throw input_error("--polytope FILE is required");
        ClassifiedPolytope entry = check_one(load_polytope_file(opt.polytope_path));
        Json record;
        if (cmd == "check") {
            record = polytope_record(entry);
        } else {
            const GroupPolytope& p = entry.polytope;
            record["group"] = p.rs->label;
            Json normals = Json::array();
            for (const auto& f : p.outer) normals.push_back(int_vec_json(f.u));
            record["outer_normals"] = normals;
            record["vol_pi"] = rat_json(entry.verdict.moments.vol_pi);
            record["barycenter"] = vec_json(entry.verdict.moments.barycenter);
            record["simplex_count"] = entry.verdict.moments.simplex_count;
            Json approx;
            approx["vol_pi"] = rat_to_approx_string(entry.verdict.moments.vol_pi);
            record["approx"] = approx;
        }
        bool agree = true;
        if (opt.verify) agree = attach_mc(record, entry, opt.mc_samples, seed);
        *sink << dump_line(record);
        if (!agree) {
            err << "verification failed: Monte-Carlo oracle disagrees beyond 3 sigma\n";
            return 2;
        }
        return 0;
    }
    if (cmd == "omega") {
        Rational tol = rat_from_string(opt.tol);
        OmegaResult omega = omega_generic(opt.dim, tol);
        *sink << dump_line(omega_record(omega, tol));
        return 0;
    }
    if (cmd == "rootsys-show") {
        RootSystem rs = build_root_system(opt.group);
        *sink << dump_line(rootsys_record(rs));
        return 0;
    }
    throw internal_error("unhandled command " + cmd);
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Moment-polytope classification of Q-Fano group compactifications"};
    app.require_subcommand(1);
    Options opt;

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--output", opt.output, "write records here instead of stdout");
    };
    auto add_mc = [&](CLI::App* sub) {
        sub->add_flag("--verify", opt.verify,
                      "cross-check exact moments against the Monte-Carlo oracle");
        sub->add_option("--mc-samples", opt.mc_samples, "Monte-Carlo sample count")
            ->check(CLI::NonNegativeNumber);
        sub->add_option("--seed", opt.seed, "Monte-Carlo seed (default: FANOPOLY_SEED or built-in)")
            ->each([&](const std::string&) { opt.seed_given = true; });
    };

    CLI::App* classify_cmd = app.add_subcommand("classify", "enumerate and classify polytopes");
    classify_cmd->add_option("--group", opt.group, "group type label");
    classify_cmd->add_option("--rho-max", opt.rho_max, "cutoff in rho-units (rational)");
    classify_cmd->add_option("--parallel", opt.parallel, "worker threads")
        ->check(CLI::PositiveNumber);
    add_common(classify_cmd);
    add_mc(classify_cmd);

    CLI::App* check_cmd = app.add_subcommand("check", "verdict for one polytope file");
    check_cmd->add_option("--polytope", opt.polytope_path, "polytope JSON file");
    add_common(check_cmd);
    add_mc(check_cmd);

    CLI::App* bary_cmd = app.add_subcommand("barycenter", "moments for one polytope file");
    bary_cmd->add_option("--polytope", opt.polytope_path, "polytope JSON file");
    add_common(bary_cmd);
    add_mc(bary_cmd);

    CLI::App* omega_cmd = app.add_subcommand("omega", "finiteness cutoff for dimension n");
    omega_cmd->add_option("--dim", opt.dim, "complex dimension n")->check(CLI::PositiveNumber);
    omega_cmd->add_option("--tol", opt.tol, "interval width (rational)");
    add_common(omega_cmd);

    CLI::App* rs_cmd = app.add_subcommand("rootsys-show", "print root system data");
    rs_cmd->add_option("--group", opt.group, "group type label");
    add_common(rs_cmd);

    std::vector<std::string> argv_rev(args.rbegin(), args.rend());
    try {
        app.parse(argv_rev);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            // --help and friends
            out << app.help();
            return 0;
        }
        err << "error: " << e.what() << "\n";
        return 1;
    }

    try {
        for (auto* sub : {classify_cmd, check_cmd, bary_cmd, omega_cmd, rs_cmd})
            if (sub->parsed()) return dispatch(opt, sub->get_name(), out, err);
        err << "error: no command given\n";
        return 1;
    } catch (const input_error& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    } catch (const internal_error& e) {
        err << "internal error: " << e.what() << "\n";
        return 2;
    }
}

}  // namespace fanopoly
