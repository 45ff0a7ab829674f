#include <cmath>
#include <cstdlib>
#include <iostream>
#include <numbers>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "pierce/fingerhut.hpp"
#include "pierce/generate.hpp"
#include "pierce/json_io.hpp"
#include "pierce/piercing.hpp"
#include "pierce/rng.hpp"
#include "pierce/svg.hpp"

namespace {

using nlohmann::json;

constexpr double kSqrt2 = std::numbers::sqrt2;
constexpr double kTargetAlpha = 1.3660254037844386;  // (1 + sqrt(3)) / 2

std::uint64_t resolve_seed(const CLI::Option* opt, std::uint64_t value) {
    if (opt->count() > 0) return value;
    if (const char* env = std::getenv("PIERCE_SEED")) return std::strtoull(env, nullptr, 10);
    return value;
}

json instance_json(const pierce::Instance& inst) {
    json pts = json::array();
    for (const pierce::Point& p : inst.points) pts.push_back({p.x, p.y});
    return {{"id", inst.id}, {"points", pts}};
}

bool pierced_at(const pierce::Instance& inst, const std::vector<pierce::Edge>& edges,
                pierce::Point c) {
    for (const pierce::Edge& e : edges)
        if (!pierce::in_diametral_disk(inst.points[e.i], inst.points[e.j], c)) return false;
    return true;
}

struct VerifyArgs {
    std::string file;
    std::string tree_file;
    std::string gen_name;
    int trials = 100;
    std::uint64_t seed = 0;
    int n_min = 2;
    int n_max = 64;
};

int run_verify(const VerifyArgs& args) {
    const bool from_file = !args.file.empty();
    if (from_file == !args.gen_name.empty())
        throw pierce::Error("verify: pass exactly one of --file or --gen");

    pierce::RunConfig config;
    config.seed = args.seed;
    config.trials = from_file ? 1 : args.trials;
    config.n_min = args.n_min;
    config.n_max = args.n_max;
    if (!from_file) {
        const auto kind = pierce::generator_from_string(args.gen_name);
        if (!kind) throw pierce::Error("verify: unknown generator '" + args.gen_name + "'");
        config.generator = *kind;
        pierce::validate_config(config);
    }

    bool all_ok = true;
    json violation;
    for (int trial = 0; trial < config.trials; ++trial) {
        const pierce::Instance inst =
            from_file ? pierce::load_instance(args.file) : pierce::generate_instance(config, trial);
        pierce::Tree tree;
        const bool supplied = !args.tree_file.empty();
        if (supplied)
            tree = pierce::tree_from_pairs(inst, pierce::load_edge_list(args.tree_file));
        else
            tree = pierce::max_spanning_tree(inst);

        const pierce::Circle circle =
            pierce::smallest_enclosing_circle(inst, pierce::mix_seed(args.seed, trial)).first;
        const pierce::PiercingReport report = pierce::make_piercing_report(inst, tree, circle);
        const bool helly = pierce::helly_triples(pierce::diametral_disks(inst, tree));
        const double center_ratio =
            tree.edges.empty() ? 1.0 : pierce::max_ratio(circle.center, inst, tree.edges);
        const bool ratio_ok = supplied || center_ratio <= kSqrt2 + 1e-9;
        const bool ok = report.verdict && helly && ratio_ok;

        json line = {{"trial", trial},          {"id", inst.id},
                     {"n", inst.size()},        {"verdict", report.verdict},
                     {"min_angle", report.min_angle}, {"center_ratio", center_ratio},
                     {"helly", helly},          {"ok", ok}};
        std::cout << line.dump() << "\n";
        if (!ok && violation.is_null())
            violation = {{"violation", line}, {"instance", instance_json(inst)}};
        all_ok = all_ok && ok;
    }
    std::cout << json{{"trials", config.trials}, {"all_ok", all_ok}}.dump() << "\n";
    if (!all_ok) {
        std::cout << violation.dump(2) << "\n";
        return 1;
    }
    return 0;
}

int run_ratio(const std::string& file, bool with_optimal, double tol_opt, long long budget,
              std::uint64_t seed) {
    const pierce::Instance inst = pierce::load_instance(file);
    const pierce::RatioReport report =
        pierce::make_ratio_report(inst, with_optimal, tol_opt, budget, {}, seed);
    std::cout << pierce::ratio_report_to_json(report) << "\n";
    return 0;
}

int run_matching(const std::string& file, std::uint64_t seed) {
    const pierce::Instance inst = pierce::load_instance(file);
    const pierce::Matching matching = pierce::max_weight_matching_bruteforce(inst);
    std::vector<pierce::Edge> edges;
    for (const auto& [a, b] : matching.pairs) edges.push_back(pierce::make_edge(inst, a, b));

    const pierce::Circle circle = pierce::smallest_enclosing_circle(inst, seed).first;
    const double at_center = pierce::max_ratio(circle.center, inst, edges);
    const pierce::MinMaxResult opt = pierce::optimal_piercing_ratio(inst, edges, 1e-6, 200000, seed);

    json pairs = json::array();
    for (const auto& [a, b] : matching.pairs) pairs.push_back({a, b});
    const json doc = {
        {"id", inst.id},
        {"matching", {{"pairs", pairs}, {"total_weight", matching.total_weight}}},
        {"ratio_at_center", at_center},
        {"optimal",
         {{"point", {opt.point.x, opt.point.y}},
          {"ratio", opt.ratio},
          {"converged", opt.converged},
          {"evaluations", opt.evaluations}}},
        {"pierced_at_center", pierced_at(inst, edges, circle.center)},
        {"pierced_at_optimal", pierced_at(inst, edges, opt.point)},
        {"sqrt2_ok", opt.ratio <= kSqrt2 + 1e-6}};
    std::cout << doc.dump(2) << "\n";
    return 0;
}

int run_search(std::uint64_t seed, int restarts, long long budget, const std::string& out) {
    const pierce::LowerBoundResult result = pierce::lower_bound_search(seed, restarts, budget);
    json edges = json::array();
    for (const pierce::Edge& e : result.tree_edges) edges.push_back({e.i, e.j});
    const json doc = {{"rho_star", result.rho_star},
                      {"target", kTargetAlpha},
                      {"gap", kTargetAlpha - result.rho_star},
                      {"optimal_point", {result.optimal_point.x, result.optimal_point.y}},
                      {"tree_edges", edges},
                      {"evaluations", result.evaluations},
                      {"instance", instance_json(result.instance)}};
    std::cout << doc.dump(2) << "\n";
    if (!out.empty()) pierce::save_instance(result.instance, out);
    return 0;
}

int run_render(const std::string& file, const std::string& out, bool with_disks,
               std::optional<double> ellipse_alpha, std::uint64_t seed) {
    const pierce::Instance inst = pierce::load_instance(file);
    const pierce::Tree tree = pierce::max_spanning_tree(inst);
    const pierce::Circle circle = pierce::smallest_enclosing_circle(inst, seed).first;
    std::vector<pierce::Disk> disks;
    if (with_disks) disks = pierce::diametral_disks(inst, tree);
    std::vector<pierce::EllipseSpec> ellipses;
    if (ellipse_alpha)
        for (const pierce::Edge& e : tree.edges)
            ellipses.push_back(
                pierce::EllipseSpec{inst.points[e.i], inst.points[e.j], *ellipse_alpha});
    pierce::render_svg(inst, &tree, &circle, disks, ellipses, out);
    return 0;
}

int run_oracle(const std::string& file, std::uint64_t seed) {
    const pierce::Instance inst = pierce::load_instance(file);
    const int n = inst.size();
    json doc = {{"id", inst.id}, {"n", n}};
    bool ok = true;

    if (n <= 8) {
        const pierce::Tree tree = pierce::max_spanning_tree(inst);
        const double best = pierce::enumerate_best_tree_weight(inst);
        const bool match = std::abs(tree.total_weight - best) <= 1e-9 * std::max(1.0, best);
        doc["tree"] = {{"kruskal", tree.total_weight}, {"enumeration", best}, {"match", match}};
        ok = ok && match;
    } else {
        doc["tree"] = "skipped (n > 8)";
    }

    if (n <= 64) {
        const pierce::Circle fast = pierce::smallest_enclosing_circle(inst, seed).first;
        const pierce::Circle brute = pierce::sec_bruteforce(inst);
        const bool match =
            std::abs(fast.radius - brute.radius) <= 1e-9 * std::max(1.0, brute.radius);
        bool contained = true;
        for (const pierce::Point& p : inst.points)
            contained = contained && pierce::dist(p, fast.center) <= fast.radius * (1.0 + 1e-9);
        doc["sec"] = {{"incremental", fast.radius},
                      {"bruteforce", brute.radius},
                      {"match", match},
                      {"containment_ok", contained}};
        ok = ok && match && contained;
    } else {
        doc["sec"] = "skipped (n > 64)";
    }

    doc["ok"] = ok;
    std::cout << doc.dump(2) << "\n";
    return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Maximum spanning trees, smallest enclosing circles, and diametral-disk piercing"};
    app.require_subcommand(1);

    VerifyArgs vargs;
    CLI::App* verify = app.add_subcommand(
        "verify", "Check that the enclosing-circle center pierces every tree diametral disk");
    verify->add_option("--file", vargs.file, "Instance JSON file");
    verify->add_option("--tree", vargs.tree_file, "Explicit tree edge list to check instead of the maximum tree");
    verify->add_option("--gen", vargs.gen_name,
                       "Generator: uniform-square, gaussian, clustered, circle-boundary");
    verify->add_option("--trials", vargs.trials, "Generated instances to check");
    CLI::Option* vseed = verify->add_option("--seed", vargs.seed, "Run seed");
    verify->add_option("--n-min", vargs.n_min)->check(CLI::Range(2, 4096));
    verify->add_option("--n-max", vargs.n_max)->check(CLI::Range(2, 4096));

    std::string rfile;
    bool with_optimal = false;
    double tol_opt = 1e-6;
    long long budget = 200000;
    std::uint64_t rseed = 0;
    CLI::App* ratio = app.add_subcommand("ratio", "Detour-ratio report for the maximum tree");
    ratio->add_option("--file", rfile)->required();
    ratio->add_flag("--optimal", with_optimal, "Also solve for the min-max ratio point");
    ratio->add_option("--tol", tol_opt, "Solver certification resolution");
    ratio->add_option("--budget", budget, "Solver evaluation budget");
    CLI::Option* rseed_opt = ratio->add_option("--seed", rseed, "Run seed");

    std::string mfile;
    std::uint64_t mseed = 0;
    CLI::App* matching =
        app.add_subcommand("matching", "Brute-force maximum matching report (n <= 12)");
    matching->add_option("--file", mfile)->required();
    CLI::Option* mseed_opt = matching->add_option("--seed", mseed, "Run seed");

    std::uint64_t sseed = 0;
    int restarts = 32;
    long long sbudget = 100000;
    std::string sout;
    CLI::App* search = app.add_subcommand(
        "search-lower-bound", "Search 4-point configurations maximizing the optimal ratio");
    CLI::Option* sseed_opt = search->add_option("--seed", sseed, "Run seed");
    search->add_option("--restarts", restarts)->check(CLI::PositiveNumber);
    search->add_option("--budget", sbudget)->check(CLI::PositiveNumber);
    search->add_option("--out", sout, "Write the best instance to this file");

    std::string dfile, dout;
    bool with_disks = false;
    double ellipse_alpha = 0.0;
    std::uint64_t dseed = 0;
    CLI::App* render = app.add_subcommand("render", "Render an instance as SVG");
    render->add_option("--file", dfile)->required();
    render->add_option("--out", dout)->required();
    render->add_flag("--disks", with_disks, "Fill the diametral disks of the tree edges");
    CLI::Option* alpha_opt =
        render->add_option("--ellipses", ellipse_alpha, "Draw per-edge ellipses at this alpha");
    CLI::Option* dseed_opt = render->add_option("--seed", dseed, "Run seed");

    std::string ofile;
    std::uint64_t oseed = 0;
    CLI::App* oracle =
        app.add_subcommand("oracle", "Cross-check Kruskal vs enumeration and the circle vs brute force");
    oracle->add_option("--file", ofile)->required();
    CLI::Option* oseed_opt = oracle->add_option("--seed", oseed, "Run seed");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (verify->parsed()) {
            vargs.seed = resolve_seed(vseed, vargs.seed);
            return run_verify(vargs);
        }
        if (ratio->parsed())
            return run_ratio(rfile, with_optimal, tol_opt, budget, resolve_seed(rseed_opt, rseed));
        if (matching->parsed()) return run_matching(mfile, resolve_seed(mseed_opt, mseed));
        if (search->parsed())
            return run_search(resolve_seed(sseed_opt, sseed), restarts, sbudget, sout);
        if (render->parsed())
            return run_render(dfile, dout, with_disks,
                              alpha_opt->count() ? std::optional<double>(ellipse_alpha)
                                                 : std::nullopt,
                              resolve_seed(dseed_opt, dseed));
        if (oracle->parsed()) return run_oracle(ofile, resolve_seed(oseed_opt, oseed));
    } catch (const pierce::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
