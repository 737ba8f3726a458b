// rainbow-lab: instance generation, solvers, LP certificates, shifting,
// absorption and the experiment suites from the command line.
//
// Instances are read from stdin as JSON and results written to stdout.
// Exit codes: 0 found/pass, 1 none/fail, 2 unknown (timeout), 3 bad input.

#include "rainbow/experiments.hpp"
#include "rainbow/fractional.hpp"
#include "rainbow/io.hpp"
#include "rainbow/random.hpp"
#include "rainbow/shift.hpp"

#include "CLI11.hpp"

#include <iostream>

using namespace rainbow;
using io::json;

namespace {

constexpr int kExitInput = 3;

struct Globals {
    std::uint64_t seed = 1;
    double timeout_s = 60;
    bool json_out = false;
    bool normalize = false;
    bool timings = false;

    SearchLimits limits() const { return {std::chrono::milliseconds(static_cast<long long>(timeout_s * 1000))}; }
};

json read_stdin() { return io::read_json(std::cin); }

void emit(const json& j) { std::cout << j.dump(2) << '\n'; }

int exit_for(Outcome o)
{
    switch (o) {
    case Outcome::found: return 0;
    case Outcome::none: return 1;
    case Outcome::unknown: return 2;
    }
    return 2;
}

json found_field(Outcome o) { return o == Outcome::unknown ? json("unknown") : json(o == Outcome::found); }

VertexSet c_from_family(const PartiteHypergraph& h, std::size_t threshold)
{
    std::vector<Vertex> out;
    for (auto v : popular_vertices(family_from_partite(h), threshold))
        out.push_back(static_cast<Vertex>(v + h.q_size()));
    return VertexSet(std::move(out));
}

json pipeline_json(const PipelineResult& r)
{
    json j{{"pm_found", r.pm_found},
           {"link", std::string(outcome_name(r.link_outcome))},
           {"threshold", r.threshold},
           {"edges_h_prime", r.h_prime.graph().edge_count()},
           {"edges_h_second", r.h_second.graph().edge_count()},
           {"edges_removed", r.trace.removed_total()},
           {"containment", r.containment},
           {"nu_star", to_string(r.nu_star_h)},
           {"tau_star", to_string(r.tau_star_h)},
           {"certified", r.certified},
           {"consistent", r.consistent}};
    j["nu_star_h_second"] = r.nu_star_h_second ? json(to_string(*r.nu_star_h_second)) : json(nullptr);
    j["witness"] = r.witness ? io::to_json(*r.witness) : json(nullptr);
    return j;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Rainbow matching toolkit for 3-uniform hypergraph families"};
    app.require_subcommand(1);
    app.fallthrough();

    Globals g;
    app.add_option("--seed", g.seed, "Random seed")->capture_default_str();
    app.add_option("--timeout", g.timeout_s, "Per-search timeout in seconds (0 disables)")->capture_default_str();
    app.add_flag("--json", g.json_out, "Emit experiment reports as JSON");
    app.add_flag("--normalize", g.normalize, "Sort and deduplicate input edges instead of rejecting them");
    app.add_flag("--timings", g.timings, "Include runtimes in experiment reports");

    int code = 0;

    // gen
    auto* gen = app.add_subcommand("gen", "Generate instances")->require_subcommand(1);
    std::size_t gen_n = 0, gen_s = 0, gen_k = 3, gen_members = 0;
    int gen_ell = 2;
    double gen_density = 0.5;
    auto* gen_ext = gen->add_subcommand("extremal", "H^ell_{n,s}");
    gen_ext->add_option("--n", gen_n, "Vertices")->required();
    gen_ext->add_option("--s", gen_s, "Parameter s (matching number is s-1)")->required();
    gen_ext->add_option("--ell", gen_ell, "Parameter ell (special set has s*ell-1 vertices)")->required();
    gen_ext->callback([&] { emit(io::to_json(build_extremal(gen_n, gen_s, gen_ell))); });

    auto* gen_pext = gen->add_subcommand("partite-extremal", "Partite graph of n/3 copies of H^2_{n,n/3}");
    gen_pext->add_option("--n", gen_n, "Vertices (multiple of 3)")->required();
    gen_pext->callback([&] { emit(io::to_json(build_partite_extremal(gen_n))); });

    auto* gen_reduce = gen->add_subcommand("reduce", "Partite graph of a family read from stdin");
    gen_reduce->callback([&] { emit(io::to_json(reduce_family(io::family_from_json(read_stdin(), g.normalize)))); });

    auto* gen_random = gen->add_subcommand("random", "Random k-graph, or a family with --members");
    gen_random->add_option("--n", gen_n, "Vertices")->required();
    gen_random->add_option("--k", gen_k, "Uniformity")->capture_default_str();
    gen_random->add_option("--density", gen_density, "Edge probability")->capture_default_str();
    gen_random->add_option("--members", gen_members, "Generate a family of this many 3-graphs");
    gen_random->callback([&] {
        InstanceRng rng(g.seed);
        if (gen_members > 0)
            emit(io::to_json(random_family(gen_n, gen_members, gen_density, rng)));
        else
            emit(io::to_json(random_hypergraph(gen_n, gen_k, gen_density, rng)));
    });

    // stats
    auto* stats = app.add_subcommand("stats", "Degree statistics of a hypergraph");
    stats->callback([&] {
        const auto h = io::hypergraph_from_json(read_stdin(), g.normalize);
        json mins = json::array();
        for (std::size_t l = 1; l < h.k(); ++l)
            mins.push_back(min_degree(h, l));
        emit(json{{"k", h.k()},
                  {"n", h.n()},
                  {"edges", h.edge_count()},
                  {"min_degree", mins},
                  {"degree_sums", io::to_json(degree_sum_stats(h))},
                  {"isolated", io::to_json(isolated_vertices(h))}});
    });

    // solve
    auto* solve = app.add_subcommand("solve", "Exact matching searches")->require_subcommand(1);
    solve->add_subcommand("pm", "Perfect matching of a hypergraph")->callback([&] {
        auto r = has_perfect_matching(io::hypergraph_from_json(read_stdin(), g.normalize), g.limits());
        emit(json{{"found", found_field(r.outcome)}, {"witness", r.witness ? io::to_json(*r.witness) : json(nullptr)}});
        code = exit_for(r.outcome);
    });
    solve->add_subcommand("rainbow", "Rainbow matching of a family")->callback([&] {
        auto r = rainbow_matching(io::family_from_json(read_stdin(), g.normalize), g.limits());
        emit(json{{"found", found_field(r.outcome)}, {"witness", r.witness ? io::to_json(*r.witness) : json(nullptr)}});
        code = exit_for(r.outcome);
    });
    solve->add_subcommand("partite-pm", "Perfect matching of a balanced partite graph")->callback([&] {
        auto r = partite_perfect_matching(io::partite_from_json(read_stdin(), g.normalize), g.limits());
        emit(json{{"found", found_field(r.outcome)}, {"witness", r.witness ? io::to_json(*r.witness) : json(nullptr)}});
        code = exit_for(r.outcome);
    });
    solve->add_subcommand("max", "Maximum matching of a hypergraph")->callback([&] {
        const auto h = io::hypergraph_from_json(read_stdin(), g.normalize);
        const auto m = max_matching(h);
        emit(json{{"size", m.size()}, {"witness", io::to_json(m)}});
    });

    // frac
    auto* frac = app.add_subcommand("frac", "Exact fractional matchings and covers")->require_subcommand(1);
    frac->add_subcommand("nu-star", "Fractional matching number")->callback([&] {
        const auto r = nu_star(io::hypergraph_from_json(read_stdin(), g.normalize));
        emit(json{{"value", to_string(r.value)}, {"matching", io::to_json(r.matching)}});
    });
    frac->add_subcommand("tau-star", "Fractional cover number")->callback([&] {
        const auto r = tau_star(io::hypergraph_from_json(read_stdin(), g.normalize));
        emit(json{{"value", to_string(r.value)}, {"cover", io::to_json(r.cover)}});
    });
    frac->add_subcommand("check-duality", "Solve both programs and compare")->callback([&] {
        const auto h = io::hypergraph_from_json(read_stdin(), g.normalize);
        const auto nu = nu_star(h);
        const auto tau = tau_star(h);
        const bool ok = nu.value == tau.value && is_fractional_matching(h, nu.matching) && is_fractional_cover(h, tau.cover);
        emit(json{{"nu_star", to_string(nu.value)}, {"tau_star", to_string(tau.value)}, {"equal", ok}});
        code = ok ? 0 : 1;
    });
    frac->add_subcommand("pm", "Fractional perfect matching")->callback([&] {
        const auto r = has_fractional_pm(io::hypergraph_from_json(read_stdin(), g.normalize));
        emit(json{{"found", r.found},
                  {"value", to_string(r.value)},
                  {"witness", r.matching ? io::to_json(*r.matching) : json(nullptr)}});
        code = r.found ? 0 : 1;
    });

    // shift
    auto* shift = app.add_subcommand("shift", "Stable shifting")->require_subcommand(1);
    long long threshold = 0;
    bool from_cover = false;
    auto* shift_run = shift->add_subcommand("run", "Shift a stable, identity-labelled partite graph");
    shift_run->add_option("--threshold", threshold, "Minimum codegree sum to enforce")->required();
    shift_run->add_flag("--from-cover", from_cover, "Shift H' built from an optimal fractional cover instead");
    shift_run->callback([&] {
        const auto h = io::partite_from_json(read_stdin(), g.normalize);
        OrderedPartite start(h);
        if (from_cover) {
            const auto tau = tau_star(h.graph());
            start = build_h_prime(h, tau.cover, order_by_cover(h, tau.cover));
        }
        const auto [out, trace] = stable_shift(start, threshold);
        json q_order = json::array(), p_order = json::array();
        for (auto v : out.q_order())
            q_order.push_back(v);
        for (auto v : out.p_order())
            p_order.push_back(v);
        emit(json{{"stable", trace.stable},
                  {"trace", io::to_json(trace)},
                  {"edges_removed", trace.removed_total()},
                  {"q_order", q_order},
                  {"p_order", p_order},
                  {"graph", io::to_json(out.graph())}});
    });
    std::optional<long long> pipeline_threshold;
    auto* shift_pipe = shift->add_subcommand("pipeline", "tau*, H', shift, link matching and extension");
    shift_pipe->add_option("--threshold", pipeline_threshold, "Codegree threshold (default (2n^2-8n+6)/3, n = |P|)");
    shift_pipe->callback([&] {
        PipelineOptions options;
        options.threshold = pipeline_threshold;
        options.limits = g.limits();
        const auto r = fractional_pm_pipeline(io::partite_from_json(read_stdin(), g.normalize), options);
        emit(pipeline_json(r));
        code = r.link_outcome == Outcome::unknown ? 2 : r.consistent ? 0 : 1;
    });

    // absorb
    auto* absorb_cmd = app.add_subcommand("absorb", "Absorbing gadgets")->require_subcommand(1);
    std::string t_path, a_path, c_path;
    std::size_t c_threshold = 1, budget = 1'000'000;
    auto* absorb_check = absorb_cmd->add_subcommand("check", "Is T an absorbing 24-set for A");
    absorb_check->add_option("--t", t_path, "JSON file with the 24-set T")->required();
    absorb_check->add_option("--a", a_path, "JSON file with the 4-set A")->required();
    absorb_check->callback([&] {
        const auto h = io::partite_from_json(read_stdin(), g.normalize);
        const auto t = io::vertex_set_from_json(io::read_json_file(t_path));
        const auto a = io::vertex_set_from_json(io::read_json_file(a_path));
        const auto r = is_absorbing(t, a, h, g.limits());
        emit(json{{"absorbing", found_field(r.outcome)},
                  {"pm_t", r.pm_t ? io::to_json(*r.pm_t) : json(nullptr)},
                  {"pm_at", r.pm_at ? io::to_json(*r.pm_at) : json(nullptr)}});
        code = exit_for(r.outcome);
    });
    auto* absorb_gadget = absorb_cmd->add_subcommand("gadget", "Build an absorbing 24-set for A");
    absorb_gadget->add_option("--a", a_path, "JSON file with the 4-set A")->required();
    absorb_gadget->add_option("--c", c_path, "Anchor candidates (default: popular vertices)");
    absorb_gadget->add_option("--c-threshold", c_threshold, "Popularity threshold for the default anchors")
        ->capture_default_str();
    absorb_gadget->add_option("--budget", budget, "Search node budget")->capture_default_str();
    absorb_gadget->callback([&] {
        const auto h = io::partite_from_json(read_stdin(), g.normalize);
        const auto a = io::vertex_set_from_json(io::read_json_file(a_path));
        const auto c = c_path.empty() ? c_from_family(h, c_threshold)
                                      : io::vertex_set_from_json(io::read_json_file(c_path));
        GadgetOptions options;
        options.node_budget = budget;
        const auto gadget = build_gadget(a, h, c, options);
        if (gadget) {
            auto j = io::to_json(*gadget);
            j["found"] = true;
            emit(j);
        }
        else {
            emit(json{{"found", false}});
        }
        code = gadget ? 0 : 1;
    });
    absorb_cmd->add_subcommand("run", "Pool, maximum matching and absorption on a scenario")->callback([&] {
        const auto j = read_stdin();
        if (!j.is_object() || !j.contains("graph"))
            throw InputError("scenario needs a 'graph' field");
        AbsorbScenario scenario;
        scenario.graph = io::partite_from_json(j.at("graph"), g.normalize);
        scenario.pool_size = j.value("pool_size", std::size_t{1});
        scenario.c_threshold = j.value("c_threshold", std::size_t{1});
        scenario.limits = g.limits();
        const auto r = run_absorb_scenario(scenario);
        json pool = json::array();
        for (const auto& gadget : r.pool)
            pool.push_back(io::to_json(gadget));
        emit(json{{"ok", r.ok},
                  {"message", r.message},
                  {"pool", pool},
                  {"rest_matching", io::to_json(r.rest_matching)},
                  {"leftover", io::to_json(r.leftover)},
                  {"perfect_matching", r.perfect_matching ? io::to_json(*r.perfect_matching) : json(nullptr)}});
        code = r.ok ? 0 : 1;
    });

    // exp
    auto* exp = app.add_subcommand("exp", "Reproducible experiment suites");
    std::string suite;
    ExperimentConfig cfg;
    cfg.trials = 0;
    std::optional<long long> exp_threshold;
    exp->add_option("suite", suite, "sharpness | equivalence | duality | shift | absorb | all")
        ->required()
        ->check(CLI::IsMember({"sharpness", "equivalence", "duality", "shift", "absorb", "all"}));
    exp->add_option("--n", cfg.n_values, "Instance sizes");
    exp->add_option("--trials", cfg.trials, "Trials (per size where applicable)");
    exp->add_option("--threshold", exp_threshold, "Shift threshold override");
    exp->add_option("--threads", cfg.threads, "Worker threads (default RAINBOW_LAB_THREADS or all cores)");
    exp->callback([&] {
        cfg.seed = g.seed;
        cfg.timeout = g.limits().timeout;
        cfg.threshold_override = exp_threshold;
        std::vector<ExperimentReport (*)(const ExperimentConfig&)> runs;
        if (suite == "sharpness" || suite == "all")
            runs.push_back(run_sharpness);
        if (suite == "equivalence" || suite == "all")
            runs.push_back(run_equivalence);
        if (suite == "duality" || suite == "all")
            runs.push_back(run_duality);
        if (suite == "shift" || suite == "all")
            runs.push_back(run_shift_suite);
        if (suite == "absorb" || suite == "all")
            runs.push_back(run_absorb_suite);
        json reports = json::array();
        for (auto run : runs) {
            const auto report = run(cfg);
            if (g.json_out)
                reports.push_back(json::parse(report_json(report, g.timings)));
            else
                print_table(std::cout, report, g.timings);
            const int c = report.exit_code();
            if (c == 2 || code == 2)
                code = 2;
            else
                code = std::max(code, c);
        }
        if (g.json_out)
            emit(reports.size() == 1 ? reports[0] : reports);
    });

    try {
        app.parse(argc, argv);
    }
    catch (const CLI::ParseError& e) {
        return app.exit(e);
    }
    catch (const InputError& e) {
        std::cerr << "input error: " << e.what() << '\n';
        return kExitInput;
    }
    catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitInput;
    }
    return code;
}
