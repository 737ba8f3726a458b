#include "rainbow/experiments.hpp"

#include "rainbow/fractional.hpp"
#include "rainbow/io.hpp"
#include "rainbow/random.hpp"
#include "rainbow/shift.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <iomanip>
#include <sstream>
#include <thread>

namespace rainbow {

namespace {

    using Clock = std::chrono::steady_clock;

    SearchLimits limits_of(const ExperimentConfig& cfg) { return SearchLimits{cfg.timeout}; }

    std::string hash_of(const io::json& witness) { return fnv1a_hex(witness.dump()); }

    std::string density_label(double d)
    {
        std::ostringstream out;
        out << std::fixed << std::setprecision(2) << d;
        return out.str();
    }

    ExperimentConfig with_defaults(ExperimentConfig cfg, std::vector<std::size_t> n_values, std::size_t trials)
    {
        if (cfg.n_values.empty())
            cfg.n_values = std::move(n_values);
        if (cfg.trials == 0)
            cfg.trials = trials;
        return cfg;
    }

    void require_divisible(const ExperimentConfig& cfg, const char* suite)
    {
        for (auto n : cfg.n_values)
            if (n == 0 || n % 3 != 0)
                throw InputError(std::string(suite) + ": n values must be positive multiples of 3");
    }

    // Rows are filled in parallel; each gets its own slot and timer, and an
    // escaped exception turns into a failed row.
    ExperimentReport run_rows(std::string name, const ExperimentConfig& cfg, std::size_t count,
                              const std::function<void(std::size_t, ReportRow&)>& body)
    {
        ExperimentReport report;
        report.name = std::move(name);
        report.seed = cfg.seed;
        report.rng = std::string(InstanceRng::algorithm);
        report.rows.resize(count);
        parallel_for(count, worker_count(cfg.threads), [&](std::size_t i) {
            ReportRow& row = report.rows[i];
            row.index = i;
            const auto start = Clock::now();
            try {
                body(i, row);
            }
            catch (const std::exception& e) {
                row.passed = false;
                row.outcome = "error";
                row.note = e.what();
            }
            row.runtime_ms = std::chrono::duration<double, std::milli>(Clock::now() - start).count();
        });
        std::sort(report.rows.begin(), report.rows.end(),
                  [](const ReportRow& a, const ReportRow& b) { return a.index < b.index; });
        return report;
    }

    std::vector<Vertex> ids(std::size_t from, std::size_t count)
    {
        std::vector<Vertex> out(count);
        for (std::size_t i = 0; i < count; ++i)
            out[i] = static_cast<Vertex>(from + i);
        return out;
    }

    constexpr double kFamilyDensities[] = {0.05, 0.10, 0.15, 0.25, 0.40};
    constexpr double kGraphDensities[] = {0.0, 0.05, 0.10, 0.20, 0.35, 0.60};
    constexpr double kShiftDensities[] = {0.04, 0.08, 0.15, 0.30, 0.60};

} // namespace

std::string fnv1a_hex(const std::string& bytes)
{
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    std::ostringstream out;
    out << std::hex << std::setw(16) << std::setfill('0') << h;
    return out.str();
}

std::size_t worker_count(std::size_t requested)
{
    std::size_t n = requested;
    if (n == 0) {
        if (const char* env = std::getenv("RAINBOW_LAB_THREADS")) {
            char* end = nullptr;
            const unsigned long v = std::strtoul(env, &end, 10);
            if (end != env && *end == '\0' && v > 0)
                n = v;
        }
    }
    if (n == 0)
        n = std::max(1u, std::thread::hardware_concurrency());
    return n;
}

void parallel_for(std::size_t count, std::size_t threads, const std::function<void(std::size_t)>& fn)
{
    threads = std::max<std::size_t>(1, std::min(threads, count));
    if (threads == 1) {
        for (std::size_t i = 0; i < count; ++i)
            fn(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    for (std::size_t t = 0; t < threads; ++t)
        pool.emplace_back([&] {
            for (std::size_t i = next++; i < count; i = next++)
                fn(i);
        });
    for (auto& th : pool)
        th.join();
}

bool ExperimentReport::passed() const
{
    return std::all_of(rows.begin(), rows.end(), [](const ReportRow& r) { return r.passed; });
}

bool ExperimentReport::any_unknown() const
{
    return std::any_of(rows.begin(), rows.end(), [](const ReportRow& r) { return r.unknown; });
}

int ExperimentReport::exit_code() const
{
    if (any_unknown())
        return 2;
    return passed() ? 0 : 1;
}

ExperimentConfig sharpness_defaults(ExperimentConfig cfg) { return with_defaults(std::move(cfg), {6, 9, 12}, 1); }
ExperimentConfig equivalence_defaults(ExperimentConfig cfg) { return with_defaults(std::move(cfg), {6, 9}, 100); }
ExperimentConfig duality_defaults(ExperimentConfig cfg) { return with_defaults(std::move(cfg), {6, 7, 8, 9, 10}, 50); }
ExperimentConfig shift_defaults(ExperimentConfig cfg) { return with_defaults(std::move(cfg), {6, 9, 12}, 30); }
ExperimentConfig absorb_defaults(ExperimentConfig cfg) { return with_defaults(std::move(cfg), {24}, 3); }

ExperimentReport run_sharpness(const ExperimentConfig& cfg_in)
{
    const auto cfg = sharpness_defaults(cfg_in);
    require_divisible(cfg, "sharpness");
    return run_rows("sharpness", cfg, cfg.n_values.size(), [&](std::size_t i, ReportRow& row) {
        const std::size_t n = cfg.n_values[i];
        const auto stats = degree_sum_stats(build_extremal(n, n / 3, 2));
        const long long formula = sigma2_extremal_formula(static_cast<long long>(n));
        const auto rainbow = rainbow_matching(extremal_family(n), limits_of(cfg));
        const auto pm = partite_perfect_matching(build_partite_extremal(n), limits_of(cfg));

        row.instance = "n=" + std::to_string(n) + " copies=" + std::to_string(n / 3) + " sigma2="
                       + (stats.sigma2 ? std::to_string(*stats.sigma2) : "-") + " formula=" + std::to_string(formula);
        row.unknown = rainbow.outcome == Outcome::unknown || pm.outcome == Outcome::unknown;
        row.outcome = row.unknown ? "unknown"
                                  : std::string(outcome_name(rainbow.outcome)) + "/" + std::string(outcome_name(pm.outcome));
        row.passed = !row.unknown && rainbow.outcome == Outcome::none && pm.outcome == Outcome::none
                     && stats.sigma2 == formula;
    });
}

ExperimentReport run_equivalence(const ExperimentConfig& cfg_in)
{
    const auto cfg = equivalence_defaults(cfg_in);
    require_divisible(cfg, "equivalence");
    const std::size_t per_n = cfg.trials;
    return run_rows("equivalence", cfg, per_n * cfg.n_values.size(), [&](std::size_t i, ReportRow& row) {
        const std::size_t n = cfg.n_values[i / per_n];
        const double density = kFamilyDensities[i % std::size(kFamilyDensities)];
        InstanceRng rng(trial_seed(cfg.seed, i));
        const auto family = random_family(n, n / 3, density, rng);
        const auto reduced = reduce_family(family);
        const auto rainbow = rainbow_matching(family, limits_of(cfg));
        const auto pm = partite_perfect_matching(reduced, limits_of(cfg));

        row.instance = "n=" + std::to_string(n) + " p=" + density_label(density) + " trial=" + std::to_string(i);
        row.unknown = rainbow.outcome == Outcome::unknown || pm.outcome == Outcome::unknown;
        if (row.unknown) {
            row.outcome = "unknown";
            return;
        }
        row.outcome = std::string(outcome_name(rainbow.outcome));
        bool ok = rainbow.outcome == pm.outcome;
        if (rainbow.witness) {
            ok = ok && is_rainbow_matching(family, *rainbow.witness);
            row.witness_hash = hash_of(io::to_json(*rainbow.witness));
        }
        if (pm.witness)
            ok = ok && is_perfect_matching(reduced.graph(), *pm.witness);
        row.passed = ok;
    });
}

ExperimentReport run_duality(const ExperimentConfig& cfg_in)
{
    const auto cfg = duality_defaults(cfg_in);
    return run_rows("duality", cfg, cfg.trials, [&](std::size_t i, ReportRow& row) {
        const std::size_t n = cfg.n_values[i % cfg.n_values.size()];
        const double density = kGraphDensities[i % std::size(kGraphDensities)];
        InstanceRng rng(trial_seed(cfg.seed, i));
        const auto h = random_hypergraph(n, 3, density, rng);
        const auto nu = nu_star(h);
        const auto tau = tau_star(h);
        const auto integral = max_matching(h);

        row.instance = "n=" + std::to_string(n) + " p=" + density_label(density) + " |E|=" + std::to_string(h.edge_count());
        row.outcome = "nu*=" + to_string(nu.value) + " tau*=" + to_string(tau.value) + " nu=" + std::to_string(integral.size());
        row.witness_hash = hash_of(io::json{{"matching", io::to_json(nu.matching)}, {"cover", io::to_json(tau.cover)}});
        row.passed = nu.value == tau.value && is_fractional_matching(h, nu.matching)
                     && is_fractional_cover(h, tau.cover) && nu.matching.total() == nu.value
                     && tau.cover.total() == tau.value && is_matching(h, integral)
                     && Rational(static_cast<long>(integral.size())) <= nu.value;
    });
}

ExperimentReport run_shift_suite(const ExperimentConfig& cfg_in)
{
    const auto cfg = shift_defaults(cfg_in);
    require_divisible(cfg, "shift");
    return run_rows("shift", cfg, cfg.trials, [&](std::size_t i, ReportRow& row) {
        const std::size_t p = cfg.n_values[i % cfg.n_values.size()];
        const std::size_t q = p / 3;
        const double density = kShiftDensities[i % std::size(kShiftDensities)];
        InstanceRng rng(trial_seed(cfg.seed, i));
        const auto h = reduce_family(random_family(p, q, density, rng));

        // Alternate between the asymptotic threshold and half of it, which
        // deletes less and keeps E(H) inside H'' more often.
        PipelineOptions options;
        options.limits = limits_of(cfg);
        std::string threshold_kind = "default";
        if (cfg.threshold_override) {
            options.threshold = cfg.threshold_override;
            threshold_kind = "override";
        }
        else if (i % 2 == 1) {
            options.threshold = sigma2_extremal_formula(static_cast<long long>(p)) / 2;
            threshold_kind = "half";
        }
        const auto result = fractional_pm_pipeline(h, options);

        const auto& prime = result.h_prime.graph();
        const auto& second = result.h_second.graph();
        const bool stable = is_stable(result.h_second);
        const bool contained = std::all_of(second.edges().begin(), second.edges().end(),
                                           [&](const Edge& e) { return prime.contains(e); });
        const bool codegree = codegree_condition_holds(second, result.threshold);
        const bool bookkeeping = prime.edge_count() - second.edge_count() == result.trace.removed_total();

        bool nu_preserved = true;
        if (q <= 3 && result.containment)
            nu_preserved = result.nu_star_h_second && *result.nu_star_h_second == result.nu_star_h;

        // Truncated shifts: nu* must survive wherever E(H) is still contained.
        if (q <= 3 && result.trace.steps.size() > 1) {
            const std::size_t cut = result.trace.steps.size() / 2;
            const auto partial = stable_shift(result.h_prime, result.threshold, cut).first;
            const auto& g = partial.graph();
            const bool keeps_h = std::all_of(h.edges().begin(), h.edges().end(), [&](const Edge& e) { return g.contains(e); });
            if (keeps_h)
                nu_preserved = nu_preserved && nu_star(g.graph()).value == result.nu_star_h;
        }

        bool extension_ok = true;
        if (result.link_outcome == Outcome::found)
            extension_ok = result.witness && is_perfect_matching(second.graph(), *result.witness);

        row.instance = "q=" + std::to_string(q) + " p=" + density_label(density) + " |E|=" + std::to_string(h.edge_count())
                       + " T=" + std::to_string(result.threshold) + "(" + threshold_kind + ")";
        row.unknown = result.link_outcome == Outcome::unknown;
        row.outcome = "removed=" + std::to_string(result.trace.removed_total()) + " link="
                      + std::string(outcome_name(result.link_outcome)) + (result.containment ? " contained" : "");
        if (result.witness)
            row.witness_hash = hash_of(io::to_json(*result.witness));
        row.passed = !row.unknown && result.trace.stable && stable && contained && codegree && bookkeeping
                     && nu_preserved && extension_ok && result.consistent;
        if (!row.passed && !row.unknown) {
            std::ostringstream why;
            why << "stable=" << stable << " contained=" << contained << " codegree=" << codegree
                << " bookkeeping=" << bookkeeping << " nu=" << nu_preserved << " extension=" << extension_ok
                << " consistent=" << result.consistent;
            row.note = why.str();
        }
    });
}

AbsorbOutcome run_absorb_scenario(const AbsorbScenario& scenario)
{
    const auto& h = scenario.graph;
    if (!h.balanced())
        throw InputError("absorb scenario needs a balanced partite graph");
    if (scenario.pool_size == 0 || 7 * scenario.pool_size > h.q_size())
        throw InputError("pool does not fit in the graph");

    AbsorbOutcome out;
    std::vector<VertexSet> targets;
    for (std::size_t g = 0; g < scenario.pool_size; ++g) {
        std::vector<Vertex> t{h.q_vertex(g)};
        for (std::size_t j = 0; j < 3; ++j)
            t.push_back(h.p_vertex(3 * g + j));
        targets.emplace_back(std::move(t));
    }

    VertexSet c;
    {
        const auto local = popular_vertices(family_from_partite(h), scenario.c_threshold);
        std::vector<Vertex> global;
        for (auto v : local)
            global.push_back(static_cast<Vertex>(v + h.q_size()));
        c = VertexSet(std::move(global));
    }

    VertexSet reserved;
    for (const auto& t : targets)
        reserved = reserved.united(t);
    VertexSet bodies;
    for (std::size_t g = 0; g < targets.size(); ++g) {
        GadgetOptions options;
        options.forbidden = reserved.minus(targets[g]).united(bodies);
        auto gadget = build_gadget(targets[g], h, c, options);
        if (!gadget) {
            out.message = "no gadget for target " + to_string(Edge::from_sorted(targets[g].members()));
            return out;
        }
        if (!is_absorbing(gadget->body.all(), targets[g], h, scenario.limits).absorbing()) {
            out.message = "gadget for target " + to_string(Edge::from_sorted(targets[g].members())) + " is not absorbing";
            return out;
        }
        bodies = bodies.united(gadget->body.all());
        out.pool.push_back(std::move(*gadget));
    }

    std::vector<Vertex> all_ids = ids(0, h.n());
    const VertexSet rest = VertexSet(std::move(all_ids)).minus(bodies);
    const auto sub = induced_partite(h, rest);
    for (const auto& e : max_matching(sub.graph.graph()).edges)
        out.rest_matching.edges.push_back(
            Edge::of({sub.original[e[0]], sub.original[e[1]], sub.original[e[2]], sub.original[e[3]]}));
    out.leftover = rest.minus(covered_vertices(out.rest_matching));

    Matching absorbed;
    try {
        absorbed = absorb(out.pool, BalancedSet(out.leftover, h), h, scenario.limits);
    }
    catch (const AbsorptionError& e) {
        out.message = e.what();
        return out;
    }

    Matching pm = out.rest_matching;
    pm.edges.insert(pm.edges.end(), absorbed.edges.begin(), absorbed.edges.end());
    std::sort(pm.edges.begin(), pm.edges.end());
    if (!is_perfect_matching(h.graph(), pm)) {
        out.message = "assembled matching is not perfect";
        return out;
    }
    out.perfect_matching = std::move(pm);
    out.ok = true;
    return out;
}

namespace {

    // Complete partite graph minus every edge inside the reserved targets.
    // With |Q| = 7 * pool nothing else is left once the bodies are carved
    // out, so every target has to be absorbed.
    PartiteHypergraph sparse_rest_graph(std::size_t q, std::size_t pool)
    {
        const auto full = complete_partite(q, 3 * q);
        std::vector<Edge> kept;
        for (const auto& e : full.edges()) {
            const bool inside = e[0] < pool && std::all_of(e.begin() + 1, e.end(), [&](Vertex v) { return v < q + 3 * pool; });
            if (!inside)
                kept.push_back(e);
        }
        return PartiteHypergraph(q, 3 * q, std::move(kept));
    }

} // namespace

ExperimentReport run_absorb_suite(const ExperimentConfig& cfg_in)
{
    const auto cfg = absorb_defaults(cfg_in);
    require_divisible(cfg, "absorb");
    const std::size_t fixed = 2;
    const std::size_t random_rows = cfg.trials * cfg.n_values.size();
    return run_rows("absorb", cfg, fixed + random_rows, [&](std::size_t i, ReportRow& row) {
        AbsorbScenario scenario;
        scenario.limits = limits_of(cfg);
        if (i == 0) {
            scenario.graph = complete_partite(8, 24);
            row.instance = "complete q=8";
        }
        else if (i == 1) {
            scenario.graph = sparse_rest_graph(14, 2);
            scenario.pool_size = 2;
            row.instance = "complete q=14, empty rest, pool=2";
        }
        else {
            const std::size_t r = i - fixed;
            const std::size_t n = cfg.n_values[r / cfg.trials];
            if (n < 24)
                throw InputError("absorb: n must be at least 24");
            InstanceRng rng(trial_seed(cfg.seed, i));
            scenario.graph = reduce_family(random_family(n, n / 3, 0.9, rng));
            row.instance = "reduce(random n=" + std::to_string(n) + " p=0.90) trial=" + std::to_string(i);
        }
        const auto result = run_absorb_scenario(scenario);
        row.outcome = result.ok ? "pm leftover=" + std::to_string(result.leftover.size()) : "fail";
        row.note = result.message;
        if (result.perfect_matching)
            row.witness_hash = hash_of(io::to_json(*result.perfect_matching));
        row.passed = result.ok;
    });
}

void print_table(std::ostream& out, const ExperimentReport& report, bool timings)
{
    out << "# experiment " << report.name << " seed=" << report.seed << " rng=" << report.rng << '\n';
    std::size_t width = 8;
    for (const auto& r : report.rows)
        width = std::max(width, r.instance.size());
    for (const auto& r : report.rows) {
        out << std::setw(4) << r.index << "  " << std::left << std::setw(static_cast<int>(width)) << r.instance << "  "
            << std::setw(36) << r.outcome << std::right << "  " << (r.witness_hash.empty() ? std::string(16, '-') : r.witness_hash)
            << "  " << (r.unknown ? "UNKNOWN" : r.passed ? "ok" : "FAIL");
        if (timings)
            out << "  " << std::fixed << std::setprecision(1) << r.runtime_ms << "ms";
        if (!r.note.empty())
            out << "  # " << r.note;
        out << '\n';
    }
    const auto passed = std::count_if(report.rows.begin(), report.rows.end(), [](const ReportRow& r) { return r.passed; });
    out << "# " << passed << "/" << report.rows.size() << " passed: " << (report.passed() ? "PASS" : "FAIL") << '\n';
}

std::string report_json(const ExperimentReport& report, bool timings)
{
    io::json rows = io::json::array();
    for (const auto& r : report.rows) {
        io::json row{{"index", r.index},
                     {"instance", r.instance},
                     {"outcome", r.outcome},
                     {"witness_hash", r.witness_hash.empty() ? io::json(nullptr) : io::json(r.witness_hash)},
                     {"passed", r.passed},
                     {"unknown", r.unknown}};
        if (!r.note.empty())
            row["note"] = r.note;
        if (timings)
            row["runtime_ms"] = r.runtime_ms;
        rows.push_back(std::move(row));
    }
    io::json j{{"experiment", report.name}, {"seed", report.seed}, {"rng", report.rng},
               {"passed", report.passed()}, {"rows", std::move(rows)}};
    return j.dump(2);
}

} // namespace rainbow
