#include "doctest.h"

#include "rainbow/experiments.hpp"

#include <sstream>

using namespace rainbow;

TEST_CASE("fnv1a reference values")
{
    CHECK(fnv1a_hex("") == "cbf29ce484222325");
    CHECK(fnv1a_hex("a") == "af63dc4c8601ec8c");
}

TEST_CASE("report exit codes")
{
    ExperimentReport r;
    r.rows.resize(2);
    r.rows[0].passed = r.rows[1].passed = true;
    CHECK(r.exit_code() == 0);
    r.rows[1].passed = false;
    CHECK(r.exit_code() == 1);
    r.rows[0].unknown = true;
    CHECK(r.exit_code() == 2);
}

TEST_CASE("reports are identical across reruns and thread counts")
{
    ExperimentConfig cfg;
    cfg.seed = 42;
    cfg.trials = 20;
    cfg.n_values = {6};
    cfg.threads = 1;
    const auto a = report_json(run_equivalence(cfg), false);
    cfg.threads = 4;
    const auto b = report_json(run_equivalence(cfg), false);
    CHECK(a == b);

    std::ostringstream ta, tb;
    cfg.trials = 12;
    cfg.n_values = {6, 7};
    print_table(ta, run_duality(cfg), false);
    cfg.threads = 1;
    print_table(tb, run_duality(cfg), false);
    CHECK(ta.str() == tb.str());
    CHECK(ta.str().find("rng=mt19937_64/splitmix64-trial/u53-threshold") != std::string::npos);
}

TEST_CASE("different seeds give different instances")
{
    ExperimentConfig cfg;
    cfg.trials = 10;
    cfg.n_values = {9};
    cfg.seed = 1;
    const auto a = report_json(run_equivalence(cfg), false);
    cfg.seed = 2;
    CHECK(a != report_json(run_equivalence(cfg), false));
}

TEST_CASE("suite input validation and defaults")
{
    ExperimentConfig cfg;
    cfg.n_values = {7};
    CHECK_THROWS_AS(run_sharpness(cfg), InputError);

    ExperimentConfig empty;
    empty.trials = 0;
    CHECK(equivalence_defaults(empty).trials == 100);
    CHECK(shift_defaults(empty).n_values == std::vector<std::size_t>{6, 9, 12});
}

TEST_CASE("sharpness suite")
{
    const auto r = run_sharpness(ExperimentConfig{});
    CHECK(r.rows.size() == 3);
    CHECK(r.passed());
}

TEST_CASE("worker count")
{
    CHECK(worker_count(3) == 3);
    CHECK(worker_count(0) >= 1);
    std::vector<int> hits(50, 0);
    parallel_for(50, 4, [&](std::size_t i) { hits[i]++; });
    CHECK(std::all_of(hits.begin(), hits.end(), [](int h) { return h == 1; }));
}
