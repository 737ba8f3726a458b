#pragma once

#include "rainbow/absorbing.hpp"
#include "rainbow/solvers.hpp"

#include <cstdint>
#include <functional>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace rainbow {

struct ExperimentConfig {
    std::uint64_t seed = 1;
    std::vector<std::size_t> n_values;
    std::size_t trials = 1;
    std::chrono::milliseconds timeout{60'000};
    std::optional<long long> threshold_override;
    /// 0 means RAINBOW_LAB_THREADS, falling back to the hardware count.
    std::size_t threads = 0;
};

/// Suite defaults; an empty n_values or zero trials in `cfg` is replaced.
ExperimentConfig sharpness_defaults(ExperimentConfig cfg);
ExperimentConfig equivalence_defaults(ExperimentConfig cfg);
ExperimentConfig duality_defaults(ExperimentConfig cfg);
ExperimentConfig shift_defaults(ExperimentConfig cfg);
ExperimentConfig absorb_defaults(ExperimentConfig cfg);

struct ReportRow {
    std::size_t index = 0;
    std::string instance;
    std::string outcome;
    /// FNV-1a 64 of the witness JSON, empty when there is no witness.
    std::string witness_hash;
    double runtime_ms = 0;
    bool passed = false;
    bool unknown = false;
    std::string note;
};

struct ExperimentReport {
    std::string name;
    std::uint64_t seed = 0;
    std::string rng;
    std::vector<ReportRow> rows;

    bool passed() const;
    bool any_unknown() const;
    /// 0 all pass, 1 some row failed, 2 some row timed out.
    int exit_code() const;
};

ExperimentReport run_sharpness(const ExperimentConfig& cfg);
ExperimentReport run_equivalence(const ExperimentConfig& cfg);
ExperimentReport run_duality(const ExperimentConfig& cfg);
ExperimentReport run_shift_suite(const ExperimentConfig& cfg);
ExperimentReport run_absorb_suite(const ExperimentConfig& cfg);

/// Pool-then-absorb assembly on one balanced partite graph.
struct AbsorbScenario {
    PartiteHypergraph graph;
    std::size_t pool_size = 1;
    /// Popularity threshold for the gadget anchors C.
    std::size_t c_threshold = 1;
    SearchLimits limits{};
};

struct AbsorbOutcome {
    bool ok = false;
    std::string message;
    std::vector<AbsorberGadget> pool;
    Matching rest_matching;
    VertexSet leftover;
    std::optional<Matching> perfect_matching;
};

/// Reserves pool_size targets (lowest free Q-vertex with the three lowest free
/// P-vertices), builds a disjoint gadget for each, checks it with
/// is_absorbing, takes a maximum matching of the graph minus the gadget
/// bodies, absorbs what is left and verifies the union is a perfect matching.
AbsorbOutcome run_absorb_scenario(const AbsorbScenario& scenario);

std::string fnv1a_hex(const std::string& bytes);

/// Runs fn(0..count-1) on up to `threads` workers.
void parallel_for(std::size_t count, std::size_t threads, const std::function<void(std::size_t)>& fn);

/// Worker count from the config, RAINBOW_LAB_THREADS, or the hardware.
std::size_t worker_count(std::size_t requested);

void print_table(std::ostream& out, const ExperimentReport& report, bool timings);
std::string report_json(const ExperimentReport& report, bool timings);

} // namespace rainbow
