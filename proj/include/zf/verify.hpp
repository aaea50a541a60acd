#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "zf/forcing.hpp"
#include "zf/graph.hpp"
#include "zf/leaks.hpp"

namespace zf {

struct OracleOptions {
    uint64_t state_cap = uint64_t{1} << 20;
    ForceUniverse universe = ForceUniverse::completing;
};

/// Independent reference for possible_forces: breadth-first search over all
/// reachable blue-set states with single-force transitions. In completing
/// mode only labels on transitions between states that can still reach the
/// all-blue state are kept. Throws ResourceLimitError past the state cap.
std::vector<Force> possible_forces_oracle(const Graph& g, const VertexSet& b,
                                          const LeakSet& leaks,
                                          const OracleOptions& options = {});

struct SuiteViolation {
    std::string check;
    std::string graph6;
    int ell = 0;
    std::string blue_set;
    std::string leaks;
    std::string details;
    auto operator<=>(const SuiteViolation&) const = default;
};

struct SuiteCheck {
    std::string name;
    uint64_t instances = 0;
    uint64_t violations = 0;
};

/// Forcing numbers recorded per corpus graph: z[ell-1][flavor] with flavors
/// ordered vertex, edge, specified, mixed.
struct GraphSummary {
    std::string graph6;
    int n = 0;
    int z0 = 0;
    std::vector<std::array<int, 4>> z_by_ell;
};

/// Computed verdict for the complete-prism fixture (x-clique versus the
/// matching-shaped pattern); reported informationally on every run.
struct FixtureNote {
    std::string graph6;
    std::string pattern;
    int independence = 0;
    bool holds = false;
    std::string counterexample;
    std::string stalled;
};

struct SuiteReport {
    std::vector<SuiteCheck> checks;
    std::vector<SuiteViolation> violations;
    std::vector<GraphSummary> graphs;
    FixtureNote fixture_note;
    std::vector<std::string> resource_notes;
    uint64_t total_instances = 0;
    uint64_t total_violations = 0;
    double runtime_ms = 0.0;

    const SuiteCheck* find_check(const std::string& name) const;
};

struct SuiteOptions {
    int ell_max = 2;
    int workers = 1;
    /// Splice samples spread across the corpus (at least one per graph).
    uint64_t splice_samples = 10000;
    /// Random (B, L) oracle-agreement samples per graph.
    int force_samples_per_graph = 30;
    uint64_t seed = 0x9d2c5680e4f1a35bULL;
    uint64_t oracle_state_cap = uint64_t{1} << 20;
    /// Graphs larger than this skip the all-subsets checks (recorded, not fatal).
    int max_exhaustive_n = 10;
};

/// Runs every mechanical check over the corpus: per-set flavor-equivalence
/// and number equality, the double-forcing characterization against brute
/// force, the leak-touch failure inequalities, randomized process splicing,
/// the pattern-independence comparisons, and possible-force/oracle
/// agreement. Deterministic for a fixed corpus + options, including under
/// concurrency.
SuiteReport run_theorem_suite(std::span<const Graph> corpus, const SuiteOptions& options);

}  // namespace zf
