#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "zf/forcing.hpp"
#include "zf/graph.hpp"
#include "zf/leaks.hpp"

namespace zf {

struct SearchStats {
    uint64_t leak_sets_checked = 0;
    uint64_t subsets_checked = 0;
};

/// Refutation of a membership query: the first breaking leak placement in
/// enumeration order together with the stalled closure it produces.
struct Counterexample {
    LeakSet leaks;
    VertexSet stalled;
};

struct Verdict {
    bool holds = false;
    std::optional<Counterexample> counterexample;
    SearchStats stats;
};

/// Minimum-size result with the first witness in colexicographic order.
struct NumberResult {
    int value = 0;
    VertexSet witness;
    SearchStats stats;
};

/// Does b color all of g for every leak set within the budget? Leak sets
/// are tried smallest-first / lexicographic; the first breaking one is
/// reported.
Verdict check_leaky_set(const Graph& g, const VertexSet& b, LeakBudget budget);

/// Same question quantified over every placement of the pattern's
/// sub-shapes (counterexample.leaks holds the placed arcs).
Verdict check_pattern_leaky_set(const Graph& g, const VertexSet& b, const LeakPattern& p);

/// Minimum size of a set passing check_leaky_set, by size-ascending
/// exhaustive search seeded at the plain forcing number. The witness and
/// all stats are independent of the worker count.
NumberResult leaky_number(const Graph& g, LeakBudget budget, int workers = 1);

NumberResult pattern_leaky_number(const Graph& g, const LeakPattern& p, int workers = 1);

/// Membership via the double-forcing characterization instead of leak
/// enumeration: b qualifies at level ell iff it qualifies at ell-1 and for
/// every set of at most ell-1 vertex leaks every white vertex has two
/// distinct possible forcers.
bool check_via_characterization(const Graph& g, const VertexSet& b, int ell);

/// Size-ascending colex search over vertex subsets for an arbitrary
/// monotone-checkable predicate; building block for the number queries.
/// Scans sizes start_size..n and returns the first passing subset; stats
/// count candidates up to and including the witness in sequential order.
NumberResult minimum_satisfying(const Graph& g,
                                const std::function<bool(const VertexSet&)>& accept,
                                int start_size, int workers);

}  // namespace zf
