#pragma once

#include <span>
#include <utility>
#include <vector>

#include "zf/graph.hpp"
#include "zf/leaks.hpp"

namespace zf {

/// One application of the color-change rule: tail forced head.
using Force = Arc;

/// Ordered record of forces. Valid processes force each head at most once.
using ForcingProcess = std::vector<Force>;

/// Closure of a blue set under leaks: the unique fixed point, one canonical
/// witnessing order, and the synchronous-round trace. rounds[0] is the
/// initial blue set, later entries the blue set after each round, so the
/// trace is strictly increasing and ends at `final`.
struct ClosureResult {
    VertexSet final;
    ForcingProcess process;
    std::vector<VertexSet> rounds;
};

/// Forces u->v with u in s, v the unique neighbor of u outside s, and the
/// force not disabled by the leaks. Sorted by (tail, head).
std::vector<Force> valid_forces(const Graph& g, const VertexSet& s, const LeakSet& leaks);

/// Exhaustive application of the rule from b under the leaks. The witness
/// process lists forces round by round, picking the smallest tail for each
/// head and ordering each round by (tail, head).
ClosureResult closure(const Graph& g, const VertexSet& b, const LeakSet& leaks);

/// Just the fixed point, no trace. `blocked_head`, when >= 0, additionally
/// disables every force into that vertex (used to keep one head white).
VertexSet closure_final(const Graph& g, const VertexSet& b, const LeakSet& leaks,
                        int blocked_head = -1);

bool is_zero_forcing_set(const Graph& g, const VertexSet& b);

/// True iff some ordering of f applies step by step from b under the leaks
/// and colors exactly b + heads(f). Greedy replay is complete here: applying
/// one valid force never invalidates a pending force whose head is still
/// white. Duplicate heads (or structurally broken forces) are rejected with
/// a contract error.
bool validate_process(const Graph& g, const VertexSet& b, const LeakSet& leaks,
                      const ForcingProcess& f);

/// Splits f into (heads outside s, heads inside s), order preserved.
std::pair<ForcingProcess, ForcingProcess> restrict_process(const ForcingProcess& f,
                                                           const VertexSet& s);

/// True iff b_prime can be reached from b using only forces of f: the
/// members of f with head in b_prime - b must replay from b and cover
/// b_prime - b exactly. Requires b to be a subset of b_prime.
bool obtainable(const Graph& g, const VertexSet& b, const ForcingProcess& f,
                const VertexSet& b_prime);

/// Abandons process f at the obtained set b_prime and finishes along
/// f_prime: returns (f minus its forces outside b_prime) + (forces of
/// f_prime outside b_prime). Both inputs must validate from b with no
/// leaks and b_prime must be obtainable via f; the spliced process is
/// validated before being returned.
ForcingProcess splice_processes(const Graph& g, const VertexSet& b, const ForcingProcess& f,
                                const ForcingProcess& f_prime, const VertexSet& b_prime);

enum class ForceUniverse {
    /// Forces belonging to some process that colors the whole graph. This is
    /// the membership the double-forcing characterization quantifies over;
    /// it is empty whenever the closure under the leaks falls short.
    completing,
    /// Forces valid somewhere along any partial propagation (diagnostic).
    reachable,
};

/// The possible-force set: every u->v realizable from b under the leaks.
/// Computed per head v via a blocked closure (all forces into v disabled):
/// while v stays white no neighbor of v can force anything except v, so the
/// blocked closure collects exactly the vertices obtainable with v white,
/// and u->v is realizable iff u and all its other neighbors are in it.
std::vector<Force> possible_forces(const Graph& g, const VertexSet& b, const LeakSet& leaks,
                                   ForceUniverse universe = ForceUniverse::completing);

/// Arcs of the leak set whose tail is in s and whose head is the tail's
/// unique neighbor outside s: the leaks currently blocking progress.
std::vector<Arc> active_leaks(const Graph& g, const VertexSet& s, std::span<const Arc> leaks);

}  // namespace zf
