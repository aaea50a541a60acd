#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "zf/graph.hpp"

namespace zf {

/// Ordered vertex pair u -> v. Doubles as a force record (u forced v) and as
/// a directed leak (u may not force v).
struct Arc {
    int tail = 0;
    int head = 0;
    auto operator<=>(const Arc&) const = default;
};

enum class LeakKind : uint8_t { vertex, edge, arc };

/// One disabled fault: a vertex that may not force, an edge no force may
/// cross, or a single forbidden directed force.
struct Leak {
    LeakKind kind = LeakKind::vertex;
    int a = 0;
    int b = -1;  // unused for vertex leaks

    static Leak vertex(int v) { return {LeakKind::vertex, v, -1}; }
    static Leak edge(int u, int v);  // stored with a < b
    static Leak arc(int tail, int head);
    static Leak arc(Arc a) { return arc(a.tail, a.head); }

    auto operator<=>(const Leak&) const = default;
    std::string to_string() const;  // "v:3" / "e:1-2" / "a:4>5"
};

/// Finite duplicate-free set of leaks, kept sorted (vertex < edge < arc,
/// then endpoints ascending) so serialization and enumeration order are
/// stable.
class LeakSet {
public:
    LeakSet() = default;
    LeakSet(std::initializer_list<Leak> items);
    explicit LeakSet(std::vector<Leak> items);

    void insert(const Leak& l);
    bool contains(const Leak& l) const;
    int size() const { return static_cast<int>(items_.size()); }
    bool empty() const { return items_.empty(); }

    const std::vector<Leak>& items() const { return items_; }
    auto begin() const { return items_.begin(); }
    auto end() const { return items_.end(); }

    std::vector<int> vertex_leaks() const;
    std::vector<std::pair<int, int>> edge_leaks() const;
    std::vector<Arc> arc_leaks() const;

    /// Requires every member to be an arc leak.
    std::vector<Arc> arcs_only() const;

    bool operator==(const LeakSet&) const = default;
    std::string to_string() const;  // comma-joined item grammar

private:
    std::vector<Leak> items_;
};

/// True iff the leak set forbids the force f: f.tail is a vertex leak, or
/// {f.tail,f.head} is an edge leak, or the arc f.tail->f.head is present.
bool disables(const LeakSet& leaks, Arc f);

enum class LeakFlavor : uint8_t { vertex, edge, specified, mixed };

std::string to_string(LeakFlavor flavor);
LeakFlavor leak_flavor_from_string(const std::string& name);

/// Adversary budget: up to `ell` leaks of the given flavor.
struct LeakBudget {
    LeakFlavor kind = LeakFlavor::vertex;
    int ell = 0;
};

/// All leaks the flavor may draw from: the vertices of g, the edges of g,
/// the ordered adjacent pairs, or all three. Sorted.
std::vector<Leak> leak_universe(const Graph& g, LeakFlavor flavor);

/// Calls fn for every leak set of the budget's flavor with size <= ell,
/// smallest sizes first, lexicographic within a size, each exactly once
/// (the empty set always comes first). Stops early when fn returns false;
/// the return value says whether the enumeration ran to completion.
bool for_each_leak_set(const Graph& g, LeakBudget budget,
                       const std::function<bool(const LeakSet&)>& fn);

/// Same stream restricted to size exactly k.
bool for_each_leak_set_of_size(const Graph& g, LeakFlavor flavor, int k,
                               const std::function<bool(const LeakSet&)>& fn);

/// Materialized convenience wrapper around for_each_leak_set.
std::vector<LeakSet> all_leak_sets(const Graph& g, LeakBudget budget);

/// Splits L into (untouched, touched) w.r.t. S: a vertex leak is untouched
/// when the vertex is outside S, an edge leak when both endpoints are
/// outside S, an arc when its tail is outside S.
std::pair<LeakSet, LeakSet> split_by_touch(const LeakSet& leaks, const VertexSet& s);

/// Tail and head sets of a set of arcs over universe n.
std::pair<VertexSet, VertexSet> tails_heads(std::span<const Arc> arcs, int n);
/// LeakSet overload; every member must be an arc leak.
std::pair<VertexSet, VertexSet> tails_heads(const LeakSet& leaks, int n);

/// Arcs with pairwise-distinct tails where no head equals any tail.
bool is_independent(std::span<const Arc> arcs);

/// Size of the largest independent subset (exhaustive; meant for small
/// arc sets).
int independence_number(std::span<const Arc> arcs);

/// A directed-graph shape over abstract node labels: the placements of a
/// pattern on a graph are the images of its sub-shapes under injective
/// relabelings, restricted to arcs that land on edges.
class LeakPattern {
public:
    LeakPattern() = default;
    explicit LeakPattern(std::vector<Arc> arcs);  // rejects self-arcs, dedupes

    const std::vector<Arc>& arcs() const { return arcs_; }
    std::vector<int> nodes() const;  // sorted distinct labels
    bool empty() const { return arcs_.empty(); }

private:
    std::vector<Arc> arcs_;
};

/// Every placeable image of every sub-pattern of p on g, deduplicated and
/// sorted (each image is a sorted arc vector). Always contains the empty
/// placement. Pattern node count must not exceed g's order.
std::vector<std::vector<Arc>> enumerate_placements(const Graph& g, const LeakPattern& p);

}  // namespace zf
