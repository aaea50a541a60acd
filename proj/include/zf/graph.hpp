#pragma once

#include <cstdint>
#include <compare>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "zf/errors.hpp"

namespace zf {

/// Subset of the vertices 0..n-1 of a fixed universe, stored as a bitset.
/// All set algebra is over the universe it was created with; combining sets
/// from different universes is a contract violation.
class VertexSet {
public:
    VertexSet() = default;
    explicit VertexSet(int universe) : n_(universe), blocks_(block_count(universe), 0) {
        if (universe < 0) throw ContractError("VertexSet: negative universe size");
    }
    VertexSet(int universe, std::initializer_list<int> members) : VertexSet(universe) {
        for (int v : members) insert(v);
    }
    VertexSet(int universe, std::span<const int> members) : VertexSet(universe) {
        for (int v : members) insert(v);
    }

    static VertexSet full(int universe) {
        VertexSet s(universe);
        for (auto& b : s.blocks_) b = ~0ULL;
        s.trim();
        return s;
    }

    int universe() const { return n_; }
    bool contains(int v) const {
        return v >= 0 && v < n_ && (blocks_[v >> 6] >> (v & 63) & 1);
    }
    void insert(int v) {
        check_member(v);
        blocks_[v >> 6] |= 1ULL << (v & 63);
    }
    void erase(int v) {
        check_member(v);
        blocks_[v >> 6] &= ~(1ULL << (v & 63));
    }

    int count() const;
    bool none() const;
    bool is_full() const { return count() == n_; }

    VertexSet& operator|=(const VertexSet& o);
    VertexSet& operator&=(const VertexSet& o);
    VertexSet& operator-=(const VertexSet& o);
    friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
    friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
    friend VertexSet operator-(VertexSet a, const VertexSet& b) { return a -= b; }
    VertexSet complement() const;

    bool is_subset_of(const VertexSet& o) const;
    bool operator==(const VertexSet& o) const = default;

    /// Numeric order of the characteristic mask; on equal-size sets this is
    /// exactly colexicographic order.
    std::strong_ordering operator<=>(const VertexSet& o) const;

    /// Smallest member, or -1 when empty.
    int first() const;
    /// Smallest member > v, or -1.
    int next_after(int v) const;

    std::vector<int> members() const;
    std::string to_string() const;  // "{0,2,5}"

    uint64_t hash() const;

private:
    static int block_count(int n) { return (n + 63) / 64; }
    void check_member(int v) const {
        if (v < 0 || v >= n_)
            throw ContractError("VertexSet: vertex " + std::to_string(v) + " outside universe " +
                                std::to_string(n_));
    }
    void check_same_universe(const VertexSet& o) const {
        if (n_ != o.n_) throw ContractError("VertexSet: mixed universes");
    }
    void trim();  // clear bits above n_-1

    int n_ = 0;
    std::vector<uint64_t> blocks_;
};

/// Simple undirected graph on dense vertex labels 0..n-1.
class Graph {
public:
    Graph() = default;
    explicit Graph(int n);

    int vertex_count() const { return n_; }
    int edge_count() const { return edge_count_; }

    /// Inserts {u,v}. Rejects self-loops and out-of-range endpoints;
    /// re-inserting an existing edge is a no-op.
    void add_edge(int u, int v);

    bool has_edge(int u, int v) const {
        return u >= 0 && u < n_ && adjacency_[u].contains(v);
    }
    const VertexSet& neighbors(int v) const;
    int degree(int v) const { return neighbors(v).count(); }

    /// Each unordered pair once, ascending (u < v, lexicographic).
    std::vector<std::pair<int, int>> edges() const;

    VertexSet all_vertices() const { return VertexSet::full(n_); }
    VertexSet empty_set() const { return VertexSet(n_); }

    bool operator==(const Graph& o) const {
        return n_ == o.n_ && adjacency_ == o.adjacency_;
    }

private:
    int n_ = 0;
    int edge_count_ = 0;
    std::vector<VertexSet> adjacency_;
};

}  // namespace zf
