#include "zf/graph.hpp"

#include <bit>

namespace zf {

int VertexSet::count() const {
    int c = 0;
    for (uint64_t b : blocks_) c += std::popcount(b);
    return c;
}

bool VertexSet::none() const {
    for (uint64_t b : blocks_)
        if (b) return false;
    return true;
}

VertexSet& VertexSet::operator|=(const VertexSet& o) {
    check_same_universe(o);
    for (size_t i = 0; i < blocks_.size(); ++i) blocks_[i] |= o.blocks_[i];
    return *this;
}

VertexSet& VertexSet::operator&=(const VertexSet& o) {
    check_same_universe(o);
    for (size_t i = 0; i < blocks_.size(); ++i) blocks_[i] &= o.blocks_[i];
    return *this;
}

VertexSet& VertexSet::operator-=(const VertexSet& o) {
    check_same_universe(o);
    for (size_t i = 0; i < blocks_.size(); ++i) blocks_[i] &= ~o.blocks_[i];
    return *this;
}

VertexSet VertexSet::complement() const {
    VertexSet r = *this;
    for (auto& b : r.blocks_) b = ~b;
    r.trim();
    return r;
}

bool VertexSet::is_subset_of(const VertexSet& o) const {
    check_same_universe(o);
    for (size_t i = 0; i < blocks_.size(); ++i)
        if (blocks_[i] & ~o.blocks_[i]) return false;
    return true;
}

std::strong_ordering VertexSet::operator<=>(const VertexSet& o) const {
    if (n_ != o.n_) return n_ <=> o.n_;
    for (size_t i = blocks_.size(); i-- > 0;)
        if (blocks_[i] != o.blocks_[i]) return blocks_[i] <=> o.blocks_[i];
    return std::strong_ordering::equal;
}

int VertexSet::first() const {
    for (size_t i = 0; i < blocks_.size(); ++i)
        if (blocks_[i]) return static_cast<int>(i * 64 + std::countr_zero(blocks_[i]));
    return -1;
}

int VertexSet::next_after(int v) const {
    int start = v + 1;
    if (start < 0) start = 0;
    for (size_t i = start >> 6; i < blocks_.size(); ++i) {
        uint64_t b = blocks_[i];
        if (static_cast<size_t>(start >> 6) == i) b &= ~0ULL << (start & 63);
        if (b) return static_cast<int>(i * 64 + std::countr_zero(b));
    }
    return -1;
}

std::vector<int> VertexSet::members() const {
    std::vector<int> out;
    for (int v = first(); v >= 0; v = next_after(v)) out.push_back(v);
    return out;
}

std::string VertexSet::to_string() const {
    std::string s = "{";
    bool sep = false;
    for (int v = first(); v >= 0; v = next_after(v)) {
        if (sep) s += ',';
        s += std::to_string(v);
        sep = true;
    }
    return s + "}";
}

uint64_t VertexSet::hash() const {
    uint64_t h = 0x9e3779b97f4a7c15ULL ^ static_cast<uint64_t>(n_);
    for (uint64_t b : blocks_) {
        h ^= b + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    }
    return h;
}

void VertexSet::trim() {
    if (blocks_.empty()) return;
    int used = n_ & 63;
    if (used) blocks_.back() &= (1ULL << used) - 1;
}

Graph::Graph(int n) : n_(n) {
    if (n < 0) throw ContractError("Graph: negative vertex count");
    adjacency_.assign(n, VertexSet(n));
}

void Graph::add_edge(int u, int v) {
    if (u < 0 || u >= n_ || v < 0 || v >= n_)
        throw ContractError("Graph: edge endpoint out of range: " + std::to_string(u) + " " +
                            std::to_string(v));
    if (u == v) throw ContractError("Graph: self-loop at vertex " + std::to_string(u));
    if (adjacency_[u].contains(v)) return;
    adjacency_[u].insert(v);
    adjacency_[v].insert(u);
    ++edge_count_;
}

const VertexSet& Graph::neighbors(int v) const {
    if (v < 0 || v >= n_)
        throw ContractError("Graph: vertex out of range: " + std::to_string(v));
    return adjacency_[v];
}

std::vector<std::pair<int, int>> Graph::edges() const {
    std::vector<std::pair<int, int>> out;
    out.reserve(edge_count_);
    for (int u = 0; u < n_; ++u)
        for (int v = adjacency_[u].next_after(u); v >= 0; v = adjacency_[u].next_after(v))
            out.emplace_back(u, v);
    return out;
}

}  // namespace zf
