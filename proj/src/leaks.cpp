#include "zf/leaks.hpp"

#include <algorithm>
#include <set>

namespace zf {

Leak Leak::edge(int u, int v) {
    if (u == v) throw ContractError("edge leak: endpoints must differ");
    if (u > v) std::swap(u, v);
    return {LeakKind::edge, u, v};
}

Leak Leak::arc(int tail, int head) {
    if (tail == head) throw ContractError("arc leak: endpoints must differ");
    return {LeakKind::arc, tail, head};
}

std::string Leak::to_string() const {
    switch (kind) {
        case LeakKind::vertex:
            return "v:" + std::to_string(a);
        case LeakKind::edge:
            return "e:" + std::to_string(a) + "-" + std::to_string(b);
        case LeakKind::arc:
            return "a:" + std::to_string(a) + ">" + std::to_string(b);
    }
    return {};
}

LeakSet::LeakSet(std::initializer_list<Leak> items) : LeakSet(std::vector<Leak>(items)) {}

LeakSet::LeakSet(std::vector<Leak> items) : items_(std::move(items)) {
    std::sort(items_.begin(), items_.end());
    items_.erase(std::unique(items_.begin(), items_.end()), items_.end());
}

void LeakSet::insert(const Leak& l) {
    auto it = std::lower_bound(items_.begin(), items_.end(), l);
    if (it == items_.end() || *it != l) items_.insert(it, l);
}

bool LeakSet::contains(const Leak& l) const {
    return std::binary_search(items_.begin(), items_.end(), l);
}

std::vector<int> LeakSet::vertex_leaks() const {
    std::vector<int> out;
    for (const Leak& l : items_)
        if (l.kind == LeakKind::vertex) out.push_back(l.a);
    return out;
}

std::vector<std::pair<int, int>> LeakSet::edge_leaks() const {
    std::vector<std::pair<int, int>> out;
    for (const Leak& l : items_)
        if (l.kind == LeakKind::edge) out.emplace_back(l.a, l.b);
    return out;
}

std::vector<Arc> LeakSet::arc_leaks() const {
    std::vector<Arc> out;
    for (const Leak& l : items_)
        if (l.kind == LeakKind::arc) out.push_back({l.a, l.b});
    return out;
}

std::vector<Arc> LeakSet::arcs_only() const {
    for (const Leak& l : items_)
        if (l.kind != LeakKind::arc)
            throw ContractError("expected arcs only, found " + l.to_string());
    return arc_leaks();
}

std::string LeakSet::to_string() const {
    std::string s;
    for (const Leak& l : items_) {
        if (!s.empty()) s += ',';
        s += l.to_string();
    }
    return s;
}

bool disables(const LeakSet& leaks, Arc f) {
    for (const Leak& l : leaks.items()) {
        switch (l.kind) {
            case LeakKind::vertex:
                if (l.a == f.tail) return true;
                break;
            case LeakKind::edge:
                if (l.a == std::min(f.tail, f.head) && l.b == std::max(f.tail, f.head))
                    return true;
                break;
            case LeakKind::arc:
                if (l.a == f.tail && l.b == f.head) return true;
                break;
        }
    }
    return false;
}

std::string to_string(LeakFlavor flavor) {
    switch (flavor) {
        case LeakFlavor::vertex: return "vertex";
        case LeakFlavor::edge: return "edge";
        case LeakFlavor::specified: return "specified";
        case LeakFlavor::mixed: return "mixed";
    }
    return {};
}

LeakFlavor leak_flavor_from_string(const std::string& name) {
    if (name == "vertex") return LeakFlavor::vertex;
    if (name == "edge") return LeakFlavor::edge;
    if (name == "specified") return LeakFlavor::specified;
    if (name == "mixed") return LeakFlavor::mixed;
    throw ContractError("unknown leak kind: " + name);
}

std::vector<Leak> leak_universe(const Graph& g, LeakFlavor flavor) {
    std::vector<Leak> out;
    auto add_vertices = [&] {
        for (int v = 0; v < g.vertex_count(); ++v) out.push_back(Leak::vertex(v));
    };
    auto add_edges = [&] {
        for (auto [u, v] : g.edges()) out.push_back(Leak::edge(u, v));
    };
    auto add_arcs = [&] {
        for (auto [u, v] : g.edges()) {
            out.push_back(Leak::arc(u, v));
            out.push_back(Leak::arc(v, u));
        }
    };
    switch (flavor) {
        case LeakFlavor::vertex: add_vertices(); break;
        case LeakFlavor::edge: add_edges(); break;
        case LeakFlavor::specified: add_arcs(); break;
        case LeakFlavor::mixed:
            add_vertices();
            add_edges();
            add_arcs();
            break;
    }
    std::sort(out.begin(), out.end());
    return out;
}

namespace {

// Lexicographic k-combinations of universe indices.
bool emit_combinations(const std::vector<Leak>& universe, int k,
                       const std::function<bool(const LeakSet&)>& fn) {
    int m = static_cast<int>(universe.size());
    if (k > m) return true;
    std::vector<int> idx(k);
    for (int i = 0; i < k; ++i) idx[i] = i;
    std::vector<Leak> items(k);
    while (true) {
        for (int i = 0; i < k; ++i) items[i] = universe[idx[i]];
        if (!fn(LeakSet(items))) return false;
        int i = k - 1;
        while (i >= 0 && idx[i] == m - k + i) --i;
        if (i < 0) return true;
        ++idx[i];
        for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
}

}  // namespace

bool for_each_leak_set(const Graph& g, LeakBudget budget,
                       const std::function<bool(const LeakSet&)>& fn) {
    if (budget.ell < 0) throw ContractError("leak budget must be nonnegative");
    std::vector<Leak> universe = leak_universe(g, budget.kind);
    for (int k = 0; k <= budget.ell; ++k)
        if (!emit_combinations(universe, k, fn)) return false;
    return true;
}

bool for_each_leak_set_of_size(const Graph& g, LeakFlavor flavor, int k,
                               const std::function<bool(const LeakSet&)>& fn) {
    if (k < 0) throw ContractError("leak set size must be nonnegative");
    return emit_combinations(leak_universe(g, flavor), k, fn);
}

std::vector<LeakSet> all_leak_sets(const Graph& g, LeakBudget budget) {
    std::vector<LeakSet> out;
    for_each_leak_set(g, budget, [&](const LeakSet& s) {
        out.push_back(s);
        return true;
    });
    return out;
}

std::pair<LeakSet, LeakSet> split_by_touch(const LeakSet& leaks, const VertexSet& s) {
    std::vector<Leak> untouched, touched;
    for (const Leak& l : leaks.items()) {
        bool outside = false;
        switch (l.kind) {
            case LeakKind::vertex: outside = !s.contains(l.a); break;
            case LeakKind::edge: outside = !s.contains(l.a) && !s.contains(l.b); break;
            case LeakKind::arc: outside = !s.contains(l.a); break;
        }
        (outside ? untouched : touched).push_back(l);
    }
    return {LeakSet(std::move(untouched)), LeakSet(std::move(touched))};
}

std::pair<VertexSet, VertexSet> tails_heads(std::span<const Arc> arcs, int n) {
    VertexSet tails(n), heads(n);
    for (const Arc& a : arcs) {
        tails.insert(a.tail);
        heads.insert(a.head);
    }
    return {tails, heads};
}

std::pair<VertexSet, VertexSet> tails_heads(const LeakSet& leaks, int n) {
    auto arcs = leaks.arcs_only();
    return tails_heads(arcs, n);
}

bool is_independent(std::span<const Arc> arcs) {
    for (size_t i = 0; i < arcs.size(); ++i) {
        for (size_t j = 0; j < arcs.size(); ++j) {
            if (i != j && arcs[i].tail == arcs[j].tail) return false;
            if (arcs[i].head == arcs[j].tail) return false;
        }
    }
    return true;
}

namespace {

int independence_search(std::span<const Arc> arcs, size_t i, std::vector<int>& tails,
                        std::vector<int>& heads) {
    if (i == arcs.size()) return 0;
    // skip arcs[i]
    int best = independence_search(arcs, i + 1, tails, heads);
    // take arcs[i] if compatible: tails stay distinct and disjoint from heads
    const Arc& a = arcs[i];
    bool ok = std::find(tails.begin(), tails.end(), a.tail) == tails.end() &&
              std::find(heads.begin(), heads.end(), a.tail) == heads.end() &&
              std::find(tails.begin(), tails.end(), a.head) == tails.end();
    if (ok) {
        tails.push_back(a.tail);
        heads.push_back(a.head);
        best = std::max(best, 1 + independence_search(arcs, i + 1, tails, heads));
        tails.pop_back();
        heads.pop_back();
    }
    return best;
}

}  // namespace

int independence_number(std::span<const Arc> arcs) {
    std::vector<int> tails, heads;
    return independence_search(arcs, 0, tails, heads);
}

LeakPattern::LeakPattern(std::vector<Arc> arcs) : arcs_(std::move(arcs)) {
    for (const Arc& a : arcs_)
        if (a.tail == a.head) throw ContractError("leak pattern: self-arc not allowed");
    std::sort(arcs_.begin(), arcs_.end());
    arcs_.erase(std::unique(arcs_.begin(), arcs_.end()), arcs_.end());
}

std::vector<int> LeakPattern::nodes() const {
    std::vector<int> out;
    for (const Arc& a : arcs_) {
        out.push_back(a.tail);
        out.push_back(a.head);
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

namespace {

// Injectively assigns pattern nodes to graph vertices, depth-first; every
// arc whose endpoints are both assigned must land on an edge of g.
void place_nodes(const Graph& g, const std::vector<int>& nodes,
                 const std::vector<Arc>& arcs, size_t pos, std::vector<int>& image,
                 std::vector<bool>& used, std::set<std::vector<Arc>>& out) {
    if (pos == nodes.size()) {
        std::vector<Arc> placed;
        placed.reserve(arcs.size());
        for (const Arc& a : arcs) {
            auto slot = [&](int label) {
                return image[std::lower_bound(nodes.begin(), nodes.end(), label) -
                             nodes.begin()];
            };
            placed.push_back({slot(a.tail), slot(a.head)});
        }
        std::sort(placed.begin(), placed.end());
        out.insert(std::move(placed));
        return;
    }
    for (int v = 0; v < g.vertex_count(); ++v) {
        if (used[v]) continue;
        image[pos] = v;
        bool ok = true;
        for (const Arc& a : arcs) {
            auto idx_of = [&](int label) {
                return std::lower_bound(nodes.begin(), nodes.end(), label) - nodes.begin();
            };
            size_t it = idx_of(a.tail), ih = idx_of(a.head);
            if (std::max(it, ih) != pos) continue;  // not fully assigned yet
            if (!g.has_edge(image[it], image[ih])) {
                ok = false;
                break;
            }
        }
        if (ok) {
            used[v] = true;
            place_nodes(g, nodes, arcs, pos + 1, image, used, out);
            used[v] = false;
        }
    }
}

}  // namespace

std::vector<std::vector<Arc>> enumerate_placements(const Graph& g, const LeakPattern& p) {
    // Sub-patterns with more nodes than the graph simply admit no injective
    // image, so oversized patterns degrade to their placeable sub-shapes.
    const std::vector<Arc>& all = p.arcs();
    std::set<std::vector<Arc>> images;
    images.insert(std::vector<Arc>{});  // empty sub-pattern

    size_t subset_count = size_t{1} << all.size();
    for (size_t mask = 1; mask < subset_count; ++mask) {
        std::vector<Arc> sub;
        for (size_t i = 0; i < all.size(); ++i)
            if (mask >> i & 1) sub.push_back(all[i]);
        std::vector<int> nodes;
        for (const Arc& a : sub) {
            nodes.push_back(a.tail);
            nodes.push_back(a.head);
        }
        std::sort(nodes.begin(), nodes.end());
        nodes.erase(std::unique(nodes.begin(), nodes.end()), nodes.end());
        std::vector<int> image(nodes.size(), -1);
        std::vector<bool> used(g.vertex_count(), false);
        place_nodes(g, nodes, sub, 0, image, used, images);
    }
    return {images.begin(), images.end()};
}

}  // namespace zf
