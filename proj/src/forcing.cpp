#include "zf/forcing.hpp"

#include <algorithm>

namespace zf {

namespace {

// Head of the unique-white-neighbor force u would perform from s, or -1.
int forced_head(const Graph& g, const VertexSet& s, int u) {
    VertexSet white = g.neighbors(u);
    white -= s;
    int v = white.first();
    if (v < 0 || white.next_after(v) >= 0) return -1;
    return v;
}

}  // namespace

std::vector<Force> valid_forces(const Graph& g, const VertexSet& s, const LeakSet& leaks) {
    std::vector<Force> out;
    for (int u = s.first(); u >= 0; u = s.next_after(u)) {
        int v = forced_head(g, s, u);
        if (v >= 0 && !disables(leaks, {u, v})) out.push_back({u, v});
    }
    return out;  // ascending by tail already; heads unique per tail
}

ClosureResult closure(const Graph& g, const VertexSet& b, const LeakSet& leaks) {
    ClosureResult r{b, {}, {b}};
    while (true) {
        std::vector<Force> round = valid_forces(g, r.final, leaks);
        if (round.empty()) return r;
        // One force per head: valid_forces is tail-ascending, so the first
        // occurrence of a head has the smallest tail.
        std::vector<Force> chosen;
        VertexSet heads(r.final.universe());
        for (const Force& f : round) {
            if (!heads.contains(f.head)) {
                heads.insert(f.head);
                chosen.push_back(f);
            }
        }
        std::sort(chosen.begin(), chosen.end());
        for (const Force& f : chosen) r.process.push_back(f);
        r.final |= heads;
        r.rounds.push_back(r.final);
    }
}

VertexSet closure_final(const Graph& g, const VertexSet& b, const LeakSet& leaks,
                        int blocked_head) {
    VertexSet s = b;
    bool grew = true;
    while (grew) {
        grew = false;
        for (int u = s.first(); u >= 0; u = s.next_after(u)) {
            int v = forced_head(g, s, u);
            if (v < 0 || v == blocked_head || disables(leaks, {u, v})) continue;
            s.insert(v);
            grew = true;
        }
    }
    return s;
}

bool is_zero_forcing_set(const Graph& g, const VertexSet& b) {
    return closure_final(g, b, {}).is_full();
}

namespace {

void check_process_shape(const Graph& g, const ForcingProcess& f) {
    VertexSet heads(g.vertex_count());
    for (const Force& fc : f) {
        if (!g.has_edge(fc.tail, fc.head))
            throw ContractError("process force " + std::to_string(fc.tail) + ">" +
                                std::to_string(fc.head) + " is not along an edge");
        if (heads.contains(fc.head))
            throw ContractError("malformed process: vertex " + std::to_string(fc.head) +
                                " forced twice");
        heads.insert(fc.head);
    }
}

// Greedy replay; returns the applied count (applying any currently valid
// pending force never disables another pending force with a white head).
size_t replay(const Graph& g, const VertexSet& b, const LeakSet& leaks,
              const ForcingProcess& f, VertexSet* out_final = nullptr) {
    VertexSet s = b;
    std::vector<bool> done(f.size(), false);
    size_t applied = 0;
    bool progress = true;
    while (progress) {
        progress = false;
        for (size_t i = 0; i < f.size(); ++i) {
            if (done[i]) continue;
            if (!s.contains(f[i].tail) || s.contains(f[i].head)) continue;
            if (forced_head(g, s, f[i].tail) != f[i].head) continue;
            if (disables(leaks, f[i])) continue;
            s.insert(f[i].head);
            done[i] = true;
            ++applied;
            progress = true;
        }
    }
    if (out_final) *out_final = s;
    return applied;
}

}  // namespace

bool validate_process(const Graph& g, const VertexSet& b, const LeakSet& leaks,
                      const ForcingProcess& f) {
    check_process_shape(g, f);
    return replay(g, b, leaks, f) == f.size();
}

std::pair<ForcingProcess, ForcingProcess> restrict_process(const ForcingProcess& f,
                                                           const VertexSet& s) {
    ForcingProcess outside, inside;
    for (const Force& fc : f) (s.contains(fc.head) ? inside : outside).push_back(fc);
    return {outside, inside};
}

bool obtainable(const Graph& g, const VertexSet& b, const ForcingProcess& f,
                const VertexSet& b_prime) {
    if (!b.is_subset_of(b_prime))
        throw ContractError("obtainable: initial set is not contained in the target set");
    check_process_shape(g, f);
    VertexSet wanted = b_prime - b;
    ForcingProcess sub;
    for (const Force& fc : f)
        if (wanted.contains(fc.head)) sub.push_back(fc);
    if (sub.size() != static_cast<size_t>(wanted.count())) return false;  // not covered
    return replay(g, b, {}, sub) == sub.size();
}

ForcingProcess splice_processes(const Graph& g, const VertexSet& b, const ForcingProcess& f,
                                const ForcingProcess& f_prime, const VertexSet& b_prime) {
    if (!validate_process(g, b, {}, f))
        throw ContractError("splice: first process does not validate from the blue set");
    if (!validate_process(g, b, {}, f_prime))
        throw ContractError("splice: second process does not validate from the blue set");
    if (!obtainable(g, b, f, b_prime))
        throw ContractError("splice: set is not obtainable from the blue set via the first process");

    ForcingProcess result;
    for (const Force& fc : f)
        if (b_prime.contains(fc.head)) result.push_back(fc);
    for (const Force& fc : f_prime)
        if (!b_prime.contains(fc.head)) result.push_back(fc);

    if (!validate_process(g, b, {}, result))
        throw std::logic_error("splice: spliced process failed to validate");
    return result;
}

std::vector<Force> possible_forces(const Graph& g, const VertexSet& b, const LeakSet& leaks,
                                   ForceUniverse universe) {
    if (universe == ForceUniverse::completing && !closure_final(g, b, leaks).is_full())
        return {};  // no process colors the whole graph
    std::vector<Force> out;
    for (int v = 0; v < g.vertex_count(); ++v) {
        if (b.contains(v)) continue;
        VertexSet obtainable_with_v_white = closure_final(g, b, leaks, v);
        for (int u = g.neighbors(v).first(); u >= 0; u = g.neighbors(v).next_after(u)) {
            if (!obtainable_with_v_white.contains(u) || disables(leaks, {u, v})) continue;
            VertexSet rest = g.neighbors(u);
            rest.erase(v);
            if (rest.is_subset_of(obtainable_with_v_white)) out.push_back({u, v});
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Arc> active_leaks(const Graph& g, const VertexSet& s, std::span<const Arc> leaks) {
    std::vector<Arc> out;
    for (const Arc& a : leaks)
        if (s.contains(a.tail) && forced_head(g, s, a.tail) == a.head) out.push_back(a);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

}  // namespace zf
