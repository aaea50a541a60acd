#include "zf/solver.hpp"

#include <atomic>
#include <limits>
#include <mutex>
#include <thread>

#include "zf/parallel.hpp"

namespace zf {

Verdict check_leaky_set(const Graph& g, const VertexSet& b, LeakBudget budget) {
    Verdict verdict;
    verdict.holds = true;
    for_each_leak_set(g, budget, [&](const LeakSet& leaks) {
        ++verdict.stats.leak_sets_checked;
        VertexSet stalled = closure_final(g, b, leaks);
        if (stalled.is_full()) return true;
        verdict.holds = false;
        verdict.counterexample = Counterexample{leaks, std::move(stalled)};
        return false;
    });
    return verdict;
}

namespace {

Verdict check_against_placements(const Graph& g, const VertexSet& b,
                                 const std::vector<std::vector<Arc>>& placements) {
    Verdict verdict;
    verdict.holds = true;
    for (const auto& placed : placements) {
        ++verdict.stats.leak_sets_checked;
        std::vector<Leak> items;
        items.reserve(placed.size());
        for (const Arc& a : placed) items.push_back(Leak::arc(a));
        LeakSet leaks{std::move(items)};
        VertexSet stalled = closure_final(g, b, leaks);
        if (stalled.is_full()) continue;
        verdict.holds = false;
        verdict.counterexample = Counterexample{std::move(leaks), std::move(stalled)};
        break;
    }
    return verdict;
}

}  // namespace

Verdict check_pattern_leaky_set(const Graph& g, const VertexSet& b, const LeakPattern& p) {
    return check_against_placements(g, b, enumerate_placements(g, p));
}

namespace {

uint64_t binom_saturating(int n, int k) {
    if (k < 0 || k > n) return 0;
    k = std::min(k, n - k);
    uint64_t r = 1;
    for (int i = 1; i <= k; ++i) {
        uint64_t num = static_cast<uint64_t>(n - k + i);
        if (r > std::numeric_limits<uint64_t>::max() / num)
            return std::numeric_limits<uint64_t>::max();
        r = r * num / i;
    }
    return r;
}

// k-subsets of 0..n-1 in colexicographic order (== ascending bitmask).
class ColexSubsets {
public:
    ColexSubsets(int n, int k) : n_(n), k_(k), idx_(k) {
        valid_ = k <= n;
        for (int i = 0; i < k; ++i) idx_[i] = i;
    }

    bool valid() const { return valid_; }

    VertexSet current() const {
        VertexSet s(n_);
        for (int i : idx_) s.insert(i);
        return s;
    }

    void advance() {
        int i = 0;
        while (i < k_ && idx_[i] + 1 == (i + 1 < k_ ? idx_[i + 1] : n_)) ++i;
        if (i == k_) {
            valid_ = false;
            return;
        }
        ++idx_[i];
        for (int j = 0; j < i; ++j) idx_[j] = j;
    }

    void advance_by(uint64_t steps) {
        while (steps-- && valid_) advance();
    }

private:
    int n_;
    int k_;
    std::vector<int> idx_;
    bool valid_ = true;
};

struct LevelHit {
    uint64_t index;
    VertexSet witness;
};

// First accepted k-subset in colex order, or nullopt. Workers stripe the
// stream and reduce on the smallest index, so the result (and therefore
// every published stat) matches a sequential scan.
std::optional<LevelHit> scan_level(const Graph& g, int k,
                                   const std::function<bool(const VertexSet&)>& accept,
                                   int workers) {
    int n = g.vertex_count();
    if (k > n) return std::nullopt;
    workers = resolve_workers(workers);
    uint64_t total = binom_saturating(n, k);
    if (workers <= 1 || total < 64) {
        ColexSubsets it(n, k);
        for (uint64_t idx = 0; it.valid(); it.advance(), ++idx) {
            VertexSet s = it.current();
            if (accept(s)) return LevelHit{idx, std::move(s)};
        }
        return std::nullopt;
    }

    std::atomic<uint64_t> best{std::numeric_limits<uint64_t>::max()};
    std::mutex mu;
    std::optional<LevelHit> hit;
    std::vector<std::thread> pool;
    for (int w = 0; w < workers; ++w) {
        pool.emplace_back([&, w] {
            ColexSubsets it(n, k);
            it.advance_by(w);
            uint64_t idx = w;
            while (it.valid() && idx < best.load(std::memory_order_relaxed)) {
                VertexSet s = it.current();
                if (accept(s)) {
                    uint64_t prev = best.load(std::memory_order_relaxed);
                    while (idx < prev &&
                           !best.compare_exchange_weak(prev, idx, std::memory_order_relaxed))
                        ;
                    std::lock_guard lk(mu);
                    if (!hit || idx < hit->index) hit = LevelHit{idx, std::move(s)};
                    break;  // later stripe members only have larger indices
                }
                it.advance_by(workers);
                idx += workers;
            }
        });
    }
    for (auto& t : pool) t.join();
    // A stripe owner only stops early when a strictly smaller passing index
    // exists, so the recorded minimum equals the sequential first hit.
    return hit;
}

}  // namespace

NumberResult minimum_satisfying(const Graph& g,
                                const std::function<bool(const VertexSet&)>& accept,
                                int start_size, int workers) {
    int n = g.vertex_count();
    NumberResult r;
    for (int k = std::max(0, start_size); k <= n; ++k) {
        if (auto hit = scan_level(g, k, accept, workers)) {
            r.value = k;
            r.witness = std::move(hit->witness);
            r.stats.subsets_checked += hit->index + 1;
            return r;
        }
        r.stats.subsets_checked += binom_saturating(n, k);
    }
    throw std::logic_error("minimum_satisfying: predicate rejected every subset");
}

NumberResult leaky_number(const Graph& g, LeakBudget budget, int workers) {
    NumberResult base = minimum_satisfying(
        g, [&](const VertexSet& b) { return is_zero_forcing_set(g, b); }, 0, workers);
    if (budget.ell == 0) return base;

    NumberResult r = minimum_satisfying(
        g, [&](const VertexSet& b) { return check_leaky_set(g, b, budget).holds; },
        base.value, workers);
    r.stats.subsets_checked += base.stats.subsets_checked;
    return r;
}

NumberResult pattern_leaky_number(const Graph& g, const LeakPattern& p, int workers) {
    NumberResult base = minimum_satisfying(
        g, [&](const VertexSet& b) { return is_zero_forcing_set(g, b); }, 0, workers);
    if (p.empty()) return base;

    auto placements = enumerate_placements(g, p);
    NumberResult r = minimum_satisfying(
        g,
        [&](const VertexSet& b) { return check_against_placements(g, b, placements).holds; },
        base.value, workers);
    r.stats.subsets_checked += base.stats.subsets_checked;
    return r;
}

bool check_via_characterization(const Graph& g, const VertexSet& b, int ell) {
    if (ell < 0) throw ContractError("characterization level must be nonnegative");
    if (ell == 0) return is_zero_forcing_set(g, b);
    if (!check_via_characterization(g, b, ell - 1)) return false;

    VertexSet white = b.complement();
    return for_each_leak_set(g, {LeakFlavor::vertex, ell - 1}, [&](const LeakSet& leaks) {
        std::vector<Force> forces = possible_forces(g, b, leaks);
        for (int v = white.first(); v >= 0; v = white.next_after(v)) {
            int forcers = 0;
            for (const Force& f : forces)
                if (f.head == v) ++forcers;  // distinct tails by construction
            if (forcers < 2) return false;
        }
        return true;
    });
}

}  // namespace zf
