#include "zf/verify.hpp"

#include <algorithm>
#include <chrono>
#include <random>
#include <unordered_map>

#include "zf/graph_io.hpp"
#include "zf/parallel.hpp"
#include "zf/solver.hpp"

namespace zf {

namespace {

struct VertexSetHash {
    size_t operator()(const VertexSet& s) const { return static_cast<size_t>(s.hash()); }
};

}  // namespace

std::vector<Force> possible_forces_oracle(const Graph& g, const VertexSet& b,
                                          const LeakSet& leaks,
                                          const OracleOptions& options) {
    struct Transition {
        int from;
        int to;
        Force label;
    };
    std::vector<VertexSet> states{b};
    std::unordered_map<VertexSet, int, VertexSetHash> ids{{b, 0}};
    std::vector<Transition> transitions;

    for (size_t next = 0; next < states.size(); ++next) {
        VertexSet state = states[next];  // copy: states may reallocate below
        for (const Force& f : valid_forces(g, state, leaks)) {
            VertexSet target = state;
            target.insert(f.head);
            auto [it, fresh] = ids.try_emplace(target, static_cast<int>(states.size()));
            if (fresh) {
                if (states.size() >= options.state_cap)
                    throw ResourceLimitError("possible_forces_oracle: state cap " +
                                             std::to_string(options.state_cap) + " exceeded");
                states.push_back(std::move(target));
            }
            transitions.push_back({static_cast<int>(next), it->second, f});
        }
    }

    std::vector<char> keep(states.size(), 1);
    if (options.universe == ForceUniverse::completing) {
        std::fill(keep.begin(), keep.end(), 0);
        auto full = ids.find(VertexSet::full(g.vertex_count()));
        if (full != ids.end()) {
            keep[full->second] = 1;
            bool changed = true;  // reverse closure over the transition list
            while (changed) {
                changed = false;
                for (const Transition& t : transitions) {
                    if (keep[t.to] && !keep[t.from]) {
                        keep[t.from] = 1;
                        changed = true;
                    }
                }
            }
        }
    }

    std::vector<Force> out;
    for (const Transition& t : transitions)
        if (keep[t.from] && keep[t.to]) out.push_back(t.label);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

const SuiteCheck* SuiteReport::find_check(const std::string& name) const {
    for (const SuiteCheck& c : checks)
        if (c.name == name) return &c;
    return nullptr;
}

namespace {

constexpr std::array<LeakFlavor, 4> kFlavors = {LeakFlavor::vertex, LeakFlavor::edge,
                                                LeakFlavor::specified, LeakFlavor::mixed};

const std::vector<std::pair<std::string, LeakPattern>>& pattern_library() {
    static const std::vector<std::pair<std::string, LeakPattern>> lib = {
        {"single-arc", LeakPattern({{0, 1}})},
        {"two-disjoint-arcs", LeakPattern({{0, 1}, {2, 3}})},
        {"three-disjoint-arcs", LeakPattern({{0, 1}, {2, 3}, {4, 5}})},
        {"in-star", LeakPattern({{0, 2}, {1, 2}})},
        {"out-star", LeakPattern({{1, 0}, {1, 2}})},
        {"directed-path", LeakPattern({{0, 1}, {1, 2}})},
        {"two-cycle", LeakPattern({{0, 1}, {1, 0}})},
    };
    return lib;
}

enum CheckId {
    kFlavorEquivalence,
    kFlavorNumberEquality,
    kCharacterization,
    kFailureLemmas,
    kSwitchSplice,
    kIndependenceTheorem,
    kIndependenceSingle,
    kPossibleForcesOracle,
    kCheckCount,
};

const char* check_name(int id) {
    switch (id) {
        case kFlavorEquivalence: return "flavor-equivalence";
        case kFlavorNumberEquality: return "flavor-number-equality";
        case kCharacterization: return "characterization";
        case kFailureLemmas: return "failure-lemmas";
        case kSwitchSplice: return "switch-splice";
        case kIndependenceTheorem: return "independence-theorem";
        case kIndependenceSingle: return "independence-single";
        case kPossibleForcesOracle: return "possible-forces-oracle";
    }
    return "?";
}

struct GraphResult {
    std::array<uint64_t, kCheckCount> instances{};
    std::vector<SuiteViolation> violations;
    std::vector<std::string> resource_notes;
    GraphSummary summary;
};

VertexSet set_from_mask(uint64_t mask, int n) {
    VertexSet s(n);
    for (int v = 0; v < n; ++v)
        if (mask >> v & 1) s.insert(v);
    return s;
}

std::string label_for(const Graph& g) {
    if (g.vertex_count() <= 62) return emit_graph6(g);
    return "n=" + std::to_string(g.vertex_count());
}

ForcingProcess random_complete_process(const Graph& g, const VertexSet& b,
                                       std::mt19937_64& rng) {
    ForcingProcess out;
    VertexSet s = b;
    while (true) {
        std::vector<Force> options = valid_forces(g, s, {});
        if (options.empty()) return out;
        const Force& f =
            options[std::uniform_int_distribution<size_t>(0, options.size() - 1)(rng)];
        out.push_back(f);
        s.insert(f.head);
    }
}

LeakSet random_leak_set(const std::vector<Leak>& universe, int max_size,
                        std::mt19937_64& rng) {
    if (universe.empty()) return {};
    int size = std::uniform_int_distribution<int>(0, max_size)(rng);
    std::vector<Leak> picked;
    for (int i = 0; i < size; ++i)
        picked.push_back(universe[std::uniform_int_distribution<size_t>(
            0, universe.size() - 1)(rng)]);
    return LeakSet(std::move(picked));
}

class GraphChecker {
public:
    GraphChecker(const Graph& g, const SuiteOptions& opt, uint64_t splices, uint64_t seed)
        : g_(g), opt_(opt), splices_(splices), rng_(seed), g6_(label_for(g)) {}

    GraphResult run() {
        result_.summary.graph6 = g6_;
        result_.summary.n = g_.vertex_count();
        if (g_.vertex_count() > opt_.max_exhaustive_n) {
            result_.resource_notes.push_back(g6_ + ": skipped (n > " +
                                             std::to_string(opt_.max_exhaustive_n) + ")");
            return std::move(result_);
        }
        build_membership_tables();
        check_flavor_equivalence();
        check_characterization();
        check_failure_lemmas();
        check_splices();
        check_patterns();
        check_oracle_agreement();
        return std::move(result_);
    }

private:
    void violation(int check, int ell, const std::string& b, const std::string& leaks,
                   const std::string& details) {
        result_.violations.push_back({check_name(check), g6_, ell, b, leaks, details});
    }

    // holds_[f][ell][mask]; ell = 0 is plain zero forcing for every flavor.
    void build_membership_tables() {
        int n = g_.vertex_count();
        uint64_t nb = uint64_t{1} << n;
        std::vector<char> zfs(nb);
        for (uint64_t m = 0; m < nb; ++m)
            zfs[m] = is_zero_forcing_set(g_, set_from_mask(m, n));
        for (size_t f = 0; f < kFlavors.size(); ++f) {
            holds_[f].assign(opt_.ell_max + 1, zfs);
            for (int ell = 1; ell <= opt_.ell_max; ++ell) {
                for (uint64_t m = 0; m < nb; ++m) {
                    // a failure at a smaller budget already settles larger ones
                    holds_[f][ell][m] =
                        holds_[f][ell - 1][m] &&
                        check_leaky_set(g_, set_from_mask(m, n), {kFlavors[f], ell}).holds;
                }
            }
        }
        result_.summary.z0 = min_size(holds_[0][0]);
        for (int ell = 1; ell <= opt_.ell_max; ++ell) {
            std::array<int, 4> z{};
            for (size_t f = 0; f < kFlavors.size(); ++f) z[f] = min_size(holds_[f][ell]);
            result_.summary.z_by_ell.push_back(z);
        }
    }

    int min_size(const std::vector<char>& table) const {
        int n = g_.vertex_count();
        int best = n;
        for (uint64_t m = 0; m < table.size(); ++m)
            if (table[m]) best = std::min(best, set_from_mask(m, n).count());
        return best;
    }

    void check_flavor_equivalence() {
        int n = g_.vertex_count();
        uint64_t nb = uint64_t{1} << n;
        for (int ell = 1; ell <= opt_.ell_max; ++ell) {
            for (uint64_t m = 0; m < nb; ++m) {
                ++result_.instances[kFlavorEquivalence];
                bool v = holds_[0][ell][m];
                if (v == holds_[1][ell][m] && v == holds_[2][ell][m] && v == holds_[3][ell][m])
                    continue;
                std::string detail;
                for (size_t f = 0; f < kFlavors.size(); ++f)
                    detail += to_string(kFlavors[f]) + "=" +
                              (holds_[f][ell][m] ? "true " : "false ");
                violation(kFlavorEquivalence, ell, set_from_mask(m, n).to_string(), "",
                          detail);
            }
            ++result_.instances[kFlavorNumberEquality];
            const auto& z = result_.summary.z_by_ell[ell - 1];
            if (!(z[0] == z[1] && z[0] == z[2] && z[0] == z[3])) {
                violation(kFlavorNumberEquality, ell, "", "",
                          "z=" + std::to_string(z[0]) + "," + std::to_string(z[1]) + "," +
                              std::to_string(z[2]) + "," + std::to_string(z[3]));
            }
        }
    }

    void check_characterization() {
        int n = g_.vertex_count();
        uint64_t nb = uint64_t{1} << n;
        for (int ell = 1; ell <= opt_.ell_max; ++ell) {
            for (uint64_t m = 0; m < nb; ++m) {
                ++result_.instances[kCharacterization];
                VertexSet b = set_from_mask(m, n);
                bool via = check_via_characterization(g_, b, ell);
                if (via != static_cast<bool>(holds_[0][ell][m]))
                    violation(kCharacterization, ell, b.to_string(), "",
                              via ? "characterization=true brute=false"
                                  : "characterization=false brute=true");
            }
        }
    }

    void check_failure_lemmas() {
        int n = g_.vertex_count();
        uint64_t nb = uint64_t{1} << n;
        for (size_t f = 0; f < kFlavors.size(); ++f) {
            for (int ell = 1; ell <= opt_.ell_max; ++ell) {
                for (uint64_t m = 0; m < nb; ++m) {
                    if (!holds_[f][ell - 1][m]) continue;
                    VertexSet b = set_from_mask(m, n);
                    for (int k = ell; k <= ell + 1; ++k) {
                        for_each_leak_set_of_size(
                            g_, kFlavors[f], k, [&](const LeakSet& leaks) {
                                ++result_.instances[kFailureLemmas];
                                VertexSet final = closure_final(g_, b, leaks);
                                int untouched =
                                    split_by_touch(leaks, final).first.size();
                                if (untouched > k - ell)
                                    violation(kFailureLemmas, ell, b.to_string(),
                                              leaks.to_string(),
                                              to_string(kFlavors[f]) + " k=" +
                                                  std::to_string(k) + " untouched=" +
                                                  std::to_string(untouched));
                                return true;
                            });
                    }
                }
            }
        }
    }

    void check_splices() {
        int n = g_.vertex_count();
        if (n == 0) return;
        uint64_t nb = uint64_t{1} << n;
        for (uint64_t i = 0; i < splices_; ++i) {
            ++result_.instances[kSwitchSplice];
            VertexSet b = set_from_mask(std::uniform_int_distribution<uint64_t>(
                                            0, nb - 1)(rng_),
                                        n);
            while (!is_zero_forcing_set(g_, b)) {
                int v = std::uniform_int_distribution<int>(0, n - 1)(rng_);
                b.insert(v);
            }
            ForcingProcess f = random_complete_process(g_, b, rng_);
            ForcingProcess f2 = random_complete_process(g_, b, rng_);
            size_t cut = std::uniform_int_distribution<size_t>(0, f.size())(rng_);
            VertexSet b_prime = b;
            for (size_t j = 0; j < cut; ++j) b_prime.insert(f[j].head);
            try {
                ForcingProcess spliced = splice_processes(g_, b, f, f2, b_prime);
                VertexSet final = b;
                for (const Force& fc : spliced) final.insert(fc.head);
                if (!final.is_full())
                    violation(kSwitchSplice, 0, b.to_string(), "",
                              "spliced process does not color the graph");
            } catch (const std::exception& e) {
                violation(kSwitchSplice, 0, b.to_string(), "", e.what());
            }
        }
    }

    void check_patterns() {
        int n = g_.vertex_count();
        uint64_t nb = uint64_t{1} << n;
        for (const auto& [name, pattern] : pattern_library()) {
            if (static_cast<int>(pattern.nodes().size()) > n) continue;
            int independence = independence_number(pattern.arcs());
            ++result_.instances[kIndependenceTheorem];
            int z_pattern = pattern_leaky_number(g_, pattern).value;
            int z_spec = specified_number(independence);
            if (z_pattern > z_spec)
                violation(kIndependenceTheorem, independence, "", name,
                          "Z_pattern=" + std::to_string(z_pattern) +
                              " > Z_specified=" + std::to_string(z_spec));
            if (independence == 1) {
                auto placements = enumerate_placements(g_, pattern);
                for (uint64_t m = 0; m < nb; ++m) {
                    ++result_.instances[kIndependenceSingle];
                    VertexSet b = set_from_mask(m, n);
                    bool pat = true;
                    for (const auto& placed : placements) {
                        std::vector<Leak> items;
                        for (const Arc& a : placed) items.push_back(Leak::arc(a));
                        if (!closure_final(g_, b, LeakSet(std::move(items))).is_full()) {
                            pat = false;
                            break;
                        }
                    }
                    if (pat != static_cast<bool>(holds_[2][std::min(1, opt_.ell_max)][m]))
                        violation(kIndependenceSingle, 1, b.to_string(), name,
                                  pat ? "pattern=true specified1=false"
                                      : "pattern=false specified1=true");
                }
            }
        }
    }

    // Z^s_ell, reusing the cached tables as a monotone prefilter when the
    // level exceeds what build_membership_tables precomputed.
    int specified_number(int ell) {
        if (ell <= opt_.ell_max) {
            int z = min_size(holds_[2][ell]);
            return z;
        }
        NumberResult r = minimum_satisfying(
            g_,
            [&](const VertexSet& b) {
                uint64_t mask = 0;
                for (int v : b.members()) mask |= uint64_t{1} << v;
                if (!holds_[2][opt_.ell_max][mask]) return false;
                return check_leaky_set(g_, b, {LeakFlavor::specified, ell}).holds;
            },
            result_.summary.z0, 1);
        return r.value;
    }

    void check_oracle_agreement() {
        int n = g_.vertex_count();
        uint64_t nb = uint64_t{1} << n;
        std::vector<Leak> universe = leak_universe(g_, LeakFlavor::mixed);
        OracleOptions completing{opt_.oracle_state_cap, ForceUniverse::completing};
        OracleOptions reachable{opt_.oracle_state_cap, ForceUniverse::reachable};
        for (int i = 0; i < opt_.force_samples_per_graph; ++i) {
            ++result_.instances[kPossibleForcesOracle];
            VertexSet b = set_from_mask(
                std::uniform_int_distribution<uint64_t>(0, nb - 1)(rng_), n);
            LeakSet leaks = random_leak_set(universe, 2, rng_);
            try {
                if (possible_forces(g_, b, leaks, ForceUniverse::completing) !=
                    possible_forces_oracle(g_, b, leaks, completing))
                    violation(kPossibleForcesOracle, 0, b.to_string(), leaks.to_string(),
                              "completing-universe mismatch");
                if (possible_forces(g_, b, leaks, ForceUniverse::reachable) !=
                    possible_forces_oracle(g_, b, leaks, reachable))
                    violation(kPossibleForcesOracle, 0, b.to_string(), leaks.to_string(),
                              "reachable-universe mismatch");
            } catch (const ResourceLimitError& e) {
                result_.resource_notes.push_back(g6_ + ": " + e.what());
            }
        }
    }

    const Graph& g_;
    const SuiteOptions& opt_;
    uint64_t splices_;
    std::mt19937_64 rng_;
    std::string g6_;
    std::array<std::vector<std::vector<char>>, 4> holds_;
    GraphResult result_;
};

FixtureNote compute_fixture_note() {
    FixtureNote note;
    Graph g = complete_prism(3);
    note.graph6 = emit_graph6(g);
    LeakPattern matching({{0, 3}, {1, 4}, {2, 5}});
    note.pattern = "a:0>3,a:1>4,a:2>5";
    note.independence = independence_number(matching.arcs());
    Verdict v = check_pattern_leaky_set(g, VertexSet(6, {0, 1, 2}), matching);
    note.holds = v.holds;
    if (v.counterexample) {
        note.counterexample = v.counterexample->leaks.to_string();
        note.stalled = v.counterexample->stalled.to_string();
    }
    return note;
}

}  // namespace

SuiteReport run_theorem_suite(std::span<const Graph> corpus, const SuiteOptions& options) {
    if (options.ell_max < 1) throw ContractError("theorem suite needs ell_max >= 1");
    auto start = std::chrono::steady_clock::now();

    uint64_t per_graph_splices =
        corpus.empty() ? 0 : (options.splice_samples + corpus.size() - 1) / corpus.size();

    std::vector<GraphResult> results(corpus.size());
    parallel_for_index(corpus.size(), options.workers, [&](uint64_t i) {
        uint64_t seed = options.seed ^ (0x9e3779b97f4a7c15ULL * (i + 1));
        GraphChecker checker(corpus[i], options, per_graph_splices, seed);
        results[i] = checker.run();
    });

    SuiteReport report;
    for (int c = 0; c < kCheckCount; ++c) report.checks.push_back({check_name(c), 0, 0});
    for (GraphResult& r : results) {
        for (int c = 0; c < kCheckCount; ++c) report.checks[c].instances += r.instances[c];
        for (SuiteViolation& v : r.violations) report.violations.push_back(std::move(v));
        for (std::string& s : r.resource_notes) report.resource_notes.push_back(std::move(s));
        report.graphs.push_back(std::move(r.summary));
    }
    std::sort(report.violations.begin(), report.violations.end());
    std::sort(report.resource_notes.begin(), report.resource_notes.end());
    for (const SuiteViolation& v : report.violations)
        for (SuiteCheck& c : report.checks)
            if (c.name == v.check) ++c.violations;
    for (const SuiteCheck& c : report.checks) {
        report.total_instances += c.instances;
        report.total_violations += c.violations;
    }
    report.fixture_note = compute_fixture_note();
    report.runtime_ms = std::chrono::duration<double, std::milli>(
                            std::chrono::steady_clock::now() - start)
                            .count();
    return report;
}

}  // namespace zf
