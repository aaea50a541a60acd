#include "zf/cli.hpp"

#include <chrono>
#include <fstream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "zf/forcing.hpp"
#include "zf/graph_io.hpp"
#include "zf/solver.hpp"
#include "zf/verify.hpp"

namespace zf {

namespace {

using ordered_json = nlohmann::ordered_json;

[[noreturn]] void syntax_error(size_t col, const std::string& msg) {
    throw ParseError("leak string, column " + std::to_string(col + 1) + ": " + msg);
}

int parse_number(const std::string& text, size_t& pos) {
    size_t start = pos;
    long value = 0;
    while (pos < text.size() && text[pos] >= '0' && text[pos] <= '9') {
        value = value * 10 + (text[pos] - '0');
        if (value > 1'000'000'000) syntax_error(start, "number too large");
        ++pos;
    }
    if (pos == start) syntax_error(pos, "expected a number");
    return static_cast<int>(value);
}

void expect_char(const std::string& text, size_t& pos, char c) {
    if (pos >= text.size() || text[pos] != c)
        syntax_error(pos, std::string("expected '") + c + "'");
    ++pos;
}

Leak parse_leak_item(const std::string& text, size_t& pos, const Graph* g,
                     bool arcs_only) {
    size_t start = pos;
    if (pos >= text.size()) syntax_error(pos, "expected leak item");
    char kind = text[pos++];
    expect_char(text, pos, ':');
    switch (kind) {
        case 'v': {
            if (arcs_only) syntax_error(start, "pattern items must be arcs");
            int v = parse_number(text, pos);
            if (g && (v < 0 || v >= g->vertex_count()))
                throw ContractError("leak v:" + std::to_string(v) +
                                    ": vertex outside the graph");
            return Leak::vertex(v);
        }
        case 'e': {
            if (arcs_only) syntax_error(start, "pattern items must be arcs");
            int u = parse_number(text, pos);
            expect_char(text, pos, '-');
            int v = parse_number(text, pos);
            if (u == v) throw ContractError("leak e:" + std::to_string(u) + "-" +
                                            std::to_string(v) + ": endpoints must differ");
            if (g && !g->has_edge(u, v))
                throw ContractError("leak e:" + std::to_string(u) + "-" + std::to_string(v) +
                                    ": not an edge of the graph");
            return Leak::edge(u, v);
        }
        case 'a': {
            int t = parse_number(text, pos);
            expect_char(text, pos, '>');
            int h = parse_number(text, pos);
            if (t == h) throw ContractError("leak a:" + std::to_string(t) + ">" +
                                            std::to_string(h) + ": self-arc not allowed");
            if (g && !g->has_edge(t, h))
                throw ContractError("leak a:" + std::to_string(t) + ">" + std::to_string(h) +
                                    ": not an edge of the graph");
            return Leak::arc(t, h);
        }
        default:
            syntax_error(start, "expected item kind 'v', 'e' or 'a'");
    }
}

std::vector<Leak> parse_leak_items(const std::string& text, const Graph* g, bool arcs_only) {
    std::vector<Leak> items;
    if (text.empty()) return items;
    size_t pos = 0;
    while (true) {
        items.push_back(parse_leak_item(text, pos, g, arcs_only));
        if (pos == text.size()) break;
        expect_char(text, pos, ',');
    }
    return items;
}

}  // namespace

LeakSet parse_leak_string(const std::string& text, const Graph* g) {
    return LeakSet(parse_leak_items(text, g, false));
}

LeakPattern parse_pattern_arcs(const std::string& text) {
    std::vector<Arc> arcs;
    for (const Leak& l : parse_leak_items(text, nullptr, true)) arcs.push_back({l.a, l.b});
    return LeakPattern(std::move(arcs));
}

namespace {

std::string arc_string(Arc a) {
    return std::to_string(a.tail) + ">" + std::to_string(a.head);
}

ordered_json vertex_array(const VertexSet& s) {
    return ordered_json(s.members());
}

ordered_json leak_array(const LeakSet& leaks) {
    std::vector<std::string> items;
    for (const Leak& l : leaks.items()) items.push_back(l.to_string());
    return ordered_json(items);
}

ordered_json force_array(const std::vector<Force>& forces) {
    std::vector<std::string> items;
    items.reserve(forces.size());
    for (const Force& f : forces) items.push_back(arc_string(f));
    return ordered_json(items);
}

VertexSet parse_vertex_list(const std::string& text, const Graph& g) {
    VertexSet out(g.vertex_count());
    if (text.empty()) return out;
    size_t pos = 0;
    while (true) {
        size_t start = pos;
        int v = parse_number(text, pos);
        if (v >= g.vertex_count())
            throw ContractError("vertex " + std::to_string(v) + " at column " +
                                std::to_string(start + 1) + " outside the graph");
        out.insert(v);
        if (pos == text.size()) break;
        expect_char(text, pos, ',');
    }
    return out;
}

struct GraphArgs {
    std::string path;
    std::string inline_g6;
    std::string format = "auto";

    void attach(CLI::App* cmd) {
        cmd->add_option("graph", path, "graph file (graph6 word or edge list)");
        cmd->add_option("--g6", inline_g6, "inline graph6 word");
        cmd->add_option("--format", format, "graph file format")
            ->check(CLI::IsMember({"auto", "graph6", "edges"}));
    }

    Graph load() const {
        if (!inline_g6.empty()) {
            if (!path.empty())
                throw ContractError("give either a graph file or --g6, not both");
            return parse_graph6(inline_g6);
        }
        if (path.empty()) throw ContractError("no graph given (file argument or --g6)");
        std::ifstream in(path);
        if (!in) throw ParseError("cannot open graph file: " + path);
        std::stringstream buf;
        buf << in.rdbuf();
        std::string text = buf.str();
        std::string fmt = format;
        if (fmt == "auto") {
            fmt = "graph6";
            std::istringstream lines(text);
            std::string line;
            while (std::getline(lines, line)) {
                if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
                std::istringstream ls(line);
                std::string tok;
                if (!(ls >> tok)) continue;
                if (tok == "n") fmt = "edges";
                break;
            }
        }
        if (fmt == "edges") return parse_edge_list(text);
        auto graphs = parse_graph6_lines(text);
        if (graphs.empty()) throw ParseError("graph file " + path + " contains no graph");
        return graphs.front();
    }
};

ordered_json query_graph(const Graph& g) {
    if (g.vertex_count() <= 62) return emit_graph6(g);
    return nullptr;
}

ordered_json verdict_json(const Verdict& v) {
    ordered_json r;
    r["holds"] = v.holds;
    if (v.counterexample) {
        r["counterexample"] = {
            {"leaks", leak_array(v.counterexample->leaks)},
            {"stalled", vertex_array(v.counterexample->stalled)},
        };
    } else {
        r["counterexample"] = nullptr;
    }
    return r;
}

ordered_json report_json(const SuiteReport& rep) {
    ordered_json checks = ordered_json::array();
    for (const SuiteCheck& c : rep.checks)
        checks.push_back({{"name", c.name},
                          {"instances", c.instances},
                          {"violations", c.violations}});
    ordered_json violations = ordered_json::array();
    for (const SuiteViolation& v : rep.violations)
        violations.push_back({{"check", v.check},
                              {"graph6", v.graph6},
                              {"ell", v.ell},
                              {"set", v.blue_set},
                              {"leaks", v.leaks},
                              {"details", v.details}});
    ordered_json numbers = ordered_json::array();
    for (const GraphSummary& s : rep.graphs) {
        ordered_json row = {{"graph6", s.graph6}, {"n", s.n}, {"z0", s.z0}};
        ordered_json by_ell = ordered_json::array();
        for (const auto& z : s.z_by_ell)
            by_ell.push_back({{"vertex", z[0]},
                              {"edge", z[1]},
                              {"specified", z[2]},
                              {"mixed", z[3]}});
        row["z_by_ell"] = by_ell;
        numbers.push_back(row);
    }
    ordered_json fixture = {{"graph6", rep.fixture_note.graph6},
                            {"pattern", rep.fixture_note.pattern},
                            {"independence", rep.fixture_note.independence},
                            {"holds", rep.fixture_note.holds},
                            {"counterexample", rep.fixture_note.counterexample},
                            {"stalled", rep.fixture_note.stalled}};
    return ordered_json{{"graphs_checked", rep.graphs.size()},
                        {"checks", checks},
                        {"violations", violations},
                        {"numbers", numbers},
                        {"fixture_note", fixture},
                        {"resource_notes", rep.resource_notes},
                        {"totals",
                         {{"instances", rep.total_instances},
                          {"violations", rep.total_violations}}}};
}

struct Timer {
    std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
    double ms() const {
        return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() -
                                                         start)
            .count();
    }
};

}  // namespace

CommandOutcome run_command(const std::vector<std::string>& args) {
    CLI::App app{"exact zero forcing with adversarial leaks", "zfl"};
    app.require_subcommand(1);

    GraphArgs closure_graph, check_graph, forces_graph, number_graph, pattern_graph;
    std::string set_text, leaks_text, kind_text = "vertex", arcs_text, corpus_path;
    int ell = 0, ell_max = 2, workers = 1, samples = 30;
    uint64_t splices = 10000, seed = SuiteOptions{}.seed;
    bool do_assert = false, pattern_number = false;

    CLI::App* closure_cmd = app.add_subcommand("closure", "closure, rounds and a witness process");
    closure_graph.attach(closure_cmd);
    closure_cmd->add_option("--set", set_text, "initial blue vertices, e.g. 0,2")->required();
    closure_cmd->add_option("--leaks", leaks_text, "leak set, e.g. v:3,e:1-2,a:4>5");

    CLI::App* check_cmd = app.add_subcommand("check", "membership under a leak budget");
    check_graph.attach(check_cmd);
    check_cmd->add_option("--set", set_text, "candidate blue set")->required();
    check_cmd->add_option("--ell", ell, "leak budget")->required();
    check_cmd->add_option("--kind", kind_text, "vertex|edge|specified|mixed")->required();
    check_cmd->add_flag("--assert", do_assert, "exit 1 when the verdict is false");

    CLI::App* forces_cmd = app.add_subcommand("forces", "possible forces of a blue set");
    forces_graph.attach(forces_cmd);
    forces_cmd->add_option("--set", set_text, "blue set")->required();
    forces_cmd->add_option("--leaks", leaks_text, "leak set");

    CLI::App* number_cmd = app.add_subcommand("number", "minimum leaky forcing number");
    number_graph.attach(number_cmd);
    number_cmd->add_option("--ell", ell, "leak budget")->required();
    number_cmd->add_option("--kind", kind_text, "vertex|edge|specified|mixed")->required();
    number_cmd->add_option("--workers", workers, "worker threads");

    CLI::App* pattern_cmd = app.add_subcommand("pattern", "pattern-shaped leak queries");
    pattern_graph.attach(pattern_cmd);
    pattern_cmd->add_option("--arcs", arcs_text, "pattern arcs, e.g. a:0>1,a:2>3")
        ->required();
    CLI::Option* pattern_set = pattern_cmd->add_option("--set", set_text, "candidate blue set");
    pattern_cmd->add_flag("--number", pattern_number, "compute the pattern forcing number")
        ->excludes(pattern_set);
    pattern_cmd->add_option("--workers", workers, "worker threads");
    pattern_cmd->add_flag("--assert", do_assert, "exit 1 when the verdict is false");

    CLI::App* verify_cmd = app.add_subcommand("verify", "run the theorem suite over a corpus");
    verify_cmd->add_option("--corpus", corpus_path, "graph6-per-line corpus file")->required();
    verify_cmd->add_option("--ell-max", ell_max, "largest leak budget to test");
    verify_cmd->add_option("--workers", workers, "worker threads");
    verify_cmd->add_option("--splices", splices, "total splice samples");
    verify_cmd->add_option("--samples", samples, "oracle samples per graph");
    verify_cmd->add_option("--seed", seed, "sampling seed");
    verify_cmd->add_flag("--assert", do_assert, "exit 1 when any check is violated");

    CommandOutcome outcome;
    try {
        std::vector<const char*> argv{"zfl"};
        for (const std::string& a : args) argv.push_back(a.c_str());
        try {
            app.parse(static_cast<int>(argv.size()), argv.data());
        } catch (const CLI::CallForHelp& e) {
            std::stringstream help;
            help << app.help();
            outcome.output = help.str();
            return outcome;
        } catch (const CLI::ParseError& e) {
            outcome.error = std::string("usage error: ") + e.what();
            outcome.exit_code = 2;
            return outcome;
        }

        Timer timer;
        ordered_json query, result, stats;

        if (closure_cmd->parsed()) {
            Graph g = closure_graph.load();
            VertexSet b = parse_vertex_list(set_text, g);
            LeakSet leaks = parse_leak_string(leaks_text, &g);
            query = {{"verb", "closure"},
                     {"graph6", query_graph(g)},
                     {"set", vertex_array(b)},
                     {"leaks", leaks.to_string()}};
            ClosureResult c = closure(g, b, leaks);
            ordered_json rounds = ordered_json::array();
            for (const VertexSet& r : c.rounds) rounds.push_back(vertex_array(r));
            result = {{"final", vertex_array(c.final)},
                      {"rounds", rounds},
                      {"process", force_array(c.process)}};
        } else if (check_cmd->parsed()) {
            Graph g = check_graph.load();
            VertexSet b = parse_vertex_list(set_text, g);
            LeakBudget budget{leak_flavor_from_string(kind_text), ell};
            if (ell < 0) throw ContractError("--ell must be nonnegative");
            query = {{"verb", "check"},
                     {"graph6", query_graph(g)},
                     {"set", vertex_array(b)},
                     {"ell", ell},
                     {"kind", kind_text}};
            Verdict v = check_leaky_set(g, b, budget);
            result = verdict_json(v);
            stats["leaksets_checked"] = v.stats.leak_sets_checked;
            if (do_assert && !v.holds) outcome.exit_code = 1;
        } else if (forces_cmd->parsed()) {
            Graph g = forces_graph.load();
            VertexSet b = parse_vertex_list(set_text, g);
            LeakSet leaks = parse_leak_string(leaks_text, &g);
            query = {{"verb", "forces"},
                     {"graph6", query_graph(g)},
                     {"set", vertex_array(b)},
                     {"leaks", leaks.to_string()}};
            result = {{"forces", force_array(possible_forces(g, b, leaks))}};
        } else if (number_cmd->parsed()) {
            Graph g = number_graph.load();
            if (ell < 0) throw ContractError("--ell must be nonnegative");
            LeakBudget budget{leak_flavor_from_string(kind_text), ell};
            query = {{"verb", "number"},
                     {"graph6", query_graph(g)},
                     {"ell", ell},
                     {"kind", kind_text}};
            NumberResult r = leaky_number(g, budget, workers);
            result = {{"value", r.value}, {"witness", vertex_array(r.witness)}};
            stats["subsets_checked"] = r.stats.subsets_checked;
        } else if (pattern_cmd->parsed()) {
            Graph g = pattern_graph.load();
            LeakPattern pat = parse_pattern_arcs(arcs_text);
            std::string canonical;
            for (const Arc& a : pat.arcs()) {
                if (!canonical.empty()) canonical += ',';
                canonical += "a:" + arc_string(a);
            }
            query = {{"verb", "pattern"}, {"graph6", query_graph(g)}, {"arcs", canonical}};
            if (pattern_number) {
                NumberResult r = pattern_leaky_number(g, pat, workers);
                result = {{"value", r.value}, {"witness", vertex_array(r.witness)}};
                stats["subsets_checked"] = r.stats.subsets_checked;
            } else if (!pattern_set->empty()) {
                VertexSet b = parse_vertex_list(set_text, g);
                query["set"] = vertex_array(b);
                Verdict v = check_pattern_leaky_set(g, b, pat);
                result = verdict_json(v);
                stats["leaksets_checked"] = v.stats.leak_sets_checked;
                if (do_assert && !v.holds) outcome.exit_code = 1;
            } else {
                throw ContractError("pattern: give --set or --number");
            }
        } else if (verify_cmd->parsed()) {
            std::vector<Graph> corpus = load_corpus_file(corpus_path);
            SuiteOptions opt;
            opt.ell_max = ell_max;
            opt.workers = workers;
            opt.splice_samples = splices;
            opt.force_samples_per_graph = samples;
            opt.seed = seed;
            query = {{"verb", "verify"},
                     {"corpus", corpus_path},
                     {"ell_max", ell_max}};
            SuiteReport rep = run_theorem_suite(corpus, opt);
            result = report_json(rep);
            if (do_assert && rep.total_violations > 0) outcome.exit_code = 1;
        }

        stats["runtime_ms"] = timer.ms();
        ordered_json doc = {{"query", query}, {"result", result}, {"stats", stats}};
        outcome.output = doc.dump(2) + "\n";
        return outcome;
    } catch (const ResourceLimitError& e) {
        outcome.error = std::string("resource limit: ") + e.what();
        outcome.exit_code = 3;
    } catch (const std::exception& e) {
        outcome.error = std::string("error: ") + e.what();
        outcome.exit_code = 2;
    }
    return outcome;
}

}  // namespace zf
