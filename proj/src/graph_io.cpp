#include "zf/graph_io.hpp"

#include <fstream>
#include <sstream>

namespace zf {

namespace {

constexpr std::string_view kGraph6Header = ">>graph6<<";

std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r' ||
                          s.front() == '\n'))
        s.remove_prefix(1);
    while (!s.empty() &&
           (s.back() == ' ' || s.back() == '\t' || s.back() == '\r' || s.back() == '\n'))
        s.remove_suffix(1);
    return s;
}

}  // namespace

Graph parse_graph6(std::string_view text) {
    std::string_view word = trim(text);
    if (word.substr(0, kGraph6Header.size()) == kGraph6Header)
        word = word.substr(kGraph6Header.size());
    if (word.empty()) throw ParseError("graph6: empty word");

    auto bad_byte = [&](size_t i) {
        throw ParseError("graph6: byte at offset " + std::to_string(i) +
                         " outside printable range 63..126");
    };
    for (size_t i = 0; i < word.size(); ++i) {
        unsigned char c = static_cast<unsigned char>(word[i]);
        if (c < 63 || c > 126) bad_byte(i);
    }

    if (word[0] == 126)
        throw ParseError("graph6: multi-byte size header at offset 0 not supported (n > 62)");
    int n = word[0] - 63;

    size_t bits = static_cast<size_t>(n) * (n - 1) / 2;
    size_t need = (bits + 5) / 6;
    if (word.size() - 1 != need)
        throw ParseError("graph6: malformed length, expected " + std::to_string(need) +
                         " payload bytes for n=" + std::to_string(n) + ", got " +
                         std::to_string(word.size() - 1));

    Graph g(n);
    size_t bit = 0;
    for (int v = 1; v < n; ++v) {
        for (int u = 0; u < v; ++u, ++bit) {
            int byte = static_cast<int>(1 + bit / 6);
            int shift = 5 - static_cast<int>(bit % 6);
            if ((word[byte] - 63) >> shift & 1) g.add_edge(u, v);
        }
    }
    // padding bits in the last payload byte must be zero
    for (size_t p = bits; p < need * 6; ++p) {
        size_t byte = 1 + p / 6;
        int shift = 5 - static_cast<int>(p % 6);
        if ((word[byte] - 63) >> shift & 1)
            throw ParseError("graph6: nonzero padding bit in byte at offset " +
                             std::to_string(byte));
    }
    return g;
}

std::string emit_graph6(const Graph& g) {
    int n = g.vertex_count();
    if (n > 62)
        throw ParseError("graph6: unsupported size n=" + std::to_string(n) +
                         " (single-byte header caps at 62)");
    std::string out;
    out.push_back(static_cast<char>(63 + n));
    size_t bits = static_cast<size_t>(n) * (n - 1) / 2;
    out.resize(1 + (bits + 5) / 6, static_cast<char>(63));
    size_t bit = 0;
    for (int v = 1; v < n; ++v) {
        for (int u = 0; u < v; ++u, ++bit) {
            if (g.has_edge(u, v)) out[1 + bit / 6] += 1 << (5 - bit % 6);
        }
    }
    return out;
}

Graph parse_edge_list(std::string_view text) {
    std::istringstream in{std::string(text)};
    std::string line;
    int lineno = 0;
    long n = -1;
    Graph g;

    auto fail = [&](const std::string& msg) {
        throw ParseError("edge list, line " + std::to_string(lineno) + ": " + msg);
    };

    while (std::getline(in, line)) {
        ++lineno;
        if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
        std::istringstream ls(line);
        if (n < 0) {
            std::string tag;
            if (!(ls >> tag)) continue;  // blank line before header
            long count;
            if (tag != "n" || !(ls >> count) || count < 0) fail("expected header \"n <count>\"");
            n = count;
            g = Graph(static_cast<int>(n));
            continue;
        }
        long u, v;
        if (!(ls >> u)) continue;  // blank / comment-only line
        if (!(ls >> v)) fail("expected \"u v\"");
        if (u < 0 || u >= n || v < 0 || v >= n)
            fail("vertex index out of range 0.." + std::to_string(n - 1));
        if (u == v) fail("self-loop at vertex " + std::to_string(u));
        g.add_edge(static_cast<int>(u), static_cast<int>(v));
    }
    if (n < 0) throw ParseError("edge list: missing header \"n <count>\"");
    return g;
}

std::vector<Graph> parse_graph6_lines(std::string_view text) {
    std::vector<Graph> out;
    std::istringstream in{std::string(text)};
    std::string line;
    while (std::getline(in, line)) {
        if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
        std::string_view word = trim(line);
        if (word.empty()) continue;
        out.push_back(parse_graph6(word));
    }
    return out;
}

std::vector<Graph> load_corpus_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open corpus file: " + path);
    std::stringstream buf;
    buf << in.rdbuf();
    return parse_graph6_lines(buf.str());
}

namespace {

void require_positive(const std::string& family, int k, int least = 1) {
    if (k < least)
        throw ContractError(family + ": size must be >= " + std::to_string(least) + ", got " +
                            std::to_string(k));
}

}  // namespace

Graph path_graph(int k) {
    require_positive("path", k);
    Graph g(k);
    for (int i = 0; i + 1 < k; ++i) g.add_edge(i, i + 1);
    return g;
}

Graph cycle_graph(int k) {
    require_positive("cycle", k, 3);
    Graph g(k);
    for (int i = 0; i < k; ++i) g.add_edge(i, (i + 1) % k);
    return g;
}

Graph complete_graph(int k) {
    require_positive("complete", k);
    Graph g(k);
    for (int u = 0; u < k; ++u)
        for (int v = u + 1; v < k; ++v) g.add_edge(u, v);
    return g;
}

Graph star_graph(int k) {
    require_positive("star", k);
    Graph g(k + 1);
    for (int leaf = 1; leaf <= k; ++leaf) g.add_edge(0, leaf);
    return g;
}

Graph paw_graph() {
    Graph g(4);
    g.add_edge(0, 1);
    g.add_edge(0, 2);
    g.add_edge(1, 2);
    g.add_edge(0, 3);
    return g;
}

Graph complete_prism(int k) {
    require_positive("complete_prism", k);
    Graph g(2 * k);
    for (int u = 0; u < k; ++u) {
        for (int v = u + 1; v < k; ++v) {
            g.add_edge(u, v);
            g.add_edge(k + u, k + v);
        }
        g.add_edge(u, k + u);
    }
    return g;
}

Graph generate_family(const std::string& family, const std::vector<int>& params) {
    auto arity = [&](size_t want) {
        if (params.size() != want)
            throw ContractError("family " + family + ": expected " + std::to_string(want) +
                                " parameter(s), got " + std::to_string(params.size()));
    };
    if (family == "path") return arity(1), path_graph(params[0]);
    if (family == "cycle") return arity(1), cycle_graph(params[0]);
    if (family == "complete") return arity(1), complete_graph(params[0]);
    if (family == "star") return arity(1), star_graph(params[0]);
    if (family == "paw") return arity(0), paw_graph();
    if (family == "complete_prism" || family == "cartesian_product_complete_k2")
        return arity(1), complete_prism(params[0]);
    throw ContractError("unknown graph family: " + family);
}

}  // namespace zf
