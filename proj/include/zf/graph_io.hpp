#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "zf/graph.hpp"

namespace zf {

/// Decodes one graph6 word (optionally prefixed with ">>graph6<<").
/// Only the single-byte size header is supported, so n <= 62.
Graph parse_graph6(std::string_view text);

/// Canonical graph6 word without header. Throws for n > 62.
std::string emit_graph6(const Graph& g);

/// Edge-list format: first line "n <count>", then one "u v" per line.
/// '#' starts a comment; duplicate edges collapse.
Graph parse_edge_list(std::string_view text);

/// One graph6 word per line; '#' comments and blank lines allowed.
std::vector<Graph> parse_graph6_lines(std::string_view text);

/// Loads a corpus file (graph6-per-line).
std::vector<Graph> load_corpus_file(const std::string& path);

// Named generators. Sizes must be positive (cycles need k >= 3).
Graph path_graph(int k);
Graph cycle_graph(int k);
Graph complete_graph(int k);
/// Star K_{1,k}: center 0, leaves 1..k.
Graph star_graph(int k);
/// Triangle {0,1,2} plus the pendant vertex 3 attached to 0.
Graph paw_graph();
/// K_k x K_2 (Cartesian product): vertices 0..k-1 and k..2k-1 induce
/// cliques, i -- i+k is the matching between them.
Graph complete_prism(int k);

/// Dispatch by family name: "path", "cycle", "complete", "star" take one
/// size parameter, "paw" takes none, "complete_prism" (alias
/// "cartesian_product_complete_k2") takes the clique size.
Graph generate_family(const std::string& family, const std::vector<int>& params);

}  // namespace zf
