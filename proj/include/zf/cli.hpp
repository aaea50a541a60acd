#pragma once

#include <string>
#include <vector>

#include "zf/graph.hpp"
#include "zf/leaks.hpp"

namespace zf {

/// Parses the leak grammar: comma-separated items "v:<id>", "e:<u>-<v>",
/// "a:<u>><v>"; the empty string is the empty set. Syntax errors cite the
/// 1-based column. When a graph is supplied, vertex ids are range-checked
/// and e:/a: endpoints must be adjacent.
LeakSet parse_leak_string(const std::string& text, const Graph* g = nullptr);

/// Pattern flavor of the grammar: arcs only, abstract labels, no adjacency
/// checks (self-arcs still rejected).
LeakPattern parse_pattern_arcs(const std::string& text);

struct CommandOutcome {
    int exit_code = 0;
    std::string output;  // JSON document (empty on usage/input errors)
    std::string error;   // human-readable message for stderr
};

/// Full command dispatch, exactly what the zfl binary runs. Exit codes:
/// 0 computed, 1 verdict false under --assert, 2 input error, 3 resource
/// cap exceeded.
CommandOutcome run_command(const std::vector<std::string>& args);

}  // namespace zf
