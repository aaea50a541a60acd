#pragma once

#include <stdexcept>
#include <string>

namespace zf {

// Malformed textual input (graph6, edge lists, leak strings). The message
// names the offending byte offset / line / column.
class ParseError : public std::runtime_error {
public:
    explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

// A caller broke a documented precondition (bad vertex id, duplicate heads,
// non-arc leak where arcs are required, ...).
class ContractError : public std::invalid_argument {
public:
    explicit ContractError(const std::string& what) : std::invalid_argument(what) {}
};

// An exhaustive computation exceeded its configured cap.
class ResourceLimitError : public std::runtime_error {
public:
    explicit ResourceLimitError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace zf
