#pragma once

#include "prismdom/graph.hpp"

#include <stdexcept>
#include <string>
#include <string_view>

namespace prismdom {

// Malformed input, reported with the 1-based line where it was detected.
class FormatError : public std::runtime_error {
public:
    FormatError(int line, const std::string& message)
        : std::runtime_error("line " + std::to_string(line) + ": " + message), line_(line)
    {
    }
    int line() const { return line_; }

private:
    int line_;
};

// Format: a header line "n m", then m lines "u v" with 0 <= u, v < n and
// u != v. Duplicate edges (in either orientation) are rejected.
Graph parse_edge_list(std::string_view text);

// Canonical form: header, then edges as "u v" with u < v in lexicographic order.
std::string serialize_edge_list(const Graph& g);

Graph read_edge_list_file(const std::string& path);
void write_edge_list_file(const std::string& path, const Graph& g);

} // namespace prismdom
