#pragma once

#include <gpprism/graph.hh>

#include <iosfwd>
#include <string>
#include <string_view>

namespace gpprism
{
    enum class GraphFormat
    {
        Graph6,
        EdgeList
    };

    /// Accepts the one-byte header (n <= 62) and the four-byte "~" header
    /// (n <= 258047), with or without a leading ">>graph6<<". Surrounding
    /// whitespace is ignored. Throws MalformedInput, UnsupportedSize.
    auto parse_graph6(std::string_view text, const Limits & limits = {}) -> Graph;
    auto write_graph6(const Graph & g) -> std::string;

    /// "n m" on the first line, then m lines "u v" with 0-based endpoints.
    /// Blank lines and lines starting with '#' are skipped. Throws
    /// MalformedInput.
    auto parse_edge_list(std::string_view text, const Limits & limits = {}) -> Graph;
    auto write_edge_list(const Graph & g) -> std::string;

    /// A leading digit means an edge list, anything else graph6.
    auto detect_format(std::string_view text) -> GraphFormat;
    auto parse_graph(std::string_view text, const Limits & limits = {}) -> Graph;
    auto write_graph(const Graph & g, GraphFormat format) -> std::string;

    auto format_from_name(std::string_view name) -> GraphFormat;

    /// Throws MalformedInput if the file cannot be read.
    auto read_graph_file(const std::string & path, const Limits & limits = {}) -> Graph;
}
