#pragma once

#include <homdist/graph.hh>

#include <istream>
#include <string>
#include <string_view>
#include <vector>

namespace homdist
{
    /// Largest order representable with the one-byte graph6 header.
    inline constexpr int graph6_max_order = 62;

    /// Decodes one graph6 record (without the trailing newline; a single
    /// trailing '\n' or "\r\n" is tolerated). The optional ">>graph6<<"
    /// prefix is accepted. Throws ParseError carrying the byte offset of the
    /// first offending byte, and UnsupportedError for the long-form header
    /// used by graphs of order 63 and above.
    [[nodiscard]] auto parse_graph6(std::string_view line) -> Graph;

    /// Encodes a graph of order at most 62. Throws UnsupportedError otherwise.
    [[nodiscard]] auto write_graph6(const Graph & g) -> std::string;

    /// One graph6 record per non-blank line. Parse errors are rethrown as
    /// DataError prefixed with the 1-based line number.
    [[nodiscard]] auto read_graph6_stream(std::istream & in) -> std::vector<Graph>;
    [[nodiscard]] auto read_graph6_file(const std::string & path) -> std::vector<Graph>;
}
