#include <homdist/errors.hh>
#include <homdist/graph6.hh>

#include <fstream>

using std::size_t;
using std::string;
using std::string_view;
using std::vector;

namespace homdist
{
    namespace
    {
        constexpr string_view header_prefix = ">>graph6<<";

        auto body_bytes_for(int n) -> size_t
        {
            auto bits = static_cast<size_t>(n) * static_cast<size_t>(n - 1) / 2;
            return (bits + 5) / 6;
        }
    }

    auto parse_graph6(string_view line) -> Graph
    {
        if (line.ends_with('\n'))
            line.remove_suffix(1);
        if (line.ends_with('\r'))
            line.remove_suffix(1);

        size_t pos = 0;
        if (line.starts_with(header_prefix))
            pos = header_prefix.size();

        if (pos >= line.size())
            throw ParseError("graph6 record has no size header", pos);

        auto head = static_cast<unsigned char>(line[pos]);
        if (head == 126)
            throw UnsupportedError("graph6 long-form header (order >= 63) is not supported");
        if (head < 63 || head > 126)
            throw ParseError("graph6 size byte " + std::to_string(head) + " outside [63,126]", pos);

        int n = head - 63;
        ++pos;

        auto expected = body_bytes_for(n);
        auto available = line.size() - pos;
        if (available < expected)
            throw ParseError("graph6 body has " + std::to_string(available) + " bytes, expected " + std::to_string(expected) + " for n=" + std::to_string(n), line.size());
        if (available > expected)
            throw ParseError("trailing garbage after graph6 body", pos + expected);

        vector<Edge> edges;
        size_t bit_index = 0;
        auto total_bits = static_cast<size_t>(n) * static_cast<size_t>(n - 1) / 2;
        // Bits enumerate pairs (i,j), i<j, column by column: j = 1.., i = 0..j-1.
        Vertex i = 0, j = 1;
        for (size_t b = 0; b < expected; ++b) {
            auto byte = static_cast<unsigned char>(line[pos + b]);
            if (byte < 63 || byte > 126)
                throw ParseError("graph6 body byte " + std::to_string(byte) + " outside [63,126]", pos + b);
            unsigned value = byte - 63u;
            for (int k = 5; k >= 0; --k, ++bit_index) {
                bool bit = (value >> k) & 1u;
                if (bit_index >= total_bits) {
                    if (bit)
                        throw ParseError("non-zero padding bit in graph6 body", pos + b);
                    continue;
                }
                if (bit)
                    edges.emplace_back(i, j);
                if (++i == j) {
                    i = 0;
                    ++j;
                }
            }
        }
        return Graph{n, std::move(edges)};
    }

    auto write_graph6(const Graph & g) -> string
    {
        int n = g.order();
        if (n > graph6_max_order)
            throw UnsupportedError("graph6 writer supports order <= 62, got " + std::to_string(n));

        string result;
        result.push_back(static_cast<char>(63 + n));
        unsigned current = 0;
        int filled = 0;
        for (int j = 1; j < n; ++j)
            for (int i = 0; i < j; ++i) {
                current = (current << 1) | (g.adjacent(i, j) ? 1u : 0u);
                if (++filled == 6) {
                    result.push_back(static_cast<char>(63 + current));
                    current = 0;
                    filled = 0;
                }
            }
        if (filled > 0)
            result.push_back(static_cast<char>(63 + (current << (6 - filled))));
        return result;
    }

    auto read_graph6_stream(std::istream & in) -> vector<Graph>
    {
        vector<Graph> result;
        string line;
        size_t line_number = 0;
        while (std::getline(in, line)) {
            ++line_number;
            if (line.find_first_not_of(" \t\r") == string::npos)
                continue;
            try {
                result.push_back(parse_graph6(line));
            }
            catch (const ParseError & e) {
                throw DataError("line " + std::to_string(line_number) + ": " + e.what());
            }
            catch (const UnsupportedError & e) {
                throw UnsupportedError("line " + std::to_string(line_number) + ": " + e.what());
            }
        }
        return result;
    }

    auto read_graph6_file(const string & path) -> vector<Graph>
    {
        std::ifstream in(path);
        if (! in)
            throw DataError("cannot open graph6 file '" + path + "'");
        return read_graph6_stream(in);
    }
}
