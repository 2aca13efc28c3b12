#include <gpprism/graph_io.hh>
#include <gpprism/error.hh>

#include <cctype>
#include <charconv>
#include <fstream>
#include <sstream>
#include <vector>

using namespace gpprism;

namespace
{
    constexpr long max_graph6_order = 258047;

    auto trim(std::string_view s) -> std::string_view
    {
        while (! s.empty() && std::isspace(static_cast<unsigned char>(s.front())))
            s.remove_prefix(1);
        while (! s.empty() && std::isspace(static_cast<unsigned char>(s.back())))
            s.remove_suffix(1);
        return s;
    }

    auto sextet(char c) -> int
    {
        int value = static_cast<unsigned char>(c) - 63;
        if (value < 0 || value > 63)
            fail(ErrorKind::MalformedInput, std::string("byte ") + std::to_string(int(static_cast<unsigned char>(c)))
                    + " is outside the graph6 range 63..126");
        return value;
    }
}

auto gpprism::parse_graph6(std::string_view text, const Limits & limits) -> Graph
{
    text = trim(text);
    if (text.starts_with(">>graph6<<"))
        text.remove_prefix(10);
    if (text.empty())
        fail(ErrorKind::MalformedInput, "empty graph6 string");
    if (text.front() == ':' || text.front() == '&')
        fail(ErrorKind::MalformedInput, "sparse6 and digraph6 are not graph6");

    long n;
    std::size_t pos;
    if (text.front() != '~') {
        n = sextet(text[0]);
        pos = 1;
    }
    else if (text.size() >= 2 && text[1] == '~')
        fail(ErrorKind::UnsupportedSize, "graph6 orders above " + std::to_string(max_graph6_order) + " are not supported");
    else {
        if (text.size() < 4)
            fail(ErrorKind::MalformedInput, "truncated graph6 size header");
        n = (long(sextet(text[1])) << 12) | (sextet(text[2]) << 6) | sextet(text[3]);
        if (n < 63)
            fail(ErrorKind::MalformedInput, "long graph6 header used for n = " + std::to_string(n));
        pos = 4;
    }

    if (n > limits.construction_vertices)
        fail(ErrorKind::UnsupportedSize, "graph6 order " + std::to_string(n) + " exceeds the construction limit of "
                + std::to_string(limits.construction_vertices));

    long bits = n * (n - 1) / 2;
    long bytes = (bits + 5) / 6;
    if (long(text.size() - pos) != bytes)
        fail(ErrorKind::MalformedInput, "expected " + std::to_string(bytes) + " data bytes for n = " + std::to_string(n)
                + ", got " + std::to_string(text.size() - pos));

    GraphBuilder builder(int(n), limits);
    long bit = 0;
    for (int v = 1 ; v < n ; ++v)
        for (int u = 0 ; u < v ; ++u, ++bit)
            if ((sextet(text[pos + bit / 6]) >> (5 - bit % 6)) & 1)
                builder.add_edge(u, v);

    if (bits % 6 != 0 && (sextet(text.back()) & ((1 << (6 - bits % 6)) - 1)))
        fail(ErrorKind::MalformedInput, "nonzero padding bits");

    return std::move(builder).build();
}

auto gpprism::write_graph6(const Graph & g) -> std::string
{
    long n = g.size();
    if (n > max_graph6_order)
        fail(ErrorKind::UnsupportedSize, "graph6 order " + std::to_string(n) + " is not supported");

    std::string result;
    if (n <= 62)
        result.push_back(char(n + 63));
    else {
        result.push_back('~');
        for (int shift : { 12, 6, 0 })
            result.push_back(char(((n >> shift) & 63) + 63));
    }

    int current = 0, filled = 0;
    for (int v = 1 ; v < n ; ++v)
        for (int u = 0 ; u < v ; ++u) {
            current = (current << 1) | (g.adjacent(u, v) ? 1 : 0);
            if (++filled == 6) {
                result.push_back(char(current + 63));
                current = filled = 0;
            }
        }
    if (filled > 0)
        result.push_back(char((current << (6 - filled)) + 63));

    return result;
}

auto gpprism::parse_edge_list(std::string_view text, const Limits & limits) -> Graph
{
    std::vector<std::pair<long, long>> rows;
    int line_number = 0;
    while (! text.empty()) {
        auto end = text.find('\n');
        auto line = trim(text.substr(0, end));
        text.remove_prefix(end == std::string_view::npos ? text.size() : end + 1);
        ++line_number;
        if (line.empty() || line.front() == '#')
            continue;

        long values[2];
        auto p = line.data(), last = line.data() + line.size();
        for (auto & value : values) {
            while (p != last && std::isspace(static_cast<unsigned char>(*p)))
                ++p;
            auto [next, ec] = std::from_chars(p, last, value);
            if (ec != std::errc{})
                fail(ErrorKind::MalformedInput, "line " + std::to_string(line_number) + ": expected two integers");
            p = next;
        }
        while (p != last && std::isspace(static_cast<unsigned char>(*p)))
            ++p;
        if (p != last)
            fail(ErrorKind::MalformedInput, "line " + std::to_string(line_number) + ": trailing text");
        rows.emplace_back(values[0], values[1]);
    }

    if (rows.empty())
        fail(ErrorKind::MalformedInput, "missing \"n m\" header");
    auto [n, m] = rows.front();
    if (n < 0 || m < 0)
        fail(ErrorKind::MalformedInput, "negative order or size in header");
    if (long(rows.size()) - 1 != m)
        fail(ErrorKind::MalformedInput, "header announces " + std::to_string(m) + " edges, found "
                + std::to_string(rows.size() - 1));
    if (n > limits.construction_vertices)
        fail(ErrorKind::UnsupportedSize, "order " + std::to_string(n) + " exceeds the construction limit of "
                + std::to_string(limits.construction_vertices));

    GraphBuilder builder(int(n), limits);
    for (std::size_t i = 1 ; i < rows.size() ; ++i) {
        auto [u, v] = rows[i];
        if (u < 0 || v < 0 || u >= n || v >= n)
            fail(ErrorKind::MalformedInput, "edge " + std::to_string(u) + " " + std::to_string(v) + " out of range");
        if (u == v)
            fail(ErrorKind::MalformedInput, "self loop at " + std::to_string(u));
        builder.add_edge(int(u), int(v));
    }
    return std::move(builder).build();
}

auto gpprism::write_edge_list(const Graph & g) -> std::string
{
    auto edges = g.edges();
    std::string result = std::to_string(g.size()) + " " + std::to_string(edges.size()) + "\n";
    for (auto [u, v] : edges)
        result += std::to_string(u) + " " + std::to_string(v) + "\n";
    return result;
}

auto gpprism::detect_format(std::string_view text) -> GraphFormat
{
    text = trim(text);
    if (! text.empty() && (std::isdigit(static_cast<unsigned char>(text.front())) || text.front() == '#'))
        return GraphFormat::EdgeList;
    return GraphFormat::Graph6;
}

auto gpprism::parse_graph(std::string_view text, const Limits & limits) -> Graph
{
    return detect_format(text) == GraphFormat::EdgeList ? parse_edge_list(text, limits) : parse_graph6(text, limits);
}

auto gpprism::write_graph(const Graph & g, GraphFormat format) -> std::string
{
    return format == GraphFormat::EdgeList ? write_edge_list(g) : write_graph6(g) + "\n";
}

auto gpprism::format_from_name(std::string_view name) -> GraphFormat
{
    if (name == "graph6")
        return GraphFormat::Graph6;
    if (name == "edgelist")
        return GraphFormat::EdgeList;
    fail(ErrorKind::BadParameters, "unknown format '" + std::string(name) + "'");
}

auto gpprism::read_graph_file(const std::string & path, const Limits & limits) -> Graph
{
    std::ifstream in(path);
    if (! in)
        fail(ErrorKind::MalformedInput, "cannot read '" + path + "'");
    std::stringstream buffer;
    buffer << in.rdbuf();
    return parse_graph(buffer.str(), limits);
}
