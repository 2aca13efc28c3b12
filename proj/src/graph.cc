#include <gpprism/graph.hh>
#include <gpprism/error.hh>

using namespace gpprism;

namespace
{
    // Combining overline, so partner labels render as "v̅".
    const std::string overbar = "̅";
}

auto Graph::edge_count() const -> int
{
    int twice = 0;
    for (auto & row : _rows)
        twice += row.size();
    return twice / 2;
}

auto Graph::edges() const -> std::vector<Edge>
{
    std::vector<Edge> result;
    for (int u = 0 ; u < size() ; ++u)
        _rows[u].for_each([&] (int v) {
            if (u < v)
                result.emplace_back(u, v);
        });
    return result;
}

auto Graph::label(int v) const -> std::string
{
    return _labels.empty() ? std::to_string(v) : _labels[v];
}

GraphBuilder::GraphBuilder(int n, const Limits & limits)
{
    if (n < 0)
        fail(ErrorKind::BadParameters, "negative vertex count " + std::to_string(n));
    if (n > limits.construction_vertices)
        fail(ErrorKind::GraphTooLarge, std::to_string(n) + " vertices exceeds construction limit "
                + std::to_string(limits.construction_vertices));
    _graph._rows.assign(n, VertexSet(n));
}

auto GraphBuilder::add_edge(int u, int v) -> GraphBuilder &
{
    int n = _graph.size();
    if (u < 0 || u >= n || v < 0 || v >= n)
        fail(ErrorKind::IndexOutOfRange, "edge (" + std::to_string(u) + "," + std::to_string(v)
                + ") outside [0," + std::to_string(n) + ")");
    if (u == v)
        fail(ErrorKind::SelfLoop, "self-loop at " + std::to_string(u));
    _graph._rows[u].insert(v);
    _graph._rows[v].insert(u);
    return *this;
}

auto GraphBuilder::set_labels(std::vector<std::string> labels) -> GraphBuilder &
{
    if (! labels.empty() && int(labels.size()) != _graph.size())
        fail(ErrorKind::BadParameters, "expected " + std::to_string(_graph.size()) + " labels, got "
                + std::to_string(labels.size()));
    _graph._labels = std::move(labels);
    return *this;
}

auto GraphBuilder::build() && -> Graph
{
    return std::move(_graph);
}

auto gpprism::build_graph(int n, std::span<const Edge> edges, const Limits & limits) -> Graph
{
    GraphBuilder builder(n, limits);
    for (auto & [u, v] : edges)
        builder.add_edge(u, v);
    return std::move(builder).build();
}

auto gpprism::build_graph(int n, std::initializer_list<Edge> edges, const Limits & limits) -> Graph
{
    return build_graph(n, std::span<const Edge>(edges.begin(), edges.size()), limits);
}

auto gpprism::complement(const Graph & g) -> Graph
{
    int n = g.size();
    GraphBuilder builder(n, Limits{ .construction_vertices = n });
    for (int u = 0 ; u < n ; ++u)
        for (int v = u + 1 ; v < n ; ++v)
            if (! g.adjacent(u, v))
                builder.add_edge(u, v);
    builder.set_labels(g.labels());
    return std::move(builder).build();
}

auto gpprism::cartesian_product(const Graph & g, const Graph & h, const Limits & limits) -> Graph
{
    long total = long(g.size()) * long(h.size());
    if (total > limits.construction_vertices)
        fail(ErrorKind::ProductTooLarge, std::to_string(g.size()) + " x " + std::to_string(h.size())
                + " vertices exceeds limit " + std::to_string(limits.construction_vertices));

    int nh = h.size();
    GraphBuilder builder(int(total), limits);
    std::vector<std::string> labels;
    for (int a = 0 ; a < g.size() ; ++a)
        for (int b = 0 ; b < nh ; ++b) {
            labels.push_back("(" + g.label(a) + "," + h.label(b) + ")");
            for (int b2 = b + 1 ; b2 < nh ; ++b2)
                if (h.adjacent(b, b2))
                    builder.add_edge(a * nh + b, a * nh + b2);
            for (int a2 = a + 1 ; a2 < g.size() ; ++a2)
                if (g.adjacent(a, a2))
                    builder.add_edge(a * nh + b, a2 * nh + b);
        }
    builder.set_labels(std::move(labels));
    return std::move(builder).build();
}

auto gpprism::complementary_prism(const Graph & g, const Limits & limits) -> Graph
{
    int n = g.size();
    GraphBuilder builder(2 * n, limits);
    std::vector<std::string> labels(2 * n);
    for (int u = 0 ; u < n ; ++u) {
        labels[u] = g.label(u);
        labels[n + u] = g.label(u) + overbar;
        builder.add_edge(u, n + u);
        for (int v = u + 1 ; v < n ; ++v) {
            if (g.adjacent(u, v))
                builder.add_edge(u, v);
            else
                builder.add_edge(n + u, n + v);
        }
    }
    builder.set_labels(std::move(labels));
    return std::move(builder).build();
}

auto gpprism::induced_subgraph(const Graph & g, const VertexSet & keep) -> Graph
{
    auto kept = keep.members();
    int k = int(kept.size());
    GraphBuilder builder(k, Limits{ .construction_vertices = k });
    std::vector<std::string> labels;
    for (int i = 0 ; i < k ; ++i) {
        labels.push_back(g.label(kept[i]));
        for (int j = i + 1 ; j < k ; ++j)
            if (g.adjacent(kept[i], kept[j]))
                builder.add_edge(i, j);
    }
    builder.set_labels(std::move(labels));
    return std::move(builder).build();
}

auto gpprism::is_clique(const Graph & g, const VertexSet & s) -> bool
{
    bool result = true;
    s.for_each([&] (int v) {
        auto others = s;
        others.erase(v);
        if (! others.is_subset_of(g.neighbors(v)))
            result = false;
    });
    return result;
}

auto gpprism::is_independent(const Graph & g, const VertexSet & s) -> bool
{
    bool result = true;
    s.for_each([&] (int v) {
        if (g.neighbors(v).intersects(s))
            result = false;
    });
    return result;
}
