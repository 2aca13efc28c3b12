#pragma once

#include <gpprism/vertex_set.hh>

#include <cstddef>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace gpprism
{
    /// Vertex-count limits. Solver inputs are held in single-word masks, so
    /// solver_vertices may not exceed 64.
    struct Limits
    {
        int construction_vertices = 128;
        int solver_vertices = 64;
        std::size_t optima_cap = 1'000'000;
    };

    using Edge = std::pair<int, int>;

    /// Immutable simple undirected graph with optional vertex labels. Adjacency
    /// is a dense bit row per vertex.
    class Graph
    {
        private:
            friend class GraphBuilder;

            std::vector<VertexSet> _rows;
            std::vector<std::string> _labels;

        public:
            Graph() = default;

            auto size() const -> int { return int(_rows.size()); }
            auto adjacent(int u, int v) const -> bool { return _rows[u].contains(v); }
            auto neighbors(int v) const -> const VertexSet & { return _rows[v]; }
            auto degree(int v) const -> int { return _rows[v].size(); }
            auto edge_count() const -> int;
            auto edges() const -> std::vector<Edge>;

            auto has_labels() const -> bool { return ! _labels.empty(); }
            /// The stored label, or the decimal index when the graph is unlabelled.
            auto label(int v) const -> std::string;
            auto labels() const -> const std::vector<std::string> & { return _labels; }

            auto all_vertices() const -> VertexSet { return VertexSet::full(size()); }

            /// Compares adjacency and labels.
            auto operator==(const Graph & other) const -> bool = default;
    };

    class GraphBuilder
    {
        private:
            Graph _graph;

        public:
            explicit GraphBuilder(int n, const Limits & limits = {});

            auto size() const -> int { return _graph.size(); }
            auto add_edge(int u, int v) -> GraphBuilder &;
            auto set_labels(std::vector<std::string> labels) -> GraphBuilder &;
            auto build() && -> Graph;
    };

    auto build_graph(int n, std::span<const Edge> edges, const Limits & limits = {}) -> Graph;
    auto build_graph(int n, std::initializer_list<Edge> edges, const Limits & limits = {}) -> Graph;

    auto complement(const Graph & g) -> Graph;

    /// Vertex (g, h) has index g * n(H) + h, labelled "(gLabel,hLabel)".
    auto cartesian_product(const Graph & g, const Graph & h, const Limits & limits = {}) -> Graph;

    /// Vertices 0..n-1 carry G, vertices n..2n-1 carry the complement, and the
    /// partner of i is n + i.
    auto complementary_prism(const Graph & g, const Limits & limits = {}) -> Graph;

    inline auto partner(int n, int v) -> int { return v < n ? v + n : v - n; }

    /// The subgraph induced by keep, relabelled 0..|keep|-1 in increasing
    /// order; labels are carried over (falling back to original indices).
    auto induced_subgraph(const Graph & g, const VertexSet & keep) -> Graph;

    auto is_clique(const Graph & g, const VertexSet & s) -> bool;
    auto is_independent(const Graph & g, const VertexSet & s) -> bool;
}
