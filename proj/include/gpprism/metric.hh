#pragma once

#include <gpprism/graph.hh>

#include <vector>

namespace gpprism
{
    /// All-pairs hop distances. Pairs in different components hold the
    /// unreachable sentinel, which is negative so arithmetic on it is wrong
    /// in an obvious way rather than silently large.
    class DistanceMatrix
    {
        private:
            int _n = 0;
            std::vector<int> _d;

        public:
            static constexpr int unreachable = -1;

            DistanceMatrix() = default;
            DistanceMatrix(int n, std::vector<int> d);

            auto size() const -> int { return _n; }
            auto operator()(int u, int v) const -> int { return _d[u * _n + v]; }
            auto reachable(int u, int v) const -> bool { return _d[u * _n + v] != unreachable; }
    };

    auto all_pairs_distances(const Graph & g) -> DistanceMatrix;

    struct MetricSummary
    {
        std::vector<int> eccentricity;
        int radius = 0;
        int diameter = 0;
        VertexSet center;
    };

    /// Throws DisconnectedGraph.
    auto metric_summary(const Graph & g) -> MetricSummary;
    auto metric_summary(const Graph & g, const DistanceMatrix & d) -> MetricSummary;

    struct Neighborhoods
    {
        VertexSet open;
        VertexSet closed;
        /// Vertices at distance exactly two.
        VertexSet second;
    };

    auto neighborhoods(const Graph & g, int v) -> Neighborhoods;
    auto neighborhoods(const Graph & g, const DistanceMatrix & d, int v) -> Neighborhoods;

    /// Connected components, ordered by their lowest vertex.
    auto components(const Graph & g) -> std::vector<VertexSet>;
    auto is_connected(const Graph & g) -> bool;
}
