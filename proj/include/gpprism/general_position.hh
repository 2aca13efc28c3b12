#pragma once

#include <gpprism/graph.hh>
#include <gpprism/metric.hh>

#include <array>
#include <optional>
#include <string>
#include <vector>

namespace gpprism
{
    /// Vertices on some shortest u,v-path, u and v included. Throws
    /// UnreachablePair.
    auto interval(const Graph & g, const DistanceMatrix & d, int u, int v) -> VertexSet;

    /// An unordered triple, stored sorted, in which one vertex lies on a
    /// geodesic between the other two.
    using Triple = std::array<int, 3>;

    /// Whether one of a, b, c is interior to a geodesic between the other two,
    /// with that geodesic of length at most max_len (when given). Only
    /// finite distances count.
    auto is_bad_triple(const DistanceMatrix & d, int a, int b, int c, std::optional<int> max_len = std::nullopt) -> bool;

    /// All bad triples in increasing lexicographic order.
    auto bad_triples(const Graph & g, const DistanceMatrix & d, std::optional<int> max_len = std::nullopt) -> std::vector<Triple>;
    auto bad_triples(const Graph & g, std::optional<int> max_len = std::nullopt) -> std::vector<Triple>;

    auto is_general_position(const Graph & g, const DistanceMatrix & d, const VertexSet & s) -> bool;
    auto is_3gp(const Graph & g, const DistanceMatrix & d, const VertexSet & s) -> bool;

    /// Clique partition of an induced subgraph plus the pairwise distance
    /// between its parts.
    struct PartitionCertificate
    {
        static constexpr int mixed = -2;

        std::vector<VertexSet> cliques;
        /// inter_distance[i][j] is the common distance between cliques i and j,
        /// or mixed when the distance depends on the chosen representatives.
        std::vector<std::vector<int>> inter_distance;
    };

    struct CharacterizationResult
    {
        bool accepted = false;
        /// Present whenever every component of G[S] is a clique.
        std::optional<PartitionCertificate> certificate;
        /// Empty when accepted.
        std::string reason;
    };

    /// Components of G[S] are cliques forming an in-transitive,
    /// distance-constant partition. Throws DisconnectedGraph.
    auto is_general_position_via_characterization(const Graph & g, const DistanceMatrix & d, const VertexSet & s)
        -> CharacterizationResult;

    /// Components of G[S] are cliques, and any two cliques joined by a pair
    /// at distance 2 are at distance 2 throughout. Throws DisconnectedGraph.
    auto is_3gp_via_characterization(const Graph & g, const DistanceMatrix & d, const VertexSet & s)
        -> CharacterizationResult;
}
