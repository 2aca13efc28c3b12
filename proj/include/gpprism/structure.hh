#pragma once

#include <gpprism/graph.hh>

#include <optional>
#include <vector>

namespace gpprism
{
    struct BipartitionInfo
    {
        VertexSet side_a;
        VertexSet side_b;
        /// Vertices of A adjacent to all of B, and vertices of B adjacent to all of A.
        VertexSet full_degree;
    };

    /// Two-colouring with the lowest vertex of each component placed in A.
    /// Absent when the graph has an odd cycle.
    auto bipartition(const Graph & g) -> std::optional<BipartitionInfo>;

    struct SplitPartition
    {
        VertexSet clique;
        VertexSet independent;
    };

    /// Among all split partitions, the one with the largest clique side; ties
    /// go to the lexicographically smallest clique side.
    auto split_partition(const Graph & g) -> std::optional<SplitPartition>;

    struct BlockDecomposition
    {
        /// Ordered by the sorted member lists.
        std::vector<VertexSet> blocks;
        VertexSet cut_vertices;
        VertexSet simplicial_vertices;
    };

    /// Throws DisconnectedGraph.
    auto block_decomposition(const Graph & g) -> BlockDecomposition;

    struct GraphClass
    {
        bool is_connected = false;
        bool is_tree = false;
        bool is_bipartite = false;
        bool is_split = false;
        bool is_block_graph = false;
        bool is_complete_multipartite = false;
    };

    auto classify(const Graph & g) -> GraphClass;
}
