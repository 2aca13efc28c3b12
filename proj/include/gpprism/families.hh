#pragma once

#include <gpprism/graph.hh>

#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace gpprism
{
    enum class Family
    {
        Path,                   // [n]
        Cycle,                  // [n >= 3]
        Complete,               // [n]
        Empty,                  // [n]
        CompleteMultipartite,   // [part sizes...]
        Star,                   // [leaves]
        DoubleStar,             // [leaves at centre 0, leaves at centre 1]
        TreePruefer,            // [Pruefer sequence...], n = length + 2
        Grid,                   // [rows, columns]
        Hypercube,              // [dimension]
        Petersen,               // []
        Fig1DoubleStar,         // []
        Fig2G1,                 // []
        Fig2G2,                 // []
        GkChain,                // [k >= 0]
        CliquePath              // [r, s, n_1..n_r, m_1..m_s]
    };

    struct FamilySpec
    {
        Family family;
        std::vector<int> params;
    };

    struct FamilyArtifact
    {
        Graph graph;
        std::map<std::string, VertexSet> named_sets;
    };

    /// Deterministic numbering per family:
    ///  - paths and cycles run 0..n-1 in order; stars put the centre at 0;
    ///  - Fig1DoubleStar is u=0, v=1, u1=2, u2=3, v1=4, v2=5;
    ///  - Fig2G1 is the triangle u1u2u3 (0,1,2) with pendants v_i-u_i (3,4,5),
    ///    and Fig2G2 adds the edge v1u2;
    ///  - GkChain interleaves v1,u1,v2,u2,...,u_{k+1},v_{k+2}, with blocks
    ///    {v_i, u_i, v_{i+1}}; named sets E (simplicial), A (cut), X and Y
    ///    (the two colour classes of the path on A, |X| >= |Y|);
    ///  - CliquePath is the path u=0, v=1, w=2, then cliques joined to u, then
    ///    cliques joined to w;
    ///  - Petersen is the outer 5-cycle 0..4, spokes i to i+5, and the inner
    ///    pentagram on 5..9.
    /// Throws BadParameters.
    auto generate(const FamilySpec & spec, const Limits & limits = {}) -> FamilyArtifact;

    /// CLI names: path, cycle, complete, empty, multipartite, star,
    /// double-star, tree, grid, hypercube, petersen, fig1, fig2-g1, fig2-g2,
    /// gk, clique-path. Throws BadParameters.
    auto family_from_name(std::string_view name) -> Family;
    auto family_name(Family family) -> std::string_view;

    auto path_graph(int n) -> Graph;
    auto cycle_graph(int n) -> Graph;
    auto complete_graph(int n) -> Graph;
    auto empty_graph(int n) -> Graph;
    auto complete_multipartite_graph(const std::vector<int> & parts) -> Graph;
    auto gk_chain(int k) -> Graph;

    /// The labelled tree with the given Pruefer sequence, on length + 2
    /// vertices. Throws BadParameters.
    auto tree_from_pruefer(const std::vector<int> & sequence) -> Graph;
}
