#pragma once

#include <gpprism/graph.hh>
#include <gpprism/solver.hh>

#include <optional>
#include <string>
#include <vector>

namespace gpprism
{
    enum class PredictionKind
    {
        Exact,
        Range,
        Undetermined
    };

    /// A claimed value (or range) for gp of a complementary prism, tagged with
    /// the result that produced it and, where that result is witnessed by a
    /// vertex, the vertex, so that the hypotheses can be re-checked.
    struct Prediction
    {
        PredictionKind kind = PredictionKind::Undetermined;
        int lo = 0;
        int hi = 0;
        std::string source;
        std::optional<int> witness;

        static auto exact(int value, std::string source, std::optional<int> witness = std::nullopt) -> Prediction;
        static auto range(int lo, int hi, std::string source) -> Prediction;

        auto value() const -> int { return lo; }
        auto admits(int exact_value) const -> bool;
        /// "=6", "[5,6]" or "?"
        auto to_string() const -> std::string;
    };

    /// Identifiers carried in Prediction::source and accepted by `verify`.
    namespace source
    {
        inline constexpr auto central_vertex = "thm35";
        inline constexpr auto bipartite = "thm37";
        inline constexpr auto tree = "cor38";
        inline constexpr auto grid = "cor39";
        inline constexpr auto hypercube = "cor310";
        inline constexpr auto split = "thm312";
        inline constexpr auto block = "thm314";
        inline constexpr auto gk_chain = "gk";
        inline constexpr auto bounds = "thm41";
    }

    /// Whether v (central, eccentricity 2) satisfies both conditions: the
    /// partners of N(v) are 3-general position in the complement and N_2(v)
    /// is 3-general position in G; and every neighbour of v misses some
    /// vertex of N_2(v).
    auto central_vertex_conditions_hold(const Graph & g, int v) -> bool;

    /// For G and its complement both connected, n >= 2: Exact n + 1 with the
    /// first qualifying central vertex as witness, otherwise Range [lower, n]
    /// since only n + 1 is excluded. Throws NotApplicable.
    auto predict_by_central_vertex(const Graph & g, const SolverOptions & options = {}) -> Prediction;

    /// Whether S, a general position set of the prism of size n + 1, is
    /// {v, v̄} ∪ N_2(v) ∪ partners(N(v)) for some central v of eccentricity 2.
    /// Throws NotAGpSet when S is not a general position set of that size.
    auto has_central_vertex_structure(const Graph & g, const VertexSet & prism_set) -> bool;

    /// Connected bipartite, n >= 2: Exact n + 1 iff radius 2 and the centre is
    /// independent, else Exact n. Throws NotApplicable.
    auto predict_bipartite(const Graph & g) -> Prediction;

    /// Trees on n >= 2 vertices: Exact n + 1 iff diameter 4, else Exact n.
    /// Throws NotATree.
    auto predict_tree(const Graph & t) -> Prediction;

    /// Grids P_rows x P_cols with rows, cols >= 2. Throws BadParameters.
    auto predict_grid(int rows, int cols) -> Prediction;

    /// Hypercubes of dimension r >= 2. Throws BadParameters.
    auto predict_hypercube(int r) -> Prediction;

    struct SplitPrediction
    {
        Prediction prediction;
        /// Clique side degrees >= |C| + 1 and independent side degrees <= |C| - 2.
        bool degree_condition = false;
        /// Evidence for the necessary condition on exact value n.
        bool complement_disconnected = false;
        bool clique_degrees_at_least_clique_size = false;

        /// If the prism has gp exactly n then the complement is disconnected
        /// or every clique vertex has degree at least |C|.
        auto obligation_holds(int n, int exact_value) const -> bool;
    };

    /// Split graphs: Range [n, n + 1], narrowed to Exact n when the degree
    /// condition holds on the computed partition. Throws NotSplit.
    auto predict_split(const Graph & g) -> SplitPrediction;

    /// Block graphs on n >= 2 vertices: Exact n + 1 iff radius 2 and some
    /// central v has N(v) a clique or independent set holding at least two cut
    /// vertices; otherwise Range [lower, n]. Throws NotABlockGraph.
    auto predict_block_graph(const Graph & g, const SolverOptions & options = {}) -> Prediction;

    /// Whether gp(prism) equals max{gp_3(G), gp_3(complement)}; for connected
    /// G this should match being complete multipartite. Throws
    /// DisconnectedGraph, GraphTooLarge.
    auto prism_gp_equals_max_gp3(const Graph & g, const SolverOptions & options = {}) -> bool;

    /// The chain G_k for k >= 5: Exact (2k + 3) - floor(k / 2). Throws
    /// BadParameters.
    auto predict_gk_chain(int k) -> Prediction;

    /// Every applicable prediction for g (NotApplicable ones are skipped).
    auto applicable_predictions(const Graph & g, const SolverOptions & options = {}) -> std::vector<Prediction>;

    /// Whether the predictions can all hold at once.
    auto mutually_consistent(const std::vector<Prediction> & predictions) -> bool;
}
