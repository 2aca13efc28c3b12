#pragma once

#include <gpprism/graph.hh>
#include <gpprism/triple_system.hh>

#include <chrono>
#include <cstdint>
#include <optional>
#include <vector>

namespace gpprism
{
    using Clock = std::chrono::steady_clock;

    struct SolverOptions
    {
        Limits limits;
        /// Enumerate every maximum set, not just the witness.
        bool collect_all = false;
        /// Searches throw Timeout once this passes.
        std::optional<Clock::time_point> deadline;
    };

    struct SearchStats
    {
        std::uint64_t nodes = 0;
        double millis = 0.0;
    };

    struct GpResult
    {
        int value = 0;
        /// The lexicographically smallest maximum set.
        VertexSet witness;
        /// Every maximum set in increasing order, when collect_all was set.
        std::optional<std::vector<VertexSet>> optima;
        SearchStats stats;
    };

    /// Largest vertex set containing no forbidden triple. Branch and bound:
    /// vertices in descending triple degree, a greedy incumbent, and pruning
    /// on chosen + remaining candidates. The witness is then canonicalised by
    /// a second, index-ordered search for the first set of optimal size.
    auto maximum_triple_free_set(const TripleSystem & system, const SolverOptions & options = {}) -> GpResult;

    /// gp(G). Throws GraphTooLarge.
    auto max_gp(const Graph & g, const SolverOptions & options = {}) -> GpResult;

    /// gp_3(G): no three chosen vertices on a common geodesic of length at
    /// most 3. Throws GraphTooLarge, TooManyOptima.
    auto max_gp3(const Graph & g, const SolverOptions & options = {}) -> GpResult;
    auto max_gp3(const Graph & g, bool collect_all, SolverOptions options = {}) -> GpResult;

    /// omega(G), with the lexicographically smallest maximum clique.
    auto max_clique(const Graph & g, const SolverOptions & options = {}) -> GpResult;

    /// alpha(G) = omega of the complement.
    auto independence_number(const Graph & g, const SolverOptions & options = {}) -> int;

    /// eta(G): the largest S with G[S] a disjoint union of cliques, i.e. the
    /// complement induces a complete multipartite graph on S.
    auto max_cluster_set(const Graph & g, const SolverOptions & options = {}) -> GpResult;

    /// Over every maximum 3-general position set S of G, the largest gp_3 of
    /// the complement induced on V \ S. Throws TooManyOptima.
    auto gp3bar(const Graph & g, const SolverOptions & options = {}) -> int;

    struct InvariantBundle
    {
        int omega = 0;
        int alpha = 0;
        int eta = 0;
        int gp3 = 0;
        int gp3bar = 0;
    };

    auto invariant_bundle(const Graph & g, const SolverOptions & options = {}) -> InvariantBundle;

    struct PrismBounds
    {
        int lower = 0;
        int upper = 0;
    };

    /// Bounds on gp of the complementary prism: upper is n + 1 for connected
    /// G and n otherwise; lower is the larger of gp_3 + gp3bar over G and its
    /// complement.
    auto prism_bounds(const Graph & g, const SolverOptions & options = {}) -> PrismBounds;
}
