#pragma once

#include <gpprism/graph.hh>

#include <cstdint>
#include <random>
#include <vector>

namespace gpprism
{
    using Rng = std::mt19937_64;

    /// Mixes a sweep seed with instance coordinates, so each instance can be
    /// regenerated without replaying the ones before it.
    auto instance_seed(std::uint64_t seed, std::uint64_t a, std::uint64_t b = 0) -> std::uint64_t;

    /// Distribution helpers with a fixed algorithm, unlike the std::
    /// distributions, so sweeps reproduce across standard libraries.
    auto uniform_below(Rng & rng, std::uint64_t k) -> std::uint64_t;
    auto bernoulli(Rng & rng, double p) -> bool;
    auto random_permutation(Rng & rng, int n) -> std::vector<int>;

    auto random_pruefer_sequence(Rng & rng, int n) -> std::vector<int>;
    auto random_tree(Rng & rng, int n) -> Graph;
    auto random_gnp(Rng & rng, int n, double p) -> Graph;

    /// Resamples G(n, p) until connected. Throws BadParameters after
    /// max_attempts failures.
    auto random_connected_gnp(Rng & rng, int n, double p, int max_attempts = 1000) -> Graph;

    /// A random spanning tree plus each edge across its colour classes with
    /// probability p. Connected and bipartite.
    auto random_connected_bipartite(Rng & rng, int n, double p) -> Graph;

    /// A clique on a random number of vertices, each remaining vertex joined
    /// to a random subset of it; vertices then shuffled.
    auto random_split(Rng & rng, int n, double p) -> Graph;

    /// Grows a block graph by attaching cliques of 2 to 4 vertices at random
    /// existing vertices.
    auto random_block_graph(Rng & rng, int n) -> Graph;

    auto relabel(const Graph & g, const std::vector<int> & permutation) -> Graph;
}
