#include <gpprism/sampling.hh>
#include <gpprism/error.hh>
#include <gpprism/families.hh>
#include <gpprism/metric.hh>
#include <gpprism/structure.hh>

#include <algorithm>
#include <numeric>

using namespace gpprism;

namespace
{
    auto splitmix64(std::uint64_t x) -> std::uint64_t
    {
        x += 0x9e3779b97f4a7c15ULL;
        x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
        x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
        return x ^ (x >> 31);
    }
}

auto gpprism::instance_seed(std::uint64_t seed, std::uint64_t a, std::uint64_t b) -> std::uint64_t
{
    return splitmix64(splitmix64(splitmix64(seed) ^ a) ^ b);
}

auto gpprism::uniform_below(Rng & rng, std::uint64_t k) -> std::uint64_t
{
    if (k == 0)
        fail(ErrorKind::BadParameters, "uniform_below(0)");
    // rejection keeps it unbiased
    std::uint64_t limit = std::uint64_t(-1) - std::uint64_t(-1) % k;
    std::uint64_t x;
    do
        x = rng();
    while (x >= limit);
    return x % k;
}

auto gpprism::bernoulli(Rng & rng, double p) -> bool
{
    return double(rng() >> 11) * 0x1.0p-53 < p;
}

auto gpprism::random_permutation(Rng & rng, int n) -> std::vector<int>
{
    std::vector<int> result(n);
    std::iota(result.begin(), result.end(), 0);
    for (int i = n - 1 ; i > 0 ; --i)
        std::swap(result[i], result[uniform_below(rng, i + 1)]);
    return result;
}

auto gpprism::random_pruefer_sequence(Rng & rng, int n) -> std::vector<int>
{
    if (n < 2)
        fail(ErrorKind::BadParameters, "trees from Pruefer sequences need n >= 2");
    std::vector<int> sequence(n - 2);
    for (auto & x : sequence)
        x = int(uniform_below(rng, n));
    return sequence;
}

auto gpprism::random_tree(Rng & rng, int n) -> Graph
{
    if (n == 1)
        return path_graph(1);
    return tree_from_pruefer(random_pruefer_sequence(rng, n));
}

auto gpprism::random_gnp(Rng & rng, int n, double p) -> Graph
{
    if (p < 0.0 || p > 1.0)
        fail(ErrorKind::BadParameters, "edge probability must lie in [0,1]");
    GraphBuilder builder(n);
    for (int u = 0 ; u < n ; ++u)
        for (int v = u + 1 ; v < n ; ++v)
            if (bernoulli(rng, p))
                builder.add_edge(u, v);
    return std::move(builder).build();
}

auto gpprism::random_connected_gnp(Rng & rng, int n, double p, int max_attempts) -> Graph
{
    for (int attempt = 0 ; attempt < max_attempts ; ++attempt) {
        auto g = random_gnp(rng, n, p);
        if (is_connected(g))
            return g;
    }
    fail(ErrorKind::BadParameters, "no connected G(" + std::to_string(n) + ", " + std::to_string(p) + ") after "
            + std::to_string(max_attempts) + " attempts");
}

auto gpprism::random_connected_bipartite(Rng & rng, int n, double p) -> Graph
{
    auto tree = random_tree(rng, n);
    auto sides = bipartition(tree);
    GraphBuilder builder(n);
    for (auto [u, v] : tree.edges())
        builder.add_edge(u, v);
    sides->side_a.for_each([&] (int a) {
        sides->side_b.for_each([&] (int b) {
            if (! tree.adjacent(a, b) && bernoulli(rng, p))
                builder.add_edge(a, b);
        });
    });
    return std::move(builder).build();
}

auto gpprism::random_split(Rng & rng, int n, double p) -> Graph
{
    if (n < 1)
        fail(ErrorKind::BadParameters, "split graphs here need n >= 1");
    int c = 1 + int(uniform_below(rng, n));
    GraphBuilder builder(n);
    for (int u = 0 ; u < c ; ++u)
        for (int v = u + 1 ; v < c ; ++v)
            builder.add_edge(u, v);
    for (int y = c ; y < n ; ++y)
        for (int x = 0 ; x < c ; ++x)
            if (bernoulli(rng, p))
                builder.add_edge(x, y);
    return relabel(std::move(builder).build(), random_permutation(rng, n));
}

auto gpprism::random_block_graph(Rng & rng, int n) -> Graph
{
    if (n < 1)
        fail(ErrorKind::BadParameters, "block graphs need n >= 1");
    GraphBuilder builder(n);
    int used = 1;
    while (used < n) {
        int attach = int(uniform_below(rng, used));
        int fresh = std::min(n - used, 1 + int(uniform_below(rng, 3)));
        std::vector<int> block{ attach };
        for (int i = 0 ; i < fresh ; ++i)
            block.push_back(used++);
        for (std::size_t i = 0 ; i < block.size() ; ++i)
            for (std::size_t j = i + 1 ; j < block.size() ; ++j)
                builder.add_edge(block[i], block[j]);
    }
    return relabel(std::move(builder).build(), random_permutation(rng, n));
}

auto gpprism::relabel(const Graph & g, const std::vector<int> & permutation) -> Graph
{
    if (int(permutation.size()) != g.size())
        fail(ErrorKind::BadParameters, "permutation size does not match the graph");
    GraphBuilder builder(g.size());
    for (auto [u, v] : g.edges())
        builder.add_edge(permutation[u], permutation[v]);
    return std::move(builder).build();
}
