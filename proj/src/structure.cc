#include <gpprism/structure.hh>
#include <gpprism/metric.hh>
#include <gpprism/error.hh>

#include <algorithm>
#include <functional>
#include <numeric>

using namespace gpprism;

auto gpprism::bipartition(const Graph & g) -> std::optional<BipartitionInfo>
{
    int n = g.size();
    std::vector<int> colour(n, -1);
    for (int root = 0 ; root < n ; ++root) {
        if (colour[root] != -1)
            continue;
        colour[root] = 0;
        std::vector<int> stack{ root };
        while (! stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            bool odd_cycle = false;
            g.neighbors(u).for_each([&] (int v) {
                if (colour[v] == -1) {
                    colour[v] = 1 - colour[u];
                    stack.push_back(v);
                }
                else if (colour[v] == colour[u])
                    odd_cycle = true;
            });
            if (odd_cycle)
                return std::nullopt;
        }
    }

    BipartitionInfo result{ VertexSet(n), VertexSet(n), VertexSet(n) };
    for (int v = 0 ; v < n ; ++v)
        (colour[v] == 0 ? result.side_a : result.side_b).insert(v);
    int size_a = result.side_a.size(), size_b = result.side_b.size();
    for (int v = 0 ; v < n ; ++v)
        if (g.degree(v) == (colour[v] == 0 ? size_b : size_a))
            result.full_degree.insert(v);
    return result;
}

auto gpprism::split_partition(const Graph & g) -> std::optional<SplitPartition>
{
    int n = g.size();
    if (n == 0)
        return SplitPartition{ VertexSet(0), VertexSet(0) };

    // Degree-sequence test: with degrees sorted non-increasingly and
    // m = max{ i : d_i >= i - 1 }, the graph is split iff the top m degrees
    // sum to m(m-1) plus the sum of the remaining degrees. When it holds,
    // the top m vertices form a clique and the rest an independent set.
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&] (int a, int b) { return g.degree(a) > g.degree(b); });

    int m = 0;
    for (int i = 1 ; i <= n ; ++i)
        if (g.degree(order[i - 1]) >= i - 1)
            m = i;

    long top = 0, rest = 0;
    for (int i = 0 ; i < n ; ++i)
        (i < m ? top : rest) += g.degree(order[i]);
    if (top != long(m) * (m - 1) + rest)
        return std::nullopt;

    VertexSet clique(n);
    for (int i = 0 ; i < m ; ++i)
        clique.insert(order[i]);

    // m is the largest possible clique side. Any other clique side of that
    // size swaps one clique vertex for one independent vertex.
    auto valid = [&] (const VertexSet & c) {
        return is_clique(g, c) && is_independent(g, c.complement());
    };

    VertexSet best = clique;
    clique.for_each([&] (int x) {
        clique.complement().for_each([&] (int y) {
            auto candidate = clique;
            candidate.erase(x);
            candidate.insert(y);
            if (candidate < best && valid(candidate))
                best = candidate;
        });
    });

    return SplitPartition{ best, best.complement() };
}

auto gpprism::block_decomposition(const Graph & g) -> BlockDecomposition
{
    int n = g.size();
    if (! is_connected(g))
        fail(ErrorKind::DisconnectedGraph, "block decomposition needs a connected graph");

    BlockDecomposition result{ {}, VertexSet(n), VertexSet(n) };
    if (n == 0)
        return result;

    std::vector<int> discovered(n, -1), low(n, 0);
    std::vector<Edge> edge_stack;
    int time = 0;

    std::function<void (int, int)> visit = [&] (int u, int parent) {
        discovered[u] = low[u] = time++;
        int children = 0;
        g.neighbors(u).for_each([&] (int v) {
            if (discovered[v] == -1) {
                ++children;
                edge_stack.emplace_back(u, v);
                visit(v, u);
                low[u] = std::min(low[u], low[v]);
                if (low[v] >= discovered[u]) {
                    if (parent != -1)
                        result.cut_vertices.insert(u);
                    VertexSet block(n);
                    while (true) {
                        auto [a, b] = edge_stack.back();
                        edge_stack.pop_back();
                        block.insert(a);
                        block.insert(b);
                        if (a == u && b == v)
                            break;
                    }
                    result.blocks.push_back(std::move(block));
                }
            }
            else if (v != parent && discovered[v] < discovered[u]) {
                edge_stack.emplace_back(u, v);
                low[u] = std::min(low[u], discovered[v]);
            }
        });
        if (parent == -1 && children >= 2)
            result.cut_vertices.insert(u);
    };
    visit(0, -1);

    if (n == 1)
        result.blocks.push_back(VertexSet::of(1, { 0 }));
    std::sort(result.blocks.begin(), result.blocks.end());

    for (int v = 0 ; v < n ; ++v)
        if (is_clique(g, g.neighbors(v)))
            result.simplicial_vertices.insert(v);

    return result;
}

auto gpprism::classify(const Graph & g) -> GraphClass
{
    GraphClass result;
    result.is_connected = is_connected(g);
    result.is_tree = result.is_connected && g.edge_count() == g.size() - 1;
    result.is_bipartite = bipartition(g).has_value();
    result.is_split = split_partition(g).has_value();

    if (result.is_connected) {
        auto blocks = block_decomposition(g);
        result.is_block_graph = std::all_of(blocks.blocks.begin(), blocks.blocks.end(),
                [&] (const VertexSet & b) { return is_clique(g, b); });
    }

    auto co = complement(g);
    auto parts = components(co);
    result.is_complete_multipartite = std::all_of(parts.begin(), parts.end(),
            [&] (const VertexSet & p) { return is_clique(co, p); });

    return result;
}
