#include <gpprism/metric.hh>
#include <gpprism/error.hh>

#include <algorithm>

using namespace gpprism;

DistanceMatrix::DistanceMatrix(int n, std::vector<int> d) :
    _n(n),
    _d(std::move(d))
{
}

auto gpprism::all_pairs_distances(const Graph & g) -> DistanceMatrix
{
    int n = g.size();
    std::vector<int> d(std::size_t(n) * n, DistanceMatrix::unreachable);

    // Level-synchronous BFS on bit rows: each level is the union of the
    // previous frontier's neighbourhoods minus everything already seen.
    for (int s = 0 ; s < n ; ++s) {
        VertexSet seen(n), frontier(n);
        seen.insert(s);
        frontier.insert(s);
        d[s * n + s] = 0;
        for (int level = 1 ; ! frontier.empty() ; ++level) {
            VertexSet next(n);
            frontier.for_each([&] (int v) { next |= g.neighbors(v); });
            next -= seen;
            next.for_each([&] (int v) { d[s * n + v] = level; });
            seen |= next;
            frontier = std::move(next);
        }
    }

    return DistanceMatrix(n, std::move(d));
}

auto gpprism::metric_summary(const Graph & g) -> MetricSummary
{
    return metric_summary(g, all_pairs_distances(g));
}

auto gpprism::metric_summary(const Graph & g, const DistanceMatrix & d) -> MetricSummary
{
    int n = g.size();
    if (n == 0)
        fail(ErrorKind::BadParameters, "metric summary of the empty graph");

    MetricSummary result;
    result.eccentricity.assign(n, 0);
    for (int u = 0 ; u < n ; ++u)
        for (int v = 0 ; v < n ; ++v) {
            if (! d.reachable(u, v))
                fail(ErrorKind::DisconnectedGraph, "vertices " + std::to_string(u) + " and "
                        + std::to_string(v) + " lie in different components");
            result.eccentricity[u] = std::max(result.eccentricity[u], d(u, v));
        }

    result.radius = *std::min_element(result.eccentricity.begin(), result.eccentricity.end());
    result.diameter = *std::max_element(result.eccentricity.begin(), result.eccentricity.end());
    result.center = VertexSet(n);
    for (int v = 0 ; v < n ; ++v)
        if (result.eccentricity[v] == result.radius)
            result.center.insert(v);
    return result;
}

auto gpprism::neighborhoods(const Graph & g, int v) -> Neighborhoods
{
    return neighborhoods(g, all_pairs_distances(g), v);
}

auto gpprism::neighborhoods(const Graph & g, const DistanceMatrix & d, int v) -> Neighborhoods
{
    int n = g.size();
    if (v < 0 || v >= n)
        fail(ErrorKind::IndexOutOfRange, "vertex " + std::to_string(v) + " outside [0," + std::to_string(n) + ")");

    Neighborhoods result{ g.neighbors(v), g.neighbors(v), VertexSet(n) };
    result.closed.insert(v);
    for (int u = 0 ; u < n ; ++u)
        if (d(u, v) == 2)
            result.second.insert(u);
    return result;
}

auto gpprism::components(const Graph & g) -> std::vector<VertexSet>
{
    int n = g.size();
    std::vector<VertexSet> result;
    VertexSet unseen = VertexSet::full(n);
    while (! unseen.empty()) {
        VertexSet component(n), frontier(n);
        frontier.insert(unseen.first());
        while (! frontier.empty()) {
            component |= frontier;
            VertexSet next(n);
            frontier.for_each([&] (int v) { next |= g.neighbors(v); });
            frontier = next - component;
        }
        unseen -= component;
        result.push_back(std::move(component));
    }
    return result;
}

auto gpprism::is_connected(const Graph & g) -> bool
{
    return components(g).size() <= 1;
}
