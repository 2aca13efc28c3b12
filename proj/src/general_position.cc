#include <gpprism/general_position.hh>
#include <gpprism/error.hh>

using namespace gpprism;

auto gpprism::interval(const Graph & g, const DistanceMatrix & d, int u, int v) -> VertexSet
{
    int n = g.size();
    if (u < 0 || u >= n || v < 0 || v >= n)
        fail(ErrorKind::IndexOutOfRange, "interval endpoint outside the graph");
    if (! d.reachable(u, v))
        fail(ErrorKind::UnreachablePair, std::to_string(u) + " and " + std::to_string(v) + " are in different components");

    VertexSet result(n);
    for (int w = 0 ; w < n ; ++w)
        if (d.reachable(u, w) && d(u, w) + d(w, v) == d(u, v))
            result.insert(w);
    return result;
}

namespace
{
    auto interior(const DistanceMatrix & d, int end1, int mid, int end2, std::optional<int> max_len) -> bool
    {
        if (! d.reachable(end1, end2))
            return false;
        if (max_len && d(end1, end2) > *max_len)
            return false;
        return d(end1, mid) + d(mid, end2) == d(end1, end2);
    }
}

auto gpprism::is_bad_triple(const DistanceMatrix & d, int a, int b, int c, std::optional<int> max_len) -> bool
{
    return interior(d, a, b, c, max_len) || interior(d, b, a, c, max_len) || interior(d, a, c, b, max_len);
}

auto gpprism::bad_triples(const Graph & g, const DistanceMatrix & d, std::optional<int> max_len) -> std::vector<Triple>
{
    int n = g.size();
    std::vector<Triple> result;
    for (int a = 0 ; a < n ; ++a)
        for (int b = a + 1 ; b < n ; ++b)
            for (int c = b + 1 ; c < n ; ++c)
                if (is_bad_triple(d, a, b, c, max_len))
                    result.push_back({ a, b, c });
    return result;
}

auto gpprism::bad_triples(const Graph & g, std::optional<int> max_len) -> std::vector<Triple>
{
    return bad_triples(g, all_pairs_distances(g), max_len);
}

namespace
{
    auto triple_free(const DistanceMatrix & d, const VertexSet & s, std::optional<int> max_len) -> bool
    {
        auto m = s.members();
        for (std::size_t i = 0 ; i < m.size() ; ++i)
            for (std::size_t j = i + 1 ; j < m.size() ; ++j)
                for (std::size_t k = j + 1 ; k < m.size() ; ++k)
                    if (is_bad_triple(d, m[i], m[j], m[k], max_len))
                        return false;
        return true;
    }

    auto require_connected(const DistanceMatrix & d) -> void
    {
        for (int u = 0 ; u < d.size() ; ++u)
            if (! d.reachable(0, u))
                fail(ErrorKind::DisconnectedGraph, "the clique-partition characterization needs a connected graph");
    }

    // Components of G[S]; fills reason and returns nullopt if one is not a clique.
    auto clique_components(const Graph & g, const VertexSet & s, std::string & reason) -> std::optional<std::vector<VertexSet>>
    {
        std::vector<VertexSet> parts;
        auto rest = s;
        while (! rest.empty()) {
            VertexSet part(g.size()), frontier(g.size());
            frontier.insert(rest.first());
            while (! frontier.empty()) {
                part |= frontier;
                VertexSet next(g.size());
                frontier.for_each([&] (int v) { next |= g.neighbors(v); });
                frontier = (next & s) - part;
            }
            if (! is_clique(g, part)) {
                reason = "component " + to_string(part) + " of the induced subgraph is not complete";
                return std::nullopt;
            }
            rest -= part;
            parts.push_back(std::move(part));
        }
        return parts;
    }

    auto distance_table(const DistanceMatrix & d, const std::vector<VertexSet> & parts) -> std::vector<std::vector<int>>
    {
        std::size_t p = parts.size();
        std::vector<std::vector<int>> result(p, std::vector<int>(p, 0));
        for (std::size_t i = 0 ; i < p ; ++i)
            for (std::size_t j = i + 1 ; j < p ; ++j) {
                int common = -1;
                parts[i].for_each([&] (int x) {
                    parts[j].for_each([&] (int y) {
                        if (common == -1)
                            common = d(x, y);
                        else if (common != d(x, y))
                            common = PartitionCertificate::mixed;
                    });
                });
                result[i][j] = result[j][i] = common;
            }
        return result;
    }
}

auto gpprism::is_general_position(const Graph &, const DistanceMatrix & d, const VertexSet & s) -> bool
{
    return triple_free(d, s, std::nullopt);
}

auto gpprism::is_3gp(const Graph &, const DistanceMatrix & d, const VertexSet & s) -> bool
{
    return triple_free(d, s, 3);
}

auto gpprism::is_general_position_via_characterization(const Graph & g, const DistanceMatrix & d, const VertexSet & s)
    -> CharacterizationResult
{
    require_connected(d);

    CharacterizationResult result;
    auto parts = clique_components(g, s, result.reason);
    if (! parts)
        return result;

    auto table = distance_table(d, *parts);
    result.certificate = PartitionCertificate{ *parts, table };

    std::size_t p = parts->size();
    for (std::size_t i = 0 ; i < p ; ++i)
        for (std::size_t j = i + 1 ; j < p ; ++j)
            if (table[i][j] == PartitionCertificate::mixed) {
                result.reason = "distance between " + to_string((*parts)[i]) + " and " + to_string((*parts)[j]) + " is not constant";
                return result;
            }

    for (std::size_t i = 0 ; i < p ; ++i)
        for (std::size_t j = 0 ; j < p ; ++j)
            for (std::size_t k = i + 1 ; k < p ; ++k)
                if (j != i && j != k && table[i][k] == table[i][j] + table[j][k]) {
                    result.reason = "clique " + to_string((*parts)[j]) + " lies between " + to_string((*parts)[i])
                        + " and " + to_string((*parts)[k]);
                    return result;
                }

    result.accepted = true;
    return result;
}

auto gpprism::is_3gp_via_characterization(const Graph & g, const DistanceMatrix & d, const VertexSet & s)
    -> CharacterizationResult
{
    require_connected(d);

    CharacterizationResult result;
    auto parts = clique_components(g, s, result.reason);
    if (! parts)
        return result;

    auto table = distance_table(d, *parts);
    result.certificate = PartitionCertificate{ *parts, table };

    std::size_t p = parts->size();
    for (std::size_t i = 0 ; i < p ; ++i)
        for (std::size_t j = i + 1 ; j < p ; ++j) {
            bool some_two = false, all_two = true;
            (*parts)[i].for_each([&] (int x) {
                (*parts)[j].for_each([&] (int y) {
                    if (d(x, y) == 2)
                        some_two = true;
                    else
                        all_two = false;
                });
            });
            if (some_two && ! all_two) {
                result.reason = "cliques " + to_string((*parts)[i]) + " and " + to_string((*parts)[j])
                    + " mix distance 2 with other distances";
                return result;
            }
        }

    result.accepted = true;
    return result;
}
