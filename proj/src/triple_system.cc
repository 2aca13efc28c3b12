#include <gpprism/triple_system.hh>
#include <gpprism/error.hh>

#include <bit>

using namespace gpprism;

TripleSystem::TripleSystem(int n, std::vector<Triple> triples) :
    _n(n),
    _triples(std::move(triples)),
    _completing(std::size_t(n) * n, 0),
    _degree(n, 0)
{
    if (n > 64)
        fail(ErrorKind::GraphTooLarge, "triple systems hold at most 64 vertices, got " + std::to_string(n));

    for (auto & [a, b, c] : _triples) {
        _completing[a * n + b] |= std::uint64_t{1} << c;
        _completing[b * n + a] |= std::uint64_t{1} << c;
        _completing[a * n + c] |= std::uint64_t{1} << b;
        _completing[c * n + a] |= std::uint64_t{1} << b;
        _completing[b * n + c] |= std::uint64_t{1} << a;
        _completing[c * n + b] |= std::uint64_t{1} << a;
        ++_degree[a];
        ++_degree[b];
        ++_degree[c];
    }
}

auto TripleSystem::geodesic(const Graph & g, const DistanceMatrix & d, std::optional<int> max_len) -> TripleSystem
{
    if (g.size() > 64)
        fail(ErrorKind::GraphTooLarge, "triple systems hold at most 64 vertices, got " + std::to_string(g.size()));
    return TripleSystem(g.size(), bad_triples(g, d, max_len));
}

auto TripleSystem::induced_paths(const Graph & g) -> TripleSystem
{
    int n = g.size();
    if (n > 64)
        fail(ErrorKind::GraphTooLarge, "triple systems hold at most 64 vertices, got " + std::to_string(n));

    std::vector<Triple> triples;
    for (int a = 0 ; a < n ; ++a)
        for (int b = a + 1 ; b < n ; ++b)
            for (int c = b + 1 ; c < n ; ++c)
                if (int(g.adjacent(a, b)) + int(g.adjacent(a, c)) + int(g.adjacent(b, c)) == 2)
                    triples.push_back({ a, b, c });
    return TripleSystem(n, std::move(triples));
}

auto TripleSystem::is_free(std::uint64_t set) const -> bool
{
    for (auto bits = set ; bits ; bits &= bits - 1) {
        int a = std::countr_zero(bits);
        for (auto rest = bits & (bits - 1) ; rest ; rest &= rest - 1) {
            int b = std::countr_zero(rest);
            if (completing(a, b) & set)
                return false;
        }
    }
    return true;
}
