#include <gpprism/families.hh>
#include <gpprism/error.hh>

#include <algorithm>
#include <array>

using namespace gpprism;

namespace
{
    auto expect_params(const FamilySpec & spec, std::size_t count) -> void
    {
        if (spec.params.size() != count)
            fail(ErrorKind::BadParameters, std::string(family_name(spec.family)) + " takes "
                    + std::to_string(count) + " parameters, got " + std::to_string(spec.params.size()));
    }

    auto expect_at_least(int value, int minimum, const std::string & what) -> void
    {
        if (value < minimum)
            fail(ErrorKind::BadParameters, what + " must be at least " + std::to_string(minimum)
                    + ", got " + std::to_string(value));
    }

    auto add_clique(GraphBuilder & builder, int first, int size) -> void
    {
        for (int a = first ; a < first + size ; ++a)
            for (int b = a + 1 ; b < first + size ; ++b)
                builder.add_edge(a, b);
    }

    auto range_set(int n, int first, int count) -> VertexSet
    {
        VertexSet result(n);
        for (int v = first ; v < first + count ; ++v)
            result.insert(v);
        return result;
    }

    const std::array<std::pair<std::string_view, Family>, 16> names{ {
        { "path", Family::Path },
        { "cycle", Family::Cycle },
        { "complete", Family::Complete },
        { "empty", Family::Empty },
        { "multipartite", Family::CompleteMultipartite },
        { "star", Family::Star },
        { "double-star", Family::DoubleStar },
        { "tree", Family::TreePruefer },
        { "grid", Family::Grid },
        { "hypercube", Family::Hypercube },
        { "petersen", Family::Petersen },
        { "fig1", Family::Fig1DoubleStar },
        { "fig2-g1", Family::Fig2G1 },
        { "fig2-g2", Family::Fig2G2 },
        { "gk", Family::GkChain },
        { "clique-path", Family::CliquePath }
    } };
}

auto gpprism::family_from_name(std::string_view name) -> Family
{
    for (auto & [n, f] : names)
        if (n == name)
            return f;
    fail(ErrorKind::BadParameters, "unknown family '" + std::string(name) + "'");
}

auto gpprism::family_name(Family family) -> std::string_view
{
    for (auto & [n, f] : names)
        if (f == family)
            return n;
    return "?";
}

auto gpprism::path_graph(int n) -> Graph
{
    expect_at_least(n, 1, "path order");
    GraphBuilder builder(n);
    for (int v = 0 ; v + 1 < n ; ++v)
        builder.add_edge(v, v + 1);
    return std::move(builder).build();
}

auto gpprism::cycle_graph(int n) -> Graph
{
    expect_at_least(n, 3, "cycle order");
    GraphBuilder builder(n);
    for (int v = 0 ; v < n ; ++v)
        builder.add_edge(v, (v + 1) % n);
    return std::move(builder).build();
}

auto gpprism::complete_graph(int n) -> Graph
{
    expect_at_least(n, 1, "complete graph order");
    GraphBuilder builder(n);
    add_clique(builder, 0, n);
    return std::move(builder).build();
}

auto gpprism::empty_graph(int n) -> Graph
{
    expect_at_least(n, 1, "empty graph order");
    return std::move(GraphBuilder(n)).build();
}

auto gpprism::complete_multipartite_graph(const std::vector<int> & parts) -> Graph
{
    if (parts.empty())
        fail(ErrorKind::BadParameters, "complete multipartite graph needs at least one part");
    std::vector<int> part_of;
    for (std::size_t p = 0 ; p < parts.size() ; ++p) {
        expect_at_least(parts[p], 1, "part size");
        part_of.insert(part_of.end(), parts[p], int(p));
    }

    int n = int(part_of.size());
    GraphBuilder builder(n);
    for (int a = 0 ; a < n ; ++a)
        for (int b = a + 1 ; b < n ; ++b)
            if (part_of[a] != part_of[b])
                builder.add_edge(a, b);
    return std::move(builder).build();
}

auto gpprism::gk_chain(int k) -> Graph
{
    return generate({ Family::GkChain, { k } }).graph;
}

auto gpprism::tree_from_pruefer(const std::vector<int> & sequence) -> Graph
{
    int n = int(sequence.size()) + 2;
    std::vector<int> degree(n, 1);
    for (int x : sequence) {
        if (x < 0 || x >= n)
            fail(ErrorKind::BadParameters, "Pruefer entry " + std::to_string(x) + " outside [0," + std::to_string(n) + ")");
        ++degree[x];
    }

    GraphBuilder builder(n);
    for (int x : sequence) {
        int leaf = int(std::find(degree.begin(), degree.end(), 1) - degree.begin());
        builder.add_edge(leaf, x);
        --degree[leaf];
        --degree[x];
    }
    int a = int(std::find(degree.begin(), degree.end(), 1) - degree.begin());
    int b = int(std::find(degree.begin() + a + 1, degree.end(), 1) - degree.begin());
    builder.add_edge(a, b);
    return std::move(builder).build();
}

auto gpprism::generate(const FamilySpec & spec, const Limits & limits) -> FamilyArtifact
{
    auto & p = spec.params;
    FamilyArtifact result;

    switch (spec.family) {
        case Family::Path:
            expect_params(spec, 1);
            result.graph = path_graph(p[0]);
            break;

        case Family::Cycle:
            expect_params(spec, 1);
            result.graph = cycle_graph(p[0]);
            break;

        case Family::Complete:
            expect_params(spec, 1);
            result.graph = complete_graph(p[0]);
            break;

        case Family::Empty:
            expect_params(spec, 1);
            result.graph = empty_graph(p[0]);
            break;

        case Family::CompleteMultipartite: {
            result.graph = complete_multipartite_graph(p);
            int first = 0;
            for (std::size_t i = 0 ; i < p.size() ; ++i) {
                result.named_sets["part" + std::to_string(i + 1)] = range_set(result.graph.size(), first, p[i]);
                first += p[i];
            }
            break;
        }

        case Family::Star: {
            expect_params(spec, 1);
            expect_at_least(p[0], 1, "star leaf count");
            int n = p[0] + 1;
            GraphBuilder builder(n, limits);
            for (int v = 1 ; v < n ; ++v)
                builder.add_edge(0, v);
            result.graph = std::move(builder).build();
            result.named_sets["center"] = VertexSet::of(n, { 0 });
            break;
        }

        case Family::DoubleStar: {
            expect_params(spec, 2);
            expect_at_least(p[0], 1, "leaf count");
            expect_at_least(p[1], 1, "leaf count");
            int n = 2 + p[0] + p[1];
            GraphBuilder builder(n, limits);
            builder.add_edge(0, 1);
            for (int v = 2 ; v < 2 + p[0] ; ++v)
                builder.add_edge(0, v);
            for (int v = 2 + p[0] ; v < n ; ++v)
                builder.add_edge(1, v);
            result.graph = std::move(builder).build();
            result.named_sets["centers"] = VertexSet::of(n, { 0, 1 });
            break;
        }

        case Family::TreePruefer:
            result.graph = tree_from_pruefer(p);
            break;

        case Family::Grid:
            expect_params(spec, 2);
            result.graph = cartesian_product(path_graph(p[0]), path_graph(p[1]), limits);
            break;

        case Family::Hypercube: {
            expect_params(spec, 1);
            expect_at_least(p[0], 1, "hypercube dimension");
            if (p[0] > 7)
                fail(ErrorKind::BadParameters, "hypercube dimension " + std::to_string(p[0]) + " exceeds construction limits");
            auto cube = complete_graph(2);
            for (int r = 1 ; r < p[0] ; ++r)
                cube = cartesian_product(cube, complete_graph(2), limits);
            result.graph = cube;
            break;
        }

        case Family::Petersen: {
            expect_params(spec, 0);
            GraphBuilder builder(10, limits);
            for (int i = 0 ; i < 5 ; ++i) {
                builder.add_edge(i, (i + 1) % 5);
                builder.add_edge(i, i + 5);
                builder.add_edge(5 + i, 5 + (i + 2) % 5);
            }
            std::vector<std::string> labels;
            for (int i = 1 ; i <= 5 ; ++i)
                labels.push_back("v" + std::to_string(i));
            for (int i = 1 ; i <= 5 ; ++i)
                labels.push_back("v" + std::to_string(i) + "̅");
            builder.set_labels(std::move(labels));
            result.graph = std::move(builder).build();
            result.named_sets["outer"] = range_set(10, 0, 5);
            result.named_sets["inner"] = range_set(10, 5, 5);
            break;
        }

        case Family::Fig1DoubleStar: {
            expect_params(spec, 0);
            GraphBuilder builder(6, limits);
            builder.add_edge(0, 1).add_edge(0, 2).add_edge(0, 3).add_edge(1, 4).add_edge(1, 5);
            builder.set_labels({ "u", "v", "u1", "u2", "v1", "v2" });
            result.graph = std::move(builder).build();
            result.named_sets["u"] = VertexSet::of(6, { 0 });
            result.named_sets["v"] = VertexSet::of(6, { 1 });
            result.named_sets["centers"] = VertexSet::of(6, { 0, 1 });
            break;
        }

        case Family::Fig2G1:
        case Family::Fig2G2: {
            expect_params(spec, 0);
            GraphBuilder builder(6, limits);
            builder.add_edge(0, 1).add_edge(0, 2).add_edge(1, 2);
            builder.add_edge(0, 3).add_edge(1, 4).add_edge(2, 5);
            if (spec.family == Family::Fig2G2)
                builder.add_edge(3, 1);
            builder.set_labels({ "u1", "u2", "u3", "v1", "v2", "v3" });
            result.graph = std::move(builder).build();
            result.named_sets["C"] = VertexSet::of(6, { 0, 1, 2 });
            result.named_sets["I"] = VertexSet::of(6, { 3, 4, 5 });
            break;
        }

        case Family::GkChain: {
            expect_params(spec, 1);
            int k = p[0];
            expect_at_least(k, 0, "chain length k");
            int n = 2 * k + 3;
            auto v_at = [] (int i) { return 2 * (i - 1); };
            auto u_at = [] (int i) { return 2 * (i - 1) + 1; };

            GraphBuilder builder(n, limits);
            std::vector<std::string> labels(n);
            for (int i = 1 ; i <= k + 2 ; ++i)
                labels[v_at(i)] = "v" + std::to_string(i);
            for (int i = 1 ; i <= k + 1 ; ++i) {
                labels[u_at(i)] = "u" + std::to_string(i);
                builder.add_edge(v_at(i), u_at(i)).add_edge(u_at(i), v_at(i + 1)).add_edge(v_at(i), v_at(i + 1));
            }
            builder.set_labels(std::move(labels));
            result.graph = std::move(builder).build();

            VertexSet simplicial(n), cut(n), x(n), y(n);
            simplicial.insert(v_at(1));
            simplicial.insert(v_at(k + 2));
            for (int i = 1 ; i <= k + 1 ; ++i)
                simplicial.insert(u_at(i));
            for (int i = 2 ; i <= k + 1 ; ++i) {
                cut.insert(v_at(i));
                ((i % 2 == 0) ? x : y).insert(v_at(i));
            }
            result.named_sets["E"] = simplicial;
            result.named_sets["A"] = cut;
            result.named_sets["X"] = x;
            result.named_sets["Y"] = y;
            break;
        }

        case Family::CliquePath: {
            if (p.size() < 2)
                fail(ErrorKind::BadParameters, "clique-path takes r, s and then r + s clique sizes");
            int r = p[0], s = p[1];
            expect_at_least(r, 1, "r");
            expect_at_least(s, 1, "s");
            expect_params(spec, std::size_t(2 + r + s));

            int n = 3;
            for (int i = 2 ; i < 2 + r + s ; ++i) {
                expect_at_least(p[i], 1, "clique size");
                n += p[i];
            }

            GraphBuilder builder(n, limits);
            builder.add_edge(0, 1).add_edge(1, 2);
            VertexSet u_side(n), w_side(n);
            int first = 3;
            for (int i = 0 ; i < r + s ; ++i) {
                int size = p[2 + i];
                int hub = i < r ? 0 : 2;
                add_clique(builder, first, size);
                for (int c = first ; c < first + size ; ++c) {
                    builder.add_edge(hub, c);
                    (i < r ? u_side : w_side).insert(c);
                }
                auto name = (i < r ? "u_clique" + std::to_string(i + 1) : "w_clique" + std::to_string(i - r + 1));
                result.named_sets[name] = range_set(n, first, size);
                first += size;
            }
            result.graph = std::move(builder).build();
            result.named_sets["u"] = VertexSet::of(n, { 0 });
            result.named_sets["v"] = VertexSet::of(n, { 1 });
            result.named_sets["w"] = VertexSet::of(n, { 2 });
            result.named_sets["u_side"] = u_side;
            result.named_sets["w_side"] = w_side;
            break;
        }
    }

    return result;
}
