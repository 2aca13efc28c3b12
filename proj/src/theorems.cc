#include <gpprism/theorems.hh>
#include <gpprism/error.hh>
#include <gpprism/general_position.hh>
#include <gpprism/metric.hh>
#include <gpprism/structure.hh>

#include <algorithm>
#include <climits>

using namespace gpprism;

auto Prediction::exact(int value, std::string source, std::optional<int> witness) -> Prediction
{
    return Prediction{ PredictionKind::Exact, value, value, std::move(source), witness };
}

auto Prediction::range(int lo, int hi, std::string source) -> Prediction
{
    if (lo > hi)
        fail(ErrorKind::BadParameters, "empty range [" + std::to_string(lo) + "," + std::to_string(hi) + "]");
    return Prediction{ PredictionKind::Range, lo, hi, std::move(source), std::nullopt };
}

auto Prediction::admits(int exact_value) const -> bool
{
    return kind == PredictionKind::Undetermined || (lo <= exact_value && exact_value <= hi);
}

auto Prediction::to_string() const -> std::string
{
    switch (kind) {
        case PredictionKind::Exact: return "=" + std::to_string(lo);
        case PredictionKind::Range: return "[" + std::to_string(lo) + "," + std::to_string(hi) + "]";
        case PredictionKind::Undetermined: break;
    }
    return "?";
}

auto gpprism::central_vertex_conditions_hold(const Graph & g, int v) -> bool
{
    auto d = all_pairs_distances(g);
    auto hood = neighborhoods(g, d, v);
    for (int u = 0 ; u < g.size() ; ++u)
        if (! d.reachable(u, v) || d(u, v) > 2)
            return false;
    if (hood.second.empty())
        return false;

    auto co = complement(g);
    if (! is_3gp(co, all_pairs_distances(co), hood.open) || ! is_3gp(g, d, hood.second))
        return false;

    bool every_neighbor_misses = true;
    hood.open.for_each([&] (int x) {
        if (hood.second.is_subset_of(g.neighbors(x)))
            every_neighbor_misses = false;
    });
    return every_neighbor_misses;
}

auto gpprism::predict_by_central_vertex(const Graph & g, const SolverOptions & options) -> Prediction
{
    int n = g.size();
    if (n < 2 || ! is_connected(g) || ! is_connected(complement(g)))
        fail(ErrorKind::NotApplicable, "needs n >= 2 with the graph and its complement connected");

    auto metric = metric_summary(g);
    if (metric.radius == 2) {
        std::optional<int> witness;
        metric.center.for_each([&] (int v) {
            if (! witness && central_vertex_conditions_hold(g, v))
                witness = v;
        });
        if (witness)
            return Prediction::exact(n + 1, source::central_vertex, witness);
    }

    return Prediction::range(prism_bounds(g, options).lower, n, source::central_vertex);
}

auto gpprism::has_central_vertex_structure(const Graph & g, const VertexSet & prism_set) -> bool
{
    int n = g.size();
    auto prism = complementary_prism(g);
    if (prism_set.universe() != 2 * n || prism_set.size() != n + 1)
        fail(ErrorKind::NotAGpSet, "expected a set of " + std::to_string(n + 1) + " prism vertices, got "
                + to_string(prism_set));
    if (! is_general_position(prism, all_pairs_distances(prism), prism_set))
        fail(ErrorKind::NotAGpSet, to_string(prism_set) + " is not in general position in the prism");

    if (! is_connected(g))
        return false;

    auto d = all_pairs_distances(g);
    auto metric = metric_summary(g, d);
    if (metric.radius != 2)
        return false;

    bool found = false;
    metric.center.for_each([&] (int v) {
        auto hood = neighborhoods(g, d, v);
        VertexSet expected(2 * n);
        expected.insert(v);
        expected.insert(partner(n, v));
        hood.second.for_each([&] (int y) { expected.insert(y); });
        hood.open.for_each([&] (int x) { expected.insert(partner(n, x)); });
        if (expected == prism_set)
            found = true;
    });
    return found;
}

auto gpprism::predict_bipartite(const Graph & g) -> Prediction
{
    int n = g.size();
    if (n < 2 || ! is_connected(g) || ! bipartition(g))
        fail(ErrorKind::NotApplicable, "needs a connected bipartite graph on at least 2 vertices");

    auto metric = metric_summary(g);
    if (metric.radius == 2 && is_independent(g, metric.center))
        return Prediction::exact(n + 1, source::bipartite);
    return Prediction::exact(n, source::bipartite);
}

auto gpprism::predict_tree(const Graph & t) -> Prediction
{
    int n = t.size();
    if (n < 2 || ! is_connected(t) || t.edge_count() != n - 1)
        fail(ErrorKind::NotATree, "needs a tree on at least 2 vertices");

    return Prediction::exact(metric_summary(t).diameter == 4 ? n + 1 : n, source::tree);
}

auto gpprism::predict_grid(int rows, int cols) -> Prediction
{
    if (rows < 2 || cols < 2)
        fail(ErrorKind::BadParameters, "grid sides must be at least 2");
    return Prediction::exact(rows == 3 && cols == 3 ? 10 : rows * cols, source::grid);
}

auto gpprism::predict_hypercube(int r) -> Prediction
{
    if (r < 2 || r > 30)
        fail(ErrorKind::BadParameters, "hypercube dimension must lie in [2,30]");
    return Prediction::exact(1 << r, source::hypercube);
}

auto SplitPrediction::obligation_holds(int n, int exact_value) const -> bool
{
    return exact_value != n || complement_disconnected || clique_degrees_at_least_clique_size;
}

auto gpprism::predict_split(const Graph & g) -> SplitPrediction
{
    auto partition = split_partition(g);
    if (! partition)
        fail(ErrorKind::NotSplit, "no clique/independent-set partition exists");

    int n = g.size();
    int c = partition->clique.size();

    bool clique_high = true, clique_at_least_c = true, independent_low = true;
    partition->clique.for_each([&] (int x) {
        clique_high = clique_high && g.degree(x) >= c + 1;
        clique_at_least_c = clique_at_least_c && g.degree(x) >= c;
    });
    partition->independent.for_each([&] (int y) {
        independent_low = independent_low && g.degree(y) <= c - 2;
    });

    SplitPrediction result;
    result.degree_condition = clique_high && independent_low;
    result.complement_disconnected = ! is_connected(complement(g));
    result.clique_degrees_at_least_clique_size = clique_at_least_c;
    result.prediction = result.degree_condition
        ? Prediction::exact(n, source::split)
        : Prediction::range(n, n + 1, source::split);
    return result;
}

auto gpprism::predict_block_graph(const Graph & g, const SolverOptions & options) -> Prediction
{
    int n = g.size();
    if (! is_connected(g) || n == 0)
        fail(ErrorKind::NotABlockGraph, "block graphs are connected");
    auto blocks = block_decomposition(g);
    for (auto & b : blocks.blocks)
        if (! is_clique(g, b))
            fail(ErrorKind::NotABlockGraph, "block " + to_string(b) + " is not complete");
    if (n < 2)
        fail(ErrorKind::NotApplicable, "needs at least 2 vertices");

    auto metric = metric_summary(g);
    if (metric.radius == 2) {
        std::optional<int> witness;
        metric.center.for_each([&] (int v) {
            auto & hood = g.neighbors(v);
            if (! witness && (is_clique(g, hood) || is_independent(g, hood))
                    && (hood & blocks.cut_vertices).size() >= 2)
                witness = v;
        });
        if (witness)
            return Prediction::exact(n + 1, source::block, witness);
    }

    return Prediction::range(prism_bounds(g, options).lower, n, source::block);
}

auto gpprism::prism_gp_equals_max_gp3(const Graph & g, const SolverOptions & options) -> bool
{
    if (! is_connected(g))
        fail(ErrorKind::DisconnectedGraph, "needs a connected graph");

    SolverOptions single = options;
    single.collect_all = false;
    int prism_gp = max_gp(complementary_prism(g), single).value;
    int best_gp3 = std::max(max_gp3(g, single).value, max_gp3(complement(g), single).value);
    return prism_gp == best_gp3;
}

auto gpprism::predict_gk_chain(int k) -> Prediction
{
    if (k < 5)
        fail(ErrorKind::BadParameters, "the chain formula is established for k >= 5 only");
    return Prediction::exact(2 * k + 3 - k / 2, source::gk_chain);
}

auto gpprism::applicable_predictions(const Graph & g, const SolverOptions & options) -> std::vector<Prediction>
{
    std::vector<Prediction> result;
    auto bounds = prism_bounds(g, options);
    result.push_back(Prediction::range(bounds.lower, bounds.upper, source::bounds));

    auto attempt = [&] (auto && make) {
        try {
            result.push_back(make());
        }
        catch (const Error & e) {
            switch (e.kind()) {
                case ErrorKind::NotApplicable:
                case ErrorKind::NotATree:
                case ErrorKind::NotSplit:
                case ErrorKind::NotABlockGraph:
                    break;
                default:
                    throw;
            }
        }
    };

    attempt([&] { return predict_by_central_vertex(g, options); });
    attempt([&] { return predict_bipartite(g); });
    attempt([&] { return predict_tree(g); });
    attempt([&] { return predict_split(g).prediction; });
    attempt([&] { return predict_block_graph(g, options); });
    return result;
}

auto gpprism::mutually_consistent(const std::vector<Prediction> & predictions) -> bool
{
    int lo = INT_MIN, hi = INT_MAX;
    for (auto & p : predictions)
        if (p.kind != PredictionKind::Undetermined) {
            lo = std::max(lo, p.lo);
            hi = std::min(hi, p.hi);
        }
    return lo <= hi;
}
