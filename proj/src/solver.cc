#include <gpprism/solver.hh>
#include <gpprism/error.hh>
#include <gpprism/metric.hh>

#include <algorithm>
#include <bit>
#include <numeric>

using namespace gpprism;

namespace
{
    using Mask = std::uint64_t;

    constexpr auto bit(int v) -> Mask { return Mask{1} << v; }

    auto check_solver_size(int n, const Limits & limits) -> void
    {
        if (limits.solver_vertices > 64)
            fail(ErrorKind::BadParameters, "solver vertex limit cannot exceed 64");
        if (n > limits.solver_vertices)
            fail(ErrorKind::GraphTooLarge, std::to_string(n) + " vertices exceeds solver limit "
                    + std::to_string(limits.solver_vertices));
    }

    class Clocked
    {
        private:
            const SolverOptions & _options;
            SearchStats & _stats;

        public:
            Clocked(const SolverOptions & options, SearchStats & stats) :
                _options(options),
                _stats(stats)
            {
            }

            auto tick() -> void
            {
                if ((++_stats.nodes & 0xfff) == 0 && _options.deadline && Clock::now() > *_options.deadline)
                    fail(ErrorKind::Timeout, "search exceeded its deadline after "
                            + std::to_string(_stats.nodes) + " nodes");
            }
    };

    // The triple system relabelled so that bit i is the i-th vertex of a
    // branching order; the lowest candidate bit is always the next to branch on.
    struct OrderedSystem
    {
        int n;
        std::vector<int> vertex_at;
        std::vector<Mask> completing;

        OrderedSystem(const TripleSystem & system, std::vector<int> order) :
            n(system.size()),
            vertex_at(std::move(order)),
            completing(std::size_t(n) * n)
        {
            std::vector<int> position(n);
            for (int i = 0 ; i < n ; ++i)
                position[vertex_at[i]] = i;
            for (int i = 0 ; i < n ; ++i)
                for (int j = 0 ; j < n ; ++j)
                    completing[i * n + j] = remap(system.completing(vertex_at[i], vertex_at[j]), position);
        }

        static auto remap(Mask m, const std::vector<int> & to) -> Mask
        {
            Mask result = 0;
            for ( ; m ; m &= m - 1)
                result |= bit(to[std::countr_zero(m)]);
            return result;
        }

        auto to_original(Mask m) const -> Mask
        {
            return remap(m, vertex_at);
        }

        auto admissible(Mask chosen, int v, Mask candidates) const -> Mask
        {
            for (Mask bits = chosen ; bits ; bits &= bits - 1)
                candidates &= ~completing[v * n + std::countr_zero(bits)];
            return candidates;
        }
    };

    class TripleFreeSearch
    {
        private:
            const OrderedSystem & _system;
            Clocked _clock;
            std::size_t _optima_cap;

            enum class Mode { Maximise, Collect, FindFirst } _mode = Mode::Maximise;
            int _best = 0;
            int _target = 0;
            Mask _best_set = 0;
            bool _found = false;
            std::vector<Mask> _optima;

            auto leaf(Mask chosen) -> void
            {
                int size = std::popcount(chosen);
                switch (_mode) {
                    case Mode::FindFirst:
                        if (size >= _target) {
                            _found = true;
                            _best_set = chosen;
                        }
                        break;

                    case Mode::Maximise:
                        if (size > _best) {
                            _best = size;
                            _best_set = chosen;
                        }
                        break;

                    case Mode::Collect:
                        if (size > _best) {
                            _best = size;
                            _optima.clear();
                        }
                        if (size == _best) {
                            _optima.push_back(chosen);
                            if (_optima.size() > _optima_cap)
                                fail(ErrorKind::TooManyOptima, "more than " + std::to_string(_optima_cap)
                                        + " maximum sets of size " + std::to_string(size));
                        }
                        break;
                }
            }

            auto branch(Mask chosen, Mask candidates) -> void
            {
                _clock.tick();
                if (! candidates) {
                    leaf(chosen);
                    return;
                }

                int bound = std::popcount(chosen) + std::popcount(candidates);
                switch (_mode) {
                    case Mode::FindFirst: if (bound < _target) return; break;
                    case Mode::Maximise:  if (bound <= _best) return; break;
                    case Mode::Collect:   if (bound < _best) return; break;
                }

                int v = std::countr_zero(candidates);
                Mask rest = candidates & (candidates - 1);
                branch(chosen | bit(v), _system.admissible(chosen, v, rest));
                if (_found)
                    return;
                branch(chosen, rest);
            }

        public:
            TripleFreeSearch(const OrderedSystem & system, const SolverOptions & options, SearchStats & stats) :
                _system(system),
                _clock(options, stats),
                _optima_cap(options.limits.optima_cap)
            {
            }

            auto maximise(int incumbent, Mask incumbent_set, bool collect) -> void
            {
                _mode = collect ? Mode::Collect : Mode::Maximise;
                _best = incumbent;
                _best_set = incumbent_set;
                branch(0, _system.n == 64 ? ~Mask{0} : bit(_system.n) - 1);
            }

            auto find_first(int target) -> Mask
            {
                _mode = Mode::FindFirst;
                _target = target;
                _found = false;
                branch(0, _system.n == 64 ? ~Mask{0} : bit(_system.n) - 1);
                return _best_set;
            }

            auto best() const -> int { return _best; }
            auto best_set() const -> Mask { return _best_set; }
            auto optima() const -> const std::vector<Mask> & { return _optima; }
    };

    auto elapsed_millis(Clock::time_point start) -> double
    {
        return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
    }
}

auto gpprism::maximum_triple_free_set(const TripleSystem & system, const SolverOptions & options) -> GpResult
{
    auto start = Clock::now();
    int n = system.size();
    check_solver_size(n, options.limits);

    GpResult result;
    result.witness = VertexSet(n);
    if (n == 0) {
        if (options.collect_all)
            result.optima = std::vector<VertexSet>{ VertexSet(0) };
        return result;
    }

    std::vector<int> by_degree(n);
    std::iota(by_degree.begin(), by_degree.end(), 0);
    std::stable_sort(by_degree.begin(), by_degree.end(),
            [&] (int a, int b) { return system.degree(a) > system.degree(b); });

    // Greedy incumbent: least constrained vertices first.
    Mask greedy = 0;
    for (auto it = by_degree.rbegin() ; it != by_degree.rend() ; ++it)
        if (system.is_free(greedy | bit(*it)))
            greedy |= bit(*it);

    OrderedSystem ordered(system, by_degree);
    std::vector<int> position(n);
    for (int i = 0 ; i < n ; ++i)
        position[by_degree[i]] = i;

    TripleFreeSearch search(ordered, options, result.stats);
    search.maximise(std::popcount(greedy), OrderedSystem::remap(greedy, position), options.collect_all);
    result.value = search.best();

    if (options.collect_all) {
        std::vector<VertexSet> optima;
        for (auto m : search.optima())
            optima.push_back(VertexSet::from_mask(n, ordered.to_original(m)));
        std::sort(optima.begin(), optima.end());
        result.witness = optima.front();
        result.optima = std::move(optima);
    }
    else {
        // In index order, include-first DFS meets sets of equal size in
        // lexicographic order, so the first one of optimal size is the
        // smallest.
        std::vector<int> identity(n);
        std::iota(identity.begin(), identity.end(), 0);
        OrderedSystem in_index_order(system, identity);
        TripleFreeSearch canonical(in_index_order, options, result.stats);
        result.witness = VertexSet::from_mask(n, canonical.find_first(result.value));
    }

    result.stats.millis = elapsed_millis(start);
    return result;
}

auto gpprism::max_gp(const Graph & g, const SolverOptions & options) -> GpResult
{
    check_solver_size(g.size(), options.limits);
    auto system = TripleSystem::geodesic(g, all_pairs_distances(g), std::nullopt);
    return maximum_triple_free_set(system, options);
}

auto gpprism::max_gp3(const Graph & g, const SolverOptions & options) -> GpResult
{
    check_solver_size(g.size(), options.limits);
    auto system = TripleSystem::geodesic(g, all_pairs_distances(g), 3);
    return maximum_triple_free_set(system, options);
}

auto gpprism::max_gp3(const Graph & g, bool collect_all, SolverOptions options) -> GpResult
{
    options.collect_all = collect_all;
    return max_gp3(g, options);
}

namespace
{
    // Include-first DFS in index order with a greedy colouring bound. Only
    // strict improvements are recorded, so the first clique of optimal size
    // found is the lexicographically smallest.
    class CliqueSearch
    {
        private:
            std::vector<Mask> _adjacent;
            Clocked _clock;
            int _best = 0;
            Mask _best_set = 0;

            auto colour_bound(Mask candidates) const -> int
            {
                int colours = 0;
                while (candidates) {
                    ++colours;
                    Mask uncoloured = candidates;
                    while (uncoloured) {
                        int v = std::countr_zero(uncoloured);
                        candidates &= ~bit(v);
                        uncoloured &= ~(bit(v) | _adjacent[v]);
                    }
                }
                return colours;
            }

            auto branch(Mask chosen, Mask candidates) -> void
            {
                _clock.tick();
                if (! candidates) {
                    if (std::popcount(chosen) > _best) {
                        _best = std::popcount(chosen);
                        _best_set = chosen;
                    }
                    return;
                }
                if (std::popcount(chosen) + colour_bound(candidates) <= _best)
                    return;

                int v = std::countr_zero(candidates);
                branch(chosen | bit(v), candidates & _adjacent[v]);
                branch(chosen, candidates & ~bit(v));
            }

        public:
            CliqueSearch(const Graph & g, const SolverOptions & options, SearchStats & stats) :
                _adjacent(g.size()),
                _clock(options, stats)
            {
                for (int v = 0 ; v < g.size() ; ++v)
                    _adjacent[v] = g.neighbors(v).mask();
            }

            auto run(int n) -> std::pair<int, Mask>
            {
                branch(0, n == 64 ? ~Mask{0} : bit(n) - 1);
                return { _best, _best_set };
            }
    };
}

auto gpprism::max_clique(const Graph & g, const SolverOptions & options) -> GpResult
{
    auto start = Clock::now();
    check_solver_size(g.size(), options.limits);

    GpResult result;
    CliqueSearch search(g, options, result.stats);
    auto [value, set] = search.run(g.size());
    result.value = value;
    result.witness = VertexSet::from_mask(g.size(), set);
    result.stats.millis = elapsed_millis(start);
    return result;
}

auto gpprism::independence_number(const Graph & g, const SolverOptions & options) -> int
{
    return max_clique(complement(g), options).value;
}

auto gpprism::max_cluster_set(const Graph & g, const SolverOptions & options) -> GpResult
{
    check_solver_size(g.size(), options.limits);
    return maximum_triple_free_set(TripleSystem::induced_paths(g), options);
}

auto gpprism::gp3bar(const Graph & g, const SolverOptions & options) -> int
{
    auto sets = max_gp3(g, true, options);
    auto co = complement(g);

    SolverOptions single = options;
    single.collect_all = false;

    int result = 0;
    for (auto & s : *sets.optima) {
        auto remainder = induced_subgraph(co, s.complement());
        result = std::max(result, max_gp3(remainder, single).value);
    }
    return result;
}

auto gpprism::invariant_bundle(const Graph & g, const SolverOptions & options) -> InvariantBundle
{
    SolverOptions single = options;
    single.collect_all = false;

    InvariantBundle result;
    result.omega = max_clique(g, single).value;
    result.alpha = independence_number(g, single);
    result.eta = max_cluster_set(g, single).value;
    result.gp3 = max_gp3(g, single).value;
    result.gp3bar = gp3bar(g, single);
    return result;
}

auto gpprism::prism_bounds(const Graph & g, const SolverOptions & options) -> PrismBounds
{
    check_solver_size(g.size(), options.limits);

    SolverOptions single = options;
    single.collect_all = false;

    PrismBounds result;
    int n = g.size();
    result.upper = is_connected(g) && n > 0 ? n + 1 : n;

    auto co = complement(g);
    result.lower = std::max(max_gp3(g, single).value + gp3bar(g, single),
            max_gp3(co, single).value + gp3bar(co, single));
    return result;
}
