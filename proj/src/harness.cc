#include <gpprism/harness.hh>
#include <gpprism/error.hh>
#include <gpprism/graph_io.hh>
#include <gpprism/sampling.hh>
#include <gpprism/structure.hh>

#include <algorithm>
#include <atomic>
#include <charconv>
#include <cmath>
#include <functional>
#include <ostream>
#include <sstream>
#include <thread>

using namespace gpprism;

auto gpprism::to_string(Verdict v) -> std::string_view
{
    switch (v) {
        case Verdict::Confirmed:      return "CONFIRMED";
        case Verdict::BoundRespected: return "BOUND_RESPECTED";
        case Verdict::Discrepancy:    return "DISCREPANCY";
        case Verdict::Timeout:        return "TIMEOUT";
        case Verdict::Error:          return "ERROR";
    }
    return "ERROR";
}

auto gpprism::judge(const Prediction & p, int exact_value) -> Verdict
{
    // these ranges take their lower end from the thm41 bound, which is judged on its own
    bool upper_only = p.kind == PredictionKind::Range
        && (p.source == source::central_vertex || p.source == source::block);
    if (upper_only ? exact_value > p.hi : ! p.admits(exact_value))
        return Verdict::Discrepancy;
    return p.kind == PredictionKind::Exact ? Verdict::Confirmed : Verdict::BoundRespected;
}

auto gpprism::claimed_prism_gp(const FamilySpec & spec) -> std::optional<int>
{
    auto & p = spec.params;
    switch (spec.family) {
        case Family::Cycle:
            if (p.size() == 1 && p[0] == 5)
                return 6;
            break;
        case Family::Complete:
            if (p.size() == 1 && p[0] >= 1)
                return p[0];
            break;
        case Family::Empty:
            if (p.size() == 1 && p[0] == 2)
                return 2;
            break;
        case Family::Fig1DoubleStar: return 6;
        case Family::Fig2G1:         return 6;
        case Family::Fig2G2:         return 7;
        case Family::GkChain:
            if (p.size() == 1 && p[0] >= 5)
                return predict_gk_chain(p[0]).value();
            break;
        case Family::Grid:
            if (p.size() == 2 && p[0] >= 2 && p[1] >= 2)
                return predict_grid(p[0], p[1]).value();
            break;
        case Family::Hypercube:
            if (p.size() == 1 && p[0] >= 2)
                return predict_hypercube(p[0]).value();
            break;
        case Family::CliquePath:
            return generate(spec).graph.size() + 1;
        default:
            break;
    }
    return std::nullopt;
}

namespace
{
    auto yes_no(bool b) -> std::string
    {
        return b ? "yes" : "no";
    }

    template <typename F_>
    auto note_on(std::vector<std::string> & notes, std::string_view what, ErrorKind kind, F_ && f) -> bool
    {
        try {
            f();
            return true;
        }
        catch (const Error & e) {
            if (e.kind() != kind)
                throw;
            notes.push_back(std::string(what) + ": " + e.what());
            return false;
        }
    }

    auto family_prediction(const FamilySpec & spec) -> std::optional<Prediction>
    {
        auto & p = spec.params;
        if (spec.family == Family::Grid && p.size() == 2 && p[0] >= 2 && p[1] >= 2)
            return predict_grid(p[0], p[1]);
        if (spec.family == Family::Hypercube && p.size() == 1 && p[0] >= 2)
            return predict_hypercube(p[0]);
        if (spec.family == Family::GkChain && p.size() == 1 && p[0] >= 5)
            return predict_gk_chain(p[0]);
        return std::nullopt;
    }
}

auto gpprism::compute_record(const Graph & g, const std::optional<FamilySpec> & family, const SolverOptions & options)
    -> ComputeRecord
{
    ComputeRecord rec;
    rec.n = g.size();
    rec.edges = g.edge_count();
    rec.graph6 = write_graph6(g);

    auto co = complement(g);
    rec.connected = rec.n > 0 && is_connected(g);
    rec.complement_connected = rec.n > 0 && is_connected(co);
    if (rec.connected)
        rec.metric = metric_summary(g);

    rec.invariants.omega = max_clique(g, options).value;
    rec.invariants.alpha = independence_number(g, options);
    rec.invariants.eta = max_cluster_set(g, options).value;
    rec.invariants.gp3 = max_gp3(g, options).value;
    rec.complement_gp3 = max_gp3(co, options).value;
    rec.invariants.gp3bar = -1;
    note_on(rec.notes, "gp3bar", ErrorKind::TooManyOptima, [&] { rec.invariants.gp3bar = gp3bar(g, options); });
    note_on(rec.notes, "prism bounds", ErrorKind::TooManyOptima, [&] { rec.bounds = prism_bounds(g, options); });

    auto prism = complementary_prism(g, options.limits);
    if (prism.size() <= options.limits.solver_vertices) {
        rec.prism = max_gp(prism, options);
        rec.prism->witness.for_each([&] (int v) { rec.prism_labels.push_back(prism.label(v)); });
    }
    else
        rec.notes.push_back("prism gp: the prism has " + std::to_string(prism.size())
                + " vertices, above the solver limit");

    std::vector<Prediction> predictions;
    note_on(rec.notes, "predictions", ErrorKind::TooManyOptima,
            [&] { predictions = applicable_predictions(g, options); });
    if (family)
        if (auto p = family_prediction(*family))
            predictions.push_back(*p);
    rec.predictions_consistent = mutually_consistent(predictions);

    for (auto & p : predictions)
        rec.predictions.push_back(JudgedPrediction{ p, rec.prism ? judge(p, rec.prism->value) : Verdict::Error });

    if (rec.prism && split_partition(g))
        rec.split_obligation = predict_split(g).obligation_holds(rec.n, rec.prism->value);

    if (family && rec.prism)
        if (auto claimed = claimed_prism_gp(*family))
            rec.claim = std::pair{ *claimed, *claimed == rec.prism->value ? Verdict::Confirmed : Verdict::Discrepancy };

    return rec;
}

auto gpprism::format_record(const ComputeRecord & rec) -> std::string
{
    std::ostringstream out;
    out << "graph6: " << rec.graph6 << "\n";
    out << "n: " << rec.n << "\n";
    out << "edges: " << rec.edges << "\n";
    out << "connected: " << yes_no(rec.connected) << "\n";
    out << "complement connected: " << yes_no(rec.complement_connected) << "\n";
    if (rec.metric) {
        out << "radius: " << rec.metric->radius << "\n";
        out << "diameter: " << rec.metric->diameter << "\n";
        out << "center: " << to_string(rec.metric->center) << "\n";
    }
    out << "omega: " << rec.invariants.omega << "\n";
    out << "alpha: " << rec.invariants.alpha << "\n";
    out << "eta: " << rec.invariants.eta << "\n";
    out << "gp3: " << rec.invariants.gp3 << "\n";
    out << "gp3 of complement: " << rec.complement_gp3 << "\n";
    if (rec.invariants.gp3bar >= 0)
        out << "gp3bar: " << rec.invariants.gp3bar << "\n";
    if (rec.bounds)
        out << "prism bounds: [" << rec.bounds->lower << "," << rec.bounds->upper << "]\n";
    if (rec.prism) {
        out << "prism gp: " << rec.prism->value << "\n";
        out << "prism witness: " << to_string(rec.prism->witness) << " (";
        for (std::size_t i = 0 ; i < rec.prism_labels.size() ; ++i)
            out << (i ? " " : "") << rec.prism_labels[i];
        out << ")\n";
        out << "prism search: " << rec.prism->stats.nodes << " nodes, " << rec.prism->stats.millis << " ms\n";
    }
    for (auto & [p, verdict] : rec.predictions) {
        out << "prediction " << p.source << ": " << p.to_string() << " " << to_string(verdict);
        if (p.witness)
            out << " (central vertex " << *p.witness << ")";
        out << "\n";
    }
    if (rec.split_obligation)
        out << "split obligation: " << (*rec.split_obligation ? "holds" : "violated DISCREPANCY") << "\n";
    if (rec.claim)
        out << "claimed prism gp " << rec.claim->first << ": " << to_string(rec.claim->second) << "\n";
    out << "predictions consistent: " << yes_no(rec.predictions_consistent) << "\n";
    for (auto & note : rec.notes)
        out << "note: " << note << "\n";
    return out.str();
}

auto gpprism::parse_range(std::string_view text) -> IntRange
{
    auto number = [&] (std::string_view s) {
        int value = 0;
        auto [end, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
        if (s.empty() || ec != std::errc{} || end != s.data() + s.size())
            fail(ErrorKind::BadRange, "'" + std::string(text) + "' is not a range like 4..9");
        return value;
    };

    IntRange result;
    if (auto dots = text.find(".."); dots != std::string_view::npos) {
        result.lo = number(text.substr(0, dots));
        result.hi = number(text.substr(dots + 2));
    }
    else
        result.lo = result.hi = number(text);

    if (result.lo > result.hi)
        fail(ErrorKind::BadRange, "empty range '" + std::string(text) + "'");
    return result;
}

auto TheoremReport::summary() const -> std::map<Verdict, int>
{
    std::map<Verdict, int> counts;
    for (auto & row : rows)
        ++counts[row.verdict];
    return counts;
}

auto TheoremReport::clean() const -> bool
{
    return std::all_of(rows.begin(), rows.end(), [] (const ReportRow & row) {
        return row.verdict == Verdict::Confirmed || row.verdict == Verdict::BoundRespected;
    });
}

auto gpprism::write_tsv(std::ostream & out, const TheoremReport & report) -> void
{
    out << "id\tinstance\ttheorem\tpredicted\texact\tverdict\tnodes\tmillis\n";
    for (auto & row : report.rows) {
        char millis[32];
        std::snprintf(millis, sizeof(millis), "%.3f", row.millis);
        out << row.id << '\t' << row.instance << '\t' << row.theorem << '\t' << row.predicted << '\t'
            << row.exact << '\t' << to_string(row.verdict) << '\t' << row.nodes << '\t' << millis << '\n';
    }
}

auto gpprism::theorem_ids() -> const std::vector<std::string> &
{
    static const std::vector<std::string> ids{
        "cor38", "thm37", "cor39", "cor310", "thm35", "thm41", "thm42", "thm312", "thm314",
        "gk", "claim-a", "thm23", "thm22", "lemma33", "fig2" };
    return ids;
}

namespace
{
    struct Instance
    {
        std::string description;
        Graph graph;
        int a = 0;
        int b = 0;
    };

    struct Outcome
    {
        std::string predicted;
        std::string exact;
        Verdict verdict;
        std::uint64_t nodes = 0;
    };

    constexpr double probabilities[] = { 0.3, 0.5, 0.7 };

    auto describe(std::string_view kind, int n, int sample, const Graph & g) -> std::string
    {
        return std::string(kind) + " n=" + std::to_string(n) + " #" + std::to_string(sample) + " " + write_graph6(g);
    }

    auto exact_string(int value) -> std::string
    {
        return std::to_string(value);
    }

    auto prism_gp(const Graph & g, const SolverOptions & options) -> GpResult
    {
        return max_gp(complementary_prism(g, options.limits), options);
    }

    auto judged(const Prediction & p, const GpResult & r) -> Outcome
    {
        return Outcome{ p.to_string(), exact_string(r.value), judge(p, r.value), r.stats.nodes };
    }

    auto require_range(const std::optional<IntRange> & given, IntRange fallback, int lo, int hi,
            std::string_view flag) -> IntRange
    {
        auto range = given.value_or(fallback);
        if (range.lo < lo || range.hi > hi)
            fail(ErrorKind::BadRange, std::string(flag) + " must lie within " + std::to_string(lo) + ".."
                    + std::to_string(hi));
        return range;
    }

    auto connected_with_connected_complement(Rng & rng, int n, double p) -> Graph
    {
        for (int attempt = 0 ; attempt < 1000 ; ++attempt) {
            auto g = random_gnp(rng, n, p);
            if (is_connected(g) && is_connected(complement(g)))
                return g;
        }
        fail(ErrorKind::BadParameters, "no G(" + std::to_string(n) + ", p) with both it and its complement "
                "connected after 1000 attempts");
    }

    template <typename Accept_>
    auto retry(Rng & rng, const std::function<Graph (Rng &)> & make, Accept_ && accept, std::string_view what) -> Graph
    {
        for (int attempt = 0 ; attempt < 1000 ; ++attempt) {
            auto g = make(rng);
            if (accept(g))
                return g;
        }
        fail(ErrorKind::BadParameters, "no " + std::string(what) + " found after 1000 attempts");
    }

    auto build_instances(const VerifyConfig & c, int solver_n) -> std::vector<Instance>
    {
        std::vector<Instance> result;
        auto & t = c.theorem;
        int half = solver_n / 2;

        auto per_n = [&] (IntRange range, std::string_view kind, auto && make) {
            for (int n = range.lo ; n <= range.hi ; ++n)
                for (int s = 0 ; s < c.samples ; ++s) {
                    Rng rng(instance_seed(c.seed, std::uint64_t(n), std::uint64_t(s)));
                    double p = probabilities[s % 3];
                    auto g = make(rng, n, p, s);
                    result.push_back(Instance{ describe(kind, n, s, g), std::move(g) });
                }
        };

        if (t == "cor38")
            per_n(require_range(c.n, { 4, 9 }, 2, half, "--tree-n"), "tree",
                    [] (Rng & rng, int n, double, int) { return random_tree(rng, n); });
        else if (t == "thm37")
            per_n(require_range(c.n, { 4, 9 }, 2, half, "--n"), "bipartite",
                    [] (Rng & rng, int n, double p, int) { return random_connected_bipartite(rng, n, p); });
        else if (t == "thm35" || t == "lemma33")
            per_n(require_range(c.n, { 4, 8 }, 4, half, "--gnp-n"), "gnp",
                    [] (Rng & rng, int n, double p, int) { return connected_with_connected_complement(rng, n, p); });
        else if (t == "thm41")
            per_n(require_range(c.n, { 4, 8 }, 1, half, "--gnp-n"), "gnp",
                    [] (Rng & rng, int n, double p, int) { return random_gnp(rng, n, p); });
        else if (t == "thm42")
            per_n(require_range(c.n, { 4, 8 }, 2, half, "--gnp-n"), "gnp",
                    [] (Rng & rng, int n, double p, int s) {
                        if (s % 4 == 3) {
                            // random composition of n into at least two parts
                            std::vector<int> parts{ 1 };
                            for (int i = 1 ; i < n ; ++i) {
                                if (parts.size() < 2 || bernoulli(rng, 0.5))
                                    parts.push_back(1);
                                else
                                    ++parts.back();
                            }
                            return relabel(complete_multipartite_graph(parts), random_permutation(rng, n));
                        }
                        return random_connected_gnp(rng, n, p);
                    });
        else if (t == "thm312")
            per_n(require_range(c.n, { 4, 9 }, 1, half, "--n"), "split",
                    [] (Rng & rng, int n, double p, int) {
                        return retry(rng, [&] (Rng & r) { return random_split(r, n, p); },
                                [] (const Graph & g) { return is_connected(g); }, "connected split graph");
                    });
        else if (t == "thm314")
            per_n(require_range(c.n, { 4, 10 }, 2, half, "--n"), "block",
                    [] (Rng & rng, int n, double, int) { return random_block_graph(rng, n); });
        else if (t == "thm23")
            per_n(require_range(c.n, { 4, 8 }, 3, solver_n, "--gnp-n"), "gnp-diam2",
                    [] (Rng & rng, int n, double p, int) {
                        return retry(rng, [&] (Rng & r) { return random_gnp(r, n, std::max(p, 0.5)); },
                                [] (const Graph & g) { return is_connected(g) && metric_summary(g).diameter == 2; },
                                "diameter-2 graph");
                    });
        else if (t == "thm22")
            per_n(require_range(c.n, { 4, 9 }, 3, solver_n, "--n"), "bipartite-diam3",
                    [] (Rng & rng, int n, double p, int) {
                        return retry(rng, [&] (Rng & r) { return random_connected_bipartite(r, n, std::max(p, 0.5)); },
                                [] (const Graph & g) { return metric_summary(g).diameter <= 3; },
                                "bipartite graph of diameter at most 3");
                    });
        else if (t == "cor39") {
            auto rows = require_range(c.grid_n, { 2, 3 }, 2, half, "--grid-n");
            auto cols = require_range(c.grid_m, { 2, 4 }, 2, half, "--grid-m");
            for (int a = rows.lo ; a <= rows.hi ; ++a)
                for (int b = std::max(a, cols.lo) ; b <= cols.hi ; ++b) {
                    if (2 * a * b > solver_n)
                        fail(ErrorKind::BadRange, "the prism of the " + std::to_string(a) + "x" + std::to_string(b)
                                + " grid exceeds the solver limit");
                    auto g = generate(FamilySpec{ Family::Grid, { a, b } }).graph;
                    result.push_back(Instance{ "grid " + std::to_string(a) + "x" + std::to_string(b), std::move(g), a, b });
                }
        }
        else if (t == "cor310") {
            auto range = require_range(c.r, { 2, 3 }, 2, 30, "--r");
            for (int r = range.lo ; r <= range.hi ; ++r) {
                if (2 << r > solver_n)
                    fail(ErrorKind::BadRange, "the prism of Q" + std::to_string(r) + " exceeds the solver limit");
                result.push_back(Instance{ "hypercube " + std::to_string(r),
                        generate(FamilySpec{ Family::Hypercube, { r } }).graph, r });
            }
        }
        else if (t == "gk" || t == "claim-a") {
            auto range = t == "gk" ? require_range(c.k, { 5, 5 }, 5, (half - 3) / 2, "--k")
                : require_range(c.k, { 0, 6 }, 0, (solver_n - 3) / 2, "--k");
            for (int k = range.lo ; k <= range.hi ; ++k)
                result.push_back(Instance{ "gk " + std::to_string(k), gk_chain(k), k });
        }
        else if (t == "fig2") {
            for (auto f : { Family::Fig2G1, Family::Fig2G2 })
                result.push_back(Instance{ std::string(family_name(f)), generate(FamilySpec{ f, {} }).graph,
                        *claimed_prism_gp(FamilySpec{ f, {} }) });
        }
        else
            fail(ErrorKind::BadParameters, "unknown theorem '" + t + "'");

        return result;
    }

    auto evaluate(const std::string & t, const Instance & inst, const SolverOptions & options) -> Outcome
    {
        auto & g = inst.graph;
        int n = g.size();

        if (t == "cor38")
            return judged(predict_tree(g), prism_gp(g, options));
        if (t == "thm37")
            return judged(predict_bipartite(g), prism_gp(g, options));
        if (t == "cor39")
            return judged(predict_grid(inst.a, inst.b), prism_gp(g, options));
        if (t == "cor310")
            return judged(predict_hypercube(inst.a), prism_gp(g, options));
        if (t == "thm35")
            return judged(predict_by_central_vertex(g, options), prism_gp(g, options));
        if (t == "thm314")
            return judged(predict_block_graph(g, options), prism_gp(g, options));
        if (t == "gk")
            return judged(predict_gk_chain(inst.a), prism_gp(g, options));

        if (t == "thm41") {
            auto bounds = prism_bounds(g, options);
            auto r = prism_gp(g, options);
            auto p = Prediction::range(bounds.lower, bounds.upper, source::bounds);
            return judged(p, r);
        }

        if (t == "thm42") {
            auto r = prism_gp(g, options);
            bool predicted = classify(g).is_complete_multipartite;
            bool equal = r.value == std::max(max_gp3(g, options).value, max_gp3(complement(g), options).value);
            return Outcome{ predicted ? "equal" : "strict", equal ? "equal" : "strict",
                predicted == equal ? Verdict::Confirmed : Verdict::Discrepancy, r.stats.nodes };
        }

        if (t == "thm312") {
            auto split = predict_split(g);
            auto r = prism_gp(g, options);
            auto outcome = judged(split.prediction, r);
            if (! split.obligation_holds(n, r.value)) {
                outcome.verdict = Verdict::Discrepancy;
                outcome.exact += " (obligation violated)";
            }
            return outcome;
        }

        if (t == "claim-a") {
            auto r = max_gp3(g, options);
            auto p = Prediction::exact(inst.a + 3, "claim-a");
            return judged(p, r);
        }

        if (t == "thm23") {
            auto r = max_gp(g, options);
            int expected = std::max(max_clique(g, options).value, max_cluster_set(g, options).value);
            return judged(Prediction::exact(expected, "thm23"), r);
        }

        if (t == "thm22") {
            auto r = max_gp(g, options);
            return judged(Prediction::exact(independence_number(g, options), "thm22"), r);
        }

        if (t == "lemma33") {
            auto r = prism_gp(g, options);
            if (r.value <= n)
                return Outcome{ "<=" + std::to_string(n + 1), exact_string(r.value), Verdict::BoundRespected, r.stats.nodes };
            bool structured = has_central_vertex_structure(g, r.witness);
            return Outcome{ "structure", structured ? "structure" : "no structure",
                structured ? Verdict::Confirmed : Verdict::Discrepancy, r.stats.nodes };
        }

        if (t == "fig2") {
            auto r = prism_gp(g, options);
            return Outcome{ "=" + std::to_string(inst.a), exact_string(r.value),
                r.value == inst.a ? Verdict::Confirmed : Verdict::Discrepancy, r.stats.nodes };
        }

        fail(ErrorKind::BadParameters, "unknown theorem '" + t + "'");
    }
}

auto gpprism::run_verify(const VerifyConfig & config) -> TheoremReport
{
    if (config.samples < 1)
        fail(ErrorKind::BadRange, "--samples must be at least 1");
    if (config.threads < 1)
        fail(ErrorKind::BadParameters, "--threads must be at least 1");
    if (! (config.timeout_secs > 0.0))
        fail(ErrorKind::BadParameters, "--timeout-secs must be positive");

    auto instances = build_instances(config, std::min(config.limits.solver_vertices, 64));

    TheoremReport report;
    report.rows.resize(instances.size());

    auto start = Clock::now();
    auto seconds = [] (double s) { return std::chrono::duration_cast<Clock::duration>(std::chrono::duration<double>(s)); };
    std::optional<Clock::time_point> budget_end;
    if (config.budget_secs)
        budget_end = start + seconds(*config.budget_secs);

    std::atomic<std::size_t> next{ 0 };
    auto work = [&] {
        for (std::size_t i ; (i = next++) < instances.size() ; ) {
            auto & inst = instances[i];
            auto & row = report.rows[i];
            row.id = int(i) + 1;
            row.instance = inst.description;
            row.theorem = config.theorem;

            auto begin = Clock::now();
            SolverOptions options;
            options.limits = config.limits;
            options.deadline = begin + seconds(config.timeout_secs);
            if (budget_end)
                options.deadline = std::min(*options.deadline, *budget_end);

            try {
                if (budget_end && begin >= *budget_end)
                    fail(ErrorKind::Timeout, "overall budget exhausted");
                auto outcome = evaluate(config.theorem, inst, options);
                row.predicted = outcome.predicted;
                row.exact = outcome.exact;
                row.verdict = outcome.verdict;
                row.nodes = outcome.nodes;
            }
            catch (const Error & e) {
                row.predicted = row.predicted.empty() ? "-" : row.predicted;
                row.exact = e.kind() == ErrorKind::Timeout ? "-" : std::string(gpprism::to_string(e.kind()));
                row.verdict = e.kind() == ErrorKind::Timeout ? Verdict::Timeout : Verdict::Error;
            }
            row.millis = std::chrono::duration<double, std::milli>(Clock::now() - begin).count();
        }
    };

    int thread_count = std::min<int>(config.threads, std::max<std::size_t>(instances.size(), 1));
    std::vector<std::jthread> pool;
    for (int i = 1 ; i < thread_count ; ++i)
        pool.emplace_back(work);
    work();
    pool.clear();

    return report;
}
