#include <gpprism/error.hh>
#include <gpprism/families.hh>
#include <gpprism/general_position.hh>
#include <gpprism/graph_io.hh>
#include <gpprism/harness.hh>
#include <gpprism/metric.hh>
#include <gpprism/sampling.hh>
#include <gpprism/solver.hh>
#include <gpprism/structure.hh>
#include <gpprism/theorems.hh>

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <set>
#include <string>
#include <vector>

using namespace gpprism;

namespace
{
    struct Outcome
    {
        bool pass = false;
        std::string detail;
    };

    struct Criterion
    {
        int number;
        std::string name;
        double limit_secs;
        std::function<auto () -> Outcome> run;
    };

    auto prism_gp(const Graph & g) -> int
    {
        return max_gp(complementary_prism(g)).value;
    }

    auto edge_probability(int s) -> double
    {
        static constexpr double ps[] = { 0.3, 0.5, 0.7 };
        return ps[s % 3];
    }

    // Seeded G(n, p) pool shared by the sandwich, the central vertex sweep and
    // the diameter two regression.
    auto gnp_pool(std::uint64_t seed, int lo, int hi, int per_n) -> std::vector<Graph>
    {
        std::vector<Graph> result;
        for (int n = lo ; n <= hi ; ++n)
            for (int s = 0 ; s < per_n ; ++s) {
                Rng rng(instance_seed(seed, std::uint64_t(n), std::uint64_t(s)));
                result.push_back(random_gnp(rng, n, edge_probability(s)));
            }
        return result;
    }

    auto sweep_pool() -> std::vector<Graph>
    {
        std::vector<Graph> result;
        for (int n = 4 ; n <= 8 ; ++n)
            for (int s = 0 ; s < 220 ; ++s) {
                Rng rng(instance_seed(12, std::uint64_t(n), std::uint64_t(s)));
                for (;;) {
                    auto g = random_gnp(rng, n, edge_probability(s));
                    if (is_connected(g) && is_connected(complement(g))) {
                        result.push_back(std::move(g));
                        break;
                    }
                }
            }
        return result;
    }

    auto petersen() -> Outcome
    {
        auto p = complementary_prism(cycle_graph(5));
        auto r = max_gp(p);
        auto d = all_pairs_distances(p);
        bool direct = is_general_position(p, d, r.witness);
        bool characterised = is_general_position_via_characterization(p, d, r.witness).accepted;
        return { r.value == 6 && direct && characterised,
            "gp " + std::to_string(r.value) + ", witness " + to_string(r.witness)
                + (direct && characterised ? " accepted by both verifiers" : " rejected by a verifier") };
    }

    auto complete_graphs() -> Outcome
    {
        std::string detail;
        bool ok = true;
        for (int n = 2 ; n <= 7 ; ++n) {
            int v = prism_gp(complete_graph(n));
            ok = ok && v == n;
            detail += (detail.empty() ? "" : " ") + std::to_string(v);
        }
        return { ok, "gp for n=2..7: " + detail };
    }

    auto disconnected_sharpness() -> Outcome
    {
        int v = prism_gp(empty_graph(2));
        return { v == 2, "gp " + std::to_string(v) };
    }

    auto trees() -> Outcome
    {
        int checked = 0, bad = 0, diameter_four = 0;
        std::string first_bad;
        for (int n = 4 ; n <= 9 ; ++n)
            for (int s = 0 ; s < 100 ; ++s) {
                Rng rng(instance_seed(4, std::uint64_t(n), std::uint64_t(s)));
                auto t = random_tree(rng, n);
                bool four = metric_summary(t).diameter == 4;
                diameter_four += four;
                int v = prism_gp(t);
                ++checked;
                if (v != (four ? n + 1 : n)) {
                    ++bad;
                    if (first_bad.empty())
                        first_bad = " first " + write_graph6(t);
                }
            }
        return { bad == 0, std::to_string(checked) + " trees, " + std::to_string(diameter_four)
            + " of diameter 4, " + std::to_string(bad) + " discrepancies" + first_bad };
    }

    auto grids() -> Outcome
    {
        const std::vector<std::array<int, 3>> cases{ { 2, 2, 4 }, { 2, 3, 6 }, { 2, 4, 8 }, { 3, 3, 10 } };
        bool ok = true;
        std::string detail;
        for (auto [a, b, want] : cases) {
            int v = prism_gp(cartesian_product(path_graph(a), path_graph(b)));
            ok = ok && v == want;
            detail += (detail.empty() ? "" : ", ") + std::string("P") + std::to_string(a) + "xP" + std::to_string(b)
                + " " + std::to_string(v);
        }
        return { ok, detail };
    }

    auto hypercubes() -> Outcome
    {
        int q2 = prism_gp(generate({ Family::Hypercube, { 2 } }).graph);
        int q3 = prism_gp(generate({ Family::Hypercube, { 3 } }).graph);
        return { q2 == 4 && q3 == 8, "Q2 " + std::to_string(q2) + ", Q3 " + std::to_string(q3) };
    }

    auto double_star() -> Outcome
    {
        auto g = generate({ Family::Fig1DoubleStar, {} }).graph;
        int v = prism_gp(g);
        auto p = predict_bipartite(g);
        bool exact = p.kind == PredictionKind::Exact && p.value() == 6;
        return { v == 6 && exact, "gp " + std::to_string(v) + ", bipartite prediction " + p.to_string() };
    }

    auto figure_two() -> Outcome
    {
        std::string detail;
        bool ok = true;
        for (auto [family, name] : { std::pair{ Family::Fig2G1, "G1" }, std::pair{ Family::Fig2G2, "G2" } }) {
            FamilySpec spec{ family, {} };
            auto rec = compute_record(generate(spec).graph, spec);
            if (! rec.prism || ! rec.claim)
                return { false, std::string(name) + " was not solved" };
            if (family == Family::Fig2G1)
                ok = ok && rec.prism->value == 6 && rec.claim->second == Verdict::Confirmed;
            ok = ok && (rec.claim->second == Verdict::Confirmed || rec.claim->second == Verdict::Discrepancy);
            detail += (detail.empty() ? "" : "; ") + std::string(name) + " exact " + std::to_string(rec.prism->value)
                + " vs claimed " + std::to_string(rec.claim->first) + ": " + std::string(to_string(rec.claim->second));
        }
        return { ok, detail };
    }

    auto chain() -> Outcome
    {
        std::string detail = "gp3 for k=0..6:";
        bool ok = true;
        for (int k = 0 ; k <= 6 ; ++k) {
            int v = max_gp3(gk_chain(k)).value;
            ok = ok && v == k + 3;
            detail += " " + std::to_string(v);
        }
        SolverOptions options;
        options.deadline = Clock::now() + std::chrono::minutes(10);
        int v = max_gp(complementary_prism(gk_chain(5)), options).value;
        ok = ok && v == 11;
        return { ok, detail + "; prism gp at k=5: " + std::to_string(v) };
    }

    auto oracle_equivalence() -> Outcome
    {
        int graphs = 0;
        long subsets = 0, disagreements = 0;
        std::set<std::string> distinct;
        for (int i = 0 ; graphs < 600 ; ++i) {
            Rng rng(instance_seed(10, std::uint64_t(i)));
            int n = 2 + int(uniform_below(rng, 5));
            auto g = random_gnp(rng, n, edge_probability(i));
            if (! is_connected(g))
                continue;
            ++graphs;
            distinct.insert(write_graph6(g));
            auto d = all_pairs_distances(g);
            for (std::uint64_t mask = 0 ; mask < (std::uint64_t{1} << n) ; ++mask) {
                auto s = VertexSet::from_mask(n, mask);
                ++subsets;
                if (is_general_position(g, d, s) != is_general_position_via_characterization(g, d, s).accepted)
                    ++disagreements;
                if (is_3gp(g, d, s) != is_3gp_via_characterization(g, d, s).accepted)
                    ++disagreements;
            }
        }
        return { disagreements == 0, std::to_string(graphs) + " connected graphs (" + std::to_string(distinct.size())
            + " distinct labelled), " + std::to_string(subsets) + " subsets, " + std::to_string(disagreements)
            + " disagreements" };
    }

    auto bound_sandwich() -> Outcome
    {
        int violations = 0, lower_tight = 0, upper_tight = 0, connected = 0, multipartite = 0, thm42_bad = 0;
        std::string witnesses;
        for (auto & g : gnp_pool(11, 4, 8, 40)) {
            int n = g.size();
            auto bounds = prism_bounds(g);
            int exact = prism_gp(g);
            lower_tight += exact == bounds.lower;
            upper_tight += exact == bounds.upper;
            if (exact < bounds.lower || exact > bounds.upper) {
                ++violations;
                witnesses += " " + write_graph6(g) + "(" + std::to_string(bounds.lower) + "<=" + std::to_string(exact)
                    + "<=" + std::to_string(bounds.upper) + ")";
            }
            if (is_connected(g)) {
                ++connected;
                bool cm = classify(g).is_complete_multipartite;
                multipartite += cm;
                int best = std::max(max_gp3(g).value, max_gp3(complement(g)).value);
                if ((exact == best) != cm) {
                    ++thm42_bad;
                    witnesses += " " + write_graph6(g) + "(multipartite " + (cm ? "yes" : "no") + ")";
                }
            }
            (void) n;
        }
        return { violations == 0 && thm42_bad == 0, "200 instances, lower tight " + std::to_string(lower_tight)
            + ", upper tight " + std::to_string(upper_tight) + ", bound violations " + std::to_string(violations)
            + "; " + std::to_string(connected) + " connected (" + std::to_string(multipartite)
            + " complete multipartite), equivalence violations " + std::to_string(thm42_bad) + witnesses };
    }

    auto central_vertex_sweep() -> Outcome
    {
        int instances = 0, predicted = 0, bad = 0;
        std::string witnesses;
        for (auto & g : sweep_pool()) {
            ++instances;
            int n = g.size();
            auto p = predict_by_central_vertex(g);
            bool holds = p.kind == PredictionKind::Exact;
            predicted += holds;
            if (holds != (prism_gp(g) == n + 1)) {
                ++bad;
                witnesses += " " + write_graph6(g);
            }
        }
        return { bad == 0, std::to_string(instances) + " graphs with connected complement, " + std::to_string(predicted)
            + " satisfy the central vertex conditions, " + std::to_string(bad) + " discrepancies" + witnesses };
    }

    auto formula_regression() -> Outcome
    {
        int diameter_two = 0, bipartite = 0, bad = 0;
        std::string witnesses;
        auto check_diameter_two = [&] (const Graph & g) {
            if (g.size() < 2 || ! is_connected(g) || metric_summary(g).diameter != 2)
                return;
            ++diameter_two;
            int want = std::max(max_clique(g).value, max_cluster_set(g).value);
            if (max_gp(g).value != want) {
                ++bad;
                witnesses += " " + write_graph6(g);
            }
        };
        for (auto & g : gnp_pool(11, 4, 8, 40))
            check_diameter_two(g);
        for (auto & g : sweep_pool())
            check_diameter_two(g);

        for (int n = 4 ; n <= 10 ; ++n)
            for (int s = 0 ; s < 40 ; ++s) {
                Rng rng(instance_seed(13, std::uint64_t(n), std::uint64_t(s)));
                for (;;) {
                    auto g = random_connected_bipartite(rng, n, edge_probability(s));
                    if (metric_summary(g).diameter > 3)
                        continue;
                    ++bipartite;
                    if (max_gp(g).value != independence_number(g)) {
                        ++bad;
                        witnesses += " " + write_graph6(g);
                    }
                    break;
                }
            }
        return { bad == 0, std::to_string(diameter_two) + " diameter-2 graphs, " + std::to_string(bipartite)
            + " bipartite graphs of diameter at most 3, " + std::to_string(bad) + " violations" + witnesses };
    }

    auto graph6_round_trip() -> Outcome
    {
        int bad = 0;
        for (int i = 0 ; i < 1000 ; ++i) {
            Rng rng(instance_seed(14, std::uint64_t(i)));
            int n = int(uniform_below(rng, 63));
            auto g = random_gnp(rng, n, double(1 + uniform_below(rng, 9)) / 10.0);
            if (! (parse_graph6(write_graph6(g)) == g))
                ++bad;
        }
        return { bad == 0, "1000 graphs, " + std::to_string(bad) + " mismatches" };
    }
}

auto main(int argc, char * argv[]) -> int
{
    const std::vector<Criterion> criteria{
        { 1, "petersen", 1, petersen },
        { 2, "complete-graphs", 5, complete_graphs },
        { 3, "disconnected-sharpness", 1, disconnected_sharpness },
        { 4, "trees", 600, trees },
        { 5, "grids", 600, grids },
        { 6, "hypercubes", 300, hypercubes },
        { 7, "double-star", 1, double_star },
        { 8, "figure-two", 1, figure_two },
        { 9, "chain", 660, chain },
        { 10, "verifier-equivalence", 0, oracle_equivalence },
        { 11, "bound-sandwich", 0, bound_sandwich },
        { 12, "central-vertex-sweep", 0, central_vertex_sweep },
        { 13, "diameter-formulas", 0, formula_regression },
        { 14, "graph6-round-trip", 0, graph6_round_trip }
    };

    std::set<int> wanted;
    for (int i = 1 ; i < argc ; ++i)
        wanted.insert(std::atoi(argv[i]));

    bool all = true;
    for (auto & c : criteria) {
        if (! wanted.empty() && ! wanted.contains(c.number))
            continue;
        auto start = Clock::now();
        Outcome outcome;
        try {
            outcome = c.run();
        }
        catch (const Error & e) {
            outcome = { false, e.what() };
        }
        double secs = std::chrono::duration<double>(Clock::now() - start).count();
        if (c.limit_secs > 0 && secs >= c.limit_secs) {
            outcome.pass = false;
            outcome.detail += "; over the time limit";
        }
        all = all && outcome.pass;
        std::printf("%s %2d %s: %s (%.3f s)\n", outcome.pass ? "PASS" : "FAIL", c.number, c.name.c_str(),
            outcome.detail.c_str(), secs);
        std::fflush(stdout);
    }
    return all ? 0 : 1;
}
