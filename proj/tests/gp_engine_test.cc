#include "oracles.hh"

#include <gpprism/error.hh>
#include <gpprism/families.hh>
#include <gpprism/general_position.hh>
#include <gpprism/metric.hh>
#include <gpprism/sampling.hh>
#include <gpprism/solver.hh>
#include <gpprism/structure.hh>

#include <doctest.h>

#include <thread>

using namespace gpprism;

namespace
{
    auto describe_edges(const Graph & g) -> std::string
    {
        std::string edges;
        for (auto [u, v] : g.edges())
            edges += std::to_string(u) + "-" + std::to_string(v) + " ";
        return std::to_string(g.size()) + ": " + edges;
    }

    auto connected_pool(std::uint64_t seed, int count, int lo, int hi) -> std::vector<Graph>
    {
        std::vector<Graph> result;
        for (int i = 0 ; i < count ; ++i) {
            Rng rng(instance_seed(seed, std::uint64_t(i)));
            int n = lo + int(uniform_below(rng, hi - lo + 1));
            result.push_back(random_connected_gnp(rng, n, 0.25 + 0.5 * double(i % 3) / 2.0));
        }
        return result;
    }

    auto petersen_outer_inner_set() -> VertexSet
    {
        // v1, v1bar, v3, v4, v2bar, v5bar with v_i = i - 1
        return VertexSet::of(10, { 0, 5, 2, 3, 6, 9 });
    }
}

TEST_SUITE("gp-engine")
{
    TEST_CASE("interval")
    {
        auto p4 = path_graph(4);
        auto d = all_pairs_distances(p4);
        CHECK(interval(p4, d, 0, 3) == VertexSet::full(4));
        CHECK(interval(p4, d, 2, 2) == VertexSet::of(4, { 2 }));

        auto c6 = cycle_graph(6);
        CHECK(interval(c6, all_pairs_distances(c6), 0, 3) == VertexSet::full(6));

        auto e2 = empty_graph(2);
        CHECK_THROWS_AS(interval(e2, all_pairs_distances(e2), 0, 1), Error);
    }

    TEST_CASE("bad triples")
    {
        CHECK(bad_triples(complete_graph(3)).empty());
        CHECK(bad_triples(path_graph(3)) == std::vector<Triple>{ { 0, 1, 2 } });
        CHECK(bad_triples(path_graph(5), 3) == std::vector<Triple>{
                { 0, 1, 2 }, { 0, 1, 3 }, { 0, 2, 3 }, { 1, 2, 3 }, { 1, 2, 4 }, { 1, 3, 4 }, { 2, 3, 4 } });

        for (auto & g : connected_pool(21, 60, 3, 9))
            for (std::optional<int> max_len : { std::optional<int>{}, std::optional<int>{ 3 } }) {
                auto d = oracle::distances(g);
                std::vector<Triple> expected;
                int n = g.size();
                for (int a = 0 ; a < n ; ++a)
                    for (int b = a + 1 ; b < n ; ++b)
                        for (int c = b + 1 ; c < n ; ++c)
                            if (! oracle::triple_ok(d, a, b, c, max_len.value_or(oracle::inf)))
                                expected.push_back({ a, b, c });
                CHECK(bad_triples(g, max_len) == expected);
            }
    }

    TEST_CASE("direct verifiers")
    {
        auto petersen = complementary_prism(cycle_graph(5));
        auto dp = all_pairs_distances(petersen);
        CHECK(is_general_position(petersen, dp, petersen_outer_inner_set()));
        CHECK(is_general_position(petersen, dp, VertexSet::of(10, { 1, 7 })));

        auto p3 = path_graph(3);
        CHECK(! is_general_position(p3, all_pairs_distances(p3), VertexSet::full(3)));

        auto p5 = path_graph(5);
        CHECK(is_3gp(p5, all_pairs_distances(p5), VertexSet::of(5, { 0, 2, 4 })));
        CHECK(! is_general_position(p5, all_pairs_distances(p5), VertexSet::of(5, { 0, 2, 4 })));

        // disconnected input: only finite-distance pairs count
        auto two = build_graph(6, { { 0, 1 }, { 1, 2 }, { 3, 4 }, { 4, 5 } });
        CHECK(is_general_position(two, all_pairs_distances(two), VertexSet::of(6, { 0, 2, 3, 5 })));

        // independent set at pairwise distance >= 4
        auto p9 = path_graph(9);
        CHECK(is_3gp(p9, all_pairs_distances(p9), VertexSet::of(9, { 0, 4, 8 })));
    }

    TEST_CASE("characterization verifiers")
    {
        auto k5 = complete_graph(5);
        auto r = is_general_position_via_characterization(k5, all_pairs_distances(k5), VertexSet::of(5, { 0, 2, 3 }));
        CHECK(r.accepted);
        REQUIRE(r.certificate);
        CHECK(r.certificate->cliques.size() == 1);

        auto c6 = cycle_graph(6);
        r = is_general_position_via_characterization(c6, all_pairs_distances(c6), VertexSet::of(6, { 0, 2, 4 }));
        CHECK(r.accepted);
        REQUIRE(r.certificate);
        CHECK(r.certificate->cliques.size() == 3);
        for (int i = 0 ; i < 3 ; ++i)
            for (int j = 0 ; j < 3 ; ++j)
                if (i != j)
                    CHECK(r.certificate->inter_distance[i][j] == 2);

        auto p4 = path_graph(4);
        r = is_general_position_via_characterization(p4, all_pairs_distances(p4), VertexSet::of(4, { 0, 1, 3 }));
        CHECK(! r.accepted);
        CHECK(! r.reason.empty());

        auto p3 = path_graph(3);
        r = is_general_position_via_characterization(p3, all_pairs_distances(p3), VertexSet::full(3));
        CHECK(! r.accepted);
        CHECK(! r.certificate);

        auto e2 = empty_graph(2);
        CHECK_THROWS_AS(is_3gp_via_characterization(e2, all_pairs_distances(e2), VertexSet(2)), Error);

        auto petersen = complementary_prism(cycle_graph(5));
        CHECK(is_general_position_via_characterization(petersen, all_pairs_distances(petersen),
                    petersen_outer_inner_set()).accepted);
    }

    TEST_CASE("verifiers agree with each other and with the oracle on every subset")
    {
        for (auto & g : connected_pool(22, 120, 2, 7)) {
            auto d = all_pairs_distances(g);
            auto ref = oracle::distances(g);
            int n = g.size();
            for (std::uint64_t mask = 0 ; mask < (1ULL << n) ; ++mask) {
                auto s = VertexSet::from_mask(n, mask);
                auto members = oracle::members(s);
                bool gp = is_general_position(g, d, s);
                bool gp3 = is_3gp(g, d, s);
                CHECK(gp == oracle::position_ok(ref, members));
                CHECK(gp3 == oracle::position_ok(ref, members, 3));
                CHECK(gp == is_general_position_via_characterization(g, d, s).accepted);
                CHECK(gp3 == is_3gp_via_characterization(g, d, s).accepted);
                if (gp)
                    CHECK(gp3);
            }
        }
    }

    TEST_CASE("accepted sets are hereditary; cliques and independent sets are 3-gp")
    {
        for (auto & g : connected_pool(23, 60, 3, 8)) {
            auto d = all_pairs_distances(g);
            int n = g.size();
            for (std::uint64_t mask = 0 ; mask < (1ULL << n) ; ++mask) {
                auto s = VertexSet::from_mask(n, mask);
                if (is_clique(g, s) || is_independent(g, s))
                    CHECK(is_3gp(g, d, s));
                if (! is_general_position(g, d, s))
                    continue;
                s.for_each([&] (int v) {
                    auto smaller = s;
                    smaller.erase(v);
                    CHECK(is_general_position(g, d, smaller));
                });
            }
        }
    }

    TEST_CASE("max_gp and max_gp3 on small families")
    {
        auto petersen = complementary_prism(cycle_graph(5));
        auto r = max_gp(petersen);
        CHECK(r.value == 6);
        CHECK(r.witness.size() == 6);
        auto dp = all_pairs_distances(petersen);
        CHECK(is_general_position(petersen, dp, r.witness));
        CHECK(is_general_position_via_characterization(petersen, dp, r.witness).accepted);

        for (int n = 1 ; n <= 7 ; ++n)
            CHECK(max_gp3(complete_graph(n)).value == n);
        for (int n = 2 ; n <= 8 ; ++n) {
            CHECK(max_gp(path_graph(n)).value == 2);
            CHECK(oracle::max_gp(path_graph(n)).size() == 2);
        }
        for (int k = 0 ; k <= 6 ; ++k)
            CHECK(max_gp3(gk_chain(k)).value == k + 3);

        CHECK(max_gp(build_graph(0, {})).value == 0);
        CHECK(max_gp(complete_graph(1)).value == 1);
    }

    TEST_CASE("solvers match the subset oracle, including the witness")
    {
        for (int i = 0 ; i < 150 ; ++i) {
            Rng rng(instance_seed(24, std::uint64_t(i)));
            int n = 1 + int(uniform_below(rng, 11));
            auto g = random_gnp(rng, n, 0.2 + 0.3 * (i % 3));
            CAPTURE(describe_edges(g));

            auto gp = max_gp(g);
            auto ref = oracle::max_gp(g);
            CHECK(gp.value == int(ref.size()));
            CHECK(oracle::members(gp.witness) == ref);

            auto gp3 = max_gp3(g);
            auto ref3 = oracle::max_gp3(g);
            CHECK(gp3.value == int(ref3.size()));
            CHECK(oracle::members(gp3.witness) == ref3);
            CHECK(gp.value <= gp3.value);

            CHECK(max_clique(g).value == oracle::omega(g));
            CHECK(independence_number(g) == oracle::alpha(g));
            CHECK(max_cluster_set(g).value == oracle::eta(g));
            CHECK(gp3bar(g) == oracle::gp3bar(g));

            auto all = max_gp3(g, true);
            REQUIRE(all.optima);
            auto d = oracle::distances(g);
            auto expected = oracle::all_largest(n, oracle::fits_position(d, 3));
            REQUIRE(all.optima->size() == expected.size());
            for (std::size_t j = 0 ; j < expected.size() ; ++j)
                CHECK(oracle::members((*all.optima)[j]) == expected[j]);
        }
    }

    TEST_CASE("prism gp matches the oracle on small prisms")
    {
        for (int i = 0 ; i < 60 ; ++i) {
            Rng rng(instance_seed(25, std::uint64_t(i)));
            int n = 1 + int(uniform_below(rng, 7));
            auto g = random_gnp(rng, n, 0.3 + 0.2 * (i % 3));
            auto p = complementary_prism(g);
            auto r = max_gp(p);
            CHECK(oracle::members(r.witness) == oracle::max_gp(oracle::prism(g)));
            auto bounds = prism_bounds(g);
            CHECK(bounds.upper == (is_connected(g) ? n + 1 : n));
            CHECK(r.value <= bounds.upper);
        }
    }

    TEST_CASE("invariant bundle examples")
    {
        auto c5 = invariant_bundle(cycle_graph(5));
        CHECK(c5.omega == 2);
        CHECK(c5.alpha == 2);
        CHECK(c5.eta == 3);
        CHECK(c5.eta == oracle::eta(cycle_graph(5)));
        CHECK(c5.gp3bar == oracle::gp3bar(cycle_graph(5)));

        auto k23 = invariant_bundle(complete_multipartite_graph({ 2, 3 }));
        CHECK(k23.omega == 2);
        CHECK(k23.alpha == 3);
        CHECK(k23.eta == 3);
        CHECK(k23.eta == oracle::eta(complete_multipartite_graph({ 2, 3 })));

        for (int n = 1 ; n <= 6 ; ++n) {
            auto kn = invariant_bundle(complete_graph(n));
            CHECK(kn.omega == n);
            CHECK(kn.eta == n);
            CHECK(kn.gp3 == n);
            CHECK(kn.gp3bar == 0);
        }
        CHECK(gp3bar(empty_graph(2)) == 0);
    }

    TEST_CASE("prism bounds examples")
    {
        for (int n = 2 ; n <= 6 ; ++n) {
            auto b = prism_bounds(complete_graph(n));
            CHECK(b.lower == n);
            CHECK(b.upper == n + 1);
            CHECK(max_gp(complementary_prism(complete_graph(n))).value == n);
        }
        CHECK(prism_bounds(cycle_graph(5)).upper == 6);
        auto e2 = prism_bounds(empty_graph(2));
        CHECK(e2.upper == 2);
        CHECK(max_gp(complementary_prism(empty_graph(2))).value == 2);
    }

    TEST_CASE("limits and errors")
    {
        CHECK_THROWS_AS(max_gp(empty_graph(65)), Error);
        try {
            max_gp(empty_graph(65));
        }
        catch (const Error & e) {
            CHECK(e.kind() == ErrorKind::GraphTooLarge);
        }

        auto many = max_gp3(cycle_graph(7), true);
        REQUIRE(many.optima->size() > 3);
        SolverOptions tight;
        tight.limits.optima_cap = 3;
        try {
            max_gp3(cycle_graph(7), true, tight);
            FAIL("expected TooManyOptima");
        }
        catch (const Error & e) {
            CHECK(e.kind() == ErrorKind::TooManyOptima);
        }

        SolverOptions expired;
        expired.deadline = Clock::now() - std::chrono::seconds(1);
        try {
            max_gp(complementary_prism(gk_chain(8)), expired);
            FAIL("expected Timeout");
        }
        catch (const Error & e) {
            CHECK(e.kind() == ErrorKind::Timeout);
        }
    }

    TEST_CASE("diameter-2 and bipartite formulas")
    {
        int checked_diam2 = 0, checked_bipartite = 0;
        for (int i = 0 ; i < 300 ; ++i) {
            Rng rng(instance_seed(26, std::uint64_t(i)));
            int n = 3 + int(uniform_below(rng, 7));
            auto g = random_connected_gnp(rng, n, 0.3 + 0.2 * (i % 3));
            if (metric_summary(g).diameter == 2) {
                ++checked_diam2;
                CHECK(max_gp(g).value == std::max(max_clique(g).value, max_cluster_set(g).value));
            }
            auto b = random_connected_bipartite(rng, 3 + int(uniform_below(rng, 10)), 0.6);
            auto diam = metric_summary(b).diameter;
            if (diam == 2 || diam == 3) {
                ++checked_bipartite;
                CHECK(max_gp(b).value == independence_number(b));
            }
        }
        CHECK(checked_diam2 > 50);
        CHECK(checked_bipartite > 50);
    }

    TEST_CASE("determinism across runs and threads")
    {
        auto g = complementary_prism(gk_chain(5));
        auto first = max_gp(g);
        std::vector<GpResult> parallel(4);
        {
            std::vector<std::jthread> threads;
            for (auto & slot : parallel)
                threads.emplace_back([&] { slot = max_gp(g); });
        }
        for (auto & r : parallel) {
            CHECK(r.value == first.value);
            CHECK(r.witness == first.witness);
        }
    }
}
