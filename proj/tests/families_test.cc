#include "oracles.hh"

#include <gpprism/error.hh>
#include <gpprism/families.hh>
#include <gpprism/graph.hh>
#include <gpprism/metric.hh>
#include <gpprism/structure.hh>

#include <doctest.h>

using namespace gpprism;

TEST_SUITE("families")
{
    TEST_CASE("basic families")
    {
        CHECK(path_graph(4).edges() == std::vector<Edge>{ { 0, 1 }, { 1, 2 }, { 2, 3 } });
        CHECK(cycle_graph(5).adjacent(4, 0));
        CHECK(complete_graph(5).edge_count() == 10);
        CHECK(empty_graph(5).edge_count() == 0);

        auto k123 = generate(FamilySpec{ Family::CompleteMultipartite, { 1, 2, 3 } });
        CHECK(k123.graph.edge_count() == 1 * 2 + 1 * 3 + 2 * 3);
        CHECK(k123.named_sets.at("part2") == VertexSet::of(6, { 1, 2 }));

        auto star = generate(FamilySpec{ Family::Star, { 4 } }).graph;
        CHECK(star.degree(0) == 4);

        auto ds = generate(FamilySpec{ Family::DoubleStar, { 2, 3 } }).graph;
        CHECK(ds.size() == 7);
        CHECK(classify(ds).is_tree);
        CHECK(metric_summary(ds).diameter == 3);

        CHECK_THROWS_AS(cycle_graph(2), Error);
        CHECK_THROWS_AS(generate(FamilySpec{ Family::Grid, { 3 } }), Error);
        CHECK_THROWS_AS(generate(FamilySpec{ Family::Hypercube, { 8 } }), Error);
    }

    TEST_CASE("names round trip")
    {
        for (auto name : { "path", "cycle", "complete", "empty", "multipartite", "star", "double-star", "tree",
                "grid", "hypercube", "petersen", "fig1", "fig2-g1", "fig2-g2", "gk", "clique-path" })
            CHECK(family_name(family_from_name(name)) == name);
        CHECK_THROWS_AS(family_from_name("wheel"), Error);
    }

    TEST_CASE("Pruefer decoding")
    {
        // all-equal sequence gives a star centred there
        auto star = tree_from_pruefer({ 3, 3, 3 });
        CHECK(star.size() == 5);
        CHECK(star.degree(3) == 4);

        // degree of v is one more than its occurrences, and the result is a tree
        std::vector<int> seq{ 0, 4, 4, 2, 6, 0 };
        auto t = tree_from_pruefer(seq);
        CHECK(classify(t).is_tree);
        for (int v = 0 ; v < t.size() ; ++v)
            CHECK(t.degree(v) == 1 + int(std::count(seq.begin(), seq.end(), v)));

        // the classic example: sequence 3 3 3 4 on six vertices
        auto c = tree_from_pruefer({ 3, 3, 3, 4 });
        CHECK(c.edges() == std::vector<Edge>{ { 0, 3 }, { 1, 3 }, { 2, 3 }, { 3, 4 }, { 4, 5 } });

        CHECK(tree_from_pruefer({}).edge_count() == 1);
        CHECK_THROWS_AS(tree_from_pruefer({ 5 }), Error);
    }

    TEST_CASE("grid and hypercube")
    {
        auto grid = generate(FamilySpec{ Family::Grid, { 3, 4 } }).graph;
        CHECK(grid.size() == 12);
        CHECK(grid.edge_count() == 3 * 3 + 4 * 2);
        auto q4 = generate(FamilySpec{ Family::Hypercube, { 4 } }).graph;
        CHECK(q4.size() == 16);
        CHECK(q4.edge_count() == 32);
    }

    TEST_CASE("Petersen equals the prism of C5 edge for edge")
    {
        auto p = generate(FamilySpec{ Family::Petersen, {} });
        auto prism = complementary_prism(cycle_graph(5));
        CHECK(p.graph.edges() == prism.edges());
        CHECK(p.named_sets.at("outer") == VertexSet::of(10, { 0, 1, 2, 3, 4 }));
    }

    TEST_CASE("figure graphs")
    {
        auto fig1 = generate(FamilySpec{ Family::Fig1DoubleStar, {} });
        CHECK(fig1.graph.edges() == std::vector<Edge>{ { 0, 1 }, { 0, 2 }, { 0, 3 }, { 1, 4 }, { 1, 5 } });
        CHECK(fig1.graph.label(2) == "u1");
        CHECK(fig1.named_sets.at("centers") == VertexSet::of(6, { 0, 1 }));

        auto g1 = generate(FamilySpec{ Family::Fig2G1, {} }).graph;
        CHECK(g1.edges() == std::vector<Edge>{ { 0, 1 }, { 0, 2 }, { 0, 3 }, { 1, 2 }, { 1, 4 }, { 2, 5 } });
        auto g2 = generate(FamilySpec{ Family::Fig2G2, {} }).graph;
        CHECK(g2.edge_count() == 7);
        CHECK(g2.adjacent(3, 1));
    }

    TEST_CASE("chain")
    {
        auto k0 = generate(FamilySpec{ Family::GkChain, { 0 } });
        CHECK(oracle::isomorphic(k0.graph, complete_graph(3)));
        CHECK(k0.graph.labels() == std::vector<std::string>{ "v1", "u1", "v2" });

        auto k3 = generate(FamilySpec{ Family::GkChain, { 3 } });
        CHECK(k3.graph.size() == 9);
        auto bd = block_decomposition(k3.graph);
        CHECK(bd.blocks.size() == 4);
        for (int i = 1 ; i <= 4 ; ++i)
            CHECK(bd.blocks[i - 1] == VertexSet::of(9, { 2 * (i - 1), 2 * (i - 1) + 1, 2 * i }));
        CHECK(bd.cut_vertices == VertexSet::of(9, { 2, 4, 6 }));

        for (int k = 0 ; k <= 8 ; ++k) {
            auto a = generate(FamilySpec{ Family::GkChain, { k } });
            auto & s = a.named_sets;
            CHECK(classify(a.graph).is_block_graph);
            CHECK((s.at("E") | s.at("A")) == VertexSet::full(a.graph.size()));
            CHECK(! s.at("E").intersects(s.at("A")));
            CHECK(s.at("E").size() == k + 3);
            CHECK(s.at("A").size() == k);
            CHECK((s.at("X") | s.at("Y")) == s.at("A"));
            CHECK(s.at("X").size() >= s.at("Y").size());
            CHECK(is_independent(a.graph, s.at("X")));
            CHECK(s.at("A") == block_decomposition(a.graph).cut_vertices);
            CHECK(s.at("E") == block_decomposition(a.graph).simplicial_vertices);
            if (k >= 2)
                CHECK(! classify(a.graph).is_split);
        }
        CHECK(metric_summary(gk_chain(5)).radius > 2);
    }

    TEST_CASE("clique path")
    {
        auto a = generate(FamilySpec{ Family::CliquePath, { 2, 1, 2, 3, 1 } });
        auto & g = a.graph;
        CHECK(g.size() == 3 + 2 + 3 + 1);
        auto m = metric_summary(g);
        CHECK(m.radius == 2);
        CHECK(m.center == VertexSet::of(g.size(), { 1 }));
        CHECK(neighborhoods(g, 1).open == VertexSet::of(g.size(), { 0, 2 }));
        CHECK(a.named_sets.at("u_side").size() == 5);
        CHECK(is_clique(g, a.named_sets.at("u_clique2")));
        CHECK_THROWS_AS(generate(FamilySpec{ Family::CliquePath, { 0, 1, 1 } }), Error);
        CHECK_THROWS_AS(generate(FamilySpec{ Family::CliquePath, { 1, 1, 2 } }), Error);
    }
}
