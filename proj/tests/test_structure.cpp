#include "doctest.h"

#include <algorithm>

#include "antidim/antiresolve.hpp"
#include "antidim/enumerate.hpp"
#include "antidim/families.hpp"
#include "antidim/structure.hpp"
#include "support/brute.hpp"

using namespace antidim;

TEST_SUITE_BEGIN("structure");

TEST_CASE("find_nontrivial_module") {
    SUBCASE("p4 is prime") {
        const auto w = find_nontrivial_module(path(4));
        CHECK(w.is_prime);
        CHECK_FALSE(w.module.has_value());
    }
    SUBCASE("c4 has the antipodal module") {
        const auto w = find_nontrivial_module(cycle(4));
        REQUIRE(w.module.has_value());
        CHECK(*w.module == std::vector<Vertex>{0, 2});
        CHECK_FALSE(w.is_prime);
    }
    SUBCASE("complete graphs have an (n-1)-module") {
        const auto w = find_nontrivial_module(complete(5));
        REQUIRE(w.module.has_value());
        CHECK(w.module->size() == 4);
        CHECK(w.kind == ModuleWitness::Kind::DegenerateRoot);
    }
    SUBCASE("disconnected graphs use a component union") {
        const auto w = find_nontrivial_module(build_graph(5, {{0, 1}, {2, 3}, {3, 4}}));
        REQUIRE(w.module.has_value());
        CHECK(w.kind == ModuleWitness::Kind::DegenerateRoot);
    }
    SUBCASE("k2 has only trivial modules") {
        CHECK(find_nontrivial_module(complete(2)).is_prime);
    }
}

TEST_CASE("module members are outside-indistinguishable") {
    for (std::uint64_t seed = 0; seed < 40; ++seed) {
        const Graph g = brute::random_connected(7, 0.45, 2200 + seed);
        const auto w = find_nontrivial_module(g);
        if (!w.module) continue;
        std::vector<char> in_m(static_cast<std::size_t>(g.order()), 0);
        for (Vertex v : *w.module) in_m[v] = 1;
        for (Vertex u : *w.module)
            for (Vertex v : *w.module)
                for (Vertex x = 0; x < g.order(); ++x)
                    if (!in_m[x]) CHECK(g.has_edge(u, x) == g.has_edge(v, x));
    }
}

TEST_CASE("module size lower-bounds the oracle antidimension") {
    for (std::uint64_t seed = 0; seed < 40; ++seed) {
        const Graph g = brute::random_connected(7, 0.5, 2400 + seed);
        const auto w = find_nontrivial_module(g);
        if (!w.module) continue;
        CHECK(adim_oracle(g).adim >= static_cast<int>(w.module->size()));
    }
}

TEST_CASE("find_twins") {
    CHECK(find_twins(complete(3)).size() == 3);
    CHECK(find_twins(path(4)).empty());
    const auto leaf_pairs = find_twins(star(4));
    CHECK(leaf_pairs == std::vector<std::pair<Vertex, Vertex>>{{1, 2}, {1, 3}, {2, 3}});
}

TEST_CASE("any_twin_pair agrees with the exhaustive scan") {
    for (std::uint64_t seed = 0; seed < 60; ++seed) {
        const Graph g = gnp(8, 0.35, 3300 + seed);
        const auto all = find_twins(g);
        const auto one = any_twin_pair(g);
        CHECK(all.empty() == !one.has_value());
        if (one) CHECK(std::find(all.begin(), all.end(), *one) != all.end());
    }
}

TEST_CASE("twin pair always yields a module witness") {
    for (std::uint64_t seed = 0; seed < 60; ++seed) {
        const Graph g = brute::random_connected(7, 0.5, 3400 + seed);
        if (find_twins(g).empty()) continue;
        CHECK_FALSE(find_nontrivial_module(g).is_prime);
    }
}

TEST_CASE("balancing_factor") {
    SUBCASE("star center") {
        const auto p = balancing_factor(star(4), 0);
        CHECK(p.balancing_factor == 3);
    }
    SUBCASE("path endpoint") { CHECK(balancing_factor(path(4), 0).balancing_factor == 1); }
    SUBCASE("p5 center") { CHECK(balancing_factor(path(5), 2).balancing_factor == 2); }
    SUBCASE("t_star attachment point has distinct branch depths") {
        const auto p = balancing_factor(t_star(), 2);
        CHECK(p.balancing_factor == 1);
        std::vector<int> eccs;
        for (const auto& [v, e] : p.branch_ecc) eccs.push_back(e);
        std::sort(eccs.begin(), eccs.end());
        CHECK(eccs == std::vector<int>{1, 2, 3});
    }
    SUBCASE("non-trees rejected") {
        CHECK_THROWS_AS(balancing_factor(cycle(4), 0), NotATreeError);
        CHECK_THROWS_AS(balancing_factor(build_graph(3, {{0, 1}}), 0), NotATreeError);
    }
}

TEST_CASE("tree_adim1_check") {
    CHECK(tree_adim1_check(t_star()).is_one);
    CHECK(tree_adim1_check(path(4)).is_one);
    const auto p5 = tree_adim1_check(path(5));
    CHECK_FALSE(p5.is_one);
    CHECK(p5.violator == 2);
}

TEST_CASE("is_geodetic") {
    CHECK(is_geodetic(t_star()));
    CHECK(is_geodetic(cycle(5)));
    CHECK_FALSE(is_geodetic(cycle(4)));
    CHECK(is_geodetic(petersen()));
    CHECK(is_geodetic(complete(5)));
}

TEST_CASE("sp_tree") {
    SUBCASE("a tree is its own shortest-path tree") {
        const Graph t = t_star();
        const auto sp = sp_tree(t, 3);
        const Graph back = sp.as_graph();
        CHECK(back.edges() == t.edges());
        CHECK(sp.branch_roots() == t.neighbors(3));
    }
    SUBCASE("c5 roots into a two-branch path") {
        const auto sp = sp_tree(cycle(5), 0);
        CHECK(sp.branch_roots() == std::vector<Vertex>{1, 4});
        CHECK(sp.descendants(1) == std::vector<Vertex>{2});
        const auto profile = balancing_factor(sp.as_graph(), 0);
        CHECK(profile.balancing_factor == 2);
    }
    SUBCASE("ambiguous parents rejected") {
        CHECK_THROWS_AS(sp_tree(cycle(4), 0), NotGeodeticError);
    }
}

TEST_CASE("geodetic_adim1_check") {
    CHECK(geodetic_adim1_check(path(4)));
    CHECK_FALSE(geodetic_adim1_check(cycle(5)));
    CHECK(geodetic_adim1_check(t_star()));
}

TEST_CASE("geodetic check is sufficient but not necessary") {
    // sufficiency: whenever every rooted shortest-path tree passes, the
    // graph really is 1-metric antidimensional (holds on all geodetic
    // graphs up to order 7)
    for (int n = 3; n <= 7; ++n) {
        enumerate_connected(n, [&](const Graph& g) {
            if (!is_geodetic(g) || !geodetic_adim1_check(g)) return;
            CHECK(adim1_check(g).verdict == Verdict::IsOne);
        });
    }

    // necessity fails: this block graph (a path 3-1-0-2-5-6 with vertex 4
    // joined to 1 and 0) has antidimension 1, yet its shortest-path tree
    // rooted at 1 carries two depth-1 branches and fails the tree test
    const Graph g = build_graph(7, {{0, 1}, {0, 2}, {0, 4}, {1, 3}, {1, 4}, {2, 5}, {5, 6}});
    CHECK(is_geodetic(g));
    CHECK(brute::adim(g) == 1);
    CHECK(adim1_check(g).verdict == Verdict::IsOne);
    CHECK_FALSE(geodetic_adim1_check(g));
    const Graph t1 = sp_tree(g, 1).as_graph();
    CHECK(brute::adim(t1) == 2);
    CHECK_FALSE(tree_adim1_check(t1).is_one);
}

TEST_CASE("connected k-ARS in trees") {
    // any antiresolving set with k >= 2 in a tree induces a connected subgraph
    std::vector<Graph> trees;
    for (int n = 4; n <= 8; ++n)
        enumerate_connected(n, [&](const Graph& g) {
            if (g.edge_count() == g.order() - 1) trees.push_back(g);
        });
    for (const Graph& t : trees) {
        const int n = t.order();
        const auto d = brute::floyd_warshall(t);
        for (std::uint32_t mask = 1; mask + 1 < (1u << n); ++mask) {
            if (brute::partition_k(d, n, mask) < 2) continue;
            std::vector<Vertex> members;
            for (Vertex v = 0; v < n; ++v)
                if (mask & (1u << v)) members.push_back(v);
            std::vector<Edge> edges;
            std::vector<Vertex> id(static_cast<std::size_t>(n), -1);
            for (std::size_t i = 0; i < members.size(); ++i) id[members[i]] = static_cast<Vertex>(i);
            for (Vertex v : members)
                for (Vertex w : t.neighbors(v))
                    if (id[w] >= 0 && v < w) edges.emplace_back(id[v], id[w]);
            CHECK(build_graph(static_cast<int>(members.size()), edges).is_connected());
        }
    }
}

TEST_CASE("block_graph_necessary") {
    SUBCASE("b2 satisfies all four yet is not weak") {
        const auto checks = block_graph_necessary(b_t(2));
        CHECK(checks.all());
        CHECK(adim_oracle(b_t(2)).adim >= 2);
    }
    SUBCASE("p4 satisfies all four") { CHECK(block_graph_necessary(path(4)).all()); }
    SUBCASE("star fails the twin-freeness item") {
        const auto checks = block_graph_necessary(star(4));
        CHECK_FALSE(checks.prime);
        CHECK_FALSE(checks.diam_odd);
        CHECK(checks.blocks_one_noncut);
        CHECK(checks.pendant_blocks_k2);
    }
    SUBCASE("non-block graphs rejected") {
        CHECK_THROWS_AS(block_graph_necessary(cycle(4)), NotBlockGraphError);
    }
}

TEST_CASE("biconnected_components") {
    const auto blocks = biconnected_components(b_t(2));
    CHECK(blocks.size() == 3);
    bool has_triangle = false;
    for (const auto& b : blocks) has_triangle |= b == std::vector<Vertex>{1, 2, 4};
    CHECK(has_triangle);
}

TEST_SUITE_END();
