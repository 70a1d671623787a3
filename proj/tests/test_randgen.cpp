#include "doctest.h"

#include <algorithm>
#include <cmath>

#include "antidim/randgen.hpp"

using namespace antidim;

TEST_SUITE_BEGIN("randgen");

TEST_CASE("per-index generation is reproducible bit for bit") {
    RandomModelConfig cfg;
    cfg.model = RandomModel::BarabasiAlbert;
    cfg.n = 40;
    cfg.m = 2;
    cfg.seed = 12345;
    for (std::uint64_t i : {0ull, 7ull, 991ull}) {
        const Graph a = generate(cfg, i);
        const Graph b = generate(cfg, i);
        CHECK(a.edges() == b.edges());
    }
    CHECK(generate(cfg, 0).edges() != generate(cfg, 1).edges());
}

TEST_CASE("barabasi_albert") {
    SUBCASE("m=1 always grows trees") {
        for (std::uint64_t seed = 0; seed < 25; ++seed) {
            const Graph g = barabasi_albert(12, 1, seed);
            CHECK(g.edge_count() == 11);
            CHECK(g.is_tree());
        }
    }
    SUBCASE("edge count follows the growth rule") {
        // K_3 seed plus 2 edges per newcomer: 3 + 2(n-3)
        for (std::uint64_t seed = 0; seed < 25; ++seed)
            CHECK(barabasi_albert(11, 2, seed).edge_count() == 19);
    }
    SUBCASE("n = m+1 yields the complete seed clique") {
        CHECK(barabasi_albert(4, 3, 9).is_complete());
    }
    SUBCASE("parameter validation") {
        CHECK_THROWS_AS(barabasi_albert(5, 0, 1), InvalidGraphError);
        CHECK_THROWS_AS(barabasi_albert(5, 5, 1), InvalidGraphError);
    }
}

TEST_CASE("gnm") {
    CHECK(gnm(6, 15, 3).is_complete());
    CHECK(gnm(6, 0, 3).edge_count() == 0);
    for (std::uint64_t seed = 0; seed < 25; ++seed) {
        const Graph g = gnm(13, 34, seed);
        CHECK(g.edge_count() == 34);
        CHECK(g.density() == doctest::Approx(34.0 / 78.0));
    }
    CHECK_THROWS_AS(gnm(4, 7, 1), InvalidGraphError);
}

TEST_CASE("gnp") {
    CHECK(gnp(6, 1.0, 4).is_complete());
    CHECK(gnp(6, 0.0, 4).edge_count() == 0);
    CHECK_THROWS_AS(gnp(4, 1.5, 1), InvalidGraphError);

    SUBCASE("edge-count mean within three standard errors") {
        const int n = 12;
        const double p = 0.3;
        const double pairs = n * (n - 1) / 2.0;
        const int draws = 10000;
        double total = 0;
        for (int i = 0; i < draws; ++i) total += static_cast<double>(gnp(n, p, 555000 + i).edge_count());
        const double mean = total / draws;
        const double se = std::sqrt(pairs * p * (1 - p) / draws);
        CHECK(std::abs(mean - p * pairs) <= 3 * se);
    }
}

TEST_CASE("preferential attachment is heavier-tailed than the uniform model") {
    const int draws = 1000;
    const int n = 100;
    std::vector<int> ba_max, gnm_max;
    for (int i = 0; i < draws; ++i) {
        ba_max.push_back(barabasi_albert(n, 2, 42000 + i).max_degree());
        gnm_max.push_back(gnm(n, 197, 43000 + i).max_degree());  // matched edge count
    }
    std::sort(ba_max.begin(), ba_max.end());
    std::sort(gnm_max.begin(), gnm_max.end());
    CHECK(ba_max[draws / 2] > gnm_max[draws / 2]);
}

TEST_CASE("config validation and names") {
    RandomModelConfig cfg;
    cfg.model = RandomModel::Gnm;
    cfg.n = 5;
    cfg.m = 11;
    CHECK_THROWS_AS(validate(cfg), InvalidGraphError);
    CHECK(model_from_name("gnp") == RandomModel::Gnp);
    CHECK(model_name(RandomModel::BarabasiAlbert) == "ba");
    CHECK_THROWS_AS(model_from_name("what"), InvalidGraphError);
}

TEST_SUITE_END();
