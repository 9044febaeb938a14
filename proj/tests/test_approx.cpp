#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "recon/approx.hpp"
#include "recon/generators.hpp"
#include "test_util.hpp"

using namespace recon;

TEST_CASE("factor one degenerates to exact distances") {
    Graph g = testutil::f6();
    auto d = all_pairs_distances(g);
    CountingOracle o(d);
    Rng rng(3);
    auto m = approx_reconstruct(o, 6, 1.0, rng);
    CHECK(m.n == 6);
    for (int u = 0; u < 6; ++u)
        for (int v = 0; v < 6; ++v) CHECK(m.est.at(u, v) == d.at(u, v));
    auto rep = verify_approx(m, d);
    CHECK(rep.ok);
    CHECK(rep.worst_ratio == doctest::Approx(1.0));
    CHECK(rep.violations == 0);
}

TEST_CASE("one lucky sample finishes a wide star") {
    // Hub 0 with four leaves; with f=4 the hub's ball swallows the whole
    // graph, so a first sample landing on the hub settles every pair.
    Graph star(5, {{0, 1}, {0, 2}, {0, 3}, {0, 4}});
    auto d = all_pairs_distances(star);
    std::uint64_t seed = 0;
    while (Rng(seed).index(5) != 0) ++seed;

    CountingOracle o(d);
    Rng rng(seed);
    auto m = approx_reconstruct(o, 5, 4.0, rng);
    CHECK(m.samples == 1);
    CHECK(o.stats().distinct == 4);
    CHECK(verify_approx(m, d).ok);
    // Leaf-to-leaf entries come from the ball rule, not the true distance.
    CHECK(m.est.at(1, 2) == 1);
    CHECK(d.at(1, 2) == 2);
}

TEST_CASE("estimates stay sandwiched on random graphs") {
    for (unsigned seed = 0; seed < 12; ++seed) {
        int n = 48;
        Graph g = gen_bounded_degree(n, 4, seed + 70);
        auto d = all_pairs_distances(g);
        for (double f : {2.0, std::sqrt(static_cast<double>(n))}) {
            CountingOracle o(d);
            Rng rng(mix_seed(seed, static_cast<std::uint64_t>(f * 100)));
            auto m = approx_reconstruct(o, n, f, rng);
            auto rep = verify_approx(m, d);
            CHECK(rep.ok);
            CHECK(rep.violations == 0);
            CHECK(rep.worst_ratio <= f + 1e-9);
            CHECK(m.samples >= 1);
        }
    }
}

TEST_CASE("every entry gets defined") {
    Graph g = gen_outerplanar(30, 4, 2);
    CountingOracle o(all_pairs_distances(g));
    Rng rng(8);
    auto m = approx_reconstruct(o, 30, 3.0, rng);
    for (int u = 0; u < 30; ++u) {
        CHECK(m.est.at(u, u) == 0);
        for (int v = 0; v < 30; ++v)
            if (u != v) CHECK(m.est.at(u, v) >= 1);
    }
}

TEST_CASE("verification flags bad estimates") {
    Graph p5 = testutil::path_graph(5);
    auto d = all_pairs_distances(p5);

    // All-ones off the diagonal is exactly on the f=4 boundary for P5.
    {
        std::vector<std::int32_t> flat(25, 1);
        for (int u = 0; u < 5; ++u) flat[static_cast<std::size_t>(u) * 5 + static_cast<std::size_t>(u)] = 0;
        ApproxMetric m{5, 4.0, DistanceMatrix(5, flat), 1};
        auto rep = verify_approx(m, d);
        CHECK(rep.ok);
        CHECK(rep.worst_ratio == doctest::Approx(4.0));
    }
    // Overestimates break the lower bound.
    {
        std::vector<std::int32_t> flat(25);
        for (int u = 0; u < 5; ++u)
            for (int v = 0; v < 5; ++v)
                flat[static_cast<std::size_t>(u) * 5 + static_cast<std::size_t>(v)] =
                    u == v ? 0 : d.at(u, v) + 1;
        ApproxMetric m{5, 4.0, DistanceMatrix(5, flat), 1};
        auto rep = verify_approx(m, d);
        CHECK(!rep.ok);
        CHECK(rep.violations > 0);
    }
}

TEST_CASE("verification rejects mismatched sizes") {
    Graph p5 = testutil::path_graph(5);
    auto d5 = all_pairs_distances(p5);
    auto d4 = all_pairs_distances(testutil::path_graph(4));
    ApproxMetric m{4, 2.0, d4, 1};
    CHECK_THROWS_AS(verify_approx(m, d5), std::invalid_argument);
}

TEST_CASE("argument validation") {
    auto o = testutil::oracle_for(testutil::f6());
    Rng rng(0);
    CHECK_THROWS_AS(approx_reconstruct(o, 5, 2.0, rng), std::invalid_argument); // n mismatch
    CHECK_THROWS_AS(approx_reconstruct(o, 6, 0.5, rng), std::invalid_argument); // f < 1
}

TEST_CASE("large factors cut the query budget") {
    const int n = 64;
    const double f = 8.0;
    double total = 0.0;
    const int trials = 10;
    for (int seed = 0; seed < trials; ++seed) {
        Graph g = gen_bounded_degree(n, 4, static_cast<unsigned>(seed) + 900);
        CountingOracle o(all_pairs_distances(g));
        Rng rng(static_cast<std::uint64_t>(seed) + 31);
        approx_reconstruct(o, n, f, rng);
        total += static_cast<double>(o.stats().distinct);
    }
    double mean = total / trials;
    double budget = 8.0 * n * n * std::log(static_cast<double>(n)) / f;
    CHECK(mean <= budget);
}
