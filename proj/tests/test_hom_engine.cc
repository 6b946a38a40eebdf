#include <doctest.h>

#include <homdist/errors.hh>
#include <homdist/hom_engine.hh>
#include <homdist/oracle.hh>
#include <homdist/random_graphs.hh>

#include <cmath>
#include <map>

using namespace homdist;

TEST_CASE("tree counts")
{
    CHECK(count_homs_tree(path_graph(3), complete_graph(3)) == 12);
    CHECK(count_homs_tree(star_graph(3), complete_graph(2)) == 2);
    CHECK(count_homs_tree(empty_graph(1), cycle_graph(5)) == 5);
    auto host = Graph{4, {{0, 1}, {1, 2}, {1, 3}}};
    CHECK(count_homs_tree(complete_graph(2), host) == 2 * host.size());
    CHECK_THROWS_AS(count_homs_tree(cycle_graph(3), host), DataError);

    // 50 * 49^11 does not fit in 64 bits.
    BigInt expected = 50;
    for (int i = 0; i < 11; ++i)
        expected *= 49;
    CHECK(count_homs_tree(star_graph(11), complete_graph(50)) == expected);
}

TEST_CASE("cycle counts")
{
    CHECK(count_homs_cycle(3, complete_graph(3)) == 6);
    CHECK(count_homs_cycle(4, complete_graph(2)) == 2);
    CHECK(count_homs_cycle(3, cycle_graph(4)) == 0);
    CHECK_THROWS_AS(count_homs_cycle(2, complete_graph(3)), DataError);
    CHECK(count_homs(cycle_graph(5), complete_graph(4)) == count_homs_cycle(5, complete_graph(4)));
    CHECK_THROWS_AS(count_homs(complete_graph(4), complete_graph(4)), UnsupportedError);
}

TEST_CASE("cost matrices validate their entries")
{
    CHECK_THROWS_AS((CostMatrix{2, 2, {0.0, 1.0, 2.0}}), DataError);
    CHECK_THROWS_AS((CostMatrix{1, 2, {0.0, -1.0}}), DataError);
    CHECK_THROWS_AS((CostMatrix{1, 1, {std::nan("")}}), DataError);
    auto cost = CostMatrix{2, 2, {0.3, 0.1, 0.2, 0.4}};
    CHECK_THROWS_AS(min_bottleneck_hom(complete_graph(2), complete_graph(3), cost), DataError);
}

TEST_CASE("bottleneck examples")
{
    auto zero = CostMatrix{3, 3, std::vector<double>(9, 0.0)};
    auto same = min_bottleneck_hom(cycle_graph(3), cycle_graph(3), zero);
    CHECK(same.value == ExtendedReal{0.0});
    REQUIRE(same.witness);
    CHECK(same.witness->map == std::vector<Vertex>{0, 1, 2});

    auto none = min_bottleneck_hom(cycle_graph(3), cycle_graph(4), CostMatrix{3, 4, std::vector<double>(12, 1.0)});
    CHECK(none.value.is_infinite());
    CHECK_FALSE(none.witness);

    auto k2 = min_bottleneck_hom(complete_graph(2), complete_graph(2), CostMatrix{2, 2, {0.3, 0.1, 0.2, 0.4}});
    CHECK(k2.value == ExtendedReal{0.2});
    REQUIRE(k2.witness);
    CHECK(k2.witness->map == std::vector<Vertex>{1, 0});
}

TEST_CASE("general patterns")
{
    // K4 minus an edge into K4 with costs favouring vertex 3.
    Graph diamond{4, {{0, 1}, {0, 2}, {1, 2}, {1, 3}, {2, 3}}};
    std::vector<double> c(16, 1.0);
    c[0 * 4 + 3] = 0.0;
    c[3 * 4 + 3] = 0.0;
    auto result = min_bottleneck_hom(diamond, complete_graph(4), CostMatrix{4, 4, c});
    CHECK(result.value == ExtendedReal{1.0});
    REQUIRE(result.witness);
    CHECK(is_homomorphism(diamond, complete_graph(4), *result.witness));

    auto big = complete_graph(13);
    CHECK_THROWS_AS(min_bottleneck_hom(big, big, CostMatrix{13, 13, std::vector<double>(169, 0.0)}), UnsupportedError);

    // K6 into K5 has no homomorphism, and proving it needs more than a handful of nodes.
    CHECK_THROWS_AS(min_bottleneck_hom(complete_graph(6), complete_graph(5), CostMatrix{6, 5, std::vector<double>(30, 0.0)}, SearchBudget{10}),
        BudgetExceeded);
    CHECK(min_bottleneck_hom(complete_graph(6), complete_graph(5), CostMatrix{6, 5, std::vector<double>(30, 0.0)}).value.is_infinite());
}

namespace
{
    auto frequencies(const HomSample & sample) -> std::map<std::vector<Vertex>, int>
    {
        std::map<std::vector<Vertex>, int> counts;
        for (const auto & h : sample.maps)
            ++counts[h.map];
        return counts;
    }

    auto check_uniform(const Graph & pattern, const Graph & host, int per_map, std::uint64_t seed) -> void
    {
        auto homs = oracle::enumerate_homs(pattern, host);
        auto total = static_cast<int>(homs.size()) * per_map;
        auto sample = sample_homs(pattern, host, total, seed);
        REQUIRE(sample.maps.size() == static_cast<size_t>(total));
        auto counts = frequencies(sample);
        double p = 1.0 / static_cast<double>(homs.size());
        double sigma = std::sqrt(total * p * (1 - p));
        for (const auto & h : homs)
            CHECK(std::abs(counts[h.map] - per_map) <= 5 * sigma);
        CHECK(counts.size() == homs.size());
    }
}

TEST_CASE("sampling")
{
    auto k2 = sample_homs(complete_graph(2), complete_graph(2), 100, 5);
    CHECK(frequencies(k2).size() == 2);
    CHECK(k2.proposal == Proposal::tree_dp);

    check_uniform(path_graph(3), complete_graph(3), 100, 1);
    check_uniform(cycle_graph(4), complete_graph(3), 100, 2);
    check_uniform(star_graph(3), path_graph(4), 100, 3);

    auto empty = sample_homs(cycle_graph(3), cycle_graph(4), 10, 1);
    CHECK(empty.hom_empty);
    CHECK(empty.maps.empty());

    CHECK_THROWS_AS(sample_homs(path_graph(2), path_graph(2), 0, 1), DataError);
}

TEST_CASE("restart sampling reaches every homomorphism")
{
    Graph pattern{4, {{0, 1}, {0, 2}, {1, 2}, {2, 3}}};
    auto host = complete_graph(4);
    auto sample = sample_homs(pattern, host, 2000, 11);
    CHECK(sample.proposal == Proposal::restart_backtrack);
    auto counts = frequencies(sample);
    CHECK(counts.size() == oracle::enumerate_homs(pattern, host).size());
    for (const auto & h : sample.maps)
        CHECK(is_homomorphism(pattern, host, h));
}

TEST_CASE("sampled maps are always homomorphisms")
{
    auto rng = CounterRng{41};
    for (int i = 0; i < 60; ++i) {
        Graph pattern;
        switch (i % 3) {
        case 0: pattern = random_tree(1 + static_cast<int>(rng.uniform_below(6)), rng); break;
        case 1: pattern = cycle_graph(3 + static_cast<int>(rng.uniform_below(4))); break;
        default: pattern = random_graph(1 + static_cast<int>(rng.uniform_below(5)), 0.5, rng); break;
        }
        auto host = random_graph(1 + static_cast<int>(rng.uniform_below(7)), 0.6, rng);
        auto sample = sample_homs(pattern, host, 20, rng());
        CHECK(sample.hom_empty == (oracle::count_homs(pattern, host) == 0));
        for (const auto & h : sample.maps)
            CHECK(is_homomorphism(pattern, host, h));
    }
}

TEST_CASE("pattern sampling")
{
    for (std::uint64_t s = 0; s < 20; ++s)
        CHECK(sample_pattern(1, s) == empty_graph(1));

    CounterRng rng{13};
    int single = 0, edge = 0, pair = 0;
    for (int i = 0; i < 10000; ++i) {
        auto g = sample_pattern(2, rng);
        if (g.order() == 1)
            ++single;
        else if (g.size() == 1)
            ++edge;
        else
            ++pair;
    }
    // 5 sigma bounds for p = 1/2 and p = 1/4 at 10000 draws.
    CHECK(std::abs(single - 5000) <= 250);
    CHECK(std::abs(edge - 2500) <= 217);
    CHECK(std::abs(pair - 2500) <= 217);

    CHECK(sample_pattern(5, 99) == sample_pattern(5, 99));
    CHECK_THROWS_AS(sample_pattern(0, 1), DataError);
}
