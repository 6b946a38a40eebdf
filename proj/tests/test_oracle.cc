#include <doctest.h>

#include <homdist/errors.hh>
#include <homdist/oracle.hh>
#include <homdist/random_graphs.hh>

using namespace homdist;

namespace
{
    auto constant_features(const Graph & g, double value) -> AttributedGraph
    {
        return AttributedGraph{g, FeatureMatrix{g.order(), 1, value}};
    }
}

TEST_CASE("enumeration")
{
    auto k2 = oracle::enumerate_homs(complete_graph(2), complete_graph(2));
    REQUIRE(k2.size() == 2);
    CHECK(k2[0].map == std::vector<Vertex>{0, 1});
    CHECK(k2[1].map == std::vector<Vertex>{1, 0});

    CHECK(oracle::enumerate_homs(cycle_graph(3), complete_graph(3)).size() == 6);
    CHECK(oracle::enumerate_homs(cycle_graph(3), cycle_graph(4)).empty());
    CHECK_THROWS_AS(oracle::count_homs(path_graph(9), complete_graph(2)), UnsupportedError);
}

TEST_CASE("enumeration is sorted, duplicate free and valid")
{
    auto rng = CounterRng{17};
    for (int i = 0; i < 30; ++i) {
        auto pattern = random_graph(1 + static_cast<int>(rng.uniform_below(4)), 0.5, rng);
        auto host = random_graph(1 + static_cast<int>(rng.uniform_below(5)), 0.6, rng);
        auto homs = oracle::enumerate_homs(pattern, host);
        for (size_t k = 0; k < homs.size(); ++k) {
            CHECK(is_homomorphism(pattern, host, homs[k]));
            if (k > 0)
                CHECK(homs[k - 1] < homs[k]);
        }
    }
}

TEST_CASE("edge homomorphisms are ordered adjacent pairs")
{
    auto rng = CounterRng{19};
    for (int i = 0; i < 40; ++i) {
        auto host = random_graph(1 + static_cast<int>(rng.uniform_below(8)), uniform_unit(rng), rng);
        CHECK(oracle::count_homs(complete_graph(2), host) == static_cast<std::uint64_t>(2 * host.size()));
    }
}

TEST_CASE("isomorphism")
{
    CHECK(oracle::are_isomorphic(cycle_graph(4), apply_permutation(cycle_graph(4), Permutation({2, 0, 3, 1}))));
    CHECK_FALSE(oracle::are_isomorphic(path_graph(4), star_graph(3)));
    CHECK(oracle::are_isomorphic(complete_graph(3), cycle_graph(3)));
    CHECK_FALSE(oracle::are_isomorphic(path_graph(3), path_graph(4)));
    CHECK(oracle::count_automorphisms(cycle_graph(5)) == 10);
    CHECK(oracle::count_automorphisms(star_graph(3)) == 6);
}

TEST_CASE("bidirectional distortion")
{
    auto c3 = constant_features(cycle_graph(3), 0.0);
    CHECK(oracle::bidirectional_distortion(c3, c3, Norm::l2) == ExtendedReal{0.0});
    CHECK(oracle::bidirectional_distortion(c3, constant_features(cycle_graph(4), 0.0), Norm::l2).is_infinite());

    AttributedGraph a{complete_graph(2), FeatureMatrix::from_rows({{0.0}, {1.0}})};
    AttributedGraph b{complete_graph(2), FeatureMatrix::from_rows({{0.0}, {0.5}})};
    CHECK(oracle::bidirectional_distortion(a, b, Norm::l2) == ExtendedReal{0.5});
    CHECK(oracle::one_sided_distortion(a, b, Norm::l2) == ExtendedReal{0.5});

    AttributedGraph wide{complete_graph(2), FeatureMatrix{2, 2}};
    CHECK_THROWS_AS((void) oracle::bidirectional_distortion(a, wide, Norm::l2), DataError);
}
