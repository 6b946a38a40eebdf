#include <doctest.h>

#include <homdist/distortion.hh>
#include <homdist/errors.hh>
#include <homdist/features.hh>
#include <homdist/oracle.hh>
#include <homdist/random_graphs.hh>

using namespace homdist;

namespace
{
    const FeatureConfig spe4{FeatureKind::spe, 4, std::nullopt};

    auto manual(std::vector<ExtendedReal> values, bool normalized, const std::string & checksum = "x") -> DistortionEmbedding
    {
        DistortionEmbedding e;
        e.values = std::move(values);
        e.normalized = normalized;
        e.family_checksum = checksum;
        return e;
    }
}

TEST_CASE("one-sided distortion")
{
    CHECK(distortion_to_pattern(cycle_graph(3), cycle_graph(3), spe4, Norm::l2) == ExtendedReal{0.0});
    CHECK(distortion_to_pattern(cycle_graph(4), cycle_graph(3), spe4, Norm::l2).is_infinite());

    FeatureConfig config{FeatureKind::spe, 2, 3.0};
    auto g = attach_features(complete_graph(3), config);
    auto p = attach_features(path_graph(3), config);
    auto expected = oracle::one_sided_distortion(p, g, Norm::l2);
    CHECK(distortion_to_pattern(g, p, Norm::l2) == expected);
    // Ends of P3 carry [1,2] and the middle [1,1]; every vertex of K3 carries [1,1].
    CHECK(expected == ExtendedReal{1.0});

    auto other = attach_features(path_graph(3), FeatureConfig{FeatureKind::rwpe, 2, std::nullopt});
    CHECK_THROWS_AS((void) distortion_to_pattern(g, other, Norm::l2), DataError);
}

TEST_CASE("embeddings")
{
    auto c3 = embed(cycle_graph(3), gen_cycles(3, 3), spe4, Norm::l2);
    CHECK(c3.values == std::vector<ExtendedReal>{0.0});
    CHECK(c3.family_checksum == gen_cycles(3, 3).checksum());
    CHECK_FALSE(c3.normalized);

    auto c4 = embed(cycle_graph(4), gen_cycles(3, 4), spe4, Norm::l2);
    REQUIRE(c4.values.size() == 2);
    CHECK(c4.values[0].is_infinite());
    CHECK(c4.values[1] == ExtendedReal{0.0});
}

TEST_CASE("embedding coordinates match the oracle for small trees")
{
    auto rng = CounterRng{43};
    for (int order = 1; order <= 4; ++order) {
        auto family = gen_trees(order);
        for (int i = 0; i < 10; ++i) {
            auto g = random_graph(1 + static_cast<int>(rng.uniform_below(6)), 0.5, rng);
            auto e = embed(g, family, spe4, Norm::l2);
            for (size_t m = 0; m < family.members.size(); ++m) {
                const auto & t = family.members[m];
                auto pad = resolve_sp_pad(spe4, g.order(), t.order());
                auto expected = oracle::one_sided_distortion(attach_features(t, spe4, pad), attach_features(g, spe4, pad), Norm::l2);
                CHECK(e.values[m] == expected);
            }
        }
    }
}

TEST_CASE("precomputed pattern features")
{
    FeatureConfig config{FeatureKind::rwpe, 3, std::nullopt};
    auto family = gen_cycles(3, 5);
    std::vector<AttributedGraph> patterns;
    for (const auto & c : family.members)
        patterns.push_back(attach_features(c, config));
    auto g = attach_features(complete_graph(5), config);
    CHECK(embed(g, family, patterns, Norm::l2).values == embed(complete_graph(5), family, config, Norm::l2).values);
    patterns.pop_back();
    CHECK_THROWS_AS((void) embed(g, family, patterns, Norm::l2), DataError);
}

TEST_CASE("pairwise distance")
{
    auto a = manual({0.0, 0.2}, true), b = manual({0.1, 0.5}, true);
    CHECK(pairwise_distance(a, a) == ExtendedReal{0.0});
    CHECK(pairwise_distance(a, b).value() == doctest::Approx(0.3).epsilon(1e-15));
    CHECK(pairwise_distance(a, b) == pairwise_distance(b, a));
    CHECK_THROWS_AS((void) pairwise_distance(a, manual({0.0, 0.2}, true, "y")), DataError);
    CHECK_THROWS_AS((void) pairwise_distance(a, manual({0.0, 0.2}, false)), DataError);
    CHECK_THROWS_AS((void) pairwise_distance(a, manual({0.0}, true)), DataError);

    ExtendedReal inf = infinity;
    CHECK(pairwise_distance(manual({inf, 1.0}, false), manual({inf, 1.5}, false)) == ExtendedReal{0.5});
    CHECK(pairwise_distance(manual({inf}, false), manual({1.0}, false)).is_infinite());
}

TEST_CASE("normalisation")
{
    ExtendedReal inf = infinity;
    auto single = normalize(std::vector{manual({3.0, 7.0}, false)});
    CHECK(single[0].values == std::vector<ExtendedReal>{0.0, 0.0});
    CHECK(single[0].normalized);

    auto spread = normalize(std::vector{manual({0.0}, false), manual({2.0}, false), manual({4.0}, false)});
    CHECK(spread[0].values[0] == ExtendedReal{0.0});
    CHECK(spread[1].values[0] == ExtendedReal{0.5});
    CHECK(spread[2].values[0] == ExtendedReal{1.0});

    auto with_inf = normalize(std::vector{manual({1.0}, false), manual({inf}, false)});
    CHECK(with_inf[0].values[0] == ExtendedReal{0.0});
    CHECK(with_inf[1].values[0] == ExtendedReal{1.0});

    CHECK_THROWS_AS((void) normalize(std::vector{manual({1.0}, false), manual({1.0}, false, "y")}), DataError);
    CHECK_THROWS_AS((void) normalize(single), DataError);
    CHECK(normalize(std::vector<DistortionEmbedding>{}).empty());
}

TEST_CASE("distinguish")
{
    auto a = manual({0.25}, true);
    CHECK_FALSE(distinguish(a, a, 1e-3));
    CHECK(distinguish(manual({0.0}, true), manual({0.5}, true), 1e-3));
    CHECK(distinguish(manual({0.0}, true), manual({1e-3}, true), 1e-3));
    CHECK_FALSE(distinguish(manual({0.0}, true), manual({0.0009}, true), 1e-3));
    CHECK_THROWS_AS((void) distinguish(manual({0.0}, false), manual({0.0}, false), 1e-3), DataError);
}

TEST_CASE("sampled embeddings")
{
    SampledEmbeddingConfig cfg;
    cfg.num_patterns = 0;
    CHECK_THROWS_AS((void) sampled_embed(cycle_graph(4), cfg, spe4), DataError);

    cfg.num_patterns = 30;
    cfg.homs_per_pattern = 10;
    cfg.seed = 5;
    auto g = Graph{4, {{0, 1}, {1, 2}, {2, 3}, {0, 2}}};
    auto first = sampled_embed(g, cfg, spe4);
    auto second = sampled_embed(g, cfg, spe4);
    CHECK(first == second);
    CHECK(first.to_text() == second.to_text());
    CHECK(first.entries.size() == 30);

    // A different host sees the same sampled patterns.
    auto other = sampled_embed(cycle_graph(5), cfg, spe4);
    for (size_t i = 0; i < first.entries.size(); ++i)
        CHECK(first.entries[i].pattern == other.entries[i].pattern);

    SampledEmbeddingConfig identity_cfg;
    identity_cfg.n_max = 1;
    identity_cfg.num_patterns = 5;
    identity_cfg.homs_per_pattern = 1;
    for (const auto & e : sampled_embed(empty_graph(1), identity_cfg, spe4).entries)
        CHECK(e.value == ExtendedReal{0.0});
}

TEST_CASE("hom-count vectors")
{
    CHECK(hom_count_vector(complete_graph(3), gen_cycles(3, 3)) == std::vector<BigInt>{6});
    CHECK(hom_count_vector(complete_graph(2), gen_cycles(3, 3)) == std::vector<BigInt>{0});
    auto g = Graph{5, {{0, 1}, {1, 2}, {3, 4}}};
    CHECK(hom_count_vector(g, gen_trees(2)) == std::vector<BigInt>{6});
    CHECK_THROWS_AS((void) hom_count_vector(g, custom_family({complete_graph(3)})), UnsupportedError);
}
