#include <doctest.h>

#include <homdist/errors.hh>
#include <homdist/features.hh>
#include <homdist/random_graphs.hh>

#include <algorithm>
#include <cmath>

using namespace homdist;

namespace
{
    auto row_of(const FeatureMatrix & m, int r) -> std::vector<double>
    {
        auto row = m.row(r);
        return {row.begin(), row.end()};
    }

    // trace((D^-1 A)^k) by explicit dense matrix powering.
    auto walk_trace(const Graph & g, int k) -> double
    {
        auto n = static_cast<size_t>(g.order());
        std::vector<std::vector<double>> p(n, std::vector<double>(n, 0.0)), power(n, std::vector<double>(n, 0.0));
        for (size_t i = 0; i < n; ++i) {
            power[i][i] = 1.0;
            for (auto w : g.neighbours(static_cast<Vertex>(i)))
                p[i][static_cast<size_t>(w)] = 1.0 / g.degree(static_cast<Vertex>(i));
        }
        for (int s = 0; s < k; ++s) {
            std::vector<std::vector<double>> next(n, std::vector<double>(n, 0.0));
            for (size_t i = 0; i < n; ++i)
                for (size_t m = 0; m < n; ++m)
                    for (size_t j = 0; j < n; ++j)
                        next[i][j] += power[i][m] * p[m][j];
            power = next;
        }
        double t = 0.0;
        for (size_t i = 0; i < n; ++i)
            t += power[i][i];
        return t;
    }
}

TEST_CASE("random walk encodings")
{
    auto c3 = rwpe(cycle_graph(3), 3);
    for (int v = 0; v < 3; ++v)
        CHECK(row_of(c3, v) == std::vector<double>{0.0, 0.5, 0.25});
    auto k2 = rwpe(complete_graph(2), 2);
    CHECK(row_of(k2, 0) == std::vector<double>{0.0, 1.0});
    CHECK(row_of(k2, 1) == std::vector<double>{0.0, 1.0});
    CHECK(row_of(rwpe(empty_graph(1), 2), 0) == std::vector<double>{0.0, 0.0});
    CHECK_THROWS_AS(rwpe(cycle_graph(3), 0), DataError);
}

TEST_CASE("column sums of the walk encoding are walk-matrix traces")
{
    auto rng = CounterRng{29};
    for (int i = 0; i < 30; ++i) {
        auto g = random_graph(1 + static_cast<int>(rng.uniform_below(9)), 0.5, rng);
        auto f = rwpe(g, 5);
        for (int k = 1; k <= 5; ++k) {
            double sum = 0.0;
            for (int v = 0; v < g.order(); ++v)
                sum += f.at(v, k - 1);
            CHECK(sum == doctest::Approx(walk_trace(g, k)).epsilon(1e-12));
        }
    }
}

TEST_CASE("shortest path encodings")
{
    auto p3 = spe(path_graph(3), 4, 3.0);
    CHECK(row_of(p3, 0) == std::vector<double>{1, 2, 3, 3});
    CHECK(row_of(p3, 2) == std::vector<double>{1, 2, 3, 3});
    CHECK(row_of(p3, 1) == std::vector<double>{1, 1, 3, 3});
    auto k2 = spe(complete_graph(2), 1, 2.0);
    CHECK(row_of(k2, 0) == std::vector<double>{1});
    auto c4 = spe(cycle_graph(4), 3, 4.0);
    for (int v = 0; v < 4; ++v)
        CHECK(row_of(c4, v) == std::vector<double>{1, 1, 2});
    CHECK(row_of(spe(empty_graph(2), 2, 2.0), 0) == std::vector<double>{2, 2});
    CHECK_THROWS_AS(spe(path_graph(5), 3, 2.0), DataError);
}

TEST_CASE("shortest path rows are sorted and bounded by the sentinel")
{
    auto rng = CounterRng{31};
    for (int i = 0; i < 40; ++i) {
        int n = 1 + static_cast<int>(rng.uniform_below(10));
        auto g = random_graph(n, 0.3, rng);
        auto f = spe(g, 6, n);
        for (int v = 0; v < n; ++v) {
            auto row = row_of(f, v);
            CHECK(std::is_sorted(row.begin(), row.end()));
            for (auto x : row) {
                CHECK(x >= 1.0);
                CHECK(x <= n);
            }
        }
    }
}

TEST_CASE("encodings are permutation equivariant")
{
    auto rng = CounterRng{37};
    for (int i = 0; i < 40; ++i) {
        int n = 1 + static_cast<int>(rng.uniform_below(10));
        auto g = random_graph(n, 0.4, rng);
        auto p = random_permutation(n, rng);
        auto h = apply_permutation(g, p);
        for (auto kind : {FeatureKind::rwpe, FeatureKind::spe}) {
            FeatureConfig config{kind, 4, std::nullopt};
            auto a = attach_features(g, config);
            auto b = attach_features(h, config);
            auto moved = apply_permutation(a, p);
            double worst = 0.0;
            for (int v = 0; v < n; ++v)
                for (int c = 0; c < 4; ++c)
                    worst = std::max(worst, std::abs(moved.features().row(v)[c] - b.features().row(v)[c]));
            INFO(to_string(kind), " n=", n);
            CHECK(worst <= 1e-12);
        }
    }
}

TEST_CASE("sentinel resolution")
{
    FeatureConfig spe_config{FeatureKind::spe, 4, std::nullopt};
    CHECK(resolve_sp_pad(spe_config, 5, 8) == 8.0);
    CHECK(resolve_sp_pad(FeatureConfig{FeatureKind::spe, 4, 20.0}, 5, 8) == 20.0);
    auto attached = attach_features(path_graph(3), spe_config);
    CHECK(attached.config().sp_pad == 3.0);
    CHECK(attach_features(path_graph(3), spe_config, 7.0).config().sp_pad == 7.0);
    CHECK_THROWS_AS(attach_features(path_graph(3), FeatureConfig{FeatureKind::external, 1, std::nullopt}), DataError);
}
