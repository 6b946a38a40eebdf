#include <homdist/random_graphs.hh>

#include <numeric>
#include <set>

using std::vector;

namespace homdist
{
    auto uniform_unit(CounterRng & rng) -> double
    {
        return static_cast<double>(rng() >> 11) * 0x1.0p-53;
    }

    auto random_graph(int n, double p, CounterRng & rng) -> Graph
    {
        vector<Edge> edges;
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                if (uniform_unit(rng) < p)
                    edges.push_back({u, v});
        return Graph{n, std::move(edges)};
    }

    auto tree_from_pruefer(const vector<int> & sequence) -> Graph
    {
        int n = static_cast<int>(sequence.size()) + 2;
        vector<int> degree(static_cast<size_t>(n), 1);
        for (auto x : sequence)
            ++degree[static_cast<size_t>(x)];

        std::set<int> leaves;
        for (int v = 0; v < n; ++v)
            if (degree[static_cast<size_t>(v)] == 1)
                leaves.insert(v);

        vector<Edge> edges;
        for (auto x : sequence) {
            int leaf = *leaves.begin();
            leaves.erase(leaves.begin());
            edges.push_back({leaf, x});
            if (--degree[static_cast<size_t>(x)] == 1)
                leaves.insert(x);
        }
        edges.push_back({*leaves.begin(), *std::next(leaves.begin())});
        return Graph{n, std::move(edges)};
    }

    auto random_tree(int n, CounterRng & rng) -> Graph
    {
        if (n == 1)
            return Graph{1, {}};
        if (n == 2)
            return Graph{2, {{0, 1}}};
        vector<int> sequence(static_cast<size_t>(n - 2));
        for (auto & x : sequence)
            x = static_cast<int>(rng.uniform_below(static_cast<std::uint64_t>(n)));
        return tree_from_pruefer(sequence);
    }

    auto random_permutation(int n, CounterRng & rng) -> Permutation
    {
        vector<Vertex> mapping(static_cast<size_t>(n));
        std::iota(mapping.begin(), mapping.end(), 0);
        shuffle(mapping, rng);
        return Permutation{std::move(mapping)};
    }

    auto random_integer_features(int n, int dim, int bound, CounterRng & rng) -> FeatureMatrix
    {
        vector<vector<double>> rows(static_cast<size_t>(n), vector<double>(static_cast<size_t>(dim)));
        for (auto & row : rows)
            for (auto & x : row)
                x = static_cast<double>(rng.uniform_below(static_cast<std::uint64_t>(bound)));
        return FeatureMatrix::from_rows(rows);
    }

    auto random_real_features(int n, int dim, CounterRng & rng) -> FeatureMatrix
    {
        vector<vector<double>> rows(static_cast<size_t>(n), vector<double>(static_cast<size_t>(dim)));
        for (auto & row : rows)
            for (auto & x : row)
                x = uniform_unit(rng);
        return FeatureMatrix::from_rows(rows);
    }
}
