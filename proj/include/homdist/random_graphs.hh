#pragma once

#include <homdist/graph.hh>
#include <homdist/rng.hh>

namespace homdist
{
    /// G(n, p): each of the n(n-1)/2 pairs present independently with probability p.
    [[nodiscard]] auto random_graph(int n, double p, CounterRng & rng) -> Graph;

    /// Uniform labelled tree on n vertices via a random Pruefer sequence.
    [[nodiscard]] auto random_tree(int n, CounterRng & rng) -> Graph;

    [[nodiscard]] auto random_permutation(int n, CounterRng & rng) -> Permutation;

    /// n x dim matrix of integers drawn uniformly from [0, bound).
    [[nodiscard]] auto random_integer_features(int n, int dim, int bound, CounterRng & rng) -> FeatureMatrix;

    /// n x dim matrix of reals drawn uniformly from [0, 1).
    [[nodiscard]] auto random_real_features(int n, int dim, CounterRng & rng) -> FeatureMatrix;

    /// Uniform double in [0, 1) with 53 random bits.
    [[nodiscard]] auto uniform_unit(CounterRng & rng) -> double;

    /// The tree with the given Pruefer sequence on sequence.size() + 2 vertices.
    [[nodiscard]] auto tree_from_pruefer(const std::vector<int> & sequence) -> Graph;
}
