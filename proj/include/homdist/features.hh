#pragma once

#include <homdist/graph.hh>

namespace homdist
{
    /// Random-walk positional encoding: column k-1 holds the k-step return
    /// probability [(D^-1 A)^k]_vv for k = 1..dim. Isolated vertices get zeros.
    [[nodiscard]] auto rwpe(const Graph & g, int dim) -> FeatureMatrix;

    /// Shortest-path encoding: row v lists the BFS distances from v to every
    /// other vertex (unreachable = sp_pad) in ascending order, truncated or
    /// padded with sp_pad to `dim` entries.
    [[nodiscard]] auto spe(const Graph & g, int dim, double sp_pad) -> FeatureMatrix;

    /// SPE sentinel used when two graphs of orders a and b are compared: the
    /// configured value if any, otherwise max(a, b).
    [[nodiscard]] auto resolve_sp_pad(const FeatureConfig & config, int order_a, int order_b) -> double;

    /// Applies the configured attribute function. For SPE the sentinel is
    /// `sp_pad` when given, else the configured one, else the graph's order;
    /// the resolved value is recorded in the returned graph's config.
    [[nodiscard]] auto attach_features(const Graph & g, const FeatureConfig & config) -> AttributedGraph;
    [[nodiscard]] auto attach_features(const Graph & g, const FeatureConfig & config, double sp_pad) -> AttributedGraph;
}
