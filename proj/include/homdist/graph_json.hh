#pragma once

#include <homdist/graph.hh>

#include <string>

namespace homdist
{
    /// Attributed graph schema: {"n": int, "edges": [[u,v],...], "features": [[...],...]},
    /// with optional "feature_kind", "dim" and "sp_pad" keys describing how the
    /// features were produced. Missing "features" means an n x 0 matrix.
    [[nodiscard]] auto attributed_graph_to_json(const AttributedGraph & g) -> std::string;
    [[nodiscard]] auto attributed_graph_from_json(const std::string & text) -> AttributedGraph;
}
