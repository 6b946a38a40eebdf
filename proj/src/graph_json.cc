#include <homdist/errors.hh>
#include <homdist/graph_json.hh>

#include <json.hpp>

using nlohmann::json;
using std::string;
using std::vector;

namespace homdist
{
    auto attributed_graph_to_json(const AttributedGraph & g) -> string
    {
        json doc;
        doc["n"] = g.order();
        auto edges = json::array();
        for (auto [u, v] : g.graph().edges())
            edges.push_back({u, v});
        doc["edges"] = edges;
        auto features = json::array();
        for (Vertex v = 0; v < g.order(); ++v) {
            auto row = g.features().row(v);
            features.push_back(vector<double>(row.begin(), row.end()));
        }
        doc["features"] = features;
        doc["feature_kind"] = to_string(g.config().kind);
        doc["dim"] = g.config().dim;
        if (g.config().sp_pad)
            doc["sp_pad"] = *g.config().sp_pad;
        return doc.dump();
    }

    auto attributed_graph_from_json(const string & text) -> AttributedGraph
    {
        json doc;
        try {
            doc = json::parse(text);
        }
        catch (const json::parse_error & e) {
            throw ParseError(string("invalid attributed-graph JSON: ") + e.what(), e.byte);
        }

        try {
            int n = doc.at("n").get<int>();
            vector<Edge> edges;
            for (const auto & e : doc.value("edges", json::array())) {
                if (! e.is_array() || e.size() != 2)
                    throw DataError("each edge must be a [u, v] pair");
                edges.emplace_back(e[0].get<int>(), e[1].get<int>());
            }
            Graph graph{n, std::move(edges)};

            vector<vector<double>> rows;
            if (doc.contains("features"))
                rows = doc["features"].get<vector<vector<double>>>();
            else
                rows.assign(static_cast<std::size_t>(n), {});
            auto features = FeatureMatrix::from_rows(rows);
            if (features.rows() == 0)
                features = FeatureMatrix(n, 0);

            FeatureConfig config{FeatureKind::external, features.cols(), std::nullopt};
            if (doc.contains("feature_kind"))
                config.kind = parse_feature_kind(doc["feature_kind"].get<string>());
            if (doc.contains("sp_pad"))
                config.sp_pad = doc["sp_pad"].get<double>();
            return AttributedGraph{std::move(graph), std::move(features), config};
        }
        catch (const json::exception & e) {
            throw DataError(string("attributed-graph JSON does not match schema: ") + e.what());
        }
    }
}
