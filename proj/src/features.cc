#include <homdist/errors.hh>
#include <homdist/features.hh>

#include <algorithm>
#include <queue>

using std::size_t;
using std::vector;

namespace homdist
{
    namespace
    {
        auto check_dim(int dim) -> void
        {
            if (dim < 1)
                throw DataError("feature dimension must be at least 1, got " + std::to_string(dim));
        }
    }

    auto rwpe(const Graph & g, int dim) -> FeatureMatrix
    {
        check_dim(dim);
        int n = g.order();
        FeatureMatrix result(n, dim);
        vector<double> current(static_cast<size_t>(n)), next(static_cast<size_t>(n));
        for (Vertex start = 0; start < n; ++start) {
            if (g.degree(start) == 0)
                continue;
            std::fill(current.begin(), current.end(), 0.0);
            current[static_cast<size_t>(start)] = 1.0;
            for (int step = 0; step < dim; ++step) {
                // next = current * P with P[u][w] = 1/deg(u) for w in N(u).
                std::fill(next.begin(), next.end(), 0.0);
                for (Vertex u = 0; u < n; ++u) {
                    double mass = current[static_cast<size_t>(u)];
                    if (mass == 0.0 || g.degree(u) == 0)
                        continue;
                    double share = mass / g.degree(u);
                    for (auto w : g.neighbours(u))
                        next[static_cast<size_t>(w)] += share;
                }
                current.swap(next);
                result.at(start, step) = current[static_cast<size_t>(start)];
            }
        }
        return result;
    }

    auto spe(const Graph & g, int dim, double sp_pad) -> FeatureMatrix
    {
        check_dim(dim);
        int n = g.order();
        if (n > 0 && sp_pad < n - 1)
            throw DataError("SPE pad " + std::to_string(sp_pad) + " is below the largest possible distance " + std::to_string(n - 1));
        FeatureMatrix result(n, dim);
        vector<int> distance(static_cast<size_t>(n));
        vector<double> row;
        for (Vertex source = 0; source < n; ++source) {
            std::fill(distance.begin(), distance.end(), -1);
            distance[static_cast<size_t>(source)] = 0;
            std::queue<Vertex> queue;
            queue.push(source);
            while (! queue.empty()) {
                auto v = queue.front();
                queue.pop();
                for (auto w : g.neighbours(v))
                    if (distance[static_cast<size_t>(w)] < 0) {
                        distance[static_cast<size_t>(w)] = distance[static_cast<size_t>(v)] + 1;
                        queue.push(w);
                    }
            }
            row.clear();
            for (Vertex v = 0; v < n; ++v)
                if (v != source)
                    row.push_back(distance[static_cast<size_t>(v)] < 0 ? sp_pad : static_cast<double>(distance[static_cast<size_t>(v)]));
            std::sort(row.begin(), row.end());
            row.resize(static_cast<size_t>(dim), sp_pad);
            std::copy(row.begin(), row.end(), result.row(source).begin());
        }
        return result;
    }

    auto resolve_sp_pad(const FeatureConfig & config, int order_a, int order_b) -> double
    {
        return config.sp_pad.value_or(static_cast<double>(std::max(order_a, order_b)));
    }

    auto attach_features(const Graph & g, const FeatureConfig & config, double sp_pad) -> AttributedGraph
    {
        switch (config.kind) {
        case FeatureKind::rwpe:
            return AttributedGraph{g, rwpe(g, config.dim), FeatureConfig{FeatureKind::rwpe, config.dim, std::nullopt}};
        case FeatureKind::spe:
            return AttributedGraph{g, spe(g, config.dim, sp_pad), FeatureConfig{FeatureKind::spe, config.dim, sp_pad}};
        case FeatureKind::external:
            break;
        }
        throw DataError("external features cannot be computed from structure");
    }

    auto attach_features(const Graph & g, const FeatureConfig & config) -> AttributedGraph
    {
        return attach_features(g, config, config.sp_pad.value_or(static_cast<double>(g.order())));
    }
}
