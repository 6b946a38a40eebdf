#include <homdist/errors.hh>
#include <homdist/graph.hh>

#include <algorithm>
#include <cmath>
#include <numeric>

using std::size_t;
using std::string;
using std::vector;

namespace homdist
{
    Graph::Graph(int n, vector<Edge> edges) :
        _n(n)
    {
        if (n < 0)
            throw DataError("graph order must be non-negative, got " + std::to_string(n));

        for (auto & [u, v] : edges) {
            if (u < 0 || v < 0 || u >= n || v >= n)
                throw DataError("edge {" + std::to_string(u) + "," + std::to_string(v) + "} out of range for n=" + std::to_string(n));
            if (u == v)
                throw DataError("self-loop at vertex " + std::to_string(u));
            if (u > v)
                std::swap(u, v);
        }
        std::sort(edges.begin(), edges.end());
        if (auto dup = std::adjacent_find(edges.begin(), edges.end()); dup != edges.end())
            throw DataError("duplicate edge {" + std::to_string(dup->first) + "," + std::to_string(dup->second) + "}");

        _edges = std::move(edges);
        _adjacency.assign(static_cast<size_t>(n), {});
        _matrix.assign(static_cast<size_t>(n) * static_cast<size_t>(n), 0);
        for (auto [u, v] : _edges) {
            _adjacency[static_cast<size_t>(u)].push_back(v);
            _adjacency[static_cast<size_t>(v)].push_back(u);
            _matrix[static_cast<size_t>(u) * static_cast<size_t>(n) + static_cast<size_t>(v)] = 1;
            _matrix[static_cast<size_t>(v) * static_cast<size_t>(n) + static_cast<size_t>(u)] = 1;
        }
        for (auto & list : _adjacency)
            std::sort(list.begin(), list.end());
    }

    auto Graph::degree_sequence() const -> vector<int>
    {
        vector<int> result;
        result.reserve(static_cast<size_t>(_n));
        for (Vertex v = 0; v < _n; ++v)
            result.push_back(degree(v));
        std::sort(result.begin(), result.end());
        return result;
    }

    auto Graph::is_connected() const -> bool
    {
        if (_n == 0)
            return true;
        vector<char> seen(static_cast<size_t>(_n), 0);
        vector<Vertex> stack{0};
        seen[0] = 1;
        int reached = 1;
        while (! stack.empty()) {
            auto v = stack.back();
            stack.pop_back();
            for (auto w : neighbours(v))
                if (! seen[static_cast<size_t>(w)]) {
                    seen[static_cast<size_t>(w)] = 1;
                    ++reached;
                    stack.push_back(w);
                }
        }
        return reached == _n;
    }

    auto Graph::is_tree() const -> bool
    {
        return _n >= 1 && size() == _n - 1 && is_connected();
    }

    auto Graph::is_cycle() const -> bool
    {
        if (_n < 3 || size() != _n)
            return false;
        for (Vertex v = 0; v < _n; ++v)
            if (degree(v) != 2)
                return false;
        return is_connected();
    }

    auto Graph::cycle_order() const -> vector<Vertex>
    {
        if (! is_cycle())
            throw DataError("cycle_order called on a graph that is not a cycle");
        vector<Vertex> order{0};
        Vertex previous = 0, current = neighbours(0)[0];
        while (current != 0) {
            order.push_back(current);
            auto nbrs = neighbours(current);
            Vertex next = nbrs[0] == previous ? nbrs[1] : nbrs[0];
            previous = current;
            current = next;
        }
        return order;
    }

    auto path_graph(int n) -> Graph
    {
        vector<Edge> edges;
        for (int i = 0; i + 1 < n; ++i)
            edges.emplace_back(i, i + 1);
        return Graph{n, std::move(edges)};
    }

    auto cycle_graph(int n) -> Graph
    {
        if (n < 3)
            throw DataError("cycles need at least 3 vertices");
        vector<Edge> edges;
        for (int i = 0; i < n; ++i)
            edges.emplace_back(i, (i + 1) % n);
        return Graph{n, std::move(edges)};
    }

    auto complete_graph(int n) -> Graph
    {
        vector<Edge> edges;
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                edges.emplace_back(u, v);
        return Graph{n, std::move(edges)};
    }

    auto star_graph(int leaves) -> Graph
    {
        vector<Edge> edges;
        for (int i = 1; i <= leaves; ++i)
            edges.emplace_back(0, i);
        return Graph{leaves + 1, std::move(edges)};
    }

    auto empty_graph(int n) -> Graph
    {
        return Graph{n, {}};
    }

    FeatureMatrix::FeatureMatrix(int rows, int cols, double fill) :
        _rows(rows),
        _cols(cols),
        _data(static_cast<size_t>(rows) * static_cast<size_t>(cols), fill)
    {
        if (rows < 0 || cols < 0)
            throw DataError("feature matrix dimensions must be non-negative");
    }

    auto FeatureMatrix::from_rows(const vector<vector<double>> & rows) -> FeatureMatrix
    {
        int cols = rows.empty() ? 0 : static_cast<int>(rows.front().size());
        FeatureMatrix result(static_cast<int>(rows.size()), cols);
        for (size_t r = 0; r < rows.size(); ++r) {
            if (static_cast<int>(rows[r].size()) != cols)
                throw DataError("feature row " + std::to_string(r) + " has " + std::to_string(rows[r].size()) + " entries, expected " + std::to_string(cols));
            for (size_t c = 0; c < rows[r].size(); ++c) {
                if (! std::isfinite(rows[r][c]))
                    throw DataError("feature row " + std::to_string(r) + " has a non-finite entry");
                result.at(static_cast<int>(r), static_cast<int>(c)) = rows[r][c];
            }
        }
        return result;
    }

    auto to_string(FeatureKind kind) -> string
    {
        switch (kind) {
        case FeatureKind::rwpe: return "rwpe";
        case FeatureKind::spe: return "spe";
        case FeatureKind::external: return "external";
        }
        return "unknown";
    }

    auto parse_feature_kind(const string & text) -> FeatureKind
    {
        if (text == "rwpe")
            return FeatureKind::rwpe;
        if (text == "spe")
            return FeatureKind::spe;
        if (text == "external")
            return FeatureKind::external;
        throw DataError("unknown feature kind '" + text + "'");
    }

    AttributedGraph::AttributedGraph(Graph graph, FeatureMatrix features, FeatureConfig config) :
        _graph(std::move(graph)),
        _features(std::move(features)),
        _config(config)
    {
        if (_features.rows() != _graph.order())
            throw DataError("feature matrix has " + std::to_string(_features.rows()) + " rows for a graph of order " + std::to_string(_graph.order()));
        if (_features.rows() > 0 && _features.cols() != _config.dim)
            throw DataError("feature matrix width " + std::to_string(_features.cols()) + " differs from configured dim " + std::to_string(_config.dim));
    }

    AttributedGraph::AttributedGraph(Graph graph, FeatureMatrix features) :
        AttributedGraph(std::move(graph), features, FeatureConfig{FeatureKind::external, features.cols(), std::nullopt})
    {
    }

    Permutation::Permutation(vector<Vertex> mapping) :
        _mapping(std::move(mapping))
    {
        vector<char> hit(_mapping.size(), 0);
        for (auto v : _mapping) {
            if (v < 0 || static_cast<size_t>(v) >= _mapping.size() || hit[static_cast<size_t>(v)])
                throw DataError("permutation is not a bijection on 0.." + std::to_string(static_cast<long>(_mapping.size()) - 1));
            hit[static_cast<size_t>(v)] = 1;
        }
    }

    auto Permutation::identity(int n) -> Permutation
    {
        vector<Vertex> mapping(static_cast<size_t>(n));
        std::iota(mapping.begin(), mapping.end(), 0);
        return Permutation{std::move(mapping)};
    }

    auto Permutation::inverse() const -> Permutation
    {
        vector<Vertex> result(_mapping.size());
        for (size_t v = 0; v < _mapping.size(); ++v)
            result[static_cast<size_t>(_mapping[v])] = static_cast<Vertex>(v);
        return Permutation{std::move(result)};
    }

    auto apply_permutation(const Graph & g, const Permutation & p) -> Graph
    {
        if (p.size() != g.order())
            throw DataError("permutation of size " + std::to_string(p.size()) + " applied to graph of order " + std::to_string(g.order()));
        vector<Edge> edges;
        edges.reserve(g.edges().size());
        for (auto [u, v] : g.edges())
            edges.emplace_back(p(u), p(v));
        return Graph{g.order(), std::move(edges)};
    }

    auto apply_permutation(const AttributedGraph & g, const Permutation & p) -> AttributedGraph
    {
        auto graph = apply_permutation(g.graph(), p);
        FeatureMatrix features(g.features().rows(), g.features().cols());
        for (Vertex v = 0; v < g.order(); ++v) {
            auto from = g.features().row(v);
            std::copy(from.begin(), from.end(), features.row(p(v)).begin());
        }
        return AttributedGraph{std::move(graph), std::move(features), g.config()};
    }
}
