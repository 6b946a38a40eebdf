#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace homdist
{
    using Vertex = int;
    using Edge = std::pair<Vertex, Vertex>;

    /// Immutable simple undirected graph on vertices 0..n-1.
    ///
    /// Edges are stored normalised (u < v) and sorted; every vertex carries a
    /// sorted neighbour list and the dense adjacency matrix is kept alongside
    /// for O(1) adjacency queries in the search kernels.
    class Graph
    {
    public:
        Graph() = default;

        /// Throws DataError on self-loops, duplicate edges or out-of-range endpoints.
        Graph(int n, std::vector<Edge> edges);

        [[nodiscard]] auto order() const -> int { return _n; }
        [[nodiscard]] auto size() const -> int { return static_cast<int>(_edges.size()); }
        [[nodiscard]] auto edges() const -> const std::vector<Edge> & { return _edges; }

        [[nodiscard]] auto neighbours(Vertex v) const -> std::span<const Vertex>
        {
            return _adjacency[static_cast<std::size_t>(v)];
        }

        [[nodiscard]] auto degree(Vertex v) const -> int
        {
            return static_cast<int>(_adjacency[static_cast<std::size_t>(v)].size());
        }

        [[nodiscard]] auto adjacent(Vertex u, Vertex v) const -> bool
        {
            return _matrix[static_cast<std::size_t>(u) * static_cast<std::size_t>(_n) + static_cast<std::size_t>(v)] != 0;
        }

        [[nodiscard]] auto degree_sequence() const -> std::vector<int>;
        [[nodiscard]] auto is_connected() const -> bool;
        [[nodiscard]] auto is_tree() const -> bool;

        /// True iff the graph is a single cycle C_k (k >= 3) on all of its vertices.
        [[nodiscard]] auto is_cycle() const -> bool;

        /// Vertices of a cycle graph in traversal order, starting at 0 and
        /// continuing towards the smaller-numbered neighbour of 0.
        [[nodiscard]] auto cycle_order() const -> std::vector<Vertex>;

        auto operator==(const Graph & other) const -> bool
        {
            return _n == other._n && _edges == other._edges;
        }

    private:
        int _n = 0;
        std::vector<Edge> _edges;
        std::vector<std::vector<Vertex>> _adjacency;
        std::vector<unsigned char> _matrix;
    };

    [[nodiscard]] auto path_graph(int n) -> Graph;
    [[nodiscard]] auto cycle_graph(int n) -> Graph;
    [[nodiscard]] auto complete_graph(int n) -> Graph;
    [[nodiscard]] auto star_graph(int leaves) -> Graph;
    [[nodiscard]] auto empty_graph(int n) -> Graph;

    /// Dense row-major matrix of per-vertex feature vectors.
    class FeatureMatrix
    {
    public:
        FeatureMatrix() = default;
        FeatureMatrix(int rows, int cols, double fill = 0.0);

        /// Throws DataError on ragged rows or non-finite entries.
        static auto from_rows(const std::vector<std::vector<double>> & rows) -> FeatureMatrix;

        [[nodiscard]] auto rows() const -> int { return _rows; }
        [[nodiscard]] auto cols() const -> int { return _cols; }

        [[nodiscard]] auto row(int r) const -> std::span<const double>
        {
            return {_data.data() + static_cast<std::size_t>(r) * static_cast<std::size_t>(_cols), static_cast<std::size_t>(_cols)};
        }

        [[nodiscard]] auto row(int r) -> std::span<double>
        {
            return {_data.data() + static_cast<std::size_t>(r) * static_cast<std::size_t>(_cols), static_cast<std::size_t>(_cols)};
        }

        [[nodiscard]] auto at(int r, int c) const -> double
        {
            return _data[static_cast<std::size_t>(r) * static_cast<std::size_t>(_cols) + static_cast<std::size_t>(c)];
        }

        auto at(int r, int c) -> double &
        {
            return _data[static_cast<std::size_t>(r) * static_cast<std::size_t>(_cols) + static_cast<std::size_t>(c)];
        }

        auto operator==(const FeatureMatrix &) const -> bool = default;

    private:
        int _rows = 0;
        int _cols = 0;
        std::vector<double> _data;
    };

    enum class FeatureKind
    {
        rwpe,
        spe,
        external
    };

    [[nodiscard]] auto to_string(FeatureKind kind) -> std::string;
    [[nodiscard]] auto parse_feature_kind(const std::string & text) -> FeatureKind;

    /// Run-level attribute function configuration. `dim` is the number of walk
    /// steps for RWPE and the vector length for SPE. `sp_pad` is the SPE
    /// sentinel for unreachable vertices and padding; when unset it is derived
    /// from the orders of the graphs being compared.
    struct FeatureConfig
    {
        FeatureKind kind = FeatureKind::spe;
        int dim = 1;
        std::optional<double> sp_pad;

        auto operator==(const FeatureConfig &) const -> bool = default;
    };

    /// A graph together with its attribute function f: V -> R^d.
    class AttributedGraph
    {
    public:
        AttributedGraph() = default;

        /// Throws DataError when the feature rows do not match the vertex count.
        AttributedGraph(Graph graph, FeatureMatrix features, FeatureConfig config);

        /// Attributed graph with externally supplied features.
        AttributedGraph(Graph graph, FeatureMatrix features);

        [[nodiscard]] auto graph() const -> const Graph & { return _graph; }
        [[nodiscard]] auto features() const -> const FeatureMatrix & { return _features; }
        [[nodiscard]] auto config() const -> const FeatureConfig & { return _config; }
        [[nodiscard]] auto dim() const -> int { return _features.cols(); }
        [[nodiscard]] auto order() const -> int { return _graph.order(); }

        auto operator==(const AttributedGraph &) const -> bool = default;

    private:
        Graph _graph;
        FeatureMatrix _features;
        FeatureConfig _config;
    };

    /// A bijection on {0..n-1}, stored as the image array.
    class Permutation
    {
    public:
        Permutation() = default;

        /// Throws DataError unless `mapping` is a bijection on {0..size-1}.
        explicit Permutation(std::vector<Vertex> mapping);

        static auto identity(int n) -> Permutation;

        [[nodiscard]] auto size() const -> int { return static_cast<int>(_mapping.size()); }
        [[nodiscard]] auto operator()(Vertex v) const -> Vertex { return _mapping[static_cast<std::size_t>(v)]; }
        [[nodiscard]] auto mapping() const -> const std::vector<Vertex> & { return _mapping; }
        [[nodiscard]] auto inverse() const -> Permutation;

    private:
        std::vector<Vertex> _mapping;
    };

    /// Relabels vertex v as p(v): edge {u,v} becomes {p(u),p(v)}.
    [[nodiscard]] auto apply_permutation(const Graph & g, const Permutation & p) -> Graph;

    /// Relabels structure and moves feature row v to row p(v).
    [[nodiscard]] auto apply_permutation(const AttributedGraph & g, const Permutation & p) -> AttributedGraph;
}
