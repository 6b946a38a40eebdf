#pragma once

#include <homdist/extended_real.hh>
#include <homdist/graph.hh>
#include <homdist/norm.hh>
#include <homdist/oracle.hh>
#include <homdist/rng.hh>

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace homdist
{
    using BigInt = boost::multiprecision::cpp_int;

    /// Node-expansion limit for the general backtracking searches.
    struct SearchBudget
    {
        std::uint64_t max_nodes = 100'000'000;
    };

    /// c[u][v] = ||f_pattern(u) - f_host(v)|| for pattern vertex u, host vertex v.
    class CostMatrix
    {
    public:
        /// Throws DataError on shape mismatch or negative / non-finite entries.
        CostMatrix(int pattern_order, int host_order, std::vector<double> entries, Norm norm = Norm::l2);

        static auto from_features(const AttributedGraph & pattern, const AttributedGraph & host, Norm norm) -> CostMatrix;

        [[nodiscard]] auto pattern_order() const -> int { return _pattern_order; }
        [[nodiscard]] auto host_order() const -> int { return _host_order; }
        [[nodiscard]] auto norm() const -> Norm { return _norm; }

        [[nodiscard]] auto at(Vertex u, Vertex v) const -> double
        {
            return _entries[static_cast<std::size_t>(u) * static_cast<std::size_t>(_host_order) + static_cast<std::size_t>(v)];
        }

    private:
        int _pattern_order;
        int _host_order;
        std::vector<double> _entries;
        Norm _norm;
    };

    /// Exact |Hom(tree, host)| by the rooted-tree product/sum recurrence.
    /// Throws DataError when `pattern` is not a tree.
    [[nodiscard]] auto count_homs_tree(const Graph & pattern, const Graph & host) -> BigInt;

    /// |Hom(C_k, host)| = trace(A^k), by closed-walk counting. Requires k >= 3.
    [[nodiscard]] auto count_homs_cycle(int k, const Graph & host) -> BigInt;

    /// Dispatches to the tree or cycle counter; UnsupportedError for anything else.
    [[nodiscard]] auto count_homs(const Graph & pattern, const Graph & host) -> BigInt;

    struct BottleneckResult
    {
        ExtendedReal value;
        std::optional<Homomorphism> witness;
    };

    /// Largest pattern order handled by the general branch-and-bound search.
    inline constexpr int max_general_pattern_order = 12;

    /// min over Hom(pattern, host) of max_u cost[u][phi(u)], with a witness
    /// attaining it (+inf and no witness when there is no homomorphism).
    ///
    /// Trees use a bottleneck DP, cycles an anchored path DP, and any other
    /// pattern up to max_general_pattern_order vertices branch-and-bound
    /// backtracking. Ties go to the lexicographically smallest image array;
    /// for cycles the comparison runs along the traversal order of
    /// Graph::cycle_order, which is the index order for C_k as built by
    /// cycle_graph.
    [[nodiscard]] auto min_bottleneck_hom(const Graph & pattern, const Graph & host, const CostMatrix & cost,
        const SearchBudget & budget = {}) -> BottleneckResult;

    enum class Proposal
    {
        tree_dp,
        cycle_dp,
        restart_backtrack
    };

    [[nodiscard]] auto to_string(Proposal proposal) -> std::string;

    struct HomSample
    {
        std::vector<Homomorphism> maps;
        std::uint64_t seed = 0;
        Proposal proposal = Proposal::restart_backtrack;
        bool hom_empty = false;
    };

    /// Draws `count` homomorphisms with replacement. Trees and cycles are
    /// sampled exactly uniformly from Hom(pattern, host) using the counting
    /// tables. Other patterns use random-restart backtracking with random vertex
    /// and value orders: not uniform, but every homomorphism has positive
    /// probability. An empty Hom set yields hom_empty = true and no maps.
    /// Throws BudgetExceeded if backtracking exhausts `budget`.
    [[nodiscard]] auto sample_homs(const Graph & pattern, const Graph & host, int count, CounterRng rng,
        const SearchBudget & budget = {}) -> HomSample;

    [[nodiscard]] auto sample_homs(const Graph & pattern, const Graph & host, int count, std::uint64_t seed,
        const SearchBudget & budget = {}) -> HomSample;

    /// Order m uniform in [1, n_max], then each of the m(m-1)/2 edges with probability 1/2.
    [[nodiscard]] auto sample_pattern(int n_max, CounterRng & rng) -> Graph;
    [[nodiscard]] auto sample_pattern(int n_max, std::uint64_t seed) -> Graph;
}
