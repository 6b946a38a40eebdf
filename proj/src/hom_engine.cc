#include <homdist/errors.hh>
#include <homdist/hom_engine.hh>

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <numeric>

using std::size_t;
using std::uint64_t;
using std::vector;

namespace homdist
{
    namespace
    {
        constexpr double unreachable = std::numeric_limits<double>::infinity();

        auto idx(int x) -> size_t { return static_cast<size_t>(x); }

        struct RootedTree
        {
            vector<Vertex> order;    // BFS order from the root
            vector<Vertex> parent;   // -1 at the root
            vector<vector<Vertex>> children;
        };

        auto root_tree(const Graph & tree, Vertex root) -> RootedTree
        {
            RootedTree result;
            int n = tree.order();
            result.parent.assign(idx(n), -1);
            result.children.assign(idx(n), {});
            vector<char> seen(idx(n), 0);
            result.order.push_back(root);
            seen[idx(root)] = 1;
            for (size_t head = 0; head < result.order.size(); ++head) {
                auto v = result.order[head];
                for (auto w : tree.neighbours(v))
                    if (! seen[idx(w)]) {
                        seen[idx(w)] = 1;
                        result.parent[idx(w)] = v;
                        result.children[idx(v)].push_back(w);
                        result.order.push_back(w);
                    }
            }
            return result;
        }

        auto require_tree(const Graph & pattern) -> void
        {
            if (! pattern.is_tree())
                throw DataError("pattern is not a tree");
        }

        auto check_cost_shape(const Graph & pattern, const Graph & host, const CostMatrix & cost) -> void
        {
            if (cost.pattern_order() != pattern.order() || cost.host_order() != host.order())
                throw DataError("cost matrix is " + std::to_string(cost.pattern_order()) + "x" + std::to_string(cost.host_order()) +
                    " but pattern/host orders are " + std::to_string(pattern.order()) + "/" + std::to_string(host.order()));
        }

        // Weighted choice over `candidates` with non-negative integer weights.
        template <typename WeightOf>
        auto weighted_pick(std::span<const Vertex> candidates, WeightOf weight_of, CounterRng & rng) -> Vertex
        {
            BigInt total = 0;
            for (auto v : candidates)
                total += weight_of(v);
            auto ticket = rng.uniform_below(total);
            for (auto v : candidates) {
                const BigInt & w = weight_of(v);
                if (ticket < w)
                    return v;
                ticket -= w;
            }
            throw HomdistError("weighted_pick fell off the end");
        }

        // ---- trees -------------------------------------------------------

        auto tree_count_table(const Graph & pattern, const Graph & host, const RootedTree & rooted) -> vector<vector<BigInt>>
        {
            int n = host.order();
            vector<vector<BigInt>> table(idx(pattern.order()), vector<BigInt>(idx(n), 1));
            for (auto it = rooted.order.rbegin(); it != rooted.order.rend(); ++it) {
                auto u = *it;
                for (auto c : rooted.children[idx(u)])
                    for (Vertex v = 0; v < n; ++v) {
                        BigInt sum = 0;
                        for (auto w : host.neighbours(v))
                            sum += table[idx(c)][idx(w)];
                        table[idx(u)][idx(v)] *= sum;
                    }
            }
            return table;
        }

        auto tree_bottleneck(const Graph & pattern, const Graph & host, const CostMatrix & cost) -> BottleneckResult
        {
            int n = host.order(), p = pattern.order();
            auto rooted = root_tree(pattern, 0);

            vector<vector<double>> bot(idx(p), vector<double>(idx(n)));
            for (auto it = rooted.order.rbegin(); it != rooted.order.rend(); ++it) {
                auto u = *it;
                for (Vertex v = 0; v < n; ++v) {
                    double b = cost.at(u, v);
                    for (auto c : rooted.children[idx(u)]) {
                        double best = unreachable;
                        for (auto w : host.neighbours(v))
                            best = std::min(best, bot[idx(c)][idx(w)]);
                        b = std::max(b, best);
                        if (b == unreachable)
                            break;
                    }
                    bot[idx(u)][idx(v)] = b;
                }
            }

            double value = unreachable;
            for (Vertex v = 0; v < n; ++v)
                value = std::min(value, bot[0][idx(v)]);
            if (value == unreachable)
                return {infinity, std::nullopt};

            // Witness: the tree CSP restricted to cost <= value. After full arc
            // consistency every remaining domain value extends to a solution, so
            // fixing vertices in index order to their smallest value and
            // re-propagating yields the lexicographically smallest optimum.
            vector<vector<char>> domain(idx(p), vector<char>(idx(n), 0));
            for (Vertex u = 0; u < p; ++u)
                for (Vertex v = 0; v < n; ++v)
                    domain[idx(u)][idx(v)] = cost.at(u, v) <= value;

            auto propagate = [&]() {
                for (auto it = rooted.order.rbegin(); it != rooted.order.rend(); ++it) {
                    auto u = *it, up = rooted.parent[idx(*it)];
                    if (up < 0)
                        continue;
                    for (Vertex v = 0; v < n; ++v)
                        if (domain[idx(up)][idx(v)]) {
                            auto nbrs = host.neighbours(v);
                            if (std::none_of(nbrs.begin(), nbrs.end(), [&](Vertex w) { return domain[idx(u)][idx(w)]; }))
                                domain[idx(up)][idx(v)] = 0;
                        }
                }
                for (auto u : rooted.order) {
                    auto up = rooted.parent[idx(u)];
                    if (up < 0)
                        continue;
                    for (Vertex w = 0; w < n; ++w)
                        if (domain[idx(u)][idx(w)]) {
                            auto nbrs = host.neighbours(w);
                            if (std::none_of(nbrs.begin(), nbrs.end(), [&](Vertex v) { return domain[idx(up)][idx(v)]; }))
                                domain[idx(u)][idx(w)] = 0;
                        }
                }
            };

            propagate();
            Homomorphism witness{vector<Vertex>(idx(p), -1)};
            for (Vertex u = 0; u < p; ++u) {
                auto & row = domain[idx(u)];
                auto first = std::find(row.begin(), row.end(), 1);
                if (first == row.end())
                    throw HomdistError("tree bottleneck witness extraction failed");
                auto chosen = static_cast<Vertex>(first - row.begin());
                std::fill(row.begin(), row.end(), 0);
                row[idx(chosen)] = 1;
                witness.map[idx(u)] = chosen;
                propagate();
            }
            return {value, std::move(witness)};
        }

        // ---- cycles ------------------------------------------------------

        auto cycle_bottleneck(const Graph & pattern, const Graph & host, const CostMatrix & cost) -> BottleneckResult
        {
            int n = host.order();
            auto order = pattern.cycle_order();
            int k = static_cast<int>(order.size());

            double value = unreachable;
            vector<double> current(idx(n)), next(idx(n));
            for (Vertex anchor = 0; anchor < n; ++anchor) {
                double start = cost.at(order[0], anchor);
                if (start >= value)
                    continue;
                std::fill(current.begin(), current.end(), unreachable);
                current[idx(anchor)] = start;
                for (int i = 1; i < k; ++i) {
                    for (Vertex v = 0; v < n; ++v) {
                        double c = cost.at(order[idx(i)], v);
                        double best = unreachable;
                        if (c < value)
                            for (auto w : host.neighbours(v))
                                best = std::min(best, std::max(current[idx(w)], c));
                        next[idx(v)] = best;
                    }
                    current.swap(next);
                }
                for (auto w : host.neighbours(anchor))
                    value = std::min(value, current[idx(w)]);
            }
            if (value == unreachable)
                return {infinity, std::nullopt};

            // Witness: backwards reachability sets to the anchor under cost <= value.
            auto allowed = [&](int position, Vertex v) { return cost.at(order[idx(position)], v) <= value; };
            vector<vector<char>> reach(idx(k), vector<char>(idx(n), 0));
            for (Vertex anchor = 0; anchor < n; ++anchor) {
                if (! allowed(0, anchor))
                    continue;
                for (auto & r : reach)
                    std::fill(r.begin(), r.end(), 0);
                for (auto x : host.neighbours(anchor))
                    reach[idx(k - 1)][idx(x)] = allowed(k - 1, x);
                for (int i = k - 2; i >= 1; --i)
                    for (Vertex x = 0; x < n; ++x)
                        if (allowed(i, x)) {
                            auto nbrs = host.neighbours(x);
                            reach[idx(i)][idx(x)] = std::any_of(nbrs.begin(), nbrs.end(), [&](Vertex y) { return reach[idx(i + 1)][idx(y)] != 0; });
                        }
                auto anchor_nbrs = host.neighbours(anchor);
                if (std::none_of(anchor_nbrs.begin(), anchor_nbrs.end(), [&](Vertex y) { return reach[1][idx(y)] != 0; }))
                    continue;

                Homomorphism witness{vector<Vertex>(idx(k), -1)};
                witness.map[idx(order[0])] = anchor;
                Vertex previous = anchor;
                for (int i = 1; i < k; ++i) {
                    Vertex chosen = -1;
                    for (auto y : host.neighbours(previous))
                        if (reach[idx(i)][idx(y)]) {
                            chosen = y;
                            break;
                        }
                    witness.map[idx(order[idx(i)])] = chosen;
                    previous = chosen;
                }
                return {value, std::move(witness)};
            }
            throw HomdistError("cycle bottleneck witness extraction failed");
        }

        // ---- general patterns --------------------------------------------

        auto general_bottleneck(const Graph & pattern, const Graph & host, const CostMatrix & cost, const SearchBudget & budget) -> BottleneckResult
        {
            int p = pattern.order(), n = host.order();
            if (p == 0)
                return {0.0, Homomorphism{}};

            // suffix_bound[i]: max over j >= i of the cheapest cost of pattern vertex j.
            vector<double> suffix_bound(idx(p) + 1, 0.0);
            for (int u = p - 1; u >= 0; --u) {
                double cheapest = unreachable;
                for (Vertex v = 0; v < n; ++v)
                    cheapest = std::min(cheapest, cost.at(u, v));
                suffix_bound[idx(u)] = std::max(suffix_bound[idx(u) + 1], cheapest);
            }

            double incumbent = unreachable;
            vector<Vertex> map(idx(p), -1), best;
            uint64_t nodes = 0;

            auto search = [&](auto & self, int u, double running) -> void {
                if (u == p) {
                    incumbent = running;
                    best = map;
                    return;
                }
                if (std::max(running, suffix_bound[idx(u)]) >= incumbent)
                    return;
                for (Vertex v = 0; v < n; ++v) {
                    double c = cost.at(u, v);
                    if (std::max(running, c) >= incumbent)
                        continue;
                    bool ok = true;
                    for (auto w : pattern.neighbours(u))
                        if (w < u && ! host.adjacent(map[idx(w)], v)) {
                            ok = false;
                            break;
                        }
                    if (! ok)
                        continue;
                    if (++nodes > budget.max_nodes)
                        throw BudgetExceeded("bottleneck search exceeded " + std::to_string(budget.max_nodes) + " node expansions");
                    map[idx(u)] = v;
                    self(self, u + 1, std::max(running, c));
                }
            };
            search(search, 0, 0.0);

            if (best.empty())
                return {infinity, std::nullopt};
            return {incumbent, Homomorphism{std::move(best)}};
        }

        // ---- sampling ----------------------------------------------------

        auto sample_tree(const Graph & pattern, const Graph & host, int count, CounterRng & rng, HomSample & out) -> void
        {
            auto rooted = root_tree(pattern, 0);
            auto table = tree_count_table(pattern, host, rooted);
            BigInt total = 0;
            for (const auto & x : table[0])
                total += x;
            if (total == 0) {
                out.hom_empty = true;
                return;
            }
            vector<Vertex> all_host(idx(host.order()));
            std::iota(all_host.begin(), all_host.end(), 0);
            for (int s = 0; s < count; ++s) {
                Homomorphism h{vector<Vertex>(idx(pattern.order()), -1)};
                h.map[0] = weighted_pick(all_host, [&](Vertex v) -> const BigInt & { return table[0][idx(v)]; }, rng);
                for (size_t i = 1; i < rooted.order.size(); ++i) {
                    auto u = rooted.order[i];
                    auto image_of_parent = h.map[idx(rooted.parent[idx(u)])];
                    h.map[idx(u)] = weighted_pick(host.neighbours(image_of_parent), [&](Vertex w) -> const BigInt & { return table[idx(u)][idx(w)]; }, rng);
                }
                out.maps.push_back(std::move(h));
            }
        }

        // walks[j][w] = number of walks of length j from w to the anchor.
        auto walks_to(const Graph & host, Vertex anchor, int max_length) -> vector<vector<BigInt>>
        {
            int n = host.order();
            vector<vector<BigInt>> walks(idx(max_length) + 1, vector<BigInt>(idx(n), 0));
            walks[0][idx(anchor)] = 1;
            for (int j = 1; j <= max_length; ++j)
                for (Vertex w = 0; w < n; ++w)
                    for (auto x : host.neighbours(w))
                        walks[idx(j)][idx(w)] += walks[idx(j - 1)][idx(x)];
            return walks;
        }

        auto sample_cycle(const Graph & pattern, const Graph & host, int count, CounterRng & rng, HomSample & out) -> void
        {
            auto order = pattern.cycle_order();
            int k = static_cast<int>(order.size()), n = host.order();

            vector<BigInt> closed(idx(n), 0);
            std::map<Vertex, vector<vector<BigInt>>> cache;
            for (Vertex a = 0; a < n; ++a) {
                auto walks = walks_to(host, a, k);
                closed[idx(a)] = walks[idx(k)][idx(a)];
            }
            if (std::all_of(closed.begin(), closed.end(), [](const BigInt & x) { return x == 0; })) {
                out.hom_empty = true;
                return;
            }

            vector<Vertex> all_host(idx(n));
            std::iota(all_host.begin(), all_host.end(), 0);
            for (int s = 0; s < count; ++s) {
                auto anchor = weighted_pick(all_host, [&](Vertex v) -> const BigInt & { return closed[idx(v)]; }, rng);
                auto found = cache.find(anchor);
                if (found == cache.end())
                    found = cache.emplace(anchor, walks_to(host, anchor, k - 1)).first;
                const auto & walks = found->second;

                Homomorphism h{vector<Vertex>(idx(k), -1)};
                h.map[idx(order[0])] = anchor;
                Vertex previous = anchor;
                for (int i = 1; i < k; ++i) {
                    auto remaining = k - i;
                    previous = weighted_pick(host.neighbours(previous), [&](Vertex y) -> const BigInt & { return walks[idx(remaining)][idx(y)]; }, rng);
                    h.map[idx(order[idx(i)])] = previous;
                }
                out.maps.push_back(std::move(h));
            }
        }

        auto sample_general(const Graph & pattern, const Graph & host, int count, CounterRng & rng,
            const SearchBudget & budget, HomSample & out) -> void
        {
            int p = pattern.order(), n = host.order();
            uint64_t nodes = 0;
            vector<Vertex> order(idx(p)), map(idx(p), -1);
            vector<char> placed(idx(p), 0);

            auto search = [&](auto & self, int position) -> bool {
                if (position == p)
                    return true;
                auto u = order[idx(position)];
                vector<Vertex> values(idx(n));
                std::iota(values.begin(), values.end(), 0);
                shuffle(values, rng);
                for (auto v : values) {
                    bool ok = true;
                    for (auto w : pattern.neighbours(u))
                        if (placed[idx(w)] && ! host.adjacent(map[idx(w)], v)) {
                            ok = false;
                            break;
                        }
                    if (! ok)
                        continue;
                    if (++nodes > budget.max_nodes)
                        throw BudgetExceeded("homomorphism sampling exceeded " + std::to_string(budget.max_nodes) + " node expansions");
                    map[idx(u)] = v;
                    placed[idx(u)] = 1;
                    if (self(self, position + 1))
                        return true;
                    placed[idx(u)] = 0;
                }
                return false;
            };

            for (int s = 0; s < count; ++s) {
                std::iota(order.begin(), order.end(), 0);
                shuffle(order, rng);
                std::fill(placed.begin(), placed.end(), 0);
                if (! search(search, 0)) {
                    // The search is exhaustive, so failure proves Hom is empty.
                    out.hom_empty = true;
                    out.maps.clear();
                    return;
                }
                out.maps.push_back(Homomorphism{map});
            }
        }
    }

    CostMatrix::CostMatrix(int pattern_order, int host_order, vector<double> entries, Norm norm) :
        _pattern_order(pattern_order),
        _host_order(host_order),
        _entries(std::move(entries)),
        _norm(norm)
    {
        if (pattern_order < 0 || host_order < 0 || _entries.size() != idx(pattern_order) * idx(host_order))
            throw DataError("cost matrix entries do not match its shape");
        for (auto x : _entries)
            if (! std::isfinite(x) || x < 0.0)
                throw DataError("cost matrix entries must be finite and non-negative");
    }

    auto CostMatrix::from_features(const AttributedGraph & pattern, const AttributedGraph & host, Norm norm) -> CostMatrix
    {
        if (pattern.dim() != host.dim())
            throw DataError("feature dimension mismatch: " + std::to_string(pattern.dim()) + " vs " + std::to_string(host.dim()));
        vector<double> entries;
        entries.reserve(idx(pattern.order()) * idx(host.order()));
        for (Vertex u = 0; u < pattern.order(); ++u)
            for (Vertex v = 0; v < host.order(); ++v)
                entries.push_back(feature_distance(pattern.features().row(u), host.features().row(v), norm));
        return CostMatrix{pattern.order(), host.order(), std::move(entries), norm};
    }

    auto count_homs_tree(const Graph & pattern, const Graph & host) -> BigInt
    {
        require_tree(pattern);
        auto rooted = root_tree(pattern, 0);
        auto table = tree_count_table(pattern, host, rooted);
        BigInt total = 0;
        for (const auto & x : table[0])
            total += x;
        return total;
    }

    auto count_homs_cycle(int k, const Graph & host) -> BigInt
    {
        if (k < 3)
            throw DataError("cycle length must be at least 3, got " + std::to_string(k));
        int n = host.order();
        BigInt total = 0;
        vector<BigInt> current(idx(n)), next(idx(n));
        for (Vertex s = 0; s < n; ++s) {
            if (host.degree(s) == 0)
                continue;
            std::fill(current.begin(), current.end(), 0);
            current[idx(s)] = 1;
            for (int step = 0; step < k; ++step) {
                for (Vertex w = 0; w < n; ++w) {
                    next[idx(w)] = 0;
                    for (auto x : host.neighbours(w))
                        next[idx(w)] += current[idx(x)];
                }
                current.swap(next);
            }
            total += current[idx(s)];
        }
        return total;
    }

    auto count_homs(const Graph & pattern, const Graph & host) -> BigInt
    {
        if (pattern.is_tree())
            return count_homs_tree(pattern, host);
        if (pattern.is_cycle())
            return count_homs_cycle(pattern.order(), host);
        throw UnsupportedError("homomorphism counting is implemented for trees and cycles only");
    }

    auto min_bottleneck_hom(const Graph & pattern, const Graph & host, const CostMatrix & cost, const SearchBudget & budget) -> BottleneckResult
    {
        check_cost_shape(pattern, host, cost);
        if (pattern.is_tree())
            return tree_bottleneck(pattern, host, cost);
        if (pattern.is_cycle())
            return cycle_bottleneck(pattern, host, cost);
        if (pattern.order() > max_general_pattern_order)
            throw UnsupportedError("general bottleneck search supports patterns of order <= " + std::to_string(max_general_pattern_order));
        return general_bottleneck(pattern, host, cost, budget);
    }

    auto to_string(Proposal proposal) -> std::string
    {
        switch (proposal) {
        case Proposal::tree_dp: return "tree_dp";
        case Proposal::cycle_dp: return "cycle_dp";
        case Proposal::restart_backtrack: return "restart_backtrack";
        }
        return "unknown";
    }

    auto sample_homs(const Graph & pattern, const Graph & host, int count, CounterRng rng, const SearchBudget & budget) -> HomSample
    {
        if (count < 1)
            throw DataError("sample size must be at least 1");
        HomSample out;
        out.seed = rng.seed();
        if (pattern.is_tree()) {
            out.proposal = Proposal::tree_dp;
            sample_tree(pattern, host, count, rng, out);
        }
        else if (pattern.is_cycle()) {
            out.proposal = Proposal::cycle_dp;
            sample_cycle(pattern, host, count, rng, out);
        }
        else {
            out.proposal = Proposal::restart_backtrack;
            sample_general(pattern, host, count, rng, budget, out);
        }
        return out;
    }

    auto sample_homs(const Graph & pattern, const Graph & host, int count, uint64_t seed, const SearchBudget & budget) -> HomSample
    {
        return sample_homs(pattern, host, count, CounterRng{seed}, budget);
    }

    auto sample_pattern(int n_max, CounterRng & rng) -> Graph
    {
        if (n_max < 1)
            throw DataError("sample_pattern needs n_max >= 1");
        auto m = static_cast<int>(rng.uniform_below(static_cast<uint64_t>(n_max))) + 1;
        vector<Edge> edges;
        for (int u = 0; u < m; ++u)
            for (int v = u + 1; v < m; ++v)
                if (rng.coin())
                    edges.emplace_back(u, v);
        return Graph{m, std::move(edges)};
    }

    auto sample_pattern(int n_max, uint64_t seed) -> Graph
    {
        CounterRng rng{seed};
        return sample_pattern(n_max, rng);
    }
}
