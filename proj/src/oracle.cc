#include <homdist/errors.hh>
#include <homdist/oracle.hh>

#include <algorithm>
#include <limits>

using std::size_t;
using std::span;
using std::uint64_t;
using std::vector;

namespace homdist
{
    auto is_homomorphism(const Graph & pattern, const Graph & host, const Homomorphism & h) -> bool
    {
        if (h.pattern_order() != pattern.order())
            return false;
        for (auto v : h.map)
            if (v < 0 || v >= host.order())
                return false;
        for (auto [u, v] : pattern.edges())
            if (! host.adjacent(h.map[static_cast<size_t>(u)], h.map[static_cast<size_t>(v)]))
                return false;
        return true;
    }

    auto attribute_distance(const AttributedGraph & pattern, const AttributedGraph & host,
        const Homomorphism & h, Norm norm) -> double
    {
        double worst = 0.0;
        for (Vertex u = 0; u < pattern.order(); ++u)
            worst = std::max(worst, feature_distance(pattern.features().row(u), host.features().row(h.map[static_cast<size_t>(u)]), norm));
        return worst;
    }

    namespace oracle
    {
        namespace
        {
            auto check_guard(const Graph & a, const Graph & b) -> void
            {
                if (a.order() > guard_order || b.order() > guard_order)
                    throw UnsupportedError("brute-force oracle limited to graphs of order <= " + std::to_string(guard_order));
            }

            auto check_dims(const AttributedGraph & a, const AttributedGraph & b) -> void
            {
                if (a.dim() != b.dim())
                    throw DataError("feature dimension mismatch: " + std::to_string(a.dim()) + " vs " + std::to_string(b.dim()));
            }

            // Tries every host vertex for every pattern vertex in index order.
            auto extend(const Graph & pattern, const Graph & host, vector<Vertex> & map, int next,
                const std::function<void(span<const Vertex>)> & visit, uint64_t & count) -> void
            {
                if (next == pattern.order()) {
                    ++count;
                    visit(map);
                    return;
                }
                for (Vertex v = 0; v < host.order(); ++v) {
                    bool ok = true;
                    for (auto w : pattern.neighbours(next))
                        if (w < next && ! host.adjacent(map[static_cast<size_t>(w)], v)) {
                            ok = false;
                            break;
                        }
                    if (! ok)
                        continue;
                    map[static_cast<size_t>(next)] = v;
                    extend(pattern, host, map, next + 1, visit, count);
                }
            }

            // Bijections a -> b preserving adjacency and non-adjacency.
            auto count_isomorphisms(const Graph & a, const Graph & b, bool stop_at_first) -> uint64_t
            {
                if (a.order() != b.order() || a.size() != b.size())
                    return 0;
                int n = a.order();
                vector<Vertex> map(static_cast<size_t>(n), -1);
                vector<char> used(static_cast<size_t>(n), 0);
                uint64_t found = 0;

                std::function<bool(int)> place = [&](int next) -> bool {
                    if (next == n) {
                        ++found;
                        return stop_at_first;
                    }
                    for (Vertex v = 0; v < n; ++v) {
                        if (used[static_cast<size_t>(v)])
                            continue;
                        bool ok = true;
                        for (Vertex w = 0; w < next && ok; ++w)
                            ok = a.adjacent(w, next) == b.adjacent(map[static_cast<size_t>(w)], v);
                        if (! ok)
                            continue;
                        map[static_cast<size_t>(next)] = v;
                        used[static_cast<size_t>(v)] = 1;
                        if (place(next + 1))
                            return true;
                        used[static_cast<size_t>(v)] = 0;
                    }
                    return false;
                };
                place(0);
                return found;
            }
        }

        auto for_each_hom(const Graph & pattern, const Graph & host,
            const std::function<void(span<const Vertex>)> & visit) -> uint64_t
        {
            check_guard(pattern, host);
            vector<Vertex> map(static_cast<size_t>(pattern.order()), 0);
            uint64_t count = 0;
            extend(pattern, host, map, 0, visit, count);
            return count;
        }

        auto enumerate_homs(const Graph & pattern, const Graph & host) -> vector<Homomorphism>
        {
            vector<Homomorphism> result;
            for_each_hom(pattern, host, [&](span<const Vertex> map) {
                result.push_back(Homomorphism{vector<Vertex>(map.begin(), map.end())});
            });
            return result;
        }

        auto count_homs(const Graph & pattern, const Graph & host) -> uint64_t
        {
            return for_each_hom(pattern, host, [](span<const Vertex>) {});
        }

        auto are_isomorphic(const Graph & a, const Graph & b) -> bool
        {
            check_guard(a, b);
            return count_isomorphisms(a, b, true) > 0;
        }

        auto count_automorphisms(const Graph & g) -> uint64_t
        {
            check_guard(g, g);
            return count_isomorphisms(g, g, false);
        }

        auto one_sided_distortion(const AttributedGraph & pattern, const AttributedGraph & host, Norm norm) -> ExtendedReal
        {
            check_dims(pattern, host);
            bool any = false;
            double best = std::numeric_limits<double>::max();
            for_each_hom(pattern.graph(), host.graph(), [&](span<const Vertex> map) {
                any = true;
                double worst = 0.0;
                for (Vertex u = 0; u < pattern.order(); ++u)
                    worst = std::max(worst, feature_distance(pattern.features().row(u), host.features().row(map[static_cast<size_t>(u)]), norm));
                best = std::min(best, worst);
            });
            if (! any)
                return infinity;
            return best;
        }

        auto bidirectional_distortion(const AttributedGraph & g, const AttributedGraph & h, Norm norm) -> ExtendedReal
        {
            return max(one_sided_distortion(g, h, norm), one_sided_distortion(h, g, norm));
        }
    }
}
