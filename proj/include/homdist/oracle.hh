#pragma once

#include <homdist/extended_real.hh>
#include <homdist/graph.hh>
#include <homdist/norm.hh>

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

namespace homdist
{
    /// A total map from pattern vertices to host vertices.
    struct Homomorphism
    {
        std::vector<Vertex> map;

        [[nodiscard]] auto pattern_order() const -> int { return static_cast<int>(map.size()); }

        auto operator==(const Homomorphism &) const -> bool = default;
        auto operator<=>(const Homomorphism &) const = default;
    };

    /// True iff `h` is a total map into `host` sending every pattern edge to a host edge.
    [[nodiscard]] auto is_homomorphism(const Graph & pattern, const Graph & host, const Homomorphism & h) -> bool;

    /// Attribute distance of a fixed map: max over pattern vertices of ||f(v) - f'(h(v))||.
    [[nodiscard]] auto attribute_distance(const AttributedGraph & pattern, const AttributedGraph & host,
        const Homomorphism & h, Norm norm) -> double;

    namespace oracle
    {
        /// Both graphs must have at most this many vertices.
        inline constexpr int guard_order = 8;

        /// Calls `visit` once per homomorphism, in lexicographic order of the
        /// image array. Exhaustive: every partial map is extended over every
        /// host vertex and rejected only when an already-mapped edge breaks.
        auto for_each_hom(const Graph & pattern, const Graph & host,
            const std::function<void(std::span<const Vertex>)> & visit) -> std::uint64_t;

        [[nodiscard]] auto enumerate_homs(const Graph & pattern, const Graph & host) -> std::vector<Homomorphism>;

        [[nodiscard]] auto count_homs(const Graph & pattern, const Graph & host) -> std::uint64_t;

        /// Exhaustive search over vertex bijections.
        [[nodiscard]] auto are_isomorphic(const Graph & a, const Graph & b) -> bool;

        /// |Aut(g)| by exhaustive search over bijections.
        [[nodiscard]] auto count_automorphisms(const Graph & g) -> std::uint64_t;

        /// inf over Hom(pattern, host) of the attribute distance; +inf when empty.
        [[nodiscard]] auto one_sided_distortion(const AttributedGraph & pattern, const AttributedGraph & host, Norm norm) -> ExtendedReal;

        /// max of the two one-sided distortions.
        [[nodiscard]] auto bidirectional_distortion(const AttributedGraph & g, const AttributedGraph & h, Norm norm) -> ExtendedReal;
    }
}
