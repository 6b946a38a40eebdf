#pragma once

#include <homdist/graph.hh>

#include <string>
#include <vector>

namespace homdist
{
    enum class FamilyKind
    {
        cycles,
        trees,
        custom
    };

    [[nodiscard]] auto to_string(FamilyKind kind) -> std::string;
    [[nodiscard]] auto parse_family_kind(const std::string & text) -> FamilyKind;

    /// An ordered list of pattern graphs. Member order fixes embedding
    /// coordinates, so it is deterministic for every generator.
    struct PatternFamily
    {
        FamilyKind kind = FamilyKind::custom;
        std::vector<Graph> members;
        int lo = 0;
        int hi = 0;
        /// Member orders for cycle families given as an explicit list.
        std::vector<int> orders;
        int treewidth_class = 0;

        [[nodiscard]] auto size() const -> int { return static_cast<int>(members.size()); }

        /// 16 hex digits of FNV-1a over the kind and the members' graph6 strings.
        [[nodiscard]] auto checksum() const -> std::string;
    };

    /// C_lo, ..., C_hi with edges {i, (i+1) mod k}.
    [[nodiscard]] auto gen_cycles(int lo, int hi) -> PatternFamily;

    /// Cycles of exactly the given orders, in the given order (duplicates rejected).
    [[nodiscard]] auto gen_cycles(const std::vector<int> & orders) -> PatternFamily;

    inline constexpr int max_tree_order = 12;

    /// One representative per free tree on `order` vertices, canonically
    /// labelled and sorted by graph6 string.
    [[nodiscard]] auto gen_trees(int order) -> PatternFamily;

    [[nodiscard]] auto custom_family(std::vector<Graph> members) -> PatternFamily;

    /// Canonical AHU code of a free tree, rooted at its centroid (the smaller
    /// code of the two rootings when there are two centroids).
    [[nodiscard]] auto tree_canonical_code(const Graph & tree) -> std::string;

    /// The tree described by an AHU code, labelled in preorder.
    [[nodiscard]] auto tree_from_code(const std::string & code) -> Graph;

    /// "trees:8", "cycles:3-8" or "cycles:3,4,5,8".
    [[nodiscard]] auto parse_family_spec(const std::string & text) -> PatternFamily;
}
