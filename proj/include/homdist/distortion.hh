#pragma once

#include <homdist/extended_real.hh>
#include <homdist/features.hh>
#include <homdist/graph.hh>
#include <homdist/hom_engine.hh>
#include <homdist/norm.hh>
#include <homdist/patterns.hh>

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace homdist
{
    /// Per-graph vector of distortions, one coordinate per family member.
    struct DistortionEmbedding
    {
        std::vector<ExtendedReal> values;
        std::string family_checksum;
        bool normalized = false;
        FeatureConfig feature_config;
        Norm norm = Norm::l2;

        auto operator==(const DistortionEmbedding &) const -> bool = default;
    };

    /// Requires identical feature configs on both sides; returns
    /// min over Hom(pattern, g) of the attribute distance, +inf if empty.
    [[nodiscard]] auto distortion_to_pattern(const AttributedGraph & g, const AttributedGraph & pattern, Norm norm,
        const SearchBudget & budget = {}) -> ExtendedReal;

    /// Computes features for both sides under `config` (SPE sentinel resolved
    /// from the pair's orders) and then the one-sided distortion.
    [[nodiscard]] auto distortion_to_pattern(const Graph & g, const Graph & pattern, const FeatureConfig & config, Norm norm,
        const SearchBudget & budget = {}) -> ExtendedReal;

    /// values[i] = distortion_to_pattern(g, family.members[i]); pattern features
    /// are computed here, SPE sentinels per pair.
    [[nodiscard]] auto embed(const Graph & g, const PatternFamily & family, const FeatureConfig & config, Norm norm,
        const SearchBudget & budget = {}) -> DistortionEmbedding;

    /// Variant for precomputed features: `patterns[i]` carries the features of
    /// family.members[i] and every config must equal g.config().
    [[nodiscard]] auto embed(const AttributedGraph & g, const PatternFamily & family, std::span<const AttributedGraph> patterns,
        Norm norm, const SearchBudget & budget = {}) -> DistortionEmbedding;

    /// embed() over a dataset on `threads` workers; output order matches input.
    [[nodiscard]] auto embed_all(std::span<const Graph> graphs, const PatternFamily & family, const FeatureConfig & config,
        Norm norm, int threads, const SearchBudget & budget = {}) -> std::vector<DistortionEmbedding>;

    /// max over coordinates of |a_F - b_F|. Coordinates infinite on both sides
    /// contribute 0; infinite on one side only contribute +inf (only possible
    /// before normalisation). Throws DataError on checksum, length or
    /// normalisation-state mismatch.
    [[nodiscard]] auto pairwise_distance(const DistortionEmbedding & a, const DistortionEmbedding & b) -> ExtendedReal;

    /// Coordinate-wise min-max scaling over the finite entries of the dataset;
    /// constant coordinates map to 0 and +inf maps to 1.
    [[nodiscard]] auto normalize(std::span<const DistortionEmbedding> dataset) -> std::vector<DistortionEmbedding>;

    /// Distinguished iff pairwise_distance(a, b) >= epsilon. Inputs must be normalised.
    [[nodiscard]] auto distinguish(const DistortionEmbedding & a, const DistortionEmbedding & b, double epsilon) -> bool;

    struct SampledEmbeddingConfig
    {
        int n_max = 5;
        int num_patterns = 200;
        int homs_per_pattern = 50;
        std::uint64_t seed = 0;
        SearchBudget budget{1'000'000};
    };

    struct SampledEntry
    {
        int index = 0;
        Graph pattern;
        ExtendedReal value;
        bool forward_empty = false;   // no sampled map G -> F
        bool backward_empty = false;  // no sampled map F -> G
        bool budget_exhausted = false;

        auto operator==(const SampledEntry &) const -> bool = default;
    };

    /// Sparse embedding: one entry per sampled pattern, keyed by draw index.
    struct SampledEmbedding
    {
        std::vector<SampledEntry> entries;

        auto operator==(const SampledEmbedding &) const -> bool = default;

        /// One "index<TAB>graph6<TAB>value<TAB>flags" line per entry.
        [[nodiscard]] auto to_text() const -> std::string;
    };

    /// Draws cfg.num_patterns patterns, attaches features under `features`
    /// (SPE sentinel max(|G|, n_max) unless configured), samples
    /// cfg.homs_per_pattern maps in each direction and records
    /// max(min over sampled G->F maps, min over sampled F->G maps) of the
    /// attribute distance; an empty side contributes +inf. Patterns and hom
    /// samples depend only on (seed, draw index), never on g.
    [[nodiscard]] auto sampled_embed(const Graph & g, const SampledEmbeddingConfig & cfg, const FeatureConfig & features,
        Norm norm = Norm::l2) -> SampledEmbedding;

    /// hom(F, g) for every member. Only cycle and tree families are supported.
    [[nodiscard]] auto hom_count_vector(const Graph & g, const PatternFamily & family) -> std::vector<BigInt>;
}
