#include <homdist/distortion.hh>
#include <homdist/errors.hh>
#include <homdist/graph6.hh>
#include <homdist/oracle.hh>
#include <homdist/parallel.hh>

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <sstream>

using std::size_t;
using std::span;
using std::string;
using std::vector;

namespace homdist
{
    namespace
    {
        auto describe(const FeatureConfig & c) -> string
        {
            string s = to_string(c.kind) + "/dim=" + std::to_string(c.dim);
            if (c.sp_pad)
                s += "/pad=" + format_double(*c.sp_pad);
            return s;
        }

        auto require_same_config(const AttributedGraph & a, const AttributedGraph & b) -> void
        {
            if (! (a.config() == b.config()))
                throw DataError("feature config mismatch: " + describe(a.config()) + " vs " + describe(b.config()));
        }

        auto check_comparable(const DistortionEmbedding & a, const DistortionEmbedding & b) -> void
        {
            if (a.family_checksum != b.family_checksum)
                throw DataError("embeddings come from different pattern families (" + a.family_checksum + " vs " + b.family_checksum + ")");
            if (a.values.size() != b.values.size())
                throw DataError("embeddings have different lengths");
            if (a.normalized != b.normalized)
                throw DataError("cannot compare a normalised embedding with an unnormalised one");
        }

        // Minimum attribute distance over a sample of maps, +inf for an empty sample.
        auto best_over(const AttributedGraph & from, const AttributedGraph & to, const HomSample & sample, Norm norm) -> ExtendedReal
        {
            if (sample.maps.empty())
                return infinity;
            double best = std::numeric_limits<double>::max();
            for (const auto & h : sample.maps)
                best = std::min(best, attribute_distance(from, to, h, norm));
            return best;
        }
    }

    auto distortion_to_pattern(const AttributedGraph & g, const AttributedGraph & pattern, Norm norm, const SearchBudget & budget) -> ExtendedReal
    {
        require_same_config(g, pattern);
        auto cost = CostMatrix::from_features(pattern, g, norm);
        return min_bottleneck_hom(pattern.graph(), g.graph(), cost, budget).value;
    }

    auto distortion_to_pattern(const Graph & g, const Graph & pattern, const FeatureConfig & config, Norm norm, const SearchBudget & budget) -> ExtendedReal
    {
        auto pad = resolve_sp_pad(config, g.order(), pattern.order());
        return distortion_to_pattern(attach_features(g, config, pad), attach_features(pattern, config, pad), norm, budget);
    }

    auto embed(const Graph & g, const PatternFamily & family, const FeatureConfig & config, Norm norm, const SearchBudget & budget) -> DistortionEmbedding
    {
        DistortionEmbedding result;
        result.family_checksum = family.checksum();
        result.feature_config = config;
        result.norm = norm;
        result.values.reserve(family.members.size());

        // Features depend on the resolved SPE sentinel only, so cache per value.
        std::map<double, AttributedGraph> host_cache;
        for (const auto & pattern : family.members) {
            auto pad = resolve_sp_pad(config, g.order(), pattern.order());
            auto found = host_cache.find(pad);
            if (found == host_cache.end())
                found = host_cache.emplace(pad, attach_features(g, config, pad)).first;
            result.values.push_back(distortion_to_pattern(found->second, attach_features(pattern, config, pad), norm, budget));
        }
        return result;
    }

    auto embed(const AttributedGraph & g, const PatternFamily & family, span<const AttributedGraph> patterns, Norm norm, const SearchBudget & budget) -> DistortionEmbedding
    {
        if (patterns.size() != family.members.size())
            throw DataError("precomputed pattern features do not match the family size");
        DistortionEmbedding result;
        result.family_checksum = family.checksum();
        result.feature_config = g.config();
        result.norm = norm;
        for (size_t i = 0; i < patterns.size(); ++i) {
            if (! (patterns[i].graph() == family.members[i]))
                throw DataError("precomputed pattern " + std::to_string(i) + " is not the family member it claims to be");
            result.values.push_back(distortion_to_pattern(g, patterns[i], norm, budget));
        }
        return result;
    }

    auto embed_all(span<const Graph> graphs, const PatternFamily & family, const FeatureConfig & config, Norm norm, int threads,
        const SearchBudget & budget) -> vector<DistortionEmbedding>
    {
        vector<DistortionEmbedding> result(graphs.size());
        parallel_for(graphs.size(), threads, [&](size_t i) {
            result[i] = embed(graphs[i], family, config, norm, budget);
        });
        return result;
    }

    auto pairwise_distance(const DistortionEmbedding & a, const DistortionEmbedding & b) -> ExtendedReal
    {
        check_comparable(a, b);
        ExtendedReal worst = 0.0;
        for (size_t i = 0; i < a.values.size(); ++i) {
            const auto & x = a.values[i];
            const auto & y = b.values[i];
            if (x.is_infinite() && y.is_infinite())
                continue;
            if (x.is_infinite() || y.is_infinite())
                return infinity;
            worst = max(worst, ExtendedReal{std::abs(x.value() - y.value())});
        }
        return worst;
    }

    auto normalize(span<const DistortionEmbedding> dataset) -> vector<DistortionEmbedding>
    {
        vector<DistortionEmbedding> result(dataset.begin(), dataset.end());
        if (dataset.empty())
            return result;

        const auto & first = dataset.front();
        for (const auto & e : dataset) {
            if (e.family_checksum != first.family_checksum || e.values.size() != first.values.size())
                throw DataError("cannot normalise embeddings from different pattern families");
            if (e.normalized)
                throw DataError("embedding is already normalised");
        }

        // Two passes: statistics first, then the affine map.
        auto width = first.values.size();
        vector<double> lo(width, std::numeric_limits<double>::infinity()), hi(width, -std::numeric_limits<double>::infinity());
        for (const auto & e : dataset)
            for (size_t i = 0; i < width; ++i)
                if (e.values[i].is_finite()) {
                    lo[i] = std::min(lo[i], e.values[i].value());
                    hi[i] = std::max(hi[i], e.values[i].value());
                }

        for (auto & e : result) {
            for (size_t i = 0; i < width; ++i) {
                auto & x = e.values[i];
                if (x.is_infinite())
                    x = 1.0;
                else if (hi[i] > lo[i])
                    x = std::clamp((x.value() - lo[i]) / (hi[i] - lo[i]), 0.0, 1.0);
                else
                    x = 0.0;
            }
            e.normalized = true;
        }
        return result;
    }

    auto distinguish(const DistortionEmbedding & a, const DistortionEmbedding & b, double epsilon) -> bool
    {
        if (! a.normalized || ! b.normalized)
            throw DataError("distinguish expects normalised embeddings");
        return pairwise_distance(a, b) >= ExtendedReal{epsilon};
    }

    auto SampledEmbedding::to_text() const -> string
    {
        std::ostringstream out;
        for (const auto & e : entries) {
            out << e.index << '\t' << write_graph6(e.pattern) << '\t' << to_string(e.value) << '\t';
            string flags;
            if (e.forward_empty)
                flags += 'f';
            if (e.backward_empty)
                flags += 'b';
            if (e.budget_exhausted)
                flags += 'x';
            out << (flags.empty() ? "-" : flags) << '\n';
        }
        return out.str();
    }

    auto sampled_embed(const Graph & g, const SampledEmbeddingConfig & cfg, const FeatureConfig & features, Norm norm) -> SampledEmbedding
    {
        if (cfg.n_max < 1 || cfg.num_patterns < 1 || cfg.homs_per_pattern < 1)
            throw DataError("sampled embedding needs n_max, num_patterns and homs_per_pattern all >= 1");

        auto pad = resolve_sp_pad(features, g.order(), cfg.n_max);
        auto host = attach_features(g, features, pad);
        CounterRng root{cfg.seed};

        SampledEmbedding result;
        result.entries.reserve(static_cast<size_t>(cfg.num_patterns));
        for (int i = 0; i < cfg.num_patterns; ++i) {
            auto draw = root.split(static_cast<std::uint64_t>(i));
            auto pattern_rng = draw.split(0);
            SampledEntry entry;
            entry.index = i;
            entry.pattern = sample_pattern(cfg.n_max, pattern_rng);
            auto pattern = attach_features(entry.pattern, features, pad);

            ExtendedReal forward = infinity, backward = infinity;
            try {
                auto to_pattern = sample_homs(g, entry.pattern, cfg.homs_per_pattern, draw.split(1), cfg.budget);
                entry.forward_empty = to_pattern.hom_empty;
                forward = best_over(host, pattern, to_pattern, norm);
            }
            catch (const BudgetExceeded &) {
                entry.budget_exhausted = true;
            }
            try {
                auto to_graph = sample_homs(entry.pattern, g, cfg.homs_per_pattern, draw.split(2), cfg.budget);
                entry.backward_empty = to_graph.hom_empty;
                backward = best_over(pattern, host, to_graph, norm);
            }
            catch (const BudgetExceeded &) {
                entry.budget_exhausted = true;
            }
            entry.value = max(forward, backward);
            result.entries.push_back(std::move(entry));
        }
        return result;
    }

    auto hom_count_vector(const Graph & g, const PatternFamily & family) -> vector<BigInt>
    {
        if (family.kind != FamilyKind::cycles && family.kind != FamilyKind::trees)
            throw UnsupportedError("hom-count vectors are defined for cycle and tree families only");
        vector<BigInt> result;
        result.reserve(family.members.size());
        for (const auto & pattern : family.members)
            result.push_back(family.kind == FamilyKind::trees ? count_homs_tree(pattern, g) : count_homs_cycle(pattern.order(), g));
        return result;
    }
}
