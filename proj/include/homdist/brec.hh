#pragma once

#include <homdist/distortion.hh>
#include <homdist/patterns.hh>

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace homdist
{
    struct BrecCategory
    {
        std::string code;  // B, R, E, C, 4, D
        std::string name;  // file stem: basic, regular, extension, cfi, 4vtx, dr
    };

    /// The six categories in report order.
    [[nodiscard]] auto brec_categories() -> const std::vector<BrecCategory> &;

    /// 100 * distinguished / pairs rounded to one decimal; 0 when pairs == 0.
    [[nodiscard]] auto brec_percentage(int distinguished, int pairs) -> double;

    struct BrecRow
    {
        std::string code;
        std::string name;
        bool missing = false;
        int pairs = 0;
        int distinguished = 0;
        /// Pairs dropped because a record failed to parse or needed long-form graph6.
        int skipped = 0;
        double percentage = 0.0;
    };

    struct BrecConfig
    {
        PatternFamily family;
        FeatureConfig features;
        Norm norm = Norm::l2;
        double epsilon = 1e-3;
        std::uint64_t seed = 0;
        int threads = 0;
        SearchBudget budget;
        /// Per-category record-index pairs overriding the consecutive-pair layout.
        std::map<std::string, std::vector<std::pair<int, int>>> pairs_index;
    };

    struct BrecReport
    {
        std::vector<BrecRow> rows;
        std::string family_kind;
        std::string family_checksum;
        int family_count = 0;
        FeatureConfig features;
        Norm norm = Norm::l2;
        double epsilon = 0.0;
        std::uint64_t seed = 0;
        double wall_seconds = 0.0;

        [[nodiscard]] auto to_table() const -> std::string;
        [[nodiscard]] auto to_json() const -> std::string;
    };

    /// Reads "category i j" lines (0-based record indices into that category's file).
    [[nodiscard]] auto parse_pairs_index(const std::string & text) -> std::map<std::string, std::vector<std::pair<int, int>>>;

    /// Embeds both sides of every pair, normalises over all graphs of the run
    /// together, and reports distinguish(a, b, epsilon) per pair.
    [[nodiscard]] auto distinguish_pairs(const std::vector<std::pair<Graph, Graph>> & pairs, const PatternFamily & family,
        const FeatureConfig & features, Norm norm, double epsilon, int threads, const SearchBudget & budget = {}) -> std::vector<bool>;

    /// Reads <dir>/<name>.g6 (or .txt) for each category; missing files give a
    /// row flagged missing. All loaded pairs are evaluated in one run.
    [[nodiscard]] auto brec_eval(const std::string & dataset_dir, const BrecConfig & config) -> BrecReport;

    struct LabelledPair
    {
        std::string label;
        Graph first;
        Graph second;
    };

    /// Constructed stand-in for the benchmark: `distinct` holds non-isomorphic
    /// pairs (degree-sequence-distinct random pairs and 2C_{3k} vs C_{6k}
    /// pairs), `isomorphic` holds random graphs paired with a random relabelling.
    struct SubstituteSuite
    {
        std::vector<LabelledPair> distinct;
        std::vector<LabelledPair> isomorphic;
    };

    [[nodiscard]] auto make_substitute_suite(std::uint64_t seed, int distinct_pairs = 50, int isomorphic_pairs = 50) -> SubstituteSuite;
}
