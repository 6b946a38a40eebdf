#pragma once

#include <homdist/distortion.hh>
#include <homdist/hom_engine.hh>
#include <homdist/patterns.hh>

#include <optional>
#include <string>
#include <vector>

namespace homdist
{
    /// Writes `contents` to `path` via a temporary file and rename.
    auto write_file_atomically(const std::string & path, const std::string & contents) -> void;
    [[nodiscard]] auto read_file(const std::string & path) -> std::string;

    /// Header "id,<graph6 of each pattern>", then one row per graph: its id
    /// and one value per pattern with 17 significant digits ("inf" for +inf).
    [[nodiscard]] auto embeddings_to_csv(const std::vector<DistortionEmbedding> & embeddings, const PatternFamily & family) -> std::string;

    struct EmbeddingManifest
    {
        std::string family_kind;
        int family_lo = 0;
        int family_hi = 0;
        std::vector<int> family_orders;
        int family_count = 0;
        std::string family_checksum;
        FeatureConfig feature_config;
        Norm norm = Norm::l2;
        bool normalized = false;
        std::optional<double> epsilon;
        /// Recorded verbatim; the library gives them no meaning.
        std::optional<double> sigma;
        std::optional<double> gamma;
        int graphs = 0;
        std::string csv_checksum;
    };

    [[nodiscard]] auto make_manifest(const std::vector<DistortionEmbedding> & embeddings, const PatternFamily & family,
        const std::string & csv, std::optional<double> epsilon) -> EmbeddingManifest;

    [[nodiscard]] auto manifest_to_json(const EmbeddingManifest & manifest) -> std::string;
    [[nodiscard]] auto manifest_from_json(const std::string & text) -> EmbeddingManifest;

    /// Parses a CSV written by embeddings_to_csv, taking family checksum,
    /// normalisation state, feature config and norm from the manifest. Checks
    /// the CSV checksum recorded in the manifest.
    [[nodiscard]] auto embeddings_from_csv(const std::string & csv, const EmbeddingManifest & manifest) -> std::vector<DistortionEmbedding>;

    /// Header "id,<graph6 of each pattern>", rows of exact decimal integers.
    [[nodiscard]] auto hom_counts_to_csv(const std::vector<std::vector<BigInt>> & counts, const PatternFamily & family) -> std::string;
    [[nodiscard]] auto hom_counts_from_csv(const std::string & csv) -> std::vector<std::vector<BigInt>>;

    /// Family as one graph6 line per member, plus its JSON manifest
    /// {kind, params, count, checksum}.
    [[nodiscard]] auto family_to_graph6(const PatternFamily & family) -> std::string;
    [[nodiscard]] auto family_manifest_json(const PatternFamily & family) -> std::string;

    /// Reads a family written by family_to_graph6 / family_manifest_json and
    /// checks count and checksum.
    [[nodiscard]] auto load_family(const std::string & graph6_path, const std::string & manifest_path) -> PatternFamily;

    /// 16 hex digits of FNV-1a over arbitrary text.
    [[nodiscard]] auto text_checksum(const std::string & text) -> std::string;
}
