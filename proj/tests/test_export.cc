#include <doctest.h>

#include <homdist/errors.hh>
#include <homdist/export.hh>
#include <homdist/graph6.hh>

#include <filesystem>

using namespace homdist;

namespace
{
    auto temp_dir(const std::string & name) -> std::filesystem::path
    {
        auto dir = std::filesystem::temp_directory_path() / ("homdist_test_" + name);
        std::filesystem::remove_all(dir);
        std::filesystem::create_directories(dir);
        return dir;
    }

    auto sample_embeddings(const PatternFamily & family) -> std::vector<DistortionEmbedding>
    {
        std::vector<Graph> graphs{cycle_graph(4), complete_graph(4), path_graph(5)};
        return embed_all(graphs, family, FeatureConfig{FeatureKind::rwpe, 3, std::nullopt}, Norm::l2, 2);
    }
}

TEST_CASE("embedding CSV and manifest round trip")
{
    auto family = gen_cycles(3, 5);
    auto raw = sample_embeddings(family);
    REQUIRE(raw[0].values[0].is_infinite());

    for (const auto & embeddings : {raw, normalize(raw)}) {
        auto csv = embeddings_to_csv(embeddings, family);
        auto manifest = make_manifest(embeddings, family, csv, 1e-3);
        auto reread = manifest_from_json(manifest_to_json(manifest));
        CHECK(reread.family_checksum == family.checksum());
        CHECK(reread.epsilon == 1e-3);
        auto back = embeddings_from_csv(csv, reread);
        CHECK(back == embeddings);
        CHECK(embeddings_to_csv(back, family) == csv);
    }

    auto csv = embeddings_to_csv(raw, family);
    CHECK(csv.substr(0, csv.find('\n')) == "id,Bw,Cl,Dhc");
    auto manifest = make_manifest(raw, family, csv, std::nullopt);
    auto tampered = csv;
    tampered[tampered.size() - 2] = '9';
    CHECK_THROWS_AS((void) embeddings_from_csv(tampered, manifest), DataError);
    CHECK_THROWS_AS((void) manifest_from_json("{}"), DataError);
}

TEST_CASE("hom-count CSV round trip")
{
    auto family = gen_trees(5);
    std::vector<Graph> graphs{complete_graph(30), cycle_graph(7)};
    std::vector<std::vector<BigInt>> counts;
    for (const auto & g : graphs)
        counts.push_back(hom_count_vector(g, family));
    auto csv = hom_counts_to_csv(counts, family);
    CHECK(hom_counts_from_csv(csv) == counts);
    CHECK_THROWS_AS((void) hom_counts_from_csv("id,A_\n0,-4\n"), DataError);
    CHECK_THROWS_AS((void) hom_counts_from_csv("id,A_\n0,1,2\n"), DataError);
}

TEST_CASE("family files")
{
    auto dir = temp_dir("family");
    auto family = gen_trees(7);
    write_file_atomically((dir / "t7.g6").string(), family_to_graph6(family));
    write_file_atomically((dir / "t7.json").string(), family_manifest_json(family));
    CHECK_FALSE(std::filesystem::exists(dir / "t7.g6.tmp"));
    auto loaded = load_family((dir / "t7.g6").string(), (dir / "t7.json").string());
    CHECK(loaded.size() == 11);
    CHECK(loaded.checksum() == family.checksum());
    CHECK(loaded.kind == FamilyKind::trees);

    // Dropping a line breaks the count check.
    auto text = family_to_graph6(family);
    write_file_atomically((dir / "t7.g6").string(), text.substr(text.find('\n') + 1));
    CHECK_THROWS_AS((void) load_family((dir / "t7.g6").string(), (dir / "t7.json").string()), DataError);
    CHECK_THROWS_AS((void) read_file((dir / "absent").string()), DataError);
}
