#include <doctest.h>

#include <homdist/brec.hh>
#include <homdist/errors.hh>
#include <homdist/export.hh>
#include <homdist/graph6.hh>
#include <homdist/oracle.hh>

#include <algorithm>
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

    auto config() -> BrecConfig
    {
        BrecConfig c;
        c.family = gen_trees(5);
        c.features = FeatureConfig{FeatureKind::spe, 6, std::nullopt};
        c.threads = 2;
        return c;
    }
}

TEST_CASE("percentages round to one decimal")
{
    CHECK(brec_percentage(60, 60) == 100.0);
    CHECK(brec_percentage(1, 3) == 33.3);
    CHECK(brec_percentage(2, 3) == 66.7);
    CHECK(brec_percentage(0, 0) == 0.0);
}

TEST_CASE("category files, missing categories and skipped records")
{
    auto dir = temp_dir("brec");
    auto p4 = write_graph6(path_graph(4)), s3 = write_graph6(star_graph(3));
    auto c6 = write_graph6(cycle_graph(6));
    auto two_c3 = write_graph6(Graph{6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}}});
    auto relabelled = write_graph6(apply_permutation(path_graph(4), Permutation({2, 0, 3, 1})));

    write_file_atomically((dir / "basic.g6").string(), p4 + "\n" + s3 + "\n" + p4 + "\n" + relabelled + "\n");
    write_file_atomically((dir / "cfi.txt").string(), two_c3 + "\n" + c6 + "\nnot-graph6\n" + c6 + "\n" + p4 + "\n");

    auto report = brec_eval(dir.string(), config());
    REQUIRE(report.rows.size() == 6);
    const auto & basic = report.rows[0];
    CHECK(basic.pairs == 2);
    CHECK(basic.distinguished == 1); // the relabelled copy is an isomorphic control
    CHECK(basic.percentage == 50.0);
    CHECK(report.rows[1].missing);
    const auto & cfi = report.rows[3];
    CHECK(cfi.pairs == 1);
    CHECK(cfi.skipped == 2);
    CHECK(cfi.distinguished == 1);
    CHECK(report.to_json().find("\"checksum\"") != std::string::npos);
    CHECK(report.to_table().find("missing") != std::string::npos);

    auto indexed = config();
    indexed.pairs_index = parse_pairs_index("basic 0 2\nB 0 3\n");
    auto by_index = brec_eval(dir.string(), indexed);
    CHECK(by_index.rows[0].pairs == 2);
    CHECK(by_index.rows[0].distinguished == 0);

    auto bad_index = config();
    bad_index.pairs_index = parse_pairs_index("basic 0 9\n");
    CHECK_THROWS_AS((void) brec_eval(dir.string(), bad_index), DataError);
    CHECK_THROWS_AS((void) parse_pairs_index("basic 0\n"), DataError);
    CHECK_THROWS_AS((void) brec_eval((dir / "nope").string(), config()), DataError);
}

TEST_CASE("substitute suite construction")
{
    auto suite = make_substitute_suite(1);
    CHECK(suite.distinct.size() == 50);
    CHECK(suite.isomorphic.size() == 50);
    for (const auto & p : suite.distinct) {
        auto d1 = p.first.degree_sequence(), d2 = p.second.degree_sequence();
        std::sort(d1.begin(), d1.end());
        std::sort(d2.begin(), d2.end());
        CHECK((d1 != d2 || p.first.is_connected() != p.second.is_connected()));
        if (p.first.order() <= oracle::guard_order && p.second.order() <= oracle::guard_order)
            CHECK_FALSE(oracle::are_isomorphic(p.first, p.second));
    }
    for (const auto & p : suite.isomorphic)
        CHECK(p.first.degree_sequence().size() == p.second.degree_sequence().size());
    auto again = make_substitute_suite(1);
    CHECK(again.distinct[20].second == suite.distinct[20].second);
}
