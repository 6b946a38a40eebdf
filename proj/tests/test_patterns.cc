#include <doctest.h>

#include <homdist/errors.hh>
#include <homdist/graph6.hh>
#include <homdist/oracle.hh>
#include <homdist/patterns.hh>
#include <homdist/random_graphs.hh>

using namespace homdist;

TEST_CASE("cycle families")
{
    auto triangle = gen_cycles(3, 3);
    REQUIRE(triangle.size() == 1);
    CHECK(triangle.members[0].edges() == std::vector<Edge>{{0, 1}, {0, 2}, {1, 2}});
    CHECK(triangle.treewidth_class == 2);

    auto f1 = gen_cycles(3, 8);
    CHECK(f1.size() == 6);
    for (int i = 0; i < f1.size(); ++i) {
        const auto & c = f1.members[static_cast<size_t>(i)];
        CHECK(c.order() == 3 + i);
        CHECK(c.size() == 3 + i);
        CHECK(c.is_connected());
        CHECK(c.degree_sequence() == std::vector<int>(static_cast<size_t>(3 + i), 2));
    }

    CHECK(gen_cycles(4, 4).members[0].degree_sequence() == std::vector<int>{2, 2, 2, 2});
    CHECK(oracle::count_homs(gen_cycles(4, 4).members[0], complete_graph(2)) == 2);

    CHECK_THROWS_AS(gen_cycles(2, 5), DataError);
    CHECK_THROWS_AS(gen_cycles(6, 5), DataError);
    CHECK(gen_cycles(std::vector<int>{8, 9, 10, 11}).size() == 4);
    CHECK_THROWS_AS(gen_cycles(std::vector<int>{4, 4}), DataError);
}

TEST_CASE("small tree families")
{
    auto one = gen_trees(1);
    REQUIRE(one.size() == 1);
    CHECK(one.members[0] == empty_graph(1));

    auto four = gen_trees(4);
    REQUIRE(four.size() == 2);
    bool has_path = false, has_star = false;
    for (const auto & t : four.members) {
        has_path = has_path || oracle::are_isomorphic(t, path_graph(4));
        has_star = has_star || oracle::are_isomorphic(t, star_graph(3));
    }
    CHECK(has_path);
    CHECK(has_star);
    CHECK(four.treewidth_class == 1);

    CHECK(gen_trees(8).size() == 23);
    CHECK_THROWS_AS(gen_trees(0), DataError);
    CHECK_THROWS_AS(gen_trees(13), DataError);
}

TEST_CASE("tree families up to the supported maximum")
{
    CHECK(gen_trees(11).size() == 235);
    auto twelve = gen_trees(12);
    CHECK(twelve.size() == 551);
    for (const auto & t : twelve.members) {
        CHECK(t.is_tree());
        CHECK(t.size() == 11);
    }
}

TEST_CASE("generation is deterministic")
{
    auto a = gen_trees(9), b = gen_trees(9);
    REQUIRE(a.size() == b.size());
    for (int i = 0; i < a.size(); ++i)
        CHECK(write_graph6(a.members[static_cast<size_t>(i)]) == write_graph6(b.members[static_cast<size_t>(i)]));
    CHECK(a.checksum() == b.checksum());
    CHECK(a.checksum() != gen_trees(8).checksum());
    CHECK(gen_cycles(3, 8).checksum() != gen_cycles(3, 7).checksum());
}

TEST_CASE("canonical codes are labelling invariant")
{
    auto rng = CounterRng{23};
    for (int i = 0; i < 100; ++i) {
        auto t = random_tree(1 + static_cast<int>(rng.uniform_below(12)), rng);
        auto code = tree_canonical_code(t);
        CHECK(tree_canonical_code(apply_permutation(t, random_permutation(t.order(), rng))) == code);
        auto rebuilt = tree_from_code(code);
        CHECK(rebuilt.order() == t.order());
        CHECK(tree_canonical_code(rebuilt) == code);
    }
    CHECK_THROWS_AS(tree_canonical_code(cycle_graph(4)), DataError);
    CHECK_THROWS_AS(tree_from_code("(()"), ParseError);
}

TEST_CASE("family specs")
{
    CHECK(parse_family_spec("trees:8").size() == 23);
    CHECK(parse_family_spec("cycles:3-8").size() == 6);
    auto listed = parse_family_spec("cycles:3,4,5,8");
    REQUIRE(listed.size() == 4);
    CHECK(listed.members[3].order() == 8);
    CHECK_THROWS_AS(parse_family_spec("trees:0"), DataError);
    CHECK_THROWS_AS(parse_family_spec("trees"), DataError);
    CHECK_THROWS_AS(parse_family_spec("cycles:3-x"), DataError);
    CHECK_THROWS_AS(parse_family_spec("paths:3"), DataError);
}
