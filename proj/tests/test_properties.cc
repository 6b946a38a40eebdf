#include <doctest.h>

#include <homdist/verify.hh>

using namespace homdist;

namespace
{
    auto options(int cases, std::uint64_t seed, Mutation mutation = Mutation::none) -> SuiteOptions
    {
        SuiteOptions o;
        o.cases = cases;
        o.seed = seed;
        o.mutation = mutation;
        return o;
    }

    auto check_suite(const SuiteResult & r) -> void
    {
        INFO(r.name);
        for (const auto & d : r.details)
            INFO(d);
        CHECK(r.ok());
        CHECK(r.failures == 0);
    }
}

TEST_CASE("cross-module property suites")
{
    check_suite(suite_tree_counts(options(100, 101)));
    check_suite(suite_cycle_counts(options(100, 102)));
    check_suite(suite_bottleneck(options(150, 103)));
    check_suite(suite_one_sided(options(100, 104)));
    check_suite(suite_metric_axioms(options(50, 105)));
    check_suite(suite_sup_norm(options(50, 106)));
    check_suite(suite_permutation_invariance(options(50, 107)));
    check_suite(suite_lower_bound(options(50, 108)));
}

TEST_CASE("corrupted kernels are caught")
{
    CHECK(suite_tree_counts(options(20, 1, Mutation::tree_count)).failures == 20);
    CHECK(suite_cycle_counts(options(20, 1, Mutation::cycle_count)).failures == 20);
    CHECK(suite_bottleneck(options(30, 1, Mutation::bottleneck)).failures > 0);
}

TEST_CASE("deadlines stop a suite and mark it")
{
    auto o = options(1000, 1);
    o.deadline = Clock::now();
    auto r = suite_metric_axioms(o);
    CHECK(r.timed_out);
    CHECK_FALSE(r.ok());
}

TEST_CASE("mutation names")
{
    CHECK(parse_mutation("tree-count") == Mutation::tree_count);
    CHECK(to_string(Mutation::bottleneck) == "bottleneck");
    CHECK_THROWS(parse_mutation("everything"));
}
