#pragma once

#include <chrono>
#include <cstdint>
#include <string>
#include <vector>

namespace homdist
{
    /// Deliberate kernel corruptions used to check that the suites can fail.
    enum class Mutation
    {
        none,
        tree_count,  // tree DP result + 1
        cycle_count, // cycle count result + 1
        bottleneck   // bottleneck value + 0.5
    };

    [[nodiscard]] auto to_string(Mutation mutation) -> std::string;
    [[nodiscard]] auto parse_mutation(const std::string & text) -> Mutation;

    using Clock = std::chrono::steady_clock;

    struct SuiteResult
    {
        std::string name;
        int cases = 0;
        int failures = 0;
        bool timed_out = false;
        double seconds = 0.0;
        /// First few failures, each with the seed that reproduces it.
        std::vector<std::string> details;

        [[nodiscard]] auto ok() const -> bool { return failures == 0 && ! timed_out; }
    };

    struct SuiteOptions
    {
        int cases = 100;
        std::uint64_t seed = 1;
        Mutation mutation = Mutation::none;
        Clock::time_point deadline = Clock::time_point::max();
    };

    /// count_homs_tree against exhaustive enumeration: random trees of order
    /// 1..7, random hosts of order 1..7.
    [[nodiscard]] auto suite_tree_counts(const SuiteOptions & options) -> SuiteResult;

    /// count_homs_cycle against exhaustive enumeration and against an explicit
    /// trace(A^k), for C3..C8 and random hosts of order 1..7.
    [[nodiscard]] auto suite_cycle_counts(const SuiteOptions & options) -> SuiteResult;

    /// min_bottleneck_hom against exhaustive min-max for tree, cycle and
    /// general patterns, with integer and real costs; checks the witness too.
    [[nodiscard]] auto suite_bottleneck(const SuiteOptions & options) -> SuiteResult;

    /// distortion_to_pattern equals the oracle's one-sided distortion.
    [[nodiscard]] auto suite_one_sided(const SuiteOptions & options) -> SuiteResult;

    /// Identity, symmetry and triangle inequality of the exhaustive
    /// bidirectional distortion on triples of order <= 6 with integer features.
    [[nodiscard]] auto suite_metric_axioms(const SuiteOptions & options) -> SuiteResult;

    /// d((V,E,f),(V,E,g)) <= max_v ||f(v) - g(v)|| on graphs of order <= 6.
    [[nodiscard]] auto suite_sup_norm(const SuiteOptions & options) -> SuiteResult;

    /// embed(pi(g)) == embed(g) to 1e-12 for RWPE and SPE features.
    [[nodiscard]] auto suite_permutation_invariance(const SuiteOptions & options) -> SuiteResult;

    /// max_F |d(G,F) - d(G',F)| <= d(G,G') whenever the latter is finite.
    [[nodiscard]] auto suite_lower_bound(const SuiteOptions & options) -> SuiteResult;

    /// gen_trees sizes for orders 1..10, Pruefer cross-check up to order 8,
    /// Cayley's formula through automorphism counts, canonical-code consistency.
    /// `cases` is ignored.
    [[nodiscard]] auto suite_tree_enumeration(const SuiteOptions & options) -> SuiteResult;

    struct VerifyConfig
    {
        std::uint64_t seed = 1;
        double scale = 1.0;
        double time_budget_seconds = 600.0;
        Mutation mutation = Mutation::none;
    };

    struct VerifyReport
    {
        std::vector<SuiteResult> suites;

        [[nodiscard]] auto ok() const -> bool;
        [[nodiscard]] auto to_text() const -> std::string;
    };

    /// Runs every suite in turn; suites not started before the time budget
    /// runs out are reported as timed out.
    [[nodiscard]] auto run_verify(const VerifyConfig & config) -> VerifyReport;
}
