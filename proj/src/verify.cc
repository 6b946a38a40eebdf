#include <homdist/distortion.hh>
#include <homdist/errors.hh>
#include <homdist/features.hh>
#include <homdist/graph6.hh>
#include <homdist/hom_engine.hh>
#include <homdist/oracle.hh>
#include <homdist/patterns.hh>
#include <homdist/random_graphs.hh>
#include <homdist/verify.hh>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <functional>
#include <limits>
#include <map>
#include <numeric>
#include <set>

using std::optional;
using std::size_t;
using std::string;
using std::vector;

namespace homdist
{
    namespace
    {
        constexpr size_t max_details = 10;

        class SuiteRun
        {
        public:
            SuiteRun(string name, const SuiteOptions & options) :
                _options(options),
                _start(Clock::now())
            {
                _result.name = std::move(name);
            }

            template <typename Case_>
            auto run(Case_ && one_case) -> SuiteResult
            {
                for (int i = 0; i < _options.cases; ++i) {
                    if (Clock::now() > _options.deadline) {
                        _result.timed_out = true;
                        break;
                    }
                    auto rng = CounterRng{_options.seed}.split(static_cast<std::uint64_t>(i));
                    try {
                        one_case(i, rng);
                    }
                    catch (const std::exception & e) {
                        fail(i, string("exception: ") + e.what());
                    }
                    ++_result.cases;
                }
                return finish();
            }

            auto fail(int index, const string & what) -> void
            {
                ++_result.failures;
                if (_result.details.size() < max_details)
                    _result.details.push_back("case " + std::to_string(index) + " (seed " + std::to_string(_options.seed) + "): " + what);
            }

            auto count_case() -> void { ++_result.cases; }

            auto finish() -> SuiteResult
            {
                _result.seconds = std::chrono::duration<double>(Clock::now() - _start).count();
                return _result;
            }

            [[nodiscard]] auto options() const -> const SuiteOptions & { return _options; }

        private:
            SuiteOptions _options;
            Clock::time_point _start;
            SuiteResult _result;
        };

        auto below(CounterRng & rng, int bound) -> int
        {
            return static_cast<int>(rng.uniform_below(static_cast<std::uint64_t>(bound)));
        }

        auto describe(const Graph & g) -> string
        {
            return g.order() <= graph6_max_order ? write_graph6(g) : "n=" + std::to_string(g.order());
        }

        struct BruteBottleneck
        {
            ExtendedReal value = infinity;
            optional<Homomorphism> witness;
        };

        auto brute_bottleneck(const Graph & pattern, const Graph & host, const CostMatrix & cost) -> BruteBottleneck
        {
            BruteBottleneck best;
            oracle::for_each_hom(pattern, host, [&](std::span<const Vertex> map) {
                double worst = 0.0;
                for (size_t u = 0; u < map.size(); ++u)
                    worst = std::max(worst, cost.at(static_cast<Vertex>(u), map[u]));
                if (ExtendedReal{worst} < best.value) {
                    best.value = worst;
                    best.witness = Homomorphism{vector<Vertex>(map.begin(), map.end())};
                }
            });
            return best;
        }

        auto trace_of_power(const Graph & g, int k) -> BigInt
        {
            auto n = static_cast<size_t>(g.order());
            vector<vector<BigInt>> power(n, vector<BigInt>(n));
            for (size_t i = 0; i < n; ++i)
                power[i][i] = 1;
            for (int step = 0; step < k; ++step) {
                vector<vector<BigInt>> next(n, vector<BigInt>(n));
                for (size_t i = 0; i < n; ++i)
                    for (size_t m = 0; m < n; ++m)
                        if (power[i][m] != 0)
                            for (size_t j = 0; j < n; ++j)
                                if (g.adjacent(static_cast<Vertex>(m), static_cast<Vertex>(j)))
                                    next[i][j] += power[i][m];
                power = std::move(next);
            }
            BigInt trace = 0;
            for (size_t i = 0; i < n; ++i)
                trace += power[i][i];
            return trace;
        }

        auto random_costs(int p, int n, bool integer, CounterRng & rng) -> CostMatrix
        {
            vector<double> entries(static_cast<size_t>(p * n));
            for (auto & c : entries)
                c = integer ? static_cast<double>(below(rng, 5)) : uniform_unit(rng);
            return CostMatrix{p, n, std::move(entries)};
        }

        auto standard_cycle_labelling(const Graph & g) -> bool
        {
            if (! g.is_cycle())
                return true;
            auto order = g.cycle_order();
            for (size_t i = 0; i < order.size(); ++i)
                if (order[i] != static_cast<Vertex>(i))
                    return false;
            return true;
        }

        auto same_value(const ExtendedReal & a, const ExtendedReal & b, double tolerance) -> bool
        {
            if (a.is_infinite() || b.is_infinite())
                return a.is_infinite() && b.is_infinite();
            return std::abs(a.value() - b.value()) <= tolerance;
        }

        auto small_pattern_family() -> PatternFamily
        {
            vector<Graph> members;
            for (int order = 2; order <= 4; ++order)
                for (auto & t : gen_trees(order).members)
                    members.push_back(t);
            members.push_back(cycle_graph(3));
            members.push_back(cycle_graph(4));
            return custom_family(std::move(members));
        }

        auto factorial(int n) -> std::uint64_t
        {
            std::uint64_t f = 1;
            for (int i = 2; i <= n; ++i)
                f *= static_cast<std::uint64_t>(i);
            return f;
        }
    }

    auto to_string(Mutation mutation) -> string
    {
        switch (mutation) {
        case Mutation::none: return "none";
        case Mutation::tree_count: return "tree-count";
        case Mutation::cycle_count: return "cycle-count";
        case Mutation::bottleneck: return "bottleneck";
        }
        throw DataError("unknown mutation");
    }

    auto parse_mutation(const string & text) -> Mutation
    {
        for (auto m : {Mutation::none, Mutation::tree_count, Mutation::cycle_count, Mutation::bottleneck})
            if (to_string(m) == text)
                return m;
        throw DataError("unknown mutation '" + text + "' (expected none, tree-count, cycle-count or bottleneck)");
    }

    auto suite_tree_counts(const SuiteOptions & options) -> SuiteResult
    {
        SuiteRun run{"tree-counts", options};
        return run.run([&](int i, CounterRng & rng) {
            auto tree = random_tree(1 + below(rng, 7), rng);
            auto host = random_graph(1 + below(rng, 7), uniform_unit(rng), rng);
            auto got = count_homs_tree(tree, host);
            if (options.mutation == Mutation::tree_count)
                got += 1;
            auto expected = oracle::count_homs(tree, host);
            if (got != BigInt{expected})
                run.fail(i, "hom(" + describe(tree) + ", " + describe(host) + ") = " + got.str() + ", brute force " + std::to_string(expected));
        });
    }

    auto suite_cycle_counts(const SuiteOptions & options) -> SuiteResult
    {
        SuiteRun run{"cycle-counts", options};
        return run.run([&](int i, CounterRng & rng) {
            int k = 3 + below(rng, 6);
            auto host = random_graph(1 + below(rng, 7), uniform_unit(rng), rng);
            auto got = count_homs_cycle(k, host);
            if (options.mutation == Mutation::cycle_count)
                got += 1;
            auto brute = oracle::count_homs(cycle_graph(k), host);
            auto trace = trace_of_power(host, k);
            if (got != BigInt{brute} || got != trace)
                run.fail(i, "hom(C" + std::to_string(k) + ", " + describe(host) + ") = " + got.str() + ", brute force " + std::to_string(brute) + ", trace " + trace.str());
        });
    }

    auto suite_bottleneck(const SuiteOptions & options) -> SuiteResult
    {
        SuiteRun run{"bottleneck", options};
        return run.run([&](int i, CounterRng & rng) {
            Graph pattern;
            switch (i % 3) {
            case 0: pattern = random_tree(1 + below(rng, 7), rng); break;
            case 1: pattern = cycle_graph(3 + below(rng, 6)); break;
            default: pattern = random_graph(2 + below(rng, 4), 0.5, rng); break;
            }
            auto host = random_graph(1 + below(rng, 7), 0.3 + 0.6 * uniform_unit(rng), rng);
            auto cost = random_costs(pattern.order(), host.order(), (i / 3) % 2 == 0, rng);

            auto got = min_bottleneck_hom(pattern, host, cost);
            if (options.mutation == Mutation::bottleneck && got.value.is_finite())
                got.value = got.value.value() + 0.5;
            auto expected = brute_bottleneck(pattern, host, cost);
            auto where = describe(pattern) + " -> " + describe(host);

            if (! (got.value == expected.value)) {
                run.fail(i, where + ": value " + to_string(got.value) + ", brute force " + to_string(expected.value));
                return;
            }
            if (expected.value.is_infinite()) {
                if (got.witness)
                    run.fail(i, where + ": witness reported for an empty Hom set");
                return;
            }
            if (! got.witness || ! is_homomorphism(pattern, host, *got.witness)) {
                run.fail(i, where + ": missing or invalid witness");
                return;
            }
            double attained = 0.0;
            for (int u = 0; u < pattern.order(); ++u)
                attained = std::max(attained, cost.at(u, got.witness->map[static_cast<size_t>(u)]));
            if (! (ExtendedReal{attained} == expected.value))
                run.fail(i, where + ": witness attains " + format_double(attained) + " instead of " + to_string(expected.value));
            else if (standard_cycle_labelling(pattern) && ! (*got.witness == *expected.witness))
                run.fail(i, where + ": witness is not the lexicographically smallest optimum");
        });
    }

    auto suite_one_sided(const SuiteOptions & options) -> SuiteResult
    {
        SuiteRun run{"one-sided", options};
        return run.run([&](int i, CounterRng & rng) {
            auto g = random_graph(1 + below(rng, 6), 0.3 + 0.6 * uniform_unit(rng), rng);
            Graph pattern;
            switch (i % 3) {
            case 0: pattern = random_tree(1 + below(rng, 5), rng); break;
            case 1: pattern = cycle_graph(3 + below(rng, 4)); break;
            default: pattern = random_graph(1 + below(rng, 4), 0.5, rng); break;
            }

            AttributedGraph a, b;
            switch ((i / 3) % 3) {
            case 0: {
                FeatureConfig config{FeatureKind::rwpe, 3, std::nullopt};
                a = attach_features(g, config);
                b = attach_features(pattern, config);
                break;
            }
            case 1: {
                FeatureConfig config{FeatureKind::spe, 4, 6.0};
                a = attach_features(g, config);
                b = attach_features(pattern, config);
                break;
            }
            default:
                a = AttributedGraph{g, random_integer_features(g.order(), 2, 5, rng)};
                b = AttributedGraph{pattern, random_integer_features(pattern.order(), 2, 5, rng)};
                break;
            }
            auto norm = i % 2 == 0 ? Norm::l2 : Norm::linf;
            auto got = distortion_to_pattern(a, b, norm);
            auto expected = oracle::one_sided_distortion(b, a, norm);
            if (! (got == expected))
                run.fail(i, describe(pattern) + " -> " + describe(g) + ": " + to_string(got) + ", brute force " + to_string(expected));
        });
    }

    auto suite_metric_axioms(const SuiteOptions & options) -> SuiteResult
    {
        constexpr double tolerance = 1e-9;
        SuiteRun run{"metric-axioms", options};
        return run.run([&](int i, CounterRng & rng) {
            vector<AttributedGraph> triple;
            for (int t = 0; t < 3; ++t) {
                auto g = random_graph(1 + below(rng, 6), uniform_unit(rng), rng);
                triple.emplace_back(g, random_integer_features(g.order(), 2, 4, rng));
            }
            const auto & [g, h, k] = std::tie(triple[0], triple[1], triple[2]);
            auto norm = Norm::l2;
            for (const auto & x : triple) {
                auto self = oracle::bidirectional_distortion(x, x, norm);
                if (! same_value(self, 0.0, tolerance))
                    run.fail(i, "d(G,G) = " + to_string(self) + " for " + describe(x.graph()));
            }
            auto gh = oracle::bidirectional_distortion(g, h, norm);
            auto hg = oracle::bidirectional_distortion(h, g, norm);
            auto hk = oracle::bidirectional_distortion(h, k, norm);
            auto gk = oracle::bidirectional_distortion(g, k, norm);
            if (! same_value(gh, hg, tolerance))
                run.fail(i, "asymmetric: " + to_string(gh) + " vs " + to_string(hg));
            if (gh.is_finite() && hk.is_finite() && gk.is_finite() && gk.value() > gh.value() + hk.value() + tolerance)
                run.fail(i, "triangle: d(G,K) = " + to_string(gk) + " > " + to_string(gh) + " + " + to_string(hk));
        });
    }

    auto suite_sup_norm(const SuiteOptions & options) -> SuiteResult
    {
        SuiteRun run{"sup-norm", options};
        return run.run([&](int i, CounterRng & rng) {
            auto g = random_graph(1 + below(rng, 6), uniform_unit(rng), rng);
            int dim = 1 + below(rng, 3);
            AttributedGraph a{g, random_real_features(g.order(), dim, rng)};
            AttributedGraph b{g, random_real_features(g.order(), dim, rng)};
            auto norm = i % 2 == 0 ? Norm::l2 : Norm::linf;
            double bound = 0.0;
            for (int v = 0; v < g.order(); ++v)
                bound = std::max(bound, feature_distance(a.features().row(v), b.features().row(v), norm));
            auto d = oracle::bidirectional_distortion(a, b, norm);
            if (d.is_infinite() || d.value() > bound + 1e-12)
                run.fail(i, describe(g) + ": d = " + to_string(d) + " exceeds sup-norm " + format_double(bound));
        });
    }

    auto suite_permutation_invariance(const SuiteOptions & options) -> SuiteResult
    {
        vector<Graph> members;
        for (int order = 3; order <= 5; ++order)
            for (auto & t : gen_trees(order).members)
                members.push_back(t);
        for (int k = 3; k <= 6; ++k)
            members.push_back(cycle_graph(k));
        auto family = custom_family(std::move(members));

        SuiteRun run{"permutation-invariance", options};
        return run.run([&](int i, CounterRng & rng) {
            auto g = random_graph(1 + below(rng, 10), 0.2 + 0.6 * uniform_unit(rng), rng);
            auto p = random_permutation(g.order(), rng);
            auto h = apply_permutation(g, p);
            FeatureConfig config = i % 2 == 0 ? FeatureConfig{FeatureKind::rwpe, 4, std::nullopt} : FeatureConfig{FeatureKind::spe, 5, std::nullopt};
            auto a = embed(g, family, config, Norm::l2);
            auto b = embed(h, family, config, Norm::l2);
            for (size_t c = 0; c < a.values.size(); ++c)
                if (! same_value(a.values[c], b.values[c], 1e-12)) {
                    run.fail(i, describe(g) + " coordinate " + std::to_string(c) + ": " + to_string(a.values[c]) + " vs " + to_string(b.values[c]));
                    break;
                }
        });
    }

    auto suite_lower_bound(const SuiteOptions & options) -> SuiteResult
    {
        auto family = small_pattern_family();
        SuiteRun run{"lower-bound", options};
        return run.run([&](int i, CounterRng & rng) {
            auto g = random_graph(1 + below(rng, 6), uniform_unit(rng), rng);
            auto h = random_graph(1 + below(rng, 6), uniform_unit(rng), rng);
            FeatureConfig config = i % 2 == 0 ? FeatureConfig{FeatureKind::rwpe, 3, std::nullopt} : FeatureConfig{FeatureKind::spe, 4, 6.0};
            auto d = oracle::bidirectional_distortion(attach_features(g, config), attach_features(h, config), Norm::l2);
            if (d.is_infinite())
                return;
            auto proxy = pairwise_distance(embed(g, family, config, Norm::l2), embed(h, family, config, Norm::l2));
            if (proxy.is_infinite() || proxy.value() > d.value() + 1e-12)
                run.fail(i, describe(g) + " vs " + describe(h) + ": proxy " + to_string(proxy) + " > d " + to_string(d));
        });
    }

    auto suite_tree_enumeration(const SuiteOptions & options) -> SuiteResult
    {
        static const vector<int> expected{1, 1, 1, 2, 3, 6, 11, 23, 47, 106};
        SuiteRun run{"tree-enumeration", options};

        for (int n = 1; n <= 10; ++n) {
            if (Clock::now() > options.deadline)
                break;
            run.count_case();
            auto family = gen_trees(n);
            if (family.size() != expected[static_cast<size_t>(n - 1)]) {
                run.fail(n, "order " + std::to_string(n) + " gives " + std::to_string(family.size()) + " trees");
                continue;
            }

            std::set<string> codes;
            for (size_t m = 0; m < family.members.size(); ++m) {
                const auto & t = family.members[m];
                if (t.order() != n || ! t.is_tree())
                    run.fail(n, "member " + std::to_string(m) + " is not a tree on " + std::to_string(n) + " vertices");
                auto code = tree_canonical_code(t);
                codes.insert(code);
                if (! (tree_from_code(code) == t))
                    run.fail(n, "member " + std::to_string(m) + " is not labelled canonically");
                if (m > 0 && ! (write_graph6(family.members[m - 1]) < write_graph6(t)))
                    run.fail(n, "members are not in strictly increasing graph6 order at " + std::to_string(m));
            }
            if (static_cast<int>(codes.size()) != family.size())
                run.fail(n, "duplicate canonical codes");

            if (n <= 8) {
                // Pairwise non-isomorphic, independently of the canonical codes.
                for (size_t a = 0; a < family.members.size(); ++a)
                    for (size_t b = a + 1; b < family.members.size(); ++b)
                        if (oracle::are_isomorphic(family.members[a], family.members[b]))
                            run.fail(n, "members " + std::to_string(a) + " and " + std::to_string(b) + " are isomorphic");

                // Every labelled tree falls into exactly the class sizes n!/|Aut|.
                std::map<vector<int>, vector<size_t>> by_degrees;
                for (size_t m = 0; m < family.members.size(); ++m) {
                    auto d = family.members[m].degree_sequence();
                    std::sort(d.begin(), d.end());
                    by_degrees[d].push_back(m);
                }
                vector<std::uint64_t> hits(family.members.size(), 0);
                if (n <= 2)
                    hits[0] = 1;
                else {
                    vector<int> sequence(static_cast<size_t>(n - 2), 0);
                    while (true) {
                        auto t = tree_from_pruefer(sequence);
                        auto d = t.degree_sequence();
                        std::sort(d.begin(), d.end());
                        bool placed = false;
                        for (auto m : by_degrees[d])
                            if (oracle::are_isomorphic(t, family.members[m])) {
                                ++hits[m];
                                placed = true;
                                break;
                            }
                        if (! placed) {
                            run.fail(n, "a labelled tree has no representative: " + describe(t));
                            break;
                        }
                        size_t pos = 0;
                        while (pos < sequence.size() && ++sequence[pos] == n)
                            sequence[pos++] = 0;
                        if (pos == sequence.size())
                            break;
                    }
                }
                std::uint64_t total = 0;
                for (size_t m = 0; m < family.members.size(); ++m) {
                    auto class_size = factorial(n) / oracle::count_automorphisms(family.members[m]);
                    total += class_size;
                    if (n > 2 && hits[m] != class_size)
                        run.fail(n, "member " + std::to_string(m) + " represents " + std::to_string(hits[m]) + " labelled trees, expected " + std::to_string(class_size));
                }
                std::uint64_t cayley = 1;
                for (int e = 0; e < n - 2; ++e)
                    cayley *= static_cast<std::uint64_t>(n);
                if (total != cayley)
                    run.fail(n, "sum of n!/|Aut| is " + std::to_string(total) + ", Cayley gives " + std::to_string(cayley));
            }
            else {
                // Random labelled trees of this order all land in the family.
                auto rng = CounterRng{options.seed}.split(static_cast<std::uint64_t>(n));
                for (int r = 0; r < 2000; ++r) {
                    auto t = random_tree(n, rng);
                    if (! codes.contains(tree_canonical_code(t))) {
                        run.fail(n, "random tree " + describe(t) + " has no representative");
                        break;
                    }
                }
            }
        }
        return run.finish();
    }

    auto VerifyReport::ok() const -> bool
    {
        return std::ranges::all_of(suites, [](const auto & s) { return s.ok(); });
    }

    auto VerifyReport::to_text() const -> string
    {
        string out = "suite                    cases  failures  seconds  status\n";
        char line[160];
        for (const auto & s : suites) {
            auto status = s.timed_out ? "TIMEOUT" : (s.failures == 0 ? "PASS" : "FAIL");
            std::snprintf(line, sizeof(line), "%-23s  %5d  %8d  %7.2f  %s\n", s.name.c_str(), s.cases, s.failures, s.seconds, status);
            out += line;
            for (const auto & d : s.details)
                out += "    " + d + "\n";
        }
        return out;
    }

    auto run_verify(const VerifyConfig & config) -> VerifyReport
    {
        auto deadline = Clock::now() + std::chrono::duration_cast<Clock::duration>(std::chrono::duration<double>(config.time_budget_seconds));
        auto scaled = [&](int base) { return std::max(1, static_cast<int>(std::lround(base * config.scale))); };

        using Suite = std::function<SuiteResult(const SuiteOptions &)>;
        const vector<std::pair<Suite, int>> suites{
            {suite_tree_counts, 200},
            {suite_cycle_counts, 200},
            {suite_bottleneck, 300},
            {suite_one_sided, 200},
            {suite_metric_axioms, 200},
            {suite_sup_norm, 200},
            {suite_permutation_invariance, 100},
            {suite_lower_bound, 100},
            {suite_tree_enumeration, 1}};

        VerifyReport report;
        std::uint64_t index = 0;
        for (const auto & [suite, base] : suites) {
            SuiteOptions options;
            options.cases = scaled(base);
            options.seed = mix64(config.seed * 0x100 + index++);
            options.mutation = config.mutation;
            options.deadline = deadline;
            report.suites.push_back(suite(options));
        }
        return report;
    }
}
