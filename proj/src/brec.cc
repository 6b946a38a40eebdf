#include <homdist/brec.hh>
#include <homdist/errors.hh>
#include <homdist/export.hh>
#include <homdist/graph6.hh>
#include <homdist/random_graphs.hh>

#include <json.hpp>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <optional>
#include <sstream>

using nlohmann::json;
using std::optional;
using std::pair;
using std::size_t;
using std::string;
using std::vector;

namespace homdist
{
    namespace
    {
        struct LoadedCategory
        {
            vector<pair<Graph, Graph>> pairs;
            int skipped = 0;
        };

        auto read_records(const string & path) -> vector<optional<Graph>>
        {
            std::istringstream in(read_file(path));
            vector<optional<Graph>> records;
            string line;
            while (std::getline(in, line)) {
                if (! line.empty() && line.back() == '\r')
                    line.pop_back();
                if (line.empty())
                    continue;
                try {
                    records.emplace_back(parse_graph6(line));
                }
                catch (const HomdistError &) {
                    records.emplace_back(std::nullopt);
                }
            }
            return records;
        }

        auto load_category(const string & path, const vector<pair<int, int>> * index) -> LoadedCategory
        {
            auto records = read_records(path);
            vector<pair<int, int>> layout;
            if (index)
                layout = *index;
            else {
                for (size_t i = 0; i + 1 < records.size(); i += 2)
                    layout.emplace_back(static_cast<int>(i), static_cast<int>(i + 1));
            }

            LoadedCategory result;
            if (! index && records.size() % 2 == 1)
                ++result.skipped;
            for (auto [i, j] : layout) {
                auto n = static_cast<int>(records.size());
                if (i < 0 || j < 0 || i >= n || j >= n)
                    throw DataError("pair index (" + std::to_string(i) + ", " + std::to_string(j) + ") is out of range for '" + path + "'");
                const auto & a = records[static_cast<size_t>(i)];
                const auto & b = records[static_cast<size_t>(j)];
                if (a && b)
                    result.pairs.emplace_back(*a, *b);
                else
                    ++result.skipped;
            }
            return result;
        }

        auto find_category_file(const string & dir, const string & name) -> optional<string>
        {
            for (const auto * ext : {".g6", ".txt"}) {
                auto path = std::filesystem::path(dir) / (name + ext);
                if (std::filesystem::is_regular_file(path))
                    return path.string();
            }
            return std::nullopt;
        }

        auto sorted_degrees(const Graph & g) -> vector<int>
        {
            auto d = g.degree_sequence();
            std::sort(d.begin(), d.end());
            return d;
        }

        auto two_cycles(int k) -> Graph
        {
            vector<Edge> edges;
            for (int c = 0; c < 2; ++c)
                for (int i = 0; i < k; ++i)
                    edges.push_back({c * k + i, c * k + (i + 1) % k});
            return Graph{2 * k, std::move(edges)};
        }
    }

    auto brec_categories() -> const vector<BrecCategory> &
    {
        static const vector<BrecCategory> categories{
            {"B", "basic"}, {"R", "regular"}, {"E", "extension"}, {"C", "cfi"}, {"4", "4vtx"}, {"D", "dr"}};
        return categories;
    }

    auto brec_percentage(int distinguished, int pairs) -> double
    {
        if (pairs == 0)
            return 0.0;
        return std::round(1000.0 * distinguished / pairs) / 10.0;
    }

    auto parse_pairs_index(const string & text) -> std::map<string, vector<pair<int, int>>>
    {
        std::map<string, vector<pair<int, int>>> result;
        std::istringstream in(text);
        string line;
        int number = 0;
        while (std::getline(in, line)) {
            ++number;
            if (line.empty() || line[0] == '#')
                continue;
            std::istringstream fields(line);
            string category;
            int i, j;
            string rest;
            if (! (fields >> category >> i >> j) || (fields >> rest))
                throw DataError("pairs index line " + std::to_string(number) + ": expected 'category i j'");
            result[category].emplace_back(i, j);
        }
        return result;
    }

    auto distinguish_pairs(const vector<pair<Graph, Graph>> & pairs, const PatternFamily & family, const FeatureConfig & features,
        Norm norm, double epsilon, int threads, const SearchBudget & budget) -> vector<bool>
    {
        vector<Graph> graphs;
        graphs.reserve(2 * pairs.size());
        for (const auto & [a, b] : pairs) {
            graphs.push_back(a);
            graphs.push_back(b);
        }
        auto embeddings = normalize(embed_all(graphs, family, features, norm, threads, budget));
        vector<bool> result;
        result.reserve(pairs.size());
        for (size_t i = 0; i < pairs.size(); ++i)
            result.push_back(distinguish(embeddings[2 * i], embeddings[2 * i + 1], epsilon));
        return result;
    }

    auto brec_eval(const string & dataset_dir, const BrecConfig & config) -> BrecReport
    {
        auto start = std::chrono::steady_clock::now();
        if (! std::filesystem::is_directory(dataset_dir))
            throw DataError("dataset directory '" + dataset_dir + "' does not exist");

        for (const auto & [category, _] : config.pairs_index) {
            auto known = std::ranges::any_of(brec_categories(), [&](const auto & c) { return c.name == category || c.code == category; });
            if (! known)
                throw DataError("pairs index names unknown category '" + category + "'");
        }

        BrecReport report;
        vector<pair<Graph, Graph>> all_pairs;
        vector<size_t> first_pair;
        for (const auto & category : brec_categories()) {
            BrecRow row;
            row.code = category.code;
            row.name = category.name;
            first_pair.push_back(all_pairs.size());
            auto path = find_category_file(dataset_dir, category.name);
            if (! path) {
                row.missing = true;
                report.rows.push_back(row);
                continue;
            }
            // Entries keyed by name and by code are combined.
            std::optional<vector<pair<int, int>>> index;
            for (const auto & key : {category.name, category.code})
                if (auto found = config.pairs_index.find(key); found != config.pairs_index.end()) {
                    if (! index)
                        index.emplace();
                    index->insert(index->end(), found->second.begin(), found->second.end());
                }
            auto loaded = load_category(*path, index ? &*index : nullptr);
            row.pairs = static_cast<int>(loaded.pairs.size());
            row.skipped = loaded.skipped;
            for (auto & p : loaded.pairs)
                all_pairs.push_back(std::move(p));
            report.rows.push_back(row);
        }

        auto verdicts = distinguish_pairs(all_pairs, config.family, config.features, config.norm, config.epsilon, config.threads, config.budget);
        for (size_t r = 0; r < report.rows.size(); ++r) {
            auto & row = report.rows[r];
            for (int p = 0; p < row.pairs; ++p)
                if (verdicts[first_pair[r] + static_cast<size_t>(p)])
                    ++row.distinguished;
            row.percentage = brec_percentage(row.distinguished, row.pairs);
        }

        report.family_kind = to_string(config.family.kind);
        report.family_checksum = config.family.checksum();
        report.family_count = config.family.size();
        report.features = config.features;
        report.norm = config.norm;
        report.epsilon = config.epsilon;
        report.seed = config.seed;
        report.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        return report;
    }

    auto BrecReport::to_table() const -> string
    {
        string out = "category      pairs  distinguished  skipped  percentage\n";
        char line[128];
        for (const auto & row : rows) {
            auto label = row.code + " (" + row.name + ")";
            if (row.missing)
                std::snprintf(line, sizeof(line), "%-12s  missing\n", label.c_str());
            else
                std::snprintf(line, sizeof(line), "%-12s  %5d  %13d  %7d  %10.1f\n", label.c_str(), row.pairs, row.distinguished, row.skipped, row.percentage);
            out += line;
        }
        return out;
    }

    auto BrecReport::to_json() const -> string
    {
        json j;
        j["rows"] = json::array();
        for (const auto & row : rows) {
            json r{{"code", row.code}, {"name", row.name}, {"missing", row.missing}, {"pairs", row.pairs},
                {"distinguished", row.distinguished}, {"skipped", row.skipped}, {"percentage", row.percentage}};
            j["rows"].push_back(r);
        }
        j["manifest"] = {
            {"family", {{"kind", family_kind}, {"count", family_count}, {"checksum", family_checksum}}},
            {"features", {{"kind", to_string(features.kind)}, {"dim", features.dim}, {"sp_pad", features.sp_pad ? json(*features.sp_pad) : json(nullptr)}}},
            {"epsilon", epsilon},
            {"norm", to_string(norm)},
            {"seed", seed},
            {"normalization", "coordinate_min_max over all graphs of the run"},
            {"direction", "pattern_to_graph"},
            {"wall_seconds", wall_seconds}};
        return j.dump(2) + "\n";
    }

    auto make_substitute_suite(std::uint64_t seed, int distinct_pairs, int isomorphic_pairs) -> SubstituteSuite
    {
        SubstituteSuite suite;
        CounterRng root{seed};

        int cycle_pairs = std::min(10, distinct_pairs / 5);
        for (int k = 1; k <= cycle_pairs; ++k)
            suite.distinct.push_back({"2C" + std::to_string(3 * k) + "-vs-C" + std::to_string(6 * k), two_cycles(3 * k), cycle_graph(6 * k)});

        // Move one edge so that the sorted degree sequence changes.
        auto degree_rng = root.split(1);
        while (static_cast<int>(suite.distinct.size()) < distinct_pairs) {
            int n = 5 + static_cast<int>(degree_rng.uniform_below(5));
            auto g = random_graph(n, 0.45, degree_rng);
            vector<Edge> absent;
            for (int u = 0; u < n; ++u)
                for (int v = u + 1; v < n; ++v)
                    if (! g.adjacent(u, v))
                        absent.push_back({u, v});
            if (g.size() == 0 || absent.empty())
                continue;
            auto removed = g.edges()[degree_rng.uniform_below(static_cast<std::uint64_t>(g.size()))];
            auto added = absent[degree_rng.uniform_below(absent.size())];
            vector<Edge> edges;
            for (const auto & e : g.edges())
                if (! (e == removed))
                    edges.push_back(e);
            edges.push_back(added);
            Graph h{n, std::move(edges)};
            if (sorted_degrees(g) == sorted_degrees(h))
                continue;
            suite.distinct.push_back({"degree-" + std::to_string(suite.distinct.size()), std::move(g), std::move(h)});
        }

        auto iso_rng = root.split(2);
        for (int i = 0; i < isomorphic_pairs; ++i) {
            int n = 5 + static_cast<int>(iso_rng.uniform_below(8));
            auto g = random_graph(n, 0.4, iso_rng);
            auto p = random_permutation(n, iso_rng);
            auto h = apply_permutation(g, p);
            suite.isomorphic.push_back({"permuted-" + std::to_string(i), std::move(g), std::move(h)});
        }
        return suite;
    }
}
