#include <homdist/brec.hh>
#include <homdist/distortion.hh>
#include <homdist/errors.hh>
#include <homdist/export.hh>
#include <homdist/graph6.hh>
#include <homdist/parallel.hh>
#include <homdist/patterns.hh>
#include <homdist/verify.hh>

#include <CLI11.hpp>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

using namespace homdist;

using std::optional;
using std::size_t;
using std::string;
using std::vector;

namespace
{
    constexpr int exit_ok = 0;
    constexpr int exit_usage = 1;
    constexpr int exit_data = 2;
    constexpr int exit_budget = 3;

    struct FeatureOptions
    {
        string features = "spe";
        int dim = 8;
        optional<double> sp_pad;
        string norm = "l2";
    };

    struct FamilyOptions
    {
        string spec;
        string file;
    };

    auto add_feature_options(CLI::App * app, FeatureOptions & o) -> void
    {
        app->add_option("--features", o.features, "Attribute function")->check(CLI::IsMember({"rwpe", "spe"}))->capture_default_str();
        app->add_option("--dim", o.dim, "Feature dimension")->check(CLI::PositiveNumber)->capture_default_str();
        app->add_option("--sp-pad", o.sp_pad, "SPE sentinel (default: max order of the compared pair)");
        app->add_option("--norm", o.norm, "Feature norm")->check(CLI::IsMember({"l2", "linf"}))->capture_default_str();
    }

    auto add_family_options(CLI::App * app, FamilyOptions & o, const string & default_spec) -> void
    {
        o.spec = default_spec;
        app->add_option("--family", o.spec, "Pattern family: trees:N, cycles:LO-HI or cycles:A,B,...")->capture_default_str();
        app->add_option("--family-file", o.file, "Family written by gen-patterns (path prefix, reads .g6 and .json)");
    }

    auto feature_config(const FeatureOptions & o) -> FeatureConfig
    {
        return FeatureConfig{parse_feature_kind(o.features), o.dim, o.sp_pad};
    }

    auto family_from(const FamilyOptions & o) -> PatternFamily
    {
        if (! o.file.empty())
            return load_family(o.file + ".g6", o.file + ".json");
        return parse_family_spec(o.spec);
    }

    auto write_or_print(const string & path, const string & contents) -> void
    {
        if (path.empty() || path == "-")
            std::cout << contents;
        else
            write_file_atomically(path, contents);
    }

    auto heatmap_ppm(const vector<vector<double>> & matrix) -> string
    {
        auto n = matrix.size();
        size_t cell = n == 0 ? 1 : std::max<size_t>(1, 512 / n);
        auto side = std::max<size_t>(1, n * cell);
        string out = "P6\n" + std::to_string(side) + " " + std::to_string(side) + "\n255\n";
        for (size_t y = 0; y < side; ++y)
            for (size_t x = 0; x < side; ++x) {
                double d = n == 0 ? 0.0 : std::clamp(matrix[y / cell][x / cell], 0.0, 1.0);
                auto level = static_cast<char>(static_cast<unsigned char>(std::lround(255.0 * d)));
                out.append(3, level);
            }
        return out;
    }

    auto cmd_gen_patterns(const FamilyOptions & family_options, const string & out) -> int
    {
        auto family = family_from(family_options);
        write_file_atomically(out + ".g6", family_to_graph6(family));
        write_file_atomically(out + ".json", family_manifest_json(family));
        std::cerr << "wrote " << family.size() << " patterns to " << out << ".g6\n";
        return exit_ok;
    }

    struct EmbedOptions
    {
        string graphs;
        string out;
        bool raw = false;
        optional<double> epsilon;
        optional<double> sigma;
        optional<double> gamma;
    };

    auto cmd_embed(const EmbedOptions & o, const FamilyOptions & family_options, const FeatureOptions & features, int threads, const SearchBudget & budget) -> int
    {
        auto graphs = read_graph6_file(o.graphs);
        auto family = family_from(family_options);
        auto embeddings = embed_all(graphs, family, feature_config(features), parse_norm(features.norm), threads, budget);
        if (! o.raw)
            embeddings = normalize(embeddings);
        auto csv = embeddings_to_csv(embeddings, family);
        auto manifest = make_manifest(embeddings, family, csv, o.epsilon);
        if (embeddings.empty()) {
            manifest.feature_config = feature_config(features);
            manifest.norm = parse_norm(features.norm);
            manifest.normalized = ! o.raw;
        }
        manifest.sigma = o.sigma;
        manifest.gamma = o.gamma;
        write_file_atomically(o.out + ".csv", csv);
        write_file_atomically(o.out + ".json", manifest_to_json(manifest));
        std::cerr << "embedded " << graphs.size() << " graphs against " << family.size() << " patterns\n";
        return exit_ok;
    }

    auto cmd_distmat(const string & embeddings_prefix, const string & family_file, const string & out_csv, const string & out_heatmap) -> int
    {
        auto manifest = manifest_from_json(read_file(embeddings_prefix + ".json"));
        if (! family_file.empty()) {
            auto family = load_family(family_file + ".g6", family_file + ".json");
            if (family.checksum() != manifest.family_checksum)
                throw DataError("family checksum " + family.checksum() + " does not match the embeddings' " + manifest.family_checksum);
        }
        auto embeddings = embeddings_from_csv(read_file(embeddings_prefix + ".csv"), manifest);
        for (const auto & e : embeddings)
            if (! e.normalized)
                throw DataError("distmat needs normalised embeddings (re-run embed without --raw)");

        auto n = embeddings.size();
        vector<vector<double>> matrix(n, vector<double>(n, 0.0));
        for (size_t i = 0; i < n; ++i)
            for (size_t j = 0; j < n; ++j)
                matrix[i][j] = pairwise_distance(embeddings[i], embeddings[j]).value();
        for (size_t i = 0; i < n; ++i) {
            if (matrix[i][i] != 0.0)
                throw HomdistError("distance matrix diagonal is not zero at " + std::to_string(i));
            for (size_t j = 0; j < i; ++j)
                if (matrix[i][j] != matrix[j][i])
                    throw HomdistError("distance matrix is not symmetric at (" + std::to_string(i) + ", " + std::to_string(j) + ")");
        }

        string csv = "id";
        for (size_t j = 0; j < n; ++j)
            csv += "," + std::to_string(j);
        csv += "\n";
        for (size_t i = 0; i < n; ++i) {
            csv += std::to_string(i);
            for (size_t j = 0; j < n; ++j)
                csv += "," + format_double(matrix[i][j]);
            csv += "\n";
        }
        write_or_print(out_csv, csv);
        if (! out_heatmap.empty())
            write_file_atomically(out_heatmap, heatmap_ppm(matrix));
        return exit_ok;
    }

    struct BrecOptions
    {
        string dataset;
        string pairs_index;
        string out;
        double epsilon = 1e-3;
    };

    auto cmd_brec_eval(const BrecOptions & o, const FamilyOptions & family_options, const FeatureOptions & features, std::uint64_t seed, int threads,
        const SearchBudget & budget) -> int
    {
        BrecConfig config;
        config.family = family_from(family_options);
        config.features = feature_config(features);
        config.norm = parse_norm(features.norm);
        config.epsilon = o.epsilon;
        config.seed = seed;
        config.threads = threads;
        config.budget = budget;
        if (! o.pairs_index.empty())
            config.pairs_index = parse_pairs_index(read_file(o.pairs_index));

        auto report = brec_eval(o.dataset, config);
        std::cout << report.to_table();
        for (const auto & row : report.rows)
            if (row.missing)
                std::cerr << "category " << row.code << " (" << row.name << ") not found in " << o.dataset << ", skipped\n";
        if (! o.out.empty()) {
            write_file_atomically(o.out + ".txt", report.to_table());
            write_file_atomically(o.out + ".json", report.to_json());
        }
        return exit_ok;
    }

    struct SampledOptions
    {
        string graphs;
        string out;
        int n_max = 5;
        int num_patterns = 200;
        int homs = 50;
    };

    auto cmd_sampled_embed(const SampledOptions & o, const FeatureOptions & features, std::uint64_t seed, int threads, std::uint64_t budget_nodes) -> int
    {
        auto graphs = read_graph6_file(o.graphs);
        SampledEmbeddingConfig cfg;
        cfg.n_max = o.n_max;
        cfg.num_patterns = o.num_patterns;
        cfg.homs_per_pattern = o.homs;
        cfg.seed = seed;
        cfg.budget = SearchBudget{budget_nodes};

        vector<string> blocks(graphs.size());
        parallel_for(graphs.size(), threads, [&](size_t i) {
            blocks[i] = sampled_embed(graphs[i], cfg, feature_config(features), parse_norm(features.norm)).to_text();
        });
        string out = "# seed " + std::to_string(seed) + " n_max " + std::to_string(o.n_max) + " num_patterns " + std::to_string(o.num_patterns)
            + " homs_per_pattern " + std::to_string(o.homs) + " features " + features.features + " dim " + std::to_string(features.dim) + "\n";
        for (size_t i = 0; i < graphs.size(); ++i)
            out += "graph " + std::to_string(i) + "\n" + blocks[i];
        write_or_print(o.out, out);
        return exit_ok;
    }

    auto cmd_hom_counts(const string & graphs_path, const FamilyOptions & family_options, const string & out, int threads) -> int
    {
        auto graphs = read_graph6_file(graphs_path);
        auto family = family_from(family_options);
        vector<vector<BigInt>> counts(graphs.size());
        parallel_for(graphs.size(), threads, [&](size_t i) { counts[i] = hom_count_vector(graphs[i], family); });
        write_or_print(out, hom_counts_to_csv(counts, family));
        return exit_ok;
    }

    auto cmd_verify(std::uint64_t seed, double scale, double time_budget, const string & mutation) -> int
    {
        VerifyConfig config;
        config.seed = seed;
        config.scale = scale;
        config.time_budget_seconds = time_budget;
        config.mutation = parse_mutation(mutation);
        auto report = run_verify(config);
        std::cout << report.to_text();
        std::cout << (report.ok() ? "verify: all suites passed\n" : "verify: FAILED\n");
        return report.ok() ? exit_ok : exit_budget;
    }
}

auto main(int argc, char * argv[]) -> int
{
    CLI::App app{"Homomorphism distortion embeddings and distances"};
    app.fallthrough();
    app.require_subcommand(1);

    std::uint64_t seed = 0;
    int threads = 0;
    std::uint64_t budget_nodes = SearchBudget{}.max_nodes;
    app.add_option("--seed", seed, "Random seed")->capture_default_str();
    app.add_option("--threads", threads, "Worker threads (default: HOMDIST_THREADS, else all cores)");
    app.add_option("--budget", budget_nodes, "Node-expansion limit for backtracking searches")->capture_default_str();

    FeatureOptions features;
    FamilyOptions family;

    auto * gen = app.add_subcommand("gen-patterns", "Write a pattern family as graph6 plus a JSON manifest");
    string gen_out;
    add_family_options(gen, family, "trees:8");
    gen->add_option("-o,--out", gen_out, "Output path prefix")->required();

    auto * embed_cmd = app.add_subcommand("embed", "Distortion embeddings of a graph6 dataset");
    EmbedOptions embed_options;
    embed_cmd->add_option("graphs", embed_options.graphs, "graph6 file, one graph per line")->required();
    embed_cmd->add_option("-o,--out", embed_options.out, "Output path prefix (.csv and .json)")->required();
    embed_cmd->add_flag("--raw", embed_options.raw, "Skip dataset normalisation");
    embed_cmd->add_option("--epsilon", embed_options.epsilon, "Threshold recorded in the manifest");
    embed_cmd->add_option("--sigma", embed_options.sigma, "Opaque parameter recorded in the manifest");
    embed_cmd->add_option("--gamma", embed_options.gamma, "Opaque parameter recorded in the manifest");
    add_family_options(embed_cmd, family, "trees:8");
    add_feature_options(embed_cmd, features);

    auto * distmat = app.add_subcommand("distmat", "Pairwise distance matrix and heatmap from normalised embeddings");
    string distmat_in, distmat_family, distmat_csv, distmat_heatmap;
    distmat->add_option("embeddings", distmat_in, "Embedding path prefix written by embed")->required();
    distmat->add_option("--family-file", distmat_family, "Check the embeddings against this family");
    distmat->add_option("-o,--out", distmat_csv, "Matrix CSV (default: stdout)");
    distmat->add_option("--heatmap", distmat_heatmap, "Binary PPM heatmap, darker = closer");

    auto * brec = app.add_subcommand("brec-eval", "Distinguished-pair percentages per benchmark category");
    BrecOptions brec_options;
    brec->add_option("dataset", brec_options.dataset, "Directory with basic/regular/extension/cfi/4vtx/dr .g6 files")->required();
    brec->add_option("--pairs-index", brec_options.pairs_index, "File of 'category i j' lines overriding consecutive pairs");
    brec->add_option("--epsilon", brec_options.epsilon, "Distinguishing threshold")->capture_default_str();
    brec->add_option("-o,--out", brec_options.out, "Report path prefix (.txt and .json)");
    add_family_options(brec, family, "trees:8");
    add_feature_options(brec, features);

    auto * sampled = app.add_subcommand("sampled-embed", "Randomised embeddings from sampled patterns and homomorphisms");
    SampledOptions sampled_options;
    sampled->add_option("graphs", sampled_options.graphs, "graph6 file")->required();
    sampled->add_option("-o,--out", sampled_options.out, "Output file (default: stdout)");
    sampled->add_option("--n-max", sampled_options.n_max, "Largest sampled pattern order")->check(CLI::PositiveNumber)->capture_default_str();
    sampled->add_option("--num-patterns", sampled_options.num_patterns, "Sampled patterns per graph")->check(CLI::PositiveNumber)->capture_default_str();
    sampled->add_option("--homs", sampled_options.homs, "Sampled homomorphisms per direction")->check(CLI::PositiveNumber)->capture_default_str();
    add_feature_options(sampled, features);

    auto * counts = app.add_subcommand("hom-counts", "Exact homomorphism counts against a cycle or tree family");
    string counts_graphs, counts_out;
    counts->add_option("graphs", counts_graphs, "graph6 file")->required();
    counts->add_option("-o,--out", counts_out, "CSV output (default: stdout)");
    add_family_options(counts, family, "cycles:3-8");

    auto * verify = app.add_subcommand("verify", "Run the oracle cross-check suites");
    double verify_scale = 1.0, verify_time = 600.0;
    string mutation = "none";
    verify->add_option("--scale", verify_scale, "Multiplier on per-suite case counts")->check(CLI::PositiveNumber)->capture_default_str();
    verify->add_option("--time-budget", verify_time, "Seconds before remaining suites are abandoned")->check(CLI::PositiveNumber)->capture_default_str();
    verify->add_option("--mutate", mutation, "Corrupt a kernel on purpose: none, tree-count, cycle-count, bottleneck")->capture_default_str();

    try {
        app.parse(argc, argv);
    }
    catch (const CLI::CallForHelp & e) {
        return app.exit(e);
    }
    catch (const CLI::ParseError & e) {
        app.exit(e);
        return exit_usage;
    }

    SearchBudget budget{budget_nodes};
    try {
        if (gen->parsed())
            return cmd_gen_patterns(family, gen_out);
        if (embed_cmd->parsed())
            return cmd_embed(embed_options, family, features, threads, budget);
        if (distmat->parsed())
            return cmd_distmat(distmat_in, distmat_family, distmat_csv, distmat_heatmap);
        if (brec->parsed())
            return cmd_brec_eval(brec_options, family, features, seed, threads, budget);
        if (sampled->parsed())
            return cmd_sampled_embed(sampled_options, features, seed, threads, budget_nodes);
        if (counts->parsed())
            return cmd_hom_counts(counts_graphs, family, counts_out, threads);
        if (verify->parsed())
            return cmd_verify(seed, verify_scale, verify_time, mutation);
    }
    catch (const BudgetExceeded & e) {
        std::cerr << "homdist: budget exhausted: " << e.what() << "\n";
        return exit_budget;
    }
    catch (const HomdistError & e) {
        std::cerr << "homdist: " << e.what() << "\n";
        return exit_data;
    }
    catch (const std::exception & e) {
        std::cerr << "homdist: " << e.what() << "\n";
        return exit_data;
    }
    return exit_usage;
}
