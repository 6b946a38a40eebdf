#include <homdist/errors.hh>
#include <homdist/export.hh>
#include <homdist/graph6.hh>

#include <json.hpp>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

using nlohmann::json;
using std::size_t;
using std::string;
using std::vector;

namespace homdist
{
    namespace
    {
        auto split(const string & line, char sep) -> vector<string>
        {
            vector<string> parts;
            string item;
            std::stringstream ss(line);
            while (std::getline(ss, item, sep))
                parts.push_back(item);
            if (! line.empty() && line.back() == sep)
                parts.emplace_back();
            return parts;
        }

        auto lines_of(const string & text) -> vector<string>
        {
            vector<string> result;
            string line;
            std::stringstream ss(text);
            while (std::getline(ss, line)) {
                if (! line.empty() && line.back() == '\r')
                    line.pop_back();
                if (! line.empty())
                    result.push_back(line);
            }
            return result;
        }

        auto header_for(const PatternFamily & family) -> string
        {
            string header = "id";
            for (const auto & g : family.members)
                header += "," + write_graph6(g);
            return header + "\n";
        }

        auto config_to_json(const FeatureConfig & c) -> json
        {
            json j;
            j["kind"] = to_string(c.kind);
            j["dim"] = c.dim;
            j["sp_pad"] = c.sp_pad ? json(*c.sp_pad) : json(nullptr);
            return j;
        }

        auto config_from_json(const json & j) -> FeatureConfig
        {
            FeatureConfig c;
            c.kind = parse_feature_kind(j.at("kind").get<string>());
            c.dim = j.at("dim").get<int>();
            if (j.contains("sp_pad") && ! j["sp_pad"].is_null())
                c.sp_pad = j["sp_pad"].get<double>();
            return c;
        }
    }

    auto text_checksum(const string & text) -> string
    {
        std::uint64_t hash = 14695981039346656037ull;
        for (unsigned char c : text) {
            hash ^= c;
            hash *= 1099511628211ull;
        }
        char buffer[17];
        std::snprintf(buffer, sizeof(buffer), "%016llx", static_cast<unsigned long long>(hash));
        return buffer;
    }

    auto write_file_atomically(const string & path, const string & contents) -> void
    {
        auto temp = path + ".tmp";
        {
            std::ofstream out(temp, std::ios::binary | std::ios::trunc);
            if (! out)
                throw DataError("cannot open '" + temp + "' for writing");
            out << contents;
            out.flush();
            if (! out)
                throw DataError("failed writing '" + temp + "'");
        }
        std::error_code ec;
        std::filesystem::rename(temp, path, ec);
        if (ec)
            throw DataError("cannot rename '" + temp + "' to '" + path + "': " + ec.message());
    }

    auto read_file(const string & path) -> string
    {
        std::ifstream in(path, std::ios::binary);
        if (! in)
            throw DataError("cannot open '" + path + "'");
        std::ostringstream ss;
        ss << in.rdbuf();
        return ss.str();
    }

    auto embeddings_to_csv(const vector<DistortionEmbedding> & embeddings, const PatternFamily & family) -> string
    {
        string out = header_for(family);
        for (size_t i = 0; i < embeddings.size(); ++i) {
            if (embeddings[i].values.size() != family.members.size())
                throw DataError("embedding " + std::to_string(i) + " does not match the family size");
            out += std::to_string(i);
            for (const auto & v : embeddings[i].values)
                out += "," + to_string(v);
            out += "\n";
        }
        return out;
    }

    auto make_manifest(const vector<DistortionEmbedding> & embeddings, const PatternFamily & family, const string & csv,
        std::optional<double> epsilon) -> EmbeddingManifest
    {
        EmbeddingManifest m;
        m.family_kind = to_string(family.kind);
        m.family_lo = family.lo;
        m.family_hi = family.hi;
        m.family_orders = family.orders;
        m.family_count = family.size();
        m.family_checksum = family.checksum();
        if (! embeddings.empty()) {
            m.feature_config = embeddings.front().feature_config;
            m.norm = embeddings.front().norm;
            m.normalized = embeddings.front().normalized;
        }
        m.epsilon = epsilon;
        m.graphs = static_cast<int>(embeddings.size());
        m.csv_checksum = text_checksum(csv);
        return m;
    }

    auto manifest_to_json(const EmbeddingManifest & m) -> string
    {
        json j;
        j["format"] = "homdist-embedding/1";
        j["family"] = {
            {"kind", m.family_kind},
            {"params", {{"lo", m.family_lo}, {"hi", m.family_hi}, {"orders", m.family_orders}}},
            {"count", m.family_count},
            {"checksum", m.family_checksum}};
        j["feature_config"] = config_to_json(m.feature_config);
        j["norm"] = to_string(m.norm);
        j["normalized"] = m.normalized;
        j["normalization"] = {{"scope", "dataset"}, {"method", "coordinate_min_max"}, {"constant_coordinate", 0.0}, {"infinity_maps_to", 1.0}};
        j["direction"] = "pattern_to_graph";
        j["epsilon"] = m.epsilon ? json(*m.epsilon) : json(nullptr);
        j["opaque"] = {{"sigma", m.sigma ? json(*m.sigma) : json(nullptr)}, {"gamma", m.gamma ? json(*m.gamma) : json(nullptr)}};
        j["graphs"] = m.graphs;
        j["checksums"] = {{"family", m.family_checksum}, {"csv", m.csv_checksum}};
        return j.dump(2) + "\n";
    }

    auto manifest_from_json(const string & text) -> EmbeddingManifest
    {
        try {
            auto j = json::parse(text);
            EmbeddingManifest m;
            const auto & family = j.at("family");
            m.family_kind = family.at("kind").get<string>();
            m.family_lo = family.at("params").at("lo").get<int>();
            m.family_hi = family.at("params").at("hi").get<int>();
            m.family_orders = family.at("params").at("orders").get<vector<int>>();
            m.family_count = family.at("count").get<int>();
            m.family_checksum = family.at("checksum").get<string>();
            m.feature_config = config_from_json(j.at("feature_config"));
            m.norm = parse_norm(j.at("norm").get<string>());
            m.normalized = j.at("normalized").get<bool>();
            if (j.contains("epsilon") && ! j["epsilon"].is_null())
                m.epsilon = j["epsilon"].get<double>();
            if (j.contains("opaque")) {
                const auto & opaque = j["opaque"];
                if (opaque.contains("sigma") && ! opaque["sigma"].is_null())
                    m.sigma = opaque["sigma"].get<double>();
                if (opaque.contains("gamma") && ! opaque["gamma"].is_null())
                    m.gamma = opaque["gamma"].get<double>();
            }
            m.graphs = j.at("graphs").get<int>();
            m.csv_checksum = j.at("checksums").at("csv").get<string>();
            return m;
        }
        catch (const json::exception & e) {
            throw DataError(string("embedding manifest is malformed: ") + e.what());
        }
    }

    auto embeddings_from_csv(const string & csv, const EmbeddingManifest & manifest) -> vector<DistortionEmbedding>
    {
        if (text_checksum(csv) != manifest.csv_checksum)
            throw DataError("embedding CSV checksum does not match its manifest");
        auto lines = lines_of(csv);
        if (lines.empty())
            throw DataError("embedding CSV has no header");
        auto columns = split(lines.front(), ',');
        if (columns.empty() || columns.front() != "id" || static_cast<int>(columns.size()) - 1 != manifest.family_count)
            throw DataError("embedding CSV header does not match the manifest's family size");

        vector<DistortionEmbedding> result;
        for (size_t r = 1; r < lines.size(); ++r) {
            auto cells = split(lines[r], ',');
            if (cells.size() != columns.size())
                throw DataError("embedding CSV line " + std::to_string(r + 1) + " has " + std::to_string(cells.size()) + " cells, expected " + std::to_string(columns.size()));
            DistortionEmbedding e;
            e.family_checksum = manifest.family_checksum;
            e.normalized = manifest.normalized;
            e.feature_config = manifest.feature_config;
            e.norm = manifest.norm;
            for (size_t c = 1; c < cells.size(); ++c) {
                try {
                    e.values.push_back(parse_extended_real(cells[c]));
                }
                catch (const DataError & err) {
                    throw DataError("embedding CSV line " + std::to_string(r + 1) + ": " + err.what());
                }
            }
            result.push_back(std::move(e));
        }
        if (static_cast<int>(result.size()) != manifest.graphs)
            throw DataError("embedding CSV row count does not match the manifest");
        return result;
    }

    auto hom_counts_to_csv(const vector<vector<BigInt>> & counts, const PatternFamily & family) -> string
    {
        string out = header_for(family);
        for (size_t i = 0; i < counts.size(); ++i) {
            out += std::to_string(i);
            for (const auto & c : counts[i])
                out += "," + c.str();
            out += "\n";
        }
        return out;
    }

    auto hom_counts_from_csv(const string & csv) -> vector<vector<BigInt>>
    {
        auto lines = lines_of(csv);
        if (lines.empty() || split(lines.front(), ',').front() != "id")
            throw DataError("hom-count CSV has no header");
        auto width = split(lines.front(), ',').size();
        vector<vector<BigInt>> result;
        for (size_t r = 1; r < lines.size(); ++r) {
            auto cells = split(lines[r], ',');
            if (cells.size() != width)
                throw DataError("hom-count CSV line " + std::to_string(r + 1) + " has the wrong number of cells");
            vector<BigInt> row;
            for (size_t c = 1; c < cells.size(); ++c) {
                const auto & cell = cells[c];
                if (cell.empty() || cell.find_first_not_of("0123456789") != string::npos)
                    throw DataError("hom-count CSV line " + std::to_string(r + 1) + ": '" + cell + "' is not a non-negative integer");
                row.emplace_back(cell);
            }
            result.push_back(std::move(row));
        }
        return result;
    }

    auto family_to_graph6(const PatternFamily & family) -> string
    {
        string out;
        for (const auto & g : family.members)
            out += write_graph6(g) + "\n";
        return out;
    }

    auto family_manifest_json(const PatternFamily & family) -> string
    {
        json j;
        j["kind"] = to_string(family.kind);
        j["params"] = {{"lo", family.lo}, {"hi", family.hi}, {"orders", family.orders}, {"treewidth_class", family.treewidth_class}};
        j["count"] = family.size();
        j["checksum"] = family.checksum();
        return j.dump(2) + "\n";
    }

    auto load_family(const string & graph6_path, const string & manifest_path) -> PatternFamily
    {
        PatternFamily family;
        family.members = read_graph6_file(graph6_path);
        json j;
        try {
            j = json::parse(read_file(manifest_path));
            family.kind = parse_family_kind(j.at("kind").get<string>());
            const auto & params = j.at("params");
            family.lo = params.at("lo").get<int>();
            family.hi = params.at("hi").get<int>();
            family.orders = params.value("orders", vector<int>{});
            family.treewidth_class = params.value("treewidth_class", 0);
            if (j.at("count").get<int>() != family.size())
                throw DataError("family manifest count differs from the number of graph6 records");
            if (j.at("checksum").get<string>() != family.checksum())
                throw DataError("family checksum mismatch between '" + graph6_path + "' and its manifest");
        }
        catch (const json::exception & e) {
            throw DataError(string("family manifest is malformed: ") + e.what());
        }
        return family;
    }
}
