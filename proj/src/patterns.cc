#include <homdist/errors.hh>
#include <homdist/graph6.hh>
#include <homdist/patterns.hh>

#include <algorithm>
#include <cstdint>
#include <cstdio>
#include <set>
#include <sstream>

using std::size_t;
using std::string;
using std::vector;

namespace homdist
{
    auto to_string(FamilyKind kind) -> string
    {
        switch (kind) {
        case FamilyKind::cycles: return "cycles";
        case FamilyKind::trees: return "trees";
        case FamilyKind::custom: return "custom";
        }
        return "unknown";
    }

    auto parse_family_kind(const string & text) -> FamilyKind
    {
        if (text == "cycles")
            return FamilyKind::cycles;
        if (text == "trees")
            return FamilyKind::trees;
        if (text == "custom")
            return FamilyKind::custom;
        throw DataError("unknown pattern family kind '" + text + "'");
    }

    auto PatternFamily::checksum() const -> string
    {
        std::uint64_t hash = 14695981039346656037ull;
        auto feed = [&](const string & s) {
            for (unsigned char c : s) {
                hash ^= c;
                hash *= 1099511628211ull;
            }
            hash ^= '\n';
            hash *= 1099511628211ull;
        };
        feed(to_string(kind));
        for (const auto & g : members)
            feed(g.order() <= graph6_max_order ? write_graph6(g) : "order:" + std::to_string(g.order()));
        char buffer[17];
        std::snprintf(buffer, sizeof(buffer), "%016llx", static_cast<unsigned long long>(hash));
        return buffer;
    }

    auto gen_cycles(int lo, int hi) -> PatternFamily
    {
        if (lo < 3 || lo > hi)
            throw DataError("cycle family needs 3 <= lo <= hi, got lo=" + std::to_string(lo) + " hi=" + std::to_string(hi));
        PatternFamily family;
        family.kind = FamilyKind::cycles;
        family.lo = lo;
        family.hi = hi;
        family.treewidth_class = 2;
        for (int k = lo; k <= hi; ++k) {
            family.members.push_back(cycle_graph(k));
            family.orders.push_back(k);
        }
        return family;
    }

    auto gen_cycles(const vector<int> & orders) -> PatternFamily
    {
        if (orders.empty())
            throw DataError("cycle family needs at least one order");
        std::set<int> seen;
        PatternFamily family;
        family.kind = FamilyKind::cycles;
        family.treewidth_class = 2;
        for (auto k : orders) {
            if (k < 3)
                throw DataError("cycle order must be at least 3, got " + std::to_string(k));
            if (! seen.insert(k).second)
                throw DataError("cycle order " + std::to_string(k) + " listed twice");
            family.members.push_back(cycle_graph(k));
        }
        family.orders = orders;
        family.lo = *std::min_element(orders.begin(), orders.end());
        family.hi = *std::max_element(orders.begin(), orders.end());
        return family;
    }

    namespace
    {
        auto rooted_code(const Graph & tree, Vertex v, Vertex parent) -> string
        {
            vector<string> child_codes;
            for (auto w : tree.neighbours(v))
                if (w != parent)
                    child_codes.push_back(rooted_code(tree, w, v));
            std::sort(child_codes.begin(), child_codes.end());
            string code = "(";
            for (const auto & c : child_codes)
                code += c;
            code += ")";
            return code;
        }

        auto centroids(const Graph & tree) -> vector<Vertex>
        {
            int n = tree.order();
            vector<int> subtree(static_cast<size_t>(n), 1), parent(static_cast<size_t>(n), -1), order;
            order.reserve(static_cast<size_t>(n));
            vector<Vertex> stack{0};
            parent[0] = 0;
            while (! stack.empty()) {
                auto v = stack.back();
                stack.pop_back();
                order.push_back(v);
                for (auto w : tree.neighbours(v))
                    if (parent[static_cast<size_t>(w)] == -1) {
                        parent[static_cast<size_t>(w)] = v;
                        stack.push_back(w);
                    }
            }
            for (auto it = order.rbegin(); it != order.rend(); ++it)
                if (*it != 0)
                    subtree[static_cast<size_t>(parent[static_cast<size_t>(*it)])] += subtree[static_cast<size_t>(*it)];

            vector<Vertex> result;
            for (Vertex v = 0; v < n; ++v) {
                int heaviest = n - subtree[static_cast<size_t>(v)];
                for (auto w : tree.neighbours(v))
                    if (w != 0 && parent[static_cast<size_t>(w)] == v)
                        heaviest = std::max(heaviest, subtree[static_cast<size_t>(w)]);
                if (2 * heaviest <= n)
                    result.push_back(v);
            }
            return result;
        }
    }

    auto tree_canonical_code(const Graph & tree) -> string
    {
        if (! tree.is_tree())
            throw DataError("canonical tree code requested for a graph that is not a tree");
        string best;
        for (auto c : centroids(tree)) {
            auto code = rooted_code(tree, c, -1);
            if (best.empty() || code < best)
                best = code;
        }
        return best;
    }

    auto tree_from_code(const string & code) -> Graph
    {
        vector<Edge> edges;
        vector<Vertex> stack;
        int next = 0;
        for (size_t i = 0; i < code.size(); ++i) {
            if (code[i] == '(') {
                if (! stack.empty())
                    edges.emplace_back(stack.back(), next);
                stack.push_back(next++);
            }
            else if (code[i] == ')') {
                if (stack.empty())
                    throw ParseError("unbalanced tree code", i);
                stack.pop_back();
            }
            else
                throw ParseError("unexpected character in tree code", i);
            if (stack.empty() && i + 1 != code.size())
                throw ParseError("tree code describes more than one tree", i + 1);
        }
        if (! stack.empty() || next == 0)
            throw ParseError("unbalanced tree code", code.size());
        return Graph{next, std::move(edges)};
    }

    auto gen_trees(int order) -> PatternFamily
    {
        if (order < 1 || order > max_tree_order)
            throw DataError("tree order must be in [1, " + std::to_string(max_tree_order) + "], got " + std::to_string(order));

        // Every tree on m+1 vertices is a tree on m vertices plus one leaf.
        std::set<string> level{"()"};
        for (int m = 1; m < order; ++m) {
            std::set<string> grown;
            for (const auto & code : level) {
                auto tree = tree_from_code(code);
                for (Vertex v = 0; v < tree.order(); ++v) {
                    auto edges = tree.edges();
                    edges.emplace_back(v, tree.order());
                    grown.insert(tree_canonical_code(Graph{tree.order() + 1, std::move(edges)}));
                }
            }
            level = std::move(grown);
        }

        vector<std::pair<string, Graph>> keyed;
        for (const auto & code : level) {
            auto tree = tree_from_code(code);
            keyed.emplace_back(write_graph6(tree), std::move(tree));
        }
        std::sort(keyed.begin(), keyed.end(), [](const auto & a, const auto & b) { return a.first < b.first; });

        PatternFamily family;
        family.kind = FamilyKind::trees;
        family.lo = order;
        family.hi = order;
        family.orders = {order};
        family.treewidth_class = 1;
        for (auto & [key, tree] : keyed)
            family.members.push_back(std::move(tree));
        return family;
    }

    auto custom_family(vector<Graph> members) -> PatternFamily
    {
        PatternFamily family;
        family.kind = FamilyKind::custom;
        family.members = std::move(members);
        if (! family.members.empty()) {
            family.lo = family.members.front().order();
            family.hi = family.lo;
            for (const auto & g : family.members) {
                family.lo = std::min(family.lo, g.order());
                family.hi = std::max(family.hi, g.order());
            }
        }
        bool all_trees = ! family.members.empty() && std::all_of(family.members.begin(), family.members.end(), [](const Graph & g) { return g.is_tree(); });
        bool all_cycles_or_trees = std::all_of(family.members.begin(), family.members.end(), [](const Graph & g) { return g.is_tree() || g.is_cycle(); });
        family.treewidth_class = all_trees ? 1 : all_cycles_or_trees ? 2 : 0;
        return family;
    }

    auto parse_family_spec(const string & text) -> PatternFamily
    {
        auto colon = text.find(':');
        if (colon == string::npos)
            throw DataError("family spec '" + text + "' must look like trees:8 or cycles:3-8");
        auto kind = parse_family_kind(text.substr(0, colon));
        auto rest = text.substr(colon + 1);

        auto to_int = [&](const string & s) {
            try {
                size_t used = 0;
                int value = std::stoi(s, &used);
                if (used != s.size())
                    throw DataError("");
                return value;
            }
            catch (const std::exception &) {
                throw DataError("bad integer '" + s + "' in family spec '" + text + "'");
            }
        };

        if (kind == FamilyKind::trees)
            return gen_trees(to_int(rest));
        if (kind == FamilyKind::cycles) {
            if (auto dash = rest.find('-'); dash != string::npos)
                return gen_cycles(to_int(rest.substr(0, dash)), to_int(rest.substr(dash + 1)));
            vector<int> orders;
            std::stringstream ss(rest);
            string item;
            while (std::getline(ss, item, ','))
                orders.push_back(to_int(item));
            return gen_cycles(orders);
        }
        throw DataError("custom families are loaded from graph6 files, not specs");
    }
}
