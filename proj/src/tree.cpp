#include "ats/tree.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <sstream>

namespace ats {

namespace {

TreeInstance parse_json_form(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(1, 1, std::string("invalid JSON: ") + e.what());
    }
    if (!j.is_object() || !j.contains("n") || !j.contains("edges"))
        throw ParseError(1, 1, "JSON form requires keys \"n\" and \"edges\"");
    TreeInstance t;
    if (!j["n"].is_number_integer()) throw ParseError(1, 1, "\"n\" must be an integer");
    t.n = j["n"].get<int>();
    for (const auto& e : j["edges"]) {
        if (!e.is_array() || e.size() != 2)
            throw ParseError(1, 1, "each edge must be a 2-array");
        int a = e[0].get<int>(), b = e[1].get<int>();
        if (a < 1 || a > t.n || b < 1 || b > t.n)
            throw ParseError(1, 1, "vertex label out of range in edge");
        if (a == b) throw ParseError(1, 1, "self-loop edge");
        auto p = std::minmax(a, b);
        if (!t.edges.insert({p.first, p.second}).second)
            throw ParseError(1, 1, "duplicate edge");
    }
    if (j.contains("S"))
        for (const auto& s : j["S"]) {
            int v = s.get<int>();
            if (v < 1 || v > t.n) throw ParseError(1, 1, "special vertex out of range");
            t.special.insert(v);
        }
    return t;
}

}  // namespace

TreeInstance parse_tree_spec(const std::string& text) {
    auto first = text.find_first_not_of(" \t\r\n");
    if (first != std::string::npos && text[first] == '{') return parse_json_form(text);

    TreeInstance t;
    bool saw_vertices = false;
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        std::istringstream ls(line);
        std::string word;
        if (!(ls >> word)) continue;
        auto col_of = [&](const std::string& w) {
            auto pos = line.find(w);
            return static_cast<int>(pos == std::string::npos ? 1 : pos + 1);
        };
        auto read_int = [&](const std::string& what) {
            int v;
            if (!(ls >> v))
                throw ParseError(lineno, static_cast<int>(line.size()) + 1,
                                 "expected integer " + what);
            return v;
        };
        if (word == "vertices") {
            if (saw_vertices) throw ParseError(lineno, col_of(word), "repeated 'vertices'");
            t.n = read_int("vertex count");
            saw_vertices = true;
        } else if (word == "edge") {
            if (!saw_vertices)
                throw ParseError(lineno, col_of(word), "'edge' before 'vertices'");
            int a = read_int("edge endpoint");
            int b = read_int("edge endpoint");
            if (a < 1 || a > t.n || b < 1 || b > t.n)
                throw ParseError(lineno, col_of(word), "vertex label out of range");
            if (a == b) throw ParseError(lineno, col_of(word), "self-loop edge");
            auto p = std::minmax(a, b);
            if (!t.edges.insert({p.first, p.second}).second)
                throw ParseError(lineno, col_of(word), "duplicate edge");
        } else if (word == "special") {
            if (!saw_vertices)
                throw ParseError(lineno, col_of(word), "'special' before 'vertices'");
            int v;
            while (ls >> v) {
                if (v < 1 || v > t.n)
                    throw ParseError(lineno, col_of(word), "vertex label out of range");
                t.special.insert(v);
            }
            if (!ls.eof()) throw ParseError(lineno, col_of(word), "expected integer vertex");
        } else {
            throw ParseError(lineno, col_of(word), "unknown directive '" + word + "'");
        }
    }
    if (!saw_vertices) throw ParseError(lineno == 0 ? 1 : lineno, 1, "missing 'vertices'");
    return t;
}

std::string emit_tree_spec(const TreeInstance& inst) {
    std::ostringstream out;
    out << "vertices " << inst.n << "\n";
    for (const auto& [a, b] : inst.edges) out << "edge " << a << " " << b << "\n";
    if (!inst.special.empty()) {
        out << "special";
        for (int s : inst.special) out << " " << s;
        out << "\n";
    }
    return out.str();
}

ValidatedInstance validate(const TreeInstance& inst) {
    if (inst.n < 2)
        throw ValidateError(RejectKind::NotATree, "need at least 2 vertices");
    if (static_cast<int>(inst.edges.size()) != inst.n - 1)
        throw ValidateError(RejectKind::NotATree,
                            "a tree on " + std::to_string(inst.n) + " vertices needs " +
                                std::to_string(inst.n - 1) + " edges, got " +
                                std::to_string(inst.edges.size()));

    ValidatedInstance v;
    v.n = inst.n;
    v.edges = inst.edges;
    v.special = inst.special;
    v.adj.assign(inst.n + 1, {});
    for (const auto& [a, b] : inst.edges) {
        v.adj[a].push_back(b);
        v.adj[b].push_back(a);
    }
    for (int i = 1; i <= inst.n; ++i) std::sort(v.adj[i].begin(), v.adj[i].end());

    // Connectivity; together with |E| = n-1 this rules out cycles.
    std::vector<bool> seen(inst.n + 1, false);
    std::vector<int> stack{1};
    seen[1] = true;
    int reached = 1;
    while (!stack.empty()) {
        int u = stack.back();
        stack.pop_back();
        for (int w : v.adj[u])
            if (!seen[w]) {
                seen[w] = true;
                ++reached;
                stack.push_back(w);
            }
    }
    if (reached != inst.n)
        throw ValidateError(RejectKind::NotATree, "graph is not connected");

    for (int i = 1; i <= inst.n; ++i)
        if (v.degree(i) == 1) v.leaves.insert(i);
    for (int s : inst.special)
        if (!v.leaves.count(s))
            throw ValidateError(RejectKind::SpecialNotLeaf,
                                "special vertex " + std::to_string(s) + " is not a leaf");
    if (inst.n == 2 && inst.special.empty())
        throw ValidateError(RejectKind::InfiniteDimensional,
                            "n=2 with empty special set gives an infinite-dimensional algebra");
    return v;
}

Quiver doubled_quiver(const ValidatedInstance& inst) {
    Quiver q;
    q.n = inst.n;
    for (int i = 1; i <= inst.n; ++i)
        for (int j : inst.adj[i]) q.arrows.push_back({i, j});
    std::sort(q.arrows.begin(), q.arrows.end());
    return q;
}

}  // namespace ats
