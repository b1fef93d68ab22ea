#pragma once

#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace ats {

struct ParseError : std::runtime_error {
    int line, column;
    ParseError(int l, int c, const std::string& msg)
        : std::runtime_error("line " + std::to_string(l) + ", col " + std::to_string(c) +
                             ": " + msg),
          line(l),
          column(c) {}
};

enum class RejectKind { NotATree, SpecialNotLeaf, InfiniteDimensional };

struct ValidateError : std::runtime_error {
    RejectKind kind;
    ValidateError(RejectKind k, const std::string& msg) : std::runtime_error(msg), kind(k) {}
};

// Raw parsed input: a claimed tree on vertices 1..n with a special leaf set.
struct TreeInstance {
    int n = 0;
    std::set<std::pair<int, int>> edges;  // unordered pairs stored as (min,max)
    std::set<int> special;

    bool operator==(const TreeInstance&) const = default;
};

// A TreeInstance that passed validate(); carries derived leaf/adjacency data.
struct ValidatedInstance {
    int n = 0;
    std::set<std::pair<int, int>> edges;
    std::set<int> special;
    std::set<int> leaves;
    std::vector<std::vector<int>> adj;  // adj[v], vertices 1..n (index 0 unused)

    bool adjacent(int i, int j) const {
        if (i > j) std::swap(i, j);
        return edges.count({i, j}) != 0;
    }
    bool is_special(int v) const { return special.count(v) != 0; }
    int degree(int v) const { return static_cast<int>(adj[v].size()); }
};

struct Quiver {
    int n = 0;
    std::vector<std::pair<int, int>> arrows;  // (source, target), lex order
};

// Accepts the line-based text format or the JSON mirror (detected by a
// leading '{').
TreeInstance parse_tree_spec(const std::string& text);

// Canonical text serialization; parse(emit(t)) == t.
std::string emit_tree_spec(const TreeInstance& inst);

ValidatedInstance validate(const TreeInstance& inst);

Quiver doubled_quiver(const ValidatedInstance& inst);

}  // namespace ats
