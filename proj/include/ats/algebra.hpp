#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ats/matrix.hpp"
#include "ats/tree.hpp"

namespace ats {

enum class BasisKind { Idem, Arrow, Loop };

// One basis element of A: a trivial path e_i, an arrow i->j, or the loop
// class at a non-special vertex (all back-and-forth paths through distinct
// neighbors are identified at construction time).
struct BasisElement {
    BasisKind kind;
    int src, tgt;  // Idem/Loop: src == tgt == vertex

    std::string label() const;
    int path_len() const {
        return kind == BasisKind::Idem ? 0 : kind == BasisKind::Arrow ? 1 : 2;
    }
    bool operator==(const BasisElement&) const = default;
};

// A = kQ/I with basis ordered: idempotents by vertex, arrows lex by
// (source,target), loops by vertex.  Composition is right-to-left: the
// product p*q applies q first, so p*q != 0 needs source(p) == target(q).
struct Algebra {
    ValidatedInstance inst;
    Quiver quiver;
    std::vector<BasisElement> basis;
    // mult[p][q] = basis index of basis[p]*basis[q], or -1 for zero.
    std::vector<std::vector<int>> mult;

    int dim() const { return static_cast<int>(basis.size()); }
    int idem_index(int v) const { return v - 1; }
    int arrow_index(int s, int t) const;  // -1 if no such arrow
    int loop_index(int v) const;          // -1 if v is special
};

struct NonComposable : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Integer linear combination of basis elements, keyed by basis index.
struct LinComb {
    std::map<int, long long> coeff;

    static LinComb single(int idx, long long c = 1) {
        LinComb l;
        if (c != 0) l.coeff[idx] = c;
        return l;
    }
    bool is_zero() const { return coeff.empty(); }
    bool operator==(const LinComb&) const = default;
};

Algebra build_algebra(const ValidatedInstance& inst);

// Reduces a path, given as arrows in application order (first arrow applied
// first), to its normal form: zero or a single basis element.  The empty
// word needs a base vertex.
LinComb normal_form(const Algebra& a, const std::vector<std::pair<int, int>>& word,
                    int base_vertex = 0);

LinComb multiply(const Algebra& a, const LinComb& x, const LinComb& y);

// dim e_l A e_k: number of basis paths from k to l.
int hom_dim(const Algebra& a, int l, int k);

// Entry (s,t) = hom_dim(s,t).  1-based vertices map to 0-based rows/cols.
IntMat cartan_matrix(const Algebra& a);

// k_i of the composition rule: 2 for i not special, 1 for i special.
inline long long k_scalar(const Algebra& a, int i) { return a.inst.is_special(i) ? 1 : 2; }

}  // namespace ats
