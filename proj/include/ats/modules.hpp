#pragma once

#include <map>
#include <utility>
#include <vector>

#include "ats/algebra.hpp"
#include "ats/matrix.hpp"

namespace ats {

// Finite-dimensional left A-module: graded basis plus one integer matrix
// per arrow of the doubled quiver.  The matrix of arrow (i->j) maps
// coordinates of grade-i vectors into the grade-j span and kills the rest.
struct Module {
    int n = 0;
    std::vector<int> grade;                       // grade[b] in 1..n
    std::map<std::pair<int, int>, IntMat> action;  // keyed by (source, target)

    int dim() const { return static_cast<int>(grade.size()); }
    std::vector<int> dim_vector() const {
        std::vector<int> d(n + 1, 0);
        for (int g : grade) ++d[g];
        return d;
    }
};

struct LoewyReport {
    std::vector<std::map<int, int>> layers;  // radical filtration, top first
    std::map<int, int> socle, top;           // multiset of simple labels
    int loewy_length = 0;
};

enum class Tri { No, Yes, Inconclusive };

struct HomSpace {
    int dim = 0;
    std::vector<RatMat> basis;  // intertwiners N <- M, each dim(N) x dim(M)
};

Module projective_module(const Algebra& a, int i);
Module injective_module(const Algebra& a, int i);
Module simple_module(const Algebra& a, int i);

// True iff every defining relation of A acts as zero on the module.
bool relations_annihilate(const Algebra& a, const Module& m);

LoewyReport loewy_report(const Module& m);

HomSpace hom_space(const Module& m, const Module& n);

Tri is_isomorphic(const Module& m, const Module& n);

Tri is_self_injective(const Algebra& a);

// dim of e_j A (x)_A A e_k, computed as the balanced tensor product over
// the ground field modulo x.a (x) y - x (x) a.y, by exact rank.
int tensor_dim(const Algebra& a, int j, int k);

}  // namespace ats
