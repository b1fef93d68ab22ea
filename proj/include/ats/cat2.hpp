#pragma once

#include <string>
#include <vector>

#include "ats/algebra.hpp"
#include "ats/candidate.hpp"
#include "ats/matrix.hpp"

namespace ats {

// Formal nonnegative combination of the identity 1-morphism and the F_ij.
struct OneMorphism {
    long long id_mult = 0;
    IntMat f;  // n x n multiplicities, f.at(i-1,j-1) counts F_ij

    static OneMorphism identity(int n) {
        OneMorphism h;
        h.id_mult = 1;
        h.f = IntMat(n, n);
        return h;
    }
    static OneMorphism functor(int n, int i, int j) {
        OneMorphism h;
        h.f = IntMat(n, n);
        h.f.at(i - 1, j - 1) = 1;
        return h;
    }
    bool operator==(const OneMorphism&) const = default;
};

// Label of an indecomposable 1-morphism: the identity or some F_ij.
struct MorLabel {
    bool ident = false;
    int i = 0, j = 0;

    std::string str() const {
        return ident ? "1" : "F_" + std::to_string(i) + std::to_string(j);
    }
    auto operator<=>(const MorLabel&) const = default;
};

struct CellStructure {
    std::vector<std::vector<MorLabel>> left_cells, right_cells, two_sided_cells;
};

// Bilinear extension of 1*X = X*1 = X and F_ij * F_kl = hom_dim(j,k) F_il.
OneMorphism compose(const Algebra& a, const OneMorphism& f, const OneMorphism& g);

CellStructure cells(const Algebra& a);

// Matrices of the defining action on A-proj: [F_ik](s,t) = delta_{s,i} hom_dim(k,t).
// All cell 2-representations C_{L_j} share these matrices under the canonical
// identification, so one table is returned.
std::vector<std::vector<IntMat>> cell_rep_matrices(const Algebra& a);

// The CandidateRep encoding of the cell 2-representation itself: r = n,
// cartanB = Cartan(A), m[i][j] = E_{ij}.
CandidateRep cell_rep_candidate(const Algebra& a);

// [F_ij] evaluated in a candidate rep: (s,v) = sum_t m[i][j](s,t) cartanB(t,v).
IntMat rep_matrix(const CandidateRep& rep, int i, int j);

// [H] = id_mult * I + sum f_mult[i][j] * [F_ij]_rep.
IntMat matrix_of(const Algebra& a, const OneMorphism& h, const CandidateRep& rep);

}  // namespace ats
