#pragma once

#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "ats/algebra.hpp"
#include "ats/candidate.hpp"
#include "ats/cat2.hpp"

namespace ats {

struct SearchBounds {
    int r_max = 0;        // 0 means n+1
    int entry_cap = 2;
    long long budget = 2'000'000'000;  // DFS node limit
};

struct BudgetExceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Per-constraint report.  composition_ok and transitive_ok are the
// decategorified axioms; the rest are the derived structural checks.
struct CheckReport {
    bool composition_ok = false;
    bool transitive_ok = false;
    bool faithful = false;
    bool quasi_idem_ok = false;       // [F_ii]^2 = k_i [F_ii]
    bool row_col_symmetry_ok = false;  // X_q = Y_q support symmetry
    bool diag_dichotomy_ok = false;    // diagonal of [F_ii] in {0, k_i}
    bool x_independent = false;        // X_ij indep of j, Y_ij indep of i
    bool x_singletons = false;
    bool x_disjoint = false;
    bool rank_matches = false;         // r == n
    bool cartan_matches = false;       // cartanB = Cartan(A) under the X-bijection
    bool is_cell_tensor = false;       // m is the delta pattern under the bijection
    std::vector<int> object_map;       // sigma: vertex index -> object index, or empty

    bool mandatory_ok() const { return composition_ok && transitive_ok; }
    bool structural_checks_ok() const {
        return x_independent && x_singletons && x_disjoint && rank_matches &&
               cartan_matches;
    }
    std::vector<std::string> violated_structural_checks() const;
};

CheckReport check_candidate(const Algebra& a, const CandidateRep& rep);

struct XYReport {
    // X[i][j] = {s : some m[i][j][s][t] > 0}, Y[i][j] the column analogue.
    std::vector<std::vector<std::set<int>>> X, Y;
    bool x_independent = false, y_independent = false;
    std::vector<std::set<int>> Xi, Yj;  // populated when independent
    bool xy_equal = false;              // X_q == Y_q for all q
    bool union_full = false;            // union of the X_i is {0..r-1}
};

XYReport xy_sets(const CandidateRep& rep);

// Lexicographically minimal representative under simultaneous permutation
// of the object indices of cartanB and m.
CandidateRep canonical_form(const CandidateRep& rep);

// Exhaustive enumeration of candidate reps within bounds that satisfy the
// composition law and transitivity.  Results are canonical forms, sorted
// and deduplicated.  Unfaithful data cannot pin cartanB, so the all-zero
// rep is reported once, normalized to r = 1, cartanB = [[1]].
std::vector<CandidateRep> search(const Algebra& a, const SearchBounds& bounds,
                                 bool require_faithful, bool require_dichotomy);

struct AnnotatedRep {
    CandidateRep rep;
    CheckReport checks;
};

struct Verdict {
    bool confirmed = false;            // every constrained faithful solution is the cell tensor
    bool covered_by_prior_work = false;  // S empty or S = V: self-injective case
    std::vector<AnnotatedRep> faithful_with_dichotomy;
    std::vector<AnnotatedRep> unfaithful;
    // Non-cell solutions of the bare axioms.  Every one is checked as it is
    // found; the stored list is capped to keep large instances in memory.
    std::vector<AnnotatedRep> extra_without_dichotomy;
    long long extra_total = 0;
    bool extras_truncated = false;
    bool all_extras_violate = true;  // each extra fails >= 1 derived check
};

Verdict classify(const Algebra& a, const SearchBounds& bounds);

}  // namespace ats
