#pragma once

#include <optional>
#include <stdexcept>
#include <vector>

#include "ats/matrix.hpp"

namespace ats {

struct NotIdempotent : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Certificate for the block normal form of a nonnegative idempotent matrix:
// after reordering indices as [first_block | core | last_block] the matrix
// reads [[0, AJ, AJB], [0, J, JB], [0, 0, 0]] with J a direct sum of
// rank-one nonnegative idempotents, one per core class.
struct FlorForm {
    Rat lambda;                   // scalar with M^2 = lambda M; form describes M/lambda
    std::vector<int> first_block, core, last_block;
    std::vector<std::vector<int>> core_classes;  // partition of core
    RatMat AJ, J, JB;             // recovered blocks of the normalized matrix
};

// lambda > 0 with M^2 = lambda M.  The zero matrix counts as idempotent
// with lambda = 1.  Nilpotent or non-quasi-idempotent input gives nullopt.
std::optional<Rat> quasi_idempotent_scalar(const RatMat& m);

// Requires a quasi-idempotent input; throws NotIdempotent when the block
// invariants cannot be realized (which certifies the hypothesis failed).
FlorForm flor_decompose(const RatMat& m);

// Independent certificate checker: re-verifies every FlorForm invariant
// against m from scratch.
bool verify_flor(const RatMat& m, const FlorForm& form);

}  // namespace ats
