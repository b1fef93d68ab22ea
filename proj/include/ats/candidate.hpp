#pragma once

#include <vector>

#include "ats/matrix.hpp"

namespace ats {

// Decategorified candidate 2-representation: rank r, candidate Cartan table
// of the unknown algebra B, and the multiplicity tensor.  m[i][j] is the
// r x r table of multiplicities of G_{st} in M(F_{i+1,j+1}).
struct CandidateRep {
    int r = 0;
    IntMat cartanB;                     // r x r, diagonal >= 1
    std::vector<std::vector<IntMat>> m;  // [n][n], each r x r

    int n() const { return static_cast<int>(m.size()); }
    bool operator==(const CandidateRep&) const = default;
};

}  // namespace ats
