#pragma once

#include <nlohmann/json.hpp>

#include "ats/algebra.hpp"
#include "ats/cat2.hpp"
#include "ats/flor.hpp"
#include "ats/modules.hpp"
#include "ats/search.hpp"

namespace ats {

// Deterministic JSON reports: ordered_json preserves insertion order, so
// dumps are byte-identical across runs.  Every report carries schema_version.
using Json = nlohmann::ordered_json;

inline constexpr int kSchemaVersion = 1;

Json json_of(const IntMat& m);
Json json_of(const RatMat& m);
Json json_of(const TreeInstance& inst);
Json json_of(const CandidateRep& rep);
Json json_of(const CheckReport& rp);

Json report_algebra(const Algebra& a);
Json report_cartan(const Algebra& a);
Json report_projectives(const Algebra& a);
Json report_cells(const Algebra& a);
Json report_cellmatrices(const Algebra& a);
Json report_flor(const RatMat& m, const FlorForm& form);
Json report_search(const Algebra& a, const SearchBounds& bounds,
                   const std::vector<CandidateRep>& reps, bool require_faithful,
                   bool require_dichotomy);
Json report_classify(const Algebra& a, const SearchBounds& bounds, const Verdict& v);

}  // namespace ats
