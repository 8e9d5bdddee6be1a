#pragma once

#include <ostream>
#include <string>

#include "divlab/metric/divergence.hpp"

namespace divlab {

// CSV columns: t, div, path_len, status. Infinite entries print "inf".
void write_profile_csv(std::ostream& os, const DivergenceProfile& profile);

// Whole profile as one JSON object (entries, fit if computable).
std::string profile_to_json(const DivergenceProfile& profile);

// Witness path as JSON lines, one vertex per record:
// {"i":0,"point":...,"label":"..."}
void write_witness_jsonl(std::ostream& os, const CoarseSpace& space,
                         const std::vector<Point>& witness);

}  // namespace divlab
