#pragma once

#include "json.hpp"
#include "schubert/affine_permutation.hpp"
#include "schubert/staircase.hpp"

namespace schubert {

using Json = nlohmann::ordered_json;

/// {"n":4,"window":[...]} or {"n":4,"word":[...]}. Throws Error with the
/// offending kind (invalid-window, invalid-period, invalid-argument).
AffinePermutation element_from_json(const Json& j);
Json element_to_json(const AffinePermutation& w);

/// {"graph":{"kind":"cycle","n":10},"blocks":[[...]],"covers":[[a,b],...]}
/// Vertices are written by label: 1..n on a path, 0..n-1 on a cycle. The
/// pairs need not be covers; their transitive closure is taken.
StaircaseDiagram diagram_from_json(const Json& j);
Json diagram_to_json(const StaircaseDiagram& d);

Json graph_to_json(const CoxGraph& g);
CoxGraph graph_from_json(const Json& j);

}  // namespace schubert
