#pragma once

#include <string>

#include <json.hpp>

#include "relcx/closed_relation.hpp"
#include "relcx/collapse.hpp"
#include "relcx/complex.hpp"
#include "relcx/homology.hpp"
#include "relcx/poset.hpp"
#include "relcx/relation.hpp"

namespace relcx {

using Json = nlohmann::json;

// JSON views of library values. Objects use sorted keys and arrays follow the
// canonical orders of the underlying values, so dumps are byte-stable.

/// {"betti":[...],"torsion":[[...],...]}; torsion entries beyond 64 bits become strings.
Json to_json(const HomologyProfile& profile);
/// Inverse of to_json(HomologyProfile). Throws ParseError on malformed input.
HomologyProfile profile_from_json(const Json& json);

/// {"dimension","f_vector","facets"} with facets as sorted label arrays.
Json to_json(const SimplicialComplex& complex);
/// {"steps":[[[free labels],[coface labels]],...]}
Json to_json(const CollapseSequence& sequence);
/// Reads the "steps" array of a sequence report against `initial`'s labels.
CollapseSequence sequence_from_json(const SimplicialComplex& initial, const Json& json);

Json to_json(const Relation& relation);
Json to_json(const Poset& poset);
Json to_json(const FiniteTopology& space);
/// Array of [y, z] label pairs in Y order, or null.
Json assignment_json(const Relation& source, const Relation& target,
                     const std::optional<Assignment>& assignment);

Json to_json(const ClosedRelation& r, const WeakHypothesisReport& report);
Json to_json(const ClosedRelation& r, const QuillenHypothesisReport& report);
Json to_json(const ClosedRelation& r, const PreimageReport& report);
Json to_json(const ClosedRelation& r, const ClosedRelationReport& report);

/// Compact canonical dump.
std::string write_report(const Json& json);

}  // namespace relcx
