#include "relcx/report.hpp"

#include <limits>

#include "relcx/errors.hpp"
#include "relcx/io.hpp"

namespace relcx {

namespace {

Json labels_of(const Universe& universe, const Simplex& s) {
  return Json(simplex_labels(universe, s));
}

Json integer_json(const BigInt& value) {
  if (value <= std::numeric_limits<std::int64_t>::max() &&
      value >= std::numeric_limits<std::int64_t>::min())
    return Json(value.convert_to<std::int64_t>());
  return Json(value.str());
}

std::string side_name(FiberSide side) { return side == FiberSide::X ? "x" : "y"; }

const Universe& side_elements(const ClosedRelation& r, FiberSide side) {
  return side == FiberSide::X ? r.x_poset().elements() : r.y_poset().elements();
}

const Universe& other_elements(const ClosedRelation& r, FiberSide side) {
  return side == FiberSide::X ? r.y_poset().elements() : r.x_poset().elements();
}

Json label_list(const Universe& universe, const std::vector<VertexIndex>& vs) {
  Json out = Json::array();
  for (VertexIndex v : vs) out.push_back(universe.label(v));
  return out;
}

}  // namespace

Json to_json(const HomologyProfile& profile) {
  Json torsion = Json::array();
  for (const auto& dim : profile.torsion) {
    Json entries = Json::array();
    for (const BigInt& d : dim) entries.push_back(integer_json(d));
    torsion.push_back(std::move(entries));
  }
  return Json{{"betti", profile.betti}, {"torsion", std::move(torsion)}};
}

HomologyProfile profile_from_json(const Json& json) {
  try {
    HomologyProfile profile;
    profile.betti = json.at("betti").get<std::vector<std::size_t>>();
    for (const Json& dim : json.at("torsion")) {
      std::vector<BigInt> entries;
      for (const Json& d : dim)
        entries.push_back(d.is_string() ? BigInt(d.get<std::string>()) : BigInt(d.get<std::int64_t>()));
      profile.torsion.push_back(std::move(entries));
    }
    if (profile.torsion.size() != profile.betti.size())
      throw ParseError(1, 1, "betti and torsion arrays differ in length");
    return profile;
  } catch (const Json::exception& e) {
    throw ParseError(1, 1, std::string("malformed homology profile: ") + e.what());
  }
}

Json to_json(const SimplicialComplex& complex) {
  return Json{{"dimension", complex.dimension()},
              {"f_vector", complex.f_vector()},
              {"facets", sorted_facet_labels(complex)}};
}

Json to_json(const CollapseSequence& sequence) {
  Json steps = Json::array();
  for (const CollapseStep& step : sequence.steps)
    steps.push_back(Json::array({labels_of(sequence.initial.universe(), step.free_face()),
                                 labels_of(sequence.initial.universe(), step.coface())}));
  return Json{{"steps", std::move(steps)}};
}

CollapseSequence sequence_from_json(const SimplicialComplex& initial, const Json& json) {
  CollapseSequence sequence{initial, {}};
  try {
    for (const Json& step : json.at("steps")) {
      if (!step.is_array() || step.size() != 2) throw ParseError(1, 1, "a step needs two label arrays");
      sequence.steps.emplace_back(
          simplex_from_labels(initial.universe(), step[0].get<std::vector<std::string>>()),
          simplex_from_labels(initial.universe(), step[1].get<std::vector<std::string>>()));
    }
  } catch (const Json::exception& e) {
    throw ParseError(1, 1, std::string("malformed collapse sequence: ") + e.what());
  }
  return sequence;
}

Json to_json(const Relation& relation) {
  Json pairs = Json::array();
  for (VertexIndex x = 0; x < relation.x_universe().size(); ++x)
    for (VertexIndex y = 0; y < relation.y_universe().size(); ++y)
      if (relation.related(x, y))
        pairs.push_back(Json::array({relation.x_universe().label(x), relation.y_universe().label(y)}));
  return Json{{"covered", is_covered(relation)},
              {"pairs", std::move(pairs)},
              {"xelements", relation.x_universe().labels()},
              {"yelements", relation.y_universe().labels()}};
}

Json to_json(const Poset& poset) {
  Json covers = Json::array();
  for (const Record& r : poset_document(poset, "P").records)
    if (r.keyword == "le") covers.push_back(r.args);
  Json maximal = label_list(poset.elements(), maximal_elements(poset));
  return Json{{"covers", std::move(covers)},
              {"elements", poset.elements().labels()},
              {"maximal", std::move(maximal)}};
}

Json to_json(const FiniteTopology& space) {
  Json opens = Json::array();
  for (const Record& r : space_document(space, "S").records)
    if (r.keyword == "open") opens.push_back(r.args);
  Json minimal = Json::array();
  for (VertexIndex x = 0; x < space.points().size(); ++x)
    minimal.push_back(label_list(space.points(), members(space.minimal_open(x))));
  return Json{{"minimal_opens", std::move(minimal)},
              {"opens", std::move(opens)},
              {"points", space.points().labels()},
              {"t0", space.is_t0()}};
}

Json assignment_json(const Relation& source, const Relation& target,
                     const std::optional<Assignment>& assignment) {
  if (!assignment) return nullptr;
  Json out = Json::array();
  for (VertexIndex y = 0; y < assignment->size(); ++y)
    out.push_back(Json::array({source.y_universe().label(y), target.y_universe().label((*assignment)[y])}));
  return out;
}

Json to_json(const ClosedRelation& r, const WeakHypothesisReport& report) {
  Json fibers = Json::array();
  for (const FiberMaximum& f : report.fibers) {
    const Universe& other = other_elements(r, f.side);
    fibers.push_back(Json{{"element", side_elements(r, f.side).label(f.element)},
                          {"maximal", label_list(other, f.maximal)},
                          {"maximum", f.maximum ? Json(other.label(*f.maximum)) : Json(nullptr)},
                          {"side", side_name(f.side)}});
  }
  return Json{{"fibers", std::move(fibers)}, {"holds", report.holds}};
}

Json to_json(const ClosedRelation& r, const QuillenHypothesisReport& report) {
  Json fibers = Json::array();
  for (const FiberCertificate& f : report.fibers)
    fibers.push_back(Json{{"element", side_elements(r, f.side).label(f.element)},
                          {"k_complex", to_string(f.k_complex)},
                          {"order_complex", to_string(f.order_complex)},
                          {"side", side_name(f.side)}});
  return Json{{"all_certified", report.all_certified}, {"fibers", std::move(fibers)}};
}

Json to_json(const ClosedRelation& r, const PreimageReport& report) {
  const Poset rposet = relation_poset(r);
  Json facets = Json::array();
  for (const PreimageFacet& f : report.facets)
    facets.push_back(Json{{"facet", labels_of(side_elements(r, report.side), f.facet)},
                          {"full_simplex", f.full_simplex},
                          {"preimage", label_list(rposet.elements(), f.preimage)}});
  return Json{{"all_full", report.all_full}, {"facets", std::move(facets)}, {"side", side_name(report.side)}};
}

Json to_json(const ClosedRelation& r, const ClosedRelationReport& report) {
  Json out{{"check", "homology-level"},
           {"hypothesis_met", report.hypothesis_met},
           {"mode", to_string(report.mode)},
           {"same_homology", report.same_homology},
           {"verdict", to_string(report.verdict)},
           {"x_homology", to_json(report.x_profile)},
           {"y_homology", to_json(report.y_profile)}};
  if (report.quillen) out["quillen"] = to_json(r, *report.quillen);
  if (report.weak) out["weak"] = to_json(r, *report.weak);
  if (report.preimage_x) out["preimage_x"] = to_json(r, *report.preimage_x);
  if (report.preimage_y) out["preimage_y"] = to_json(r, *report.preimage_y);
  return out;
}

std::string write_report(const Json& json) { return json.dump(); }

}  // namespace relcx
