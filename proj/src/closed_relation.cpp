#include "relcx/closed_relation.hpp"

#include <algorithm>

#include "relcx/collapse.hpp"
#include "relcx/errors.hpp"

namespace relcx {

namespace {

Eigen::Index idx(VertexIndex v) { return static_cast<Eigen::Index>(v); }

const Poset& side_poset(const ClosedRelation& r, FiberSide side) {
  return side == FiberSide::X ? r.x_poset() : r.y_poset();
}

const Poset& other_poset(const ClosedRelation& r, FiberSide side) {
  return side == FiberSide::X ? r.y_poset() : r.x_poset();
}

std::vector<VertexIndex> checked_fiber(const ClosedRelation& r, VertexIndex v, FiberSide side) {
  auto members = fiber_members(r, v, side);
  if (members.empty()) {
    const std::string& label = side_poset(r, side).elements().label(v);
    throw PreconditionError("EmptyFiber", "nothing is related to '" + label + "'", {label});
  }
  return members;
}

}  // namespace

ClosedRelation::ClosedRelation(Poset x, Poset y, Incidence pairs)
    : x_(std::move(x)), y_(std::move(y)), pairs_(std::move(pairs)) {
  if (pairs_.rows() != idx(static_cast<VertexIndex>(x_.size())) ||
      pairs_.cols() != idx(static_cast<VertexIndex>(y_.size())))
    throw PreconditionError("ShapeMismatch", "relation shape does not match the posets");
  for (VertexIndex a = 0; a < x_.size(); ++a)
    for (VertexIndex b = 0; b < y_.size(); ++b) {
      if (!pairs_(a, b)) continue;
      for (VertexIndex c = 0; c < x_.size(); ++c)
        for (VertexIndex d = 0; d < y_.size(); ++d)
          if (x_.leq(a, c) && y_.leq(b, d) && !pairs_(c, d)) {
            const std::string low = "(" + x_.elements().label(a) + "," + y_.elements().label(b) + ")";
            const std::string high = "(" + x_.elements().label(c) + "," + y_.elements().label(d) + ")";
            throw PreconditionError("NotClosed", low + " is related but " + high + " is not",
                                    {low, high});
          }
    }
}

ClosedRelation ClosedRelation::from_relation(Poset x, Poset y, const Relation& r) {
  if (!(r.x_universe() == x.elements()) || !(r.y_universe() == y.elements()))
    throw PreconditionError("UniverseMismatch", "relation labels do not match the posets");
  return ClosedRelation(std::move(x), std::move(y), r.incidence());
}

bool is_closed(const Incidence& pairs, const Poset& x, const Poset& y) {
  for (VertexIndex a = 0; a < x.size(); ++a)
    for (VertexIndex b = 0; b < y.size(); ++b)
      for (VertexIndex c = 0; c < x.size(); ++c)
        for (VertexIndex d = 0; d < y.size(); ++d)
          if (pairs(a, b) && x.leq(a, c) && y.leq(b, d) && !pairs(c, d)) return false;
  return true;
}

bool is_up_set_of_product(const Incidence& pairs, const Poset& x, const Poset& y) {
  const Poset product = product_poset(x, y);
  const auto n = static_cast<VertexIndex>(product.size());
  const auto ny = static_cast<VertexIndex>(y.size());
  auto member = [&](VertexIndex e) { return pairs(idx(e / ny), idx(e % ny)); };
  for (VertexIndex e = 0; e < n; ++e) {
    if (!member(e)) continue;
    for (VertexIndex f : up_set(product, e))
      if (!member(f)) return false;
  }
  return true;
}

std::vector<VertexIndex> fiber_members(const ClosedRelation& r, VertexIndex v, FiberSide side) {
  std::vector<VertexIndex> out;
  if (side == FiberSide::X) {
    if (v >= r.x_poset().size()) throw PreconditionError("UnknownVertex", "element outside X");
    for (VertexIndex y = 0; y < r.y_poset().size(); ++y)
      if (r.related(v, y)) out.push_back(y);
  } else {
    if (v >= r.y_poset().size()) throw PreconditionError("UnknownVertex", "element outside Y");
    for (VertexIndex x = 0; x < r.x_poset().size(); ++x)
      if (r.related(x, v)) out.push_back(x);
  }
  return out;
}

Poset fiber(const ClosedRelation& r, VertexIndex v, FiberSide side) {
  return induced_subposet(other_poset(r, side), fiber_members(r, v, side));
}

WeakHypothesisReport weak_hypothesis(const ClosedRelation& r) {
  WeakHypothesisReport report;
  report.holds = true;
  for (FiberSide side : {FiberSide::X, FiberSide::Y}) {
    const Poset& other = other_poset(r, side);
    for (VertexIndex v = 0; v < side_poset(r, side).size(); ++v) {
      auto members = checked_fiber(r, v, side);
      FiberMaximum entry{side, v, std::nullopt, {}};
      for (VertexIndex a : members)
        if (std::none_of(members.begin(), members.end(),
                         [&](VertexIndex b) { return other.less(a, b); }))
          entry.maximal.push_back(a);
      if (entry.maximal.size() == 1) entry.maximum = entry.maximal.front();
      report.holds = report.holds && entry.maximum.has_value();
      report.fibers.push_back(std::move(entry));
    }
  }
  return report;
}

std::string to_string(Certificate c) {
  switch (c) {
    case Certificate::Cone: return "cone";
    case Certificate::Collapsible: return "collapsible";
    case Certificate::Unknown: return "unknown";
  }
  return "unknown";
}

Certificate contractibility_certificate(const SimplicialComplex& complex) {
  if (complex.empty()) return Certificate::Unknown;
  if (cone_apex(complex)) return Certificate::Cone;
  if (greedy_collapse(complex).reached_point()) return Certificate::Collapsible;
  return Certificate::Unknown;
}

QuillenHypothesisReport quillen_hypothesis(const ClosedRelation& r) {
  QuillenHypothesisReport report;
  report.all_certified = true;
  for (FiberSide side : {FiberSide::X, FiberSide::Y})
    for (VertexIndex v = 0; v < side_poset(r, side).size(); ++v) {
      checked_fiber(r, v, side);
      const Poset sub = fiber(r, v, side);
      FiberCertificate entry{side, v, contractibility_certificate(order_complex(sub)),
                             contractibility_certificate(poset_dowker_complex(sub, false, ComplexSide::K))};
      report.all_certified = report.all_certified && entry.order_complex != Certificate::Unknown;
      report.fibers.push_back(entry);
    }
  return report;
}

Poset relation_poset(const ClosedRelation& r) {
  std::vector<std::pair<VertexIndex, VertexIndex>> pairs;
  std::vector<std::string> labels;
  for (VertexIndex x = 0; x < r.x_poset().size(); ++x)
    for (VertexIndex y = 0; y < r.y_poset().size(); ++y)
      if (r.related(x, y)) {
        pairs.emplace_back(x, y);
        labels.push_back("(" + r.x_poset().elements().label(x) + "," +
                         r.y_poset().elements().label(y) + ")");
      }
  const auto n = static_cast<Eigen::Index>(pairs.size());
  OrderMatrix order(n, n);
  for (Eigen::Index a = 0; a < n; ++a)
    for (Eigen::Index b = 0; b < n; ++b) {
      const auto& [xa, ya] = pairs[static_cast<std::size_t>(a)];
      const auto& [xb, yb] = pairs[static_cast<std::size_t>(b)];
      order(a, b) = r.x_poset().leq(xa, xb) && r.y_poset().leq(ya, yb);
    }
  return Poset(make_universe(std::move(labels)), std::move(order));
}

PreimageReport preimage_facet_check(const ClosedRelation& r, FiberSide side) {
  PreimageReport report{side, {}, true};
  const Poset rposet = relation_poset(r);
  if (rposet.size() == 0) {
    report.all_full = false;
    return report;
  }
  const SimplicialComplex k_r = poset_dowker_complex(rposet, false, ComplexSide::K);

  // Projection of each element of R onto the chosen side.
  std::vector<VertexIndex> projection;
  for (VertexIndex x = 0; x < r.x_poset().size(); ++x)
    for (VertexIndex y = 0; y < r.y_poset().size(); ++y)
      if (r.related(x, y)) projection.push_back(side == FiberSide::X ? x : y);

  const SimplicialComplex k_side = poset_dowker_complex(side_poset(r, side), false, ComplexSide::K);
  for (const Simplex& facet : k_side.facets()) {
    PreimageFacet entry{facet, {}, false};
    for (VertexIndex e = 0; e < projection.size(); ++e)
      if (facet.contains(projection[e])) entry.preimage.push_back(e);
    entry.full_simplex = !entry.preimage.empty() && k_r.contains(Simplex(entry.preimage));
    report.all_full = report.all_full && entry.full_simplex;
    report.facets.push_back(std::move(entry));
  }
  return report;
}

std::string to_string(VerifyMode m) { return m == VerifyMode::Quillen ? "quillen" : "weak"; }

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::Confirmed: return "confirmed";
    case Verdict::HypothesisNotMet: return "hypothesis-not-met";
    case Verdict::Violated: return "violated";
  }
  return "violated";
}

ClosedRelationReport verify_closed_relation(const ClosedRelation& r, VerifyMode mode) {
  ClosedRelationReport report;
  report.mode = mode;
  bool conclusion = false;
  if (mode == VerifyMode::Quillen) {
    report.quillen = quillen_hypothesis(r);
    report.hypothesis_met = report.quillen->all_certified;
    const auto cx = order_complex(r.x_poset());
    const auto cy = order_complex(r.y_poset());
    report.x_profile = homology(cx);
    report.y_profile = homology(cy);
    report.same_homology = report.x_profile.trimmed() == report.y_profile.trimmed();
    conclusion = report.same_homology;
  } else {
    report.weak = weak_hypothesis(r);
    report.hypothesis_met = report.weak->holds;
    report.x_profile = homology(poset_dowker_complex(r.x_poset(), false, ComplexSide::K));
    report.y_profile = homology(poset_dowker_complex(r.y_poset(), false, ComplexSide::K));
    report.same_homology = report.x_profile.trimmed() == report.y_profile.trimmed();
    report.preimage_x = preimage_facet_check(r, FiberSide::X);
    report.preimage_y = preimage_facet_check(r, FiberSide::Y);
    conclusion = report.same_homology && report.preimage_x->all_full && report.preimage_y->all_full;
  }
  if (!report.hypothesis_met)
    report.verdict = Verdict::HypothesisNotMet;
  else
    report.verdict = conclusion ? Verdict::Confirmed : Verdict::Violated;
  return report;
}

}  // namespace relcx
