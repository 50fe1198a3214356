#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "relcx/complex.hpp"
#include "relcx/homology.hpp"
#include "relcx/poset.hpp"
#include "relcx/relation.hpp"

namespace relcx {

enum class FiberSide { X, Y };

/// Relation between two posets that is an up-set of their product.
class ClosedRelation {
 public:
  /// Throws PreconditionError("NotClosed") naming a pair (x,y) ∈ R with some
  /// (x',y') ≥ (x,y) outside R.
  ClosedRelation(Poset x, Poset y, Incidence pairs);

  static ClosedRelation from_relation(Poset x, Poset y, const Relation& r);

  const Poset& x_poset() const noexcept { return x_; }
  const Poset& y_poset() const noexcept { return y_; }
  const Incidence& incidence() const noexcept { return pairs_; }
  bool related(VertexIndex x, VertexIndex y) const { return pairs_(x, y); }

  Relation relation() const { return Relation(x_.elements_ptr(), y_.elements_ptr(), pairs_); }

 private:
  Poset x_;
  Poset y_;
  Incidence pairs_;
};

/// Direct check of the defining implication over all comparable pairs.
bool is_closed(const Incidence& pairs, const Poset& x, const Poset& y);
/// Same predicate, phrased as "R is an up-set of product_poset(x, y)".
bool is_up_set_of_product(const Incidence& pairs, const Poset& x, const Poset& y);

/// Elements of the other side related to v (S_x ⊆ Y for side X, S_y ⊆ X for side Y).
std::vector<VertexIndex> fiber_members(const ClosedRelation& r, VertexIndex v, FiberSide side);
/// The fiber as an induced subposet of the other side.
Poset fiber(const ClosedRelation& r, VertexIndex v, FiberSide side);

struct FiberMaximum {
  FiberSide side;
  VertexIndex element;
  std::optional<VertexIndex> maximum;  // index in the other poset
  std::vector<VertexIndex> maximal;    // maximal elements of the fiber, other-poset indices
};

struct WeakHypothesisReport {
  std::vector<FiberMaximum> fibers;  // X fibers, then Y fibers, ascending
  bool holds = false;
};

/// Every fiber has a maximum. Throws PreconditionError("EmptyFiber").
WeakHypothesisReport weak_hypothesis(const ClosedRelation& r);

enum class Certificate { Cone, Collapsible, Unknown };

std::string to_string(Certificate c);

/// Cone apex first, then a greedy collapse to a point; never claims non-contractibility.
Certificate contractibility_certificate(const SimplicialComplex& complex);

struct FiberCertificate {
  FiberSide side;
  VertexIndex element;
  Certificate order_complex;
  Certificate k_complex;
};

struct QuillenHypothesisReport {
  std::vector<FiberCertificate> fibers;
  bool all_certified = false;  // every fiber's order complex certified
};

/// Throws PreconditionError("EmptyFiber").
QuillenHypothesisReport quillen_hypothesis(const ClosedRelation& r);

/// R ordered as a subposet of X × Y, elements labelled "(x,y)" in X-major order.
Poset relation_poset(const ClosedRelation& r);

struct PreimageFacet {
  Simplex facet;                         // facet of the side poset's K-complex
  std::vector<VertexIndex> preimage;     // indices into relation_poset(r)
  bool full_simplex = false;
};

struct PreimageReport {
  FiberSide side;
  std::vector<PreimageFacet> facets;
  bool all_full = false;
};

/// For every facet s of the side's K-complex, whether the part of K_R lying
/// over s is a full simplex.
PreimageReport preimage_facet_check(const ClosedRelation& r, FiberSide side);

enum class VerifyMode { Quillen, Weak };
enum class Verdict { Confirmed, HypothesisNotMet, Violated };

std::string to_string(VerifyMode m);
std::string to_string(Verdict v);

struct ClosedRelationReport {
  VerifyMode mode;
  bool hypothesis_met = false;
  std::optional<QuillenHypothesisReport> quillen;
  std::optional<WeakHypothesisReport> weak;
  std::optional<PreimageReport> preimage_x;
  std::optional<PreimageReport> preimage_y;
  HomologyProfile x_profile;  // of C_X (quillen) or K_X (weak)
  HomologyProfile y_profile;
  bool same_homology = false;
  Verdict verdict = Verdict::HypothesisNotMet;
};

/// Checks the hypothesis of the chosen theorem and, when it is certified,
/// its homology-level conclusion.
ClosedRelationReport verify_closed_relation(const ClosedRelation& r, VerifyMode mode);

}  // namespace relcx
