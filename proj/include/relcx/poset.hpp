#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <Eigen/Core>

#include "relcx/complex.hpp"
#include "relcx/relation.hpp"

namespace relcx {

/// order(a, b) is true iff a ≤ b.
using OrderMatrix = Eigen::Array<bool, Eigen::Dynamic, Eigen::Dynamic>;

/// Finite partial order. The order matrix is reflexive, antisymmetric and transitive.
class Poset {
 public:
  /// Checks the partial-order axioms; throws PreconditionError("NotAPartialOrder").
  Poset(UniversePtr elements, OrderMatrix order);

  const Universe& elements() const noexcept { return *elements_; }
  const UniversePtr& elements_ptr() const noexcept { return elements_; }
  std::size_t size() const noexcept { return elements_->size(); }
  const OrderMatrix& order() const noexcept { return order_; }

  bool leq(VertexIndex a, VertexIndex b) const { return order_(a, b); }
  bool less(VertexIndex a, VertexIndex b) const { return a != b && order_(a, b); }
  bool comparable(VertexIndex a, VertexIndex b) const { return order_(a, b) || order_(b, a); }

  /// ≤ as a relation on X × X.
  Relation leq_relation() const;
  /// < as a relation on X × X.
  Relation strict_relation() const;
  /// Same elements, reversed order.
  Poset dual() const;

  friend bool operator==(const Poset& a, const Poset& b);

 private:
  UniversePtr elements_;
  OrderMatrix order_;
};

enum class ComplexSide { K, L };

/// Reflexive-transitive closure of the generating pairs (a, b) meaning a ≤ b.
/// Throws PreconditionError("CycleDetected") with the labels of a cycle.
Poset poset_from_pairs(const UniversePtr& elements,
                       const std::vector<std::pair<VertexIndex, VertexIndex>>& pairs);
Poset poset_from_pairs(const UniversePtr& elements,
                       const std::vector<std::pair<std::string, std::string>>& pairs);

/// U_x = {y : y ≤ x}
std::vector<VertexIndex> down_set(const Poset& p, VertexIndex x);
/// F_x = {y : x ≤ y}
std::vector<VertexIndex> up_set(const Poset& p, VertexIndex x);

std::vector<VertexIndex> maximal_elements(const Poset& p);
std::vector<VertexIndex> minimal_elements(const Poset& p);
std::optional<VertexIndex> maximum(const Poset& p);

/// Number of elements in a longest chain.
std::size_t chain_length(const Poset& p);

/// Simplices are the nonempty chains. Throws PreconditionError("EmptyPoset").
SimplicialComplex order_complex(const Poset& p);

/// K or L complex of ≤ (strict = false) or < (strict = true).
/// Throws PreconditionError("EmptyResult") when the strict order is empty.
SimplicialComplex poset_dowker_complex(const Poset& p, bool strict, ComplexSide side);

/// Witness pair (x, y) for which U_x ∩ U_y is nonempty and not a down-set U_z.
std::optional<std::pair<VertexIndex, VertexIndex>> lattice_violation(const Poset& p);
bool lattice_condition(const Poset& p);

/// Poset whose K-complex is `complex`, built from the least private vertex of
/// every facet. Throws PreconditionError("NotComplete") or ("NotRealizable").
Poset realize_as_poset_k_complex(const SimplicialComplex& complex);

/// Componentwise order on P × Q; elements are labelled "(p,q)".
Poset product_poset(const Poset& p, const Poset& q);

/// Subposet on the given elements, in ascending index order.
Poset induced_subposet(const Poset& p, const std::vector<VertexIndex>& elements);

/// Components of the comparability graph, each ascending, ordered by least element.
std::vector<std::vector<VertexIndex>> connected_components(const Poset& p);
/// Least element forming a component on its own, if any.
std::optional<VertexIndex> singleton_component(const Poset& p);

// ---------------------------------------------------------------------------
// Finite spaces
// ---------------------------------------------------------------------------

/// Subset of at most 64 points, bit i standing for point i.
using PointSet = std::uint64_t;

inline constexpr std::size_t kMaxSpacePoints = 64;

std::vector<VertexIndex> members(PointSet set);
PointSet point_set(const std::vector<VertexIndex>& points);

/// Finite topology stored as its full family of open sets.
class FiniteTopology {
 public:
  /// Adds ∅, then checks that the whole set is present and the family is
  /// closed under unions and intersections; throws PreconditionError("NotATopology").
  FiniteTopology(UniversePtr points, std::vector<PointSet> opens);

  const Universe& points() const noexcept { return *points_; }
  const UniversePtr& points_ptr() const noexcept { return points_; }
  /// Ascending by bit pattern.
  const std::vector<PointSet>& opens() const noexcept { return opens_; }

  /// Intersection of all opens containing x.
  PointSet minimal_open(VertexIndex x) const;
  /// Distinct points with equal minimal opens, if any.
  std::optional<std::pair<VertexIndex, VertexIndex>> t0_violation() const;
  bool is_t0() const { return !t0_violation().has_value(); }

  friend bool operator==(const FiniteTopology& a, const FiniteTopology& b);

 private:
  UniversePtr points_;
  std::vector<PointSet> opens_;
};

/// Opens are the down-sets (unions of the U_x).
FiniteTopology order_to_topology(const Poset& p);

/// x ≤ y iff x ∈ U_y. Throws PreconditionError("NotT0") with the witness pair.
Poset topology_to_order(const FiniteTopology& t);

}  // namespace relcx
