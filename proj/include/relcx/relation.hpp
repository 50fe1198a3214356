#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <Eigen/Core>

#include "relcx/complex.hpp"

namespace relcx {

/// Boolean incidence array; entry (x, y) is true iff x is related to y.
using Incidence = Eigen::Array<bool, Eigen::Dynamic, Eigen::Dynamic>;

/// Image in Z of every y in Y, indexed by y.
using Assignment = std::vector<VertexIndex>;

/**
 * Relation R ⊆ X × Y between two finite vertex universes. Uncovered relations
 * are representable; the Galois operations reject them.
 */
class Relation {
 public:
  /// Throws PreconditionError("EmptyUniverse") or ("ShapeMismatch").
  Relation(UniversePtr x_universe, UniversePtr y_universe, Incidence pairs);

  static Relation from_pairs(UniversePtr x_universe, UniversePtr y_universe,
                             const std::vector<std::pair<std::string, std::string>>& pairs);

  const Universe& x_universe() const noexcept { return *x_; }
  const Universe& y_universe() const noexcept { return *y_; }
  const UniversePtr& x_universe_ptr() const noexcept { return x_; }
  const UniversePtr& y_universe_ptr() const noexcept { return y_; }
  const Incidence& incidence() const noexcept { return pairs_; }

  bool related(VertexIndex x, VertexIndex y) const { return pairs_(x, y); }
  std::size_t pair_count() const { return static_cast<std::size_t>(pairs_.count()); }

  /// Elements of X related to y, ascending. This is S_y.
  std::vector<VertexIndex> support(VertexIndex y) const;

  friend bool operator==(const Relation& a, const Relation& b);

 private:
  UniversePtr x_;
  UniversePtr y_;
  Incidence pairs_;
};

/// A map Y → Z that satisfies x R y ⇒ x R' f(y). Validated on construction.
class RelationMorphism {
 public:
  /// Throws PreconditionError("NotAMorphism") when the morphism law fails.
  RelationMorphism(Relation source, Relation target, Assignment assignment);

  const Relation& source() const noexcept { return source_; }
  const Relation& target() const noexcept { return target_; }
  const Assignment& assignment() const noexcept { return assignment_; }

 private:
  Relation source_;
  Relation target_;
  Assignment assignment_;
};

/// Every y is related to some x.
bool is_covered(const Relation& r);
/// Throws PreconditionError("Uncovered") naming the first uncovered y.
void require_covered(const Relation& r);

Relation transpose(const Relation& r);

/// Subsets of X with a common related y. Throws PreconditionError("EmptyRelation").
SimplicialComplex k_complex(const Relation& r);
/// Subsets of Y with a common related x; equal to k_complex(transpose(r)).
SimplicialComplex l_complex(const Relation& r);

/// S_y as a simplex of k_complex(r). Throws PreconditionError("Uncovered").
Simplex support_simplex(const Relation& r, VertexIndex y);

/// Y = faces of `complex` (labelled "{a,b,...}"), x R s iff x ∈ s.
Relation canonical_relation(const SimplicialComplex& complex);

/// Membership relation of a family of named subsets of `points`, e.g. a cover.
Relation membership_relation(const UniversePtr& points,
                             const std::vector<std::pair<std::string, std::vector<VertexIndex>>>& sets);

/// S_y ⊆ S'_{f(y)} for every y. Throws on universe mismatch or a partial assignment.
bool is_morphism(const Assignment& f, const Relation& source, const Relation& target);

/// L_f as a vertex map from Y to Z.
VertexMap induced_l_map(const RelationMorphism& m);

/// Least-index morphism when k_complex(source) ≤ k_complex(target), none otherwise.
/// Throws PreconditionError("Uncovered") / ("UniverseMismatch").
std::optional<Assignment> find_morphism(const Relation& source, const Relation& target);

/// Morphisms exist in both directions.
bool are_equivalent(const Relation& a, const Relation& b);

}  // namespace relcx
