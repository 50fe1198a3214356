#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "relcx/complex.hpp"
#include "relcx/errors.hpp"
#include "relcx/poset.hpp"

namespace relcx {

/// A free face together with the unique face that properly contains it.
class CollapseStep {
 public:
  /// Throws PreconditionError("InvalidStep") unless free_face is a
  /// codimension-one face of coface.
  CollapseStep(Simplex free_face, Simplex coface);

  const Simplex& free_face() const noexcept { return free_face_; }
  const Simplex& coface() const noexcept { return coface_; }

  friend bool operator==(const CollapseStep&, const CollapseStep&) = default;

 private:
  Simplex free_face_;
  Simplex coface_;
};

struct CollapseSequence {
  SimplicialComplex initial;
  std::vector<CollapseStep> steps;
};

/// Raised when a step removes a face that is not free.
class NotFreeError : public PreconditionError {
 public:
  NotFreeError(const std::string& message, std::vector<std::string> cofaces,
               std::optional<std::size_t> step_index)
      : PreconditionError("NotFree", message, std::move(cofaces)), step_index_(step_index) {}

  /// Position of the offending step when raised by verify_sequence.
  std::optional<std::size_t> step_index() const noexcept { return step_index_; }

 private:
  std::optional<std::size_t> step_index_;
};

/// The unique face properly containing `face`, if there is exactly one.
/// Throws PreconditionError("NotAFace").
std::optional<Simplex> free_coface(const SimplicialComplex& complex, const Simplex& face);

/// Removes the pair. Throws NotFreeError listing the actual proper cofaces.
SimplicialComplex apply_step(const SimplicialComplex& complex, const CollapseStep& step);

/// Replays the steps; throws NotFreeError carrying the index of the first bad step.
SimplicialComplex verify_sequence(const CollapseSequence& sequence);

/**
 * Collapse of the K (or L) complex of ≤ onto the complex of <. Faces through
 * each maximal element y (taken in ascending order) are paired A ↦ A ∪ {x0},
 * x0 the least element below y, highest dimension first.
 * Throws PreconditionError("SingletonComponent").
 */
CollapseSequence collapse_leq_to_strict(const Poset& poset, ComplexSide side);

struct GreedyCollapse {
  SimplicialComplex core;
  CollapseSequence sequence;

  /// A single vertex remains, which certifies contractibility.
  bool reached_point() const { return core.face_count() == 1; }
};

/// Removes free pairs until none is left, always taking the highest-dimensional
/// free face and among those the lexicographically least.
GreedyCollapse greedy_collapse(const SimplicialComplex& complex);

}  // namespace relcx
