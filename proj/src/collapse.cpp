#include "relcx/collapse.hpp"

#include <algorithm>
#include <set>

namespace relcx {

namespace {

std::string join_faces(const Universe& universe, const std::vector<Simplex>& faces) {
  std::string out;
  for (const Simplex& s : faces) {
    if (!out.empty()) out += ' ';
    out += to_string(universe, s);
  }
  return out.empty() ? "none" : out;
}

/// Face set of a complex with removal bookkeeping. Removing free pairs keeps
/// the set downward closed, so a face is free iff it has exactly one live
/// codimension-one coface and that coface has none.
class FaceLattice {
 public:
  explicit FaceLattice(const SimplicialComplex& complex)
      : faces_(complex.faces()),
        alive_(faces_.size(), true),
        up_(faces_.size()),
        down_(faces_.size()),
        live_up_(faces_.size(), 0) {
    for (std::size_t j = 0; j < faces_.size(); ++j) {
      const Simplex& s = faces_[j];
      if (s.size() < 2) continue;
      for (std::size_t k = 0; k < s.size(); ++k) {
        const std::size_t i = position(s.without_position(k)).value();
        down_[j].push_back(i);
        up_[i].push_back(j);
        ++live_up_[i];
      }
    }
  }

  std::optional<std::size_t> position(const Simplex& s) const {
    auto it = std::lower_bound(faces_.begin(), faces_.end(), s);
    if (it == faces_.end() || *it != s) return std::nullopt;
    return static_cast<std::size_t>(it - faces_.begin());
  }

  bool alive(std::size_t i) const { return alive_[i]; }
  const Simplex& face(std::size_t i) const { return faces_[i]; }
  std::size_t size() const { return faces_.size(); }
  const std::vector<std::size_t>& down(std::size_t i) const { return down_[i]; }

  std::optional<std::size_t> free_partner(std::size_t i) const {
    if (!alive_[i] || live_up_[i] != 1) return std::nullopt;
    for (std::size_t j : up_[i])
      if (alive_[j]) return live_up_[j] == 0 ? std::optional<std::size_t>(j) : std::nullopt;
    return std::nullopt;
  }

  /// Live faces properly containing face i.
  std::vector<Simplex> proper_cofaces(std::size_t i) const {
    std::vector<Simplex> out;
    for (std::size_t j = 0; j < faces_.size(); ++j)
      if (alive_[j] && j != i && faces_[i].is_subset_of(faces_[j])) out.push_back(faces_[j]);
    return out;
  }

  void remove(std::size_t i) {
    alive_[i] = false;
    for (std::size_t d : down_[i]) --live_up_[d];
  }

  SimplicialComplex snapshot(const UniversePtr& universe) const {
    std::vector<Simplex> faces;
    for (std::size_t i = 0; i < faces_.size(); ++i)
      if (alive_[i]) faces.push_back(faces_[i]);
    return SimplicialComplex::from_faces(universe, std::move(faces));
  }

 private:
  std::vector<Simplex> faces_;
  std::vector<bool> alive_;
  std::vector<std::vector<std::size_t>> up_;
  std::vector<std::vector<std::size_t>> down_;
  std::vector<std::size_t> live_up_;
};

void apply_to_lattice(FaceLattice& lattice, const Universe& universe, const CollapseStep& step,
                      std::optional<std::size_t> index) {
  const std::string where = index ? "step " + std::to_string(*index) + ": " : std::string();
  auto i = lattice.position(step.free_face());
  if (!i || !lattice.alive(*i))
    throw NotFreeError(where + to_string(universe, step.free_face()) + " is not a face", {}, index);
  auto j = lattice.free_partner(*i);
  if (!j || lattice.face(*j) != step.coface()) {
    auto cofaces = lattice.proper_cofaces(*i);
    std::vector<std::string> witness;
    for (const Simplex& s : cofaces) witness.push_back(to_string(universe, s));
    throw NotFreeError(where + to_string(universe, step.free_face()) +
                           " is not free with coface " + to_string(universe, step.coface()) +
                           "; proper cofaces: " + join_faces(universe, cofaces),
                       std::move(witness), index);
  }
  lattice.remove(*j);
  lattice.remove(*i);
}

}  // namespace

CollapseStep::CollapseStep(Simplex free_face, Simplex coface)
    : free_face_(std::move(free_face)), coface_(std::move(coface)) {
  if (coface_.size() != free_face_.size() + 1 || !free_face_.is_subset_of(coface_))
    throw PreconditionError("InvalidStep", "free face must be a codimension-one face of its coface");
}

std::optional<Simplex> free_coface(const SimplicialComplex& complex, const Simplex& face) {
  if (!complex.contains(face))
    throw PreconditionError("NotAFace", to_string(complex.universe(), face) + " is not a face");
  std::optional<Simplex> found;
  for (const Simplex& s : complex.faces()) {
    if (s.size() <= face.size() || !face.is_subset_of(s)) continue;
    if (found) return std::nullopt;
    found = s;
  }
  return found;
}

SimplicialComplex apply_step(const SimplicialComplex& complex, const CollapseStep& step) {
  FaceLattice lattice(complex);
  apply_to_lattice(lattice, complex.universe(), step, std::nullopt);
  return lattice.snapshot(complex.universe_ptr());
}

SimplicialComplex verify_sequence(const CollapseSequence& sequence) {
  FaceLattice lattice(sequence.initial);
  for (std::size_t k = 0; k < sequence.steps.size(); ++k)
    apply_to_lattice(lattice, sequence.initial.universe(), sequence.steps[k], k);
  return lattice.snapshot(sequence.initial.universe_ptr());
}

CollapseSequence collapse_leq_to_strict(const Poset& poset, ComplexSide side) {
  if (auto lonely = singleton_component(poset))
    throw PreconditionError("SingletonComponent",
                            "'" + poset.elements().label(*lonely) + "' is a connected component",
                            {poset.elements().label(*lonely)});
  // The L side of ≤ is the K side of the dual order.
  const Poset order = side == ComplexSide::K ? poset : poset.dual();
  CollapseSequence sequence{poset_dowker_complex(poset, false, side), {}};

  for (VertexIndex top : maximal_elements(order)) {
    std::vector<VertexIndex> below;
    for (VertexIndex x = 0; x < order.size(); ++x)
      if (order.less(x, top)) below.push_back(x);
    const VertexIndex apex = below.front();
    const std::vector<VertexIndex> rest(below.begin() + 1, below.end());
    const std::size_t m = rest.size();

    // Free faces {top} ∪ A, A ⊆ rest, grouped by |A| descending, lexicographic within.
    std::vector<std::vector<Simplex>> by_size(m + 1);
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m); ++mask) {
      std::vector<VertexIndex> face{top};
      for (std::size_t k = 0; k < m; ++k)
        if (mask & (std::uint64_t{1} << k)) face.push_back(rest[k]);
      by_size[face.size() - 1].emplace_back(std::move(face));
    }
    for (std::size_t k = m + 1; k-- > 0;) {
      std::sort(by_size[k].begin(), by_size[k].end());
      for (const Simplex& free_face : by_size[k])
        sequence.steps.emplace_back(free_face, free_face.with(apex));
    }
  }

  if (verify_sequence(sequence) != poset_dowker_complex(poset, true, side))
    throw std::logic_error("collapse did not end at the strict complex");
  return sequence;
}

GreedyCollapse greedy_collapse(const SimplicialComplex& complex) {
  FaceLattice lattice(complex);
  auto before = [&](std::size_t a, std::size_t b) {
    const int da = lattice.face(a).dimension();
    const int db = lattice.face(b).dimension();
    return da != db ? da > db : a < b;
  };
  std::set<std::size_t, decltype(before)> candidates(before);
  auto consider = [&](std::size_t i) {
    if (lattice.free_partner(i)) candidates.insert(i);
  };
  for (std::size_t i = 0; i < lattice.size(); ++i) consider(i);

  CollapseSequence sequence{complex, {}};
  while (!candidates.empty()) {
    const std::size_t i = *candidates.begin();
    candidates.erase(candidates.begin());
    auto j = lattice.free_partner(i);
    if (!j) continue;
    sequence.steps.emplace_back(lattice.face(i), lattice.face(*j));
    lattice.remove(*j);
    lattice.remove(i);
    for (std::size_t owner : {*j, i})
      for (std::size_t d : lattice.down(owner)) {
        consider(d);
        for (std::size_t e : lattice.down(d)) consider(e);
      }
  }

  SimplicialComplex core = lattice.snapshot(complex.universe_ptr());
  if (verify_sequence(sequence) != core) throw std::logic_error("greedy collapse failed to replay");
  return GreedyCollapse{std::move(core), std::move(sequence)};
}

}  // namespace relcx
