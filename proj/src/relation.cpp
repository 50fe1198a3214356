#include "relcx/relation.hpp"

#include <algorithm>

#include "relcx/errors.hpp"

namespace relcx {

Relation::Relation(UniversePtr x_universe, UniversePtr y_universe, Incidence pairs)
    : x_(std::move(x_universe)), y_(std::move(y_universe)), pairs_(std::move(pairs)) {
  if (x_->empty() || y_->empty())
    throw PreconditionError("EmptyUniverse", "relation universes must be nonempty");
  if (pairs_.rows() != static_cast<Eigen::Index>(x_->size()) ||
      pairs_.cols() != static_cast<Eigen::Index>(y_->size()))
    throw PreconditionError("ShapeMismatch", "incidence shape does not match the universes");
}

Relation Relation::from_pairs(UniversePtr x_universe, UniversePtr y_universe,
                              const std::vector<std::pair<std::string, std::string>>& pairs) {
  Incidence incidence = Incidence::Constant(static_cast<Eigen::Index>(x_universe->size()),
                                            static_cast<Eigen::Index>(y_universe->size()), false);
  for (const auto& [x, y] : pairs) incidence(x_universe->index(x), y_universe->index(y)) = true;
  return Relation(std::move(x_universe), std::move(y_universe), std::move(incidence));
}

std::vector<VertexIndex> Relation::support(VertexIndex y) const {
  std::vector<VertexIndex> out;
  for (Eigen::Index x = 0; x < pairs_.rows(); ++x)
    if (pairs_(x, y)) out.push_back(static_cast<VertexIndex>(x));
  return out;
}

bool operator==(const Relation& a, const Relation& b) {
  return *a.x_ == *b.x_ && *a.y_ == *b.y_ && (a.pairs_ == b.pairs_).all();
}

RelationMorphism::RelationMorphism(Relation source, Relation target, Assignment assignment)
    : source_(std::move(source)), target_(std::move(target)), assignment_(std::move(assignment)) {
  if (!is_morphism(assignment_, source_, target_))
    throw PreconditionError("NotAMorphism", "assignment violates x R y => x R' f(y)");
}

bool is_covered(const Relation& r) { return r.incidence().colwise().any().all(); }

void require_covered(const Relation& r) {
  for (VertexIndex y = 0; y < r.y_universe().size(); ++y)
    if (!r.incidence().col(y).any())
      throw PreconditionError("Uncovered", "'" + r.y_universe().label(y) + "' is related to nothing",
                              {r.y_universe().label(y)});
}

Relation transpose(const Relation& r) {
  return Relation(r.y_universe_ptr(), r.x_universe_ptr(), r.incidence().transpose());
}

SimplicialComplex k_complex(const Relation& r) {
  if (!r.incidence().any()) throw PreconditionError("EmptyRelation", "relation has no pairs");
  std::vector<Simplex> supports;
  for (VertexIndex y = 0; y < r.y_universe().size(); ++y) {
    auto s = r.support(y);
    if (!s.empty()) supports.emplace_back(std::move(s));
  }
  // Only inclusion-maximal supports contribute new faces.
  std::sort(supports.begin(), supports.end(),
            [](const Simplex& a, const Simplex& b) { return a.size() > b.size(); });
  std::vector<Simplex> maximal;
  for (const Simplex& s : supports)
    if (std::none_of(maximal.begin(), maximal.end(),
                     [&](const Simplex& m) { return s.is_subset_of(m); }))
      maximal.push_back(s);
  return SimplicialComplex::from_facets(r.x_universe_ptr(), maximal);
}

SimplicialComplex l_complex(const Relation& r) { return k_complex(transpose(r)); }

Simplex support_simplex(const Relation& r, VertexIndex y) {
  auto s = r.support(y);
  if (s.empty())
    throw PreconditionError("Uncovered", "no element is related to '" + r.y_universe().label(y) + "'",
                            {r.y_universe().label(y)});
  return Simplex(std::move(s));
}

Relation canonical_relation(const SimplicialComplex& complex) {
  if (complex.empty()) throw PreconditionError("EmptyComplex", "canonical relation of an empty complex");
  std::vector<std::string> labels;
  labels.reserve(complex.face_count());
  for (const Simplex& s : complex.faces()) labels.push_back(to_string(complex.universe(), s));
  auto y_universe = make_universe(std::move(labels));
  Incidence incidence = Incidence::Constant(static_cast<Eigen::Index>(complex.universe().size()),
                                            static_cast<Eigen::Index>(complex.face_count()), false);
  for (std::size_t j = 0; j < complex.face_count(); ++j)
    for (VertexIndex x : complex.faces()[j]) incidence(x, static_cast<Eigen::Index>(j)) = true;
  return Relation(complex.universe_ptr(), std::move(y_universe), std::move(incidence));
}

Relation membership_relation(
    const UniversePtr& points,
    const std::vector<std::pair<std::string, std::vector<VertexIndex>>>& sets) {
  std::vector<std::string> names;
  for (const auto& [name, members] : sets) names.push_back(name);
  Incidence incidence = Incidence::Constant(static_cast<Eigen::Index>(points->size()),
                                            static_cast<Eigen::Index>(sets.size()), false);
  for (std::size_t j = 0; j < sets.size(); ++j)
    for (VertexIndex x : sets[j].second) incidence(x, static_cast<Eigen::Index>(j)) = true;
  return Relation(points, make_universe(std::move(names)), std::move(incidence));
}

namespace {

void require_shared_x(const Relation& a, const Relation& b) {
  if (!(a.x_universe() == b.x_universe()))
    throw PreconditionError("UniverseMismatch", "relations do not share their X universe");
}

// S_y ⊆ S'_z
bool support_within(const Relation& source, VertexIndex y, const Relation& target, VertexIndex z) {
  return !(source.incidence().col(y) && !target.incidence().col(z)).any();
}

}  // namespace

bool is_morphism(const Assignment& f, const Relation& source, const Relation& target) {
  require_shared_x(source, target);
  if (f.size() != source.y_universe().size())
    throw PreconditionError("PartialMap", "assignment does not cover every element of Y");
  for (VertexIndex y = 0; y < f.size(); ++y) {
    if (f[y] >= target.y_universe().size())
      throw PreconditionError("PartialMap", "assignment leaves the target universe");
    if (!support_within(source, y, target, f[y])) return false;
  }
  return true;
}

VertexMap induced_l_map(const RelationMorphism& m) {
  VertexMap f{m.source().y_universe_ptr(), m.target().y_universe_ptr(), {}};
  f.image.reserve(m.assignment().size());
  for (VertexIndex z : m.assignment()) f.image.emplace_back(z);
  return f;
}

std::optional<Assignment> find_morphism(const Relation& source, const Relation& target) {
  require_shared_x(source, target);
  require_covered(source);
  require_covered(target);
  Assignment f(source.y_universe().size());
  const auto z_count = static_cast<VertexIndex>(target.y_universe().size());
  for (VertexIndex y = 0; y < f.size(); ++y) {
    VertexIndex z = 0;
    while (z < z_count && !support_within(source, y, target, z)) ++z;
    if (z == z_count) return std::nullopt;
    f[y] = z;
  }
  return f;
}

bool are_equivalent(const Relation& a, const Relation& b) {
  return find_morphism(a, b).has_value() && find_morphism(b, a).has_value();
}

}  // namespace relcx
