#include "relcx/complex.hpp"

#include <algorithm>
#include <iterator>

#include "relcx/errors.hpp"

namespace relcx {

// ---------------------------------------------------------------------------
// Universe
// ---------------------------------------------------------------------------

Universe::Universe(std::vector<std::string> labels) : labels_(std::move(labels)) {
  index_.reserve(labels_.size());
  for (std::size_t i = 0; i < labels_.size(); ++i) {
    const std::string& label = labels_[i];
    if (label.empty()) throw PreconditionError("InvalidLabel", "empty vertex label");
    if (std::any_of(label.begin(), label.end(),
                    [](unsigned char c) { return c == ' ' || c == '\t' || c == '\n' || c == '\r'; }))
      throw PreconditionError("InvalidLabel", "label contains whitespace", {label});
    if (!index_.emplace(label, static_cast<VertexIndex>(i)).second)
      throw PreconditionError("DuplicateLabel", "label '" + label + "' declared twice", {label});
  }
}

std::optional<VertexIndex> Universe::find(std::string_view label) const {
  auto it = index_.find(std::string(label));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

VertexIndex Universe::index(std::string_view label) const {
  if (auto v = find(label)) return *v;
  throw PreconditionError("UnknownVertex", "label '" + std::string(label) + "' is not in the universe",
                          {std::string(label)});
}

UniversePtr make_universe(std::vector<std::string> labels) {
  return std::make_shared<const Universe>(std::move(labels));
}

// ---------------------------------------------------------------------------
// Simplex
// ---------------------------------------------------------------------------

Simplex::Simplex(std::vector<VertexIndex> vertices) : vertices_(std::move(vertices)) {
  if (vertices_.empty()) throw PreconditionError("EmptySimplex", "a simplex needs at least one vertex");
  std::sort(vertices_.begin(), vertices_.end());
  if (std::adjacent_find(vertices_.begin(), vertices_.end()) != vertices_.end())
    throw PreconditionError("RepeatedVertex", "a simplex may not repeat a vertex");
}

bool Simplex::contains(VertexIndex v) const {
  return std::binary_search(vertices_.begin(), vertices_.end(), v);
}

bool Simplex::is_subset_of(const Simplex& other) const {
  return std::includes(other.vertices_.begin(), other.vertices_.end(), vertices_.begin(),
                       vertices_.end());
}

Simplex Simplex::with(VertexIndex v) const {
  std::vector<VertexIndex> out;
  out.reserve(vertices_.size() + 1);
  auto pos = std::lower_bound(vertices_.begin(), vertices_.end(), v);
  out.insert(out.end(), vertices_.begin(), pos);
  out.push_back(v);
  out.insert(out.end(), pos, vertices_.end());
  return Simplex(Trusted{}, std::move(out));
}

Simplex Simplex::without_position(std::size_t i) const {
  std::vector<VertexIndex> out;
  out.reserve(vertices_.size() - 1);
  for (std::size_t k = 0; k < vertices_.size(); ++k)
    if (k != i) out.push_back(vertices_[k]);
  return Simplex(std::move(out));
}

Simplex Simplex::unite(const Simplex& other) const {
  std::vector<VertexIndex> out;
  out.reserve(vertices_.size() + other.vertices_.size());
  std::set_union(vertices_.begin(), vertices_.end(), other.vertices_.begin(), other.vertices_.end(),
                 std::back_inserter(out));
  return Simplex(Trusted{}, std::move(out));
}

// ---------------------------------------------------------------------------
// SimplicialComplex
// ---------------------------------------------------------------------------

namespace {

void check_in_universe(const Universe& universe, const Simplex& s) {
  for (VertexIndex v : s)
    if (v >= universe.size())
      throw PreconditionError("UnknownVertex",
                              "vertex index " + std::to_string(v) + " is outside the universe");
}

void add_closure(const Simplex& facet, std::vector<Simplex>& out) {
  const std::size_t n = facet.size();
  if (n >= 21 || out.size() + (std::size_t{1} << n) > 4 * kMaxFaces)
    throw PreconditionError("TooLarge", "face set exceeds the supported size");
  std::vector<VertexIndex> buffer;
  for (std::uint32_t mask = 1; mask < (std::uint32_t{1} << n); ++mask) {
    buffer.clear();
    for (std::size_t i = 0; i < n; ++i)
      if (mask & (std::uint32_t{1} << i)) buffer.push_back(facet[i]);
    out.emplace_back(buffer);
  }
}

}  // namespace

SimplicialComplex::SimplicialComplex() : universe_(make_universe({})) {}

SimplicialComplex::SimplicialComplex(UniversePtr universe, std::vector<Simplex> sorted_faces)
    : universe_(std::move(universe)), faces_(std::move(sorted_faces)) {
  if (faces_.size() > kMaxFaces)
    throw PreconditionError("TooLarge", "face set exceeds the supported size");
  for (const Simplex& s : faces_) dimension_ = std::max(dimension_, s.dimension());
  // A face is maximal iff it is not a codimension-one face of another face.
  std::vector<bool> covered(faces_.size(), false);
  for (const Simplex& s : faces_) {
    if (s.size() < 2) continue;
    for (std::size_t i = 0; i < s.size(); ++i) {
      auto it = std::lower_bound(faces_.begin(), faces_.end(), s.without_position(i));
      covered[static_cast<std::size_t>(it - faces_.begin())] = true;
    }
  }
  for (std::size_t i = 0; i < faces_.size(); ++i)
    if (!covered[i]) facets_.push_back(faces_[i]);
}

SimplicialComplex SimplicialComplex::from_facets(UniversePtr universe,
                                                 const std::vector<Simplex>& facets) {
  std::vector<Simplex> faces;
  for (const Simplex& f : facets) {
    check_in_universe(*universe, f);
    add_closure(f, faces);
  }
  std::sort(faces.begin(), faces.end());
  faces.erase(std::unique(faces.begin(), faces.end()), faces.end());
  return SimplicialComplex(std::move(universe), std::move(faces));
}

SimplicialComplex SimplicialComplex::from_faces(UniversePtr universe, std::vector<Simplex> faces) {
  std::sort(faces.begin(), faces.end());
  faces.erase(std::unique(faces.begin(), faces.end()), faces.end());
  for (const Simplex& s : faces) {
    check_in_universe(*universe, s);
    if (s.size() > 1)
      for (std::size_t i = 0; i < s.size(); ++i)
        if (!std::binary_search(faces.begin(), faces.end(), s.without_position(i)))
          throw PreconditionError("NotDownwardClosed", "a boundary face is missing");
  }
  return SimplicialComplex(std::move(universe), std::move(faces));
}

std::vector<Simplex> SimplicialComplex::faces_of_dimension(int dim) const {
  std::vector<Simplex> out;
  for (const Simplex& s : faces_)
    if (s.dimension() == dim) out.push_back(s);
  return out;
}

bool SimplicialComplex::contains(const Simplex& s) const {
  return std::binary_search(faces_.begin(), faces_.end(), s);
}

std::vector<VertexIndex> SimplicialComplex::vertices() const {
  std::vector<VertexIndex> out;
  for (const Simplex& s : faces_)
    if (s.size() == 1) out.push_back(s.front());
  return out;
}

std::vector<std::size_t> SimplicialComplex::f_vector() const {
  std::vector<std::size_t> out(static_cast<std::size_t>(dimension_ + 1), 0);
  for (const Simplex& s : faces_) ++out[static_cast<std::size_t>(s.dimension())];
  return out;
}

long long SimplicialComplex::euler_characteristic() const {
  long long chi = 0;
  for (const Simplex& s : faces_) chi += (s.dimension() % 2 == 0) ? 1 : -1;
  return chi;
}

bool operator==(const SimplicialComplex& a, const SimplicialComplex& b) {
  return *a.universe_ == *b.universe_ && a.faces_ == b.faces_;
}

// ---------------------------------------------------------------------------
// Vertex maps
// ---------------------------------------------------------------------------

VertexMap VertexMap::identity(const UniversePtr& universe) {
  VertexMap f{universe, universe, {}};
  for (VertexIndex v = 0; v < universe->size(); ++v) f.image.emplace_back(v);
  return f;
}

VertexMap VertexMap::from_labels(const UniversePtr& domain, const UniversePtr& codomain,
                                 const std::vector<std::pair<std::string, std::string>>& assignment) {
  VertexMap f{domain, codomain, std::vector<std::optional<VertexIndex>>(domain->size())};
  for (const auto& [from, to] : assignment) f.image[domain->index(from)] = codomain->index(to);
  return f;
}

Simplex VertexMap::apply(const Simplex& s) const {
  std::vector<VertexIndex> out;
  out.reserve(s.size());
  for (VertexIndex v : s) {
    if (v >= image.size() || !image[v])
      throw PreconditionError("PartialMap", "vertex '" + domain->label(v) + "' has no image",
                              {domain->label(v)});
    out.push_back(*image[v]);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return Simplex(std::move(out));
}

// ---------------------------------------------------------------------------
// Operations
// ---------------------------------------------------------------------------

Simplex simplex_from_labels(const Universe& universe, const std::vector<std::string>& labels) {
  std::vector<VertexIndex> vs;
  vs.reserve(labels.size());
  for (const std::string& l : labels) vs.push_back(universe.index(l));
  return Simplex(std::move(vs));
}

SimplicialComplex complex_from_facets(const UniversePtr& universe,
                                      const std::vector<std::vector<std::string>>& facets) {
  std::vector<Simplex> simplices;
  simplices.reserve(facets.size());
  for (const auto& labels : facets) {
    if (labels.empty()) throw PreconditionError("EmptyFacet", "facet lists no vertices");
    simplices.push_back(simplex_from_labels(*universe, labels));
  }
  return SimplicialComplex::from_facets(universe, simplices);
}

bool is_subcomplex(const SimplicialComplex& sub, const SimplicialComplex& super) {
  if (sub.universe() == super.universe()) {
    return std::includes(super.faces().begin(), super.faces().end(), sub.faces().begin(),
                         sub.faces().end());
  }
  for (const Simplex& s : sub.faces()) {
    std::vector<VertexIndex> mapped;
    for (VertexIndex v : s) {
      auto w = super.universe().find(sub.universe().label(v));
      if (!w) return false;
      mapped.push_back(*w);
    }
    if (!super.contains(Simplex(std::move(mapped)))) return false;
  }
  return true;
}

SimplicialComplex full_complex(const UniversePtr& universe) {
  if (universe->empty()) throw PreconditionError("EmptyUniverse", "full complex of an empty set");
  std::vector<VertexIndex> all(universe->size());
  for (VertexIndex v = 0; v < all.size(); ++v) all[v] = v;
  return SimplicialComplex::from_facets(universe, {Simplex(std::move(all))});
}

namespace {

void check_map_shape(const VertexMap& f, const SimplicialComplex& domain,
                     const SimplicialComplex& codomain) {
  if (!(*f.domain == domain.universe()) || !(*f.codomain == codomain.universe()))
    throw PreconditionError("UniverseMismatch", "vertex map does not match the complexes");
}

}  // namespace

SimplicialComplex apply_simplicial_map(const VertexMap& f, const SimplicialComplex& domain,
                                       const SimplicialComplex& codomain) {
  check_map_shape(f, domain, codomain);
  std::vector<Simplex> image;
  image.reserve(domain.face_count());
  for (const Simplex& s : domain.faces()) {
    Simplex t = f.apply(s);
    if (!codomain.contains(t))
      throw PreconditionError("NotSimplicial",
                              "image of " + to_string(domain.universe(), s) + " is not a face",
                              simplex_labels(domain.universe(), s));
    image.push_back(std::move(t));
  }
  return SimplicialComplex::from_faces(codomain.universe_ptr(), std::move(image));
}

bool are_contiguous(const VertexMap& f, const VertexMap& g, const SimplicialComplex& domain,
                    const SimplicialComplex& codomain) {
  apply_simplicial_map(f, domain, codomain);
  apply_simplicial_map(g, domain, codomain);
  return std::all_of(domain.faces().begin(), domain.faces().end(), [&](const Simplex& s) {
    return codomain.contains(f.apply(s).unite(g.apply(s)));
  });
}

std::optional<VertexIndex> cone_apex(const SimplicialComplex& complex) {
  if (complex.empty()) return std::nullopt;
  std::vector<VertexIndex> common = complex.facets().front().vertices();
  for (const Simplex& facet : complex.facets()) {
    std::vector<VertexIndex> next;
    std::set_intersection(common.begin(), common.end(), facet.begin(), facet.end(),
                          std::back_inserter(next));
    common = std::move(next);
    if (common.empty()) return std::nullopt;
  }
  return common.front();
}

SimplicialComplex induced_subcomplex(const SimplicialComplex& complex,
                                     const std::vector<VertexIndex>& vertices) {
  std::vector<VertexIndex> keep(vertices);
  std::sort(keep.begin(), keep.end());
  std::vector<Simplex> faces;
  for (const Simplex& s : complex.faces())
    if (std::includes(keep.begin(), keep.end(), s.begin(), s.end())) faces.push_back(s);
  return SimplicialComplex::from_faces(complex.universe_ptr(), std::move(faces));
}

std::vector<std::string> simplex_labels(const Universe& universe, const Simplex& s) {
  std::vector<std::string> out;
  out.reserve(s.size());
  for (VertexIndex v : s) out.push_back(universe.label(v));
  return out;
}

std::string to_string(const Universe& universe, const Simplex& s) {
  std::string out = "{";
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i) out += ',';
    out += universe.label(s[i]);
  }
  return out + "}";
}

}  // namespace relcx
