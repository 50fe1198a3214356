#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace relcx {

using VertexIndex = std::uint32_t;

/// Largest number of faces any complex may materialize.
inline constexpr std::size_t kMaxFaces = std::size_t{1} << 20;

/**
 * Interned vertex labels. Index order is the order the labels were given in,
 * and it is the canonical vertex order for every complex built on top.
 */
class Universe {
 public:
  Universe() = default;

  /// Throws PreconditionError on duplicate, empty or whitespace-bearing labels.
  explicit Universe(std::vector<std::string> labels);

  std::size_t size() const noexcept { return labels_.size(); }
  bool empty() const noexcept { return labels_.empty(); }

  const std::string& label(VertexIndex v) const { return labels_.at(v); }
  const std::vector<std::string>& labels() const noexcept { return labels_; }

  std::optional<VertexIndex> find(std::string_view label) const;

  /// Throws PreconditionError("UnknownVertex") for labels outside the universe.
  VertexIndex index(std::string_view label) const;

  friend bool operator==(const Universe& a, const Universe& b) { return a.labels_ == b.labels_; }

 private:
  std::vector<std::string> labels_;
  std::unordered_map<std::string, VertexIndex> index_;
};

using UniversePtr = std::shared_ptr<const Universe>;

UniversePtr make_universe(std::vector<std::string> labels);

/// Nonempty, strictly increasing sequence of vertex indices.
class Simplex {
 public:
  using const_iterator = std::vector<VertexIndex>::const_iterator;

  /// Sorts the input. Throws PreconditionError on empty input or repeated vertices.
  explicit Simplex(std::vector<VertexIndex> vertices);
  Simplex(std::initializer_list<VertexIndex> vertices)
      : Simplex(std::vector<VertexIndex>(vertices)) {}

  std::size_t size() const noexcept { return vertices_.size(); }
  int dimension() const noexcept { return static_cast<int>(vertices_.size()) - 1; }
  VertexIndex operator[](std::size_t i) const { return vertices_[i]; }
  VertexIndex front() const { return vertices_.front(); }
  const_iterator begin() const noexcept { return vertices_.begin(); }
  const_iterator end() const noexcept { return vertices_.end(); }
  const std::vector<VertexIndex>& vertices() const noexcept { return vertices_; }

  bool contains(VertexIndex v) const;
  bool is_subset_of(const Simplex& other) const;

  /// The simplex with `v` added; `v` must not already be present.
  Simplex with(VertexIndex v) const;
  /// The codimension-one face obtained by dropping position `i`. Requires size() > 1.
  Simplex without_position(std::size_t i) const;
  Simplex unite(const Simplex& other) const;

  friend auto operator<=>(const Simplex&, const Simplex&) = default;
  friend bool operator==(const Simplex&, const Simplex&) = default;

 private:
  struct Trusted {};
  Simplex(Trusted, std::vector<VertexIndex> sorted) : vertices_(std::move(sorted)) {}

  std::vector<VertexIndex> vertices_;
};

/**
 * Finite abstract simplicial complex stored as its full downward-closed face
 * set. Faces are kept in lexicographic order of their index sequences.
 */
class SimplicialComplex {
 public:
  /// The empty complex over an empty universe.
  SimplicialComplex();

  /// Downward closure of `facets`. Throws on vertices outside the universe or
  /// when the closure would exceed kMaxFaces.
  static SimplicialComplex from_facets(UniversePtr universe, const std::vector<Simplex>& facets);

  /// Takes an explicit face set and checks that it is downward closed.
  static SimplicialComplex from_faces(UniversePtr universe, std::vector<Simplex> faces);

  const Universe& universe() const noexcept { return *universe_; }
  const UniversePtr& universe_ptr() const noexcept { return universe_; }

  const std::vector<Simplex>& faces() const noexcept { return faces_; }
  const std::vector<Simplex>& facets() const noexcept { return facets_; }
  std::vector<Simplex> faces_of_dimension(int dim) const;

  bool empty() const noexcept { return faces_.empty(); }
  std::size_t face_count() const noexcept { return faces_.size(); }
  /// -1 for the empty complex.
  int dimension() const noexcept { return dimension_; }
  bool contains(const Simplex& s) const;

  /// Vertices that actually occur as 0-faces, ascending.
  std::vector<VertexIndex> vertices() const;
  /// Number of faces per dimension.
  std::vector<std::size_t> f_vector() const;
  long long euler_characteristic() const;

  /// Same universe and same face set.
  friend bool operator==(const SimplicialComplex& a, const SimplicialComplex& b);

 private:
  SimplicialComplex(UniversePtr universe, std::vector<Simplex> sorted_faces);

  UniversePtr universe_;
  std::vector<Simplex> faces_;
  std::vector<Simplex> facets_;
  int dimension_ = -1;
};

/// Assignment of codomain vertices to (some of) the domain vertices.
struct VertexMap {
  UniversePtr domain;
  UniversePtr codomain;
  std::vector<std::optional<VertexIndex>> image;

  static VertexMap identity(const UniversePtr& universe);
  static VertexMap from_labels(
      const UniversePtr& domain, const UniversePtr& codomain,
      const std::vector<std::pair<std::string, std::string>>& assignment);

  /// Image of a simplex; throws PreconditionError("PartialMap") if a vertex is unassigned.
  Simplex apply(const Simplex& s) const;
};

/// Builds a complex from label lists. Errors: EmptyFacet, UnknownVertex.
SimplicialComplex complex_from_facets(const UniversePtr& universe,
                                      const std::vector<std::vector<std::string>>& facets);

/// Every face of `sub` is a face of `super`. Faces are matched by label.
bool is_subcomplex(const SimplicialComplex& sub, const SimplicialComplex& super);

/// All nonempty subsets of the universe. Throws on an empty universe.
SimplicialComplex full_complex(const UniversePtr& universe);

/// Image of `domain` under `f`; throws PreconditionError("NotSimplicial") naming
/// the first face whose image is not a face of `codomain`.
SimplicialComplex apply_simplicial_map(const VertexMap& f, const SimplicialComplex& domain,
                                       const SimplicialComplex& codomain);

/// f(s) ∪ g(s) is a face of `codomain` for every face s of `domain`.
bool are_contiguous(const VertexMap& f, const VertexMap& g, const SimplicialComplex& domain,
                    const SimplicialComplex& codomain);

/// Least vertex lying in every facet, if any.
std::optional<VertexIndex> cone_apex(const SimplicialComplex& complex);

/// Faces of `complex` all of whose vertices lie in `vertices`.
SimplicialComplex induced_subcomplex(const SimplicialComplex& complex,
                                     const std::vector<VertexIndex>& vertices);

std::vector<std::string> simplex_labels(const Universe& universe, const Simplex& s);
std::string to_string(const Universe& universe, const Simplex& s);

/// Translates a label list into a simplex over `universe`.
Simplex simplex_from_labels(const Universe& universe, const std::vector<std::string>& labels);

}  // namespace relcx
