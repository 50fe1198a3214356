#include "relcx/poset.hpp"

#include <algorithm>
#include <bit>
#include <deque>
#include <functional>

#include "relcx/errors.hpp"

namespace relcx {

namespace {

Eigen::Index idx(VertexIndex v) { return static_cast<Eigen::Index>(v); }

std::vector<VertexIndex> column_members(const OrderMatrix& m, VertexIndex col) {
  std::vector<VertexIndex> out;
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    if (m(i, idx(col))) out.push_back(static_cast<VertexIndex>(i));
  return out;
}

// Path a -> ... -> b along generating edges, inclusive of both ends.
std::vector<VertexIndex> find_path(const std::vector<std::vector<VertexIndex>>& succ, VertexIndex a,
                                   VertexIndex b) {
  std::vector<std::optional<VertexIndex>> parent(succ.size());
  std::vector<bool> seen(succ.size(), false);
  std::deque<VertexIndex> queue{a};
  seen[a] = true;
  while (!queue.empty()) {
    VertexIndex u = queue.front();
    queue.pop_front();
    if (u == b) break;
    for (VertexIndex w : succ[u])
      if (!seen[w]) {
        seen[w] = true;
        parent[w] = u;
        queue.push_back(w);
      }
  }
  std::vector<VertexIndex> path{b};
  while (path.back() != a) path.push_back(*parent[path.back()]);
  std::reverse(path.begin(), path.end());
  return path;
}

}  // namespace

// ---------------------------------------------------------------------------
// Poset
// ---------------------------------------------------------------------------

Poset::Poset(UniversePtr elements, OrderMatrix order)
    : elements_(std::move(elements)), order_(std::move(order)) {
  const auto n = static_cast<Eigen::Index>(elements_->size());
  if (order_.rows() != n || order_.cols() != n)
    throw PreconditionError("ShapeMismatch", "order matrix does not match the element count");
  for (Eigen::Index i = 0; i < n; ++i) {
    if (!order_(i, i)) throw PreconditionError("NotAPartialOrder", "order is not reflexive");
    for (Eigen::Index j = 0; j < n; ++j) {
      if (i != j && order_(i, j) && order_(j, i))
        throw PreconditionError("NotAPartialOrder", "order is not antisymmetric");
      if (order_(i, j) && (order_.row(j) && !order_.row(i)).any())
        throw PreconditionError("NotAPartialOrder", "order is not transitive");
    }
  }
}

Relation Poset::leq_relation() const { return Relation(elements_, elements_, order_); }

Relation Poset::strict_relation() const {
  const auto n = static_cast<Eigen::Index>(size());
  OrderMatrix strict = order_;
  for (Eigen::Index i = 0; i < n; ++i) strict(i, i) = false;
  return Relation(elements_, elements_, std::move(strict));
}

Poset Poset::dual() const { return Poset(elements_, order_.transpose()); }

bool operator==(const Poset& a, const Poset& b) {
  return *a.elements_ == *b.elements_ && (a.order_ == b.order_).all();
}

Poset poset_from_pairs(const UniversePtr& elements,
                       const std::vector<std::pair<VertexIndex, VertexIndex>>& pairs) {
  const auto n = static_cast<Eigen::Index>(elements->size());
  OrderMatrix order = OrderMatrix::Constant(n, n, false);
  std::vector<std::vector<VertexIndex>> succ(elements->size());
  for (Eigen::Index i = 0; i < n; ++i) order(i, i) = true;
  for (auto [a, b] : pairs) {
    if (a >= elements->size() || b >= elements->size())
      throw PreconditionError("UnknownVertex", "order pair outside the element set");
    order(idx(a), idx(b)) = true;
    succ[a].push_back(b);
  }
  // Warshall closure on rows.
  for (Eigen::Index k = 0; k < n; ++k)
    for (Eigen::Index i = 0; i < n; ++i)
      if (order(i, k)) order.row(i) = order.row(i) || order.row(k);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = i + 1; j < n; ++j)
      if (order(i, j) && order(j, i)) {
        auto a = static_cast<VertexIndex>(i);
        auto b = static_cast<VertexIndex>(j);
        auto forward = find_path(succ, a, b);
        auto back = find_path(succ, b, a);
        forward.insert(forward.end(), back.begin() + 1, back.end());
        std::vector<std::string> witness;
        for (VertexIndex v : forward) witness.push_back(elements->label(v));
        throw PreconditionError("CycleDetected",
                                "'" + elements->label(a) + "' and '" + elements->label(b) +
                                    "' lie on a cycle",
                                std::move(witness));
      }
  return Poset(elements, std::move(order));
}

Poset poset_from_pairs(const UniversePtr& elements,
                       const std::vector<std::pair<std::string, std::string>>& pairs) {
  std::vector<std::pair<VertexIndex, VertexIndex>> indexed;
  indexed.reserve(pairs.size());
  for (const auto& [a, b] : pairs) indexed.emplace_back(elements->index(a), elements->index(b));
  return poset_from_pairs(elements, indexed);
}

std::vector<VertexIndex> down_set(const Poset& p, VertexIndex x) {
  if (x >= p.size()) throw PreconditionError("UnknownVertex", "element outside the poset");
  return column_members(p.order(), x);
}

std::vector<VertexIndex> up_set(const Poset& p, VertexIndex x) {
  if (x >= p.size()) throw PreconditionError("UnknownVertex", "element outside the poset");
  std::vector<VertexIndex> out;
  for (VertexIndex y = 0; y < p.size(); ++y)
    if (p.leq(x, y)) out.push_back(y);
  return out;
}

std::vector<VertexIndex> maximal_elements(const Poset& p) {
  std::vector<VertexIndex> out;
  for (VertexIndex x = 0; x < p.size(); ++x)
    if (p.order().row(idx(x)).count() == 1) out.push_back(x);
  return out;
}

std::vector<VertexIndex> minimal_elements(const Poset& p) {
  std::vector<VertexIndex> out;
  for (VertexIndex x = 0; x < p.size(); ++x)
    if (p.order().col(idx(x)).count() == 1) out.push_back(x);
  return out;
}

std::optional<VertexIndex> maximum(const Poset& p) {
  auto tops = maximal_elements(p);
  if (tops.size() == 1 && p.order().col(idx(tops.front())).all()) return tops.front();
  return std::nullopt;
}

std::size_t chain_length(const Poset& p) {
  // Longest chain ending at x, filled in a linear-extension order (by down-set size).
  std::vector<VertexIndex> order(p.size());
  for (VertexIndex v = 0; v < p.size(); ++v) order[v] = v;
  std::sort(order.begin(), order.end(), [&](VertexIndex a, VertexIndex b) {
    return p.order().col(idx(a)).count() < p.order().col(idx(b)).count();
  });
  std::vector<std::size_t> longest(p.size(), 1);
  std::size_t best = 0;
  for (VertexIndex x : order) {
    for (VertexIndex y = 0; y < p.size(); ++y)
      if (p.less(y, x)) longest[x] = std::max(longest[x], longest[y] + 1);
    best = std::max(best, longest[x]);
  }
  return best;
}

SimplicialComplex order_complex(const Poset& p) {
  if (p.size() == 0) throw PreconditionError("EmptyPoset", "order complex of an empty poset");
  // Maximal chains are the Hasse-diagram paths from a minimal to a maximal element.
  auto covers = [&](VertexIndex a, VertexIndex b) {
    if (!p.less(a, b)) return false;
    for (VertexIndex c = 0; c < p.size(); ++c)
      if (p.less(a, c) && p.less(c, b)) return false;
    return true;
  };
  std::vector<std::vector<VertexIndex>> up(p.size());
  for (VertexIndex a = 0; a < p.size(); ++a)
    for (VertexIndex b = 0; b < p.size(); ++b)
      if (covers(a, b)) up[a].push_back(b);

  std::vector<Simplex> chains;
  std::vector<VertexIndex> path;
  std::function<void(VertexIndex)> walk = [&](VertexIndex v) {
    path.push_back(v);
    if (up[v].empty()) chains.emplace_back(path);
    for (VertexIndex w : up[v]) walk(w);
    path.pop_back();
  };
  for (VertexIndex m : minimal_elements(p)) walk(m);
  return SimplicialComplex::from_facets(p.elements_ptr(), chains);
}

SimplicialComplex poset_dowker_complex(const Poset& p, bool strict, ComplexSide side) {
  if (p.size() == 0) throw PreconditionError("EmptyPoset", "Dowker complex of an empty poset");
  Relation r = strict ? p.strict_relation() : p.leq_relation();
  if (!r.incidence().any())
    throw PreconditionError("EmptyResult", "the strict order of a discrete poset is empty");
  return side == ComplexSide::K ? k_complex(r) : l_complex(r);
}

std::optional<std::pair<VertexIndex, VertexIndex>> lattice_violation(const Poset& p) {
  const OrderMatrix& m = p.order();
  for (Eigen::Index x = 0; x < m.cols(); ++x)
    for (Eigen::Index y = x + 1; y < m.cols(); ++y) {
      auto meet = m.col(x) && m.col(y);
      if (!meet.any()) continue;
      bool found = false;
      for (Eigen::Index z = 0; z < m.cols() && !found; ++z) found = (m.col(z) == meet).all();
      if (!found) return std::make_pair(static_cast<VertexIndex>(x), static_cast<VertexIndex>(y));
    }
  return std::nullopt;
}

bool lattice_condition(const Poset& p) { return !lattice_violation(p).has_value(); }

Poset realize_as_poset_k_complex(const SimplicialComplex& complex) {
  const Universe& universe = complex.universe();
  if (complex.empty()) throw PreconditionError("NotComplete", "the complex is empty");
  auto vertices = complex.vertices();
  if (vertices.size() != universe.size()) {
    for (VertexIndex v = 0; v < universe.size(); ++v)
      if (!std::binary_search(vertices.begin(), vertices.end(), v))
        throw PreconditionError("NotComplete",
                                "'" + universe.label(v) + "' is not a vertex of the complex",
                                {universe.label(v)});
  }
  const auto& facets = complex.facets();
  std::vector<std::size_t> occurrences(universe.size(), 0);
  for (const Simplex& s : facets)
    for (VertexIndex v : s) ++occurrences[v];

  std::vector<std::pair<VertexIndex, VertexIndex>> pairs;
  for (const Simplex& s : facets) {
    auto top = std::find_if(s.begin(), s.end(), [&](VertexIndex v) { return occurrences[v] == 1; });
    if (top == s.end())
      throw PreconditionError("NotRealizable",
                              "every vertex of facet " + to_string(universe, s) +
                                  " lies in another facet",
                              simplex_labels(universe, s));
    for (VertexIndex x : s)
      if (x != *top) pairs.emplace_back(x, *top);
  }
  return poset_from_pairs(complex.universe_ptr(), pairs);
}

Poset product_poset(const Poset& p, const Poset& q) {
  std::vector<std::string> labels;
  labels.reserve(p.size() * q.size());
  for (VertexIndex i = 0; i < p.size(); ++i)
    for (VertexIndex j = 0; j < q.size(); ++j)
      labels.push_back("(" + p.elements().label(i) + "," + q.elements().label(j) + ")");
  const auto n = static_cast<Eigen::Index>(labels.size());
  const auto qn = static_cast<Eigen::Index>(q.size());
  OrderMatrix order(n, n);
  for (Eigen::Index a = 0; a < n; ++a)
    for (Eigen::Index b = 0; b < n; ++b)
      order(a, b) = p.order()(a / qn, b / qn) && q.order()(a % qn, b % qn);
  return Poset(make_universe(std::move(labels)), std::move(order));
}

Poset induced_subposet(const Poset& p, const std::vector<VertexIndex>& elements) {
  std::vector<VertexIndex> keep(elements);
  std::sort(keep.begin(), keep.end());
  std::vector<std::string> labels;
  for (VertexIndex v : keep) labels.push_back(p.elements().label(v));
  const auto n = static_cast<Eigen::Index>(keep.size());
  OrderMatrix order(n, n);
  for (Eigen::Index a = 0; a < n; ++a)
    for (Eigen::Index b = 0; b < n; ++b)
      order(a, b) = p.leq(keep[static_cast<std::size_t>(a)], keep[static_cast<std::size_t>(b)]);
  return Poset(make_universe(std::move(labels)), std::move(order));
}

std::vector<std::vector<VertexIndex>> connected_components(const Poset& p) {
  std::vector<int> component(p.size(), -1);
  std::vector<std::vector<VertexIndex>> out;
  for (VertexIndex start = 0; start < p.size(); ++start) {
    if (component[start] >= 0) continue;
    const int id = static_cast<int>(out.size());
    out.emplace_back();
    std::vector<VertexIndex> stack{start};
    component[start] = id;
    while (!stack.empty()) {
      VertexIndex u = stack.back();
      stack.pop_back();
      out.back().push_back(u);
      for (VertexIndex w = 0; w < p.size(); ++w)
        if (component[w] < 0 && p.comparable(u, w)) {
          component[w] = id;
          stack.push_back(w);
        }
    }
    std::sort(out.back().begin(), out.back().end());
  }
  return out;
}

std::optional<VertexIndex> singleton_component(const Poset& p) {
  for (const auto& c : connected_components(p))
    if (c.size() == 1) return c.front();
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Finite spaces
// ---------------------------------------------------------------------------

std::vector<VertexIndex> members(PointSet set) {
  std::vector<VertexIndex> out;
  while (set) {
    out.push_back(static_cast<VertexIndex>(std::countr_zero(set)));
    set &= set - 1;
  }
  return out;
}

PointSet point_set(const std::vector<VertexIndex>& points) {
  PointSet out = 0;
  for (VertexIndex v : points) out |= PointSet{1} << v;
  return out;
}

namespace {

PointSet whole(std::size_t n) { return n == 64 ? ~PointSet{0} : (PointSet{1} << n) - 1; }

}  // namespace

FiniteTopology::FiniteTopology(UniversePtr points, std::vector<PointSet> opens)
    : points_(std::move(points)), opens_(std::move(opens)) {
  const std::size_t n = points_->size();
  if (n > kMaxSpacePoints)
    throw PreconditionError("TooLarge", "finite spaces are limited to 64 points");
  opens_.push_back(0);
  std::sort(opens_.begin(), opens_.end());
  opens_.erase(std::unique(opens_.begin(), opens_.end()), opens_.end());
  if (opens_.back() & ~whole(n))
    throw PreconditionError("NotATopology", "open set mentions an unknown point");
  if (opens_.back() != whole(n))
    throw PreconditionError("NotATopology", "the whole space must be open");
  for (std::size_t i = 0; i < opens_.size(); ++i)
    for (std::size_t j = i + 1; j < opens_.size(); ++j) {
      if (!std::binary_search(opens_.begin(), opens_.end(), opens_[i] | opens_[j]))
        throw PreconditionError("NotATopology", "opens are not closed under union");
      if (!std::binary_search(opens_.begin(), opens_.end(), opens_[i] & opens_[j]))
        throw PreconditionError("NotATopology", "opens are not closed under intersection");
    }
}

PointSet FiniteTopology::minimal_open(VertexIndex x) const {
  PointSet out = whole(points_->size());
  for (PointSet o : opens_)
    if (o & (PointSet{1} << x)) out &= o;
  return out;
}

std::optional<std::pair<VertexIndex, VertexIndex>> FiniteTopology::t0_violation() const {
  const auto n = static_cast<VertexIndex>(points_->size());
  std::vector<PointSet> minimal(n);
  for (VertexIndex x = 0; x < n; ++x) minimal[x] = minimal_open(x);
  for (VertexIndex x = 0; x < n; ++x)
    for (VertexIndex y = x + 1; y < n; ++y)
      if (minimal[x] == minimal[y]) return std::make_pair(x, y);
  return std::nullopt;
}

bool operator==(const FiniteTopology& a, const FiniteTopology& b) {
  return *a.points_ == *b.points_ && a.opens_ == b.opens_;
}

FiniteTopology order_to_topology(const Poset& p) {
  if (p.size() > kMaxSpacePoints)
    throw PreconditionError("TooLarge", "finite spaces are limited to 64 points");
  std::vector<PointSet> opens{0};
  for (VertexIndex x = 0; x < p.size(); ++x) {
    const PointSet basic = point_set(down_set(p, x));
    const std::size_t count = opens.size();
    for (std::size_t i = 0; i < count; ++i) opens.push_back(opens[i] | basic);
    std::sort(opens.begin(), opens.end());
    opens.erase(std::unique(opens.begin(), opens.end()), opens.end());
  }
  return FiniteTopology(p.elements_ptr(), std::move(opens));
}

Poset topology_to_order(const FiniteTopology& t) {
  if (auto bad = t.t0_violation())
    throw PreconditionError("NotT0",
                            "'" + t.points().label(bad->first) + "' and '" +
                                t.points().label(bad->second) + "' have the same minimal open set",
                            {t.points().label(bad->first), t.points().label(bad->second)});
  const auto n = static_cast<Eigen::Index>(t.points().size());
  OrderMatrix order(n, n);
  for (Eigen::Index y = 0; y < n; ++y) {
    const PointSet u = t.minimal_open(static_cast<VertexIndex>(y));
    for (Eigen::Index x = 0; x < n; ++x) order(x, y) = (u >> x) & 1U;
  }
  return Poset(t.points_ptr(), std::move(order));
}

}  // namespace relcx
