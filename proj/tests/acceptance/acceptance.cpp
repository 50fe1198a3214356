// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>

#include "fixtures.hpp"
#include "generators.hpp"
#include "relcx/closed_relation.hpp"
#include "relcx/collapse.hpp"
#include "relcx/errors.hpp"
#include "relcx/homology.hpp"
#include "relcx/io.hpp"
#include "relcx/report.hpp"
#include "run.hpp"

using namespace relcx;
using namespace relcx::testing;

namespace {

// Collects failures for one criterion; the first few are printed.
struct Check {
  std::size_t cases = 0;
  std::size_t failures = 0;
  std::vector<std::string> notes;

  void expect(bool ok, const std::string& what) {
    ++cases;
    if (ok) return;
    ++failures;
    if (notes.size() < 5) notes.push_back(what);
  }
};

using Clock = std::chrono::steady_clock;

bool run_criterion(int number, const std::string& title, double budget_seconds,
                   const std::function<void(Check&)>& body) {
  Check check;
  const auto start = Clock::now();
  try {
    body(check);
  } catch (const std::exception& e) {
    check.expect(false, std::string("unexpected exception: ") + e.what());
  }
  const double seconds = std::chrono::duration<double>(Clock::now() - start).count();
  if (budget_seconds > 0) check.expect(seconds < budget_seconds, "runtime over budget");
  const bool ok = check.failures == 0;
  std::printf("%s criterion %d: %s (%zu checks, %zu failures, %.2fs)\n", ok ? "PASS" : "FAIL", number,
              title.c_str(), check.cases, check.failures, seconds);
  for (const auto& n : check.notes) std::printf("    %s\n", n.c_str());
  std::fflush(stdout);
  return ok;
}

std::string describe(const SimplicialComplex& t) { return write_report(to_json(t)); }

std::string describe(const Relation& r) { return write_report(to_json(r)); }

std::string describe(const Poset& p) { return write_report(to_json(p)); }

std::vector<std::vector<std::string>> facet_labels(const SimplicialComplex& t) { return sorted_facet_labels(t); }

bool same_profile(const SimplicialComplex& a, const SimplicialComplex& b) {
  return homology(a).trimmed() == homology(b).trimmed();
}

Poset x1() { return to_poset(load_fixture("x1.poset")); }

const std::vector<std::string> kComplexFixtures{"boundary.complex", "triangle.complex", "x1_k.complex",
                                                "rp2.complex"};

// Complexes used by the corpus-wide checks.
std::vector<SimplicialComplex> complex_corpus() {
  std::vector<SimplicialComplex> corpus;
  for (const auto& name : kComplexFixtures) corpus.push_back(to_complex(load_fixture(name)));
  for (std::size_t n = 1; n <= 4; ++n)
    for (auto& t : complete_complexes(n)) corpus.push_back(std::move(t));
  for (std::size_t n = 2; n <= 5; ++n) corpus.push_back(simplex_boundary(n));
  Rng rng(101);
  for (int i = 0; i < 100; ++i) corpus.push_back(random_complex(7, rng, 2 + i % 5));
  for (std::size_t n = 1; n <= 4; ++n)
    for (const Poset& p : naturally_labelled_posets(n)) {
      corpus.push_back(order_complex(p));
      corpus.push_back(poset_dowker_complex(p, false, ComplexSide::K));
      corpus.push_back(poset_dowker_complex(p, false, ComplexSide::L));
    }
  return corpus;
}

// --- 1 -----------------------------------------------------------------------

void dowker_suite(Check& c) {
  Rng rng(1);
  std::uniform_int_distribution<std::size_t> size(1, 5);
  std::uniform_real_distribution<double> density(0.15, 0.8);
  for (int i = 0; i < 600; ++i) {
    auto r = random_covered_relation(size(rng), size(rng), rng, density(rng));
    c.expect(same_profile(k_complex(r), l_complex(r)), "random: " + describe(r));
  }
  for (std::size_t nx = 1; nx <= 3; ++nx)
    for (std::size_t ny = 1; ny <= 3; ++ny)
      for (const Relation& r : all_covered_relations(nx, ny))
        c.expect(same_profile(k_complex(r), l_complex(r)), "exhaustive: " + describe(r));
}

// --- 2 -----------------------------------------------------------------------

void four_point_poset(Check& c) {
  const Poset p = x1();
  const auto cx = order_complex(p);
  const auto k = poset_dowker_complex(p, false, ComplexSide::K);
  const auto l = poset_dowker_complex(p, false, ComplexSide::L);
  c.expect(homology(cx).betti == std::vector<std::size_t>{1, 1}, "C_X betti");
  c.expect(facet_labels(k) == std::vector<std::vector<std::string>>{{"1", "2", "3"}, {"1", "2", "4"}}, "K facets");
  c.expect(facet_labels(l) == std::vector<std::vector<std::string>>{{"1", "3", "4"}, {"2", "3", "4"}}, "L facets");
  c.expect(greedy_collapse(k).reached_point(), "K collapses to a point");
  c.expect(greedy_collapse(l).reached_point(), "L collapses to a point");
  c.expect(homology(k).trimmed().betti == std::vector<std::size_t>{1}, "K acyclic");
  c.expect(homology(l).trimmed().betti == std::vector<std::size_t>{1}, "L acyclic");
}

// --- 3 -----------------------------------------------------------------------

void check_collapse(Check& c, const Poset& p) {
  for (ComplexSide side : {ComplexSide::K, ComplexSide::L}) {
    const auto seq = collapse_leq_to_strict(p, side);
    const auto target = poset_dowker_complex(p, true, side);
    c.expect(verify_sequence(seq) == target, "replay differs from strict complex: " + describe(p));
    const auto profile = homology(seq.initial).trimmed();
    auto current = seq.initial;
    bool steps_ok = true;
    for (const auto& step : seq.steps) {
      auto next = apply_step(current, step);
      steps_ok = steps_ok && next.face_count() + 2 == current.face_count() &&
                 next.euler_characteristic() == current.euler_characteristic() &&
                 homology(next).trimmed() == profile;
      current = std::move(next);
    }
    c.expect(steps_ok && current == target, "step invariants: " + describe(p));
  }
}

void collapse_suite(Check& c) {
  for (std::size_t n = 2; n <= 5; ++n)
    for (const Poset& p : naturally_labelled_posets(n))
      if (!singleton_component(p)) check_collapse(c, p);
  Rng rng(3);
  std::size_t sampled = 0;
  while (sampled < 240) {
    const Poset p = random_poset(6 + sampled % 2, rng, 0.3);
    if (singleton_component(p)) continue;
    check_collapse(c, p);
    ++sampled;
  }
}

// --- 4 -----------------------------------------------------------------------

bool has_private_vertices(const SimplicialComplex& t) {
  for (const Simplex& f : t.facets()) {
    bool found = false;
    for (VertexIndex v : f) {
      bool shared = false;
      for (const Simplex& g : t.facets())
        if (!(g == f) && g.contains(v)) shared = true;
      found = found || !shared;
    }
    if (!found) return false;
  }
  return true;
}

void check_realization(Check& c, const SimplicialComplex& t) {
  if (has_private_vertices(t)) {
    const Poset p = realize_as_poset_k_complex(t);
    c.expect(chain_length(p) <= 2, "long chain: " + describe(t));
    c.expect(order_complex(p).dimension() <= 1, "order complex not a graph: " + describe(t));
    c.expect(poset_dowker_complex(p, false, ComplexSide::K) == t, "K differs: " + describe(t));
  } else {
    bool rejected = false;
    try {
      realize_as_poset_k_complex(t);
    } catch (const PreconditionError& e) {
      rejected = e.kind() == "NotRealizable";
    }
    c.expect(rejected, "accepted without private vertices: " + describe(t));
  }
}

void realization_suite(Check& c) {
  for (std::size_t n = 2; n <= 4; ++n) {
    bool rejected = false;
    try {
      realize_as_poset_k_complex(simplex_boundary(n));
    } catch (const PreconditionError& e) {
      rejected = e.kind() == "NotRealizable";
    }
    c.expect(rejected, "boundary of simplex " + std::to_string(n) + " accepted");
  }
  for (std::size_t n = 1; n <= 4; ++n)
    for (const auto& t : complete_complexes(n)) check_realization(c, t);
  Rng rng(4);
  for (int i = 0; i < 400; ++i) {
    const std::size_t n = 5 + static_cast<std::size_t>(i % 2);
    auto t = random_complex(n, rng, 2 + static_cast<std::size_t>(i % 4));
    // Restrict the universe to the vertices that occur, so the complex is complete.
    std::vector<std::string> used;
    for (VertexIndex v : t.vertices()) used.push_back(t.universe().label(v));
    auto u = make_universe(used);
    std::vector<std::vector<std::string>> facets;
    for (const Simplex& f : t.facets()) facets.push_back(simplex_labels(t.universe(), f));
    check_realization(c, complex_from_facets(u, facets));
  }
}

// --- 5 -----------------------------------------------------------------------

void galois_suite(Check& c) {
  for (const auto& t : complex_corpus())
    if (!t.empty()) c.expect(k_complex(canonical_relation(t)) == t, "canonical round trip: " + describe(t));
  Rng rng(5);
  std::uniform_int_distribution<std::size_t> size(1, 4);
  std::uniform_real_distribution<double> density(0.2, 0.8);
  for (int i = 0; i < 1500; ++i) {
    auto xs = numbered_universe(size(rng), "x");
    auto a = random_covered_relation(xs, size(rng), rng, density(rng));
    auto b = random_covered_relation(xs, size(rng), rng, density(rng));
    auto f = find_morphism(a, b);
    c.expect(f.has_value() == brute_force_morphism_exists(a, b), "existence: " + describe(a) + " -> " + describe(b));
    c.expect(f.has_value() == is_subcomplex(k_complex(a), k_complex(b)), "subcomplex: " + describe(a));
    if (f) c.expect(is_morphism(*f, a, b), "not a morphism: " + describe(a));
  }
}

// --- 6 -----------------------------------------------------------------------

void counterexample(Check& c) {
  const Poset x = x1();
  const Poset y = to_poset(load_fixture("hexagon.poset"));
  const Relation raw = to_relation(load_fixture("closed_r.relation"));
  c.expect(raw.pair_count() == 10, "ten pairs");
  c.expect(is_closed(raw.incidence(), x, y), "closed");
  const ClosedRelation r = ClosedRelation::from_relation(x, y, raw);

  const auto quillen = quillen_hypothesis(r);
  c.expect(quillen.fibers.size() == 10, "ten fibers");
  for (const auto& f : quillen.fibers) {
    c.expect(f.order_complex != Certificate::Unknown, "order complex of a fiber certified");
    c.expect(f.k_complex != Certificate::Unknown, "K-complex of a fiber certified");
  }
  c.expect(quillen.all_certified, "Quillen hypothesis certified");

  const auto weak = weak_hypothesis(r);
  c.expect(!weak.holds, "weak hypothesis fails");
  const auto bad = std::find_if(weak.fibers.begin(), weak.fibers.end(), [](const FiberMaximum& f) { return !f.maximum; });
  c.expect(bad != weak.fibers.end() && bad->side == FiberSide::X && x.elements().label(bad->element) == "3",
           "witness S_3");
  if (bad != weak.fibers.end()) {
    std::vector<std::string> maximal;
    for (VertexIndex v : bad->maximal) maximal.push_back(y.elements().label(v));
    c.expect(maximal == std::vector<std::string>{"d", "e", "f"}, "S_3 maximal elements");
  }

  const auto kx = homology(poset_dowker_complex(x, false, ComplexSide::K));
  const auto ky = homology(poset_dowker_complex(y, false, ComplexSide::K));
  c.expect(kx.trimmed().betti == std::vector<std::size_t>{1}, "K_X homology (1,0)");
  c.expect(ky.trimmed().betti == std::vector<std::size_t>{1, 1}, "K_Y homology (1,1)");
  for (const auto& dim : kx.torsion) c.expect(dim.empty(), "K_X torsion-free");
  for (const auto& dim : ky.torsion) c.expect(dim.empty(), "K_Y torsion-free");
  const auto cx = order_complex(x);
  const auto cy = order_complex(y);
  c.expect(same_homology(cx, cy), "C_X and C_Y agree");
  c.expect(homology(cx).trimmed().betti == std::vector<std::size_t>{1, 1}, "C_X is a circle");
  c.expect(homology(cy).trimmed().betti == std::vector<std::size_t>{1, 1}, "C_Y is a circle");

  const auto weak_report = verify_closed_relation(r, VerifyMode::Weak);
  const auto quillen_report = verify_closed_relation(r, VerifyMode::Quillen);
  c.expect(weak_report.verdict == Verdict::HypothesisNotMet, "weak verdict");
  c.expect(quillen_report.verdict == Verdict::Confirmed, "quillen verdict");
}

// --- 7 -----------------------------------------------------------------------

bool fibers_nonempty(const Incidence& inc) { return inc.rowwise().any().all() && inc.colwise().any().all(); }

void weak_theorem_suite(Check& c, std::size_t& instances) {
  std::vector<Poset> posets;
  for (std::size_t n = 1; n <= 3; ++n)
    for (Poset& p : all_labelled_posets(n)) posets.push_back(std::move(p));
  for (const Poset& x : posets)
    for (const Poset& y : posets) {
      const auto nx = static_cast<Eigen::Index>(x.size());
      const auto ny = static_cast<Eigen::Index>(y.size());
      const std::size_t cells = x.size() * y.size();
      const auto kx = poset_dowker_complex(x, false, ComplexSide::K);
      const auto ky = poset_dowker_complex(y, false, ComplexSide::K);
      const bool same = same_profile(kx, ky);
      for (std::uint32_t mask = 1; mask < (1U << cells); ++mask) {
        Incidence inc(nx, ny);
        for (Eigen::Index a = 0; a < nx; ++a)
          for (Eigen::Index b = 0; b < ny; ++b) inc(a, b) = (mask >> (a * ny + b)) & 1U;
        if (!fibers_nonempty(inc) || !is_up_set_of_product(inc, x, y)) continue;
        const ClosedRelation r(x, y, inc);
        if (!weak_hypothesis(r).holds) continue;
        ++instances;
        const std::string where = describe(x) + " x " + describe(y) + " mask " + std::to_string(mask);
        c.expect(same, "homology differs: " + where);
        c.expect(preimage_facet_check(r, FiberSide::X).all_full, "X preimage not full: " + where);
        c.expect(preimage_facet_check(r, FiberSide::Y).all_full, "Y preimage not full: " + where);
      }
    }
  c.expect(instances > 0, "no instance satisfied the hypothesis");
}

// --- 8 -----------------------------------------------------------------------

void lattice_suite(Check& c, std::size_t& instances) {
  for (std::size_t n = 1; n <= 5; ++n)
    for (const Poset& p : naturally_labelled_posets(n)) {
      if (!lattice_condition(p)) continue;
      ++instances;
      c.expect(homology(order_complex(p)).trimmed() ==
                   homology(poset_dowker_complex(p, false, ComplexSide::L)).trimmed(),
               describe(p));
    }
  c.expect(!lattice_condition(x1()), "X1 violates the condition");
}

// --- 9 -----------------------------------------------------------------------

void homology_suite(Check& c) {
  for (const auto& t : complex_corpus()) {
    if (t.empty()) continue;
    const auto d = boundary_matrices<long long>(t);
    for (std::size_t n = 1; n < d.size(); ++n) c.expect((d[n - 1] * d[n]).isZero(), "dd != 0: " + describe(t));
    const auto h = homology(t);
    c.expect(euler_characteristic(h) == t.euler_characteristic(), "Euler: " + describe(t));
    bool torsion_free = true;
    for (const auto& dim : h.torsion) torsion_free = torsion_free && dim.empty();
    if (torsion_free) c.expect(betti_mod_p(t, 1000003) == h.betti, "GF(p) Betti: " + describe(t));
  }

  Rng rng(9);
  std::uniform_int_distribution<long long> entry(-9, 9);
  std::uniform_int_distribution<std::size_t> size(1, 6);
  for (int trial = 0; trial < 1000; ++trial) {
    const std::size_t rows = size(rng), cols = size(rng);
    std::vector<std::vector<long long>> m(rows, std::vector<long long>(cols));
    IntegerMatrix big(static_cast<Eigen::Index>(rows), static_cast<Eigen::Index>(cols));
    // A third of the samples use a narrow range so rank deficiency is common.
    const bool narrow = trial % 3 == 0;
    for (std::size_t i = 0; i < rows; ++i)
      for (std::size_t j = 0; j < cols; ++j) {
        m[i][j] = narrow ? entry(rng) / 5 : entry(rng);
        big(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = m[i][j];
      }
    const auto diag = smith_normal_form(big);
    c.expect(diag.size() == rank_mod_p(m, 1000003), "rank");
    BigInt product = 1;
    for (std::size_t k = 0; k < diag.size(); ++k) {
      c.expect(diag[k] > 0, "positive diagonal");
      if (k > 0) c.expect(diag[k] % diag[k - 1] == 0, "divisibility chain");
      product *= diag[k];
      if (k < 3) c.expect(product == minor_gcd(m, k + 1), "gcd of minors");
    }
    // Idempotence on the diagonal form.
    IntegerMatrix diagonal = IntegerMatrix::Zero(static_cast<Eigen::Index>(rows), static_cast<Eigen::Index>(cols));
    for (std::size_t k = 0; k < diag.size(); ++k) diagonal(static_cast<Eigen::Index>(k), static_cast<Eigen::Index>(k)) = diag[k];
    c.expect(smith_normal_form(diagonal) == diag, "idempotent");
  }

  const auto rp2 = to_complex(load_fixture("rp2.complex"));
  const auto h = homology(rp2);
  c.expect(h.betti == std::vector<std::size_t>{1, 0, 0}, "RP2 Betti numbers");
  c.expect(h.torsion.size() == 3 && h.torsion[1] == std::vector<BigInt>{2}, "RP2 torsion_1 = {2}");
  c.expect(betti_mod_p(rp2, 2) == std::vector<std::size_t>{1, 1, 1}, "RP2 over GF(2)");
}

// --- 10 ----------------------------------------------------------------------

void determinism_suite(Check& c) {
  const std::vector<std::string> commands{
      "dowker k --relation closed_r.relation",
      "dowker l --relation closed_r.relation",
      "dowker morphism --from x1_leq.relation --to x1_leq.relation",
      "dowker equivalent --a x1_leq.relation --b x1_leq.relation",
      "dowker canonical --complex boundary.complex",
      "poset order-complex --poset hexagon.poset",
      "poset k --poset hexagon.poset",
      "poset l --poset hexagon.poset",
      "poset k-strict --poset x1.poset",
      "poset l-strict --poset x1.poset",
      "poset realize --complex x1_k.complex",
      "poset realize --complex boundary.complex",
      "poset lattice-check --poset x1.poset",
      "poset to-topology --poset hexagon.poset",
      "poset from-topology --space sierpinski.space",
      "collapse leq-strict --poset x1.poset --side k",
      "collapse leq-strict --poset hexagon.poset --side l",
      "collapse greedy --complex rp2.complex",
      "homology --complex rp2.complex",
      "homology same --a boundary.complex --b triangle.complex",
      "closed verify --xposet x1.poset --yposet hexagon.poset --relation closed_r.relation --mode weak",
      "closed verify --xposet x1.poset --yposet hexagon.poset --relation closed_r.relation --mode quillen",
      "verify dowker --relation closed_r.relation",
  };
  for (const auto& command : commands) {
    const auto first = run_cli(command);
    const auto second = run_cli(command);
    const auto third = run_cli(command);
    c.expect(first.status == second.status && first.out == second.out && second.out == third.out,
             "not byte-stable: " + command);
    if (first.status == 0) {
      c.expect(Json::accept(first.out), "not JSON: " + command);
      if (Json::accept(first.out))
        c.expect(write_report(Json::parse(first.out)) + "\n" == first.out, "not canonical: " + command);
    }
  }

  for (const char* name : {"x1.poset", "hexagon.poset", "antichain.poset", "closed_r.relation", "x1_leq.relation",
                           "uncovered.relation", "boundary.complex", "triangle.complex", "x1_k.complex",
                           "rp2.complex", "sierpinski.space", "indiscrete.space"}) {
    const auto doc = load_fixture(name);
    const auto text = serialize(doc);
    c.expect(parse(text) == doc, std::string("parse(serialize) differs: ") + name);
    c.expect(serialize(parse(text)) == text, std::string("serialize(parse) differs: ") + name);
  }

  Rng rng(10);
  for (int i = 0; i < 200; ++i) {
    auto t = random_complex(6, rng, 2 + i % 4);
    auto doc = complex_document(t, "T");
    c.expect(parse(serialize(doc)) == doc, "complex document");
    auto p = random_poset(5, rng, 0.35);
    auto pd = poset_document(p, "P");
    c.expect(parse(serialize(pd)) == pd && to_poset(pd) == p, "poset document");
    auto r = random_covered_relation(4, 4, rng, 0.5);
    c.expect(to_relation(parse(serialize(relation_document(r, "R")))) == r, "relation document");
    auto s = order_to_topology(p);
    c.expect(to_topology(parse(serialize(space_document(s, "S")))) == s, "space document");

    const auto profile_text = write_report(to_json(homology(t)));
    c.expect(write_report(to_json(profile_from_json(Json::parse(profile_text)))) == profile_text, "profile report");
    const auto seq_text = write_report(to_json(greedy_collapse(t).sequence));
    c.expect(write_report(to_json(sequence_from_json(t, Json::parse(seq_text)))) == seq_text, "sequence report");
  }
}

}  // namespace

int main() {
  bool ok = true;
  ok &= run_criterion(1, "Dowker homology, 600 random + exhaustive |X|,|Y|<=3", 60, dowker_suite);
  ok &= run_criterion(2, "four-point poset: C_X circle, K/L facets, both collapse to a point", 0, four_point_poset);
  ok &= run_criterion(3, "collapse of <= onto <, exhaustive <=5 + 240 random at 6-7, per-step invariants", 0,
                      collapse_suite);
  ok &= run_criterion(4, "realization: boundaries rejected, exhaustive <=4 vertices, sampled 5-6", 0,
                      realization_suite);
  ok &= run_criterion(5, "Galois correspondence and morphism search vs brute force", 0, galois_suite);
  ok &= run_criterion(6, "closed-relation counterexample", 0, counterexample);
  std::size_t weak_instances = 0;
  ok &= run_criterion(7, "weak theorem over all closed relations between posets with <=3 elements", 120,
                      [&](Check& c) { weak_theorem_suite(c, weak_instances); });
  std::printf("    %zu closed relations satisfied the hypothesis\n", weak_instances);
  std::size_t lattice_instances = 0;
  ok &= run_criterion(8, "lattice condition implies C_X and L agree, posets <=5 elements", 0,
                      [&](Check& c) { lattice_suite(c, lattice_instances); });
  std::printf("    %zu posets satisfied the lattice condition\n", lattice_instances);
  ok &= run_criterion(9, "homology engine: dd=0, SNF vs minors, RP2 torsion, Euler", 0, homology_suite);
  ok &= run_criterion(10, "CLI byte stability and report round trips", 0, determinism_suite);
  return ok ? 0 : 1;
}
