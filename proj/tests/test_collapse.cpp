#include <catch_amalgamated.hpp>

#include "generators.hpp"
#include "relcx/collapse.hpp"
#include "relcx/errors.hpp"
#include "relcx/homology.hpp"
#include "relcx/poset.hpp"

using namespace relcx;
using namespace relcx::testing;

namespace {

using LabelPairs = std::vector<std::pair<std::string, std::string>>;

Poset x1() { return poset_from_pairs(make_universe({"1", "2", "3", "4"}), LabelPairs{{"1", "3"}, {"1", "4"}, {"2", "3"}, {"2", "4"}}); }

Simplex s(std::vector<VertexIndex> v) { return Simplex(std::move(v)); }

SimplicialComplex full_abc() { return full_complex(make_universe({"a", "b", "c"})); }

SimplicialComplex boundary_abc() {
  return complex_from_facets(make_universe({"a", "b", "c"}), {{"a", "b"}, {"a", "c"}, {"b", "c"}});
}

}  // namespace

TEST_CASE("free cofaces") {
  CHECK(free_coface(full_abc(), s({0, 1})) == std::optional<Simplex>(s({0, 1, 2})));
  CHECK_FALSE(free_coface(boundary_abc(), s({0})).has_value());
  CHECK_FALSE(free_coface(boundary_abc(), s({0, 1})).has_value());
  CHECK_THROWS_AS(free_coface(boundary_abc(), s({0, 1, 2})), PreconditionError);
}

TEST_CASE("steps") {
  auto once = apply_step(full_abc(), CollapseStep(s({0, 1}), s({0, 1, 2})));
  CHECK(once.facets() == std::vector<Simplex>{s({0, 2}), s({1, 2})});
  auto twice = apply_step(once, CollapseStep(s({0}), s({0, 2})));
  CHECK(twice.facets() == std::vector<Simplex>{s({1, 2})});
  try {
    apply_step(boundary_abc(), CollapseStep(s({0}), s({0, 1})));
    FAIL("expected NotFree");
  } catch (const NotFreeError& e) {
    CHECK(e.kind() == "NotFree");
    CHECK(e.witness().size() == 2);
  }
  CHECK_THROWS_AS(CollapseStep(s({0}), s({0, 1, 2})), PreconditionError);
}

TEST_CASE("sequence replay") {
  CHECK(verify_sequence({full_abc(), {}}) == full_abc());
  CollapseSequence cone{full_abc(),
                        {CollapseStep(s({1, 2}), s({0, 1, 2})), CollapseStep(s({1}), s({0, 1})),
                         CollapseStep(s({2}), s({0, 2}))}};
  CHECK(verify_sequence(cone).face_count() == 1);
  CollapseSequence repeated{full_abc(), {CollapseStep(s({1, 2}), s({0, 1, 2})), CollapseStep(s({1, 2}), s({0, 1, 2}))}};
  try {
    verify_sequence(repeated);
    FAIL("expected NotFree");
  } catch (const NotFreeError& e) {
    CHECK(e.step_index() == std::optional<std::size_t>(1));
  }
}

TEST_CASE("collapse of the four-point poset") {
  auto seq = collapse_leq_to_strict(x1(), ComplexSide::K);
  std::vector<CollapseStep> expected{CollapseStep(s({1, 2}), s({0, 1, 2})), CollapseStep(s({2}), s({0, 2})),
                                     CollapseStep(s({1, 3}), s({0, 1, 3})), CollapseStep(s({3}), s({0, 3}))};
  CHECK(seq.steps == expected);
  CHECK(verify_sequence(seq) == poset_dowker_complex(x1(), true, ComplexSide::K));
  auto lseq = collapse_leq_to_strict(x1(), ComplexSide::L);
  CHECK(lseq.steps.size() == 4);
  auto final_l = verify_sequence(lseq);
  CHECK(final_l.facets() == std::vector<Simplex>{s({2, 3})});
  CHECK(final_l == poset_dowker_complex(x1(), true, ComplexSide::L));
  auto antichain = poset_from_pairs(make_universe({"1", "2"}), LabelPairs{});
  CHECK_THROWS_AS(collapse_leq_to_strict(antichain, ComplexSide::K), PreconditionError);
}

TEST_CASE("collapse theorem with step invariants on small posets") {
  for (std::size_t n = 2; n <= 4; ++n)
    for (const Poset& p : naturally_labelled_posets(n)) {
      if (singleton_component(p)) continue;
      for (ComplexSide side : {ComplexSide::K, ComplexSide::L}) {
        auto seq = collapse_leq_to_strict(p, side);
        auto current = seq.initial;
        const auto profile = homology(current).trimmed();
        for (const auto& step : seq.steps) {
          auto next = apply_step(current, step);
          CHECK(next.face_count() + 2 == current.face_count());
          CHECK(next.euler_characteristic() == current.euler_characteristic());
          CHECK(homology(next).trimmed() == profile);
          current = next;
        }
        CHECK(current == poset_dowker_complex(p, true, side));
      }
    }
}

TEST_CASE("greedy collapse") {
  auto g = greedy_collapse(full_complex(numbered_universe(4)));
  CHECK(g.reached_point());
  auto stuck = greedy_collapse(boundary_abc());
  CHECK_FALSE(stuck.reached_point());
  CHECK(stuck.core == boundary_abc());
  CHECK(stuck.sequence.steps.empty());
  auto k = poset_dowker_complex(x1(), false, ComplexSide::K);
  auto gk = greedy_collapse(k);
  CHECK(gk.reached_point());
  CHECK(verify_sequence(gk.sequence) == gk.core);
  CHECK(gk.sequence.steps.front() == CollapseStep(s({0, 2}), s({0, 1, 2})));
  CHECK(greedy_collapse(poset_dowker_complex(x1(), false, ComplexSide::L)).reached_point());

  Rng rng(41);
  for (int i = 0; i < 100; ++i) {
    auto t = random_complex(6, rng, 3);
    auto result = greedy_collapse(t);
    CHECK(verify_sequence(result.sequence) == result.core);
    CHECK(greedy_collapse(t).sequence.steps == result.sequence.steps);
    CHECK(homology(result.core).trimmed() == homology(t).trimmed());
    if (cone_apex(t)) CHECK(result.reached_point());
  }
}
