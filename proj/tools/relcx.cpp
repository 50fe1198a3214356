// relcx: command-line front end. Results are written to stdout as canonical
// JSON. Exit status: 0 computed, 1 parse or usage error, 2 precondition violated.

#include <functional>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "relcx/closed_relation.hpp"
#include "relcx/collapse.hpp"
#include "relcx/errors.hpp"
#include "relcx/homology.hpp"
#include "relcx/io.hpp"
#include "relcx/poset.hpp"
#include "relcx/relation.hpp"
#include "relcx/report.hpp"

using namespace relcx;

namespace {

Document load(const std::string& path) { return parse(read_file(path)); }

SimplicialComplex load_complex(const std::string& path) { return to_complex(load(path)); }
Relation load_relation(const std::string& path) { return to_relation(load(path)); }
Poset load_poset(const std::string& path) { return to_poset(load(path)); }

void emit(const Json& json) { std::cout << write_report(json) << '\n'; }

Json same_homology_json(const SimplicialComplex& a, const SimplicialComplex& b, const char* a_key,
                        const char* b_key) {
  const HomologyProfile pa = homology(a);
  const HomologyProfile pb = homology(b);
  return Json{{a_key, to_json(pa)},
              {b_key, to_json(pb)},
              {"check", "homology-level"},
              {"same", pa.trimmed() == pb.trimmed()}};
}

ComplexSide parse_side(const std::string& side) {
  return side == "k" ? ComplexSide::K : ComplexSide::L;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Dowker complexes of relations, finite posets and collapses"};
  app.require_subcommand(1);
  std::function<void()> action;

  // dowker ---------------------------------------------------------------
  auto* dowker = app.add_subcommand("dowker", "K/L complexes and morphisms of relations");
  dowker->require_subcommand(1);
  std::string relation_file, from_file, to_file, a_file, b_file, complex_file;

  for (const char* side : {"k", "l"}) {
    auto* cmd = dowker->add_subcommand(side, std::string(side) == "k" ? "K-complex of a relation"
                                                                      : "L-complex of a relation");
    cmd->add_option("--relation", relation_file)->required();
    const bool k = std::string(side) == "k";
    cmd->callback([&, k] {
      action = [&, k] {
        const Relation r = load_relation(relation_file);
        emit(to_json(k ? k_complex(r) : l_complex(r)));
      };
    });
  }
  {
    auto* cmd = dowker->add_subcommand("morphism", "least morphism between two relations");
    cmd->add_option("--from", from_file)->required();
    cmd->add_option("--to", to_file)->required();
    cmd->callback([&] {
      action = [&] {
        const Relation src = load_relation(from_file);
        const Relation dst = load_relation(to_file);
        auto f = find_morphism(src, dst);
        emit(Json{{"assignment", assignment_json(src, dst, f)},
                  {"exists", f.has_value()},
                  {"subcomplex", is_subcomplex(k_complex(src), k_complex(dst))}});
      };
    });
  }
  {
    auto* cmd = dowker->add_subcommand("equivalent", "equivalence of two relations");
    cmd->add_option("--a", a_file)->required();
    cmd->add_option("--b", b_file)->required();
    cmd->callback([&] {
      action = [&] {
        const Relation a = load_relation(a_file);
        const Relation b = load_relation(b_file);
        auto forward = find_morphism(a, b);
        auto backward = find_morphism(b, a);
        emit(Json{{"backward", assignment_json(b, a, backward)},
                  {"equivalent", forward.has_value() && backward.has_value()},
                  {"forward", assignment_json(a, b, forward)},
                  {"same_k_complex", k_complex(a) == k_complex(b)}});
      };
    });
  }
  {
    auto* cmd = dowker->add_subcommand("canonical", "membership relation of a complex's faces");
    cmd->add_option("--complex", complex_file)->required();
    cmd->callback([&] { action = [&] { emit(to_json(canonical_relation(load_complex(complex_file)))); }; });
  }

  // poset ----------------------------------------------------------------
  auto* poset = app.add_subcommand("poset", "finite posets and finite spaces");
  poset->require_subcommand(1);
  std::string poset_file, space_file;
  struct ComplexCommand {
    const char* name;
    const char* help;
    std::function<SimplicialComplex(const Poset&)> build;
  };
  const std::vector<ComplexCommand> complex_commands{
      {"order-complex", "complex of chains", [](const Poset& p) { return order_complex(p); }},
      {"k", "K-complex of <=", [](const Poset& p) { return poset_dowker_complex(p, false, ComplexSide::K); }},
      {"l", "L-complex of <=", [](const Poset& p) { return poset_dowker_complex(p, false, ComplexSide::L); }},
      {"k-strict", "K-complex of <", [](const Poset& p) { return poset_dowker_complex(p, true, ComplexSide::K); }},
      {"l-strict", "L-complex of <", [](const Poset& p) { return poset_dowker_complex(p, true, ComplexSide::L); }},
  };
  for (const auto& c : complex_commands) {
    auto* cmd = poset->add_subcommand(c.name, c.help);
    cmd->add_option("--poset", poset_file)->required();
    auto build = c.build;
    cmd->callback([&, build] { action = [&, build] { emit(to_json(build(load_poset(poset_file)))); }; });
  }
  {
    auto* cmd = poset->add_subcommand("realize", "poset whose K-complex is the given complex");
    cmd->add_option("--complex", complex_file)->required();
    cmd->callback([&] {
      action = [&] {
        const Poset p = realize_as_poset_k_complex(load_complex(complex_file));
        Json out = to_json(p);
        out["chain_length"] = chain_length(p);
        emit(out);
      };
    });
  }
  {
    auto* cmd = poset->add_subcommand("lattice-check", "U_x ∩ U_y is empty or some U_z");
    cmd->add_option("--poset", poset_file)->required();
    cmd->callback([&] {
      action = [&] {
        const Poset p = load_poset(poset_file);
        auto bad = lattice_violation(p);
        Json out = same_homology_json(order_complex(p), poset_dowker_complex(p, false, ComplexSide::L),
                                      "order_complex", "l_complex");
        out["lattice_condition"] = !bad.has_value();
        out["witness"] = bad ? Json::array({p.elements().label(bad->first), p.elements().label(bad->second)})
                             : Json(nullptr);
        emit(out);
      };
    });
  }
  {
    auto* cmd = poset->add_subcommand("to-topology", "finite space of down-sets");
    cmd->add_option("--poset", poset_file)->required();
    cmd->callback([&] { action = [&] { emit(to_json(order_to_topology(load_poset(poset_file)))); }; });
  }
  {
    auto* cmd = poset->add_subcommand("from-topology", "specialization order of a T0 space");
    cmd->add_option("--space", space_file)->required();
    cmd->callback([&] { action = [&] { emit(to_json(topology_to_order(to_topology(load(space_file))))); }; });
  }

  // collapse -------------------------------------------------------------
  auto* collapse = app.add_subcommand("collapse", "simplicial collapses");
  collapse->require_subcommand(1);
  std::string side = "k", steps_file;
  {
    auto* cmd = collapse->add_subcommand("leq-strict", "collapse of the <= complex onto the < complex");
    cmd->add_option("--poset", poset_file)->required();
    cmd->add_option("--side", side)->check(CLI::IsMember({"k", "l"}))->default_val("k");
    cmd->callback([&] {
      action = [&] {
        const CollapseSequence seq = collapse_leq_to_strict(load_poset(poset_file), parse_side(side));
        Json out = to_json(seq);
        out["final"] = to_json(verify_sequence(seq));
        emit(out);
      };
    });
  }
  {
    auto* cmd = collapse->add_subcommand("greedy", "greedy collapse to a core");
    cmd->add_option("--complex", complex_file)->required();
    cmd->callback([&] {
      action = [&] {
        const GreedyCollapse g = greedy_collapse(load_complex(complex_file));
        Json out = to_json(g.sequence);
        out["core"] = to_json(g.core);
        out["certificate"] = g.reached_point() ? "collapsible" : "unknown";
        emit(out);
      };
    });
  }
  {
    auto* cmd = collapse->add_subcommand("verify", "replay a collapse sequence");
    cmd->add_option("--complex", complex_file)->required();
    cmd->add_option("--steps", steps_file)->required();
    cmd->callback([&] {
      action = [&] {
        const SimplicialComplex initial = load_complex(complex_file);
        Json steps;
        try {
          steps = Json::parse(read_file(steps_file));
        } catch (const Json::parse_error& e) {
          throw ParseError(1, 1, e.what());
        }
        const SimplicialComplex final_complex = verify_sequence(sequence_from_json(initial, steps));
        emit(Json{{"final", to_json(final_complex)}, {"valid", true}});
      };
    });
  }

  // homology -------------------------------------------------------------
  auto* hom = app.add_subcommand("homology", "integer simplicial homology");
  hom->require_subcommand(0, 1);
  hom->add_option("--complex", complex_file);
  {
    auto* cmd = hom->add_subcommand("same", "compare the homology of two complexes");
    cmd->add_option("--a", a_file)->required();
    cmd->add_option("--b", b_file)->required();
    cmd->callback([&] {
      action = [&] { emit(same_homology_json(load_complex(a_file), load_complex(b_file), "a", "b")); };
    });
  }
  hom->callback([&] {
    if (action) return;
    if (complex_file.empty()) throw CLI::RequiredError("--complex");
    action = [&] { emit(to_json(homology(load_complex(complex_file)))); };
  });

  // closed ---------------------------------------------------------------
  auto* closed = app.add_subcommand("closed", "closed relations between posets");
  closed->require_subcommand(1);
  std::string xposet_file, yposet_file, mode = "weak";
  {
    auto* cmd = closed->add_subcommand("verify", "check a closed-relation theorem instance");
    cmd->add_option("--xposet", xposet_file)->required();
    cmd->add_option("--yposet", yposet_file)->required();
    cmd->add_option("--relation", relation_file)->required();
    cmd->add_option("--mode", mode)->check(CLI::IsMember({"quillen", "weak"}))->required();
    cmd->callback([&] {
      action = [&] {
        const ClosedRelation r = ClosedRelation::from_relation(load_poset(xposet_file), load_poset(yposet_file),
                                                               load_relation(relation_file));
        const auto report = verify_closed_relation(r, mode == "quillen" ? VerifyMode::Quillen : VerifyMode::Weak);
        emit(to_json(r, report));
      };
    });
  }

  // verify ---------------------------------------------------------------
  auto* verify = app.add_subcommand("verify", "theorem checks");
  verify->require_subcommand(1);
  {
    auto* cmd = verify->add_subcommand("dowker", "homology of K against homology of L");
    cmd->add_option("--relation", relation_file)->required();
    cmd->callback([&] {
      action = [&] {
        const Relation r = load_relation(relation_file);
        require_covered(r);
        emit(same_homology_json(k_complex(r), l_complex(r), "k", "l"));
      };
    });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 1;
  }

  try {
    action();
  } catch (const PreconditionError& e) {
    std::cerr << write_report(Json{{"error", e.kind()}, {"message", e.what()}, {"witness", e.witness()}})
              << '\n';
    return 2;
  } catch (const ParseError& e) {
    std::cerr << write_report(Json{{"error", "ParseError"}, {"line", e.line()}, {"column", e.column()},
                                   {"message", e.what()}})
              << '\n';
    return 1;
  } catch (const std::exception& e) {
    std::cerr << write_report(Json{{"error", "InputError"}, {"message", e.what()}}) << '\n';
    return 1;
  }
  return 0;
}
