// Copyright 2026 The permclone Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


// permclone command line. Exit codes: 0 success or verdict true, 1 verdict
// false, 2 usage or input error, 3 resource limit.

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "permclone/builtins.hpp"
#include "permclone/census.hpp"
#include "permclone/error.hpp"
#include "permclone/json_io.hpp"

namespace {

using namespace permclone;
using json_io::Json;

int emit(const Json& j, bool verdict = true) {
  std::cout << j.dump(2) << "\n";
  return verdict ? 0 : 1;
}

int fail(const std::string& kind, const std::string& message, int code) {
  Json j;
  j["error"] = kind;
  j["message"] = message;
  std::cerr << j.dump() << "\n";
  return code;
}

AutEngine engine_of(const std::string& s) { return s == "brute" ? AutEngine::kBrute : AutEngine::kBacktrack; }

std::vector<Weight> weights_of(const std::vector<std::string>& relations, const std::vector<std::string>& weights) {
  std::vector<Weight> out;
  for (const auto& r : relations) out.push_back(char_weight(json_io::relation_from_json(json_io::load(r))));
  for (const auto& w : weights) out.push_back(json_io::weight_from_json(json_io::load(w)));
  return out;
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw InvalidArgument("cannot write '" + path + "'");
  out << text;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact engine for permutation clones defined by relations and weights"};
  app.require_subcommand(1);
  std::uint64_t seed = 1;
  app.add_option("--seed", seed, "Seed for every randomized check")->capture_default_str();

  std::function<int()> action;
  std::string gate_a, gate_b, mode = "serial", relation, weight, spec, other, engine = "backtrack", partition, semiring, hom, monoid;
  std::vector<std::string> relations, weights_in, map;
  int arity = 1, bound = 2, position = 1, q = 2, left = 1, right = 1, k_max = 3;
  bool sample = false;
  std::uint64_t samples = 1000;
  std::string dot_path, out_path;

  // gate
  auto* gate = app.add_subcommand("gate", "Compose, invert and inspect gates");
  gate->require_subcommand(1);
  auto* compose = gate->add_subcommand("compose", "Serial (first then second) or parallel composition");
  compose->add_option("--first", gate_a, "Gate JSON")->required();
  compose->add_option("--second", gate_b, "Gate JSON")->required();
  compose->add_option("--mode", mode)->check(CLI::IsMember({"serial", "parallel"}))->capture_default_str();
  compose->callback([&] {
    action = [&] {
      const Gate f = json_io::gate_from_json(json_io::load(gate_a));
      const Gate g = json_io::gate_from_json(json_io::load(gate_b));
      return emit(json_io::to_json(mode == "serial" ? serial(f, g) : parallel(f, g)));
    };
  });
  auto* invert_cmd = gate->add_subcommand("invert", "Inverse gate");
  invert_cmd->add_option("--gate", gate_a)->required();
  invert_cmd->callback([&] {
    action = [&] { return emit(json_io::to_json(inverse(json_io::gate_from_json(json_io::load(gate_a))))); };
  });
  auto* show = gate->add_subcommand("show", "Cycles, components and predicates of a gate");
  show->add_option("--gate", gate_a)->required();
  show->callback([&] {
    action = [&] {
      const Gate f = json_io::gate_from_json(json_io::load(gate_a));
      Json j = json_io::to_json(f);
      j["cycles"] = cycle_string(f.map());
      j["degenerate"] = is_degenerate(f);
      if (is_prime(f.q())) j["affine"] = is_affine(f);
      Json comps = Json::array();
      for (int i = 1; i <= f.arity(); ++i) {
        const ComponentTable c = component(f, i);
        Json x;
        x["values"] = c.values;
        x["balanced"] = is_balanced(c);
        comps.push_back(x);
      }
      j["components"] = comps;
      return emit(j);
    };
  });

  // check
  auto* check = app.add_subcommand("check", "Predicates on gates");
  check->require_subcommand(1);
  auto* respects = check->add_subcommand("respects", "Whether a gate respects a relation or weight");
  respects->add_option("--gate", gate_a)->required();
  auto* rel_opt = respects->add_option("--relation", relation);
  auto* w_opt = respects->add_option("--weight", weight);
  rel_opt->excludes(w_opt);
  respects->callback([&] {
    action = [&] {
      const Gate f = json_io::gate_from_json(json_io::load(gate_a));
      bool ok;
      if (!relation.empty()) {
        ok = respects_relation(f, json_io::relation_from_json(json_io::load(relation)));
      } else if (!weight.empty()) {
        ok = respects_weight(f, json_io::weight_from_json(json_io::load(weight)));
      } else {
        throw InvalidArgument("give --relation or --weight");
      }
      Json j;
      j["respects"] = ok;
      return emit(j, ok);
    };
  });

  // aut
  auto* aut = app.add_subcommand("aut", "Automorphism group of the n-th power of relations and weights");
  aut->add_option("--relation", relations, "Relation JSON (repeatable)");
  aut->add_option("--weight", weights_in, "Weight JSON (repeatable)");
  aut->add_option("--arity", arity)->required()->check(CLI::PositiveNumber);
  aut->add_option("--engine", engine)->check(CLI::IsMember({"backtrack", "brute"}))->capture_default_str();
  aut->callback([&] {
    action = [&] {
      const auto ws = weights_of(relations, weights_in);
      if (ws.empty()) throw InvalidArgument("give at least one --relation or --weight");
      const auto s = colored_structure_from_weights(ws[0].q(), arity, ws);
      return emit(json_io::to_json(automorphism_group(s, engine_of(engine))));
    };
  });

  // clone
  auto* clone = app.add_subcommand("clone", "Slices, membership, comparison and closure checks");
  clone->require_subcommand(1);
  auto* slice_cmd = clone->add_subcommand("slice", "The arity-n slice as a permutation group");
  slice_cmd->add_option("--spec", spec)->required();
  slice_cmd->add_option("--arity", arity)->required()->check(CLI::PositiveNumber);
  slice_cmd->add_option("--engine", engine)->check(CLI::IsMember({"backtrack", "brute"}))->capture_default_str();
  slice_cmd->callback([&] {
    action = [&] {
      const CloneSpec s = json_io::spec_from_json(json_io::load(spec));
      Json j = json_io::to_json(compute_slice(s, arity, engine_of(engine)));
      j["arity"] = arity;
      return emit(j);
    };
  });
  auto* member_cmd = clone->add_subcommand("member", "Whether a gate lies in the clone");
  member_cmd->add_option("--spec", spec)->required();
  member_cmd->add_option("--gate", gate_a)->required();
  member_cmd->callback([&] {
    action = [&] {
      const bool ok = member(json_io::gate_from_json(json_io::load(gate_a)), json_io::spec_from_json(json_io::load(spec)));
      Json j;
      j["member"] = ok;
      return emit(j, ok);
    };
  });
  auto* compare_cmd = clone->add_subcommand("compare", "Compare two clones at every arity up to a bound");
  compare_cmd->add_option("--spec", spec)->required();
  compare_cmd->add_option("--other", other)->required();
  compare_cmd->add_option("--bound", bound)->check(CLI::PositiveNumber)->capture_default_str();
  compare_cmd->callback([&] {
    action = [&] {
      const CloneEngine a(json_io::spec_from_json(json_io::load(spec)));
      const CloneEngine b(json_io::spec_from_json(json_io::load(other)));
      return emit(json_io::to_json(compare(a, b, bound)));
    };
  });
  auto closure_options = [&](CLI::App* cmd) {
    cmd->add_option("--spec", spec)->required();
    cmd->add_option("--bound", bound)->check(CLI::PositiveNumber)->capture_default_str();
    cmd->add_flag("--sample", sample, "Test random elements instead of an exact check");
    cmd->add_option("--samples", samples)->capture_default_str();
  };
  auto options = [&] {
    ClosureOptions o;
    o.sample = sample;
    o.samples = samples;
    o.seed = seed;
    return o;
  };
  auto* borrow = clone->add_subcommand("borrow-check", "Borrow closure for arities below the bound");
  closure_options(borrow);
  borrow->callback([&] {
    action = [&] {
      const CloneEngine c(json_io::spec_from_json(json_io::load(spec)));
      const ClosureReport r = borrow_closed_up_to(c, bound, options());
      return emit(json_io::to_json(r), r.holds);
    };
  });
  auto* ancilla = clone->add_subcommand("ancilla-check", "Ancilla closure for arities below the bound");
  closure_options(ancilla);
  ancilla->callback([&] {
    action = [&] {
      const CloneEngine c(json_io::spec_from_json(json_io::load(spec)));
      const ClosureReport r = ancilla_closed_up_to(c, bound, options());
      return emit(json_io::to_json(r), r.holds);
    };
  });
  auto* factoring = clone->add_subcommand("factoring", "f (+) g in the clone implies f and g are");
  factoring->add_option("--spec", spec)->required();
  factoring->add_option("--left", left)->check(CLI::PositiveNumber)->capture_default_str();
  factoring->add_option("--right", right)->check(CLI::PositiveNumber)->capture_default_str();
  factoring->add_flag("--sample", sample);
  factoring->add_option("--samples", samples)->capture_default_str();
  factoring->callback([&] {
    action = [&] {
      const CloneEngine c(json_io::spec_from_json(json_io::load(spec)));
      const ClosureReport r = factoring_check(c, left, right, options());
      return emit(json_io::to_json(r), r.holds);
    };
  });
  auto* oracle = clone->add_subcommand("full-oracle", "Relations whose clone is everything vs. equivalence patterns");
  oracle->add_option("--q", q)->capture_default_str();
  oracle->add_option("--k-max", k_max)->capture_default_str();
  oracle->add_option("--arity-bound", bound)->capture_default_str();
  oracle->callback([&] {
    action = [&] {
      const FullCloneReport r = full_clone_relation_oracle(q, k_max, bound);
      return emit(json_io::to_json(r), r.mismatches.empty());
    };
  });

  // weight derive
  auto* weight_cmd = app.add_subcommand("weight", "Weight constructions");
  weight_cmd->require_subcommand(1);
  auto* derive = weight_cmd->add_subcommand("derive", "Derived weights and closure operations");
  derive->require_subcommand(1);
  auto* counting = derive->add_subcommand("counting", "Completion counts c_{R,i}");
  counting->add_option("--relation", relation)->required();
  counting->add_option("--position", position)->required();
  counting->callback([&] {
    action = [&] { return emit(json_io::to_json(counting_weight(json_io::relation_from_json(json_io::load(relation)), position))); };
  });
  auto* maxlevel = derive->add_subcommand("maxlevel", "Tuples where an N-valued weight is maximal");
  maxlevel->add_option("--weight", weight)->required();
  maxlevel->add_flag("--via-closure", sample, "Build the characteristic weight with closure operations");
  maxlevel->callback([&] {
    action = [&] {
      const Weight w = json_io::weight_from_json(json_io::load(weight));
      return emit(sample ? json_io::to_json(max_level_weight_via_closure(w)) : json_io::to_json(max_level_relation(w)));
    };
  });
  auto* minlevel = derive->add_subcommand("minlevel", "Tuples where an N-valued weight is minimal");
  minlevel->add_option("--weight", weight)->required();
  minlevel->callback([&] {
    action = [&] { return emit(json_io::to_json(min_level_relation(json_io::weight_from_json(json_io::load(weight))))); };
  });
  auto* sum = derive->add_subcommand("sum", "Semiring sum over the last coordinate");
  sum->add_option("--weight", weight)->required();
  sum->add_option("--semiring", semiring, "natural, boolean or a JSON table")->required();
  sum->callback([&] {
    action = [&] {
      const Json sj = semiring == "natural" || semiring == "boolean" ? Json(semiring) : json_io::load(semiring);
      return emit(json_io::to_json(semiring_sum(json_io::weight_from_json(json_io::load(weight)), json_io::semiring_from_json(sj))));
    };
  });
  auto* delta = derive->add_subcommand("delta", "The equality weight");
  delta->add_option("--q", q)->required();
  delta->callback([&] { action = [&] { return emit(json_io::to_json(delta_weight(q))); }; });
  auto* c1 = derive->add_subcommand("c1", "The constant 1 into (N, +)");
  c1->add_option("--q", q)->required();
  c1->callback([&] { action = [&] { return emit(json_io::to_json(const_one_weight(q))); }; });
  auto* prod = derive->add_subcommand("product", "Pointwise product of weights");
  prod->add_option("--weight", weights_in)->required();
  prod->callback([&] {
    action = [&] {
      const auto ws = weights_of({}, weights_in);
      return emit(json_io::to_json(product_weights(ws)));
    };
  });
  auto* hom_cmd = derive->add_subcommand("hom", "Image under a monoid homomorphism");
  hom_cmd->add_option("--weight", weight)->required();
  hom_cmd->add_option("--hom", hom, "Rule name or JSON")->required();
  hom_cmd->callback([&] {
    action = [&] {
      const auto first = hom.find_first_not_of(' ');
      const Json hj = first != std::string::npos && (hom[first] == '{') ? json_io::load(hom) : Json(hom);
      return emit(json_io::to_json(map_monoid(json_io::weight_from_json(json_io::load(weight)), json_io::hom_from_json(hj))));
    };
  });
  auto* subst = derive->add_subcommand("substitute", "Index substitution w(x_rho(1), ..., x_rho(k))");
  subst->add_option("--weight", weight)->required();
  subst->add_option("--map", map, "0-based targets, one per argument")->required()->delimiter(',');
  subst->add_option("--arity", arity)->required();
  subst->callback([&] {
    action = [&] {
      std::vector<int> rho;
      for (const auto& s : map) rho.push_back(std::stoi(s));
      return emit(json_io::to_json(substitute_indices(json_io::weight_from_json(json_io::load(weight)), rho, arity)));
    };
  });
  auto* restrict_cmd = derive->add_subcommand("restrict", "Reinterpret in a submonoid");
  restrict_cmd->add_option("--weight", weight)->required();
  restrict_cmd->add_option("--monoid", monoid)->required();
  restrict_cmd->callback([&] {
    action = [&] {
      const auto first = monoid.find_first_not_of(' ');
      const Json mj = first != std::string::npos && monoid[first] == '{' ? json_io::load(monoid) : Json(monoid);
      return emit(json_io::to_json(restrict_monoid(json_io::weight_from_json(json_io::load(weight)), json_io::monoid_from_json(mj))));
    };
  });

  // census2
  int max_arity = 3;
  auto* census2 = app.add_subcommand("census2", "The 13 relationally defined clones on {0,1}");
  census2->add_option("--max-arity", max_arity)->check(CLI::Range(1, 4))->capture_default_str();
  census2->add_option("--dot", dot_path, "Also write the diagram as Graphviz");
  census2->add_option("--out", out_path, "Write census JSON here instead of stdout");
  census2->add_option("--engine", engine)->check(CLI::IsMember({"backtrack", "brute"}))->capture_default_str();
  census2->callback([&] {
    action = [&] {
      const census::Census c = census::run(max_arity, engine_of(engine));
      const Json j = json_io::to_json(c);
      if (!dot_path.empty()) write_file(dot_path, census::to_dot(c));
      const bool ok = c.distinct && c.matches_known;
      if (!out_path.empty()) {
        write_file(out_path, j.dump(2) + "\n");
        return ok ? 0 : 1;
      }
      return emit(j, ok);
    };
  });
  auto* witnesses = app.add_subcommand("witnesses", "Check every separating gate of the binary census");
  witnesses->callback([&] {
    action = [&] {
      const auto r = census::verify_witnesses();
      return emit(json_io::to_json(r), r.discrepancies.empty());
    };
  });

  // quotient
  auto* quotient = app.add_subcommand("quotient", "Gate induced on the classes of a partition");
  quotient->add_option("--gate", gate_a)->required();
  quotient->add_option("--partition", partition, "e.g. 01|23")->required();
  quotient->callback([&] {
    action = [&] {
      const Gate f = json_io::gate_from_json(json_io::load(gate_a));
      return emit(json_io::to_json(quotient_gate(f, Partition::parse(f.q(), partition))));
    };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    return fail("usage", e.what(), 2);
  }
  try {
    return action ? action() : fail("usage", "no command", 2);
  } catch (const ResourceLimit& e) {
    return fail("resource_limit", e.what(), 3);
  } catch (const InvalidArgument& e) {
    return fail("invalid_argument", e.what(), 2);
  } catch (const std::exception& e) {
    return fail("invalid_argument", e.what(), 2);
  }
}
