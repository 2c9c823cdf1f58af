// sl2calc — command-line front end for the type calculus.
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "sl2calc/calculus.hpp"
#include "sl2calc/decay.hpp"
#include "sl2calc/expr.hpp"
#include "sl2calc/recipes.hpp"
#include "sl2calc/report_json.hpp"
#include "sl2calc/verify.hpp"

using nlohmann::json;
using namespace sl2calc;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitDomain = 1;
constexpr int kExitUsage = 2;

struct Options {
  std::string verb;
  std::vector<std::string> positionals;
  std::optional<std::string> to;
  bool json_output = false;
  bool conjectural_allowed = false;
  bool serial = false;
  bool mutation = false;
  int max_rank = 5;
  Rational delta = Rational(0);
};

void print_usage(std::ostream& os) {
  os << "usage: sl2calc <verb> [args] [flags]\n"
        "\n"
        "verbs:\n"
        "  validate <type>                 check a type expression, print the canonical form\n"
        "  enumerate <group>               list every valid type of the group\n"
        "  restrict <type> --to <group>    apply the matching restriction rule\n"
        "  induce <type> [<type>] --to <group>\n"
        "                                  apply the matching induction rule\n"
        "  tensor <type> <type>            tensor two types on one group\n"
        "  theta-lift <type> --to <group>  lift across the dual pair\n"
        "  decay <type> [--delta a/b]      exponent sequence and decay thresholds\n"
        "  recipe <type>                   realization data for a type\n"
        "  check [--max-rank n] [--serial] [--mutation]\n"
        "                                  run the verification suites\n"
        "\n"
        "type expressions look like Sp10[7,2,2], O8[5,3], SO7[3,3], GL5[4,1];\n"
        "the group name carries the defining-space size.\n"
        "\n"
        "flags: --to <group>, --json, --conjectural, --max-rank <n>, --delta <a/b>,\n"
        "       --serial, --mutation\n"
        "\n"
        "exit status: 0 success, 1 domain error (invalid type, illegal pair,\n"
        "undefined case, failing suite), 2 usage error.\n";
}

[[noreturn]] void usage_error(const std::string& message) {
  std::cerr << "error: " << message << "\n\n";
  print_usage(std::cerr);
  std::exit(kExitUsage);
}

Options parse_options(int argc, char** argv) {
  Options opt;
  if (argc < 2) usage_error("missing verb");
  opt.verb = argv[1];
  if (opt.verb == "--help" || opt.verb == "-h" || opt.verb == "help") {
    print_usage(std::cout);
    std::exit(kExitOk);
  }
  for (int i = 2; i < argc; ++i) {
    std::string arg = argv[i];
    auto value_of = [&](const char* flag) -> std::string {
      if (i + 1 >= argc) usage_error(std::string(flag) + " needs a value");
      return argv[++i];
    };
    if (arg == "--to") {
      opt.to = value_of("--to");
    } else if (arg == "--json") {
      opt.json_output = true;
    } else if (arg == "--conjectural") {
      opt.conjectural_allowed = true;
    } else if (arg == "--serial") {
      opt.serial = true;
    } else if (arg == "--mutation") {
      opt.mutation = true;
    } else if (arg == "--max-rank") {
      try {
        opt.max_rank = std::stoi(value_of("--max-rank"));
      } catch (...) {
        usage_error("--max-rank needs an integer");
      }
      if (opt.max_rank < 1 || opt.max_rank > 19) usage_error("--max-rank must be in [1,19]");
    } else if (arg == "--delta") {
      try {
        opt.delta = parse_rational(value_of("--delta"));
      } catch (const CalcError& e) {
        usage_error(e.what());
      }
    } else if (arg.rfind("--", 0) == 0) {
      usage_error("unknown flag " + arg);
    } else {
      opt.positionals.push_back(arg);
    }
  }
  return opt;
}

json partition_json(const Partition& p) { return json(p.parts()); }

// Shared schema for the rule-application verbs; every documented key is
// always present.
json op_json(const std::vector<SL2Type>& inputs, const TypeResult* res,
             const std::vector<std::string>& diagnostics) {
  json in = json::array();
  for (const auto& t : inputs) in.push_back(t.to_string());
  json out{{"inputs", in},
           {"rule", nullptr},
           {"branch", nullptr},
           {"conjectural", nullptr},
           {"result", nullptr},
           {"result_partition", nullptr},
           {"diagnostics", diagnostics}};
  if (res != nullptr) {
    out["rule"] = res->rule;
    out["branch"] = res->branch;
    out["conjectural"] = res->conjectural;
    out["result"] = res->result.to_string();
    out["result_partition"] = partition_json(res->result.partition());
  }
  return out;
}

int emit_result(const Options& opt, const std::vector<SL2Type>& inputs, const TypeResult& res) {
  if (res.conjectural && !opt.conjectural_allowed) {
    std::vector<std::string> diag = {
        "this pair is handled by a conjectural odd orthogonal rule; rerun with --conjectural"};
    if (opt.json_output) {
      std::cout << op_json(inputs, nullptr, diag).dump(2) << "\n";
    } else {
      std::cerr << "error: " << diag[0] << "\n";
    }
    return kExitDomain;
  }
  if (opt.json_output) {
    std::cout << op_json(inputs, &res, {}).dump(2) << "\n";
  } else {
    std::cout << res.result.to_string() << "  (rule " << res.rule << ", branch " << res.branch
              << (res.conjectural ? ", conjectural" : "") << ")\n";
  }
  return kExitOk;
}

GroupKind target_group(const Options& opt) {
  if (!opt.to) usage_error(opt.verb + " needs --to <group>");
  return parse_group(*opt.to);
}

void need_positionals(const Options& opt, size_t lo, size_t hi) {
  if (opt.positionals.size() < lo || opt.positionals.size() > hi)
    usage_error(opt.verb + ": wrong number of arguments");
}

int run_validate(const Options& opt) {
  need_positionals(opt, 1, 1);
  SL2Type t = parse_type_expr(opt.positionals[0]);
  if (opt.json_output) {
    json out{{"inputs", json::array({opt.positionals[0]})},
             {"group", t.group().name()},
             {"result", t.to_string()},
             {"result_partition", partition_json(t.partition())},
             {"total", t.partition().total()},
             {"diagnostics", json::array()}};
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << t.to_string() << "  (valid type for " << t.group().name() << ", rank "
              << t.group().rank << ")\n";
  }
  return kExitOk;
}

int run_enumerate(const Options& opt) {
  need_positionals(opt, 1, 1);
  GroupKind g = parse_group(opt.positionals[0]);
  auto types = enumerate_types(g);
  if (opt.json_output) {
    json list = json::array();
    for (const auto& t : types) list.push_back(t.to_string());
    json out{{"group", g.name()}, {"count", types.size()}, {"types", list},
             {"diagnostics", json::array()}};
    std::cout << out.dump(2) << "\n";
  } else {
    for (const auto& t : types) std::cout << t.to_string() << "\n";
    std::cout << "# " << types.size() << " types for " << g.name() << "\n";
  }
  return kExitOk;
}

int run_restrict(const Options& opt) {
  need_positionals(opt, 1, 1);
  SL2Type t = parse_type_expr(opt.positionals[0]);
  return emit_result(opt, {t}, restrict_type(t, target_group(opt)));
}

int run_induce(const Options& opt) {
  need_positionals(opt, 1, 8);
  std::vector<SL2Type> factors;
  for (const auto& p : opt.positionals) factors.push_back(parse_type_expr(p));
  return emit_result(opt, factors, induce_type(factors, target_group(opt)));
}

int run_tensor(const Options& opt) {
  need_positionals(opt, 2, 2);
  SL2Type a = parse_type_expr(opt.positionals[0]);
  SL2Type b = parse_type_expr(opt.positionals[1]);
  return emit_result(opt, {a, b}, tensor_type(a, b));
}

int run_theta_lift(const Options& opt) {
  need_positionals(opt, 1, 1);
  SL2Type t = parse_type_expr(opt.positionals[0]);
  GroupKind dst = target_group(opt);
  TypeResult res = theta_lift_type(t, dst);
  if (!opt.json_output && dst.family == Family::Sp) {
    // Attach the decay corollary for the lifted representation.
    DecayBound b = theta_p_bound(t.group().family, t.group().rank, dst.rank);
    std::cout << res.result.to_string() << "  (rule " << res.rule
              << "; matrix coefficients in L^p for p > " << b.p_threshold.to_string() << ")\n";
    return kExitOk;
  }
  return emit_result(opt, {t}, res);
}

int run_decay(const Options& opt) {
  need_positionals(opt, 1, 1);
  SL2Type t = parse_type_expr(opt.positionals[0]);
  ExpSequence exp = exp_sequence(t);

  std::vector<std::string> diagnostics;
  std::optional<DecayBound> p_bound;
  if (t.group().family == Family::Sp) {
    try {
      p_bound = lp_threshold_sp(t);
    } catch (const CalcError& e) {
      diagnostics.push_back(e.what());
    }
  } else {
    diagnostics.push_back("the pairing criterion is stated for Sp; the table bound applies");
  }
  std::optional<DecayBound> q_bound;
  try {
    q_bound = decay_q_table(t, opt.delta);
  } catch (const CalcError& e) {
    diagnostics.push_back(e.what());
  }

  if (opt.json_output) {
    json exp_list = json::array();
    for (const auto& r : exp.entries) exp_list.push_back(r.to_string());
    json out{{"inputs", json::array({t.to_string()})},
             {"exp", exp_list},
             {"p_threshold", p_bound ? json(p_bound->p_threshold.to_string()) : json(nullptr)},
             {"xi_exponent", p_bound ? json(p_bound->xi_exponent.to_string()) : json(nullptr)},
             {"q_threshold", q_bound ? json(q_bound->p_threshold.to_string()) : json(nullptr)},
             {"delta", opt.delta.to_string()},
             {"diagnostics", diagnostics}};
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << "exp " << exp.to_string() << "\n";
    if (p_bound)
      std::cout << "p_threshold " << p_bound->p_threshold.to_string() << "  (matrix coefficients"
                << " in L^p for p > " << p_bound->p_threshold.to_string() << ")\n";
    if (q_bound)
      std::cout << "q_threshold " << q_bound->p_threshold.to_string() << "  (delta "
                << opt.delta.to_string() << ")\n";
    for (const auto& d : diagnostics) std::cout << "note: " << d << "\n";
  }
  return kExitOk;
}

int run_recipe(const Options& opt) {
  need_positionals(opt, 1, 1);
  SL2Type t = parse_type_expr(opt.positionals[0]);
  RepRecipe r = build_recipe(t);
  SL2Type back = recipe_type(r);
  if (back != t) fail(Errc::internal, "recipe failed to evaluate back to the input");

  if (opt.json_output) {
    json chain = json::array();
    for (const auto& step : r.chain)
      chain.push_back({{"group", step.group.name()}, {"type", step.type_after.to_string()}});
    json out{{"inputs", json::array({t.to_string()})},
             {"target", r.target.name()},
             {"distinct_odds", partition_json(r.distinct_odds)},
             {"doubled", partition_json(r.doubled)},
             {"base", r.base.rank == 0 ? "trivial" : r.base.name()},
             {"chain", chain},
             {"levi_blocks", json(r.levi_blocks)},
             {"diagnostics", json::array()}};
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << "target        " << r.target.name() << "\n";
    std::cout << "distinct odds " << r.distinct_odds.to_string() << "\n";
    std::cout << "doubled       " << r.doubled.to_string() << "\n";
    std::cout << "base G'       " << (r.base.rank == 0 ? "trivial group" : r.base.name()) << "\n";
    if (r.chain.empty()) {
      std::cout << "chain         (none)\n";
    } else {
      std::cout << "chain        ";
      for (const auto& step : r.chain) std::cout << " " << step.type_after.to_string();
      std::cout << "\n";
    }
    std::cout << "levi blocks   [";
    for (size_t i = 0; i < r.levi_blocks.size(); ++i)
      std::cout << (i ? "," : "") << r.levi_blocks[i];
    std::cout << "]\n";
  }
  return kExitOk;
}

int run_check(const Options& opt) {
  need_positionals(opt, 0, 0);
  verify::RunMode mode = opt.serial ? verify::RunMode::serial : verify::RunMode::parallel;
  int max_total = 2 * opt.max_rank + 1;

  if (opt.mutation) {
    verify::MutationReport rep = verify::mutation_self_test(std::min(max_total, 9));
    if (opt.json_output) {
      std::cout << verify::mutation_report_to_json(rep).dump(2) << "\n";
    } else {
      std::cout << "baseline failures: " << rep.baseline_failures << "\n";
      for (const auto& o : rep.outcomes)
        std::cout << (o.failures > 0 ? "caught " : "MISSED ") << o.knob << " (" << o.failures
                  << " failures)\n";
      std::cout << (rep.passed() ? "mutation self-test passed" : "mutation self-test FAILED")
                << "\n";
    }
    return rep.passed() ? kExitOk : kExitDomain;
  }

  auto reports = verify::run_all(max_total, mode);
  bool all_passed = true;
  if (opt.json_output) {
    json suites = json::array();
    for (const auto& rep : reports) {
      suites.push_back(verify::report_to_json(rep));
      all_passed = all_passed && rep.passed();
    }
    std::cout << json{{"max_rank", opt.max_rank}, {"suites", suites}, {"passed", all_passed}}.dump(2)
              << "\n";
  } else {
    for (const auto& rep : reports) {
      all_passed = all_passed && rep.passed();
      std::cout << (rep.passed() ? "pass" : "FAIL") << "  " << rep.suite << "  ("
                << rep.instances_checked << " checked, " << rep.skipped << " skipped, "
                << rep.failures.size() << " failures, " << rep.elapsed_ms << " ms)\n";
      for (size_t i = 0; i < rep.failures.size() && i < 10; ++i) {
        const auto& f = rep.failures[i];
        std::cout << "      " << f.inputs << ": expected " << f.expected << ", got " << f.got
                  << "\n";
      }
    }
  }
  return all_passed ? kExitOk : kExitDomain;
}

}  // namespace

int main(int argc, char** argv) {
  Options opt = parse_options(argc, argv);
  try {
    if (opt.verb == "validate") return run_validate(opt);
    if (opt.verb == "enumerate") return run_enumerate(opt);
    if (opt.verb == "restrict") return run_restrict(opt);
    if (opt.verb == "induce") return run_induce(opt);
    if (opt.verb == "tensor") return run_tensor(opt);
    if (opt.verb == "theta-lift") return run_theta_lift(opt);
    if (opt.verb == "decay") return run_decay(opt);
    if (opt.verb == "recipe") return run_recipe(opt);
    if (opt.verb == "check") return run_check(opt);
    usage_error("unknown verb \"" + opt.verb + "\"");
  } catch (const CalcError& e) {
    if (e.code() == Errc::parse_error) {
      std::cerr << "error: " << e.what() << "\n";
      return kExitUsage;
    }
    if (opt.json_output) {
      json out{{"inputs", json(opt.positionals)},
               {"rule", nullptr},
               {"branch", nullptr},
               {"conjectural", nullptr},
               {"result", nullptr},
               {"result_partition", nullptr},
               {"diagnostics",
                json::array({std::string(errc_name(e.code())) + ": " + e.what()})}};
      std::cout << out.dump(2) << "\n";
    } else {
      std::cerr << "error [" << errc_name(e.code()) << "]: " << e.what() << "\n";
    }
    return kExitDomain;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitDomain;
  }
}
