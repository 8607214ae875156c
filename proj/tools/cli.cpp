#include "cli.hpp"

#include "ninf/dsl.hpp"
#include "ninf/taboo.hpp"

#include <CLI11.hpp>

#include <functional>
#include <ostream>
#include <sstream>

namespace ninf::cli {

namespace {

Witness make_witness(const CoNat& w, Classification c, const Config& config) {
  return Witness{prefix_string(w, config.prefix_len), c};
}

CommandResult failure(int code, std::string message) {
  CommandResult r;
  r.exit_code = code;
  r.error = std::move(message);
  return r;
}

// Parses the expression and runs body under the step budget, mapping parse
// errors to kUsage and budget exhaustion to kFuel.
CommandResult guarded(std::string_view expr_text, const Config& config,
                      const std::function<CommandResult(const dsl::Expr&, const Predicate&)>& body) {
  dsl::Expr expr;
  try {
    expr = dsl::parse(expr_text);
  } catch (const dsl::ParseError& e) {
    return failure(kUsage, e.what());
  }
  try {
    const Predicate q = dsl::compile(expr);
    ScopedStepBudget budget(config.fuel);
    return body(expr, q);
  } catch (const dsl::ExpansionTooLarge& e) {
    return failure(kUsage, e.what());
  } catch (const FuelExhausted& e) {
    return failure(kFuel, e.what());
  }
}

CommandResult quantify(std::string_view expr_text, const Config& config, bool exists) {
  return guarded(expr_text, config, [&](const dsl::Expr& expr, const Predicate& q) {
    Report report;
    report.query = dsl::print(expr);
    const SearchOutcome outcome = find_counterexample(q, std::nullopt, &report.stats);
    CommandResult result;
    if (const auto* c = std::get_if<Counterexample>(&outcome)) {
      report.verdict = exists ? "found" : "counterexample";
      report.witness = make_witness(c->witness, c->classification, config);
      result.exit_code = exists ? kOk : kNegative;
    } else {
      report.verdict = exists ? "none" : "holds";
      result.exit_code = exists ? kNegative : kOk;
    }
    result.report = std::move(report);
    return result;
  });
}

} // namespace

CommandResult cmd_forall(std::string_view expr_text, const Config& config) {
  return quantify(expr_text, config, false);
}

CommandResult cmd_find(std::string_view expr_text, const Config& config) { return quantify(expr_text, config, true); }

CommandResult cmd_classify(std::string_view expr_text, const Config& config) {
  return guarded(expr_text, config, [&](const dsl::Expr& expr, const Predicate& q) {
    Report report;
    report.query = dsl::print(expr);
    const bool holds = forall(q, &report.stats);
    report.verdict = holds ? "holds" : "counterexample";
    const CoNat w = epsilon(q);
    report.witness = make_witness(w, classify(w, default_classification_fuel(q)), config);
    CommandResult result;
    result.report = std::move(report);
    return result;
  });
}

CommandResult cmd_decide_sum(std::string_view builtin_name, const Config& config) {
  const auto h = taboo::demo_map(builtin_name);
  if (!h) {
    std::string known;
    for (const auto& n : taboo::demo_map_names())
      known += (known.empty() ? "" : ", ") + n;
    return failure(kUsage, "unknown builtin '" + std::string(builtin_name) + "' (known: " + known + ")");
  }
  try {
    ScopedStepBudget budget(config.fuel);
    Report report;
    report.query = std::string(builtin_name);
    const taboo::Decision d = taboo::sur_decides(*h, &report.stats);
    CommandResult result;
    if (const auto* in = std::get_if<taboo::Inhabited>(&d)) {
      report.verdict = "found";
      report.witness = make_witness(in->witness, classify(in->witness, 1024), config);
      result.exit_code = kOk;
    } else {
      report.verdict = "none";
      result.exit_code = kNegative;
    }
    result.report = std::move(report);
    return result;
  } catch (const FuelExhausted& e) {
    return failure(kFuel, e.what());
  }
}

nlohmann::ordered_json to_json(const Report& report) {
  nlohmann::ordered_json j;
  j["query"] = report.query;
  j["verdict"] = report.verdict;
  if (report.witness) {
    nlohmann::ordered_json cls;
    if (const auto* f = std::get_if<Finite>(&report.witness->classification))
      cls["finite"] = f->n;
    else
      cls["atLeast"] = std::get<AtLeast>(report.witness->classification).fuel;
    j["witness"] = {{"prefix", report.witness->prefix}, {"classification", cls}};
  }
  j["stats"] = {{"predicate_evals", report.stats.predicate_evals}, {"bit_reads", report.stats.bit_reads}};
  return j;
}

std::string to_text(const Report& report) {
  std::ostringstream os;
  os << "query: " << report.query << '\n' << "verdict: " << report.verdict << '\n';
  if (report.witness) {
    os << "witness: " << report.witness->prefix << '\n'
       << "classification: " << to_string(report.witness->classification) << '\n';
  }
  os << "predicate_evals: " << report.stats.predicate_evals << '\n'
     << "bit_reads: " << report.stats.bit_reads << '\n';
  return os.str();
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exhaustive search over the conatural numbers N-infinity", "ninf"};
  app.require_subcommand(1);

  Config config;
  bool json = false;
  app.add_option("--fuel", config.fuel, "Step budget in generator evaluations")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  app.add_option("--prefix", config.prefix_len, "Witness bits to print")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  app.add_flag("--json", json, "Emit a JSON report");

  std::string operand;
  auto* forall_cmd = app.add_subcommand(
      "forall", "Decide whether EXPR holds at every point. Exit 0 if it does, 1 with a counterexample if not");
  forall_cmd->add_option("expr", operand, "Predicate expression")->required();
  auto* find_cmd = app.add_subcommand(
      "find", "Search for a point where EXPR is false (a zero of the predicate). Exit 0 with the witness if one "
              "exists, 1 if EXPR holds everywhere. To find a point where P is true, query \"!(P)\"");
  find_cmd->add_option("expr", operand, "Predicate expression")->required();
  auto* classify_cmd =
      app.add_subcommand("classify", "Print the selected point epsilon(EXPR) and its classification. Exit 0");
  classify_cmd->add_option("expr", operand, "Predicate expression")->required();
  auto* decide_cmd = app.add_subcommand(
      "decide-sum", "Decide whether a built-in map N-infinity -> 1 + N-infinity reaches the left summand. "
                    "Exit 0 if it does, 1 if not. Builtins: all-right, left-at-zero, left-at-4bar");
  decide_cmd->add_option("name", operand, "Built-in map name")->required();
  for (auto* sub : {forall_cmd, find_cmd, classify_cmd, decide_cmd})
    sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kUsage;
  }
  config.output = json ? Output::Json : Output::Text;

  CommandResult result;
  if (forall_cmd->parsed())
    result = cmd_forall(operand, config);
  else if (find_cmd->parsed())
    result = cmd_find(operand, config);
  else if (classify_cmd->parsed())
    result = cmd_classify(operand, config);
  else
    result = cmd_decide_sum(operand, config);

  if (!result.error.empty())
    err << "error: " << result.error << '\n';
  if (result.report) {
    if (config.output == Output::Json)
      out << to_json(*result.report).dump() << '\n';
    else
      out << to_text(*result.report);
  }
  return result.exit_code;
}

} // namespace ninf::cli
