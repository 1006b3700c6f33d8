// argstr: coherent probability bounds and argument strength for .arg files.
//
// Exit codes: 0 success, 1 usage/parse error, 2 incoherent premises.

#include <exception>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "argstrength/argstrength.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitIncoherent = 2;

struct Options {
  bool json = false;
  int places = 4;
  int max_atoms = argstrength::kDefaultMaxAtoms;
  bool witness = false;
};

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot read file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

argstrength::Argument load_argument(const std::string& path, const Options& opt) {
  const std::string text = read_file(path);
  try {
    return argstrength::parse_argument(text, opt.max_atoms);
  } catch (const argstrength::ParseError& e) {
    throw UsageError(path + ":" + e.what());
  }
}

// Full analysis of one argument: coherence always, bounds and strength only
// when requested and coherent.
argstrength::OutputRecord analyze(const argstrength::Argument& argument,
                                  const std::string& source, const Options& opt,
                                  bool want_bounds, bool want_score = true) {
  argstrength::OutputRecord record;
  record.label = argument.label;
  record.source = source;
  record.conclusion = argument.conclusion.to_string();

  argstrength::ConstituentSpace space = argstrength::enumerate_constituents(
      argument.atoms, argument.constraints, opt.max_atoms);
  argstrength::CoherenceVerdict verdict =
      argstrength::check_coherence(space, argument.premises);
  record.coherent = verdict.coherent;
  for (const argstrength::Formula& f : verdict.zero_layer_report) {
    record.zero_layers.push_back(f.to_string());
  }
  record.coherence_witness = std::move(verdict.witness);
  if (record.coherent && want_bounds) {
    record.interval =
        argstrength::propagate_bounds(space, argument.premises, argument.conclusion);
    if (want_score) record.score = argstrength::strength(*record.interval);
  }
  record.space = std::move(space);
  return record;
}

void emit_json(const std::string& command, const Options& opt,
               const std::vector<argstrength::OutputRecord>& records,
               const std::optional<argstrength::PreferenceOrder>& order,
               const std::optional<nlohmann::json>& extra = std::nullopt) {
  nlohmann::json doc;
  doc["command"] = command;
  doc["places"] = opt.places;
  doc["records"] = nlohmann::json::array();
  for (const auto& r : records) {
    doc["records"].push_back(argstrength::record_json(r, opt.places, opt.witness));
  }
  if (order) doc["order"] = order->tiers;
  if (extra) doc.update(*extra);
  std::cout << doc.dump(2) << "\n";
}

void emit_human(const std::vector<argstrength::OutputRecord>& records,
                const Options& opt,
                const std::optional<argstrength::PreferenceOrder>& order) {
  for (const auto& r : records) {
    std::cout << argstrength::record_human(r, opt.places, opt.witness);
  }
  if (order) std::cout << "preference order: " << order->to_string() << "\n";
}

int cmd_check(const std::string& file, const Options& opt) {
  const argstrength::Argument argument = load_argument(file, opt);
  const argstrength::OutputRecord record =
      analyze(argument, file, opt, /*want_bounds=*/false);
  const bool coherent = record.coherent;
  if (opt.json) {
    emit_json("check", opt, {record}, std::nullopt);
  } else {
    emit_human({record}, opt, std::nullopt);
  }
  return coherent ? kExitOk : kExitIncoherent;
}

int cmd_bounds(const std::string& file, const Options& opt) {
  const argstrength::Argument argument = load_argument(file, opt);
  const argstrength::OutputRecord record =
      analyze(argument, file, opt, /*want_bounds=*/true, /*want_score=*/false);
  if (opt.json) {
    emit_json("bounds", opt, {record}, std::nullopt);
  } else {
    emit_human({record}, opt, std::nullopt);
  }
  return record.coherent ? kExitOk : kExitIncoherent;
}

// Shared by `strength` and `rank`: analyze all files, abort on the first
// incoherent input with its verdict.
int run_scored(const std::string& command, const std::vector<std::string>& files,
               const Options& opt) {
  std::vector<argstrength::OutputRecord> records;
  std::vector<std::pair<std::string, argstrength::ConclusionInterval>> entries;
  for (const std::string& file : files) {
    const argstrength::Argument argument = load_argument(file, opt);
    argstrength::OutputRecord record = analyze(argument, file, opt, /*want_bounds=*/true);
    if (!record.coherent) {
      if (opt.json) {
        emit_json(command, opt, {record}, std::nullopt);
      } else {
        std::cout << argstrength::record_human(record, opt.places, opt.witness);
        std::cerr << "error: premises of '" << file << "' are incoherent\n";
      }
      return kExitIncoherent;
    }
    const std::string name = record.label.empty() ? file : record.label;
    entries.emplace_back(name, *record.interval);
    records.push_back(std::move(record));
  }
  std::optional<argstrength::PreferenceOrder> order;
  if (entries.size() >= 2) order = argstrength::rank(entries);

  if (opt.json) {
    emit_json(command, opt, records, order);
  } else if (command == "rank") {
    for (const auto& r : records) {
      const std::string name = r.label.empty() ? r.source : r.label;
      std::cout << name << "  strength " << argstrength::decimal_string(r.score->value, opt.places)
                << "  (" << r.score->value.to_fraction() << ")\n";
    }
    if (order) std::cout << "preference order: " << order->to_string() << "\n";
  } else {
    emit_human(records, opt, order);
  }
  return kExitOk;
}

int cmd_ellsberg(const std::string& variant_name, const Options& opt) {
  const argstrength::ScenarioVariant variant = variant_name == "exact"
                                                   ? argstrength::ScenarioVariant::Exact
                                                   : argstrength::ScenarioVariant::Decimal;
  const auto rows = argstrength::table1(variant);

  std::vector<argstrength::OutputRecord> records;
  std::vector<std::pair<std::string, argstrength::ConclusionInterval>> entries;
  for (const auto& row : rows) {
    argstrength::OutputRecord record;
    record.label = row.label;
    record.source = "builtin:ellsberg/" + variant_name;
    record.conclusion = row.conclusion.to_string();
    record.coherent = true;
    record.interval = row.interval;
    record.score = row.score;
    entries.emplace_back(row.label, row.interval);
    records.push_back(std::move(record));
  }
  const auto prediction = argstrength::predict_from_ratings(
      rows[0].score.value, rows[1].score.value, rows[2].score.value, rows[3].score.value);
  const argstrength::PreferenceOrder order = argstrength::rank(entries);

  auto choice_name = [](argstrength::PairChoice c, const char* first, const char* second) {
    switch (c) {
      case argstrength::PairChoice::First: return first;
      case argstrength::PairChoice::Second: return second;
      default: return "tie";
    }
  };
  const std::string bet12 = choice_name(prediction.choice12, "Bet1", "Bet2");
  const std::string bet34 = choice_name(prediction.choice34, "Bet3", "Bet4");

  if (opt.json) {
    nlohmann::json extra;
    extra["variant"] = variant_name;
    extra["choices"] = {{"bet1_vs_bet2", bet12}, {"bet3_vs_bet4", bet34}};
    extra["strategy"] = argstrength::to_string(prediction.strategy);
    emit_json("ellsberg", opt, records, order, extra);
  } else {
    std::cout << "Ellsberg urn, " << variant_name << " premises\n";
    for (const auto& row : rows) {
      std::cout << "  " << row.label << "  " << row.conclusion.to_string() << "  "
                << argstrength::interval_text(row.interval, opt.places) << "  strength "
                << argstrength::decimal_string(row.score.value, opt.places) << " ("
                << row.score.value.to_fraction() << ")\n";
    }
    std::cout << "preference order: " << order.to_string() << "\n";
    std::cout << "induced choices: " << bet12 << " over the first pair, " << bet34
              << " over the second\n";
    std::cout << "strategy: " << argstrength::to_string(prediction.strategy) << "\n";
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Coherent probability bounds and argument strength for .arg files"};
  app.require_subcommand(1);
  app.fallthrough();

  Options opt;
  app.add_flag("--json", opt.json, "Emit one machine-readable JSON document");
  app.add_option("--places", opt.places, "Decimal places for rendered values (round half up)")
      ->check(CLI::Range(0, 30))
      ->capture_default_str();
  app.add_option("--max-atoms", opt.max_atoms, "Atom budget for constituent enumeration")
      ->check(CLI::Range(1, 62))
      ->capture_default_str();
  app.add_flag("--witness", opt.witness, "Include witness distributions in reports");

  std::string check_file;
  auto* check = app.add_subcommand("check", "Check coherence of the premises");
  check->add_option("file", check_file, "Argument file")->required();

  std::string bounds_file;
  auto* bounds = app.add_subcommand("bounds", "Propagate coherent bounds to the conclusion");
  bounds->add_option("file", bounds_file, "Argument file")->required();

  std::vector<std::string> strength_files;
  auto* strengthc = app.add_subcommand("strength", "Score arguments; rank them when several");
  strengthc->add_option("files", strength_files, "Argument files")->required();

  std::vector<std::string> rank_files;
  auto* rankc = app.add_subcommand("rank", "Order arguments by strength");
  rankc->add_option("files", rank_files, "Argument files")->required();

  std::string variant = "decimal";
  auto* ellsberg = app.add_subcommand("ellsberg", "Reproduce the built-in Ellsberg model");
  ellsberg->add_option("--variant", variant, "Premise spelling")
      ->check(CLI::IsMember({"decimal", "exact"}))
      ->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*check) return cmd_check(check_file, opt);
    if (*bounds) return cmd_bounds(bounds_file, opt);
    if (*strengthc) return run_scored("strength", strength_files, opt);
    if (*rankc) return run_scored("rank", rank_files, opt);
    if (*ellsberg) return cmd_ellsberg(variant, opt);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const argstrength::AtomBudgetError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const argstrength::IncoherentPremisesError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitIncoherent;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
