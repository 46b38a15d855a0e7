#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "finrel/dsl/eval.hpp"
#include "finrel/dsl/parse.hpp"
#include "finrel/dsl/print.hpp"
#include "finrel/law.hpp"

namespace {

using nlohmann::json;

struct Options {
  bool json_output = false;
  int max_carrier = 2;
  std::string mode = "exhaustive";
  std::uint64_t samples = 50;
  std::uint64_t seed = finrel::EnumConfig::kDefaultSeed;
  bool seed_given = false;
  int jobs = 1;
};

finrel::EnumConfig to_config(const Options& opt) {
  finrel::EnumConfig cfg;
  cfg.max_carrier = opt.max_carrier;
  cfg.mode = opt.mode == "sampled" ? finrel::EnumMode::Sampled : finrel::EnumMode::Exhaustive;
  cfg.samples = opt.samples;
  cfg.seed = opt.seed;
  cfg.jobs = opt.jobs;
  return cfg;
}

json config_json(const Options& opt) {
  // jobs is deliberately absent: parallelism must not change output bytes
  json j;
  j["max_carrier"] = opt.max_carrier;
  j["mode"] = opt.mode;
  if (opt.mode == "sampled") {
    j["samples"] = opt.samples;
    j["seed"] = opt.seed;
  }
  return j;
}

std::string read_input(const std::string& path, std::string& err) {
  if (path == "-") {
    std::ostringstream os;
    os << std::cin.rdbuf();
    return os.str();
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    err = "cannot open " + path;
    return "";
  }
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

const char* status_name(finrel::dsl::EntryStatus s) {
  switch (s) {
    case finrel::dsl::EntryStatus::Ok:
      return "ok";
    case finrel::dsl::EntryStatus::Failed:
      return "failed";
    case finrel::dsl::EntryStatus::Error:
      return "error";
  }
  return "unknown";
}

int cmd_run(const std::vector<std::string>& paths, const Options& opt) {
  const finrel::EnumConfig cfg = to_config(opt);
  json doc;
  doc["format_version"] = "1";
  doc["command"] = "run";
  doc["scripts"] = json::array();

  bool any_failed = false;
  for (const std::string& path : paths) {
    std::string err;
    const std::string text = read_input(path, err);
    if (!err.empty()) {
      std::cerr << "error: " << err << "\n";
      return 2;
    }
    finrel::dsl::Script script;
    try {
      script = finrel::dsl::parse(text);
    } catch (const finrel::dsl::ParseError& e) {
      std::cerr << path << ":" << e.what() << "\n";
      return 2;
    }
    const finrel::dsl::Trace trace = finrel::dsl::evaluate(script, cfg);
    any_failed = any_failed || !trace.ok();

    if (opt.json_output) {
      json js;
      js["path"] = path;
      js["ok"] = trace.ok();
      js["entries"] = json::array();
      for (const auto& entry : trace.entries) {
        json je;
        je["line"] = entry.pos.line;
        je["col"] = entry.pos.col;
        je["stmt"] = entry.stmt;
        je["output"] = entry.output;
        je["status"] = status_name(entry.status);
        js["entries"].push_back(std::move(je));
      }
      doc["scripts"].push_back(std::move(js));
    } else {
      for (const auto& entry : trace.entries) {
        switch (entry.status) {
          case finrel::dsl::EntryStatus::Ok:
            // declarations stay quiet; everything else reports
            if (entry.stmt.rfind("set ", 0) && entry.stmt.rfind("rel ", 0) &&
                entry.stmt.rfind("fun ", 0) && entry.stmt.rfind("fam ", 0))
              std::cout << entry.output << "\n";
            break;
          case finrel::dsl::EntryStatus::Failed:
            std::cout << entry.stmt << " => " << entry.output << "\n";
            break;
          case finrel::dsl::EntryStatus::Error:
            std::cerr << path << ":" << entry.output << "\n";
            break;
        }
      }
    }
  }
  if (opt.json_output) {
    doc["ok"] = !any_failed;
    std::cout << doc.dump(2) << "\n";
  }
  return any_failed ? 1 : 0;
}

int cmd_check(std::vector<std::string> ids, const Options& opt) {
  if (ids.empty() || (ids.size() == 1 && ids[0] == "all")) ids = finrel::law_ids();
  for (const auto& id : ids) {
    try {
      finrel::find_law(id);
    } catch (const finrel::UnknownLaw&) {
      std::cerr << "error: unknown law: " << id << "\n";
      return 2;
    }
  }

  const finrel::EnumConfig cfg = to_config(opt);
  json doc;
  doc["format_version"] = "1";
  doc["command"] = "check";
  doc["config"] = config_json(opt);
  doc["laws"] = json::array();

  if (!opt.json_output && opt.mode == "sampled" && !opt.seed_given)
    std::cout << "seed: " << opt.seed << "\n";

  bool all_ok = true;
  for (const auto& id : ids) {
    const finrel::Law& law = finrel::find_law(id);
    const finrel::LawReport rep = finrel::run_law(id, cfg);
    const bool ok = law.expect_fail ? rep.failed() : rep.passed();
    all_ok = all_ok && ok;

    if (opt.json_output) {
      json jl = finrel::report_to_json(rep);
      jl["expected"] = law.expect_fail ? "fail" : "pass";
      jl["ok"] = ok;
      doc["laws"].push_back(std::move(jl));
    } else {
      std::string verdict;
      switch (rep.outcome) {
        case finrel::LawReport::Outcome::Pass:
          verdict = law.expect_fail ? "PASS (unexpected)" : "PASS";
          break;
        case finrel::LawReport::Outcome::Fail:
          verdict = law.expect_fail ? "FAIL (expected)" : "FAIL";
          break;
        case finrel::LawReport::Outcome::BudgetExceeded:
          verdict = "BUDGET EXCEEDED (estimated " + std::to_string(rep.budget_estimate) + ")";
          break;
      }
      std::cout << rep.id << "  " << rep.instances_checked << "  " << verdict << "\n";
      if (rep.failed()) std::cout << "    witness: " << rep.counterexample << "\n";
    }
  }

  if (opt.json_output) {
    doc["ok"] = all_ok;
    std::cout << doc.dump(2) << "\n";
  }
  return all_ok ? 0 : 1;
}

int cmd_laws(bool json_output) {
  if (json_output) {
    json doc;
    doc["format_version"] = "1";
    doc["command"] = "laws";
    doc["laws"] = json::array();
    for (const auto& law : finrel::law_catalog()) {
      json jl;
      jl["id"] = law.id;
      jl["anchor"] = law.statement;
      jl["expected"] = law.expect_fail ? "fail" : "pass";
      doc["laws"].push_back(std::move(jl));
    }
    std::cout << doc.dump(2) << "\n";
  } else {
    for (const auto& law : finrel::law_catalog()) {
      std::cout << law.id << "  (" << law.statement << ")";
      if (law.expect_fail) std::cout << "  [expected to fail]";
      std::cout << "\n";
    }
  }
  return 0;
}

void add_common_flags(CLI::App* cmd, Options& opt) {
  cmd->add_flag("--json", opt.json_output, "emit one machine-readable JSON document");
  cmd->add_option("--max-carrier", opt.max_carrier, "carrier size bound for enumerations")
      ->default_val(2);
  cmd->add_option("--mode", opt.mode, "enumeration mode")
      ->check(CLI::IsMember({"exhaustive", "sampled"}))
      ->default_val("exhaustive");
  cmd->add_option("--samples", opt.samples, "instances per law in sampled mode")
      ->default_val(50);
  cmd->add_option("--seed", opt.seed, "seed for sampled mode");
  cmd->add_option("--jobs", opt.jobs, "worker threads for law checking")->default_val(1);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"finite relation and function kernel"};
  app.require_subcommand(1);

  Options run_opt, check_opt;
  std::vector<std::string> paths, ids;
  bool laws_json = false;

  CLI::App* run = app.add_subcommand("run", "evaluate scripts (use - for stdin)");
  run->add_option("paths", paths, "script files")->required();
  add_common_flags(run, run_opt);

  CLI::App* check = app.add_subcommand("check", "run laws from the catalog");
  check->add_option("ids", ids, "law ids, or 'all'");
  add_common_flags(check, check_opt);

  CLI::App* laws = app.add_subcommand("laws", "list the law catalog");
  laws->add_flag("--json", laws_json, "emit JSON");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  run_opt.seed_given = run->count("--seed") > 0;
  check_opt.seed_given = check->count("--seed") > 0;

  try {
    if (run->parsed()) return cmd_run(paths, run_opt);
    if (check->parsed()) return cmd_check(ids, check_opt);
    if (laws->parsed()) return cmd_laws(laws_json);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
