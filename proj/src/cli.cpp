#include "nchilb/cli.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "nchilb/errors.hpp"
#include "nchilb/motives.hpp"
#include "nchilb/serialize.hpp"
#include "nchilb/steinberg.hpp"
#include "nchilb/trees.hpp"
#include "nchilb/verify.hpp"

namespace nchilb {

namespace {

struct RunConfig {
  long m = 2;
  long dmax = 4;
  long d = 0;
  std::string kind = "punctual";
  std::vector<std::string> routes;
  std::string format = "text";
  std::string output;
  long maxTrees = kDefaultTreeCap;
  long maxPerms = kDefaultPermCap;
  unsigned long seed = 1;
  std::string suite = "all";
  std::string mode = "exhaustive";
};

long envCap(const char* name, long fallback) {
  const char* value = std::getenv(name);
  if (value == nullptr || *value == '\0') return fallback;
  try {
    return std::stol(value);
  } catch (const std::exception&) {
    throw CLI::ValidationError(std::string(name) + " must be an integer");
  }
}

// Writes to --output when given, otherwise to the session stream.
void deliver(const std::string& payload, const std::string& path, std::ostream& out) {
  if (path.empty()) {
    out << payload;
    return;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) throw std::runtime_error("cannot open output file: " + path);
  file << payload;
  if (!file.good()) throw std::runtime_error("write failed: " + path);
}

int commandMotives(const RunConfig& config, std::ostream& out) {
  auto kind = parseKind(config.kind);
  if (!kind) throw CLI::ValidationError("unknown kind: " + config.kind);
  std::vector<Route> routes;
  for (const std::string& name : config.routes) {
    if (name == "all") {
      routes.clear();
      break;
    }
    auto route = parseRoute(name);
    if (!route) throw CLI::ValidationError("unknown route: " + name);
    const auto& allowed = routesFor(*kind);
    if (std::find(allowed.begin(), allowed.end(), *route) == allowed.end())
      throw CLI::ValidationError("route " + name + " does not apply to kind " + config.kind);
    routes.push_back(*route);
  }
  MotiveTable table = buildMotiveTable(config.m, config.dmax, {*kind}, routes, config.maxTrees);
  std::ostringstream payload;
  if (config.format == "csv") {
    emitTableCsv(table, payload);
  } else if (config.format == "json") {
    payload << nlohmann::json(table).dump(2) << "\n";
  } else {
    emitTableText(table, payload);
  }
  deliver(payload.str(), config.output, out);
  return 0;
}

int commandTreesEnumerate(const RunConfig& config, std::ostream& out) {
  std::vector<Tree> trees = enumerateTrees(static_cast<int>(config.m), config.d, config.maxTrees);
  std::ostringstream payload;
  if (config.format == "json") {
    nlohmann::json j{{"m", config.m}, {"d", config.d}, {"trees", trees}};
    payload << j.dump(2) << "\n";
  } else {
    for (const Tree& t : trees) payload << t.str() << "\n";
  }
  deliver(payload.str(), config.output, out);
  return 0;
}

int commandTreesCensus(const RunConfig& config, std::ostream& out) {
  std::vector<CensusRow> rows = census(static_cast<int>(config.m), config.d, config.maxTrees);
  std::ostringstream payload;
  if (config.format == "json") {
    payload << censusToJson(static_cast<int>(config.m), config.d, rows).dump(2) << "\n";
  } else {
    emitCensusCsv(static_cast<int>(config.m), config.d, rows, payload);
  }
  deliver(payload.str(), config.output, out);
  return 0;
}

int commandSteinbergAudit(const RunConfig& config, std::ostream& out) {
  const AuditMode mode =
      config.mode == "grouped" ? AuditMode::grouped : AuditMode::exhaustive;
  AuditReport report = smallnessAudit(config.m, config.d, mode, config.maxPerms);
  std::ostringstream payload;
  if (config.format == "text") {
    payload << "steinberg audit m=" << report.m << " d=" << report.d << "\n";
    for (const AuditStratum& s : report.strata)
      payload << "  length=" << s.length << " count=" << s.count.get_str()
              << " quotient_dim=" << s.quotientDim << "\n";
    payload << "  top_dim=" << report.topDim << " unique_top=" << (report.uniqueTop ? "yes" : "no")
            << " small=" << (report.small ? "yes" : "no") << "\n";
    payload << "  stratum_formula_dim=" << report.stratumFormulaDim
            << " printed_dim=" << report.printedDim
            << " printed_dim_matches=" << (report.printedDimMatches ? "yes" : "no") << "\n";
  } else {
    payload << auditToJson(report).dump(2) << "\n";
  }
  deliver(payload.str(), config.output, out);
  return 0;
}

int commandVerify(const RunConfig& config, std::ostream& out) {
  VerifyOptions opt;
  opt.mMax = config.m;
  opt.dMax = config.dmax;
  opt.treeCap = config.maxTrees;
  opt.permCap = config.maxPerms;
  opt.seed = config.seed;
  std::ostringstream payload;
  Failures failures;
  std::vector<std::string> suites =
      config.suite == "all" ? verifySuiteNames() : std::vector<std::string>{config.suite};
  for (const std::string& suite : suites) {
    Failures f = runVerifySuite(suite, opt);
    payload << "suite " << suite << ": " << (f.empty() ? "ok" : "FAILED") << "\n";
    for (const std::string& line : f) payload << "  " << line << "\n";
    failures.insert(failures.end(), f.begin(), f.end());
  }
  payload << (failures.empty() ? "verify: all checks passed\n"
                               : "verify: " + std::to_string(failures.size()) + " failure(s)\n");
  deliver(payload.str(), config.output, out);
  return failures.empty() ? 0 : 1;
}

}  // namespace

int runCli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  RunConfig config;
  config.maxTrees = envCap("NCHILB_MAX_TREES", kDefaultTreeCap);
  config.maxPerms = envCap("NCHILB_MAX_PERMS", kDefaultPermCap);

  CLI::App app{"exact motives, pavings, and intersection-cohomology data of punctual "
               "noncommutative Hilbert schemes"};
  app.require_subcommand(1);
  app.fallthrough(false);

  auto addCaps = [&config](CLI::App* cmd) {
    cmd->add_option("--max-trees", config.maxTrees,
                    "tree enumeration cap (env NCHILB_MAX_TREES)")
        ->check(CLI::PositiveNumber);
    cmd->add_option("--max-perms", config.maxPerms,
                    "permutation enumeration cap (env NCHILB_MAX_PERMS)")
        ->check(CLI::PositiveNumber);
  };
  auto addFormat = [&config](CLI::App* cmd, const std::vector<std::string>& choices) {
    cmd->add_option("--format", config.format, "output format")
        ->check(CLI::IsMember(choices))
        ->capture_default_str();
    cmd->add_option("--output", config.output, "write to file instead of stdout");
  };

  CLI::App* motives = app.add_subcommand("motives", "compute a motive table");
  motives->add_option("--m", config.m, "number of variables")->required()->check(CLI::PositiveNumber);
  motives->add_option("--dmax", config.dmax, "largest d")->required()
      ->check(CLI::NonNegativeNumber);
  motives->add_option("--kind", config.kind, "full|punctual|resolution|ih|nilcone")
      ->required()
      ->check(CLI::IsMember({"full", "punctual", "resolution", "ih", "nilcone"}));
  motives->add_option("--routes", config.routes,
                      "route filter (comma list or 'all'; default all)")
      ->delimiter(',');
  addFormat(motives, {"text", "json", "csv"});
  addCaps(motives);

  CLI::App* trees = app.add_subcommand("trees", "tree enumeration and census");
  trees->require_subcommand(1);
  CLI::App* enumerateCmd = trees->add_subcommand("enumerate", "list all d-element trees");
  enumerateCmd->add_option("--m", config.m, "alphabet size")->required()->check(CLI::PositiveNumber);
  enumerateCmd->add_option("--d", config.d, "tree size")->required()->check(CLI::NonNegativeNumber);
  addFormat(enumerateCmd, {"text", "json"});
  addCaps(enumerateCmd);
  CLI::App* censusCmd =
      trees->add_subcommand("census", "per-tree cell dimensions and linear extension counts");
  censusCmd->add_option("--m", config.m, "alphabet size")->required()->check(CLI::PositiveNumber);
  censusCmd->add_option("--d", config.d, "tree size")->required()->check(CLI::NonNegativeNumber);
  addFormat(censusCmd, {"csv", "json"});  // the default (non-json) output is the CSV
  addCaps(censusCmd);

  CLI::App* steinberg = app.add_subcommand("steinberg", "smallness audit");
  steinberg->require_subcommand(1);
  CLI::App* audit = steinberg->add_subcommand("audit", "stratum dimension audit");
  audit->add_option("--m", config.m, "number of variables")->required()->check(CLI::PositiveNumber);
  audit->add_option("--d", config.d, "dimension")->required()->check(CLI::NonNegativeNumber);
  audit->add_option("--mode", config.mode, "exhaustive|grouped")
      ->check(CLI::IsMember({"exhaustive", "grouped"}))
      ->capture_default_str();
  addFormat(audit, {"json", "text"});
  addCaps(audit);

  CLI::App* verify = app.add_subcommand(
      "verify",
      "run verification suites; tree-census checks cover the cells whose tree count "
      "fits the cap");
  verify->add_option("--suite", config.suite, "routes|paving|reciprocity|qbinomial|euler|steinberg|all")
      ->check(CLI::IsMember({"routes", "paving", "reciprocity", "qbinomial", "euler",
                             "steinberg", "all"}))
      ->capture_default_str();
  verify->add_option("--m", config.m, "largest m")->check(CLI::PositiveNumber)
      ->capture_default_str();
  verify->add_option("--dmax", config.dmax, "largest d")->check(CLI::NonNegativeNumber)
      ->capture_default_str();
  verify->add_option("--seed", config.seed, "seed for randomized spot checks")
      ->capture_default_str();
  verify->add_option("--output", config.output, "write report to file instead of stdout");
  addCaps(verify);

  std::vector<const char*> argv;
  argv.push_back("nchilb");
  for (const std::string& a : args) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    err << app.help();
    return 2;
  }

  try {
    if (motives->parsed()) return commandMotives(config, out);
    if (enumerateCmd->parsed()) return commandTreesEnumerate(config, out);
    if (censusCmd->parsed()) return commandTreesCensus(config, out);
    if (audit->parsed()) return commandSteinbergAudit(config, out);
    if (verify->parsed()) return commandVerify(config, out);
  } catch (const CapExceeded& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  err << "error: no subcommand\n";
  return 2;
}

}  // namespace nchilb
