// mwcpower: voting-power indices computed directly from the set of minimal
// winning coalitions, with exact arithmetic end to end. Subcommands:
//   analyze  full per-voter index table for a system document
//   derive   minimal winning coalitions of a weighted system
//   verify   direct formulas against the brute-force definitional oracle
//   trace    step-by-step partial sums of the direct calculation
//   atlas    exhaustive enumeration of all systems for small voter counts

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <sstream>

#include "mwc/atlas.hpp"
#include "mwc/direct.hpp"
#include "mwc/errors.hpp"
#include "mwc/game_ops.hpp"
#include "mwc/json_io.hpp"
#include "mwc/oracle.hpp"
#include "mwc/report.hpp"

namespace {

using nlohmann::json;

struct CommonOpts {
  std::string input = "-";
  bool as_json = false;
  int precision = 6;
  std::uint64_t budget = mwc::kDefaultSubfamilyBudget;
  int threads = 0;
};

json read_document(const std::string& path) {
  json doc;
  try {
    if (path == "-") {
      std::cin >> doc;
    } else {
      std::ifstream in(path);
      if (!in) {
        throw mwc::ValidationError(mwc::ValidationKind::BadDocument,
                                   "cannot open input file: " + path);
      }
      in >> doc;
    }
  } catch (const json::parse_error& e) {
    throw mwc::ValidationError(mwc::ValidationKind::BadDocument,
                               std::string("invalid JSON: ") + e.what());
  }
  return doc;
}

mwc::MwcSet load_system(const CommonOpts& opts) {
  return mwc::system_from_document(mwc::parse_system_document(read_document(opts.input)));
}

void print_table(const std::vector<std::vector<std::string>>& rows) {
  std::vector<std::size_t> width;
  for (const auto& row : rows) {
    if (width.size() < row.size()) width.resize(row.size(), 0);
    for (std::size_t c = 0; c < row.size(); ++c) width[c] = std::max(width[c], row[c].size());
  }
  for (const auto& row : rows) {
    std::string line;
    for (std::size_t c = 0; c < row.size(); ++c) {
      line += row[c];
      if (c + 1 < row.size()) line += std::string(width[c] - row[c].size() + 2, ' ');
    }
    std::cout << line << "\n";
  }
}

std::string cell(const mwc::Rational& v, int precision) {
  return v.str() + " (" + v.decimal(precision) + ")";
}

int cmd_analyze(const CommonOpts& opts) {
  const mwc::MwcSet system = load_system(opts);
  const mwc::PowerReport report =
      mwc::compute_report(system, {.budget = opts.budget, .threads = opts.threads});

  if (opts.as_json) {
    std::cout << mwc::report_to_json(system, report).dump() << "\n";
    return 0;
  }
  std::vector<std::vector<std::string>> rows;
  rows.push_back({"voter", "BS", "PBP", "PBI", "SSI", "DP", "HP"});
  for (int w = 0; w < system.voter_count(); ++w) {
    rows.push_back({system.voters().name(w), report.bs[w].get_str(),
                    cell(report.pbp[w], opts.precision), cell(report.pbi[w], opts.precision),
                    cell(report.ssi[w], opts.precision), cell(report.dp[w], opts.precision),
                    cell(report.hp[w], opts.precision)});
  }
  print_table(rows);
  return 0;
}

int cmd_derive(const CommonOpts& opts) {
  const auto doc = mwc::parse_system_document(read_document(opts.input));
  if (!doc.weighted) {
    throw mwc::ValidationError(mwc::ValidationKind::BadDocument,
                               "derive needs a weighted document (\"weights\" and \"quota\")");
  }
  const mwc::MwcSet system = mwc::system_from_document(doc);
  if (opts.as_json) {
    std::cout << mwc::system_to_json(system).dump() << "\n";
    return 0;
  }
  for (mwc::Coalition v : system.members()) {
    std::cout << mwc::format_coalition(system.voters(), v) << "\n";
  }
  return 0;
}

int verify_one(const mwc::MwcSet& system, const CommonOpts& opts, bool print) {
  const mwc::FoldOptions fold{.budget = opts.budget, .threads = opts.threads};
  const bool bs_ok = mwc::banzhaf_scores(system, fold) == mwc::oracle_banzhaf(system, opts.threads);
  const bool ssi_ok = mwc::shapley_shubik(system, fold) == mwc::oracle_ssi(system, opts.threads);
  if (print) {
    std::cout << "BS   " << (bs_ok ? "PASS" : "FAIL") << "\n";
    std::cout << "SSI  " << (ssi_ok ? "PASS" : "FAIL") << "\n";
  }
  return bs_ok && ssi_ok ? 0 : 1;
}

int cmd_verify(const CommonOpts& opts, int atlas_n) {
  if (atlas_n > 0) {
    std::uint64_t systems = 0;
    std::uint64_t mismatches = 0;
    const mwc::VoterSet voters = mwc::VoterSet::numbered(atlas_n);
    mwc::enumerate_antichains(atlas_n, [&](std::span<const mwc::Coalition> members) {
      const mwc::MwcSet system = mwc::validate_mwc_set(
          voters, std::vector<mwc::Coalition>(members.begin(), members.end()));
      CommonOpts quiet = opts;
      quiet.threads = 1;
      mismatches += verify_one(system, quiet, false);
      ++systems;
    });
    std::cout << systems << " systems checked: "
              << (mismatches == 0 ? "BS PASS, SSI PASS" : std::to_string(mismatches) + " FAILED")
              << "\n";
    return mismatches == 0 ? 0 : 1;
  }
  return verify_one(load_system(opts), opts, true);
}

int cmd_trace(const CommonOpts& opts, const std::string& voter, const std::string& kind) {
  const mwc::MwcSet system = load_system(opts);
  const auto idx = system.voters().index_of(voter);
  if (!idx) {
    throw mwc::ValidationError(mwc::ValidationKind::UnknownVoter,
                               "voter \"" + voter + "\" is not in the voter list");
  }
  const mwc::FoldOptions fold{.budget = opts.budget, .threads = opts.threads};

  std::vector<std::vector<std::string>> rows;
  json steps = json::array();
  if (kind == "bs") {
    const auto trace = mwc::trace_banzhaf(system, *idx, fold);
    rows.push_back({"step", "cumulative"});
    for (std::size_t r = 0; r < trace.cumulative.size(); ++r) {
      rows.push_back({std::to_string(r + 1), trace.cumulative[r].get_str()});
      steps.push_back(trace.cumulative[r].get_str());
    }
  } else {
    const auto trace = mwc::trace_shapley_shubik(system, *idx, fold);
    rows.push_back({"step", "cumulative"});
    for (std::size_t r = 0; r < trace.cumulative.size(); ++r) {
      rows.push_back({std::to_string(r + 1), cell(trace.cumulative[r], opts.precision)});
      steps.push_back(trace.cumulative[r].str());
    }
  }
  if (opts.as_json) {
    std::cout << json{{"voter", voter}, {"kind", kind}, {"steps", steps}}.dump() << "\n";
  } else {
    print_table(rows);
  }
  return 0;
}

const char* profile_kind_name(mwc::ProfileKind kind) {
  switch (kind) {
    case mwc::ProfileKind::PBI: return "pbi";
    case mwc::ProfileKind::SSI: return "ssi";
    case mwc::ProfileKind::DP: return "dp";
    case mwc::ProfileKind::HP: return "hp";
  }
  return "?";
}

int cmd_atlas(const CommonOpts& opts, int n, const std::string& profiles,
              const std::string& dump_path) {
  const std::uint64_t systems = mwc::count_antichains(n, opts.threads);
  std::cout << systems << " systems\n";

  if (!profiles.empty()) {
    mwc::ProfileKind kind;
    if (profiles == "pbi") {
      kind = mwc::ProfileKind::PBI;
    } else if (profiles == "ssi") {
      kind = mwc::ProfileKind::SSI;
    } else if (profiles == "dp") {
      kind = mwc::ProfileKind::DP;
    } else if (profiles == "hp") {
      kind = mwc::ProfileKind::HP;
    } else {
      throw mwc::ValidationError(mwc::ValidationKind::BadDocument,
                                 "--profiles must be one of pbi|ssi|dp|hp");
    }
    const mwc::ProfileAtlas atlas = mwc::profile_atlas(n, kind);
    std::cout << atlas.ordered.size() << " distinct ordered profiles (" << profile_kind_name(kind)
              << ")\n";
    std::cout << atlas.unordered.size() << " distinct unordered profiles ("
              << profile_kind_name(kind) << ")\n";
  }

  if (!dump_path.empty()) {
    std::ofstream out(dump_path);
    if (!out) {
      throw mwc::ValidationError(mwc::ValidationKind::BadDocument,
                                 "cannot open dump file: " + dump_path);
    }
    mwc::for_each_atlas_entry(n, [&](const mwc::AtlasEntry& entry) {
      out << mwc::atlas_record_to_json(entry.system, entry.report).dump() << "\n";
    });
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Voting-power indices from minimal winning coalitions"};
  app.require_subcommand(1);

  CommonOpts opts;
  int atlas_verify_n = 0;
  int atlas_n = 0;
  std::string trace_voter;
  std::string trace_kind = "bs";
  std::string profiles;
  std::string dump_path;

  auto add_common = [&](CLI::App* cmd, bool with_input) {
    if (with_input) cmd->add_option("input", opts.input, "system document (JSON file, or - for stdin)");
    cmd->add_flag("--json", opts.as_json, "machine-readable JSON output");
    cmd->add_option("--precision", opts.precision, "decimal digits in approximations")
        ->check(CLI::Range(0, 50));
    cmd->add_option("--budget", opts.budget, "max inclusion-exclusion terms (2^m - 1 must fit)");
    cmd->add_option("--threads", opts.threads, "worker threads (0 = all)");
  };

  CLI::App* analyze = app.add_subcommand("analyze", "per-voter power index table");
  add_common(analyze, true);

  CLI::App* derive = app.add_subcommand("derive", "minimal winning coalitions of a weighted system");
  add_common(derive, true);

  CLI::App* verify = app.add_subcommand("verify", "direct formulas vs. brute-force oracle");
  add_common(verify, true);
  verify->add_option("--atlas", atlas_verify_n, "verify every system with this many voters");

  CLI::App* trace = app.add_subcommand("trace", "stepwise partial sums for one voter");
  add_common(trace, true);
  trace->add_option("--voter", trace_voter, "voter name")->required();
  trace->add_option("--kind", trace_kind, "bs or ssi")->check(CLI::IsMember({"bs", "ssi"}));

  CLI::App* atlas = app.add_subcommand("atlas", "enumerate all systems for n voters");
  atlas->add_option("n", atlas_n, "number of voters")->required();
  add_common(atlas, false);
  atlas->add_option("--profiles", profiles, "distinct power profiles for one index: pbi|ssi|dp|hp");
  atlas->add_option("--dump", dump_path, "write one JSON record per system to this file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (app.got_subcommand(analyze)) return cmd_analyze(opts);
    if (app.got_subcommand(derive)) return cmd_derive(opts);
    if (app.got_subcommand(verify)) return cmd_verify(opts, atlas_verify_n);
    if (app.got_subcommand(trace)) return cmd_trace(opts, trace_voter, trace_kind);
    if (app.got_subcommand(atlas)) return cmd_atlas(opts, atlas_n, profiles, dump_path);
  } catch (const mwc::ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const mwc::ResourceLimitError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
