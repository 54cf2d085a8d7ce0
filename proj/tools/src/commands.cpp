#include "quiddity_cli/commands.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <ostream>

#include "quiddity/error.hpp"
#include "quiddity/irreducible.hpp"
#include "quiddity/mat2.hpp"
#include "quiddity/quiddity.hpp"
#include "quiddity/tables.hpp"
#include "quiddity/verify.hpp"

#ifndef QUIDDITY_DEFAULT_TYPOS
#define QUIDDITY_DEFAULT_TYPOS "suspected_typos.csv"
#endif

namespace quid::cli {

namespace {

using json = nlohmann::ordered_json;

BigInt count_sign(const Ring& ring, unsigned n, Sign sign, CountMethod method,
                  unsigned jobs) {
  const Mat2 target = signed_identity(ring, sign);
  switch (method) {
    case CountMethod::Dp: return dp_count_all(ring, n).at(sign);
    case CountMethod::Naive: return naive_count(ring, n, target, jobs);
    case CountMethod::Formula: {
      if (n <= 4) {
        return static_cast<unsigned long>(small_solutions(ring, n, sign).size());
      }
      if (ring.is_zmod()) return crt_count(n, ring.spec().modulus, sign);
      return u_formula(n, ring.size(), ring.characteristic(), sign);
    }
    case CountMethod::Recurrence: {
      if (ring.is_zmod() && ring.spec().modulus == 4) {
        if (n < 2) return dp_count_all(ring, n).at(sign);
        return z4_recurrence(target, n);
      }
      return recurrence_series(ring, target, n).plus[n];
    }
  }
  return 0;
}

std::string table_file(const std::string& name) {
  if (name == "st") return "st_table.csv";
  if (name == "v-ell") return "v_table.csv";
  std::string file = name;
  std::replace(file.begin(), file.end(), '-', '_');
  return file + ".csv";
}

json table_json(const Table& t) {
  json j;
  j["name"] = t.name;
  j["header"] = t.header;
  j["rows"] = t.rows;
  return j;
}

json report_json(const VerificationReport& report) {
  json j;
  j["suite"] = report.suite;
  j["passed"] = report.passed();
  j["counts"] = {
      {"match", report.count(CheckStatus::Match)},
      {"mismatch", report.count(CheckStatus::Mismatch)},
      {"flagged-typo", report.count(CheckStatus::FlaggedTypo)},
      {"skipped-resource", report.count(CheckStatus::SkippedResource)},
  };
  json checks = json::array();
  for (const auto& c : report.checks) {
    checks.push_back({{"name", c.name},
                      {"anchor", c.anchor},
                      {"expected", c.expected},
                      {"computed", c.computed},
                      {"status", to_string(c.status)},
                      {"note", c.note}});
  }
  j["checks"] = std::move(checks);
  return j;
}

}  // namespace

CountTarget parse_target(std::string_view text) {
  if (text == "minus") return CountTarget::Minus;
  if (text == "plus") return CountTarget::Plus;
  if (text == "all") return CountTarget::All;
  throw InvalidArgument("unknown target '" + std::string(text) + "'");
}

CountMethod parse_method(std::string_view text) {
  if (text == "formula") return CountMethod::Formula;
  if (text == "dp") return CountMethod::Dp;
  if (text == "naive") return CountMethod::Naive;
  if (text == "recurrence") return CountMethod::Recurrence;
  throw InvalidArgument("unknown method '" + std::string(text) + "'");
}

const char* to_string(CountTarget target) {
  switch (target) {
    case CountTarget::Minus: return "minus";
    case CountTarget::Plus: return "plus";
    case CountTarget::All: return "all";
  }
  return "?";
}

const char* to_string(CountMethod method) {
  switch (method) {
    case CountMethod::Formula: return "formula";
    case CountMethod::Dp: return "dp";
    case CountMethod::Naive: return "naive";
    case CountMethod::Recurrence: return "recurrence";
  }
  return "?";
}

BigInt count(const Ring& ring, unsigned n, CountTarget target,
             CountMethod method, unsigned jobs) {
  if (n == 0) throw InvalidArgument("count: n must be at least 1");
  switch (target) {
    case CountTarget::Minus:
      return count_sign(ring, n, Sign::Minus, method, jobs);
    case CountTarget::Plus:
      return count_sign(ring, n, Sign::Plus, method, jobs);
    case CountTarget::All: {
      const BigInt minus = count_sign(ring, n, Sign::Minus, method, jobs);
      // +Id and -Id coincide in characteristic 2.
      if (signed_identity(ring, Sign::Plus) == signed_identity(ring, Sign::Minus)) {
        return minus;
      }
      return minus + count_sign(ring, n, Sign::Plus, method, jobs);
    }
  }
  return 0;
}

unsigned resolve_jobs(unsigned flag_value) {
  if (const char* env = std::getenv("QUIDDITY_JOBS"); env && *env) {
    try {
      const unsigned long v = std::stoul(env);
      if (v > 0) return static_cast<unsigned>(v);
    } catch (const std::exception&) {
    }
    throw InvalidArgument(std::string("QUIDDITY_JOBS must be a positive integer, got '") +
                          env + "'");
  }
  return std::max(1u, flag_value);
}

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Exact counting and enumeration of lambda-quiddities", "quiddity"};
  app.require_subcommand(1);

  std::string ring_text;
  unsigned n = 0;
  std::string target_text = "minus";
  std::string method_text = "dp";
  unsigned jobs = 1;
  auto* count_cmd = app.add_subcommand("count", "count solutions of M_n = target");
  count_cmd->add_option("--ring", ring_text, "zmod:N or gf:p^k[:poly=c0,..,ck]")
      ->required();
  count_cmd->add_option("--n", n, "tuple length")->required();
  count_cmd->add_option("--target", target_text, "minus|plus|all")
      ->check(CLI::IsMember({"minus", "plus", "all"}));
  count_cmd->add_option("--method", method_text, "formula|dp|naive|recurrence")
      ->check(CLI::IsMember({"formula", "dp", "naive", "recurrence"}));
  count_cmd->add_option("--jobs", jobs, "worker threads");

  std::string which = "all";
  std::string format = "csv";
  std::string out_dir;
  std::uint32_t max_modulus = 10;
  auto* tables_cmd = app.add_subcommand("tables", "regenerate the numeric tables");
  tables_cmd->add_option("--which", which, "w-minus|w-plus|st|v-ell|all")
      ->check(CLI::IsMember({"w-minus", "w-plus", "st", "v-ell", "all"}));
  tables_cmd->add_option("--format", format, "csv|json")
      ->check(CLI::IsMember({"csv", "json"}));
  tables_cmd->add_option("--out", out_dir, "directory for one file per table");
  tables_cmd->add_option("--max-modulus", max_modulus, "last N of the v-ell table")
      ->check(CLI::Range(2u, 256u));
  tables_cmd->add_option("--jobs", jobs, "worker threads");

  std::size_t max_len = 12;
  std::string emit_path;
  auto* irr_cmd = app.add_subcommand("irreducible", "enumerate irreducible classes");
  irr_cmd->add_option("--ring", ring_text, "zmod:N")->required();
  irr_cmd->add_option("--max-len", max_len, "length cap")->required();
  irr_cmd->add_option("--jobs", jobs, "worker threads");
  irr_cmd->add_option("--emit-classes", emit_path, "write one class per line");

  std::string suite_text;
  std::string typos_path = QUIDDITY_DEFAULT_TYPOS;
  auto* verify_cmd = app.add_subcommand("verify", "run an acceptance suite");
  verify_cmd->add_option("suite", suite_text,
                         "tables|formulas|recurrence|irreducible|all")
      ->required()
      ->check(CLI::IsMember({"tables", "formulas", "recurrence", "irreducible", "all"}));
  verify_cmd->add_option("--typos", typos_path, "suspected-typo registry");
  verify_cmd->add_option("--max-modulus", max_modulus,
                         "last N of the irreducible census")
      ->check(CLI::Range(2u, 16u));
  verify_cmd->add_option("--jobs", jobs, "worker threads");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err);
  }

  try {
    jobs = resolve_jobs(jobs);
    if (count_cmd->parsed()) {
      const Ring ring(RingSpec::parse(ring_text));
      const auto target = parse_target(target_text);
      const auto method = parse_method(method_text);
      const BigInt value = count(ring, n, target, method, jobs);
      json j;
      j["ring"] = ring.spec().to_string();
      j["n"] = n;
      j["target"] = to_string(target);
      j["method"] = to_string(method);
      j["value"] = value.get_str();
      out << j.dump() << '\n';
      return kOk;
    }
    if (tables_cmd->parsed()) {
      std::vector<Table> tables;
      auto want = [&](const char* name) { return which == "all" || which == name; };
      if (want("w-minus")) tables.push_back(w_table(Sign::Minus));
      if (want("w-plus")) tables.push_back(w_table(Sign::Plus));
      if (want("st")) tables.push_back(st_table());
      if (want("v-ell")) {
        VTableBudget budget;
        budget.jobs = jobs;
        tables.push_back(v_ell_table(max_modulus, budget));
      }
      if (!out_dir.empty()) {
        std::filesystem::create_directories(out_dir);
        json written = json::array();
        for (const auto& t : tables) {
          std::string file = table_file(t.name);
          if (format == "json") file.replace(file.size() - 3, 3, "json");
          const auto path = std::filesystem::path(out_dir) / file;
          std::ofstream f(path, std::ios::binary);
          if (format == "json") {
            f << table_json(t).dump(2) << '\n';
          } else {
            f << to_csv(t);
          }
          if (!f) throw Error("cannot write " + path.string());
          written.push_back(path.string());
        }
        out << json{{"written", written}}.dump() << '\n';
      } else if (format == "json") {
        json all = json::array();
        for (const auto& t : tables) all.push_back(table_json(t));
        out << json{{"tables", all}}.dump() << '\n';
      } else {
        for (std::size_t i = 0; i < tables.size(); ++i) {
          if (i) out << '\n';
          out << to_csv(tables[i]);
        }
      }
      return kOk;
    }
    if (irr_cmd->parsed()) {
      const Ring ring(RingSpec::parse(ring_text));
      if (!ring.is_zmod()) {
        throw Unsupported("irreducible: only zmod:N rings are enumerated");
      }
      EnumerateOptions opts;
      opts.max_len = max_len;
      opts.jobs = jobs;
      const ClassSet classes = enumerate_irreducible(ring, opts);
      if (!emit_path.empty()) {
        std::ofstream f(emit_path, std::ios::binary);
        for (const auto& member : classes.sorted_members()) {
          for (std::size_t i = 0; i < member.size(); ++i) {
            if (i) f << ',';
            f << member[i].index;
          }
          f << '\n';
        }
        if (!f) throw Error("cannot write " + emit_path);
      }
      json j;
      j["N"] = ring.spec().modulus;
      j["v"] = classes.size();
      j["ell"] = classes.max_length();
      j["complete"] = classes.complete;
      j["truncated_branches"] = classes.truncated_branches;
      out << j.dump() << '\n';
      return kOk;
    }
    if (verify_cmd->parsed()) {
      const auto typos = load_typo_registry(typos_path);
      VerifyOptions opts;
      opts.jobs = jobs;
      opts.irreducible_max_modulus = max_modulus;
      const auto report = verify(parse_suite(suite_text), typos, opts);
      for (const auto& c : report.checks) {
        if (c.status != CheckStatus::Match) {
          err << to_string(c.status) << ": " << c.name << " expected "
              << c.expected << " computed " << c.computed;
          if (!c.note.empty()) err << " (" << c.note << ")";
          err << '\n';
        }
      }
      err << report.suite << ": " << report.count(CheckStatus::Match)
          << " match, " << report.count(CheckStatus::Mismatch) << " mismatch, "
          << report.count(CheckStatus::FlaggedTypo) << " flagged-typo\n";
      out << report_json(report).dump() << '\n';
      return report.passed() ? kOk : kMismatch;
    }
  } catch (const Unsupported& e) {
    err << "unsupported: " << e.what() << '\n';
    return kUnsupported;
  } catch (const ResourceLimit& e) {
    err << "resource limit: " << e.what() << '\n';
    return kResource;
  } catch (const InvalidArgument& e) {
    err << "invalid argument: " << e.what() << '\n';
    return kUnsupported;
  }
  return kOk;
}

}  // namespace quid::cli
