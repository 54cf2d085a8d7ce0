#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>
#include <json.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "quiddity/error.hpp"
#include "quiddity/verify.hpp"
#include "quiddity_cli/commands.hpp"

using namespace quid;
using nlohmann::json;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

const std::filesystem::path kData = QUIDDITY_TEST_DATA_DIR;

}  // namespace

TEST_CASE("count examples") {
  auto r = run({"count", "--ring", "zmod:5", "--n", "6", "--target", "minus", "--method",
                "formula"});
  REQUIRE(r.code == cli::kOk);
  const auto j = json::parse(r.out);
  CHECK(j["value"] == "149");
  CHECK(j["ring"] == "zmod:5");
  CHECK(j["n"] == 6);
  CHECK(j["target"] == "minus");
  CHECK(j["method"] == "formula");

  r = run({"count", "--ring", "gf:2^2", "--n", "6", "--target", "minus", "--method", "dp"});
  CHECK(json::parse(r.out)["value"] == "79");

  const auto dp = run({"count", "--ring", "zmod:9", "--n", "5", "--target", "plus",
                       "--method", "dp"});
  const auto naive = run({"count", "--ring", "zmod:9", "--n", "5", "--target", "plus",
                          "--method", "naive"});
  CHECK(json::parse(dp.out)["value"] == json::parse(naive.out)["value"]);
}

TEST_CASE("count methods agree where they overlap") {
  for (const char* ring : {"zmod:5", "zmod:4", "gf:3^2"}) {
    for (const char* target : {"minus", "plus", "all"}) {
      std::set<std::string> values;
      for (const char* method : {"formula", "dp", "recurrence"}) {
        const auto r = run({"count", "--ring", ring, "--n", "7", "--target", target,
                            "--method", method});
        REQUIRE(r.code == cli::kOk);
        values.insert(json::parse(r.out)["value"].get<std::string>());
      }
      CAPTURE(ring);
      CAPTURE(target);
      CHECK(values.size() == 1);
    }
  }
}

TEST_CASE("target all counts each solution once") {
  const Ring f2(RingSpec::field(2, 1));
  CHECK(cli::count(f2, 6, cli::CountTarget::All, cli::CountMethod::Dp) == 11);
  const Ring z5(RingSpec::zmod(5));
  CHECK(cli::count(z5, 4, cli::CountTarget::All, cli::CountMethod::Formula) == 13);
}

TEST_CASE("exit codes") {
  CHECK(run({"count", "--ring", "zmod:9", "--n", "6", "--method", "formula"}).code ==
        cli::kUnsupported);
  CHECK(run({"count", "--ring", "gf:2^2", "--n", "6", "--target", "plus", "--method",
             "formula"})
            .code == cli::kUnsupported);
  CHECK(run({"count", "--ring", "zmod:6", "--n", "6", "--method", "recurrence"}).code ==
        cli::kUnsupported);
  CHECK(run({"count", "--ring", "zmod:7", "--n", "12", "--method", "naive"}).code ==
        cli::kResource);
  CHECK(run({"count", "--ring", "bogus", "--n", "3"}).code == cli::kUnsupported);
  CHECK(run({"count", "--ring", "zmod:5"}).code != cli::kOk);
  CHECK(run({"irreducible", "--ring", "gf:2^2", "--max-len", "6"}).code ==
        cli::kUnsupported);
}

TEST_CASE("irreducible subcommand") {
  const auto path = std::filesystem::temp_directory_path() / "quiddity_classes_test.txt";
  const auto r = run({"irreducible", "--ring", "zmod:5", "--max-len", "8", "--emit-classes",
                      path.string()});
  REQUIRE(r.code == cli::kOk);
  const auto j = json::parse(r.out);
  CHECK(j["N"] == 5);
  CHECK(j["v"] == 9);
  CHECK(j["ell"] == 6);
  CHECK(j["complete"] == true);
  CHECK(j["truncated_branches"] == 0);
  std::ifstream in(path);
  std::string line;
  std::size_t lines = 0;
  while (std::getline(in, line)) ++lines;
  CHECK(lines == 9);
  std::filesystem::remove(path);
}

TEST_CASE("tables regenerate the golden fixtures byte for byte") {
  const auto dir = std::filesystem::temp_directory_path() / "quiddity_tables_test";
  std::filesystem::remove_all(dir);
  const auto r = run({"tables", "--out", dir.string()});
  REQUIRE(r.code == cli::kOk);
  for (const char* file : {"w_minus.csv", "w_plus.csv", "st_table.csv", "v_table.csv"}) {
    CAPTURE(file);
    const auto produced = slurp(dir / file);
    CHECK(!produced.empty());
    CHECK(produced == slurp(kData / "golden" / file));
  }
  // Idempotent output.
  const auto again = run({"tables", "--which", "w-minus"});
  CHECK(again.out == slurp(kData / "golden" / "w_minus.csv"));
  std::filesystem::remove_all(dir);
}

TEST_CASE("table rows from the published examples") {
  const auto w = run({"tables", "--which", "w-minus"}).out;
  CHECK(w.find("\n8,43,260,1344,3224,11180,17100,138632,162260,349440\n") != std::string::npos);
  const auto st = run({"tables", "--which", "st"}).out;
  CHECK(st.find("\n10,21760,21760,21760,22016\n") != std::string::npos);
  const auto v = run({"tables", "--which", "v-ell", "--max-modulus", "9"}).out;
  CHECK(v.find("\n9,229,12\n") != std::string::npos);
  const auto js = json::parse(run({"tables", "--which", "st", "--format", "json"}).out);
  CHECK(js["tables"][0]["rows"].size() == 9);
}

TEST_CASE("typo registry parsing") {
  const auto typos = load_typo_registry(kData / "suspected_typos.csv");
  REQUIRE(typos.size() == 1);
  CHECK(typos[0].table == "w-plus");
  CHECK(typos[0].row == 6);
  CHECK(typos[0].column == 11);
  CHECK(typos[0].printed == "130");
  CHECK(typos[0].arbitration == std::vector<std::string>{"dp", "formula"});

  std::istringstream bad_header("n,N\n");
  CHECK_THROWS_AS(parse_typo_registry(bad_header), InvalidArgument);
  std::istringstream bad_method("table,n,N,printed,arbitration\nw-plus,6,11,130,guess\n");
  CHECK_THROWS_AS(parse_typo_registry(bad_method), InvalidArgument);
}

TEST_CASE("verify tables flags the registered cell") {
  const auto r = run({"verify", "tables"});
  const auto j = json::parse(r.out);
  CHECK(j["checks"].size() == 2 * 45 + 36);
  bool flagged = false;
  for (const auto& c : j["checks"]) {
    if (c["anchor"] == "w-plus[n=6,N=11]") {
      flagged = c["status"] == "flagged-typo" && c["computed"] == "1330";
    }
  }
  CHECK(flagged);
  CHECK(j["counts"]["flagged-typo"] == 1);
  CHECK(r.code == (j["passed"].get<bool>() ? cli::kOk : cli::kMismatch));
}

TEST_CASE("an empty registry turns the flagged cell into a mismatch") {
  const auto path = std::filesystem::temp_directory_path() / "quiddity_empty_typos.csv";
  std::ofstream(path) << "table,n,N,printed,arbitration\n";
  const auto r = run({"verify", "tables", "--typos", path.string()});
  CHECK(r.code == cli::kMismatch);
  CHECK(json::parse(r.out)["counts"]["flagged-typo"] == 0);
  std::filesystem::remove(path);
}

TEST_CASE("QUIDDITY_JOBS overrides --jobs") {
  CHECK(cli::resolve_jobs(3) == 3);
  ::setenv("QUIDDITY_JOBS", "5", 1);
  CHECK(cli::resolve_jobs(3) == 5);
  ::setenv("QUIDDITY_JOBS", "zero", 1);
  CHECK_THROWS_AS(cli::resolve_jobs(3), InvalidArgument);
  ::unsetenv("QUIDDITY_JOBS");
}
