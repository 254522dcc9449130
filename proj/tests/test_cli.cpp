#include <catch2/catch_amalgamated.hpp>

#include <cstdio>
#include <string>
#include <sys/wait.h>

#include <json.hpp>

#include "symcycle/io.hpp"
#include "test_data.hpp"

namespace {

struct RunResult {
  int status = -1;
  std::string output;
};

RunResult run_cli(const std::string& args, bool merge_stderr = true) {
  const std::string cmd = std::string(SYMCYCLE_CLI_PATH) + " " + args +
                          (merge_stderr ? " 2>&1" : " 2>/dev/null");
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  char buf[4096];
  std::size_t got;
  while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, got);
  const int rc = pclose(pipe);
  return {WEXITSTATUS(rc), out};
}

std::string sample_path() { return std::string(SYMCYCLE_DATA_DIR) + "/sample6.cycle"; }

}  // namespace

TEST_CASE("matrices subcommand") {
  const RunResult json = run_cli("matrices --t 4 --distinguished --json", false);
  CHECK(json.status == 0);
  const nlohmann::json j = nlohmann::json::parse(json.output);
  CHECK(j.at("P") == nlohmann::json(kP4));
  CHECK(j.at("N") == nlohmann::json({{1, 1, 0, 0}, {0, 1, 1, 0}, {0, 0, 1, 1}, {-1, 0, 0, 1}}));

  const RunResult sample = run_cli("matrices --t 6 --cycle " + sample_path() + " --json", false);
  CHECK(sample.status == 0);
  const nlohmann::json sj = nlohmann::json::parse(sample.output);
  CHECK(sj.at("M") == nlohmann::json(kSampleM));
  CHECK(sj.at("W") == nlohmann::json(kSampleW));

  const RunResult text = run_cli("matrices --t 4");
  CHECK(text.status == 0);
  CHECK(text.output.find("P(4) =") != std::string::npos);
}

TEST_CASE("matrices with odd t prints N and refuses P") {
  const RunResult r = run_cli("matrices --t 5 --distinguished");
  CHECK(r.status == 0);
  CHECK(r.output.find("N(5) =") != std::string::npos);
  CHECK(r.output.find("refused") != std::string::npos);

  const RunResult j = run_cli("matrices --t 5 --json", false);
  CHECK(j.status == 0);
  CHECK(nlohmann::json::parse(j.output).at("P").is_null());
}

TEST_CASE("decompose a tope") {
  const RunResult r =
      run_cli("decompose --t 6 --cycle " + sample_path() + " --check ++++++");
  CHECK(r.status == 0);
  CHECK(r.output.find("x:    (1,-1,1,-1,1,0)") != std::string::npos);
  CHECK(r.output.find("xbar: (-3,1,1,-3,5,-5)") != std::string::npos);
  CHECK(r.output.find("S^1 + S^2 + 5S^4 + 3S^6 + 3S^9 + 5S^11") != std::string::npos);
  CHECK(r.output.find("D^0 + D^2 + D^4 + D^7 + D^9") != std::string::npos);
  CHECK(r.output.find("reconstruction exact") != std::string::npos);
}

TEST_CASE("decompose a subtope (both target spellings)") {
  const std::string expected = "2S^1 + 4S^3 + 2S^5 + 3S^8 + 4S^10";

  const RunResult opt = run_cli("decompose --t 6 --cycle " + sample_path() +
                                " --subtope --target=--0+--");
  CHECK(opt.status == 0);
  CHECK(opt.output.find(expected) != std::string::npos);
  CHECK(opt.output.find("(-1,1,0,0,0,-1)") != std::string::npos);
  CHECK(opt.output.find("(-1,1,-1,1,0,-1)") != std::string::npos);
  CHECK(opt.output.find("xbar: (0,2,-3,4,-4,2)") != std::string::npos);

  const RunResult pos = run_cli("decompose --t 6 --cycle " + sample_path() +
                                " --subtope -- --0+--");
  CHECK(pos.status == 0);
  CHECK(pos.output.find(expected) != std::string::npos);
}

TEST_CASE("decompose defaults to the distinguished cycle and self-checks") {
  const RunResult r = run_cli("decompose --t 4 --check +-+-");
  CHECK(r.status == 0);
  CHECK(r.output.find("distinguished") != std::string::npos);
  CHECK(r.output.find("reconstruction exact") != std::string::npos);

  // t can be inferred from the target alone
  const RunResult inferred = run_cli("decompose --check +--+");
  CHECK(inferred.status == 0);
  CHECK(inferred.output.find("t = 4") != std::string::npos);
}

TEST_CASE("decompose JSON round-trips through the library") {
  const RunResult r = run_cli("decompose --t 6 --cycle " + sample_path() + " --json ++++++", false);
  CHECK(r.status == 0);
  const nlohmann::json j = nlohmann::json::parse(r.output);
  const symcycle::DecompositionDocument doc = symcycle::decomposition_from_json(j);
  CHECK(symcycle::to_string(doc.target) == "++++++");
  CHECK(doc.cycle == sample_cycle6());
  const auto recon = symcycle::reconstruct(doc.decomposition, symcycle::subtope_sequence(doc.cycle));
  CHECK(recon == std::vector<std::int64_t>(6, 1));

  // text and JSON renderings carry the same decomposition
  const RunResult text = run_cli("decompose --t 6 --cycle " + sample_path() + " ++++++");
  CHECK(text.output.find("decomposition: " +
                         symcycle::render_decomposition(doc.decomposition)) !=
        std::string::npos);
}

TEST_CASE("decompose input errors exit 2") {
  CHECK(run_cli("decompose --t 6 --subtope ++++++").status == 2);   // kind mismatch
  CHECK(run_cli("decompose --t 6 -- --0+--").status == 2);          // zero without --subtope
  CHECK(run_cli("decompose --t 6 ++q+++").status == 2);             // bad character
  CHECK(run_cli("decompose --t 6").status == 2);                    // missing target
  CHECK(run_cli("decompose --t 4 ++++++").status == 2);             // t mismatch
  CHECK(run_cli("bogus-subcommand").status == 2);
}

TEST_CASE("odd t surfaces as exit 3") {
  CHECK(run_cli("decompose --t 5 +++++").status == 3);
  CHECK(run_cli("closedform --t 5 --neg 1").status == 3);
  CHECK(run_cli("bench --t 6,7 --reps 1").status == 3);
}

TEST_CASE("closedform subcommand") {
  const RunResult prefix = run_cli("closedform --t 6 --neg 1-2 --json", false);
  CHECK(prefix.status == 0);
  CHECK(nlohmann::json::parse(prefix.output).at("xbar") ==
        nlohmann::json({-1, 1, 1, -1, 1, -1}));  // row P(6)^3

  const RunResult split = run_cli("closedform --t 6 --neg 2-3,5 --check");
  CHECK(split.status == 0);
  CHECK(split.output.find("A = [2,3] u [5,5]") != std::string::npos);
  CHECK(split.output.find("case iii") != std::string::npos);
  CHECK(split.output.find("(3,-5,5,-3,1,1)") != std::string::npos);
  CHECK(split.output.find("matches the exact solve") != std::string::npos);

  const RunResult full = run_cli("closedform --t 6 --neg 1-t --json", false);
  CHECK(full.status == 0);
  const nlohmann::json fj = nlohmann::json::parse(full.output);
  CHECK(fj.at("case") == "ii");
  CHECK(fj.at("xbar") == nlohmann::json({-1, 1, -1, 1, -1, 1}));  // -P(6)^1

  CHECK(run_cli("closedform --t 6 --neg x").status == 2);
  CHECK(run_cli("closedform --t 6 --neg 9").status == 2);
}

TEST_CASE("verify subcommand") {
  const RunResult ok = run_cli("verify --t 4 --distinguished --scope all");
  CHECK(ok.status == 0);
  CHECK(ok.output.find("result: PASS") != std::string::npos);

  const RunResult sample = run_cli("verify --t 6 --cycle " + sample_path());
  CHECK(sample.status == 0);

  const RunResult odd = run_cli("verify --t 5 --distinguished");
  CHECK(odd.status == 0);
  CHECK(odd.output.find("skipped") != std::string::npos);

  const RunResult random = run_cli("verify --t 4 --random 2 --seed 7 --json", false);
  CHECK(random.status == 0);
  const nlohmann::json rj = nlohmann::json::parse(random.output);
  REQUIRE(rj.is_array());
  CHECK(rj.size() == 3);
  for (const auto& report : rj) CHECK(report.at("pass").get<bool>());
}

TEST_CASE("enumeration cap environment variable is honored") {
  const std::string cmd = "SYMCYCLE_ENUM_CAP=2 " + std::string(SYMCYCLE_CLI_PATH) +
                          " verify --t 4 --scope topes 2>&1";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  char buf[4096];
  std::size_t got;
  while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, got);
  const int rc = pclose(pipe);
  CHECK(WEXITSTATUS(rc) == 0);
  CHECK(out.find("enumeration oracle skipped") != std::string::npos);
}

TEST_CASE("bench subcommand emits the CSV contract") {
  const RunResult r = run_cli("bench --t 4,8 --reps 2 --csv --solve-cap 8", false);
  CHECK(r.status == 0);
  CHECK(r.output.rfind("t,rho,closed_ns,solve_ns,speedup\n", 0) == 0);
  CHECK(r.output.find("\n4,") != std::string::npos);
  CHECK(r.output.find("\n8,") != std::string::npos);

  const RunResult capped = run_cli("bench --t 16 --reps 1 --csv --solve-cap 8", false);
  CHECK(capped.status == 0);
  CHECK(capped.output.find(",NA,NA") != std::string::npos);

  const RunResult noticed = run_cli("bench --t 16 --reps 1 --csv --solve-cap 8");
  CHECK(noticed.output.find("solve skipped") != std::string::npos);
}
