// Drives the installed-style CLI binary end to end: spec'd subcommands, JSON
// schemas, exit codes, and byte-identical reruns.

#include <doctest.h>
#include <json.hpp>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>

#include "ltqdiag/graph.hpp"
#include "ltqdiag/serial.hpp"
#include "ltqdiag/syndrome.hpp"

using namespace ltqdiag;
using njson = nlohmann::json;

namespace {

struct RunResult {
  int exit_code = -1;
  std::string out;
};

RunResult run_cli(const std::string& args) {
  const std::string cmd = std::string(LTQDIAG_CLI_PATH) + " " + args + " 2>/dev/null";
  RunResult result;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::array<char, 4096> buf;
  size_t got = 0;
  while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) result.out.append(buf.data(), got);
  const int status = pclose(pipe);
  result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return result;
}

std::filesystem::path temp_file(const std::string& name, const std::string& content) {
  const auto path = std::filesystem::temp_directory_path() / ("ltqdiag_test_" + name);
  std::ofstream out(path, std::ios::binary);
  out << content;
  return path;
}

}  // namespace

TEST_CASE("graph subcommand") {
  const RunResult edges = run_cli("graph --n 2 --format edges");
  CHECK(edges.exit_code == 0);
  CHECK(edges.out == "00 01\n00 10\n01 11\n10 11\n");

  const RunResult doc = run_cli("graph --n 4 --format json");
  CHECK(doc.exit_code == 0);
  CHECK(njson::parse(doc.out)["edges"].size() == 32);

  CHECK(run_cli("graph --n 1").exit_code == 2);
  CHECK(run_cli("graph --n 4 --format nope").exit_code == 2);
  CHECK(run_cli("graph").exit_code == 2);

  const RunResult dot = run_cli("graph --n 2 --format dot");
  CHECK(dot.exit_code == 0);
  CHECK(dot.out.find("\"00\" -- \"01\";") != std::string::npos);
}

TEST_CASE("check subcommand") {
  const auto empty = temp_file("empty.txt", "");
  const RunResult ok = run_cli("check --n 4 --g 1 " + empty.string());
  CHECK(ok.exit_code == 0);
  CHECK(njson::parse(ok.out)["is_gng"] == true);

  const auto neighborhood = temp_file("nbhd.txt", "0001\n0010\n0100\n1000\n");
  const RunResult bad = run_cli("check --n 4 --g 1 " + neighborhood.string());
  CHECK(bad.exit_code == 1);
  CHECK(njson::parse(bad.out)["violating_vertex"] == "0000");

  const auto f2 = temp_file("f2.txt", "0000\n0001\n0010\n0011\n0100\n0110\n1000\n1010\n");
  CHECK(run_cli("check --n 4 --g 1 " + f2.string()).exit_code == 0);

  const auto garbage = temp_file("garbage.txt", "01x1\n");
  CHECK(run_cli("check --n 4 --g 1 " + garbage.string()).exit_code == 2);
  CHECK(run_cli("check --n 4 --g 1 /nonexistent/file").exit_code == 2);
}

TEST_CASE("kappa subcommand") {
  const RunResult found = run_cli("kappa --n 4 --g 1 --bound 7");
  CHECK(found.exit_code == 0);
  CHECK(njson::parse(found.out)["size"] == 6);

  const RunResult none = run_cli("kappa --n 4 --g 0 --bound 3");
  CHECK(none.exit_code == 1);
  CHECK(njson::parse(none.out)["none_found_below_bound"] == true);

  CHECK(run_cli("kappa --n 4 --g 1 --bound 7 --budget 10").exit_code == 3);
  CHECK(run_cli("kappa --n 4 --g 3 --bound 5").exit_code == 2);
}

TEST_CASE("witness subcommand") {
  const RunResult r = run_cli("witness --n 4 --g 1");
  CHECK(r.exit_code == 0);
  const njson doc = njson::parse(r.out);
  CHECK(doc["f1"] == njson::array({"0001", "0011", "0100", "0110", "1000", "1010"}));
  CHECK(doc["f2"].size() == 8);
}

TEST_CASE("syndrome and diagnose subcommands") {
  const auto fault = temp_file("fault.txt", "0001\n");
  const RunResult syn = run_cli("syndrome --n 4 --model pmc --policy all_zero " + fault.string());
  REQUIRE(syn.exit_code == 0);
  CHECK(njson::parse(syn.out)["tests"].size() == 64);

  const auto syn_file = temp_file("syn.json", syn.out);
  const RunResult diag = run_cli("diagnose --model pmc --g 1 --bound 7 " + syn_file.string());
  CHECK(diag.exit_code == 0);
  CHECK(diag.out == "{\"faulty\":[\"0001\"]}\n");

  // All-zero syndrome: the empty set is the unique candidate.
  const auto none = temp_file("nofault.txt", "");
  const RunResult clean =
      run_cli("syndrome --n 4 --model pmc --policy all_zero " + none.string());
  const auto clean_file = temp_file("clean.json", clean.out);
  const RunResult empty_diag =
      run_cli("diagnose --model pmc --g 1 --bound 7 " + clean_file.string());
  CHECK(empty_diag.exit_code == 0);
  CHECK(empty_diag.out == "{\"faulty\":[]}\n");

  // Model mismatch and malformed input are usage errors.
  CHECK(run_cli("diagnose --model mm* --g 1 --bound 7 " + syn_file.string()).exit_code == 2);
  const auto bad = temp_file("bad.json", "{\"model\":\"pmc\"");
  CHECK(run_cli("diagnose --model pmc --g 1 --bound 7 " + bad.string()).exit_code == 2);
  CHECK(run_cli("diagnose --model pmc --g 1 --bound 7 --n 5 " + syn_file.string()).exit_code ==
        2);
}

TEST_CASE("diagnose reports ambiguity past the diagnosability") {
  // Syndrome consistent with both extremal witness sets at n=4, g=1.
  const LtqGraph g = LtqGraph::build(4);
  const VertexSet f1 = from_labels({"0001", "0011", "0100", "0110", "1000", "1010"}, 4);
  PmcSyndrome s = make_empty_pmc_syndrome(g);
  for (uint32_t u = 0; u < 16; ++u) {
    for (uint32_t v : g.neighbor_labels(u)) set_pmc_outcome(g, s, u, v, f1.contains(v) ? 1 : 0);
  }
  const auto path = temp_file("ambiguous.json", syndrome_json(g, s));
  const RunResult r = run_cli("diagnose --model pmc --g 1 --bound 8 " + path.string());
  CHECK(r.exit_code == 1);
  const njson doc = njson::parse(r.out);
  REQUIRE(doc.contains("ambiguity"));
  CHECK(doc["ambiguity"].size() >= 2);
}

TEST_CASE("tg subcommand") {
  const RunResult brute = run_cli("tg --n 4 --g 1 --model pmc --method brute");
  CHECK(brute.exit_code == 0);
  const njson doc = njson::parse(brute.out);
  CHECK(doc["value"] == 7);
  CHECK(doc["exact"] == true);
  CHECK(doc["witness"][0].size() == 6);

  CHECK(run_cli("tg --n 4 --g 1 --model pmc --method formula").exit_code == 0);
  CHECK(run_cli("tg --n 5 --g 1 --model pmc --method witness").exit_code == 0);

  // Outside the closed form's range: value reported as derived data, exit 0.
  const RunResult mm4 = run_cli("tg --n 4 --g 1 --model mm* --method brute");
  CHECK(mm4.exit_code == 0);
  CHECK(njson::parse(mm4.out)["value"] == 6);

  CHECK(run_cli("tg --n 3 --g 1 --model pmc --method formula").exit_code == 2);
  CHECK(run_cli("tg --n 5 --g 1 --model pmc --method brute").exit_code == 3);
}

TEST_CASE("verify-all on a cheap criterion subset") {
  const RunResult r = run_cli("verify-all --criteria 1,4");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("[ 1] PASS") != std::string::npos);
  CHECK(r.out.find("[ 4] PASS") != std::string::npos);
  CHECK(r.out.find("2 of 2 criteria passed") != std::string::npos);

  const RunResult as_json = run_cli("verify-all --criteria 4 --output json");
  CHECK(as_json.exit_code == 0);
  CHECK(njson::parse(as_json.out)[0]["pass"] == true);
}

TEST_CASE("identical invocations produce byte-identical output") {
  const std::string cmds[] = {
      "graph --n 3 --format json",
      "witness --n 5 --g 2",
      "kappa --n 4 --g 1 --bound 7",
      "tg --n 4 --g 1 --model pmc --method formula",
  };
  for (const auto& cmd : cmds) {
    const RunResult a = run_cli(cmd);
    const RunResult b = run_cli(cmd);
    CHECK(a.exit_code == b.exit_code);
    CHECK(a.out == b.out);
  }
  const auto fault = temp_file("det.txt", "0011\n1100\n");
  const std::string syn = "syndrome --n 4 --model mm* --policy random --seed 7 " + fault.string();
  CHECK(run_cli(syn).out == run_cli(syn).out);

  // Solver outputs are worker-count independent.
  const RunResult w1 = run_cli("tg --n 4 --g 2 --model mm* --method brute --workers 1");
  const RunResult w0 = run_cli("tg --n 4 --g 2 --model mm* --method brute --workers 0");
  const njson d1 = njson::parse(w1.out);
  njson d0 = njson::parse(w0.out);
  d0["elapsed_ms"] = d1["elapsed_ms"];  // timing is the one nondeterministic field
  CHECK(d0 == d1);
}
