#include <sys/wait.h>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <doctest.h>
#include <json.hpp>

namespace {

using json = nlohmann::json;

struct CliResult {
  int exit_code = -1;
  std::string out;
  std::string err;
};

CliResult run_cli(const std::string& args) {
  const std::string err_path = "cli_stderr.txt";
  std::string cmd = "\"" GRAPHLAW_CLI_PATH "\" " + args + " 2>" + err_path;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  CliResult r;
  char buf[4096];
  std::size_t got = 0;
  while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, got);
  int status = pclose(pipe);
  REQUIRE(WIFEXITED(status));
  r.exit_code = WEXITSTATUS(status);
  std::ifstream err_in(err_path);
  std::ostringstream err_buf;
  err_buf << err_in.rdbuf();
  r.err = err_buf.str();
  return r;
}

void write_fixture(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  REQUIRE(out.good());
  out << text;
}

json parse_line(const std::string& out) {
  REQUIRE(!out.empty());
  REQUIRE(out.back() == '\n');
  return json::parse(out);
}

const char* path3_json = R"({"edges":[[0,1],[1,2]],"n":3})";
const char* chain_dag_json = R"({"edges":[[0,1],[1,2]],"n":3})";
const char* fork_dag_json = R"({"edges":[[1,0],[1,2]],"n":3})";
const char* collider_dag_json = R"({"edges":[[0,2],[1,2]],"n":3})";
const char* vs_dagoid_json = R"({"immoralities":[[0,2,1]],"skeleton":{"edges":[[0,2],[1,2]],"n":3}})";

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("enumerate counts and streams") {
  CliResult r = run_cli("enumerate --n 4 --count-only");
  CHECK(r.exit_code == 0);
  CHECK(r.out == "61\n");

  CHECK(run_cli("enumerate --kind dag --n 3 --count-only").out == "25\n");
  CHECK(run_cli("enumerate --kind dagoid --n 3 --count-only").out == "11\n");

  r = run_cli("enumerate --n 3");
  CHECK(r.exit_code == 0);
  std::istringstream lines(r.out);
  std::vector<std::string> graphs;
  for (std::string line; std::getline(lines, line);) graphs.push_back(line);
  REQUIRE(graphs.size() == 8);
  CHECK(graphs.front() == R"({"edges":[],"n":3})");

  r = run_cli("enumerate --n 2 --format table");
  CHECK(r.out == "(no edges)\n0-1\n");
}

TEST_CASE("tvec output is exact and stable") {
  write_fixture("fx_path3.json", path3_json);
  CliResult first = run_cli("tvec --graph fx_path3.json");
  CHECK(first.exit_code == 0);
  CHECK(first.out ==
        R"({"entries":[{"set":[1],"value":-1.0},{"set":[0,1],"value":1.0},{"set":[1,2],"value":1.0}],"n":3})"
        "\n");
  CHECK(run_cli("tvec --graph fx_path3.json").out == first.out);

  write_fixture("fx_collider_dag.json", collider_dag_json);
  json t = parse_line(run_cli("tvec --dag fx_collider_dag.json").out);
  CHECK(t["n"] == 3);
  bool has_triple = false;
  for (const json& e : t["entries"])
    if (e["set"] == json::array({0, 1, 2})) has_triple = (e["value"] == 1.0);
  CHECK(has_triple);

  write_fixture("fx_vs.json", vs_dagoid_json);
  CHECK(parse_line(run_cli("tvec --dagoid fx_vs.json").out) == t);
}

TEST_CASE("law-eval scores builtins") {
  write_fixture("fx_path3.json", path3_json);
  CliResult r = run_cli("law-eval --law uniform --graph fx_path3.json");
  CHECK(r.exit_code == 0);
  CHECK(r.out == R"({"log_density":0.0})"
                 "\n");

  json out = parse_line(run_cli("law-eval --law edge-bernoulli --psi 0.25 --graph fx_path3.json").out);
  CHECK(out["log_density"].get<double>() == doctest::Approx(2.0 * std::log(0.25 / 0.75)).epsilon(1e-12));

  write_fixture("fx_vs.json", vs_dagoid_json);
  out = parse_line(run_cli("law-eval --law class-size --dagoid fx_vs.json").out);
  CHECK(out["log_density"].get<double>() == doctest::Approx(std::log(1.0 / 25.0)).epsilon(1e-12));
}

TEST_CASE("check-sm passes uniform and reports the armstrong violation") {
  CliResult r = run_cli("check-sm --law uniform --n 3");
  CHECK(r.exit_code == 0);
  json out = parse_line(r.out);
  CHECK(out["ok"] == true);
  CHECK(out["witness"].is_null());
  CHECK(out["covering_pairs"].get<int>() > 0);
  CHECK(out["identities"].get<int>() > 0);

  r = run_cli("check-sm --law armstrong --n 3");
  CHECK(r.exit_code == 0);
  out = parse_line(r.out);
  CHECK(out["ok"] == false);
  const json& w = out["witness"];
  REQUIRE(!w.is_null());
  CHECK(w["lhs"].get<double>() == doctest::Approx(1.0 / 48.0).epsilon(1e-12));
  CHECK(w["rhs"].get<double>() == doctest::Approx(1.0 / 144.0).epsilon(1e-12));
  CHECK(run_cli("check-sm --law armstrong --n 3").out == r.out);

  out = parse_line(run_cli("check-sm --kind dagoid --law uniform --n 3").out);
  CHECK(out["ok"] == true);
  CHECK(out["events"].get<int>() > 0);

  out = parse_line(run_cli("check-sm --kind dagoid --law class-size --n 3").out);
  CHECK(out["ok"] == false);
  CHECK(!out["witness"].is_null());
}

TEST_CASE("check-meta covers builtin and explicit families") {
  CliResult r = run_cli("check-meta --family forest --n 4");
  CHECK(r.exit_code == 0);
  json out = parse_line(r.out);
  CHECK(out["ok"] == true);
  CHECK(out["members"] == 38);

  write_fixture("fx_family.json",
                R"({"n":3,"graphs":[{"edges":[],"n":3},{"edges":[[0,1],[1,2]],"n":3}]})");
  out = parse_line(run_cli("check-meta --graphs fx_family.json").out);
  CHECK(out["ok"] == false);
  REQUIRE(!out["witness"].is_null());
  CHECK(out["witness"]["product"]["edges"].size() == 1);

  write_fixture("fx_lo.json", R"({"edges":[[0,1]],"n":3})");
  write_fixture("fx_hi.json", path3_json);
  out = parse_line(run_cli("check-meta --family sandwich --lo fx_lo.json --hi fx_hi.json").out);
  CHECK(out["ok"] == true);
  CHECK(out["members"] == 2);
}

TEST_CASE("posterior reads omega, hyper, and csv files") {
  write_fixture("fx_omega0.json", R"({"entries":[],"n":3})");
  write_fixture("fx_hyper.json", R"({"delta":3.0,"phi":[[1.0,0.0,0.0],[0.0,1.0,0.0],[0.0,0.0,1.0]]})");
  write_fixture("fx_data.csv", "0.5,-0.25,1.0\n0.1,0.2,-0.3\n");
  CliResult r = run_cli("posterior --omega fx_omega0.json --hyper fx_hyper.json --data fx_data.csv");
  CHECK(r.exit_code == 0);
  json out = parse_line(r.out);
  CHECK(out["n"] == 3);
  CHECK(!out["entries"].empty());

  write_fixture("fx_data_hdr.csv", "a,b,c\n0.5,-0.25,1.0\n0.1,0.2,-0.3\n");
  CliResult with_header =
      run_cli("posterior --omega fx_omega0.json --hyper fx_hyper.json --data fx_data_hdr.csv --header");
  CHECK(with_header.out == r.out);
}

TEST_CASE("map picks the heaviest graph and class") {
  write_fixture("fx_omega_strong.json",
                R"({"entries":[{"set":[0,1],"value":10.0},{"set":[0,2],"value":-1.0},)"
                R"({"set":[1,2],"value":-1.0},{"set":[0,1,2],"value":-1.0}],"n":3})");
  CliResult r = run_cli("map --omega fx_omega_strong.json");
  CHECK(r.exit_code == 0);
  CHECK(r.out == R"({"edges":[[0,1]],"n":3})"
                 "\n");

  json out = parse_line(run_cli("map --omega fx_omega_strong.json --kind dagoid").out);
  CHECK(out["skeleton"]["edges"] == json::array({json::array({0, 1})}));
  CHECK(out["immoralities"].empty());
}

TEST_CASE("mcmc is seed-reproducible and merges chains") {
  write_fixture("fx_omega0.json", R"({"entries":[],"n":3})");
  CliResult first = run_cli("mcmc --omega fx_omega0.json --steps 2000 --burn-in 100 --seed 7");
  CHECK(first.exit_code == 0);
  CHECK(run_cli("mcmc --omega fx_omega0.json --steps 2000 --burn-in 100 --seed 7").out == first.out);

  json out = parse_line(first.out);
  CHECK(out["steps"] == 1900);
  double rate = out["acceptance_rate"].get<double>();
  CHECK(rate > 0.0);
  CHECK(rate <= 1.0);
  CHECK(out["edge_freq"].size() == 3);
  CHECK(!out["top_graphs"].empty());

  out = parse_line(run_cli("mcmc --omega fx_omega0.json --steps 2000 --burn-in 100 --seed 7 --chains 2").out);
  CHECK(out["steps"] == 3800);
}

TEST_CASE("dag-equiv judges by both criteria") {
  write_fixture("fx_chain_dag.json", chain_dag_json);
  write_fixture("fx_fork_dag.json", fork_dag_json);
  write_fixture("fx_collider_dag.json", collider_dag_json);

  CliResult r = run_cli("dag-equiv --dag fx_chain_dag.json fx_fork_dag.json");
  CHECK(r.exit_code == 0);
  json out = parse_line(r.out);
  CHECK(out["equivalent"] == true);
  CHECK(out["same_skeleton_and_immoralities"] == true);
  CHECK(out["same_d_clique_vector"] == true);

  out = parse_line(run_cli("dag-equiv --dag fx_chain_dag.json fx_collider_dag.json").out);
  CHECK(out["equivalent"] == false);
  CHECK(out["same_skeleton_and_immoralities"] == false);
  CHECK(out["same_d_clique_vector"] == false);
}

TEST_CASE("dagoid lists every member of the class") {
  write_fixture("fx_collider_dag.json", collider_dag_json);
  json out = parse_line(run_cli("dagoid --dag fx_collider_dag.json").out);
  CHECK(out["dagoid"]["immoralities"] == json::array({json::array({0, 2, 1})}));
  CHECK(out["members"].size() == 1);

  write_fixture("fx_chain_dag.json", chain_dag_json);
  out = parse_line(run_cli("dagoid --dag fx_chain_dag.json").out);
  CHECK(out["dagoid"]["immoralities"].empty());
  CHECK(out["members"].size() == 3);
}

TEST_CASE("remainder splits a class at an ancestral set") {
  write_fixture("fx_vs.json", vs_dagoid_json);
  CliResult r = run_cli("remainder --dagoid fx_vs.json --set 0 --set 1");
  CHECK(r.exit_code == 0);
  json out = parse_line(r.out);
  CHECK(out["induced"]["skeleton"]["edges"].empty());
  CHECK(out["remainder"]["skeleton"]["edges"].size() == 3);

  r = run_cli("remainder --dagoid fx_vs.json --set 0 --set 2");
  CHECK(r.exit_code == 1);
  CHECK(json::parse(r.err)["error"]["code"] == "NotAncestralInDagoid");

  r = run_cli("remainder --dagoid fx_vs.json --set 5");
  CHECK(r.exit_code == 1);
  CHECK(json::parse(r.err)["error"]["code"] == "BadInput");
}

TEST_CASE("usage errors exit 2 and domain errors exit 1") {
  CHECK(run_cli("frobnicate").exit_code == 2);
  CHECK(run_cli("").exit_code == 2);
  write_fixture("fx_omega0.json", R"({"entries":[],"n":3})");
  CHECK(run_cli("mcmc --omega fx_omega0.json --steps 10").exit_code == 2);
  CHECK(run_cli("check-sm --law uniform --kind banana --n 3").exit_code == 2);

  CliResult help = run_cli("--help");
  CHECK(help.exit_code == 0);
  CHECK(help.out.find("enumerate") != std::string::npos);

  write_fixture("fx_path3.json", path3_json);
  CliResult r = run_cli("law-eval --law nosuch --graph fx_path3.json");
  CHECK(r.exit_code == 1);
  CHECK(json::parse(r.err)["error"]["code"] == "UnknownLaw");

  r = run_cli("tvec --graph no_such_file.json");
  CHECK(r.exit_code == 1);
  CHECK(json::parse(r.err)["error"]["code"] == "BadInput");
}

TEST_CASE("oracle runs a single criterion with stable output") {
  CliResult first = run_cli("oracle --criterion 5");
  CHECK(first.exit_code == 0);
  json out = parse_line(first.out);
  CHECK(out["ok"] == true);
  REQUIRE(out["criteria"].size() == 1);
  CHECK(out["criteria"][0]["id"] == 5);
  CHECK(out["criteria"][0]["pass"] == true);
  CHECK(run_cli("oracle --criterion 5").out == first.out);
}

}
