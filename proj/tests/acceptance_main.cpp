#include <cstdio>
#include <exception>
#include <vector>

#include <CLI11.hpp>

#include "graphlaw/oracle.hpp"

// Runs the acceptance criteria and prints one verdict line each.
// Exits nonzero when any criterion fails.
int main(int argc, char** argv) {
  CLI::App app{"acceptance criteria runner"};
  int criterion = 0;
  app.add_option("--criterion", criterion, "run one criterion (1..12)")->check(CLI::Range(1, 12));
  CLI11_PARSE(app, argc, argv);

  try {
    std::vector<graphlaw::CriterionResult> results;
    if (criterion > 0)
      results.push_back(graphlaw::run_criterion(criterion));
    else
      results = graphlaw::run_all_criteria();

    bool all = true;
    for (const graphlaw::CriterionResult& r : results) {
      std::printf("criterion %02d %-34s %s (%.2fs)%s%s\n", r.id, r.name.c_str(), r.pass ? "PASS" : "FAIL",
                  r.seconds, r.detail.empty() ? "" : " ", r.detail.c_str());
      all = all && r.pass;
    }
    return all ? 0 : 1;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 1;
  }
}
