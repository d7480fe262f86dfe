// One line per acceptance criterion; exit status 1 if any fails.

#include <iostream>

#include <CLI11.hpp>

#include "dinf/acceptance.hpp"

#ifndef DINF_DATA_DIR
#define DINF_DATA_DIR "data"
#endif

int main(int argc, char** argv) {
  CLI::App app{"Acceptance criteria 1-10"};
  dinf::acceptance::Config cfg{DINF_DATA_DIR};
  app.add_option("--data", cfg.data_dir, "Data directory");
  app.add_option("--seed", cfg.seed, "Seed for random posets and concatenations");
  CLI11_PARSE(app, argc, argv);

  bool ok = true;
  for (const auto& c : dinf::acceptance::run_all(cfg)) {
    std::cout << dinf::acceptance::line(c) << "\n";
    ok = ok && c.pass;
  }
  return ok ? 0 : 1;
}
