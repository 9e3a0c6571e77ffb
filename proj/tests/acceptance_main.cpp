// Acceptance suite: runs every verification criterion at full strength and
// prints one pass/fail line per criterion. Exits nonzero when any fails.
//
//   ltqdiag_acceptance [--criteria 1,2,...] [--workers N] [--budget N]

#include <cstdint>
#include <cstdlib>
#include <iostream>
#include <sstream>
#include <string>

#include "ltqdiag/verification.hpp"

namespace {

std::vector<int> parse_ids(const std::string& arg) {
  std::vector<int> ids;
  std::stringstream in(arg);
  std::string item;
  while (std::getline(in, item, ',')) {
    if (!item.empty()) ids.push_back(std::stoi(item));
  }
  return ids;
}

}  // namespace

int main(int argc, char** argv) {
  ltqdiag::AcceptanceOptions opts;
  for (int i = 1; i < argc; ++i) {
    const std::string arg = argv[i];
    if (arg == "--criteria" && i + 1 < argc) {
      opts.criteria = parse_ids(argv[++i]);
    } else if (arg == "--workers" && i + 1 < argc) {
      opts.workers = static_cast<unsigned>(std::stoul(argv[++i]));
    } else if (arg == "--budget" && i + 1 < argc) {
      opts.budget = std::stoull(argv[++i]);
    } else {
      std::cerr << "usage: ltqdiag_acceptance [--criteria 1,2,...] [--workers N] [--budget N]\n";
      return 2;
    }
  }

  const auto results = ltqdiag::run_acceptance(opts);
  std::cout << ltqdiag::acceptance_table(results);
  for (const auto& row : results) {
    if (!row.pass) return 1;
  }
  return 0;
}
