#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "tworoots/diagram.hpp"

namespace tworoots::cli {

struct CheckResult {
  std::string id;     // AC1 .. AC10
  std::string name;
  bool pass = false;
  std::string detail;
  double seconds = 0;
};

struct VerifyOptions {
  std::uint64_t seed = 1;
  std::uint64_t max_order = 60000;  // largest |W| for kernel closures
  std::uint64_t words = 10000;      // random words per infinite type
};

std::vector<std::string> suite_names();
std::vector<CheckResult> run_suite(const std::string& suite, const VerifyOptions& opt);

// Classical orders: (n+1)! for A_n, 2^(n-1) n! for D_n, E6/E7/E8; 0 otherwise.
std::uint64_t weyl_group_order(const Diagram& d);

}  // namespace tworoots::cli
