#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace artin::cli {

enum Exit { kOk = 0, kUsage = 1, kHypothesis = 2 };

struct Config {
  std::string command;
  std::string presentation;
  std::vector<std::string> words;
  bool trace = false;
  bool oracle_check = false;
  std::size_t oracle_cap = 0;  // 0: no oracle run for `equal`
  bool memoized = false;
  bool bypass_diagram_check = false;
  std::uint64_t seed = 20240611;
  std::vector<std::size_t> lengths{64, 128, 256, 512};
  std::size_t samples = 20;
};

int run(const Config& cfg, std::ostream& out, std::ostream& err);

}  // namespace artin::cli
