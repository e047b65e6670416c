// One line per acceptance criterion; exits nonzero if any fails.

#include <array>
#include <chrono>
#include <cstdio>
#include <iostream>
#include <string>

#include "salg/selftest.hpp"

namespace {

constexpr double kPerCheckSeconds = 10.0;

std::string capture(const std::string& command, int& status) {
  std::string out;
  FILE* pipe = popen(command.c_str(), "r");
  if (!pipe) {
    status = -1;
    return out;
  }
  std::array<char, 4096> buf;
  std::size_t n = 0;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), n);
  status = pclose(pipe);
  return out;
}

}  // namespace

int main() {
  const std::uint64_t seed = 1;
  bool all = true;

  for (int id = 1; id <= 9; ++id) {
    const auto start = std::chrono::steady_clock::now();
    const auto results = salg::run_selftest(seed, {id});
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const salg::CriterionResult& r = results.front();
    const bool ok = r.ok && secs < kPerCheckSeconds;
    all = all && ok;
    std::printf("criterion %d: %s  %s (%.2fs)\n", id, ok ? "PASS" : "FAIL", r.title.c_str(), secs);
    if (!ok) {
      for (const auto& d : r.details) std::printf("    %s\n", d.c_str());
      if (secs >= kPerCheckSeconds) std::printf("    over the %.0fs budget\n", kPerCheckSeconds);
    }
  }

  const std::string command = std::string("\"") + SALG_CLI_PATH + "\" selftest --json --seed " +
                              std::to_string(seed) + " 2>&1";
  int first_status = 0, second_status = 0;
  const std::string first = capture(command, first_status);
  const std::string second = capture(command, second_status);
  const bool same = first_status == 0 && second_status == 0 && !first.empty() && first == second;
  all = all && same;
  std::printf("criterion 10: %s  selftest --json is byte-identical across two runs (%zu bytes)\n",
              same ? "PASS" : "FAIL", first.size());
  if (!same) std::printf("    exit statuses %d and %d\n", first_status, second_status);

  std::fflush(stdout);
  return all ? 0 : 1;
}
