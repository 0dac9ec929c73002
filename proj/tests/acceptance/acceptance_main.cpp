// Runs every acceptance check at full size and prints one line each:
//   PASS|FAIL  <n>  <name>  (<seconds>s)  <detail>
// Exit status is the number of failures (capped at 1).

#include <CLI11.hpp>

#include <cstdint>
#include <cstdio>

#include "lso/verify.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Acceptance checks for the locality-sensitive ordering library"};
  std::uint64_t seed = 20240601;
  app.add_option("--seed", seed, "Base RNG seed");
  CLI11_PARSE(app, argc, argv);

  int index = 0;
  int failures = 0;
  lso::verify::run_acceptance(seed, [&](const lso::verify::SuiteResult& r) {
    ++index;
    if (!r.passed) ++failures;
    std::printf("%s  %2d  %s  (%.1fs)  %s\n", r.passed ? "PASS" : "FAIL", index, r.name.c_str(),
                r.seconds, r.detail.c_str());
    std::fflush(stdout);
  });
  std::printf("%d/%d passed\n", index - failures, index);
  return failures == 0 ? 0 : 1;
}
