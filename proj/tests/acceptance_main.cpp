#include <cstdio>
#include <string>

#include "ribbonkit/acceptance.hpp"

int main(int argc, char** argv) {
  const std::string filter = argc > 1 ? argv[1] : "";
  const auto results = ribbonkit::run_acceptance(filter);
  int failures = 0;
  for (const auto& r : results) {
    std::printf("[%s] %2d %-20s %7.2fs  %s\n", r.passed ? "PASS" : "FAIL", r.id, r.key.c_str(), r.seconds,
                r.title.c_str());
    std::printf("     %s\n", r.detail.c_str());
    if (!r.passed) ++failures;
  }
  std::printf("%zu checks, %d failed\n", results.size(), failures);
  return failures == 0 && !results.empty() ? 0 : 1;
}
