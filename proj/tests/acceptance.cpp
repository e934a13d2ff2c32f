// Runs every check suite once with the default seed and prints one line per
// criterion. Exit status is the number of failed criteria (capped at 1).

#include <chrono>
#include <cstdio>
#include <exception>

#include "checks.hpp"

int main() {
  const gsf::check::CheckOptions opts;
  int failed = 0;
  int index = 0;
  for (const auto& entry : gsf::check::suites()) {
    ++index;
    const auto t0 = std::chrono::steady_clock::now();
    gsf::check::SuiteReport r;
    try {
      r = entry.run(opts);
    } catch (const std::exception& e) {
      r.suite = entry.name;
      r.ok = false;
      r.note = std::string("exception: ") + e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (!r.ok) ++failed;
    std::printf("%s %2d %-15s %-48s %d/%d max_error=%.3g  %.1fs%s%s\n", r.ok ? "PASS" : "FAIL", index,
                entry.name, entry.title, r.passed, r.cases, r.max_error, secs, r.note.empty() ? "" : "  ",
                r.note.c_str());
    std::fflush(stdout);
  }
  std::printf("%d of %d criteria passed\n", index - failed, index);
  return failed == 0 ? 0 : 1;
}
