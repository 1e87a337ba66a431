// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fail.
// Every bound, alphabet and time limit is pinned here rather than taken from
// the suite defaults.

#include <fba/verify.hpp>

#include <chrono>
#include <cstdio>
#include <exception>
#include <string>
#include <vector>

namespace {

using fba::RunConfig;

struct Run {
  std::string suite;
  RunConfig config;
};

struct Criterion {
  int number;
  std::string title;
  double limit_seconds;
  std::vector<Run> runs;
};

RunConfig bounded(std::size_t n, std::vector<std::string> omega) {
  RunConfig c;
  c.max_vertices = n;
  c.omega = std::move(omega);
  c.xset = std::vector<std::string>{"x"};
  return c;
}

RunConfig default_alphabets(std::size_t n) {
  RunConfig c;
  c.max_vertices = n;
  return c;
}

const std::vector<std::string> kAB{"a", "b"};
const std::vector<std::string> kA{"a"};

std::vector<Criterion> criteria() {
  return {
      {1, "golden examples", 1.0, {{"examples-golden", RunConfig{}}}},
      {2, "coassociativity", 60.0, {{"coassoc", bounded(5, kAB)}}},
      {3, "weighted derivation and cocycle", 60.0, {{"derivation", bounded(5, kAB)}, {"cocycle", bounded(4, kAB)}}},
      {4, "recursive vs biideal coproduct", 120.0, {{"rec-vs-biideal", bounded(6, kAB)}}},
      // 5 vertices for the laws, pairs of total 4 for multiplicativity.
      {5, "counit", 30.0, {{"counit", bounded(5, kAB)}}},
      {6, "biideal census", 30.0, {{"biideal-count", bounded(6, kAB)}}},
      // x up to 4 vertices, y and z up to 3.
      {7, "dual product duality", 120.0, {{"duality", bounded(4, kA)}}},
      {8, "star term census", 60.0, {{"star-census", bounded(4, kAB)}}},
      // The suite's own alphabets: star on total 5 over {a,b}, weighted star
      // on total 4 over {a}.
      {9, "star associativity", 120.0, {{"star-assoc", default_alphabets(5)}}},
      // phi = phi_subsets to 5; composition and intertwining to 4.
      {10, "phi laws", 120.0, {{"phi-laws", bounded(5, kAB)}}},
      {11, "theta laws", 30.0, {{"theta-laws", bounded(4, kAB)}}},
      {12, "pre-Lie, Jacobi, closed form", 300.0,
       {{"prelie", bounded(5, kA)}, {"jacobi", bounded(5, kA)}, {"prelie-closed-form", bounded(5, kAB)}}},
  };
}

}  // namespace

int main() {
  int failed = 0;
  for (const auto& c : criteria()) {
    bool ok = true;
    std::size_t cases = 0;
    std::string detail;
    auto start = std::chrono::steady_clock::now();
    for (const auto& run : c.runs) {
      try {
        auto report = fba::run_suite(run.suite, run.config);
        cases += report.cases;
        if (!report.ok()) {
          ok = false;
          detail += " " + run.suite + ": " + std::to_string(report.failure_count) + " failures;";
        }
      } catch (const std::exception& e) {
        ok = false;
        detail += " " + run.suite + ": " + e.what() + ";";
      }
    }
    double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (seconds >= c.limit_seconds) {
      ok = false;
      detail += " over the time limit;";
    }
    if (!ok) ++failed;
    std::printf("criterion %2d %-34s %s  (%zu cases, %.2f s, limit %.0f s)%s\n", c.number, c.title.c_str(),
                ok ? "PASS" : "FAIL", cases, seconds, c.limit_seconds, detail.c_str());
    std::fflush(stdout);
  }
  std::printf("%d of 12 criteria failed\n", failed);
  return failed ? 1 : 0;
}
