#include "fba/verify.hpp"

#include <algorithm>
#include <exception>
#include <mutex>
#include <sstream>
#include <thread>

#include <json.hpp>

namespace fba {

Alphabet RunConfig::alphabet(std::vector<std::string> omega_default, std::vector<std::string> xset_default) const {
  return Alphabet(omega ? *omega : std::move(omega_default), xset ? *xset : std::move(xset_default));
}

std::string SuiteReport::text(bool with_time) const {
  std::ostringstream out;
  out << "suite " << suite << ": " << (ok() ? "PASS" : "FAIL") << " (" << cases << " cases, " << failure_count
      << " failures)\n";
  for (const auto& n : notes) out << "  note: " << n << '\n';
  for (const auto& f : failures) {
    out << "  failure [" << f.check << "]";
    for (const auto& in : f.inputs) out << " " << in;
    out << "\n    lhs:\n";
    std::istringstream l(f.lhs), r(f.rhs);
    for (std::string line; std::getline(l, line);) out << "      " << line << '\n';
    out << "    rhs:\n";
    for (std::string line; std::getline(r, line);) out << "      " << line << '\n';
  }
  if (failure_count > failures.size()) out << "  (" << failure_count - failures.size() << " more failures)\n";
  if (with_time) out << "  wall time: " << wall_seconds << " s\n";
  return out.str();
}

std::string SuiteReport::json(bool with_time) const {
  nlohmann::ordered_json j;
  j["suite"] = suite;
  j["cases"] = cases;
  auto& fs = j["failures"] = nlohmann::ordered_json::array();
  for (const auto& f : failures) {
    fs.push_back({{"check", f.check}, {"inputs", f.inputs}, {"lhs", f.lhs}, {"rhs", f.rhs}});
  }
  j["ok"] = ok();
  j["failure_count"] = failure_count;
  j["notes"] = notes;
  if (with_time) j["wall_seconds"] = wall_seconds;
  return j.dump();
}

namespace detail {

void CaseRunner::run(std::size_t n, const std::function<void(std::size_t, const FailFn&)>& body) {
  struct Slot {
    std::vector<std::pair<std::size_t, Failure>> kept;
    std::size_t count = 0;
    std::size_t error_at = SIZE_MAX;
    std::exception_ptr error;
  };
  const std::size_t workers = std::max<std::size_t>(1, std::min(config_.workers, n));
  std::vector<Slot> slots(workers);

  auto work = [&](std::size_t w) {
    Slot& s = slots[w];
    for (std::size_t i = w; i < n; i += workers) {
      try {
        body(i, [&](Failure f) {
          ++s.count;
          // every worker keeps its own first few; the merge below trims
          if (s.kept.size() < kKeptFailures) s.kept.emplace_back(i, std::move(f));
        });
      } catch (...) {
        s.error_at = i;
        s.error = std::current_exception();
        return;
      }
    }
  };
  if (workers == 1) {
    work(0);
  } else {
    std::vector<std::thread> threads;
    for (std::size_t w = 0; w < workers; ++w) threads.emplace_back(work, w);
    for (auto& t : threads) t.join();
  }

  const Slot* first_error = nullptr;
  for (const auto& s : slots)
    if (s.error && (!first_error || s.error_at < first_error->error_at)) first_error = &s;
  if (first_error) std::rethrow_exception(first_error->error);

  std::vector<std::pair<std::size_t, Failure>> all;
  for (auto& s : slots) {
    report_.failure_count += s.count;
    for (auto& kf : s.kept) all.push_back(std::move(kf));
  }
  std::stable_sort(all.begin(), all.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  for (auto& [i, f] : all) {
    if (report_.failures.size() >= kKeptFailures) break;
    report_.failures.push_back(std::move(f));
  }
  report_.cases += n;
}

}  // namespace detail
}  // namespace fba
