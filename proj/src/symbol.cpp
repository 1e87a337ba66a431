#include "fba/symbol.hpp"

#include <deque>
#include <mutex>
#include <shared_mutex>
#include <unordered_map>

#include "fba/error.hpp"

namespace fba {
namespace {

struct SymbolTable {
  std::shared_mutex mutex;
  std::deque<std::string> names{std::string{}};  // id 0 is the invalid symbol
  std::unordered_map<std::string, std::uint32_t> ids;

  static SymbolTable& instance() {
    static SymbolTable table;
    return table;
  }
};

std::vector<std::string> split_csv(std::string_view csv) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (start <= csv.size()) {
    auto end = csv.find(',', start);
    if (end == std::string_view::npos) end = csv.size();
    auto item = csv.substr(start, end - start);
    while (!item.empty() && item.front() == ' ') item.remove_prefix(1);
    while (!item.empty() && item.back() == ' ') item.remove_suffix(1);
    if (!item.empty()) out.emplace_back(item);
    start = end + 1;
  }
  return out;
}

}  // namespace

Symbol::Symbol(std::string_view name) {
  auto& table = SymbolTable::instance();
  std::string key(name);
  {
    std::shared_lock lock(table.mutex);
    if (auto it = table.ids.find(key); it != table.ids.end()) {
      id_ = it->second;
      return;
    }
  }
  std::unique_lock lock(table.mutex);
  auto [it, inserted] = table.ids.try_emplace(key, static_cast<std::uint32_t>(table.names.size()));
  if (inserted) table.names.push_back(key);
  id_ = it->second;
}

const std::string& Symbol::name() const {
  auto& table = SymbolTable::instance();
  std::shared_lock lock(table.mutex);
  return table.names[id_];
}

bool is_identifier(std::string_view name) noexcept {
  if (name.empty()) return false;
  auto alpha = [](char c) { return (c >= 'A' && c <= 'Z') || (c >= 'a' && c <= 'z') || c == '_'; };
  if (!alpha(name.front())) return false;
  for (char c : name)
    if (!alpha(c) && !(c >= '0' && c <= '9')) return false;
  return true;
}

Alphabet::Alphabet(std::vector<std::string> omega, std::vector<std::string> xset) {
  if (omega.empty()) throw SymbolError("alphabet: omega must be nonempty");
  std::unordered_map<std::string, Kind> seen;
  auto add = [&](const std::string& name, Kind kind, std::vector<Symbol>& into) {
    if (!is_identifier(name)) throw SymbolError("alphabet: invalid symbol '" + name + "'");
    auto [it, inserted] = seen.emplace(name, kind);
    if (!inserted) {
      if (it->second != kind) throw SymbolError("alphabet: '" + name + "' is in both omega and xset");
      return;  // repeated within one set: keep first occurrence
    }
    into.emplace_back(name);
  };
  for (const auto& s : omega) add(s, Kind::omega, omega_);
  for (const auto& s : xset) add(s, Kind::x, xset_);
}

Alphabet Alphabet::from_lists(std::string_view omega_csv, std::string_view xset_csv) {
  return Alphabet(split_csv(omega_csv), split_csv(xset_csv));
}

std::optional<Decoration> Alphabet::lookup(std::string_view name) const {
  for (auto s : omega_)
    if (s.name() == name) return Decoration{s, Kind::omega};
  for (auto s : xset_)
    if (s.name() == name) return Decoration{s, Kind::x};
  return std::nullopt;
}

Decoration Alphabet::decoration(std::string_view name) const {
  if (auto d = lookup(name)) return *d;
  throw SymbolError("unknown symbol '" + std::string(name) + "'");
}

std::vector<Decoration> Alphabet::all() const {
  std::vector<Decoration> out;
  out.reserve(omega_.size() + xset_.size());
  for (auto s : xset_) out.push_back({s, Kind::x});
  for (auto s : omega_) out.push_back({s, Kind::omega});
  return out;
}

}  // namespace fba
