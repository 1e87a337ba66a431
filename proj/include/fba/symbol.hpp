#pragma once

#include <compare>
#include <optional>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace fba {

/// Interned identifier. Two symbols with the same spelling share one id for
/// the lifetime of the process; the table only grows.
class Symbol {
 public:
  Symbol() = default;
  explicit Symbol(std::string_view name);

  const std::string& name() const;
  std::uint32_t id() const noexcept { return id_; }
  bool valid() const noexcept { return id_ != 0; }

  friend bool operator==(Symbol a, Symbol b) noexcept { return a.id_ == b.id_; }

 private:
  std::uint32_t id_ = 0;
};

enum class Kind : std::uint8_t { omega, x };

/// A vertex label: symbol plus the alphabet component it came from.
struct Decoration {
  Symbol symbol;
  Kind kind = Kind::omega;

  friend bool operator==(const Decoration&, const Decoration&) = default;
};

/// Returns true if `name` matches [A-Za-z_][A-Za-z0-9_]*.
bool is_identifier(std::string_view name) noexcept;

/// The two disjoint, finite, ordered symbol sets Omega (internal and leaf
/// labels) and X (leaf-only labels).
class Alphabet {
 public:
  Alphabet(std::vector<std::string> omega, std::vector<std::string> xset);

  /// Parses comma-separated lists, e.g. ("a,b", "x").
  static Alphabet from_lists(std::string_view omega_csv, std::string_view xset_csv);

  const std::vector<Symbol>& omega() const noexcept { return omega_; }
  const std::vector<Symbol>& xset() const noexcept { return xset_; }

  std::optional<Decoration> lookup(std::string_view name) const;
  Decoration decoration(std::string_view name) const;  // throws SymbolError

  /// X first, then Omega, in declaration order.
  std::vector<Decoration> all() const;

 private:
  std::vector<Symbol> omega_;
  std::vector<Symbol> xset_;
};

}  // namespace fba
