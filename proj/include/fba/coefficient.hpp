#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "fba/rational.hpp"

namespace fba {

/// lambda^l * mu^m * nu^n. Only the lambda exponent may be negative.
struct Monomial {
  std::int32_t l = 0;
  std::uint32_t m = 0;
  std::uint32_t n = 0;

  friend bool operator==(const Monomial&, const Monomial&) = default;
  friend Monomial operator*(const Monomial& a, const Monomial& b) {
    return {a.l + b.l, a.m + b.m, a.n + b.n};
  }
  std::int64_t degree() const { return std::int64_t{l} + m + n; }
};

/// Rendering order: ascending total degree, then descending (l, m, n).
bool monomial_less(const Monomial& a, const Monomial& b);

/// Element of Q[mu, nu][lambda, 1/lambda], kept as a sorted list of nonzero
/// terms so that structural equality is ring equality.
class Coefficient {
 public:
  using Term = std::pair<Monomial, Rational>;

  Coefficient() = default;  // zero
  Coefficient(long c) : Coefficient(Rational(c)) {}  // NOLINT(google-explicit-constructor)
  Coefficient(const Rational& c);                    // NOLINT(google-explicit-constructor)
  Coefficient(const Rational& c, Monomial m);

  static Coefficient lambda(std::int32_t power = 1) { return Coefficient(Rational(1), {power, 0, 0}); }
  static Coefficient mu(std::uint32_t power = 1) { return Coefficient(Rational(1), {0, power, 0}); }
  static Coefficient nu(std::uint32_t power = 1) { return Coefficient(Rational(1), {0, 0, power}); }

  /// Parses the canonical text form, e.g. "-l + m - l*n" or "-m*l^-2".
  static Coefficient parse(std::string_view text);

  const std::vector<Term>& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  bool is_polynomial() const;  // no negative lambda power
  /// The rational coefficient of `m` (zero when absent).
  Rational at(const Monomial& m) const;

  Coefficient& operator+=(const Coefficient& o);
  Coefficient& operator-=(const Coefficient& o);
  Coefficient& operator*=(const Coefficient& o);
  friend Coefficient operator+(Coefficient a, const Coefficient& b) { return a += b; }
  friend Coefficient operator-(Coefficient a, const Coefficient& b) { return a -= b; }
  friend Coefficient operator*(const Coefficient& a, const Coefficient& b);
  friend Coefficient operator-(Coefficient a);
  friend bool operator==(const Coefficient& a, const Coefficient& b) { return a.terms_ == b.terms_; }

  Coefficient pow(std::uint32_t k) const;

  /// Replaces every mu^b by p^b. `p` must be a polynomial (throws
  /// std::invalid_argument otherwise).
  Coefficient subst_mu(const Coefficient& p) const;

  /// Exact evaluation; throws PoleError if lambda0 = 0 meets a negative power.
  Rational eval(const Rational& lambda0, const Rational& mu0, const Rational& nu0) const;
  /// Substitutes only the given variables.
  Coefficient eval_partial(const std::optional<Rational>& lambda0, const std::optional<Rational>& mu0,
                           const std::optional<Rational>& nu0) const;

  /// Canonical text, "0" for zero.
  std::string str() const;
  /// True when str() needs parentheses to be used as a factor.
  bool is_compound() const noexcept { return terms_.size() > 1; }
  /// [{"q": "p/q", "l": a, "m": b, "n": c}, ...] in canonical order.
  std::string json() const;

 private:
  explicit Coefficient(std::vector<Term> sorted_nonzero) : terms_(std::move(sorted_nonzero)) {}
  static Coefficient from_unsorted(std::vector<Term> terms);

  std::vector<Term> terms_;
};

}  // namespace fba
