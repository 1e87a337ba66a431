#include "fba/coefficient.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

#include "fba/error.hpp"

namespace fba {

bool monomial_less(const Monomial& a, const Monomial& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  if (a.l != b.l) return a.l > b.l;
  if (a.m != b.m) return a.m > b.m;
  return a.n > b.n;
}

Coefficient::Coefficient(const Rational& c) {
  if (!c.is_zero()) terms_.emplace_back(Monomial{}, c);
}

Coefficient::Coefficient(const Rational& c, Monomial m) {
  if (!c.is_zero()) terms_.emplace_back(m, c);
}

Coefficient Coefficient::from_unsorted(std::vector<Term> terms) {
  std::sort(terms.begin(), terms.end(), [](const Term& a, const Term& b) { return monomial_less(a.first, b.first); });
  std::vector<Term> out;
  out.reserve(terms.size());
  for (auto& t : terms) {
    if (!out.empty() && out.back().first == t.first) {
      out.back().second += t.second;
    } else {
      if (!out.empty() && out.back().second.is_zero()) out.pop_back();
      out.push_back(std::move(t));
    }
  }
  if (!out.empty() && out.back().second.is_zero()) out.pop_back();
  return Coefficient(std::move(out));
}

bool Coefficient::is_polynomial() const {
  return std::all_of(terms_.begin(), terms_.end(), [](const Term& t) { return t.first.l >= 0; });
}

Rational Coefficient::at(const Monomial& m) const {
  for (const auto& [mono, q] : terms_)
    if (mono == m) return q;
  return Rational(0);
}

Coefficient& Coefficient::operator+=(const Coefficient& o) {
  if (o.terms_.empty()) return *this;
  if (terms_.empty()) {
    terms_ = o.terms_;
    return *this;
  }
  std::vector<Term> out;
  out.reserve(terms_.size() + o.terms_.size());
  auto a = terms_.begin();
  auto b = o.terms_.begin();
  while (a != terms_.end() || b != o.terms_.end()) {
    if (b == o.terms_.end() || (a != terms_.end() && monomial_less(a->first, b->first))) {
      out.push_back(std::move(*a++));
    } else if (a == terms_.end() || monomial_less(b->first, a->first)) {
      out.push_back(*b++);
    } else {
      Rational sum = a->second + b->second;
      if (!sum.is_zero()) out.emplace_back(a->first, std::move(sum));
      ++a;
      ++b;
    }
  }
  terms_ = std::move(out);
  return *this;
}

Coefficient operator-(Coefficient a) {
  for (auto& t : a.terms_) t.second = -t.second;
  return a;
}

Coefficient& Coefficient::operator-=(const Coefficient& o) { return *this += -o; }

Coefficient operator*(const Coefficient& a, const Coefficient& b) {
  if (a.terms_.empty() || b.terms_.empty()) return {};
  if (b.terms_.size() == 1 && b.terms_[0].first == Monomial{}) {
    if (b.terms_[0].second.is_one()) return a;
    Coefficient out = a;
    for (auto& t : out.terms_) t.second *= b.terms_[0].second;
    return out;
  }
  if (a.terms_.size() == 1 && a.terms_[0].first == Monomial{}) return b * a;
  std::vector<Coefficient::Term> prod;
  prod.reserve(a.terms_.size() * b.terms_.size());
  for (const auto& [ma, qa] : a.terms_)
    for (const auto& [mb, qb] : b.terms_) prod.emplace_back(ma * mb, qa * qb);
  return Coefficient::from_unsorted(std::move(prod));
}

Coefficient& Coefficient::operator*=(const Coefficient& o) { return *this = *this * o; }

Coefficient Coefficient::pow(std::uint32_t k) const {
  Coefficient result(1);
  Coefficient base = *this;
  while (k) {
    if (k & 1u) result *= base;
    k >>= 1;
    if (k) base *= base;
  }
  return result;
}

Coefficient Coefficient::subst_mu(const Coefficient& p) const {
  if (!p.is_polynomial()) throw std::invalid_argument("subst_mu: replacement has a negative lambda power");
  Coefficient out;
  std::vector<Coefficient> powers{Coefficient(1)};
  for (const auto& [mono, q] : terms_) {
    while (powers.size() <= mono.m) powers.push_back(powers.back() * p);
    out += Coefficient(q, Monomial{mono.l, 0, mono.n}) * powers[mono.m];
  }
  return out;
}

Rational Coefficient::eval(const Rational& lambda0, const Rational& mu0, const Rational& nu0) const {
  Rational total(0);
  for (const auto& [mono, q] : terms_) {
    if (mono.l < 0 && lambda0.is_zero()) throw PoleError("evaluation: negative power of lambda at lambda = 0");
    total += q * lambda0.pow(mono.l) * mu0.pow(mono.m) * nu0.pow(mono.n);
  }
  return total;
}

Coefficient Coefficient::eval_partial(const std::optional<Rational>& lambda0, const std::optional<Rational>& mu0,
                                      const std::optional<Rational>& nu0) const {
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (const auto& [mono, q] : terms_) {
    Monomial rest = mono;
    Rational factor = q;
    if (lambda0) {
      if (mono.l < 0 && lambda0->is_zero()) throw PoleError("evaluation: negative power of lambda at lambda = 0");
      factor *= lambda0->pow(mono.l);
      rest.l = 0;
    }
    if (mu0) {
      factor *= mu0->pow(mono.m);
      rest.m = 0;
    }
    if (nu0) {
      factor *= nu0->pow(mono.n);
      rest.n = 0;
    }
    out.emplace_back(rest, std::move(factor));
  }
  return from_unsorted(std::move(out));
}

namespace {

std::string render_monomial(const Monomial& m) {
  std::string out;
  auto factor = [&](const char* var, long e) {
    if (e == 0) return;
    if (!out.empty()) out += '*';
    out += var;
    if (e != 1) out += '^' + std::to_string(e);
  };
  if (m.l > 0) factor("l", m.l);
  factor("m", m.m);
  factor("n", m.n);
  if (m.l < 0) factor("l", m.l);
  return out;
}

}  // namespace

std::string Coefficient::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [mono, q] : terms_) {
    std::string term;
    bool negative = q.sign() < 0;
    Rational magnitude = negative ? -q : q;
    if (mono == Monomial{}) {
      term = magnitude.str();
    } else if (magnitude.is_one()) {
      term = render_monomial(mono);
    } else {
      term = magnitude.str() + "*" + render_monomial(mono);
    }
    if (out.empty()) {
      out = negative ? "-" + term : term;
    } else {
      out += negative ? " - " : " + ";
      out += term;
    }
  }
  return out;
}

std::string Coefficient::json() const {
  std::string out = "[";
  bool first = true;
  for (const auto& [mono, q] : terms_) {
    if (!first) out += ", ";
    first = false;
    out += "{\"q\": \"" + q.str() + "\", \"l\": " + std::to_string(mono.l) + ", \"m\": " + std::to_string(mono.m) +
           ", \"n\": " + std::to_string(mono.n) + "}";
  }
  return out + "]";
}

namespace {

class CoefficientParser {
 public:
  explicit CoefficientParser(std::string_view text) : text_(text) {}

  Coefficient parse() {
    skip();
    if (pos_ == text_.size()) fail("empty coefficient");
    std::vector<Coefficient::Term> terms;
    bool negative = false;
    if (peek() == '-' || peek() == '+') {
      negative = peek() == '-';
      ++pos_;
      skip();
    }
    terms.push_back(term(negative));
    while (true) {
      skip();
      if (pos_ == text_.size()) break;
      if (peek() != '+' && peek() != '-') fail("expected '+' or '-'");
      negative = peek() == '-';
      ++pos_;
      skip();
      terms.push_back(term(negative));
    }
    Coefficient out;
    for (auto& [m, q] : terms) out += Coefficient(q, m);
    return out;
  }

 private:
  Coefficient::Term term(bool negative) {
    Rational q(1);
    Monomial mono;
    bool have_factor = false;
    if (std::isdigit(static_cast<unsigned char>(peek()))) {
      std::size_t start = pos_;
      while (std::isdigit(static_cast<unsigned char>(peek())) || peek() == '/') ++pos_;
      q = Rational::parse(text_.substr(start, pos_ - start));
      have_factor = true;
      skip();
      if (peek() != '*') return {mono, negative ? -q : q};
      ++pos_;
      skip();
    }
    do {
      if (have_factor && peek() == '*') {
        ++pos_;
        skip();
      }
      char var = peek();
      if (var != 'l' && var != 'm' && var != 'n') fail("expected l, m or n");
      ++pos_;
      long e = 1;
      if (peek() == '^') {
        ++pos_;
        std::size_t start = pos_;
        if (peek() == '-') ++pos_;
        while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
        if (pos_ == start || (pos_ == start + 1 && text_[start] == '-')) fail("expected exponent");
        e = std::stol(std::string(text_.substr(start, pos_ - start)));
      }
      if (var == 'l') {
        mono.l += static_cast<std::int32_t>(e);
      } else {
        if (e < 0) fail("only lambda may carry a negative exponent");
        (var == 'm' ? mono.m : mono.n) += static_cast<std::uint32_t>(e);
      }
      have_factor = true;
      skip();
    } while (peek() == '*');
    return {mono, negative ? -q : q};
  }

  char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }
  void skip() {
    while (peek() == ' ') ++pos_;
  }
  [[noreturn]] void fail(const std::string& what) const { throw ParseError("coefficient: " + what, pos_); }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

Coefficient Coefficient::parse(std::string_view text) { return CoefficientParser(text).parse(); }

}  // namespace fba
