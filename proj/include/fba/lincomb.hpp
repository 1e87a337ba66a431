#pragma once

#include <algorithm>
#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <type_traits>
#include <unordered_map>
#include <utility>
#include <vector>

#include "fba/coefficient.hpp"
#include "fba/forest.hpp"

namespace fba {

/// Basis element of the N-fold tensor power: one forest per leg.
template <std::size_t N>
struct Tensor {
  std::array<Forest, N> legs;

  friend bool operator==(const Tensor&, const Tensor&) = default;
};

using Tensor2 = Tensor<2>;
using Tensor3 = Tensor<3>;

template <class B>
struct BasisTraits;

template <>
struct BasisTraits<Forest> {
  static constexpr std::size_t arity = 1;
  static std::vector<std::string> legs_text(const Forest& f) { return {render_forest(f)}; }
  static std::size_t hash(const Forest& f) { return f.hash(); }
};

template <std::size_t N>
struct BasisTraits<Tensor<N>> {
  static constexpr std::size_t arity = N;
  static std::vector<std::string> legs_text(const Tensor<N>& t) {
    std::vector<std::string> out;
    for (const auto& f : t.legs) out.push_back(render_forest(f));
    return out;
  }
  static std::size_t hash(const Tensor<N>& t) {
    std::size_t h = 0;
    for (const auto& f : t.legs) h = h * 1000003u ^ f.hash();
    return h;
  }
};

template <class B>
struct BasisHash {
  std::size_t operator()(const B& b) const noexcept { return BasisTraits<B>::hash(b); }
};

/// Finitely supported map basis -> Coefficient with no zero entries.
template <class B>
class LinComb {
 public:
  using Map = std::unordered_map<B, Coefficient, BasisHash<B>>;

  LinComb() = default;
  explicit LinComb(const B& b, Coefficient c = Coefficient(1)) { add(b, std::move(c)); }

  void add(const B& b, const Coefficient& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(b, c);
    if (inserted) return;
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }

  Coefficient coefficient(const B& b) const {
    auto it = terms_.find(b);
    return it == terms_.end() ? Coefficient() : it->second;
  }

  std::size_t size() const noexcept { return terms_.size(); }
  bool is_zero() const noexcept { return terms_.empty(); }
  auto begin() const { return terms_.begin(); }
  auto end() const { return terms_.end(); }

  LinComb& operator+=(const LinComb& o) {
    for (const auto& [b, c] : o.terms_) add(b, c);
    return *this;
  }
  LinComb& operator-=(const LinComb& o) {
    for (const auto& [b, c] : o.terms_) add(b, -c);
    return *this;
  }
  LinComb& operator*=(const Coefficient& c) {
    if (c.is_zero()) {
      terms_.clear();
      return *this;
    }
    for (auto& [b, coeff] : terms_) coeff = coeff * c;
    return *this;
  }
  friend LinComb operator+(LinComb a, const LinComb& b) { return a += b; }
  friend LinComb operator-(LinComb a, const LinComb& b) { return a -= b; }
  friend LinComb operator-(LinComb a) { return a *= Coefficient(-1); }
  friend LinComb operator*(const Coefficient& c, LinComb a) { return a *= c; }
  friend bool operator==(const LinComb& a, const LinComb& b) { return a.terms_ == b.terms_; }

  /// Applies `f` to every coefficient, dropping terms that become zero.
  template <class F>
  LinComb map_coefficients(F&& f) const {
    LinComb out;
    for (const auto& [b, c] : terms_) out.add(b, f(c));
    return out;
  }

  /// Terms ordered by leg canonical texts, first leg first.
  std::vector<std::pair<B, Coefficient>> sorted() const {
    std::vector<std::pair<std::vector<std::string>, const typename Map::value_type*>> keyed;
    keyed.reserve(terms_.size());
    for (const auto& kv : terms_) keyed.emplace_back(BasisTraits<B>::legs_text(kv.first), &kv);
    std::sort(keyed.begin(), keyed.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
    std::vector<std::pair<B, Coefficient>> out;
    out.reserve(keyed.size());
    for (const auto& [key, kv] : keyed) out.emplace_back(kv->first, kv->second);
    return out;
  }

 private:
  Map terms_;
};

/// One line per term: "<coeff>  <leg> ⊗ <leg>", or "0".
template <class B>
std::string render_text(const LinComb<B>& x) {
  if (x.is_zero()) return "0";
  std::string out;
  for (const auto& [b, c] : x.sorted()) {
    if (!out.empty()) out += '\n';
    out += c.is_compound() ? "(" + c.str() + ")" : c.str();
    out += "  ";
    auto legs = BasisTraits<B>::legs_text(b);
    for (std::size_t i = 0; i < legs.size(); ++i) {
      if (i) out += " ⊗ ";
      out += legs[i];
    }
  }
  return out;
}

/// [{"coeff": <coefficient json>, "legs": ["a[x]", "b"]}, ...]
template <class B>
std::string render_json(const LinComb<B>& x) {
  std::string out = "[";
  bool first = true;
  for (const auto& [b, c] : x.sorted()) {
    if (!first) out += ", ";
    first = false;
    out += "{\"coeff\": " + c.json() + ", \"legs\": [";
    auto legs = BasisTraits<B>::legs_text(b);
    for (std::size_t i = 0; i < legs.size(); ++i) {
      if (i) out += ", ";
      out += "\"" + legs[i] + "\"";
    }
    out += "]}";
  }
  return out + "]";
}

namespace detail {
template <class B>
auto legs_of(const B& b) {
  if constexpr (std::is_same_v<B, Forest>) {
    return std::array<Forest, 1>{b};
  } else {
    return b.legs;
  }
}
}  // namespace detail

/// Bilinear tensor product; basis tensors concatenate their legs.
template <class A, class B>
auto tensor(const LinComb<A>& x, const LinComb<B>& y) {
  constexpr std::size_t n = BasisTraits<A>::arity + BasisTraits<B>::arity;
  LinComb<Tensor<n>> out;
  for (const auto& [a, ca] : x) {
    auto la = detail::legs_of(a);
    for (const auto& [b, cb] : y) {
      auto lb = detail::legs_of(b);
      Tensor<n> t;
      std::copy(la.begin(), la.end(), t.legs.begin());
      std::copy(lb.begin(), lb.end(), t.legs.begin() + la.size());
      out.add(t, ca * cb);
    }
  }
  return out;
}

/// Concatenation product, extended bilinearly.
LinComb<Forest> multiply(const LinComb<Forest>& x, const LinComb<Forest>& y);

/// B+_omega extended linearly.
LinComb<Forest> graft(Decoration omega, const LinComb<Forest>& x);

/// Bimodule actions on the tensor square: f.(g ⊗ h) = fg ⊗ h and
/// (g ⊗ h).f = g ⊗ hf.
LinComb<Tensor2> act_left(const Forest& f, const LinComb<Tensor2>& t);
LinComb<Tensor2> act_right(const LinComb<Tensor2>& t, const Forest& f);

/// (id ⊗ B+_omega) on the tensor square.
LinComb<Tensor2> graft_right(Decoration omega, const LinComb<Tensor2>& t);

/// Every coefficient passed through subst_mu / eval_partial.
template <class B>
LinComb<B> subst_mu(const LinComb<B>& x, const Coefficient& p) {
  return x.map_coefficients([&](const Coefficient& c) { return c.subst_mu(p); });
}

template <class B>
LinComb<B> eval_partial(const LinComb<B>& x, const std::optional<Rational>& lambda0,
                        const std::optional<Rational>& mu0, const std::optional<Rational>& nu0) {
  return x.map_coefficients([&](const Coefficient& c) { return c.eval_partial(lambda0, mu0, nu0); });
}

}  // namespace fba
