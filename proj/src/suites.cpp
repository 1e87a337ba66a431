#include <algorithm>
#include <chrono>
#include <map>
#include <set>

#include "fba/coalgebra.hpp"
#include "fba/dualprod.hpp"
#include "fba/error.hpp"
#include "fba/morphisms.hpp"
#include "fba/prelie.hpp"
#include "fba/verify.hpp"

namespace fba {
namespace {

using detail::CaseRunner;
using FailFn = CaseRunner::FailFn;

const std::vector<std::string> kOmegaAB{"a", "b"};
const std::vector<std::string> kOmegaA{"a"};
const std::vector<std::string> kXset{"x"};

std::size_t primary(const RunConfig& c, std::size_t dflt) { return c.max_vertices.value_or(dflt); }

std::size_t secondary(const RunConfig& c, std::size_t dflt) {
  if (!c.max_vertices) return dflt;
  return *c.max_vertices == 0 ? 0 : *c.max_vertices - 1;
}

template <class B>
LinComb<B> evaluated(const RunConfig& c, const LinComb<B>& x) {
  return c.evaluates() ? eval_partial(x, c.eval_lambda, c.eval_mu, c.eval_nu) : x;
}

Coefficient evaluated(const RunConfig& c, const Coefficient& x) {
  return c.evaluates() ? x.eval_partial(c.eval_lambda, c.eval_mu, c.eval_nu) : x;
}

std::vector<std::string> texts(std::initializer_list<const Forest*> fs) {
  std::vector<std::string> out;
  for (const auto* f : fs) out.push_back(render_forest(*f));
  return out;
}

template <class V>
std::string render_any(const V& v) {
  if constexpr (std::is_same_v<V, Coefficient>) {
    return v.str();
  } else {
    return render_text(v);
  }
}

/// Compares after the configured evaluation and reports a mismatch.
template <class V>
void expect_equal(const RunConfig& c, const FailFn& fail, const char* check, std::vector<std::string> inputs,
                  const V& lhs, const V& rhs) {
  auto l = evaluated(c, lhs);
  auto r = evaluated(c, rhs);
  if (l == r) return;
  fail(Failure{check, std::move(inputs), render_any(l), render_any(r)});
}

/// Forests grouped by vertex count, 0..n.
std::vector<std::vector<Forest>> by_size(std::size_t n, const Alphabet& a) {
  std::vector<std::vector<Forest>> out;
  for (std::size_t k = 0; k <= n; ++k) out.push_back(forests_of_size(k, a));
  return out;
}

/// All (F, G) with n_F + n_G <= n, ordered by total size, then n_F.
std::vector<std::pair<const Forest*, const Forest*>> pairs_up_to(const std::vector<std::vector<Forest>>& s,
                                                                 std::size_t n) {
  std::vector<std::pair<const Forest*, const Forest*>> out;
  for (std::size_t total = 0; total <= n; ++total)
    for (std::size_t i = 0; i <= total; ++i)
      for (const auto& f : s[i])
        for (const auto& g : s[total - i]) out.emplace_back(&f, &g);
  return out;
}

struct Triple {
  const Forest* a;
  const Forest* b;
  const Forest* c;
};

std::vector<Triple> triples_up_to(const std::vector<std::vector<Forest>>& s, std::size_t n) {
  std::vector<Triple> out;
  for (std::size_t total = 0; total <= n; ++total)
    for (std::size_t i = 0; i <= total; ++i)
      for (std::size_t j = 0; i + j <= total; ++j)
        for (const auto& f : s[i])
          for (const auto& g : s[j])
            for (const auto& h : s[total - i - j]) out.push_back({&f, &g, &h});
  return out;
}

LinComb<Forest> single(const Forest& f) { return LinComb<Forest>(f); }

// ---------------------------------------------------------------- coalgebra

void suite_coassoc(const RunConfig& c, SuiteReport& r) {
  auto forests = enumerate_forests(primary(c, 5), c.alphabet(kOmegaAB, kXset));
  CaseRunner(c, r).run(forests.size(), [&](std::size_t i, const FailFn& fail) {
    auto d = coproduct_biideal(forests[i]);
    expect_equal(c, fail, "coassociativity", texts({&forests[i]}), coproduct_left(d), coproduct_right(d));
  });
}

void suite_derivation(const RunConfig& c, SuiteReport& r) {
  auto n = primary(c, 5);
  auto sizes = by_size(n, c.alphabet(kOmegaAB, kXset));
  auto pairs = pairs_up_to(sizes, n);
  CaseRunner(c, r).run(pairs.size(), [&](std::size_t i, const FailFn& fail) {
    const auto& [f, g] = pairs[i];
    auto lhs = coproduct_biideal(concat(*f, *g));
    auto rhs = act_left(*f, coproduct_biideal(*g)) + act_right(coproduct_biideal(*f), *g);
    rhs.add(Tensor2{{*f, *g}}, Coefficient::lambda());
    expect_equal(c, fail, "weighted derivation", texts({f, g}), lhs, rhs);
  });
}

void suite_cocycle(const RunConfig& c, SuiteReport& r) {
  auto alphabet = c.alphabet(kOmegaAB, kXset);
  auto forests = enumerate_forests(primary(c, 4), alphabet);
  const auto& omegas = alphabet.omega();
  CaseRunner(c, r).run(forests.size() * omegas.size(), [&](std::size_t i, const FailFn& fail) {
    const auto& f = forests[i / omegas.size()];
    Decoration w{omegas[i % omegas.size()], Kind::omega};
    auto grafted = graft(w, f).as_forest();
    auto rhs = graft_right(w, coproduct_biideal(f));
    rhs.add(Tensor2{{grafted, Forest()}}, -Coefficient::lambda());
    rhs.add(Tensor2{{f, Forest()}}, Coefficient::mu());
    expect_equal(c, fail, "1-cocycle", {w.symbol.name(), render_forest(f)}, coproduct_biideal(grafted), rhs);
  });
}

void suite_counit(const RunConfig& c, SuiteReport& r) {
  auto alphabet = c.alphabet(kOmegaAB, kXset);
  auto n = primary(c, 5);
  auto forests = enumerate_forests(n, alphabet);
  // Under --eval-* the counit itself is evaluated before it is applied, so a
  // pole at l = 0 surfaces instead of cancelling against the coproduct.
  auto eps = [&](const Forest& f) { return evaluated(c, counit(f)); };
  CaseRunner(c, r).run(forests.size(), [&](std::size_t i, const FailFn& fail) {
    auto d = evaluated(c, coproduct_biideal(forests[i]));
    LinComb<Forest> left, right;
    for (const auto& [t, coeff] : d) {
      left.add(t.legs[1], coeff * eps(t.legs[0]));
      right.add(t.legs[0], coeff * eps(t.legs[1]));
    }
    expect_equal(c, fail, "(e x id) D = id", texts({&forests[i]}), left, single(forests[i]));
    expect_equal(c, fail, "(id x e) D = id", texts({&forests[i]}), right, single(forests[i]));
  });

  auto m = secondary(c, 4);
  auto small = by_size(m, alphabet);
  auto pairs = pairs_up_to(small, m);
  const std::optional<Rational> minus_one = Rational(-1), one = Rational(1);
  CaseRunner(c, r).run(pairs.size(), [&](std::size_t i, const FailFn& fail) {
    const auto& [f, g] = pairs[i];
    auto lhs = counit(concat(*f, *g)).eval_partial(minus_one, std::nullopt, std::nullopt);
    auto rhs = (counit(*f) * counit(*g)).eval_partial(minus_one, std::nullopt, std::nullopt);
    expect_equal(c, fail, "e multiplicative at l = -1", texts({f, g}), lhs, rhs);
  });

  // At l = 1 the counit is not multiplicative; the first pair showing it is
  // reported as a witness.
  bool witness = false;
  for (const auto& [f, g] : pairs) {
    auto lhs = evaluated(c, counit(concat(*f, *g)).eval_partial(one, std::nullopt, std::nullopt));
    auto rhs = evaluated(c, (counit(*f) * counit(*g)).eval_partial(one, std::nullopt, std::nullopt));
    if (lhs == rhs) continue;
    r.notes.push_back("not multiplicative at l = 1: F = " + render_forest(*f) + ", G = " + render_forest(*g) +
                      ", e(FG) = " + lhs.str() + ", e(F)e(G) = " + rhs.str());
    witness = true;
    break;
  }
  ++r.cases;
  if (!witness) {
    ++r.failure_count;
    r.failures.push_back({"non-multiplicativity witness at l = 1", {}, "none found", "a pair with e(FG) != e(F)e(G)"});
  }
}

void suite_rec_vs_biideal(const RunConfig& c, SuiteReport& r) {
  auto forests = enumerate_forests(primary(c, 6), c.alphabet(kOmegaAB, kXset));
  CaseRunner(c, r).run(forests.size(), [&](std::size_t i, const FailFn& fail) {
    expect_equal(c, fail, "recursive = biideal", texts({&forests[i]}), coproduct_rec(forests[i]),
                 coproduct_biideal(forests[i]));
  });
}

// "v is higher or more on the left than u", straight from paths: v lies
// above u on a common branch, or the two are incomparable and v sits
// further left. Reflexive.
bool higher_or_left(const VertexId& v, const VertexId& u) {
  const auto& a = v.path;
  const auto& b = u.path;
  std::size_t k = 0;
  while (k < a.size() && k < b.size() && a[k] == b[k]) ++k;
  if (k == b.size()) return true;   // u is v or an ancestor of v
  if (k == a.size()) return false;  // v is a strict ancestor of u
  return a[k] < b[k];
}

void suite_biideal_count(const RunConfig& c, SuiteReport& r) {
  auto forests = enumerate_forests(primary(c, 6), c.alphabet(kOmegaAB, kXset));
  CaseRunner(c, r).run(forests.size(), [&](std::size_t i, const FailFn& fail) {
    const auto& f = forests[i];
    auto name = texts({&f});
    const std::size_t n = f.nvertices();
    auto ideals = biideals(f);
    if (ideals.size() != n + 1)
      fail({"count = n + 1", name, std::to_string(ideals.size()), std::to_string(n + 1)});

    auto order = vertex_order(f);
    auto all = vertices(f);
    if (std::set<VertexId>(order.begin(), order.end()) != std::set<VertexId>(all.begin(), all.end()) ||
        order.size() != n)
      fail({"order is a bijection", name, std::to_string(order.size()), std::to_string(n)});
    for (std::size_t k = 1; k < order.size(); ++k)
      if (!higher_or_left(order[k - 1], order[k]) || order[k - 1] == order[k])
        fail({"order strictly decreasing", name, "position " + std::to_string(k), "u_k below u_(k-1)"});

    // parent in the host, by pre-order index
    std::vector<std::size_t> parent(n, SIZE_MAX);
    auto nodes = f.nodes();
    for (std::size_t p = 0; p < n; ++p)
      for (std::size_t q = p + 1; q < p + nodes[p].size; q += nodes[q].size) parent[q] = p;

    for (std::size_t k = 0; k < ideals.size(); ++k) {
      const auto& ideal = ideals[k];
      if (ideal.size() != k) fail({"|I_k| = k", name, std::to_string(ideal.size()), std::to_string(k)});
      for (const auto& u : ideal.members())
        for (const auto& v : all)
          if (higher_or_left(v, u) && !ideal.contains(v))
            fail({"upward closed", name, "k = " + std::to_string(k), "misses a vertex above a member"});

      // On I_k and J_k no vertex needs contracting: a kept vertex's parent
      // is either kept or absent from the whole ancestor chain.
      auto mask = ideal.mask();
      for (int side = 0; side < 2; ++side) {
        std::vector<std::uint8_t> keep(n);
        for (std::size_t q = 0; q < n; ++q) keep[q] = side == 0 ? mask[q] : !mask[q];
        for (std::size_t q = 0; q < n; ++q) {
          if (!keep[q] || parent[q] == SIZE_MAX || keep[parent[q]]) continue;
          for (auto a = parent[q]; a != SIZE_MAX; a = parent[a])
            if (keep[a]) fail({"restriction is edge-induced", name, "k = " + std::to_string(k), "contracted"});
        }
        if (restrict_mask(f, keep).nvertices() != k + side * (n - 2 * k))
          fail({"restriction size", name, "k = " + std::to_string(k), "wrong vertex count"});
      }
    }
  });
}

// ---------------------------------------------------------------- dualprod

void suite_duality(const RunConfig& c, SuiteReport& r) {
  auto alphabet = c.alphabet(kOmegaA, kXset);
  auto xs = enumerate_forests(primary(c, 4), alphabet);
  auto ys = enumerate_forests(secondary(c, 3), alphabet);
  std::vector<LinComb<Tensor2>> deltas;
  for (const auto& x : xs) deltas.push_back(coproduct_biideal(x));
  const std::size_t per_x = ys.size() * ys.size();
  // One star_weighted per (y, z), shared by every x.
  std::vector<LinComb<Forest>> products;
  for (const auto& y : ys)
    for (const auto& z : ys) products.push_back(star_weighted(single(y), single(z), alphabet));
  CaseRunner(c, r).run(xs.size() * per_x, [&](std::size_t i, const FailFn& fail) {
    std::size_t xi = i / per_x, yz = i % per_x;
    const auto& x = xs[xi];
    const auto& y = ys[yz / ys.size()];
    const auto& z = ys[yz % ys.size()];
    auto lhs = pairing(deltas[xi], LinComb<Tensor2>(Tensor2{{y, z}}));
    auto rhs = pairing(single(x), products[yz]);
    expect_equal(c, fail, "<D x, y (x) z> = <x, y * z>", texts({&x, &y, &z}), lhs, rhs);
  });
}

void suite_star_assoc(const RunConfig& c, SuiteReport& r) {
  auto plain = by_size(primary(c, 5), c.alphabet(kOmegaAB, kXset));
  auto t1 = triples_up_to(plain, primary(c, 5));
  CaseRunner(c, r).run(t1.size(), [&](std::size_t i, const FailFn& fail) {
    auto [a, b, d] = t1[i];
    auto lhs = star(star(single(*a), single(*b)), single(*d));
    auto rhs = star(single(*a), star(single(*b), single(*d)));
    expect_equal(c, fail, "(a * b) * c = a * (b * c)", texts({a, b, d}), lhs, rhs);
  });

  auto alphabet = c.alphabet(kOmegaA, kXset);
  auto m = secondary(c, 4);
  auto weighted = by_size(m, alphabet);
  auto t2 = triples_up_to(weighted, m);
  CaseRunner(c, r).run(t2.size(), [&](std::size_t i, const FailFn& fail) {
    auto [a, b, d] = t2[i];
    auto lhs = star_weighted(star_weighted(single(*a), single(*b), alphabet), single(*d), alphabet);
    auto rhs = star_weighted(single(*a), star_weighted(single(*b), single(*d), alphabet), alphabet);
    expect_equal(c, fail, "weighted star associative", texts({a, b, d}), lhs, rhs);
  });
}

std::size_t binomial(std::size_t n, std::size_t k) {
  std::size_t out = 1;
  for (std::size_t i = 1; i <= k; ++i) out = out * (n - k + i) / i;
  return out;
}

void suite_star_census(const RunConfig& c, SuiteReport& r) {
  auto forests = enumerate_forests(primary(c, 4), c.alphabet(kOmegaAB, kXset));
  std::vector<std::size_t> path_len;
  for (const auto& g : forests) path_len.push_back(left_path(g).vertices.size());
  const std::size_t n = forests.size();
  CaseRunner(c, r).run(n * n, [&](std::size_t i, const FailFn& fail) {
    const auto& f = forests[i / n];
    const auto& g = forests[i % n];
    auto s = star(f, g);
    auto expected = binomial(f.breadth() + path_len[i % n], path_len[i % n]);
    if (s.size() != expected)
      fail({"C(m+n, n) terms", texts({&f, &g}), std::to_string(s.size()), std::to_string(expected)});
    for (const auto& [h, coeff] : s) {
      if (!(coeff == Coefficient(1)))
        fail({"terms distinct", texts({&f, &g}), coeff.str() + "  " + render_forest(h), "1"});
      if (h.nvertices() != f.nvertices() + g.nvertices())
        fail({"vertex count", texts({&f, &g}), render_forest(h), "n_F + n_G vertices"});
    }
  });
}

// ---------------------------------------------------------------- prelie

void suite_prelie(const RunConfig& c, SuiteReport& r) {
  auto n = primary(c, 5);
  auto sizes = by_size(n, c.alphabet(kOmegaA, kXset));
  auto triples = triples_up_to(sizes, n);
  CaseRunner(c, r).run(triples.size(), [&](std::size_t i, const FailFn& fail) {
    auto a = single(*triples[i].a), b = single(*triples[i].b), d = single(*triples[i].c);
    auto lhs = prelie(prelie(a, b), d) - prelie(a, prelie(b, d));
    auto rhs = prelie(prelie(b, a), d) - prelie(b, prelie(a, d));
    expect_equal(c, fail, "pre-Lie identity", texts({triples[i].a, triples[i].b, triples[i].c}), lhs, rhs);
  });
}

void suite_jacobi(const RunConfig& c, SuiteReport& r) {
  auto n = primary(c, 5);
  auto sizes = by_size(n, c.alphabet(kOmegaA, kXset));
  auto triples = triples_up_to(sizes, n);
  CaseRunner(c, r).run(triples.size(), [&](std::size_t i, const FailFn& fail) {
    auto a = single(*triples[i].a), b = single(*triples[i].b), d = single(*triples[i].c);
    auto sum = bracket(a, bracket(b, d)) + bracket(b, bracket(d, a)) + bracket(d, bracket(a, b));
    expect_equal(c, fail, "Jacobi", texts({triples[i].a, triples[i].b, triples[i].c}), sum, LinComb<Forest>());
  });
}

void suite_prelie_closed(const RunConfig& c, SuiteReport& r) {
  auto n = primary(c, 5);
  auto sizes = by_size(n, c.alphabet(kOmegaA, kXset));
  auto pairs = pairs_up_to(sizes, n);
  CaseRunner(c, r).run(pairs.size(), [&](std::size_t i, const FailFn& fail) {
    const auto& [f, g] = pairs[i];
    expect_equal(c, fail, "sandwich = closed form", texts({f, g}), prelie(*f, *g), prelie_closed(*f, *g));
  });
}

// ---------------------------------------------------------------- morphisms

void suite_phi(const RunConfig& c, SuiteReport& r) {
  auto alphabet = c.alphabet(kOmegaAB, kXset);
  auto forests = enumerate_forests(primary(c, 5), alphabet);
  CaseRunner(c, r).run(forests.size(), [&](std::size_t i, const FailFn& fail) {
    expect_equal(c, fail, "recursive phi = subset sum", texts({&forests[i]}), phi(forests[i]),
                 phi_subsets(forests[i]));
  });

  auto small = enumerate_forests(secondary(c, 4), alphabet);
  const std::vector<std::pair<Rational, Rational>> params{
      {Rational(-2), Rational(1)}, {Rational(-1), Rational(1, 2)}, {Rational(1), Rational(2)},
      {Rational(2), Rational(-2)}, {Rational(1, 2), Rational(-1)}};
  const std::size_t per = params.size() + 1;
  CaseRunner(c, r).run(small.size() * per, [&](std::size_t i, const FailFn& fail) {
    const auto& f = small[i / per];
    std::size_t k = i % per;
    if (k == params.size()) {
      expect_equal(c, fail, "phi_0 = id", texts({&f}), phi(f, Coefficient(0)), single(f));
      return;
    }
    const auto& [p, q] = params[k];
    auto lhs = phi(phi(f, Coefficient(q)), Coefficient(p));
    auto rhs = phi(f, Coefficient(p + q));
    expect_equal(c, fail, "phi_p o phi_q = phi_(p+q)", {render_forest(f), p.str(), q.str()}, lhs, rhs);
  });

  const Coefficient shifted = Coefficient::mu() - Coefficient::lambda() * Coefficient::nu();
  CaseRunner(c, r).run(small.size(), [&](std::size_t i, const FailFn& fail) {
    const auto& f = small[i];
    auto lhs = subst_mu(coproduct(phi(f)), shifted);
    auto rhs = phi(coproduct_biideal(f));
    expect_equal(c, fail, "D_(l,m-l*n) phi = (phi x phi) D", texts({&f}), lhs, rhs);
  });
}

void suite_theta(const RunConfig& c, SuiteReport& r) {
  auto alphabet = c.alphabet(kOmegaAB, kXset);
  auto m = secondary(c, 3);
  auto small = enumerate_forests(m, alphabet);
  const std::size_t n = small.size();
  CaseRunner(c, r).run(n * n, [&](std::size_t i, const FailFn& fail) {
    const auto& f = small[i / n];
    const auto& g = small[i % n];
    expect_equal(c, fail, "theta multiplicative", texts({&f, &g}), theta(single(concat(f, g))),
                 multiply(theta(single(f)), theta(single(g))));
  });

  auto forests = enumerate_forests(primary(c, 4), alphabet);
  const Coefficient scaled = Coefficient::mu() * Coefficient::nu();
  CaseRunner(c, r).run(forests.size(), [&](std::size_t i, const FailFn& fail) {
    const auto& f = forests[i];
    auto lhs = coproduct(theta(single(f)));
    auto rhs = theta(subst_mu(coproduct_biideal(f), scaled));
    expect_equal(c, fail, "D theta = (theta x theta) D_(l,m*n)", texts({&f}), lhs, rhs);
  });
}

// ---------------------------------------------------------------- golden

void suite_golden(const RunConfig& c, SuiteReport& r) {
  auto cases = golden_cases();
  CaseRunner(c, r).run(cases.size(), [&](std::size_t i, const FailFn& fail) {
    if (cases[i].expected != cases[i].actual) fail({cases[i].name, {}, cases[i].actual, cases[i].expected});
  });
}

using SuiteFn = void (*)(const RunConfig&, SuiteReport&);

const std::map<std::string, SuiteFn>& table() {
  static const std::map<std::string, SuiteFn> t{
      {"coassoc", suite_coassoc},
      {"derivation", suite_derivation},
      {"cocycle", suite_cocycle},
      {"counit", suite_counit},
      {"rec-vs-biideal", suite_rec_vs_biideal},
      {"biideal-count", suite_biideal_count},
      {"duality", suite_duality},
      {"star-assoc", suite_star_assoc},
      {"star-census", suite_star_census},
      {"prelie", suite_prelie},
      {"jacobi", suite_jacobi},
      {"prelie-closed-form", suite_prelie_closed},
      {"phi-laws", suite_phi},
      {"theta-laws", suite_theta},
      {"examples-golden", suite_golden},
  };
  return t;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{
      "coassoc",     "derivation", "cocycle", "counit",  "rec-vs-biideal",     "biideal-count", "duality",
      "star-assoc",  "star-census", "prelie", "jacobi",  "prelie-closed-form", "phi-laws",      "theta-laws",
      "examples-golden"};
  return names;
}

SuiteReport run_suite(const std::string& name, const RunConfig& config) {
  auto it = table().find(name);
  if (it == table().end()) throw UnknownSuiteError("unknown suite '" + name + "'");
  SuiteReport report;
  report.suite = name;
  auto start = std::chrono::steady_clock::now();
  it->second(config, report);
  report.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

}  // namespace fba
