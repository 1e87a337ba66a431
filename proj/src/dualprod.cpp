#include "fba/dualprod.hpp"

namespace fba {

Coefficient pairing(const LinComb<Forest>& x, const LinComb<Forest>& y) {
  Coefficient out;
  const auto& small = x.size() <= y.size() ? x : y;
  const auto& large = x.size() <= y.size() ? y : x;
  for (const auto& [f, c] : small) {
    auto d = large.coefficient(f);
    if (!d.is_zero()) out += c * d;
  }
  return out;
}

Coefficient pairing(const LinComb<Tensor2>& x, const LinComb<Tensor2>& y) {
  Coefficient out;
  for (const auto& [t, c] : x) {
    auto d = y.coefficient(t);
    if (!d.is_zero()) out += c * d;
  }
  return out;
}

namespace {

// Length of the left path: pre-order indices 0..n-1 of g.
std::size_t left_path_length(const Forest& g) {
  auto nodes = g.nodes();
  if (nodes.empty()) return 0;
  std::size_t k = 0;
  while (nodes[k].size > 1) ++k;
  return nodes[k].deco.kind == Kind::x ? k : k + 1;
}

struct StarBuilder {
  const Forest& g;
  std::vector<std::vector<Node>> trees;  // trees of F as node lists
  std::size_t n;
  std::vector<std::size_t> target;       // target[i] = s(i+1)
  LinComb<Forest>* out;

  void emit() {
    std::vector<std::size_t> extra(n + 1, 0);  // node count grafted at each slot
    for (std::size_t i = 0; i < trees.size(); ++i) extra[target[i]] += trees[i].size();
    auto gn = g.nodes();
    std::vector<Node> nodes;
    nodes.reserve(gn.size() + [&] {
      std::size_t s = 0;
      for (auto e : extra) s += e;
      return s;
    }());
    auto append_slot = [&](std::size_t slot) {
      for (std::size_t i = 0; i < trees.size(); ++i)
        if (target[i] == slot) nodes.insert(nodes.end(), trees[i].begin(), trees[i].end());
    };
    append_slot(0);
    std::size_t below = 0;
    for (std::size_t j = 1; j <= n; ++j) below += extra[j];
    for (std::size_t k = 0; k < n; ++k) {
      Node v = gn[k];
      v.size += static_cast<std::uint32_t>(below);
      nodes.push_back(v);
      append_slot(k + 1);
      below -= extra[k + 1];
    }
    nodes.insert(nodes.end(), gn.begin() + static_cast<std::ptrdiff_t>(n), gn.end());
    out->add(Forest::from_nodes(std::move(nodes)), Coefficient(1));
  }

  void run(std::size_t i, std::size_t lo) {
    if (i == trees.size()) {
      emit();
      return;
    }
    for (std::size_t j = lo; j <= n; ++j) {
      target[i] = j;
      run(i + 1, j);
    }
  }
};

}  // namespace

LeftPath left_path(const Forest& g) {
  LeftPath p;
  auto n = left_path_length(g);
  for (std::size_t k = 0; k < n; ++k) p.vertices.push_back(vertex_id(g, k));
  return p;
}

LinComb<Forest> star(const Forest& f, const Forest& g) {
  LinComb<Forest> out;
  StarBuilder b{g, {}, left_path_length(g), {}, &out};
  auto fn = f.nodes();
  for (auto r : f.root_indices()) b.trees.emplace_back(fn.begin() + r, fn.begin() + r + fn[r].size);
  b.target.assign(b.trees.size(), 0);
  b.run(0, 0);
  return out;
}

LinComb<Forest> star(const LinComb<Forest>& x, const LinComb<Forest>& y) {
  LinComb<Forest> out;
  for (const auto& [f, cf] : x)
    for (const auto& [g, cg] : y) {
      auto s = star(f, g);
      s *= cf * cg;
      out += s;
    }
  return out;
}

LinComb<Forest> star_weighted(const LinComb<Forest>& x, const LinComb<Forest>& y, const Alphabet& alphabet) {
  auto out = star(x, y);
  out *= -Coefficient::lambda();
  for (const auto& d : alphabet.all()) {
    auto s = star(star(x, LinComb<Forest>(Forest::leaf(d))), y);
    s *= Coefficient::mu();
    out += s;
  }
  return out;
}

}  // namespace fba
