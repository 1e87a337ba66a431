#include "fba/forest.hpp"

#include <algorithm>
#include <stdexcept>

namespace fba {
namespace {

std::size_t hash_nodes(std::span<const Node> nodes) {
  std::uint64_t h = 1469598103934665603ull;
  for (const auto& n : nodes) {
    std::uint64_t word = (std::uint64_t{n.deco.symbol.id()} << 33) ^
                         (std::uint64_t{static_cast<std::uint8_t>(n.deco.kind)} << 32) ^ n.size;
    h ^= word + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    h *= 1099511628211ull;
  }
  return static_cast<std::size_t>(h);
}

std::size_t count_roots(std::span<const Node> nodes) {
  std::size_t roots = 0;
  for (std::size_t i = 0; i < nodes.size(); i += nodes[i].size) ++roots;
  return roots;
}

// Checks that every subtree range nests inside its parent's.
void validate(std::span<const Node> nodes) {
  std::vector<std::size_t> open_until;  // exclusive end of each open ancestor
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    while (!open_until.empty() && open_until.back() <= i) open_until.pop_back();
    const auto& n = nodes[i];
    if (n.size == 0) throw std::invalid_argument("forest: zero subtree size");
    if (!n.deco.symbol.valid()) throw std::invalid_argument("forest: undecorated vertex");
    std::size_t end = i + n.size;
    if (end > nodes.size() || (!open_until.empty() && end > open_until.back()))
      throw std::invalid_argument("forest: subtree overruns its parent");
    if (n.deco.kind == Kind::x && n.size != 1)
      throw std::invalid_argument("forest: X-decorated vertex with children");
    open_until.push_back(end);
  }
}

}  // namespace

Forest::Forest(std::vector<Node> nodes, Trusted)
    : nodes_(std::move(nodes)), breadth_(count_roots(nodes_)), hash_(hash_nodes(nodes_)) {}

Forest Forest::from_nodes(std::vector<Node> nodes) {
  validate(nodes);
  return Forest(std::move(nodes), Trusted{});
}

Forest Forest::leaf(Decoration d) {
  if (!d.symbol.valid()) throw std::invalid_argument("forest: undecorated vertex");
  return Forest({Node{d, 1}}, Trusted{});
}

std::size_t Forest::depth() const {
  // depth(x-leaf) = 0, depth(B+_w(G)) = 1 + depth(G); forests take the max.
  std::size_t best = 0;
  std::vector<std::pair<std::size_t, std::size_t>> stack;  // (end, omega ancestors incl. self)
  for (std::size_t i = 0; i < nodes_.size(); ++i) {
    while (!stack.empty() && stack.back().first <= i) stack.pop_back();
    std::size_t above = stack.empty() ? 0 : stack.back().second;
    const auto& n = nodes_[i];
    std::size_t here = above + (n.deco.kind == Kind::omega ? 1 : 0);
    best = std::max(best, here);
    stack.emplace_back(i + n.size, here);
  }
  return best;
}

std::vector<std::size_t> Forest::root_indices() const {
  std::vector<std::size_t> out;
  out.reserve(breadth_);
  for (std::size_t i = 0; i < nodes_.size(); i += nodes_[i].size) out.push_back(i);
  return out;
}

std::vector<Tree> Forest::trees() const {
  std::vector<Tree> out;
  out.reserve(breadth_);
  for (auto i : root_indices()) out.push_back(subtree(i));
  return out;
}

Tree Forest::subtree(std::size_t i) const {
  if (i >= nodes_.size()) throw std::out_of_range("forest: vertex index out of range");
  auto first = nodes_.begin() + static_cast<std::ptrdiff_t>(i);
  return Tree(Forest(std::vector<Node>(first, first + nodes_[i].size), Trusted{}));
}

Tree::Tree(Decoration root, const Forest& children) {
  if (root.kind == Kind::x && !children.empty())
    throw std::invalid_argument("tree: X-decorated vertex cannot have children");
  if (!root.symbol.valid()) throw std::invalid_argument("tree: undecorated root");
  std::vector<Node> nodes;
  nodes.reserve(children.nvertices() + 1);
  nodes.push_back(Node{root, static_cast<std::uint32_t>(children.nvertices() + 1)});
  nodes.insert(nodes.end(), children.nodes().begin(), children.nodes().end());
  forest_ = Forest(std::move(nodes), Forest::Trusted{});
}

Forest Tree::children() const {
  auto n = forest_.nodes();
  return Forest(std::vector<Node>(n.begin() + 1, n.end()), Forest::Trusted{});
}

Forest concat(const Forest& f, const Forest& g) {
  if (f.empty()) return g;
  if (g.empty()) return f;
  std::vector<Node> nodes;
  nodes.reserve(f.nvertices() + g.nvertices());
  nodes.insert(nodes.end(), f.nodes_.begin(), f.nodes_.end());
  nodes.insert(nodes.end(), g.nodes_.begin(), g.nodes_.end());
  return Forest(std::move(nodes), Forest::Trusted{});
}

Forest concat(std::span<const Tree> trees) {
  std::vector<Node> nodes;
  for (const auto& t : trees) {
    auto n = t.as_forest().nodes();
    nodes.insert(nodes.end(), n.begin(), n.end());
  }
  return Forest::from_nodes(std::move(nodes));
}

Tree graft(Decoration omega, const Forest& f) {
  if (omega.kind != Kind::omega) throw std::invalid_argument("graft: decoration must be in omega");
  return Tree(omega, f);
}

VertexId vertex_id(const Forest& f, std::size_t preorder_index) {
  auto nodes = f.nodes();
  if (preorder_index >= nodes.size()) throw std::out_of_range("vertex_id: index out of range");
  VertexId id;
  std::size_t begin = 0;
  while (true) {
    std::uint32_t k = 0;
    std::size_t i = begin;
    while (i + nodes[i].size <= preorder_index) {
      i += nodes[i].size;
      ++k;
    }
    id.path.push_back(k);
    if (i == preorder_index) return id;
    begin = i + 1;
  }
}

std::size_t preorder_index(const Forest& f, const VertexId& v) {
  auto nodes = f.nodes();
  if (v.path.empty()) throw std::out_of_range("vertex id: empty path");
  std::size_t begin = 0, end = nodes.size();
  std::size_t current = 0;
  for (std::size_t depth = 0; depth < v.path.size(); ++depth) {
    std::size_t i = begin;
    for (std::uint32_t k = 0; k < v.path[depth]; ++k) {
      if (i >= end) break;
      i += nodes[i].size;
    }
    if (i >= end) throw std::out_of_range("vertex id: not a vertex of this forest");
    current = i;
    begin = i + 1;
    end = i + nodes[i].size;
  }
  return current;
}

std::vector<VertexId> vertices(const Forest& f) {
  std::vector<VertexId> out;
  out.reserve(f.nvertices());
  for (std::size_t i = 0; i < f.nvertices(); ++i) out.push_back(vertex_id(f, i));
  return out;
}

VertexSet::VertexSet(Forest host, std::set<VertexId> members)
    : host_(std::move(host)), members_(std::move(members)) {
  for (const auto& v : members_) preorder_index(host_, v);
}

std::vector<std::uint8_t> VertexSet::mask() const {
  std::vector<std::uint8_t> keep(host_.nvertices(), 0);
  for (const auto& v : members_) keep[preorder_index(host_, v)] = 1;
  return keep;
}

std::vector<std::size_t> postorder(const Forest& f) {
  auto nodes = f.nodes();
  std::vector<std::size_t> out;
  out.reserve(nodes.size());
  // A vertex is emitted once the scan has passed its whole subtree.
  std::vector<std::size_t> open;
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    while (!open.empty() && open.back() + nodes[open.back()].size <= i) {
      out.push_back(open.back());
      open.pop_back();
    }
    open.push_back(i);
  }
  while (!open.empty()) {
    out.push_back(open.back());
    open.pop_back();
  }
  return out;
}

std::vector<VertexId> vertex_order(const Forest& f) {
  std::vector<VertexId> out;
  for (auto i : postorder(f)) out.push_back(vertex_id(f, i));
  return out;
}

std::vector<VertexSet> biideals(const Forest& f) {
  auto order = vertex_order(f);
  std::vector<VertexSet> out;
  out.reserve(order.size() + 1);
  std::set<VertexId> members;
  out.emplace_back(f, members);
  for (auto& v : order) {
    members.insert(v);
    out.emplace_back(f, members);
  }
  return out;
}

Forest restrict_mask(const Forest& f, std::span<const std::uint8_t> keep) {
  auto nodes = f.nodes();
  if (keep.size() != nodes.size()) throw std::invalid_argument("restrict: mask does not match forest");
  // kept[i] = number of kept vertices among pre-order positions < i
  std::vector<std::uint32_t> kept(nodes.size() + 1, 0);
  for (std::size_t i = 0; i < nodes.size(); ++i) kept[i + 1] = kept[i] + (keep[i] ? 1 : 0);
  std::vector<Node> out;
  out.reserve(kept.back());
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    if (!keep[i]) continue;
    out.push_back(Node{nodes[i].deco, kept[i + nodes[i].size] - kept[i]});
  }
  return Forest(std::move(out), Forest::Trusted{});
}

Forest restrict(const Forest& f, const VertexSet& s) {
  if (!(s.host() == f)) throw std::invalid_argument("restrict: vertex set belongs to another forest");
  auto keep = s.mask();
  return restrict_mask(f, keep);
}

}  // namespace fba
