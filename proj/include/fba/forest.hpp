#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "fba/symbol.hpp"

namespace fba {

/// One vertex in the flat pre-order encoding of a forest. `size` counts the
/// vertex together with all of its descendants.
struct Node {
  Decoration deco;
  std::uint32_t size = 1;

  friend bool operator==(const Node&, const Node&) = default;
};

class Tree;

/// Immutable decorated planar rooted forest. The empty forest is the unit 1.
///
/// Vertices are stored in pre-order; a vertex's descendants occupy the
/// `size - 1` slots right after it. X-decorated vertices are always leaves.
class Forest {
 public:
  Forest() = default;

  /// Builds from a pre-order node list; throws std::invalid_argument if the
  /// sizes do not describe a forest or an X vertex has children.
  static Forest from_nodes(std::vector<Node> nodes);

  static Forest leaf(Decoration d);

  std::span<const Node> nodes() const noexcept { return nodes_; }
  std::size_t nvertices() const noexcept { return nodes_.size(); }
  std::size_t breadth() const noexcept { return breadth_; }
  std::size_t depth() const;
  bool empty() const noexcept { return nodes_.empty(); }
  std::size_t hash() const noexcept { return hash_; }

  /// Pre-order indices of the roots, left to right.
  std::vector<std::size_t> root_indices() const;
  std::vector<Tree> trees() const;

  /// The subtree rooted at pre-order index `i`.
  Tree subtree(std::size_t i) const;

  friend bool operator==(const Forest& a, const Forest& b) noexcept {
    return a.hash_ == b.hash_ && a.nodes_ == b.nodes_;
  }

 private:
  struct Trusted {};
  Forest(std::vector<Node> nodes, Trusted);
  friend class Tree;
  friend Forest concat(const Forest&, const Forest&);
  friend Forest restrict_mask(const Forest&, std::span<const std::uint8_t>);

  std::vector<Node> nodes_;
  std::size_t breadth_ = 0;
  std::size_t hash_ = static_cast<std::size_t>(1469598103934665603ull);  // hash of no nodes
};

/// A forest with exactly one root.
class Tree {
 public:
  /// root with the given children; X roots must have no children.
  Tree(Decoration root, const Forest& children);

  const Decoration& root() const noexcept { return forest_.nodes()[0].deco; }
  Forest children() const;
  const Forest& as_forest() const noexcept { return forest_; }
  std::size_t nvertices() const noexcept { return forest_.nvertices(); }

  friend bool operator==(const Tree&, const Tree&) = default;

 private:
  friend class Forest;
  explicit Tree(Forest single) : forest_(std::move(single)) {}
  Forest forest_;
};

Forest concat(const Forest& f, const Forest& g);
Forest concat(std::span<const Tree> trees);

/// B+_omega: a new omega root above all roots of `f`.
Tree graft(Decoration omega, const Forest& f);

/// Root-to-vertex index path: tree index, then child indices downward.
struct VertexId {
  std::vector<std::uint32_t> path;

  friend auto operator<=>(const VertexId&, const VertexId&) = default;
  friend bool operator==(const VertexId&, const VertexId&) = default;
};

VertexId vertex_id(const Forest& f, std::size_t preorder_index);
/// Throws std::out_of_range if `v` is not a vertex of `f`.
std::size_t preorder_index(const Forest& f, const VertexId& v);
std::vector<VertexId> vertices(const Forest& f);

/// A set of vertices of one host forest.
class VertexSet {
 public:
  VertexSet(Forest host, std::set<VertexId> members);  // validates membership

  const Forest& host() const noexcept { return host_; }
  const std::set<VertexId>& members() const noexcept { return members_; }
  std::size_t size() const noexcept { return members_.size(); }
  bool contains(const VertexId& v) const { return members_.count(v) != 0; }

  /// Membership flags indexed by pre-order position in the host.
  std::vector<std::uint8_t> mask() const;

  friend bool operator==(const VertexSet&, const VertexSet&) = default;

 private:
  Forest host_;
  std::set<VertexId> members_;
};

/// Pre-order indices listed from the maximum of the total order "higher or
/// more on the left" down to its minimum: left-to-right post-order.
std::vector<std::size_t> postorder(const Forest& f);

/// vertex_order(F) = [u_1, ..., u_n], u_1 maximal.
std::vector<VertexId> vertex_order(const Forest& f);

/// The n+1 upward-closed sets I_k = {u_1..u_k}, a chain under inclusion.
std::vector<VertexSet> biideals(const Forest& f);

/// Induced forest on a vertex subset: each kept vertex hangs under its
/// nearest kept ancestor, siblings keep their planar order.
Forest restrict(const Forest& f, const VertexSet& s);  // throws on foreign set
Forest restrict_mask(const Forest& f, std::span<const std::uint8_t> keep);

Forest parse_forest(std::string_view text, const Alphabet& alphabet);
std::string render_forest(const Forest& f);
std::string render_tree(const Tree& t);

/// Every forest with at most `n_max` vertices, ordered by vertex count and
/// then by canonical text.
std::vector<Forest> enumerate_forests(std::size_t n_max, const Alphabet& alphabet);
/// Only those with exactly `n` vertices, same order.
std::vector<Forest> forests_of_size(std::size_t n, const Alphabet& alphabet);

}  // namespace fba

template <>
struct std::hash<fba::Forest> {
  std::size_t operator()(const fba::Forest& f) const noexcept { return f.hash(); }
};
