#include <algorithm>

#include "fba/forest.hpp"

namespace fba {
namespace {

// Builds trees and forests of each size bottom-up. forests[n] holds every
// forest with exactly n vertices as flat node lists.
class Enumerator {
 public:
  explicit Enumerator(const Alphabet& alphabet) : labels_(alphabet.all()) {
    forests_.push_back({{}});
    trees_.push_back({});
  }

  const std::vector<std::vector<Node>>& forests(std::size_t n) {
    while (forests_.size() <= n) extend();
    return forests_[n];
  }

 private:
  void extend() {
    std::size_t n = forests_.size();
    std::vector<std::vector<Node>> trees;
    for (const auto& d : labels_) {
      if (n == 1) {
        trees.push_back({Node{d, 1}});
      } else if (d.kind == Kind::omega) {
        for (const auto& below : forests_[n - 1]) {
          std::vector<Node> t;
          t.reserve(n);
          t.push_back(Node{d, static_cast<std::uint32_t>(n)});
          t.insert(t.end(), below.begin(), below.end());
          trees.push_back(std::move(t));
        }
      }
    }
    trees_.push_back(std::move(trees));

    // A forest of n vertices is a first tree of k vertices followed by a
    // forest of n - k vertices.
    std::vector<std::vector<Node>> forests;
    for (std::size_t k = 1; k <= n; ++k) {
      for (const auto& t : trees_[k]) {
        for (const auto& rest : forests_[n - k]) {
          std::vector<Node> f(t);
          f.insert(f.end(), rest.begin(), rest.end());
          forests.push_back(std::move(f));
        }
      }
    }
    forests_.push_back(std::move(forests));
  }

  std::vector<Decoration> labels_;
  std::vector<std::vector<std::vector<Node>>> trees_;
  std::vector<std::vector<std::vector<Node>>> forests_;
};

std::vector<Forest> sorted_by_text(const std::vector<std::vector<Node>>& raw) {
  std::vector<std::pair<std::string, Forest>> keyed;
  keyed.reserve(raw.size());
  for (const auto& nodes : raw) {
    auto f = Forest::from_nodes(nodes);
    keyed.emplace_back(render_forest(f), std::move(f));
  }
  std::sort(keyed.begin(), keyed.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  std::vector<Forest> out;
  out.reserve(keyed.size());
  for (auto& [text, f] : keyed) out.push_back(std::move(f));
  return out;
}

}  // namespace

std::vector<Forest> forests_of_size(std::size_t n, const Alphabet& alphabet) {
  Enumerator e(alphabet);
  return sorted_by_text(e.forests(n));
}

std::vector<Forest> enumerate_forests(std::size_t n_max, const Alphabet& alphabet) {
  Enumerator e(alphabet);
  std::vector<Forest> out;
  for (std::size_t n = 0; n <= n_max; ++n) {
    auto level = sorted_by_text(e.forests(n));
    out.insert(out.end(), std::make_move_iterator(level.begin()), std::make_move_iterator(level.end()));
  }
  return out;
}

}  // namespace fba
