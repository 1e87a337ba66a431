#include <string>

#include "fba/error.hpp"
#include "fba/forest.hpp"

namespace fba {
namespace {

class ForestParser {
 public:
  ForestParser(std::string_view text, const Alphabet& alphabet) : text_(text), alphabet_(alphabet) {}

  Forest parse() {
    skip_spaces();
    auto nodes = parse_forest_body();
    skip_spaces();
    if (pos_ != text_.size()) fail("unexpected character '" + std::string(1, text_[pos_]) + "'");
    return Forest::from_nodes(std::move(nodes));
  }

 private:
  std::vector<Node> parse_forest_body() {
    std::vector<Node> nodes;
    if (peek() == '1') {
      ++pos_;
      if (is_ident_char(peek())) fail("identifiers cannot start with a digit");
      return nodes;
    }
    parse_tree(nodes);
    while (true) {
      std::size_t save = pos_;
      skip_spaces();
      if (pos_ == save || !is_ident_start(peek())) {
        pos_ = save;
        break;
      }
      parse_tree(nodes);
    }
    return nodes;
  }

  void parse_tree(std::vector<Node>& nodes) {
    std::size_t start = pos_;
    if (!is_ident_start(peek())) fail(pos_ == text_.size() ? "unexpected end of input" : "expected a symbol");
    while (is_ident_char(peek())) ++pos_;
    auto name = text_.substr(start, pos_ - start);
    auto deco = alphabet_.lookup(name);
    if (!deco) throw SymbolError("unknown symbol '" + std::string(name) + "' at position " + std::to_string(start));
    std::size_t self = nodes.size();
    nodes.push_back(Node{*deco, 1});
    if (peek() != '[') return;
    if (deco->kind == Kind::x)
      throw SymbolError("X-decorated symbol '" + std::string(name) + "' cannot have children (position " +
                        std::to_string(pos_) + ")");
    ++pos_;
    skip_spaces();
    auto children = parse_forest_body();
    skip_spaces();
    if (peek() != ']') fail("expected ']'");
    ++pos_;
    nodes[self].size = static_cast<std::uint32_t>(children.size() + 1);
    nodes.insert(nodes.end(), children.begin(), children.end());
  }

  char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }
  void skip_spaces() {
    while (peek() == ' ') ++pos_;
  }
  static bool is_ident_start(char c) { return (c >= 'A' && c <= 'Z') || (c >= 'a' && c <= 'z') || c == '_'; }
  static bool is_ident_char(char c) { return is_ident_start(c) || (c >= '0' && c <= '9'); }
  [[noreturn]] void fail(const std::string& what) const { throw ParseError("forest: " + what, pos_); }

  std::string_view text_;
  const Alphabet& alphabet_;
  std::size_t pos_ = 0;
};

void render_range(std::span<const Node> nodes, std::size_t begin, std::size_t end, std::string& out) {
  bool first = true;
  for (std::size_t i = begin; i < end; i += nodes[i].size) {
    if (!first) out += ' ';
    first = false;
    out += nodes[i].deco.symbol.name();
    if (nodes[i].size > 1) {
      out += '[';
      render_range(nodes, i + 1, i + nodes[i].size, out);
      out += ']';
    }
  }
}

}  // namespace

Forest parse_forest(std::string_view text, const Alphabet& alphabet) {
  return ForestParser(text, alphabet).parse();
}

std::string render_forest(const Forest& f) {
  if (f.empty()) return "1";
  std::string out;
  render_range(f.nodes(), 0, f.nvertices(), out);
  return out;
}

std::string render_tree(const Tree& t) { return render_forest(t.as_forest()); }

}  // namespace fba
