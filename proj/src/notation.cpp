#include "misere/notation.hpp"

#include <algorithm>
#include <cctype>
#include <vector>

#include "misere/errors.hpp"

namespace misere {

namespace {

class Parser {
 public:
  Parser(GameStore& store, std::string_view text) : store_(store), text_(text) {}

  GameId parse() {
    GameId g = game();
    skip_space();
    if (pos_ != text_.size()) fail("trailing input");
    return g;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(pos_, msg); }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool peek(std::string_view token) {
    skip_space();
    return text_.substr(pos_, token.size()) == token;
  }

  bool accept(std::string_view token) {
    if (!peek(token)) return false;
    pos_ += token.size();
    return true;
  }

  void expect(std::string_view token) {
    if (!accept(token)) fail("expected '" + std::string(token) + "'");
  }

  long number() {
    skip_space();
    const std::size_t start = pos_;
    long value = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      value = value * 10 + (text_[pos_] - '0');
      if (value > 100000) fail("integer too large");
      ++pos_;
    }
    if (pos_ == start) fail("expected digits");
    return value;
  }

  GameId game() {
    skip_space();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    if (accept("*")) return store_.star();
    if (accept("{")) return braces();
    if (accept("+-")) {
      GameId g = game();
      return store_.intern({g}, {store_.conjugate(g)});
    }
    if (accept("M(")) {
      long n = number();
      expect(")");
      return store_.perfect_murder(static_cast<unsigned>(n));
    }
    bool negative = accept("-");
    long n = number();
    return store_.integer(negative ? -n : n);
  }

  GameId braces() {
    std::vector<GameId> left, right;
    bool sigma_left = false, sigma_right = false;
    list(Side::Left, left, sigma_left);
    expect("|");
    list(Side::Right, right, sigma_right);
    expect("}");
    return store_.intern(left, right, sigma_left, sigma_right);
  }

  void list(Side side, std::vector<GameId>& out, bool& sigma) {
    if (peek("|") || peek("}")) return;
    do {
      if (peek("SL") || peek("SR")) {
        const bool is_left_tomb = peek("SL");
        if (is_left_tomb != (side == Side::Left)) fail("tombstone on the wrong side");
        pos_ += 2;
        sigma = true;
      } else {
        out.push_back(game());
      }
    } while (accept(","));
  }

  GameStore& store_;
  std::string_view text_;
  std::size_t pos_ = 0;
};

class Printer {
 public:
  explicit Printer(GameStore& store) : store_(store) {}

  void print(GameId g, std::string& out) {
    if (auto n = store_.as_integer(g)) {
      out += std::to_string(*n);
      return;
    }
    GameNode node = store_.node(g);
    if (g == store_.star()) {
      out += '*';
      return;
    }
    if (!node.has_tombstone() && node.left.size() == 1 && node.right.size() == 1 &&
        store_.conjugate(node.left[0]) == node.right[0]) {
      out += "+-";
      print(node.left[0], out);
      return;
    }
    out += '{';
    side(node.left, node.sigma_left ? "SL" : nullptr, out);
    out += '|';
    side(node.right, node.sigma_right ? "SR" : nullptr, out);
    out += '}';
  }

 private:
  void side(std::span<const GameId> options, const char* tomb, std::string& out) {
    std::vector<GameId> ordered(options.begin(), options.end());
    std::stable_sort(ordered.begin(), ordered.end(), [&](GameId a, GameId b) {
      return store_.formal_birthday(a) > store_.formal_birthday(b);
    });
    bool first = true;
    for (GameId g : ordered) {
      if (!first) out += ',';
      first = false;
      print(g, out);
    }
    if (tomb) {
      if (!first) out += ',';
      out += tomb;
    }
  }

  GameStore& store_;
};

}  // namespace

GameId parse_game(GameStore& store, std::string_view text) { return Parser(store, text).parse(); }

std::string to_string(GameStore& store, GameId g) {
  std::string out;
  Printer(store).print(g, out);
  return out;
}

}  // namespace misere
