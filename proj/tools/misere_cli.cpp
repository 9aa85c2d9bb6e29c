// Command-line front end: misere <verb> [args] [--universe U] [--json] ...

#include <cstdlib>
#include <iostream>
#include <memory>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "misere/comparison.hpp"
#include "misere/dead_ends.hpp"
#include "misere/enumeration.hpp"
#include "misere/errors.hpp"
#include "misere/notation.hpp"
#include "misere/rulesets.hpp"
#include "misere/simplest_form.hpp"
#include "misere/universe.hpp"

using namespace misere;
using nlohmann::json;

namespace {

constexpr int kExitParse = 2;
constexpr int kExitUnsupported = 3;
constexpr int kExitBound = 4;
constexpr const char* kSchemaVersion = "1";

struct Options {
  std::string universe = "E";
  bool universe_given = false;
  bool json = false;
  bool explain = false;
  bool dot = false;
  bool swap = false;
  bool simplify = false;
  std::optional<unsigned> bound;
  std::optional<std::uint64_t> seed;
};

std::optional<unsigned long> env_number(const char* name) {
  const char* v = std::getenv(name);
  if (!v || !*v) return std::nullopt;
  char* end = nullptr;
  unsigned long n = std::strtoul(v, &end, 10);
  if (*end) throw std::invalid_argument(std::string(name) + " must be a number");
  return n;
}

json edges_json(GameStore& store, GameId g) {
  EdgeCount e = store.edge_count(g);
  if (e <= std::numeric_limits<std::uint64_t>::max()) return e.convert_to<std::uint64_t>();
  return e.str();
}

class Session {
 public:
  explicit Session(const Options& opt) : opt_(opt), dead_ends_(store_, opt.bound.value_or(5)) {
    if (auto n = env_number("MISERE_MAX_NODES")) store_.set_node_limit(*n);
    max_depth_ = env_number("MISERE_MAX_DEPTH");
  }

  GameId game(const std::string& text) {
    GameId g = parse_game(store_, text);
    if (max_depth_ && store_.formal_birthday(g) > *max_depth_)
      throw BoundExceeded("game height exceeds MISERE_MAX_DEPTH");
    return g;
  }

  Universe& universe() {
    if (!universe_) universe_ = parse_universe(dead_ends_, opt_.universe);
    return *universe_;
  }

  void emit(json j, const std::string& text) {
    if (opt_.json) {
      j["schema_version"] = kSchemaVersion;
      std::cout << j.dump(2) << '\n';
    } else {
      std::cout << text;
    }
  }

  int eval(const std::string& text) {
    GameId g = game(text);
    OutcomePair o = store_.outcome(g);
    json j{{"command", "eval"},
           {"game", to_string(store_, g)},
           {"outcome", std::string(1, outcome_letter(o.cls()))},
           {"birthday", store_.formal_birthday(g)},
           {"edges", edges_json(store_, g)}};
    std::string out = "outcome: " + std::string(1, outcome_letter(o.cls())) + "\n";
    out += "birthday: " + std::to_string(store_.formal_birthday(g)) + "\n";
    out += "edges: " + store_.edge_count(g).str() + "\n";
    if (opt_.universe_given) {
      Universe& u = universe();
      const bool member = !store_.has_tombstones_anywhere(g) && u.contains(g);
      j["universe"] = u.name();
      j["member"] = member;
      j["left_strong"] = u.is_left_strong(g);
      j["right_strong"] = u.is_right_strong(g);
      out += "universe: " + u.name() + "\n";
      out += std::string("member: ") + (member ? "yes" : "no") + "\n";
      out += std::string("left strong: ") + (u.is_left_strong(g) ? "yes" : "no") + "\n";
      out += std::string("right strong: ") + (u.is_right_strong(g) ? "yes" : "no") + "\n";
    }
    emit(j, out);
    return 0;
  }

  int compare_games(const std::string& a, const std::string& b) {
    GameId g = game(a), h = game(b);
    Universe& u = universe();
    const std::string rel(relation_symbol(compare(u, g, h)));
    emit({{"command", "compare"},
          {"universe", u.name()},
          {"left", to_string(store_, g)},
          {"right", to_string(store_, h)},
          {"relation", rel}},
         rel + "\n");
    return 0;
  }

  int simplify(const std::string& text) {
    GameId g = game(text);
    Universe& u = universe();
    ReductionTrace trace = simplest_form_traced(u, g, opt_.seed);
    json j{{"command", "simplify"},
           {"universe", u.name()},
           {"input", to_string(store_, g)},
           {"output", to_string(store_, trace.output)},
           {"edges", edges_json(store_, trace.output)}};
    std::string out = to_string(store_, trace.output) + "\n";
    if (opt_.explain) {
      j["trace"] = to_json(store_, trace);
      for (const ReductionStep& s : trace.steps) {
        out += std::string("  ") + step_name(s.kind) + " " + (s.side == Side::Left ? "L" : "R") + ": " +
               to_string(store_, s.before) + " -> " + to_string(store_, s.after) + "\n";
      }
    }
    emit(j, out);
    return 0;
  }

  int testset(unsigned n) {
    Universe& u = universe();
    json elems = json::array();
    std::string out;
    for (GameId x : u.test_set(n)) {
      elems.push_back(to_string(store_, x));
      out += to_string(store_, x) + "\n";
    }
    emit({{"command", "testset"}, {"universe", u.name()}, {"n", n}, {"elements", elems}}, out);
    return 0;
  }

  int lattice(unsigned n) {
    const DeadEndPoset& poset = dead_ends_.level(n);
    if (opt_.dot) {
      std::cout << to_dot(store_, dead_ends_.hasse(poset), "L" + std::to_string(n));
      return 0;
    }
    json elems = json::array();
    std::string out = "size: " + std::to_string(poset.size()) + "\n";
    for (GameId x : poset.elements) elems.push_back(to_string(store_, x));
    json j{{"command", "lattice"}, {"n", n}, {"size", poset.size()}, {"elements", elems}};
    if (poset.has_order()) {
      json covers = json::array();
      HasseDiagram d = dead_ends_.hasse(poset);
      for (auto [upper, lower] : d.covers) {
        covers.push_back({to_string(store_, upper), to_string(store_, lower)});
        out += to_string(store_, upper) + " > " + to_string(store_, lower) + "\n";
      }
      j["covers"] = covers;
    }
    emit(j, out);
    return 0;
  }

  int run_census(unsigned day) {
    Universe& u = universe();
    Census c = census(u, day);
    emit({{"command", "census"},
          {"universe", c.universe},
          {"day", day},
          {"trees", c.tree_count},
          {"distinct", c.distinct_count}},
         "trees: " + std::to_string(c.tree_count) + "\ndistinct: " + std::to_string(c.distinct_count) + "\n");
    return 0;
  }

  int board(const std::string& text, GridKind kind) {
    Grid grid = parse_grid(text, kind);
    Reducer reducer;
    if (opt_.simplify) {
      Universe& u = universe();
      reducer = [&u](GameId g) { return simplest_form(u, g); };
    }
    BoardEvaluator evaluator(store_, reducer, opt_.bound.value_or(64));
    GameId g = evaluator.evaluate(grid);
    if (opt_.swap) g = opt_.simplify ? simplest_form(universe(), store_.conjugate(g)) : store_.conjugate(g);
    json j{{"command", kind == GridKind::Domineering ? "domineering" : "clobber"},
           {"grid", grid.to_string()},
           {"value", to_string(store_, g)},
           {"outcome", std::string(1, outcome_letter(store_.outcome(g).cls()))},
           {"edges", edges_json(store_, g)}};
    if (opt_.simplify) j["universe"] = universe().name();
    emit(j, to_string(store_, g) + "\n");
    return 0;
  }

 private:
  const Options& opt_;
  GameStore store_;
  DeadEnds dead_ends_;
  std::unique_ptr<Universe> universe_;
  std::optional<unsigned long> max_depth_;
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Misere partizan game engine"};
  app.require_subcommand(1);
  Options opt;

  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("--universe,-u", opt.universe, "D | E | D(-1) | D(-1:0) | gen:<game>[,<game>...]");
    cmd->add_flag("--json", opt.json, "JSON output");
    cmd->add_option("--bound", opt.bound, "lattice level bound or board cell bound");
  };

  std::string a, b, grid;
  unsigned n = 0;

  auto* eval = app.add_subcommand("eval", "outcome, birthday and size of a game");
  eval->add_option("game", a)->required();
  add_common(eval);

  auto* cmp = app.add_subcommand("compare", "compare two games modulo a universe");
  cmp->add_option("left", a)->required();
  cmp->add_option("right", b)->required();
  add_common(cmp);

  auto* simp = app.add_subcommand("simplify", "simplest form modulo a universe");
  simp->add_option("game", a)->required();
  simp->add_flag("--explain", opt.explain, "print the reduction steps");
  simp->add_option("--seed", opt.seed, "shuffle the order in which reductions are tried");
  add_common(simp);

  auto* ts = app.add_subcommand("testset", "test set T_n of a universe");
  ts->add_option("n", n)->required();
  add_common(ts);

  auto* lat = app.add_subcommand("lattice", "Left dead-ends of birthday <= n");
  lat->add_option("n", n)->required();
  lat->add_flag("--dot", opt.dot, "Hasse diagram of the nonzero elements in DOT");
  add_common(lat);

  auto* cen = app.add_subcommand("census", "trees and distinct values born by a day");
  cen->add_option("day", n)->required();
  add_common(cen);

  auto* dom = app.add_subcommand("domineering", "Domineering position ('.' empty, '#' blocked, rows split by '|')");
  auto* clob = app.add_subcommand("clobber", "Clobber position ('x' Left, 'o' Right, '.' empty)");
  for (auto* cmd : {dom, clob}) {
    cmd->add_option("grid", grid)->required();
    cmd->add_flag("--simplify", opt.simplify, "reduce to simplest form in the universe");
    cmd->add_flag("--swap", opt.swap, "exchange the players");
    add_common(cmd);
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitParse;
  }
  for (auto* cmd : app.get_subcommands())
    if (cmd->count("--universe")) opt.universe_given = true;

  try {
    Session s(opt);
    if (eval->parsed()) return s.eval(a);
    if (cmp->parsed()) return s.compare_games(a, b);
    if (simp->parsed()) return s.simplify(a);
    if (ts->parsed()) return s.testset(n);
    if (lat->parsed()) return s.lattice(n);
    if (cen->parsed()) return s.run_census(n);
    if (dom->parsed()) return s.board(grid, GridKind::Domineering);
    if (clob->parsed()) return s.board(grid, GridKind::Clobber);
  } catch (const ParseError& e) {
    std::cerr << e.what() << '\n';
    return kExitParse;
  } catch (const UnsupportedUniverse& e) {
    std::cerr << "unsupported universe: " << e.what() << '\n';
    return kExitUnsupported;
  } catch (const BoundExceeded& e) {
    std::cerr << "bound exceeded: " << e.what() << '\n';
    return kExitBound;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 1;
}
