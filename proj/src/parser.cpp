#include <algorithm>
#include <cctype>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "twin/format.hpp"

namespace twin {

std::string ParseError::message() const {
  return std::to_string(line) + ":" + std::to_string(column) + ": expected " + expected + ", found " +
         found;
}

namespace {

enum class Tok { Ident, Number, Symbol, End };

struct Token {
  Tok kind = Tok::End;
  std::string text;
  int line = 1;
  int column = 1;
};

struct Failure {
  ParseError error;
};

class Lexer {
 public:
  explicit Lexer(std::string_view text) : text_(text) {}

  Token next() {
    skip_space();
    Token t;
    t.line = line_;
    t.column = column_;
    if (pos_ >= text_.size()) return t;
    const char c = text_[pos_];
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      t.kind = Tok::Ident;
      while (pos_ < text_.size() && (std::isalnum(static_cast<unsigned char>(text_[pos_])) ||
                                     text_[pos_] == '_' || text_[pos_] == '\''))
        t.text += advance();
      return t;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      t.kind = Tok::Number;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
        t.text += advance();
      return t;
    }
    t.kind = Tok::Symbol;
    static const char* two[] = {"->", "<=", ">=", "==", "&&"};
    for (const char* s : two) {
      if (text_.substr(pos_, 2) == s) {
        t.text += advance();
        t.text += advance();
        return t;
      }
    }
    static const std::string_view one = ";{}[],:<>";
    if (one.find(c) != std::string_view::npos) {
      t.text += advance();
      return t;
    }
    throw Failure{ParseError{t.line, t.column, "a token", printable(c)}};
  }

 private:
  static std::string printable(char c) {
    if (std::isprint(static_cast<unsigned char>(c))) return std::string("'") + c + "'";
    char buf[8];
    std::snprintf(buf, sizeof buf, "0x%02x", static_cast<unsigned char>(c));
    return buf;
  }

  char advance() {
    const char c = text_[pos_++];
    if (c == '\n') {
      ++line_;
      column_ = 1;
    } else {
      ++column_;
    }
    return c;
  }

  void skip_space() {
    while (pos_ < text_.size()) {
      const char c = text_[pos_];
      if (c == '#') {
        while (pos_ < text_.size() && text_[pos_] != '\n') advance();
      } else if (std::isspace(static_cast<unsigned char>(c))) {
        advance();
      } else {
        break;
      }
    }
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  int line_ = 1;
  int column_ = 1;
};

class Parser {
 public:
  explicit Parser(std::string_view text) : lexer_(text) { shift(); }

  ModelBundle run() {
    if (cur_.kind == Tok::End) fail("a declaration");
    while (cur_.kind != Tok::End) declaration();
    finish();
    return std::move(bundle_);
  }

 private:
  [[noreturn]] void fail(const std::string& expected) {
    std::string found = cur_.kind == Tok::End ? "end of input" : "'" + cur_.text + "'";
    throw Failure{ParseError{cur_.line, cur_.column, expected, found}};
  }

  void shift() { cur_ = lexer_.next(); }

  bool at(std::string_view symbol) const {
    return (cur_.kind == Tok::Symbol || cur_.kind == Tok::Ident) && cur_.text == symbol;
  }

  void expect(std::string_view symbol) {
    if (!at(symbol)) fail("'" + std::string(symbol) + "'");
    shift();
  }

  std::string ident(const std::string& what) {
    if (cur_.kind != Tok::Ident) fail(what);
    std::string s = cur_.text;
    shift();
    return s;
  }

  std::int64_t number(const std::string& what) {
    if (cur_.kind != Tok::Number) fail(what);
    if (cur_.text.size() > 15) fail("a number below 10^15");
    std::int64_t v = std::stoll(cur_.text);
    shift();
    return v;
  }

  int location_ref(const std::string& name) {
    auto& ta = bundle_.automaton;
    if (auto i = ta.find_location(name)) return *i;
    ta.locations.push_back(Location{name, {}, false});
    return ta.location_count() - 1;
  }

  void declaration() {
    if (at("clocks")) {
      shift();
      while (cur_.kind == Tok::Ident) {
        if (cur_.text == kGammaName) fail("a clock name (gamma is implicit)");
        if (bundle_.automaton.find_clock(cur_.text)) fail("a fresh clock name");
        if (bundle_.automaton.clock_count() >= kMaxClocks) fail("at most 31 clocks");
        bundle_.automaton.add_clock(cur_.text);
        shift();
      }
      expect(";");
    } else if (at("location")) {
      shift();
      location();
    } else if (at("edge")) {
      shift();
      edge();
    } else if (at("init")) {
      shift();
      if (saw_init_) fail("a single init declaration");
      init_name_ = ident("a location name");
      saw_init_ = true;
      expect(";");
    } else if (at("player1") || at("player2")) {
      const bool first = cur_.text == "player1";
      shift();
      expect(":");
      auto& side = first ? p1_ : p2_;
      while (cur_.kind == Tok::Ident) {
        side.push_back(cur_.text);
        shift();
      }
      expect(";");
      saw_partition_ = true;
    } else if (at("priority_count")) {
      shift();
      declared_count_ = static_cast<int>(number("a priority count"));
      if (*declared_count_ < 1) fail("a positive priority count");
      expect(";");
    } else {
      fail("a declaration");
    }
  }

  void location() {
    auto& ta = bundle_.automaton;
    const int line = cur_.line;
    const int col = cur_.column;
    std::string name = ident("a location name");
    if (auto i = ta.find_location(name); i && ta.locations[*i].declared)
      throw Failure{ParseError{line, col, "a fresh location name", "'" + name + "'"}};
    ClockConstraint inv;
    std::vector<int> prio;
    expect("{");
    while (!at("}")) {
      if (at("invariant")) {
        shift();
        expect(":");
        inv = constraint();
        expect(";");
      } else if (at("priority")) {
        shift();
        expect(":");
        expect("[");
        prio.push_back(static_cast<int>(number("a priority")));
        while (at(",")) {
          shift();
          prio.push_back(static_cast<int>(number("a priority")));
        }
        expect("]");
        expect(";");
      } else {
        fail("'invariant', 'priority' or '}'");
      }
    }
    shift();
    const int idx = ta.add_location(name, std::move(inv));
    if (static_cast<int>(priorities_.size()) <= idx) priorities_.resize(idx + 1);
    priorities_[idx] = std::move(prio);
  }

  void edge() {
    auto& ta = bundle_.automaton;
    const int src = location_ref(ident("a location name"));
    expect("->");
    const int dst = location_ref(ident("a location name"));
    ClockConstraint guard;
    std::optional<int> action;
    ClockSet resets = 0;
    expect("{");
    while (!at("}")) {
      if (at("guard")) {
        shift();
        expect(":");
        guard = constraint();
        expect(";");
      } else if (at("action")) {
        shift();
        expect(":");
        action = ta.add_action(ident("an action name"));
        expect(";");
      } else if (at("reset")) {
        shift();
        expect(":");
        expect("{");
        if (!at("}")) {
          resets |= ClockSet{1} << clock_ref();
          while (at(",")) {
            shift();
            resets |= ClockSet{1} << clock_ref();
          }
        }
        expect("}");
        expect(";");
      } else {
        fail("'guard', 'action', 'reset' or '}'");
      }
    }
    if (!action) fail("an action field before '}'");
    shift();
    ta.add_edge(src, dst, std::move(guard), *action, resets);
  }

  int clock_ref() {
    if (cur_.kind != Tok::Ident) fail("a clock name");
    auto c = bundle_.automaton.find_clock(cur_.text);
    if (!c) fail("a declared clock");
    shift();
    return *c;
  }

  ClockConstraint constraint() {
    ClockConstraint g;
    if (at("true")) {
      shift();
      return g;
    }
    atom(g);
    while (at("&&")) {
      shift();
      atom(g);
    }
    return g;
  }

  void atom(ClockConstraint& g) {
    const int clock = clock_ref();
    if (cur_.kind != Tok::Symbol) fail("a comparison operator");
    const std::string op = cur_.text;
    if (op != "<" && op != "<=" && op != ">=" && op != ">" && op != "==") fail("a comparison operator");
    shift();
    const std::int64_t bound = number("a natural-number bound");
    if (op == "==") {
      g.atoms.push_back(Atom{clock, Rel::Ge, bound});
      g.atoms.push_back(Atom{clock, Rel::Le, bound});
    } else {
      const Rel rel = op == "<" ? Rel::Lt : op == "<=" ? Rel::Le : op == ">=" ? Rel::Ge : Rel::Gt;
      g.atoms.push_back(Atom{clock, rel, bound});
    }
  }

  void finish() {
    auto& ta = bundle_.automaton;
    if (!saw_init_) fail("an init declaration");
    ta.initial = location_ref(init_name_);
    priorities_.resize(ta.location_count());
    auto& pf = bundle_.priorities;
    pf.table = priorities_;
    pf.dimensions = 1;
    int max_p = 0;
    for (const auto& row : pf.table) {
      if (!row.empty()) {
        pf.dimensions = static_cast<int>(row.size());
        break;
      }
    }
    for (const auto& row : pf.table)
      for (int p : row) max_p = std::max(max_p, p);
    pf.count = declared_count_ ? *declared_count_ : max_p + 1;
    if (saw_partition_) {
      PlayerPartition part;
      for (const auto& a : p1_) part.p1_actions.push_back(ta.add_action(a));
      for (const auto& a : p2_) part.p2_actions.push_back(ta.add_action(a));
      bundle_.partition = std::move(part);
    }
  }

  Lexer lexer_;
  Token cur_;
  ModelBundle bundle_;
  std::vector<std::vector<int>> priorities_;
  std::string init_name_;
  bool saw_init_ = false;
  bool saw_partition_ = false;
  std::optional<int> declared_count_;
  std::vector<std::string> p1_, p2_;
};

}  // namespace

ParseResult parse_model(std::string_view text) {
  try {
    return Parser(text).run();
  } catch (const Failure& f) {
    return f.error;
  }
}

ModelBundle load_model_text(std::string_view text) {
  ParseResult r = parse_model(text);
  if (auto* e = std::get_if<ParseError>(&r)) throw std::runtime_error("parse error at " + e->message());
  ModelBundle b = std::get<ModelBundle>(std::move(r));
  ValidationReport report = validate_model(b.automaton, b.priorities, b.partition);
  if (!report.ok()) {
    std::string msg = "invalid model:";
    for (const auto& v : report.violations) msg += "\n  " + v.subject + ": " + v.message;
    throw std::runtime_error(msg);
  }
  return b;
}

ModelBundle load_model_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return load_model_text(ss.str());
}

TimedGame game_of(const ModelBundle& bundle) {
  if (bundle.partition) return make_game(bundle.automaton, *bundle.partition);
  return make_game(bundle.automaton);
}

}  // namespace twin
