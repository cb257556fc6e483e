#include "bsswb/program.hpp"

#include <cctype>
#include <map>
#include <sstream>

#include "bsswb/error.hpp"
#include "bsswb/expr.hpp"

namespace bsswb {

namespace {

struct Token {
  std::string text;
  int column;  // 1-based
};

// Splits on whitespace and commas; `->`, `=` and `:` are separate tokens.
std::vector<Token> tokenize(std::string_view line) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < line.size()) {
    char c = line[i];
    if (std::isspace(static_cast<unsigned char>(c)) || c == ',') {
      ++i;
      continue;
    }
    std::size_t start = i;
    if (line.substr(i, 2) == "->") {
      i += 2;
    } else if (c == '=' || c == ':') {
      ++i;
    } else {
      while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i])) &&
             line[i] != ',' && line[i] != ':' && line[i] != '=' && line.substr(i, 2) != "->")
        ++i;
    }
    out.push_back({std::string(line.substr(start, i - start)), static_cast<int>(start) + 1});
  }
  return out;
}

bool is_identifier(const std::string& s) {
  if (s.empty() || !(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_')) return false;
  for (char c : s)
    if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_')) return false;
  return true;
}

struct PendingRef {
  std::string name;
  int line, column;
  std::size_t state;
  int branch;
  bool no_branch;
};

struct PendingSlot {
  unsigned slot;
  int line, column;
};

class Parser {
 public:
  Parser(std::string_view text, bool control) : text_(text), control_(control) {}

  ControlText run() {
    std::size_t pos = 0;
    int lineno = 0;
    while (pos <= text_.size()) {
      std::size_t end = text_.find('\n', pos);
      if (end == std::string_view::npos) end = text_.size();
      std::string_view line = text_.substr(pos, end - pos);
      ++lineno;
      if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
      parse_line(line, lineno);
      pos = end + 1;
    }
    finish();
    return std::move(out_);
  }

 private:
  [[noreturn]] void fail(Errc code, const std::string& msg, int line, int column) {
    throw Error(code, msg, line, column);
  }

  unsigned parse_uint(const Token& t, int line) {
    if (t.text.empty() || t.text.size() > 9) fail(Errc::SyntaxError, "expected a number", line, t.column);
    for (char c : t.text)
      if (!std::isdigit(static_cast<unsigned char>(c)))
        fail(Errc::SyntaxError, "expected a number, got '" + t.text + "'", line, t.column);
    return static_cast<unsigned>(std::stoul(t.text));
  }

  bool parse_flag(const std::vector<Token>& toks, int line) {
    if (toks.size() != 2 || (toks[1].text != "on" && toks[1].text != "off"))
      fail(Errc::SyntaxError, toks[0].text + " expects on|off", line,
           toks.size() > 1 ? toks[1].column : toks[0].column);
    return toks[1].text == "on";
  }

  void expect_count(const std::vector<Token>& toks, std::size_t n, int line) {
    if (toks.size() != n)
      fail(Errc::SyntaxError, "malformed " + toks[0].text + " line", line,
           toks.size() > n ? toks[n].column : toks.back().column);
  }

  void parse_line(std::string_view line, int lineno) {
    auto toks = tokenize(line);
    if (toks.empty()) return;
    const std::string& head = toks[0].text;
    Program& p = out_.program;
    if (head == "SYMBOLS") {
      expect_count(toks, 2, lineno);
      p.symbols = parse_uint(toks[1], lineno);
    } else if (head == "ORACLE") {
      p.oracle = parse_flag(toks, lineno);
    } else if (head == "SELF") {
      p.self_reference = parse_flag(toks, lineno);
    } else if (head == "DELEGATE") {
      p.delegate = parse_flag(toks, lineno);
    } else if (head == "CONSTS" && control_) {
      expect_count(toks, 2, lineno);
      out_.nconsts = parse_uint(toks[1], lineno);
    } else if (head == "DUMMY" && control_) {
      out_.dummy = parse_flag(toks, lineno);
    } else if (head == "CONST" && !control_) {
      parse_const_def(line, toks, lineno);
    } else if (head == "PREFIX") {
      parse_prefix(toks, lineno);
    } else if (head == "STATE") {
      if (toks.size() != 3 || toks[2].text != ":" || !is_identifier(toks[1].text))
        fail(Errc::SyntaxError, "expected 'STATE name:'", lineno, toks[0].column);
      if (index_.count(toks[1].text))
        fail(Errc::SyntaxError, "duplicate state '" + toks[1].text + "'", lineno, toks[1].column);
      index_[toks[1].text] = p.states.size();
      p.states.push_back(State{toks[1].text, {}});
      seen_.push_back({false, false, false});
      state_lines_.push_back(lineno);
    } else if (head == "NEG" || head == "ZERO" || head == "POS") {
      parse_branch(toks, lineno);
    } else {
      fail(Errc::SyntaxError, "unknown directive '" + head + "'", lineno, toks[0].column);
    }
  }

  void parse_const_def(std::string_view line, const std::vector<Token>& toks, int lineno) {
    if (toks.size() < 4 || toks[2].text != "=")
      fail(Errc::SyntaxError, "expected 'CONST j = expr'", lineno, toks[0].column);
    unsigned j = parse_uint(toks[1], lineno);
    if (j == 0) fail(Errc::BadConstIndex, "constant slots start at 1", lineno, toks[1].column);
    if (defs_.count(j)) fail(Errc::SyntaxError, "constant slot defined twice", lineno, toks[1].column);
    std::size_t expr_start = line.find('=') + 1;
    try {
      defs_[j] = parse_field_elem(line.substr(expr_start), out_.program.symbols);
    } catch (const Error& e) {
      fail(e.code(), e.what(), lineno, static_cast<int>(expr_start) + std::max(e.column(), 1));
    }
    def_lines_[j] = {lineno, toks[1].column};
  }

  void parse_prefix(const std::vector<Token>& toks, int lineno) {
    for (std::size_t i = 1; i < toks.size(); ++i) {
      if (toks[i].text == "CONST") {
        if (i + 1 >= toks.size()) fail(Errc::SyntaxError, "CONST needs a slot", lineno, toks[i].column);
        unsigned j = parse_uint(toks[i + 1], lineno);
        slots_.push_back({j, lineno, toks[i + 1].column});
        out_.program.prefix.push_back(PrefixItem{std::nullopt, j});
        ++i;
      } else {
        try {
          out_.program.prefix.push_back(PrefixItem{parse_rat(toks[i].text), 0});
        } catch (const Error& e) {
          fail(e.code(), e.what(), lineno, toks[i].column);
        }
      }
    }
  }

  void parse_branch(const std::vector<Token>& toks, int lineno) {
    Program& p = out_.program;
    if (p.states.empty()) fail(Errc::SyntaxError, "branch outside of a STATE", lineno, toks[0].column);
    int branch = toks[0].text == "NEG" ? 0 : toks[0].text == "ZERO" ? 1 : 2;
    std::size_t st = p.states.size() - 1;
    if (seen_[st][branch]) fail(Errc::SyntaxError, "duplicate " + toks[0].text + " branch", lineno, toks[0].column);
    seen_[st][branch] = true;
    if (toks.size() < 3 || toks[1].text != "->")
      fail(Errc::SyntaxError, "expected '->'", lineno, toks.size() > 1 ? toks[1].column : toks[0].column);
    Transition& tr = p.states[st].on[branch];
    std::size_t i = 2;
    const Token& m = toks[i++];
    using K = Action::Kind;
    static const std::map<std::string, K> simple = {
        {"COPY", K::Copy}, {"ADD", K::Add}, {"SUB", K::Sub},       {"MUL", K::Mul},
        {"DIV", K::Div},   {"HALT", K::Halt}, {"QWRITE", K::QWrite}, {"QUERY", K::Query}};
    static const std::map<std::string, K> moves = {
        {"MOVER", K::MoveRead}, {"MOVEW", K::MoveWrite}, {"MOVEQ", K::MoveQuery}};
    if (auto it = simple.find(m.text); it != simple.end()) {
      tr.action.kind = it->second;
    } else if (auto mv = moves.find(m.text); mv != moves.end()) {
      tr.action.kind = mv->second;
      if (i >= toks.size() || (toks[i].text != "L" && toks[i].text != "R"))
        fail(Errc::SyntaxError, m.text + " expects L or R", lineno, i < toks.size() ? toks[i].column : m.column);
      tr.action.dir = toks[i].text == "L" ? Dir::L : Dir::R;
      ++i;
    } else if (m.text == "CONST") {
      tr.action.kind = K::Const;
      if (i >= toks.size()) fail(Errc::SyntaxError, "CONST needs a slot", lineno, m.column);
      tr.action.slot = parse_uint(toks[i], lineno);
      slots_.push_back({tr.action.slot, lineno, toks[i].column});
      ++i;
    } else {
      fail(Errc::SyntaxError, "unknown action '" + m.text + "'", lineno, m.column);
    }
    if (tr.action.kind == K::Query && !p.oracle)
      fail(Errc::SyntaxError, "QUERY requires ORACLE on", lineno, m.column);
    std::size_t want = tr.action.kind == K::Halt ? 0 : tr.action.kind == K::Query ? 2 : 1;
    if (toks.size() - i != want)
      fail(Errc::SyntaxError,
           want == 0   ? "HALT takes no successor"
           : want == 1 ? "expected exactly one successor state"
                       : "QUERY expects yes and no successor states",
           lineno, toks.size() > i + want ? toks[i + want].column : toks.back().column);
    for (std::size_t k = 0; k < want; ++k) {
      const Token& t = toks[i + k];
      if (!is_identifier(t.text)) fail(Errc::SyntaxError, "bad state name '" + t.text + "'", lineno, t.column);
      refs_.push_back({t.text, lineno, t.column, st, branch, k == 1});
    }
  }

  void finish() {
    Program& p = out_.program;
    static const char* names[3] = {"NEG", "ZERO", "POS"};
    for (std::size_t s = 0; s < p.states.size(); ++s)
      for (int b = 0; b < 3; ++b)
        if (!seen_[s][b])
          fail(Errc::MissingTransition,
               "state '" + p.states[s].name + "' lacks a " + names[b] + " branch", state_lines_[s], 1);
    for (const auto& r : refs_) {
      auto it = index_.find(r.name);
      if (it == index_.end()) fail(Errc::UnknownState, "unknown state '" + r.name + "'", r.line, r.column);
      Transition& tr = p.states[r.state].on[r.branch];
      (r.no_branch ? tr.next_no : tr.next) = it->second;
    }
    if (!control_) {
      unsigned j = 0;
      for (const auto& [slot, value] : defs_) {
        if (slot != ++j)
          fail(Errc::BadConstIndex, "constant slots must be numbered 1..J without gaps",
               def_lines_[slot].first, def_lines_[slot].second);
        p.constants.push_back(value);
      }
      out_.nconsts = j;
    }
    for (const auto& s : slots_)
      if (s.slot == 0 || s.slot > out_.nconsts)
        fail(Errc::BadConstIndex, "constant slot " + std::to_string(s.slot) + " out of range", s.line, s.column);
  }

  std::string_view text_;
  bool control_;
  ControlText out_;
  std::map<std::string, std::size_t> index_;
  std::vector<std::array<bool, 3>> seen_;
  std::vector<int> state_lines_;
  std::vector<PendingRef> refs_;
  std::vector<PendingSlot> slots_;
  std::map<unsigned, FieldElem> defs_;
  std::map<unsigned, std::pair<int, int>> def_lines_;
};

std::string render(const Program& p, bool control, bool dummy) {
  std::ostringstream os;
  if (p.symbols) os << "SYMBOLS " << p.symbols << "\n";
  if (p.oracle) os << "ORACLE on\n";
  if (p.self_reference) os << "SELF on\n";
  if (p.delegate) os << "DELEGATE on\n";
  if (control) {
    if (!p.constants.empty()) os << "CONSTS " << p.constants.size() << "\n";
    if (dummy) os << "DUMMY on\n";
  } else {
    for (std::size_t j = 0; j < p.constants.size(); ++j)
      os << "CONST " << j + 1 << " = " << to_string(p.constants[j]) << "\n";
  }
  if (!p.prefix.empty()) {
    os << "PREFIX";
    for (std::size_t i = 0; i < p.prefix.size(); ++i) {
      os << (i ? ", " : " ");
      if (p.prefix[i].value)
        os << to_string(*p.prefix[i].value);
      else
        os << "CONST " << p.prefix[i].slot;
    }
    os << "\n";
  }
  static const char* names[3] = {"NEG", "ZERO", "POS"};
  for (const auto& s : p.states) {
    os << "STATE " << s.name << ":\n";
    for (int b = 0; b < 3; ++b) {
      const Transition& t = s.on[b];
      os << "  " << names[b] << " -> " << to_string(t.action);
      if (t.action.kind != Action::Kind::Halt) os << ", " << p.states.at(t.next).name;
      if (t.action.kind == Action::Kind::Query) os << ", " << p.states.at(t.next_no).name;
      os << "\n";
    }
  }
  return os.str();
}

}  // namespace

std::string to_string(const Action& a) {
  using K = Action::Kind;
  const char* d = a.dir == Dir::L ? " L" : " R";
  switch (a.kind) {
    case K::Copy: return "COPY";
    case K::Add: return "ADD";
    case K::Sub: return "SUB";
    case K::Mul: return "MUL";
    case K::Div: return "DIV";
    case K::Const: return "CONST " + std::to_string(a.slot);
    case K::MoveRead: return std::string("MOVER") + d;
    case K::MoveWrite: return std::string("MOVEW") + d;
    case K::MoveQuery: return std::string("MOVEQ") + d;
    case K::QWrite: return "QWRITE";
    case K::Halt: return "HALT";
    case K::Query: return "QUERY";
  }
  return "?";
}

Program parse_program(std::string_view text) { return Parser(text, false).run().program; }

ControlText parse_control(std::string_view text) { return Parser(text, true).run(); }

std::string print_program(const Program& p) { return render(p, false, false); }

std::string print_control(const Program& p, bool dummy) { return render(p, true, dummy); }

}  // namespace bsswb
