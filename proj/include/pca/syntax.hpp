#pragma once

// Surface syntax for terms:
//   constants  K S D SUCC PRED P P0 P1 KBAR
//   numerals   #3
//   atoms      @name   (inert opaque element)
//   lambda     \x y. t     (compiled away by the compiler)
//   let        let x = t in u   (sugar for (\x. u) t)
//   comments   -- to end of line
// Application is juxtaposition, left associative.

#include "pca/term.hpp"

#include <cctype>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>

namespace pca {

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& msg, std::size_t line, std::size_t column)
      : std::runtime_error("parse error at " + std::to_string(line) + ":" + std::to_string(column) + ": " + msg),
        line_(line),
        column_(column) {}
  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_, column_;
};

/// Character-level cursor shared by the term, name and formula parsers.
class Scanner {
 public:
  explicit Scanner(std::string_view src, std::size_t line = 1) : src_(src), line_(line) {}

  void skip_space() {
    for (;;) {
      while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) advance();
      if (src_.substr(pos_, 2) == "--" && !(pos_ + 2 < src_.size() && src_[pos_ + 2] == '>')) {
        while (pos_ < src_.size() && src_[pos_] != '\n') advance();
        continue;
      }
      return;
    }
  }

  bool at_end() {
    skip_space();
    return pos_ >= src_.size();
  }

  char peek() {
    skip_space();
    return pos_ < src_.size() ? src_[pos_] : '\0';
  }

  char peek_raw(std::size_t off = 0) const { return pos_ + off < src_.size() ? src_[pos_ + off] : '\0'; }

  bool looking_at(std::string_view s) {
    skip_space();
    return src_.substr(pos_, s.size()) == s;
  }

  bool accept(std::string_view s) {
    if (!looking_at(s)) return false;
    for (std::size_t i = 0; i < s.size(); ++i) advance();
    return true;
  }

  void expect(std::string_view s) {
    if (!accept(s)) fail("expected '" + std::string(s) + "'");
  }

  static bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
  static bool ident_char(char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '\'';
  }

  /// Identifier at the cursor without consuming it ("" if none). Dots are
  /// part of an identifier when followed by an identifier character, so
  /// library names such as `ax.pairing` scan as one word.
  std::string peek_ident(bool allow_dots = true) {
    skip_space();
    if (!ident_start(peek_raw())) return {};
    std::size_t i = pos_;
    while (i < src_.size()) {
      if (ident_char(src_[i])) ++i;
      else if (allow_dots && src_[i] == '.' && i + 1 < src_.size() && ident_char(src_[i + 1]) && i > pos_) ++i;
      else break;
    }
    return std::string(src_.substr(pos_, i - pos_));
  }

  std::string ident(bool allow_dots = true) {
    std::string id = peek_ident(allow_dots);
    if (id.empty()) fail("expected an identifier");
    for (std::size_t i = 0; i < id.size(); ++i) advance();
    return id;
  }

  bool accept_word(std::string_view w) {
    if (peek_ident() != w) return false;
    for (std::size_t i = 0; i < w.size(); ++i) advance();
    return true;
  }

  void expect_word(std::string_view w) {
    if (!accept_word(w)) fail("expected '" + std::string(w) + "'");
  }

  Natural natural() {
    skip_space();
    if (!std::isdigit(static_cast<unsigned char>(peek_raw()))) fail("expected a natural number");
    std::string digits;
    while (std::isdigit(static_cast<unsigned char>(peek_raw()))) {
      digits += peek_raw();
      advance();
    }
    return Natural(digits);
  }

  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, line_, column_); }

  std::size_t position() const { return pos_; }
  std::size_t line() const { return line_; }
  std::string_view rest() const { return src_.substr(pos_); }

 private:
  void advance() {
    if (src_[pos_] == '\n') {
      ++line_;
      column_ = 1;
    } else {
      ++column_;
    }
    ++pos_;
  }

  std::string_view src_;
  std::size_t pos_ = 0;
  std::size_t line_ = 1;
  std::size_t column_ = 1;
};

inline const std::map<std::string, ConstKind>& const_keywords() {
  static const std::map<std::string, ConstKind> kw = {
      {"K", ConstKind::K},       {"S", ConstKind::S},   {"D", ConstKind::D},
      {"SUCC", ConstKind::Succ}, {"PRED", ConstKind::Pred}, {"P", ConstKind::P},
      {"P0", ConstKind::P0},     {"P1", ConstKind::P1}, {"KBAR", ConstKind::Kbar}};
  return kw;
}

/// Words that end a term inside larger constructs.
inline const std::set<std::string>& reserved_words() {
  static const std::set<std::string> w = {"let", "in", "expect", "witnesses", "instances", "mem", "eq", "all", "ex", "ALL", "EX"};
  return w;
}

/// Identifiers resolved while parsing: any free identifier found in the
/// table is replaced by its term.
using TermTable = std::map<std::string, Term>;

class TermParser {
 public:
  TermParser(Scanner& s, const TermTable* table = nullptr) : s_(s), table_(table) {}

  Term parse() {
    auto t = application();
    if (!t) s_.fail("expected a term");
    return *t;
  }

 private:
  bool starts_atom() {
    char c = s_.peek();
    if (c == '(' || c == '#' || c == '@') return true;
    if (c == '\\') return Scanner::ident_start(after_backslash());
    std::string id = s_.peek_ident();
    if (id.empty()) return false;
    if (id == "let") return true;
    return !reserved_words().count(id);
  }

  char after_backslash() {
    std::size_t i = 1;
    while (std::isspace(static_cast<unsigned char>(s_.peek_raw(i)))) ++i;
    return s_.peek_raw(i);
  }

  std::optional<Term> application() {
    std::optional<Term> acc;
    while (starts_atom()) {
      bool binder = s_.peek() == '\\' || s_.peek_ident() == "let";
      Term a = atom();
      acc = acc ? Term::app(*acc, a) : a;
      if (binder) break;  // a binder's body extends as far right as possible
    }
    return acc;
  }

  Term atom() {
    char c = s_.peek();
    if (c == '(') {
      s_.expect("(");
      Term t = parse();
      s_.expect(")");
      return t;
    }
    if (c == '#') {
      s_.expect("#");
      return Term::num(s_.natural());
    }
    if (c == '@') {
      s_.expect("@");
      return Term::opaque(s_.ident());
    }
    if (c == '\\') {
      s_.expect("\\");
      std::vector<std::string> vars;
      while (s_.peek() != '.') {
        std::string v = s_.ident(false);
        check_binder(v);
        vars.push_back(v);
      }
      if (vars.empty()) s_.fail("lambda without binders");
      s_.expect(".");
      bound_.insert(bound_.end(), vars.begin(), vars.end());
      Term body = parse();
      bound_.resize(bound_.size() - vars.size());
      for (auto it = vars.rbegin(); it != vars.rend(); ++it) body = Term::lam(*it, body);
      return body;
    }
    if (s_.accept_word("let")) {
      std::string v = s_.ident(false);
      check_binder(v);
      s_.expect("=");
      Term def = parse();
      s_.expect_word("in");
      bound_.push_back(v);
      Term body = parse();
      bound_.pop_back();
      return Term::app(Term::lam(v, body), def);
    }
    std::string id = s_.ident();
    auto kw = const_keywords().find(id);
    if (kw != const_keywords().end()) return Term::constant(kw->second);
    if (table_ && std::find(bound_.begin(), bound_.end(), id) == bound_.end()) {
      auto it = table_->find(id);
      if (it != table_->end()) return it->second;
    }
    return Term::var(id);
  }

  void check_binder(const std::string& v) {
    if (const_keywords().count(v) || reserved_words().count(v)) s_.fail("'" + v + "' cannot be bound");
  }

  Scanner& s_;
  const TermTable* table_;
  std::vector<std::string> bound_;
};

inline Term parse_term(std::string_view src, const TermTable* table = nullptr) {
  Scanner s(src);
  Term t = TermParser(s, table).parse();
  if (!s.at_end()) s.fail("unexpected trailing input");
  return t;
}

namespace detail {

inline void print_term(std::ostream& os, const Term& t, bool as_arg);

inline void print_head_and_args(std::ostream& os, const Term& t) {
  const auto& a = t.as<Term::App>();
  if (a.fun.is<Term::Lam>()) {
    os << '(';
    print_term(os, a.fun, false);
    os << ')';
  } else {
    print_term(os, a.fun, false);
  }
  os << ' ';
  print_term(os, a.arg, true);
}

inline void print_term(std::ostream& os, const Term& t, bool as_arg) {
  std::visit(
      [&](const auto& n) {
        using T = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<T, Term::Const>) {
          os << keyword(n.kind);
        } else if constexpr (std::is_same_v<T, Term::Num>) {
          os << '#' << n.n;
        } else if constexpr (std::is_same_v<T, Term::Var>) {
          os << n.name;
        } else if constexpr (std::is_same_v<T, Term::Opaque>) {
          if (n.value) print_term(os, value_term(*n.value), as_arg);
          else os << '@' << n.id;
        } else if constexpr (std::is_same_v<T, Term::App>) {
          if (as_arg) os << '(';
          print_head_and_args(os, t);
          if (as_arg) os << ')';
        } else {
          if (as_arg) os << '(';
          os << '\\' << n.var;
          const Term* body = &n.body;
          while (body->is<Term::Lam>()) {
            os << ' ' << body->as<Term::Lam>().var;
            body = &body->as<Term::Lam>().body;
          }
          os << ". ";
          print_term(os, *body, false);
          if (as_arg) os << ')';
        }
      },
      t.node());
}

}  // namespace detail

inline std::string to_string(const Term& t) {
  std::ostringstream os;
  detail::print_term(os, t, false);
  return os.str();
}

inline std::string to_string(const Value& v) { return to_string(value_term(v)); }

inline std::ostream& operator<<(std::ostream& os, const Term& t) { return os << to_string(t); }
inline std::ostream& operator<<(std::ostream& os, const Value& v) { return os << to_string(v); }

}  // namespace pca
