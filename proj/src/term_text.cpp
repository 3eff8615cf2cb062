// Copyright 2026 The tw3 Authors
// SPDX-License-Identifier: Apache-2.0
#include <cctype>

#include "tw3/errors.hpp"
#include "tw3/term.hpp"

namespace tw3 {

namespace {

struct Tok {
  enum Type { Ident, Number, Punct, End } type;
  std::string text;
  int line, col;
};

class Lexer {
 public:
  explicit Lexer(const std::string& s) : s_(s) {}

  std::vector<Tok> run() {
    std::vector<Tok> out;
    while (true) {
      skip();
      if (i_ >= s_.size()) {
        out.push_back({Tok::End, "", line_, col_});
        return out;
      }
      char c = s_[i_];
      int l = line_, co = col_;
      if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
        std::string id;
        while (i_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[i_])) || s_[i_] == '_' || s_[i_] == '\''))
          id += adv();
        out.push_back({Tok::Ident, id, l, co});
      } else if (std::isdigit(static_cast<unsigned char>(c))) {
        std::string n;
        while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) n += adv();
        out.push_back({Tok::Number, n, l, co});
      } else if (std::string("()[],:{}").find(c) != std::string::npos) {
        out.push_back({Tok::Punct, std::string(1, adv()), l, co});
      } else {
        throw InputError("syntax error at line " + std::to_string(l) + ", column " + std::to_string(co) +
                         ": unexpected character '" + std::string(1, c) + "'");
      }
    }
  }

 private:
  char adv() {
    char c = s_[i_++];
    if (c == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    return c;
  }
  void skip() {
    while (i_ < s_.size()) {
      if (std::isspace(static_cast<unsigned char>(s_[i_]))) {
        adv();
      } else if (s_[i_] == '#') {  // comment to end of line
        while (i_ < s_.size() && s_[i_] != '\n') adv();
      } else {
        break;
      }
    }
  }
  const std::string& s_;
  size_t i_ = 0;
  int line_ = 1, col_ = 1;
};

bool reserved(const std::string& s) {
  return s == "top" || s == "par" || s == "lift" || s == "forget" || s == "perm" || s == "alphabet";
}

class Parser {
 public:
  explicit Parser(std::vector<Tok> toks) : t_(std::move(toks)) {}

  Term parse_all() {
    if (peek().type == Tok::Ident && peek().text == "alphabet") header();
    Term t = term();
    if (peek().type != Tok::End) fail(peek(), "trailing input '" + peek().text + "'");
    return t;
  }

 private:
  [[noreturn]] void fail(const Tok& at, const std::string& msg) {
    throw InputError("syntax error at line " + std::to_string(at.line) + ", column " + std::to_string(at.col) + ": " +
                     msg);
  }
  const Tok& peek(size_t ahead = 0) { return t_[std::min(p_ + ahead, t_.size() - 1)]; }
  Tok next() { return t_[std::min(p_++, t_.size() - 1)]; }
  void expect(const std::string& punct) {
    Tok t = next();
    if (t.type != Tok::Punct || t.text != punct)
      fail(t, "expected '" + punct + "', found '" + (t.type == Tok::End ? std::string("end of input") : t.text) + "'");
  }
  int number() {
    Tok t = next();
    if (t.type != Tok::Number) fail(t, "expected a number");
    if (t.text.size() > 6) fail(t, "number too large");
    return std::stoi(t.text);
  }

  void header() {
    next();
    expect("{");
    while (!(peek().type == Tok::Punct && peek().text == "}")) {
      Tok name = next();
      if (name.type != Tok::Ident || reserved(name.text)) fail(name, "expected a letter name");
      expect(":");
      int k = number();
      if (alphabet_.count(name.text)) fail(name, "letter '" + name.text + "' declared twice");
      alphabet_[name.text] = k;
      if (peek().type == Tok::Punct && peek().text == ",") next();
    }
    expect("}");
  }

  template <class F>
  Term sorted(const Tok& at, F&& build) {
    try {
      return build();
    } catch (const InputError& e) {
      throw InputError("line " + std::to_string(at.line) + ", column " + std::to_string(at.col) + ": " + e.what());
    }
  }

  Term term() {
    Tok head = next();
    if (head.type != Tok::Ident) fail(head, "expected a term");
    const std::string& h = head.text;
    if (h == "top") {
      expect(":");
      int k = number();
      return mk_top(k);
    }
    if (h == "par") {
      expect("(");
      Term a = term();
      expect(",");
      Term b = term();
      expect(")");
      return sorted(head, [&] { return mk_par(a, b); });
    }
    if (h == "lift" || h == "forget") {
      expect("(");
      Term a = term();
      expect(")");
      return sorted(head, [&] { return h == "lift" ? mk_lift(a) : mk_forget(a); });
    }
    if (h == "perm") {
      if (peek().type == Tok::Punct && peek().text == "[") {
        next();
        Perm p;
        if (!(peek().type == Tok::Punct && peek().text == "]")) {
          p.push_back(number());
          while (peek().type == Tok::Punct && peek().text == ",") {
            next();
            p.push_back(number());
          }
        }
        expect("]");
        expect("(");
        Term a = term();
        expect(")");
        return sorted(head, [&] { return mk_perm(p, a); });
      }
      std::vector<std::vector<int>> cycles;
      while (peek().type == Tok::Punct && peek().text == "(" &&
             (peek(1).type == Tok::Number || (peek(1).type == Tok::Punct && peek(1).text == ")"))) {
        next();
        std::vector<int> c;
        while (peek().type == Tok::Number) c.push_back(number());
        expect(")");
        cycles.push_back(c);
      }
      expect("(");
      Term a = term();
      expect(")");
      return sorted(head, [&] { return mk_perm(perm_from_cycles(a->arity, cycles), a); });
    }
    if (reserved(h)) fail(head, "'" + h + "' cannot be used as a letter");
    int k;
    if (peek().type == Tok::Punct && peek().text == ":") {
      next();
      k = number();
      auto it = alphabet_.find(h);
      if (it != alphabet_.end() && it->second != k)
        fail(head, "sort error: letter '" + h + "' declared with arity " + std::to_string(it->second) +
                       " but used with arity " + std::to_string(k));
    } else {
      auto it = alphabet_.find(h);
      if (it == alphabet_.end()) fail(head, "letter '" + h + "' has no declared arity");
      k = it->second;
    }
    auto [it, fresh] = used_.emplace(h, k);
    if (!fresh && it->second != k)
      fail(head, "sort error: letter '" + h + "' used with arities " + std::to_string(it->second) + " and " +
                     std::to_string(k));
    return mk_letter(h, k);
  }

  std::vector<Tok> t_;
  size_t p_ = 0;
  Alphabet alphabet_, used_;
};

void print_rec(const Term& t, std::string& out) {
  switch (t->kind) {
    case Kind::Par:
      out += "par(";
      print_rec(t->left, out);
      out += ", ";
      print_rec(t->right, out);
      out += ")";
      return;
    case Kind::Lift:
      out += "lift(";
      print_rec(t->left, out);
      out += ")";
      return;
    case Kind::Forget:
      out += "forget(";
      print_rec(t->left, out);
      out += ")";
      return;
    case Kind::Perm:
      out += "perm" + perm_to_string(t->perm) + "(";
      print_rec(t->left, out);
      out += ")";
      return;
    case Kind::Top:
      out += "top:" + std::to_string(t->arity);
      return;
    case Kind::Letter:
      out += t->name + ":" + std::to_string(t->arity);
      return;
  }
}

}  // namespace

Term parse_term(const std::string& text) { return Parser(Lexer(text).run()).parse_all(); }

std::string print_term(const Term& t) {
  std::string s;
  print_rec(t, s);
  return s;
}

}  // namespace tw3
