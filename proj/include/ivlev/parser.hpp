// ASCII formula grammar.
//
//   formula := disj [ "->" formula ]            (right associative)
//   disj    := conj { "|" conj }
//   conj    := unary { "&" unary }
//   unary   := "~" unary | "[]" unary | "<>" unary
//            | ("forall" | "exists") ident "." unary
//            | "(" formula ")" | ident [ "(" ident { "," ident } ")" ]
//
// Quantifiers bind like the other prefix operators: "forall x . P(x) -> q"
// reads as (forall x . P(x)) -> q. Term names bound by an enclosing
// quantifier are variables; otherwise a declared constant, or a free variable
// when the name starts with one of u..z.
#pragma once

#include <cctype>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "ivlev/formula.hpp"

namespace ivlev {

struct Signature {
  std::map<std::string, int> predicates;  // name -> arity >= 1
  std::vector<std::string> constants;     // ordered

  bool has_constant(std::string_view c) const {
    for (const auto& k : constants)
      if (k == c) return true;
    return false;
  }

  void add_constant(const std::string& c) {
    if (!has_constant(c)) constants.push_back(c);
  }
};

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : std::runtime_error(what + " at position " + std::to_string(position)),
        position_(position) {}
  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

inline bool looks_like_variable(std::string_view name) noexcept {
  return !name.empty() && name[0] >= 'u' && name[0] <= 'z';
}

namespace detail {

class Parser {
 public:
  // With infer set, undeclared predicates and constants are added to sig.
  Parser(std::string_view text, Signature& sig, bool infer)
      : text_(text), sig_(sig), infer_(infer) {}

  Formula parse_all() {
    Formula f = parse_formula();
    skip_ws();
    if (pos_ != text_.size()) fail("unexpected input");
    if (f.contains_prop_atoms() && f.contains_first_order())
      throw ParseError("mixed propositional and first-order syntax", 0);
    return f;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, pos_); }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(std::string_view tok) {
    skip_ws();
    if (text_.substr(pos_, tok.size()) == tok) {
      pos_ += tok.size();
      return true;
    }
    return false;
  }

  void expect(std::string_view tok) {
    if (!accept(tok)) fail("expected '" + std::string(tok) + "'");
  }

  static bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) != 0; }
  static bool ident_char(char c) {
    return std::isalnum(static_cast<unsigned char>(c)) != 0 || c == '_';
  }

  std::optional<std::string> peek_ident() {
    skip_ws();
    if (pos_ >= text_.size() || !ident_start(text_[pos_])) return std::nullopt;
    std::size_t end = pos_;
    while (end < text_.size() && ident_char(text_[end])) ++end;
    return std::string(text_.substr(pos_, end - pos_));
  }

  std::string ident() {
    auto id = peek_ident();
    if (!id) fail("expected identifier");
    pos_ += id->size();
    return *id;
  }

  Formula parse_formula() {
    Formula left = parse_disj();
    if (accept("->")) return Formula::imp(std::move(left), parse_formula());
    return left;
  }

  Formula parse_disj() {
    Formula left = parse_conj();
    while (accept("|")) left = Formula::disj(std::move(left), parse_conj());
    return left;
  }

  Formula parse_conj() {
    Formula left = parse_unary();
    while (accept("&")) left = Formula::conj(std::move(left), parse_unary());
    return left;
  }

  Formula parse_unary() {
    skip_ws();
    if (accept("~")) return Formula::neg(parse_unary());
    if (accept("[]")) return Formula::box(parse_unary());
    if (accept("<>")) return Formula::diamond(parse_unary());
    if (accept("(")) {
      Formula inner = parse_formula();
      expect(")");
      return inner;
    }
    std::size_t start = pos_;
    auto id = peek_ident();
    if (!id) fail("expected formula");
    if (*id == "forall" || *id == "exists") {
      pos_ += id->size();
      std::string var = ident();
      if (var == "forall" || var == "exists") fail("keyword used as variable");
      expect(".");
      bound_.push_back(var);
      Formula body = parse_unary();
      bound_.pop_back();
      return *id == "forall" ? Formula::forall(var, std::move(body))
                             : Formula::exists(var, std::move(body));
    }
    pos_ += id->size();
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == '(') {
      ++pos_;
      std::vector<Term> args;
      do {
        args.push_back(term());
      } while (accept(","));
      expect(")");
      auto it = sig_.predicates.find(*id);
      if (it == sig_.predicates.end()) {
        if (!infer_) throw ParseError("undeclared predicate '" + *id + "'", start);
        sig_.predicates.emplace(*id, static_cast<int>(args.size()));
      } else if (it->second != static_cast<int>(args.size())) {
        throw ParseError("arity mismatch for '" + *id + "': expected " +
                             std::to_string(it->second) + ", got " + std::to_string(args.size()),
                         start);
      }
      return Formula::atom(*id, std::move(args));
    }
    if (sig_.predicates.count(*id) != 0)
      throw ParseError("predicate '" + *id + "' used without arguments", start);
    return Formula::prop(*id);
  }

  Term term() {
    std::size_t start = pos_;
    std::string name = ident();
    if (name == "forall" || name == "exists") throw ParseError("keyword used as term", start);
    for (auto it = bound_.rbegin(); it != bound_.rend(); ++it)
      if (*it == name) return Term::var(name);
    if (sig_.has_constant(name)) return Term::constant(name);
    if (looks_like_variable(name)) return Term::var(name);
    if (!infer_) throw ParseError("undeclared constant '" + name + "'", start);
    sig_.constants.push_back(name);
    return Term::constant(name);
  }

  std::string_view text_;
  Signature& sig_;
  bool infer_;
  std::size_t pos_ = 0;
  std::vector<std::string> bound_;
};

}  // namespace detail

/// Parse against a fixed signature.
inline Formula parse(std::string_view text, const Signature& sig) {
  Signature copy = sig;
  return detail::Parser(text, copy, false).parse_all();
}

/// Parse, extending sig with any predicates and constants first seen here.
inline Formula parse_extending(std::string_view text, Signature& sig) {
  return detail::Parser(text, sig, true).parse_all();
}

/// Parse with a signature inferred from the text alone.
inline Formula parse(std::string_view text) {
  Signature sig;
  return parse_extending(text, sig);
}

}  // namespace ivlev
