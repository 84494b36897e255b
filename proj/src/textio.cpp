#include "sqh/textio.hpp"

#include <cctype>

#include "sqh/errors.hpp"

namespace sqh {

std::string to_text(const Poly& p) { return p.str(); }

std::string to_text(const RatExpr& x) {
  if (x.is_polynomial()) return x.num().str();
  std::string n = x.num().str();
  if (x.num().size() > 1) n = "(" + n + ")";
  return n + "/(" + x.den().str() + ")";
}

// ---------------------------------------------------------------- parser

namespace {

class Parser {
 public:
  explicit Parser(std::string_view s) : s_(s) {}

  RatExpr run() {
    RatExpr r = expr();
    skip();
    if (pos_ != s_.size()) fail("unexpected trailing input");
    return r;
  }

 private:
  [[noreturn]] void fail(const std::string& why) {
    throw DomainError("parse error at offset " + std::to_string(pos_) + ": " + why);
  }
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool eat(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  RatExpr expr() {
    // Polynomial summands are collected and merged once; summing them one by
    // one would be quadratic on long expanded numerators.
    std::vector<Term> poly_terms;
    RatExpr rest;
    bool neg = false;
    if (eat('-')) neg = true;
    else eat('+');
    for (;;) {
      RatExpr t = term();
      if (neg) t = -t;
      if (t.is_polynomial()) poly_terms.insert(poly_terms.end(), t.num().terms().begin(), t.num().terms().end());
      else rest += t;
      if (eat('+')) neg = false;
      else if (eat('-')) neg = true;
      else break;
    }
    return RatExpr(Poly::from_terms(std::move(poly_terms))) + rest;
  }

  RatExpr term() {
    RatExpr r = unary();
    for (;;) {
      if (eat('*')) r = r * unary();
      else if (eat('/')) r = r / unary();
      else return r;
    }
  }

  RatExpr unary() {
    if (eat('-')) return -unary();
    if (eat('+')) return unary();
    return power();
  }

  RatExpr power() {
    RatExpr base = primary();
    if (!eat('^')) return base;
    bool paren = eat('(');
    bool neg = eat('-');
    skip();
    long e = number_literal();
    if (paren && !eat(')')) fail("expected ')'");
    return base.pow(int(neg ? -e : e));
  }

  long number_literal() {
    skip();
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) fail("expected integer");
    if (pos_ - start > 9) fail("integer exponent too large");
    return std::stol(std::string(s_.substr(start, pos_ - start)));
  }

  RatExpr primary() {
    skip();
    if (eat('(')) {
      RatExpr r = expr();
      if (!eat(')')) fail("expected ')'");
      return r;
    }
    if (pos_ >= s_.size()) fail("unexpected end of input");
    char c = s_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      return RatExpr(Rational::parse(s_.substr(start, pos_ - start)));
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < s_.size() && std::isalnum(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      auto v = Var::parse(s_.substr(start, pos_ - start));
      if (!v) fail("unknown variable '" + std::string(s_.substr(start, pos_ - start)) + "'");
      return RatExpr::of(*v);
    }
    fail(std::string("unexpected character '") + c + "'");
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

}  // namespace

RatExpr parse_ratexpr(std::string_view text) { return Parser(text).run(); }

// ---------------------------------------------------------------- json

json to_json(const Poly& p) {
  json arr = json::array();
  for (const auto& t : p.terms()) {
    json m = json::object();
    for (int i = 0; i < kNumVars; ++i)
      if (t.m.e[i]) m[Var::from_slot(i).name()] = int(t.m.e[i]);
    arr.push_back({{"c", t.c.str()}, {"m", m}});
  }
  return arr;
}

json to_json(const RatExpr& x) { return {{"num", to_json(x.num())}, {"den", to_json(x.den())}}; }

Poly poly_from_json(const json& j) {
  if (!j.is_array()) throw DomainError("polynomial JSON must be an array of terms");
  std::vector<Term> terms;
  for (const auto& t : j) {
    Term term;
    term.c = Rational::parse(t.at("c").get<std::string>());
    for (const auto& [name, e] : t.at("m").items()) {
      auto v = Var::parse(name);
      if (!v) throw DomainError("unknown variable '" + name + "' in JSON");
      term.m = term.m * Monomial::of(*v, e.get<int>());
    }
    terms.push_back(term);
  }
  return Poly::from_terms(std::move(terms));
}

RatExpr ratexpr_from_json(const json& j) {
  return RatExpr::fraction(poly_from_json(j.at("num")), poly_from_json(j.at("den")));
}

// ---------------------------------------------------------------- latex

namespace {

std::string latex_rational(const Rational& c) {
  if (c.is_integer()) return c.str();
  return "\\frac{" + c.numerator().get_str() + "}{" + c.denominator().get_str() + "}";
}

std::string latex_monomial(const Monomial& m) {
  std::string out;
  for (int i = 0; i < kNumVars; ++i) {
    int e = m.e[i];
    if (!e) continue;
    std::string name = Var::from_slot(i).latex();
    // A control word such as \hbar must not run into a following letter.
    if (!out.empty() && std::isalpha(static_cast<unsigned char>(out.back())) &&
        std::isalpha(static_cast<unsigned char>(name.front())))
      out += ' ';
    out += name;
    if (e != 1) out += "^{" + std::to_string(e) + "}";
  }
  return out;
}

std::string latex_factor(const Poly& p, int mult) {
  std::string body = p.is_monomial() && p.lead().c.is_one() ? to_latex(p) : "(" + to_latex(p) + ")";
  if (mult != 1) body += "^{" + std::to_string(mult) + "}";
  return body;
}

}  // namespace

std::string to_latex(const Poly& p) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& t : p.terms()) {
    Rational c = t.c;
    bool neg = c.sign() < 0;
    if (neg) c = -c;
    std::string mono = latex_monomial(t.m);
    std::string body = mono.empty() ? latex_rational(c) : (c.is_one() ? mono : latex_rational(c) + mono);
    if (first) out = neg ? "-" + body : body;
    else out += (neg ? " - " : " + ") + body;
    first = false;
  }
  return out;
}

std::string to_latex(const RatExpr& x) {
  if (x.is_polynomial()) return to_latex(x.num());
  std::string den;
  for (const auto& f : x.factors()) den += latex_factor(f.p, f.mult);
  if (!x.general().is_one()) den += latex_factor(x.general(), 1);
  return "\\frac{" + to_latex(x.num()) + "}{" + den + "}";
}

std::string to_latex_grouped(const RatExpr& x, const std::array<bool, kSlots>& mask) {
  if (x.is_zero()) return "0";
  std::vector<Monomial> keys;
  std::vector<std::vector<Term>> parts;
  for (const auto& t : x.num().terms()) {
    Monomial key, rest = t.m;
    for (int v = 0; v < kSlots; ++v)
      if (mask[std::size_t(v)] && t.m[v] != 0) {
        key.set(v, t.m[v]);
        rest.set(v, 0);
      }
    std::size_t i = 0;
    while (i < keys.size() && !(keys[i] == key)) ++i;
    if (i == keys.size()) {
      keys.push_back(key);
      parts.emplace_back();
    }
    parts[i].push_back({rest, t.c});
  }
  Poly den = x.den();
  std::string out;
  for (std::size_t i = 0; i < keys.size(); ++i) {
    RatExpr c = RatExpr::fraction(Poly::from_terms(parts[i]), den);
    std::string mono = latex_monomial(keys[i]);
    std::string body;
    bool neg = false;
    if (c.is_constant()) {
      Rational r = c.constant_value();
      neg = r.sign() < 0;
      if (neg) r = -r;
      body = mono.empty() ? latex_rational(r) : (r.is_one() ? mono : latex_rational(r) + mono);
    } else {
      std::string cl = to_latex(c);
      if (c.is_polynomial() && c.num().size() > 1) cl = "(" + cl + ")";
      else if (!cl.empty() && cl[0] == '-' ) {
        neg = true;
        cl = to_latex(-c);
      }
      body = mono.empty() ? cl : cl + mono;
    }
    if (out.empty()) out = neg ? "-" + body : body;
    else out += (neg ? " - " : " + ") + body;
  }
  return out;
}

}  // namespace sqh
