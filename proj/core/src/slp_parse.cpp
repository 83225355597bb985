#include <algorithm>
#include <cctype>
#include <set>

#include "polar/slp.hpp"

namespace polar {

namespace {

bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }
bool digit(char c) { return std::isdigit(static_cast<unsigned char>(c)) != 0; }

class Parser {
 public:
  Parser(std::string_view text, std::span<const std::string> variables)
      : text_(text), vars_(variables), builder_(variables.size()) {}

  Slp run() && {
    std::size_t root = expr();
    skip_space();
    if (pos_ != text_.size()) fail(std::string("unexpected '") + text_[pos_] + "'");
    return std::move(builder_).finish({root});
  }

 private:
  [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, pos_); }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  std::size_t expr() {
    std::size_t acc = term();
    while (true) {
      if (accept('+')) acc = builder_.add(acc, term());
      else if (accept('-')) acc = builder_.sub(acc, term());
      else return acc;
    }
  }

  std::size_t term() {
    std::size_t acc = unary();
    while (true) {
      if (accept('*')) {
        acc = builder_.mul(acc, unary());
      } else if (accept('/')) {
        std::size_t at = pos_;
        std::size_t d = unary();
        if (!builder_.is_constant(d)) throw ParseError("division by a non-constant expression", at);
        if (sgn(builder_.constant_value(d)) == 0) throw ParseError("division by zero", at);
        acc = builder_.mul(acc, builder_.constant(1 / builder_.constant_value(d)));
      } else {
        return acc;
      }
    }
  }

  std::size_t unary() {
    if (accept('-')) return builder_.neg(unary());
    if (accept('+')) return unary();
    return power();
  }

  std::size_t power() {
    std::size_t base = primary();
    if (!accept('^')) return base;
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == '-') fail("negative exponent");
    if (pos_ >= text_.size() || !digit(text_[pos_])) fail("expected integer exponent");
    std::size_t start = pos_;
    while (pos_ < text_.size() && digit(text_[pos_])) ++pos_;
    Integer e(std::string(text_.substr(start, pos_ - start)));
    if (e > 1u << 16) throw ParseError("exponent too large", start);
    std::size_t node = builder_.pow(base, static_cast<unsigned>(e.get_ui()));
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == '^') fail("chained exponent needs parentheses");
    return node;
  }

  std::size_t primary() {
    skip_space();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      std::size_t inner = expr();
      if (!accept(')')) fail("expected ')'");
      return inner;
    }
    if (digit(c)) {
      std::size_t start = pos_;
      while (pos_ < text_.size() && digit(text_[pos_])) ++pos_;
      return builder_.constant(Rational(Integer(std::string(text_.substr(start, pos_ - start)))));
    }
    if (ident_start(c)) {
      std::size_t start = pos_;
      while (pos_ < text_.size() && ident_char(text_[pos_])) ++pos_;
      std::string_view name = text_.substr(start, pos_ - start);
      for (std::size_t k = 0; k < vars_.size(); ++k) {
        if (vars_[k] == name) return builder_.input(k);
      }
      throw ParseError("unknown identifier '" + std::string(name) + "'", start);
    }
    fail(std::string("unexpected '") + c + "'");
  }

  std::string_view text_;
  std::span<const std::string> vars_;
  SlpBuilder builder_;
  std::size_t pos_ = 0;
};

// x2 < x10: compare alphabetic prefix, then numeric suffix by value.
bool natural_less(const std::string& a, const std::string& b) {
  auto split = [](const std::string& s) {
    std::size_t k = s.size();
    while (k > 0 && digit(s[k - 1])) --k;
    return std::pair<std::string, std::string>(s.substr(0, k), s.substr(k));
  };
  auto [pa, na] = split(a);
  auto [pb, nb] = split(b);
  if (pa != pb) return pa < pb;
  if (na.size() != nb.size()) return na.size() < nb.size();
  return na < nb;
}

}  // namespace

ParsedPolynomial parse_poly(std::string_view text, std::span<const std::string> variables) {
  std::set<std::string> seen;
  for (const auto& v : variables) {
    if (!seen.insert(v).second) throw InvalidArgument("duplicate variable name '" + v + "'");
  }
  Slp slp = Parser(text, variables).run();
  MultiPoly poly = expand(slp).front();
  return {std::vector<std::string>(variables.begin(), variables.end()), std::move(poly),
          std::move(slp)};
}

std::vector<std::string> detect_variables(std::string_view text) {
  std::set<std::string> names;
  std::size_t i = 0;
  while (i < text.size()) {
    if (ident_start(text[i])) {
      std::size_t start = i;
      while (i < text.size() && ident_char(text[i])) ++i;
      names.emplace(text.substr(start, i - start));
    } else if (digit(text[i])) {
      while (i < text.size() && ident_char(text[i])) ++i;
    } else {
      ++i;
    }
  }
  std::vector<std::string> out(names.begin(), names.end());
  std::sort(out.begin(), out.end(), natural_less);
  return out;
}

}  // namespace polar
