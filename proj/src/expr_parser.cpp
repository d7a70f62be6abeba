#include "expr_parser.hpp"

#include <cctype>

#include "p3d/errors.hpp"

namespace p3d::detail {

namespace {

class Parser {
 public:
  Parser(const std::string& text, bool allow_d) : s_(text), allow_d_(allow_d) {}

  LinearExpr run() {
    skip();
    if (pos_ == s_.size()) throw ParseError("empty expression", pos_);
    LinearExpr e = expr();
    skip();
    if (pos_ != s_.size()) throw ParseError(std::string("unexpected character '") + s_[pos_] + "'", pos_);
    return e;
  }

 private:
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  char peek() {
    skip();
    return pos_ < s_.size() ? s_[pos_] : '\0';
  }

  static bool has_differential(const LinearExpr& e) {
    for (int i = 0; i < kNumVars; ++i)
      if (!e[i].is_zero()) return true;
    return false;
  }

  static LinearExpr scalar(const Poly& p) {
    LinearExpr e;
    e[kNumVars] = p;
    return e;
  }

  LinearExpr mul(const LinearExpr& a, const LinearExpr& b, std::size_t at) {
    bool da = has_differential(a), db = has_differential(b);
    if (da && db) throw ParseError("product of two differentials", at);
    if (!da && !db) return scalar(a[kNumVars] * b[kNumVars]);
    const LinearExpr& form = da ? a : b;
    const Poly& f = da ? b[kNumVars] : a[kNumVars];
    LinearExpr r;
    for (int i = 0; i <= kNumVars; ++i) r[i] = form[i] * f;
    return r;
  }

  LinearExpr expr() {
    LinearExpr acc;
    bool first = true;
    for (;;) {
      char c = peek();
      int sign = 1;
      if (c == '+' || c == '-') {
        sign = c == '-' ? -1 : 1;
        ++pos_;
      } else if (!first) {
        break;
      }
      LinearExpr t = term();
      for (int i = 0; i <= kNumVars; ++i) acc[i] = sign > 0 ? acc[i] + t[i] : acc[i] - t[i];
      first = false;
    }
    return acc;
  }

  bool starts_factor(char c) {
    return std::isdigit(static_cast<unsigned char>(c)) || c == '(' ||
           std::isalpha(static_cast<unsigned char>(c));
  }

  LinearExpr term() {
    LinearExpr acc = factor();
    for (;;) {
      char c = peek();
      std::size_t at = pos_;
      if (c == '*') {
        ++pos_;
        acc = mul(acc, factor(), at);
      } else if (c == '/') {
        ++pos_;
        skip();
        std::size_t start = pos_;
        Integer den = integer();
        if (den == 0) throw ParseError("division by zero", start);
        Rational inv(Integer(1), den);
        inv.canonicalize();
        for (auto& p : acc) p = p.scaled(inv);
      } else if (starts_factor(c)) {
        acc = mul(acc, factor(), at);
      } else {
        break;
      }
    }
    return acc;
  }

  Integer integer() {
    skip();
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) throw ParseError("expected integer", start);
    return Integer(s_.substr(start, pos_ - start));
  }

  int exponent() {
    std::size_t at = pos_;
    Integer e = integer();
    if (e > 1000) throw ParseError("exponent too large", at);
    return static_cast<int>(e.get_si());
  }

  LinearExpr factor() {
    std::size_t at = pos_;
    LinearExpr base = primary();
    if (peek() == '^') {
      ++pos_;
      int e = exponent();
      if (has_differential(base)) {
        if (e != 1) throw ParseError("power of a differential", at);
      } else {
        base = scalar(base[kNumVars].pow(e));
      }
    }
    return base;
  }

  // Reads a variable name at pos_, or returns -1 without consuming.
  int variable() {
    if (pos_ >= s_.size()) return -1;
    char c = s_[pos_];
    if (c == 'y') { ++pos_; return 1; }
    if (c == 'z') { ++pos_; return 2; }
    if (c == 'w') { ++pos_; return 3; }
    if (c != 'x') return -1;
    ++pos_;
    std::size_t p = pos_;
    if (p < s_.size() && s_[p] == '_') ++p;
    if (p < s_.size() && s_[p] >= '0' && s_[p] <= '3' &&
        !(p + 1 < s_.size() && std::isdigit(static_cast<unsigned char>(s_[p + 1])))) {
      pos_ = p + 1;
      return s_[p] - '0';
    }
    if (p != pos_) throw ParseError("unknown variable name", pos_ - 1);
    return 0;
  }

  LinearExpr primary() {
    char c = peek();
    std::size_t at = pos_;
    if (c == '(') {
      ++pos_;
      LinearExpr e = expr();
      if (peek() != ')') throw ParseError("expected ')'", pos_);
      ++pos_;
      return e;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      Integer n = integer();
      return scalar(Poly(Rational(n)));
    }
    if (c == 'd' && allow_d_) {
      ++pos_;
      int v = variable();
      if (v < 0) throw ParseError("expected differential dx, dy, dz or dw", at);
      LinearExpr e;
      e[v] = Poly(1);
      return e;
    }
    int v = variable();
    if (v >= 0) return scalar(Poly::variable(v));
    if (c == '\0') throw ParseError("unexpected end of input", at);
    if (std::isalpha(static_cast<unsigned char>(c))) throw ParseError("unknown variable name", at);
    throw ParseError(std::string("unexpected character '") + c + "'", at);
  }

  const std::string& s_;
  bool allow_d_;
  std::size_t pos_ = 0;
};

}  // namespace

LinearExpr parse_expression(const std::string& text, bool allow_differentials) {
  return Parser(text, allow_differentials).run();
}

}  // namespace p3d::detail
