#include "cancelkit/parse.hpp"

#include <cctype>
#include <map>

#include "cancelkit/bivariate.hpp"
#include "cancelkit/polyring.hpp"

namespace cancelkit {

namespace {

// Values are polynomials in up to two variables; slot 0 is the exponent of
// the first variable (x, X or t), slot 1 of the second (Y).
class Parser {
 public:
  Parser(std::string_view text, const NumberField& K, std::map<std::string, int> vars, bool t_is_generator)
      : s_(text), K_(K), vars_(std::move(vars)), t_gen_(t_is_generator) {}

  BivariatePolynomial parse() {
    BivariatePolynomial v = expr();
    skip();
    if (pos_ != s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
    return v;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw Error(ErrorCode::kSyntaxError, "at position " + std::to_string(pos_) + ": " + what);
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

  void expect(char c) {
    if (!eat(c)) fail(std::string("expected '") + c + "'");
  }

  BivariatePolynomial constant(const FieldElement& c) { return BivariatePolynomial::term(c, 0, 0); }

  BivariatePolynomial expr() {
    BivariatePolynomial v = term();
    while (true) {
      if (eat('+')) {
        v = v + term();
      } else if (eat('-')) {
        v = v - term();
      } else {
        return v;
      }
    }
  }

  BivariatePolynomial term() {
    BivariatePolynomial v = unary();
    while (true) {
      if (eat('*')) {
        v = v * unary();
      } else if (eat('/')) {
        const std::size_t at = pos_;
        BivariatePolynomial d = unary();
        const auto& t = d.terms();
        if (t.size() != 1 || t.begin()->first != BivariatePolynomial::Monomial{0, 0}) {
          pos_ = at;
          if (d.is_zero()) throw Error(ErrorCode::kDivisionByZero, "at position " + std::to_string(at));
          fail("division by a non-constant");
        }
        v = t.begin()->second.inverse() * v;
      } else {
        return v;
      }
    }
  }

  BivariatePolynomial unary() {
    if (eat('-')) return BivariatePolynomial(K_.zero()) - unary();
    if (eat('+')) return unary();
    return power();
  }

  BivariatePolynomial power() {
    BivariatePolynomial base = primary();
    if (!eat('^')) return base;
    const long e = integer();
    BivariatePolynomial r = constant(K_.one());
    for (long k = 0; k < e; ++k) r = r * base;
    return r;
  }

  long integer() {
    skip();
    const std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) fail("expected an integer");
    if (pos_ - start > 6) fail("integer too large here");
    return std::stol(std::string(s_.substr(start, pos_ - start)));
  }

  BivariatePolynomial primary() {
    skip();
    if (pos_ >= s_.size()) fail("unexpected end of input");
    const char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      BivariatePolynomial v = expr();
      expect(')');
      return v;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      const std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      return constant(K_.from_rational(Rational(Integer(std::string(s_.substr(start, pos_ - start))))));
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      const std::size_t start = pos_;
      while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) ++pos_;
      const std::string name(s_.substr(start, pos_ - start));
      if ((name == "T" || name == "P") && vars_.count("x")) {
        expect('(');
        const long n = integer();
        expect(')');
        if (n < 1) fail(name + "(n) needs n >= 1");
        const KPoly f = name == "T" ? chebyshev(static_cast<int>(n), K_.zero()) : power_map(static_cast<int>(n), K_.zero());
        return BivariatePolynomial::in_x(f);
      }
      if (auto it = vars_.find(name); it != vars_.end())
        return BivariatePolynomial::term(K_.one(), it->second == 0 ? 1 : 0, it->second == 1 ? 1 : 0);
      if (name == "t" && t_gen_) return constant(K_.generator());
      pos_ = start;
      throw Error(ErrorCode::kUnknownSymbol, "at position " + std::to_string(start) + ": '" + name + "'");
    }
    fail("unexpected '" + std::string(1, c) + "'");
  }

  std::string_view s_;
  std::size_t pos_ = 0;
  const NumberField& K_;
  std::map<std::string, int> vars_;
  bool t_gen_;
};

std::vector<FieldElement> univariate(const BivariatePolynomial& F, const NumberField& K) {
  int deg = -1;
  for (const auto& [m, c] : F.terms()) deg = std::max(deg, m.first);
  std::vector<FieldElement> out(static_cast<std::size_t>(deg + 1), K.zero());
  for (const auto& [m, c] : F.terms()) out[static_cast<std::size_t>(m.first)] = c;
  return out;
}

}  // namespace

NumberField parse_field(std::string_view text) {
  const NumberField Q = NumberField::rationals();
  const auto F = Parser(text, Q, {{"t", 0}}, false).parse();
  std::vector<Rational> c;
  for (const auto& a : univariate(F, Q)) c.push_back(a.rational_part());
  return NumberField::create(std::move(c));
}

FieldElement parse_field_element(std::string_view text, const NumberField& K) {
  const auto F = Parser(text, K, {}, true).parse();
  return F.is_zero() ? K.zero() : F.terms().begin()->second;
}

KPoly parse_polynomial(std::string_view text, const NumberField& K) {
  const auto F = Parser(text, K, {{"x", 0}}, true).parse();
  return KPoly(K.zero(), univariate(F, K));
}

std::vector<KPoly> parse_generators(std::string_view text, const NumberField& K) {
  std::vector<KPoly> out;
  int depth = 0;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= text.size(); ++i) {
    if (i < text.size() && text[i] == '(') ++depth;
    if (i < text.size() && text[i] == ')') --depth;
    if (i == text.size() || (text[i] == ',' && depth == 0)) {
      const std::string_view piece = text.substr(start, i - start);
      KPoly f = parse_polynomial(piece, K);
      if (f.degree() < 2)
        throw Error(ErrorCode::kDegreeLessThanTwo, "generator '" + std::string(piece) + "' has degree < 2");
      out.push_back(std::move(f));
      start = i + 1;
    }
  }
  return out;
}

Conic parse_conic(std::string_view text, const NumberField& K) {
  const auto F = Parser(text, K, {{"X", 0}, {"Y", 1}}, true).parse();
  auto get = [&](int i, int j) {
    auto it = F.terms().find({i, j});
    return it == F.terms().end() ? K.zero() : it->second;
  };
  for (const auto& [m, c] : F.terms())
    if (m.first + m.second > 2) throw Error(ErrorCode::kSyntaxError, "conic has a term of degree > 2");
  Conic C{get(2, 0), get(1, 1), get(0, 2), get(1, 0), get(0, 1), get(0, 0)};
  if (C.cXX.is_zero() && C.cXY.is_zero() && C.cYY.is_zero())
    throw Error(ErrorCode::kInvalidArgument, "conic has no quadratic part");
  return C;
}

}  // namespace cancelkit
