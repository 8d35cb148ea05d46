#include "cancelkit/rational.hpp"

#include <numeric>

#include "cancelkit/error.hpp"

namespace cancelkit {

const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInvalidArgument: return "INVALID_ARGUMENT";
    case ErrorCode::kNotMonic: return "NOT_MONIC";
    case ErrorCode::kReducible: return "REDUCIBLE";
    case ErrorCode::kNotSquarefree: return "NOT_SQUAREFREE";
    case ErrorCode::kUnsupportedDegree: return "UNSUPPORTED_DEGREE";
    case ErrorCode::kDivisionByZero: return "DIVISION_BY_ZERO";
    case ErrorCode::kZeroRadicand: return "ZERO_RADICAND";
    case ErrorCode::kFieldMismatch: return "FIELD_MISMATCH";
    case ErrorCode::kFormViolation: return "FORM_VIOLATION";
    case ErrorCode::kDegreeTooSmall: return "DEGREE_TOO_SMALL";
    case ErrorCode::kDegenerateConic: return "DEGENERATE_CONIC";
    case ErrorCode::kExplosion: return "EXPLOSION";
    case ErrorCode::kCertificateFailure: return "CERTIFICATE_FAILURE";
    case ErrorCode::kInsufficientPoints: return "INSUFFICIENT_POINTS";
    case ErrorCode::kSyntaxError: return "SYNTAX_ERROR";
    case ErrorCode::kUnknownSymbol: return "UNKNOWN_SYMBOL";
    case ErrorCode::kDegreeLessThanTwo: return "DEGREE_LT_2";
  }
  return "UNKNOWN";
}

std::string to_string(const Rational& q) { return q.get_str(); }
std::string to_string(const Integer& z) { return z.get_str(); }

Rational parse_rational(std::string_view text) {
  auto bad = [&] { return Error(ErrorCode::kSyntaxError, "not a rational: '" + std::string(text) + "'"); };
  if (text.empty()) throw bad();
  std::size_t start = (text[0] == '-' || text[0] == '+') ? 1 : 0;
  bool seen_slash = false;
  bool digit_before = false, digit_after = false;
  for (std::size_t i = start; i < text.size(); ++i) {
    char c = text[i];
    if (c == '/') {
      if (seen_slash || !digit_before) throw bad();
      seen_slash = true;
    } else if (c >= '0' && c <= '9') {
      (seen_slash ? digit_after : digit_before) = true;
    } else {
      throw bad();
    }
  }
  if (!digit_before || (seen_slash && !digit_after)) throw bad();
  std::string s(text[0] == '+' ? text.substr(1) : text);
  Rational q;
  if (q.set_str(s, 10) != 0) throw bad();
  if (q.get_den() == 0) throw Error(ErrorCode::kDivisionByZero, "zero denominator in '" + s + "'");
  q.canonicalize();
  return q;
}

Integer gcd(const Integer& a, const Integer& b) {
  Integer g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

Integer lcm(const Integer& a, const Integer& b) {
  Integer l;
  mpz_lcm(l.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return l;
}

namespace {

// Appends the rationals of height exactly h; stops once `out` holds `limit`.
void append_height(long h, std::vector<Rational>& out, std::size_t limit) {
  auto push = [&](long p, long q) {
    if (out.size() < limit) out.emplace_back(p, q);
    if (out.size() < limit) out.emplace_back(-p, q);
  };
  if (h == 0) {
    if (out.size() < limit) out.emplace_back(0);
    return;
  }
  push(h, 1);
  for (long k = 1; k < h; ++k) {
    if (std::gcd(h, k) != 1) continue;
    if (k != 1) push(h, k);
    push(k, h);
  }
}

}  // namespace

std::vector<Rational> height_ordered_rationals(std::size_t count) {
  std::vector<Rational> out;
  for (long h = 0; out.size() < count; ++h) append_height(h, out, count);
  return out;
}

std::vector<Rational> rationals_up_to_height(long bound) {
  std::vector<Rational> out;
  for (long h = 0; h <= bound; ++h) append_height(h, out, static_cast<std::size_t>(-1));
  return out;
}

}  // namespace cancelkit
