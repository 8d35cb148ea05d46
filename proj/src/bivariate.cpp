#include "cancelkit/bivariate.hpp"

#include <sstream>
#include <vector>

namespace cancelkit {

BivariatePolynomial BivariatePolynomial::term(const FieldElement& c, int i, int j) {
  BivariatePolynomial p(c.field().zero());
  p.add_term({i, j}, c);
  return p;
}

BivariatePolynomial BivariatePolynomial::in_x(const KPoly& f) {
  BivariatePolynomial p(f.zero());
  for (std::size_t i = 0; i < f.size(); ++i) p.add_term({static_cast<int>(i), 0}, f[i]);
  return p;
}

BivariatePolynomial BivariatePolynomial::in_y(const KPoly& f) {
  BivariatePolynomial p(f.zero());
  for (std::size_t j = 0; j < f.size(); ++j) p.add_term({0, static_cast<int>(j)}, f[j]);
  return p;
}

int BivariatePolynomial::total_degree() const {
  int d = -1;
  for (const auto& [m, c] : t_) d = std::max(d, m.first + m.second);
  return d;
}

void BivariatePolynomial::add_term(const Monomial& m, const FieldElement& c) {
  if (c.is_zero()) return;
  auto it = t_.find(m);
  if (it == t_.end()) {
    t_.emplace(m, c);
    return;
  }
  it->second += c;
  if (it->second.is_zero()) t_.erase(it);
}

BivariatePolynomial operator+(BivariatePolynomial a, const BivariatePolynomial& b) {
  for (const auto& [m, c] : b.t_) a.add_term(m, c);
  return a;
}

BivariatePolynomial operator-(BivariatePolynomial a, const BivariatePolynomial& b) {
  for (const auto& [m, c] : b.t_) a.add_term(m, -c);
  return a;
}

BivariatePolynomial operator*(const BivariatePolynomial& a, const BivariatePolynomial& b) {
  BivariatePolynomial r(a.zero_);
  for (const auto& [m, c] : a.t_)
    for (const auto& [n, e] : b.t_) r.add_term({m.first + n.first, m.second + n.second}, c * e);
  return r;
}

BivariatePolynomial operator*(const FieldElement& c, const BivariatePolynomial& a) {
  BivariatePolynomial r(a.zero_);
  for (const auto& [m, e] : a.t_) r.add_term(m, c * e);
  return r;
}

FieldElement BivariatePolynomial::operator()(const FieldElement& x, const FieldElement& y) const {
  FieldElement s = zero_;
  for (const auto& [m, c] : t_) s += c * x.pow(m.first) * y.pow(m.second);
  return s;
}

BivariatePolynomial BivariatePolynomial::substitute(const KPoly& f, const KPoly& g) const {
  int max_i = 0, max_j = 0;
  for (const auto& [m, c] : t_) {
    max_i = std::max(max_i, m.first);
    max_j = std::max(max_j, m.second);
  }
  std::vector<KPoly> fp{KPoly::constant(zero_.field().one())}, gp{KPoly::constant(zero_.field().one())};
  for (int i = 1; i <= max_i; ++i) fp.push_back(fp.back() * f);
  for (int j = 1; j <= max_j; ++j) gp.push_back(gp.back() * g);
  BivariatePolynomial r(zero_);
  for (const auto& [m, c] : t_) {
    const KPoly& u = fp[static_cast<std::size_t>(m.first)];
    const KPoly& w = gp[static_cast<std::size_t>(m.second)];
    for (std::size_t i = 0; i < u.size(); ++i) {
      if (u[i].is_zero()) continue;
      const FieldElement cu = c * u[i];
      for (std::size_t j = 0; j < w.size(); ++j)
        if (!w[j].is_zero()) r.add_term({static_cast<int>(i), static_cast<int>(j)}, cu * w[j]);
    }
  }
  return r;
}

BivariateDivision divide(const BivariatePolynomial& g, const BivariatePolynomial& f) {
  if (f.is_zero()) throw Error(ErrorCode::kDivisionByZero, "bivariate division by zero");
  const auto& [lead_m, lead_c] = *f.terms().rbegin();
  const FieldElement inv = lead_c.inverse();
  BivariatePolynomial rest = g, q(g.zero()), rem(g.zero());
  while (!rest.is_zero()) {
    const auto [m, c] = *rest.terms().rbegin();
    if (m.first >= lead_m.first && m.second >= lead_m.second) {
      const FieldElement k = c * inv;
      const int di = m.first - lead_m.first, dj = m.second - lead_m.second;
      q.add_term({di, dj}, k);
      for (const auto& [n, e] : f.terms()) rest.add_term({n.first + di, n.second + dj}, -(k * e));
    } else {
      rem.add_term(m, c);
      rest.add_term(m, -c);
    }
  }
  return {std::move(q), std::move(rem)};
}

bool divides(const BivariatePolynomial& f, const BivariatePolynomial& g) { return divide(g, f).remainder.is_zero(); }

std::string to_string(const BivariatePolynomial& F) {
  if (F.is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (auto it = F.terms().rbegin(); it != F.terms().rend(); ++it) {
    const auto& [m, c] = *it;
    std::string s = to_string(c);
    bool negative = false;
    const bool compound = s.find(' ') != std::string::npos;
    if (!compound && s[0] == '-') {
      negative = true;
      s = s.substr(1);
    }
    if (compound) s = "(" + s + ")";
    if (first) {
      if (negative) out << "-";
    } else {
      out << (negative ? " - " : " + ");
    }
    first = false;
    std::string mono;
    auto power = [](const char* v, int e) { return e == 1 ? std::string(v) : std::string(v) + "^" + std::to_string(e); };
    if (m.first) mono = power("X", m.first);
    if (m.second) mono += (mono.empty() ? "" : "*") + power("Y", m.second);
    if (mono.empty()) {
      out << s;
    } else {
      if (s != "1") out << s << "*";
      out << mono;
    }
  }
  return out.str();
}

}  // namespace cancelkit
