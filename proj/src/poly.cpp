#include "pdmult/poly.hpp"

#include <algorithm>
#include <cassert>
#include <sstream>

#include "pdmult/errors.hpp"
#include "pdmult/unipoly.hpp"

namespace pdmult {

BivarPoly BivarPoly::operator-() const {
  BivarPoly r;
  for (const auto& [m, c] : terms_) r.terms_[m] = -c;
  return r;
}

BivarPoly& BivarPoly::operator+=(const BivarPoly& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

BivarPoly& BivarPoly::operator-=(const BivarPoly& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

BivarPoly operator*(const BivarPoly& a, const BivarPoly& b) {
  BivarPoly r;
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) {
      r.add_term({ma.i + mb.i, ma.j + mb.j}, ca * cb);
    }
  }
  return r;
}

BivarPoly BivarPoly::scaled(const Rational& c) const {
  BivarPoly r;
  if (c.is_zero()) return r;
  for (const auto& [m, v] : terms_) r.terms_[m] = v * c;
  return r;
}

BivarPoly BivarPoly::dx() const {
  BivarPoly r;
  for (const auto& [m, c] : terms_) {
    if (m.i > 0) r.terms_[{m.i - 1, m.j}] = c * Rational(m.i);
  }
  return r;
}

BivarPoly BivarPoly::dy() const {
  BivarPoly r;
  for (const auto& [m, c] : terms_) {
    if (m.j > 0) r.terms_[{m.i, m.j - 1}] = c * Rational(m.j);
  }
  return r;
}

BivarPoly BivarPoly::derivative(int a, int b) const {
  BivarPoly r;
  for (const auto& [m, c] : terms_) {
    if (m.i < a || m.j < b) continue;
    Rational factor(mpq_class(falling_factorial(m.i, a) * falling_factorial(m.j, b)));
    r.add_term({m.i - a, m.j - b}, c * factor);
  }
  return r;
}

Rational BivarPoly::evaluate(const Point& at) const {
  int max_i = 0, max_j = 0;
  for (const auto& [m, c] : terms_) {
    max_i = std::max(max_i, m.i);
    max_j = std::max(max_j, m.j);
  }
  std::vector<Rational> px(max_i + 1, Rational(1)), py(max_j + 1, Rational(1));
  for (int k = 1; k <= max_i; ++k) px[k] = px[k - 1] * at.x;
  for (int k = 1; k <= max_j; ++k) py[k] = py[k - 1] * at.y;
  Rational acc(0);
  for (const auto& [m, c] : terms_) acc += c * px[m.i] * py[m.j];
  return acc;
}

BivarPoly BivarPoly::shifted(const Rational& cx, const Rational& cy) const {
  // (x+cx)^i (y+cy)^j expanded with binomial coefficients
  BivarPoly r;
  for (const auto& [m, c] : terms_) {
    std::vector<Rational> bx(m.i + 1), by(m.j + 1);
    Rational acc(1);
    for (int a = m.i; a >= 0; --a) {
      mpz_class binom;
      mpz_bin_uiui(binom.get_mpz_t(), m.i, a);
      bx[a] = Rational(mpq_class(binom)) * acc;
      acc *= cx;
    }
    acc = Rational(1);
    for (int b = m.j; b >= 0; --b) {
      mpz_class binom;
      mpz_bin_uiui(binom.get_mpz_t(), m.j, b);
      by[b] = Rational(mpq_class(binom)) * acc;
      acc *= cy;
    }
    for (int a = 0; a <= m.i; ++a) {
      for (int b = 0; b <= m.j; ++b) r.add_term({a, b}, c * bx[a] * by[b]);
    }
  }
  return r;
}

void TrivarForm::add_term(const Triple& t, const Rational& c) {
  if (t.i + t.j + t.k != degree_) {
    throw Error(Errc::not_homogeneous, "trivariate term degree mismatch");
  }
  auto it = terms_.find(t);
  if (it == terms_.end()) {
    if (!c.is_zero()) terms_[t] = c;
    return;
  }
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

TrivarForm operator*(const TrivarForm& a, const TrivarForm& b) {
  TrivarForm r(a.degree_ + b.degree_);
  for (const auto& [ta, ca] : a.terms_) {
    for (const auto& [tb, cb] : b.terms_) {
      r.add_term({ta.i + tb.i, ta.j + tb.j, ta.k + tb.k}, ca * cb);
    }
  }
  return r;
}

int dim_pi(int n) {
  if (n < 0) return 0;
  return (n + 2) * (n + 1) / 2;
}

std::vector<Monomial> monomial_basis(int n) {
  std::vector<Monomial> basis;
  if (n < 0) return basis;
  basis.reserve(static_cast<std::size_t>(dim_pi(n)));
  for (int d = 0; d <= n; ++d) {
    for (int i = d; i >= 0; --i) basis.push_back({i, d - i});
  }
  return basis;
}

BivarPoly homogeneous_part(const BivarPoly& p, int k) {
  BivarPoly r;
  for (const auto& [m, c] : p.terms()) {
    if (m.degree() == k) r.add_term(m, c);
  }
  return r;
}

BivarPoly leading_part(const BivarPoly& p) {
  if (p.is_zero()) throw Error(Errc::zero_polynomial, "leading part of zero polynomial");
  return homogeneous_part(p, p.degree_nonzero());
}

BivarPoly lowest_part(const BivarPoly& p) {
  if (p.is_zero()) throw Error(Errc::zero_polynomial, "lowest part of zero polynomial");
  int low = p.terms().begin()->first.degree();
  return homogeneous_part(p, low);
}

Rational apply_pd(const BivarPoly& h, const BivarPoly& f, const Point& at) {
  Rational acc(0);
  for (const auto& [m, c] : h.terms()) {
    acc += c * f.derivative(m.i, m.j).evaluate(at);
  }
  return acc;
}

Rational leibniz_rhs(const BivarPoly& r, const BivarPoly& g, const BivarPoly& f, const Point& at) {
  Rational acc(0);
  if (r.is_zero()) return acc;
  int dr = r.degree_nonzero();
  for (int i = 0; i <= dr; ++i) {
    for (int j = 0; i + j <= dr; ++j) {
      BivarPoly rij = r.derivative(i, j);
      if (rij.is_zero()) continue;
      Rational gij = g.derivative(i, j).evaluate(at);
      if (gij.is_zero()) continue;
      Rational inv_fact(mpq_class(1) / mpq_class(factorial(i) * factorial(j)));
      acc += inv_fact * gij * apply_pd(rij, f, at);
    }
  }
  return acc;
}

std::optional<BivarPoly> divide_by_line(const BivarPoly& p, const BivarPoly& line) {
  if (line.is_zero() || line.degree_nonzero() != 1) {
    throw Error(Errc::degenerate_line, "divisor must have degree exactly 1");
  }
  Rational alpha = line.coefficient(1, 0);
  Rational beta = line.coefficient(0, 1);
  Rational gamma = line.coefficient(0, 0);
  if (p.is_zero()) return BivarPoly::zero();

  // Work with the variable the line genuinely contains as the main one;
  // swap x and y when the line has no y term.
  const bool swap_xy = beta.is_zero();
  if (swap_xy) std::swap(alpha, beta);

  auto key = [&](const Monomial& m) { return swap_xy ? std::pair{m.j, m.i} : std::pair{m.i, m.j}; };

  // p = sum_k c_k(s) t^k where t is the main variable and s the other.
  int deg_t = 0, deg_s = 0;
  for (const auto& [m, c] : p.terms()) {
    auto [si, ti] = key(m);
    deg_s = std::max(deg_s, si);
    deg_t = std::max(deg_t, ti);
  }
  std::vector<UniPoly> coeff(deg_t + 1);
  for (auto& c : coeff) c.assign(deg_s + 1, Rational(0));
  for (const auto& [m, c] : p.terms()) {
    auto [si, ti] = key(m);
    coeff[ti][si] = c;
  }
  for (auto& c : coeff) uni::trim(c);

  // line = beta * t + (alpha * s + gamma); beta != 0 here
  UniPoly a{gamma, alpha};
  uni::trim(a);
  std::vector<UniPoly> quot(deg_t > 0 ? deg_t : 0);
  for (int k = deg_t - 1; k >= 0; --k) {
    quot[k] = uni::scale(coeff[k + 1], Rational(1) / beta);
    coeff[k] = uni::sub(coeff[k], uni::mul(quot[k], a));
  }
  if (!uni::is_zero(coeff[0])) return std::nullopt;

  BivarPoly q;
  for (std::size_t k = 0; k < quot.size(); ++k) {
    for (std::size_t s = 0; s < quot[k].size(); ++s) {
      if (quot[k][s].is_zero()) continue;
      int ti = static_cast<int>(k), si = static_cast<int>(s);
      if (swap_xy) {
        q.add_term({ti, si}, quot[k][s]);
      } else {
        q.add_term({si, ti}, quot[k][s]);
      }
    }
  }
  return q;
}

TrivarForm homogenize(const BivarPoly& p) {
  if (p.is_zero()) throw Error(Errc::zero_polynomial, "homogenize of zero polynomial");
  int m = p.degree_nonzero();
  TrivarForm form(m);
  for (const auto& [mon, c] : p.terms()) {
    form.add_term({mon.i, mon.j, m - mon.i - mon.j}, c);
  }
  return form;
}

bool is_homogeneous(const BivarPoly& p) {
  if (p.is_zero()) return true;
  int d = p.terms().begin()->first.degree();
  for (const auto& [m, c] : p.terms()) {
    if (m.degree() != d) return false;
  }
  return true;
}

namespace {

struct FormParts {
  int x_power = 0;
  int y_power = 0;
  UniPoly core;  // dehomogenized at y = 1 after stripping the monomial part
};

// u = x^a y^b * core(x/y) * y^deg(core); core has nonzero constant and
// leading coefficients.
FormParts split_form(const BivarPoly& u) {
  FormParts parts;
  int min_i = -1, min_j = -1, deg = u.degree_nonzero();
  for (const auto& [m, c] : u.terms()) {
    min_i = min_i < 0 ? m.i : std::min(min_i, m.i);
    min_j = min_j < 0 ? m.j : std::min(min_j, m.j);
  }
  parts.x_power = min_i;
  parts.y_power = min_j;
  int core_deg = deg - min_i - min_j;
  parts.core.assign(core_deg + 1, Rational(0));
  for (const auto& [m, c] : u.terms()) parts.core[m.i - min_i] = c;
  return parts;
}

BivarPoly rehomogenize(const UniPoly& g, int x_power, int y_power) {
  BivarPoly r;
  int d = uni::degree(g);
  for (int i = 0; i <= d; ++i) {
    if (g[i].is_zero()) continue;
    r.add_term({x_power + i, y_power + d - i}, g[i]);
  }
  return r;
}

}  // namespace

BivarPoly form_gcd(const BivarPoly& u, const BivarPoly& v) {
  if (!is_homogeneous(u) || !is_homogeneous(v)) {
    throw Error(Errc::not_homogeneous, "form_gcd requires homogeneous inputs");
  }
  if (u.is_zero() && v.is_zero()) {
    throw Error(Errc::zero_polynomial, "form_gcd of two zero forms");
  }
  if (u.is_zero() || v.is_zero()) {
    auto parts = split_form(u.is_zero() ? v : u);
    return rehomogenize(uni::monic(parts.core), parts.x_power, parts.y_power);
  }
  FormParts pu = split_form(u), pv = split_form(v);
  UniPoly g = uni::gcd(pu.core, pv.core);
  return rehomogenize(g, std::min(pu.x_power, pv.x_power), std::min(pu.y_power, pv.y_power));
}

bool form_divides(const BivarPoly& divisor, const BivarPoly& dividend) {
  if (!is_homogeneous(divisor) || !is_homogeneous(dividend)) {
    throw Error(Errc::not_homogeneous, "form_divides requires homogeneous inputs");
  }
  if (dividend.is_zero()) return true;
  if (divisor.is_zero()) return false;
  FormParts pd = split_form(divisor), pn = split_form(dividend);
  if (pd.x_power > pn.x_power || pd.y_power > pn.y_power) return false;
  auto [q, r] = uni::divrem(pn.core, pd.core);
  (void)q;
  return uni::is_zero(r);
}

std::string to_pretty_string(const BivarPoly& p) {
  if (p.is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  // display order: highest degree first
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
    const auto& [m, c] = *it;
    Rational mag = abs(c);
    if (first) {
      if (c.sign() < 0) out << "-";
      first = false;
    } else {
      out << (c.sign() < 0 ? " - " : " + ");
    }
    std::string mono;
    if (m.i > 0) mono += m.i == 1 ? "x" : "x^" + std::to_string(m.i);
    if (m.j > 0) {
      if (!mono.empty()) mono += "*";
      mono += m.j == 1 ? "y" : "y^" + std::to_string(m.j);
    }
    if (mono.empty()) {
      out << mag.to_string();
    } else if (mag == Rational(1)) {
      out << mono;
    } else {
      out << mag.to_string() << "*" << mono;
    }
  }
  return out.str();
}

}  // namespace pdmult
