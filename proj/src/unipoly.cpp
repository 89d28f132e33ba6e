#include "pdmult/unipoly.hpp"

#include <algorithm>
#include <set>

#include "pdmult/errors.hpp"

namespace pdmult {
namespace uni {

void trim(UniPoly& p) {
  while (!p.empty() && p.back().is_zero()) p.pop_back();
}

UniPoly from_constant(const Rational& c) {
  if (c.is_zero()) return {};
  return {c};
}

UniPoly add(const UniPoly& a, const UniPoly& b) {
  UniPoly r(std::max(a.size(), b.size()), Rational(0));
  for (std::size_t k = 0; k < a.size(); ++k) r[k] += a[k];
  for (std::size_t k = 0; k < b.size(); ++k) r[k] += b[k];
  trim(r);
  return r;
}

UniPoly sub(const UniPoly& a, const UniPoly& b) {
  UniPoly r(std::max(a.size(), b.size()), Rational(0));
  for (std::size_t k = 0; k < a.size(); ++k) r[k] += a[k];
  for (std::size_t k = 0; k < b.size(); ++k) r[k] -= b[k];
  trim(r);
  return r;
}

UniPoly mul(const UniPoly& a, const UniPoly& b) {
  if (a.empty() || b.empty()) return {};
  UniPoly r(a.size() + b.size() - 1, Rational(0));
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  }
  trim(r);
  return r;
}

UniPoly scale(const UniPoly& a, const Rational& c) {
  if (c.is_zero()) return {};
  UniPoly r = a;
  for (auto& x : r) x *= c;
  return r;
}

Rational eval(const UniPoly& p, const Rational& t) {
  Rational acc(0);
  for (auto it = p.rbegin(); it != p.rend(); ++it) acc = acc * t + *it;
  return acc;
}

UniPoly derivative(const UniPoly& p) {
  if (p.size() <= 1) return {};
  UniPoly r(p.size() - 1, Rational(0));
  for (std::size_t k = 1; k < p.size(); ++k) r[k - 1] = p[k] * Rational(static_cast<long>(k));
  trim(r);
  return r;
}

std::pair<UniPoly, UniPoly> divrem(const UniPoly& a, const UniPoly& b) {
  if (is_zero(b)) throw Error(Errc::division_by_zero, "univariate division by zero polynomial");
  UniPoly rem = a;
  if (degree(rem) < degree(b)) return {{}, rem};
  UniPoly quot(rem.size() - b.size() + 1, Rational(0));
  const Rational& lead = b.back();
  for (int k = degree(rem); k >= degree(b); --k) {
    if (rem[k].is_zero()) continue;
    Rational c = rem[k] / lead;
    int shift = k - degree(b);
    quot[shift] = c;
    for (std::size_t t = 0; t < b.size(); ++t) rem[shift + t] -= c * b[t];
  }
  trim(rem);
  trim(quot);
  return {quot, rem};
}

UniPoly exact_div(const UniPoly& a, const UniPoly& b) {
  auto [q, r] = divrem(a, b);
  if (!is_zero(r)) throw Error(Errc::parse_error, "internal: inexact univariate division");
  return q;
}

UniPoly monic(const UniPoly& p) {
  if (is_zero(p)) return p;
  return scale(p, Rational(1) / p.back());
}

UniPoly gcd(const UniPoly& a, const UniPoly& b) {
  UniPoly u = a, v = b;
  while (!is_zero(v)) {
    auto [q, r] = divrem(u, v);
    u = std::move(v);
    v = std::move(r);
  }
  return monic(u);
}

PrimitiveParts primitive_integer(const UniPoly& p) {
  PrimitiveParts out;
  if (is_zero(p)) {
    out.content = 0;
    return out;
  }
  mpz_class den_lcm = 1;
  for (const auto& c : p) mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.denominator().get_mpz_t());
  std::vector<mpz_class> scaled;
  scaled.reserve(p.size());
  mpz_class g = 0;
  for (const auto& c : p) {
    mpz_class v = c.numerator() * (den_lcm / c.denominator());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
    scaled.push_back(v);
  }
  if (scaled.back() < 0) g = -g;
  for (auto& v : scaled) v /= g;
  out.prim = std::move(scaled);
  out.content = mpq_class(g) / mpq_class(den_lcm);
  return out;
}

namespace {

// Trial division below 1e6, then Pollard-Brent rho for what remains. The
// root finder only needs the full prime factorization of the leading and
// trailing coefficients, which stay small at desk scale.
void factor_into(mpz_class n, std::vector<std::pair<mpz_class, unsigned>>& out);

mpz_class pollard_rho(const mpz_class& n, gmp_randstate_t state) {
  if (n % 2 == 0) return 2;
  mpz_class x, c, d, y, t;
  while (true) {
    mpz_urandomm(x.get_mpz_t(), state, n.get_mpz_t());
    mpz_urandomm(c.get_mpz_t(), state, n.get_mpz_t());
    if (c == 0) c = 1;
    y = x;
    d = 1;
    while (d == 1) {
      x = (x * x + c) % n;
      y = (y * y + c) % n;
      y = (y * y + c) % n;
      t = x - y;
      if (t == 0) break;
      mpz_gcd(d.get_mpz_t(), t.get_mpz_t(), n.get_mpz_t());
    }
    if (d != 0 && d != n && d != 1) return d;
  }
}

void factor_into(mpz_class n, std::vector<std::pair<mpz_class, unsigned>>& out) {
  if (n < 0) n = -n;
  if (n <= 1) return;
  for (unsigned long d = 2; d < 1000000ul && mpz_class(d) * d <= n; d = (d == 2 ? 3 : d + 2)) {
    if (n % d == 0) {
      unsigned e = 0;
      while (n % d == 0) {
        n /= d;
        ++e;
      }
      out.emplace_back(mpz_class(d), e);
    }
  }
  if (n == 1) return;
  if (mpz_probab_prime_p(n.get_mpz_t(), 40) != 0) {
    out.emplace_back(n, 1u);
    return;
  }
  gmp_randstate_t state;
  gmp_randinit_mt(state);
  gmp_randseed_ui(state, 0x5eed);
  mpz_class d = pollard_rho(n, state);
  gmp_randclear(state);
  std::vector<std::pair<mpz_class, unsigned>> sub;
  factor_into(d, sub);
  factor_into(n / d, sub);
  // merge exponents of repeated primes
  for (auto& [p, e] : sub) {
    bool merged = false;
    for (auto& [q, f] : out) {
      if (q == p) {
        f += e;
        merged = true;
        break;
      }
    }
    if (!merged) out.emplace_back(p, e);
  }
}

std::vector<mpz_class> divisors(const mpz_class& n) {
  std::vector<std::pair<mpz_class, unsigned>> factors;
  factor_into(n, factors);
  std::vector<mpz_class> divs{1};
  for (const auto& [p, e] : factors) {
    std::size_t base = divs.size();
    mpz_class pk = 1;
    for (unsigned k = 1; k <= e; ++k) {
      pk *= p;
      for (std::size_t t = 0; t < base; ++t) divs.push_back(divs[t] * pk);
    }
  }
  return divs;
}

}  // namespace

std::vector<Rational> rational_roots(const UniPoly& p) {
  if (is_zero(p)) throw Error(Errc::zero_polynomial, "rational_roots of zero polynomial");
  auto prim = primitive_integer(p).prim;
  std::vector<Rational> roots;
  // strip t^k factor: zero is a root iff the constant term vanishes
  std::size_t low = 0;
  while (low < prim.size() && prim[low] == 0) ++low;
  if (low > 0) roots.emplace_back(0);
  std::vector<mpz_class> core(prim.begin() + static_cast<long>(low), prim.end());
  if (core.size() <= 1) return roots;

  auto value_at = [&core](const Rational& t) {
    Rational acc(0);
    for (auto it = core.rbegin(); it != core.rend(); ++it) acc = acc * t + Rational(*it);
    return acc;
  };

  std::set<std::pair<std::string, std::string>> seen;
  for (const auto& r : divisors(core.front())) {
    for (const auto& s : divisors(core.back())) {
      for (int sign = 1; sign >= -1; sign -= 2) {
        Rational cand(mpq_class(sign * r) / mpq_class(s));
        auto key = std::make_pair(cand.numerator().get_str(), cand.denominator().get_str());
        if (!seen.insert(key).second) continue;
        if (value_at(cand).is_zero()) roots.push_back(cand);
      }
    }
  }
  std::sort(roots.begin(), roots.end());
  return roots;
}

}  // namespace uni
}  // namespace pdmult
