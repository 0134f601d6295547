/*
   Copyright 2026 The tricox Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include "tricox/field.hpp"

#include <cmath>
#include <functional>
#include <map>
#include <numbers>
#include <sstream>

#include "tricox/error.hpp"

namespace tricox {

  namespace {

    using RatPoly = std::vector<Rational>;

    void trim(IntPoly& p) {
      while (!p.empty() && p.back() == 0) {
        p.pop_back();
      }
    }

    void trim(RatPoly& p) {
      while (!p.empty() && p.back() == 0) {
        p.pop_back();
      }
    }

    // Exact division of integer polynomials, b monic up to sign.
    IntPoly divide_exact(IntPoly a, IntPoly const& b) {
      trim(a);
      std::size_t const db = b.size() - 1;
      if (a.size() < b.size()) {
        return {};
      }
      IntPoly q(a.size() - db, 0);
      for (std::size_t k = a.size(); k-- > db;) {
        Integer c = a[k] / b[db];
        q[k - db] = c;
        for (std::size_t j = 0; j <= db; ++j) {
          a[k - db + j] -= c * b[j];
        }
      }
      trim(a);
      if (!a.empty()) {
        internal_error("cyclotomic division left a remainder");
      }
      return q;
    }

    Rational eval(IntPoly const& p, Rational const& x) {
      Rational r = 0;
      for (std::size_t k = p.size(); k-- > 0;) {
        r = r * x + p[k];
      }
      return r;
    }

    Rational eval(RatPoly const& p, Rational const& x) {
      Rational r = 0;
      for (std::size_t k = p.size(); k-- > 0;) {
        r = r * x + p[k];
      }
      return r;
    }

    // Remainder of a modulo b over Q.
    RatPoly rem(RatPoly a, RatPoly const& b) {
      trim(a);
      std::size_t const db = b.size() - 1;
      while (a.size() >= b.size()) {
        Rational c = a.back() / b[db];
        std::size_t const off = a.size() - b.size();
        for (std::size_t j = 0; j <= db; ++j) {
          a[off + j] -= c * b[j];
        }
        a.pop_back();
        trim(a);
      }
      return a;
    }

    void divmod(RatPoly a, RatPoly const& b, RatPoly& q, RatPoly& r) {
      trim(a);
      std::size_t const db = b.size() - 1;
      q.assign(a.size() >= b.size() ? a.size() - db : 1, Rational(0));
      while (a.size() >= b.size()) {
        Rational          c   = a.back() / b[db];
        std::size_t const off = a.size() - b.size();
        q[off]                = c;
        for (std::size_t j = 0; j <= db; ++j) {
          a[off + j] -= c * b[j];
        }
        a.pop_back();
        trim(a);
      }
      trim(q);
      r = std::move(a);
    }

    RatPoly mul(RatPoly const& a, RatPoly const& b) {
      if (a.empty() || b.empty()) {
        return {};
      }
      RatPoly c(a.size() + b.size() - 1, Rational(0));
      for (std::size_t i = 0; i < a.size(); ++i) {
        for (std::size_t j = 0; j < b.size(); ++j) {
          c[i + j] += a[i] * b[j];
        }
      }
      return c;
    }

    RatPoly sub(RatPoly a, RatPoly const& b) {
      if (a.size() < b.size()) {
        a.resize(b.size(), Rational(0));
      }
      for (std::size_t i = 0; i < b.size(); ++i) {
        a[i] -= b[i];
      }
      trim(a);
      return a;
    }

    int sign_changes(std::vector<RatPoly> const& chain, Rational const& x) {
      int last = 0, changes = 0;
      for (auto const& p : chain) {
        int s = eval(p, x) > 0 ? 1 : (eval(p, x) < 0 ? -1 : 0);
        if (s == 0) {
          continue;
        }
        if (last != 0 && s != last) {
          ++changes;
        }
        last = s;
      }
      return changes;
    }

    Rational dyadic_floor(double x, unsigned bits) {
      mpz_class num;
      mpz_set_d(num.get_mpz_t(), std::floor(std::ldexp(x, bits)));
      mpz_class den = 1;
      den <<= bits;
      Rational r(num, den);
      r.canonicalize();
      return r;
    }

    // Bisect [lo, hi] (one sign change of p) down to width 2^-bits.
    void bisect(IntPoly const& p, Rational& lo, Rational& hi, unsigned bits) {
      Rational width = 1;
      width /= Rational(mpz_class(1) << bits);
      int slo = eval(p, lo) > 0 ? 1 : -1;
      while (hi - lo > width) {
        Rational mid = (lo + hi) / 2;
        Rational v   = eval(p, mid);
        int      s   = v > 0 ? 1 : (v < 0 ? -1 : 0);
        if (s == 0) {
          lo = hi = mid;
          return;
        }
        if (s == slo) {
          lo = mid;
        } else {
          hi = mid;
        }
      }
    }

    std::size_t hash_mpz(Integer const& z) {
      mpz_srcptr  p = z.get_mpz_t();
      std::size_t h = static_cast<std::size_t>(p->_mp_size) * 0x9e3779b97f4a7c15ULL;
      int         n = std::abs(p->_mp_size);
      for (int i = 0; i < n && i < 4; ++i) {
        h ^= static_cast<std::size_t>(p->_mp_d[i]) + 0x9e3779b97f4a7c15ULL + (h << 6)
             + (h >> 2);
      }
      return h;
    }

  }  // namespace

  ////////////////////////////////////////////////////////////////////////
  // Polynomials
  ////////////////////////////////////////////////////////////////////////

  IntPoly cyclotomic(unsigned n) {
    static std::map<unsigned, IntPoly> cache;
    if (n == 0) {
      invalid_input("cyclotomic order must be positive");
    }
    auto it = cache.find(n);
    if (it != cache.end()) {
      return it->second;
    }
    IntPoly p(n + 1, 0);
    p[0] = -1;
    p[n] = 1;
    for (unsigned d = 1; d < n; ++d) {
      if (n % d == 0) {
        p = divide_exact(p, cyclotomic(d));
      }
    }
    cache[n] = p;
    return p;
  }

  unsigned euler_phi(unsigned n) {
    unsigned result = n;
    for (unsigned p = 2; p * p <= n; ++p) {
      if (n % p == 0) {
        while (n % p == 0) {
          n /= p;
        }
        result -= result / p;
      }
    }
    if (n > 1) {
      result -= result / n;
    }
    return result;
  }

  IntPoly minpoly_two_cos(unsigned L) {
    if (L < 2) {
      invalid_input("field parameter L must be at least 2");
    }
    IntPoly const     f = cyclotomic(2 * L);
    std::size_t const n = (f.size() - 1) / 2;
    // f(z)/z^n = a_0 + sum_k a_k (z^k + z^-k) with a_k = f[n+k], and
    // z^k + z^-k = D_k(y) with D_0 = 2, D_1 = y, D_{k+1} = y D_k - D_{k-1}.
    std::vector<IntPoly> D(n + 1);
    D[0] = {2};
    if (n >= 1) {
      D[1] = {0, 1};
    }
    for (std::size_t k = 2; k <= n; ++k) {
      IntPoly next(k + 1, 0);
      for (std::size_t i = 0; i < D[k - 1].size(); ++i) {
        next[i + 1] += D[k - 1][i];
      }
      for (std::size_t i = 0; i < D[k - 2].size(); ++i) {
        next[i] -= D[k - 2][i];
      }
      D[k] = next;
    }
    IntPoly P(n + 1, 0);
    P[0] = f[n];
    for (std::size_t k = 1; k <= n; ++k) {
      for (std::size_t i = 0; i < D[k].size(); ++i) {
        P[i] += f[n + k] * D[k][i];
      }
    }
    trim(P);
    return P;
  }

  std::size_t sturm_count(IntPoly const& p, Rational const& lo,
                          Rational const& hi) {
    RatPoly p0(p.begin(), p.end());
    trim(p0);
    std::vector<RatPoly> chain{p0};
    RatPoly              p1;
    for (std::size_t k = 1; k < p0.size(); ++k) {
      p1.push_back(p0[k] * static_cast<long>(k));
    }
    trim(p1);
    if (!p1.empty()) {
      chain.push_back(p1);
    }
    while (chain.back().size() > 1) {
      RatPoly r = rem(chain[chain.size() - 2], chain.back());
      if (r.empty()) {
        break;
      }
      for (auto& c : r) {
        c = -c;
      }
      chain.push_back(r);
    }
    int a = sign_changes(chain, lo), b = sign_changes(chain, hi);
    return static_cast<std::size_t>(a - b);
  }

  ////////////////////////////////////////////////////////////////////////
  // FieldSpec
  ////////////////////////////////////////////////////////////////////////

  FieldSpec::Level FieldSpec::make_level(Rational lo, Rational hi,
                                         std::size_t deg) {
    Level lv;
    lv.lo = lo;
    lv.hi = hi;
    Rational a = 1, b = 1;
    for (std::size_t k = 0; k < deg; ++k) {
      lv.plo.push_back(a);
      lv.phi.push_back(b);
      a *= lo;
      b *= hi;
    }
    return lv;
  }

  FieldSpec::FieldSpec(unsigned L) : _L(L) {
    if (L < 2) {
      invalid_input("field parameter L must be at least 2");
    }
    _minpoly = minpoly_two_cos(L);
    _deg     = _minpoly.size() - 1;
    if (_deg != euler_phi(2 * L) / 2 || _minpoly.back() != 1) {
      internal_error("minimal polynomial has unexpected degree");
    }
    _gamma_d = 2.0 * std::cos(std::numbers::pi / L);

    if (_deg == 1) {
      Rational g(-_minpoly[0]);
      _levels.push_back(make_level(g, g, 1));
    } else {
      Rational lo = dyadic_floor(_gamma_d - 1e-9, 40);
      Rational hi = dyadic_floor(_gamma_d + 1e-9, 40) + Rational(mpz_class(1), mpz_class(1) << 40);
      if (lo <= 0) {
        lo = Rational(1, 2);
      }
      if (sgn(eval(_minpoly, lo)) * sgn(eval(_minpoly, hi)) >= 0
          || sturm_count(_minpoly, lo, hi) != 1) {
        internal_error("failed to isolate the field generator");
      }
      for (unsigned bits : {64u, 256u, 1024u}) {
        bisect(_minpoly, lo, hi, bits);
        _levels.push_back(make_level(lo, hi, _deg));
      }
      if (std::abs(lo.get_d() - _gamma_d) > 1e-12) {
        internal_error("isolated root disagrees with 2cos(pi/L)");
      }
    }
    for (std::size_t k = 0; k < _deg; ++k) {
      _pow_d.push_back(_levels.front().phi[k].get_d() * (1 + 1e-12));
    }
    // g^k reduced, for k = deg .. 2 deg - 2
    IntPoly cur(_deg, 0);
    for (std::size_t j = 0; j < _deg; ++j) {
      cur[j] = -_minpoly[j];
    }
    for (std::size_t k = _deg; k + 1 < 2 * _deg; ++k) {
      _red.push_back(cur);
      // multiply by g
      Integer top = cur[_deg - 1];
      for (std::size_t j = _deg - 1; j > 0; --j) {
        cur[j] = cur[j - 1] - top * _minpoly[j];
      }
      cur[0] = -top * _minpoly[0];
    }
  }

  std::string FieldSpec::minpoly_string() const {
    std::ostringstream os;
    bool               first = true;
    for (std::size_t k = _minpoly.size(); k-- > 0;) {
      Integer c = _minpoly[k];
      if (c == 0) {
        continue;
      }
      if (!first) {
        os << (c < 0 ? " - " : " + ");
        c = abs(c);
      } else if (c < 0) {
        os << "-";
        c = abs(c);
      }
      if (c != 1 || k == 0) {
        os << c;
      }
      if (k >= 1) {
        os << "x";
      }
      if (k > 1) {
        os << "^" << k;
      }
      first = false;
    }
    return os.str();
  }

  FieldPtr make_field(unsigned L) {
    return std::make_shared<FieldSpec const>(L);
  }

  ////////////////////////////////////////////////////////////////////////
  // Fe
  ////////////////////////////////////////////////////////////////////////

  Fe::Fe(FieldSpec const* f) : _f(f), _num(f->degree(), 0), _den(1) {}

  Fe::Fe(FieldSpec const* f, long v) : Fe(f) {
    _num[0] = v;
  }

  Fe::Fe(FieldSpec const* f, Rational const& v) : Fe(f) {
    _num[0] = v.get_num();
    _den    = v.get_den();
  }

  Fe::Fe(FieldSpec const* f, std::vector<Rational> const& coeffs) : Fe(f) {
    if (coeffs.size() > f->degree()) {
      // reduce a longer polynomial
      Fe g = gamma(f), p(f, 1L), acc(f);
      for (auto const& c : coeffs) {
        acc += Fe(f, c) * p;
        p *= g;
      }
      *this = acc;
      return;
    }
    Integer den = 1;
    for (auto const& c : coeffs) {
      mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den_mpz_t());
    }
    for (std::size_t k = 0; k < coeffs.size(); ++k) {
      _num[k] = coeffs[k].get_num() * (den / coeffs[k].get_den());
    }
    _den = den;
    canonicalize();
  }

  Fe Fe::gamma(FieldSpec const* f) {
    if (f->degree() == 1) {
      return Fe(f, Rational(-f->minpoly()[0]));
    }
    Fe g(f);
    g._num[1] = 1;
    return g;
  }

  Rational Fe::coeff(std::size_t k) const {
    Rational r(_num[k], _den);
    r.canonicalize();
    return r;
  }

  bool Fe::is_zero() const {
    for (auto const& c : _num) {
      if (c != 0) {
        return false;
      }
    }
    return true;
  }

  bool Fe::is_one() const {
    if (_den != 1 || _num[0] != 1) {
      return false;
    }
    for (std::size_t k = 1; k < _num.size(); ++k) {
      if (_num[k] != 0) {
        return false;
      }
    }
    return true;
  }

  void Fe::canonicalize() {
    if (_den == 1) {
      return;
    }
    if (_den < 0) {
      _den = -_den;
      for (auto& c : _num) {
        c = -c;
      }
    }
    Integer g = _den;
    for (auto const& c : _num) {
      if (g == 1) {
        break;
      }
      mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    }
    if (g != 1) {
      for (auto& c : _num) {
        mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
      }
      mpz_divexact(_den.get_mpz_t(), _den.get_mpz_t(), g.get_mpz_t());
    }
  }

  Fe& Fe::operator+=(Fe const& o) {
    if (_f == nullptr) {
      return *this = o;
    }
    if (_den == o._den) {
      for (std::size_t k = 0; k < _num.size(); ++k) {
        _num[k] += o._num[k];
      }
      if (_den != 1) {
        canonicalize();
      }
      return *this;
    }
    for (std::size_t k = 0; k < _num.size(); ++k) {
      _num[k] = _num[k] * o._den + o._num[k] * _den;
    }
    _den *= o._den;
    canonicalize();
    return *this;
  }

  Fe& Fe::operator-=(Fe const& o) {
    if (_f == nullptr) {
      return *this = -o;
    }
    if (_den == o._den) {
      for (std::size_t k = 0; k < _num.size(); ++k) {
        _num[k] -= o._num[k];
      }
      if (_den != 1) {
        canonicalize();
      }
      return *this;
    }
    for (std::size_t k = 0; k < _num.size(); ++k) {
      _num[k] = _num[k] * o._den - o._num[k] * _den;
    }
    _den *= o._den;
    canonicalize();
    return *this;
  }

  Fe Fe::operator-() const {
    Fe r = *this;
    for (auto& c : r._num) {
      c = -c;
    }
    return r;
  }

  Fe operator*(Fe const& a, Fe const& b) {
    FieldSpec const*  f = a._f;
    std::size_t const n = f->degree();
    Fe                r(f);
    if (n == 1) {
      r._num[0] = a._num[0] * b._num[0];
    } else {
      std::vector<Integer> t(2 * n - 1, 0);
      for (std::size_t i = 0; i < n; ++i) {
        if (a._num[i] == 0) {
          continue;
        }
        for (std::size_t j = 0; j < n; ++j) {
          mpz_addmul(t[i + j].get_mpz_t(), a._num[i].get_mpz_t(),
                     b._num[j].get_mpz_t());
        }
      }
      auto const& red = f->reduction();
      for (std::size_t k = 0; k < n; ++k) {
        r._num[k].swap(t[k]);
      }
      for (std::size_t k = n; k < 2 * n - 1; ++k) {
        if (t[k] == 0) {
          continue;
        }
        IntPoly const& row = red[k - n];
        for (std::size_t j = 0; j < n; ++j) {
          mpz_addmul(r._num[j].get_mpz_t(), t[k].get_mpz_t(),
                     row[j].get_mpz_t());
        }
      }
    }
    if (a._den != 1 || b._den != 1) {
      r._den = a._den * b._den;
      r.canonicalize();
    }
    return r;
  }

  Fe& Fe::operator*=(Fe const& o) {
    return *this = *this * o;
  }

  Fe Fe::inverse() const {
    if (is_zero()) {
      invalid_input("division by zero in the coefficient field");
    }
    std::size_t const n = _f->degree();
    if (n == 1) {
      return Fe(_f, Rational(1) / coeff(0));
    }
    // Extended Euclid: s*a + t*m = 1.
    RatPoly m(_f->minpoly().begin(), _f->minpoly().end());
    RatPoly a;
    for (std::size_t k = 0; k < n; ++k) {
      a.push_back(coeff(k));
    }
    trim(a);
    RatPoly r0 = m, r1 = a, s0{}, s1{Rational(1)};
    while (!r1.empty() && !(r1.size() == 1)) {
      RatPoly q, r;
      divmod(r0, r1, q, r);
      RatPoly s = sub(s0, mul(q, s1));
      r0        = std::move(r1);
      r1        = std::move(r);
      s0        = std::move(s1);
      s1        = std::move(s);
    }
    if (r1.empty()) {
      internal_error("minimal polynomial is not irreducible");
    }
    Rational c = r1[0];
    for (auto& x : s1) {
      x /= c;
    }
    return Fe(_f, s1);
  }

  Fe& Fe::operator/=(Fe const& o) {
    return *this = *this * o.inverse();
  }

  bool Fe::operator==(Fe const& o) const {
    return _den == o._den && _num == o._num;
  }

  std::size_t Fe::hash() const {
    std::size_t h = hash_mpz(_den);
    for (auto const& c : _num) {
      h = h * 1000003ULL ^ hash_mpz(c);
    }
    return h;
  }

  void Fe::scale(long k) {
    for (auto& c : _num) {
      c *= k;
    }
    canonicalize();
  }

  double Fe::to_double() const {
    double r = 0, p = 1;
    double g = _f->gamma_double();
    for (std::size_t k = 0; k < _num.size(); ++k) {
      r += _num[k].get_d() * p;
      p *= g;
    }
    if (_f->degree() == 1) {
      return coeff(0).get_d();
    }
    return r / _den.get_d();
  }

  int Fe::sign() const {
    if (is_zero()) {
      return 0;
    }
    std::size_t const n = _num.size();
    if (n == 1) {
      return sgn(_num[0]);
    }
    // Floating filter with a rigorous error bound.
    {
      auto const& pw     = _f->power_bounds();
      double      approx = 0, mag = 0;
      bool        ok     = true;
      for (std::size_t k = 0; k < n; ++k) {
        if (_num[k] == 0) {
          continue;
        }
        if (mpz_sizeinbase(_num[k].get_mpz_t(), 2) > 900) {
          ok = false;
          break;
        }
        double c = _num[k].get_d();
        approx += c * pw[k];
        mag += std::abs(c) * pw[k];
      }
      if (ok) {
        double bound = mag * static_cast<double>(n + 4) * 0x1p-50;
        if (approx > bound) {
          return 1;
        }
        if (approx < -bound) {
          return -1;
        }
      }
    }
    // Exact interval evaluation.
    auto enclose = [&](std::vector<Rational> const& plo,
                       std::vector<Rational> const& phi) -> int {
      Rational lo = 0, hi = 0;
      for (std::size_t k = 0; k < n; ++k) {
        int s = sgn(_num[k]);
        if (s == 0) {
          continue;
        }
        if (s > 0) {
          lo += _num[k] * plo[k];
          hi += _num[k] * phi[k];
        } else {
          lo += _num[k] * phi[k];
          hi += _num[k] * plo[k];
        }
      }
      if (lo > 0) {
        return 1;
      }
      if (hi < 0) {
        return -1;
      }
      return 0;
    };
    for (auto const& lv : _f->levels()) {
      int s = enclose(lv.plo, lv.phi);
      if (s != 0) {
        return s;
      }
    }
    Rational lo = _f->levels().back().lo, hi = _f->levels().back().hi;
    unsigned bits = 1024;
    while (true) {
      bits *= 2;
      bisect(_f->minpoly(), lo, hi, bits);
      auto lv = FieldSpec::make_level(lo, hi, n);
      int  s  = enclose(lv.plo, lv.phi);
      if (s != 0) {
        return s;
      }
      if (bits > (1u << 22)) {
        internal_error("sign determination did not terminate");
      }
    }
  }

  int sign_of(Fe const& a) {
    return a.sign();
  }

  std::vector<std::string> Fe::coeff_strings() const {
    std::vector<std::string> out;
    for (std::size_t k = 0; k < _num.size(); ++k) {
      out.push_back(coeff(k).get_str());
    }
    return out;
  }

  std::string Fe::to_string() const {
    if (is_zero()) {
      return "0";
    }
    std::ostringstream os;
    bool               first = true;
    for (std::size_t k = 0; k < _num.size(); ++k) {
      Rational c = coeff(k);
      if (c == 0) {
        continue;
      }
      if (!first) {
        os << (c < 0 ? " - " : " + ");
        c = abs(c);
      } else if (c < 0) {
        os << "-";
        c = abs(c);
      }
      if (k == 0 || c != 1) {
        os << c.get_str();
      }
      if (k >= 1) {
        os << "g";
      }
      if (k > 1) {
        os << "^" << k;
      }
      first = false;
    }
    return os.str();
  }

}  // namespace tricox
