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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <numbers>
#include <random>

#include <mpfr.h>

#include "tricox/error.hpp"
#include "tricox/field.hpp"

using namespace tricox;

namespace {

  Fe random_element(FieldSpec const* f, std::mt19937_64& rng) {
    std::uniform_int_distribution<long> num(-20, 20), den(1, 9);
    std::vector<Rational>               c;
    for (std::size_t k = 0; k < f->degree(); ++k) {
      Rational q(num(rng), den(rng));
      q.canonicalize();
      c.push_back(q);
    }
    return Fe(f, c);
  }

  // Sign of the element evaluated with 200-bit floating point, independent
  // of the library's interval machinery. Returns 2 when inconclusive.
  int mpfr_sign(Fe const& a, unsigned L) {
    mpfr_t g, acc, term, pi, c;
    mpfr_inits2(200, g, acc, term, pi, c, static_cast<mpfr_ptr>(nullptr));
    mpfr_const_pi(pi, MPFR_RNDN);
    mpfr_div_ui(pi, pi, L, MPFR_RNDN);
    mpfr_cos(g, pi, MPFR_RNDN);
    mpfr_mul_ui(g, g, 2, MPFR_RNDN);
    if (a.size() == 1) {
      mpfr_set_ui(g, 1, MPFR_RNDN);  // the single coefficient is the value
    }
    mpfr_set_ui(acc, 0, MPFR_RNDN);
    mpfr_set_ui(term, 1, MPFR_RNDN);
    for (std::size_t k = 0; k < a.size(); ++k) {
      mpfr_set_q(c, a.coeff(k).get_mpq_t(), MPFR_RNDN);
      mpfr_mul(c, c, term, MPFR_RNDN);
      mpfr_add(acc, acc, c, MPFR_RNDN);
      mpfr_mul(term, term, g, MPFR_RNDN);
    }
    int s = mpfr_sgn(acc);
    if (std::abs(mpfr_get_d(acc, MPFR_RNDN)) < 1e-50) {
      s = 2;
    }
    mpfr_clears(g, acc, term, pi, c, static_cast<mpfr_ptr>(nullptr));
    return s;
  }

}  // namespace

TEST_CASE("minimal polynomials from cyclotomic substitution") {
  CHECK(minpoly_two_cos(4) == IntPoly{-2, 0, 1});
  CHECK(minpoly_two_cos(2) == IntPoly{0, 1});
  CHECK(minpoly_two_cos(3) == IntPoly{-1, 1});
  CHECK_THROWS_AS(make_field(1), Error);
  for (unsigned L = 2; L <= 60; ++L) {
    auto f = make_field(L);
    CHECK(f->degree() == euler_phi(2 * L) / 2);
    double g = 2 * std::cos(std::numbers::pi / L);
    // all Galois conjugates 2cos(k pi/L), k odd and coprime to L, are roots,
    // so the polynomial of degree phi(2L)/2 is the minimal polynomial
    std::size_t roots = 0;
    for (unsigned k = 1; k < 2 * L; k += 2) {
      if (std::gcd(k, 2 * L) != 1 || k > L) {
        continue;
      }
      double x = 2 * std::cos(k * std::numbers::pi / L), v = 0;
      for (std::size_t i = f->minpoly().size(); i-- > 0;) {
        v = v * x + f->minpoly()[i].get_d();
      }
      CHECK(std::abs(v) < 1e-6 * std::pow(4.0, f->degree()));
      ++roots;
    }
    CHECK(roots == f->degree());
    CHECK(f->isolating_lo().get_d() <= g + 1e-12);
    CHECK(f->isolating_hi().get_d() >= g - 1e-12);
    if (f->degree() > 1) {
      CHECK(sturm_count(f->minpoly(), f->isolating_lo(), f->isolating_hi()) == 1);
    }
  }
}

TEST_CASE("arithmetic in Q(sqrt 2)") {
  auto             fp = make_field(4);
  FieldSpec const* f  = fp.get();
  Fe               g  = Fe::gamma(f);
  CHECK(g * g == Fe(f, 2L));
  Fe x(f, std::vector<Rational>{Rational(3, 7), Rational(-5)});
  CHECK(x + Fe(f) == x);
  Fe q = Fe(f, 1L) / (g - Fe(f, 1L));
  CHECK(q == g + Fe(f, 1L));
  CHECK(q * (g - Fe(f, 1L)) == Fe(f, 1L));
  CHECK((g - Fe(f, 1L)).sign() > 0);
  CHECK((g * g - Fe(f, 2L)).sign() == 0);
  CHECK((Fe(f, 3L) - Fe(f, 2L) * g).sign() > 0);
  CHECK((Fe(f, 2L) * g - Fe(f, 3L)).sign() < 0);
  CHECK_THROWS_AS(Fe(f, 1L) / Fe(f), Error);
}

TEST_CASE("field axioms and sign on random elements") {
  std::mt19937_64 rng(7);
  for (unsigned L : {3u, 4u, 5u, 6u, 7u, 12u, 20u, 42u}) {
    auto             fp = make_field(L);
    FieldSpec const* f  = fp.get();
    for (int it = 0; it < 60; ++it) {
      Fe a = random_element(f, rng), b = random_element(f, rng),
         c = random_element(f, rng);
      CHECK((a * b) * c == a * (b * c));
      CHECK(a * (b + c) == a * b + a * c);
      CHECK((a + b) - b == a);
      if (!a.is_zero()) {
        CHECK(a * a.inverse() == Fe(f, 1L));
        CHECK((b / a) * a == b);
      }
      CHECK((a * b).sign() == a.sign() * b.sign());
      for (Fe const* e : {&a, &b, &c}) {
        int s = mpfr_sign(*e, L);
        if (s != 2) {
          CHECK(e->sign() == s);
        }
      }
    }
  }
}

TEST_CASE("sign of tiny nonzero values needs refinement") {
  auto             fp = make_field(7);
  FieldSpec const* f  = fp.get();
  Fe               g  = Fe::gamma(f);
  // close rational approximation of g from below and above
  Rational lo = f->levels().back().lo, hi = f->levels().back().hi;
  CHECK((g - Fe(f, lo)).sign() > 0);
  CHECK((g - Fe(f, hi)).sign() < 0);
  Fe p = g;
  for (int k = 0; k < 20; ++k) {
    p *= g;
  }
  CHECK(mpfr_sign(p - Fe(f, Rational(1)), 7) == (p - Fe(f, 1L)).sign());
}
