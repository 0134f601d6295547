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

// Exact arithmetic in the real field Q(g), g = 2cos(pi/L).

#ifndef TRICOX_FIELD_HPP_
#define TRICOX_FIELD_HPP_

#include <cstddef>
#include <memory>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace tricox {

  using Integer  = mpz_class;
  using Rational = mpq_class;

  //! Integer polynomial, coefficients from the constant term upwards.
  using IntPoly = std::vector<Integer>;

  //! The n-th cyclotomic polynomial.
  IntPoly cyclotomic(unsigned n);

  //! The minimal polynomial of 2cos(pi/L), obtained from the cyclotomic
  //! polynomial of order 2L by the substitution y = z + 1/z.
  IntPoly minpoly_two_cos(unsigned L);

  unsigned euler_phi(unsigned n);

  //! Number of distinct real roots of \p p in the half-open interval (lo, hi],
  //! counted with a Sturm sequence.
  std::size_t sturm_count(IntPoly const& p, Rational const& lo,
                          Rational const& hi);

  class FieldSpec {
   public:
    explicit FieldSpec(unsigned L);

    FieldSpec(FieldSpec const&)            = delete;
    FieldSpec& operator=(FieldSpec const&) = delete;

    unsigned L() const noexcept {
      return _L;
    }

    //! Degree of the minimal polynomial; every element has this many
    //! coefficients.
    std::size_t degree() const noexcept {
      return _deg;
    }

    IntPoly const& minpoly() const noexcept {
      return _minpoly;
    }

    Rational const& isolating_lo() const noexcept {
      return _levels.front().lo;
    }

    Rational const& isolating_hi() const noexcept {
      return _levels.front().hi;
    }

    //! Double approximation of the generator.
    double gamma_double() const noexcept {
      return _gamma_d;
    }

    std::string minpoly_string() const;

    // Internal data for sign determination.
    struct Level {
      Rational              lo, hi;  // bracket of the generator
      std::vector<Rational> plo, phi;  // brackets of its powers
    };

    std::vector<Level> const& levels() const noexcept {
      return _levels;
    }

    std::vector<double> const& power_bounds() const noexcept {
      return _pow_d;
    }

    // Reduction table: g^k for k = deg .. 2deg-2 in the power basis.
    std::vector<IntPoly> const& reduction() const noexcept {
      return _red;
    }

    static Level make_level(Rational lo, Rational hi, std::size_t deg);

   private:
    unsigned             _L;
    std::size_t          _deg;
    IntPoly              _minpoly;
    double               _gamma_d;
    std::vector<Level>   _levels;
    std::vector<double>  _pow_d;
    std::vector<IntPoly> _red;
  };

  using FieldPtr = std::shared_ptr<FieldSpec const>;

  FieldPtr make_field(unsigned L);

  //! An element of Q(g) stored as an integer coefficient vector over a
  //! positive common denominator, in lowest terms.
  class Fe {
   public:
    Fe() = default;
    explicit Fe(FieldSpec const* f);
    Fe(FieldSpec const* f, long v);
    Fe(FieldSpec const* f, Rational const& v);
    Fe(FieldSpec const* f, std::vector<Rational> const& coeffs);

    static Fe gamma(FieldSpec const* f);

    FieldSpec const* field() const noexcept {
      return _f;
    }

    std::size_t size() const noexcept {
      return _num.size();
    }

    Rational coeff(std::size_t k) const;

    Integer const& numerator(std::size_t k) const noexcept {
      return _num[k];
    }

    Integer const& denominator() const noexcept {
      return _den;
    }

    bool is_zero() const;
    bool is_one() const;
    bool is_integral() const {
      return _den == 1;
    }

    //! -1, 0 or 1 under the real embedding fixed by the isolating interval.
    int sign() const;

    double to_double() const;

    Fe inverse() const;

    Fe& operator+=(Fe const& o);
    Fe& operator-=(Fe const& o);
    Fe& operator*=(Fe const& o);
    Fe& operator/=(Fe const& o);

    Fe operator-() const;

    friend Fe operator+(Fe a, Fe const& b) {
      return a += b;
    }
    friend Fe operator-(Fe a, Fe const& b) {
      return a -= b;
    }
    friend Fe operator*(Fe const& a, Fe const& b);
    friend Fe operator/(Fe a, Fe const& b) {
      return a /= b;
    }

    bool operator==(Fe const& o) const;
    bool operator!=(Fe const& o) const {
      return !(*this == o);
    }

    //! Exact order under the real embedding.
    friend bool operator<(Fe const& a, Fe const& b) {
      return (a - b).sign() < 0;
    }

    std::size_t hash() const;

    //! Human readable form, e.g. "1/2 + 3g^2".
    std::string to_string() const;

    //! Coefficients as strings "p/q", constant term first.
    std::vector<std::string> coeff_strings() const;

    //! Scale in place by a nonzero integer.
    void scale(long k);

   private:
    void canonicalize();

    FieldSpec const*     _f = nullptr;
    std::vector<Integer> _num;
    Integer              _den = 1;
  };

  int sign_of(Fe const& a);

}  // namespace tricox

#endif  // TRICOX_FIELD_HPP_
