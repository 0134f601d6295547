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

// Three dimensional vectors and matrices over the coefficient field.

#ifndef TRICOX_LINALG_HPP_
#define TRICOX_LINALG_HPP_

#include <array>
#include <cstddef>
#include <string>
#include <vector>

#include "tricox/field.hpp"

namespace tricox {

  struct Vec3 {
    std::array<Fe, 3> x;

    Vec3() = default;
    explicit Vec3(FieldSpec const* f) : x{Fe(f), Fe(f), Fe(f)} {}
    Vec3(Fe a, Fe b, Fe c) : x{std::move(a), std::move(b), std::move(c)} {}

    static Vec3 unit(FieldSpec const* f, std::size_t i);

    Fe&       operator[](std::size_t i) {
      return x[i];
    }
    Fe const& operator[](std::size_t i) const {
      return x[i];
    }

    bool is_zero() const {
      return x[0].is_zero() && x[1].is_zero() && x[2].is_zero();
    }

    bool operator==(Vec3 const& o) const {
      return x == o.x;
    }

    Vec3 operator+(Vec3 const& o) const;
    Vec3 operator-(Vec3 const& o) const;
    Vec3 operator-() const;
    Vec3 operator*(Fe const& s) const;

    std::size_t hash() const;
  };

  //! Euclidean cross product.
  Vec3 cross(Vec3 const& u, Vec3 const& v);
  Fe   dot(Vec3 const& u, Vec3 const& v);
  Fe   det3(Vec3 const& u, Vec3 const& v, Vec3 const& w);

  //! True when u and v are linearly dependent.
  bool parallel(Vec3 const& u, Vec3 const& v);

  //! Scale by a nonzero field element so that the first nonzero coordinate
  //! is 1; a canonical representative of the projective point.
  Vec3 projective_normal(Vec3 const& v);

  struct Mat3 {
    std::array<Fe, 9> a;

    Mat3() = default;
    explicit Mat3(FieldSpec const* f);

    static Mat3 identity(FieldSpec const* f);

    FieldSpec const* field() const {
      return a[0].field();
    }

    Fe&       operator()(std::size_t i, std::size_t j) {
      return a[3 * i + j];
    }
    Fe const& operator()(std::size_t i, std::size_t j) const {
      return a[3 * i + j];
    }

    Vec3 row(std::size_t i) const {
      return Vec3(a[3 * i], a[3 * i + 1], a[3 * i + 2]);
    }
    Vec3 col(std::size_t j) const {
      return Vec3(a[j], a[3 + j], a[6 + j]);
    }

    Mat3 operator*(Mat3 const& o) const;
    Vec3 operator*(Vec3 const& v) const;
    Mat3 operator+(Mat3 const& o) const;
    Mat3 operator-(Mat3 const& o) const;
    Mat3 transpose() const;
    Mat3 adjugate() const;
    Fe   det() const;

    bool operator==(Mat3 const& o) const {
      return a == o.a;
    }
    bool operator!=(Mat3 const& o) const {
      return !(a == o.a);
    }

    bool is_identity() const;

    //! Rank computed from minors, without division.
    int rank() const;

    std::size_t hash() const;

    //! Canonical serialization used for deterministic tie breaking.
    std::string serialize() const;
  };

  //! Rank of the matrix with the given columns (up to 3 rows, any number of
  //! columns), by fraction-free elimination.
  int column_rank(std::vector<Vec3> const& cols);

  struct Mat3Hash {
    std::size_t operator()(Mat3 const& m) const {
      return m.hash();
    }
  };

  struct Vec3Hash {
    std::size_t operator()(Vec3 const& v) const {
      return v.hash();
    }
  };

}  // namespace tricox

#endif  // TRICOX_LINALG_HPP_
