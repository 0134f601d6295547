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

#include "tricox/linalg.hpp"

#include <sstream>
#include <vector>

namespace tricox {

  Vec3 Vec3::unit(FieldSpec const* f, std::size_t i) {
    Vec3 v(f);
    v[i] = Fe(f, 1L);
    return v;
  }

  Vec3 Vec3::operator+(Vec3 const& o) const {
    return Vec3(x[0] + o.x[0], x[1] + o.x[1], x[2] + o.x[2]);
  }

  Vec3 Vec3::operator-(Vec3 const& o) const {
    return Vec3(x[0] - o.x[0], x[1] - o.x[1], x[2] - o.x[2]);
  }

  Vec3 Vec3::operator-() const {
    return Vec3(-x[0], -x[1], -x[2]);
  }

  Vec3 Vec3::operator*(Fe const& s) const {
    return Vec3(x[0] * s, x[1] * s, x[2] * s);
  }

  std::size_t Vec3::hash() const {
    return (x[0].hash() * 31 + x[1].hash()) * 31 + x[2].hash();
  }

  Vec3 cross(Vec3 const& u, Vec3 const& v) {
    return Vec3(u[1] * v[2] - u[2] * v[1],
                u[2] * v[0] - u[0] * v[2],
                u[0] * v[1] - u[1] * v[0]);
  }

  Fe dot(Vec3 const& u, Vec3 const& v) {
    return u[0] * v[0] + u[1] * v[1] + u[2] * v[2];
  }

  Fe det3(Vec3 const& u, Vec3 const& v, Vec3 const& w) {
    return dot(cross(u, v), w);
  }

  bool parallel(Vec3 const& u, Vec3 const& v) {
    return cross(u, v).is_zero();
  }

  Vec3 projective_normal(Vec3 const& v) {
    for (std::size_t i = 0; i < 3; ++i) {
      if (!v[i].is_zero()) {
        Fe inv = v[i].inverse();
        Vec3 r = v * inv;
        return r;
      }
    }
    return v;
  }

  Mat3::Mat3(FieldSpec const* f) {
    for (auto& e : a) {
      e = Fe(f);
    }
  }

  Mat3 Mat3::identity(FieldSpec const* f) {
    Mat3 m(f);
    for (std::size_t i = 0; i < 3; ++i) {
      m(i, i) = Fe(f, 1L);
    }
    return m;
  }

  Mat3 Mat3::operator*(Mat3 const& o) const {
    Mat3 r;
    for (std::size_t i = 0; i < 3; ++i) {
      for (std::size_t j = 0; j < 3; ++j) {
        Fe s = (*this)(i, 0) * o(0, j);
        s += (*this)(i, 1) * o(1, j);
        s += (*this)(i, 2) * o(2, j);
        r(i, j) = std::move(s);
      }
    }
    return r;
  }

  Vec3 Mat3::operator*(Vec3 const& v) const {
    Vec3 r;
    for (std::size_t i = 0; i < 3; ++i) {
      Fe s = (*this)(i, 0) * v[0];
      s += (*this)(i, 1) * v[1];
      s += (*this)(i, 2) * v[2];
      r[i] = std::move(s);
    }
    return r;
  }

  Mat3 Mat3::operator+(Mat3 const& o) const {
    Mat3 r;
    for (std::size_t k = 0; k < 9; ++k) {
      r.a[k] = a[k] + o.a[k];
    }
    return r;
  }

  Mat3 Mat3::operator-(Mat3 const& o) const {
    Mat3 r;
    for (std::size_t k = 0; k < 9; ++k) {
      r.a[k] = a[k] - o.a[k];
    }
    return r;
  }

  Mat3 Mat3::transpose() const {
    Mat3 r;
    for (std::size_t i = 0; i < 3; ++i) {
      for (std::size_t j = 0; j < 3; ++j) {
        r(i, j) = (*this)(j, i);
      }
    }
    return r;
  }

  Mat3 Mat3::adjugate() const {
    Mat3 r;
    auto const& m = *this;
    r(0, 0) = m(1, 1) * m(2, 2) - m(1, 2) * m(2, 1);
    r(0, 1) = m(0, 2) * m(2, 1) - m(0, 1) * m(2, 2);
    r(0, 2) = m(0, 1) * m(1, 2) - m(0, 2) * m(1, 1);
    r(1, 0) = m(1, 2) * m(2, 0) - m(1, 0) * m(2, 2);
    r(1, 1) = m(0, 0) * m(2, 2) - m(0, 2) * m(2, 0);
    r(1, 2) = m(0, 2) * m(1, 0) - m(0, 0) * m(1, 2);
    r(2, 0) = m(1, 0) * m(2, 1) - m(1, 1) * m(2, 0);
    r(2, 1) = m(0, 1) * m(2, 0) - m(0, 0) * m(2, 1);
    r(2, 2) = m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0);
    return r;
  }

  Fe Mat3::det() const {
    return det3(row(0), row(1), row(2));
  }

  bool Mat3::is_identity() const {
    for (std::size_t i = 0; i < 3; ++i) {
      for (std::size_t j = 0; j < 3; ++j) {
        Fe const& e = (*this)(i, j);
        if (i == j ? !e.is_one() : !e.is_zero()) {
          return false;
        }
      }
    }
    return true;
  }

  int Mat3::rank() const {
    bool all_zero = true;
    for (auto const& e : a) {
      if (!e.is_zero()) {
        all_zero = false;
        break;
      }
    }
    if (all_zero) {
      return 0;
    }
    Vec3 r0 = row(0), r1 = row(1), r2 = row(2);
    if (!det3(r0, r1, r2).is_zero()) {
      return 3;
    }
    if (!cross(r0, r1).is_zero() || !cross(r0, r2).is_zero()
        || !cross(r1, r2).is_zero()) {
      return 2;
    }
    return 1;
  }

  std::size_t Mat3::hash() const {
    std::size_t h = 0;
    for (auto const& e : a) {
      h = h * 1000003ULL ^ e.hash();
    }
    return h;
  }

  std::string Mat3::serialize() const {
    std::ostringstream os;
    for (auto const& e : a) {
      os << '[';
      for (auto const& s : e.coeff_strings()) {
        os << s << ',';
      }
      os << ']';
    }
    return os.str();
  }

  int column_rank(std::vector<Vec3> const& cols) {
    std::vector<Vec3> basis;
    for (auto const& c : cols) {
      if (c.is_zero()) {
        continue;
      }
      if (basis.empty()) {
        basis.push_back(c);
      } else if (basis.size() == 1) {
        if (!parallel(basis[0], c)) {
          basis.push_back(c);
        }
      } else if (basis.size() == 2) {
        if (!det3(basis[0], basis[1], c).is_zero()) {
          return 3;
        }
      }
    }
    return static_cast<int>(basis.size());
  }

}  // namespace tricox
