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

// Rank three Coxeter systems in their geometric representation.

#ifndef TRICOX_COXETER_HPP_
#define TRICOX_COXETER_HPP_

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "tricox/field.hpp"
#include "tricox/linalg.hpp"

namespace tricox {

  //! Encodes the label infinity.
  constexpr unsigned infinity = 0;

  //! Coxeter labels (m_ab, m_bc, m_ac), each >= 2 or infinity.
  struct CoxeterSpec {
    std::array<unsigned, 3> labels{};

    //! Parses "3,3,4" or "2,3,inf".
    static CoxeterSpec parse(std::string const& text);

    unsigned m(std::size_t s, std::size_t t) const;

    //! "spherical", "affine" or "hyperbolic".
    std::string kind() const;

    bool is_hyperbolic() const {
      return kind() == "hyperbolic";
    }

    //! lcm of the finite labels, at least 2.
    unsigned field_parameter() const;

    std::string to_string() const;
  };

  //! A matrix of the geometric representation with its cached moved rank.
  class GroupElement {
   public:
    GroupElement() = default;
    explicit GroupElement(Mat3 m) : _m(std::move(m)) {}

    Mat3 const& matrix() const noexcept {
      return _m;
    }

    //! rank(M - I), equal to the dimension of the moved space.
    int moved_rank() const;

    bool operator==(GroupElement const& o) const {
      return _m == o._m;
    }
    bool operator!=(GroupElement const& o) const {
      return !(_m == o._m);
    }

    GroupElement operator*(GroupElement const& o) const {
      return GroupElement(_m * o._m);
    }

    Vec3 operator*(Vec3 const& v) const {
      return _m * v;
    }

    std::size_t hash() const {
      return _m.hash();
    }

    bool is_identity() const {
      return _m.is_identity();
    }

   private:
    Mat3        _m;
    mutable int _rank = -1;
  };

  struct ElementHash {
    std::size_t operator()(GroupElement const& g) const {
      return g.hash();
    }
  };

  enum class Kind { identity, reflection, rotation, parabolic, translation, glide };

  std::string to_string(Kind k);

  struct Classification {
    Kind kind;
    //! reflection: pole; rotation, parabolic: fixed point on the positive
    //! sheet; translation, glide: pole of the axis.
    Vec3 locus;
  };

  using Word = std::string;

  struct BallEntry {
    GroupElement element;
    Word         word;
  };

  //! Elements of length at most a radius, in breadth-first order.
  class Ball {
   public:
    std::vector<BallEntry> const& entries() const noexcept {
      return _entries;
    }
    std::vector<std::size_t> const& reflections() const noexcept {
      return _refl;
    }
    std::size_t radius() const noexcept {
      return _radius;
    }
    std::optional<std::size_t> find(GroupElement const& g) const;

   private:
    friend class CoxeterSystem;
    std::size_t                                               _radius = 0;
    std::vector<BallEntry>                                    _entries;
    std::vector<std::size_t>                                  _refl;
    std::unordered_map<Mat3, std::size_t, Mat3Hash>           _index;
  };

  //! Default cap on enumeration radius, overridable by TRICOX_MAX_RADIUS.
  std::size_t max_ball_radius();

  class CoxeterSystem {
   public:
    explicit CoxeterSystem(CoxeterSpec const& spec);

    CoxeterSpec const& spec() const noexcept {
      return _spec;
    }
    FieldSpec const* field() const noexcept {
      return _field.get();
    }

    //! The Gram matrix B with B(e_s,e_s) = 1.
    Mat3 const& gram() const noexcept {
      return _gram;
    }

    //! Twice the Gram matrix; all geometric tests use this scaled form.
    Mat3 const& gram2() const noexcept {
      return _gram2;
    }

    //! x^T (2B) y.
    Fe form(Vec3 const& x, Vec3 const& y) const;

    //! A vector orthogonal to u and v under the form.
    Vec3 bcross(Vec3 const& u, Vec3 const& v) const;

    Vec3 const& root(std::size_t s) const {
      return _roots[s];
    }

    //! Interior point of the fundamental chamber, with equal pairing
    //! against all three roots.
    Vec3 const& basepoint() const noexcept {
      return _x0;
    }

    //! Vertex of the fundamental chamber opposite wall s, on the closure
    //! of the positive sheet.
    Vec3 const& vertex(std::size_t s) const {
      return _vertices[s];
    }

    GroupElement const& generator(std::size_t s) const {
      return _gens[s];
    }

    GroupElement identity() const;

    //! Product of generators; letters 'a', 'b', 'c'.
    GroupElement word_to_element(Word const& w) const;

    GroupElement inverse(GroupElement const& g) const;

    //! The B-reflection with the given spacelike pole.
    GroupElement reflection_with_pole(Vec3 const& n) const;

    //! g * s, touching only one column.
    GroupElement times_generator(GroupElement const& g, std::size_t s) const;

    bool preserves_form(GroupElement const& g) const;

    Classification classify(GroupElement const& g) const;

    //! A nonzero vector spanning Mov(r) for a reflection r.
    Vec3 pole(GroupElement const& r) const;

    bool is_timelike(Vec3 const& p) const;

    //! Negate if needed so that p lies on the closure of the positive sheet.
    Vec3 to_positive_sheet(Vec3 const& p) const;

    //! Apply the simple reflection s to a vector.
    Vec3 reflect(std::size_t s, Vec3 const& p) const;

    struct Fold {
      Word word;   // u with point = u * folded
      Vec3 point;  // in the closed fundamental chamber
    };

    //! Greedy descent into the fundamental chamber.
    Fold fold(Vec3 const& point) const;

    bool contains(GroupElement const& g) const;

    //! True when p lies in the closed chamber g D.
    bool in_closed_chamber(GroupElement const& g, Vec3 const& p) const;

    //! Reflections whose lines separate two points lying in open chambers,
    //! in gallery order from p to q.
    std::vector<GroupElement> separating_reflections(Vec3 const& p,
                                                     Vec3 const& q) const;

    Ball enumerate_ball(std::size_t radius) const;

    //! Reduced word of an element of W (via folding of its image of the
    //! basepoint).
    Word reduced_word(GroupElement const& g) const;

   private:
    CoxeterSpec                 _spec;
    FieldPtr                    _field;
    Mat3                        _gram, _gram2, _adj2;
    std::array<Vec3, 3>         _roots;
    std::array<GroupElement, 3> _gens;
    Vec3                        _x0;
    std::array<Vec3, 3>         _vertices;
  };

  std::size_t letter_index(char c);
  char        letter_name(std::size_t s);

}  // namespace tricox

#endif  // TRICOX_COXETER_HPP_
