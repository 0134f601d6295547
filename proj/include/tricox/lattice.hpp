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

// The noncrossing partition poset [1,w].

#ifndef TRICOX_LATTICE_HPP_
#define TRICOX_LATTICE_HPP_

#include <optional>
#include <utility>
#include <vector>

#include "tricox/geometry.hpp"

namespace tricox {

  //! A member of [1,w] with its rank and geometric locus.
  struct IntervalElement {
    GroupElement g;
    int          rank = 0;
    Kind         kind = Kind::identity;
    //! rank 1: pole; rank 2: spans the fixed vectors of g; otherwise zero.
    Vec3 locus;

    bool operator==(IntervalElement const& o) const {
      return g == o.g;
    }
    bool operator!=(IntervalElement const& o) const {
      return !(g == o.g);
    }
  };

  //! The reflections below a rank two member u, as the sequence
  //! r_k = u^k r_0 with u = r_{k+1} r_k. Finite (periodic) for rotations.
  class BelowSequence {
   public:
    BelowSequence() = default;
    BelowSequence(GroupElement u, GroupElement uinv, GroupElement r0, std::size_t period);

    GroupElement at(long k) const;

    //! Period for rotations, 0 otherwise.
    std::size_t period() const noexcept {
      return _period;
    }
    GroupElement const& element() const noexcept {
      return _u;
    }

   private:
    GroupElement _u, _uinv, _r0;
    std::size_t  _period = 0;
  };

  class Lattice {
   public:
    explicit Lattice(Axis const& axis) : _A(axis), _W(axis.system()) {}

    Axis const& axis() const noexcept {
      return _A;
    }
    CoxeterSystem const& system() const noexcept {
      return _W;
    }

    //! Membership certificate; assumes g is in W. A rank two g is a member
    //! iff w g^-1 is a reflection and g is a product of two reflections.
    std::optional<IntervalElement> in_interval(GroupElement const& g) const;

    //! Like in_interval but throws invalid_input for non-members.
    IntervalElement member(GroupElement const& g) const;

    //! True for reflections of W.
    bool is_reflection(GroupElement const& g) const;

    IntervalElement identity() const;
    IntervalElement top() const;

    //! Wraps g without a membership check; rank is the moved rank.
    IntervalElement wrap(GroupElement const& g) const;
    //! phi^k(u) = w^-k u w^k with its locus moved along.
    IntervalElement phi(IntervalElement const& u, long k = 1) const;

    bool leq(IntervalElement const& u, IntervalElement const& v) const;

    //! w u^-1
    IntervalElement left_complement(IntervalElement const& u) const;
    //! u^-1 w
    IntervalElement right_complement(IntervalElement const& u) const;

    BelowSequence below(IntervalElement const& u) const;

    //! Reflections r_k for |k| <= window (all of them for rotations).
    std::vector<GroupElement> reflections_below(IntervalElement const& u, long window) const;

    //! The unique increasing factorization into reflections.
    std::vector<GroupElement> increasing_factorization(IntervalElement const& u) const;

    //! The smallest reflection below u (rank at least 1).
    GroupElement min_reflection_below(IntervalElement const& u) const;

    IntervalElement join(IntervalElement const& u, IntervalElement const& v) const;
    IntervalElement meet(IntervalElement const& u, IntervalElement const& v) const;

    //! True when a vertical reflection lies below the translation t.
    bool has_vertical_below(IntervalElement const& t) const;

    //! Index k with r_{k+1} preceding r_k in the sequence (infinite case).
    long descent(BelowSequence const& seq) const;

    //! Parameter along the oriented translation axis of t of the point
    //! where the line with the given pole crosses it.
    Fe axis_parameter(IntervalElement const& t, Vec3 const& pole) const;

   private:
    IntervalElement make(GroupElement const& g, int rank) const;
    bool two_reflection_product(IntervalElement const& u) const;
    //! (r_0, r_1) with r_1 r_0 = u for a translation, if W has them.
    std::optional<std::pair<GroupElement, GroupElement>> perpendicular_pair(
        IntervalElement const& u) const;
    IntervalElement join_reflections(IntervalElement const& r1,
                                     IntervalElement const& r2) const;

    Axis const&          _A;
    CoxeterSystem const& _W;
  };

}  // namespace tricox

#endif  // TRICOX_LATTICE_HPP_
