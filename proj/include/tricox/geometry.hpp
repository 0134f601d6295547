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

// The glide axis of the Coxeter element abc and the axial order on
// reflections.

#ifndef TRICOX_GEOMETRY_HPP_
#define TRICOX_GEOMETRY_HPP_

#include <array>
#include <mutex>
#include <string>
#include <unordered_map>
#include <vector>

#include "tricox/coxeter.hpp"

namespace tricox {

  //! A chamber g D whose interior meets the axis, with its walls in the order
  //! in which the axis touches them.
  struct AxialChamber {
    GroupElement                g;
    std::array<GroupElement, 3> walls;
    //! walls[i] = g * generator(letters[i]) * g^-1
    std::array<std::size_t, 3> letters;

    //! Vertex opposite walls[i].
    Vec3 vertex(CoxeterSystem const& W, std::size_t i) const {
      return g * W.vertex(letters[i]);
    }
  };

  enum class Branch : int { vertical_above = 0, horizontal = 1, vertical_below = 2 };

  std::string to_string(Branch b);

  struct AxialKey {
    Branch      branch;
    Fe          position;
    std::string tiebreak;
  };

  //! -1, 0 or 1.
  int compare(AxialKey const& a, AxialKey const& b);

  class Axis {
   public:
    explicit Axis(CoxeterSystem const& W);

    Axis(Axis const&)            = delete;
    Axis& operator=(Axis const&) = delete;

    CoxeterSystem const& system() const noexcept {
      return _W;
    }

    GroupElement const& w() const noexcept {
      return _w;
    }
    GroupElement const& w_inverse() const noexcept {
      return _winv;
    }

    //! Spans the (-1)-eigenspace of w; spacelike pole of the axis.
    Vec3 const& v() const noexcept {
      return _v;
    }
    //! Base point on the axis.
    Vec3 const& x0() const noexcept {
      return _x0;
    }
    //! Tangent direction at x0, oriented towards w x0.
    Vec3 const& d() const noexcept {
      return _d;
    }
    Vec3 const& wx0() const noexcept {
      return _wx0;
    }

    //! True when the base chamber is the fundamental chamber.
    bool base_is_fundamental() const noexcept {
      return _base_is_fundamental;
    }

    AxialChamber const& base_chamber() const noexcept {
      return _base;
    }

    //! w^-1 u w.
    GroupElement phi(GroupElement const& u) const;
    GroupElement phi_inverse(GroupElement const& u) const;
    GroupElement phi_power(GroupElement const& u, long k) const;
    GroupElement w_power(long k) const;

    //! Orthogonal projection onto the Coxeter plane.
    Vec3 project(Vec3 const& p) const;

    //! Axis parameter of a point of the plane: p ~ x0 + tau d.
    Fe tau(Vec3 const& p) const;

    //! x0 + tau d.
    Vec3 point_at(Fe const& tau) const;

    //! tau of the boundary point: points of the axis have |tau| < bound,
    //! where bound^2 = -B(x0,x0)/B(d,d).
    Fe tau_bound_squared() const;

    //! The point of the plane on the fixed line of r.
    Vec3 plane_point(GroupElement const& r) const;

    bool is_vertical(GroupElement const& r) const;

    //! Closest point of the axis to Fix(r), horizontal r only.
    Vec3 xi(GroupElement const& r) const;

    //! Parameter along the axis where Fix(r) crosses it, vertical r only.
    Fe crossing_tau(GroupElement const& r) const;

    AxialKey key(GroupElement const& r) const;

    //! Total order on reflections: -1 if r1 precedes r2.
    int compare(GroupElement const& r1, GroupElement const& r2) const;

    bool precedes(GroupElement const& r1, GroupElement const& r2) const {
      return compare(r1, r2) < 0;
    }

    //! Reflections whose lines cross the open segment (x0, w x0), in order.
    std::vector<GroupElement> segment_crossings() const;

    //! Chamber containing the axis point t, nudged along the axis when t
    //! lies on a wall (towards increasing tau if \p upward).
    AxialChamber chamber_at(Vec3 const& t, bool upward = true) const;

    //! Axial chambers met by the axis between w^-J x0 and w^J x0.
    std::vector<AxialChamber> chambers_in_window(long J) const;

    //! The three chambers (two on a perpendicular double crossing) met by
    //! the half-open segment [x0, w x0).
    std::vector<AxialChamber> const& period_chambers() const noexcept {
      return _period;
    }

    //! Power k with w^k p having its foot in [x0, w x0).
    long period_index(Vec3 const& p) const;

    //! Index 0..2 of the base chamber vertex in the w-orbit of p, or -1.
    int vertex_orbit(Vec3 const& p) const;

    bool is_axial_vertex(Vec3 const& p) const;

    //! An axial chamber having p as a vertex and the wall index opposite p.
    std::pair<AxialChamber, std::size_t> chamber_with_vertex(Vec3 const& p) const;

    //! Distance surrogate cosh^2 d(Fix(r), axis) for horizontal r.
    Fe distance_surrogate(GroupElement const& r) const;

   private:
    AxialChamber conjugate_chamber(AxialChamber const& c, long k) const;

    CoxeterSystem const&      _W;
    GroupElement              _w, _winv;
    Vec3                      _v, _x0, _d, _wx0;
    Fe                        _form_x0, _form_d;
    bool                      _base_is_fundamental = false;
    AxialChamber              _base;
    std::vector<AxialChamber> _period;
    std::array<Vec3, 3>       _reduced_vertices;

    mutable std::mutex                                     _mutex;
    mutable std::unordered_map<Mat3, AxialKey, Mat3Hash>   _keys;
  };

}  // namespace tricox

#endif  // TRICOX_GEOMETRY_HPP_
