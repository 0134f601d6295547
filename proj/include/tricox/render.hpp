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

// SVG pictures of the reflection arrangement and the Coxeter axis in the
// Klein and Poincare disk models.

#ifndef TRICOX_RENDER_HPP_
#define TRICOX_RENDER_HPP_

#include <array>
#include <string>
#include <vector>

#include "tricox/geometry.hpp"

namespace tricox {

  enum class DiskModel { poincare, klein };

  DiskModel parse_model(std::string const& name);

  //! Klein coordinates centred at the basepoint of the fundamental chamber.
  //! The frame is orthogonal over the field; only the final normalisation
  //! is done in floating point.
  class KleinFrame {
   public:
    explicit KleinFrame(CoxeterSystem const& W);

    std::array<double, 2> klein(Vec3 const& p) const;

    //! Exact: the line with spacelike pole n meets the open disk of Klein
    //! radius rho.
    bool line_meets_disk(Vec3 const& n, Rational const& rho) const;

    //! The two ideal endpoints of the line with pole n, in Klein (= Poincare)
    //! coordinates.
    std::array<std::array<double, 2>, 2> ideal_endpoints(Vec3 const& n) const;

   private:
    CoxeterSystem const& _W;
    Vec3                 _c, _e1, _e2;
    Fe                   _qc, _q1, _q2;
    double               _sc, _s1, _s2;
  };

  struct RenderOptions {
    DiskModel model = DiskModel::poincare;
    //! Lines are drawn when they meet the disk of this Klein radius.
    Rational radius{19, 20};
    long     window = 3;
    int      digits = 12;
  };

  struct Rendering {
    std::string              svg;
    std::size_t              lines    = 0;
    std::size_t              chambers = 0;
    std::size_t              vertices = 0;
    std::array<std::size_t, 3> orbit_counts{};
  };

  //! Lines are found by walking chambers across facets that meet the disk,
  //! then kept by the exact test.
  Rendering render(Axis const& A, RenderOptions const& opts);

  //! Poincare point of a Klein point.
  std::array<double, 2> klein_to_poincare(std::array<double, 2> const& k);

}  // namespace tricox

#endif  // TRICOX_RENDER_HPP_
