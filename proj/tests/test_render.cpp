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
#include <cmath>
#include <regex>
#include <set>
#include <sstream>
#include <string>

#include "doctest.h"

#include "tricox/render.hpp"

using namespace tricox;

namespace {

  // tanh of the distance from the basepoint to the line with pole n
  double klein_distance(CoxeterSystem const& W, Vec3 const& n) {
    Vec3 const& c  = W.basepoint();
    double      cn = W.form(c, n).to_double();
    double      cc = W.form(c, c).to_double();
    double      nn = W.form(n, n).to_double();
    return std::tanh(std::asinh(std::abs(cn) / std::sqrt(-cc * nn)));
  }

  std::vector<std::vector<double>> numbers_after(std::string const& svg, std::string const& tag) {
    std::vector<std::vector<double>> out;
    std::regex  re(tag + "=\"([^\"]*)\"");
    for (auto it = std::sregex_iterator(svg.begin(), svg.end(), re); it != std::sregex_iterator();
         ++it) {
      std::vector<double> nums;
      std::regex          num(R"(-?[0-9]+\.?[0-9]*)");
      std::string         body = (*it)[1];
      for (auto jt = std::sregex_iterator(body.begin(), body.end(), num);
           jt != std::sregex_iterator(); ++jt) {
        nums.push_back(std::stod(jt->str()));
      }
      out.push_back(nums);
    }
    return out;
  }

}  // namespace

TEST_CASE("Klein frame") {
  CoxeterSystem W(CoxeterSpec::parse("3,3,4"));
  KleinFrame    F(W);
  auto          o = F.klein(W.basepoint());
  CHECK(std::abs(o[0]) < 1e-12);
  CHECK(std::abs(o[1]) < 1e-12);
  auto p = klein_to_poincare({0.6, 0.0});
  CHECK(p[0] == doctest::Approx(1.0 / 3.0));
  auto ball = W.enumerate_ball(8);
  for (auto i : ball.reflections()) {
    Vec3   n = W.pole(ball.entries()[i].element);
    double d = klein_distance(W, n);
    if (std::abs(d - 0.95) > 1e-9) {
      CHECK(F.line_meets_disk(n, Rational(19, 20)) == (d < 0.95));
    }
    auto e = F.ideal_endpoints(n);
    for (auto const& q : e) {
      CHECK(q[0] * q[0] + q[1] * q[1] == doctest::Approx(1.0).epsilon(1e-12));
    }
    // distance of the chord from the centre
    double dx = e[1][0] - e[0][0], dy = e[1][1] - e[0][1];
    double cd = std::abs(e[0][0] * dy - e[0][1] * dx) / std::hypot(dx, dy);
    CHECK(cd == doctest::Approx(d).epsilon(1e-9));
  }
}

TEST_CASE("rendered figures") {
  for (std::string labels : {"3,3,4", "2,3,inf"}) {
    CAPTURE(labels);
    CoxeterSystem W(CoxeterSpec::parse(labels));
    Axis          A(W);
    RenderOptions opts;
    auto          R = render(A, opts);
    CHECK(render(A, opts).svg == R.svg);

    // line count against the reflections of a large ball
    auto        ball = W.enumerate_ball(14);
    std::size_t near = 0;
    for (auto i : ball.reflections()) {
      near += klein_distance(W, W.pole(ball.entries()[i].element)) < 0.95 ? 1 : 0;
    }
    CHECK(R.lines == near);
    MESSAGE(labels << ": " << R.lines << " lines, " << R.chambers << " chambers, "
                   << R.vertices << " axial vertices");

    CHECK(R.svg.find("stroke-dasharray") != std::string::npos);
    CHECK(R.svg.find("marker-end=\"url(#arrow)\"") != std::string::npos);
    std::set<std::string> fills;
    std::regex            fill("<circle[^>]*fill=\"(#[0-9a-f]{6})\"");
    for (auto it = std::sregex_iterator(R.svg.begin(), R.svg.end(), fill);
         it != std::sregex_iterator(); ++it) {
      fills.insert((*it)[1]);
    }
    CHECK(fills.size() == 3);
    for (auto c : R.orbit_counts) {
      CHECK(c > 0);
    }

    // every geodesic starts and ends on the unit circle
    std::size_t paths = 0;
    for (auto const& d : numbers_after(R.svg, "d")) {
      if (d.size() < 4 || d.size() == 6) {
        continue;  // marker
      }
      double x0 = d[0], y0 = d[1], x1 = d[d.size() - 2], y1 = d[d.size() - 1];
      CHECK(std::abs(std::hypot(x0, y0) - 1) < 1e-9);
      CHECK(std::abs(std::hypot(x1, y1) - 1) < 1e-9);
      ++paths;
      if (d.size() == 9) {
        // A r r 0 0 sweep: the minor arc of the circle orthogonal to the
        // boundary, traversed with the sign given by sweep (screen angles)
        double r = d[2], sweep = d[6];
        double mx = (x0 + x1) / 2, my = (y0 + y1) / 2;
        double h = std::hypot(x1 - x0, y1 - y0) / 2;
        double k = std::sqrt(std::max(0.0, r * r - h * h));
        double px = -(y1 - y0) / (2 * h), py = (x1 - x0) / (2 * h);
        double cx = mx + k * px, cy = my + k * py;
        if (std::abs(cx * cx + cy * cy - 1 - r * r) > 1e-6) {
          cx = mx - k * px;
          cy = my - k * py;
        }
        CHECK(std::abs(cx * cx + cy * cy - 1 - r * r) < 1e-6);
        double turn = std::remainder(std::atan2(y1 - cy, x1 - cx) - std::atan2(y0 - cy, x0 - cx),
                                     2 * M_PI);
        CHECK((turn > 0) == (sweep == 1));
      }
    }
    CHECK(paths == R.lines + 1);

    opts.model = DiskModel::klein;
    auto K     = render(A, opts);
    CHECK(K.lines == R.lines);
    CHECK(K.svg.find(" A ") == std::string::npos);
  }
}
