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

#include "tricox/render.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <deque>
#include <sstream>
#include <unordered_set>

#include "tricox/error.hpp"

namespace tricox {

  namespace {

    using P2 = std::array<double, 2>;

    constexpr std::size_t max_chambers = 200000;

    char const* const orbit_colour[3] = {"#d62728", "#1f77b4", "#2ca02c"};

    double segment_distance(P2 const& p, P2 const& q) {
      double dx = q[0] - p[0], dy = q[1] - p[1];
      double len2 = dx * dx + dy * dy;
      double t    = len2 == 0 ? 0 : -(p[0] * dx + p[1] * dy) / len2;
      t           = std::clamp(t, 0.0, 1.0);
      return std::hypot(p[0] + t * dx, p[1] + t * dy);
    }

    class Writer {
     public:
      explicit Writer(int digits) : _digits(digits) {}

      std::string num(double v) const {
        char buf[64];
        std::snprintf(buf, sizeof buf, "%.*f", _digits, v);
        std::string s(buf);
        if (s.find_first_not_of("-0.") == std::string::npos) {
          s.erase(0, s[0] == '-' ? 1 : 0);
        }
        return s;
      }

      // screen y points down
      std::string xy(P2 const& p) const {
        return num(p[0]) + " " + num(-p[1]);
      }

     private:
      int _digits;
    };

    std::string geodesic(Writer const& out, DiskModel model, P2 const& u1, P2 const& u2) {
      double cr = u1[0] * u2[1] - u1[1] * u2[0];
      if (model == DiskModel::klein || std::abs(cr) < 1e-12) {
        return "M " + out.xy(u1) + " L " + out.xy(u2);
      }
      double dt = u1[0] * u2[0] + u1[1] * u2[1];
      P2     c{(u1[0] + u2[0]) / (1 + dt), (u1[1] + u2[1]) / (1 + dt)};
      double r = std::sqrt(c[0] * c[0] + c[1] * c[1] - 1);
      double turn = (u1[0] - c[0]) * (u2[1] - c[1]) - (u1[1] - c[1]) * (u2[0] - c[0]);
      // y is flipped on screen
      int sweep = turn > 0 ? 0 : 1;
      return "M " + out.xy(u1) + " A " + out.num(r) + " " + out.num(r) + " 0 0 "
             + std::to_string(sweep) + " " + out.xy(u2);
    }

  }  // namespace

  DiskModel parse_model(std::string const& name) {
    if (name == "poincare") {
      return DiskModel::poincare;
    }
    if (name == "klein") {
      return DiskModel::klein;
    }
    invalid_input("unknown model '" + name + "', expected poincare or klein");
  }

  P2 klein_to_poincare(P2 const& k) {
    double s = 1 + std::sqrt(std::max(0.0, 1 - k[0] * k[0] - k[1] * k[1]));
    return {k[0] / s, k[1] / s};
  }

  KleinFrame::KleinFrame(CoxeterSystem const& W)
      : _W(W), _c(W.basepoint()) {
    _e1 = W.bcross(_c, W.root(0));
    _e2 = W.bcross(_c, _e1);
    _qc = W.form(_c, _c);
    _q1 = W.form(_e1, _e1);
    _q2 = W.form(_e2, _e2);
    if (_qc.sign() >= 0 || _q1.sign() <= 0 || _q2.sign() <= 0) {
      internal_error("Klein frame is not of signature (2,1)");
    }
    _sc = std::sqrt(-_qc.to_double());
    _s1 = std::sqrt(_q1.to_double());
    _s2 = std::sqrt(_q2.to_double());
  }

  P2 KleinFrame::klein(Vec3 const& p) const {
    double h = -_W.form(p, _c).to_double() / _sc;
    return {_W.form(p, _e1).to_double() / _s1 / h, _W.form(p, _e2).to_double() / _s2 / h};
  }

  bool KleinFrame::line_meets_disk(Vec3 const& n, Rational const& rho) const {
    FieldSpec const* f  = _qc.field();
    Fe               a  = _W.form(n, _c);
    Fe               b1 = _W.form(n, _e1);
    Fe               b2 = _W.form(n, _e2);
    Fe               lhs = a * a * _q1 * _q2;
    Fe               rhs = Fe(f, rho * rho) * (-_qc) * (b1 * b1 * _q2 + b2 * b2 * _q1);
    return lhs < rhs;
  }

  std::array<P2, 2> KleinFrame::ideal_endpoints(Vec3 const& n) const {
    double a  = -_W.form(n, _c).to_double() / _sc;
    double b1 = _W.form(n, _e1).to_double() / _s1;
    double b2 = _W.form(n, _e2).to_double() / _s2;
    double bb = b1 * b1 + b2 * b2;
    double h  = std::sqrt(std::max(0.0, 1 - a * a / bb));
    double bn = std::sqrt(bb);
    P2     foot{a * b1 / bb, a * b2 / bb};
    P2     t{-b2 / bn, b1 / bn};
    return {P2{foot[0] - h * t[0], foot[1] - h * t[1]},
            P2{foot[0] + h * t[0], foot[1] + h * t[1]}};
  }

  Rendering render(Axis const& A, RenderOptions const& opts) {
    CoxeterSystem const& W = A.system();
    KleinFrame           F(W);
    Rendering            R;
    double               rho = opts.radius.get_d();
    if (!(rho > 0 && rho < 1)) {
      invalid_input("disk radius must lie in (0,1)");
    }

    // chambers meeting the disk, connected through facets meeting it
    std::vector<Vec3>                                   poles;
    std::unordered_set<Mat3, Mat3Hash>                  lines;
    std::unordered_set<Mat3, Mat3Hash>                  seen{W.identity().matrix()};
    std::deque<GroupElement>                            todo{W.identity()};
    while (!todo.empty()) {
      GroupElement g = todo.front();
      todo.pop_front();
      ++R.chambers;
      if (R.chambers > max_chambers) {
        cap_exceeded("render: too many chambers meet the disk");
      }
      std::array<P2, 3> v;
      for (std::size_t s = 0; s < 3; ++s) {
        v[s] = F.klein(g * W.vertex(s));
      }
      for (std::size_t s = 0; s < 3; ++s) {
        if (segment_distance(v[(s + 1) % 3], v[(s + 2) % 3]) > rho + 1e-9) {
          continue;
        }
        GroupElement r = g * W.generator(s) * W.inverse(g);
        Vec3         n = g * W.root(s);
        if (F.line_meets_disk(n, opts.radius) && lines.insert(r.matrix()).second) {
          poles.push_back(n);
        }
        GroupElement h = W.times_generator(g, s);
        if (seen.insert(h.matrix()).second) {
          todo.push_back(h);
        }
      }
    }
    R.lines = poles.size();

    struct Dot {
      P2   k;
      int  orbit;
    };
    std::vector<Dot>                     dots;
    std::unordered_set<Vec3, Vec3Hash>   vseen;
    for (auto const& ch : A.chambers_in_window(opts.window)) {
      for (std::size_t i = 0; i < 3; ++i) {
        Vec3 p = ch.vertex(W, i);
        if (!vseen.insert(projective_normal(p)).second) {
          continue;
        }
        int o = A.vertex_orbit(p);
        if (o < 0) {
          internal_error("axial vertex outside the three orbits");
        }
        dots.push_back({F.klein(p), o});
        ++R.orbit_counts[static_cast<std::size_t>(o)];
      }
    }
    R.vertices = dots.size();

    Writer out(opts.digits);
    auto   shown = [&](P2 const& k) {
      return opts.model == DiskModel::klein ? k : klein_to_poincare(k);
    };
    std::ostringstream s;
    s << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"800\" "
         "height=\"800\" viewBox=\"-1.05 -1.05 2.1 2.1\">\n"
      << "<desc>labels=" << W.spec().to_string()
      << " model=" << (opts.model == DiskModel::klein ? "klein" : "poincare")
      << " radius=" << opts.radius.get_str() << " lines=" << R.lines
      << " chambers=" << R.chambers << " vertices=" << R.vertices << " orbits="
      << R.orbit_counts[0] << "," << R.orbit_counts[1] << "," << R.orbit_counts[2]
      << "</desc>\n"
      << "<defs><marker id=\"arrow\" viewBox=\"0 0 10 10\" refX=\"9\" refY=\"5\" "
         "markerWidth=\"6\" markerHeight=\"6\" orient=\"auto\">"
         "<path d=\"M 0 0 L 10 5 L 0 10 z\" fill=\"#ff7f0e\"/></marker></defs>\n"
      << "<circle cx=\"0\" cy=\"0\" r=\"1\" fill=\"none\" stroke=\"#808080\" "
         "stroke-width=\"0.006\"/>\n";
    s << "<g id=\"lines\" fill=\"none\" stroke=\"#000000\" stroke-width=\"0.003\">\n";
    for (auto const& n : poles) {
      auto e = F.ideal_endpoints(n);
      s << "<path d=\"" << geodesic(out, opts.model, e[0], e[1]) << "\"/>\n";
    }
    s << "</g>\n";

    auto e  = F.ideal_endpoints(A.v());
    P2   k0 = F.klein(A.x0()), k1 = F.klein(A.wx0());
    P2   dir{k1[0] - k0[0], k1[1] - k0[1]};
    if ((e[1][0] - e[0][0]) * dir[0] + (e[1][1] - e[0][1]) * dir[1] < 0) {
      std::swap(e[0], e[1]);
    }
    s << "<path id=\"axis\" d=\"" << geodesic(out, opts.model, e[0], e[1])
      << "\" fill=\"none\" stroke=\"#ff7f0e\" stroke-width=\"0.008\" "
         "stroke-dasharray=\"0.03 0.02\" marker-end=\"url(#arrow)\"/>\n";

    s << "<g id=\"vertices\" stroke=\"#000000\" stroke-width=\"0.002\">\n";
    for (auto const& d : dots) {
      P2     p  = shown(d.k);
      double r2 = p[0] * p[0] + p[1] * p[1];
      double r  = 0.007 + 0.016 * std::max(0.0, 1 - r2);
      s << "<circle cx=\"" << out.num(p[0]) << "\" cy=\"" << out.num(-p[1]) << "\" r=\""
        << out.num(r) << "\" fill=\"" << orbit_colour[d.orbit] << "\"/>\n";
    }
    s << "</g>\n</svg>\n";
    R.svg = s.str();
    return R;
  }

}  // namespace tricox
