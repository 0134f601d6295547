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

#include "tricox/geometry.hpp"

#include <algorithm>

#include "tricox/error.hpp"

namespace tricox {

  std::string to_string(Branch b) {
    switch (b) {
      case Branch::vertical_above:
        return "vertical_above";
      case Branch::horizontal:
        return "horizontal";
      case Branch::vertical_below:
        return "vertical_below";
    }
    return "unknown";
  }

  int compare(AxialKey const& a, AxialKey const& b) {
    if (a.branch != b.branch) {
      return static_cast<int>(a.branch) < static_cast<int>(b.branch) ? -1 : 1;
    }
    int s = (a.position - b.position).sign();
    if (s != 0) {
      return s;
    }
    if (a.tiebreak == b.tiebreak) {
      return 0;
    }
    return a.tiebreak < b.tiebreak ? -1 : 1;
  }

  namespace {

    bool strictly_inside_fundamental(CoxeterSystem const& W, Vec3 const& p) {
      for (std::size_t s = 0; s < 3; ++s) {
        if (W.form(p, W.root(s)).sign() <= 0) {
          return false;
        }
      }
      return true;
    }

    // True when p lies in an open chamber.
    bool generic(CoxeterSystem const& W, Vec3 const& p) {
      return strictly_inside_fundamental(W, W.fold(p).point);
    }

  }  // namespace

  Axis::Axis(CoxeterSystem const& W) : _W(W) {
    FieldSpec const* f = W.field();
    _w                 = W.word_to_element("abc");
    _winv              = W.inverse(_w);
    Classification cl  = W.classify(_w);
    if (cl.kind != Kind::glide) {
      internal_error("the Coxeter element is not a glide reflection");
    }
    _v = cl.locus;
    if (W.form(_v, _v).sign() <= 0) {
      internal_error("the (-1)-eigenvector of w is not spacelike");
    }
    Fe vv = W.form(_v, _v);
    // Prefer a base point inside the fundamental chamber when the axis
    // crosses it: midpoints of the axis points on two of its walls.
    std::vector<Vec3> on_walls;
    for (std::size_t s = 0; s < 3; ++s) {
      Vec3 z = W.bcross(_v, W.root(s));
      if (W.is_timelike(z)) {
        on_walls.push_back(W.to_positive_sheet(z));
      }
    }
    bool found = false;
    for (std::size_t i = 0; i < on_walls.size() && !found; ++i) {
      for (std::size_t j = i + 1; j < on_walls.size() && !found; ++j) {
        Vec3 mid = on_walls[i] + on_walls[j];
        if (strictly_inside_fundamental(W, mid)) {
          _x0   = mid;
          found = true;
        }
      }
    }
    if (!found) {
      Vec3 const& c = W.basepoint();
      _x0           = c - _v * (W.form(c, _v) / vv);
    }
    _base_is_fundamental = found;
    auto orient          = [&]() {
      _d   = W.bcross(_v, _x0);
      _wx0 = _w * _x0;
      if (W.form(_wx0, _d).sign() < 0) {
        _d = -_d;
      }
      _form_x0 = W.form(_x0, _x0);
      _form_d  = W.form(_d, _d);
    };
    orient();
    Fe eps(f, Rational(1, 64));
    while (!generic(W, _x0)) {
      Fe bound = tau_bound_squared();
      while (!((eps * eps - bound).sign() < 0)) {
        eps *= Fe(f, Rational(1, 2));
      }
      _x0 = point_at(eps);
      orient();
      eps *= Fe(f, Rational(1, 2));
    }

    _base = chamber_at(_x0);
    if (found && !_base.g.is_identity()) {
      internal_error("base chamber mismatch");
    }

    // chambers met by [x0, w x0)
    auto crossings = segment_crossings();
    std::vector<Fe> taus;
    for (auto const& r : crossings) {
      taus.push_back(crossing_tau(r));
    }
    _period.push_back(_base);
    for (std::size_t i = 0; i + 1 < taus.size(); ++i) {
      if ((taus[i] - taus[i + 1]).is_zero()) {
        continue;
      }
      Fe mid = (taus[i] + taus[i + 1]) * Fe(f, Rational(1, 2));
      _period.push_back(chamber_at(point_at(mid)));
    }
    for (std::size_t k = 0; k < 3; ++k) {
      Vec3 p = _base.vertex(_W, k);
      long j = period_index(p);
      _reduced_vertices[k] = w_power(j) * p;
    }
  }

  GroupElement Axis::phi(GroupElement const& u) const {
    return _winv * u * _w;
  }

  GroupElement Axis::phi_inverse(GroupElement const& u) const {
    return _w * u * _winv;
  }

  GroupElement Axis::w_power(long k) const {
    GroupElement r = _W.identity();
    GroupElement b = k >= 0 ? _w : _winv;
    for (long i = 0; i < std::abs(k); ++i) {
      r = r * b;
    }
    return r;
  }

  GroupElement Axis::phi_power(GroupElement const& u, long k) const {
    GroupElement r = u;
    for (long i = 0; i < std::abs(k); ++i) {
      r = k > 0 ? phi(r) : phi_inverse(r);
    }
    return r;
  }

  Vec3 Axis::project(Vec3 const& p) const {
    return p - _v * (_W.form(p, _v) / _W.form(_v, _v));
  }

  Fe Axis::tau(Vec3 const& p) const {
    Fe alpha = _W.form(p, _x0) / _form_x0;
    Fe beta  = _W.form(p, _d) / _form_d;
    return beta / alpha;
  }

  Vec3 Axis::point_at(Fe const& t) const {
    return _x0 + _d * t;
  }

  Fe Axis::tau_bound_squared() const {
    return -(_form_x0 / _form_d);
  }

  Vec3 Axis::plane_point(GroupElement const& r) const {
    return _W.bcross(_W.pole(r), _v);
  }

  bool Axis::is_vertical(GroupElement const& r) const {
    if (r.moved_rank() != 1) {
      invalid_input("vertical test requires a reflection");
    }
    Vec3 q = plane_point(r);
    int  s = _W.form(q, q).sign();
    if (s == 0) {
      internal_error("reflection line meets the axis at infinity");
    }
    return s < 0;
  }

  Vec3 Axis::xi(GroupElement const& r) const {
    if (is_vertical(r)) {
      invalid_input("xi is defined for horizontal reflections only");
    }
    return _W.to_positive_sheet(_W.bcross(_v, plane_point(r)));
  }

  Fe Axis::crossing_tau(GroupElement const& r) const {
    if (!is_vertical(r)) {
      invalid_input("crossing parameter requires a vertical reflection");
    }
    return tau(plane_point(r));
  }

  Fe Axis::distance_surrogate(GroupElement const& r) const {
    Vec3 n = _W.pole(r);
    Fe   b = _W.form(n, _v);
    return b * b / (_W.form(n, n) * _W.form(_v, _v));
  }

  AxialKey Axis::key(GroupElement const& r) const {
    {
      std::lock_guard<std::mutex> lock(_mutex);
      auto                        it = _keys.find(r.matrix());
      if (it != _keys.end()) {
        return it->second;
      }
    }
    if (r.moved_rank() != 1) {
      invalid_input("axial key requires a reflection");
    }
    Vec3     q = plane_point(r);
    int      s = _W.form(q, q).sign();
    AxialKey k;
    k.tiebreak = r.matrix().serialize();
    if (s == 0) {
      internal_error("reflection line meets the axis at infinity");
    }
    Fe alpha = _W.form(q, _x0) / _form_x0;
    Fe beta  = _W.form(q, _d) / _form_d;
    if (s < 0) {
      k.position = beta / alpha;
      int t      = k.position.sign();
      if (t == 0) {
        internal_error("base point lies on a reflection line");
      }
      k.branch = t > 0 ? Branch::vertical_above : Branch::vertical_below;
    } else {
      k.branch   = Branch::horizontal;
      k.position = -(alpha / beta);
    }
    std::lock_guard<std::mutex> lock(_mutex);
    _keys.emplace(r.matrix(), k);
    return k;
  }

  int Axis::compare(GroupElement const& r1, GroupElement const& r2) const {
    return tricox::compare(key(r1), key(r2));
  }

  namespace {

    // Sort reflections crossing the segment from p to q by crossing
    // parameter.
    std::vector<GroupElement> sort_crossings(CoxeterSystem const& W,
                                             std::vector<GroupElement> rs,
                                             Vec3 const& p, Vec3 const& q) {
      struct Item {
        Fe           mu;
        std::string  tie;
        GroupElement r;
      };
      std::vector<Item> items;
      for (auto& r : rs) {
        Vec3 n  = W.pole(r);
        Fe   f0 = W.form(p, n), f1 = W.form(q, n);
        items.push_back({f0 / (f0 - f1), r.matrix().serialize(), r});
      }
      std::sort(items.begin(), items.end(), [](Item const& a, Item const& b) {
        int s = (a.mu - b.mu).sign();
        if (s != 0) {
          return s < 0;
        }
        return a.tie < b.tie;
      });
      std::vector<GroupElement> out;
      for (auto& it : items) {
        out.push_back(it.r);
      }
      return out;
    }

  }  // namespace

  std::vector<GroupElement> Axis::segment_crossings() const {
    auto rs = _W.separating_reflections(_x0, _wx0);
    if (rs.size() != 3) {
      falsified("segment (x0, w x0) crosses " + std::to_string(rs.size())
                + " reflection lines, expected 3");
    }
    return sort_crossings(_W, rs, _x0, _wx0);
  }

  AxialChamber Axis::chamber_at(Vec3 const& t0, bool upward) const {
    FieldSpec const* f = _W.field();
    Vec3             t = t0;
    if (!_W.is_timelike(t)) {
      invalid_input("axial chamber requested at a non-axis point");
    }
    t = _W.to_positive_sheet(t);
    if (!generic(_W, t)) {
      Fe base = tau(t);
      Fe eps(f, Rational(1, 64));
      Fe bound = tau_bound_squared();
      while (true) {
        Fe cand = upward ? base + eps : base - eps;
        if ((cand * cand - bound).sign() < 0) {
          Vec3 p = point_at(cand);
          if (generic(_W, p)) {
            // no wall between t and p: both in the same closed chamber
            auto fo = _W.fold(p);
            auto g  = _W.word_to_element(fo.word);
            if (_W.in_closed_chamber(g, t)) {
              t = p;
              break;
            }
          }
        }
        eps *= Fe(f, Rational(1, 2));
      }
    }
    GroupElement g  = _W.word_to_element(_W.fold(t).word);
    Vec3         wt = _w * t;
    auto         rs = sort_crossings(_W, _W.separating_reflections(t, wt), t, wt);
    if (rs.size() != 3) {
      falsified("axial chamber with " + std::to_string(rs.size())
                + " crossings per period, expected 3");
    }
    AxialChamber c;
    c.g                  = g;
    GroupElement const& s1 = rs[0];
    GroupElement        s2 = rs[0] * rs[1] * rs[0];
    GroupElement        s3 = s2 * s1 * rs[2] * s1 * s2;
    c.walls              = {s1, s2, s3};
    GroupElement ginv    = _W.inverse(g);
    for (std::size_t i = 0; i < 3; ++i) {
      bool ok = false;
      for (std::size_t s = 0; s < 3; ++s) {
        if (g * _W.generator(s) * ginv == c.walls[i]) {
          c.letters[i] = s;
          ok           = true;
        }
      }
      if (!ok) {
        falsified("pedal order produced a non-wall reflection");
      }
    }
    if (s1 * s2 * s3 != _w) {
      falsified("axial factorization does not reproduce w");
    }
    return c;
  }

  AxialChamber Axis::conjugate_chamber(AxialChamber const& c, long k) const {
    GroupElement wk  = w_power(k);
    GroupElement wki = w_power(-k);
    AxialChamber out;
    out.g       = wk * c.g;
    out.letters = c.letters;
    for (std::size_t i = 0; i < 3; ++i) {
      out.walls[i] = wk * c.walls[i] * wki;
    }
    return out;
  }

  std::vector<AxialChamber> Axis::chambers_in_window(long J) const {
    std::vector<AxialChamber> out;
    for (long j = -J; j < J; ++j) {
      for (auto const& c : _period) {
        out.push_back(conjugate_chamber(c, j));
      }
    }
    out.push_back(conjugate_chamber(_base, J));
    return out;
  }

  long Axis::period_index(Vec3 const& p) const {
    Vec3 foot = project(p);
    if (!_W.is_timelike(foot)) {
      invalid_input("point has no foot on the axis");
    }
    Fe   top = tau(_wx0);
    long k   = 0;
    for (std::size_t it = 0; it < 100000; ++it) {
      Fe t = tau(foot);
      if (t.sign() < 0) {
        foot = _w * foot;
        ++k;
      } else if ((t - top).sign() >= 0) {
        foot = _winv * foot;
        --k;
      } else {
        return k;
      }
    }
    cap_exceeded("point too far along the axis");
  }

  int Axis::vertex_orbit(Vec3 const& p) const {
    if (_W.form(p, p).sign() > 0) {
      invalid_input("axial vertex test requires a finite or ideal point");
    }
    if (p.is_zero()) {
      invalid_input("zero vector is not a point");
    }
    Vec3 foot = project(p);
    if (!_W.is_timelike(foot)) {
      return -1;
    }
    long k = period_index(p);
    Vec3 q = w_power(k) * p;
    for (std::size_t i = 0; i < 3; ++i) {
      if (parallel(q, _reduced_vertices[i])) {
        return static_cast<int>(i);
      }
    }
    return -1;
  }

  bool Axis::is_axial_vertex(Vec3 const& p) const {
    return vertex_orbit(p) >= 0;
  }

  std::pair<AxialChamber, std::size_t>
  Axis::chamber_with_vertex(Vec3 const& p) const {
    int i = vertex_orbit(p);
    if (i < 0) {
      invalid_input("point is not an axial vertex");
    }
    long kp = period_index(p);
    long ki = period_index(_base.vertex(_W, static_cast<std::size_t>(i)));
    AxialChamber c = conjugate_chamber(_base, ki - kp);
    return {c, static_cast<std::size_t>(i)};
  }

}  // namespace tricox
