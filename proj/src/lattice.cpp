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

#include "tricox/lattice.hpp"

#include <algorithm>

#include "tricox/error.hpp"

namespace tricox {

  namespace {

    GroupElement power(GroupElement const& g, GroupElement const& gi,
                       GroupElement const& one, long k) {
      GroupElement base = k >= 0 ? g : gi;
      unsigned long n   = k >= 0 ? static_cast<unsigned long>(k)
                                 : static_cast<unsigned long>(-(k + 1)) + 1;
      GroupElement r    = one;
      while (n != 0) {
        if (n & 1) {
          r = r * base;
        }
        n >>= 1;
        if (n != 0) {
          base = base * base;
        }
      }
      return r;
    }

    bool open_chamber(CoxeterSystem const& W, Vec3 const& p) {
      auto fo = W.fold(p);
      for (std::size_t s = 0; s < 3; ++s) {
        if (W.form(fo.point, W.root(s)).sign() <= 0) {
          return false;
        }
      }
      return true;
    }

    // Oriented frame of the axis of a translation t with fixed vector k:
    // X is where the axis meets the Coxeter axis.
    struct Frame {
      Vec3 X, dir;
      Fe   fX, fd;
    };

    Frame translation_frame(Axis const& A, IntervalElement const& t) {
      CoxeterSystem const& W = A.system();
      Vec3                 X = W.bcross(A.v(), t.locus);
      if (!W.is_timelike(X)) {
        // axis misses the Coxeter axis: use the foot of the basepoint
        Vec3 c = W.basepoint();
        X      = c - t.locus * (W.form(c, t.locus) / W.form(t.locus, t.locus));
      }
      X        = W.to_positive_sheet(X);
      Vec3 dir = W.bcross(t.locus, X);
      if (W.form(t.g * X, dir).sign() < 0) {
        dir = -dir;
      }
      return {X, dir, W.form(X, X), W.form(dir, dir)};
    }

    Fe frame_tau(CoxeterSystem const& W, Frame const& F, Vec3 const& q) {
      return (W.form(q, F.dir) / F.fd) / (W.form(q, F.X) / F.fX);
    }

  }  // namespace

  BelowSequence::BelowSequence(GroupElement u, GroupElement uinv, GroupElement r0,
                               std::size_t period)
      : _u(std::move(u)), _uinv(std::move(uinv)), _r0(std::move(r0)), _period(period) {}

  GroupElement BelowSequence::at(long k) const {
    if (_period != 0) {
      long p = static_cast<long>(_period);
      k      = ((k % p) + p) % p;
    }
    GroupElement one(Mat3::identity(_u.matrix().field()));
    return power(_u, _uinv, one, k) * _r0;
  }

  IntervalElement Lattice::make(GroupElement const& g, int rank) const {
    IntervalElement e;
    e.g               = g;
    e.rank            = rank;
    Classification cl = _W.classify(g);
    e.kind            = cl.kind;
    e.locus           = rank == 1 || rank == 2 ? cl.locus : Vec3(_W.field());
    return e;
  }

  IntervalElement Lattice::identity() const {
    return make(_W.identity(), 0);
  }

  IntervalElement Lattice::top() const {
    return make(_A.w(), 3);
  }

  IntervalElement Lattice::wrap(GroupElement const& g) const {
    return make(g, g.moved_rank());
  }

  IntervalElement Lattice::phi(IntervalElement const& u, long k) const {
    if (k == 0 || u.rank == 0 || u.rank == 3) {
      return u;
    }
    IntervalElement e = u;
    e.g               = _A.phi_power(u.g, k);
    e.locus           = _A.w_power(-k) * u.locus;
    return e;
  }

  bool Lattice::is_reflection(GroupElement const& g) const {
    return g.moved_rank() == 1 && _W.contains(g);
  }

  // Rotations and parabolics of W are products of two reflections of the
  // stabilizer of their fixed point; translations need perpendicular walls.
  bool Lattice::two_reflection_product(IntervalElement const& u) const {
    if (u.kind != Kind::translation) {
      return u.kind == Kind::rotation || u.kind == Kind::parabolic;
    }
    return perpendicular_pair(u).has_value();
  }

  std::optional<IntervalElement> Lattice::in_interval(GroupElement const& g) const {
    if (!_W.preserves_form(g)) {
      invalid_input("matrix does not preserve the form");
    }
    switch (g.moved_rank()) {
      case 0:
        return make(g, 0);
      case 1:
        if (_W.contains(g) && two_reflection_product(make(g * _A.w(), 2))) {
          return make(g, 1);
        }
        return std::nullopt;
      case 2: {
        GroupElement c = _A.w() * _W.inverse(g);
        if (!is_reflection(c)) {
          return std::nullopt;
        }
        auto e = make(g, 2);
        if (!two_reflection_product(e)) {
          return std::nullopt;
        }
        return e;
      }
      default:
        if (g == _A.w()) {
          return make(g, 3);
        }
        return std::nullopt;
    }
  }

  IntervalElement Lattice::member(GroupElement const& g) const {
    auto e = in_interval(g);
    if (!e) {
      invalid_input("element is not in [1,w]");
    }
    return *e;
  }

  bool Lattice::leq(IntervalElement const& u, IntervalElement const& v) const {
    if (u.rank == 0 || v.rank == 3) {
      return true;
    }
    if (u.rank > v.rank) {
      return false;
    }
    if (u.rank == v.rank) {
      return u.g == v.g;
    }
    // Mov(u) is the orthogonal complement of the fixed vectors
    return _W.form(u.locus, v.locus).is_zero();
  }

  IntervalElement Lattice::left_complement(IntervalElement const& u) const {
    return make(_A.w() * _W.inverse(u.g), 3 - u.rank);
  }

  IntervalElement Lattice::right_complement(IntervalElement const& u) const {
    return make(_W.inverse(u.g) * _A.w(), 3 - u.rank);
  }

  std::optional<std::pair<GroupElement, GroupElement>> Lattice::perpendicular_pair(
      IntervalElement const& u) const {
    Frame F = translation_frame(_A, u);
    Vec3  y = F.X;
    if (!open_chamber(_W, y)) {
      // the axis itself may be a wall, so also step off it along the pole
      FieldSpec const* f = _W.field();
      Fe               eps(f, Rational(1, 64));
      bool             found = false;
      for (int it = 0; it < 64 && !found; ++it, eps *= Fe(f, Rational(1, 2))) {
        for (Vec3 cand : {F.X + F.dir * eps, F.X + F.dir * eps + u.locus * (eps * eps)}) {
          if (_W.is_timelike(cand) && open_chamber(_W, cand)) {
            y     = cand;
            found = true;
            break;
          }
        }
      }
      if (!found) {
        internal_error("no generic point near a translation axis");
      }
    }
    std::vector<std::pair<Fe, GroupElement>> perp;
    for (auto& r : _W.separating_reflections(y, u.g * y)) {
      Vec3 n = _W.pole(r);
      if (_W.form(n, u.locus).is_zero()) {
        perp.emplace_back(frame_tau(_W, F, _W.bcross(u.locus, n)), r);
      }
    }
    if (perp.empty()) {
      return std::nullopt;
    }
    if (perp.size() != 2) {
      falsified("a period of a translation axis crosses "
                + std::to_string(perp.size()) + " perpendicular reflection lines");
    }
    if ((perp[1].first - perp[0].first).sign() < 0) {
      std::swap(perp[0], perp[1]);
    }
    if (perp[1].second * perp[0].second != u.g) {
      falsified("consecutive reflections below a translation do not multiply to it");
    }
    return std::make_pair(perp[0].second, perp[1].second);
  }

  BelowSequence Lattice::below(IntervalElement const& u) const {
    if (u.rank != 2) {
      invalid_input("reflections below are listed for rank two elements");
    }
    GroupElement uinv = _W.inverse(u.g);
    if (u.kind == Kind::rotation || u.kind == Kind::parabolic) {
      if (!_A.is_axial_vertex(u.locus)) {
        falsified("rotation of [1,w] around a non-axial vertex");
      }
      auto [c, i] = _A.chamber_with_vertex(u.locus);
      std::size_t j = i == 0 ? 1 : 0, k = i == 2 ? 1 : 2;
      if (c.walls[j] * c.walls[k] != u.g) {
        falsified("rotation is not the product of the axial chamber walls at its vertex");
      }
      std::size_t period = 0;
      if (u.kind == Kind::rotation) {
        GroupElement p = u.g;
        for (period = 1; !p.is_identity(); ++period) {
          if (period > 100000) {
            cap_exceeded("rotation order too large");
          }
          p = p * u.g;
        }
      }
      return BelowSequence(u.g, uinv, c.walls[k], period);
    }

    auto pair = perpendicular_pair(u);
    if (!pair) {
      falsified("translation of [1,w] with no perpendicular reflection");
    }
    return BelowSequence(u.g, uinv, pair->first, 0);
  }

  std::vector<GroupElement> Lattice::reflections_below(IntervalElement const& u,
                                                       long window) const {
    if (u.rank == 1) {
      return {u.g};
    }
    BelowSequence             seq = below(u);
    std::vector<GroupElement> out;
    if (seq.period() != 0) {
      for (std::size_t k = 0; k < seq.period(); ++k) {
        out.push_back(seq.at(static_cast<long>(k)));
      }
      return out;
    }
    for (long k = -window; k <= window; ++k) {
      out.push_back(seq.at(k));
    }
    return out;
  }

  long Lattice::descent(BelowSequence const& seq) const {
    GroupElement r0 = seq.at(0);
    if (_A.precedes(seq.at(1), r0)) {
      return 0;
    }
    if (_A.precedes(r0, seq.at(-1))) {
      return -1;
    }
    long const cap = 1L << 14;
    // exactly one side eventually wraps past r0
    for (long lo = 1, hi = 2; hi <= cap; lo = hi, hi *= 2) {
      if (_A.precedes(seq.at(hi), r0)) {
        while (hi - lo > 1) {
          long mid = lo + (hi - lo) / 2;
          (_A.precedes(seq.at(mid), r0) ? hi : lo) = mid;
        }
        return lo;
      }
      if (_A.precedes(r0, seq.at(-hi))) {
        while (hi - lo > 1) {
          long mid = lo + (hi - lo) / 2;
          (_A.precedes(r0, seq.at(-mid)) ? hi : lo) = mid;
        }
        return -hi;
      }
    }
    cap_exceeded("no descent found among the reflections below a rank two element");
  }

  GroupElement Lattice::min_reflection_below(IntervalElement const& u) const {
    if (u.rank == 1) {
      return u.g;
    }
    if (u.rank == 3) {
      return increasing_factorization(u).front();
    }
    if (u.rank != 2) {
      invalid_input("no reflection lies below the identity");
    }
    BelowSequence seq = below(u);
    if (seq.period() != 0) {
      GroupElement best = seq.at(0);
      for (std::size_t k = 1; k < seq.period(); ++k) {
        GroupElement r = seq.at(static_cast<long>(k));
        if (_A.precedes(r, best)) {
          best = r;
        }
      }
      return best;
    }
    return seq.at(descent(seq) + 1);
  }

  std::vector<GroupElement>
  Lattice::increasing_factorization(IntervalElement const& u) const {
    switch (u.rank) {
      case 0:
        return {};
      case 1:
        return {u.g};
      case 2: {
        GroupElement rho = min_reflection_below(u);
        GroupElement sec = rho * u.g;
        if (!_A.precedes(rho, sec)) {
          falsified("factorization through the smallest reflection is not increasing");
        }
        return {rho, sec};
      }
      default:
        break;
    }
    auto const& c  = _A.base_chamber();
    auto        s  = c.walls;
    auto        up = [&](std::array<GroupElement, 3> const& t) {
      return _A.precedes(t[0], t[1]) && _A.precedes(t[1], t[2]);
    };
    if (up(s)) {
      return {s[0], s[1], s[2]};
    }
    if (s[0] * s[1] == s[1] * s[0]) {
      std::array<GroupElement, 3> t{s[1], s[0], s[2]};
      if (up(t)) {
        return {t[0], t[1], t[2]};
      }
    }
    if (s[1] * s[2] == s[2] * s[1]) {
      std::array<GroupElement, 3> t{s[0], s[2], s[1]};
      if (up(t)) {
        return {t[0], t[1], t[2]};
      }
    }
    falsified("the walls of the base chamber give no increasing factorization of w");
  }

  IntervalElement Lattice::join(IntervalElement const& u, IntervalElement const& v) const {
    if (leq(u, v)) {
      return v;
    }
    if (leq(v, u)) {
      return u;
    }
    if (u.rank == 1 && v.rank == 1) {
      return join_reflections(u, v);
    }
    return top();
  }

  IntervalElement Lattice::join_reflections(IntervalElement const& r1,
                                            IntervalElement const& r2) const {
    FieldSpec const* f = _W.field();
    Vec3             p = _W.bcross(r1.locus, r2.locus);
    if (_W.form(p, p).sign() <= 0) {
      p = _W.to_positive_sheet(p);
      if (!_A.is_axial_vertex(p)) {
        return top();
      }
      auto [c, i] = _A.chamber_with_vertex(p);
      std::size_t j = i == 0 ? 1 : 0, k = i == 2 ? 1 : 2;
      auto        u = in_interval(c.walls[j] * c.walls[k]);
      if (!u || u->rank != 2 || !leq(r1, *u) || !leq(r2, *u)) {
        falsified("rotation at an axial vertex is not an upper bound");
      }
      return *u;
    }
    // ultraparallel: look for a translation along the common perpendicular
    Vec3 f1 = _W.to_positive_sheet(_W.bcross(p, r1.locus));
    Vec3 f2 = _W.to_positive_sheet(_W.bcross(p, r2.locus));
    // the perpendicular may itself be a wall: after a few tries also step
    // off it, by eps^2 so that the side of every other wall is kept
    auto beyond = [&](Vec3 const& a, Vec3 const& b) {
      Fe eps(f, Rational(1, 16));
      for (int k = 0; k < 200; ++k) {
        Vec3 c = a - b * eps;
        if (k >= 3) {
          c = c + p * (eps * eps);
        }
        if (_W.is_timelike(c) && _W.form(c, _W.basepoint()).sign() < 0
            && open_chamber(_W, c)) {
          return c;
        }
        eps *= Fe(f, Rational(1, 2));
      }
      internal_error("no open chamber next to the common perpendicular");
    };
    Vec3 a = beyond(f1, f2), b = beyond(f2, f1);
    for (auto& r : _W.separating_reflections(a, b)) {
      if (r == r1.g || !_W.form(_W.pole(r), p).is_zero()) {
        continue;
      }
      for (GroupElement const& cand : {r * r1.g, r1.g * r}) {
        if (cand.moved_rank() != 2) {
          continue;
        }
        auto t = in_interval(cand);
        if (t && t->kind == Kind::translation && parallel(t->locus, p)) {
          return *t;
        }
      }
    }
    return top();
  }

  IntervalElement Lattice::meet(IntervalElement const& u, IntervalElement const& v) const {
    if (leq(u, v)) {
      return u;
    }
    if (leq(v, u)) {
      return v;
    }
    if (u.rank != 2 || v.rank != 2) {
      return identity();
    }
    Vec3 n = _W.bcross(u.locus, v.locus);
    if (n.is_zero() || _W.form(n, n).sign() <= 0) {
      return identity();
    }
    GroupElement r = _W.reflection_with_pole(n);
    if (!is_reflection(r)) {
      return identity();
    }
    IntervalElement R = make(r, 1);
    if (leq(R, u) && leq(R, v)) {
      return R;
    }
    return identity();
  }

  bool Lattice::has_vertical_below(IntervalElement const& t) const {
    if (t.kind != Kind::translation) {
      invalid_input("vertical test below requires a translation");
    }
    // the reflections below t crossing the Coxeter axis form a contiguous
    // block around the crossing point; r_{-1}, r_0 are the nearest two
    BelowSequence seq = below(t);
    return _A.is_vertical(seq.at(-1)) || _A.is_vertical(seq.at(0));
  }

  Fe Lattice::axis_parameter(IntervalElement const& t, Vec3 const& pole) const {
    Frame F = translation_frame(_A, t);
    Vec3  q = _W.bcross(t.locus, pole);
    if (!_W.is_timelike(q)) {
      invalid_input("line does not cross the translation axis");
    }
    return frame_tau(_W, F, q);
  }

}  // namespace tricox
