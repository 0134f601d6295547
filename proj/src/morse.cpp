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

#include "tricox/morse.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <unordered_set>

#include "tricox/error.hpp"

namespace tricox {

  namespace {

    long floor_div(long a, long b) {
      long q = a / b;
      if ((a % b != 0) && ((a < 0) != (b < 0))) {
        --q;
      }
      return q;
    }

  }  // namespace

  std::size_t CellHash::operator()(Cell const& c) const {
    std::size_t h = c.factors.size();
    for (auto const& x : c.factors) {
      h = h * 1000003u ^ x.g.hash();
    }
    return h;
  }

  std::string to_string(ComponentType t) {
    switch (t) {
      case ComponentType::i:
        return "i";
      case ComponentType::ii:
        return "ii";
      case ComponentType::iii:
        return "iii";
      case ComponentType::iv:
        return "iv";
      case ComponentType::v:
        return "v";
    }
    return "?";
  }

  std::string to_string(MatchEdge::Kind k) {
    switch (k) {
      case MatchEdge::within_component:
        return "within_component";
      case MatchEdge::cross_fiber:
        return "cross_fiber";
      case MatchEdge::n_merge:
        return "N_merge";
      case MatchEdge::n_split:
        return "N_split";
      case MatchEdge::n_neighbour:
        return "N_neighbour";
    }
    return "?";
  }

  Morse::Morse(Lattice const& lattice)
      : _P(lattice), _A(lattice.axis()), _W(lattice.system()) {}

  Cell Morse::make_cell(std::vector<GroupElement> const& factors) const {
    Cell c;
    int  total = 0;
    for (auto const& g : factors) {
      IntervalElement e = _P.member(g);
      if (e.rank == 0) {
        invalid_input("a cell has no identity factors");
      }
      total += e.rank;
      c.factors.push_back(e);
    }
    auto p = _P.in_interval(product(c));
    if (!p || p->rank != total) {
      invalid_input("factors of a cell must have a rank additive product in [1,w]");
    }
    return c;
  }

  GroupElement Morse::product(Cell const& c) const {
    GroupElement g = _W.identity();
    for (auto const& x : c.factors) {
      g = g * x.g;
    }
    return g;
  }

  int Morse::eta(Cell const& c) const {
    int d = static_cast<int>(c.dim());
    return product(c) == _A.w() ? d : d + 1;
  }

  std::vector<Cell> Morse::faces(Cell const& c) const {
    std::vector<Cell> out;
    std::size_t       k = c.dim();
    if (k == 0) {
      return out;
    }
    for (std::size_t i = 0; i <= k; ++i) {
      Cell f;
      if (i == 0) {
        f.factors.assign(c.factors.begin() + 1, c.factors.end());
      } else if (i == k) {
        f.factors.assign(c.factors.begin(), c.factors.end() - 1);
      } else {
        f.factors.assign(c.factors.begin(), c.factors.begin() + static_cast<long>(i) - 1);
        f.factors.push_back(_P.wrap(c.factors[i - 1].g * c.factors[i].g));
        f.factors.insert(f.factors.end(), c.factors.begin() + static_cast<long>(i) + 1,
                         c.factors.end());
      }
      out.push_back(std::move(f));
    }
    return out;
  }

  IntervalElement Morse::x(Component const& comp, long i) const {
    long q = floor_div(i, comp.d);
    long r = i - q * comp.d;
    return _P.phi(comp.base[static_cast<std::size_t>(r)], q);
  }

  Cell Morse::cell_at(Component const& comp, long position) const {
    long i = floor_div(position, 2);
    Cell c;
    long from = position % 2 == 0 ? i : i + 1;
    for (long k = from; k <= i + comp.d - 1; ++k) {
      c.factors.push_back(x(comp, k));
    }
    return c;
  }

  Vec3 Morse::anchor(GroupElement const& r) const {
    if (_A.is_vertical(r)) {
      return _W.to_positive_sheet(_A.plane_point(r));
    }
    return _A.xi(r);
  }

  Component Morse::canonical(int d, std::vector<IntervalElement> raw, long& shift) const {
    Component comp;
    comp.d = d;
    if (d == 1) {
      comp.base = std::move(raw);
      shift     = 0;
      comp.key  = "1:" + comp.base[0].g.matrix().serialize();
      return comp;
    }
    Component rawc;
    rawc.d    = d;
    rawc.base = raw;
    bool        have = false;
    Fe          best_tau;
    std::string best_ser;
    long        best_j = 0;
    for (int r = 0; r < d; ++r) {
      if (raw[static_cast<std::size_t>(r)].rank != 1) {
        continue;
      }
      Vec3        a   = anchor(raw[static_cast<std::size_t>(r)].g);
      long        k   = _A.period_index(a);
      long        j   = r - k * d;
      Fe          tau = _A.tau(_A.w_power(k) * a);
      std::string ser = x(rawc, j).g.matrix().serialize();
      int         cmp = have ? (tau - best_tau).sign() : -1;
      if (!have || cmp < 0 || (cmp == 0 && ser < best_ser)) {
        have     = true;
        best_tau = tau;
        best_ser = ser;
        best_j   = j;
      }
    }
    if (!have) {
      falsified("fiber component without reflections");
    }
    shift = best_j;
    for (long t = 0; t < d; ++t) {
      comp.base.push_back(x(rawc, best_j + t));
    }
    comp.key = std::to_string(d) + ":";
    for (auto const& e : comp.base) {
      comp.key += e.g.matrix().serialize() + ";";
    }
    return comp;
  }

  int Morse::matching_types(Component const& comp) const {
    auto refl = [&](IntervalElement const& e) {
      return e.rank == 1;
    };
    auto vert = [&](IntervalElement const& e) {
      return e.rank == 1 && _A.is_vertical(e.g);
    };
    auto const& b     = comp.base;
    int         count = 0;
    if (comp.d == 1 && b[0].g == _A.w()) {
      ++count;
    }
    if (comp.d == 2) {
      bool ii = false, iii = false;
      for (int p = 0; p < 2; ++p) {
        auto const& r = b[static_cast<std::size_t>(p)];
        auto const& u = b[static_cast<std::size_t>(1 - p)];
        bool        rot = u.kind == Kind::rotation || u.kind == Kind::parabolic;
        ii  = ii || (vert(r) && rot);
        iii = iii || (refl(r) && !vert(r) && u.kind == Kind::translation);
      }
      count += ii + iii;
    }
    if (comp.d == 3 && std::all_of(b.begin(), b.end(), refl)) {
      bool any = std::any_of(b.begin(), b.end(), vert);
      count += any ? 1 : 0;
      count += any ? 0 : 1;
    }
    return count;
  }

  void Morse::classify(Component& comp) const {
    auto const& b = comp.base;
    if (comp.d == 1) {
      if (b[0].g != _A.w()) {
        falsified("one dimensional fiber component not given by w");
      }
      comp.type = ComponentType::i;
      return;
    }
    if (comp.d == 2) {
      if (b[0].rank != 1 || b[1].rank != 2) {
        falsified("two dimensional fiber component with unexpected ranks");
      }
      if (_A.is_vertical(b[0].g)) {
        if (b[1].kind != Kind::rotation && b[1].kind != Kind::parabolic) {
          falsified("complement of a vertical reflection is not a rotation");
        }
        comp.type = ComponentType::ii;
      } else {
        if (b[1].kind != Kind::translation) {
          falsified("complement of a horizontal reflection is not a translation");
        }
        comp.type        = ComponentType::iii;
        comp.exceptional = _P.has_vertical_below(b[1]);
      }
      return;
    }
    for (auto const& e : b) {
      if (e.rank != 1) {
        falsified("three dimensional fiber component with a non reflection");
      }
    }
    bool any  = std::any_of(b.begin(), b.end(), [&](IntervalElement const& e) {
      return _A.is_vertical(e.g);
    });
    comp.type = any ? ComponentType::iv : ComponentType::v;
  }

  Placed const& Morse::place(Cell const& c) const {
    auto it = _placed.find(c);
    if (it != _placed.end()) {
      return it->second;
    }
    GroupElement                 pi = product(c);
    std::vector<IntervalElement> raw;
    long                         raw_pos;
    int                          d;
    if (pi == _A.w()) {
      d       = static_cast<int>(c.dim());
      raw     = c.factors;
      raw_pos = 0;
    } else {
      d = static_cast<int>(c.dim()) + 1;
      raw.push_back(_P.left_complement(_P.wrap(pi)));
      raw.insert(raw.end(), c.factors.begin(), c.factors.end());
      raw_pos = 1;
    }
    if (d > 3) {
      invalid_input("cells have at most three factors");
    }
    long   shift = 0;
    Placed pl;
    pl.comp     = canonical(d, std::move(raw), shift);
    pl.position = raw_pos - 2 * shift;
    classify(pl.comp);
    return _placed.emplace(c, std::move(pl)).first->second;
  }

  bool Morse::fixes_vertex(GroupElement const& g, bool finite_only) const {
    for (std::size_t s = 0; s < 3; ++s) {
      Vec3 const& p = _W.vertex(s);
      if (finite_only && !_W.is_timelike(p)) {
        continue;
      }
      if (parallel(g * p, p)) {
        return true;
      }
    }
    return false;
  }

  bool Morse::in_X2(Cell const& c) const {
    return fixes_vertex(product(c), false);
  }

  bool Morse::in_X1(Cell const& c) const {
    GroupElement g = product(c);
    if (g.is_identity()) {
      return true;
    }
    for (std::size_t s = 0; s < 3; ++s) {
      if (g == _W.generator(s)) {
        return true;
      }
    }
    return fixes_vertex(g, true);
  }

  Tri Morse::in_K1(Cell const& c, long window) const {
    Placed const& pl = place(c);
    if (!pl.comp.in_K2()) {
      return Tri::no;
    }
    if (pl.comp.type == ComponentType::i) {
      return Tri::yes;
    }
    long span  = 2 * pl.comp.d * std::max(window, 1L);
    bool left  = false;
    bool right = false;
    for (long k = 0; k <= span && !(left && right); ++k) {
      if (!left && in_X2(cell_at(pl.comp, pl.position - k))) {
        left = true;
      }
      if (!right && in_X2(cell_at(pl.comp, pl.position + k))) {
        right = true;
      }
    }
    return left && right ? Tri::yes : Tri::unknown;
  }

  Membership Morse::membership(Cell const& c, long window) const {
    Membership m;
    m.x2 = in_X2(c);
    m.x1 = in_X1(c);
    m.k2 = place(c).comp.in_K2();
    m.k1 = in_K1(c, window);
    return m;
  }

  long Morse::critical_position(Component const& comp) const {
    if (comp.type == ComponentType::iii && !comp.exceptional) {
      long k = _A.period_index(_A.xi(comp.base[0].g));
      long i = -2 * k;
      return 2 * i + 1;
    }
    if (comp.type == ComponentType::v) {
      int residue = -1;
      for (int r = 0; r < 3; ++r) {
        if (_A.precedes(x(comp, r + 1).g, x(comp, r + 2).g)) {
          if (residue >= 0) {
            falsified("a type v component has two ascents per period");
          }
          residue = r;
        }
      }
      if (residue < 0) {
        falsified("a type v component has no ascent");
      }
      long k = _A.period_index(_A.xi(comp.base[static_cast<std::size_t>(residue)].g));
      long i = residue - 3 * k;
      return 2 * i + 1;
    }
    invalid_input("critical cells exist in type iii and v components only");
  }

  std::optional<MatchEdge> Morse::m_partner(Cell const& c) const {
    Placed const& pl = place(c);
    if (pl.comp.in_K2()) {
      return std::nullopt;
    }
    long cp = critical_position(pl.comp);
    long p  = pl.position;
    if (p == cp) {
      MatchEdge e;
      e.kind = MatchEdge::cross_fiber;
      if (pl.comp.type == ComponentType::iii) {
        auto fac = _P.increasing_factorization(c.factors[0]);
        e.lower  = c;
        e.upper  = Cell{{_P.wrap(fac[0]), _P.wrap(fac[1])}};
      } else {
        e.lower = Cell{{_P.wrap(c.factors[0].g * c.factors[1].g)}};
        e.upper = c;
      }
      return e;
    }
    bool top = p % 2 == 0;
    long q;
    if (p < cp) {
      q = top ? p - 1 : p + 1;
    } else {
      q = top ? p + 1 : p - 1;
    }
    MatchEdge e;
    e.kind  = MatchEdge::within_component;
    e.upper = top ? c : cell_at(pl.comp, q);
    e.lower = top ? cell_at(pl.comp, q) : c;
    return e;
  }

  Fe Morse::omega(Cell const& c) const {
    Placed const& pl = place(c);
    if (pl.comp.in_K2()) {
      invalid_input("omega is defined outside K'' only");
    }
    long cp = critical_position(pl.comp);
    long i  = floor_div(cp - 1, 2);
    return _A.distance_surrogate(x(pl.comp, i).g);
  }

  std::size_t Morse::depth(Cell const& c) const {
    auto const& f = c.factors;
    for (std::size_t i = 0; i < f.size(); ++i) {
      if (f[i].rank >= 2) {
        return i + 1;
      }
      if (i + 1 < f.size() && _A.precedes(f[i].g, _P.min_reflection_below(f[i + 1]))) {
        return i + 1;
      }
    }
    falsified("depth undefined for " + to_string(c));
  }

  MatchEdge Morse::n_partner(Cell const& c) const {
    Placed const& pl = place(c);
    MatchEdge     e;
    if (product(c) != _A.w()) {
      e.kind  = MatchEdge::n_neighbour;
      e.lower = c;
      e.upper = cell_at(pl.comp, pl.position - 1);
      return e;
    }
    Cell right{{c.factors.begin() + 1, c.factors.end()}};
    if (!in_X2(right)) {
      e.kind  = MatchEdge::n_neighbour;
      e.upper = c;
      e.lower = right;
      return e;
    }
    std::size_t     delta = depth(c) - 1;
    auto const&     f     = c.factors;
    Cell            other;
    IntervalElement xd = f[delta];
    if (xd.rank >= 2) {
      GroupElement y = _P.min_reflection_below(xd);
      other.factors.assign(f.begin(), f.begin() + static_cast<long>(delta));
      other.factors.push_back(_P.wrap(y));
      other.factors.push_back(_P.wrap(y * xd.g));
      other.factors.insert(other.factors.end(), f.begin() + static_cast<long>(delta) + 1,
                           f.end());
      e.kind  = MatchEdge::n_split;
      e.lower = c;
      e.upper = other;
      return e;
    }
    if (delta + 1 >= f.size()) {
      falsified("depth points past the last factor of " + to_string(c));
    }
    other.factors.assign(f.begin(), f.begin() + static_cast<long>(delta));
    other.factors.push_back(_P.wrap(xd.g * f[delta + 1].g));
    other.factors.insert(other.factors.end(), f.begin() + static_cast<long>(delta) + 2,
                         f.end());
    e.kind  = MatchEdge::n_merge;
    e.lower = other;
    e.upper = c;
    return e;
  }

  std::vector<Cell> Morse::ball_seeds(std::size_t radius) const {
    std::vector<Cell> seeds{Cell{}, Cell{{_P.top()}}};
    auto              ball = _W.enumerate_ball(radius);
    for (auto const& e : ball.entries()) {
      auto u = _P.in_interval(e.element);
      if (!u || u->rank == 0 || u->rank == 3) {
        continue;
      }
      seeds.push_back(Cell{{*u}});
      if (u->rank == 2) {
        for (auto const& y : _P.reflections_below(*u, 1)) {
          seeds.push_back(Cell{{_P.wrap(y), _P.wrap(y * u->g)}});
        }
      }
    }
    return seeds;
  }

  std::vector<Cell> Morse::translation_seeds(std::size_t count, long fan) const {
    std::vector<Cell>               out;
    std::deque<IntervalElement>     todo;
    std::unordered_set<std::string> seen;
    auto                            ball = _W.enumerate_ball(8);
    for (auto const& e : ball.entries()) {
      auto u = _P.in_interval(e.element);
      if (u && u->kind == Kind::translation) {
        todo.push_back(*u);
      }
    }
    std::size_t found = 0;
    while (!todo.empty() && found < count) {
      IntervalElement t = todo.front();
      todo.pop_front();
      Placed const& pl = place(Cell{{t}});
      if (!seen.insert(pl.comp.key).second) {
        continue;
      }
      if (seen.size() > 50 * count) {
        cap_exceeded("translation seeds: too few non exceptional components");
      }
      out.push_back(Cell{{t}});
      found += pl.comp.exceptional ? 0 : 1;
      auto seq = _P.below(t);
      for (long k = -fan; k <= fan; ++k) {
        GroupElement r = seq.at(k);
        if (!_A.is_vertical(r)) {
          todo.push_back(_P.right_complement(_P.member(r)));
        }
      }
    }
    return out;
  }

  Truncation Morse::truncate(std::vector<Cell> const& seeds, long window) const {
    Truncation T;
    T.window = window;
    auto add = [&](Cell const& c) {
      if (T.index.emplace(c, T.cells.size()).second) {
        T.cells.push_back(c);
        return true;
      }
      return false;
    };
    std::unordered_set<std::string> seen;
    std::deque<Component>           todo;
    auto                            enqueue = [&](Cell const& c) {
      Placed const& pl = place(c);
      if (seen.insert(pl.comp.key).second) {
        todo.push_back(pl.comp);
      }
    };
    for (auto const& s : seeds) {
      enqueue(s);
    }
    while (!todo.empty()) {
      Component comp = todo.front();
      todo.pop_front();
      long lo = comp.d == 1 ? 0 : -2 * window * comp.d;
      long hi = comp.d == 1 ? 1 : 2 * (window * comp.d + comp.d - 1) + 1;
      for (long p = lo; p <= hi; ++p) {
        add(cell_at(comp, p));
      }
      if (!comp.in_K2()) {
        auto e = m_partner(cell_at(comp, critical_position(comp)));
        enqueue(e->lower);
        enqueue(e->upper);
      }
    }
    for (std::size_t i = 0; i < T.cells.size(); ++i) {
      Cell c = T.cells[i];
      for (auto const& f : faces(c)) {
        add(f);
      }
    }
    return T;
  }

  namespace {

    // Kahn's algorithm; true when the directed graph has no cycle.
    bool acyclic(std::vector<std::vector<std::size_t>> const& out) {
      std::vector<std::size_t> indeg(out.size(), 0);
      for (auto const& es : out) {
        for (auto v : es) {
          ++indeg[v];
        }
      }
      std::vector<std::size_t> stack;
      for (std::size_t v = 0; v < out.size(); ++v) {
        if (indeg[v] == 0) {
          stack.push_back(v);
        }
      }
      std::size_t done = 0;
      while (!stack.empty()) {
        std::size_t v = stack.back();
        stack.pop_back();
        ++done;
        for (auto u : out[v]) {
          if (--indeg[u] == 0) {
            stack.push_back(u);
          }
        }
      }
      return done == out.size();
    }

    bool is_face(Morse const& M, Cell const& lower, Cell const& upper) {
      auto fs = M.faces(upper);
      return std::find(fs.begin(), fs.end(), lower) != fs.end();
    }

  }  // namespace

  MCertificate Morse::certify_M(Truncation const& T) const {
    MCertificate C;
    C.cells = T.cells.size();
    auto fail = [&](std::string const& msg) {
      if (C.failures.size() < 20) {
        C.failures.push_back(msg);
      }
    };
    if (m_partner(Cell{}).has_value()) {
      C.zero_cell_unmatched = false;
      fail("the 0-cell is matched by M");
    }

    // nodes: cells outside K''
    std::vector<std::size_t> node(T.cells.size(), SIZE_MAX);
    std::vector<std::size_t> cells;
    for (std::size_t i = 0; i < T.cells.size(); ++i) {
      if (!place(T.cells[i]).comp.in_K2()) {
        node[i] = cells.size();
        cells.push_back(i);
      }
    }
    C.off_K2 = cells.size();
    std::vector<std::optional<std::size_t>> mate(cells.size());
    std::vector<Fe>                         om(cells.size());
    for (std::size_t n = 0; n < cells.size(); ++n) {
      Cell const& c = T.cells[cells[n]];
      om[n]         = omega(c);
      auto e        = m_partner(c);
      if (!e) {
        ++C.critical;
        fail("critical cell outside K'': " + to_string(c));
        continue;
      }
      Placed const& pl = place(c);
      if (pl.position == critical_position(pl.comp) && pl.comp.type == ComponentType::iii) {
        ++C.special;
      }
      Cell const& other = e->lower == c ? e->upper : e->lower;
      auto        it    = T.index.find(other);
      if (it == T.index.end() || node[it->second] == SIZE_MAX) {
        ++C.boundary;
        continue;
      }
      ++C.core;
      mate[n] = node[it->second];
      if (e->kind == MatchEdge::cross_fiber && e->lower == c) {
        ++C.cross_edges;
      }
      auto back = m_partner(other);
      if (!back || !((back->lower == e->lower) && (back->upper == e->upper))) {
        C.involutive = false;
        fail("M is not symmetric at " + to_string(c));
      }
      if (!is_face(*this, e->lower, e->upper) || e->lower.dim() + 1 != e->upper.dim()) {
        C.covers = false;
        fail("M pairs non covering cells " + to_string(e->lower) + " < "
             + to_string(e->upper));
      }
    }
    for (std::size_t n = 0; n < cells.size(); ++n) {
      if (mate[n] && om[n] != om[*mate[n]]) {
        C.omega_equal_on_pairs = false;
        fail("omega differs on a matched pair at " + to_string(T.cells[cells[n]]));
      }
    }

    // Hasse graph with matched edges reversed
    std::vector<std::vector<std::size_t>> out(cells.size());
    for (std::size_t n = 0; n < cells.size(); ++n) {
      Cell const& s = T.cells[cells[n]];
      auto        fs = faces(s);
      std::sort(fs.begin(), fs.end(), [](Cell const& a, Cell const& b) {
        return CellHash{}(a) < CellHash{}(b);
      });
      fs.erase(std::unique(fs.begin(), fs.end()), fs.end());
      for (auto const& f : fs) {
        auto it = T.index.find(f);
        if (it == T.index.end() || node[it->second] == SIZE_MAX) {
          continue;
        }
        std::size_t m = node[it->second];
        if (mate[n] && *mate[n] == m) {
          out[m].push_back(n);
        } else {
          out[n].push_back(m);
          if (om[n] < om[m]) {
            C.omega_monotone = false;
            fail("omega increases along a face " + to_string(s) + " > " + to_string(f));
          }
        }
      }
    }
    C.acyclic = acyclic(out);
    if (!C.acyclic) {
      fail("M has a directed cycle in the truncation");
    }

    // each cross hop followed by a face step lowers omega; bounded reach
    for (std::size_t n = 0; n < cells.size(); ++n) {
      Cell const& c = T.cells[cells[n]];
      auto        e = m_partner(c);
      if (!e || e->kind != MatchEdge::cross_fiber || e->lower != c || !mate[n]) {
        continue;
      }
      std::size_t up = *mate[n];
      for (auto v : out[up]) {
        if (!(om[v] < om[n])) {
          C.cross_drop = false;
          fail("omega does not drop after the cross edge at " + to_string(c));
        }
      }
      std::vector<char>        vis(cells.size(), 0);
      std::vector<std::size_t> st{n};
      std::size_t              reach = 0;
      vis[n]                         = 1;
      while (!st.empty()) {
        std::size_t v = st.back();
        st.pop_back();
        ++reach;
        for (auto u : out[v]) {
          if (!vis[u]) {
            vis[u] = 1;
            st.push_back(u);
          }
        }
      }
      C.max_reach = std::max(C.max_reach, reach);
    }
    return C;
  }

  NCertificate Morse::certify_N(Truncation const& T) const {
    NCertificate C;
    C.cells = T.cells.size();
    auto fail = [&](std::string const& msg) {
      if (C.failures.size() < 20) {
        C.failures.push_back(msg);
      }
    };
    if (!in_X2(Cell{})) {
      C.zero_cell_unmatched = false;
      fail("the 0-cell is outside X''");
    }
    std::vector<Tri>  k1(T.cells.size());
    std::vector<char> x2(T.cells.size());
    for (std::size_t i = 0; i < T.cells.size(); ++i) {
      k1[i] = in_K1(T.cells[i], T.window);
      x2[i] = in_X2(T.cells[i]) ? 1 : 0;
      if (k1[i] == Tri::unknown) {
        ++C.unknown;
      }
    }
    std::vector<std::size_t> node(T.cells.size(), SIZE_MAX);
    std::vector<std::size_t> cells;
    for (std::size_t i = 0; i < T.cells.size(); ++i) {
      if (k1[i] == Tri::yes) {
        node[i] = cells.size();
        cells.push_back(i);
      }
    }
    std::vector<std::optional<std::size_t>> mate(cells.size());
    for (std::size_t n = 0; n < cells.size(); ++n) {
      std::size_t i = cells[n];
      if (x2[i]) {
        continue;
      }
      ++C.domain;
      Cell const& c = T.cells[i];
      MatchEdge   e;
      try {
        e = n_partner(c);
      } catch (Error const& err) {
        C.involutive = false;
        fail(err.what());
        continue;
      }
      Cell const& other = e.lower == c ? e.upper : e.lower;
      auto        it    = T.index.find(other);
      if (it == T.index.end() || k1[it->second] != Tri::yes) {
        ++C.boundary;
        continue;
      }
      if (x2[it->second]) {
        C.involutive = false;
        fail("N matches " + to_string(c) + " with a cell of X''");
        continue;
      }
      ++C.core;
      mate[n] = node[it->second];
      // each pair once, seen from its lower cell
      if (e.lower == c) {
        C.splits += e.kind == MatchEdge::n_split;
        C.neighbours += e.kind == MatchEdge::n_neighbour;
      } else {
        C.merges += e.kind == MatchEdge::n_merge;
      }
      MatchEdge back;
      try {
        back = n_partner(other);
      } catch (Error const& err) {
        C.involutive = false;
        fail(err.what());
        continue;
      }
      if (!(back.lower == e.lower && back.upper == e.upper)) {
        C.involutive = false;
        fail("mu is not involutive at " + to_string(c));
      }
      if (!is_face(*this, e.lower, e.upper) || e.lower.dim() + 1 != e.upper.dim()) {
        C.covers = false;
        fail("N pairs non covering cells " + to_string(e.lower) + " < " + to_string(e.upper));
      }
    }
    std::vector<std::vector<std::size_t>> out(cells.size());
    for (std::size_t n = 0; n < cells.size(); ++n) {
      auto fs = faces(T.cells[cells[n]]);
      std::sort(fs.begin(), fs.end(), [](Cell const& a, Cell const& b) {
        return CellHash{}(a) < CellHash{}(b);
      });
      fs.erase(std::unique(fs.begin(), fs.end()), fs.end());
      for (auto const& f : fs) {
        auto it = T.index.find(f);
        if (it == T.index.end() || node[it->second] == SIZE_MAX) {
          continue;
        }
        std::size_t m = node[it->second];
        if (mate[n] && *mate[n] == m) {
          out[m].push_back(n);
        } else {
          out[n].push_back(m);
        }
      }
    }
    C.acyclic = acyclic(out);
    if (!C.acyclic) {
      fail("N has a directed cycle in the truncation");
    }
    return C;
  }

  std::string Morse::to_string(Cell const& c) const {
    std::string s = "[";
    for (std::size_t i = 0; i < c.factors.size(); ++i) {
      if (i != 0) {
        s += '|';
      }
      s += _W.reduced_word(c.factors[i].g);
    }
    return s + "]";
  }

}  // namespace tricox
