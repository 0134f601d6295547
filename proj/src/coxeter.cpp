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

#include "tricox/coxeter.hpp"

#include <cstdlib>
#include <numeric>
#include <sstream>

#include "tricox/error.hpp"

namespace tricox {

  namespace {

    std::size_t env_size(char const* name, std::size_t fallback) {
      char const* v = std::getenv(name);
      if (v == nullptr || *v == '\0') {
        return fallback;
      }
      char*              end = nullptr;
      unsigned long long x   = std::strtoull(v, &end, 10);
      if (end == v) {
        return fallback;
      }
      return static_cast<std::size_t>(x);
    }

    // 2cos(k pi / L) as a polynomial in g = 2cos(pi/L).
    Fe two_cos_multiple(FieldSpec const* f, unsigned k) {
      Fe prev(f, 2L), cur = Fe::gamma(f);
      if (k == 0) {
        return prev;
      }
      Fe g = cur;
      for (unsigned i = 1; i < k; ++i) {
        Fe next = g * cur - prev;
        prev    = std::move(cur);
        cur     = std::move(next);
      }
      return cur;
    }

  }  // namespace

  std::size_t letter_index(char c) {
    switch (c) {
      case 'a':
        return 0;
      case 'b':
        return 1;
      case 'c':
        return 2;
      default:
        invalid_input(std::string("invalid letter '") + c + "' in word");
    }
  }

  char letter_name(std::size_t s) {
    return static_cast<char>('a' + s);
  }

  std::size_t max_ball_radius() {
    return env_size("TRICOX_MAX_RADIUS", 14);
  }

  ////////////////////////////////////////////////////////////////////////
  // CoxeterSpec
  ////////////////////////////////////////////////////////////////////////

  CoxeterSpec CoxeterSpec::parse(std::string const& text) {
    CoxeterSpec        spec;
    std::istringstream in(text);
    std::string        item;
    std::size_t        i = 0;
    while (std::getline(in, item, ',')) {
      while (!item.empty() && item.front() == ' ') {
        item.erase(item.begin());
      }
      while (!item.empty() && item.back() == ' ') {
        item.pop_back();
      }
      if (i >= 3) {
        invalid_input("expected exactly three labels, got '" + text + "'");
      }
      if (item == "inf" || item == "infinity" || item == "oo") {
        spec.labels[i++] = infinity;
        continue;
      }
      char*         end = nullptr;
      unsigned long v   = std::strtoul(item.c_str(), &end, 10);
      if (item.empty() || *end != '\0' || v < 2 || v > 100000) {
        invalid_input("invalid Coxeter label '" + item + "'");
      }
      spec.labels[i++] = static_cast<unsigned>(v);
    }
    if (i != 3) {
      invalid_input("expected exactly three labels, got '" + text + "'");
    }
    return spec;
  }

  unsigned CoxeterSpec::m(std::size_t s, std::size_t t) const {
    if (s == t) {
      return 1;
    }
    if (s > t) {
      std::swap(s, t);
    }
    if (s == 0 && t == 1) {
      return labels[0];
    }
    if (s == 1 && t == 2) {
      return labels[1];
    }
    return labels[2];
  }

  std::string CoxeterSpec::kind() const {
    // compare sum of 1/m with 1 over the finite labels
    unsigned long long prod = 1;
    for (unsigned m : labels) {
      if (m != infinity) {
        prod *= m;
      }
    }
    unsigned long long sum = 0;
    for (unsigned m : labels) {
      if (m != infinity) {
        sum += prod / m;
      }
    }
    if (sum > prod) {
      return "spherical";
    }
    if (sum == prod) {
      return "affine";
    }
    return "hyperbolic";
  }

  unsigned CoxeterSpec::field_parameter() const {
    unsigned L = 1;
    for (unsigned m : labels) {
      if (m != infinity) {
        L = std::lcm(L, m);
      }
    }
    return L < 2 ? 2 : L;
  }

  std::string CoxeterSpec::to_string() const {
    std::ostringstream os;
    for (std::size_t i = 0; i < 3; ++i) {
      if (i > 0) {
        os << ',';
      }
      if (labels[i] == infinity) {
        os << "inf";
      } else {
        os << labels[i];
      }
    }
    return os.str();
  }

  std::string to_string(Kind k) {
    switch (k) {
      case Kind::identity:
        return "identity";
      case Kind::reflection:
        return "reflection";
      case Kind::rotation:
        return "rotation";
      case Kind::parabolic:
        return "parabolic";
      case Kind::translation:
        return "translation";
      case Kind::glide:
        return "glide";
    }
    return "unknown";
  }

  ////////////////////////////////////////////////////////////////////////
  // GroupElement
  ////////////////////////////////////////////////////////////////////////

  int GroupElement::moved_rank() const {
    if (_rank < 0) {
      Mat3 d = _m - Mat3::identity(_m.field());
      _rank  = d.rank();
    }
    return _rank;
  }

  std::optional<std::size_t> Ball::find(GroupElement const& g) const {
    auto it = _index.find(g.matrix());
    if (it == _index.end()) {
      return std::nullopt;
    }
    return it->second;
  }

  ////////////////////////////////////////////////////////////////////////
  // CoxeterSystem
  ////////////////////////////////////////////////////////////////////////

  CoxeterSystem::CoxeterSystem(CoxeterSpec const& spec) : _spec(spec) {
    for (unsigned m : spec.labels) {
      if (m != infinity && m < 2) {
        invalid_input("Coxeter labels must be at least 2");
      }
    }
    std::string k = spec.kind();
    if (k != "hyperbolic") {
      invalid_input("labels (" + spec.to_string() + ") are " + k
                    + "; only hyperbolic triples are supported");
    }
    _field                = make_field(spec.field_parameter());
    FieldSpec const* f    = _field.get();
    unsigned const   L    = f->L();
    _gram                 = Mat3(f);
    _gram2                = Mat3(f);
    for (std::size_t s = 0; s < 3; ++s) {
      for (std::size_t t = 0; t < 3; ++t) {
        unsigned m = spec.m(s, t);
        Fe       e2(f);
        if (s == t) {
          e2 = Fe(f, 2L);
        } else if (m == infinity) {
          e2 = Fe(f, -2L);
        } else {
          e2 = -two_cos_multiple(f, L / m);
        }
        _gram2(s, t) = e2;
        _gram(s, t)  = e2 * Fe(f, Rational(1, 2));
      }
    }
    if (_gram2.det().sign() >= 0) {
      internal_error("Gram matrix does not have signature (2,1)");
    }
    _adj2 = _gram2.adjugate();
    for (std::size_t s = 0; s < 3; ++s) {
      _roots[s] = Vec3::unit(f, s);
      Mat3 r    = Mat3::identity(f);
      for (std::size_t j = 0; j < 3; ++j) {
        r(s, j) -= _gram2(s, j);
      }
      _gens[s] = GroupElement(r);
    }
    // adj(2B) * (2B) = det(2B) I with det(2B) < 0.
    Vec3 ones(Fe(f, 1L), Fe(f, 1L), Fe(f, 1L));
    _x0 = -(_adj2 * ones);
    for (std::size_t s = 0; s < 3; ++s) {
      _vertices[s] = -(_adj2 * _roots[s]);
    }
    if (!is_timelike(_x0)) {
      internal_error("chamber basepoint is not timelike");
    }
  }

  Fe CoxeterSystem::form(Vec3 const& x, Vec3 const& y) const {
    return dot(x, _gram2 * y);
  }

  Vec3 CoxeterSystem::bcross(Vec3 const& u, Vec3 const& v) const {
    return _adj2 * cross(u, v);
  }

  GroupElement CoxeterSystem::identity() const {
    return GroupElement(Mat3::identity(field()));
  }

  GroupElement CoxeterSystem::word_to_element(Word const& w) const {
    GroupElement g = identity();
    for (char c : w) {
      g = times_generator(g, letter_index(c));
    }
    return g;
  }

  GroupElement CoxeterSystem::times_generator(GroupElement const& g,
                                              std::size_t         s) const {
    // g r_s = g - (g e_s) (2B e_s)^T
    Mat3 m = g.matrix();
    for (std::size_t i = 0; i < 3; ++i) {
      Fe const gi = g.matrix()(i, s);
      if (gi.is_zero()) {
        continue;
      }
      for (std::size_t j = 0; j < 3; ++j) {
        if (!_gram2(s, j).is_zero()) {
          m(i, j) -= gi * _gram2(s, j);
        }
      }
    }
    return GroupElement(std::move(m));
  }

  GroupElement CoxeterSystem::inverse(GroupElement const& g) const {
    Mat3 adj = g.matrix().adjugate();
    Fe   d   = g.matrix().det();
    if (d.is_one()) {
      return GroupElement(adj);
    }
    if ((-d).is_one()) {
      for (auto& e : adj.a) {
        e = -e;
      }
      return GroupElement(adj);
    }
    Fe inv = d.inverse();
    for (auto& e : adj.a) {
      e *= inv;
    }
    return GroupElement(adj);
  }

  GroupElement CoxeterSystem::reflection_with_pole(Vec3 const& n) const {
    Fe nn = form(n, n);
    if (nn.sign() <= 0) {
      invalid_input("reflection pole must be spacelike");
    }
    Fe   c  = Fe(field(), 2L) / nn;
    Vec3 gn = _gram2 * n;
    Mat3 m  = Mat3::identity(field());
    for (std::size_t i = 0; i < 3; ++i) {
      for (std::size_t j = 0; j < 3; ++j) {
        m(i, j) -= c * n[i] * gn[j];
      }
    }
    return GroupElement(m);
  }

  bool CoxeterSystem::preserves_form(GroupElement const& g) const {
    Mat3 const& m = g.matrix();
    return m.transpose() * _gram2 * m == _gram2;
  }

  Vec3 CoxeterSystem::pole(GroupElement const& r) const {
    Mat3 d = r.matrix() - Mat3::identity(field());
    for (std::size_t j = 0; j < 3; ++j) {
      Vec3 c = d.col(j);
      if (!c.is_zero()) {
        return c;
      }
    }
    invalid_input("identity has no pole");
  }

  namespace {
    Vec3 kernel_of_rank2(Mat3 const& d) {
      for (auto [i, j] : {std::pair{0, 1}, std::pair{0, 2}, std::pair{1, 2}}) {
        Vec3 k = cross(d.row(i), d.row(j));
        if (!k.is_zero()) {
          return k;
        }
      }
      internal_error("kernel requested for a matrix of rank below 2");
    }
  }  // namespace

  Classification CoxeterSystem::classify(GroupElement const& g) const {
    FieldSpec const* f = field();
    int const        r = g.moved_rank();
    Fe const         d = g.matrix().det();
    switch (r) {
      case 0:
        return {Kind::identity, Vec3(f)};
      case 1:
        return {Kind::reflection, pole(g)};
      case 3: {
        if (!(-d).is_one()) {
          internal_error("moved rank 3 with determinant other than -1");
        }
        Mat3 plus = g.matrix() + Mat3::identity(f);
        if (plus.rank() != 2) {
          internal_error("glide with a degenerate (-1)-eigenspace");
        }
        return {Kind::glide, kernel_of_rank2(plus)};
      }
      default:
        break;
    }
    if (!d.is_one()) {
      internal_error("orientation reversing isometry with moved rank 2");
    }
    Vec3 p = kernel_of_rank2(g.matrix() - Mat3::identity(f));
    int  s = form(p, p).sign();
    if (s < 0) {
      return {Kind::rotation, to_positive_sheet(p)};
    }
    if (s == 0) {
      return {Kind::parabolic, to_positive_sheet(p)};
    }
    return {Kind::translation, p};
  }

  bool CoxeterSystem::is_timelike(Vec3 const& p) const {
    return form(p, p).sign() < 0;
  }

  Vec3 CoxeterSystem::to_positive_sheet(Vec3 const& p) const {
    if (form(p, _x0).sign() > 0) {
      return -p;
    }
    return p;
  }

  Vec3 CoxeterSystem::reflect(std::size_t s, Vec3 const& p) const {
    // r_s x = x - (2B)(x, e_s) e_s / 2 * 2 = x - <row s of 2B, x> e_s
    Vec3 r = p;
    Fe   c = _gram2(s, 0) * p[0] + _gram2(s, 1) * p[1] + _gram2(s, 2) * p[2];
    r[s] -= c;
    return r;
  }

  CoxeterSystem::Fold CoxeterSystem::fold(Vec3 const& point) const {
    if (!is_timelike(point)) {
      invalid_input("fold requires a timelike point");
    }
    Vec3 p = to_positive_sheet(point);
    if (!(p == point)) {
      invalid_input("fold requires a point on the positive sheet");
    }
    static std::size_t const cap = env_size("TRICOX_MAX_FOLD", 2000000);
    Fold                     out;
    while (true) {
      bool moved = false;
      for (std::size_t s = 0; s < 3; ++s) {
        Fe c = _gram2(s, 0) * p[0] + _gram2(s, 1) * p[1] + _gram2(s, 2) * p[2];
        if (c.sign() < 0) {
          p[s] -= c;
          out.word.push_back(letter_name(s));
          moved = true;
          break;
        }
      }
      if (!moved) {
        break;
      }
      if (out.word.size() > cap) {
        cap_exceeded("folding exceeded the step cap");
      }
    }
    out.point = p;
    return out;
  }

  bool CoxeterSystem::contains(GroupElement const& g) const {
    if (!preserves_form(g)) {
      return false;
    }
    Vec3 y = g * _x0;
    if (form(y, _x0).sign() >= 0) {
      return false;
    }
    Fold fo = fold(y);
    if (!(fo.point == _x0)) {
      return false;
    }
    return word_to_element(fo.word) == g;
  }

  bool CoxeterSystem::in_closed_chamber(GroupElement const& g,
                                        Vec3 const&         p) const {
    // p in g D iff B(g^{-1} p, e_s) >= 0 iff B(p, g e_s) >= 0
    for (std::size_t s = 0; s < 3; ++s) {
      if (form(p, g.matrix().col(s)).sign() < 0) {
        return false;
      }
    }
    return true;
  }

  Word CoxeterSystem::reduced_word(GroupElement const& g) const {
    return fold(g * _x0).word;
  }

  std::vector<GroupElement>
  CoxeterSystem::separating_reflections(Vec3 const& p, Vec3 const& q) const {
    GroupElement up = word_to_element(fold(p).word);
    GroupElement uq = word_to_element(fold(q).word);
    GroupElement h  = inverse(up) * uq;
    Word         rw = reduced_word(h);
    std::vector<GroupElement> out;
    GroupElement              P    = up;
    GroupElement              Pinv = inverse(up);
    for (char c : rw) {
      std::size_t s = letter_index(c);
      out.push_back(P * _gens[s] * Pinv);
      P    = times_generator(P, s);
      Pinv = _gens[s] * Pinv;
    }
    return out;
  }

  Ball CoxeterSystem::enumerate_ball(std::size_t radius) const {
    if (radius > max_ball_radius()) {
      cap_exceeded("ball radius " + std::to_string(radius)
                   + " exceeds the cap " + std::to_string(max_ball_radius()));
    }
    Ball ball;
    ball._radius = radius;
    ball._entries.push_back({identity(), ""});
    ball._index.emplace(ball._entries[0].element.matrix(), 0);
    std::size_t begin = 0, end = 1;
    for (std::size_t k = 0; k < radius; ++k) {
      for (std::size_t i = begin; i < end; ++i) {
        for (std::size_t s = 0; s < 3; ++s) {
          if (!ball._entries[i].word.empty()
              && ball._entries[i].word.back() == letter_name(s)) {
            continue;
          }
          GroupElement h = times_generator(ball._entries[i].element, s);
          if (ball._index.count(h.matrix()) != 0) {
            continue;
          }
          ball._index.emplace(h.matrix(), ball._entries.size());
          ball._entries.push_back({std::move(h), ball._entries[i].word + letter_name(s)});
        }
      }
      begin = end;
      end   = ball._entries.size();
    }
    for (std::size_t i = 0; i < ball._entries.size(); ++i) {
      if (ball._entries[i].word.size() % 2 == 1
          && ball._entries[i].element.moved_rank() == 1) {
        ball._refl.push_back(i);
      }
    }
    return ball;
  }

}  // namespace tricox
