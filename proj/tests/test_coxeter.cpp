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
#include "doctest.h"

#include "tricox/coxeter.hpp"
#include "tricox/error.hpp"
#include "tricox/geometry.hpp"

using namespace tricox;

namespace {

  // power of an element, used to check Coxeter relations
  GroupElement power(CoxeterSystem const& W, GroupElement const& g, unsigned n) {
    GroupElement r = W.identity();
    for (unsigned i = 0; i < n; ++i) {
      r = r * g;
    }
    return r;
  }

  std::vector<std::string> const instances = {"3,3,4", "2,3,7", "2,4,5", "2,3,inf",
                                              "3,3,inf", "4,4,4", "2,5,5"};

}  // namespace

TEST_CASE("parsing and classification of labels") {
  CHECK(CoxeterSpec::parse("3,3,4").kind() == "hyperbolic");
  CHECK(CoxeterSpec::parse("3,3,3").kind() == "affine");
  CHECK(CoxeterSpec::parse("2,3,6").kind() == "affine");
  CHECK(CoxeterSpec::parse("2,3,5").kind() == "spherical");
  CHECK(CoxeterSpec::parse("2,2,inf").kind() == "affine");
  CHECK(CoxeterSpec::parse("2,3,inf").kind() == "hyperbolic");
  CHECK_THROWS_AS(CoxeterSpec::parse("1,3,4"), Error);
  CHECK_THROWS_AS(CoxeterSpec::parse("3,x,4"), Error);
  CHECK_THROWS_AS(CoxeterSystem(CoxeterSpec::parse("2,3,5")), Error);
}

TEST_CASE("Coxeter relations hold in the representation") {
  for (auto const& text : instances) {
    CAPTURE(text);
    auto          spec = CoxeterSpec::parse(text);
    CoxeterSystem W(spec);
    for (std::size_t s = 0; s < 3; ++s) {
      auto const& g = W.generator(s);
      CHECK((g * g).is_identity());
      CHECK(W.preserves_form(g));
      CHECK(g.moved_rank() == 1);
      for (std::size_t t = s + 1; t < 3; ++t) {
        auto     st = g * W.generator(t);
        unsigned m  = spec.m(s, t);
        if (m != infinity) {
          CHECK(power(W, st, m).is_identity());
          for (unsigned k = 1; k < m; ++k) {
            CHECK(!power(W, st, k).is_identity());
          }
        } else {
          CHECK(W.classify(st).kind == Kind::parabolic);
        }
      }
    }
    auto w = W.word_to_element("abc");
    CHECK(W.classify(w).kind == Kind::glide);
    CHECK(W.contains(w));
    CHECK(W.reduced_word(w) == "abc");
  }
}

TEST_CASE("ball growth and membership for (3,3,4)") {
  CoxeterSystem W(CoxeterSpec::parse("3,3,4"));
  // rank three, all labels >= 3: length spheres 1, 3, 6
  CHECK(W.enumerate_ball(2).entries().size() == 10);
  auto ball = W.enumerate_ball(6);
  for (auto const& e : ball.entries()) {
    CHECK(W.contains(e.element));
    CHECK(W.reduced_word(e.element).size() == e.word.size());
  }
  Mat3 minus = Mat3::identity(W.field());
  for (std::size_t i = 0; i < 3; ++i) {
    minus(i, i) = Fe(W.field(), -1L);
  }
  CHECK(!W.contains(GroupElement(minus)));
  CHECK(!W.contains(GroupElement(W.gram2())));
}

TEST_CASE("reflection count in small balls equals the number of odd palindromes") {
  CoxeterSystem W(CoxeterSpec::parse("3,3,4"));
  auto          ball = W.enumerate_ball(5);
  for (auto i : ball.reflections()) {
    CHECK(ball.entries()[i].word.size() % 2 == 1);
    CHECK(W.classify(ball.entries()[i].element).kind == Kind::reflection);
  }
  // every conjugate s^u with |u| <= 2 is a reflection in the ball
  auto small = W.enumerate_ball(2);
  for (auto const& e : small.entries()) {
    for (std::size_t s = 0; s < 3; ++s) {
      auto r = e.element * W.generator(s) * W.inverse(e.element);
      CHECK(ball.find(r).has_value());
    }
  }
}

TEST_CASE("axis of the Coxeter element") {
  for (auto const& text : instances) {
    CAPTURE(text);
    CoxeterSystem W(CoxeterSpec::parse(text));
    Axis          A(W);
    auto const&   w = A.w();
    CHECK(w * A.v() == -A.v());
    CHECK(W.form(A.x0(), A.v()).is_zero());
    CHECK(W.form(A.d(), A.v()).is_zero());
    CHECK(W.is_timelike(A.x0()));
    // w x0 lies on the axis, further along
    CHECK(W.form(A.wx0(), A.v()).is_zero());
    CHECK(A.tau(A.wx0()).sign() > 0);
    auto cr = A.segment_crossings();
    REQUIRE(cr.size() == 3);
    CHECK(cr[2] * cr[1] * cr[0] == w);
    for (auto const& r : cr) {
      CHECK(A.is_vertical(r));
      CHECK(A.key(r).branch == Branch::vertical_above);
    }
    bool ordered = A.precedes(cr[0], cr[1]) || A.crossing_tau(cr[0]) == A.crossing_tau(cr[1]);
    CHECK(ordered);
    auto const& base = A.base_chamber();
    CHECK(base.walls[0] * base.walls[1] * base.walls[2] == w);
    if (W.spec().is_hyperbolic()) {
      CHECK(A.base_is_fundamental());
    }
    for (std::size_t i = 0; i < 3; ++i) {
      auto p = base.vertex(W, i);
      CHECK(A.vertex_orbit(p) == static_cast<int>(i));
      CHECK(A.vertex_orbit(w * p) == static_cast<int>(i));
      CHECK(A.vertex_orbit(A.w_inverse() * (A.w_inverse() * p)) == static_cast<int>(i));
      auto [c, k] = A.chamber_with_vertex(w * p);
      CHECK(c.vertex(W, k) == w * p);
    }
    auto window = A.chambers_in_window(2);
    for (auto const& c : window) {
      CHECK(c.walls[0] * c.walls[1] * c.walls[2] == w);
    }
  }
}

TEST_CASE("phi is conjugation by w") {
  CoxeterSystem W(CoxeterSpec::parse("2,3,7"));
  Axis          A(W);
  auto          a = W.generator(0);
  CHECK(A.phi_inverse(A.phi(a)) == a);
  CHECK(A.phi_power(a, 3) == A.w_power(-3) * a * A.w_power(3));
  CHECK(A.phi(A.w()) == A.w());
}
