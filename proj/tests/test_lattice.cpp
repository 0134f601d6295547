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
#include <string>

#include "doctest.h"

#include "tricox/error.hpp"
#include "tricox/lattice.hpp"

using namespace tricox;

namespace {

  struct Fixture {
    explicit Fixture(std::string const& labels)
        : W(CoxeterSpec::parse(labels)), A(W), P(A) {}
    CoxeterSystem W;
    Axis          A;
    Lattice       P;

    IntervalElement el(char const* word) {
      return P.member(W.word_to_element(word));
    }
  };

  // rank two members found as products of two ball reflections
  std::vector<IntervalElement> rank_two_members(Fixture& F, std::size_t radius) {
    auto                         ball = F.W.enumerate_ball(radius);
    std::vector<IntervalElement> out;
    std::vector<GroupElement>    seen;
    for (auto const& e : ball.entries()) {
      if (e.element.moved_rank() != 2) {
        continue;
      }
      if (auto m = F.P.in_interval(e.element)) {
        out.push_back(*m);
      }
    }
    return out;
  }

}  // namespace

TEST_CASE("membership certificates") {
  Fixture F("3,3,4");
  CHECK(F.el("").rank == 0);
  CHECK(F.el("ab").rank == 2);
  CHECK(F.el("ab").kind == Kind::rotation);
  CHECK(!F.P.in_interval(F.W.word_to_element("ba")).has_value());
  CHECK(F.el("abc").rank == 3);
  CHECK(F.el("aba").rank == 1);
  CHECK_THROWS_AS(F.el("ba"), Error);
  // (acb)^2 is a translation whose complement in w is a reflection, but no
  // reflection of W is perpendicular to its axis
  auto t = F.W.word_to_element("acbacb");
  CHECK(F.W.classify(t).kind == Kind::translation);
  CHECK(F.P.is_reflection(F.A.w() * F.W.inverse(t)));
  CHECK(!F.P.in_interval(t).has_value());
  CHECK(!F.P.in_interval(F.A.w() * F.W.inverse(t)).has_value());
}

// Brute force: u has reflection length two in W iff r u is a reflection for
// some reflection r; searched over a ball.
TEST_CASE("membership against factor search") {
  for (std::string labels : {"3,3,4", "2,3,7", "2,3,inf"}) {
    CAPTURE(labels);
    Fixture F(labels);
    auto    big = F.W.enumerate_ball(12);
    std::vector<GroupElement> refl;
    for (auto i : big.reflections()) {
      refl.push_back(big.entries()[i].element);
    }
    auto length_two = [&](GroupElement const& u) {
      for (auto const& r : refl) {
        if (F.P.is_reflection(r * u)) {
          return true;
        }
      }
      return false;
    };
    auto ball = F.W.enumerate_ball(7);
    int  members = 0, rejected = 0;
    for (auto const& e : ball.entries()) {
      int mr = e.element.moved_rank();
      if (mr == 2 && F.P.is_reflection(F.A.w() * F.W.inverse(e.element))) {
        bool brute = length_two(e.element);
        CHECK(F.P.in_interval(e.element).has_value() == brute);
        (brute ? members : rejected) += 1;
      }
      if (mr == 1) {
        bool brute = length_two(e.element * F.A.w());
        CHECK(F.P.in_interval(e.element).has_value() == brute);
      }
    }
    CHECK(members > 0);
    if (labels == "3,3,4") {
      CHECK(rejected > 0);
    }
    MESSAGE(labels << ": " << members << " rank two members, " << rejected << " rejected");
  }
}

TEST_CASE("order and complements") {
  Fixture F("3,3,4");
  auto    a = F.el("a"), ab = F.el("ab"), w = F.P.top();
  CHECK(F.P.leq(a, ab));
  CHECK(F.P.leq(ab, ab));
  CHECK(F.P.leq(ab, w));
  CHECK(!F.P.leq(F.el("c"), ab));
  CHECK(F.P.right_complement(a).g == F.W.word_to_element("bc"));
  CHECK(F.P.left_complement(w).g.is_identity());
  CHECK(F.P.right_complement(w).g.is_identity());
  for (char const* word : {"a", "ab", "bc", "b", "aba"}) {
    auto u = F.el(word);
    CHECK(F.P.right_complement(u).g == F.A.phi(F.P.left_complement(u).g));
  }
}

TEST_CASE("reflections below rotations and translations") {
  Fixture F("3,3,4");
  auto    below = F.P.reflections_below(F.el("ab"), 0);
  REQUIRE(below.size() == 3);
  std::vector<GroupElement> expect{F.W.word_to_element("a"), F.W.word_to_element("b"),
                                   F.W.word_to_element("aba")};
  for (auto const& r : expect) {
    CHECK(std::find(below.begin(), below.end(), r) != below.end());
  }
  // m(a,c) = 4 and abc (ac)^-1 = aba
  CHECK(F.P.reflections_below(F.el("ac"), 0).size() == 4);
  CHECK(!F.P.in_interval(F.W.word_to_element("ca")).has_value());

  Fixture G("2,3,7");
  // m(a,b) = 2: a right angle with exactly two reflections
  CHECK(G.P.reflections_below(G.el("ab"), 0).size() == 2);
  CHECK(G.P.reflections_below(G.el("ac"), 0).size() == 7);

  for (auto const& u : rank_two_members(F, 8)) {
    if (u.kind != Kind::translation) {
      continue;
    }
    auto seq = F.P.below(u);
    for (long k = -3; k <= 3; ++k) {
      CHECK(seq.at(k + 1) * seq.at(k) == u.g);
      CHECK(F.P.leq(F.P.member(seq.at(k)), u));
    }
  }
}

TEST_CASE("joins and meets") {
  Fixture F("3,3,4");
  auto    a = F.el("a"), b = F.el("b"), c = F.el("c");
  CHECK(F.P.join(a, b).g == F.W.word_to_element("ab"));
  CHECK(F.P.join(a, F.P.top()).rank == 3);
  CHECK(F.P.meet(F.el("ab"), F.el("bc")).g == b.g);
  CHECK(F.P.meet(F.el("ab"), F.P.identity()).rank == 0);
  CHECK(F.P.meet(F.el("ab"), F.el("ab")).g == F.el("ab").g);
  // join of the factors of a translation recovers it
  for (auto const& u : rank_two_members(F, 8)) {
    auto fac = F.P.increasing_factorization(u);
    REQUIRE(fac.size() == 2);
    auto j = F.P.join(F.P.member(fac[0]), F.P.member(fac[1]));
    CHECK(j.g == u.g);
  }
  (void) c;
}

TEST_CASE("increasing factorizations") {
  for (std::string labels : {"3,3,4", "2,3,7", "2,3,inf", "3,3,inf", "2,4,5"}) {
    CAPTURE(labels);
    Fixture F(labels);
    auto    fw = F.P.increasing_factorization(F.P.top());
    REQUIRE(fw.size() == 3);
    CHECK(fw[0] * fw[1] * fw[2] == F.A.w());
    for (auto const& u : rank_two_members(F, 6)) {
      auto fac = F.P.increasing_factorization(u);
      REQUIRE(fac.size() == 2);
      CHECK(fac[0] * fac[1] == u.g);
      CHECK(F.A.precedes(fac[0], fac[1]));
    }
  }
}
