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
#include <cctype>
#include <random>
#include <string>
#include <vector>

#include "doctest.h"
#include "tricox/garside.hpp"

using namespace tricox;

namespace {

  struct Fixture {
    explicit Fixture(std::string const& labels)
        : W(CoxeterSpec::parse(labels)), A(W), P(A), G(P) {}
    CoxeterSystem W;
    Axis          A;
    Lattice       P;
    Garside       G;

    // image in W straight from the letters
    GroupElement image(std::string const& word) const {
      GroupElement g = W.identity();
      for (char ch : word) {
        g = g * W.generator(static_cast<std::size_t>(std::tolower(ch) - 'a'));
      }
      return g;
    }
  };

  std::string random_word(std::mt19937& rng, std::size_t len, bool positive = false) {
    static char const letters[] = "abcABC";
    std::uniform_int_distribution<int> pick(0, positive ? 2 : 5);
    std::string                        s;
    for (std::size_t i = 0; i < len; ++i) {
      s += letters[pick(rng)];
    }
    return s;
  }

  char inv(char ch) {
    return std::islower(ch) ? static_cast<char>(std::toupper(ch))
                            : static_cast<char>(std::tolower(ch));
  }

  // alternating word s t s ... of length m
  std::string alternating(char s, char t, int m) {
    std::string r;
    for (int i = 0; i < m; ++i) {
      r += i % 2 == 0 ? s : t;
    }
    return r;
  }

  // A random rewrite by a free insertion or a braid relation.
  std::string rewrite(std::mt19937& rng, CoxeterSpec const& spec, std::string word) {
    std::uniform_int_distribution<int> coin(0, 1);
    std::uniform_int_distribution<int> gen(0, 2);
    std::uniform_int_distribution<std::size_t> pos(0, word.size());
    std::size_t                        at = pos(rng);
    if (coin(rng) == 0) {
      char s = static_cast<char>('a' + gen(rng));
      if (coin(rng) == 0) {
        s = inv(s);
      }
      word.insert(at, std::string{s, inv(s)});
      return word;
    }
    int  i = gen(rng), j = (i + 1 + coin(rng)) % 3;
    char s = static_cast<char>('a' + i), t = static_cast<char>('a' + j);
    unsigned m = spec.m(static_cast<std::size_t>(i), static_cast<std::size_t>(j));
    if (m == infinity) {
      word.insert(at, std::string{s, inv(s)});
      return word;
    }
    // insert (s t s ...)(t s t ...)^-1
    std::string lhs = alternating(s, t, static_cast<int>(m)),
                rhs = alternating(t, s, static_cast<int>(m)), r = lhs;
    for (auto it = rhs.rbegin(); it != rhs.rend(); ++it) {
      r += inv(*it);
    }
    word.insert(at, r);
    return word;
  }

}  // namespace

TEST_CASE("letters and small words") {
  Fixture F("3,3,4");
  auto    a = F.G.from_word("a");
  REQUIRE(a.factors.size() == 1);
  CHECK(a.delta == 0);
  CHECK(a.factors[0].g == F.W.generator(0));
  CHECK(F.G.from_word("aA") == F.G.identity());
  CHECK(F.G.from_word("Aa") == F.G.identity());
  CHECK(F.G.from_word("abaBAB") == F.G.identity());
  CHECK(F.G.from_word("abc") == F.G.delta(1));
  CHECK(F.G.from_word("CBA") == F.G.delta(-1));
  CHECK(!F.G.word_problem("ab", "ba"));
  CHECK(F.G.word_problem("bcb", "cbc"));
  CHECK(F.G.word_problem("acac", "caca"));
  CHECK(!F.G.word_problem("aca", "cac"));
  CHECK_THROWS(F.G.from_word("abd"));

  auto n = F.G.normalize(0, {F.P.member(F.W.word_to_element("a")),
                             F.P.member(F.W.word_to_element("bc"))});
  CHECK(n == F.G.delta(1));
  auto aa = F.G.normalize(0, {F.P.member(F.W.generator(0)), F.P.member(F.W.generator(0))});
  CHECK(aa.factors.size() == 2);
  CHECK(F.G.is_left_weighted(aa));
}

TEST_CASE("relation-equivalent words share a normal form") {
  std::mt19937 rng(7);
  for (std::string labels : {"3,3,4", "2,3,7", "2,3,inf", "3,3,inf"}) {
    CAPTURE(labels);
    Fixture F(labels);
    int     pairs = labels == "3,3,4" ? 120 : 60;
    for (int k = 0; k < pairs; ++k) {
      std::string u = random_word(rng, 1 + k % 10), v = u;
      int         steps = 1 + k % 3;
      for (int i = 0; i < steps; ++i) {
        v = rewrite(rng, F.W.spec(), v);
      }
      CAPTURE(u);
      CAPTURE(v);
      auto nu = F.G.from_word(u), nv = F.G.from_word(v);
      CHECK(nu == nv);
      CHECK(F.G.is_left_weighted(nu));
      CHECK(F.G.project(nu) == F.image(u));
      CHECK(F.G.project(nv) == F.image(v));
    }
  }
}

TEST_CASE("inverses, positivity and idempotence") {
  std::mt19937 rng(11);
  Fixture      F("3,3,4");
  for (int k = 0; k < 100; ++k) {
    std::string u  = random_word(rng, 1 + k % 16);
    auto        nu = F.G.from_word(u);
    CAPTURE(u);
    CHECK(F.G.multiply(nu, F.G.invert(nu)) == F.G.identity());
    CHECK(F.G.multiply(F.G.invert(nu), nu) == F.G.identity());
    CHECK(F.G.normalize(nu.delta, nu.factors) == nu);
  }
  CHECK(F.G.multiply(F.G.delta(1), F.G.delta(-1)) == F.G.identity());
  for (int k = 0; k < 40; ++k) {
    std::size_t len = 1 + static_cast<std::size_t>(k) % 12;
    auto        nu  = F.G.from_word(random_word(rng, len, true));
    CHECK(nu.delta >= 0);
    long total = 3 * nu.delta;
    for (auto const& x : nu.factors) {
      total += x.rank;
    }
    CHECK(total == static_cast<long>(len));
  }
}

TEST_CASE("Delta conjugation is phi") {
  Fixture F("2,3,inf");
  auto    ball = F.W.enumerate_ball(4);
  int     seen = 0;
  for (auto const& e : ball.entries()) {
    auto u = F.P.in_interval(e.element);
    if (!u || u->rank == 0 || u->rank == 3) {
      continue;
    }
    NormalForm iu{0, {*u}}, itu{0, {F.G.tau(*u)}};
    CHECK(F.G.multiply(iu, F.G.delta(1)) == F.G.multiply(F.G.delta(1), itu));
    CHECK(F.G.tau(*u).rank == u->rank);
    ++seen;
  }
  CHECK(seen > 10);
  CHECK(F.G.tau(F.P.top()) == F.P.top());
}

TEST_CASE("center probe") {
  Fixture F("3,3,4");
  CHECK(!F.G.center_probe(F.P.member(F.W.generator(0)), 5).has_value());
  CHECK(!F.G.center_probe(F.P.member(F.W.word_to_element("ab")), 5).has_value());
  CHECK_THROWS(F.G.center_probe(F.P.top(), 5));
}
