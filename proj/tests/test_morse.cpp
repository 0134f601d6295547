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
#include <chrono>
#include <string>
#include <unordered_set>

#include "doctest.h"

#include "tricox/error.hpp"
#include "tricox/morse.hpp"

using namespace tricox;

namespace {

  struct Fixture {
    explicit Fixture(std::string const& labels)
        : W(CoxeterSpec::parse(labels)), A(W), P(A), M(P) {}
    CoxeterSystem W;
    Axis          A;
    Lattice       P;
    Morse         M;

    Cell cell(std::vector<char const*> words) {
      std::vector<GroupElement> f;
      for (auto w : words) {
        f.push_back(W.word_to_element(w));
      }
      return M.make_cell(f);
    }
  };

}  // namespace

TEST_CASE("cells, eta and faces") {
  Fixture F("3,3,4");
  CHECK(F.M.eta(F.cell({"abc"})) == 1);
  CHECK(F.M.eta(F.cell({"a"})) == 2);
  CHECK(F.M.eta(F.cell({})) == 1);
  CHECK(F.M.eta(F.cell({"a", "bc"})) == 2);
  CHECK(F.M.eta(F.cell({"a", "b"})) == 3);
  auto fs = F.M.faces(F.cell({"a", "bc"}));
  REQUIRE(fs.size() == 3);
  CHECK(fs[0] == F.cell({"bc"}));
  CHECK(fs[1] == F.cell({"abc"}));
  CHECK(fs[2] == F.cell({"a"}));
  // the two faces of a 1-cell agree
  auto f1 = F.M.faces(F.cell({"ab"}));
  CHECK(f1[0] == f1[1]);
  CHECK_THROWS_AS(F.cell({"b", "a"}), Error);
  CHECK_THROWS_AS(F.cell({"ab", "ab"}), Error);
  CHECK(F.M.to_string(F.cell({"a", "bc"})) == "[a|bc]");
}

TEST_CASE("fiber components are periodic and canonical") {
  Fixture F("3,3,4");
  auto    seeds = F.M.ball_seeds(3);
  for (auto const& s : seeds) {
    Placed const& pl = F.M.place(s);
    CAPTURE(F.M.to_string(s));
    CHECK(F.M.cell_at(pl.comp, pl.position) == s);
    CHECK(F.M.eta(s) == pl.comp.d);
    // a shifted cell lands in the same component
    for (long k : {-2L, 1L, 3L}) {
      Cell t = F.M.cell_at(pl.comp, pl.position + 2 * pl.comp.d * k);
      CHECK(F.M.place(t).comp.key == pl.comp.key);
      // the type i component is a closed loop of two cells
      long expect = pl.comp.d == 1 ? pl.position : pl.position + 2 * pl.comp.d * k;
      CHECK(F.M.place(t).position == expect);
    }
  }
}

TEST_CASE("classification is exhaustive and exclusive") {
 // non exceptional type iii components first appear around length 10
  for (std::string labels : {"3,3,4", "2,3,7", "2,3,inf", "3,3,inf", "2,4,5"}) {
    CAPTURE(labels);
    Fixture     F(labels);
    std::size_t radius = labels == "2,3,7" ? 8 : 14;
    int     counts[5] = {0, 0, 0, 0, 0};
    for (auto const& s : F.M.ball_seeds(radius)) {
      Placed const& pl = F.M.place(s);
      CHECK(F.M.matching_types(pl.comp) == 1);
      counts[static_cast<int>(pl.comp.type)] += 1;
    }
    CHECK(counts[0] > 0);
    CHECK(counts[1] > 0);
    CHECK(counts[2] > 0);
    CHECK(counts[3] > 0);
    if (radius == 14) {
      CHECK(counts[4] > 0);
    }
  }
}

// One ascent and two descents per period along a type v component.
TEST_CASE("type v order pattern") {
  for (std::string labels : {"3,3,4", "2,3,inf"}) {
    CAPTURE(labels);
    Fixture                         F(labels);
    std::unordered_set<std::string> seen;
    int                             checked = 0;
    for (auto const& s : F.M.translation_seeds(20)) {
      Component const& iii = F.M.place(s).comp;
      if (iii.exceptional) {
        continue;
      }
      auto edge = F.M.m_partner(F.M.cell_at(iii, F.M.critical_position(iii)));
      REQUIRE(edge.has_value());
      CHECK(edge->kind == MatchEdge::cross_fiber);
      Component const& comp = F.M.place(edge->upper).comp;
      REQUIRE(comp.type == ComponentType::v);
      if (!seen.insert(comp.key).second) {
        continue;
      }
      for (long i = -6; i < 6; i += 3) {
        int up = 0;
        for (long j = i; j < i + 3; ++j) {
          up += F.A.precedes(F.M.x(comp, j).g, F.M.x(comp, j + 1).g) ? 1 : 0;
        }
        CHECK(up == 1);
      }
      ++checked;
    }
    CHECK(checked >= 20);
  }
}

// a type iii component is exceptional iff it meets X''
TEST_CASE("exceptional components meet X''") {
  for (std::string labels : {"3,3,4", "2,4,5", "3,3,inf"}) {
    CAPTURE(labels);
    Fixture                         F(labels);
    std::unordered_set<std::string> seen;
    int                             plain = 0;
    for (auto const& s : F.M.translation_seeds(3)) {
      Component const& comp = F.M.place(s).comp;
      if (!seen.insert(comp.key).second) {
        continue;
      }
      bool meets = false;
      for (long p = -40; p <= 40 && !meets; ++p) {
        meets = F.M.in_X2(F.M.cell_at(comp, p));
      }
      CHECK(meets == comp.exceptional);
      plain += comp.exceptional ? 0 : 1;
    }
    CHECK(plain >= 3);
  }
}

TEST_CASE("membership in the subcomplexes") {
  Fixture F("3,3,4");
  auto    zero = F.cell({});
  CHECK(F.M.in_X2(zero));
  CHECK(F.M.in_X1(zero));
  CHECK(F.M.membership(zero, 2).k1 == Tri::yes);
  // ab fixes the vertex opposite c, a finite vertex for m(a,b) = 3
  CHECK(F.M.in_X1(F.cell({"ab"})));
  CHECK(F.M.in_X2(F.cell({"a", "b"})));
  CHECK(!F.M.m_partner(zero).has_value());
  Fixture G("2,3,inf");
  // a and c span an infinite dihedral group
  CHECK(G.M.in_X2(G.cell({"ac"})));
  CHECK(!G.M.in_X1(G.cell({"ac"})));
}

TEST_CASE("matching M on truncations") {
  for (std::string labels : {"3,3,4", "2,3,inf"}) {
    CAPTURE(labels);
    Fixture F(labels);
    auto    t0 = std::chrono::steady_clock::now();
    auto    T  = F.M.truncate(F.M.ball_seeds(14), 3);
    auto    C  = F.M.certify_M(T);
    double  s  = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    for (auto const& f : C.failures) {
      MESSAGE(f);
    }
    MESSAGE(labels << ": " << C.cells << " cells, " << C.off_K2 << " outside K'', " << C.core
                   << " core, " << C.boundary << " boundary, " << C.cross_edges
                   << " cross edges, reach " << C.max_reach << ", " << s << " s");
    CHECK(C.ok());
    CHECK(C.involutive);
    CHECK(C.covers);
    CHECK(C.acyclic);
    CHECK(C.omega_monotone);
    CHECK(C.omega_equal_on_pairs);
    CHECK(C.cross_drop);
    CHECK(C.critical == 0);
    CHECK(C.core > 0);
    CHECK(C.cross_edges > 0);
    CHECK(s < 120.0);
  }
}

TEST_CASE("matching N on truncations") {
  for (std::string labels : {"3,3,4", "2,3,inf"}) {
    CAPTURE(labels);
    Fixture F(labels);
    auto    T = F.M.truncate(F.M.ball_seeds(14), 3);
    auto    C = F.M.certify_N(T);
    for (auto const& f : C.failures) {
      MESSAGE(f);
    }
    MESSAGE(labels << ": domain " << C.domain << ", core " << C.core << ", boundary "
                   << C.boundary << ", unknown " << C.unknown << ", merges " << C.merges
                   << ", splits " << C.splits << ", neighbours " << C.neighbours);
    CHECK(C.ok());
    CHECK(C.involutive);
    CHECK(C.covers);
    CHECK(C.acyclic);
    CHECK(C.zero_cell_unmatched);
    CHECK(C.core > 0);
  }
}
