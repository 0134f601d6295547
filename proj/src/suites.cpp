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

#include "tricox/suites.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <functional>
#include <numbers>
#include <random>
#include <set>
#include <unordered_map>
#include <unordered_set>

#include "json_io.hpp"

namespace tricox {

  namespace {

    using Clock = std::chrono::steady_clock;

    double since(Clock::time_point t0) {
      return std::chrono::duration<double>(Clock::now() - t0).count();
    }

    // Records the first failure of an item.
    struct Check {
      SuiteItem& item;
      std::size_t failures = 0;

      bool operator()(bool ok, std::string const& what, json const& cex = json()) {
        if (!ok) {
          if (failures == 0) {
            item.detail         = what;
            item.counterexample = cex.is_null() ? "" : cex.dump();
          }
          ++failures;
          item.passed = false;
          item.status = Status::property_falsified;
        }
        return ok;
      }

      void note(std::string const& text) {
        if (item.passed) {
          item.detail = text;
        }
      }
    };

    class Runner {
     public:
      Runner(SuiteReport& r) : _r(r), _t0(Clock::now()) {}

      void item(std::string const& name, std::function<void(Check&)> const& fn) {
        SuiteItem it;
        it.name  = name;
        auto t0  = Clock::now();
        if (since(_t0) > time_budget()) {
          it.passed = false;
          it.status = Status::cap_exceeded;
          it.detail = "time budget exhausted before this item";
          _r.items.push_back(it);
          return;
        }
        try {
          Check c{it};
          fn(c);
        } catch (Error const& e) {
          it.passed = false;
          it.status = e.status();
          it.detail = e.what();
        }
        it.seconds = since(t0);
        _r.items.push_back(it);
      }

     private:
      SuiteReport&      _r;
      Clock::time_point _t0;
    };

    std::vector<GroupElement> ball_reflections(Ball const& ball) {
      std::vector<GroupElement> out;
      for (auto i : ball.reflections()) {
        out.push_back(ball.entries()[i].element);
      }
      return out;
    }

    // reflections of the ball lying in [1,w]
    std::vector<IntervalElement> member_reflections(Lattice const& P, Ball const& ball) {
      std::vector<IntervalElement> out;
      for (auto const& r : ball_reflections(ball)) {
        if (auto m = P.in_interval(r)) {
          out.push_back(*m);
        }
      }
      return out;
    }

    std::vector<IntervalElement> rank_two_members(Lattice const& P, Ball const& ball) {
      std::vector<IntervalElement> out;
      for (auto const& e : ball.entries()) {
        if (e.element.moved_rank() != 2) {
          continue;
        }
        if (auto m = P.in_interval(e.element)) {
          out.push_back(*m);
        }
      }
      return out;
    }

    // (positive, negative) inertia of a symmetric matrix by exact
    // congruence
    std::pair<int, int> inertia(Mat3 const& B) {
      std::vector<std::vector<Fe>> S(3, std::vector<Fe>(3));
      for (std::size_t i = 0; i < 3; ++i) {
        for (std::size_t j = 0; j < 3; ++j) {
          S[i][j] = B(i, j);
        }
      }
      int pos = 0, neg = 0;
      while (!S.empty()) {
        std::size_t n = S.size(), p = n;
        for (std::size_t i = 0; i < n && p == n; ++i) {
          if (!S[i][i].is_zero()) {
            p = i;
          }
        }
        if (p == n) {
          // all diagonal zero: e_i <- e_i + e_j for a nonzero S[i][j]
          for (std::size_t i = 0; i < n && p == n; ++i) {
            for (std::size_t j = 0; j < n && p == n; ++j) {
              if (i == j || S[i][j].is_zero()) {
                continue;
              }
              Fe sii = S[i][i] + S[i][j] + S[i][j] + S[j][j];
              for (std::size_t k = 0; k < n; ++k) {
                if (k != i) {
                  Fe v    = S[i][k] + S[j][k];
                  S[i][k] = v;
                  S[k][i] = v;
                }
              }
              S[i][i] = sii;
              p       = i;
            }
          }
          if (p == n) {
            break;
          }
        }
        Fe d = S[p][p];
        (d.sign() > 0 ? pos : neg) += 1;
        std::vector<std::vector<Fe>> T;
        for (std::size_t i = 0; i < n; ++i) {
          if (i == p) {
            continue;
          }
          std::vector<Fe> row;
          for (std::size_t j = 0; j < n; ++j) {
            if (j != p) {
              row.push_back(S[i][j] - S[i][p] * S[p][j] / d);
            }
          }
          T.push_back(row);
        }
        S = std::move(T);
      }
      return {pos, neg};
    }

    GroupElement power(GroupElement const& g, long k, CoxeterSystem const& W) {
      GroupElement out = W.identity();
      for (long i = 0; i < k; ++i) {
        out = out * g;
      }
      return out;
    }

    char inverse_letter(char ch) {
      return std::islower(static_cast<unsigned char>(ch))
                 ? static_cast<char>(std::toupper(static_cast<unsigned char>(ch)))
                 : static_cast<char>(std::tolower(static_cast<unsigned char>(ch)));
    }

    std::string inverse_word(std::string const& w) {
      std::string out;
      for (auto it = w.rbegin(); it != w.rend(); ++it) {
        out += inverse_letter(*it);
      }
      return out;
    }

    std::string random_word(std::mt19937_64& rng, std::size_t len) {
      static char const letters[] = "abcABC";
      std::uniform_int_distribution<int> pick(0, 5);
      std::string                        s;
      for (std::size_t i = 0; i < len; ++i) {
        s += letters[pick(rng)];
      }
      return s;
    }

    // insert s S or a relator (s t s ...)(t s t ...)^-1 at a random place
    std::string rewrite(std::mt19937_64& rng, CoxeterSpec const& spec, std::string word) {
      std::uniform_int_distribution<int>         coin(0, 1), gen(0, 2);
      std::uniform_int_distribution<std::size_t> pos(0, word.size());
      std::size_t                                at = pos(rng);
      int  i = gen(rng), j = (i + 1 + coin(rng)) % 3;
      char s = static_cast<char>('a' + i), t = static_cast<char>('a' + j);
      unsigned m = spec.m(static_cast<std::size_t>(i), static_cast<std::size_t>(j));
      if (coin(rng) == 0 || m == infinity) {
        if (coin(rng) == 0) {
          s = inverse_letter(s);
        }
        word.insert(at, std::string{s, inverse_letter(s)});
        return word;
      }
      std::string lhs, rhs;
      for (unsigned k = 0; k < m; ++k) {
        lhs += k % 2 == 0 ? s : t;
        rhs += k % 2 == 0 ? t : s;
      }
      word.insert(at, lhs + inverse_word(rhs));
      return word;
    }

    Fe random_fe(std::mt19937_64& rng, FieldSpec const* f) {
      std::uniform_int_distribution<int> num(-6, 6), den(1, 5);
      std::vector<Rational>              c;
      for (std::size_t k = 0; k < f->degree(); ++k) {
        c.emplace_back(num(rng), den(rng));
        c.back().canonicalize();
      }
      return Fe(f, c);
    }

    ////////////////////////////////////////////////////////////////////
    // suites
    ////////////////////////////////////////////////////////////////////

    void field_suite(Instance const& inst, Runner& run) {
      FieldSpec const* f = inst.system().field();
      run.item("minimal polynomial", [&](Check& check) {
        unsigned L = f->L();
        check(f->degree() == euler_phi(2 * L) / 2, "degree differs from phi(2L)/2",
              json{{"L", L}, {"degree", f->degree()}});
        double x = f->gamma_double(), v = 0;
        for (auto it = f->minpoly().rbegin(); it != f->minpoly().rend(); ++it) {
          v = v * x + it->get_d();
        }
        check(std::abs(v) < 1e-9, "generator is not a root of the minimal polynomial");
        check(std::abs(x - 2 * std::cos(std::numbers::pi / L)) < 1e-12,
              "generator differs from 2cos(pi/L)");
        if (f->degree() == 1) {
          // rational generator: the interval is the root itself
          check(f->isolating_lo() == f->isolating_hi()
                    && f->minpoly()[0] + f->isolating_lo() == 0,
                "rational generator is not the root of the minimal polynomial");
        } else {
          check(sturm_count(f->minpoly(), f->isolating_lo(), f->isolating_hi()) == 1,
                "isolating interval does not isolate one root");
        }
        check.note("minpoly " + f->minpoly_string());
      });
      std::mt19937_64 rng(inst.config().seed);
      run.item("field axioms", [&](Check& check) {
        for (int k = 0; k < 200; ++k) {
          Fe a = random_fe(rng, f), b = random_fe(rng, f), c = random_fe(rng, f);
          json cex{{"a", a.to_string()}, {"b", b.to_string()}, {"c", c.to_string()}};
          check((a + b) + c == a + (b + c), "addition is not associative", cex);
          check((a * b) * c == a * (b * c), "multiplication is not associative", cex);
          check(a * (b + c) == a * b + a * c, "distributivity fails", cex);
          if (!a.is_zero()) {
            check((a * a.inverse()).is_one(), "a * a^-1 != 1", cex);
          }
        }
        check.note("200 random triples");
      });
      run.item("sign", [&](Check& check) {
        for (int k = 0; k < 200; ++k) {
          Fe   a = random_fe(rng, f), b = random_fe(rng, f);
          json cex{{"a", a.to_string()}, {"b", b.to_string()}};
          check((a * b).sign() == a.sign() * b.sign(), "sign is not multiplicative", cex);
          double d = a.to_double();
          if (std::abs(d) > 1e-9) {
            check(a.sign() == (d > 0 ? 1 : -1), "sign disagrees with the numeric value", cex);
          }
        }
        check.note("200 random pairs");
      });
    }

    void representation_suite(Instance const& inst, Runner& run) {
      CoxeterSystem const& W = inst.system();
      run.item("Coxeter relations", [&](Check& check) {
        for (std::size_t s = 0; s < 3; ++s) {
          check((W.generator(s) * W.generator(s)).is_identity(), "generator is not an involution",
                json{{"generator", std::string(1, letter_name(s))}});
          for (std::size_t t = s + 1; t < 3; ++t) {
            GroupElement p = W.generator(s) * W.generator(t);
            unsigned     m = W.spec().m(s, t);
            json cex{{"pair", std::string{letter_name(s), letter_name(t)}}, {"m", m}};
            if (m == infinity) {
              check(W.classify(p).kind == Kind::parabolic, "st is not parabolic for m = inf",
                    cex);
              continue;
            }
            GroupElement q = W.identity();
            for (unsigned k = 1; k <= m; ++k) {
              q = q * p;
              check(q.is_identity() == (k == m), "(st)^k = 1 fails to hold exactly at m", cex);
            }
          }
        }
      });
      run.item("form preserved on the radius 6 ball", [&](Check& check) {
        auto ball = W.enumerate_ball(6);
        for (auto const& e : ball.entries()) {
          check(W.preserves_form(e.element), "M^T B M != B", json{{"word", e.word}});
        }
        check.note(std::to_string(ball.entries().size()) + " elements");
      });
      run.item("Gram signature", [&](Check& check) {
        auto [pos, neg] = inertia(W.gram());
        check(pos == 2 && neg == 1, "signature is not (2,1)", json{{"positive", pos}, {"negative", neg}});
      });
      run.item("reflections of the ball", [&](Check& check) {
        auto ball = W.enumerate_ball(6);
        for (auto const& r : ball_reflections(ball)) {
          Vec3 n = W.pole(r);
          check((r * r).is_identity() && W.form(n, n).sign() > 0,
                "reflection is not an involution with spacelike pole",
                json{{"word", W.reduced_word(r)}});
        }
        check.note(std::to_string(ball.reflections().size()) + " reflections");
      });
    }

    void axis_suite(Instance const& inst, Runner& run) {
      CoxeterSystem const& W = inst.system();
      Axis const&          A = inst.axis();
      run.item("w is a glide reflection", [&](Check& check) {
        check(W.classify(A.w()).kind == Kind::glide, "w is not a glide",
              json{{"kind", to_string(W.classify(A.w()).kind)}});
      });
      run.item("kernel of w + 1", [&](Check& check) {
        Mat3 M = A.w().matrix() + Mat3::identity(W.field());
        check(M.rank() == 2, "kernel of w + 1 is not one dimensional", json{{"rank", M.rank()}});
        check(A.w() * A.v() == -A.v(), "v is not in the kernel");
        check(W.form(A.v(), A.v()).sign() > 0, "kernel generator is not spacelike");
      });
      run.item("three walls cross (x0, w x0)", [&](Check& check) {
        auto cr = A.segment_crossings();
        check(cr.size() == 3, "segment does not cross three walls",
              json{{"count", cr.size()}});
        for (auto const& r : cr) {
          Vec3 n = W.pole(r);
          check(W.form(A.x0(), n).sign() * W.form(A.wx0(), n).sign() < 0,
                "a listed wall does not separate x0 and w x0",
                json{{"reflection", inst.word(r)}});
        }
      });
      run.item("axial factorization", [&](Check& check) {
        auto const& walls = A.base_chamber().walls;
        check(walls[0] * walls[1] * walls[2] == A.w(), "walls of the base chamber do not multiply to w");
        auto fac = inst.lattice().increasing_factorization(inst.lattice().top());
        check(fac.size() == 3 && fac[0] == walls[0] && fac[1] == walls[1] && fac[2] == walls[2],
              "increasing factorization of w differs from the base chamber walls");
        check.note(inst.word(walls[0]) + " | " + inst.word(walls[1]) + " | " + inst.word(walls[2]));
      });
      run.item("three axial vertex orbits", [&](Check& check) {
        long              J = inst.config().window;
        std::vector<Vec3> verts;
        std::unordered_set<Vec3, Vec3Hash> seen;
        for (auto const& ch : A.chambers_in_window(J)) {
          for (std::size_t i = 0; i < 3; ++i) {
            Vec3 p = ch.vertex(W, i);
            if (seen.insert(projective_normal(p)).second) {
              verts.push_back(p);
            }
          }
        }
        // union by explicit powers of w
        std::vector<std::size_t> parent(verts.size());
        for (std::size_t i = 0; i < verts.size(); ++i) {
          parent[i] = i;
        }
        std::function<std::size_t(std::size_t)> root = [&](std::size_t i) {
          return parent[i] == i ? i : parent[i] = root(parent[i]);
        };
        for (std::size_t i = 0; i < verts.size(); ++i) {
          Vec3 p = verts[i];
          for (long k = 1; k <= 2 * J + 2; ++k) {
            p = A.w() * p;
            for (std::size_t j = 0; j < verts.size(); ++j) {
              if (parallel(p, verts[j])) {
                parent[root(i)] = root(j);
              }
            }
          }
        }
        std::set<std::size_t> classes;
        for (std::size_t i = 0; i < verts.size(); ++i) {
          classes.insert(root(i));
        }
        check(classes.size() == 3, "axial vertices do not form three orbits",
              json{{"orbits", classes.size()}, {"vertices", verts.size()}});
        check.note(std::to_string(verts.size()) + " vertices in the window");
      });
    }

    void lattice_suite(Instance const& inst, Runner& run) {
      Lattice const&       P = inst.lattice();
      CoxeterSystem const& W = inst.system();
      auto                 refl = member_reflections(P, W.enumerate_ball(6));
      auto                 ups  = rank_two_members(P, W.enumerate_ball(10));
      // below[u][i]: refl[i] <= ups[u]
      std::vector<std::vector<char>> below(ups.size(), std::vector<char>(refl.size(), 0));
      for (std::size_t u = 0; u < ups.size(); ++u) {
        for (std::size_t i = 0; i < refl.size(); ++i) {
          below[u][i] = P.leq(refl[i], ups[u]) ? 1 : 0;
        }
      }
      struct Pair {
        std::size_t     i, j;
        IntervalElement join;
        std::vector<std::size_t> bounds;
      };
      std::vector<Pair> pairs;
      for (std::size_t i = 0; i < refl.size(); ++i) {
        for (std::size_t j = i + 1; j < refl.size(); ++j) {
          Pair p{i, j, P.join(refl[i], refl[j]), {}};
          for (std::size_t u = 0; u < ups.size(); ++u) {
            if (below[u][i] && below[u][j]) {
              p.bounds.push_back(u);
            }
          }
          pairs.push_back(std::move(p));
        }
      }
      auto pair_json = [&](Pair const& p) {
        return json{{"r1", inst.word(refl[p.i].g)},
                    {"r2", inst.word(refl[p.j].g)},
                    {"join", inst.word(p.join.g)}};
      };
      run.item("joins are upper bounds", [&](Check& check) {
        for (auto const& p : pairs) {
          check(P.leq(refl[p.i], p.join) && P.leq(refl[p.j], p.join) && p.join.rank >= 2,
                "join is not an upper bound", pair_json(p));
        }
        check.note(std::to_string(refl.size()) + " reflections, " + std::to_string(pairs.size())
                   + " pairs");
      });
      run.item("no bowties", [&](Check& check) {
        for (auto const& p : pairs) {
          if (p.bounds.size() >= 2) {
            json cex = pair_json(p);
            cex["u1"] = inst.word(ups[p.bounds[0]].g);
            cex["u2"] = inst.word(ups[p.bounds[1]].g);
            check(false, "two rank two upper bounds share two reflections", cex);
          }
        }
        check.note(std::to_string(ups.size()) + " rank two members in the radius 10 ball");
      });
      run.item("joins are minimal", [&](Check& check) {
        std::size_t rank2 = 0;
        for (auto const& p : pairs) {
          rank2 += p.join.rank == 2 ? 1 : 0;
          for (auto u : p.bounds) {
            check(p.join.rank == 2 && ups[u].g == p.join.g,
                  "an upper bound from the radius 10 ball lies below the join", pair_json(p));
          }
        }
        check.note(std::to_string(rank2) + " joins of rank two");
      });
    }

    void shellability_suite(Instance const& inst, Runner& run) {
      Lattice const&       P = inst.lattice();
      Axis const&          A = inst.axis();
      CoxeterSystem const& W = inst.system();
      run.item("rank two factorizations", [&](Check& check) {
        // rank two members of the ball, their complements' companions and
        // phi images
        std::vector<IntervalElement>       us;
        std::unordered_set<Mat3, Mat3Hash> seen;
        auto add = [&](IntervalElement const& u) {
          if (u.rank == 2 && seen.insert(u.g.matrix()).second) {
            us.push_back(u);
          }
        };
        auto ball = W.enumerate_ball(8);
        for (auto const& u : rank_two_members(P, ball)) {
          add(u);
        }
        for (auto const& r : member_reflections(P, ball)) {
          add(P.right_complement(r));
          add(P.left_complement(r));
        }
        std::size_t base = us.size();
        for (long k = 1; k <= 40 && us.size() < 150; ++k) {
          for (std::size_t i = 0; i < base; ++i) {
            add(P.phi(us[i], k));
            add(P.phi(us[i], -k));
          }
        }
        std::mt19937_64 rng(inst.config().seed);
        std::shuffle(us.begin(), us.end(), rng);
        check(us.size() >= 100, "fewer than 100 rank two members found",
              json{{"found", us.size()}});
        us.resize(std::min<std::size_t>(us.size(), 100));
        for (auto const& u : us) {
          auto fac = P.increasing_factorization(u);
          json cex{{"u", inst.word(u.g)}};
          std::size_t increasing = 0, all = 0;
          for (auto const& r1 : P.reflections_below(u, 4)) {
            GroupElement r2 = r1 * u.g;
            if (!P.is_reflection(r2)) {
              continue;
            }
            ++all;
            if (A.precedes(r1, r2)) {
              ++increasing;
              check(r1 == fac[0] && r2 == fac[1], "increasing factorization is not the reported one",
                    cex);
            }
            bool lex = fac[0] == r1 ? (fac[1] == r2 || A.precedes(fac[1], r2)) : A.precedes(fac[0], r1);
            check(lex, "increasing factorization is not lexicographically minimal", cex);
          }
          check(increasing == 1, "not exactly one increasing factorization", cex);
          check(all >= 2, "fewer than two factorizations generated", cex);
        }
        check.note(std::to_string(us.size()) + " sampled members");
      });
      run.item("factorizations of w", [&](Check& check) {
        auto refl = member_reflections(P, W.enumerate_ball(8));
        std::unordered_set<Mat3, Mat3Hash> in_ball;
        for (auto const& r : refl) {
          in_ball.insert(r.g.matrix());
        }
        std::size_t triples = 0, increasing = 0;
        auto        fac     = P.increasing_factorization(P.top());
        for (auto const& r1 : refl) {
          for (auto const& r2 : refl) {
            if (r1 == r2) {
              continue;
            }
            GroupElement r3 = r2.g * r1.g * A.w();
            if (!in_ball.count(r3.matrix())) {
              continue;
            }
            ++triples;
            if (A.precedes(r1.g, r2.g) && A.precedes(r2.g, r3)) {
              ++increasing;
              check(r1.g == fac[0] && r2.g == fac[1] && r3 == fac[2],
                    "an increasing triple differs from the increasing factorization",
                    json{{"triple", {inst.word(r1.g), inst.word(r2.g), inst.word(r3)}}});
            }
          }
        }
        check(increasing == 1, "w does not have exactly one increasing factorization",
              json{{"increasing", increasing}, {"triples", triples}});
        check.note(std::to_string(triples) + " reflection triples");
      });
    }

    void fivelines_suite(Instance const& inst, Runner& run) {
      Lattice const&       P = inst.lattice();
      Axis const&          A = inst.axis();
      CoxeterSystem const& W = inst.system();
      Morse const&         M = inst.morse();
      auto                 seeds = M.translation_seeds(20);
      run.item("five lines", [&](Check& check) {
        std::size_t certified = 0;
        for (auto const& s : seeds) {
          IntervalElement const& t   = s.factors[0];
          auto                   fac = P.increasing_factorization(t);
          if (A.is_vertical(fac[0]) || A.is_vertical(fac[1])) {
            continue;
          }
          GroupElement r  = P.left_complement(t).g;
          GroupElement rp = P.right_complement(t).g;
          json         cex{{"t", inst.word(t.g)}};
          std::vector<Vec3> poles{W.pole(rp), W.pole(fac[1]), A.v(), W.pole(fac[0]), W.pole(r)};
          std::vector<Fe>   tau;
          for (auto const& n : poles) {
            tau.push_back(P.axis_parameter(t, n));
          }
          for (std::size_t i = 0; i + 1 < tau.size(); ++i) {
            check(tau[i] < tau[i + 1], "lines are not met in the order r', r2, axis, r1, r", cex);
          }
          for (std::size_t i = 0; i < poles.size(); ++i) {
            for (std::size_t j = i + 1; j < poles.size(); ++j) {
              check(!W.is_timelike(W.bcross(poles[i], poles[j])), "two of the five lines meet", cex);
            }
          }
          // sides of the axis
          auto side = [&](Vec3 const& n) {
            Vec3 c = W.basepoint();
            Vec3 q = W.to_positive_sheet(c - n * (W.form(c, n) / W.form(n, n)));
            return W.form(q, A.v()).sign();
          };
          check(side(poles[1]) * side(poles[3]) < 0, "r1 and r2 lie on the same side of the axis",
                cex);
          ++certified;
        }
        check(certified >= 20, "fewer than 20 translations with horizontal factors",
              json{{"certified", certified}});
        check.note(std::to_string(certified) + " translations");
      });
      run.item("type v order pattern", [&](Check& check) {
        std::unordered_set<std::string> seen;
        for (auto const& s : seeds) {
          Component const& iii = M.place(s).comp;
          if (iii.type != ComponentType::iii || iii.exceptional) {
            continue;
          }
          auto edge = M.m_partner(M.cell_at(iii, M.critical_position(iii)));
          Component const& v = M.place(edge->upper).comp;
          if (v.type != ComponentType::v || !seen.insert(v.key).second) {
            continue;
          }
          for (long i = -3 * inst.config().window; i < 3 * inst.config().window; i += 3) {
            int up = 0;
            for (long j = i; j < i + 3; ++j) {
              up += A.precedes(M.x(v, j).g, M.x(v, j + 1).g) ? 1 : 0;
            }
            check(up == 1, "a period has other than one ascent",
                  json{{"cell", inst.to_external(M.to_string(edge->upper))}, {"ascents", up}});
          }
        }
        check(seen.size() >= 20, "fewer than 20 type v components", json{{"found", seen.size()}});
        check.note(std::to_string(seen.size()) + " components");
      });
      run.item("phi and the axial order", [&](Check& check) {
        auto refl     = member_reflections(P, W.enumerate_ball(8));
        auto smallest = A.segment_crossings();
        std::vector<IntervalElement> horiz;
        for (auto const& r : refl) {
          json cex{{"r", inst.word(r.g)}};
          bool up = A.precedes(r.g, A.phi(r.g));
          if (A.is_vertical(r.g)) {
            bool small = std::find(smallest.begin(), smallest.end(), r.g) != smallest.end();
            check(up == small, "phi(r) > r fails to single out the three smallest vertical reflections", cex);
          } else {
            check(up, "phi(r) does not follow a horizontal r", cex);
            horiz.push_back(r);
          }
          if (A.is_vertical(r.g)
              && std::find(smallest.begin(), smallest.end(), r.g) == smallest.end()) {
            for (auto const& s : smallest) {
              check(A.precedes(s, r.g), "a segment crossing is not among the smallest", cex);
            }
          }
        }
        for (std::size_t i = 0; i < horiz.size(); ++i) {
          for (std::size_t j = 0; j < horiz.size(); ++j) {
            if (i == j) {
              continue;
            }
            bool a = A.precedes(horiz[i].g, horiz[j].g);
            bool b = A.precedes(A.phi(horiz[i].g), A.phi(horiz[j].g));
            check(a == b, "phi does not preserve the order of horizontal reflections",
                  json{{"r1", inst.word(horiz[i].g)}, {"r2", inst.word(horiz[j].g)}});
          }
        }
        check.note(std::to_string(refl.size()) + " reflections, " + std::to_string(horiz.size())
                   + " horizontal");
      });
    }

    void garside_suite(Instance const& inst, Runner& run) {
      Garside const&       G = inst.garside();
      Lattice const&       P = inst.lattice();
      CoxeterSystem const& W = inst.system();
      std::mt19937_64      rng(inst.config().seed);
      run.item("relation equivalent words", [&](Check& check) {
        for (int k = 0; k < 300; ++k) {
          std::string u = random_word(rng, 1 + k % 12), v = u;
          for (int i = 0; i <= k % 3; ++i) {
            v = rewrite(rng, W.spec(), v);
          }
          check(G.from_word(u) == G.from_word(v), "equivalent words have different normal forms",
                json{{"u", inst.to_external(u)}, {"v", inst.to_external(v)}});
        }
        check.note("300 pairs");
      });
      run.item("inverses", [&](Check& check) {
        for (int k = 0; k < 200; ++k) {
          std::string u = random_word(rng, 1 + k % 16);
          NormalForm  x = G.from_word(u);
          json        cex{{"word", inst.to_external(u)}};
          check(G.multiply(x, G.invert(x)) == G.identity(), "x x^-1 is not the identity", cex);
          check(G.from_word(u + inverse_word(u)) == G.identity(), "word times inverse word is not the identity", cex);
        }
        check.note("200 words");
      });
      run.item("Delta conjugation", [&](Check& check) {
        auto        ball = W.enumerate_ball(6);
        std::size_t n    = 0;
        for (auto const& e : ball.entries()) {
          auto u = P.in_interval(e.element);
          if (!u) {
            continue;
          }
          ++n;
          NormalForm lhs = G.multiply(G.normalize(0, {*u}), G.delta(1));
          NormalForm rhs = G.multiply(G.delta(1), G.normalize(0, {G.tau(*u)}));
          check(lhs == rhs, "u Delta != Delta phi(u)", json{{"u", inst.word(u->g)}});
        }
        check.note(std::to_string(n) + " interval elements");
      });
      run.item("word problem on length 64", [&](Check& check) {
        double worst = 0;
        for (int k = 0; k < 10; ++k) {
          std::string u = random_word(rng, 52), v = u;
          while (true) {
            std::string next = rewrite(rng, W.spec(), v);
            if (next.size() > 64) {
              break;
            }
            v = next;
          }
          std::string other = random_word(rng, 64);
          for (auto const& rhs : {v, other}) {
            auto t0 = Clock::now();
            bool eq = G.word_problem(u, rhs);
            double s = since(t0);
            worst    = std::max(worst, s);
            if (&rhs == &v || rhs == v) {
              check(eq, "equivalent words reported different", json{{"u", inst.to_external(u)}, {"v", inst.to_external(rhs)}});
            }
            check(s < 5.0, "word problem took 5 s or more",
                  json{{"u", inst.to_external(u)}, {"v", inst.to_external(rhs)}, {"seconds", s}});
          }
        }
        char buf[64];
        std::snprintf(buf, sizeof buf, "20 queries, slowest %.3f s", worst);
        check.note(buf);
      });
    }

    void morse_suite(Instance const& inst, Runner& run) {
      Morse const& M      = inst.morse();
      std::size_t  radius = std::min<std::size_t>(14, max_ball_radius());
      auto         seeds  = M.ball_seeds(radius);
      Truncation   T      = M.truncate(seeds, inst.config().window);
      run.item("classification", [&](Check& check) {
        std::unordered_set<std::string> seen;
        std::array<std::size_t, 5>      count{};
        for (auto const& c : T.cells) {
          Component const& comp = M.place(c).comp;
          if (!seen.insert(comp.key).second) {
            continue;
          }
          int k = M.matching_types(comp);
          check(k == 1, "a component matches other than one case",
                json{{"cell", inst.to_external(M.to_string(c))}, {"cases", k}});
          ++count[static_cast<std::size_t>(comp.type)];
        }
        check.note(std::to_string(seen.size()) + " components: i " + std::to_string(count[0])
                   + ", ii " + std::to_string(count[1]) + ", iii " + std::to_string(count[2])
                   + ", iv " + std::to_string(count[3]) + ", v " + std::to_string(count[4]));
      });
      run.item("matching M", [&](Check& check) {
        MCertificate C = M.certify_M(T);
        for (auto const& f : C.failures) {
          check(false, f);
        }
        check(C.critical == 0, "critical cells outside K''");
        check(C.cross_edges > 0, "no cross fiber edge in the truncation");
        check.note(std::to_string(C.cells) + " cells, " + std::to_string(C.core) + " core, "
                   + std::to_string(C.boundary) + " boundary, " + std::to_string(C.cross_edges)
                   + " cross edges, reach " + std::to_string(C.max_reach));
      });
      run.item("matching N", [&](Check& check) {
        NCertificate C = M.certify_N(T);
        for (auto const& f : C.failures) {
          check(false, f);
        }
        check(C.core > 0, "empty N core");
        check.note(std::to_string(C.domain) + " cells in K' \\ X'', " + std::to_string(C.core)
                   + " core, " + std::to_string(C.boundary) + " boundary, "
                   + std::to_string(C.unknown) + " undecided");
      });
      run.item("0-cell unmatched", [&](Check& check) {
        check(!M.m_partner(Cell{}).has_value(), "the 0-cell has an M partner");
        check(M.in_X2(Cell{}), "the 0-cell is outside X''");
      });
    }

  }  // namespace

  bool SuiteReport::passed() const {
    return std::all_of(items.begin(), items.end(), [](SuiteItem const& i) {
      return i.passed;
    });
  }

  Status SuiteReport::status() const {
    Status s = Status::ok;
    for (auto const& i : items) {
      if (i.passed) {
        continue;
      }
      if (i.status == Status::property_falsified) {
        return Status::property_falsified;
      }
      if (s == Status::ok || i.status == Status::internal) {
        s = i.status;
      }
    }
    return s;
  }

  SuiteItem const* SuiteReport::find(std::string const& item) const {
    for (auto const& i : items) {
      if (i.name == item) {
        return &i;
      }
    }
    return nullptr;
  }

  std::string SuiteReport::to_json(InstanceConfig const& config) const {
    json j{{"config", tricox::to_json(config)}, {"suite", suite}, {"passed", passed()},
           {"status", status_name(status())}};
    json arr = json::array();
    for (auto const& i : items) {
      json e{{"name", i.name}, {"passed", i.passed}, {"detail", i.detail}};
      if (!i.passed) {
        e["status"]         = status_name(i.status);
        e["counterexample"] = i.counterexample.empty() ? json() : json::parse(i.counterexample);
      }
      arr.push_back(e);
    }
    j["items"] = arr;
    return j.dump(2);
  }

  std::vector<std::string> const& suite_names() {
    static std::vector<std::string> const names{"field",        "representation", "axis",
                                                "lattice",      "shellability",   "fivelines",
                                                "garside",      "morse"};
    return names;
  }

  SuiteReport run_suite(Instance const& inst, std::string const& name) {
    static std::unordered_map<std::string, void (*)(Instance const&, Runner&)> const table{
        {"field", field_suite},           {"representation", representation_suite},
        {"axis", axis_suite},             {"lattice", lattice_suite},
        {"shellability", shellability_suite}, {"fivelines", fivelines_suite},
        {"garside", garside_suite},       {"morse", morse_suite}};
    auto it = table.find(name);
    if (it == table.end()) {
      invalid_input("unknown suite '" + name + "'");
    }
    SuiteReport r;
    r.suite = name;
    auto   t0 = Clock::now();
    Runner run(r);
    it->second(inst, run);
    r.seconds = since(t0);
    return r;
  }

}  // namespace tricox
