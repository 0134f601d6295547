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

// One line per acceptance criterion; exit status 1 if any is red.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <regex>
#include <set>
#include <string>
#include <vector>

#include "tricox/render.hpp"
#include "tricox/suites.hpp"

using namespace tricox;

namespace {

  // pinned limits, seconds
  constexpr double representation_limit = 30;
  constexpr double lattice_limit        = 300;
  constexpr double morse_limit          = 120;
  constexpr double klein_radius         = 0.95;

  std::vector<std::string> const all_five{"3,3,4", "2,3,7", "2,4,5", "2,3,inf", "3,3,inf"};
  std::vector<std::string> const morse_pair{"3,3,4", "2,3,inf"};

  struct Verdict {
    bool        pass = true;
    std::string detail;

    void fail(std::string const& why) {
      if (pass) {
        detail.clear();
      }
      if (!detail.empty()) {
        detail += "; ";
      }
      detail += why;
      pass = false;
    }
    void add(std::string const& text) {
      if (pass) {
        detail += (detail.empty() ? "" : ", ") + text;
      }
    }
  };

  std::string secs(double s) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.1fs", s);
    return buf;
  }

  // Runs the suite on each instance; fails on any red item or slow run.
  Verdict suite_on(std::string const& suite, std::vector<std::string> const& labels,
                   double limit = 0) {
    Verdict v;
    for (auto const& l : labels) {
      InstanceConfig c;
      c.labels = l;
      try {
        auto        t0 = std::chrono::steady_clock::now();
        Instance    inst(c);
        SuiteReport r = run_suite(inst, suite);
        double      s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        for (auto const& i : r.items) {
          if (!i.passed) {
            v.fail("(" + l + ") " + i.name + ": " + i.detail + " " + i.counterexample);
          }
        }
        if (limit > 0 && s >= limit) {
          v.fail("(" + l + ") took " + secs(s));
        }
        v.add("(" + l + ") " + secs(s));
      } catch (Error const& e) {
        v.fail("(" + l + ") " + e.what());
      }
    }
    return v;
  }

  double klein_distance(CoxeterSystem const& W, Vec3 const& n) {
    Vec3 const& c  = W.basepoint();
    double      cn = W.form(c, n).to_double();
    double      cc = W.form(c, c).to_double();
    double      nn = W.form(n, n).to_double();
    return std::tanh(std::asinh(std::abs(cn) / std::sqrt(-cc * nn)));
  }

  Verdict figures() {
    Verdict v;
    for (auto const& l : morse_pair) {
      CoxeterSystem W(CoxeterSpec::parse(l));
      Axis          A(W);
      std::size_t   near = 0;
      auto          ball = W.enumerate_ball(14);
      for (auto i : ball.reflections()) {
        near += klein_distance(W, W.pole(ball.entries()[i].element)) < klein_radius ? 1 : 0;
      }
      for (auto model : {DiskModel::poincare, DiskModel::klein}) {
        RenderOptions o;
        o.model = model;
        auto   a = render(A, o), b = render(A, o);
        std::string tag = "(" + l + (model == DiskModel::klein ? " klein" : " poincare") + ") ";
        if (a.svg != b.svg || a.lines != b.lines) {
          v.fail(tag + "output differs between runs");
        }
        if (a.lines != near) {
          v.fail(tag + std::to_string(a.lines) + " lines, expected " + std::to_string(near));
        }
        if (a.svg.find("stroke-dasharray") == std::string::npos
            || a.svg.find("marker-end") == std::string::npos) {
          v.fail(tag + "axis is not dashed with an arrowhead");
        }
        std::set<std::string> fills;
        std::regex            fill("<circle[^>]*fill=\"(#[0-9a-f]{6})\"");
        for (auto it = std::sregex_iterator(a.svg.begin(), a.svg.end(), fill);
             it != std::sregex_iterator(); ++it) {
          fills.insert((*it)[1]);
        }
        if (fills.size() != 3) {
          v.fail(tag + std::to_string(fills.size()) + " vertex colours");
        }
        if (model == DiskModel::poincare) {
          v.add(tag + std::to_string(a.lines) + " lines, " + std::to_string(a.vertices)
                + " axial vertices");
        }
      }
    }
    return v;
  }

}  // namespace

int main() {
  struct Row {
    char const*             name;
    std::function<Verdict()> run;
  };
  std::vector<Row> rows{
      {"representation suite",
       [] {
         return suite_on("representation", all_five, representation_limit);
       }},
      {"axis suite",
       [] {
         return suite_on("axis", all_five);
       }},
      {"lattice suite",
       [] {
         return suite_on("lattice", all_five, lattice_limit);
       }},
      {"shellability suite",
       [] {
         return suite_on("shellability", all_five);
       }},
      {"geometry lemma suite",
       [] {
         return suite_on("fivelines", all_five);
       }},
      // the suite itself holds each word problem query under 5 s
      {"garside suite",
       [] {
         return suite_on("garside", all_five);
       }},
      {"morse suite",
       [] {
         return suite_on("morse", morse_pair, morse_limit);
       }},
      {"figure reproduction", figures},
  };
  int red = 0;
  for (auto const& r : rows) {
    Verdict v = r.run();
    std::printf("[PRIMARY] %-22s %s  %s\n", r.name, v.pass ? "PASS" : "FAIL", v.detail.c_str());
    std::fflush(stdout);
    red += v.pass ? 0 : 1;
  }
  std::printf("%d of %zu criteria pass\n", static_cast<int>(rows.size()) - red, rows.size());
  return red == 0 ? 0 : 1;
}
