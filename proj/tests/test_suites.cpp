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
#include "tricox/suites.hpp"

using namespace tricox;

namespace {

  void run_all(InstanceConfig const& config) {
    Instance inst(config);
    for (auto const& name : suite_names()) {
      SuiteReport r = run_suite(inst, name);
      for (auto const& i : r.items) {
        CAPTURE(name);
        CAPTURE(i.name);
        CAPTURE(i.detail);
        CAPTURE(i.counterexample);
        CHECK(i.passed);
        MESSAGE(config.labels << " " << name << " / " << i.name << ": " << i.detail << " ("
                              << i.seconds << " s)");
      }
      CHECK(r.status() == Status::ok);
    }
  }

}  // namespace

TEST_CASE("all suites on (3,3,4)") {
  run_all(InstanceConfig{});
}

TEST_CASE("all suites on (2,3,inf)") {
  InstanceConfig c;
  c.labels = "2,3,inf";
  run_all(c);
}

TEST_CASE("unknown suite and report json") {
  Instance inst(InstanceConfig{});
  CHECK_THROWS_AS(run_suite(inst, "nope"), Error);
  SuiteReport r = run_suite(inst, "field");
  std::string j = r.to_json(inst.config());
  CHECK(j.find("\"suite\": \"field\"") != std::string::npos);
  CHECK(j.find("\"labels\"") != std::string::npos);
  REQUIRE(r.find("field axioms") != nullptr);
  CHECK(r.find("field axioms")->passed);
}
