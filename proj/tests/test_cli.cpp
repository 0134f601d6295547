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
#include <sys/wait.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include "doctest.h"
#include "json.hpp"
#include "tricox/tricox.h"

using json = nlohmann::json;

namespace {

  struct Handle {
    explicit Handle(char const* config = nullptr) {
      rc = tricox_instance_create(config, &h);
    }
    ~Handle() {
      tricox_instance_destroy(h);
    }
    tricox_instance* h  = nullptr;
    int              rc = 0;
  };

  // Takes ownership of a library string.
  std::string take(char* s) {
    std::string out = s == nullptr ? "" : s;
    tricox_string_free(s);
    return out;
  }

  struct Run {
    int         code = -1;
    std::string out;
  };

  Run cli(std::string const& args) {
    char const* exe = std::getenv("TRICOX_CLI");
    REQUIRE(exe != nullptr);
    std::string cmd = std::string(exe) + " " + args + " 2>/dev/null";
    Run         r;
    FILE*       p = popen(cmd.c_str(), "r");
    REQUIRE(p != nullptr);
    char buf[4096];
    while (std::size_t n = std::fread(buf, 1, sizeof buf, p)) {
      r.out.append(buf, n);
    }
    int st = pclose(p);
    r.code = WIFEXITED(st) ? WEXITSTATUS(st) : -1;
    return r;
  }

}  // namespace

TEST_CASE("instance creation and config echo") {
  Handle def;
  REQUIRE(def.rc == TRICOX_OK);
  char* out = nullptr;
  REQUIRE(tricox_config(def.h, &out) == TRICOX_OK);
  auto c = json::parse(take(out));
  CHECK(c["labels"] == "3,3,4");
  CHECK(c["generator_order"] == "abc");

  Handle bad(R"({"labels": "2,3,6"})");
  CHECK(bad.rc == TRICOX_INVALID_INPUT);
  CHECK(bad.h == nullptr);
  CHECK(std::string(tricox_last_error()).find("hyperbolic") != std::string::npos);
  CHECK(Handle(R"({"colour": 1})").rc == TRICOX_INVALID_INPUT);
  CHECK(Handle(R"({"window": "x"})").rc == TRICOX_INVALID_INPUT);
  CHECK(Handle("not json").rc == TRICOX_INVALID_INPUT);
  CHECK(Handle(R"({"generator_order": "aab"})").rc == TRICOX_INVALID_INPUT);
  CHECK(Handle(R"({"window": 1000})").rc == TRICOX_CAP_EXCEEDED);
  CHECK(Handle(R"({"ball_radius": 1000})").rc == TRICOX_CAP_EXCEEDED);
  CHECK(tricox_info(nullptr, &out) == TRICOX_INVALID_INPUT);
  tricox_string_free(out);
}

TEST_CASE("queries through the C interface") {
  Handle H(R"({"labels": "3,3,4"})");
  REQUIRE(H.rc == TRICOX_OK);
  char* out = nullptr;

  REQUIRE(tricox_info(H.h, &out) == TRICOX_OK);
  auto info = json::parse(take(out));
  CHECK(info["coxeter_element"]["kind"] == "glide");
  CHECK(info["field"]["degree"] == 4);
  CHECK(info["config"]["labels"] == "3,3,4");
  CHECK(info["gram"].size() == 3);
  CHECK(info["gram"][0][0].size() == 4);

  REQUIRE(tricox_word_problem(H.h, "aba", "bab", &out) == TRICOX_OK);
  CHECK(json::parse(take(out))["equal"] == true);
  REQUIRE(tricox_word_problem(H.h, "abA", "abA", &out) == TRICOX_OK);
  CHECK(json::parse(take(out))["equal"] == true);
  REQUIRE(tricox_word_problem(H.h, "ab", "ba", &out) == TRICOX_OK);
  CHECK(json::parse(take(out))["equal"] == false);
  CHECK(tricox_word_problem(H.h, "abx", "ba", &out) == TRICOX_INVALID_INPUT);
  CHECK(json::parse(take(out))["status"] == "invalid_input");

  REQUIRE(tricox_normal_form(H.h, "abc", &out) == TRICOX_OK);
  auto nf = json::parse(take(out));
  CHECK(nf["delta_power"] == 1);
  CHECK(nf["factors"].empty());

  REQUIRE(tricox_join(H.h, "a", "b", &out) == TRICOX_OK);
  CHECK(json::parse(take(out))["result"]["word"] == "ab");
  REQUIRE(tricox_meet(H.h, "ab", "bc", &out) == TRICOX_OK);
  CHECK(json::parse(take(out))["result"]["word"] == "b");
  CHECK(tricox_join(H.h, "ba", "a", &out) == TRICOX_INVALID_INPUT);
  tricox_string_free(out);
  CHECK(tricox_join(H.h, "aB", "a", &out) == TRICOX_INVALID_INPUT);
  tricox_string_free(out);

  REQUIRE(tricox_reflections(H.h, 5, &out) == TRICOX_OK);
  auto refl = json::parse(take(out));
  CHECK(refl["count"] == refl["reflections"].size());
  CHECK(refl["reflections"][0]["tag"] == "vertical");
  CHECK(tricox_reflections(H.h, 1000, &out) == TRICOX_CAP_EXCEEDED);
  tricox_string_free(out);

  REQUIRE(tricox_components(H.h, 1, &out) == TRICOX_OK);
  auto comps = json::parse(take(out));
  CHECK(comps["count"] == comps["components"].size());
  CHECK(comps["components"][0]["type"] == "i");
  CHECK(tricox_components(H.h, 1000, &out) == TRICOX_CAP_EXCEEDED);
  tricox_string_free(out);

  REQUIRE(tricox_verify(H.h, "axis", &out) == TRICOX_OK);
  CHECK(json::parse(take(out))["passed"] == true);
  CHECK(tricox_verify(H.h, "nope", &out) == TRICOX_INVALID_INPUT);
  tricox_string_free(out);
}

TEST_CASE("determinism of JSON and SVG") {
  char const* config = R"({"labels": "2,3,inf", "seed": 5})";
  Handle      A(config), B(config);
  char *      sa = nullptr, *sb = nullptr, *ja = nullptr, *jb = nullptr;
  REQUIRE(tricox_render(A.h, "poincare", &sa, &ja) == TRICOX_OK);
  REQUIRE(tricox_render(B.h, "poincare", &sb, &jb) == TRICOX_OK);
  CHECK(take(sa) == take(sb));
  CHECK(take(ja) == take(jb));
  REQUIRE(tricox_verify(A.h, "field", &ja) == TRICOX_OK);
  REQUIRE(tricox_verify(B.h, "field", &jb) == TRICOX_OK);
  CHECK(take(ja) == take(jb));
  CHECK(tricox_render(A.h, "sphere", &sa, &ja) == TRICOX_INVALID_INPUT);
  tricox_string_free(sa);
  tricox_string_free(ja);
}

TEST_CASE("command line exit codes") {
  auto ok = cli("wp abA abA");
  CHECK(ok.code == 0);
  CHECK(json::parse(ok.out)["equal"] == true);
  CHECK(cli("--labels 3,3,4 wp aba bab").code == 0);
  CHECK(cli("--labels 2,3,6 info").code == 2);
  CHECK(cli("wp abd ab").code == 2);
  CHECK(cli("verify nope").code == 2);
  CHECK(cli("reflections --radius 1000").code == 3);
  CHECK(cli("components --window 1000").code == 3);
  auto info = cli("--labels 2,3,7 --generator-order bca info");
  CHECK(info.code == 0);
  auto j = json::parse(info.out);
  CHECK(j["config"]["generator_order"] == "bca");
  CHECK(j["coxeter_element"]["axial_factorization"].size() == 3);

  std::string svg = "tricox_cli_test.svg";
  auto        r   = cli("--labels 3,3,4 render --model klein --out " + svg);
  CHECK(r.code == 0);
  std::ifstream     f(svg);
  std::stringstream ss;
  ss << f.rdbuf();
  CHECK(ss.str().find("<svg") != std::string::npos);
  CHECK(json::parse(r.out)["lines"].get<int>() > 0);
  std::remove(svg.c_str());
}

TEST_CASE("time budget gives exit code 3") {
  setenv("TRICOX_TIME_BUDGET", "0", 1);
  CHECK(cli("verify field").code == 3);
  unsetenv("TRICOX_TIME_BUDGET");
}
