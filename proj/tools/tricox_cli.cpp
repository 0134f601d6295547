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

// Command line front end. Talks to the library only through tricox.h.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "tricox/tricox.h"

namespace {

  struct Output {
    char* json = nullptr;
    char* svg  = nullptr;
    ~Output() {
      tricox_string_free(json);
      tricox_string_free(svg);
    }
  };

  int finish(int rc, Output const& out) {
    if (out.json != nullptr) {
      std::cout << out.json << '\n';
    }
    if (rc != TRICOX_OK) {
      std::cerr << "tricox: " << tricox_last_error() << '\n';
    }
    return rc;
  }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Dual braid presentations of rank three Coxeter groups"};
  app.require_subcommand(1);
  app.set_version_flag("--version", tricox_version());

  std::string labels = "3,3,4", order = "abc", config_file;
  std::size_t ball_radius = 6;
  long        window      = 3;
  int         digits      = 12;
  std::uint64_t seed      = 1;
  app.add_option("--labels", labels, "m_ab,m_bc,m_ac, use inf for infinity")
      ->capture_default_str();
  app.add_option("--generator-order", order, "Coxeter element as a permutation of abc")
      ->capture_default_str();
  app.add_option("--ball-radius", ball_radius, "ball radius for sampled checks")
      ->capture_default_str();
  app.add_option("--float-digits", digits, "significant digits in floating output")
      ->capture_default_str();
  app.add_option("--seed", seed, "seed for sampled suites")->capture_default_str();
  app.add_option("--config", config_file, "JSON config file; flags given here win");

  auto* info = app.add_subcommand("info", "field, Gram matrix and the class of w");

  std::string w1, w2;
  auto*       wp = app.add_subcommand("wp", "Artin word problem (capitals are inverses)");
  wp->add_option("W1", w1)->required();
  wp->add_option("W2", w2)->required();

  std::string nfw;
  auto*       nf = app.add_subcommand("nf", "Garside normal form");
  nf->add_option("W", nfw)->required();

  std::string u, v;
  auto*       join = app.add_subcommand("join", "join of two members of [1,w]");
  join->add_option("R1", u)->required();
  join->add_option("R2", v)->required();
  auto* meet = app.add_subcommand("meet", "meet of two members of [1,w]");
  meet->add_option("U", u)->required();
  meet->add_option("V", v)->required();

  unsigned radius = 6;
  auto*    refl   = app.add_subcommand("reflections", "reflections of a ball in axial order");
  refl->add_option("--radius", radius)->capture_default_str();

  auto* comps = app.add_subcommand("components", "fiber components in a window");
  comps->add_option("--window", window, "periods on each side")->capture_default_str();

  std::string suite;
  auto*       verify = app.add_subcommand("verify", "run a property suite");
  verify->add_option("SUITE", suite)
      ->required()
      ->check(CLI::IsMember({"field", "representation", "axis", "lattice", "shellability",
                             "fivelines", "garside", "morse"}));

  std::string model = "poincare", out_file;
  auto*       rend  = app.add_subcommand("render", "SVG of the arrangement and the axis");
  rend->add_option("--model", model)
      ->check(CLI::IsMember({"poincare", "klein"}))
      ->capture_default_str();
  rend->add_option("--out", out_file, "SVG file")->required();

  try {
    app.parse(argc, argv);
  } catch (CLI::ParseError const& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : TRICOX_INVALID_INPUT;
  }

  nlohmann::ordered_json config = nlohmann::ordered_json::object();
  if (!config_file.empty()) {
    std::ifstream in(config_file);
    if (!in) {
      std::cerr << "tricox: cannot read " << config_file << '\n';
      return TRICOX_INVALID_INPUT;
    }
    try {
      config = nlohmann::ordered_json::parse(in);
    } catch (nlohmann::json::exception const& e) {
      std::cerr << "tricox: " << config_file << ": " << e.what() << '\n';
      return TRICOX_INVALID_INPUT;
    }
  }
  auto given = [&](char const* flag) {
    return app.get_option(flag)->count() > 0;
  };
  auto set = [&](char const* flag, char const* key, auto const& value) {
    if (given(flag) || !config.contains(key)) {
      config[key] = value;
    }
  };
  set("--labels", "labels", labels);
  set("--generator-order", "generator_order", order);
  set("--ball-radius", "ball_radius", ball_radius);
  set("--float-digits", "float_digits", digits);
  set("--seed", "seed", seed);
  if ((comps->parsed() && comps->get_option("--window")->count() > 0)
      || !config.contains("window")) {
    config["window"] = window;
  }

  tricox_instance* inst = nullptr;
  Output           out;
  int              rc = tricox_instance_create(config.dump().c_str(), &inst);
  if (rc != TRICOX_OK) {
    nlohmann::ordered_json err{{"config", config},
                               {"status", rc == TRICOX_CAP_EXCEEDED ? "cap_exceeded"
                                                                    : "invalid_input"},
                               {"error", tricox_last_error()}};
    std::cout << err.dump(2) << '\n';
    std::cerr << "tricox: " << tricox_last_error() << '\n';
    return rc;
  }

  if (info->parsed()) {
    rc = tricox_info(inst, &out.json);
  } else if (wp->parsed()) {
    rc = tricox_word_problem(inst, w1.c_str(), w2.c_str(), &out.json);
  } else if (nf->parsed()) {
    rc = tricox_normal_form(inst, nfw.c_str(), &out.json);
  } else if (join->parsed()) {
    rc = tricox_join(inst, u.c_str(), v.c_str(), &out.json);
  } else if (meet->parsed()) {
    rc = tricox_meet(inst, u.c_str(), v.c_str(), &out.json);
  } else if (refl->parsed()) {
    rc = tricox_reflections(inst, radius, &out.json);
  } else if (comps->parsed()) {
    rc = tricox_components(inst, window, &out.json);
  } else if (verify->parsed()) {
    rc = tricox_verify(inst, suite.c_str(), &out.json);
  } else if (rend->parsed()) {
    rc = tricox_render(inst, model.c_str(), &out.svg, &out.json);
    if (rc == TRICOX_OK) {
      std::ofstream f(out_file, std::ios::binary);
      f << out.svg;
      if (!f) {
        std::cerr << "tricox: cannot write " << out_file << '\n';
        tricox_instance_destroy(inst);
        return TRICOX_INVALID_INPUT;
      }
      auto j   = nlohmann::ordered_json::parse(out.json);
      j["out"] = out_file;
      std::cout << j.dump(2) << '\n';
      tricox_instance_destroy(inst);
      return TRICOX_OK;
    }
  }
  rc = finish(rc, out);
  tricox_instance_destroy(inst);
  return rc;
}
