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

#include "tricox/instance.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>

#include "tricox/error.hpp"

namespace tricox {

  namespace {

    double env_double(char const* name, double fallback) {
      char const* v = std::getenv(name);
      if (v == nullptr || *v == '\0') {
        return fallback;
      }
      char*  end = nullptr;
      double x   = std::strtod(v, &end);
      return end == v ? fallback : x;
    }

    char map_letter(std::array<char, 3> const& table, char ch) {
      bool upper = std::isupper(static_cast<unsigned char>(ch)) != 0;
      char lower = static_cast<char>(std::tolower(static_cast<unsigned char>(ch)));
      if (lower < 'a' || lower > 'c') {
        return ch;
      }
      char m = table[static_cast<std::size_t>(lower - 'a')];
      return upper ? static_cast<char>(std::toupper(m)) : m;
    }

  }  // namespace

  long max_window() {
    return static_cast<long>(env_double("TRICOX_MAX_WINDOW", 8));
  }

  double time_budget() {
    return env_double("TRICOX_TIME_BUDGET", 600);
  }

  Instance::Instance(InstanceConfig config) : _config(std::move(config)) {
    std::string order = _config.generator_order;
    std::string sorted = order;
    std::sort(sorted.begin(), sorted.end());
    if (sorted != "abc") {
      invalid_input("generator order must be a permutation of abc, got '" + order + "'");
    }
    if (_config.window < 0 || _config.window > max_window()) {
      cap_exceeded("window " + std::to_string(_config.window) + " exceeds the cap "
                   + std::to_string(max_window()));
    }
    if (_config.ball_radius > max_ball_radius()) {
      cap_exceeded("ball radius " + std::to_string(_config.ball_radius) + " exceeds the cap "
                   + std::to_string(max_ball_radius()));
    }
    if (_config.float_digits < 1 || _config.float_digits > 17) {
      invalid_input("float digits must lie in 1..17");
    }
    // user letter order[i] becomes internal letter i
    for (std::size_t i = 0; i < 3; ++i) {
      _in[static_cast<std::size_t>(order[i] - 'a')] = static_cast<char>('a' + i);
      _out[i]                                        = order[i];
    }
    CoxeterSpec user = CoxeterSpec::parse(_config.labels);
    CoxeterSpec spec;
    auto        idx = [&](std::size_t i) {
      return static_cast<std::size_t>(order[i] - 'a');
    };
    spec.labels = {user.m(idx(0), idx(1)), user.m(idx(1), idx(2)), user.m(idx(0), idx(2))};
    _W = std::make_unique<CoxeterSystem>(spec);
    _A = std::make_unique<Axis>(*_W);
    _P = std::make_unique<Lattice>(*_A);
    _G = std::make_unique<Garside>(*_P);
    _M = std::make_unique<Morse>(*_P);
  }

  Instance::~Instance() = default;

  std::string Instance::to_internal(std::string const& word) const {
    std::string out = word;
    for (char& ch : out) {
      ch = map_letter(_in, ch);
    }
    return out;
  }

  std::string Instance::to_external(std::string const& word) const {
    std::string out = word;
    for (char& ch : out) {
      ch = map_letter(_out, ch);
    }
    return out;
  }

  GroupElement Instance::element(std::string const& word) const {
    for (char ch : word) {
      if (ch < 'a' || ch > 'c') {
        invalid_input(std::string("invalid letter '") + ch + "' in Coxeter word");
      }
    }
    return _W->word_to_element(to_internal(word));
  }

  std::string Instance::word(GroupElement const& g) const {
    return to_external(_W->reduced_word(g));
  }

}  // namespace tricox
