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

// Property suites: each runs a batch of checks on one instance and reports
// pass or fail per item, with a counterexample on failure.

#ifndef TRICOX_SUITES_HPP_
#define TRICOX_SUITES_HPP_

#include <string>
#include <vector>

#include "tricox/error.hpp"
#include "tricox/instance.hpp"

namespace tricox {

  struct SuiteItem {
    std::string name;
    bool        passed = true;
    Status      status = Status::ok;
    std::string detail;
    //! JSON text, empty when passed.
    std::string counterexample;
    double      seconds = 0;
  };

  struct SuiteReport {
    std::string            suite;
    std::vector<SuiteItem> items;
    double                 seconds = 0;

    bool passed() const;

    //! property_falsified wins over cap_exceeded, which wins over ok.
    Status status() const;

    SuiteItem const* find(std::string const& item) const;

    std::string to_json(InstanceConfig const& config) const;
  };

  //! field, representation, axis, lattice, shellability, fivelines,
  //! garside, morse.
  std::vector<std::string> const& suite_names();

  SuiteReport run_suite(Instance const& inst, std::string const& name);

}  // namespace tricox

#endif  // TRICOX_SUITES_HPP_
