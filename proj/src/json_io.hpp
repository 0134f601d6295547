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

// JSON encoders shared by the suites and the C interface.

#ifndef TRICOX_SRC_JSON_IO_HPP_
#define TRICOX_SRC_JSON_IO_HPP_

#include "json.hpp"

#include "tricox/error.hpp"
#include "tricox/instance.hpp"

namespace tricox {

  using json = nlohmann::ordered_json;

  inline json to_json(Fe const& x) {
    return x.coeff_strings();
  }

  //! Row-major matrix of coefficient vectors.
  inline json to_json(Mat3 const& m) {
    json rows = json::array();
    for (std::size_t i = 0; i < 3; ++i) {
      json row = json::array();
      for (std::size_t j = 0; j < 3; ++j) {
        row.push_back(to_json(m(i, j)));
      }
      rows.push_back(row);
    }
    return rows;
  }

  inline json to_json(InstanceConfig const& c) {
    return json{{"labels", c.labels},           {"generator_order", c.generator_order},
                {"ball_radius", c.ball_radius}, {"window", c.window},
                {"float_digits", c.float_digits}, {"seed", c.seed}};
  }

  inline char const* status_name(Status s) {
    switch (s) {
      case Status::ok:
        return "ok";
      case Status::property_falsified:
        return "property_falsified";
      case Status::invalid_input:
        return "invalid_input";
      case Status::cap_exceeded:
        return "cap_exceeded";
      case Status::internal:
        return "internal_error";
    }
    return "unknown";
  }

}  // namespace tricox

#endif  // TRICOX_SRC_JSON_IO_HPP_
