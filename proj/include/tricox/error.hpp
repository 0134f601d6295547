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

#ifndef TRICOX_ERROR_HPP_
#define TRICOX_ERROR_HPP_

#include <stdexcept>
#include <string>

namespace tricox {

  //! Status values shared by the library, the C interface and the CLI exit
  //! status.
  enum class Status : int {
    ok                 = 0,
    property_falsified = 1,
    invalid_input      = 2,
    cap_exceeded       = 3,
    internal           = 4
  };

  class Error : public std::runtime_error {
   public:
    Error(Status s, std::string const& msg)
        : std::runtime_error(msg), _status(s) {}

    Status status() const noexcept {
      return _status;
    }

   private:
    Status _status;
  };

  [[noreturn]] inline void invalid_input(std::string const& msg) {
    throw Error(Status::invalid_input, msg);
  }

  [[noreturn]] inline void cap_exceeded(std::string const& msg) {
    throw Error(Status::cap_exceeded, msg);
  }

  [[noreturn]] inline void falsified(std::string const& msg) {
    throw Error(Status::property_falsified, msg);
  }

  [[noreturn]] inline void internal_error(std::string const& msg) {
    throw Error(Status::internal, msg);
  }

}  // namespace tricox

#endif  // TRICOX_ERROR_HPP_
