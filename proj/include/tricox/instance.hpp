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

// A configured instance: labels, generator order and caps, with all the
// layers built on top of each other.

#ifndef TRICOX_INSTANCE_HPP_
#define TRICOX_INSTANCE_HPP_

#include <array>
#include <cstdint>
#include <memory>
#include <string>

#include "tricox/garside.hpp"
#include "tricox/morse.hpp"

namespace tricox {

  struct InstanceConfig {
    //! Labels (m_ab, m_bc, m_ac) for the letters as the user names them.
    std::string labels = "3,3,4";
    //! The Coxeter element is the product of the generators in this order.
    std::string   generator_order = "abc";
    std::size_t   ball_radius     = 6;
    long          window          = 3;
    int           float_digits    = 12;
    std::uint64_t seed            = 1;
  };

  //! Largest window J, overridable by TRICOX_MAX_WINDOW.
  long max_window();

  //! Seconds a suite may run, overridable by TRICOX_TIME_BUDGET.
  double time_budget();

  class Instance {
   public:
    explicit Instance(InstanceConfig config);
    ~Instance();

    Instance(Instance const&)            = delete;
    Instance& operator=(Instance const&) = delete;

    InstanceConfig const& config() const noexcept {
      return _config;
    }

    CoxeterSystem const& system() const noexcept {
      return *_W;
    }
    Axis const& axis() const noexcept {
      return *_A;
    }
    Lattice const& lattice() const noexcept {
      return *_P;
    }
    Garside const& garside() const noexcept {
      return *_G;
    }
    Morse const& morse() const noexcept {
      return *_M;
    }

    //! Letters renamed so that the Coxeter element becomes abc; capitals
    //! and other characters are kept.
    std::string to_internal(std::string const& word) const;
    std::string to_external(std::string const& word) const;

    //! Element of W of a lowercase word in the user's letters.
    GroupElement element(std::string const& word) const;

    //! Reduced word in the user's letters.
    std::string word(GroupElement const& g) const;

   private:
    InstanceConfig                 _config;
    std::array<char, 3>            _in{}, _out{};
    std::unique_ptr<CoxeterSystem> _W;
    std::unique_ptr<Axis>          _A;
    std::unique_ptr<Lattice>       _P;
    std::unique_ptr<Garside>       _G;
    std::unique_ptr<Morse>         _M;
  };

}  // namespace tricox

#endif  // TRICOX_INSTANCE_HPP_
