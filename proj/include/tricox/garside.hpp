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

// The interval group of [1,w]: left-weighted normal forms and the word
// problem for the Artin group.

#ifndef TRICOX_GARSIDE_HPP_
#define TRICOX_GARSIDE_HPP_

#include <optional>
#include <string>
#include <vector>

#include "tricox/lattice.hpp"

namespace tricox {

  //! Delta^delta x_1 ... x_k with Delta = [w].
  struct NormalForm {
    long                         delta = 0;
    std::vector<IntervalElement> factors;

    bool operator==(NormalForm const& o) const {
      return delta == o.delta && factors == o.factors;
    }
    bool operator!=(NormalForm const& o) const {
      return !(*this == o);
    }
  };

  class Garside {
   public:
    explicit Garside(Lattice const& lattice) : _P(lattice), _W(lattice.system()) {}

    Lattice const& lattice() const noexcept {
      return _P;
    }

    NormalForm identity() const {
      return {};
    }
    NormalForm delta(long k) const {
      return {k, {}};
    }

    //! One letter: a, b, c or the inverses A, B, C.
    NormalForm letter(char ch) const;

    //! Parses letters a b c A B C; spaces and dots are ignored.
    NormalForm from_word(std::string const& word) const;

    NormalForm normalize(long delta, std::vector<IntervalElement> factors) const;
    NormalForm multiply(NormalForm const& x, NormalForm const& y) const;
    NormalForm invert(NormalForm const& x) const;

    //! Conjugation by Delta: [u] Delta = Delta [tau(u)].
    IntervalElement tau(IntervalElement const& u, long k = 1) const {
      return _P.phi(u, k);
    }

    bool word_problem(std::string const& lhs, std::string const& rhs) const;

    //! Image in W.
    GroupElement project(NormalForm const& x) const;

    bool is_left_weighted(NormalForm const& x) const;

    //! "D^k [u1|u2|...]" with reduced words for the factors.
    std::string to_string(NormalForm const& x) const;

    //! First n in 1..n_max with w^n u w^-n = u, if any.
    std::optional<long> center_probe(IntervalElement const& u, long n_max) const;

   private:
    // slides rank from y into x; false if the pair is already left-weighted
    bool slide(IntervalElement& x, IntervalElement& y) const;

    Lattice const&       _P;
    CoxeterSystem const& _W;
  };

}  // namespace tricox

#endif  // TRICOX_GARSIDE_HPP_
