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

#include "tricox/garside.hpp"

#include <cctype>

#include "tricox/error.hpp"

namespace tricox {

  NormalForm Garside::letter(char ch) const {
    char lower = static_cast<char>(std::tolower(static_cast<unsigned char>(ch)));
    if (lower < 'a' || lower > 'c') {
      invalid_input(std::string("not a generator: ") + ch);
    }
    IntervalElement s = _P.wrap(_W.generator(static_cast<std::size_t>(lower - 'a')));
    if (ch == lower) {
      return {0, {s}};
    }
    return {-1, {_P.left_complement(s)}};
  }

  NormalForm Garside::from_word(std::string const& word) const {
    NormalForm x;
    for (char ch : word) {
      if (ch == ' ' || ch == '.') {
        continue;
      }
      x = multiply(x, letter(ch));
    }
    return x;
  }

  bool Garside::slide(IntervalElement& x, IntervalElement& y) const {
    IntervalElement m = _P.meet(_P.right_complement(x), y);
    if (m.rank == 0) {
      return false;
    }
    x = _P.wrap(x.g * m.g);
    y = _P.wrap(_W.inverse(m.g) * y.g);
    return true;
  }

  NormalForm Garside::normalize(long delta, std::vector<IntervalElement> f) const {
    bool changed = true;
    while (changed) {
      changed = false;
      for (std::size_t i = 0; i < f.size();) {
        if (f[i].rank == 0) {
          f.erase(f.begin() + static_cast<long>(i));
          continue;
        }
        if (f[i].rank == 3) {
          // x Delta = Delta tau(x)
          for (std::size_t j = 0; j < i; ++j) {
            f[j] = tau(f[j]);
          }
          ++delta;
          f.erase(f.begin() + static_cast<long>(i));
          changed = true;
          continue;
        }
        ++i;
      }
      for (std::size_t i = f.size(); i-- > 1;) {
        if (slide(f[i - 1], f[i])) {
          changed = true;
        }
      }
    }
    return {delta, std::move(f)};
  }

  NormalForm Garside::multiply(NormalForm const& x, NormalForm const& y) const {
    std::vector<IntervalElement> f;
    f.reserve(x.factors.size() + y.factors.size());
    for (auto const& u : x.factors) {
      f.push_back(tau(u, y.delta));
    }
    f.insert(f.end(), y.factors.begin(), y.factors.end());
    return normalize(x.delta + y.delta, std::move(f));
  }

  NormalForm Garside::invert(NormalForm const& x) const {
    // x_k^-1 ... x_1^-1 with x^-1 = Delta^-1 [w x^-1]
    long                         k = static_cast<long>(x.factors.size());
    std::vector<IntervalElement> f;
    f.reserve(x.factors.size());
    for (long j = 0; j < k; ++j) {
      auto const& u = x.factors[static_cast<std::size_t>(k - 1 - j)];
      f.push_back(tau(_P.left_complement(u), -(k - 1 - j) - x.delta));
    }
    return normalize(-k - x.delta, std::move(f));
  }

  bool Garside::word_problem(std::string const& lhs, std::string const& rhs) const {
    return from_word(lhs) == from_word(rhs);
  }

  GroupElement Garside::project(NormalForm const& x) const {
    GroupElement g = _P.axis().w_power(x.delta);
    for (auto const& u : x.factors) {
      g = g * u.g;
    }
    return g;
  }

  bool Garside::is_left_weighted(NormalForm const& x) const {
    for (std::size_t i = 0; i < x.factors.size(); ++i) {
      int r = x.factors[i].rank;
      if (r == 0 || r == 3) {
        return false;
      }
      if (i + 1 < x.factors.size()
          && _P.meet(_P.right_complement(x.factors[i]), x.factors[i + 1]).rank != 0) {
        return false;
      }
    }
    return true;
  }

  std::string Garside::to_string(NormalForm const& x) const {
    std::string s = "D^" + std::to_string(x.delta) + " [";
    for (std::size_t i = 0; i < x.factors.size(); ++i) {
      if (i != 0) {
        s += '|';
      }
      s += _W.reduced_word(x.factors[i].g);
    }
    return s + "]";
  }

  std::optional<long> Garside::center_probe(IntervalElement const& u, long n_max) const {
    if (u.rank == 0 || u.rank == 3) {
      invalid_input("center probe needs a proper element of [1,w]");
    }
    GroupElement c = u.g;
    for (long n = 1; n <= n_max; ++n) {
      c = _P.axis().phi_inverse(c);
      if (c == u.g) {
        return n;
      }
    }
    return std::nullopt;
  }

}  // namespace tricox
