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

// Cells of the interval complex, fiber components and the Morse matchings
// M and N on finite truncations.

#ifndef TRICOX_MORSE_HPP_
#define TRICOX_MORSE_HPP_

#include <cstddef>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "tricox/lattice.hpp"

namespace tricox {

  //! A simplex [x_1|...|x_d] of the interval complex.
  struct Cell {
    std::vector<IntervalElement> factors;

    std::size_t dim() const noexcept {
      return factors.size();
    }
    bool operator==(Cell const& o) const {
      return factors == o.factors;
    }
    bool operator!=(Cell const& o) const {
      return !(*this == o);
    }
  };

  struct CellHash {
    std::size_t operator()(Cell const& c) const;
  };

  enum class ComponentType { i, ii, iii, iv, v };

  std::string to_string(ComponentType t);

  //! A fiber component, given by x_0 ... x_{d-1} of its defining sequence
  //! with x_{i+d} = phi(x_i). The base is canonical: its first entry is a
  //! reflection whose anchor on the axis lies in [x0, w x0).
  struct Component {
    int                          d = 1;
    std::vector<IntervalElement> base;
    ComponentType                type        = ComponentType::i;
    bool                         exceptional = false;
    std::string                  key;

    //! Cells of the K'' part: types i, ii, iv and exceptional iii.
    bool in_K2() const {
      return type == ComponentType::i || type == ComponentType::ii
             || type == ComponentType::iv
             || (type == ComponentType::iii && exceptional);
    }
  };

  //! A cell as a position of its component: 2i is [x_i|...|x_{i+d-1}],
  //! 2i+1 is [x_{i+1}|...|x_{i+d-1}].
  struct Placed {
    Component comp;
    long      position = 0;
  };

  enum class Tri { no, yes, unknown };

  struct Membership {
    bool x1 = false;  //!< X'
    bool x2 = false;  //!< X''
    Tri  k1 = Tri::unknown;
    bool k2 = false;
  };

  struct MatchEdge {
    enum Kind { within_component, cross_fiber, n_merge, n_split, n_neighbour };
    Cell lower, upper;
    Kind kind = within_component;
  };

  std::string to_string(MatchEdge::Kind k);

  //! Outcome of the checks of M on a truncation.
  struct MCertificate {
    std::size_t              cells = 0, off_K2 = 0, core = 0, boundary = 0;
    std::size_t              cross_edges = 0, critical = 0, special = 0;
    std::size_t              max_reach   = 0;
    bool                     involutive = true, covers = true, acyclic = true;
    bool                     omega_monotone = true, omega_equal_on_pairs = true;
    bool                     cross_drop = true, zero_cell_unmatched = true;
    std::vector<std::string> failures;

    bool ok() const {
      return failures.empty();
    }
  };

  struct NCertificate {
    std::size_t              cells = 0, domain = 0, core = 0, boundary = 0, unknown = 0;
    std::size_t              merges = 0, splits = 0, neighbours = 0;
    bool                     involutive = true, covers = true, acyclic = true;
    bool                     zero_cell_unmatched = true;
    std::vector<std::string> failures;

    bool ok() const {
      return failures.empty();
    }
  };

  //! Finite set of cells closed under faces.
  struct Truncation {
    long                                      window = 0;
    std::vector<Cell>                         cells;
    std::unordered_map<Cell, std::size_t, CellHash> index;

    bool contains(Cell const& c) const {
      return index.count(c) != 0;
    }
  };

  class Morse {
   public:
    explicit Morse(Lattice const& lattice);

    Lattice const& lattice() const noexcept {
      return _P;
    }

    //! Checks rank additivity and membership of the product.
    Cell make_cell(std::vector<GroupElement> const& factors) const;

    GroupElement product(Cell const& c) const;
    int          eta(Cell const& c) const;
    //! d_0, ..., d_k of a k-cell (the two faces of a 1-cell coincide).
    std::vector<Cell> faces(Cell const& c) const;

    //! x_i of the defining sequence.
    IntervalElement x(Component const& comp, long i) const;
    Cell            cell_at(Component const& comp, long position) const;

    //! Component and position of a cell. Results are cached.
    Placed const& place(Cell const& c) const;

    //! Number of the five cases satisfied; exactly one in a valid complex.
    int matching_types(Component const& comp) const;

    bool       in_X2(Cell const& c) const;
    bool       in_X1(Cell const& c) const;
    //! Scans up to window periods on each side for cells of X''.
    Tri        in_K1(Cell const& c, long window) const;
    Membership membership(Cell const& c, long window) const;

    //! Position of the critical cell of a type iii or v component.
    long critical_position(Component const& comp) const;

    //! The M-partner, if the cell lies outside K''.
    std::optional<MatchEdge> m_partner(Cell const& c) const;

    //! cosh^2 of the distance from the axis to the line of the left
    //! complement of the special translation of the component.
    Fe omega(Cell const& c) const;

    //! Depth of a cell with product w (1-based).
    std::size_t depth(Cell const& c) const;

    //! The involution mu; the cell must lie in K' and outside X''.
    MatchEdge n_partner(Cell const& c) const;

    //! Cells of the components met by the seeds, positions within window
    //! periods of the canonical base, closed under faces and M-partners of
    //! critical cells.
    Truncation truncate(std::vector<Cell> const& seeds, long window) const;

    //! Seeds from the members of [1,w] in a ball.
    std::vector<Cell> ball_seeds(std::size_t radius) const;

    //! Cells [t] of translations, grown from the translations of a small ball
    //! through the horizontal reflections r_k, |k| <= fan, below each t, until
    //! \p count non exceptional type iii components are found. Throws
    //! cap_exceeded after 50 * count components.
    std::vector<Cell> translation_seeds(std::size_t count, long fan = 3) const;

    MCertificate certify_M(Truncation const& T) const;
    NCertificate certify_N(Truncation const& T) const;

    std::string to_string(Cell const& c) const;

   private:
    Component  canonical(int d, std::vector<IntervalElement> raw, long& shift) const;
    void       classify(Component& comp) const;
    Vec3       anchor(GroupElement const& r) const;
    bool       fixes_vertex(GroupElement const& g, bool finite_only) const;

    Lattice const&                                  _P;
    Axis const&                                     _A;
    CoxeterSystem const&                            _W;
    mutable std::unordered_map<Cell, Placed, CellHash> _placed;
  };

}  // namespace tricox

#endif  // TRICOX_MORSE_HPP_
