#pragma once

#include <array>
#include <utility>

#include "commonpair/graph.hpp"
#include "commonpair/kernel.hpp"

namespace commonpair {

// One of the 32 rooted 4-vertex flags: roots 1,2,3 carry the row's fixed
// edge pattern (row i has exactly i-1 root edges), vertex 4 is the apex.
//
// Conventions, fixed across the whole library:
//   row 1: no root edges        row 2: {12}
//   row 3: {12,13}              row 4: {12,13,23}
//   apex adjacency subsets in order 1..8:
//     {}, {1}, {2}, {3}, {1,2}, {1,3}, {2,3}, {1,2,3}
struct Flag {
  int row = 1;   // 1..4
  int apex = 1;  // 1..8
  unsigned apex_mask() const;  // bits 0..2 = roots 1..3
  Graph graph() const;         // roots are vertices 1..3, apex is 4
};

Flag flag(int row, int apex);

// Root-pair edge mask for a row, over vertices 0,1,2.
std::uint64_t row_root_edges(int row);

// Glues two same-row flags along their roots. J_p keeps the two apexes
// non-adjacent; J_q is J_p plus the apex-apex edge. Both on 5 vertices.
std::pair<Graph, Graph> glue(const Flag& a, const Flag& b);

// aut(j)/120 if j is isomorphic to J_p or J_q of glue(a,b), else 0.
Rational coefficient(const Flag& a, const Flag& b, const Graph& j);

// All gluing coefficients, keyed by canonical form. For every (row,a,b)
// exactly two 5-vertex classes are hit, and they differ by one edge.
struct GluingTable {
  struct Cell {
    std::uint64_t canon_p = 0;
    std::uint64_t canon_q = 0;
    Rational coeff_p;
    Rational coeff_q;
  };
  std::array<std::array<std::array<Cell, 8>, 8>, 4> cells;  // [row-1][a-1][b-1]

  const Cell& cell(int row, int a, int b) const {
    return cells[row - 1][a - 1][b - 1];
  }
  Rational coefficient(int row, int a, int b, std::uint64_t canon) const;
};

const GluingTable& gluing_table();  // built once, cached

// Evaluates both routes of the flag-product identity on a graphon: the
// 3-rooted block integral of the flag product (with the zero-root-pattern
// branch handled by restriction) and the table contraction
// sum_s c(F_a,F_b,J_s) d(J_s,w). The two are always equal.
std::pair<Rational, Rational> product_integral_check(const Flag& a,
                                                     const Flag& b,
                                                     const StepKernel& w);

}  // namespace commonpair
