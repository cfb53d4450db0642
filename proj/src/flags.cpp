#include "commonpair/flags.hpp"

namespace commonpair {

namespace {

// Apex adjacency subsets in the fixed order; bit j-1 stands for root j.
constexpr unsigned kApexSubsets[8] = {0b000, 0b001, 0b010, 0b100,
                                      0b011, 0b101, 0b110, 0b111};

void check_flag_index(int row, int apex) {
  if (row < 1 || row > 4 || apex < 1 || apex > 8) {
    throw DomainError("flag index out of range: need 1 <= i <= 4, 1 <= a <= 8");
  }
}

}  // namespace

unsigned Flag::apex_mask() const { return kApexSubsets[apex - 1]; }

Graph Flag::graph() const {
  Graph g{4, row_root_edges(row)};
  const unsigned mask = apex_mask();
  for (int j = 0; j < 3; ++j) {
    if ((mask >> j) & 1) g.edges |= 1ull << Graph::pair_index(j, 3);
  }
  return g;
}

Flag flag(int row, int apex) {
  check_flag_index(row, apex);
  return Flag{row, apex};
}

std::uint64_t row_root_edges(int row) {
  check_flag_index(row, 1);
  std::uint64_t mask = 0;
  if (row >= 2) mask |= 1ull << Graph::pair_index(0, 1);
  if (row >= 3) mask |= 1ull << Graph::pair_index(0, 2);
  if (row >= 4) mask |= 1ull << Graph::pair_index(1, 2);
  return mask;
}

std::pair<Graph, Graph> glue(const Flag& a, const Flag& b) {
  check_flag_index(a.row, a.apex);
  check_flag_index(b.row, b.apex);
  if (a.row != b.row) {
    throw DomainError("glue requires flags from the same row");
  }
  // Roots are vertices 0,1,2; the two apexes are 3 and 4.
  Graph jp{5, row_root_edges(a.row)};
  for (int j = 0; j < 3; ++j) {
    if ((a.apex_mask() >> j) & 1) jp.edges |= 1ull << Graph::pair_index(j, 3);
    if ((b.apex_mask() >> j) & 1) jp.edges |= 1ull << Graph::pair_index(j, 4);
  }
  Graph jq = jp;
  jq.edges |= 1ull << Graph::pair_index(3, 4);
  return {jp, jq};
}

Rational coefficient(const Flag& a, const Flag& b, const Graph& j) {
  if (j.n != 5) throw DomainError("gluing coefficients live on 5-vertex graphs");
  const auto [jp, jq] = glue(a, b);
  const std::uint64_t canon = canonical_mask(5, j.edges);
  if (canon != canonical_mask(5, jp.edges) &&
      canon != canonical_mask(5, jq.edges)) {
    return 0;
  }
  return Rational(aut_count(j), 120);
}

Rational GluingTable::coefficient(int row, int a, int b,
                                  std::uint64_t canon) const {
  const Cell& c = cell(row, a, b);
  if (canon == c.canon_p) return c.coeff_p;
  if (canon == c.canon_q) return c.coeff_q;
  return 0;
}

const GluingTable& gluing_table() {
  static const GluingTable table = [] {
    GluingTable t;
    for (int row = 1; row <= 4; ++row)
      for (int a = 1; a <= 8; ++a)
        for (int b = 1; b <= 8; ++b) {
          const auto [jp, jq] = glue(flag(row, a), flag(row, b));
          GluingTable::Cell cell;
          cell.canon_p = canonical_mask(5, jp.edges);
          cell.canon_q = canonical_mask(5, jq.edges);
          cell.coeff_p = Rational(aut_count(jp), 120);
          cell.coeff_q = Rational(aut_count(jq), 120);
          t.cells[row - 1][a - 1][b - 1] = cell;
        }
    return t;
  }();
  return table;
}

std::pair<Rational, Rational> product_integral_check(const Flag& a,
                                                     const Flag& b,
                                                     const StepKernel& w) {
  if (a.row != b.row) throw DomainError("flag product requires matching rows");
  if (!w.is_graphon()) throw DomainError("flag products are taken in graphons");
  const int m = w.block_count();
  const std::uint64_t roots = row_root_edges(a.row);

  // Apex factor integrated over the fourth vertex, as a function of the
  // three root blocks.
  auto apex_factor = [&](const Flag& f, const int* blocks) {
    Rational sum = 0;
    for (int b4 = 0; b4 < m; ++b4) {
      if (w.masses[b4] == 0) continue;
      Rational term = w.masses[b4];
      for (int j = 0; j < 3 && term != 0; ++j) {
        if ((f.apex_mask() >> j) & 1) {
          term *= w.value(blocks[j], b4);
        } else {
          term *= Rational(1) - w.value(blocks[j], b4);
        }
      }
      sum += term;
    }
    return sum;
  };

  Rational lhs = 0;
  int blocks[3];
  for (blocks[0] = 0; blocks[0] < m; ++blocks[0])
    for (blocks[1] = 0; blocks[1] < m; ++blocks[1])
      for (blocks[2] = 0; blocks[2] < m; ++blocks[2]) {
        Rational mass = w.masses[blocks[0]] * w.masses[blocks[1]] *
                        w.masses[blocks[2]];
        if (mass == 0) continue;
        Rational pattern = 1;
        for (int u = 0; u < 3 && pattern != 0; ++u)
          for (int v = u + 1; v < 3 && pattern != 0; ++v) {
            if ((roots >> Graph::pair_index(u, v)) & 1) {
              pattern *= w.value(blocks[u], blocks[v]);
            } else {
              pattern *= Rational(1) - w.value(blocks[u], blocks[v]);
            }
          }
        // Quotient definition: triples with zero root pattern contribute 0.
        if (pattern == 0) continue;
        lhs += mass * pattern * apex_factor(a, blocks) * apex_factor(b, blocks);
      }

  Rational rhs = 0;
  const GluingTable& table = gluing_table();
  for (const auto& entry : five_vertex_classes().classes) {
    const Rational c = table.coefficient(a.row, a.apex, b.apex, entry.rep.edges);
    if (c != 0) rhs += c * d_density(entry.rep, w);
  }
  return {lhs, rhs};
}

}  // namespace commonpair
