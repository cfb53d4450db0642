#include <doctest.h>

#include <set>

#include "commonpair/graph.hpp"
#include "helpers.hpp"

using namespace commonpair;

namespace {

Graph relabelled(const Graph& g, const std::vector<int>& perm) {
  Graph out{g.n, 0};
  for (auto [u, v] : g.edge_list()) {
    out.edges |= 1ull << Graph::pair_index(perm[u], perm[v]);
  }
  return out;
}

std::vector<int> sorted_degrees(const Graph& g) {
  std::vector<int> d(g.n);
  for (int v = 0; v < g.n; ++v) d[v] = g.degree(v);
  std::sort(d.begin(), d.end());
  return d;
}

}  // namespace

TEST_CASE("graph construction and named graphs") {
  CHECK(complete_graph(5).edge_count() == 10);
  CHECK(cycle_graph(5).edge_count() == 5);
  CHECK(path_graph(4).edge_count() == 3);
  CHECK(empty_graph(3).edge_count() == 0);
  CHECK(star_graph(3).edge_count() == 3);
  CHECK_THROWS_AS(graph_from_edges(11, {}), DomainError);
  CHECK_THROWS_AS(graph_from_edges(3, {{1, 1}}), DomainError);
  CHECK_THROWS_AS(graph_from_edges(3, {{1, 4}}), DomainError);
  CHECK_THROWS_AS(cycle_graph(2), DomainError);
}

TEST_CASE("parse_graph_name") {
  CHECK(parse_graph_name("K5") == complete_graph(5));
  CHECK(parse_graph_name("C4") == cycle_graph(4));
  CHECK(parse_graph_name("P3") == path_graph(3));
  CHECK(parse_graph_name("E2") == empty_graph(2));
  const Graph two_c3 = parse_graph_name("2*C3");
  CHECK(two_c3.n == 6);
  CHECK(two_c3.edge_count() == 6);
  CHECK(cycle_count(two_c3, 3) == 2);
  CHECK_THROWS_AS(parse_graph_name("X3"), DomainError);
  CHECK_THROWS_AS(parse_graph_name("K"), DomainError);
  CHECK_THROWS_AS(parse_graph_name("0*C3"), DomainError);
}

TEST_CASE("canonical_form is relabelling-invariant") {
  const Graph c5a = cycle_graph(5);
  // 1-3-5-2-4-1 as a relabelling of the standard cycle
  const Graph c5b = graph_from_edges(5, {{1, 3}, {3, 5}, {5, 2}, {2, 4}, {4, 1}});
  CHECK(canonical_form(c5a) == canonical_form(c5b));
  CHECK(canonical_form(complete_graph(5)) == complete_graph(5));
  const Graph p_a = graph_from_edges(3, {{1, 2}, {2, 3}});
  const Graph p_b = graph_from_edges(3, {{2, 1}, {1, 3}});
  CHECK(canonical_form(p_a) == canonical_form(p_b));
}

TEST_CASE("isomorphism soundness on random relabellings") {
  testutil::Rng rng(12345);
  for (int trial = 0; trial < 200; ++trial) {
    const Graph g = testutil::random_graph(rng, 2, 7);
    std::vector<int> perm(g.n);
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    CHECK(canonical_form(g) == canonical_form(relabelled(g, perm)));
  }
  int checked = 0;
  while (checked < 200) {
    const Graph g = testutil::random_graph(rng, 2, 7);
    const Graph h = testutil::random_graph(rng, g.n, g.n);
    if (sorted_degrees(g) == sorted_degrees(h)) continue;
    CHECK(canonical_form(g) != canonical_form(h));
    ++checked;
  }
}

TEST_CASE("enumerate_classes") {
  CHECK(enumerate_classes(1).classes.size() == 1);
  CHECK(enumerate_classes(4).classes.size() == 11);
  CHECK(enumerate_classes(5).classes.size() == 34);
  CHECK_THROWS_AS(enumerate_classes(0), DomainError);
  CHECK_THROWS_AS(enumerate_classes(8), DomainError);

  // Classes are ordered, indexed, and exhaustive.
  const GraphClassTable& table = five_vertex_classes();
  for (std::size_t i = 1; i < table.classes.size(); ++i) {
    CHECK(table.classes[i - 1].rep.edges < table.classes[i].rep.edges);
  }
  CHECK(table.position_of(cycle_graph(5)) ==
        table.index.at(canonical_mask(5, cycle_graph(5).edges)));
  CHECK_THROWS_AS(table.position_of(cycle_graph(4)), DomainError);
}

TEST_CASE("class completeness: sum of n!/aut is 2^C(n,2)") {
  for (int n = 1; n <= 6; ++n) {
    const GraphClassTable table = enumerate_classes(n);
    BigInt total = 0;
    for (const auto& entry : table.classes) {
      total += factorial(n) / entry.aut;
    }
    CHECK(total == BigInt(1) << (n * (n - 1) / 2));
  }
}

TEST_CASE("aut_count") {
  CHECK(aut_count(complete_graph(5)) == 120);
  CHECK(aut_count(cycle_graph(5)) == 10);
  CHECK(aut_count(disjoint_union(complete_graph(3), complete_graph(2))) == 12);
  // Table aut values (orbit-stabilizer) agree with brute force.
  for (const auto& entry : five_vertex_classes().classes) {
    CHECK(entry.aut == aut_count(entry.rep));
  }
}

TEST_CASE("complement") {
  CHECK(complement(complete_graph(5)) == empty_graph(5));
  CHECK(complement(empty_graph(3)) == complete_graph(3));
  CHECK(canonical_form(complement(cycle_graph(5))) ==
        canonical_form(cycle_graph(5)));
  testutil::Rng rng(99);
  for (int trial = 0; trial < 20; ++trial) {
    const Graph g = testutil::random_graph(rng, 1, 8);
    CHECK(complement(complement(g)) == g);
  }
}

TEST_CASE("disjoint_union") {
  const Graph matching = disjoint_union(complete_graph(2), complete_graph(2));
  CHECK(matching.n == 4);
  CHECK(matching.edge_count() == 2);
  CHECK(matching.degree(0) == 1);
  CHECK_THROWS_AS(disjoint_union(complete_graph(6), complete_graph(5)),
                  DomainError);
}

TEST_CASE("edge_subgraph") {
  const Graph k3 = complete_graph(3);
  CHECK(edge_subgraph(k3, 0) == empty_graph(3));
  const Graph c4 = cycle_graph(4);
  const std::uint64_t one_edge = c4.edges & (~c4.edges + 1);
  const Graph sub = edge_subgraph(c4, one_edge);
  CHECK(sub.edge_count() == 1);
  CHECK(sub.isolated_count() == 2);
  // a triangle inside K4 keeps the fourth vertex as an isolated one
  const Graph k4 = complete_graph(4);
  const std::uint64_t triangle = complete_graph(3).edges;  // pairs within {1,2,3}
  const Graph tri_sub = edge_subgraph(k4, triangle);
  CHECK(canonical_form(strip_isolated(tri_sub)) == complete_graph(3));
  CHECK(tri_sub.isolated_count() == 1);
  CHECK_THROWS_AS(edge_subgraph(empty_graph(3), 1), DomainError);
}

TEST_CASE("strip_isolated") {
  Graph k2_plus = disjoint_union(complete_graph(2), empty_graph(3));
  CHECK(strip_isolated(k2_plus) == complete_graph(2));
  CHECK(strip_isolated(complete_graph(4)) == complete_graph(4));
  // two disjoint edges of C5 leave K2 | K2 after stripping
  const Graph c5 = cycle_graph(5);
  std::uint64_t two_edges = (1ull << Graph::pair_index(0, 1)) |
                            (1ull << Graph::pair_index(2, 3));
  const Graph stripped = strip_isolated(edge_subgraph(c5, two_edges));
  CHECK(canonical_form(stripped) ==
        canonical_form(disjoint_union(complete_graph(2), complete_graph(2))));
  CHECK(strip_isolated(empty_graph(3)).n == 0);
}

TEST_CASE("girth and cycle_count") {
  CHECK(girth(cycle_graph(5)) == 5);
  CHECK(girth(complete_graph(4)) == 3);
  CHECK_FALSE(girth(path_graph(5)).has_value());
  CHECK_FALSE(girth(star_graph(4)).has_value());
  CHECK(cycle_count(complete_graph(4), 3) == 4);
  CHECK(cycle_count(cycle_graph(5), 5) == 1);
  CHECK(cycle_count(cycle_graph(5), 3) == 0);
  CHECK_THROWS_AS(cycle_count(complete_graph(4), 2), DomainError);

  testutil::Rng rng(2024);
  for (int trial = 0; trial < 50; ++trial) {
    const Graph g = testutil::random_graph(rng, 3, 7);
    const auto k = girth(g);
    if (k) {
      CHECK(cycle_count(g, *k) >= 1);
      for (int shorter = 3; shorter < *k; ++shorter) {
        CHECK(cycle_count(g, shorter) == 0);
      }
    } else {
      for (int len = 3; len <= g.n; ++len) CHECK(cycle_count(g, len) == 0);
    }
  }
}

TEST_CASE("hom_inj_count and t_inj") {
  CHECK(hom_inj_count(complete_graph(2), complete_graph(2)) == 2);
  CHECK(hom_inj_count(cycle_graph(5), cycle_graph(5)) == 10);
  CHECK(hom_inj_count(cycle_graph(4), complete_graph(5)) == 120);
  CHECK_THROWS_AS(hom_inj_count(complete_graph(5), complete_graph(4)),
                  DomainError);

  CHECK(t_inj(cycle_graph(4), complete_graph(5)) == 1);
  CHECK(t_inj(cycle_graph(5), complement(complete_graph(5))) == 0);
  CHECK(t_inj(cycle_graph(5), cycle_graph(5)) == Rational(1, 12));

  testutil::Rng rng(777);
  for (int trial = 0; trial < 50; ++trial) {
    const Graph h = testutil::random_graph(rng, 2, 4);
    const Graph j = testutil::random_graph(rng, h.n, 6);
    const Rational t = t_inj(h, j);
    CHECK(t >= 0);
    CHECK(t <= 1);
    CHECK(hom_inj_count(h, j) % aut_count(h) == 0);
    CHECK(t_inj(h, complete_graph(h.n)) == 1);
  }
}

TEST_CASE("contains_k4 and connectivity") {
  CHECK(contains_k4(complete_graph(4)));
  CHECK_FALSE(contains_k4(cycle_graph(5)));
  Graph k5_minus = complete_graph(5);
  k5_minus.edges &= ~(1ull << Graph::pair_index(0, 1));
  CHECK(contains_k4(k5_minus));
  CHECK(is_connected(cycle_graph(5)));
  CHECK_FALSE(is_connected(disjoint_union(complete_graph(3), complete_graph(2))));
  CHECK(is_connected(complete_graph(1)));
}
