#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "commonpair/rational.hpp"

namespace commonpair {

// Labelled simple graph on at most 10 vertices. Vertices are 0-based in
// code; the JSON interface and the shorthand names ("K5", "C4", ...) are
// 1-based. Edges live in a bitmask over the n(n-1)/2 unordered pairs:
// pair {u,v} with u < v sits at bit v*(v-1)/2 + u.
struct Graph {
  int n = 0;
  std::uint64_t edges = 0;

  static constexpr int kMaxVertices = 10;

  static int pair_index(int u, int v);
  bool has_edge(int u, int v) const;
  int edge_count() const;
  int degree(int v) const;
  int isolated_count() const;
  std::vector<std::pair<int, int>> edge_list() const;  // 0-based, u < v

  bool operator==(const Graph&) const = default;
  auto operator<=>(const Graph&) const = default;
};

// Validating constructor; edge endpoints are 1-based as in the JSON form.
Graph graph_from_edges(int n, const std::vector<std::pair<int, int>>& edges);

Graph empty_graph(int n);
Graph complete_graph(int n);
Graph cycle_graph(int n);  // n >= 3
Graph path_graph(int n);   // n >= 1
Graph star_graph(int leaves);  // K_{1,leaves}

// "K<n>", "C<n>", "P<n>", "E<n>", optionally prefixed "<s>*" for an s-fold
// disjoint union ("2*C3").
Graph parse_graph_name(const std::string& name);

// Lexicographically minimal edge bitmask over all n! relabellings. Two
// graphs are isomorphic iff their canonical forms are equal.
Graph canonical_form(const Graph& g);
std::uint64_t canonical_mask(int n, std::uint64_t edges);

long long aut_count(const Graph& g);

Graph complement(const Graph& g);
Graph disjoint_union(const Graph& g, const Graph& h);

// Same vertex set, edge set restricted to `subset` (a sub-bitmask of
// g.edges); isolated vertices are kept.
Graph edge_subgraph(const Graph& g, std::uint64_t subset);

// Drops isolated vertices, relabelling the rest in order. May return the
// 0-vertex graph; density operations treat that as density 1.
Graph strip_isolated(const Graph& g);

// Length of a shortest cycle; nullopt for forests.
std::optional<int> girth(const Graph& g);

// Number of distinct k-cycle subgraphs, k >= 3.
long long cycle_count(const Graph& g, int k);

long long hom_inj_count(const Graph& h, const Graph& j);

// Probability that a uniformly random injection V(h) -> V(j) is a
// homomorphism: hom_inj(h,j) * (v(j)-v(h))! / v(j)!.
Rational t_inj(const Graph& h, const Graph& j);

bool contains_k4(const Graph& g);
bool is_connected(const Graph& g);

// All isomorphism classes on n vertices, ordered by ascending canonical
// bitmask. For n = 5 there are exactly 34 classes.
struct GraphClassTable {
  struct Entry {
    Graph rep;       // canonical representative
    long long aut;   // |Aut|
  };
  int n = 0;
  std::vector<Entry> classes;
  std::map<std::uint64_t, int> index;  // canonical mask -> position

  int position_of(const Graph& g) const;  // canonicalizes, then looks up
};

// 1 <= n <= 6 supported; n = 7 works but is slow.
GraphClassTable enumerate_classes(int n);
GraphClassTable enumerate_classes_reference(int n);  // serial, kept for tests

// Cached table for n = 5, shared by the flag and certificate machinery.
const GraphClassTable& five_vertex_classes();

}  // namespace commonpair
