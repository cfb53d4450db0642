#include "commonpair/graph.hpp"

#include <algorithm>
#include <bit>
#include <numeric>

namespace commonpair {

namespace {

constexpr int kMaxPairs = Graph::kMaxVertices * (Graph::kMaxVertices - 1) / 2;

struct PairTable {
  int u[kMaxPairs];
  int v[kMaxPairs];
};

constexpr PairTable make_pair_table() {
  PairTable t{};
  for (int b = 1; b < Graph::kMaxVertices; ++b) {
    for (int a = 0; a < b; ++a) {
      int idx = b * (b - 1) / 2 + a;
      t.u[idx] = a;
      t.v[idx] = b;
    }
  }
  return t;
}

constexpr PairTable kPairs = make_pair_table();

std::uint64_t full_mask(int n) {
  int bits = n * (n - 1) / 2;
  return bits == 0 ? 0 : (bits == 64 ? ~0ull : (1ull << bits) - 1);
}

std::uint64_t permute_mask(std::uint64_t edges, const int* perm) {
  std::uint64_t out = 0;
  while (edges) {
    int bit = std::countr_zero(edges);
    edges &= edges - 1;
    out |= 1ull << Graph::pair_index(perm[kPairs.u[bit]], perm[kPairs.v[bit]]);
  }
  return out;
}

}  // namespace

int Graph::pair_index(int u, int v) {
  if (u > v) std::swap(u, v);
  return v * (v - 1) / 2 + u;
}

bool Graph::has_edge(int u, int v) const {
  return (edges >> pair_index(u, v)) & 1;
}

int Graph::edge_count() const { return std::popcount(edges); }

int Graph::degree(int v) const {
  int d = 0;
  for (int u = 0; u < n; ++u) {
    if (u != v && has_edge(u, v)) ++d;
  }
  return d;
}

int Graph::isolated_count() const {
  int c = 0;
  for (int v = 0; v < n; ++v) {
    if (degree(v) == 0) ++c;
  }
  return c;
}

std::vector<std::pair<int, int>> Graph::edge_list() const {
  std::vector<std::pair<int, int>> out;
  std::uint64_t e = edges;
  while (e) {
    int bit = std::countr_zero(e);
    e &= e - 1;
    out.emplace_back(kPairs.u[bit], kPairs.v[bit]);
  }
  return out;
}

Graph graph_from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
  if (n < 1 || n > Graph::kMaxVertices) {
    throw DomainError("graph must have between 1 and 10 vertices, got n=" +
                      std::to_string(n));
  }
  Graph g{n, 0};
  for (auto [a, b] : edges) {
    if (a < 1 || a > n || b < 1 || b > n) {
      throw DomainError("edge endpoint out of range in graph on " +
                        std::to_string(n) + " vertices");
    }
    if (a == b) throw DomainError("loops are not allowed");
    g.edges |= 1ull << Graph::pair_index(a - 1, b - 1);
  }
  return g;
}

Graph empty_graph(int n) { return graph_from_edges(n, {}); }

Graph complete_graph(int n) {
  Graph g = empty_graph(n);
  g.edges = full_mask(n);
  return g;
}

Graph cycle_graph(int n) {
  if (n < 3) throw DomainError("cycle needs at least 3 vertices");
  std::vector<std::pair<int, int>> e;
  for (int i = 1; i < n; ++i) e.emplace_back(i, i + 1);
  e.emplace_back(n, 1);
  return graph_from_edges(n, e);
}

Graph path_graph(int n) {
  std::vector<std::pair<int, int>> e;
  for (int i = 1; i < n; ++i) e.emplace_back(i, i + 1);
  return graph_from_edges(n, e);
}

Graph star_graph(int leaves) {
  std::vector<std::pair<int, int>> e;
  for (int i = 2; i <= leaves + 1; ++i) e.emplace_back(1, i);
  return graph_from_edges(leaves + 1, e);
}

Graph parse_graph_name(const std::string& name) {
  std::string body = name;
  int copies = 1;
  if (auto star = name.find('*'); star != std::string::npos) {
    try {
      size_t used = 0;
      copies = std::stoi(name.substr(0, star), &used);
      if (used != star) throw std::invalid_argument("");
    } catch (const std::exception&) {
      throw DomainError("bad graph name \"" + name + "\"");
    }
    if (copies < 1) throw DomainError("bad graph name \"" + name + "\"");
    body = name.substr(star + 1);
  }
  if (body.size() < 2) throw DomainError("bad graph name \"" + name + "\"");
  int n = 0;
  try {
    size_t used = 0;
    n = std::stoi(body.substr(1), &used);
    if (used + 1 != body.size()) throw std::invalid_argument("");
  } catch (const std::exception&) {
    throw DomainError("bad graph name \"" + name + "\"");
  }
  Graph base;
  switch (body[0]) {
    case 'K': base = complete_graph(n); break;
    case 'C': base = cycle_graph(n); break;
    case 'P': base = path_graph(n); break;
    case 'E': base = empty_graph(n); break;
    default: throw DomainError("bad graph name \"" + name + "\"");
  }
  Graph g = base;
  for (int i = 1; i < copies; ++i) g = disjoint_union(g, base);
  return g;
}

std::uint64_t canonical_mask(int n, std::uint64_t edges) {
  if (n <= 1) return edges;
  int perm[Graph::kMaxVertices];
  std::iota(perm, perm + n, 0);
  std::uint64_t best = ~0ull;
  do {
    best = std::min(best, permute_mask(edges, perm));
  } while (std::next_permutation(perm, perm + n));
  return best;
}

Graph canonical_form(const Graph& g) {
  return Graph{g.n, canonical_mask(g.n, g.edges)};
}

long long aut_count(const Graph& g) {
  if (g.n <= 1) return 1;
  int perm[Graph::kMaxVertices];
  std::iota(perm, perm + g.n, 0);
  long long count = 0;
  do {
    if (permute_mask(g.edges, perm) == g.edges) ++count;
  } while (std::next_permutation(perm, perm + g.n));
  return count;
}

Graph complement(const Graph& g) {
  return Graph{g.n, g.edges ^ full_mask(g.n)};
}

Graph disjoint_union(const Graph& g, const Graph& h) {
  if (g.n + h.n > Graph::kMaxVertices) {
    throw DomainError("disjoint union would exceed 10 vertices");
  }
  Graph out{g.n + h.n, g.edges};
  for (auto [a, b] : h.edge_list()) {
    out.edges |= 1ull << Graph::pair_index(a + g.n, b + g.n);
  }
  return out;
}

Graph edge_subgraph(const Graph& g, std::uint64_t subset) {
  if (subset & ~g.edges) {
    throw DomainError("edge_subgraph: subset contains non-edges of g");
  }
  return Graph{g.n, subset};
}

Graph strip_isolated(const Graph& g) {
  int relabel[Graph::kMaxVertices];
  int m = 0;
  for (int v = 0; v < g.n; ++v) {
    if (g.degree(v) > 0) relabel[v] = m++;
  }
  Graph out{m, 0};
  for (auto [a, b] : g.edge_list()) {
    out.edges |= 1ull << Graph::pair_index(relabel[a], relabel[b]);
  }
  return out;
}

long long cycle_count(const Graph& g, int k) {
  if (k < 3) throw DomainError("cycle length must be at least 3");
  if (k > g.n) return 0;
  // Choose the k-subset, then count Hamiltonian cycles inside it. Fixing
  // the smallest subset element as the start leaves each cycle counted
  // twice (two directions).
  std::vector<int> pick(k);
  long long total = 0;
  std::vector<int> sel(g.n, 0);
  std::fill(sel.begin(), sel.begin() + k, 1);
  std::sort(sel.begin(), sel.end());  // combinations via permutations of 0/1
  do {
    int m = 0;
    for (int v = 0; v < g.n; ++v) {
      if (sel[v]) pick[m++] = v;
    }
    if (m != k) continue;
    std::vector<int> tail(pick.begin() + 1, pick.end());
    std::sort(tail.begin(), tail.end());
    do {
      bool ok = g.has_edge(pick[0], tail[0]) && g.has_edge(tail[k - 2], pick[0]);
      for (int i = 0; ok && i + 1 < k - 1; ++i) {
        ok = g.has_edge(tail[i], tail[i + 1]);
      }
      if (ok) ++total;
    } while (std::next_permutation(tail.begin(), tail.end()));
  } while (std::next_permutation(sel.begin(), sel.end()));
  return total / 2;
}

std::optional<int> girth(const Graph& g) {
  for (int k = 3; k <= g.n; ++k) {
    if (cycle_count(g, k) > 0) return k;
  }
  return std::nullopt;
}

namespace {

long long hom_inj_rec(const Graph& h, const Graph& j, int v, int* map,
                      bool* used) {
  if (v == h.n) return 1;
  long long total = 0;
  for (int target = 0; target < j.n; ++target) {
    if (used[target]) continue;
    bool ok = true;
    for (int u = 0; u < v && ok; ++u) {
      if (h.has_edge(u, v) && !j.has_edge(map[u], target)) ok = false;
    }
    if (!ok) continue;
    used[target] = true;
    map[v] = target;
    total += hom_inj_rec(h, j, v + 1, map, used);
    used[target] = false;
  }
  return total;
}

}  // namespace

long long hom_inj_count(const Graph& h, const Graph& j) {
  if (h.n > j.n) {
    throw DomainError("hom_inj requires v(h) <= v(j)");
  }
  int map[Graph::kMaxVertices];
  bool used[Graph::kMaxVertices] = {};
  return hom_inj_rec(h, j, 0, map, used);
}

Rational t_inj(const Graph& h, const Graph& j) {
  long long count = hom_inj_count(h, j);
  return Rational(BigInt(count) * factorial(j.n - h.n), factorial(j.n));
}

bool contains_k4(const Graph& g) {
  for (int a = 0; a < g.n; ++a)
    for (int b = a + 1; b < g.n; ++b) {
      if (!g.has_edge(a, b)) continue;
      for (int c = b + 1; c < g.n; ++c) {
        if (!g.has_edge(a, c) || !g.has_edge(b, c)) continue;
        for (int d = c + 1; d < g.n; ++d) {
          if (g.has_edge(a, d) && g.has_edge(b, d) && g.has_edge(c, d)) {
            return true;
          }
        }
      }
    }
  return false;
}

bool is_connected(const Graph& g) {
  if (g.n <= 1) return true;
  std::vector<int> stack{0};
  std::vector<bool> seen(g.n, false);
  seen[0] = true;
  int reached = 1;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (int u = 0; u < g.n; ++u) {
      if (!seen[u] && g.has_edge(u, v)) {
        seen[u] = true;
        ++reached;
        stack.push_back(u);
      }
    }
  }
  return reached == g.n;
}

int GraphClassTable::position_of(const Graph& g) const {
  if (g.n != n) {
    throw DomainError("class table is for graphs on " + std::to_string(n) +
                      " vertices");
  }
  auto it = index.find(canonical_mask(g.n, g.edges));
  if (it == index.end()) throw DomainError("graph not found in class table");
  return it->second;
}

namespace {

GraphClassTable build_class_table(int n, bool parallel) {
  if (n < 1 || n > 7) {
    throw DomainError("class enumeration supports 1 <= n <= 7");
  }
  const int bits = n * (n - 1) / 2;
  const std::int64_t total = 1ll << bits;
  std::map<std::uint64_t, long long> orbit_size;
  if (parallel) {
    std::vector<std::uint64_t> canon(total);
#pragma omp parallel for schedule(dynamic, 512)
    for (std::int64_t mask = 0; mask < total; ++mask) {
      canon[mask] = canonical_mask(n, static_cast<std::uint64_t>(mask));
    }
    for (std::uint64_t c : canon) ++orbit_size[c];
  } else {
    for (std::int64_t mask = 0; mask < total; ++mask) {
      ++orbit_size[canonical_mask(n, static_cast<std::uint64_t>(mask))];
    }
  }
  GraphClassTable table;
  table.n = n;
  const BigInt nf = factorial(n);
  for (const auto& [mask, labelled] : orbit_size) {
    // Orbit-stabilizer: |orbit| * |Aut| = n!.
    GraphClassTable::Entry entry;
    entry.rep = Graph{n, mask};
    entry.aut = (nf / labelled).convert_to<long long>();
    table.index[mask] = static_cast<int>(table.classes.size());
    table.classes.push_back(entry);
  }
  return table;
}

}  // namespace

GraphClassTable enumerate_classes(int n) { return build_class_table(n, true); }

GraphClassTable enumerate_classes_reference(int n) {
  return build_class_table(n, false);
}

const GraphClassTable& five_vertex_classes() {
  static const GraphClassTable table = enumerate_classes(5);
  return table;
}

}  // namespace commonpair
