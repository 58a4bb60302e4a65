#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <variant>
#include <vector>

#include "linksym/subgroups.hpp"

namespace linksym {

// Finite tree with link components assigned to vertices.  Labels are
// 1-based component indices; several components may share a vertex.
struct LabeledTree {
  std::size_t vertex_count = 0;
  std::vector<std::pair<int, int>> edges;  // canonical: u < v, sorted
  std::map<int, int> labels;               // component -> vertex

  static LabeledTree make(std::size_t vertex_count,
                          std::vector<std::pair<int, int>> edges,
                          std::map<int, int> labels) {
    LabeledTree t;
    t.vertex_count = vertex_count;
    for (auto& [u, v] : edges) {
      if (u == v || u < 0 || v < 0 || static_cast<std::size_t>(u) >= vertex_count ||
          static_cast<std::size_t>(v) >= vertex_count)
        throw std::invalid_argument("LabeledTree: bad edge");
      if (u > v) std::swap(u, v);
    }
    std::sort(edges.begin(), edges.end());
    if (std::adjacent_find(edges.begin(), edges.end()) != edges.end())
      throw std::invalid_argument("LabeledTree: duplicate edge");
    if (vertex_count == 0) throw std::invalid_argument("LabeledTree: empty tree");
    if (edges.size() != vertex_count - 1)
      throw std::invalid_argument("LabeledTree: edge count must be vertices - 1");
    t.edges = std::move(edges);
    // Connectivity: |E| = |V| - 1 plus connectedness makes it a tree.
    std::vector<std::vector<int>> adj = t.adjacency_of(t.edges, vertex_count);
    std::vector<char> seen(vertex_count, 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    std::size_t reached = 1;
    while (!stack.empty()) {
      int u = stack.back();
      stack.pop_back();
      for (int w : adj[u])
        if (!seen[w]) {
          seen[w] = 1;
          ++reached;
          stack.push_back(w);
        }
    }
    if (reached != vertex_count)
      throw std::invalid_argument("LabeledTree: not connected");
    for (const auto& [lbl, v] : labels)
      if (lbl < 1 || v < 0 || static_cast<std::size_t>(v) >= vertex_count)
        throw std::invalid_argument("LabeledTree: bad label");
    t.labels = std::move(labels);
    return t;
  }

  std::vector<std::vector<int>> adjacency() const {
    return adjacency_of(edges, vertex_count);
  }

  // True iff the labels are exactly {1..n}.
  bool labels_complete(std::size_t n) const {
    if (labels.size() != n) return false;
    int expect = 1;
    for (const auto& [lbl, v] : labels) {
      (void)v;
      if (lbl != expect++) return false;
    }
    return true;
  }

  // True iff no vertex carries more than one label.
  bool labels_injective() const {
    std::set<int> used;
    for (const auto& [lbl, v] : labels) {
      (void)lbl;
      if (!used.insert(v).second) return false;
    }
    return true;
  }

  friend bool operator==(const LabeledTree&, const LabeledTree&) = default;

 private:
  static std::vector<std::vector<int>> adjacency_of(
      const std::vector<std::pair<int, int>>& edges, std::size_t n) {
    std::vector<std::vector<int>> adj(n);
    for (auto [u, v] : edges) {
      adj[u].push_back(v);
      adj[v].push_back(u);
    }
    return adj;
  }
};

// Minimal connected subtree spanning a vertex set, with the surviving
// vertices re-indexed; kept[new_id] = original id.
struct SpannedSubtree {
  LabeledTree tree;
  std::vector<int> kept;
};

inline SpannedSubtree spanned_subtree(const LabeledTree& t,
                                      const std::vector<int>& wanted) {
  if (wanted.empty()) throw std::invalid_argument("spanned_subtree: empty vertex set");
  std::vector<char> keep(t.vertex_count, 0);
  std::vector<char> required(t.vertex_count, 0);
  for (int v : wanted) {
    if (v < 0 || static_cast<std::size_t>(v) >= t.vertex_count)
      throw std::invalid_argument("spanned_subtree: unknown vertex");
    required[v] = 1;
  }
  std::fill(keep.begin(), keep.end(), 1);
  auto adj = t.adjacency();
  std::vector<int> deg(t.vertex_count);
  for (std::size_t v = 0; v < t.vertex_count; ++v) deg[v] = static_cast<int>(adj[v].size());
  // Repeatedly strip non-required leaves; what survives is the span.
  std::vector<int> stack;
  for (std::size_t v = 0; v < t.vertex_count; ++v)
    if (deg[v] <= 1 && !required[v]) stack.push_back(static_cast<int>(v));
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    if (!keep[v] || required[v] || deg[v] > 1) continue;
    keep[v] = 0;
    for (int w : adj[v])
      if (keep[w]) {
        --deg[w];
        if (deg[w] <= 1 && !required[w]) stack.push_back(w);
      }
  }

  std::vector<int> kept;
  std::vector<int> new_id(t.vertex_count, -1);
  for (std::size_t v = 0; v < t.vertex_count; ++v)
    if (keep[v]) {
      new_id[v] = static_cast<int>(kept.size());
      kept.push_back(static_cast<int>(v));
    }
  std::vector<std::pair<int, int>> edges;
  for (auto [u, v] : t.edges)
    if (keep[u] && keep[v]) edges.emplace_back(new_id[u], new_id[v]);
  std::map<int, int> labels;
  for (const auto& [lbl, v] : t.labels)
    if (keep[v]) labels[lbl] = new_id[v];
  return SpannedSubtree{LabeledTree::make(kept.size(), std::move(edges), std::move(labels)),
                        std::move(kept)};
}

namespace detail {

// Counts label-equivariant automorphisms inducing g on the labels, up to
// `cap`; returns the count and the first one found (as vertex images).
inline std::pair<int, std::vector<int>> count_label_extensions(const LabeledTree& t,
                                                               const Perm& g,
                                                               int cap) {
  const std::size_t n = t.vertex_count;
  if (t.labels.empty())
    throw std::invalid_argument("count_label_extensions: tree has no labels");
  auto adj = t.adjacency();
  std::vector<int> deg(n);
  for (std::size_t v = 0; v < n; ++v) deg[v] = static_cast<int>(adj[v].size());
  std::set<std::pair<int, int>> edge_set(t.edges.begin(), t.edges.end());
  auto has_edge = [&](int a, int b) {
    return edge_set.count({std::min(a, b), std::max(a, b)}) > 0;
  };

  std::vector<int> phi(n, -1);
  std::vector<char> used(n, 0);
  // Forced assignments: the vertex of label l must map to the vertex of
  // label g(l).
  for (const auto& [lbl, v] : t.labels) {
    if (static_cast<std::size_t>(lbl) > g.degree())
      throw std::invalid_argument("count_label_extensions: label outside permutation");
    auto target_it =
        t.labels.find(static_cast<int>(g[static_cast<std::size_t>(lbl - 1)]) + 1);
    if (target_it == t.labels.end()) return {0, {}};
    int w = target_it->second;
    if (phi[v] == -1) {
      if (used[w]) return {0, {}};
      phi[v] = w;
      used[w] = 1;
    } else if (phi[v] != w) {
      return {0, {}};
    }
  }
  std::size_t assigned = 0;
  for (std::size_t v = 0; v < n; ++v)
    if (phi[v] != -1) {
      ++assigned;
      if (deg[v] != deg[phi[v]]) return {0, {}};
    }

  // Deterministic fill order: breadth-first from the forced vertices.
  std::vector<int> order;
  {
    std::vector<char> queued(n, 0);
    std::vector<int> bfs;
    for (std::size_t v = 0; v < n; ++v)
      if (phi[v] != -1) {
        bfs.push_back(static_cast<int>(v));
        queued[v] = 1;
      }
    std::size_t head = 0;
    while (head < bfs.size()) {
      int u = bfs[head++];
      for (int w : adj[u])
        if (!queued[w]) {
          queued[w] = 1;
          order.push_back(w);
          bfs.push_back(w);
        }
    }
  }
  if (order.size() + assigned != n) return {0, {}};  // tree is connected, so never

  int found = 0;
  std::vector<int> first;
  std::vector<int>& result = phi;
  std::function<void(std::size_t)> rec = [&](std::size_t k) {
    if (found >= cap) return;
    if (k == order.size()) {
      // Full candidate: injective by construction; confirm every edge maps
      // to an edge (forced assignments were not adjacency-checked).
      for (auto [a, b] : t.edges)
        if (!has_edge(result[a], result[b])) return;
      ++found;
      if (found == 1) first = result;
      return;
    }
    int u = order[k];
    int anchor = -1;
    for (int w : adj[u])
      if (result[w] != -1) {
        anchor = w;
        break;
      }
    if (anchor == -1) return;  // unreachable for connected trees
    std::vector<int> cand;
    for (int c : adj[result[anchor]]) {
      if (used[c] || deg[c] != deg[u]) continue;
      bool ok = true;
      for (int w : adj[u])
        if (result[w] != -1 && !has_edge(result[w], c)) {
          ok = false;
          break;
        }
      if (ok) cand.push_back(c);
    }
    std::sort(cand.begin(), cand.end());
    for (int c : cand) {
      result[u] = c;
      used[c] = 1;
      rec(k + 1);
      used[c] = 0;
      result[u] = -1;
      if (found >= cap) return;
    }
  };
  rec(0);
  return {found, first};
}

}  // namespace detail

// True iff at least one label-equivariant automorphism induces g.
inline bool label_extension_exists(const LabeledTree& t, const Perm& g) {
  return detail::count_label_extensions(t, g, 1).first >= 1;
}

// The unique label-equivariant tree automorphism inducing g on the labels,
// as vertex images; absent when no extension exists or when the labels leave
// the extension ambiguous.
inline std::optional<Perm> extend_leaf_permutation(const LabeledTree& t, const Perm& g) {
  auto [count, first] = detail::count_label_extensions(t, g, 2);
  if (count != 1) return std::nullopt;
  std::vector<Point> img(first.size());
  for (std::size_t i = 0; i < first.size(); ++i) img[i] = static_cast<Point>(first[i]);
  return Perm::from_images(img);
}

// A group acting on the tree: one vertex map per group element, label
// equivariant, assignment a homomorphism.
struct TreeAction {
  FiniteGroup group;  // on {1..n} (points 0..n-1)
  std::vector<Perm> vertex_maps;
};

// Builds the action of `group` on the tree via unique label extensions.
// Absent if some element has no (or no unique) extension.
inline std::optional<TreeAction> make_tree_action(const LabeledTree& t,
                                                  const FiniteGroup& group) {
  if (!t.labels_complete(group.degree()))
    throw std::invalid_argument("make_tree_action: labels must be 1..n");
  std::vector<Perm> maps;
  maps.reserve(group.order());
  for (const auto& e : group.elements()) {
    auto phi = extend_leaf_permutation(t, e);
    if (!phi) return std::nullopt;
    maps.push_back(std::move(*phi));
  }
  // The assignment is a homomorphism: extensions are unique and composition
  // of extensions induces the composed label permutation.  Verified on
  // generator pairs.
  for (std::uint32_t gi : group.generator_indices())
    for (std::uint32_t x = 0; x < group.order(); ++x) {
      auto prod = group.index_of(group.element(gi) * group.element(x));
      if (maps[*prod] != maps[gi] * maps[x])
        throw std::logic_error("make_tree_action: assignment is not a homomorphism");
    }
  return TreeAction{group, std::move(maps)};
}

// Invariant locus: iteratively prune all current leaves; a lone survivor is
// the invariant vertex, two survivors are the invariant edge.
using Locus = std::variant<int, std::pair<int, int>>;

inline Locus invariant_locus(const LabeledTree& t, const TreeAction& action) {
  auto adj = t.adjacency();
  std::vector<int> deg(t.vertex_count);
  std::vector<char> alive(t.vertex_count, 1);
  std::size_t alive_count = t.vertex_count;
  for (std::size_t v = 0; v < t.vertex_count; ++v) deg[v] = static_cast<int>(adj[v].size());
  while (alive_count > 2) {
    std::vector<int> leaves;
    for (std::size_t v = 0; v < t.vertex_count; ++v)
      if (alive[v] && deg[v] <= 1) leaves.push_back(static_cast<int>(v));
    for (int v : leaves) {
      alive[v] = 0;
      --alive_count;
      for (int w : adj[v])
        if (alive[w]) --deg[w];
    }
  }
  std::vector<int> rest;
  for (std::size_t v = 0; v < t.vertex_count; ++v)
    if (alive[v]) rest.push_back(static_cast<int>(v));

  Locus locus;
  if (rest.size() == 1)
    locus = rest[0];
  else
    locus = std::make_pair(std::min(rest[0], rest[1]), std::max(rest[0], rest[1]));

  for (const auto& phi : action.vertex_maps) {
    bool ok;
    if (std::holds_alternative<int>(locus)) {
      int v = std::get<int>(locus);
      ok = (phi[static_cast<std::size_t>(v)] == static_cast<Point>(v));
    } else {
      auto [a, b] = std::get<std::pair<int, int>>(locus);
      Point pa = phi[static_cast<std::size_t>(a)], pb = phi[static_cast<std::size_t>(b)];
      ok = (pa == static_cast<Point>(a) && pb == static_cast<Point>(b)) ||
           (pa == static_cast<Point>(b) && pb == static_cast<Point>(a));
    }
    if (!ok) throw std::logic_error("invariant_locus: locus moved by the action");
  }
  return locus;
}

// True iff the acting group has no subgroup of index two (all index-two
// subgroups are normal, so the normal lattice decides).
inline bool requires_vertex(const TreeAction& action) {
  for (const auto& n : detail::normal_subgroup_sets(action.group))
    if (n.size() * 2 == action.group.order()) return false;
  return true;
}

struct TreeActionReport {
  Locus locus;
  bool group_requires_vertex = false;
  bool edge_inverted = false;
  // An inverted invariant edge under a group without index-two subgroups
  // contradicts the tree structure (the edge stabilizer would be index two).
  bool contradiction = false;
};

inline TreeActionReport analyze_tree_action(const LabeledTree& t,
                                            const TreeAction& action) {
  TreeActionReport rep;
  rep.locus = invariant_locus(t, action);
  rep.group_requires_vertex = requires_vertex(action);
  if (std::holds_alternative<std::pair<int, int>>(rep.locus)) {
    auto [a, b] = std::get<std::pair<int, int>>(rep.locus);
    for (const auto& phi : action.vertex_maps)
      if (phi[static_cast<std::size_t>(a)] == static_cast<Point>(b)) {
        rep.edge_inverted = true;
        break;
      }
  }
  rep.contradiction = rep.group_requires_vertex && rep.edge_inverted;
  return rep;
}

// True iff the tree is a single vertex, or has exactly n leaves carrying the
// n labels bijectively, a unique vertex of valence > 2, and equal-length
// branches from that vertex to every leaf.
inline bool check_branch_structure(const LabeledTree& t, std::size_t n) {
  if (!t.labels_complete(n))
    throw std::invalid_argument("check_branch_structure: labels must be 1..n");
  if (t.vertex_count == 1) return true;

  auto adj = t.adjacency();
  std::vector<int> leaves;
  int root = -1;
  for (std::size_t v = 0; v < t.vertex_count; ++v) {
    if (adj[v].size() == 1) leaves.push_back(static_cast<int>(v));
    if (adj[v].size() > 2) {
      if (root != -1) return false;  // more than one high-valence vertex
      root = static_cast<int>(v);
    }
  }
  if (root == -1) return false;
  if (leaves.size() != n) return false;
  std::set<int> label_vertices;
  for (const auto& [lbl, v] : t.labels) {
    (void)lbl;
    if (!label_vertices.insert(v).second) return false;  // two labels share a vertex
  }
  for (int leaf : leaves)
    if (!label_vertices.count(leaf)) return false;
  if (label_vertices.size() != leaves.size()) return false;

  // Equal branch lengths: BFS distances from the root to every leaf agree.
  std::vector<int> dist(t.vertex_count, -1);
  std::vector<int> queue{root};
  dist[root] = 0;
  std::size_t head = 0;
  while (head < queue.size()) {
    int u = queue[head++];
    for (int w : adj[u])
      if (dist[w] < 0) {
        dist[w] = dist[u] + 1;
        queue.push_back(w);
      }
  }
  int len = dist[leaves[0]];
  for (int leaf : leaves)
    if (dist[leaf] != len) return false;
  return true;
}

// Pairwise non-isomorphic tree shapes with up to max_vertices vertices, in a
// deterministic order, via leaf additions deduplicated by a canonical
// certificate.
inline std::vector<LabeledTree> all_tree_shapes(std::size_t max_vertices) {
  auto certificate = [](const LabeledTree& t) {
    auto adj = t.adjacency();
    // Rooted AHU string.
    std::function<std::string(int, int)> ahu = [&](int v, int parent) -> std::string {
      std::vector<std::string> kids;
      for (int w : adj[v])
        if (w != parent) kids.push_back(ahu(w, v));
      std::sort(kids.begin(), kids.end());
      std::string s = "(";
      for (const auto& k : kids) s += k;
      return s + ")";
    };
    // Center: prune to <= 2 vertices.
    std::vector<int> deg(t.vertex_count);
    std::vector<char> alive(t.vertex_count, 1);
    std::size_t alive_count = t.vertex_count;
    for (std::size_t v = 0; v < t.vertex_count; ++v) deg[v] = static_cast<int>(adj[v].size());
    while (alive_count > 2) {
      std::vector<int> leaves;
      for (std::size_t v = 0; v < t.vertex_count; ++v)
        if (alive[v] && deg[v] <= 1) leaves.push_back(static_cast<int>(v));
      for (int v : leaves) {
        alive[v] = 0;
        --alive_count;
        for (int w : adj[v])
          if (alive[w]) --deg[w];
      }
    }
    std::vector<int> centers;
    for (std::size_t v = 0; v < t.vertex_count; ++v)
      if (alive[v]) centers.push_back(static_cast<int>(v));
    if (centers.size() == 1) return ahu(centers[0], -1);
    std::string a = ahu(centers[0], centers[1]);
    std::string b = ahu(centers[1], centers[0]);
    if (b < a) std::swap(a, b);
    return "[" + a + b + "]";
  };

  std::vector<LabeledTree> shapes;
  std::set<std::string> seen;
  LabeledTree single = LabeledTree::make(1, {}, {});
  seen.insert(certificate(single));
  shapes.push_back(single);
  std::size_t level_begin = 0;
  for (std::size_t v = 2; v <= max_vertices; ++v) {
    std::size_t level_end = shapes.size();
    for (std::size_t s = level_begin; s < level_end; ++s) {
      if (shapes[s].vertex_count != v - 1) continue;
      for (std::size_t u = 0; u < v - 1; ++u) {
        auto edges = shapes[s].edges;
        edges.emplace_back(static_cast<int>(u), static_cast<int>(v - 1));
        LabeledTree bigger = LabeledTree::make(v, std::move(edges), {});
        if (seen.insert(certificate(bigger)).second) shapes.push_back(std::move(bigger));
      }
    }
    level_begin = level_end;
  }
  return shapes;
}

}  // namespace linksym
