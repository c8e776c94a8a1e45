#include "maxtsp/cycle_cover.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "maxtsp/error.hpp"

namespace maxtsp {

int GadgetLayout::pair_index(Vertex u, Vertex v) const {
  return u * n - u * (u + 1) / 2 + (v - u - 1);
}

namespace {

std::vector<Edge> all_pairs(int n) {
  std::vector<Edge> pairs;
  pairs.reserve(static_cast<std::size_t>(n) * (n - 1) / 2);
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) pairs.push_back({u, v});
  }
  return pairs;
}

// Starting duals for the gadget matching. Each copy of v takes t_v, the
// second-heaviest distance at v, and each side node the remainder of its
// external edge; an internal edge left negative is balanced from its heavier
// side.
std::vector<double> gadget_dual_hint(const Instance& inst) {
  const GadgetLayout layout{static_cast<int>(inst.size())};
  std::vector<double> t(inst.size());
  for (Vertex v = 0; v < layout.n; ++v) {
    double first = -1.0;
    double second = -1.0;
    for (Vertex u = 0; u < layout.n; ++u) {
      if (u == v) continue;
      const double d = inst(u, v);
      if (d > first) {
        second = first;
        first = d;
      } else if (d > second) {
        second = d;
      }
    }
    t[v] = second;
  }

  std::vector<double> y(static_cast<std::size_t>(layout.num_nodes()), 0.0);
  for (Vertex v = 0; v < layout.n; ++v) {
    y[layout.copy_node(v, 0)] = y[layout.copy_node(v, 1)] = t[v];
  }
  int k = 0;
  for (Vertex u = 0; u < layout.n; ++u) {
    for (Vertex v = u + 1; v < layout.n; ++v, ++k) {
      double x_u = inst(u, v) - t[u];
      double x_v = inst(u, v) - t[v];
      if (x_u + x_v < 0.0) {
        if (x_u >= x_v) {
          x_v = -x_u;
        } else {
          x_u = -x_v;
        }
      }
      y[layout.side_node(k, 0)] = x_u;
      y[layout.side_node(k, 1)] = x_v;
    }
  }
  return y;
}

}  // namespace

WeightedGraph build_gadget(const Instance& inst) {
  require_solvable(inst);
  const GadgetLayout layout{static_cast<int>(inst.size())};
  const auto pairs = all_pairs(layout.n);

  WeightedGraph g;
  g.num_vertices = layout.num_nodes();
  g.edges.reserve(pairs.size() * 5);
  for (std::size_t k = 0; k < pairs.size(); ++k) {
    const auto [u, v] = pairs[k];
    const int pk = static_cast<int>(k);
    const int side_u = layout.side_node(pk, 0);
    const int side_v = layout.side_node(pk, 1);
    const double w = inst(u, v);
    g.add_edge(side_u, side_v, 0.0);
    for (int c = 0; c < 2; ++c) {
      g.add_edge(layout.copy_node(u, c), side_u, w);
      g.add_edge(layout.copy_node(v, c), side_v, w);
    }
  }
  return g;
}

CycleCover decode_gadget_matching(const Instance& inst, const Matching& matching) {
  const GadgetLayout layout{static_cast<int>(inst.size())};
  const auto pairs = all_pairs(layout.n);

  std::vector<char> internal(pairs.size(), 0);
  for (auto [a, b] : matching.pairs) {
    if (a >= 2 * layout.n && b == a + 1 && (a - 2 * layout.n) % 2 == 0) {
      internal[(a - 2 * layout.n) / 2] = 1;
    }
  }

  std::vector<std::vector<Vertex>> adj(inst.size());
  for (std::size_t k = 0; k < pairs.size(); ++k) {
    if (internal[k]) continue;
    adj[pairs[k].a].push_back(pairs[k].b);
    adj[pairs[k].b].push_back(pairs[k].a);
  }
  for (Vertex v = 0; v < layout.n; ++v) {
    if (adj[v].size() != 2) {
      throw Error("gadget matching decodes to degree " +
                  std::to_string(adj[v].size()) + " at vertex " +
                  std::to_string(v));
    }
  }

  std::vector<char> visited(inst.size(), 0);
  std::vector<Cycle> cycles;
  for (Vertex start = 0; start < layout.n; ++start) {
    if (visited[start]) continue;
    Cycle cycle{start};
    visited[start] = 1;
    Vertex prev = start;
    Vertex cur = std::min(adj[start][0], adj[start][1]);
    while (cur != start) {
      cycle.push_back(cur);
      visited[cur] = 1;
      const Vertex next = adj[cur][0] == prev ? adj[cur][1] : adj[cur][0];
      prev = cur;
      cur = next;
    }
    cycles.push_back(std::move(cycle));
  }
  return make_cover(inst, std::move(cycles));
}

CycleCover max_weight_cycle_cover(const Instance& inst) {
  require_solvable(inst);
  const auto n = inst.size();
  if (n == 3) return make_cover(inst, {{0, 1, 2}});
  if (n == 4) {
    // Only Hamiltonian cycles fit; three distinct ones.
    const std::vector<Cycle> options{{0, 1, 2, 3}, {0, 1, 3, 2}, {0, 2, 1, 3}};
    std::size_t best = 0;
    for (std::size_t i = 1; i < options.size(); ++i) {
      if (cycle_weight(inst, options[i]) > cycle_weight(inst, options[best])) best = i;
    }
    return make_cover(inst, {options[best]});
  }
  return decode_gadget_matching(
      inst, max_weight_perfect_matching(build_gadget(inst), gadget_dual_hint(inst)));
}

namespace {

struct CoverSearch {
  const Instance& inst;
  std::vector<char> used;
  std::vector<Cycle> current;
  double best = -1.0;
  std::vector<Cycle> best_cycles;

  // Heaviest cycle through `members` (members[0] fixed first, one orientation).
  std::pair<double, Cycle> best_cycle(std::vector<Vertex> members) const {
    std::sort(members.begin() + 1, members.end());
    std::pair<double, Cycle> out{-1.0, {}};
    do {
      if (members[1] > members.back()) continue;
      const double w = cycle_weight(inst, members);
      if (w > out.first) out = {w, members};
    } while (std::next_permutation(members.begin() + 1, members.end()));
    return out;
  }

  void search(double acc) {
    const auto n = static_cast<Vertex>(inst.size());
    Vertex first = 0;
    while (first < n && used[first]) ++first;
    if (first == n) {
      if (acc > best) {
        best = acc;
        best_cycles = current;
      }
      return;
    }
    std::vector<Vertex> rest;
    for (Vertex v = first + 1; v < n; ++v) {
      if (!used[v]) rest.push_back(v);
    }
    const auto r = rest.size();
    // Choose the other members of first's cycle: at least 2, and leave either
    // nothing or at least 3 vertices behind.
    for (unsigned mask = 0; mask < (1u << r); ++mask) {
      const auto size = static_cast<std::size_t>(__builtin_popcount(mask));
      if (size < 2) continue;
      const auto left = r - size;
      if (left != 0 && left < 3) continue;
      std::vector<Vertex> members{first};
      for (std::size_t i = 0; i < r; ++i) {
        if (mask & (1u << i)) members.push_back(rest[i]);
      }
      auto [w, cycle] = best_cycle(members);
      for (Vertex v : members) used[v] = 1;
      current.push_back(cycle);
      search(acc + w);
      current.pop_back();
      for (Vertex v : members) used[v] = 0;
    }
  }
};

}  // namespace

CycleCover cycle_cover_brute_force(const Instance& inst) {
  require_solvable(inst);
  if (inst.size() > 9) {
    throw SizeLimitExceeded("brute-force cycle cover is capped at n = 9");
  }
  CoverSearch search{inst, std::vector<char>(inst.size(), 0), {}, -1.0, {}};
  search.search(0.0);
  return make_cover(inst, search.best_cycles);
}

}  // namespace maxtsp
