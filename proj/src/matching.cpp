#include "maxtsp/matching.hpp"

#include <algorithm>
#include <array>
#include <cassert>
#include <cmath>
#include <cstdint>
#include <set>
#include <string>

#include "maxtsp/error.hpp"

namespace maxtsp {

void validate_graph(const WeightedGraph& g) {
  if (g.num_vertices < 0) throw InvalidArgument("negative vertex count");
  std::set<std::pair<int, int>> seen;
  for (const auto& e : g.edges) {
    if (e.u < 0 || e.v < 0 || e.u >= g.num_vertices || e.v >= g.num_vertices) {
      throw InvalidArgument("edge endpoint out of range");
    }
    if (e.u == e.v) throw InvalidArgument("self-loop on vertex " + std::to_string(e.u));
    if (!std::isfinite(e.w)) throw InvalidArgument("non-finite edge weight");
    if (!seen.emplace(std::min(e.u, e.v), std::max(e.u, e.v)).second) {
      throw InvalidArgument("duplicate edge {" + std::to_string(e.u) + "," +
                            std::to_string(e.v) + "}");
    }
  }
}

bool is_perfect_matching(const WeightedGraph& g, const Matching& m) {
  std::set<std::pair<int, int>> edges;
  for (const auto& e : g.edges) edges.emplace(std::min(e.u, e.v), std::max(e.u, e.v));
  std::vector<int> hits(static_cast<std::size_t>(g.num_vertices), 0);
  for (auto [a, b] : m.pairs) {
    if (a < 0 || b < 0 || a >= g.num_vertices || b >= g.num_vertices) return false;
    if (!edges.count({std::min(a, b), std::max(a, b)})) return false;
    ++hits[a];
    ++hits[b];
  }
  return std::all_of(hits.begin(), hits.end(), [](int h) { return h == 1; });
}

namespace {

// Port of the O(V^3) primal-dual blossom method as formulated by Galil and
// popularised by J. van Rantwijk. Endpoint p of edge k is 2k (first vertex)
// or 2k+1 (second vertex); p ^ 1 is the opposite endpoint. Dual variables are
// stored doubled so integer weights give integer arithmetic throughout.
class BlossomMatcher {
 public:
  BlossomMatcher(int nv, std::vector<std::array<int, 2>> ends,
                 std::vector<std::int64_t> weights, std::vector<std::int64_t> hint = {})
      : nv_(nv),
        ne_(static_cast<int>(ends.size())),
        ends_(std::move(ends)),
        w_(std::move(weights)),
        hint_(std::move(hint)) {}

  /// mate[v] = partner or -1.
  std::vector<int> solve() {
    std::int64_t maxweight = 0;
    for (auto w : w_) maxweight = std::max(maxweight, w);

    endpoint_.resize(2 * static_cast<std::size_t>(ne_));
    neighbend_.assign(nv_, {});
    for (int k = 0; k < ne_; ++k) {
      endpoint_[2 * k] = ends_[k][0];
      endpoint_[2 * k + 1] = ends_[k][1];
      neighbend_[ends_[k][0]].push_back(2 * k + 1);
      neighbend_[ends_[k][1]].push_back(2 * k);
    }

    const int nb = 2 * nv_;
    mate_.assign(nv_, -1);
    label_.assign(nb, 0);
    labelend_.assign(nb, -1);
    inblossom_.resize(nv_);
    for (int v = 0; v < nv_; ++v) inblossom_[v] = v;
    blossomparent_.assign(nb, -1);
    blossomchilds_.assign(nb, {});
    blossombase_.assign(nb, -1);
    for (int v = 0; v < nv_; ++v) blossombase_[v] = v;
    blossomendps_.assign(nb, {});
    bestedge_.assign(nb, -1);
    blossombestedges_.assign(nb, {});
    has_bestedges_.assign(nb, 0);
    unused_.clear();
    for (int b = nb - 1; b >= nv_; --b) unused_.push_back(b);
    dual_.assign(nb, 0);
    for (int v = 0; v < nv_; ++v) dual_[v] = maxweight;
    allowedge_.assign(ne_, 0);
    warm_start();

    for (int stage = 0; stage < nv_; ++stage) {
      std::fill(label_.begin(), label_.end(), 0);
      std::fill(bestedge_.begin(), bestedge_.end(), -1);
      for (int b = nv_; b < nb; ++b) {
        blossombestedges_[b].clear();
        has_bestedges_[b] = 0;
      }
      std::fill(allowedge_.begin(), allowedge_.end(), 0);
      queue_.clear();

      for (int v = 0; v < nv_; ++v) {
        if (mate_[v] == -1 && label_[inblossom_[v]] == 0) assign_label(v, 1, -1);
      }

      bool augmented = false;
      while (true) {
        while (!queue_.empty() && !augmented) {
          const int v = queue_.back();
          queue_.pop_back();
          assert(label_[inblossom_[v]] == 1);
          for (int p : neighbend_[v]) {
            const int k = p / 2;
            const int w = endpoint_[p];
            if (inblossom_[v] == inblossom_[w]) continue;
            std::int64_t kslack = 0;
            if (!allowedge_[k]) {
              kslack = slack(k);
              if (kslack <= 0) allowedge_[k] = 1;
            }
            if (allowedge_[k]) {
              if (label_[inblossom_[w]] == 0) {
                assign_label(w, 2, p ^ 1);
              } else if (label_[inblossom_[w]] == 1) {
                const int base = scan_blossom(v, w);
                if (base >= 0) {
                  add_blossom(base, k);
                } else {
                  augment_matching(k);
                  augmented = true;
                  break;
                }
              } else if (label_[w] == 0) {
                assert(label_[inblossom_[w]] == 2);
                label_[w] = 2;
                labelend_[w] = p ^ 1;
              }
            } else if (label_[inblossom_[w]] == 1) {
              const int b = inblossom_[v];
              if (bestedge_[b] == -1 || kslack < slack(bestedge_[b])) bestedge_[b] = k;
            } else if (label_[w] == 0) {
              if (bestedge_[w] == -1 || kslack < slack(bestedge_[w])) bestedge_[w] = k;
            }
          }
        }
        if (augmented) break;

        // Dual adjustment. Maximum-cardinality mode: no delta of type 1
        // unless nothing else is possible.
        int deltatype = -1;
        std::int64_t delta = 0;
        int deltaedge = -1;
        int deltablossom = -1;

        for (int v = 0; v < nv_; ++v) {
          if (label_[inblossom_[v]] == 0 && bestedge_[v] != -1) {
            const std::int64_t d = slack(bestedge_[v]);
            if (deltatype == -1 || d < delta) {
              delta = d;
              deltatype = 2;
              deltaedge = bestedge_[v];
            }
          }
        }
        for (int b = 0; b < nb; ++b) {
          if (blossomparent_[b] == -1 && label_[b] == 1 && bestedge_[b] != -1) {
            const std::int64_t ks = slack(bestedge_[b]);
            assert(ks % 2 == 0);
            const std::int64_t d = ks / 2;
            if (deltatype == -1 || d < delta) {
              delta = d;
              deltatype = 3;
              deltaedge = bestedge_[b];
            }
          }
        }
        for (int b = nv_; b < nb; ++b) {
          if (blossombase_[b] >= 0 && blossomparent_[b] == -1 && label_[b] == 2 &&
              (deltatype == -1 || dual_[b] < delta)) {
            delta = dual_[b];
            deltatype = 4;
            deltablossom = b;
          }
        }
        if (deltatype == -1) {
          // Maximum cardinality reached; final update keeps duals verifiable.
          deltatype = 1;
          delta = 0;
          bool first = true;
          for (int v = 0; v < nv_; ++v) {
            if (first || dual_[v] < delta) delta = dual_[v];
            first = false;
          }
          delta = std::max<std::int64_t>(0, delta);
        }

        for (int v = 0; v < nv_; ++v) {
          const int l = label_[inblossom_[v]];
          if (l == 1) {
            dual_[v] -= delta;
          } else if (l == 2) {
            dual_[v] += delta;
          }
        }
        for (int b = nv_; b < nb; ++b) {
          if (blossombase_[b] >= 0 && blossomparent_[b] == -1) {
            if (label_[b] == 1) {
              dual_[b] += delta;
            } else if (label_[b] == 2) {
              dual_[b] -= delta;
            }
          }
        }

        if (deltatype == 1) {
          break;
        } else if (deltatype == 2) {
          allowedge_[deltaedge] = 1;
          int i = ends_[deltaedge][0];
          if (label_[inblossom_[i]] == 0) i = ends_[deltaedge][1];
          assert(label_[inblossom_[i]] == 1);
          queue_.push_back(i);
        } else if (deltatype == 3) {
          allowedge_[deltaedge] = 1;
          const int i = ends_[deltaedge][0];
          assert(label_[inblossom_[i]] == 1);
          queue_.push_back(i);
        } else {
          expand_blossom(deltablossom, false);
        }
      }

      if (!augmented) break;

      for (int b = nv_; b < nb; ++b) {
        if (blossomparent_[b] == -1 && blossombase_[b] >= 0 && label_[b] == 1 &&
            dual_[b] == 0) {
          expand_blossom(b, true);
        }
      }
    }

    std::vector<int> partner(nv_, -1);
    for (int v = 0; v < nv_; ++v) {
      if (mate_[v] >= 0) partner[v] = endpoint_[mate_[v]];
    }
    return partner;
  }

 private:
  std::int64_t slack(int k) const {
    return dual_[ends_[k][0]] + dual_[ends_[k][1]] - 2 * w_[k];
  }

  // Feasible even duals tightened per vertex, then a matching on the tight
  // edges. Even duals keep every free vertex on the same parity, which the
  // halved slack of S-S edges relies on.
  void warm_start() {
    constexpr std::int64_t kUnset = INT64_MIN;
    if (static_cast<int>(hint_.size()) == nv_) {
      for (int v = 0; v < nv_; ++v) dual_[v] = hint_[v] + (hint_[v] & 1);
    } else {
      std::vector<std::int64_t> best(nv_, kUnset);
      for (int k = 0; k < ne_; ++k) {
        for (int v : ends_[k]) best[v] = std::max(best[v], w_[k]);
      }
      for (int v = 0; v < nv_; ++v) {
        if (best[v] != kUnset) dual_[v] = best[v] + (best[v] & 1);
      }
    }
    for (int k = 0; k < ne_; ++k) {
      const std::int64_t deficit = -slack(k);
      if (deficit > 0) dual_[ends_[k][1]] += deficit;
    }
    for (int v = 0; v < nv_; ++v) {
      if (neighbend_[v].empty()) continue;
      std::int64_t need = kUnset;
      for (int p : neighbend_[v]) need = std::max(need, 2 * w_[p / 2] - dual_[endpoint_[p]]);
      dual_[v] = need;
    }
    for (int k = 0; k < ne_; ++k) {
      const int u = ends_[k][0];
      const int v = ends_[k][1];
      if (mate_[u] == -1 && mate_[v] == -1 && slack(k) == 0) {
        mate_[u] = 2 * k + 1;
        mate_[v] = 2 * k;
      }
    }
    // Augmenting paths over tight edges, found by depth-first search with
    // per-phase visit marks. Any path found is simple, so it is a valid
    // augmentation; paths hidden behind odd cycles are left to the main loop.
    std::vector<int> seen(nv_, -1);
    for (int phase = 0;; ++phase) {
      bool grew = false;
      for (int u = 0; u < nv_; ++u) {
        if (mate_[u] != -1 || neighbend_[u].empty()) continue;
        seen[u] = phase;
        if (tight_augment(u, seen, phase)) grew = true;
      }
      if (!grew) break;
    }
  }

  bool tight_augment(int root, std::vector<int>& seen, int phase) {
    struct Frame { int y; std::size_t next; int via; };
    std::vector<Frame> stack{{root, 0, -1}};
    while (!stack.empty()) {
      Frame& f = stack.back();
      const auto& adj = neighbend_[f.y];
      if (f.next == adj.size()) {
        stack.pop_back();
        continue;
      }
      const int p = adj[f.next++];
      const int x = endpoint_[p];
      if (seen[x] == phase || slack(p / 2) != 0) continue;
      seen[x] = phase;
      if (mate_[x] == -1) {
        // Flip the path root .. f.y - x.
        int cur_p = p;
        for (std::size_t i = stack.size(); i-- > 0;) {
          mate_[stack[i].y] = cur_p;
          mate_[endpoint_[cur_p]] = cur_p ^ 1;
          if (i == 0) break;
          cur_p = stack[i].via;
        }
        return true;
      }
      const int y = endpoint_[mate_[x]];
      if (seen[y] == phase) continue;
      seen[y] = phase;
      stack.push_back({y, 0, p});
    }
    return false;
  }

  void leaves(int b, std::vector<int>& out) const {
    if (b < nv_) {
      out.push_back(b);
      return;
    }
    for (int t : blossomchilds_[b]) leaves(t, out);
  }

  std::vector<int> leaves(int b) const {
    std::vector<int> out;
    leaves(b, out);
    return out;
  }

  void assign_label(int w, int t, int p) {
    const int b = inblossom_[w];
    assert(label_[w] == 0 && label_[b] == 0);
    label_[w] = label_[b] = t;
    labelend_[w] = labelend_[b] = p;
    bestedge_[w] = bestedge_[b] = -1;
    if (t == 1) {
      leaves(b, queue_);
    } else if (t == 2) {
      const int base = blossombase_[b];
      assert(mate_[base] >= 0);
      assign_label(endpoint_[mate_[base]], 1, mate_[base] ^ 1);
    }
  }

  // Trace back from v and w to find a new blossom (returns its base) or an
  // augmenting path (returns -1).
  int scan_blossom(int v, int w) {
    std::vector<int> path;
    int base = -1;
    while (v != -1 || w != -1) {
      int b = inblossom_[v];
      if (label_[b] & 4) {
        base = blossombase_[b];
        break;
      }
      assert(label_[b] == 1);
      path.push_back(b);
      label_[b] = 5;
      if (labelend_[b] == -1) {
        v = -1;
      } else {
        v = endpoint_[labelend_[b]];
        b = inblossom_[v];
        assert(label_[b] == 2);
        v = endpoint_[labelend_[b]];
      }
      if (w != -1) std::swap(v, w);
    }
    for (int b : path) label_[b] = 1;
    return base;
  }

  void add_blossom(int base, int k) {
    int v = ends_[k][0];
    int w = ends_[k][1];
    const int bb = inblossom_[base];
    int bv = inblossom_[v];
    int bw = inblossom_[w];
    const int b = unused_.back();
    unused_.pop_back();
    blossombase_[b] = base;
    blossomparent_[b] = -1;
    blossomparent_[bb] = b;
    auto& path = blossomchilds_[b];
    auto& endps = blossomendps_[b];
    path.clear();
    endps.clear();
    while (bv != bb) {
      blossomparent_[bv] = b;
      path.push_back(bv);
      endps.push_back(labelend_[bv]);
      v = endpoint_[labelend_[bv]];
      bv = inblossom_[v];
    }
    path.push_back(bb);
    std::reverse(path.begin(), path.end());
    std::reverse(endps.begin(), endps.end());
    endps.push_back(2 * k);
    while (bw != bb) {
      blossomparent_[bw] = b;
      path.push_back(bw);
      endps.push_back(labelend_[bw] ^ 1);
      w = endpoint_[labelend_[bw]];
      bw = inblossom_[w];
    }
    assert(label_[bb] == 1);
    label_[b] = 1;
    labelend_[b] = labelend_[bb];
    dual_[b] = 0;
    for (int leaf : leaves(b)) {
      if (label_[inblossom_[leaf]] == 2) queue_.push_back(leaf);
      inblossom_[leaf] = b;
    }

    bestedgeto_.assign(2 * static_cast<std::size_t>(nv_), -1);
    auto consider = [&](int edge) {
      int i = ends_[edge][0];
      int j = ends_[edge][1];
      if (inblossom_[j] == b) std::swap(i, j);
      const int bj = inblossom_[j];
      if (bj != b && label_[bj] == 1 &&
          (bestedgeto_[bj] == -1 || slack(edge) < slack(bestedgeto_[bj]))) {
        bestedgeto_[bj] = edge;
      }
    };
    for (int sub : path) {
      if (!has_bestedges_[sub]) {
        for (int leaf : leaves(sub)) {
          for (int p : neighbend_[leaf]) consider(p / 2);
        }
      } else {
        for (int edge : blossombestedges_[sub]) consider(edge);
      }
      blossombestedges_[sub].clear();
      has_bestedges_[sub] = 0;
      bestedge_[sub] = -1;
    }
    auto& best = blossombestedges_[b];
    best.clear();
    for (int edge : bestedgeto_) {
      if (edge != -1) best.push_back(edge);
    }
    has_bestedges_[b] = 1;
    bestedge_[b] = -1;
    for (int edge : best) {
      if (bestedge_[b] == -1 || slack(edge) < slack(bestedge_[b])) bestedge_[b] = edge;
    }
  }

  static int wrap(int j, int len) { return ((j % len) + len) % len; }

  void expand_blossom(int b, bool endstage) {
    const std::vector<int> childs = blossomchilds_[b];
    for (int s : childs) {
      blossomparent_[s] = -1;
      if (s < nv_) {
        inblossom_[s] = s;
      } else if (endstage && dual_[s] == 0) {
        expand_blossom(s, endstage);
      } else {
        for (int leaf : leaves(s)) inblossom_[leaf] = s;
      }
    }

    if (!endstage && label_[b] == 2) {
      const auto& endps = blossomendps_[b];
      const int len = static_cast<int>(childs.size());
      const int entrychild = inblossom_[endpoint_[labelend_[b] ^ 1]];
      int j = static_cast<int>(std::find(childs.begin(), childs.end(), entrychild) -
                               childs.begin());
      int jstep;
      int endptrick;
      if (j & 1) {
        j -= len;
        jstep = 1;
        endptrick = 0;
      } else {
        jstep = -1;
        endptrick = 1;
      }
      int p = labelend_[b];
      while (j != 0) {
        label_[endpoint_[p ^ 1]] = 0;
        label_[endpoint_[endps[wrap(j - endptrick, len)] ^ endptrick ^ 1]] = 0;
        assign_label(endpoint_[p ^ 1], 2, p);
        allowedge_[endps[wrap(j - endptrick, len)] / 2] = 1;
        j += jstep;
        p = endps[wrap(j - endptrick, len)] ^ endptrick;
        allowedge_[p / 2] = 1;
        j += jstep;
      }
      int bv = childs[wrap(j, len)];
      label_[endpoint_[p ^ 1]] = label_[bv] = 2;
      labelend_[endpoint_[p ^ 1]] = labelend_[bv] = p;
      bestedge_[bv] = -1;
      j += jstep;
      while (childs[wrap(j, len)] != entrychild) {
        bv = childs[wrap(j, len)];
        if (label_[bv] == 1) {
          j += jstep;
          continue;
        }
        int reached = -1;
        for (int leaf : leaves(bv)) {
          if (label_[leaf] != 0) {
            reached = leaf;
            break;
          }
        }
        if (reached != -1) {
          assert(label_[reached] == 2);
          assert(inblossom_[reached] == bv);
          label_[reached] = 0;
          label_[endpoint_[mate_[blossombase_[bv]]]] = 0;
          assign_label(reached, 2, labelend_[reached]);
        }
        j += jstep;
      }
    }

    label_[b] = labelend_[b] = -1;
    blossomchilds_[b].clear();
    blossomendps_[b].clear();
    blossombase_[b] = -1;
    blossombestedges_[b].clear();
    has_bestedges_[b] = 0;
    bestedge_[b] = -1;
    unused_.push_back(b);
  }

  // Swap matched/unmatched edges along the even path from v to the base of b.
  void augment_blossom(int b, int v) {
    int t = v;
    while (blossomparent_[t] != b) t = blossomparent_[t];
    if (t >= nv_) augment_blossom(t, v);
    auto& childs = blossomchilds_[b];
    auto& endps = blossomendps_[b];
    const int len = static_cast<int>(childs.size());
    const int i = static_cast<int>(std::find(childs.begin(), childs.end(), t) -
                                   childs.begin());
    int j = i;
    int jstep;
    int endptrick;
    if (i & 1) {
      j -= len;
      jstep = 1;
      endptrick = 0;
    } else {
      jstep = -1;
      endptrick = 1;
    }
    while (j != 0) {
      j += jstep;
      t = childs[wrap(j, len)];
      const int p = endps[wrap(j - endptrick, len)] ^ endptrick;
      if (t >= nv_) augment_blossom(t, endpoint_[p]);
      j += jstep;
      t = childs[wrap(j, len)];
      if (t >= nv_) augment_blossom(t, endpoint_[p ^ 1]);
      mate_[endpoint_[p]] = p ^ 1;
      mate_[endpoint_[p ^ 1]] = p;
    }
    std::rotate(childs.begin(), childs.begin() + i, childs.end());
    std::rotate(endps.begin(), endps.begin() + i, endps.end());
    blossombase_[b] = blossombase_[childs[0]];
    assert(blossombase_[b] == v);
  }

  void augment_matching(int k) {
    const int v = ends_[k][0];
    const int w = ends_[k][1];
    const std::array<std::pair<int, int>, 2> starts{{{v, 2 * k + 1}, {w, 2 * k}}};
    for (auto [s, p] : starts) {
      while (true) {
        const int bs = inblossom_[s];
        assert(label_[bs] == 1);
        if (bs >= nv_) augment_blossom(bs, s);
        mate_[s] = p;
        if (labelend_[bs] == -1) break;
        const int t = endpoint_[labelend_[bs]];
        const int bt = inblossom_[t];
        assert(label_[bt] == 2);
        s = endpoint_[labelend_[bt]];
        const int j = endpoint_[labelend_[bt] ^ 1];
        assert(blossombase_[bt] == t);
        if (bt >= nv_) augment_blossom(bt, j);
        mate_[j] = labelend_[bt];
        p = labelend_[bt] ^ 1;
      }
    }
  }

  int nv_;
  int ne_;
  std::vector<std::array<int, 2>> ends_;
  std::vector<std::int64_t> w_;

  std::vector<int> endpoint_;
  std::vector<std::vector<int>> neighbend_;
  std::vector<std::int64_t> hint_;
  std::vector<int> mate_;
  std::vector<int> label_;
  std::vector<int> labelend_;
  std::vector<int> inblossom_;
  std::vector<int> blossomparent_;
  std::vector<std::vector<int>> blossomchilds_;
  std::vector<int> blossombase_;
  std::vector<std::vector<int>> blossomendps_;
  std::vector<int> bestedge_;
  std::vector<std::vector<int>> blossombestedges_;
  std::vector<char> has_bestedges_;
  std::vector<int> unused_;
  std::vector<std::int64_t> dual_;
  std::vector<char> allowedge_;
  std::vector<int> queue_;
  std::vector<int> bestedgeto_;
};

// Largest |w| maps to at most 2^40 grid steps; duals stay far from overflow.
constexpr int kGridBits = 40;

double grid_scale(const WeightedGraph& g) {
  double top = 0.0;
  for (const auto& e : g.edges) top = std::max(top, std::abs(e.w));
  if (top == 0.0) return 1.0;
  int exp = 0;
  std::frexp(top, &exp);  // top < 2^exp
  return std::ldexp(1.0, kGridBits - exp);
}

}  // namespace

Matching max_weight_perfect_matching(const WeightedGraph& g,
                                     std::span<const double> dual_hint) {
  validate_graph(g);
  if (g.num_vertices % 2 != 0) {
    throw InvalidArgument("perfect matching needs an even vertex count, got " +
                          std::to_string(g.num_vertices));
  }
  Matching result;
  if (g.num_vertices == 0) return result;

  const double scale = grid_scale(g);
  std::vector<std::array<int, 2>> ends;
  std::vector<std::int64_t> weights;
  ends.reserve(g.edges.size());
  weights.reserve(g.edges.size());
  for (const auto& e : g.edges) {
    ends.push_back({e.u, e.v});
    weights.push_back(std::llround(e.w * scale));
  }

  // Doubled and on the weight grid; out-of-range hints are ignored.
  std::vector<std::int64_t> hint;
  if (static_cast<int>(dual_hint.size()) == g.num_vertices) {
    constexpr double kHintLimit = 0x1p60;
    for (double y : dual_hint) {
      const double scaled = std::ceil(2.0 * y * scale);
      if (!std::isfinite(scaled) || std::abs(scaled) > kHintLimit) {
        hint.clear();
        break;
      }
      hint.push_back(static_cast<std::int64_t>(scaled));
    }
  }
  BlossomMatcher matcher(g.num_vertices, std::move(ends), std::move(weights),
                         std::move(hint));
  const auto partner = matcher.solve();
  for (int v = 0; v < g.num_vertices; ++v) {
    if (partner[v] < 0) throw NoPerfectMatching("graph has no perfect matching");
  }

  std::set<std::pair<int, int>> chosen;
  for (int v = 0; v < g.num_vertices; ++v) {
    if (v < partner[v]) chosen.emplace(v, partner[v]);
  }
  for (const auto& e : g.edges) {
    if (chosen.count({std::min(e.u, e.v), std::max(e.u, e.v)})) result.weight += e.w;
  }
  result.pairs.assign(chosen.begin(), chosen.end());
  return result;
}

namespace {

struct BruteForce {
  int n;
  std::vector<double> w;     // n*n
  std::vector<char> has;     // n*n
  std::vector<int> partner;
  std::vector<int> best_partner;
  double best = 0.0;
  bool found = false;

  void search(double acc) {
    int v = 0;
    while (v < n && partner[v] != -1) ++v;
    if (v == n) {
      if (!found || acc > best) {
        best = acc;
        best_partner = partner;
        found = true;
      }
      return;
    }
    for (int u = v + 1; u < n; ++u) {
      if (partner[u] != -1 || !has[v * n + u]) continue;
      partner[v] = u;
      partner[u] = v;
      search(acc + w[v * n + u]);
      partner[v] = partner[u] = -1;
    }
  }
};

}  // namespace

Matching matching_brute_force(const WeightedGraph& g) {
  validate_graph(g);
  if (g.num_vertices > 12) {
    throw SizeLimitExceeded("brute-force matching is capped at 12 vertices");
  }
  if (g.num_vertices % 2 != 0) {
    throw InvalidArgument("perfect matching needs an even vertex count");
  }
  const int n = g.num_vertices;
  BruteForce bf{n, std::vector<double>(n * n, 0.0), std::vector<char>(n * n, 0),
                std::vector<int>(n, -1), {}, 0.0, false};
  for (const auto& e : g.edges) {
    bf.w[e.u * n + e.v] = bf.w[e.v * n + e.u] = e.w;
    bf.has[e.u * n + e.v] = bf.has[e.v * n + e.u] = 1;
  }
  bf.search(0.0);
  if (!bf.found) throw NoPerfectMatching("graph has no perfect matching");

  Matching m;
  for (int v = 0; v < n; ++v) {
    if (v < bf.best_partner[v]) {
      m.pairs.emplace_back(v, bf.best_partner[v]);
      m.weight += bf.w[v * n + bf.best_partner[v]];
    }
  }
  return m;
}

}  // namespace maxtsp
