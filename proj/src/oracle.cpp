#include "dyncol/oracle.hpp"

#include <algorithm>
#include <chrono>
#include <deque>

namespace dyncol {

const char* to_string(SearchStatus status) {
  switch (status) {
    case SearchStatus::Found: return "found";
    case SearchStatus::Infeasible: return "infeasible";
    case SearchStatus::Unknown: return "unknown";
  }
  return "unknown";
}

namespace {

using Clock = std::chrono::steady_clock;

struct BudgetExceeded {};

class BudgetClock {
 public:
  explicit BudgetClock(const SearchBudget& budget)
      : budget_(budget), deadline_(Clock::now() + std::chrono::duration_cast<Clock::duration>(
                                                      std::chrono::duration<double>(budget.time_limit_seconds))) {}

  void tick() {
    ++nodes_;
    if (nodes_ > budget_.max_nodes) throw BudgetExceeded{};
    if ((nodes_ & 0x3FF) == 0 && Clock::now() > deadline_) throw BudgetExceeded{};
  }
  std::uint64_t nodes() const { return nodes_; }

 private:
  SearchBudget budget_;
  Clock::time_point deadline_;
  std::uint64_t nodes_ = 0;
};

// Branch vertices first in breadth-first order; each degree-2 run directly
// after the later of its two ends.
std::vector<Vertex> search_order(const Graph& g) {
  const auto n = g.vertex_count();
  struct Run {
    Vertex a, b;
    std::vector<Vertex> interior;  // from a to b
  };
  std::vector<Run> runs;
  std::vector<char> interior(n, 0), branch(n, 0);
  for (std::size_t v = 0; v < n; ++v) branch[v] = g.degree(static_cast<Vertex>(v)) != 2;

  std::vector<char> seen(n, 0);
  for (std::size_t s = 0; s < n; ++s) {
    const auto v = static_cast<Vertex>(s);
    if (g.degree(v) != 2 || seen[v]) continue;
    // Collect the maximal run through v.
    std::deque<Vertex> run{v};
    seen[v] = 1;
    Vertex ends[2] = {-1, -1};
    bool cycle = false;
    for (int side = 0; side < 2 && !cycle; ++side) {
      Vertex prev = v;
      Vertex cur = g.neighbors(v)[side];
      while (true) {
        if (cur == v) {
          cycle = true;
          break;
        }
        if (g.degree(cur) != 2) {
          ends[side] = cur;
          break;
        }
        seen[cur] = 1;
        side == 0 ? run.push_front(cur) : run.push_back(cur);
        auto nb = g.neighbors(cur);
        const Vertex next = nb[0] == prev ? nb[1] : nb[0];
        prev = cur;
        cur = next;
      }
    }
    if (cycle) {
      const auto pivot_it = std::min_element(run.begin(), run.end());
      std::rotate(run.begin(), pivot_it, run.end());
      const Vertex pivot = run.front();
      branch[pivot] = 1;
      runs.push_back({pivot, pivot, {run.begin() + 1, run.end()}});
    } else {
      runs.push_back({ends[0], ends[1], {run.begin(), run.end()}});
    }
    for (Vertex w : runs.back().interior) interior[w] = 1;
  }

  std::vector<std::vector<std::size_t>> runs_at(n);
  for (std::size_t r = 0; r < runs.size(); ++r) {
    runs_at[runs[r].a].push_back(r);
    if (runs[r].b != runs[r].a) runs_at[runs[r].b].push_back(r);
  }

  std::vector<Vertex> order;
  order.reserve(n);
  std::vector<char> placed(n, 0), queued(n, 0), emitted(runs.size(), 0);
  for (std::size_t s = 0; s < n; ++s) {
    if (!branch[s] || queued[s]) continue;
    std::deque<Vertex> queue{static_cast<Vertex>(s)};
    queued[s] = 1;
    while (!queue.empty()) {
      const Vertex x = queue.front();
      queue.pop_front();
      order.push_back(x);
      placed[x] = 1;
      std::vector<Vertex> next;
      for (std::size_t r : runs_at[x]) {
        const Run& run = runs[r];
        const Vertex other = run.a == x ? run.b : run.a;
        if (!emitted[r] && placed[other]) {
          emitted[r] = 1;
          if (run.a == x) {
            order.insert(order.end(), run.interior.begin(), run.interior.end());
          } else {
            order.insert(order.end(), run.interior.rbegin(), run.interior.rend());
          }
        }
        next.push_back(other);
      }
      for (Vertex w : g.neighbors(x)) {
        if (branch[w]) next.push_back(w);
      }
      std::sort(next.begin(), next.end());
      for (Vertex w : next) {
        if (!queued[w]) {
          queued[w] = 1;
          queue.push_back(w);
        }
      }
    }
  }
  return order;
}

class ColoringSearcher {
 public:
  ColoringSearcher(const Graph& g, int k, bool dynamic, BudgetClock& clock)
      : g_(g), k_(k), dynamic_(dynamic), clock_(clock), order_(search_order(g)),
        color_(g.vertex_count(), 0), uncolored_(g.vertex_count(), 0) {
    for (std::size_t v = 0; v < g.vertex_count(); ++v) uncolored_[v] = g.degree(static_cast<Vertex>(v));
  }

  bool run() { return descend(0, 0); }
  const std::vector<int>& colors() const { return color_; }

 private:
  bool double_adjacency_ok(Vertex x) const {
    if (g_.degree(x) < 2 || uncolored_[x] > 0) return true;
    const int first = color_[g_.neighbors(x)[0]];
    for (Vertex w : g_.neighbors(x)) {
      if (color_[w] != first) return true;
    }
    return false;
  }

  bool assign(Vertex v, int c) {
    for (Vertex w : g_.neighbors(v)) {
      if (color_[w] == c) return false;
    }
    color_[v] = c;
    for (Vertex w : g_.neighbors(v)) --uncolored_[w];
    if (dynamic_) {
      bool ok = double_adjacency_ok(v);
      for (Vertex w : g_.neighbors(v)) ok = ok && double_adjacency_ok(w);
      if (!ok) {
        unassign(v);
        return false;
      }
    }
    return true;
  }

  void unassign(Vertex v) {
    color_[v] = 0;
    for (Vertex w : g_.neighbors(v)) ++uncolored_[w];
  }

  bool descend(std::size_t pos, int used) {
    if (pos == order_.size()) return true;
    const Vertex v = order_[pos];
    // Colors are interchangeable, so a new color is only ever the next one.
    const int top = std::min(k_, used + 1);
    for (int c = 1; c <= top; ++c) {
      clock_.tick();
      if (!assign(v, c)) continue;
      if (descend(pos + 1, std::max(used, c))) return true;
      unassign(v);
    }
    return false;
  }

  const Graph& g_;
  int k_;
  bool dynamic_;
  BudgetClock& clock_;
  std::vector<Vertex> order_;
  std::vector<int> color_;
  std::vector<int> uncolored_;
};

ColoringSearch search_coloring(const Graph& g, int k, bool dynamic, const SearchBudget& budget) {
  ColoringSearch out;
  if (g.vertex_count() > budget.max_vertices) return out;
  if (k < 1) {
    out.status = g.vertex_count() == 0 ? SearchStatus::Found : SearchStatus::Infeasible;
    if (g.vertex_count() == 0) out.coloring = VertexColoring{k, {}};
    return out;
  }
  BudgetClock clock(budget);
  VertexColoring result{k, std::vector<int>(g.vertex_count(), 0)};
  try {
    // Components are independent; searching them separately avoids
    // backtracking across unrelated parts.
    for (const auto& comp : connected_components(g)) {
      const InducedSubgraph sub = induced_subgraph(g, comp);
      ColoringSearcher searcher(sub.graph, k, dynamic, clock);
      if (!searcher.run()) {
        out.status = SearchStatus::Infeasible;
        out.nodes = clock.nodes();
        return out;
      }
      for (std::size_t i = 0; i < comp.size(); ++i) result.colors[comp[i]] = searcher.colors()[i];
    }
  } catch (const BudgetExceeded&) {
    out.nodes = clock.nodes();
    return out;
  }
  out.status = SearchStatus::Found;
  out.coloring = std::move(result);
  out.nodes = clock.nodes();
  return out;
}

ExactResult smallest_palette(const Graph& g, bool dynamic, const SearchBudget& budget) {
  ExactResult out;
  const auto n = static_cast<int>(g.vertex_count());
  if (n == 0) {
    out.value = 0;
    out.witness = VertexColoring{0, {}};
    return out;
  }
  for (int k = 1; k <= n; ++k) {
    ColoringSearch s = search_coloring(g, k, dynamic, budget);
    out.nodes += s.nodes;
    if (s.status == SearchStatus::Unknown) return out;
    if (s.status == SearchStatus::Found) {
      out.value = k;
      out.witness = std::move(s.coloring);
      return out;
    }
  }
  return out;
}

class IndependenceSearcher {
 public:
  IndependenceSearcher(const Graph& g, BudgetClock& clock)
      : g_(g), clock_(clock), alive_(g.vertex_count(), 1), degree_(g.vertex_count(), 0) {
    for (std::size_t v = 0; v < g.vertex_count(); ++v) degree_[v] = g.degree(static_cast<Vertex>(v));
  }

  std::vector<Vertex> run() {
    descend(static_cast<int>(g_.vertex_count()));
    return best_;
  }

 private:
  void remove(Vertex v, std::vector<Vertex>& log) {
    alive_[v] = 0;
    log.push_back(v);
    for (Vertex w : g_.neighbors(v)) --degree_[w];
  }
  void restore(std::vector<Vertex>& log, std::size_t mark) {
    while (log.size() > mark) {
      const Vertex v = log.back();
      log.pop_back();
      alive_[v] = 1;
      for (Vertex w : g_.neighbors(v)) ++degree_[w];
    }
  }
  void take(Vertex v, std::vector<Vertex>& log, int& remaining) {
    chosen_.push_back(v);
    remove(v, log);
    --remaining;
    for (Vertex w : g_.neighbors(v)) {
      if (alive_[w]) {
        remove(w, log);
        --remaining;
      }
    }
  }

  void descend(int remaining) {
    clock_.tick();
    if (chosen_.size() + static_cast<std::size_t>(remaining) <= best_.size()) return;
    if (remaining == 0) {
      best_ = chosen_;
      return;
    }
    const std::size_t chosen_mark = chosen_.size();
    const std::size_t log_mark = log_.size();
    // Vertices of remaining degree at most one always belong to some maximum set.
    Vertex low = -1, high = -1;
    for (std::size_t s = 0; s < g_.vertex_count(); ++s) {
      const auto v = static_cast<Vertex>(s);
      if (!alive_[v]) continue;
      if (degree_[v] <= 1) {
        low = v;
        break;
      }
      if (high < 0 || degree_[v] > degree_[high]) high = v;
    }
    int left = remaining;
    if (low >= 0) {
      take(low, log_, left);
      descend(left);
    } else {
      take(high, log_, left);
      descend(left);
      chosen_.resize(chosen_mark);
      restore(log_, log_mark);
      left = remaining;
      remove(high, log_);
      descend(left - 1);
    }
    chosen_.resize(chosen_mark);
    restore(log_, log_mark);
  }

  const Graph& g_;
  BudgetClock& clock_;
  std::vector<char> alive_;
  std::vector<int> degree_;
  std::vector<Vertex> chosen_, best_, log_;
};

}  // namespace

ColoringSearch find_dynamic_k_coloring(const Graph& g, int k, const SearchBudget& budget) {
  return search_coloring(g, k, true, budget);
}

ColoringSearch find_proper_k_coloring(const Graph& g, int k, const SearchBudget& budget) {
  return search_coloring(g, k, false, budget);
}

ExactResult exact_dynamic_chromatic(const Graph& g, const SearchBudget& budget) {
  return smallest_palette(g, true, budget);
}

ExactResult exact_chromatic(const Graph& g, const SearchBudget& budget) {
  return smallest_palette(g, false, budget);
}

ExactResult exact_dynamic_edge_chromatic(const Graph& g, const SearchBudget& budget) {
  return smallest_palette(line_graph(g).graph, true, budget);
}

IndependenceResult exact_independence(const Graph& g, const SearchBudget& budget) {
  IndependenceResult out;
  if (g.vertex_count() > budget.max_vertices) return out;
  BudgetClock clock(budget);
  try {
    IndependenceSearcher searcher(g, clock);
    out.witness = searcher.run();
    std::sort(out.witness.begin(), out.witness.end());
    out.value = static_cast<int>(out.witness.size());
  } catch (const BudgetExceeded&) {
    out.witness.clear();
  }
  out.nodes = clock.nodes();
  return out;
}

}  // namespace dyncol
