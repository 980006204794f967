#include "sptree/gw_forest.hpp"

#include <algorithm>
#include <cstddef>
#include <deque>
#include <limits>
#include <stdexcept>
#include <utility>

#include "sptree/errors.hpp"
#include "sptree/random.hpp"

namespace sptree {

namespace {

constexpr int kExhaustiveAxiomLimit = 12;
constexpr int kSampledAxiomChecks = 1000;
constexpr double kDualSlack = 1e-9;

}  // namespace

CutFunction::CutFunction(int n_vertices, std::function<bool(std::uint64_t)> fn)
    : n_(n_vertices), fn_(std::move(fn)) {
  if (n_ < 1 || n_ > 63) {
    throw std::invalid_argument("cut functions support 1..63 vertices");
  }
  if (!fn_) throw std::invalid_argument("cut function callable must be set");
}

std::uint64_t CutFunction::full_mask() const {
  return (std::uint64_t{1} << n_) - 1;
}

void CutFunction::check_axioms() const {
  const std::uint64_t full = full_mask();
  if (fn_(full)) throw std::invalid_argument("cut function violates f(V) = 0");

  if (n_ <= kExhaustiveAxiomLimit) {
    for (std::uint64_t s = 1; s < full; ++s) {
      if (fn_(s) != fn_(full ^ s)) {
        throw std::invalid_argument("cut function violates symmetry f(S) = f(V\\S)");
      }
    }
    for (std::uint64_t a = 1; a < full; ++a) {
      if (fn_(a)) continue;
      const std::uint64_t rest = full ^ a;
      for (std::uint64_t b = rest; b != 0; b = (b - 1) & rest) {
        if (!fn_(b) && fn_(a | b)) {
          throw std::invalid_argument("cut function violates disjunctivity");
        }
      }
    }
    return;
  }

  RandomSource rng(0x5eedc0defull);
  for (int i = 0; i < kSampledAxiomChecks; ++i) {
    std::uint64_t s = rng.next_u64() & full;
    if (s != 0 && s != full && fn_(s) != fn_(full ^ s)) {
      throw std::invalid_argument("cut function violates symmetry f(S) = f(V\\S)");
    }
    // Random disjoint pair: each vertex goes to A, B, or neither.
    std::uint64_t a = 0, b = 0;
    for (int v = 0; v < n_; ++v) {
      switch (rng.next_u64() % 3) {
        case 0: a |= std::uint64_t{1} << v; break;
        case 1: b |= std::uint64_t{1} << v; break;
        default: break;
      }
    }
    if (a != 0 && b != 0 && !fn_(a) && !fn_(b) && fn_(a | b)) {
      throw std::invalid_argument("cut function violates disjunctivity");
    }
  }
}

CutFunction steiner_cut_function(int n_vertices, const std::vector<int>& terminals) {
  if (terminals.empty()) throw std::invalid_argument("terminal set must not be empty");
  std::uint64_t terminal_mask = 0;
  for (int t : terminals) {
    if (t < 0 || t >= n_vertices) throw std::out_of_range("terminal outside vertex range");
    terminal_mask |= std::uint64_t{1} << t;
  }
  return CutFunction(n_vertices, [terminal_mask](std::uint64_t s) {
    const std::uint64_t hit = s & terminal_mask;
    return hit != 0 && hit != terminal_mask;
  });
}

namespace {

struct EdgeKey {
  double epsilon = std::numeric_limits<double>::infinity();
  int u = -1;
  int v = -1;
  int index = -1;

  bool better_than(const EdgeKey& other) const {
    if (epsilon != other.epsilon) return epsilon < other.epsilon;
    if (u != other.u) return u < other.u;
    return v < other.v;
  }
};

std::uint64_t side_mask(int n, const std::vector<WeightedEdge>& edges,
                        const std::vector<char>& kept, int skip, int start) {
  std::vector<std::vector<int>> adj(static_cast<std::size_t>(n));
  for (std::size_t i = 0; i < edges.size(); ++i) {
    if (!kept[i] || static_cast<int>(i) == skip) continue;
    adj[static_cast<std::size_t>(edges[i].u)].push_back(edges[i].v);
    adj[static_cast<std::size_t>(edges[i].v)].push_back(edges[i].u);
  }
  std::uint64_t mask = 0;
  std::deque<int> queue{start};
  mask |= std::uint64_t{1} << start;
  while (!queue.empty()) {
    int v = queue.front();
    queue.pop_front();
    for (int w : adj[static_cast<std::size_t>(v)]) {
      if (!(mask >> w & 1)) {
        mask |= std::uint64_t{1} << w;
        queue.push_back(w);
      }
    }
  }
  return mask;
}

}  // namespace

ForestSolution gw_solve(const WeightedGraph& graph, const CutFunction& f, GwTrace* trace) {
  const int n = graph.n_vertices();
  if (n > 63) throw SizeBoundError("constrained forest solver supports at most 63 vertices");
  if (f.n_vertices() != n) {
    throw std::invalid_argument("cut function and graph disagree on vertex count");
  }
  f.check_axioms();

  const auto& edges = graph.edges();
  std::vector<int> component(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v) component[static_cast<std::size_t>(v)] = v;
  std::vector<double> dual(static_cast<std::size_t>(n), 0.0);
  std::vector<int> picked;  // indices into edges, in merge order
  double z_drlp = 0.0;

  while (true) {
    // Component masks and activity under the current partition.
    std::vector<std::uint64_t> mask(static_cast<std::size_t>(n), 0);
    for (int v = 0; v < n; ++v) {
      mask[static_cast<std::size_t>(component[static_cast<std::size_t>(v)])] |=
          std::uint64_t{1} << v;
    }
    std::vector<char> active(static_cast<std::size_t>(n), 0);
    int active_count = 0;
    for (int c = 0; c < n; ++c) {
      if (mask[static_cast<std::size_t>(c)] == 0) continue;
      if (f(mask[static_cast<std::size_t>(c)])) {
        active[static_cast<std::size_t>(c)] = 1;
        active_count++;
      }
    }
    if (active_count == 0) break;

    EdgeKey best;
    for (std::size_t i = 0; i < edges.size(); ++i) {
      const WeightedEdge& e = edges[i];
      const int cu = component[static_cast<std::size_t>(e.u)];
      const int cv = component[static_cast<std::size_t>(e.v)];
      if (cu == cv) continue;
      const int denom = active[static_cast<std::size_t>(cu)] + active[static_cast<std::size_t>(cv)];
      if (denom == 0) continue;
      EdgeKey key{(e.cost - dual[static_cast<std::size_t>(e.u)] -
                   dual[static_cast<std::size_t>(e.v)]) / denom,
                  e.u, e.v, static_cast<int>(i)};
      if (key.better_than(best)) best = key;
    }
    if (best.index < 0) {
      throw InfeasibleError("active component has no candidate edge; graph cannot satisfy f");
    }
    if (best.epsilon < -kDualSlack) {
      throw InvariantError("negative dual increment: dual constraints already violated");
    }
    const double eps = std::max(best.epsilon, 0.0);

    for (int v = 0; v < n; ++v) {
      if (active[static_cast<std::size_t>(component[static_cast<std::size_t>(v)])]) {
        dual[static_cast<std::size_t>(v)] += eps;
      }
    }
    z_drlp += eps * active_count;

    const WeightedEdge& chosen = edges[static_cast<std::size_t>(best.index)];
    const int from = component[static_cast<std::size_t>(chosen.v)];
    const int into = component[static_cast<std::size_t>(chosen.u)];
    for (int v = 0; v < n; ++v) {
      if (component[static_cast<std::size_t>(v)] == from) {
        component[static_cast<std::size_t>(v)] = into;
      }
    }
    picked.push_back(best.index);

    if (trace != nullptr) {
      trace->steps.push_back(GwMergeStep{chosen, eps, dual, component});
    }
  }

  // Pruning: drop an edge when both of its sides are inactive, heaviest
  // first, repeated until no edge can be removed.
  std::vector<char> kept(edges.size(), 0);
  for (int i : picked) kept[static_cast<std::size_t>(i)] = 1;
  std::vector<int> order = picked;
  std::sort(order.begin(), order.end(), [&edges](int a, int b) {
    const WeightedEdge& ea = edges[static_cast<std::size_t>(a)];
    const WeightedEdge& eb = edges[static_cast<std::size_t>(b)];
    if (ea.cost != eb.cost) return ea.cost > eb.cost;
    if (ea.u != eb.u) return ea.u < eb.u;
    return ea.v < eb.v;
  });
  bool changed = true;
  while (changed) {
    changed = false;
    for (int i : order) {
      if (!kept[static_cast<std::size_t>(i)]) continue;
      const WeightedEdge& e = edges[static_cast<std::size_t>(i)];
      const std::uint64_t su = side_mask(n, edges, kept, i, e.u);
      const std::uint64_t sv = side_mask(n, edges, kept, i, e.v);
      if (!f(su) && !f(sv)) {
        kept[static_cast<std::size_t>(i)] = 0;
        changed = true;
      }
    }
  }

  ForestSolution out;
  out.dual_bound = z_drlp;
  for (std::size_t i = 0; i < edges.size(); ++i) {
    if (kept[i]) {
      out.edges.push_back(edges[i]);
      out.total_cost += edges[i].cost;
    }
  }
  std::sort(out.edges.begin(), out.edges.end(), [](const WeightedEdge& a, const WeightedEdge& b) {
    return a.u != b.u ? a.u < b.u : a.v < b.v;
  });
  return out;
}

}  // namespace sptree
