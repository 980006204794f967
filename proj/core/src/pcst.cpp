#include "sptree/pcst.hpp"

#include <algorithm>
#include <cstddef>
#include <deque>
#include <limits>
#include <stdexcept>

#include "sptree/errors.hpp"

namespace sptree {

namespace {

constexpr double kDualSlack = 1e-9;
constexpr double kInf = std::numeric_limits<double>::infinity();

struct Deactivation {
  std::vector<int> members;  // cluster snapshot at deactivation time
};

}  // namespace

PcstInstance PcstInstance::from_graph(const WeightedGraph& graph) {
  if (!graph.root().has_value()) throw std::invalid_argument("graph has no root");
  if (!graph.has_prizes()) throw std::invalid_argument("graph has no prizes");
  PcstInstance inst{graph, *graph.root(), graph.prizes()};
  inst.validate();
  return inst;
}

void PcstInstance::validate() const {
  if (root < 0 || root >= graph.n_vertices()) throw std::out_of_range("root outside graph");
  if (static_cast<int>(prizes.size()) != graph.n_vertices()) {
    throw std::invalid_argument("prize vector must have one entry per vertex");
  }
  for (double p : prizes) {
    if (p < 0.0) throw std::invalid_argument("prizes must be non-negative");
  }
}

PcstSolution pcst_solve(const PcstInstance& instance, PcstTrace* trace) {
  instance.validate();
  const int n = instance.graph.n_vertices();
  const int root = instance.root;
  const auto& edges = instance.graph.edges();

  std::vector<int> component(static_cast<std::size_t>(n));
  std::vector<double> dual(static_cast<std::size_t>(n), 0.0);
  std::vector<double> cluster_w(static_cast<std::size_t>(n), 0.0);
  std::vector<char> active(static_cast<std::size_t>(n), 0);
  for (int v = 0; v < n; ++v) {
    component[static_cast<std::size_t>(v)] = v;
    active[static_cast<std::size_t>(v)] = (v == root) ? 0 : 1;
  }

  std::vector<int> picked;
  std::vector<Deactivation> deactivations;
  double z_drlp = 0.0;

  auto cluster_prize = [&](int rep) {
    double total = 0.0;
    for (int v = 0; v < n; ++v) {
      if (component[static_cast<std::size_t>(v)] == rep) {
        total += instance.prizes[static_cast<std::size_t>(v)];
      }
    }
    return total;
  };

  while (true) {
    int active_count = 0;
    for (int c = 0; c < n; ++c) {
      if (active[static_cast<std::size_t>(c)]) active_count++;
    }
    if (active_count == 0) break;

    // eps1: cheapest tight edge between distinct clusters.
    double eps1 = kInf;
    int eps1_index = -1;
    for (std::size_t i = 0; i < edges.size(); ++i) {
      const WeightedEdge& e = edges[i];
      const int cu = component[static_cast<std::size_t>(e.u)];
      const int cv = component[static_cast<std::size_t>(e.v)];
      if (cu == cv) continue;
      const int denom = active[static_cast<std::size_t>(cu)] + active[static_cast<std::size_t>(cv)];
      if (denom == 0) continue;
      const double eps = (e.cost - dual[static_cast<std::size_t>(e.u)] -
                          dual[static_cast<std::size_t>(e.v)]) / denom;
      const bool better =
          eps < eps1 ||
          (eps == eps1 && eps1_index >= 0 &&
           (e.u < edges[static_cast<std::size_t>(eps1_index)].u ||
            (e.u == edges[static_cast<std::size_t>(eps1_index)].u &&
             e.v < edges[static_cast<std::size_t>(eps1_index)].v)));
      if (better) {
        eps1 = eps;
        eps1_index = static_cast<int>(i);
      }
    }

    // eps2: slack until some active cluster's prize budget is exhausted.
    double eps2 = kInf;
    int eps2_rep = -1;
    for (int c = 0; c < n; ++c) {
      if (!active[static_cast<std::size_t>(c)]) continue;
      const double slack = cluster_prize(c) - cluster_w[static_cast<std::size_t>(c)];
      if (slack < eps2) {
        eps2 = slack;
        eps2_rep = c;
      }
    }
    if (eps2_rep < 0 && eps1_index < 0) {
      throw InvariantError("active cluster without a growth move");
    }

    double eps = std::min(eps1, eps2);
    if (eps < -kDualSlack) {
      throw InvariantError("negative dual increment in prize-collecting growth");
    }
    eps = std::max(eps, 0.0);

    for (int c = 0; c < n; ++c) {
      if (active[static_cast<std::size_t>(c)]) cluster_w[static_cast<std::size_t>(c)] += eps;
    }
    for (int v = 0; v < n; ++v) {
      if (active[static_cast<std::size_t>(component[static_cast<std::size_t>(v)])]) {
        dual[static_cast<std::size_t>(v)] += eps;
      }
    }
    z_drlp += eps * active_count;

    PcstStep step;
    step.epsilon = eps;
    if (eps1_index >= 0 && eps1 <= eps2) {
      // Merge branch; ties between eps1 and eps2 land here.
      const WeightedEdge& e = edges[static_cast<std::size_t>(eps1_index)];
      const int cu = component[static_cast<std::size_t>(e.u)];
      const int cv = component[static_cast<std::size_t>(e.v)];
      for (int v = 0; v < n; ++v) {
        if (component[static_cast<std::size_t>(v)] == cv) {
          component[static_cast<std::size_t>(v)] = cu;
        }
      }
      cluster_w[static_cast<std::size_t>(cu)] += cluster_w[static_cast<std::size_t>(cv)];
      cluster_w[static_cast<std::size_t>(cv)] = 0.0;
      const bool has_root = component[static_cast<std::size_t>(root)] == cu;
      active[static_cast<std::size_t>(cu)] = has_root ? 0 : 1;
      active[static_cast<std::size_t>(cv)] = 0;
      picked.push_back(eps1_index);
      step.merged = true;
      step.edge = e;
    } else {
      active[static_cast<std::size_t>(eps2_rep)] = 0;
      Deactivation d;
      for (int v = 0; v < n; ++v) {
        if (component[static_cast<std::size_t>(v)] == eps2_rep) d.members.push_back(v);
      }
      deactivations.push_back(std::move(d));
      step.merged = false;
      step.deactivated_rep = eps2_rep;
    }

    if (trace != nullptr) {
      step.dual = dual;
      step.component = component;
      step.cluster_w = cluster_w;
      step.active = active;
      trace->steps.push_back(std::move(step));
    }
  }

  // Pruning. Deactivated clusters form a laminar family, so in reverse
  // deactivation order each cluster is either fully present or fully gone.
  // A present cluster crossed by at most one remaining edge is dropped
  // whole; repeat until stable.
  std::vector<char> alive(static_cast<std::size_t>(n), 1);
  std::vector<char> kept(edges.size(), 0);
  for (int i : picked) kept[static_cast<std::size_t>(i)] = 1;

  bool changed = true;
  while (changed) {
    changed = false;
    for (auto it = deactivations.rbegin(); it != deactivations.rend(); ++it) {
      bool present = true;
      for (int v : it->members) {
        if (!alive[static_cast<std::size_t>(v)]) {
          present = false;
          break;
        }
      }
      if (!present) continue;
      std::vector<char> inside(static_cast<std::size_t>(n), 0);
      for (int v : it->members) inside[static_cast<std::size_t>(v)] = 1;
      int crossing = 0;
      for (std::size_t i = 0; i < edges.size(); ++i) {
        if (!kept[i]) continue;
        if (inside[static_cast<std::size_t>(edges[i].u)] !=
            inside[static_cast<std::size_t>(edges[i].v)]) {
          crossing++;
        }
      }
      if (crossing <= 1) {
        for (int v : it->members) alive[static_cast<std::size_t>(v)] = 0;
        for (std::size_t i = 0; i < edges.size(); ++i) {
          if (!kept[i]) continue;
          if (inside[static_cast<std::size_t>(edges[i].u)] ||
              inside[static_cast<std::size_t>(edges[i].v)]) {
            kept[i] = 0;
          }
        }
        changed = true;
      }
    }
  }

  // Keep the component of the root among surviving edges.
  std::vector<std::vector<int>> adj(static_cast<std::size_t>(n));
  for (std::size_t i = 0; i < edges.size(); ++i) {
    if (!kept[i]) continue;
    adj[static_cast<std::size_t>(edges[i].u)].push_back(edges[i].v);
    adj[static_cast<std::size_t>(edges[i].v)].push_back(edges[i].u);
  }
  std::vector<char> in_tree(static_cast<std::size_t>(n), 0);
  std::deque<int> queue{root};
  in_tree[static_cast<std::size_t>(root)] = 1;
  while (!queue.empty()) {
    int v = queue.front();
    queue.pop_front();
    for (int w : adj[static_cast<std::size_t>(v)]) {
      if (!in_tree[static_cast<std::size_t>(w)]) {
        in_tree[static_cast<std::size_t>(w)] = 1;
        queue.push_back(w);
      }
    }
  }

  PcstSolution out;
  out.dual_bound = z_drlp;
  for (std::size_t i = 0; i < edges.size(); ++i) {
    if (!kept[i]) continue;
    if (in_tree[static_cast<std::size_t>(edges[i].u)] &&
        in_tree[static_cast<std::size_t>(edges[i].v)]) {
      out.edges.push_back(edges[i]);
      out.total_cost += edges[i].cost;
    }
  }
  std::sort(out.edges.begin(), out.edges.end(), [](const WeightedEdge& a, const WeightedEdge& b) {
    return a.u != b.u ? a.u < b.u : a.v < b.v;
  });
  out.objective = out.total_cost;
  for (int v = 0; v < n; ++v) {
    if (in_tree[static_cast<std::size_t>(v)]) {
      out.tree_vertices.push_back(v);
    } else {
      out.objective += instance.prizes[static_cast<std::size_t>(v)];
    }
  }
  return out;
}

KmstResult kmst_via_pcst(const WeightedGraph& graph, int root, int k, double lambda,
                         PcstTrace* trace) {
  if (lambda < 0.0) throw std::invalid_argument("prize level must be non-negative");
  PcstInstance instance{graph, root,
                        std::vector<double>(static_cast<std::size_t>(graph.n_vertices()), lambda)};
  KmstResult result;
  result.solution = pcst_solve(instance, trace);
  result.k = k;
  result.lambda = lambda;
  const int excluded = graph.n_vertices() - static_cast<int>(result.solution.tree_vertices.size());
  result.kmst_objective =
      result.solution.total_cost + lambda * (excluded - (graph.n_vertices() - k));
  return result;
}

}  // namespace sptree
