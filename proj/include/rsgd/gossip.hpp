#pragma once

#include <optional>
#include <vector>

#include "rsgd/linalg.hpp"
#include "rsgd/schedule.hpp"

namespace rsgd {

// Randomized pairwise consensus of SPD matrices on a line graph: nodes i
// and i+1 are neighbors, edge i fires with probability edge_probs(i), and
// the two endpoints move toward each other. One edge per discrete event.
struct GossipNetwork {
  std::vector<Matrix> nodes;  // SPD n x n
  Vector edge_probs;          // m-1 strictly positive entries summing to 1

  int size() const { return static_cast<int>(nodes.size()); }
  int node_dim() const { return nodes.empty() ? 0 : static_cast<int>(nodes[0].rows()); }
  void validate() const;

  static Vector uniform_edge_probs(int m);
};

enum class GossipRule { Riemannian, Euclidean };

// Both endpoints travel gamma * d(W_i, W_{i+1}) toward each other along the
// Fisher-metric geodesic; the selected edge's distance contracts by exactly
// (1 - 2 gamma). Requires 0 < gamma <= 1/2.
void gossip_step_riemannian(GossipNetwork& net, int edge, double gamma);

// Standard gossip: both endpoints move to the arithmetic mean.
void gossip_step_euclidean(GossipNetwork& net, int edge);

// C = sum_i p_i d^2(W_i, W_{i+1}); zero exactly at consensus. Plots use
// sqrt(C).
double gossip_cost(const GossipNetwork& net);

// max_{i,j} |W_i - W_j|_F over node pairs; zero exactly at full consensus.
// Not monotone under single events.
double hull_diameter(const GossipNetwork& net);

struct GossipConfig {
  long events = 10000;
  double gamma = 0.5;                    // fixed gain in (0, 1/2]
  std::optional<StepSchedule> schedule;  // when set, gamma_t = min(sched(t), 1/2)
  GossipRule rule = GossipRule::Riemannian;
  int runs = 1;
  int record_every = 100;
  double stop_hull_below = 0.0;  // early stop threshold; 0 disables
  void validate() const;
};

struct GossipTick {
  long event = 0;
  double sqrt_cost = 0.0;
  double hull = 0.0;
};

struct GossipRunResult {
  std::vector<GossipTick> series;
  std::vector<Matrix> final_nodes;
};

// One sequential event loop; deterministic per seed. Edges drawn by
// inverse CDF over edge_probs.
GossipRunResult run_gossip_single(const GossipConfig& cfg, const GossipNetwork& init,
                                  unsigned long long seed);

struct GossipAverage {
  std::vector<long> events;
  std::vector<double> sqrt_cost_mean;
  std::vector<double> hull_mean;
  std::vector<GossipRunResult> per_run;
};

// cfg.runs replicas with seeds seed, seed+1, ...; metric series averaged
// at common event indices (early stop is ignored here so series align).
GossipAverage run_gossip(const GossipConfig& cfg, const GossipNetwork& init,
                         unsigned long long seed);

// Per-node empirical covariances of node-specific Gaussian samples,
// regularized with eps I (eps = 1e-6 tr/n) so every node is SPD. The
// heterogeneity knob scales node covariances by exp(heterogeneity * u_i),
// u_i uniform in [-1, 1]; 0 gives near-identical nodes.
std::vector<Matrix> make_initial_covariances(int m, int n, int samples_per_node,
                                             double heterogeneity, Rng& rng);

}  // namespace rsgd
