#include "rsgd/gossip.hpp"

#include <cmath>

#include "rsgd/errors.hpp"
#include "rsgd/spd_cone.hpp"

namespace rsgd {

void GossipNetwork::validate() const {
  if (nodes.size() < 2)
    throw std::invalid_argument("gossip: need at least two nodes");
  if (edge_probs.size() != static_cast<long>(nodes.size()) - 1)
    throw std::invalid_argument("gossip: need one probability per edge");
  if (edge_probs.minCoeff() <= 0.0)
    throw std::invalid_argument("gossip: edge probabilities must be positive");
  if (std::abs(edge_probs.sum() - 1.0) > 1e-9)
    throw std::invalid_argument("gossip: edge probabilities must sum to 1");
  const int n = node_dim();
  for (const Matrix& w : nodes) {
    if (w.rows() != n || w.cols() != n)
      throw std::invalid_argument("gossip: node dimension mismatch");
    if ((w - w.transpose()).norm() > 1e-9 * std::max(1.0, w.norm()) ||
        min_eigenvalue_sym(w) <= 0.0)
      throw GeometryError("gossip: node matrix is not SPD");
  }
}

Vector GossipNetwork::uniform_edge_probs(int m) {
  if (m < 2) throw std::invalid_argument("gossip: need at least two nodes");
  return Vector::Constant(m - 1, 1.0 / (m - 1));
}

void GossipConfig::validate() const {
  if (events < 0) throw std::invalid_argument("gossip: events must be >= 0");
  if (!(gamma > 0.0) || gamma > 0.5)
    throw std::invalid_argument("gossip: gamma must be in (0, 1/2]");
  if (runs < 1) throw std::invalid_argument("gossip: runs must be >= 1");
  if (record_every < 1)
    throw std::invalid_argument("gossip: record_every must be >= 1");
}

void gossip_step_riemannian(GossipNetwork& net, int edge, double gamma) {
  if (edge < 0 || edge + 1 >= net.size())
    throw std::invalid_argument("gossip: edge index out of range");
  if (!(gamma > 0.0) || gamma > 0.5)
    throw std::invalid_argument("gossip: gamma must be in (0, 1/2]");
  const Matrix wi = net.nodes[edge];
  const Matrix wj = net.nodes[edge + 1];
  net.nodes[edge] = spd_geodesic(wi, wj, gamma);
  net.nodes[edge + 1] = spd_geodesic(wj, wi, gamma);
  if (!net.nodes[edge].allFinite() || !net.nodes[edge + 1].allFinite())
    throw GeometryError("gossip: non-finite node state after event");
}

void gossip_step_euclidean(GossipNetwork& net, int edge) {
  if (edge < 0 || edge + 1 >= net.size())
    throw std::invalid_argument("gossip: edge index out of range");
  Matrix mean = 0.5 * (net.nodes[edge] + net.nodes[edge + 1]);
  net.nodes[edge] = mean;
  net.nodes[edge + 1] = mean;
}

double gossip_cost(const GossipNetwork& net) {
  double cost = 0.0;
  for (int i = 0; i + 1 < net.size(); ++i) {
    const double d = spd_dist(net.nodes[i], net.nodes[i + 1]);
    cost += net.edge_probs(i) * d * d;
  }
  return cost;
}

double hull_diameter(const GossipNetwork& net) {
  double diameter = 0.0;
  for (int i = 0; i < net.size(); ++i)
    for (int j = i + 1; j < net.size(); ++j)
      diameter = std::max(diameter, (net.nodes[i] - net.nodes[j]).norm());
  return diameter;
}

namespace {

int draw_edge(const Vector& probs, Rng& rng) {
  std::uniform_real_distribution<double> unif(0.0, 1.0);
  const double u = unif(rng);
  double cumulative = 0.0;
  for (int i = 0; i < probs.size(); ++i) {
    cumulative += probs(i);
    if (u < cumulative) return i;
  }
  return static_cast<int>(probs.size()) - 1;
}

}  // namespace

GossipRunResult run_gossip_single(const GossipConfig& cfg, const GossipNetwork& init,
                                  unsigned long long seed) {
  cfg.validate();
  init.validate();
  Rng rng(seed);
  GossipNetwork net = init;
  GossipRunResult result;

  auto record = [&](long event) {
    result.series.push_back(
        GossipTick{event, std::sqrt(gossip_cost(net)), hull_diameter(net)});
  };

  record(0);
  for (long t = 0; t < cfg.events; ++t) {
    const int edge = draw_edge(net.edge_probs, rng);
    try {
      if (cfg.rule == GossipRule::Riemannian) {
        double gamma = cfg.schedule ? std::min((*cfg.schedule)(t), 0.5) : cfg.gamma;
        gossip_step_riemannian(net, edge, gamma);
      } else {
        gossip_step_euclidean(net, edge);
      }
    } catch (const GeometryError& e) {
      throw DivergenceError(std::string("gossip event failed: ") + e.what(), t);
    }
    const bool tick = (t + 1) % cfg.record_every == 0 || t + 1 == cfg.events;
    if (tick) record(t + 1);
    if (cfg.stop_hull_below > 0.0 && tick &&
        result.series.back().hull < cfg.stop_hull_below)
      break;
  }
  result.final_nodes = std::move(net.nodes);
  return result;
}

GossipAverage run_gossip(const GossipConfig& cfg, const GossipNetwork& init,
                         unsigned long long seed) {
  GossipConfig per_run = cfg;
  per_run.stop_hull_below = 0.0;  // keep series aligned across replicas
  GossipAverage avg;
  for (int k = 0; k < cfg.runs; ++k) {
    avg.per_run.push_back(run_gossip_single(per_run, init, seed + k));
  }
  const size_t ticks = avg.per_run.front().series.size();
  avg.events.resize(ticks);
  avg.sqrt_cost_mean.assign(ticks, 0.0);
  avg.hull_mean.assign(ticks, 0.0);
  for (size_t i = 0; i < ticks; ++i) {
    avg.events[i] = avg.per_run.front().series[i].event;
    for (const auto& run : avg.per_run) {
      avg.sqrt_cost_mean[i] += run.series[i].sqrt_cost;
      avg.hull_mean[i] += run.series[i].hull;
    }
    avg.sqrt_cost_mean[i] /= cfg.runs;
    avg.hull_mean[i] /= cfg.runs;
  }
  return avg;
}

std::vector<Matrix> make_initial_covariances(int m, int n, int samples_per_node,
                                             double heterogeneity, Rng& rng) {
  if (m < 2 || n < 1 || samples_per_node < 1)
    throw std::invalid_argument("make_initial_covariances: bad sizes");
  if (heterogeneity < 0.0)
    throw std::invalid_argument("make_initial_covariances: heterogeneity must be >= 0");

  // Common base covariance, then per-node scale factors e^{h u}.
  Matrix base = spd_expm(0.5 * sym(random_gaussian(n, n, rng)));
  Matrix chol = Eigen::LLT<Matrix>(base).matrixL();
  std::uniform_real_distribution<double> unif(-1.0, 1.0);

  std::vector<Matrix> nodes;
  nodes.reserve(m);
  for (int i = 0; i < m; ++i) {
    const double scale = std::exp(heterogeneity * unif(rng));
    Matrix acc = Matrix::Zero(n, n);
    for (int k = 0; k < samples_per_node; ++k) {
      Vector y = std::sqrt(scale) * (chol * random_gaussian(n, 1, rng).col(0));
      acc += y * y.transpose();
    }
    Matrix emp = acc / static_cast<double>(samples_per_node);
    emp += (1e-6 * emp.trace() / n) * Matrix::Identity(n, n);
    nodes.push_back(sym(emp));
  }
  return nodes;
}

}  // namespace rsgd
