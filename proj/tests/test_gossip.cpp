#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "rsgd/gossip.hpp"
#include "rsgd/spd_cone.hpp"

using namespace rsgd;

namespace {

Matrix diag2(double a, double b) {
  Matrix m = Matrix::Zero(2, 2);
  m(0, 0) = a;
  m(1, 1) = b;
  return m;
}

GossipNetwork random_network(int m, int n, Rng& rng) {
  SpdCone spd(n);
  GossipNetwork net;
  net.edge_probs = GossipNetwork::uniform_edge_probs(m);
  for (int i = 0; i < m; ++i) net.nodes.push_back(spd.random_point(rng));
  return net;
}

}  // namespace

TEST_CASE("network validation") {
  GossipNetwork net;
  net.nodes = {Matrix::Identity(2, 2), Matrix::Identity(2, 2)};
  net.edge_probs = Vector::Constant(1, 1.0);
  CHECK_NOTHROW(net.validate());

  GossipNetwork bad_probs = net;
  bad_probs.edge_probs = Vector::Constant(1, 0.5);
  CHECK_THROWS_AS(bad_probs.validate(), std::invalid_argument);

  GossipNetwork bad_node = net;
  bad_node.nodes[1] = diag2(1.0, -1.0);
  CHECK_THROWS_AS(bad_node.validate(), GeometryError);

  GossipConfig cfg;
  cfg.gamma = 0.7;
  CHECK_THROWS_AS(cfg.validate(), std::invalid_argument);
  cfg.gamma = 0.0;
  CHECK_THROWS_AS(cfg.validate(), std::invalid_argument);
}

TEST_CASE("riemannian gossip event") {
  SUBCASE("equal nodes stay put") {
    GossipNetwork net;
    net.nodes = {diag2(2, 3), diag2(2, 3)};
    net.edge_probs = Vector::Constant(1, 1.0);
    gossip_step_riemannian(net, 0, 0.5);
    CHECK((net.nodes[0] - diag2(2, 3)).norm() <= 1e-12);
    CHECK((net.nodes[1] - diag2(2, 3)).norm() <= 1e-12);
  }

  SUBCASE("gamma = 1/2 lands both nodes on the geometric mean (commuting case)") {
    GossipNetwork net;
    net.nodes = {Matrix::Identity(2, 2), diag2(9, 4)};
    net.edge_probs = Vector::Constant(1, 1.0);
    gossip_step_riemannian(net, 0, 0.5);
    CHECK((net.nodes[0] - diag2(3, 2)).norm() <= 1e-10);
    CHECK((net.nodes[1] - diag2(3, 2)).norm() <= 1e-10);
  }

  SUBCASE("per-event contraction by exactly (1 - 2 gamma)") {
    Rng rng(2);
    for (double gamma : {0.1, 0.25, 0.4, 0.5}) {
      GossipNetwork net = random_network(4, 3, rng);
      const int edge = 1;
      const double before = spd_dist(net.nodes[edge], net.nodes[edge + 1]);
      const Matrix frozen0 = net.nodes[0];
      const Matrix frozen3 = net.nodes[3];
      gossip_step_riemannian(net, edge, gamma);
      const double after = spd_dist(net.nodes[edge], net.nodes[edge + 1]);
      CHECK(std::abs(after - (1.0 - 2.0 * gamma) * before) <= 1e-8);
      // only the two endpoints move
      CHECK((net.nodes[0] - frozen0).norm() == 0.0);
      CHECK((net.nodes[3] - frozen3).norm() == 0.0);
      // and they stay SPD
      CHECK(min_eigenvalue_sym(net.nodes[edge]) > 0.0);
      CHECK(min_eigenvalue_sym(net.nodes[edge + 1]) > 0.0);
    }
  }
}

TEST_CASE("euclidean gossip event") {
  SUBCASE("arithmetic mean, equal nodes unchanged") {
    GossipNetwork net;
    net.nodes = {Matrix::Identity(2, 2), diag2(9, 4)};
    net.edge_probs = Vector::Constant(1, 1.0);
    gossip_step_euclidean(net, 0);
    CHECK((net.nodes[0] - diag2(5, 2.5)).norm() <= 1e-12);
    CHECK((net.nodes[1] - diag2(5, 2.5)).norm() <= 1e-12);
    gossip_step_euclidean(net, 0);
    CHECK((net.nodes[0] - diag2(5, 2.5)).norm() <= 1e-12);
  }

  SUBCASE("arithmetic mean dominates the geodesic midpoint (commuting case)") {
    Matrix p = Matrix::Identity(2, 2);
    Matrix q = diag2(9, 4);
    Matrix amean = 0.5 * (p + q);
    Matrix gmean = spd_geodesic(p, q, 0.5);
    CHECK(min_eigenvalue_sym(amean - gmean) >= -1e-12);
  }
}

TEST_CASE("gossip metrics") {
  SUBCASE("cost: frozen two-node value, zero at consensus") {
    GossipNetwork net;
    net.nodes = {Matrix::Identity(2, 2), diag2(std::exp(2.0), 1.0)};
    net.edge_probs = Vector::Constant(1, 1.0);
    CHECK(gossip_cost(net) == doctest::Approx(4.0));
    net.nodes[1] = net.nodes[0];
    CHECK(gossip_cost(net) == doctest::Approx(0.0));
  }

  SUBCASE("a gamma = 1/2 event zeroes its edge term and only touches neighbors") {
    Rng rng(3);
    GossipNetwork net = random_network(5, 3, rng);
    auto edge_term = [&](int i) {
      const double d = spd_dist(net.nodes[i], net.nodes[i + 1]);
      return net.edge_probs(i) * d * d;
    };
    const double term3 = edge_term(3);
    gossip_step_riemannian(net, 1, 0.5);
    CHECK(edge_term(1) <= 1e-10);
    CHECK(edge_term(3) == term3);  // beyond the adjacent edges: untouched
  }

  SUBCASE("hull diameter: frozen two-node value, zero at consensus") {
    GossipNetwork net;
    net.nodes = {Matrix::Identity(2, 2), 3.0 * Matrix::Identity(2, 2)};
    net.edge_probs = Vector::Constant(1, 1.0);
    CHECK(hull_diameter(net) == doctest::Approx(2.0 * std::sqrt(2.0)));
    net.nodes[1] = net.nodes[0];
    CHECK(hull_diameter(net) == doctest::Approx(0.0));
  }
}

TEST_CASE("gossip runs") {
  SUBCASE("two nodes reach consensus after exactly one event, both rules") {
    Rng rng(4);
    for (GossipRule rule : {GossipRule::Riemannian, GossipRule::Euclidean}) {
      GossipNetwork net = random_network(2, 3, rng);
      GossipConfig cfg;
      cfg.events = 1;
      cfg.rule = rule;
      cfg.record_every = 1;
      GossipRunResult res = run_gossip_single(cfg, net, 7);
      CHECK(res.series.back().hull <= 1e-10);
      CHECK(res.series.back().sqrt_cost <= 1e-8);
    }
  }

  SUBCASE("identical seeds reproduce the run") {
    Rng rng(5);
    GossipNetwork net = random_network(5, 3, rng);
    GossipConfig cfg;
    cfg.events = 300;
    cfg.record_every = 10;
    GossipRunResult a = run_gossip_single(cfg, net, 99);
    GossipRunResult b = run_gossip_single(cfg, net, 99);
    REQUIRE(a.series.size() == b.series.size());
    for (size_t i = 0; i < a.series.size(); ++i) {
      CHECK(a.series[i].sqrt_cost == b.series[i].sqrt_cost);
      CHECK(a.series[i].hull == b.series[i].hull);
    }
    for (int i = 0; i < 5; ++i)
      CHECK((a.final_nodes[i] - b.final_nodes[i]).norm() == 0.0);
  }

  SUBCASE("line of six nodes reaches consensus with gamma = 1/2") {
    Rng rng(6);
    GossipNetwork net = random_network(6, 3, rng);
    GossipConfig cfg;
    cfg.events = 20000;
    cfg.record_every = 50;
    cfg.stop_hull_below = 1e-9;
    GossipRunResult res = run_gossip_single(cfg, net, 11);
    CHECK(res.series.back().hull < 1e-9);
    CHECK(res.series.back().event < 20000);  // early stop triggered
  }

  SUBCASE("gain schedule is capped at 1/2") {
    Rng rng(7);
    GossipNetwork net = random_network(3, 2, rng);
    GossipConfig cfg;
    cfg.events = 200;
    cfg.schedule = StepSchedule::decay(5.0, 0.1);  // raw gains exceed 1/2
    cfg.record_every = 20;
    CHECK_NOTHROW((void)run_gossip_single(cfg, net, 3));
  }

  SUBCASE("replica averaging at common event indices") {
    Rng rng(8);
    GossipNetwork net = random_network(4, 2, rng);
    GossipConfig cfg;
    cfg.events = 100;
    cfg.runs = 3;
    cfg.record_every = 25;
    GossipAverage avg = run_gossip(cfg, net, 40);
    REQUIRE(avg.per_run.size() == 3);
    REQUIRE(avg.events.size() == avg.per_run[0].series.size());
    for (size_t i = 0; i < avg.events.size(); ++i) {
      double s = 0.0;
      for (int k = 0; k < 3; ++k) s += avg.per_run[k].series[i].sqrt_cost;
      CHECK(avg.sqrt_cost_mean[i] == doctest::Approx(s / 3.0));
    }
  }
}

TEST_CASE("congruence equivariance of whole trajectories") {
  Rng rng(9);
  GossipNetwork net = random_network(4, 3, rng);
  Matrix g = random_gaussian(3, 3, rng);
  g += 2.5 * Matrix::Identity(3, 3);

  GossipNetwork transformed = net;
  for (Matrix& w : transformed.nodes) w = sym(g * w * g.transpose());

  GossipConfig cfg;
  cfg.events = 500;
  cfg.record_every = 100;
  GossipRunResult base = run_gossip_single(cfg, net, 123);
  GossipRunResult mapped = run_gossip_single(cfg, transformed, 123);
  for (int i = 0; i < 4; ++i) {
    Matrix expected = sym(g * base.final_nodes[i] * g.transpose());
    CHECK((mapped.final_nodes[i] - expected).norm() <=
          1e-8 * std::max(1.0, expected.norm()));
  }
}

TEST_CASE("node relabeling symmetry under the mirrored edge sequence") {
  Rng rng(10);
  const int m = 5;
  GossipNetwork forward = random_network(m, 2, rng);
  GossipNetwork reversed;
  reversed.edge_probs = Vector(m - 1);
  for (int i = 0; i < m; ++i)
    reversed.nodes.push_back(forward.nodes[m - 1 - i]);
  for (int i = 0; i < m - 1; ++i)
    reversed.edge_probs(i) = forward.edge_probs(m - 2 - i);

  std::uniform_int_distribution<int> pick(0, m - 2);
  for (int t = 0; t < 200; ++t) {
    const int e = pick(rng);
    gossip_step_riemannian(forward, e, 0.5);
    gossip_step_riemannian(reversed, m - 2 - e, 0.5);
  }
  for (int i = 0; i < m; ++i)
    CHECK((forward.nodes[i] - reversed.nodes[m - 1 - i]).norm() <= 1e-9);
}

TEST_CASE("initial covariance synthesis") {
  SUBCASE("always SPD") {
    Rng rng(11);
    for (double h : {0.0, 1.0, 10.0}) {
      auto nodes = make_initial_covariances(4, 3, 8, h, rng);
      for (const Matrix& w : nodes) CHECK(min_eigenvalue_sym(w) > 0.0);
    }
  }

  SUBCASE("zero heterogeneity with many samples concentrates on one covariance") {
    Rng rng(12);
    auto nodes = make_initial_covariances(5, 3, 200000, 0.0, rng);
    for (size_t i = 1; i < nodes.size(); ++i) {
      CHECK((nodes[i] - nodes[0]).norm() / nodes[0].norm() < 0.10);
    }
  }

  SUBCASE("heterogeneity scales the inter-node spread monotonically") {
    double prev = -1.0;
    for (double h : {0.0, 1.0, 10.0}) {
      Rng rng(13);  // same base draws for each setting
      auto nodes = make_initial_covariances(6, 3, 100, h, rng);
      double spread = 0.0;
      for (size_t i = 0; i < nodes.size(); ++i)
        for (size_t j = i + 1; j < nodes.size(); ++j)
          spread = std::max(spread, (nodes[i] - nodes[j]).norm());
      CHECK(spread > prev);
      prev = spread;
    }
  }
}
