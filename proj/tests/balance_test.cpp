// Copyright 2026 The distbal Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "distbal/balance.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <set>

#include "distbal/error.hpp"
#include "distbal/families.hpp"
#include "distbal/oracle.hpp"
#include "distbal/products.hpp"
#include "test_graphs.hpp"

namespace distbal {
namespace {

using Sizes = std::vector<std::size_t>;
using testing::path;

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "expected an Error";
  return ErrorCode::Malformed;
}

std::vector<Vertex> tricirc_set(std::initializer_list<std::pair<unsigned, unsigned>> coords) {
  std::vector<Vertex> out;
  for (auto [layer, j] : coords) out.push_back(tricirc_vertex(layer, j));
  std::sort(out.begin(), out.end());
  return out;
}

TEST(WSets, TricirculantListing) {
  const auto g = gen_tricirc30();
  auto w = w_sets(g, tricirc_vertex(0, 0), tricirc_vertex(1, 1));
  EXPECT_EQ(w.closer_to_u, tricirc_set({{0, 0}, {2, 1}, {2, 4}, {1, 4}, {1, 0}, {2, 0},
                                        {2, 5}, {2, 7}, {1, 6}, {2, 3}, {2, 9}, {2, 6}}));
  EXPECT_EQ(w.closer_to_v, tricirc_set({{1, 1}, {1, 7}, {1, 5}, {0, 7}, {1, 3}, {0, 4},
                                        {1, 9}, {0, 6}, {0, 1}, {0, 2}, {0, 5}, {0, 8}}));

  w = w_sets(g, tricirc_vertex(1, 1), tricirc_vertex(1, 5));
  EXPECT_EQ(w.closer_to_u, tricirc_set({{1, 1}, {1, 7}, {0, 0}, {0, 7}, {0, 3}, {2, 4},
                                        {2, 1}, {1, 4}, {0, 6}, {1, 0}, {2, 0}, {2, 7}}));
  EXPECT_EQ(w.closer_to_v, tricirc_set({{1, 5}, {0, 4}, {1, 9}, {0, 1}, {2, 2}, {1, 2},
                                        {0, 5}, {2, 5}, {0, 8}, {1, 6}, {2, 9}, {2, 6}}));
}

TEST(WSets, FourCycle) {
  auto w = w_sets(gen_cycle(4), 0, 1);
  EXPECT_EQ(w.closer_to_u, (std::vector<Vertex>{0, 3}));
  EXPECT_EQ(w.closer_to_v, (std::vector<Vertex>{1, 2}));
}

TEST(WSets, C6TwoThreeAgreesWithOracle) {
  // u in a k-side block (size 2), v in an l-side block (size 3).
  const std::size_t k = 2;
  const std::size_t l = 3;
  const auto g = gen_c6kl(k, l);
  for (auto [a, b] : g.edges()) {
    // Orient so that u sits in an even (k-sized) position.
    const bool a_even = (a / (k + l)) * (k + l) + k > a;
    const Vertex u = a_even ? a : b;
    const Vertex v = a_even ? b : a;
    const auto w = w_sets(g, u, v);
    const auto [ou, ov] = oracle::w_sizes(g, u, v);
    EXPECT_EQ(w.closer_to_u.size(), ou);
    EXPECT_EQ(w.closer_to_v.size(), ov);
    EXPECT_EQ(ou, 2 * l + k);  // {u} plus (2l-1) at distance 1 plus k at distance 2
    EXPECT_EQ(ov, 2 * k + l);
  }
}

TEST(WSets, Errors) {
  EXPECT_EQ(code_of([] { w_sets(gen_cycle(5), 0, 2); }), ErrorCode::NotAnEdge);
  const auto two_edges = build_graph(4, {{0, 1}, {2, 3}});
  EXPECT_EQ(code_of([&] { w_sets(two_edges, 0, 1); }), ErrorCode::Disconnected);
}

TEST(EdgePartition, TricirculantCellsAcrossFirstEdge) {
  const auto g = gen_tricirc30();
  const Vertex u = tricirc_vertex(1, 1);
  const Vertex v = tricirc_vertex(0, 0);
  const auto p = edge_partition(g, u, v);
  EXPECT_EQ(p.up_at(3), 5U);    // D^2_3
  EXPECT_EQ(p.down_at(3), 4U);  // D^3_2

  const auto du = bfs_distances(g, u);
  const auto dv = bfs_distances(g, v);
  std::vector<Vertex> d23;
  std::vector<Vertex> d32;
  for (Vertex x = 0; x < g.order(); ++x) {
    if (du[x] == 2 && dv[x] == 3) d23.push_back(x);
    if (du[x] == 3 && dv[x] == 2) d32.push_back(x);
  }
  EXPECT_EQ(d23, tricirc_set({{1, 3}, {0, 4}, {1, 9}, {0, 6}, {0, 1}}));
  EXPECT_EQ(d32, tricirc_set({{1, 0}, {2, 0}, {2, 5}, {2, 7}}));
}

Sizes gamma_cycle_cells(std::size_t k) {
  Sizes cells{1, 4, 12, 7};
  cells.resize(k, 6);
  return cells;
}

TEST(EdgePartition, GammaCycleEdges) {
  for (std::size_t k = 5; k <= 8; ++k) {
    const auto g = gen_gamma_k(k);
    Sizes level(k, 0);
    level[k - 1] = 6;
    for (std::size_t j : {std::size_t{0}, std::size_t{1}, 3 * k, 8 * k + 3}) {
      const auto p = edge_partition(g, gamma_x(k, j), gamma_x(k, j + 1));
      EXPECT_EQ(p.down, gamma_cycle_cells(k)) << "k=" << k << " j=" << j;
      EXPECT_EQ(p.up, gamma_cycle_cells(k));
      EXPECT_EQ(p.level, level);
      EXPECT_EQ(p.w_uv(), 6 * k);
    }
  }
}

TEST(EdgePartition, GammaSpokeEdges) {
  for (std::size_t k = 5; k <= 8; ++k) {
    const auto g = gen_gamma_k(k);
    Sizes down{1, 5, 11, 7};
    Sizes up{1, 4, 11, 8};
    down.resize(k, 6);
    up.resize(k, 6);
    Sizes level(k, 0);
    level[k - 1] = 6;
    for (std::size_t j = 0; j < 8 * k + 4; j += 3) {
      const Vertex x = gamma_x(k, j);
      for (Vertex y : g.neighbors(x)) {
        if (y < 8 * k + 4) continue;
        const auto p = edge_partition(g, x, y);
        EXPECT_EQ(p.down, down) << "k=" << k << " j=" << j << " y=" << y;
        EXPECT_EQ(p.up, up);
        EXPECT_EQ(p.level, level);
      }
    }
  }
}

TEST(EdgePartition, SingleEdge) {
  const auto p = edge_partition(gen_complete(2), 0, 1);
  EXPECT_EQ(p.up, Sizes{1});
  EXPECT_EQ(p.down, Sizes{1});
  EXPECT_EQ(p.level, Sizes{0});
  EXPECT_EQ(p.d_max(), 1U);
}

TEST(EdgeBalanced, Examples) {
  const auto g = gen_gamma_k(5);
  EXPECT_TRUE(is_edge_balanced(g, gamma_x(5, 0), gamma_y(5, 0)));
  EXPECT_FALSE(is_edge_balanced(path(3), 0, 1));
  const auto c = gen_c6kl(2, 3);
  for (auto [u, v] : c.edges()) EXPECT_FALSE(is_edge_balanced(c, u, v));
}

TEST(EdgeSdb, Examples) {
  EXPECT_FALSE(is_edge_sdb(gen_tricirc30(), tricirc_vertex(1, 1), tricirc_vertex(0, 0)));
  for (std::size_t n = 3; n <= 9; ++n) {
    const auto c = gen_cycle(n);
    for (auto [u, v] : c.edges()) EXPECT_TRUE(is_edge_sdb(c, u, v));
  }
  EXPECT_FALSE(is_edge_sdb(gen_gamma_k(5), gamma_x(5, 0), gamma_y(5, 0)));
}

TEST(IsDb, Examples) {
  EXPECT_TRUE(is_db(gen_prism(3)).holds);
  const auto p3 = is_db(path(3));
  EXPECT_FALSE(p3.holds);
  ASSERT_TRUE(p3.witness);
  EXPECT_EQ(p3.witness->edge, (Edge{0, 1}));
  EXPECT_EQ(p3.witness->w_uv, 1U);
  EXPECT_EQ(p3.witness->w_vu, 2U);

  const auto c = gen_c6kl(2, 3);
  EXPECT_FALSE(is_db(c).holds);
  bool any_balanced = false;
  for (auto [u, v] : c.edges()) {
    auto [a, b] = oracle::w_sizes(c, u, v);
    any_balanced |= a == b;
  }
  EXPECT_FALSE(any_balanced);
  EXPECT_EQ(c.size(), 36U);
}

TEST(IsNdb, Examples) {
  EXPECT_EQ(is_ndb(gen_tricirc30()), 12U);
  for (std::size_t k = 5; k <= 7; ++k) EXPECT_EQ(is_ndb(gen_gamma_k(k)), 6 * k);
  EXPECT_EQ(is_ndb(gen_prism(3)), std::nullopt);
  EXPECT_EQ(is_ndb(gen_petersen()), 3U);
  EXPECT_EQ(is_ndb(gen_complete(2)), 1U);
}

TEST(IsSdb, Examples) {
  EXPECT_TRUE(is_sdb(gen_petersen()).holds);
  EXPECT_FALSE(is_sdb(gen_tricirc30()).holds);
  EXPECT_TRUE(is_sdb(gen_c6kl(2, 2)).holds);
  EXPECT_FALSE(is_sdb(gen_c6kl(2, 3)).holds);
}

TEST(IsSdb, TricirculantWitness) {
  const auto r = is_sdb(gen_tricirc30());
  ASSERT_TRUE(r.witness);
  const auto& w = *r.witness;
  EXPECT_EQ(w.edge, (Edge{tricirc_vertex(0, 0), tricirc_vertex(1, 1)}));
  EXPECT_EQ(w.cell_level, 3U);
  EXPECT_EQ(w.profile_level, 2U);
  // Oriented as ((0,0),(1,1)): D^2_3 has 4 members and D^3_2 has 5.
  EXPECT_EQ(w.up_count, 4U);
  EXPECT_EQ(w.down_count, 5U);
}

TEST(WeightedDistance, Examples) {
  const auto k3 = gen_complete(3);
  const Vertex self[] = {0};
  EXPECT_EQ(weighted_distance(k3, 0, self), 0U);
  const Vertex others[] = {1, 2};
  EXPECT_EQ(weighted_distance(k3, 0, others), 2U);

  for (auto [k, l] : {std::pair{1, 2}, {2, 3}, {3, 4}, {2, 2}}) {
    const auto g = gen_c6kl(k, l);
    const Vertex u = c6kl_vertex(k, l, 0, 0);
    const Vertex v = c6kl_vertex(k, l, 1, 0);
    const auto w = w_sets(g, u, v);
    EXPECT_EQ(weighted_distance(g, u, w.closer_to_u), 2U * k + 2U * l - 1);
    EXPECT_EQ(weighted_distance(g, v, w.closer_to_v), 2U * k + 2U * l - 1);
  }
}

TEST(ConjectureCheck, Examples) {
  const auto c = gen_c6kl(2, 3);
  EXPECT_TRUE(conjecture_check(c).holds);
  for (const auto& e : BalanceAnalyzer(c).edge_balances()) {
    EXPECT_EQ(e.sum_u, 9U);
    EXPECT_EQ(e.sum_v, 9U);
  }
  EXPECT_TRUE(conjecture_check(gen_petersen()).holds);

  const auto p3 = conjecture_check(path(3));
  EXPECT_FALSE(p3.holds);
  ASSERT_TRUE(p3.witness);
  EXPECT_EQ(p3.witness->edge, (Edge{0, 1}));
  EXPECT_EQ(p3.witness->sum_u, 0U);
  EXPECT_EQ(p3.witness->sum_v, 1U);
}

TEST(TotalDistance, Examples) {
  for (std::size_t n = 2; n <= 6; ++n) EXPECT_EQ(total_distance(gen_complete(n), 0), n - 1);
  for (Vertex v = 0; v < 5; ++v) EXPECT_EQ(total_distance(gen_cycle(5), v), 6U);
  EXPECT_EQ(total_distance(path(3), 0), 3U);
  EXPECT_EQ(total_distance(path(3), 1), 2U);
}

TEST(FullReport, Tricirculant) {
  const auto r = full_report(gen_tricirc30());
  EXPECT_EQ(r.n, 30U);
  EXPECT_EQ(r.m, 60U);
  EXPECT_TRUE(r.is_db);
  EXPECT_TRUE(r.is_ndb);
  EXPECT_EQ(r.gamma, 12U);
  EXPECT_FALSE(r.is_sdb);
  EXPECT_EQ(r.diameter, 4U);
  EXPECT_FALSE(r.bipartite);
  EXPECT_EQ(r.regular_valency, 4U);
  EXPECT_FALSE(r.db_witness);
  EXPECT_TRUE(r.sdb_witness);
}

TEST(FullReport, Hypercube) {
  const auto r = full_report(gen_hypercube(3));
  EXPECT_TRUE(r.is_ndb);
  EXPECT_EQ(r.gamma, 4U);
  EXPECT_TRUE(r.is_sdb);
  EXPECT_EQ(r.diameter, 3U);
  EXPECT_TRUE(r.bipartite);
  EXPECT_EQ(r.regular_valency, 3U);
}

TEST(FullReport, C6TwoThree) {
  const auto r = full_report(gen_c6kl(2, 3));
  EXPECT_FALSE(r.is_db);
  EXPECT_FALSE(r.is_sdb);
  EXPECT_TRUE(r.conjecture_holds);
  EXPECT_EQ(r.regular_valency, std::nullopt);
  EXPECT_EQ(r.n, 15U);
}

TEST(FullReport, Errors) {
  EXPECT_EQ(code_of([] { full_report(gen_empty(1)); }), ErrorCode::TooSmall);
  EXPECT_EQ(code_of([] { full_report(gen_empty(2)); }), ErrorCode::Disconnected);
}

TEST(FullReport, ThreadCountDoesNotChangeReport) {
  const auto g = gen_gamma_k(25);
  EXPECT_EQ(full_report(g, 1), full_report(g, 8));
  const auto c = cartesian(gen_cycle(17), gen_cycle(19));
  EXPECT_EQ(full_report(c, 1), full_report(c, 4));
}

void check_report_invariants(const BalanceReport& r) {
  if (r.is_sdb) EXPECT_TRUE(r.is_db);
  if (r.is_ndb) EXPECT_TRUE(r.is_db);
  if (r.is_sdb) EXPECT_TRUE(r.conjecture_holds);
  EXPECT_EQ(r.gamma.has_value(), r.is_ndb);
  if (r.gamma) {
    EXPECT_GE(*r.gamma, 1U);
    EXPECT_LE(*r.gamma, r.n - 1);
    EXPECT_GE(*r.gamma, r.diameter);
  }
  EXPECT_EQ(r.db_witness.has_value(), !r.is_db);
  EXPECT_EQ(r.sdb_witness.has_value(), !r.is_sdb);
  EXPECT_EQ(r.conjecture_witness.has_value(), !r.conjecture_holds);
  if (r.sdb_witness) EXPECT_EQ(r.sdb_witness->cell_level, r.sdb_witness->profile_level + 1);
}

// Cell-level properties on the seeded random corpus plus a few structured graphs.
class BalanceProperties : public ::testing::Test {
 protected:
  static std::vector<Graph> graphs() {
    auto gs = oracle::random_corpus(300, 10, 2024);
    gs.push_back(gen_tricirc30());
    gs.push_back(gen_gamma_k(4));
    gs.push_back(gen_c6kl(2, 3));
    gs.push_back(gen_hypercube(4));
    gs.push_back(gen_prism(5));
    gs.push_back(cartesian(gen_cycle(5), path(3)));
    return gs;
  }
};

TEST_F(BalanceProperties, CellIdentities) {
  for (const auto& g : graphs()) {
    const BalanceAnalyzer an(g, 1);
    const bool bip = is_bipartite(g);
    const auto fw = oracle::floyd_warshall(g);
    for (auto [u, v] : g.edges()) {
      const auto p = an.edge_partition(u, v);
      std::size_t total = 0;
      for (std::size_t i = 1; i <= p.d_max(); ++i) total += p.up_at(i) + p.down_at(i) + p.level_at(i);
      EXPECT_EQ(total, g.order());
      EXPECT_EQ(p.up_at(1), 1U);
      EXPECT_EQ(p.down_at(1), 1U);

      const auto [wu, wv] = oracle::w_sizes(g, u, v);
      EXPECT_EQ(p.w_uv(), wu);
      EXPECT_EQ(p.w_vu(), wv);

      if (bip) {
        for (auto c : p.level) EXPECT_EQ(c, 0U);
      }

      // Sphere profiles agree exactly when every level's cells balance.
      const bool by_profiles = an.profiles()[u].sizes == an.profiles()[v].sizes;
      EXPECT_EQ(by_profiles, oracle::edge_cells_balanced_by_level(fw, u, v));
      EXPECT_EQ(by_profiles, is_edge_sdb(g, u, v));
    }
  }
}

TEST_F(BalanceProperties, ReportInvariantsAndSelfMedian) {
  for (const auto& g : graphs()) {
    const BalanceAnalyzer an(g, 1);
    const auto r = an.report();
    check_report_invariants(r);

    std::set<std::uint64_t> totals;
    for (Vertex v = 0; v < g.order(); ++v) totals.insert(an.total_distance(v));
    EXPECT_EQ(r.is_db, totals.size() == 1);

    EXPECT_EQ(r, an.report());  // deterministic witnesses
  }
}

}  // namespace
}  // namespace distbal
