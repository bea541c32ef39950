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

#include <algorithm>
#include <numeric>
#include <string>

#include "distbal/error.hpp"

namespace distbal {
namespace {

std::string edge_name(Vertex u, Vertex v) {
  return "(" + std::to_string(u) + "," + std::to_string(v) + ")";
}

void check_edge(const Graph& g, Vertex u, Vertex v) {
  if (u >= g.order() || v >= g.order()) {
    throw Error(ErrorCode::VertexOutOfRange, edge_name(u, v));
  }
  if (!g.adjacent(u, v)) throw Error(ErrorCode::NotAnEdge, edge_name(u, v));
}

std::vector<Distance> connected_row(const Graph& g, Vertex s) {
  auto row = bfs_distances(g, s);
  if (std::find(row.begin(), row.end(), kUnreachable) != row.end()) {
    throw Error(ErrorCode::Disconnected, "graph is disconnected");
  }
  return row;
}

EdgePartition partition_from_rows(Vertex u, Vertex v, std::span<const Distance> du,
                                  std::span<const Distance> dv) {
  EdgePartition p{u, v, {}, {}, {}};
  auto bump = [&p](std::vector<std::size_t>& cells, std::size_t i) {
    if (i > p.up.size()) {
      p.up.resize(i, 0);
      p.down.resize(i, 0);
      p.level.resize(i, 0);
    }
    ++cells[i - 1];
  };
  for (std::size_t x = 0; x < du.size(); ++x) {
    const Distance a = du[x];
    const Distance b = dv[x];
    if (a < b) {
      bump(p.up, b);  // D^{b-1}_b
    } else if (a > b) {
      bump(p.down, a);  // D^a_{a-1}
    } else {
      bump(p.level, a);
    }
  }
  return p;
}

EdgeBalance balance_from_rows(Vertex u, Vertex v, std::span<const Distance> du,
                              std::span<const Distance> dv) {
  EdgeBalance e{{u, v}, 0, 0, 0, 0};
  for (std::size_t x = 0; x < du.size(); ++x) {
    if (du[x] < dv[x]) {
      ++e.w_uv;
      e.sum_u += du[x];
    } else if (dv[x] < du[x]) {
      ++e.w_vu;
      e.sum_v += dv[x];
    }
  }
  return e;
}

const Graph& require_nontrivial(const Graph& g) {
  if (g.order() < 2) throw Error(ErrorCode::TooSmall, "need at least 2 vertices");
  return g;
}

}  // namespace

std::size_t EdgePartition::w_uv() const noexcept {
  return std::accumulate(up.begin(), up.end(), std::size_t{0});
}

std::size_t EdgePartition::w_vu() const noexcept {
  return std::accumulate(down.begin(), down.end(), std::size_t{0});
}

WSets w_sets(const Graph& g, Vertex u, Vertex v) {
  check_edge(g, u, v);
  const auto du = connected_row(g, u);
  const auto dv = bfs_distances(g, v);
  WSets w;
  for (Vertex x = 0; x < g.order(); ++x) {
    if (du[x] < dv[x]) {
      w.closer_to_u.push_back(x);
    } else if (dv[x] < du[x]) {
      w.closer_to_v.push_back(x);
    }
  }
  return w;
}

EdgePartition edge_partition(const Graph& g, Vertex u, Vertex v) {
  check_edge(g, u, v);
  const auto du = connected_row(g, u);
  const auto dv = bfs_distances(g, v);
  return partition_from_rows(u, v, du, dv);
}

bool is_edge_balanced(const Graph& g, Vertex u, Vertex v) {
  const auto w = w_sets(g, u, v);
  return w.closer_to_u.size() == w.closer_to_v.size();
}

bool is_edge_sdb(const Graph& g, Vertex u, Vertex v) {
  check_edge(g, u, v);
  const auto pu = sphere_profile(g, u);
  const auto pv = sphere_profile(g, v);
  return pu.sizes == pv.sizes;
}

std::uint64_t weighted_distance(const Graph& g, Vertex v, std::span<const Vertex> s) {
  const auto dv = connected_row(g, v);
  std::uint64_t total = 0;
  for (Vertex x : s) {
    if (x >= g.order()) throw Error(ErrorCode::VertexOutOfRange, std::to_string(x));
    total += dv[x];
  }
  return total;
}

std::uint64_t total_distance(const Graph& g, Vertex v) {
  const auto dv = connected_row(g, v);
  return std::accumulate(dv.begin(), dv.end(), std::uint64_t{0});
}

BalanceAnalyzer::BalanceAnalyzer(const Graph& g, unsigned threads)
    : g_(&g), dist_(require_nontrivial(g), threads) {
  if (!dist_.connected()) throw Error(ErrorCode::Disconnected, "graph is disconnected");
  profiles_.reserve(g.order());
  for (Vertex v = 0; v < g.order(); ++v) {
    profiles_.push_back(sphere_profile_from_row(v, dist_.row(v)));
  }
}

void BalanceAnalyzer::require_edge(Vertex u, Vertex v) const { check_edge(*g_, u, v); }

EdgePartition BalanceAnalyzer::edge_partition(Vertex u, Vertex v) const {
  require_edge(u, v);
  return partition_from_rows(u, v, dist_.row(u), dist_.row(v));
}

EdgeBalance BalanceAnalyzer::edge_balance(Vertex u, Vertex v) const {
  require_edge(u, v);
  return balance_from_rows(u, v, dist_.row(u), dist_.row(v));
}

std::vector<EdgeBalance> BalanceAnalyzer::edge_balances() const {
  std::vector<EdgeBalance> out;
  out.reserve(g_->size());
  for (auto [u, v] : g_->edges()) out.push_back(balance_from_rows(u, v, dist_.row(u), dist_.row(v)));
  return out;
}

std::optional<DbWitness> BalanceAnalyzer::db_witness() const {
  for (auto [u, v] : g_->edges()) {
    const auto e = balance_from_rows(u, v, dist_.row(u), dist_.row(v));
    if (e.w_uv != e.w_vu) return DbWitness{e.edge, e.w_uv, e.w_vu};
  }
  return std::nullopt;
}

std::optional<std::size_t> BalanceAnalyzer::gamma() const {
  std::optional<std::size_t> common;
  for (auto [u, v] : g_->edges()) {
    const auto e = balance_from_rows(u, v, dist_.row(u), dist_.row(v));
    if (e.w_uv != e.w_vu) return std::nullopt;
    if (common && *common != e.w_uv) return std::nullopt;
    common = e.w_uv;
  }
  return common;
}

std::optional<SdbWitness> BalanceAnalyzer::sdb_witness() const {
  for (auto [u, v] : g_->edges()) {
    const auto& pu = profiles_[u].sizes;
    const auto& pv = profiles_[v].sizes;
    if (pu == pv) continue;
    std::size_t profile_level = 0;
    while (profile_level < pu.size() && profile_level < pv.size() &&
           pu[profile_level] == pv[profile_level]) {
      ++profile_level;
    }
    const auto cells = partition_from_rows(u, v, dist_.row(u), dist_.row(v));
    std::size_t level = 1;
    while (level <= cells.d_max() && cells.up_at(level) == cells.down_at(level)) ++level;
    return SdbWitness{{u, v}, level, profile_level, cells.up_at(level), cells.down_at(level)};
  }
  return std::nullopt;
}

std::optional<ConjectureWitness> BalanceAnalyzer::conjecture_witness() const {
  for (auto [u, v] : g_->edges()) {
    const auto e = balance_from_rows(u, v, dist_.row(u), dist_.row(v));
    if (e.sum_u != e.sum_v) return ConjectureWitness{e.edge, e.sum_u, e.sum_v};
  }
  return std::nullopt;
}

std::uint64_t BalanceAnalyzer::total_distance(Vertex v) const {
  auto row = dist_.row(v);
  return std::accumulate(row.begin(), row.end(), std::uint64_t{0});
}

std::size_t BalanceAnalyzer::diameter() const {
  std::size_t d = 0;
  for (const auto& p : profiles_) d = std::max(d, p.eccentricity());
  return d;
}

BalanceReport BalanceAnalyzer::report() const {
  BalanceReport r;
  r.n = g_->order();
  r.m = g_->size();
  r.diameter = diameter();
  r.bipartite = is_bipartite(*g_);
  r.regular_valency = regular_valency(*g_);

  // One sweep collects everything the DB, NDB and conjecture checks need.
  std::optional<std::size_t> common;
  bool same_w = true;
  for (auto [u, v] : g_->edges()) {
    const auto e = balance_from_rows(u, v, dist_.row(u), dist_.row(v));
    if (!r.db_witness && e.w_uv != e.w_vu) r.db_witness = DbWitness{e.edge, e.w_uv, e.w_vu};
    if (common && *common != e.w_uv) same_w = false;
    if (!common) common = e.w_uv;
    if (!r.conjecture_witness && e.sum_u != e.sum_v) {
      r.conjecture_witness = ConjectureWitness{e.edge, e.sum_u, e.sum_v};
    }
  }
  r.is_db = !r.db_witness;
  r.is_ndb = r.is_db && same_w;
  if (r.is_ndb) r.gamma = common;
  r.sdb_witness = sdb_witness();
  r.is_sdb = !r.sdb_witness;
  r.conjecture_holds = !r.conjecture_witness;
  return r;
}

DbResult is_db(const Graph& g) {
  auto w = BalanceAnalyzer(g).db_witness();
  return {!w, w};
}

std::optional<std::size_t> is_ndb(const Graph& g) { return BalanceAnalyzer(g).gamma(); }

SdbResult is_sdb(const Graph& g) {
  auto w = BalanceAnalyzer(g).sdb_witness();
  return {!w, w};
}

ConjectureResult conjecture_check(const Graph& g) {
  auto w = BalanceAnalyzer(g).conjecture_witness();
  return {!w, w};
}

BalanceReport full_report(const Graph& g, unsigned threads) {
  return BalanceAnalyzer(g, threads).report();
}

}  // namespace distbal
