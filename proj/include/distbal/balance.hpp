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

#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "distbal/graph.hpp"

namespace distbal {

/**
 * Cardinalities of the cells D^i_j(u,v) = S_i(u) ∩ S_j(v) across one edge.
 *
 * Only |i - j| <= 1 can be nonempty. Each vector has d_max entries and
 * element [i-1] describes level i:
 *   up[i-1]    = |D^{i-1}_i(u,v)|   (closer to u)
 *   down[i-1]  = |D^i_{i-1}(u,v)|   (closer to v)
 *   level[i-1] = |D^i_i(u,v)|       (equidistant)
 */
struct EdgePartition {
  Vertex u = 0;
  Vertex v = 0;
  std::vector<std::size_t> up;
  std::vector<std::size_t> down;
  std::vector<std::size_t> level;

  std::size_t d_max() const noexcept { return up.size(); }

  std::size_t up_at(std::size_t i) const noexcept { return i >= 1 && i <= up.size() ? up[i - 1] : 0; }
  std::size_t down_at(std::size_t i) const noexcept {
    return i >= 1 && i <= down.size() ? down[i - 1] : 0;
  }
  std::size_t level_at(std::size_t i) const noexcept {
    return i >= 1 && i <= level.size() ? level[i - 1] : 0;
  }

  /// |W_{u,v}|
  std::size_t w_uv() const noexcept;
  /// |W_{v,u}|
  std::size_t w_vu() const noexcept;

  friend bool operator==(const EdgePartition&, const EdgePartition&) = default;
};

/// Edge whose two sides have different |W|.
struct DbWitness {
  Edge edge;
  std::size_t w_uv = 0;
  std::size_t w_vu = 0;
  friend bool operator==(const DbWitness&, const DbWitness&) = default;
};

/**
 * Edge and the smallest cell level i with |D^{i-1}_i| != |D^i_{i-1}|.
 * `profile_level` is the smallest i with |S_i(u)| != |S_i(v)|; it always
 * equals cell_level - 1.
 */
struct SdbWitness {
  Edge edge;
  std::size_t cell_level = 0;
  std::size_t profile_level = 0;
  std::size_t up_count = 0;    // |D^{i-1}_i(u,v)|
  std::size_t down_count = 0;  // |D^i_{i-1}(u,v)|
  friend bool operator==(const SdbWitness&, const SdbWitness&) = default;
};

/// Edge where d(u, W_{u,v}) != d(v, W_{v,u}).
struct ConjectureWitness {
  Edge edge;
  std::uint64_t sum_u = 0;
  std::uint64_t sum_v = 0;
  friend bool operator==(const ConjectureWitness&, const ConjectureWitness&) = default;
};

struct BalanceReport {
  std::size_t n = 0;
  std::size_t m = 0;
  bool is_db = false;
  bool is_ndb = false;
  std::optional<std::size_t> gamma;
  bool is_sdb = false;
  std::size_t diameter = 0;
  bool bipartite = false;
  std::optional<std::size_t> regular_valency;
  std::optional<DbWitness> db_witness;
  std::optional<SdbWitness> sdb_witness;
  bool conjecture_holds = false;
  std::optional<ConjectureWitness> conjecture_witness;

  friend bool operator==(const BalanceReport&, const BalanceReport&) = default;
};

/// Per-edge quantities gathered in one sweep over the two distance rows.
struct EdgeBalance {
  Edge edge;
  std::size_t w_uv = 0;
  std::size_t w_vu = 0;
  std::uint64_t sum_u = 0;  // d(u, W_{u,v})
  std::uint64_t sum_v = 0;  // d(v, W_{v,u})
};

struct WSets {
  std::vector<Vertex> closer_to_u;
  std::vector<Vertex> closer_to_v;
};

// Single-edge queries. Each runs two BFS passes; all require uv to be an
// edge of a connected graph.

WSets w_sets(const Graph& g, Vertex u, Vertex v);
EdgePartition edge_partition(const Graph& g, Vertex u, Vertex v);
bool is_edge_balanced(const Graph& g, Vertex u, Vertex v);
/// Compares the sphere profiles of u and v.
bool is_edge_sdb(const Graph& g, Vertex u, Vertex v);

/// Sum of d(v, x) over x in `s`.
std::uint64_t weighted_distance(const Graph& g, Vertex v, std::span<const Vertex> s);
/// d(v, V).
std::uint64_t total_distance(const Graph& g, Vertex v);

/**
 * Whole-graph recognition over a materialised distance matrix.
 *
 * Construction runs one BFS per vertex (O(mn)) and throws Disconnected or
 * TooSmall. Every query below is then O(n) per edge.
 */
class BalanceAnalyzer {
 public:
  explicit BalanceAnalyzer(const Graph& g, unsigned threads = 0);

  const Graph& graph() const noexcept { return *g_; }
  const DistanceMatrix& distances() const noexcept { return dist_; }
  const std::vector<SphereProfile>& profiles() const noexcept { return profiles_; }

  EdgePartition edge_partition(Vertex u, Vertex v) const;
  EdgeBalance edge_balance(Vertex u, Vertex v) const;
  /// One entry per edge, canonical order.
  std::vector<EdgeBalance> edge_balances() const;

  std::optional<DbWitness> db_witness() const;
  std::optional<std::size_t> gamma() const;
  std::optional<SdbWitness> sdb_witness() const;
  std::optional<ConjectureWitness> conjecture_witness() const;
  std::uint64_t total_distance(Vertex v) const;
  std::size_t diameter() const;

  BalanceReport report() const;

 private:
  void require_edge(Vertex u, Vertex v) const;

  const Graph* g_;
  DistanceMatrix dist_;
  std::vector<SphereProfile> profiles_;
};

struct DbResult {
  bool holds = false;
  std::optional<DbWitness> witness;
};
struct SdbResult {
  bool holds = false;
  std::optional<SdbWitness> witness;
};
struct ConjectureResult {
  bool holds = false;
  std::optional<ConjectureWitness> witness;
};

DbResult is_db(const Graph& g);
std::optional<std::size_t> is_ndb(const Graph& g);
SdbResult is_sdb(const Graph& g);
ConjectureResult conjecture_check(const Graph& g);
BalanceReport full_report(const Graph& g, unsigned threads = 0);

}  // namespace distbal
