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
#include <initializer_list>
#include <limits>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace distbal {

using Vertex = std::uint32_t;
using Distance = std::uint32_t;

/// Undirected edge; canonical form has first < second.
using Edge = std::pair<Vertex, Vertex>;

/// Marks a vertex that BFS could not reach. Never a valid path length.
inline constexpr Distance kUnreachable = std::numeric_limits<Distance>::max();

/**
 * Immutable simple undirected graph on vertices 0..n-1.
 *
 * Stored in compressed adjacency form: the neighbours of v are the sorted
 * slice adjacency_[offsets_[v], offsets_[v+1]). Every edge appears in both
 * endpoint lists.
 */
class Graph {
 public:
  Graph() : offsets_(1, 0) {}

  std::size_t order() const noexcept { return offsets_.size() - 1; }
  std::size_t size() const noexcept { return adjacency_.size() / 2; }

  std::span<const Vertex> neighbors(Vertex v) const noexcept {
    return {adjacency_.data() + offsets_[v], adjacency_.data() + offsets_[v + 1]};
  }
  std::size_t degree(Vertex v) const noexcept { return offsets_[v + 1] - offsets_[v]; }

  /// O(log deg) lookup.
  bool adjacent(Vertex u, Vertex v) const noexcept;

  /// All edges as (u, v) with u < v, sorted lexicographically.
  std::vector<Edge> edges() const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  friend Graph build_graph(std::size_t n, std::span<const Edge> edges);

  std::vector<std::size_t> offsets_;
  std::vector<Vertex> adjacency_;
};

/// Builds a simple graph. Duplicate edges (in either orientation) collapse;
/// self-loops and out-of-range endpoints throw.
Graph build_graph(std::size_t n, std::span<const Edge> edges);

inline Graph build_graph(std::size_t n, std::initializer_list<Edge> edges) {
  return build_graph(n, std::span<const Edge>(edges.begin(), edges.size()));
}

/// Single-source BFS. Unreachable vertices hold kUnreachable.
std::vector<Distance> bfs_distances(const Graph& g, Vertex source);

/// Same as bfs_distances but writes into caller-owned storage, reusing `queue`.
void bfs_distances_into(const Graph& g, Vertex source, std::span<Distance> out,
                        std::vector<Vertex>& queue);

/// Sizes of the distance spheres around one vertex.
struct SphereProfile {
  Vertex source = 0;
  /// sizes[i] is the number of vertices at distance exactly i.
  std::vector<std::size_t> sizes;

  std::size_t eccentricity() const noexcept { return sizes.empty() ? 0 : sizes.size() - 1; }

  friend bool operator==(const SphereProfile&, const SphereProfile&) = default;
};

/// Throws Disconnected if some vertex is unreachable from `source`.
SphereProfile sphere_profile(const Graph& g, Vertex source);

/// Builds the profile from an already computed distance row.
SphereProfile sphere_profile_from_row(Vertex source, std::span<const Distance> row);

std::size_t diameter(const Graph& g);

struct Bipartition {
  bool bipartite = false;
  /// 0/1 colour per vertex; meaningful only when bipartite.
  std::vector<std::uint8_t> coloring;
  /// Closed odd cycle v0, v1, ..., v_{2r}, with v_{2r} ~ v0; empty when bipartite.
  std::vector<Vertex> odd_cycle;
};

Bipartition bipartition(const Graph& g);

inline bool is_bipartite(const Graph& g) { return bipartition(g).bipartite; }

/// Common degree if the graph is regular. The empty graph on zero vertices has none.
std::optional<std::size_t> regular_valency(const Graph& g);

bool is_connected(const Graph& g);

/// Number of 4-cycles that contain the edge uv.
std::size_t four_cycles_through(const Graph& g, Vertex u, Vertex v);

/**
 * All-pairs distance table built from one BFS per source.
 *
 * Rows are filled by up to `threads` workers (0 picks the hardware
 * concurrency); the contents do not depend on the thread count.
 */
class DistanceMatrix {
 public:
  explicit DistanceMatrix(const Graph& g, unsigned threads = 0);

  std::size_t order() const noexcept { return n_; }
  std::span<const Distance> row(Vertex v) const noexcept {
    return {data_.data() + static_cast<std::size_t>(v) * n_, n_};
  }
  Distance operator()(Vertex u, Vertex v) const noexcept {
    return data_[static_cast<std::size_t>(u) * n_ + v];
  }
  /// True iff no entry is kUnreachable.
  bool connected() const noexcept { return connected_; }

 private:
  std::size_t n_;
  std::vector<Distance> data_;
  bool connected_ = true;
};

}  // namespace distbal
