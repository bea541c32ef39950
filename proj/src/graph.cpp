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

#include "distbal/graph.hpp"

#include <algorithm>
#include <string>
#include <thread>

#include "distbal/error.hpp"

namespace distbal {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::SelfLoop: return "SelfLoop";
    case ErrorCode::VertexOutOfRange: return "VertexOutOfRange";
    case ErrorCode::Disconnected: return "Disconnected";
    case ErrorCode::NotAnEdge: return "NotAnEdge";
    case ErrorCode::TooSmall: return "TooSmall";
    case ErrorCode::ParamOutOfRange: return "ParamOutOfRange";
    case ErrorCode::UnknownFamily: return "UnknownFamily";
    case ErrorCode::EmptyFactor: return "EmptyFactor";
    case ErrorCode::NoEdges: return "NoEdges";
    case ErrorCode::GenerationFailed: return "GenerationFailed";
    case ErrorCode::MalformedGraph6: return "MalformedGraph6";
    case ErrorCode::TooLarge: return "TooLarge";
    case ErrorCode::Malformed: return "Malformed";
  }
  return "Unknown";
}

bool Graph::adjacent(Vertex u, Vertex v) const noexcept {
  if (u >= order() || v >= order()) return false;
  auto nb = neighbors(u);
  return std::binary_search(nb.begin(), nb.end(), v);
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(size());
  for (Vertex u = 0; u < order(); ++u) {
    for (Vertex v : neighbors(u)) {
      if (u < v) out.emplace_back(u, v);
    }
  }
  return out;
}

Graph build_graph(std::size_t n, std::span<const Edge> edges) {
  if (n >= kUnreachable) {
    throw Error(ErrorCode::TooLarge, "vertex count " + std::to_string(n));
  }
  std::vector<Edge> arcs;
  arcs.reserve(edges.size() * 2);
  for (auto [u, v] : edges) {
    if (u >= n || v >= n) {
      throw Error(ErrorCode::VertexOutOfRange, "edge (" + std::to_string(u) + "," +
                                                   std::to_string(v) + ") with n=" +
                                                   std::to_string(n));
    }
    if (u == v) throw Error(ErrorCode::SelfLoop, "vertex " + std::to_string(u));
    arcs.emplace_back(u, v);
    arcs.emplace_back(v, u);
  }
  std::sort(arcs.begin(), arcs.end());
  arcs.erase(std::unique(arcs.begin(), arcs.end()), arcs.end());

  Graph g;
  g.offsets_.assign(n + 1, 0);
  g.adjacency_.reserve(arcs.size());
  for (auto [u, v] : arcs) {
    ++g.offsets_[u + 1];
    g.adjacency_.push_back(v);
  }
  for (std::size_t i = 0; i < n; ++i) g.offsets_[i + 1] += g.offsets_[i];
  return g;
}

void bfs_distances_into(const Graph& g, Vertex source, std::span<Distance> out,
                        std::vector<Vertex>& queue) {
  std::fill(out.begin(), out.end(), kUnreachable);
  queue.clear();
  queue.reserve(g.order());
  out[source] = 0;
  queue.push_back(source);
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const Vertex x = queue[head];
    const Distance next = out[x] + 1;
    for (Vertex y : g.neighbors(x)) {
      if (out[y] == kUnreachable) {
        out[y] = next;
        queue.push_back(y);
      }
    }
  }
}

std::vector<Distance> bfs_distances(const Graph& g, Vertex source) {
  if (source >= g.order()) {
    throw Error(ErrorCode::VertexOutOfRange, "source " + std::to_string(source));
  }
  std::vector<Distance> dist(g.order());
  std::vector<Vertex> queue;
  bfs_distances_into(g, source, dist, queue);
  return dist;
}

SphereProfile sphere_profile_from_row(Vertex source, std::span<const Distance> row) {
  SphereProfile p{source, {}};
  for (Distance d : row) {
    if (d == kUnreachable) {
      throw Error(ErrorCode::Disconnected,
                  "vertex unreachable from " + std::to_string(source));
    }
    if (d >= p.sizes.size()) p.sizes.resize(d + 1, 0);
    ++p.sizes[d];
  }
  return p;
}

SphereProfile sphere_profile(const Graph& g, Vertex source) {
  return sphere_profile_from_row(source, bfs_distances(g, source));
}

std::size_t diameter(const Graph& g) {
  if (g.order() == 0) throw Error(ErrorCode::TooSmall, "diameter of the null graph");
  std::vector<Distance> row(g.order());
  std::vector<Vertex> queue;
  std::size_t best = 0;
  for (Vertex s = 0; s < g.order(); ++s) {
    bfs_distances_into(g, s, row, queue);
    if (queue.size() != g.order()) {
      throw Error(ErrorCode::Disconnected, "diameter of a disconnected graph");
    }
    best = std::max<std::size_t>(best, row[queue.back()]);
  }
  return best;
}

Bipartition bipartition(const Graph& g) {
  const std::size_t n = g.order();
  Bipartition result;
  std::vector<Distance> depth(n, kUnreachable);
  std::vector<Vertex> parent(n, 0);
  std::vector<Vertex> queue;
  queue.reserve(n);

  for (Vertex root = 0; root < n; ++root) {
    if (depth[root] != kUnreachable) continue;
    depth[root] = 0;
    parent[root] = root;
    queue.clear();
    queue.push_back(root);
    for (std::size_t head = 0; head < queue.size(); ++head) {
      const Vertex x = queue[head];
      for (Vertex y : g.neighbors(x)) {
        if (depth[y] == kUnreachable) {
          depth[y] = depth[x] + 1;
          parent[y] = x;
          queue.push_back(y);
        } else if (depth[y] == depth[x]) {
          // BFS layers differ by at most one, so an intra-layer edge closes
          // an odd cycle through the lowest common ancestor of x and y.
          std::vector<Vertex> left{x};
          std::vector<Vertex> right{y};
          Vertex a = x;
          Vertex b = y;
          while (a != b) {
            a = parent[a];
            b = parent[b];
            left.push_back(a);
            right.push_back(b);
          }
          right.pop_back();
          result.odd_cycle.assign(left.rbegin(), left.rend());
          result.odd_cycle.insert(result.odd_cycle.end(), right.begin(), right.end());
          return result;
        }
      }
    }
  }
  result.bipartite = true;
  result.coloring.resize(n);
  for (Vertex v = 0; v < n; ++v) result.coloring[v] = static_cast<std::uint8_t>(depth[v] & 1U);
  return result;
}

std::optional<std::size_t> regular_valency(const Graph& g) {
  if (g.order() == 0) return std::nullopt;
  const std::size_t k = g.degree(0);
  for (Vertex v = 1; v < g.order(); ++v) {
    if (g.degree(v) != k) return std::nullopt;
  }
  return k;
}

bool is_connected(const Graph& g) {
  if (g.order() == 0) return true;
  std::vector<Distance> row(g.order());
  std::vector<Vertex> queue;
  bfs_distances_into(g, 0, row, queue);
  return queue.size() == g.order();
}

std::size_t four_cycles_through(const Graph& g, Vertex u, Vertex v) {
  if (!g.adjacent(u, v)) throw Error(ErrorCode::NotAnEdge, "four_cycles_through");
  // Cycles u - v - b - a - u with a, b outside {u, v}.
  std::size_t count = 0;
  for (Vertex a : g.neighbors(u)) {
    if (a == v) continue;
    for (Vertex b : g.neighbors(v)) {
      if (b == u || b == a) continue;
      if (g.adjacent(a, b)) ++count;
    }
  }
  return count;
}

DistanceMatrix::DistanceMatrix(const Graph& g, unsigned threads)
    : n_(g.order()), data_(n_ * n_, kUnreachable) {
  if (threads == 0) threads = std::max(1U, std::thread::hardware_concurrency());
  // Below a few hundred vertices thread start-up dominates.
  if (n_ < 256) threads = 1;
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, std::max<std::size_t>(n_, 1)));

  std::vector<char> worker_connected(threads, 1);
  auto work = [&](unsigned id) {
    std::vector<Vertex> queue;
    for (std::size_t s = id; s < n_; s += threads) {
      std::span<Distance> out(data_.data() + s * n_, n_);
      bfs_distances_into(g, static_cast<Vertex>(s), out, queue);
      if (queue.size() != n_) worker_connected[id] = 0;
    }
  };
  if (threads == 1) {
    work(0);
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(threads);
    for (unsigned id = 0; id < threads; ++id) pool.emplace_back(work, id);
  }
  connected_ = std::all_of(worker_connected.begin(), worker_connected.end(),
                           [](char c) { return c != 0; });
}

}  // namespace distbal
