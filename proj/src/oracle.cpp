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

#include "distbal/oracle.hpp"

#include <array>
#include <deque>
#include <map>
#include <set>
#include <string>

#include "distbal/balance.hpp"
#include "distbal/error.hpp"

namespace distbal::oracle {
namespace {

std::vector<Distance> naive_bfs(const Graph& g, Vertex s) {
  std::vector<Distance> dist(g.order(), kUnreachable);
  std::deque<Vertex> frontier{s};
  dist[s] = 0;
  while (!frontier.empty()) {
    Vertex x = frontier.front();
    frontier.pop_front();
    for (Vertex y = 0; y < g.order(); ++y) {
      if (g.adjacent(x, y) && dist[y] == kUnreachable) {
        dist[y] = dist[x] + 1;
        frontier.push_back(y);
      }
    }
  }
  return dist;
}

using Cells = std::map<std::pair<Distance, Distance>, std::set<Vertex>>;

Cells build_cells(const std::vector<std::vector<Distance>>& dist, Vertex u, Vertex v) {
  Cells cells;
  for (Vertex x = 0; x < dist.size(); ++x) cells[{dist[u][x], dist[v][x]}].insert(x);
  return cells;
}

std::size_t cell_size(const Cells& cells, Distance i, Distance j) {
  auto it = cells.find({i, j});
  return it == cells.end() ? 0 : it->second.size();
}

}  // namespace

std::pair<std::size_t, std::size_t> w_sizes(const Graph& g, Vertex u, Vertex v) {
  if (u >= g.order() || v >= g.order() || !g.adjacent(u, v)) {
    throw Error(ErrorCode::NotAnEdge, "oracle w_sizes");
  }
  const auto du = naive_bfs(g, u);
  const auto dv = naive_bfs(g, v);
  std::size_t wu = 0;
  std::size_t wv = 0;
  for (Vertex x = 0; x < g.order(); ++x) {
    if (du[x] == kUnreachable) throw Error(ErrorCode::Disconnected, "oracle w_sizes");
    if (du[x] < dv[x]) ++wu;
    if (dv[x] < du[x]) ++wv;
  }
  return {wu, wv};
}

std::vector<std::vector<Distance>> floyd_warshall(const Graph& g) {
  const std::size_t n = g.order();
  std::vector<std::vector<Distance>> d(n, std::vector<Distance>(n, kUnreachable));
  for (Vertex u = 0; u < n; ++u) {
    d[u][u] = 0;
    for (Vertex v : g.neighbors(u)) d[u][v] = 1;
  }
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t i = 0; i < n; ++i) {
      if (d[i][k] == kUnreachable) continue;
      for (std::size_t j = 0; j < n; ++j) {
        if (d[k][j] != kUnreachable && d[i][k] + d[k][j] < d[i][j]) d[i][j] = d[i][k] + d[k][j];
      }
    }
  }
  return d;
}

bool edge_cells_balanced_by_level(const std::vector<std::vector<Distance>>& dist, Vertex u,
                                  Vertex v) {
  const auto cells = build_cells(dist, u, v);
  for (Distance i = 1; i <= dist.size(); ++i) {
    if (cell_size(cells, i, i - 1) != cell_size(cells, i - 1, i)) return false;
  }
  return true;
}

Classification classify(const Graph& g) {
  if (g.order() < 2) throw Error(ErrorCode::TooSmall, "oracle classify");
  const auto dist = floyd_warshall(g);
  for (const auto& row : dist) {
    for (Distance d : row) {
      if (d == kUnreachable) throw Error(ErrorCode::Disconnected, "oracle classify");
    }
  }

  Classification c{true, true, std::nullopt, true};
  std::set<std::size_t> w_values;
  for (auto [u, v] : g.edges()) {
    const auto cells = build_cells(dist, u, v);
    // W_{u,v} is the union of all cells D^i_j with i < j.
    std::size_t wu = 0;
    std::size_t wv = 0;
    for (const auto& [key, members] : cells) {
      if (key.first < key.second) wu += members.size();
      if (key.second < key.first) wv += members.size();
    }
    if (wu != wv) c.is_db = false;
    w_values.insert(wu);
    w_values.insert(wv);
    if (!edge_cells_balanced_by_level(dist, u, v)) c.is_sdb = false;
  }
  c.is_ndb = c.is_db && w_values.size() == 1;
  if (c.is_ndb) c.gamma = *w_values.begin();
  return c;
}

Graph random_connected_graph(std::size_t n, Probability p, std::uint64_t seed,
                             std::size_t max_attempts) {
  if (n < 2) throw Error(ErrorCode::ParamOutOfRange, "random graph needs n >= 2");
  if (p.den == 0 || p.num == 0 || p.num > p.den) {
    throw Error(ErrorCode::ParamOutOfRange, "edge probability must lie in (0, 1]");
  }
  Lcg rng(seed);
  for (std::size_t attempt = 0; attempt < max_attempts; ++attempt) {
    std::vector<Edge> edges;
    for (Vertex u = 0; u < n; ++u) {
      for (Vertex v = u + 1; v < n; ++v) {
        if (rng.bernoulli(p.num, p.den)) edges.emplace_back(u, v);
      }
    }
    auto g = build_graph(n, edges);
    if (is_connected(g)) return g;
  }
  throw Error(ErrorCode::GenerationFailed,
              "no connected sample in " + std::to_string(max_attempts) + " attempts");
}

CorpusEntry corpus_entry(std::uint64_t base_seed, std::size_t index, std::size_t max_n) {
  if (max_n < 2) throw Error(ErrorCode::ParamOutOfRange, "max_n must be >= 2");
  static constexpr std::array<Probability, 4> kDensities{
      Probability{1, 4}, Probability{1, 3}, Probability{1, 2}, Probability{3, 4}};
  const std::uint64_t seed = base_seed + index;
  const std::size_t span = max_n - 1;
  return CorpusEntry{seed, 2 + static_cast<std::size_t>(seed % span),
                     kDensities[(seed / span) % kDensities.size()]};
}

std::vector<Graph> random_corpus(std::size_t count, std::size_t max_n, std::uint64_t seed) {
  std::vector<Graph> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    const auto e = corpus_entry(seed, i, max_n);
    out.push_back(random_connected_graph(e.n, e.p, e.seed));
  }
  return out;
}

Classification fast_classify(const Graph& g) {
  const auto r = full_report(g, 1);
  return Classification{r.is_db, r.is_ndb, r.gamma, r.is_sdb};
}

DiffOutcome run_differential(std::size_t count, std::size_t max_n, std::uint64_t seed,
                             const Classifier& candidate) {
  DiffOutcome out;
  for (std::size_t i = 0; i < count; ++i) {
    const auto entry = corpus_entry(seed, i, max_n);
    auto g = random_connected_graph(entry.n, entry.p, entry.seed);
    const auto expected = classify(g);
    const auto actual = candidate(g);
    ++out.graphs;
    if (expected != actual) {
      ++out.disagreements;
      if (!out.first) out.first = Disagreement{i, entry, std::move(g), expected, actual};
    }
  }
  return out;
}

}  // namespace distbal::oracle
