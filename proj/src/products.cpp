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

#include "distbal/products.hpp"

#include "distbal/error.hpp"

namespace distbal {
namespace {

void require_factors(const Graph& a, const Graph& b) {
  if (a.order() == 0 || b.order() == 0) {
    throw Error(ErrorCode::EmptyFactor, "product factors must have at least one vertex");
  }
}

}  // namespace

Graph cartesian(const Graph& a, const Graph& b) {
  require_factors(a, b);
  const auto nb = static_cast<Vertex>(b.order());
  auto id = [nb](Vertex x, Vertex y) { return x * nb + y; };

  std::vector<Edge> edges;
  edges.reserve(a.order() * b.size() + b.order() * a.size());
  for (Vertex x = 0; x < a.order(); ++x) {
    for (auto [y1, y2] : b.edges()) edges.emplace_back(id(x, y1), id(x, y2));
  }
  for (auto [x1, x2] : a.edges()) {
    for (Vertex y = 0; y < nb; ++y) edges.emplace_back(id(x1, y), id(x2, y));
  }
  return build_graph(a.order() * b.order(), edges);
}

Graph lexicographic(const Graph& a, const Graph& b) {
  require_factors(a, b);
  const auto nb = static_cast<Vertex>(b.order());
  auto id = [nb](Vertex x, Vertex y) { return x * nb + y; };

  std::vector<Edge> edges;
  edges.reserve(a.order() * b.size() + a.size() * nb * nb);
  for (Vertex x = 0; x < a.order(); ++x) {
    for (auto [y1, y2] : b.edges()) edges.emplace_back(id(x, y1), id(x, y2));
  }
  for (auto [x1, x2] : a.edges()) {
    for (Vertex y1 = 0; y1 < nb; ++y1) {
      for (Vertex y2 = 0; y2 < nb; ++y2) edges.emplace_back(id(x1, y1), id(x2, y2));
    }
  }
  return build_graph(a.order() * b.order(), edges);
}

Graph line_graph(const Graph& g) {
  if (g.size() == 0) throw Error(ErrorCode::NoEdges, "line graph of an edgeless graph");
  const auto es = g.edges();

  // incident[v] lists the indices of the edges touching v.
  std::vector<std::vector<Vertex>> incident(g.order());
  for (Vertex i = 0; i < es.size(); ++i) {
    incident[es[i].first].push_back(i);
    incident[es[i].second].push_back(i);
  }
  std::vector<Edge> edges;
  for (const auto& around : incident) {
    for (std::size_t i = 0; i < around.size(); ++i) {
      for (std::size_t j = i + 1; j < around.size(); ++j) edges.emplace_back(around[i], around[j]);
    }
  }
  return build_graph(es.size(), edges);
}

}  // namespace distbal
