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

#include <vector>

#include "distbal/families.hpp"
#include "distbal/graph.hpp"
#include "distbal/oracle.hpp"

namespace distbal::testing {

inline Graph path(std::size_t n) {
  std::vector<Edge> edges;
  for (Vertex i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
  return build_graph(n, edges);
}

inline Graph star(std::size_t leaves) {
  std::vector<Edge> edges;
  for (Vertex i = 1; i <= leaves; ++i) edges.emplace_back(0, i);
  return build_graph(leaves + 1, edges);
}

// Small connected factors with a spread of DB / NDB / SDB / bipartite /
// regular behaviour, plus seeded random graphs.
inline std::vector<Graph> factor_pool() {
  std::vector<Graph> pool{
      gen_complete(2), gen_complete(3),  gen_complete(4),  gen_cycle(4),  gen_cycle(5),
      gen_cycle(6),    path(3),          path(4),          star(3),       gen_petersen(),
      gen_hypercube(3), gen_prism(3),    gen_c6kl(1, 2),   gen_moebius(4), gen_paley9(),
      gen_complete_multipartite_t3(2),   gen_prism(4),     gen_c6kl(1, 1),
  };
  auto extra = oracle::random_corpus(12, 6, 77);
  pool.insert(pool.end(), extra.begin(), extra.end());
  return pool;
}

}  // namespace distbal::testing
