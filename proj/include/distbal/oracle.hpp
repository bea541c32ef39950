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

// Reference implementations for differential testing. Nothing here shares
// code with the fast recognition path beyond the Graph type itself.

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <utility>
#include <vector>

#include "distbal/graph.hpp"

namespace distbal::oracle {

/// (|W_{u,v}|, |W_{v,u}|) from two fresh breadth-first searches.
std::pair<std::size_t, std::size_t> w_sizes(const Graph& g, Vertex u, Vertex v);

struct Classification {
  bool is_db = false;
  bool is_ndb = false;
  std::optional<std::size_t> gamma;
  bool is_sdb = false;
  friend bool operator==(const Classification&, const Classification&) = default;
};

/// Definition-literal classification. SDB is decided by materialising every
/// D^i_j(u,v) per edge, never through sphere profiles.
Classification classify(const Graph& g);

/// All-pairs distances by Floyd-Warshall; kUnreachable for no path.
std::vector<std::vector<Distance>> floyd_warshall(const Graph& g);

/// Strict per-level cell comparison |D^i_{i-1}(u,v)| == |D^{i-1}_i(u,v)|.
bool edge_cells_balanced_by_level(const std::vector<std::vector<Distance>>& dist, Vertex u,
                                  Vertex v);

/**
 * Portable 64-bit linear congruential generator
 *   state' = state * 6364136223846793005 + 1442695040888963407 (mod 2^64)
 * Each draw advances once and returns the high 32 bits.
 */
class Lcg {
 public:
  explicit Lcg(std::uint64_t seed) : state_(seed) {}
  std::uint32_t next() noexcept {
    state_ = state_ * 6364136223846793005ULL + 1442695040888963407ULL;
    return static_cast<std::uint32_t>(state_ >> 32);
  }
  /// True with probability num/den.
  bool bernoulli(std::uint32_t num, std::uint32_t den) noexcept {
    return static_cast<std::uint64_t>(next()) * den < (static_cast<std::uint64_t>(num) << 32);
  }

 private:
  std::uint64_t state_;
};

struct Probability {
  std::uint32_t num = 1;
  std::uint32_t den = 2;
};

/**
 * G(n, p) sample conditioned on connectivity. Pairs (u, v), u < v, are drawn
 * in lexicographic order; a disconnected sample is discarded and drawing
 * continues from the same generator, up to `max_attempts` samples.
 */
Graph random_connected_graph(std::size_t n, Probability p, std::uint64_t seed,
                             std::size_t max_attempts = 10000);

/// Parameters of corpus member `index`: seed + index drives everything.
struct CorpusEntry {
  std::uint64_t seed = 0;
  std::size_t n = 0;
  Probability p;
};
CorpusEntry corpus_entry(std::uint64_t base_seed, std::size_t index, std::size_t max_n);
std::vector<Graph> random_corpus(std::size_t count, std::size_t max_n, std::uint64_t seed);

using Classifier = std::function<Classification(const Graph&)>;

/// Classification from the fast path (balance module).
Classification fast_classify(const Graph& g);

struct Disagreement {
  std::size_t index = 0;
  CorpusEntry entry;
  Graph graph;
  Classification expected;
  Classification actual;
};

struct DiffOutcome {
  std::size_t graphs = 0;
  std::size_t disagreements = 0;
  std::optional<Disagreement> first;
};

/// Runs `candidate` against `classify` on the seeded random corpus.
DiffOutcome run_differential(std::size_t count, std::size_t max_n, std::uint64_t seed,
                             const Classifier& candidate = fast_classify);

}  // namespace distbal::oracle
