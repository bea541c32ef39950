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
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "distbal/graph.hpp"

namespace distbal {

enum class Family {
  Cycle,                    // cycle n          C_n, n >= 3
  Complete,                 // complete n       K_n, n >= 1
  CompleteMultipartiteT3,   // complete_multipartite_t3 t   K_{t x 3}, t >= 1
  Prism,                    // prism n          C_n □ K_2, n >= 3
  Moebius,                  // moebius n        Möbius ladder on 2n vertices, n >= 2
  Petersen,
  PetersenComplement,
  Paley9,
  Hypercube,                // hypercube n      Q_n, 1 <= n <= 20
  LineOfHypercube3,
  Icosahedron,
  Empty,                    // empty n          nK_1, n >= 1
  Tricirc30,
  GammaK,                   // gamma_k k        k >= 3
  C6kl,                     // c6kl k l         k, l >= 1
};

struct FamilySpec {
  Family family = Family::Cycle;
  std::vector<std::size_t> params;

  /// Canonical text form, e.g. "gamma_k 5".
  std::string to_string() const;

  friend bool operator==(const FamilySpec&, const FamilySpec&) = default;
};

std::string_view family_name(Family f) noexcept;

/// Throws UnknownFamily for an unrecognised name and ParamOutOfRange for a
/// wrong parameter count.
FamilySpec parse_family(std::string_view name, std::span<const std::size_t> params);

/// Every family in declaration order.
std::span<const Family> all_families() noexcept;

Graph gen_cycle(std::size_t n);
Graph gen_complete(std::size_t n);
Graph gen_complete_multipartite_t3(std::size_t t);
Graph gen_prism(std::size_t n);
Graph gen_moebius(std::size_t n);
Graph gen_petersen();
Graph gen_petersen_complement();
Graph gen_paley9();
Graph gen_hypercube(std::size_t dim);
Graph gen_line_of_hypercube3();
Graph gen_icosahedron();
Graph gen_empty(std::size_t n);

/**
 * The 30-vertex tricirculant on {0,1,2} x Z_10.
 *
 * Vertex (layer, j) has index 10 * layer + j. For every j (mod 10):
 *   (0,j)~(1,j+1), (0,j)~(1,j+4), (0,j)~(2,j+1), (0,j)~(2,j+4),
 *   (1,j)~(1,j+4), (2,j)~(2,j+4).
 */
Graph gen_tricirc30();
constexpr Vertex tricirc_vertex(unsigned layer, unsigned j) noexcept {
  return static_cast<Vertex>(10 * layer + j % 10);
}

/**
 * Order 12k+6 graph on x_0..x_{8k+3} (indices 0..8k+3) and y_0..y_{4k+1}
 * (indices 8k+4..12k+5).
 *
 * x_i ~ x_{i+1} around the (8k+4)-cycle, and y_i ~ x_{i+m} for
 * m in {0, 2k-1, 2k+1, 4k+2, 6k+1, 6k+3}, x indices mod 8k+4.
 * x vertices have degree 5, y vertices degree 6.
 */
Graph gen_gamma_k(std::size_t k);
constexpr Vertex gamma_x(std::size_t k, std::size_t i) noexcept {
  return static_cast<Vertex>(i % (8 * k + 4));
}
constexpr Vertex gamma_y(std::size_t k, std::size_t i) noexcept {
  return static_cast<Vertex>(8 * k + 4 + i % (4 * k + 2));
}

/**
 * The 6-cycle with positions x_0, x_2, x_4 blown up to k independent
 * vertices and x_1, x_3, x_5 to l. Blocks are laid out in position order,
 * so block p starts at the sum of the sizes of blocks 0..p-1.
 */
Graph gen_c6kl(std::size_t k, std::size_t l);
Vertex c6kl_vertex(std::size_t k, std::size_t l, unsigned position, std::size_t r);

Graph gen_named(const FamilySpec& spec);

}  // namespace distbal
