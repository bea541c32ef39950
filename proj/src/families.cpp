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

#include "distbal/families.hpp"

#include <array>
#include <string>

#include "distbal/error.hpp"
#include "distbal/products.hpp"

namespace distbal {
namespace {

struct FamilyInfo {
  Family family;
  std::string_view name;
  std::size_t arity;
};

constexpr std::array kFamilies{
    FamilyInfo{Family::Cycle, "cycle", 1},
    FamilyInfo{Family::Complete, "complete", 1},
    FamilyInfo{Family::CompleteMultipartiteT3, "complete_multipartite_t3", 1},
    FamilyInfo{Family::Prism, "prism", 1},
    FamilyInfo{Family::Moebius, "moebius", 1},
    FamilyInfo{Family::Petersen, "petersen", 0},
    FamilyInfo{Family::PetersenComplement, "petersen_complement", 0},
    FamilyInfo{Family::Paley9, "paley9", 0},
    FamilyInfo{Family::Hypercube, "hypercube", 1},
    FamilyInfo{Family::LineOfHypercube3, "line_of_hypercube3", 0},
    FamilyInfo{Family::Icosahedron, "icosahedron", 0},
    FamilyInfo{Family::Empty, "empty", 1},
    FamilyInfo{Family::Tricirc30, "tricirc30", 0},
    FamilyInfo{Family::GammaK, "gamma_k", 1},
    FamilyInfo{Family::C6kl, "c6kl", 2},
};

constexpr std::array<Family, kFamilies.size()> kFamilyList = [] {
  std::array<Family, kFamilies.size()> out{};
  for (std::size_t i = 0; i < kFamilies.size(); ++i) out[i] = kFamilies[i].family;
  return out;
}();

const FamilyInfo& info(Family f) {
  for (const auto& fi : kFamilies) {
    if (fi.family == f) return fi;
  }
  throw Error(ErrorCode::UnknownFamily, "unregistered family");
}

void require(bool ok, std::string_view what) {
  if (!ok) throw Error(ErrorCode::ParamOutOfRange, std::string(what));
}

Graph complement(const Graph& g) {
  std::vector<Edge> edges;
  for (Vertex u = 0; u < g.order(); ++u) {
    for (Vertex v = u + 1; v < g.order(); ++v) {
      if (!g.adjacent(u, v)) edges.emplace_back(u, v);
    }
  }
  return build_graph(g.order(), edges);
}

}  // namespace

std::string_view family_name(Family f) noexcept {
  for (const auto& fi : kFamilies) {
    if (fi.family == f) return fi.name;
  }
  return "unknown";
}

std::span<const Family> all_families() noexcept { return kFamilyList; }

std::string FamilySpec::to_string() const {
  std::string out(family_name(family));
  for (auto p : params) out += " " + std::to_string(p);
  return out;
}

FamilySpec parse_family(std::string_view name, std::span<const std::size_t> params) {
  for (const auto& fi : kFamilies) {
    if (fi.name != name) continue;
    if (params.size() != fi.arity) {
      throw Error(ErrorCode::ParamOutOfRange, std::string(name) + " takes " +
                                                  std::to_string(fi.arity) + " parameter(s), got " +
                                                  std::to_string(params.size()));
    }
    return FamilySpec{fi.family, {params.begin(), params.end()}};
  }
  throw Error(ErrorCode::UnknownFamily, std::string(name));
}

Graph gen_cycle(std::size_t n) {
  require(n >= 3, "cycle needs n >= 3");
  std::vector<Edge> edges;
  for (Vertex i = 0; i < n; ++i) edges.emplace_back(i, static_cast<Vertex>((i + 1) % n));
  return build_graph(n, edges);
}

Graph gen_complete(std::size_t n) {
  require(n >= 1, "complete needs n >= 1");
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) edges.emplace_back(u, v);
  }
  return build_graph(n, edges);
}

Graph gen_complete_multipartite_t3(std::size_t t) {
  require(t >= 1, "complete_multipartite_t3 needs t >= 1");
  const std::size_t n = 3 * t;
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      if (u / 3 != v / 3) edges.emplace_back(u, v);
    }
  }
  return build_graph(n, edges);
}

Graph gen_prism(std::size_t n) {
  require(n >= 3, "prism needs n >= 3");
  return cartesian(gen_cycle(n), gen_complete(2));
}

Graph gen_moebius(std::size_t n) {
  require(n >= 2, "moebius needs n >= 2");
  const std::size_t order = 2 * n;
  std::vector<Edge> edges;
  for (Vertex i = 0; i < order; ++i) edges.emplace_back(i, static_cast<Vertex>((i + 1) % order));
  for (Vertex i = 0; i < n; ++i) edges.emplace_back(i, static_cast<Vertex>(i + n));
  return build_graph(order, edges);
}

Graph gen_petersen() {
  // Outer 5-cycle 0..4, spokes i ~ i+5, inner pentagram on 5..9.
  return build_graph(10, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0},
                          {0, 5}, {1, 6}, {2, 7}, {3, 8}, {4, 9},
                          {5, 7}, {7, 9}, {9, 6}, {6, 8}, {8, 5}});
}

Graph gen_petersen_complement() { return complement(gen_petersen()); }

Graph gen_paley9() {
  // GF(9) = Z_3[i] / (i^2 + 1); element a + b i has index 3a + b.
  auto mul = [](int a, int b, int c, int d) {
    return std::pair{((a * c - b * d) % 3 + 3) % 3, ((a * d + b * c) % 3 + 3) % 3};
  };
  std::array<bool, 9> square{};
  for (int a = 0; a < 3; ++a) {
    for (int b = 0; b < 3; ++b) {
      if (a == 0 && b == 0) continue;
      auto [re, im] = mul(a, b, a, b);
      square[3 * re + im] = true;
    }
  }
  std::vector<Edge> edges;
  for (Vertex x = 0; x < 9; ++x) {
    for (Vertex y = x + 1; y < 9; ++y) {
      const int da = (static_cast<int>(x / 3) - static_cast<int>(y / 3) + 3) % 3;
      const int db = (static_cast<int>(x % 3) - static_cast<int>(y % 3) + 3) % 3;
      if (square[3 * da + db]) edges.emplace_back(x, y);
    }
  }
  return build_graph(9, edges);
}

Graph gen_hypercube(std::size_t dim) {
  require(dim >= 1 && dim <= 20, "hypercube needs 1 <= n <= 20");
  const std::size_t n = std::size_t{1} << dim;
  std::vector<Edge> edges;
  for (Vertex v = 0; v < n; ++v) {
    for (std::size_t bit = 0; bit < dim; ++bit) {
      const Vertex w = v ^ (Vertex{1} << bit);
      if (v < w) edges.emplace_back(v, w);
    }
  }
  return build_graph(n, edges);
}

Graph gen_line_of_hypercube3() { return line_graph(gen_hypercube(3)); }

Graph gen_icosahedron() {
  // 0 = top, 1..5 upper ring, 6..10 lower ring, 11 = bottom.
  return build_graph(12, {{0, 1},  {0, 2},  {0, 3},  {0, 4},  {0, 5},
                          {1, 2},  {2, 3},  {3, 4},  {4, 5},  {5, 1},
                          {1, 6},  {2, 7},  {3, 8},  {4, 9},  {5, 10},
                          {1, 7},  {2, 8},  {3, 9},  {4, 10}, {5, 6},
                          {6, 7},  {7, 8},  {8, 9},  {9, 10}, {10, 6},
                          {11, 6}, {11, 7}, {11, 8}, {11, 9}, {11, 10}});
}

Graph gen_empty(std::size_t n) {
  require(n >= 1, "empty needs n >= 1");
  return build_graph(n, std::span<const Edge>{});
}

Graph gen_tricirc30() {
  std::vector<Edge> edges;
  for (unsigned j = 0; j < 10; ++j) {
    edges.emplace_back(tricirc_vertex(0, j), tricirc_vertex(1, j + 1));
    edges.emplace_back(tricirc_vertex(0, j), tricirc_vertex(1, j + 4));
    edges.emplace_back(tricirc_vertex(0, j), tricirc_vertex(2, j + 1));
    edges.emplace_back(tricirc_vertex(0, j), tricirc_vertex(2, j + 4));
    edges.emplace_back(tricirc_vertex(1, j), tricirc_vertex(1, j + 4));
    edges.emplace_back(tricirc_vertex(2, j), tricirc_vertex(2, j + 4));
  }
  return build_graph(30, edges);
}

Graph gen_gamma_k(std::size_t k) {
  require(k >= 3, "gamma_k needs k >= 3");
  const std::size_t xs = 8 * k + 4;
  const std::size_t ys = 4 * k + 2;
  const std::array<std::size_t, 6> offsets{0, 2 * k - 1, 2 * k + 1, 4 * k + 2, 6 * k + 1, 6 * k + 3};
  std::vector<Edge> edges;
  edges.reserve(xs + 6 * ys);
  for (std::size_t i = 0; i < xs; ++i) edges.emplace_back(gamma_x(k, i), gamma_x(k, i + 1));
  for (std::size_t i = 0; i < ys; ++i) {
    for (auto m : offsets) edges.emplace_back(gamma_y(k, i), gamma_x(k, i + m));
  }
  return build_graph(xs + ys, edges);
}

Vertex c6kl_vertex(std::size_t k, std::size_t l, unsigned position, std::size_t r) {
  // Even positions hold k vertices, odd positions l.
  const std::size_t start = (position / 2) * (k + l) + (position % 2) * k;
  return static_cast<Vertex>(start + r);
}

Graph gen_c6kl(std::size_t k, std::size_t l) {
  require(k >= 1 && l >= 1, "c6kl needs k, l >= 1");
  std::vector<Edge> edges;
  for (unsigned p = 0; p < 6; p += 2) {
    for (unsigned q : {(p + 1) % 6, (p + 5) % 6}) {
      for (std::size_t r = 0; r < k; ++r) {
        for (std::size_t s = 0; s < l; ++s) {
          edges.emplace_back(c6kl_vertex(k, l, p, r), c6kl_vertex(k, l, q, s));
        }
      }
    }
  }
  return build_graph(3 * (k + l), edges);
}

Graph gen_named(const FamilySpec& spec) {
  const auto& fi = info(spec.family);
  if (spec.params.size() != fi.arity) {
    throw Error(ErrorCode::ParamOutOfRange,
                std::string(fi.name) + " takes " + std::to_string(fi.arity) + " parameter(s)");
  }
  const auto& p = spec.params;
  switch (spec.family) {
    case Family::Cycle: return gen_cycle(p[0]);
    case Family::Complete: return gen_complete(p[0]);
    case Family::CompleteMultipartiteT3: return gen_complete_multipartite_t3(p[0]);
    case Family::Prism: return gen_prism(p[0]);
    case Family::Moebius: return gen_moebius(p[0]);
    case Family::Petersen: return gen_petersen();
    case Family::PetersenComplement: return gen_petersen_complement();
    case Family::Paley9: return gen_paley9();
    case Family::Hypercube: return gen_hypercube(p[0]);
    case Family::LineOfHypercube3: return gen_line_of_hypercube3();
    case Family::Icosahedron: return gen_icosahedron();
    case Family::Empty: return gen_empty(p[0]);
    case Family::Tricirc30: return gen_tricirc30();
    case Family::GammaK: return gen_gamma_k(p[0]);
    case Family::C6kl: return gen_c6kl(p[0], p[1]);
  }
  throw Error(ErrorCode::UnknownFamily, "unhandled family");
}

}  // namespace distbal
