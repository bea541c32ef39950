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

#include "distbal/graph.hpp"

namespace distbal {

// Product vertex (a, b) has index a * |V(B)| + b.

/// (a,b) ~ (a',b') iff a = a' and b ~ b', or b = b' and a ~ a'.
Graph cartesian(const Graph& a, const Graph& b);

/// (a,b) ~ (a',b') iff a ~ a', or a = a' and b ~ b'. B may be disconnected.
Graph lexicographic(const Graph& a, const Graph& b);

/// Vertex i is the i-th edge of g in canonical order (see Graph::edges).
Graph line_graph(const Graph& g);

}  // namespace distbal
