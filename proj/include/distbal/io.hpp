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
#include <string>
#include <string_view>

#include "distbal/graph.hpp"

namespace distbal {

/// Largest order the graph6 size header can express (36-bit form).
inline constexpr std::uint64_t kGraph6MaxOrder = (std::uint64_t{1} << 36) - 1;

/**
 * Decodes one graph6 line. A leading ">>graph6<<" header and trailing
 * CR/LF are accepted. Errors are MalformedGraph6 with the byte offset.
 *
 * Size header: n <= 62 is one byte n+63; up to 258047 it is 126 followed
 * by three 6-bit groups; beyond that 126 126 followed by six. The body packs
 * the upper triangle column by column, (0,1),(0,2),(1,2),(0,3),..., six bits
 * per byte, most significant first, zero padded.
 */
Graph parse_graph6(std::string_view line);

/// Encodes without a trailing newline. Throws TooLarge past kGraph6MaxOrder.
std::string write_graph6(const Graph& g);

/**
 * Plain edge list: the first line that is neither blank nor a '#' comment is
 * "n m", followed by m lines "u v". Anything after '#' on a line is ignored.
 * Errors carry the 1-based line number.
 */
Graph parse_edgelist(std::string_view text);
std::string write_edgelist(const Graph& g);

enum class GraphFormat { Auto, Graph6, EdgeList };

/// Auto picks edge-list when the first meaningful line starts with a digit.
Graph parse_graph_text(std::string_view text, GraphFormat format = GraphFormat::Auto);
std::string write_graph_text(const Graph& g, GraphFormat format);

}  // namespace distbal
