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

#include "distbal/io.hpp"

#include <gtest/gtest.h>

#include "distbal/cli.hpp"
#include "distbal/error.hpp"
#include "distbal/families.hpp"
#include "distbal/oracle.hpp"
#include "distbal/products.hpp"

namespace distbal {
namespace {

struct Failure {
  ErrorCode code;
  std::string message;
};

Failure failure_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return {e.code(), e.what()};
  }
  ADD_FAILURE() << "expected an Error";
  return {ErrorCode::Malformed, ""};
}

TEST(Graph6, SmallKnownStrings) {
  EXPECT_EQ(write_graph6(gen_complete(3)), "Bw");
  EXPECT_EQ(write_graph6(gen_complete(2)), "A_");
  EXPECT_EQ(parse_graph6("Bw"), gen_complete(3));
  EXPECT_EQ(parse_graph6("A_"), gen_complete(2));
  EXPECT_EQ(write_graph6(gen_empty(1)), "@");
  EXPECT_EQ(write_graph6(Graph{}), "?");

  const auto g = build_graph(5, {{0, 2}, {0, 4}, {1, 3}, {3, 4}});
  EXPECT_EQ(write_graph6(g), "DQc");
  EXPECT_EQ(parse_graph6("DQc"), g);
}

TEST(Graph6, HeaderAndLineEndings) {
  EXPECT_EQ(parse_graph6(">>graph6<<Bw"), gen_complete(3));
  EXPECT_EQ(parse_graph6("Bw\r\n"), gen_complete(3));
  EXPECT_EQ(parse_graph_text("\n\nBw\n"), gen_complete(3));
}

TEST(Graph6, LongFormHeader) {
  const auto e63 = write_graph6(gen_empty(63));
  EXPECT_EQ(e63.substr(0, 4), "~??~");
  EXPECT_EQ(e63.size(), 4U + (63 * 62 / 2 + 5) / 6);
  EXPECT_EQ(parse_graph6(e63), gen_empty(63));

  const auto t = gen_tricirc30();
  const auto big = cartesian(t, t);
  const auto s = write_graph6(big);
  EXPECT_EQ(s[0], '~');
  EXPECT_EQ(s.substr(1, 3), std::string({char(63 + 0), char(63 + 14), char(63 + 4)}));  // 900 = 14*64 + 4
  EXPECT_EQ(parse_graph6(s), big);
}

TEST(Graph6, RoundTripsEveryFamily) {
  for (const auto& spec : {parse_family("cycle", std::vector<std::size_t>{9}),
                           parse_family("complete", std::vector<std::size_t>{7}),
                           parse_family("hypercube", std::vector<std::size_t>{6}),
                           parse_family("gamma_k", std::vector<std::size_t>{10}),
                           parse_family("c6kl", std::vector<std::size_t>{3, 4}),
                           parse_family("icosahedron", std::vector<std::size_t>{}),
                           parse_family("paley9", std::vector<std::size_t>{}),
                           parse_family("tricirc30", std::vector<std::size_t>{})}) {
    const auto g = gen_named(spec);
    EXPECT_EQ(parse_graph6(write_graph6(g)), g) << spec.to_string();
    EXPECT_EQ(parse_edgelist(write_edgelist(g)), g) << spec.to_string();
  }
}

TEST(Graph6, RoundTripsRandomGraphsUpToOneThousand) {
  oracle::Lcg rng(2026);
  for (std::size_t n : {2, 61, 62, 63, 64, 200, 511, 1000}) {
    std::vector<Edge> edges;
    for (int i = 0; i < 3000; ++i) {
      Vertex a = rng.next() % n;
      Vertex b = rng.next() % n;
      if (a != b) edges.emplace_back(a, b);
    }
    const auto g = build_graph(n, edges);
    EXPECT_EQ(parse_graph6(write_graph6(g)), g) << n;
  }
}

TEST(Graph6, RejectsMalformedInput) {
  EXPECT_EQ(failure_of([] { parse_graph6("B"); }).code, ErrorCode::MalformedGraph6);
  EXPECT_EQ(failure_of([] { parse_graph6(""); }).code, ErrorCode::MalformedGraph6);
  EXPECT_EQ(failure_of([] { parse_graph6("Bw?"); }).code, ErrorCode::MalformedGraph6);
  const auto bad_char = failure_of([] { parse_graph6("B\x20"); });
  EXPECT_EQ(bad_char.code, ErrorCode::MalformedGraph6);
  EXPECT_NE(bad_char.message.find("byte 1"), std::string::npos) << bad_char.message;
  // "Bx" sets a padding bit.
  EXPECT_EQ(failure_of([] { parse_graph6("Bx"); }).code, ErrorCode::MalformedGraph6);
}

TEST(EdgeList, ParsesWithComments) {
  const auto g = parse_edgelist("# triangle\n3 3\n0 1\n1 2 # closing soon\n\n2 0\n");
  EXPECT_EQ(g, gen_complete(3));
  EXPECT_EQ(parse_graph_text("3 3\n0 1\n1 2\n2 0\n"), gen_complete(3));
  EXPECT_EQ(write_edgelist(gen_complete(2)), "2 1\n0 1\n");
}

TEST(EdgeList, ErrorsCarryLineNumbers) {
  const auto range = failure_of([] { parse_edgelist("2 1\n0 5\n"); });
  EXPECT_EQ(range.code, ErrorCode::VertexOutOfRange);
  EXPECT_NE(range.message.find("line 2"), std::string::npos) << range.message;

  const auto loop = failure_of([] { parse_edgelist("3 2\n0 1\n# c\n2 2\n"); });
  EXPECT_EQ(loop.code, ErrorCode::SelfLoop);
  EXPECT_NE(loop.message.find("line 4"), std::string::npos) << loop.message;

  EXPECT_EQ(failure_of([] { parse_edgelist("3 2\n0 1\n"); }).code, ErrorCode::Malformed);
  EXPECT_EQ(failure_of([] { parse_edgelist("3 1\n0 1\n1 2\n"); }).code, ErrorCode::Malformed);
  EXPECT_EQ(failure_of([] { parse_edgelist("3 1\n0x1\n"); }).code, ErrorCode::Malformed);
  EXPECT_EQ(failure_of([] { parse_edgelist(""); }).code, ErrorCode::Malformed);
}

TEST(Json, ReportRoundTrip) {
  for (const auto& g : {gen_tricirc30(), gen_c6kl(2, 3), gen_hypercube(3), gen_gamma_k(5)}) {
    ReportDocument doc{full_report(g), "memory", std::string(kToolVersion), 0.125};
    const auto j = to_json(doc);
    EXPECT_EQ(j.at("tool"), "distbal");
    EXPECT_EQ(report_document_from_json(nlohmann::ordered_json::parse(j.dump())), doc);
  }
}

TEST(Json, KeyOrderIsStable) {
  ReportDocument doc{full_report(gen_cycle(5)), "c5", std::string(kToolVersion), 0.0};
  const auto j = to_json(doc);
  std::vector<std::string> keys;
  for (const auto& [k, v] : j.items()) keys.push_back(k);
  EXPECT_EQ(keys, (std::vector<std::string>{"tool", "tool_version", "source", "wall_seconds", "report"}));
  EXPECT_TRUE(j.at("report").at("db_witness").is_null());
  EXPECT_EQ(j.at("report").at("gamma"), 2);
}

}  // namespace
}  // namespace distbal
