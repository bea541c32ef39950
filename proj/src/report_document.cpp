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

#include <sstream>

#include "distbal/cli.hpp"

namespace distbal {
namespace {

using json = nlohmann::ordered_json;

template <typename T>
json optional_value(const std::optional<T>& v) {
  return v ? json(*v) : json(nullptr);
}

template <typename T>
std::optional<T> read_optional(const json& j) {
  if (j.is_null()) return std::nullopt;
  return j.get<T>();
}

json edge_json(const Edge& e) { return json::array({e.first, e.second}); }

Edge edge_from(const json& j) { return {j.at(0).get<Vertex>(), j.at(1).get<Vertex>()}; }

}  // namespace

nlohmann::ordered_json to_json(const ReportDocument& doc) {
  const auto& r = doc.report;
  json report;
  report["n"] = r.n;
  report["m"] = r.m;
  report["is_db"] = r.is_db;
  report["is_ndb"] = r.is_ndb;
  report["gamma"] = optional_value(r.gamma);
  report["is_sdb"] = r.is_sdb;
  report["diameter"] = r.diameter;
  report["bipartite"] = r.bipartite;
  report["regular_valency"] = optional_value(r.regular_valency);
  report["db_witness"] = nullptr;
  if (r.db_witness) {
    report["db_witness"] = json{{"edge", edge_json(r.db_witness->edge)},
                                {"w_uv", r.db_witness->w_uv},
                                {"w_vu", r.db_witness->w_vu}};
  }
  report["sdb_witness"] = nullptr;
  if (r.sdb_witness) {
    const auto& w = *r.sdb_witness;
    report["sdb_witness"] = json{{"edge", edge_json(w.edge)},
                                 {"cell_level", w.cell_level},
                                 {"profile_level", w.profile_level},
                                 {"up", w.up_count},
                                 {"down", w.down_count}};
  }
  report["conjecture_holds"] = r.conjecture_holds;
  report["conjecture_witness"] = nullptr;
  if (r.conjecture_witness) {
    report["conjecture_witness"] = json{{"edge", edge_json(r.conjecture_witness->edge)},
                                        {"sum_u", r.conjecture_witness->sum_u},
                                        {"sum_v", r.conjecture_witness->sum_v}};
  }

  json j;
  j["tool"] = "distbal";
  j["tool_version"] = doc.tool_version;
  j["source"] = doc.source;
  j["wall_seconds"] = doc.wall_seconds;
  j["report"] = std::move(report);
  return j;
}

ReportDocument report_document_from_json(const nlohmann::ordered_json& j) {
  ReportDocument doc;
  doc.tool_version = j.at("tool_version").get<std::string>();
  doc.source = j.at("source").get<std::string>();
  doc.wall_seconds = j.at("wall_seconds").get<double>();

  const auto& jr = j.at("report");
  auto& r = doc.report;
  r.n = jr.at("n").get<std::size_t>();
  r.m = jr.at("m").get<std::size_t>();
  r.is_db = jr.at("is_db").get<bool>();
  r.is_ndb = jr.at("is_ndb").get<bool>();
  r.gamma = read_optional<std::size_t>(jr.at("gamma"));
  r.is_sdb = jr.at("is_sdb").get<bool>();
  r.diameter = jr.at("diameter").get<std::size_t>();
  r.bipartite = jr.at("bipartite").get<bool>();
  r.regular_valency = read_optional<std::size_t>(jr.at("regular_valency"));
  if (const auto& w = jr.at("db_witness"); !w.is_null()) {
    r.db_witness = DbWitness{edge_from(w.at("edge")), w.at("w_uv").get<std::size_t>(),
                             w.at("w_vu").get<std::size_t>()};
  }
  if (const auto& w = jr.at("sdb_witness"); !w.is_null()) {
    r.sdb_witness = SdbWitness{edge_from(w.at("edge")), w.at("cell_level").get<std::size_t>(),
                               w.at("profile_level").get<std::size_t>(),
                               w.at("up").get<std::size_t>(), w.at("down").get<std::size_t>()};
  }
  r.conjecture_holds = jr.at("conjecture_holds").get<bool>();
  if (const auto& w = jr.at("conjecture_witness"); !w.is_null()) {
    r.conjecture_witness = ConjectureWitness{edge_from(w.at("edge")),
                                             w.at("sum_u").get<std::uint64_t>(),
                                             w.at("sum_v").get<std::uint64_t>()};
  }
  return doc;
}

std::string format_report(const ReportDocument& doc, bool color) {
  const auto& r = doc.report;
  auto flag = [color](bool b) -> std::string {
    if (!color) return b ? "yes" : "no";
    return b ? "\x1b[32myes\x1b[0m" : "\x1b[31mno\x1b[0m";
  };
  auto edge = [](const Edge& e) { return std::to_string(e.first) + "-" + std::to_string(e.second); };

  std::ostringstream os;
  auto row = [&os](std::string_view key, const std::string& value) {
    os << key;
    for (std::size_t i = key.size(); i < 20; ++i) os << ' ';
    os << value << '\n';
  };
  row("source", doc.source);
  row("vertices", std::to_string(r.n));
  row("edges", std::to_string(r.m));
  row("diameter", std::to_string(r.diameter));
  row("regular", r.regular_valency ? flag(true) + " (valency " + std::to_string(*r.regular_valency) + ")"
                                   : flag(false));
  row("bipartite", flag(r.bipartite));

  std::string db = flag(r.is_db);
  if (r.db_witness) {
    db += " (edge " + edge(r.db_witness->edge) + ": |W_uv| = " + std::to_string(r.db_witness->w_uv) +
          ", |W_vu| = " + std::to_string(r.db_witness->w_vu) + ")";
  }
  row("distance-balanced", db);
  row("nicely DB", r.gamma ? flag(true) + " (gamma = " + std::to_string(*r.gamma) + ")" : flag(false));

  std::string sdb = flag(r.is_sdb);
  if (r.sdb_witness) {
    const auto& w = *r.sdb_witness;
    const auto i = std::to_string(w.cell_level);
    const auto i1 = std::to_string(w.cell_level - 1);
    sdb += " (edge " + edge(w.edge) + ": |D^" + i1 + "_" + i + "| = " + std::to_string(w.up_count) +
           ", |D^" + i + "_" + i1 + "| = " + std::to_string(w.down_count) + ")";
  }
  row("strongly DB", sdb);

  std::string wd = flag(r.conjecture_holds);
  if (r.conjecture_witness) {
    wd += " (edge " + edge(r.conjecture_witness->edge) +
          ": d(u,W_uv) = " + std::to_string(r.conjecture_witness->sum_u) +
          ", d(v,W_vu) = " + std::to_string(r.conjecture_witness->sum_v) + ")";
  }
  row("d(u,W_uv)=d(v,W_vu)", wd);

  std::ostringstream t;
  t.precision(6);
  t << std::fixed << doc.wall_seconds << " s";
  row("wall time", t.str());
  return os.str();
}

}  // namespace distbal
