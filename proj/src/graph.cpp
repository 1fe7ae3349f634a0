// Copyright 2026 The fermicode Authors
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

#include "fermicode/graph.hpp"

#include <algorithm>
#include <istream>
#include <limits>
#include <map>
#include <ostream>
#include <queue>

#include "fermicode/errors.hpp"

namespace fermicode {

namespace {

constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();

std::size_t nth_occurrence(std::span<const std::size_t> ports, std::size_t value,
                           std::size_t n) {
  for (std::size_t p = 0; p < ports.size(); ++p) {
    if (ports[p] == value) {
      if (n == 0) return p;
      --n;
    }
  }
  return kNone;
}

}  // namespace

SystemGraph::SystemGraph(std::vector<Vertex> vertices, std::string generator,
                         nlohmann::json params,
                         std::span<const std::pair<std::size_t, std::size_t>> reversed)
    : vertices_(std::move(vertices)),
      generator_(std::move(generator)),
      params_(std::move(params)) {
  const std::size_t n = vertices_.size();
  while (physical_count_ < n && vertices_[physical_count_].kind == VertexKind::kPhysical) {
    ++physical_count_;
  }
  for (std::size_t v = physical_count_; v < n; ++v) {
    if (vertices_[v].kind == VertexKind::kPhysical) {
      throw InvalidArgument("physical vertices must precede virtual vertices");
    }
  }

  port_edges_.assign(n, {});
  for (std::size_t u = 0; u < n; ++u) port_edges_[u].assign(vertices_[u].ports.size(), kNone);

  for (std::size_t u = 0; u < n; ++u) {
    const auto& ports = vertices_[u].ports;
    std::map<std::size_t, std::size_t> seen;
    for (std::size_t p = 0; p < ports.size(); ++p) {
      const std::size_t v = ports[p];
      if (v >= n) {
        throw InvalidArgument("port of vertex " + std::to_string(u + 1) +
                              " names unknown vertex " + std::to_string(v + 1));
      }
      if (v == u) {
        throw InvalidArgument("self-loop at vertex " + std::to_string(u + 1));
      }
      const std::size_t k = seen[v]++;
      if (u > v) continue;
      const std::size_t q = nth_occurrence(vertices_[v].ports, u, k);
      if (q == kNone) {
        throw InvalidArgument("vertex " + std::to_string(u + 1) + " lists " +
                              std::to_string(v + 1) +
                              " more often than the reverse");
      }
      edges_.push_back(Edge{u, v, p, q});
    }
    for (const auto& [v, count] : seen) {
      const auto back = static_cast<std::size_t>(
          std::count(vertices_[v].ports.begin(), vertices_[v].ports.end(), u));
      if (back != count) {
        throw InvalidArgument("port lists of vertices " + std::to_string(u + 1) +
                              " and " + std::to_string(v + 1) + " disagree");
      }
    }
  }
  std::sort(edges_.begin(), edges_.end(), [](const Edge& l, const Edge& r) {
    return std::tie(l.a, l.b, l.port_a) < std::tie(r.a, r.b, r.port_a);
  });
  for (std::size_t e = 0; e < edges_.size(); ++e) {
    port_edges_[edges_[e].a][edges_[e].port_a] = e;
    port_edges_[edges_[e].b][edges_[e].port_b] = e;
  }
  for (const auto& [tail, head] : reversed) {
    auto it = std::find_if(edges_.begin(), edges_.end(), [&](const Edge& ed) {
      return ed.a == head && ed.b == tail && !ed.reversed;
    });
    if (tail <= head || it == edges_.end()) {
      throw InvalidArgument("cannot reverse edge " + std::to_string(tail + 1) + " -> " +
                            std::to_string(head + 1));
    }
    it->reversed = true;
  }
}

std::vector<std::pair<std::size_t, std::size_t>> SystemGraph::reversed_edges() const {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (const auto& e : edges_) {
    if (e.reversed) out.emplace_back(e.b, e.a);
  }
  return out;
}

std::optional<std::size_t> SystemGraph::find_edge(std::size_t u, std::size_t v) const {
  if (u >= vertices_.size() || v >= vertices_.size()) return std::nullopt;
  std::optional<std::size_t> best;
  for (std::size_t p = 0; p < vertices_[u].ports.size(); ++p) {
    if (vertices_[u].ports[p] == v) {
      const std::size_t e = port_edges_[u][p];
      if (!best || e < *best) best = e;
    }
  }
  return best;
}

std::size_t SystemGraph::port_at(std::size_t e, std::size_t u) const {
  const Edge& ed = edges_.at(e);
  if (ed.a == u) return ed.port_a;
  if (ed.b == u) return ed.port_b;
  throw InvalidArgument("vertex is not an endpoint of edge");
}

std::size_t SystemGraph::other_end(std::size_t e, std::size_t u) const {
  const Edge& ed = edges_.at(e);
  if (ed.a == u) return ed.b;
  if (ed.b == u) return ed.a;
  throw InvalidArgument("vertex is not an endpoint of edge");
}

bool operator==(const SystemGraph& a, const SystemGraph& b) {
  if (a.vertices_.size() != b.vertices_.size()) return false;
  for (std::size_t v = 0; v < a.vertices_.size(); ++v) {
    const auto& x = a.vertices_[v];
    const auto& y = b.vertices_[v];
    if (x.kind != y.kind || x.ports != y.ports || x.position != y.position) return false;
  }
  return a.reversed_edges() == b.reversed_edges() && a.generator_ == b.generator_ &&
         a.params_ == b.params_;
}

std::size_t InteractionGraph::degree(std::size_t v) const {
  return static_cast<std::size_t>(std::count_if(edges.begin(), edges.end(), [v](const auto& e) {
    return e.first == v || e.second == v;
  }));
}

SystemGraph InteractionGraph::to_system_graph(std::string generator) const {
  std::vector<Vertex> vs(n_vertices);
  for (const auto& [a, b] : edges) {
    vs[a].ports.push_back(b);
    vs[b].ports.push_back(a);
  }
  for (auto& v : vs) std::sort(v.ports.begin(), v.ports.end());
  return SystemGraph(std::move(vs), std::move(generator));
}

std::vector<std::size_t> connected_components(const SystemGraph& g) {
  std::vector<std::size_t> label(g.vertex_count(), kNone);
  std::size_t next = 0;
  for (std::size_t s = 0; s < g.vertex_count(); ++s) {
    if (label[s] != kNone) continue;
    std::queue<std::size_t> q;
    q.push(s);
    label[s] = next;
    while (!q.empty()) {
      const std::size_t u = q.front();
      q.pop();
      for (std::size_t w : g.ports(u)) {
        if (label[w] == kNone) {
          label[w] = next;
          q.push(w);
        }
      }
    }
    ++next;
  }
  return label;
}

std::size_t component_count(const SystemGraph& g) {
  const auto label = connected_components(g);
  return label.empty() ? 0 : *std::max_element(label.begin(), label.end()) + 1;
}

CycleBasis cycle_basis(const SystemGraph& g, bool require_connected) {
  const std::size_t n = g.vertex_count();
  if (require_connected && component_count(g) > 1) {
    throw DimensionError("cycle basis requires a connected graph");
  }
  std::vector<std::size_t> parent(n, kNone);
  std::vector<std::size_t> parent_edge(n, kNone);
  std::vector<std::size_t> depth(n, 0);
  std::vector<bool> seen(n, false);
  std::vector<bool> is_tree(g.edge_count(), false);
  CycleBasis basis;

  for (std::size_t root = 0; root < n; ++root) {
    if (seen[root]) continue;
    seen[root] = true;
    std::queue<std::size_t> q;
    q.push(root);
    while (!q.empty()) {
      const std::size_t u = q.front();
      q.pop();
      for (std::size_t p = 0; p < g.degree(u); ++p) {
        const std::size_t e = g.port_edge(u, p);
        const std::size_t w = g.other_end(e, u);
        if (seen[w]) continue;
        seen[w] = true;
        parent[w] = u;
        parent_edge[w] = e;
        depth[w] = depth[u] + 1;
        is_tree[e] = true;
        basis.tree_edges.push_back(e);
        q.push(w);
      }
    }
  }

  for (std::size_t e = 0; e < g.edge_count(); ++e) {
    if (is_tree[e]) continue;
    const Edge& ed = g.edge(e);
    // Tree path a -> lca -> b, closed by the non-tree edge b -> a.
    std::vector<std::size_t> up_a{ed.a};
    std::vector<std::size_t> up_a_edges;
    std::vector<std::size_t> up_b{ed.b};
    std::vector<std::size_t> up_b_edges;
    std::size_t x = ed.a;
    std::size_t y = ed.b;
    while (x != y) {
      if (depth[x] >= depth[y]) {
        up_a_edges.push_back(parent_edge[x]);
        x = parent[x];
        up_a.push_back(x);
      } else {
        up_b_edges.push_back(parent_edge[y]);
        y = parent[y];
        up_b.push_back(y);
      }
    }
    Cycle c;
    c.vertices = up_a;
    c.edges = up_a_edges;
    for (std::size_t i = up_b.size() - 1; i-- > 0;) {
      c.vertices.push_back(up_b[i]);
      c.edges.push_back(up_b_edges[i]);
    }
    c.edges.push_back(e);
    basis.cycles.push_back(std::move(c));
  }
  return basis;
}

Cycle walk_from_vertices(const SystemGraph& g, std::span<const std::size_t> vertices,
                         bool closed) {
  Cycle c;
  c.vertices.assign(vertices.begin(), vertices.end());
  const std::size_t steps = closed ? vertices.size() : vertices.size() - 1;
  for (std::size_t i = 0; i < steps; ++i) {
    const std::size_t u = vertices[i];
    const std::size_t v = vertices[(i + 1) % vertices.size()];
    auto e = g.find_edge(u, v);
    if (!e) {
      throw RouteError("walk step " + std::to_string(u + 1) + " -> " +
                       std::to_string(v + 1) + " is not an edge");
    }
    c.edges.push_back(*e);
  }
  return c;
}

std::vector<std::vector<std::size_t>> shortest_paths_from(
    const SystemGraph& g, std::size_t source,
    std::span<const std::size_t> vertex_cost) {
  const std::size_t n = g.vertex_count();
  if (source >= n) throw RouteError("unknown source vertex");
  if (vertex_cost.size() != n) throw DimensionError("vertex cost size mismatch");

  constexpr std::size_t kInf = std::numeric_limits<std::size_t>::max();
  std::vector<std::size_t> cost(n, kInf);
  std::vector<std::vector<std::size_t>> path(n);
  std::vector<bool> done(n, false);
  cost[source] = 0;
  path[source] = {source};

  for (;;) {
    std::size_t best = kNone;
    for (std::size_t v = 0; v < n; ++v) {
      if (done[v] || cost[v] == kInf) continue;
      if (best == kNone || cost[v] < cost[best] ||
          (cost[v] == cost[best] && path[v] < path[best])) {
        best = v;
      }
    }
    if (best == kNone) break;
    done[best] = true;
    const std::size_t step = best == source ? 0 : vertex_cost[best];
    for (std::size_t w : g.ports(best)) {
      if (done[w]) continue;
      const std::size_t c = cost[best] + step;
      if (c > cost[w]) continue;
      auto candidate = path[best];
      candidate.push_back(w);
      if (c < cost[w] || candidate < path[w]) {
        cost[w] = c;
        path[w] = std::move(candidate);
      }
    }
  }
  return path;
}

std::vector<std::size_t> shortest_path(const SystemGraph& g, std::size_t j,
                                       std::size_t k,
                                       std::span<const std::size_t> vertex_cost) {
  if (k >= g.vertex_count()) throw RouteError("unknown target vertex");
  auto all = shortest_paths_from(g, j, vertex_cost);
  if (all[k].empty()) {
    throw RouteError("no path between vertices " + std::to_string(j + 1) +
                     " and " + std::to_string(k + 1));
  }
  return std::move(all[k]);
}

std::size_t qubit_count(const SystemGraph& g) {
  std::size_t total = 0;
  for (std::size_t v = 0; v < g.vertex_count(); ++v) total += (g.degree(v) + 1) / 2;
  return total;
}

std::size_t even_degree_qubit_count(const SystemGraph& g) { return g.edge_count(); }

std::vector<std::size_t> isolated_vertices(const SystemGraph& g) {
  std::vector<std::size_t> out;
  for (std::size_t v = 0; v < g.vertex_count(); ++v) {
    if (g.degree(v) == 0) out.push_back(v);
  }
  return out;
}

nlohmann::json graph_to_json(const SystemGraph& g) {
  nlohmann::json doc;
  auto& vs = doc["vertices"] = nlohmann::json::array();
  for (std::size_t v = 0; v < g.vertex_count(); ++v) {
    nlohmann::json jv;
    jv["id"] = v + 1;
    jv["kind"] = g.kind(v) == VertexKind::kPhysical ? "physical" : "virtual";
    auto& ports = jv["ports"] = nlohmann::json::array();
    for (std::size_t w : g.ports(v)) ports.push_back(w + 1);
    if (const auto& pos = g.vertex(v).position) jv["pos"] = {(*pos)[0], (*pos)[1]};
    vs.push_back(std::move(jv));
  }
  auto& es = doc["edges"] = nlohmann::json::array();
  for (const auto& e : g.edges()) es.push_back({e.tail() + 1, e.head() + 1});
  doc["meta"] = {{"generator", g.generator()}, {"params", g.params()}};
  return doc;
}

SystemGraph graph_from_json(const nlohmann::json& doc) {
  try {
    const auto& vs = doc.at("vertices");
    std::vector<std::pair<std::size_t, Vertex>> parsed;
    for (const auto& jv : vs) {
      Vertex v;
      const std::string kind = jv.at("kind").get<std::string>();
      if (kind == "physical") {
        v.kind = VertexKind::kPhysical;
      } else if (kind == "virtual") {
        v.kind = VertexKind::kVirtual;
      } else {
        throw ParseError("unknown vertex kind '" + kind + "'");
      }
      for (const auto& p : jv.at("ports")) {
        const auto id = p.get<std::size_t>();
        if (id == 0) throw ParseError("vertex ids are 1-based");
        v.ports.push_back(id - 1);
      }
      if (jv.contains("pos")) {
        v.position = std::array<double, 2>{jv["pos"][0].get<double>(), jv["pos"][1].get<double>()};
      }
      parsed.emplace_back(jv.at("id").get<std::size_t>(), std::move(v));
    }
    std::sort(parsed.begin(), parsed.end(),
              [](const auto& l, const auto& r) { return l.first < r.first; });
    std::vector<Vertex> vertices;
    for (std::size_t i = 0; i < parsed.size(); ++i) {
      if (parsed[i].first != i + 1) throw ParseError("vertex ids must be 1..V");
      vertices.push_back(std::move(parsed[i].second));
    }
    std::string generator;
    nlohmann::json params = nlohmann::json::object();
    if (doc.contains("meta")) {
      generator = doc["meta"].value("generator", "");
      if (doc["meta"].contains("params")) params = doc["meta"]["params"];
    }
    std::vector<std::pair<std::size_t, std::size_t>> listed;
    std::vector<std::pair<std::size_t, std::size_t>> reversed;
    for (const auto& e : doc.at("edges")) {
      auto a = e.at(0).get<std::size_t>();
      auto b = e.at(1).get<std::size_t>();
      if (a == 0 || b == 0) throw ParseError("vertex ids are 1-based");
      listed.emplace_back(std::min(a, b), std::max(a, b));
      if (a > b) reversed.emplace_back(a - 1, b - 1);
    }
    SystemGraph g(std::move(vertices), std::move(generator), std::move(params), reversed);

    std::vector<std::pair<std::size_t, std::size_t>> derived;
    for (const auto& e : g.edges()) derived.emplace_back(e.a + 1, e.b + 1);
    std::sort(listed.begin(), listed.end());
    std::sort(derived.begin(), derived.end());
    if (listed != derived) throw ParseError("edge list disagrees with port lists");
    return g;
  } catch (const nlohmann::json::exception& ex) {
    throw ParseError(std::string("graph document: ") + ex.what());
  } catch (const InvalidArgument& ex) {
    throw ParseError(std::string("graph document: ") + ex.what());
  }
}

void write_graph(std::ostream& os, const SystemGraph& g) {
  os << graph_to_json(g).dump(1) << '\n';
}

SystemGraph read_graph(std::istream& is) {
  nlohmann::json doc;
  try {
    is >> doc;
  } catch (const nlohmann::json::exception& ex) {
    throw ParseError(std::string("graph file: ") + ex.what());
  }
  return graph_from_json(doc);
}

}  // namespace fermicode
