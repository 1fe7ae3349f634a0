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

#pragma once

#include <array>
#include <cstddef>
#include <iosfwd>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

namespace fermicode {

enum class VertexKind { kPhysical, kVirtual };

struct Vertex {
  VertexKind kind = VertexKind::kPhysical;
  /// Neighbor indices in port order. A neighbor appears once per parallel edge.
  std::vector<std::size_t> ports;
  std::optional<std::array<double, 2>> position;
};

/// Edge with a < b and the port it occupies at each end. Edges are oriented
/// a -> b unless `reversed`; the orientation picks the sign of the encoded
/// edge operator.
struct Edge {
  std::size_t a = 0;
  std::size_t b = 0;
  std::size_t port_a = 0;
  std::size_t port_b = 0;
  bool reversed = false;

  std::size_t tail() const { return reversed ? b : a; }
  std::size_t head() const { return reversed ? a : b; }
};

/// Graph encoded by the qubit system: physical modes, virtual modes, and
/// an ordered port list at every vertex.
///
/// Physical vertices occupy indices [0, physical_count()) and vertex index j
/// carries fermionic mode j. Virtual vertices follow. Parallel edges are
/// allowed (the 2x2 torus needs them): the k-th occurrence of v in the port
/// list of u pairs with the k-th occurrence of u in the port list of v.
///
/// Edges run from the lower to the higher index unless listed in
/// `reversed` as (tail, head) with tail > head; each entry flips the
/// lowest-index edge between the two that is not flipped yet.
class SystemGraph {
 public:
  SystemGraph() = default;
  explicit SystemGraph(std::vector<Vertex> vertices, std::string generator = {},
                       nlohmann::json params = nlohmann::json::object(),
                       std::span<const std::pair<std::size_t, std::size_t>> reversed = {});

  std::size_t vertex_count() const { return vertices_.size(); }
  std::size_t physical_count() const { return physical_count_; }
  std::size_t edge_count() const { return edges_.size(); }

  const Vertex& vertex(std::size_t v) const { return vertices_.at(v); }
  const std::vector<Vertex>& vertices() const { return vertices_; }
  VertexKind kind(std::size_t v) const { return vertices_.at(v).kind; }
  bool is_physical(std::size_t v) const { return v < physical_count_; }
  std::size_t degree(std::size_t v) const { return vertices_.at(v).ports.size(); }
  std::span<const std::size_t> ports(std::size_t v) const { return vertices_.at(v).ports; }

  const std::vector<Edge>& edges() const { return edges_; }
  const Edge& edge(std::size_t e) const { return edges_.at(e); }
  /// Edge attached to port p of vertex v.
  std::size_t port_edge(std::size_t v, std::size_t p) const { return port_edges_.at(v).at(p); }
  /// Lowest-index edge joining u and v.
  std::optional<std::size_t> find_edge(std::size_t u, std::size_t v) const;
  /// Port index at u of edge e.
  std::size_t port_at(std::size_t e, std::size_t u) const;
  /// The other endpoint of edge e.
  std::size_t other_end(std::size_t e, std::size_t u) const;

  /// (tail, head) of every reversed edge, in edge order.
  std::vector<std::pair<std::size_t, std::size_t>> reversed_edges() const;

  const std::string& generator() const { return generator_; }
  const nlohmann::json& params() const { return params_; }

  friend bool operator==(const SystemGraph& a, const SystemGraph& b);

 private:
  std::vector<Vertex> vertices_;
  std::vector<Edge> edges_;
  std::vector<std::vector<std::size_t>> port_edges_;
  std::size_t physical_count_ = 0;
  std::string generator_;
  nlohmann::json params_;
};

/// Coupling graph read off a Hamiltonian; no ports, no virtual vertices.
struct InteractionGraph {
  std::size_t n_vertices = 0;
  std::set<std::pair<std::size_t, std::size_t>> edges;  // (a,b) with a < b

  std::size_t degree(std::size_t v) const;
  /// Physical system graph with ascending-neighbor port order.
  SystemGraph to_system_graph(std::string generator = "interaction") const;
};

/// Closed walk v0 -> v1 -> ... -> v_{L-1} -> v0; edges[i] joins
/// vertices[i] and vertices[(i+1) % L].
struct Cycle {
  std::vector<std::size_t> vertices;
  std::vector<std::size_t> edges;
};

struct CycleBasis {
  std::vector<Cycle> cycles;
  std::vector<std::size_t> tree_edges;
};

/// Component label per vertex, labels in order of first vertex.
std::vector<std::size_t> connected_components(const SystemGraph& g);
std::size_t component_count(const SystemGraph& g);

/// Fundamental cycle basis from a BFS spanning forest rooted at the lowest
/// index of each component; one cycle per non-tree edge, in edge order.
/// Throws DimensionError when the graph is disconnected and require_connected.
CycleBasis cycle_basis(const SystemGraph& g, bool require_connected = true);

/// Walk along a vertex sequence, choosing the lowest-index edge between
/// consecutive vertices.
Cycle walk_from_vertices(const SystemGraph& g, std::span<const std::size_t> vertices,
                         bool closed);

/// Minimum-cost path from j to k where the cost of a path is the sum of
/// vertex_cost over its interior vertices. Ties are broken by the
/// lexicographically smallest vertex sequence. Throws RouteError if k is
/// unreachable.
std::vector<std::size_t> shortest_path(const SystemGraph& g, std::size_t j,
                                       std::size_t k,
                                       std::span<const std::size_t> vertex_cost);

/// All shortest paths from one source under the same rules; entry v is empty
/// when v is unreachable.
std::vector<std::vector<std::size_t>> shortest_paths_from(
    const SystemGraph& g, std::size_t source,
    std::span<const std::size_t> vertex_cost);

/// Sum over vertices of ceil(d(v)/2).
std::size_t qubit_count(const SystemGraph& g);
/// Sum over vertices of d(v)/2, i.e. the edge count: the allocation when
/// every degree is even.
std::size_t even_degree_qubit_count(const SystemGraph& g);
/// Vertices of degree zero; they receive no qubits.
std::vector<std::size_t> isolated_vertices(const SystemGraph& g);

/// Canonical graph document (1-based ids, vertices by id, edges sorted,
/// each written as [tail, head]).
nlohmann::json graph_to_json(const SystemGraph& g);
SystemGraph graph_from_json(const nlohmann::json& doc);
void write_graph(std::ostream& os, const SystemGraph& g);
SystemGraph read_graph(std::istream& is);

}  // namespace fermicode
