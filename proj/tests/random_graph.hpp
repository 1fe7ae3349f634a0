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

#include <algorithm>
#include <random>
#include <set>
#include <utility>
#include <vector>

#include "fermicode/graph.hpp"

namespace fermicode::testing {

/// Connected simple graph with n_vertices vertices and at most max_edges
/// edges, shuffled port order, and the last `virtual_count` vertices virtual.
inline SystemGraph random_connected_graph(std::mt19937_64& rng, std::size_t n_vertices,
                                          std::size_t max_edges, std::size_t virtual_count = 0) {
  std::set<std::pair<std::size_t, std::size_t>> edges;
  std::vector<std::size_t> order(n_vertices);
  for (std::size_t i = 0; i < n_vertices; ++i) order[i] = i;
  std::shuffle(order.begin(), order.end(), rng);
  for (std::size_t i = 1; i < n_vertices; ++i) {
    const std::size_t u = order[i];
    const std::size_t v = order[rng() % i];
    edges.emplace(std::min(u, v), std::max(u, v));
  }
  const std::size_t cap = std::min(max_edges, n_vertices * (n_vertices - 1) / 2);
  const std::size_t target = edges.size() + (cap > edges.size() ? rng() % (cap - edges.size() + 1) : 0);
  while (edges.size() < target) {
    const std::size_t u = rng() % n_vertices;
    const std::size_t v = rng() % n_vertices;
    if (u != v) edges.emplace(std::min(u, v), std::max(u, v));
  }
  std::vector<Vertex> vs(n_vertices);
  for (auto [a, b] : edges) {
    vs[a].ports.push_back(b);
    vs[b].ports.push_back(a);
  }
  for (auto& v : vs) std::shuffle(v.ports.begin(), v.ports.end(), rng);
  for (std::size_t i = n_vertices - std::min(virtual_count, n_vertices); i < n_vertices; ++i) {
    vs[i].kind = VertexKind::kVirtual;
  }
  return SystemGraph(std::move(vs), "random");
}

}  // namespace fermicode::testing
