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

#include "fermicode/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "fermicode/errors.hpp"

namespace fermicode {

namespace {

constexpr std::size_t kRemoved = std::numeric_limits<std::size_t>::max();

// Incremental graph with insertion-ordered adjacency. Ports follow the
// order in which edges were added.
class GraphBuilder {
 public:
  std::size_t add_vertex(VertexKind kind) {
    kinds_.push_back(kind);
    adj_.emplace_back();
    alive_.push_back(true);
    return kinds_.size() - 1;
  }
  void add_edge(std::size_t u, std::size_t v) {
    adj_[u].push_back(v);
    adj_[v].push_back(u);
  }
  void remove(std::size_t v) { alive_[v] = false; }
  std::size_t live_degree(std::size_t v) const {
    return static_cast<std::size_t>(std::count_if(
        adj_[v].begin(), adj_[v].end(), [this](std::size_t w) { return alive_[w]; }));
  }
  bool alive(std::size_t v) const { return alive_[v]; }
  std::size_t degree(std::size_t v) const { return adj_[v].size(); }

  // Drops virtual vertices left with degree <= 1, repeatedly.
  bool prune_dangling() {
    bool any = false;
    bool changed = true;
    while (changed) {
      changed = false;
      for (std::size_t v = 0; v < kinds_.size(); ++v) {
        if (alive_[v] && kinds_[v] == VertexKind::kVirtual && live_degree(v) <= 1) {
          alive_[v] = false;
          changed = any = true;
        }
      }
    }
    return any;
  }

  // Physical vertices first, each group in creation order.
  SystemGraph finish(std::string generator, nlohmann::json params) const {
    std::vector<std::size_t> index(kinds_.size(), kRemoved);
    std::size_t next = 0;
    for (auto pass : {VertexKind::kPhysical, VertexKind::kVirtual}) {
      for (std::size_t v = 0; v < kinds_.size(); ++v) {
        if (alive_[v] && kinds_[v] == pass) index[v] = next++;
      }
    }
    std::vector<Vertex> out(next);
    for (std::size_t v = 0; v < kinds_.size(); ++v) {
      if (!alive_[v]) continue;
      Vertex& vx = out[index[v]];
      vx.kind = kinds_[v];
      for (std::size_t w : adj_[v]) {
        if (alive_[w]) vx.ports.push_back(index[w]);
      }
    }
    return SystemGraph(std::move(out), std::move(generator), std::move(params));
  }

 private:
  std::vector<VertexKind> kinds_;
  std::vector<std::vector<std::size_t>> adj_;
  std::vector<bool> alive_;
};

std::size_t wrap(long v, std::size_t n) {
  const long m = static_cast<long>(n);
  return static_cast<std::size_t>(((v % m) + m) % m);
}

std::pair<std::size_t, std::size_t> grid_dims(const std::vector<std::size_t>& dims) {
  if (dims.size() == 1) return {dims[0], dims[0]};
  if (dims.size() == 2) return {dims[0], dims[1]};
  throw InvalidArgument("2D lattice needs {L} or {rows, cols}");
}

SystemGraph gen_grid(std::size_t rows, std::size_t cols, Boundary boundary,
                     std::span<const std::pair<int, int>> directions,
                     std::string generator, nlohmann::json params, bool skew) {
  if (rows == 0 || cols == 0) throw InvalidArgument("lattice dims must be positive");
  if (boundary == Boundary::kPeriodic && (rows < 2 || cols < 2)) {
    throw InvalidArgument("periodic lattice needs every dim >= 2");
  }
  std::vector<Vertex> vs(rows * cols);
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < cols; ++c) {
      Vertex& v = vs[r * cols + c];
      const double x = static_cast<double>(c) + (skew ? 0.5 * static_cast<double>(r) : 0.0);
      const double y = -static_cast<double>(r) * (skew ? std::sqrt(3.0) / 2.0 : 1.0);
      v.position = std::array<double, 2>{x, y};
      for (const auto& [dr, dc] : directions) {
        long nr = static_cast<long>(r) + dr;
        long nc = static_cast<long>(c) + dc;
        if (boundary == Boundary::kOpen) {
          if (nr < 0 || nc < 0 || nr >= static_cast<long>(rows) || nc >= static_cast<long>(cols)) {
            continue;
          }
        }
        v.ports.push_back(wrap(nr, rows) * cols + wrap(nc, cols));
      }
    }
  }
  return SystemGraph(std::move(vs), std::move(generator), std::move(params));
}

std::string boundary_name(Boundary b) { return b == Boundary::kOpen ? "open" : "periodic"; }

SystemGraph gen_ternary_tree(std::size_t n) {
  // Root has four children, other internal vertices three, so every
  // virtual vertex of a filled tree has degree 4. Leaves sit at depth h.
  std::size_t h = 1;
  std::size_t capacity = 4;
  while (capacity < n) {
    capacity *= 3;
    ++h;
  }
  GraphBuilder b;
  for (std::size_t i = 0; i < capacity; ++i) b.add_vertex(VertexKind::kPhysical);
  const std::size_t root = b.add_vertex(VertexKind::kVirtual);
  // level_nodes[l] holds vertices of level l (level h = leaves).
  std::vector<std::vector<std::size_t>> level_nodes(h + 1);
  level_nodes[0] = {root};
  for (std::size_t l = 1; l <= h; ++l) {
    const std::size_t count = 4 * static_cast<std::size_t>(std::pow(3, l - 1));
    for (std::size_t i = 0; i < count; ++i) {
      const std::size_t v = l == h ? i : b.add_vertex(VertexKind::kVirtual);
      const std::size_t parent = l == 1 ? root : level_nodes[l - 1][i / 3];
      b.add_edge(v, parent);
      level_nodes[l].push_back(v);
    }
  }
  for (std::size_t i = n; i < capacity; ++i) b.remove(i);
  const bool partial = b.prune_dangling() || n < capacity;
  return b.finish("syk", {{"geometry", "ternary_tree"},
                          {"n_modes", n},
                          {"depth", h},
                          {"capacity", capacity},
                          {"partial", partial}});
}

// Ternary MERA tensor network. Every layer of m sites (m = 4 * 3^j) gets
// m/3 disentanglers D_i on sites (3i+2, 3i+3 mod m) and m/3 isometries W_i
// fed by (D_{i-1}, site 3i+1, D_i); W_i produces site i of the next layer.
// A single top vertex joins the last four sites. Disentanglers and
// isometries have degree 4: two down, two up and three down, one up.
SystemGraph gen_ternary_mera(std::size_t n) {
  std::size_t capacity = 4;
  std::size_t layers = 0;
  while (capacity < n) {
    capacity *= 3;
    ++layers;
  }
  GraphBuilder b;
  std::vector<std::size_t> sites;
  for (std::size_t i = 0; i < capacity; ++i) sites.push_back(b.add_vertex(VertexKind::kPhysical));
  while (sites.size() > 4) {
    const std::size_t m = sites.size();
    const std::size_t blocks = m / 3;
    std::vector<std::size_t> dis(blocks);
    for (std::size_t i = 0; i < blocks; ++i) {
      dis[i] = b.add_vertex(VertexKind::kVirtual);
      b.add_edge(dis[i], sites[3 * i + 2]);
      b.add_edge(dis[i], sites[(3 * i + 3) % m]);
    }
    std::vector<std::size_t> next(blocks);
    for (std::size_t i = 0; i < blocks; ++i) {
      next[i] = b.add_vertex(VertexKind::kVirtual);
      b.add_edge(next[i], dis[(i + blocks - 1) % blocks]);
      b.add_edge(next[i], sites[3 * i + 1]);
      b.add_edge(next[i], dis[i]);
    }
    sites = std::move(next);
  }
  const std::size_t top = b.add_vertex(VertexKind::kVirtual);
  for (std::size_t s : sites) b.add_edge(top, s);
  for (std::size_t i = n; i < capacity; ++i) b.remove(i);
  const bool partial = b.prune_dangling() || n < capacity;
  return b.finish("syk", {{"geometry", "ternary_mera"},
                          {"n_modes", n},
                          {"layers", layers},
                          {"capacity", capacity},
                          {"wiring_version", kMeraWiringVersion},
                          {"partial", partial}});
}

// {4,6} tiling grown ring by ring from a central square. A ring vertex v of
// current degree d receives k = 6 - d spokes; squares between consecutive
// spokes of v need one extra vertex, squares between the last spoke of v and
// the first spoke of the next ring vertex close directly.
SystemGraph gen_hyperbolic46(std::size_t n, std::optional<std::size_t> layers_opt) {
  constexpr std::size_t kDegree = 6;
  GraphBuilder b;
  std::vector<std::size_t> ring;
  for (int i = 0; i < 4; ++i) ring.push_back(b.add_vertex(VertexKind::kVirtual));
  for (std::size_t i = 0; i < 4; ++i) b.add_edge(ring[i], ring[(i + 1) % 4]);

  auto capacity = [&](const std::vector<std::size_t>& r) {
    std::size_t s = 0;
    for (std::size_t v : r) s += kDegree - b.degree(v);
    return s;
  };
  std::size_t layers = 0;
  while (layers_opt ? layers < *layers_opt : capacity(ring) < n) {
    std::vector<std::size_t> next;
    for (std::size_t v : ring) {
      const std::size_t k = kDegree - b.degree(v);
      for (std::size_t j = 0; j < k; ++j) {
        const std::size_t e = b.add_vertex(VertexKind::kVirtual);
        b.add_edge(v, e);
        next.push_back(e);
        if (j + 1 < k) next.push_back(b.add_vertex(VertexKind::kVirtual));
      }
    }
    for (std::size_t i = 0; i < next.size(); ++i) b.add_edge(next[i], next[(i + 1) % next.size()]);
    ring = std::move(next);
    ++layers;
  }
  const std::size_t slots_total = capacity(ring);
  if (slots_total < n) {
    throw InvalidArgument("hyperbolic tiling with " + std::to_string(layers) +
                          " layers holds at most " + std::to_string(slots_total) + " modes");
  }
  std::vector<std::size_t> slots;
  for (std::size_t v : ring) {
    for (std::size_t k = b.degree(v); k < kDegree; ++k) slots.push_back(v);
  }
  for (std::size_t t = 0; t < n; ++t) {
    const std::size_t leg = b.add_vertex(VertexKind::kPhysical);
    b.add_edge(slots[t * slots.size() / n], leg);
  }
  return b.finish("syk", {{"geometry", "hyperbolic46"},
                          {"n_modes", n},
                          {"layers", layers},
                          {"capacity", slots_total},
                          {"partial", slots_total != n}});
}

}  // namespace

SystemGraph gen_lattice(LatticeKind kind, std::vector<std::size_t> dims,
                        Boundary boundary) {
  nlohmann::json params = {{"boundary", boundary_name(boundary)}, {"dims", dims}};
  switch (kind) {
    case LatticeKind::kLinear: {
      if (dims.size() != 1 || dims[0] == 0) throw InvalidArgument("linear lattice needs {N}, N >= 1");
      const std::size_t n = dims[0];
      if (boundary == Boundary::kPeriodic && n < 2) throw InvalidArgument("periodic chain needs N >= 2");
      params["kind"] = "linear";
      std::vector<Vertex> vs(n);
      for (std::size_t j = 0; j < n; ++j) {
        vs[j].position = std::array<double, 2>{static_cast<double>(j), 0.0};
        if (j > 0) {
          vs[j].ports.push_back(j - 1);
        } else if (boundary == Boundary::kPeriodic) {
          vs[j].ports.push_back(n - 1);
        }
        if (j + 1 < n) {
          vs[j].ports.push_back(j + 1);
        } else if (boundary == Boundary::kPeriodic) {
          vs[j].ports.push_back(0);
        }
      }
      // The closing bond of a ring runs N -> 1 so that every bond is
      // oriented j -> j+1 around the ring.
      std::vector<std::pair<std::size_t, std::size_t>> wrap;
      if (boundary == Boundary::kPeriodic && n > 2) wrap.emplace_back(n - 1, 0);
      return SystemGraph(std::move(vs), "lattice", std::move(params), wrap);
    }
    case LatticeKind::kSquare: {
      auto [rows, cols] = grid_dims(dims);
      params["kind"] = "square";
      static constexpr std::pair<int, int> kDirs[] = {{-1, 0}, {0, 1}, {1, 0}, {0, -1}};
      return gen_grid(rows, cols, boundary, kDirs, "lattice", std::move(params), false);
    }
    case LatticeKind::kTriangular: {
      auto [rows, cols] = grid_dims(dims);
      params["kind"] = "triangular";
      static constexpr std::pair<int, int> kDirs[] = {{-1, 0}, {-1, 1}, {0, 1},
                                                      {1, 0},  {1, -1}, {0, -1}};
      return gen_grid(rows, cols, boundary, kDirs, "lattice", std::move(params), true);
    }
  }
  throw InvalidArgument("unknown lattice kind");
}

SykGeometry parse_syk_geometry(std::string_view name) {
  if (name == "complete") return SykGeometry::kComplete;
  if (name == "linear") return SykGeometry::kLinear;
  if (name == "star") return SykGeometry::kStar;
  if (name == "ternary_tree") return SykGeometry::kTernaryTree;
  if (name == "ternary_mera") return SykGeometry::kTernaryMera;
  if (name == "hyperbolic46") return SykGeometry::kHyperbolic46;
  throw InvalidArgument("unsupported geometry '" + std::string(name) + "'");
}

std::string_view syk_geometry_name(SykGeometry g) {
  switch (g) {
    case SykGeometry::kComplete:
      return "complete";
    case SykGeometry::kLinear:
      return "linear";
    case SykGeometry::kStar:
      return "star";
    case SykGeometry::kTernaryTree:
      return "ternary_tree";
    case SykGeometry::kTernaryMera:
      return "ternary_mera";
    case SykGeometry::kHyperbolic46:
      return "hyperbolic46";
  }
  return "unknown";
}

SystemGraph gen_syk_geometry(SykGeometry kind, std::size_t n, const GeometryOptions& options) {
  if (n < 2) throw InvalidArgument("geometry needs at least 2 modes");
  switch (kind) {
    case SykGeometry::kComplete: {
      std::vector<Vertex> vs(n);
      for (std::size_t j = 0; j < n; ++j) {
        for (std::size_t k = 0; k < n; ++k) {
          if (k != j) vs[j].ports.push_back(k);
        }
      }
      return SystemGraph(std::move(vs), "syk", {{"geometry", "complete"}, {"n_modes", n}});
    }
    case SykGeometry::kLinear: {
      auto g = gen_lattice(LatticeKind::kLinear, {n}, Boundary::kPeriodic);
      return SystemGraph(g.vertices(), "syk", {{"geometry", "linear"}, {"n_modes", n}},
                         g.reversed_edges());
    }
    case SykGeometry::kStar: {
      std::vector<Vertex> vs(n + 1);
      vs[n].kind = VertexKind::kVirtual;
      for (std::size_t j = 0; j < n; ++j) {
        vs[j].ports = {n};
        vs[n].ports.push_back(j);
      }
      return SystemGraph(std::move(vs), "syk", {{"geometry", "star"}, {"n_modes", n}});
    }
    case SykGeometry::kTernaryTree:
      return gen_ternary_tree(n);
    case SykGeometry::kTernaryMera:
      return gen_ternary_mera(n);
    case SykGeometry::kHyperbolic46:
      return gen_hyperbolic46(n, options.hyperbolic_layers);
  }
  throw InvalidArgument("unsupported geometry");
}

SystemGraph gen_blocked_square(std::size_t L, std::size_t block_rows, std::size_t block_cols) {
  if (L == 0 || block_rows == 0 || block_cols == 0) throw InvalidArgument("blocked lattice dims must be positive");
  if (L % block_rows != 0 || L % block_cols != 0) {
    throw InvalidArgument("block dims must divide L");
  }
  const std::size_t br = L / block_rows;
  const std::size_t bc = L / block_cols;
  auto mode = [L](std::size_t r, std::size_t c) { return r * L + c; };
  auto head = [&](std::size_t I, std::size_t J) { return mode(I * block_rows, J * block_cols); };

  std::vector<Vertex> vs(L * L);
  for (std::size_t r = 0; r < L; ++r) {
    for (std::size_t c = 0; c < L; ++c) {
      vs[mode(r, c)].position = std::array<double, 2>{static_cast<double>(c), -static_cast<double>(r)};
    }
  }
  for (std::size_t I = 0; I < br; ++I) {
    for (std::size_t J = 0; J < bc; ++J) {
      // Snake order inside the block keeps consecutive chain modes adjacent.
      std::vector<std::size_t> chain;
      for (std::size_t r = 0; r < block_rows; ++r) {
        for (std::size_t k = 0; k < block_cols; ++k) {
          const std::size_t c = r % 2 == 0 ? k : block_cols - 1 - k;
          chain.push_back(mode(I * block_rows + r, J * block_cols + c));
        }
      }
      auto& h = vs[chain.front()].ports;
      if (I > 0) h.push_back(head(I - 1, J));
      if (J + 1 < bc) h.push_back(head(I, J + 1));
      if (I + 1 < br) h.push_back(head(I + 1, J));
      if (J > 0) h.push_back(head(I, J - 1));
      for (std::size_t i = 0; i < chain.size(); ++i) {
        if (i > 0) vs[chain[i]].ports.push_back(chain[i - 1]);
        if (i + 1 < chain.size()) vs[chain[i]].ports.push_back(chain[i + 1]);
      }
    }
  }
  return SystemGraph(std::move(vs), "blocked_square",
                     {{"L", L}, {"block_rows", block_rows}, {"block_cols", block_cols},
                      {"blocks", br * bc}});
}

std::size_t blocked_square_qubit_formula(std::size_t L, std::size_t block_rows,
                                         std::size_t block_cols) {
  if (L == 0 || block_rows == 0 || block_cols == 0 || L % block_rows != 0 ||
      L % block_cols != 0) {
    throw InvalidArgument("block dims must divide L");
  }
  const std::size_t br = L / block_rows;
  const std::size_t bc = L / block_cols;
  const std::size_t b = br * bc;
  const std::size_t chain_link = block_rows * block_cols > 1 ? 1 : 0;

  // Heads of an open br x bc coarse lattice grouped by coarse degree.
  std::size_t count[5] = {0, 0, 0, 0, 0};
  if (br == 1 && bc == 1) {
    count[0] = 1;
  } else if (br == 1 || bc == 1) {
    const std::size_t len = br * bc;
    count[1] = 2;
    count[2] = len - 2;
  } else {
    count[2] = 4;
    count[3] = 2 * (br - 2) + 2 * (bc - 2);
    count[4] = (br - 2) * (bc - 2);
  }
  // Non-head modes sit on chains and hold one qubit each; a head holds
  // ceil((coarse degree + chain link) / 2).
  std::size_t heads = 0;
  for (std::size_t d = 0; d < 5; ++d) heads += count[d] * ((d + chain_link + 1) / 2);
  return L * L - b + heads;
}

HeavyHexLayout heavy_hex_layout() {
  HeavyHexLayout out;
  out.device_qubits = 65;
  auto chain = [&](std::size_t first, std::size_t last) {
    for (std::size_t q = first; q < last; ++q) out.device_edges.emplace_back(q, q + 1);
  };
  chain(0, 9);
  chain(13, 23);
  chain(27, 37);
  chain(41, 51);
  chain(55, 64);
  // Bridge qubits between rows: {row qubit above, bridge, row qubit below}.
  static constexpr std::size_t kBridges[][3] = {
      {0, 10, 13},  {4, 11, 17},  {8, 12, 21},  {15, 24, 29}, {19, 25, 33}, {23, 26, 37},
      {27, 38, 41}, {31, 39, 45}, {35, 40, 49}, {43, 52, 56}, {47, 53, 60}, {51, 54, 64}};
  for (const auto& br : kBridges) {
    out.device_edges.emplace_back(br[0], br[1]);
    out.device_edges.emplace_back(br[1], br[2]);
  }

  // Each degree-3 qubit takes a row neighbor of degree 2.
  static constexpr std::pair<std::size_t, std::size_t> kPairs[] = {
      {4, 5},   {7, 8},   {15, 16}, {17, 18}, {19, 20}, {21, 22}, {29, 30}, {31, 32},
      {33, 34}, {35, 36}, {43, 44}, {45, 46}, {47, 48}, {49, 50}, {56, 57}, {60, 61}};
  std::vector<std::size_t> group_of(out.device_qubits, kRemoved);
  for (const auto& [a, b] : kPairs) {
    const std::size_t gid = out.groups.size();
    out.groups.push_back({a, b});
    group_of[a] = group_of[b] = gid;
  }
  for (std::size_t q = 0; q < out.device_qubits; ++q) {
    if (group_of[q] == kRemoved) {
      group_of[q] = out.groups.size();
      out.groups.push_back({q});
    }
  }
  // Order vertices by their smallest device qubit.
  std::vector<std::size_t> order(out.groups.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](std::size_t l, std::size_t r) {
    return out.groups[l].front() < out.groups[r].front();
  });
  std::vector<std::size_t> rank(order.size());
  std::vector<std::vector<std::size_t>> groups(order.size());
  for (std::size_t i = 0; i < order.size(); ++i) {
    rank[order[i]] = i;
    groups[i] = out.groups[order[i]];
  }
  out.groups = std::move(groups);

  std::vector<Vertex> vs(out.groups.size());
  for (const auto& [a, b] : out.device_edges) {
    const std::size_t u = rank[group_of[a]];
    const std::size_t v = rank[group_of[b]];
    if (u == v) continue;
    vs[u].ports.push_back(v);
    vs[v].ports.push_back(u);
  }
  for (auto& v : vs) std::sort(v.ports.begin(), v.ports.end());
  nlohmann::json groups_json = nlohmann::json::array();
  for (const auto& g : out.groups) {
    nlohmann::json one = nlohmann::json::array();
    for (std::size_t q : g) one.push_back(q);
    groups_json.push_back(one);
  }
  out.graph = SystemGraph(std::move(vs), "heavy_hex",
                          {{"device_qubits", out.device_qubits}, {"groups", groups_json}});
  return out;
}

SystemGraph gen_heavy_hex() { return heavy_hex_layout().graph; }

}  // namespace fermicode
