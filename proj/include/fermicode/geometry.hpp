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

#include <optional>
#include <string_view>
#include <utility>
#include <vector>

#include "fermicode/graph.hpp"

namespace fermicode {

enum class LatticeKind { kLinear, kSquare, kTriangular };
enum class Boundary { kOpen, kPeriodic };

/// Lattice of physical modes with geometric port order: clockwise, starting
/// from the neighbor at the top. A chain vertex lists (left, right).
///
/// dims: {N} for linear; {L} or {rows, cols} for square and triangular. Mode
/// index is row-major.
SystemGraph gen_lattice(LatticeKind kind, std::vector<std::size_t> dims,
                        Boundary boundary);

enum class SykGeometry {
  kComplete,
  kLinear,
  kStar,
  kTernaryTree,
  kTernaryMera,
  kHyperbolic46,
};

SykGeometry parse_syk_geometry(std::string_view name);
std::string_view syk_geometry_name(SykGeometry g);

struct GeometryOptions {
  /// Number of rings grown around the central face; chosen automatically
  /// when empty.
  std::optional<std::size_t> hyperbolic_layers;
};

/// Geometries for all-to-all coupled modes. Hierarchical kinds place the
/// physical modes on leaves or boundary legs; when n_modes does not fill the
/// hierarchy the unused leaves and any virtual vertices left dangling are
/// pruned and params["partial"] is set.
SystemGraph gen_syk_geometry(SykGeometry kind, std::size_t n_modes,
                             const GeometryOptions& options = {});

/// Version of the ternary MERA wiring emitted by gen_syk_geometry.
inline constexpr int kMeraWiringVersion = 1;

/// L x L square lattice partitioned into (block_rows x block_cols) blocks.
/// Block heads (top-left modes) form an open coarse lattice; the remaining
/// modes of each block hang off the head as a snake-ordered chain.
SystemGraph gen_blocked_square(std::size_t L, std::size_t block_rows,
                               std::size_t block_cols);

/// Closed form for the qubits of gen_blocked_square: L^2 + 2b minus one
/// qubit for every head whose coarse degree plus chain link is below 5.
std::size_t blocked_square_qubit_formula(std::size_t L, std::size_t block_rows,
                                         std::size_t block_cols);

struct HeavyHexLayout {
  SystemGraph graph;
  /// Device qubits (0-based) grouped into each system vertex.
  std::vector<std::vector<std::size_t>> groups;
  std::size_t device_qubits = 0;
  std::vector<std::pair<std::size_t, std::size_t>> device_edges;
};

/// The 65-qubit heavy-hexagon device with each degree-3 qubit grouped with a
/// row neighbor, giving 49 modes.
HeavyHexLayout heavy_hex_layout();
SystemGraph gen_heavy_hex();

}  // namespace fermicode
