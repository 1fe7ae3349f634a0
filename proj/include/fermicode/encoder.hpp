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

#include <cstddef>
#include <iosfwd>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "fermicode/graph.hpp"
#include "fermicode/local_basis.hpp"
#include "fermicode/pauli.hpp"

namespace fermicode {

/// Which local basis each vertex uses. Explicit bases win over per-vertex
/// kinds, which win over the default.
struct BasisChoice {
  BasisKind default_kind = BasisKind::kJordanWigner;
  std::map<std::size_t, BasisKind> per_vertex;
  std::map<std::size_t, MajoranaBasis> explicit_bases;
};

struct QubitRange {
  std::size_t offset = 0;
  std::size_t count = 0;
};

/// Qubit encoding of a system graph.
///
/// Vertex v owns ceil(d(v)/2) consecutive qubits, in vertex order. Edge e
/// stores Ã_{tail,head} = c_tail^{p} c_head^{q} where p, q are the ports e
/// occupies; with the default orientation tail < head.
/// Vertex operators are the Hermitian product of all local Majoranas, signed
/// so that the letter form has coefficient +1 (all-Z under jw). One
/// stabilizer per fundamental cycle.
class Encoding {
 public:
  Encoding() = default;
  Encoding(SystemGraph graph, const BasisChoice& choice);

  const SystemGraph& graph() const { return graph_; }
  std::size_t n_qubits() const { return n_qubits_; }
  const QubitRange& layout(std::size_t v) const { return layout_.at(v); }
  const MajoranaBasis& basis(std::size_t v) const { return bases_.at(v); }
  /// "jw", "fenwick", ... or "explicit".
  const std::string& basis_name(std::size_t v) const { return basis_names_.at(v); }

  /// Local Majorana number `index` of vertex v on the global register.
  PauliString local_majorana(std::size_t v, std::size_t index) const;

  /// Ã for edge e from edge(e).a to edge(e).b (negated for reversed edges).
  const PauliString& edge_op(std::size_t e) const { return edge_ops_.at(e); }
  /// Ã for edge e traversed starting at vertex `from`.
  PauliString directed_edge_op(std::size_t e, std::size_t from) const;
  const PauliString& vertex_op(std::size_t v) const;

  const std::vector<Cycle>& cycles() const { return cycles_; }
  const std::vector<PauliString>& stabilizers() const { return stabilizers_; }

  /// Default interior-vertex cost for routing: the largest weight of a
  /// product of two local Majoranas at that vertex.
  const std::vector<std::size_t>& routing_costs() const { return routing_costs_; }

 private:
  SystemGraph graph_;
  std::size_t n_qubits_ = 0;
  std::vector<QubitRange> layout_;
  std::vector<MajoranaBasis> bases_;
  std::vector<std::string> basis_names_;
  std::vector<PauliString> edge_ops_;
  std::vector<PauliString> vertex_ops_;
  std::vector<Cycle> cycles_;
  std::vector<PauliString> stabilizers_;
  std::vector<std::size_t> routing_costs_;
};

Encoding build_encoding(SystemGraph graph, const BasisChoice& choice = {});

/// Ã_jk on the lowest-index edge joining j and k; Ã_kj = -Ã_jk. Throws
/// RouteError when j and k are not adjacent.
PauliString edge_operator(const Encoding& e, std::size_t j, std::size_t k);
/// B̃_j. Throws DimensionError for a vertex without qubits.
PauliString vertex_operator(const Encoding& e, std::size_t j);

/// Product of directed edge operators along the vertex path.
PauliString path_product_raw(const Encoding& e, std::span<const std::size_t> path);
/// i^{n-1} times the raw product over an n-edge path; the encoded A_jk.
/// Without a path the cheapest route under the default costs is used.
PauliString path_edge_operator(const Encoding& e, std::size_t j, std::size_t k,
                               std::optional<std::span<const std::size_t>> path = {});

/// i^L times the product of directed edge operators around a closed walk.
/// Equal to +1 on the codespace.
PauliString loop_stabilizer(const Encoding& e, const Cycle& cycle);

/// The extra local Majorana of an odd-degree vertex. Throws InvalidArgument
/// for even degree.
PauliString unpaired_majorana(const Encoding& e, std::size_t j);

/// Greedy weight reduction by multiplication with stabilizer generators.
/// Each step takes the generator giving the smallest (weight, support)
/// result and stops when nothing is strictly smaller.
PauliString reduce_mod_stabilizers(const Encoding& e, const PauliString& p);

/// Group generated by commuting Pauli operators, kept in echelon form.
class StabilizerGroup {
 public:
  explicit StabilizerGroup(std::span<const PauliString> generators);

  std::size_t rank() const { return rows_.size(); }
  /// Some k such that i^k * p is a group element, if any.
  std::optional<unsigned> phase_to_member(const PauliString& p) const;
  bool contains(const PauliString& p) const;

 private:
  PauliString reduce(PauliString p) const;

  std::vector<PauliString> rows_;
  std::vector<std::size_t> pivots_;  // column: q for x, n + q for z
};

/// Group generated by the cycle stabilizers and, for every virtual vertex,
/// its vertex operator.
StabilizerGroup codespace_group(const Encoding& e);

/// True when a and b act identically on the codespace, i.e. a * b is a
/// group element (a, b Hermitian Paulis commuting with the group).
bool equal_on_codespace(const StabilizerGroup& group, const PauliString& a,
                        const PauliString& b);

struct AlgebraReport {
  std::size_t checks = 0;
  std::vector<std::string> violations;
  bool ok() const { return violations.empty(); }
};

/// Hermiticity, squares, the edge/vertex commutation rules, stabilizer
/// centrality and edge antisymmetry.
AlgebraReport check_algebra(const Encoding& e);

/// `.enc` JSON document.
void write_encoding(std::ostream& os, const Encoding& e);
Encoding read_encoding(std::istream& is);

}  // namespace fermicode
