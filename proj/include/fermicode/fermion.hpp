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
#include <cstdint>
#include <iosfwd>
#include <map>
#include <utility>
#include <vector>

#include "fermicode/encoder.hpp"
#include "fermicode/geometry.hpp"
#include "fermicode/graph.hpp"
#include "fermicode/pauli.hpp"

namespace fermicode {

/// One factor of a second-quantized product. For ladder factors `index` is
/// the mode; for Majorana factors it is the Majorana index, where mode j
/// owns 2j (the odd Majorana, a + a†) and 2j+1 (the even one, -i(a - a†)).
struct FermionFactor {
  enum class Kind { kCreate, kAnnihilate, kMajorana };
  Kind kind = Kind::kCreate;
  std::size_t index = 0;

  static FermionFactor create(std::size_t mode) { return {Kind::kCreate, mode}; }
  static FermionFactor annihilate(std::size_t mode) { return {Kind::kAnnihilate, mode}; }
  static FermionFactor majorana(std::size_t index) { return {Kind::kMajorana, index}; }

  friend bool operator==(const FermionFactor&, const FermionFactor&) = default;
};

struct FermionTerm {
  Complex coefficient;
  std::vector<FermionFactor> factors;

  friend bool operator==(const FermionTerm&, const FermionTerm&) = default;
};

struct FermionOperator {
  std::size_t n_modes = 0;
  std::vector<FermionTerm> terms;

  FermionOperator() = default;
  explicit FermionOperator(std::size_t n) : n_modes(n) {}

  void add(Complex c, std::vector<FermionFactor> factors);
  /// Every term has an even number of Majorana-counted factors.
  bool is_parity_preserving() const;

  friend bool operator==(const FermionOperator&, const FermionOperator&) = default;
};

/// c * γ_{i1} γ_{i2} ... with strictly increasing indices.
struct MajoranaMonomial {
  Complex coefficient;
  std::vector<std::size_t> indices;
};

/// c * A_{e1} A_{e2} ... B_{v1} B_{v2} ... in the stored order, with
/// A_jk = -i γ_{2j} γ_{2k} and B_j = -i γ_{2j} γ_{2j+1}. Edges are stored
/// as (j, k) with j < k; vertices are sorted and distinct.
struct EVTerm {
  Complex coefficient;
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  std::vector<std::size_t> vertices;
};

/// Substitutes Majoranas, expands and sorts each word, contracting squares.
/// Like monomials are merged; the result is ordered by index sequence.
std::vector<MajoranaMonomial> to_majorana_normal_form(const FermionOperator& f);

/// A quadratic monomial as edge and vertex operators.
EVTerm pair_to_ev(const MajoranaMonomial& m);
/// Pairs adjacent indices and multiplies the pair forms, moving A factors
/// ahead of B factors and cancelling repeats. Throws ParityError for odd
/// length.
EVTerm monomial_to_ev(const MajoranaMonomial& m);

/// Edge (j,k) for every A_jk required by the EV form of some term.
InteractionGraph interaction_graph_from_hamiltonian(const FermionOperator& f);

/// Vertex paths used for non-adjacent couplings; keys are (j, k) with j < k
/// and paths run from j to k. Pairs not listed are routed.
struct RoutingPolicy {
  std::map<std::pair<std::size_t, std::size_t>, std::vector<std::size_t>> explicit_paths;
};

/// Compiles f onto the encoding. Mode j is vertex j of the encoded graph.
PauliSum transform_hamiltonian(const FermionOperator& f, const Encoding& e,
                               const RoutingPolicy& policy = {});

/// H = -i sum_{a<b} J_ab γ_a γ_b. Only the upper triangle of the 2N x 2N
/// matrix J is read.
FermionOperator build_syk2(std::size_t n_modes, const std::vector<std::vector<double>>& J);
/// Couplings drawn from a standard normal with a 64-bit Mersenne twister.
FermionOperator build_syk2(std::size_t n_modes, std::uint64_t seed);

enum class LatticeModelKind { kChain, kSquareNN, kSquareNNDiag };

struct LatticeModelParams {
  LatticeModelKind kind = LatticeModelKind::kChain;
  /// {N} for the chain; {L} or {rows, cols} for square lattices.
  std::vector<std::size_t> dims;
  double t = 1.0;
  double t_prime = 0.0;
  double U = 0.0;
  Boundary boundary = Boundary::kOpen;
};

/// t * sum (a†_j a_k + h.c.) over bonds, t' over square diagonals, plus
/// U * sum n_j. Zero couplings produce no terms.
FermionOperator build_lattice_model(const LatticeModelParams& params);

/// Lines `(<re>,<im>) a+1 a-2 g3`; 1-based labels. A "# modes <n>" header is
/// written and, when absent on input, inferred.
void write_hamiltonian(std::ostream& os, const FermionOperator& f);
FermionOperator read_hamiltonian(std::istream& is);

}  // namespace fermicode
