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
#include <string>
#include <string_view>
#include <vector>

#include "fermicode/pauli.hpp"

namespace fermicode {

enum class BasisKind {
  kJordanWigner,    // X, Y on each qubit behind a Z string
  kJordanWignerYX,  // same with Y first, as on the 1D chain
  kFenwick,
  kTernaryTree,
};

BasisKind parse_basis_kind(std::string_view name);
std::string_view basis_kind_name(BasisKind kind);

/// Local Majoranas of one vertex: 2 * n_qubits anticommuting Hermitian
/// Paulis. Port p is assigned ops[p]; for odd degree the last op is the
/// unpaired one.
struct MajoranaBasis {
  std::size_t n_qubits = 0;
  std::vector<PauliString> ops;

  std::size_t max_weight() const;
};

/// ceil(d/2).
inline std::size_t basis_qubits(std::size_t degree) { return (degree + 1) / 2; }

MajoranaBasis basis_jw(std::size_t degree);
MajoranaBasis basis_jw_yx(std::size_t degree);
/// Bravyi-Kitaev sets on a 1-based Fenwick tree.
MajoranaBasis basis_fenwick(std::size_t degree);
/// Leaves of a complete ternary tree of qubits, legs in (X, Y, Z) depth-first
/// order, with the all-Z leg dropped.
MajoranaBasis basis_ternary_tree(std::size_t degree);
MajoranaBasis make_basis(BasisKind kind, std::size_t degree);

struct BasisReport {
  std::vector<std::string> violations;
  bool ok() const { return violations.empty(); }
};

BasisReport basis_verify(const MajoranaBasis& basis);

}  // namespace fermicode
