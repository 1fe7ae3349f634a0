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


#include "fermicode/local_basis.hpp"

#include <algorithm>
#include <string>

#include "fermicode/errors.hpp"

namespace fermicode {

namespace {

std::size_t checked_qubits(std::size_t degree) {
  if (degree == 0) throw InvalidArgument("local basis needs degree >= 1");
  return basis_qubits(degree);
}

MajoranaBasis jw_pattern(std::size_t degree, char first, char second) {
  const std::size_t n = checked_qubits(degree);
  MajoranaBasis b{n, {}};
  for (std::size_t m = 0; m < n; ++m) {
    PauliString zs(n);
    for (std::size_t q = 0; q < m; ++q) zs.set_letter(q, 'Z');
    PauliString a = zs;
    a.set_letter(m, first);
    PauliString c = zs;
    c.set_letter(m, second);
    b.ops.push_back(a);
    b.ops.push_back(c);
  }
  return b;
}

std::size_t lowbit(std::size_t j) { return j & (~j + 1); }

}  // namespace

BasisKind parse_basis_kind(std::string_view name) {
  if (name == "jw") return BasisKind::kJordanWigner;
  if (name == "jw-yx") return BasisKind::kJordanWignerYX;
  if (name == "fenwick") return BasisKind::kFenwick;
  if (name == "ternary") return BasisKind::kTernaryTree;
  throw InvalidArgument("unknown basis '" + std::string(name) + "'");
}

std::string_view basis_kind_name(BasisKind kind) {
  switch (kind) {
    case BasisKind::kJordanWigner:
      return "jw";
    case BasisKind::kJordanWignerYX:
      return "jw-yx";
    case BasisKind::kFenwick:
      return "fenwick";
    case BasisKind::kTernaryTree:
      return "ternary";
  }
  return "unknown";
}

std::size_t MajoranaBasis::max_weight() const {
  std::size_t w = 0;
  for (const auto& op : ops) w = std::max(w, op.weight());
  return w;
}

MajoranaBasis basis_jw(std::size_t degree) { return jw_pattern(degree, 'X', 'Y'); }

MajoranaBasis basis_jw_yx(std::size_t degree) { return jw_pattern(degree, 'Y', 'X'); }

MajoranaBasis basis_fenwick(std::size_t degree) {
  const std::size_t n = checked_qubits(degree);
  MajoranaBasis b{n, {}};
  // Tree nodes are 1..n; qubit j-1 stores the parity of modes (j - lowbit(j), j].
  for (std::size_t j = 1; j <= n; ++j) {
    PauliString even(n);
    PauliString odd(n);
    for (std::size_t u = j + lowbit(j); u <= n; u += lowbit(u)) {
      even.set_letter(u - 1, 'X');
      odd.set_letter(u - 1, 'X');
    }
    even.set_letter(j - 1, 'X');
    odd.set_letter(j - 1, 'Y');
    // Parity set: nodes covering modes 1..j-1. Children of j (the flip set)
    // are the ones inside (j - lowbit(j), j); they are left off the odd op.
    const std::size_t child_floor = j - lowbit(j);
    for (std::size_t k = j - 1; k > 0; k -= lowbit(k)) {
      even.set_letter(k - 1, 'Z');
      if (k <= child_floor) odd.set_letter(k - 1, 'Z');
    }
    b.ops.push_back(even);
    b.ops.push_back(odd);
  }
  return b;
}

MajoranaBasis basis_ternary_tree(std::size_t degree) {
  const std::size_t n = checked_qubits(degree);
  MajoranaBasis b{n, {}};
  // Qubit i has children 3i+1, 3i+2, 3i+3 on its X, Y, Z legs.
  PauliString path(n);
  auto visit = [&](auto&& self, std::size_t node) -> void {
    static constexpr char kLegs[] = {'X', 'Y', 'Z'};
    for (std::size_t leg = 0; leg < 3; ++leg) {
      path.set_letter(node, kLegs[leg]);
      const std::size_t child = 3 * node + 1 + leg;
      if (child < n) {
        self(self, child);
      } else {
        b.ops.push_back(path);
      }
    }
    path.set_letter(node, 'I');
  };
  visit(visit, 0);
  // The last leaf reached is the all-Z path.
  b.ops.pop_back();
  return b;
}

MajoranaBasis make_basis(BasisKind kind, std::size_t degree) {
  switch (kind) {
    case BasisKind::kJordanWigner:
      return basis_jw(degree);
    case BasisKind::kJordanWignerYX:
      return basis_jw_yx(degree);
    case BasisKind::kFenwick:
      return basis_fenwick(degree);
    case BasisKind::kTernaryTree:
      return basis_ternary_tree(degree);
  }
  throw InvalidArgument("unknown basis kind");
}

BasisReport basis_verify(const MajoranaBasis& basis) {
  BasisReport r;
  const std::size_t n = basis.n_qubits;
  if (basis.ops.size() != 2 * n) {
    r.violations.push_back("expected " + std::to_string(2 * n) + " ops, got " +
                           std::to_string(basis.ops.size()));
  }
  for (std::size_t i = 0; i < basis.ops.size(); ++i) {
    const auto& op = basis.ops[i];
    const std::string tag = "op " + std::to_string(i + 1);
    if (op.n_qubits() != n) {
      r.violations.push_back(tag + ": acts on " + std::to_string(op.n_qubits()) + " qubits");
      continue;
    }
    if (!op.is_hermitian()) r.violations.push_back(tag + ": not Hermitian");
    if ((op * op).phase_exp() != 0) r.violations.push_back(tag + ": does not square to +I");
  }
  for (std::size_t i = 0; i < basis.ops.size(); ++i) {
    for (std::size_t j = i + 1; j < basis.ops.size(); ++j) {
      if (basis.ops[i].n_qubits() != n || basis.ops[j].n_qubits() != n) continue;
      if (basis.ops[i].commutes_with(basis.ops[j])) {
        r.violations.push_back("ops " + std::to_string(i + 1) + "," + std::to_string(j + 1) +
                               ": commute");
      }
    }
  }
  std::vector<PauliString> same;
  for (const auto& op : basis.ops) {
    if (op.n_qubits() == n) same.push_back(op);
  }
  const std::size_t rank = symplectic_rank(same);
  if (rank != 2 * n) {
    r.violations.push_back("symplectic rank " + std::to_string(rank) + " < " +
                           std::to_string(2 * n));
  }
  return r;
}

}  // namespace fermicode
