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


// Dense reference matrices built from scratch, for checking the symbolic code.

#pragma once

#include <Eigen/Dense>
#include <complex>
#include <cstddef>
#include <random>
#include <vector>

#include "fermicode/fermion.hpp"
#include "fermicode/pauli.hpp"

namespace fermicode::oracle {

using Mat = Eigen::MatrixXcd;
using C = std::complex<double>;

inline Mat single(char letter) {
  Mat m = Mat::Zero(2, 2);
  switch (letter) {
    case 'I':
      m << 1, 0, 0, 1;
      break;
    case 'X':
      m << 0, 1, 1, 0;
      break;
    case 'Y':
      m << 0, C(0, -1), C(0, 1), 0;
      break;
    case 'Z':
      m << 1, 0, 0, -1;
      break;
  }
  return m;
}

inline Mat kron(const Mat& a, const Mat& b) {
  Mat r(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      r.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  }
  return r;
}

inline C i_pow(unsigned k) {
  static const C table[4] = {C(1, 0), C(0, 1), C(-1, 0), C(0, -1)};
  return table[k % 4];
}

/// Qubit 0 is the leftmost tensor factor.
inline Mat pauli(const PauliString& p) {
  Mat m = Mat::Identity(1, 1);
  for (std::size_t q = 0; q < p.n_qubits(); ++q) m = kron(m, single(p.letter(q)));
  return i_pow(p.letter_phase()) * m;
}

inline Mat pauli_sum(const PauliSum& s) {
  const auto dim = Eigen::Index(1) << s.n_qubits();
  Mat m = Mat::Zero(dim, dim);
  for (const auto& [p, c] : s.terms()) m += c * pauli(p);
  return m;
}

/// Annihilator of mode j on n modes; |1> is occupied and modes below j carry Z.
inline Mat annihilator(std::size_t n, std::size_t j) {
  Mat lower = Mat::Zero(2, 2);
  lower(0, 1) = 1;
  Mat m = Mat::Identity(1, 1);
  for (std::size_t q = 0; q < n; ++q) {
    m = kron(m, q < j ? single('Z') : q == j ? lower : single('I'));
  }
  return m;
}

/// gamma_{2j} = a + a^dag, gamma_{2j+1} = -i(a - a^dag).
inline Mat majorana(std::size_t n, std::size_t index) {
  const Mat a = annihilator(n, index / 2);
  const Mat ad = a.adjoint();
  if (index % 2 == 0) return a + ad;
  return C(0, -1) * (a - ad);
}

inline Mat factor(std::size_t n, const FermionFactor& f) {
  switch (f.kind) {
    case FermionFactor::Kind::kCreate:
      return annihilator(n, f.index).adjoint();
    case FermionFactor::Kind::kAnnihilate:
      return annihilator(n, f.index);
    default:
      return majorana(n, f.index);
  }
}

inline Mat fermion(const FermionOperator& f, std::size_t n) {
  const auto dim = Eigen::Index(1) << n;
  Mat m = Mat::Zero(dim, dim);
  for (const auto& t : f.terms) {
    Mat term = Mat::Identity(dim, dim);
    for (const auto& fa : t.factors) term = term * factor(n, fa);
    m += t.coefficient * term;
  }
  return m;
}

inline Mat monomials(const std::vector<MajoranaMonomial>& ms, std::size_t n) {
  const auto dim = Eigen::Index(1) << n;
  Mat m = Mat::Zero(dim, dim);
  for (const auto& mono : ms) {
    Mat term = Mat::Identity(dim, dim);
    for (auto i : mono.indices) term = term * majorana(n, i);
    m += mono.coefficient * term;
  }
  return m;
}

/// A_jk = -i gamma_{2j} gamma_{2k}, B_j = -i gamma_{2j} gamma_{2j+1}.
inline Mat ev(const EVTerm& t, std::size_t n) {
  const auto dim = Eigen::Index(1) << n;
  Mat m = t.coefficient * Mat::Identity(dim, dim);
  for (auto [j, k] : t.edges) m = m * (C(0, -1) * majorana(n, 2 * j) * majorana(n, 2 * k));
  for (auto v : t.vertices) m = m * (C(0, -1) * majorana(n, 2 * v) * majorana(n, 2 * v + 1));
  return m;
}

inline PauliString random_pauli(std::mt19937_64& rng, std::size_t n) {
  static const char letters[] = "IXYZ";
  std::string s;
  for (std::size_t q = 0; q < n; ++q) s += letters[rng() % 4];
  PauliString p = PauliString::from_letters(s);
  p.mul_phase(static_cast<unsigned>(rng() % 4));
  return p;
}

inline double distance(const Mat& a, const Mat& b) { return (a - b).cwiseAbs().maxCoeff(); }

}  // namespace fermicode::oracle
