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
#include <span>
#include <string>
#include <vector>

#include "fermicode/encoder.hpp"
#include "fermicode/fermion.hpp"
#include "fermicode/geometry.hpp"
#include "fermicode/local_basis.hpp"
#include "fermicode/pauli.hpp"

namespace fermicode {

/// Weight statistics over the non-identity terms of a Pauli sum.
struct WeightStats {
  std::size_t max_term_weight = 0;
  std::size_t total_weight = 0;
  double mean_weight = 0.0;
  std::size_t term_count = 0;
  std::size_t qubit_total = 0;

  friend bool operator==(const WeightStats&, const WeightStats&) = default;
};

WeightStats weight_stats(const PauliSum& h);

struct BenchRecord {
  std::string geometry;
  std::size_t n_modes = 0;
  std::size_t qubits = 0;
  WeightStats stats;
  double seconds = 0.0;

  friend bool operator==(const BenchRecord&, const BenchRecord&) = default;
};

struct SweepOptions {
  std::vector<SykGeometry> geometries;
  std::vector<std::size_t> n_list;
  std::uint64_t seed = 1;
  /// Points whose encoding needs more qubits throw ResourceError.
  std::size_t max_qubits = 100000;
  BasisKind basis = BasisKind::kFenwick;
  /// Worker threads; records come back in (geometry, n) input order either way.
  std::size_t jobs = 1;
  /// Record 0 seconds so that output is reproducible byte for byte.
  bool record_time = true;
};

/// Couplings for a point depend only on (seed, n), so every geometry sees
/// the same SYK instance at a given size.
std::uint64_t point_seed(std::uint64_t seed, std::size_t n_modes);

BenchRecord bench_point(SykGeometry geometry, std::size_t n_modes, const SweepOptions& options);
std::vector<BenchRecord> sweep_syk_geometries(const SweepOptions& options);

/// CSV with header geometry,n_modes,qubits,max_weight,total_weight,mean_weight,terms,seconds.
void write_bench_csv(std::ostream& os, std::span<const BenchRecord> records);
std::vector<BenchRecord> read_bench_csv(std::istream& is);

enum class BenchField { kQubits, kMaxWeight, kTotalWeight, kMeanWeight, kTerms };

struct SlopeFit {
  double slope = 0.0;
  double stderr_slope = 0.0;
  std::size_t points = 0;
};

/// Least-squares slope of log(y) against log(x). Needs at least 4 points.
SlopeFit loglog_slope(std::span<const double> x, std::span<const double> y);
/// Slope of one field against n_modes over the records of one geometry.
SlopeFit loglog_slope(std::span<const BenchRecord> records, const std::string& geometry,
                      BenchField field);

struct OracleReport {
  bool passed = false;
  std::size_t n_qubits = 0;
  std::size_t codespace_dim = 0;
  /// Codespace dimension with encoded parity +1 and -1.
  std::size_t even_dim = 0;
  std::size_t odd_dim = 0;
  double max_deviation = 0.0;
  AlgebraReport algebra;
  std::vector<std::string> failures;
};

/// Dense comparison of the compiled Hamiltonian on the codespace with the
/// exact fermionic Hamiltonian. The codespace is the joint +1 eigenspace of
/// the cycle stabilizers and the virtual vertex operators. It is split by
/// the encoded parity (product of physical vertex operators), and each part
/// must reproduce the spectrum of the matching fermionic parity sector,
/// repeated dim / 2^{N-1} times.
OracleReport dense_oracle_check(const FermionOperator& f, const Encoding& e,
                                double tol = 1e-9, std::size_t max_qubits = 12);

}  // namespace fermicode
