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


#include "fermicode/analytics.hpp"

#include <algorithm>
#include <bit>
#include <chrono>
#include <cmath>
#include <future>
#include <optional>
#include <istream>
#include <ostream>
#include <sstream>
#include <unordered_map>

#include <Eigen/Dense>

#include "fermicode/errors.hpp"

namespace fermicode {

WeightStats weight_stats(const PauliSum& h) {
  WeightStats s;
  s.qubit_total = h.n_qubits();
  for (const auto& [p, c] : h.terms()) {
    const std::size_t w = p.weight();
    if (w == 0) continue;
    s.max_term_weight = std::max(s.max_term_weight, w);
    s.total_weight += w;
    ++s.term_count;
  }
  if (s.term_count > 0) {
    s.mean_weight = static_cast<double>(s.total_weight) / static_cast<double>(s.term_count);
  }
  return s;
}

std::uint64_t point_seed(std::uint64_t seed, std::size_t n_modes) {
  // splitmix64 finalizer over the pair.
  std::uint64_t z = seed + 0x9E3779B97F4A7C15ull * (static_cast<std::uint64_t>(n_modes) + 1);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

BenchRecord bench_point(SykGeometry geometry, std::size_t n_modes, const SweepOptions& options) {
  const auto start = std::chrono::steady_clock::now();
  SystemGraph g = gen_syk_geometry(geometry, n_modes);
  const std::size_t qubits = qubit_count(g);
  if (qubits > options.max_qubits) {
    throw ResourceError(std::string(syk_geometry_name(geometry)) + " with " +
                        std::to_string(n_modes) + " modes needs " + std::to_string(qubits) +
                        " qubits, above the cap of " + std::to_string(options.max_qubits));
  }
  BasisChoice choice;
  choice.default_kind = options.basis;
  Encoding e(std::move(g), choice);
  const PauliSum h =
      transform_hamiltonian(build_syk2(n_modes, point_seed(options.seed, n_modes)), e);
  BenchRecord r;
  r.geometry = std::string(syk_geometry_name(geometry));
  r.n_modes = n_modes;
  r.qubits = e.n_qubits();
  r.stats = weight_stats(h);
  if (options.record_time) {
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  }
  return r;
}

std::vector<BenchRecord> sweep_syk_geometries(const SweepOptions& options) {
  std::vector<std::pair<SykGeometry, std::size_t>> points;
  for (auto g : options.geometries) {
    for (auto n : options.n_list) points.emplace_back(g, n);
  }
  std::vector<BenchRecord> out(points.size());
  const std::size_t jobs = std::max<std::size_t>(1, options.jobs);
  for (std::size_t begin = 0; begin < points.size(); begin += jobs) {
    const std::size_t end = std::min(points.size(), begin + jobs);
    std::vector<std::future<BenchRecord>> running;
    for (std::size_t i = begin; i < end; ++i) {
      running.push_back(std::async(jobs > 1 ? std::launch::async : std::launch::deferred,
                                   [&options, pt = points[i]] {
                                     return bench_point(pt.first, pt.second, options);
                                   }));
    }
    for (std::size_t i = begin; i < end; ++i) out[i] = running[i - begin].get();
  }
  return out;
}

namespace {

constexpr const char* kCsvHeader =
    "geometry,n_modes,qubits,max_weight,total_weight,mean_weight,terms,seconds";

}  // namespace

void write_bench_csv(std::ostream& os, std::span<const BenchRecord> records) {
  os << kCsvHeader << '\n';
  for (const auto& r : records) {
    os << r.geometry << ',' << r.n_modes << ',' << r.qubits << ',' << r.stats.max_term_weight
       << ',' << r.stats.total_weight << ',' << format_double(r.stats.mean_weight) << ','
       << r.stats.term_count << ',' << format_double(r.seconds) << '\n';
  }
}

std::vector<BenchRecord> read_bench_csv(std::istream& is) {
  std::string line;
  if (!std::getline(is, line) || line != kCsvHeader) throw ParseError("missing CSV header");
  std::vector<BenchRecord> out;
  while (std::getline(is, line)) {
    if (line.empty()) continue;
    std::vector<std::string> cells;
    std::stringstream ss(line);
    std::string cell;
    while (std::getline(ss, cell, ',')) cells.push_back(cell);
    if (cells.size() != 8) throw ParseError("CSV row needs 8 fields: '" + line + "'");
    try {
      BenchRecord r;
      r.geometry = cells[0];
      r.n_modes = std::stoul(cells[1]);
      r.qubits = std::stoul(cells[2]);
      r.stats.max_term_weight = std::stoul(cells[3]);
      r.stats.total_weight = std::stoul(cells[4]);
      r.stats.mean_weight = std::stod(cells[5]);
      r.stats.term_count = std::stoul(cells[6]);
      r.stats.qubit_total = r.qubits;
      r.seconds = std::stod(cells[7]);
      out.push_back(r);
    } catch (const std::logic_error&) {
      throw ParseError("bad CSV row '" + line + "'");
    }
  }
  return out;
}

SlopeFit loglog_slope(std::span<const double> x, std::span<const double> y) {
  if (x.size() != y.size()) throw DimensionError("slope needs matching x and y");
  if (x.size() < 4) throw InvalidArgument("slope needs at least 4 points");
  const double n = static_cast<double>(x.size());
  double mx = 0;
  double my = 0;
  std::vector<double> lx;
  std::vector<double> ly;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i] <= 0 || y[i] <= 0) throw InvalidArgument("log-log fit needs positive data");
    lx.push_back(std::log(x[i]));
    ly.push_back(std::log(y[i]));
    mx += lx.back();
    my += ly.back();
  }
  mx /= n;
  my /= n;
  double sxx = 0;
  double sxy = 0;
  for (std::size_t i = 0; i < lx.size(); ++i) {
    sxx += (lx[i] - mx) * (lx[i] - mx);
    sxy += (lx[i] - mx) * (ly[i] - my);
  }
  if (sxx == 0) throw InvalidArgument("log-log fit needs distinct x values");
  SlopeFit fit;
  fit.slope = sxy / sxx;
  fit.points = lx.size();
  double rss = 0;
  for (std::size_t i = 0; i < lx.size(); ++i) {
    const double r = ly[i] - my - fit.slope * (lx[i] - mx);
    rss += r * r;
  }
  fit.stderr_slope = std::sqrt(rss / (n - 2) / sxx);
  return fit;
}

SlopeFit loglog_slope(std::span<const BenchRecord> records, const std::string& geometry,
                      BenchField field) {
  std::vector<double> x;
  std::vector<double> y;
  for (const auto& r : records) {
    if (r.geometry != geometry) continue;
    x.push_back(static_cast<double>(r.n_modes));
    switch (field) {
      case BenchField::kQubits:
        y.push_back(static_cast<double>(r.qubits));
        break;
      case BenchField::kMaxWeight:
        y.push_back(static_cast<double>(r.stats.max_term_weight));
        break;
      case BenchField::kTotalWeight:
        y.push_back(static_cast<double>(r.stats.total_weight));
        break;
      case BenchField::kMeanWeight:
        y.push_back(r.stats.mean_weight);
        break;
      case BenchField::kTerms:
        y.push_back(static_cast<double>(r.stats.term_count));
        break;
    }
  }
  return loglog_slope(x, y);
}

namespace {

using Eigen::MatrixXcd;
using Eigen::VectorXd;

// Sparse state: basis index -> amplitude.
using Sparse = std::unordered_map<std::uint64_t, Complex>;

Complex i_power(unsigned k) {
  static const Complex kTable[] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
  return kTable[k & 3u];
}

// p|b> = i^phase (-1)^{z.b} |b xor x>
std::pair<std::uint64_t, Complex> apply_pauli(const PauliString& p, std::uint64_t b) {
  const std::uint64_t x = p.x_mask();
  const std::uint64_t z = p.z_mask();
  Complex amp = i_power(p.phase_exp());
  if (std::popcount(z & b) % 2) amp = -amp;
  return {b ^ x, amp};
}

// Codespace basis: one normalized vector per stabilizer orbit with nonzero
// projection. Orbits are disjoint, so every index has at most one owner.
struct Codespace {
  std::vector<Sparse> vectors;
  std::unordered_map<std::uint64_t, std::size_t> owner;
};

Codespace build_codespace(std::span<const PauliString> generators, std::size_t n_qubits) {
  // Independent generators only.
  std::vector<PauliString> gens;
  for (const auto& g : generators) {
    std::vector<PauliString> trial = gens;
    trial.push_back(g);
    if (symplectic_rank(trial) > gens.size()) gens.push_back(g);
  }
  std::vector<PauliString> group;
  group.push_back(PauliString(n_qubits));
  for (const auto& g : gens) {
    const std::size_t size = group.size();
    for (std::size_t i = 0; i < size; ++i) group.push_back(group[i] * g);
  }
  Codespace cs;
  const std::uint64_t dim = std::uint64_t{1} << n_qubits;
  std::vector<bool> visited(dim, false);
  const double norm_factor = 1.0 / static_cast<double>(group.size());
  for (std::uint64_t b = 0; b < dim; ++b) {
    if (visited[b]) continue;
    Sparse v;
    for (const auto& g : group) {
      auto [t, amp] = apply_pauli(g, b);
      visited[t] = true;
      v[t] += amp * norm_factor;
    }
    double norm = 0;
    for (auto it = v.begin(); it != v.end();) {
      if (std::abs(it->second) < 1e-12) {
        it = v.erase(it);
      } else {
        norm += std::norm(it->second);
        ++it;
      }
    }
    if (v.empty()) continue;
    const double s = 1.0 / std::sqrt(norm);
    for (auto& [t, amp] : v) {
      amp *= s;
      cs.owner[t] = cs.vectors.size();
    }
    cs.vectors.push_back(std::move(v));
  }
  return cs;
}

// Matrix of a Pauli sum in the codespace basis.
MatrixXcd restrict_sum(const Codespace& cs, const std::vector<std::pair<Complex, PauliString>>& terms) {
  const std::size_t d = cs.vectors.size();
  MatrixXcd m = MatrixXcd::Zero(static_cast<Eigen::Index>(d), static_cast<Eigen::Index>(d));
  for (std::size_t beta = 0; beta < d; ++beta) {
    Sparse w;
    for (const auto& [b, amp] : cs.vectors[beta]) {
      for (const auto& [c, p] : terms) {
        auto [t, a] = apply_pauli(p, b);
        w[t] += c * a * amp;
      }
    }
    for (const auto& [t, amp] : w) {
      auto it = cs.owner.find(t);
      if (it == cs.owner.end()) continue;
      const Complex bra = std::conj(cs.vectors[it->second].at(t));
      m(static_cast<Eigen::Index>(it->second), static_cast<Eigen::Index>(beta)) += bra * amp;
    }
  }
  return m;
}

// Even and odd parity blocks of an exact parity-preserving fermionic
// operator. Bit j of an occupation state is mode j and a_j carries the sign
// (-1)^{number of occupied modes below j}. States are ordered by index
// within each block.
std::pair<MatrixXcd, MatrixXcd> fermion_blocks(const FermionOperator& f) {
  const std::size_t n = f.n_modes;
  const std::uint64_t dim = std::uint64_t{1} << n;
  const auto half = static_cast<Eigen::Index>(dim / 2);
  std::pair<MatrixXcd, MatrixXcd> blocks{MatrixXcd::Zero(half, half), MatrixXcd::Zero(half, half)};
  // Index of a state within its block: drop the lowest bit, which is fixed
  // by the parity of the others.
  auto slot = [](std::uint64_t s) { return static_cast<Eigen::Index>(s >> 1); };
  auto ladder = [](bool create, std::size_t j, std::uint64_t& s, Complex& amp) {
    const std::uint64_t bit = std::uint64_t{1} << j;
    if (create == static_cast<bool>(s & bit)) {
      amp = 0;
      return;
    }
    if (std::popcount(s & (bit - 1)) % 2) amp = -amp;
    s ^= bit;
  };
  for (std::uint64_t col = 0; col < dim; ++col) {
    for (const auto& term : f.terms) {
      // A Majorana factor is a sum of two ladder actions; expand as a
      // small list of branches.
      std::vector<std::pair<std::uint64_t, Complex>> branches{{col, term.coefficient}};
      for (auto it = term.factors.rbegin(); it != term.factors.rend(); ++it) {
        std::vector<std::pair<std::uint64_t, Complex>> next;
        for (auto [s, amp] : branches) {
          auto push = [&](bool create, std::size_t j, Complex w) {
            std::uint64_t t = s;
            Complex a = amp * w;
            ladder(create, j, t, a);
            if (a != Complex{0, 0}) next.emplace_back(t, a);
          };
          switch (it->kind) {
            case FermionFactor::Kind::kCreate:
              push(true, it->index, 1.0);
              break;
            case FermionFactor::Kind::kAnnihilate:
              push(false, it->index, 1.0);
              break;
            case FermionFactor::Kind::kMajorana: {
              const std::size_t j = it->index / 2;
              if (it->index % 2 == 0) {  // a + a†
                push(false, j, 1.0);
                push(true, j, 1.0);
              } else {  // -i a + i a†
                push(false, j, Complex{0, -1});
                push(true, j, Complex{0, 1});
              }
              break;
            }
          }
        }
        branches = std::move(next);
      }
      const bool odd = std::popcount(col) % 2;
      MatrixXcd& m = odd ? blocks.second : blocks.first;
      for (const auto& [row, amp] : branches) m(slot(row), slot(col)) += amp;
    }
  }
  return blocks;
}

std::vector<double> spectrum(const MatrixXcd& m) {
  if (m.rows() == 0) return {};
  Eigen::SelfAdjointEigenSolver<MatrixXcd> solver(m, Eigen::EigenvaluesOnly);
  const VectorXd& ev = solver.eigenvalues();
  return {ev.data(), ev.data() + ev.size()};
}

}  // namespace

OracleReport dense_oracle_check(const FermionOperator& f, const Encoding& e, double tol,
                                std::size_t max_qubits) {
  OracleReport rep;
  rep.n_qubits = e.n_qubits();
  if (e.n_qubits() > max_qubits || e.n_qubits() > 30) {
    throw ResourceError("dense check needs " + std::to_string(e.n_qubits()) +
                        " qubits, above the cap of " + std::to_string(max_qubits));
  }
  const auto& g = e.graph();
  const std::size_t n_modes = g.physical_count();
  if (f.n_modes > n_modes) throw DimensionError("Hamiltonian has more modes than the graph");
  if (n_modes == 0 || n_modes > 20) throw ResourceError("dense check supports 1..20 modes");
  for (std::size_t v = 0; v < n_modes; ++v) {
    if (g.degree(v) == 0) {
      throw DimensionError("mode " + std::to_string(v + 1) + " has no qubits");
    }
  }

  rep.algebra = check_algebra(e);
  for (const auto& v : rep.algebra.violations) rep.failures.push_back("algebra: " + v);

  FermionOperator full = f;
  full.n_modes = n_modes;
  const PauliSum h = transform_hamiltonian(full, e);
  std::vector<std::pair<Complex, PauliString>> h_terms;
  for (const auto& [p, c] : h.terms()) h_terms.emplace_back(c, p);

  std::vector<PauliString> gens = e.stabilizers();
  for (std::size_t v = n_modes; v < g.vertex_count(); ++v) {
    if (g.degree(v) > 0) gens.push_back(e.vertex_op(v));
  }
  PauliString parity(e.n_qubits());
  for (std::size_t v = 0; v < n_modes; ++v) parity *= e.vertex_op(v);
  for (const auto& [c, p] : h_terms) {
    if (!pauli_commutes(p, parity)) {
      rep.failures.push_back("compiled Hamiltonian does not conserve encoded parity");
      break;
    }
  }

  // Each parity sector of the codespace is itself a stabilizer code: add
  // +P or -P as a generator. When P is already in the group up to sign,
  // the whole codespace sits in one sector.
  const std::vector<PauliString> base(gens.begin(), gens.end());
  const StabilizerGroup group(base);
  std::optional<Codespace> even_cs;
  std::optional<Codespace> odd_cs;
  if (auto k = group.phase_to_member(parity)) {
    if (*k % 2 != 0) {
      rep.failures.push_back("encoded parity is not Hermitian on the codespace");
    } else {
      (*k == 0 ? even_cs : odd_cs) = build_codespace(gens, e.n_qubits());
    }
  } else {
    gens.push_back(parity);
    even_cs = build_codespace(gens, e.n_qubits());
    gens.back() = PauliString(parity).mul_phase(2);
    odd_cs = build_codespace(gens, e.n_qubits());
  }
  rep.even_dim = even_cs ? even_cs->vectors.size() : 0;
  rep.odd_dim = odd_cs ? odd_cs->vectors.size() : 0;
  rep.codespace_dim = rep.even_dim + rep.odd_dim;

  const auto [h_even, h_odd] = fermion_blocks(full);

  auto compare = [&](const std::optional<Codespace>& cs, const MatrixXcd& physical,
                     const std::string& name) {
    if (!cs || cs->vectors.empty()) return;
    const std::size_t dim_code = cs->vectors.size();
    const auto sector = static_cast<std::size_t>(physical.rows());
    if (dim_code % sector != 0) {
      rep.failures.push_back(name + " codespace dimension " + std::to_string(dim_code) +
                             " is not a multiple of " + std::to_string(sector));
      return;
    }
    const std::size_t mult = dim_code / sector;
    const MatrixXcd restricted = restrict_sum(*cs, h_terms);
    if ((restricted - restricted.adjoint()).cwiseAbs().maxCoeff() > tol) {
      rep.failures.push_back("compiled Hamiltonian is not Hermitian on the " + name + " codespace");
    }
    std::vector<double> enc = spectrum(restricted);
    std::vector<double> phys;
    for (double ev : spectrum(physical)) {
      for (std::size_t i = 0; i < mult; ++i) phys.push_back(ev);
    }
    std::sort(enc.begin(), enc.end());
    std::sort(phys.begin(), phys.end());
    double dev = 0;
    for (std::size_t i = 0; i < enc.size(); ++i) dev = std::max(dev, std::abs(enc[i] - phys[i]));
    rep.max_deviation = std::max(rep.max_deviation, dev);
    if (dev > tol) {
      std::ostringstream os;
      os << name << " sector spectrum deviates by " << dev;
      rep.failures.push_back(os.str());
    }
  };
  compare(even_cs, h_even, "even");
  compare(odd_cs, h_odd, "odd");
  if (rep.codespace_dim == 0) rep.failures.push_back("empty codespace");
  rep.passed = rep.failures.empty();
  return rep;
}

}  // namespace fermicode
