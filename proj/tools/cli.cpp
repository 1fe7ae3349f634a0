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


#include "cli.hpp"

#include <algorithm>
#include <fstream>
#include <memory>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "fermicode/analytics.hpp"
#include "fermicode/encoder.hpp"
#include "fermicode/errors.hpp"
#include "fermicode/fermion.hpp"
#include "fermicode/geometry.hpp"
#include "fermicode/graph.hpp"

namespace fermicode {

namespace {

constexpr std::size_t kSymbolicQubitCap = 10000;
constexpr std::size_t kDenseQubitCap = 12;

int exit_code(ErrorCategory c) {
  switch (c) {
    case ErrorCategory::kParse:
      return 2;
    case ErrorCategory::kRoute:
      return 3;
    case ErrorCategory::kParity:
      return 4;
    case ErrorCategory::kResource:
      return 5;
    case ErrorCategory::kVerifyFail:
      return 6;
    default:
      return 1;
  }
}

std::ifstream open_in(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "'");
  return in;
}

// Writes to `path`, or to `out` when the path is empty or "-".
template <typename Fn>
void emit(const std::string& path, std::ostream& out, Fn&& write) {
  if (path.empty() || path == "-") {
    write(out);
    return;
  }
  std::ofstream f(path);
  if (!f) throw InvalidArgument("cannot write '" + path + "'");
  write(f);
}

SystemGraph load_graph(const std::string& path) {
  auto in = open_in(path);
  return read_graph(in);
}

Boundary parse_boundary(const std::string& s) {
  if (s == "open") return Boundary::kOpen;
  if (s == "periodic") return Boundary::kPeriodic;
  throw InvalidArgument("boundary must be open or periodic");
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, sep)) {
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

RoutingPolicy load_route(const std::string& route) {
  RoutingPolicy policy;
  if (route == "auto") return policy;
  const std::string prefix = "explicit:";
  if (route.rfind(prefix, 0) != 0) throw ParseError("--route must be auto or explicit:<file>");
  auto in = open_in(route.substr(prefix.size()));
  std::string line;
  while (std::getline(in, line)) {
    std::istringstream ls(line);
    std::vector<std::size_t> path;
    std::string tok;
    while (ls >> tok) {
      if (tok.front() == '#') break;
      try {
        const auto id = std::stoul(tok);
        if (id == 0) throw ParseError("path vertex ids are 1-based");
        path.push_back(id - 1);
      } catch (const std::logic_error&) {
        throw ParseError("bad path vertex '" + tok + "'");
      }
    }
    if (path.empty()) continue;
    if (path.size() < 2) throw ParseError("path needs two or more vertices");
    if (path.front() > path.back()) std::reverse(path.begin(), path.end());
    policy.explicit_paths[{path.front(), path.back()}] = path;
  }
  return policy;
}

struct GenArgs {
  std::string kind;
  std::vector<std::size_t> dims;
  std::string boundary = "open";
  std::size_t n = 0;
  std::size_t layers = 0;
  std::size_t L = 0;
  std::string block = "1x1";
  std::string hamiltonian;
  std::string out;
};

void run_gen(const GenArgs& a, std::ostream& out) {
  SystemGraph g;
  if (a.kind == "linear" || a.kind == "chain") {
    g = gen_lattice(LatticeKind::kLinear, a.dims, parse_boundary(a.boundary));
  } else if (a.kind == "square") {
    g = gen_lattice(LatticeKind::kSquare, a.dims, parse_boundary(a.boundary));
  } else if (a.kind == "triangular") {
    g = gen_lattice(LatticeKind::kTriangular, a.dims, parse_boundary(a.boundary));
  } else if (a.kind == "blocked_square") {
    auto parts = split(a.block, 'x');
    if (parts.size() != 2) throw ParseError("--block must look like 2x2");
    g = gen_blocked_square(a.L, std::stoul(parts[0]), std::stoul(parts[1]));
  } else if (a.kind == "heavy_hex") {
    g = gen_heavy_hex();
  } else if (a.kind == "interaction") {
    auto in = open_in(a.hamiltonian);
    g = interaction_graph_from_hamiltonian(read_hamiltonian(in)).to_system_graph();
  } else {
    GeometryOptions opts;
    if (a.layers > 0) opts.hyperbolic_layers = a.layers;
    g = gen_syk_geometry(parse_syk_geometry(a.kind), a.n, opts);
  }
  emit(a.out, out, [&](std::ostream& os) { write_graph(os, g); });
}

struct EncodeArgs {
  std::string graph;
  std::string basis = "jw";
  std::size_t max_qubits = kSymbolicQubitCap;
  std::string out;
};

Encoding encode_graph(const std::string& graph, const std::string& basis, std::size_t cap) {
  SystemGraph g = load_graph(graph);
  if (qubit_count(g) > cap) {
    throw ResourceError("encoding needs " + std::to_string(qubit_count(g)) +
                        " qubits, above the cap of " + std::to_string(cap));
  }
  BasisChoice choice;
  choice.default_kind = parse_basis_kind(basis);
  return Encoding(std::move(g), choice);
}

std::size_t vertex_op_count(const Encoding& e) {
  std::size_t n = 0;
  for (std::size_t v = 0; v < e.graph().vertex_count(); ++v) n += e.graph().degree(v) > 0;
  return n;
}

void run_encode(const EncodeArgs& a, std::ostream& out) {
  const Encoding e = encode_graph(a.graph, a.basis, a.max_qubits);
  if (!a.out.empty() && a.out != "-") {
    emit(a.out, out, [&](std::ostream& os) { write_encoding(os, e); });
    out << "qubits " << e.n_qubits() << ", edge ops " << e.graph().edge_count()
        << ", vertex ops " << vertex_op_count(e) << ", stabilizers " << e.stabilizers().size()
        << '\n';
  } else {
    write_encoding(out, e);
  }
}

struct TransformArgs {
  std::string graph;
  std::string enc;
  std::string hamiltonian;
  bool syk = false;
  std::uint64_t seed = 1;
  std::string basis = "jw";
  std::string route = "auto";
  std::size_t max_qubits = kSymbolicQubitCap;
  std::string out;
};

Encoding encoding_from(const std::string& graph, const std::string& enc, const std::string& basis,
                       std::size_t cap) {
  if (!enc.empty()) {
    auto in = open_in(enc);
    Encoding e = read_encoding(in);
    if (e.n_qubits() > cap) throw ResourceError("encoding exceeds the qubit cap");
    return e;
  }
  if (graph.empty()) throw InvalidArgument("need --graph or --enc");
  return encode_graph(graph, basis, cap);
}

FermionOperator hamiltonian_from(const std::string& path, bool syk, std::uint64_t seed,
                                 std::size_t n_modes) {
  if (!path.empty()) {
    auto in = open_in(path);
    return read_hamiltonian(in);
  }
  if (syk) return build_syk2(n_modes, seed);
  throw InvalidArgument("need --hamiltonian or --syk");
}

void run_transform(const TransformArgs& a, std::ostream& out) {
  const Encoding e = encoding_from(a.graph, a.enc, a.basis, a.max_qubits);
  const FermionOperator f = hamiltonian_from(a.hamiltonian, a.syk, a.seed, e.graph().physical_count());
  const PauliSum h = transform_hamiltonian(f, e, load_route(a.route));
  emit(a.out, out, [&](std::ostream& os) { write_pauli_sum(os, h); });
}

struct BenchArgs {
  std::string geometries;
  std::vector<std::size_t> n;
  std::uint64_t seed = 1;
  std::size_t max_qubits = kSymbolicQubitCap;
  std::string basis = "fenwick";
  std::size_t jobs = 1;
  bool no_timing = false;
  std::string out;
};

void run_bench(const BenchArgs& a, std::ostream& out) {
  SweepOptions o;
  for (const auto& g : split(a.geometries, ',')) o.geometries.push_back(parse_syk_geometry(g));
  o.n_list = a.n;
  o.seed = a.seed;
  o.max_qubits = a.max_qubits;
  o.basis = parse_basis_kind(a.basis);
  o.jobs = a.jobs;
  o.record_time = !a.no_timing;
  const auto records = sweep_syk_geometries(o);
  emit(a.out, out, [&](std::ostream& os) { write_bench_csv(os, records); });
  if (!a.out.empty() && a.out != "-") out << "wrote " << records.size() << " records\n";
}

struct VerifyArgs {
  std::string graph;
  std::string basis = "jw";
  bool dense = false;
  std::string hamiltonian;
  std::uint64_t seed = 1;
  std::size_t max_qubits = kDenseQubitCap;
  double tol = 1e-9;
};

void run_verify(const VerifyArgs& a, std::ostream& out) {
  const Encoding e = encode_graph(a.graph, a.basis, a.dense ? a.max_qubits : kSymbolicQubitCap);
  const AlgebraReport alg = check_algebra(e);
  out << "algebra: " << (alg.ok() ? "ok" : "FAIL") << " (" << alg.checks << " checks)\n";
  for (const auto& v : alg.violations) out << "  " << v << '\n';
  bool ok = alg.ok();
  if (a.dense) {
    const FermionOperator f =
        hamiltonian_from(a.hamiltonian, a.hamiltonian.empty(), a.seed, e.graph().physical_count());
    const OracleReport r = dense_oracle_check(f, e, a.tol, a.max_qubits);
    out << "dense: " << (r.passed ? "pass" : "FAIL") << " (qubits " << r.n_qubits
        << ", codespace " << r.codespace_dim << ", even " << r.even_dim << ", odd " << r.odd_dim
        << ", max deviation " << format_double(r.max_deviation) << ")\n";
    for (const auto& f2 : r.failures) out << "  " << f2 << '\n';
    ok = ok && r.passed;
  }
  if (!ok) throw VerifyError("verification failed");
  out << "pass\n";
}

struct StatsArgs {
  std::string pauli;
  std::string csv;
  std::string field = "total_weight";
};

BenchField parse_field(const std::string& s) {
  if (s == "qubits") return BenchField::kQubits;
  if (s == "max_weight") return BenchField::kMaxWeight;
  if (s == "total_weight") return BenchField::kTotalWeight;
  if (s == "mean_weight") return BenchField::kMeanWeight;
  if (s == "terms") return BenchField::kTerms;
  throw InvalidArgument("unknown field '" + s + "'");
}

void run_stats(const StatsArgs& a, std::ostream& out) {
  if (!a.pauli.empty()) {
    auto in = open_in(a.pauli);
    const WeightStats s = weight_stats(read_pauli_sum(in));
    out << "qubits " << s.qubit_total << "\nterms " << s.term_count << "\nmax_weight "
        << s.max_term_weight << "\ntotal_weight " << s.total_weight << "\nmean_weight "
        << format_double(s.mean_weight) << '\n';
    return;
  }
  if (a.csv.empty()) throw InvalidArgument("need --pauli or --csv");
  auto in = open_in(a.csv);
  const auto records = read_bench_csv(in);
  std::vector<std::string> names;
  for (const auto& r : records) {
    if (std::find(names.begin(), names.end(), r.geometry) == names.end()) names.push_back(r.geometry);
  }
  const BenchField field = parse_field(a.field);
  for (const auto& name : names) {
    const auto fit = loglog_slope(records, name, field);
    out << name << ' ' << a.field << " slope " << format_double(fit.slope) << " +- "
        << format_double(fit.stderr_slope) << " (" << fit.points << " points)\n";
  }
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"fermicode: compile fermionic Hamiltonians to qubits on a system graph"};
  app.require_subcommand(1);

  GenArgs gen;
  auto* g = app.add_subcommand("gen", "Generate a system graph");
  g->add_option("--kind", gen.kind,
                "linear|square|triangular|complete|star|ternary_tree|ternary_mera|"
                "hyperbolic46|blocked_square|heavy_hex|interaction")
      ->required();
  g->add_option("--dims", gen.dims, "Lattice dims, comma separated")->delimiter(',');
  g->add_option("--boundary", gen.boundary, "open|periodic");
  g->add_option("--n", gen.n, "Number of modes");
  g->add_option("--layers", gen.layers, "Hyperbolic layers (0 = automatic)");
  g->add_option("--L", gen.L, "Side of the blocked lattice");
  g->add_option("--block", gen.block, "Block dims such as 2x2");
  g->add_option("--hamiltonian", gen.hamiltonian, "Hamiltonian for --kind interaction");
  g->add_option("--out", gen.out, "Output .graph file");

  EncodeArgs enc;
  auto* e = app.add_subcommand("encode", "Encode a system graph");
  e->add_option("--graph", enc.graph)->required();
  e->add_option("--basis", enc.basis, "jw|jw-yx|fenwick|ternary");
  e->add_option("--max-qubits", enc.max_qubits)->check(CLI::PositiveNumber);
  e->add_option("--out", enc.out, "Output .enc file");

  TransformArgs tr;
  auto* t = app.add_subcommand("transform", "Compile a Hamiltonian to a Pauli sum");
  t->add_option("--graph", tr.graph);
  t->add_option("--enc", tr.enc, "Encoding file instead of --graph");
  t->add_option("--hamiltonian", tr.hamiltonian);
  t->add_flag("--syk", tr.syk, "Seeded SYK q=2 on the physical modes");
  t->add_option("--seed", tr.seed);
  t->add_option("--basis", tr.basis, "jw|jw-yx|fenwick|ternary");
  t->add_option("--route", tr.route, "auto|explicit:<path-file>");
  t->add_option("--max-qubits", tr.max_qubits)->check(CLI::PositiveNumber);
  t->add_option("--out", tr.out, "Output .pauli file");

  BenchArgs be;
  auto* b = app.add_subcommand("bench", "SYK q=2 resource sweep");
  b->add_option("--geometries", be.geometries, "Comma separated geometries")->required();
  b->add_option("--n", be.n, "Mode counts, comma separated")->delimiter(',')->required();
  b->add_option("--seed", be.seed);
  b->add_option("--max-qubits", be.max_qubits)->check(CLI::PositiveNumber);
  b->add_option("--basis", be.basis, "jw|jw-yx|fenwick|ternary");
  b->add_option("--jobs", be.jobs)->check(CLI::PositiveNumber);
  b->add_flag("--no-timing", be.no_timing, "Write 0 in the seconds column");
  b->add_option("--out", be.out, "Output .csv file");

  VerifyArgs ve;
  auto* v = app.add_subcommand("verify", "Check the encoding algebra and, with --dense, spectra");
  v->add_option("--graph", ve.graph)->required();
  v->add_option("--basis", ve.basis, "jw|jw-yx|fenwick|ternary");
  v->add_flag("--dense", ve.dense, "Dense spectrum comparison");
  v->add_option("--hamiltonian", ve.hamiltonian, "Default: seeded SYK q=2");
  v->add_option("--seed", ve.seed);
  v->add_option("--max-qubits", ve.max_qubits)->check(CLI::PositiveNumber);
  v->add_option("--tol", ve.tol);

  StatsArgs st;
  auto* s = app.add_subcommand("stats", "Weight statistics of a .pauli file or slopes of a sweep");
  s->add_option("--pauli", st.pauli);
  s->add_option("--csv", st.csv);
  s->add_option("--field", st.field, "qubits|max_weight|total_weight|mean_weight|terms");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& ex) {
    return app.exit(ex, out, err);
  } catch (const CLI::CallForAllHelp& ex) {
    return app.exit(ex, out, err);
  } catch (const CLI::ParseError& ex) {
    err << "error[parse]: " << ex.what() << '\n';
    return 2;
  }

  try {
    if (g->parsed()) run_gen(gen, out);
    if (e->parsed()) run_encode(enc, out);
    if (t->parsed()) run_transform(tr, out);
    if (b->parsed()) run_bench(be, out);
    if (v->parsed()) run_verify(ve, out);
    if (s->parsed()) run_stats(st, out);
  } catch (const Error& ex) {
    err << "error[" << category_name(ex.category()) << "]: " << ex.what() << '\n';
    return exit_code(ex.category());
  } catch (const std::exception& ex) {
    err << "error[internal]: " << ex.what() << '\n';
    return 1;
  }
  return 0;
}

}  // namespace fermicode
