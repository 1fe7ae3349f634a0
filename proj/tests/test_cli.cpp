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


#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <unistd.h>

#include "cli.hpp"
#include "doctest.h"
#include "fermicode/analytics.hpp"
#include "fermicode/encoder.hpp"
#include "fermicode/graph.hpp"

namespace fs = std::filesystem;
using namespace fermicode;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  args.insert(args.begin(), "fermicode");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void spit(const fs::path& p, const std::string& text) { std::ofstream(p) << text; }

class TempDir {
 public:
  TempDir() {
    path_ = fs::temp_directory_path() / ("fermicode_cli_" + std::to_string(::getpid()) + "_" + std::to_string(counter_++));
    fs::create_directories(path_);
  }
  ~TempDir() { fs::remove_all(path_); }
  std::string operator/(const std::string& name) const { return (path_ / name).string(); }

 private:
  fs::path path_;
  static inline int counter_ = 0;
};

}  // namespace

TEST_CASE("encode a ring") {
  TempDir dir;
  REQUIRE(run({"gen", "--kind", "linear", "--dims", "4", "--boundary", "periodic", "--out",
               dir / "chain4.graph"}).code == 0);
  const Result r = run({"encode", "--graph", dir / "chain4.graph", "--basis", "jw", "--out",
                        dir / "enc.enc"});
  CHECK(r.code == 0);
  CHECK(r.out == "qubits 4, edge ops 4, vertex ops 4, stabilizers 1\n");
  std::ifstream in(dir / "enc.enc");
  const Encoding e = read_encoding(in);
  CHECK(e.n_qubits() == 4);
  CHECK(e.stabilizers().size() == 1);
}

TEST_CASE("bench writes one row per point") {
  TempDir dir;
  const Result r = run({"bench", "--geometries", "linear,star", "--n", "8,16,32", "--seed", "1",
                        "--out", dir / "r.csv"});
  CHECK(r.code == 0);
  std::ifstream in(dir / "r.csv");
  const auto records = read_bench_csv(in);
  CHECK(records.size() == 6);

  const Result a = run({"bench", "--geometries", "star", "--n", "4,6", "--no-timing"});
  const Result b = run({"bench", "--geometries", "star", "--n", "4,6", "--no-timing", "--jobs", "2"});
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
}

TEST_CASE("verify a triangle") {
  TempDir dir;
  REQUIRE(run({"gen", "--kind", "complete", "--n", "3", "--out", dir / "triangle.graph"}).code == 0);
  const Result r = run({"verify", "--graph", dir / "triangle.graph", "--basis", "jw", "--dense"});
  CHECK(r.code == 0);
  CHECK(r.out.find("dense: pass") != std::string::npos);
  CHECK(r.out.find("algebra: ok") != std::string::npos);

  const Result impossible =
      run({"verify", "--graph", dir / "triangle.graph", "--dense", "--tol", "-1"});
  CHECK(impossible.code == 6);
  CHECK(impossible.err.find("error[verify-fail]") == 0);
}

TEST_CASE("transform with automatic and explicit routes") {
  TempDir dir;
  REQUIRE(run({"gen", "--kind", "square", "--dims", "3", "--out", dir / "sq.graph"}).code == 0);
  spit(dir / "diag.ham", "# modes 9\n(1,0) a+1 a-5\n(1,0) a+5 a-1\n");
  const Result automatic = run({"transform", "--graph", dir / "sq.graph", "--hamiltonian",
                                dir / "diag.ham", "--out", dir / "auto.pauli"});
  CHECK(automatic.code == 0);
  spit(dir / "paths.txt", "# through the lower-left neighbor\n5 4 1\n");
  const Result forced =
      run({"transform", "--graph", dir / "sq.graph", "--hamiltonian", dir / "diag.ham", "--route",
           "explicit:" + (dir / "paths.txt"), "--out", dir / "forced.pauli"});
  CHECK(forced.code == 0);
  CHECK(slurp(dir / "auto.pauli") != slurp(dir / "forced.pauli"));

  const Result s = run({"stats", "--pauli", dir / "auto.pauli"});
  CHECK(s.code == 0);
  CHECK(s.out.find("terms 2\n") != std::string::npos);

  REQUIRE(run({"encode", "--graph", dir / "sq.graph", "--out", dir / "sq.enc"}).code == 0);
  const Result from_enc = run({"transform", "--enc", dir / "sq.enc", "--hamiltonian", dir / "diag.ham"});
  CHECK(from_enc.code == 0);
  CHECK(from_enc.out == slurp(dir / "auto.pauli"));
}

TEST_CASE("outputs are byte-identical and re-parse") {
  TempDir dir;
  const std::vector<std::vector<std::string>> gens = {
      {"gen", "--kind", "triangular", "--dims", "3,4"},
      {"gen", "--kind", "ternary_mera", "--n", "12"},
      {"gen", "--kind", "hyperbolic46", "--n", "20"},
      {"gen", "--kind", "blocked_square", "--L", "4", "--block", "2x2"},
      {"gen", "--kind", "heavy_hex"},
  };
  for (const auto& g : gens) {
    const Result a = run(g);
    const Result b = run(g);
    REQUIRE(a.code == 0);
    CHECK(a.out == b.out);
    std::istringstream in(a.out);
    const SystemGraph graph = read_graph(in);
    std::ostringstream again;
    write_graph(again, graph);
    CHECK(again.str() == a.out);
  }

  REQUIRE(run({"gen", "--kind", "star", "--n", "5", "--out", dir / "star.graph"}).code == 0);
  const Result t1 = run({"transform", "--graph", dir / "star.graph", "--syk", "--seed", "7",
                         "--basis", "fenwick"});
  const Result t2 = run({"transform", "--graph", dir / "star.graph", "--syk", "--seed", "7",
                         "--basis", "fenwick"});
  CHECK(t1.code == 0);
  CHECK(t1.out == t2.out);
  std::istringstream pin(t1.out);
  const PauliSum sum = read_pauli_sum(pin);
  std::ostringstream pout;
  write_pauli_sum(pout, sum);
  CHECK(pout.str() == t1.out);

  spit(dir / "ring.ham", "(1,0) a+1 a-2\n(1,0) a+2 a-1\n(1,0) a+2 a-3\n(1,0) a+3 a-2\n");
  const Result interaction = run({"gen", "--kind", "interaction", "--hamiltonian", dir / "ring.ham"});
  CHECK(interaction.code == 0);
  std::istringstream iin(interaction.out);
  CHECK(read_graph(iin).edge_count() == 2);
}

TEST_CASE("stats fits slopes from a sweep") {
  TempDir dir;
  REQUIRE(run({"bench", "--geometries", "star,linear", "--n", "8,12,16,24", "--no-timing", "--out",
               dir / "s.csv"}).code == 0);
  const Result r = run({"stats", "--csv", dir / "s.csv", "--field", "terms"});
  CHECK(r.code == 0);
  CHECK(r.out.find("star terms slope") == 0);
  CHECK(r.out.find("linear terms slope") != std::string::npos);
}

TEST_CASE("errors map to categories and exit codes") {
  TempDir dir;
  CHECK(run({}).code == 2);
  CHECK(run({"encode"}).code == 2);
  CHECK(run({"gen", "--kind", "linear", "--dims", "x"}).code == 2);
  const Result help = run({"--help"});
  CHECK(help.code == 0);
  CHECK(help.out.find("verify") != std::string::npos);

  const Result missing = run({"encode", "--graph", dir / "none.graph"});
  CHECK(missing.code == 2);
  CHECK(missing.err.find("error[parse]") == 0);

  spit(dir / "bad.graph", "{\"vertices\": 3}");
  CHECK(run({"encode", "--graph", dir / "bad.graph"}).code == 2);

  spit(dir / "two.graph", R"({"vertices":[{"id":1,"kind":"physical","ports":[2]},{"id":2,"kind":"physical","ports":[1]},{"id":3,"kind":"physical","ports":[4]},{"id":4,"kind":"physical","ports":[3]}],"edges":[[1,2],[3,4]],"meta":{"generator":"","params":{}}})");
  spit(dir / "far.ham", "(1,0) a+1 a-3\n(1,0) a+3 a-1\n");
  const Result route = run({"transform", "--graph", dir / "two.graph", "--hamiltonian", dir / "far.ham"});
  CHECK(route.code == 3);
  CHECK(route.err.find("error[route]") == 0);

  spit(dir / "odd.ham", "(1,0) a+1\n");
  const Result parity = run({"transform", "--graph", dir / "two.graph", "--hamiltonian", dir / "odd.ham"});
  CHECK(parity.code == 4);
  CHECK(parity.err.find("error[parity]") == 0);

  REQUIRE(run({"gen", "--kind", "square", "--dims", "4", "--boundary", "periodic", "--out",
               dir / "big.graph"}).code == 0);
  const Result resource = run({"verify", "--graph", dir / "big.graph", "--dense"});
  CHECK(resource.code == 5);
  CHECK(resource.err.find("error[resource]") == 0);
  CHECK(run({"encode", "--graph", dir / "big.graph", "--max-qubits", "10"}).code == 5);
  CHECK(run({"bench", "--geometries", "complete", "--n", "30", "--max-qubits", "26"}).code == 5);

  spit(dir / "paths.txt", "1 x\n");
  CHECK(run({"transform", "--graph", dir / "two.graph", "--hamiltonian", dir / "far.ham", "--route",
             "explicit:" + (dir / "paths.txt")}).code == 2);
  CHECK(run({"transform", "--graph", dir / "two.graph", "--hamiltonian", dir / "far.ham", "--route",
             "shortest"}).code == 2);
  CHECK(run({"gen", "--kind", "blocked_square", "--L", "4", "--block", "3x3"}).code == 1);
}
