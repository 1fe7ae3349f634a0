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


#include "fermicode/encoder.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <sstream>

#include "fermicode/errors.hpp"
#include "json.hpp"

namespace fermicode {

namespace {

// Hermitian product i^n * c_1 ... c_{2n}, signed to letter coefficient +1.
PauliString parity_operator(const MajoranaBasis& b) {
  PauliString p(b.n_qubits);
  for (const auto& op : b.ops) p *= op;
  p.mul_phase(static_cast<unsigned>(b.n_qubits % 4));
  if (p.letter_phase() == 2) p.mul_phase(2);
  return p;
}

std::size_t max_pair_weight(const MajoranaBasis& b, std::size_t degree) {
  std::size_t w = 0;
  for (std::size_t p = 0; p < degree; ++p) {
    for (std::size_t q = p + 1; q < degree; ++q) w = std::max(w, (b.ops[p] * b.ops[q]).weight());
  }
  return w;
}

}  // namespace

Encoding::Encoding(SystemGraph graph, const BasisChoice& choice) : graph_(std::move(graph)) {
  const std::size_t nv = graph_.vertex_count();
  layout_.resize(nv);
  bases_.resize(nv);
  basis_names_.resize(nv);
  for (std::size_t v = 0; v < nv; ++v) {
    const std::size_t d = graph_.degree(v);
    layout_[v] = {n_qubits_, basis_qubits(d)};
    n_qubits_ += basis_qubits(d);
    if (d == 0) {
      basis_names_[v] = "none";
      continue;
    }
    if (auto it = choice.explicit_bases.find(v); it != choice.explicit_bases.end()) {
      const auto& b = it->second;
      if (b.n_qubits != basis_qubits(d)) {
        throw InvalidArgument("explicit basis for vertex " + std::to_string(v + 1) + " needs " +
                              std::to_string(basis_qubits(d)) + " qubits");
      }
      auto report = basis_verify(b);
      if (!report.ok()) {
        throw InvalidArgument("explicit basis for vertex " + std::to_string(v + 1) +
                              " is invalid: " + report.violations.front());
      }
      bases_[v] = b;
      basis_names_[v] = "explicit";
      continue;
    }
    BasisKind kind = choice.default_kind;
    if (auto it = choice.per_vertex.find(v); it != choice.per_vertex.end()) kind = it->second;
    bases_[v] = make_basis(kind, d);
    basis_names_[v] = std::string(basis_kind_name(kind));
  }

  edge_ops_.reserve(graph_.edge_count());
  for (const Edge& ed : graph_.edges()) {
    PauliString op = local_majorana(ed.a, ed.port_a) * local_majorana(ed.b, ed.port_b);
    if (ed.reversed) op.mul_phase(2);
    edge_ops_.push_back(std::move(op));
  }
  vertex_ops_.resize(nv);
  routing_costs_.assign(nv, 0);
  for (std::size_t v = 0; v < nv; ++v) {
    if (graph_.degree(v) == 0) continue;
    vertex_ops_[v] = parity_operator(bases_[v]).embedded(n_qubits_, layout_[v].offset);
    routing_costs_[v] = max_pair_weight(bases_[v], graph_.degree(v));
  }
  cycles_ = cycle_basis(graph_, false).cycles;
  for (const auto& c : cycles_) stabilizers_.push_back(loop_stabilizer(*this, c));
}

PauliString Encoding::local_majorana(std::size_t v, std::size_t index) const {
  const auto& b = bases_.at(v);
  if (index >= b.ops.size()) {
    throw InvalidArgument("vertex " + std::to_string(v + 1) + " has no local Majorana " +
                          std::to_string(index + 1));
  }
  return b.ops[index].embedded(n_qubits_, layout_[v].offset);
}

PauliString Encoding::directed_edge_op(std::size_t e, std::size_t from) const {
  const Edge& ed = graph_.edge(e);
  if (from == ed.a) return edge_ops_.at(e);
  if (from != ed.b) throw InvalidArgument("vertex is not an endpoint of the edge");
  PauliString p = edge_ops_.at(e);
  return p.mul_phase(2);
}

const PauliString& Encoding::vertex_op(std::size_t v) const {
  if (graph_.degree(v) == 0) {
    throw DimensionError("vertex " + std::to_string(v + 1) + " has no qubits");
  }
  return vertex_ops_.at(v);
}

Encoding build_encoding(SystemGraph graph, const BasisChoice& choice) {
  return Encoding(std::move(graph), choice);
}

PauliString edge_operator(const Encoding& e, std::size_t j, std::size_t k) {
  const auto edge = e.graph().find_edge(j, k);
  if (!edge) {
    throw RouteError("vertices " + std::to_string(j + 1) + " and " + std::to_string(k + 1) +
                     " are not adjacent");
  }
  return e.directed_edge_op(*edge, j);
}

PauliString vertex_operator(const Encoding& e, std::size_t j) {
  if (j >= e.graph().vertex_count()) throw InvalidArgument("unknown vertex");
  return e.vertex_op(j);
}

PauliString path_product_raw(const Encoding& e, std::span<const std::size_t> path) {
  if (path.size() < 2) throw RouteError("path needs at least two vertices");
  const Cycle walk = walk_from_vertices(e.graph(), path, false);
  PauliString p(e.n_qubits());
  for (std::size_t i = 0; i < walk.edges.size(); ++i) {
    p *= e.directed_edge_op(walk.edges[i], walk.vertices[i]);
  }
  return p;
}

PauliString path_edge_operator(const Encoding& e, std::size_t j, std::size_t k,
                               std::optional<std::span<const std::size_t>> path) {
  std::vector<std::size_t> routed;
  std::span<const std::size_t> p;
  if (path) {
    p = *path;
    if (p.empty() || p.front() != j || p.back() != k) {
      throw RouteError("path does not join the requested vertices");
    }
  } else {
    routed = shortest_path(e.graph(), j, k, e.routing_costs());
    p = routed;
  }
  PauliString raw = path_product_raw(e, p);
  return raw.mul_phase(static_cast<unsigned>((p.size() - 2) % 4));
}

PauliString loop_stabilizer(const Encoding& e, const Cycle& cycle) {
  const std::size_t len = cycle.vertices.size();
  if (len < 2 || cycle.edges.size() != len) throw RouteError("loop must be a closed walk");
  PauliString p(e.n_qubits());
  for (std::size_t i = 0; i < len; ++i) {
    const Edge& ed = e.graph().edge(cycle.edges[i]);
    const std::size_t u = cycle.vertices[i];
    const std::size_t w = cycle.vertices[(i + 1) % len];
    if (!((ed.a == u && ed.b == w) || (ed.a == w && ed.b == u))) {
      throw RouteError("loop step " + std::to_string(i + 1) + " does not follow its edge");
    }
    p *= e.directed_edge_op(cycle.edges[i], u);
  }
  return p.mul_phase(static_cast<unsigned>(len % 4));
}

PauliString unpaired_majorana(const Encoding& e, std::size_t j) {
  const std::size_t d = e.graph().degree(j);
  if (d % 2 == 0) {
    throw InvalidArgument("vertex " + std::to_string(j + 1) + " has even degree " +
                          std::to_string(d) + "; no unpaired Majorana");
  }
  return e.local_majorana(j, d);
}

namespace {

bool reduced_less(const PauliString& a, const PauliString& b) {
  const auto wa = a.weight();
  const auto wb = b.weight();
  if (wa != wb) return wa < wb;
  return a.support_less(b);
}

}  // namespace

PauliString reduce_mod_stabilizers(const Encoding& e, const PauliString& p) {
  PauliString cur = p;
  for (;;) {
    const PauliString* best = nullptr;
    PauliString best_val;
    for (const auto& s : e.stabilizers()) {
      PauliString cand = cur * s;
      if (reduced_less(cand, best ? best_val : cur)) {
        best_val = std::move(cand);
        best = &s;
      }
    }
    if (!best) return cur;
    cur = std::move(best_val);
  }
}

namespace {

bool column(const PauliString& p, std::size_t c) {
  const std::size_t n = p.n_qubits();
  return c < n ? p.x(c) : p.z(c - n);
}

std::optional<std::size_t> first_column(const PauliString& p) {
  const std::size_t n = p.n_qubits();
  for (std::size_t c = 0; c < 2 * n; ++c) {
    if (column(p, c)) return c;
  }
  return std::nullopt;
}

}  // namespace

StabilizerGroup::StabilizerGroup(std::span<const PauliString> generators) {
  for (const auto& g : generators) {
    PauliString r = reduce(g);
    auto pivot = first_column(r);
    if (!pivot) continue;
    rows_.push_back(std::move(r));
    pivots_.push_back(*pivot);
  }
}

PauliString StabilizerGroup::reduce(PauliString p) const {
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    if (column(p, pivots_[i])) p *= rows_[i];
  }
  return p;
}

std::optional<unsigned> StabilizerGroup::phase_to_member(const PauliString& p) const {
  if (!rows_.empty() && p.n_qubits() != rows_.front().n_qubits()) {
    throw DimensionError("operator size does not match the group");
  }
  const PauliString r = reduce(p);
  if (!r.is_identity_up_to_phase()) return std::nullopt;
  // p * g = i^k for g in the group, so i^{-k} p = g^{-1}.
  return (4 - r.phase_exp()) % 4;
}

bool StabilizerGroup::contains(const PauliString& p) const {
  const auto k = phase_to_member(p);
  return k && *k == 0;
}

StabilizerGroup codespace_group(const Encoding& e) {
  std::vector<PauliString> gens = e.stabilizers();
  const auto& g = e.graph();
  for (std::size_t v = g.physical_count(); v < g.vertex_count(); ++v) {
    if (g.degree(v) > 0) gens.push_back(e.vertex_op(v));
  }
  return StabilizerGroup(gens);
}

bool equal_on_codespace(const StabilizerGroup& group, const PauliString& a,
                        const PauliString& b) {
  return group.contains(a * b);
}

AlgebraReport check_algebra(const Encoding& e) {
  AlgebraReport r;
  const auto& g = e.graph();
  auto check = [&r](bool ok, const std::string& what) {
    ++r.checks;
    if (!ok) r.violations.push_back(what);
  };
  auto edge_name = [&g](std::size_t i) {
    return "A(" + std::to_string(g.edge(i).a + 1) + "," + std::to_string(g.edge(i).b + 1) + ")";
  };
  auto vertex_name = [](std::size_t v) { return "B(" + std::to_string(v + 1) + ")"; };
  auto unitary_hermitian = [&](const PauliString& p, const std::string& name) {
    check(p.is_hermitian(), name + " is not Hermitian");
    check((p * p).phase_exp() == 0 && (p * p).is_identity_up_to_phase(),
          name + " does not square to +I");
  };

  std::vector<std::size_t> with_qubits;
  for (std::size_t v = 0; v < g.vertex_count(); ++v) {
    if (g.degree(v) > 0) with_qubits.push_back(v);
  }
  for (std::size_t i = 0; i < g.edge_count(); ++i) {
    unitary_hermitian(e.edge_op(i), edge_name(i));
    const Edge& ed = g.edge(i);
    PauliString neg = e.edge_op(i);
    neg.mul_phase(2);
    check(e.directed_edge_op(i, ed.b) == neg, edge_name(i) + " is not antisymmetric");
  }
  for (std::size_t v : with_qubits) unitary_hermitian(e.vertex_op(v), vertex_name(v));
  for (std::size_t s = 0; s < e.stabilizers().size(); ++s) {
    unitary_hermitian(e.stabilizers()[s], "S" + std::to_string(s + 1));
  }

  for (std::size_t i = 0; i < g.edge_count(); ++i) {
    const Edge& ei = g.edge(i);
    for (std::size_t j = i + 1; j < g.edge_count(); ++j) {
      const Edge& ej = g.edge(j);
      const int shared = (ei.a == ej.a || ei.a == ej.b) + (ei.b == ej.a || ei.b == ej.b);
      const bool expect_commute = shared != 1;
      check(e.edge_op(i).commutes_with(e.edge_op(j)) == expect_commute,
            edge_name(i) + " vs " + edge_name(j) +
                (expect_commute ? " should commute" : " should anticommute"));
    }
    for (std::size_t v : with_qubits) {
      const bool expect_commute = v != ei.a && v != ei.b;
      check(e.edge_op(i).commutes_with(e.vertex_op(v)) == expect_commute,
            edge_name(i) + " vs " + vertex_name(v) +
                (expect_commute ? " should commute" : " should anticommute"));
    }
  }
  for (std::size_t a = 0; a < with_qubits.size(); ++a) {
    for (std::size_t b = a + 1; b < with_qubits.size(); ++b) {
      check(e.vertex_op(with_qubits[a]).commutes_with(e.vertex_op(with_qubits[b])),
            vertex_name(with_qubits[a]) + " vs " + vertex_name(with_qubits[b]) +
                " should commute");
    }
  }
  for (std::size_t s = 0; s < e.stabilizers().size(); ++s) {
    const auto& st = e.stabilizers()[s];
    const std::string name = "S" + std::to_string(s + 1);
    for (std::size_t i = 0; i < g.edge_count(); ++i) {
      check(st.commutes_with(e.edge_op(i)), name + " vs " + edge_name(i) + " should commute");
    }
    for (std::size_t v : with_qubits) {
      check(st.commutes_with(e.vertex_op(v)), name + " vs " + vertex_name(v) + " should commute");
    }
    for (std::size_t t = s + 1; t < e.stabilizers().size(); ++t) {
      check(st.commutes_with(e.stabilizers()[t]),
            name + " vs S" + std::to_string(t + 1) + " should commute");
    }
  }
  return r;
}

// .enc documents. Operators are written as `.pauli` term lines on the
// global register; reading rebuilds the encoding from graph and bases and
// insists the stored tables agree.

void write_encoding(std::ostream& os, const Encoding& e) {
  const auto& g = e.graph();
  nlohmann::ordered_json doc;
  doc["format"] = "fermicode-encoding";
  doc["version"] = 1;
  doc["n_qubits"] = e.n_qubits();
  auto layout = nlohmann::ordered_json::array();
  for (std::size_t v = 0; v < g.vertex_count(); ++v) {
    nlohmann::ordered_json row;
    row["vertex"] = v + 1;
    row["first_qubit"] = e.layout(v).offset + 1;
    row["qubits"] = e.layout(v).count;
    row["basis"] = e.basis_name(v);
    if (e.basis_name(v) == "explicit") {
      auto ops = nlohmann::ordered_json::array();
      for (const auto& op : e.basis(v).ops) ops.push_back(format_operator(op));
      row["ops"] = ops;
    }
    layout.push_back(row);
  }
  doc["layout"] = layout;
  auto edges = nlohmann::ordered_json::array();
  for (std::size_t i = 0; i < g.edge_count(); ++i) {
    nlohmann::ordered_json row;
    row["a"] = g.edge(i).a + 1;
    row["b"] = g.edge(i).b + 1;
    row["op"] = format_operator(e.edge_op(i));
    edges.push_back(row);
  }
  doc["edge_ops"] = edges;
  auto vertices = nlohmann::ordered_json::array();
  for (std::size_t v = 0; v < g.vertex_count(); ++v) {
    if (g.degree(v) == 0) continue;
    nlohmann::ordered_json row;
    row["vertex"] = v + 1;
    row["op"] = format_operator(e.vertex_op(v));
    vertices.push_back(row);
  }
  doc["vertex_ops"] = vertices;
  auto stabs = nlohmann::ordered_json::array();
  for (std::size_t s = 0; s < e.stabilizers().size(); ++s) {
    nlohmann::ordered_json row;
    auto cyc = nlohmann::ordered_json::array();
    for (std::size_t v : e.cycles()[s].vertices) cyc.push_back(v + 1);
    row["cycle"] = cyc;
    row["op"] = format_operator(e.stabilizers()[s]);
    stabs.push_back(row);
  }
  doc["stabilizers"] = stabs;
  doc["graph"] = nlohmann::ordered_json::parse(graph_to_json(g).dump());
  os << doc.dump(1) << '\n';
}

Encoding read_encoding(std::istream& is) {
  nlohmann::json doc;
  try {
    is >> doc;
  } catch (const nlohmann::json::exception& ex) {
    throw ParseError(std::string("encoding file: ") + ex.what());
  }
  try {
    if (doc.value("format", "") != "fermicode-encoding") {
      throw ParseError("not an encoding document");
    }
    SystemGraph g = graph_from_json(doc.at("graph"));
    const std::size_t n_qubits = doc.at("n_qubits").get<std::size_t>();
    BasisChoice choice;
    for (const auto& row : doc.at("layout")) {
      const std::size_t v = row.at("vertex").get<std::size_t>() - 1;
      const std::string name = row.at("basis").get<std::string>();
      if (v >= g.vertex_count()) throw ParseError("layout names unknown vertex");
      if (name == "none") continue;
      if (name == "explicit") {
        MajoranaBasis b;
        b.n_qubits = row.at("qubits").get<std::size_t>();
        for (const auto& line : row.at("ops")) {
          b.ops.push_back(parse_operator(line.get<std::string>(), b.n_qubits));
        }
        choice.explicit_bases[v] = std::move(b);
      } else {
        choice.per_vertex[v] = parse_basis_kind(name);
      }
    }
    Encoding e(std::move(g), choice);
    if (e.n_qubits() != n_qubits) throw ParseError("qubit count does not match the graph");
    const auto& eg = e.graph();
    const auto& edge_rows = doc.at("edge_ops");
    if (edge_rows.size() != eg.edge_count()) throw ParseError("edge table size mismatch");
    for (std::size_t i = 0; i < eg.edge_count(); ++i) {
      if (parse_operator(edge_rows[i].at("op").get<std::string>(), n_qubits) != e.edge_op(i)) {
        throw ParseError("edge operator " + std::to_string(i + 1) + " does not match");
      }
    }
    for (const auto& row : doc.at("vertex_ops")) {
      const std::size_t v = row.at("vertex").get<std::size_t>() - 1;
      if (v >= eg.vertex_count() ||
          parse_operator(row.at("op").get<std::string>(), n_qubits) != e.vertex_op(v)) {
        throw ParseError("vertex operator " + std::to_string(v + 1) + " does not match");
      }
    }
    const auto& stab_rows = doc.at("stabilizers");
    if (stab_rows.size() != e.stabilizers().size()) throw ParseError("stabilizer count mismatch");
    for (std::size_t s = 0; s < stab_rows.size(); ++s) {
      if (parse_operator(stab_rows[s].at("op").get<std::string>(), n_qubits) !=
          e.stabilizers()[s]) {
        throw ParseError("stabilizer " + std::to_string(s + 1) + " does not match");
      }
    }
    return e;
  } catch (const nlohmann::json::exception& ex) {
    throw ParseError(std::string("encoding file: ") + ex.what());
  } catch (const InvalidArgument& ex) {
    throw ParseError(std::string("encoding file: ") + ex.what());
  }
}

}  // namespace fermicode
