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


#include "fermicode/fermion.hpp"

#include <algorithm>
#include <charconv>
#include <istream>
#include <map>
#include <ostream>
#include <random>
#include <set>
#include <sstream>
#include <string>

#include "fermicode/errors.hpp"

namespace fermicode {

namespace {

constexpr Complex kI{0.0, 1.0};

struct EVFactor {
  bool is_edge;
  std::size_t j;
  std::size_t k;  // unused for vertices
};

bool touches(const EVFactor& edge, std::size_t v) { return edge.j == v || edge.k == v; }

bool edges_anticommute(const EVFactor& a, const EVFactor& b) {
  const int shared = touches(b, a.j) + touches(b, a.k);
  return shared == 1;
}

// Brings an ordered product of A and B factors to A...A B...B with repeats
// removed. B_v anticommutes with A_jk iff v in {j,k}; A's anticommute iff
// they share exactly one endpoint.
EVTerm normalize(Complex c, const std::vector<EVFactor>& seq) {
  std::vector<EVFactor> edges;
  std::vector<std::size_t> verts;
  for (const auto& f : seq) {
    if (!f.is_edge) {
      verts.push_back(f.j);
      continue;
    }
    for (std::size_t v : verts) {
      if (touches(f, v)) c = -c;
    }
    edges.push_back(f);
  }
  for (std::size_t i = 0; i < edges.size();) {
    std::size_t dup = i + 1;
    while (dup < edges.size() && !(edges[dup].j == edges[i].j && edges[dup].k == edges[i].k)) ++dup;
    if (dup == edges.size()) {
      ++i;
      continue;
    }
    for (std::size_t m = i + 1; m < dup; ++m) {
      if (edges_anticommute(edges[m], edges[dup])) c = -c;
    }
    edges.erase(edges.begin() + static_cast<std::ptrdiff_t>(dup));
    edges.erase(edges.begin() + static_cast<std::ptrdiff_t>(i));
  }
  std::sort(verts.begin(), verts.end());
  EVTerm out{c, {}, {}};
  for (const auto& e : edges) out.edges.emplace_back(e.j, e.k);
  for (std::size_t i = 0; i < verts.size();) {
    std::size_t run = i;
    while (run < verts.size() && verts[run] == verts[i]) ++run;
    if ((run - i) % 2 == 1) out.vertices.push_back(verts[i]);
    i = run;
  }
  return out;
}

std::vector<EVFactor> pair_factors(std::size_t a, std::size_t b, Complex& c) {
  const std::size_t j = a / 2;
  const std::size_t k = b / 2;
  const bool a_even = a % 2 == 1;  // the second Majorana of its mode
  const bool b_even = b % 2 == 1;
  if (j == k) {
    // γ_{2j} γ_{2j+1} = i B_j
    c *= kI;
    return {{false, j, 0}};
  }
  if (!a_even && !b_even) {
    c *= kI;  // o_j o_k = i A_jk
    return {{true, j, k}};
  }
  if (!a_even && b_even) {
    c = -c;  // o_j e_k = -A_jk B_k
    return {{true, j, k}, {false, k, 0}};
  }
  if (a_even && !b_even) {
    c = -c;  // e_j o_k = B_j A_jk = -A_jk B_j
    return {{true, j, k}, {false, j, 0}};
  }
  c *= -kI;  // e_j e_k = -i A_jk B_j B_k
  return {{true, j, k}, {false, j, 0}, {false, k, 0}};
}

void check_pair(const MajoranaMonomial& m) {
  if (m.indices.size() != 2) throw ParityError("pair_to_ev needs two Majoranas");
  if (m.indices[0] >= m.indices[1]) throw InvalidArgument("Majorana indices must increase");
}

}  // namespace

void FermionOperator::add(Complex c, std::vector<FermionFactor> factors) {
  for (const auto& f : factors) {
    const std::size_t limit = f.kind == FermionFactor::Kind::kMajorana ? 2 * n_modes : n_modes;
    if (f.index >= limit) {
      throw DimensionError("factor index " + std::to_string(f.index + 1) + " out of range");
    }
  }
  terms.push_back({c, std::move(factors)});
}

bool FermionOperator::is_parity_preserving() const {
  for (const auto& t : terms) {
    // Every factor, ladder or Majorana, flips the fermion parity.
    if (t.factors.size() % 2 != 0) return false;
  }
  return true;
}

std::vector<MajoranaMonomial> to_majorana_normal_form(const FermionOperator& f) {
  std::map<std::vector<std::size_t>, Complex> acc;
  for (const auto& term : f.terms) {
    // Each factor is a sum of one or two weighted Majoranas.
    std::vector<std::vector<std::pair<std::size_t, Complex>>> choices;
    for (const auto& fac : term.factors) {
      switch (fac.kind) {
        case FermionFactor::Kind::kCreate:
          choices.push_back({{2 * fac.index, 0.5}, {2 * fac.index + 1, -0.5 * kI}});
          break;
        case FermionFactor::Kind::kAnnihilate:
          choices.push_back({{2 * fac.index, 0.5}, {2 * fac.index + 1, 0.5 * kI}});
          break;
        case FermionFactor::Kind::kMajorana:
          choices.push_back({{fac.index, 1.0}});
          break;
      }
    }
    std::vector<std::size_t> pick(choices.size(), 0);
    for (;;) {
      Complex c = term.coefficient;
      std::vector<std::size_t> word;
      for (std::size_t i = 0; i < choices.size(); ++i) {
        word.push_back(choices[i][pick[i]].first);
        c *= choices[i][pick[i]].second;
      }
      // Insertion sort; each exchange of distinct Majoranas costs a sign.
      for (std::size_t i = 1; i < word.size(); ++i) {
        for (std::size_t m = i; m > 0 && word[m - 1] > word[m]; --m) {
          std::swap(word[m - 1], word[m]);
          c = -c;
        }
      }
      std::vector<std::size_t> reduced;
      for (std::size_t i = 0; i < word.size();) {
        std::size_t run = i;
        while (run < word.size() && word[run] == word[i]) ++run;
        if ((run - i) % 2 == 1) reduced.push_back(word[i]);
        i = run;
      }
      acc[reduced] += c;

      std::size_t pos = 0;
      while (pos < pick.size() && ++pick[pos] == choices[pos].size()) pick[pos++] = 0;
      if (pos == pick.size()) break;
    }
  }
  std::vector<MajoranaMonomial> out;
  for (auto& [idx, c] : acc) {
    if (std::abs(c) >= kZeroThreshold) out.push_back({c, idx});
  }
  return out;
}

EVTerm pair_to_ev(const MajoranaMonomial& m) {
  check_pair(m);
  Complex c = m.coefficient;
  auto seq = pair_factors(m.indices[0], m.indices[1], c);
  return normalize(c, seq);
}

EVTerm monomial_to_ev(const MajoranaMonomial& m) {
  if (m.indices.size() % 2 != 0) {
    throw ParityError("Majorana monomial of odd length " + std::to_string(m.indices.size()));
  }
  for (std::size_t i = 1; i < m.indices.size(); ++i) {
    if (m.indices[i - 1] >= m.indices[i]) throw InvalidArgument("Majorana indices must increase");
  }
  Complex c = m.coefficient;
  std::vector<EVFactor> seq;
  for (std::size_t i = 0; i < m.indices.size(); i += 2) {
    auto part = pair_factors(m.indices[i], m.indices[i + 1], c);
    seq.insert(seq.end(), part.begin(), part.end());
  }
  return normalize(c, seq);
}

InteractionGraph interaction_graph_from_hamiltonian(const FermionOperator& f) {
  if (!f.is_parity_preserving()) throw ParityError("Hamiltonian has an odd-parity term");
  InteractionGraph g;
  g.n_vertices = f.n_modes;
  for (const auto& m : to_majorana_normal_form(f)) {
    for (const auto& e : monomial_to_ev(m).edges) g.edges.insert(e);
  }
  return g;
}

PauliSum transform_hamiltonian(const FermionOperator& f, const Encoding& e,
                               const RoutingPolicy& policy) {
  const auto& g = e.graph();
  if (f.n_modes > g.physical_count()) {
    throw DimensionError("Hamiltonian has " + std::to_string(f.n_modes) +
                         " modes but the graph has " + std::to_string(g.physical_count()) +
                         " physical vertices");
  }
  if (!f.is_parity_preserving()) throw ParityError("Hamiltonian has an odd-parity term");

  std::map<std::pair<std::size_t, std::size_t>, PauliString> edge_cache;
  std::map<std::size_t, std::vector<std::vector<std::size_t>>> routes;
  auto encoded_edge = [&](std::size_t j, std::size_t k) -> const PauliString& {
    auto key = std::make_pair(j, k);
    if (auto it = edge_cache.find(key); it != edge_cache.end()) return it->second;
    PauliString op;
    if (auto ex = policy.explicit_paths.find(key); ex != policy.explicit_paths.end()) {
      op = path_edge_operator(e, j, k, std::span<const std::size_t>(ex->second));
    } else if (g.find_edge(j, k)) {
      op = edge_operator(e, j, k);
    } else {
      auto it = routes.find(j);
      if (it == routes.end()) {
        it = routes.emplace(j, shortest_paths_from(g, j, e.routing_costs())).first;
      }
      const auto& path = it->second[k];
      if (path.empty()) {
        throw RouteError("no path between modes " + std::to_string(j + 1) + " and " +
                         std::to_string(k + 1));
      }
      op = path_edge_operator(e, j, k, std::span<const std::size_t>(path));
    }
    return edge_cache.emplace(key, std::move(op)).first->second;
  };

  PauliSum out(e.n_qubits());
  for (const auto& m : to_majorana_normal_form(f)) {
    const EVTerm ev = monomial_to_ev(m);
    PauliString p(e.n_qubits());
    for (const auto& [j, k] : ev.edges) p *= encoded_edge(j, k);
    for (std::size_t v : ev.vertices) p *= e.vertex_op(v);
    out.add(ev.coefficient, p);
  }
  return out;
}

FermionOperator build_syk2(std::size_t n_modes, const std::vector<std::vector<double>>& J) {
  const std::size_t m = 2 * n_modes;
  if (J.size() != m) throw DimensionError("SYK couplings must be 2N x 2N");
  FermionOperator f(n_modes);
  for (std::size_t a = 0; a < m; ++a) {
    if (J[a].size() != m) throw DimensionError("SYK couplings must be 2N x 2N");
    for (std::size_t b = a + 1; b < m; ++b) {
      if (J[a][b] == 0.0) continue;
      f.add(Complex{0.0, -J[a][b]}, {FermionFactor::majorana(a), FermionFactor::majorana(b)});
    }
  }
  return f;
}

FermionOperator build_syk2(std::size_t n_modes, std::uint64_t seed) {
  const std::size_t m = 2 * n_modes;
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> normal(0.0, 1.0);
  std::vector<std::vector<double>> J(m, std::vector<double>(m, 0.0));
  for (std::size_t a = 0; a < m; ++a) {
    for (std::size_t b = a + 1; b < m; ++b) J[a][b] = normal(rng);
  }
  return build_syk2(n_modes, J);
}

FermionOperator build_lattice_model(const LatticeModelParams& p) {
  std::size_t rows = 1;
  std::size_t cols = 0;
  if (p.kind == LatticeModelKind::kChain) {
    if (p.dims.size() != 1 || p.dims[0] == 0) throw InvalidArgument("chain needs {N}, N >= 1");
    cols = p.dims[0];
  } else if (p.dims.size() == 1) {
    rows = cols = p.dims[0];
  } else if (p.dims.size() == 2) {
    rows = p.dims[0];
    cols = p.dims[1];
  } else {
    throw InvalidArgument("square lattice needs {L} or {rows, cols}");
  }
  if (rows == 0 || cols == 0) throw InvalidArgument("lattice dims must be positive");
  const bool periodic = p.boundary == Boundary::kPeriodic;
  auto site = [&](long r, long c) -> std::optional<std::size_t> {
    const long R = static_cast<long>(rows);
    const long C = static_cast<long>(cols);
    if (periodic) {
      r = ((r % R) + R) % R;
      c = ((c % C) + C) % C;
    } else if (r < 0 || c < 0 || r >= R || c >= C) {
      return std::nullopt;
    }
    return static_cast<std::size_t>(r * C + c);
  };
  std::set<std::pair<std::size_t, std::size_t>> nn;
  std::set<std::pair<std::size_t, std::size_t>> diag;
  auto bond = [](auto& set, std::size_t a, std::optional<std::size_t> b) {
    if (b && *b != a) set.insert({std::min(a, *b), std::max(a, *b)});
  };
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < cols; ++c) {
      const long lr = static_cast<long>(r);
      const long lc = static_cast<long>(c);
      const std::size_t s = *site(lr, lc);
      bond(nn, s, site(lr, lc + 1));
      if (p.kind != LatticeModelKind::kChain) bond(nn, s, site(lr + 1, lc));
      if (p.kind == LatticeModelKind::kSquareNNDiag) {
        bond(diag, s, site(lr + 1, lc + 1));
        bond(diag, s, site(lr + 1, lc - 1));
      }
    }
  }
  FermionOperator f(rows * cols);
  auto hop = [&f](double t, std::size_t a, std::size_t b) {
    if (t == 0.0) return;
    f.add(t, {FermionFactor::create(a), FermionFactor::annihilate(b)});
    f.add(t, {FermionFactor::create(b), FermionFactor::annihilate(a)});
  };
  for (const auto& [a, b] : nn) hop(p.t, a, b);
  for (const auto& [a, b] : diag) hop(p.t_prime, a, b);
  if (p.U != 0.0) {
    for (std::size_t j = 0; j < rows * cols; ++j) {
      f.add(p.U, {FermionFactor::create(j), FermionFactor::annihilate(j)});
    }
  }
  return f;
}

void write_hamiltonian(std::ostream& os, const FermionOperator& f) {
  os << "# modes " << f.n_modes << '\n';
  for (const auto& t : f.terms) {
    os << format_complex(t.coefficient);
    for (const auto& fac : t.factors) {
      switch (fac.kind) {
        case FermionFactor::Kind::kCreate:
          os << " a+" << fac.index + 1;
          break;
        case FermionFactor::Kind::kAnnihilate:
          os << " a-" << fac.index + 1;
          break;
        case FermionFactor::Kind::kMajorana:
          os << " g" << fac.index + 1;
          break;
      }
    }
    os << '\n';
  }
}

FermionOperator read_hamiltonian(std::istream& is) {
  std::vector<FermionTerm> terms;
  std::optional<std::size_t> header;
  std::size_t needed = 0;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(is, line)) {
    ++line_no;
    auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos) continue;
    if (line[first] == '#') {
      std::istringstream hs(line.substr(first + 1));
      std::string key;
      std::size_t n = 0;
      if (hs >> key && key == "modes") {
        if (!(hs >> n)) throw ParseError("bad '# modes' header");
        header = n;
      }
      continue;
    }
    try {
      auto [c, rest] = split_coefficient(line);
      FermionTerm term{c, {}};
      std::istringstream tokens{std::string(rest)};
      std::string tok;
      while (tokens >> tok) {
        FermionFactor fac;
        std::size_t skip = 0;
        if (tok.rfind("a+", 0) == 0) {
          fac.kind = FermionFactor::Kind::kCreate;
          skip = 2;
        } else if (tok.rfind("a-", 0) == 0) {
          fac.kind = FermionFactor::Kind::kAnnihilate;
          skip = 2;
        } else if (tok.rfind("g", 0) == 0) {
          fac.kind = FermionFactor::Kind::kMajorana;
          skip = 1;
        } else {
          throw ParseError("bad factor '" + tok + "'");
        }
        std::size_t label = 0;
        auto [ptr, ec] = std::from_chars(tok.data() + skip, tok.data() + tok.size(), label);
        if (ec != std::errc() || ptr != tok.data() + tok.size() || label == 0) {
          throw ParseError("bad label in '" + tok + "'");
        }
        fac.index = label - 1;
        const std::size_t modes =
            fac.kind == FermionFactor::Kind::kMajorana ? (label + 1) / 2 : label;
        needed = std::max(needed, modes);
        term.factors.push_back(fac);
      }
      terms.push_back(std::move(term));
    } catch (const ParseError& ex) {
      throw ParseError("line " + std::to_string(line_no) + ": " + ex.what());
    }
  }
  if (header && *header < needed) {
    throw ParseError("factor exceeds the declared " + std::to_string(*header) + " modes");
  }
  FermionOperator f(header.value_or(needed));
  f.terms = std::move(terms);
  return f;
}

}  // namespace fermicode
