// Copyright 2026 The fusim Authors
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

#include "fusim/graph.hpp"

#include <algorithm>
#include <cassert>
#include <deque>
#include <string>

#include "fusim/errors.hpp"

namespace fusim {

int GraphSpec::num_physical() const {
  int n = 0;
  for (const auto& e : encoding) n += static_cast<int>(e.size());
  return n;
}

std::vector<int> GraphSpec::neighbors(int v) const {
  std::vector<int> out;
  for (const auto& [a, b] : edges) {
    if (a == v) out.push_back(b);
    if (b == v) out.push_back(a);
  }
  return out;
}

void GraphSpec::add_edge(int a, int b) {
  if (a == b) throw SimError("graph: self-loop");
  edges.insert({std::min(a, b), std::max(a, b)});
}

void GraphSpec::validate() const {
  const int np = num_physical();
  std::vector<int> seen(np, 0);
  for (const auto& enc : encoding) {
    if (enc.empty() || enc.size() > 2)
      throw SimError("graph: vertex must map to 1 or 2 physical qubits");
    for (int p : enc) {
      if (p < 0 || p >= np) throw SimError("graph: physical slot out of range");
      if (seen[p]++) throw SimError("graph: physical slot used twice");
    }
  }
  for (const auto& [a, b] : edges) {
    if (a == b) throw SimError("graph: self-loop");
    if (a < 0 || b >= num_vertices()) throw SimError("graph: edge endpoint out of range");
  }
  for (int p : leaf_hadamard)
    if (p < 0 || p >= np) throw SimError("graph: leaf_hadamard slot out of range");
}

namespace {

// Logical-bit qubit of a vertex (the Z representative used by neighbors).
int z_rep(const GraphSpec& g, int v) { return g.encoding[v][0]; }

void swap_xz_on_flagged(const GraphSpec& g, PauliString& p) {
  for (int q : g.leaf_hadamard) {
    switch (p.at(q)) {
      case PauliLetter::X: p.set(q, PauliLetter::Z); break;
      case PauliLetter::Z: p.set(q, PauliLetter::X); break;
      default: break;  // I unchanged; Y would flip sign, never produced here
    }
  }
}

}  // namespace

StabilizerSet stabilizer_generators(const GraphSpec& g) {
  g.validate();
  const int np = g.num_physical();
  StabilizerSet out;
  for (int v = 0; v < g.num_vertices(); ++v) {
    const auto& enc = g.encoding[v];
    if (g.redundant(v)) {
      PauliString parity(np, -1);
      parity.set(enc[0], PauliLetter::Z);
      parity.set(enc[1], PauliLetter::Z);
      out.generators.push_back(parity);
    }
    PauliString s(np);
    for (int p : enc) s.set(p, PauliLetter::X);
    for (int u : g.neighbors(v)) s.set(z_rep(g, u), PauliLetter::Z);
    out.generators.push_back(s);
  }
  for (auto& p : out.generators) swap_xz_on_flagged(g, p);
  return out;
}

MeasurementSettings bipartition_settings(const StabilizerSet& s, const GraphSpec& g) {
  const int nv = g.num_vertices();
  std::vector<int> color(nv, -1);
  for (int start = 0; start < nv; ++start) {
    if (color[start] >= 0) continue;
    color[start] = 0;
    std::deque<int> queue{start};
    while (!queue.empty()) {
      const int v = queue.front();
      queue.pop_front();
      for (int u : g.neighbors(v)) {
        if (color[u] < 0) {
          color[u] = 1 - color[v];
          queue.push_back(u);
        } else if (color[u] == color[v]) {
          throw OddCycleError(
              "vertex graph contains an odd cycle: the stabilizers cannot be split into two "
              "local measurement settings, so no fidelity lower bound is available");
        }
      }
    }
  }

  MeasurementSettings ms;
  ms.vertex_color = color;
  const int np = g.num_physical();
  ms.basis_a.assign(np, Basis::Z);
  ms.basis_b.assign(np, Basis::Z);
  for (int v = 0; v < nv; ++v)
    for (int p : g.encoding[v]) {
      ms.basis_a[p] = color[v] == 0 ? Basis::X : Basis::Z;
      ms.basis_b[p] = color[v] == 0 ? Basis::Z : Basis::X;
    }
  for (int p : g.leaf_hadamard) {
    ms.basis_a[p] = ms.basis_a[p] == Basis::X ? Basis::Z : Basis::X;
    ms.basis_b[p] = ms.basis_b[p] == Basis::X ? Basis::Z : Basis::X;
  }

  // Vertex generators go with the setting measuring their vertex in X;
  // parity generators of a redundant vertex go with the opposite one.
  int gi = 0;
  for (int v = 0; v < nv; ++v) {
    if (g.redundant(v)) {
      (color[v] == 0 ? ms.gens_b : ms.gens_a).push_back(gi++);
    }
    (color[v] == 0 ? ms.gens_a : ms.gens_b).push_back(gi++);
  }
  assert(gi == static_cast<int>(s.generators.size()));

  // Soundness: every generator must be a product of its setting's
  // single-qubit observables.
  const auto check = [&](const std::vector<int>& gens, const std::vector<Basis>& basis) {
    for (int i : gens)
      for (std::size_t q = 0; q < s.generators[i].num_qubits(); ++q) {
        const PauliLetter l = s.generators[i].at(q);
        if (l == PauliLetter::I) continue;
        const Basis need = l == PauliLetter::X ? Basis::X : Basis::Z;
        if (basis[q] != need)
          throw SimError("bipartition: generator not measurable in its setting");
      }
  };
  check(ms.gens_a, ms.basis_a);
  check(ms.gens_b, ms.basis_b);
  return ms;
}

DenseState graph_state_vector(const GraphSpec& g, int dense_limit) {
  g.validate();
  const int np = g.num_physical();
  if (np > dense_limit)
    throw TooLarge("graph state of " + std::to_string(np) + " qubits exceeds dense limit");
  DenseState psi(np, dense_limit);
  // Product preparation: |+> on single vertices, (|01>+|10>)/sqrt(2) on
  // redundant pairs with the logical bit on the first listed qubit.
  for (int v = 0; v < g.num_vertices(); ++v) {
    const auto& enc = g.encoding[v];
    psi.apply_h(enc[0]);
    if (enc.size() == 2) {
      psi.apply_cnot(enc[0], enc[1]);
      psi.apply_x(enc[1]);
    }
  }
  for (const auto& [a, b] : g.edges) psi.apply_cz(z_rep(g, a), z_rep(g, b));
  for (int p : g.leaf_hadamard) psi.apply_h(p);
  return psi;
}

std::pair<GraphSpec, std::vector<LocalOp>> extract_graph(const Tableau& t) {
  const std::size_t n = t.num_qubits();
  std::vector<PackedRow> rows;
  rows.reserve(n);
  for (std::size_t i = 0; i < n; ++i) rows.push_back(t.stabilizer(i));
  std::vector<LocalOp> ops;

  const auto apply_h_col = [&](std::size_t q) {
    for (auto& r : rows) {
      const bool xb = r.xbit(q), zb = r.zbit(q);
      if (xb && zb) r.neg = !r.neg;
      r.set_xbit(q, zb);
      r.set_zbit(q, xb);
    }
    ops.push_back({static_cast<int>(q), 'H'});
  };

  // Make the X block invertible, then reduce it to the identity.
  for (std::size_t c = 0; c < n; ++c) {
    auto find_pivot = [&]() -> std::size_t {
      for (std::size_t r = c; r < n; ++r)
        if (rows[r].xbit(c)) return r;
      return n;
    };
    std::size_t piv = find_pivot();
    if (piv == n) {
      apply_h_col(c);
      piv = find_pivot();
    }
    if (piv == n) throw SimError("extract_graph: tableau is not full rank");
    std::swap(rows[c], rows[piv]);
    for (std::size_t r = 0; r < n; ++r)
      if (r != c && rows[r].xbit(c)) rows[r].multiply_right(rows[c]);
  }

  // Kill the diagonal of the Z block (Y letters) with S gates, then fix
  // signs with Z gates.
  for (std::size_t q = 0; q < n; ++q) {
    if (rows[q].zbit(q)) {
      for (auto& r : rows) {
        if (r.xbit(q) && r.zbit(q)) r.neg = !r.neg;
        if (r.xbit(q)) r.set_zbit(q, !r.zbit(q));
      }
      ops.push_back({static_cast<int>(q), 'S'});
    }
  }
  for (std::size_t q = 0; q < n; ++q) {
    if (rows[q].neg) {
      rows[q].neg = false;
      ops.push_back({static_cast<int>(q), 'Z'});
    }
  }

  GraphSpec g;
  g.encoding.resize(n);
  for (std::size_t v = 0; v < n; ++v) g.encoding[v] = {static_cast<int>(v)};
  for (std::size_t v = 0; v < n; ++v)
    for (std::size_t u = v + 1; u < n; ++u) {
      assert(rows[v].zbit(u) == rows[u].zbit(v));
      if (rows[v].zbit(u)) g.add_edge(static_cast<int>(v), static_cast<int>(u));
    }
  return {g, ops};
}

GraphSpec ring_graph(int n) {
  if (n < 3) throw SimError("ring_graph needs n >= 3");
  GraphSpec g;
  if (n % 2 == 0) {
    const int k = n / 2;  // photon-generation cycles
    // Cycle order: spins, atom-1 photons newest to oldest, the locked first
    // photon pair, atom-2 photons oldest to newest.
    g.encoding.push_back({0, 1});
    for (int j = 2 * k - 1; j >= 3; j -= 2) g.encoding.push_back({1 + j});
    g.encoding.push_back({2, 3});
    for (int j = 4; j <= 2 * k; j += 2) g.encoding.push_back({1 + j});
  } else {
    const int k = (n - 1) / 2;
    g.encoding.push_back({0, 1});
    for (int j = 2 * k - 1; j >= 3; j -= 2) g.encoding.push_back({1 + j});
    g.encoding.push_back({2});
    g.encoding.push_back({3});
    for (int j = 4; j <= 2 * k; j += 2) g.encoding.push_back({1 + j});
  }
  const int nv = g.num_vertices();
  assert(nv == n);
  for (int v = 0; v < nv; ++v) g.add_edge(v, (v + 1) % nv);
  g.validate();
  return g;
}

GraphSpec tree_graph(const std::vector<int>& branching) {
  if (branching.empty()) throw SimError("tree_graph needs a non-empty branching list");
  for (int b : branching)
    if (b < 1) throw SimError("tree_graph: branching factors must be >= 1");
  GraphSpec g;
  g.encoding.push_back({0, 1});  // redundant root (the two spins)
  // Physical slots follow the emission schedule: one photon per top-level
  // branch per cycle, so within a level slots go (position in parent,
  // parent) in lexicographic order.
  std::vector<int> level_vertices{0};
  int next_slot = 2;
  for (int b : branching) {
    std::vector<int> next_level;
    const int parents = static_cast<int>(level_vertices.size());
    std::vector<std::vector<int>> children(parents);
    for (int j = 0; j < b; ++j)
      for (int pi = 0; pi < parents; ++pi) {
        const int v = g.num_vertices();
        g.encoding.push_back({next_slot++});
        g.add_edge(level_vertices[pi], v);
        children[pi].push_back(v);
      }
    for (int pi = 0; pi < parents; ++pi)
      next_level.insert(next_level.end(), children[pi].begin(), children[pi].end());
    level_vertices = std::move(next_level);
  }
  g.validate();
  return g;
}

}  // namespace fusim
