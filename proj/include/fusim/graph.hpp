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

#ifndef FUSIM_GRAPH_HPP
#define FUSIM_GRAPH_HPP

#include <set>
#include <utility>
#include <vector>

#include "fusim/dense_state.hpp"
#include "fusim/register.hpp"
#include "fusim/tableau.hpp"

namespace fusim {

// Target-state description: a vertex graph plus the mapping of logical
// vertices onto physical register slots. A redundantly encoded vertex maps
// onto two physical qubits holding |b>|~b> (the first listed qubit carries
// the logical bit). leaf_hadamard lists physical qubits whose Hadamard is
// absorbed into the measurement basis rather than applied to the state.
struct GraphSpec {
  std::vector<std::vector<int>> encoding;          // vertex -> 1 or 2 physical slots
  std::set<std::pair<int, int>> edges;             // vertex index pairs, first < second
  std::set<int> leaf_hadamard;                     // physical slots

  int num_vertices() const { return static_cast<int>(encoding.size()); }
  int num_physical() const;
  bool redundant(int v) const { return encoding[v].size() == 2; }
  std::vector<int> neighbors(int v) const;
  void add_edge(int a, int b);
  void validate() const;  // throws SimError on malformed specs
};

struct StabilizerSet {
  std::vector<PauliString> generators;
};

// One generator per physical qubit. A singly encoded vertex v contributes
// X_v prod_{u in N(v)} Z_u, with Z taken on the logical-bit qubit of
// redundant neighbors. A redundant vertex {p,q} contributes -Z_p Z_q and
// X_p X_q prod Z. leaf_hadamard slots have X and Z exchanged on their
// letter in every generator.
StabilizerSet stabilizer_generators(const GraphSpec& g);

struct MeasurementSettings {
  std::vector<Basis> basis_a, basis_b;  // per physical slot
  std::vector<int> gens_a, gens_b;      // generator indices per set
  std::vector<int> vertex_color;        // 2-coloring used
};

// Splits the generators into the two locally measurable sets; requires the
// vertex graph to be bipartite and throws OddCycleError otherwise.
MeasurementSettings bipartition_settings(const StabilizerSet& s, const GraphSpec& g);

// Dense oracle: |+>^V, controlled-Z per edge, redundant-encoding isometry,
// then Hadamards on leaf_hadamard slots.
DenseState graph_state_vector(const GraphSpec& g, int dense_limit = DenseState::kDefaultMaxQubits);

struct LocalOp {
  int qubit;
  char gate;  // 'H', 'S' or 'Z'
};

// Brings a copy of the stabilizer part of t to graph form by GF(2)
// elimination. Applying the returned single-qubit Cliffords (in order) to
// the input state yields exactly the graph state of the returned spec.
std::pair<GraphSpec, std::vector<LocalOp>> extract_graph(const Tableau& t);

// Built-in target graphs in the layout of the two-emitter protocols
// (slots 0,1 = the spins, slots 2.. = surviving photons in emission order).
// Even rings carry two redundant vertices: the spin pair and the
// parity-locked first photon pair. Odd rings carry the spin pair only.
GraphSpec ring_graph(int n);
// branching = {children per level}; {2,2} is the depth-two tree of the
// two-branch protocol. The root is the redundantly encoded spin pair.
GraphSpec tree_graph(const std::vector<int>& branching);

}  // namespace fusim

#endif
