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

#ifndef FUSIM_TEST_UTIL_HPP
#define FUSIM_TEST_UTIL_HPP

#include <cmath>
#include <string>
#include <vector>

#include "fusim/dense_state.hpp"
#include "fusim/pauli.hpp"
#include "fusim/register.hpp"
#include "fusim/tableau.hpp"

namespace fusim::test {

// Builds a product ket from characters in {0,1,+,-}.
inline DenseState ket(const std::string& s, int limit = DenseState::kDefaultMaxQubits) {
  DenseState psi(static_cast<int>(s.size()), limit);
  for (std::size_t q = 0; q < s.size(); ++q) {
    switch (s[q]) {
      case '0': break;
      case '1': psi.apply_x(static_cast<int>(q)); break;
      case '+': psi.apply_h(static_cast<int>(q)); break;
      case '-':
        psi.apply_x(static_cast<int>(q));
        psi.apply_h(static_cast<int>(q));
        break;
      default: throw std::runtime_error("bad ket char");
    }
  }
  return psi;
}

// Unnormalized superposition of product kets with real coefficients.
inline DenseState superpose(const std::vector<std::pair<double, std::string>>& terms,
                            int limit = DenseState::kDefaultMaxQubits) {
  DenseState acc = ket(terms.front().second, limit);
  for (auto& a : acc.amplitudes()) a *= terms.front().first;
  for (std::size_t t = 1; t < terms.size(); ++t) {
    DenseState part = ket(terms[t].second, limit);
    for (std::size_t i = 0; i < acc.amplitudes().size(); ++i)
      acc.amplitudes()[i] += terms[t].first * part.amplitudes()[i];
  }
  acc.normalize();
  return acc;
}

// Random n-qubit Pauli observable with sign +1.
inline PauliString random_pauli(int n, Rng& rng, bool allow_identity = true) {
  PauliString p(n);
  do {
    for (int q = 0; q < n; ++q) p.set(q, static_cast<PauliLetter>(rng() % 4));
  } while (!allow_identity && p.is_identity());
  return p;
}

struct CliffordOp {
  enum Kind { H, S, X, Z, CNOT, CZ } kind;
  int a = 0, b = 0;
};

inline std::vector<CliffordOp> random_clifford_circuit(int n, int depth, Rng& rng) {
  std::vector<CliffordOp> ops;
  for (int i = 0; i < depth; ++i) {
    const int pick = static_cast<int>(rng() % 6);
    CliffordOp op;
    op.kind = static_cast<CliffordOp::Kind>(pick);
    op.a = static_cast<int>(rng() % n);
    if (op.kind == CliffordOp::CNOT || op.kind == CliffordOp::CZ) {
      do {
        op.b = static_cast<int>(rng() % n);
      } while (op.b == op.a);
    }
    ops.push_back(op);
  }
  return ops;
}

inline void apply_circuit(DenseState& st, const std::vector<CliffordOp>& ops) {
  for (const auto& op : ops) {
    switch (op.kind) {
      case CliffordOp::H: st.apply_h(op.a); break;
      case CliffordOp::S: st.apply_phase_z(op.a, M_PI / 2); break;
      case CliffordOp::X: st.apply_x(op.a); break;
      case CliffordOp::Z: st.apply_z(op.a); break;
      case CliffordOp::CNOT: st.apply_cnot(op.a, op.b); break;
      case CliffordOp::CZ: st.apply_cz(op.a, op.b); break;
    }
  }
}

inline void apply_circuit(Tableau& t, const std::vector<CliffordOp>& ops) {
  for (const auto& op : ops) {
    switch (op.kind) {
      case CliffordOp::H: t.apply_h(op.a); break;
      case CliffordOp::S: t.apply_s(op.a); break;
      case CliffordOp::X: t.apply_x(op.a); break;
      case CliffordOp::Z: t.apply_z(op.a); break;
      case CliffordOp::CNOT: t.apply_cnot(op.a, op.b); break;
      case CliffordOp::CZ: t.apply_cz(op.a, op.b); break;
    }
  }
}

// Canonical form of a stabilizer generating set (GF(2) row reduction with
// sign tracking); equal groups give equal canonical forms.
inline std::vector<std::string> canonical_group(std::vector<PauliString> gens) {
  const std::size_t n = gens.empty() ? 0 : gens.front().num_qubits();
  std::size_t row = 0;
  const auto bit = [&](const PauliString& p, std::size_t col) {
    const std::size_t q = col % n;
    const PauliLetter l = p.at(q);
    if (col < n) return l == PauliLetter::X || l == PauliLetter::Y;
    return l == PauliLetter::Z || l == PauliLetter::Y;
  };
  for (std::size_t col = 0; col < 2 * n && row < gens.size(); ++col) {
    std::size_t piv = gens.size();
    for (std::size_t r = row; r < gens.size(); ++r)
      if (bit(gens[r], col)) {
        piv = r;
        break;
      }
    if (piv == gens.size()) continue;
    std::swap(gens[row], gens[piv]);
    for (std::size_t r = 0; r < gens.size(); ++r)
      if (r != row && bit(gens[r], col)) gens[r].multiply_right(gens[row]);
    ++row;
  }
  std::vector<std::string> out;
  for (const auto& g : gens) out.push_back(g.str());
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace fusim::test

#endif
