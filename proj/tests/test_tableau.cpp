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

#include <doctest.h>

#include <cmath>

#include "fusim/errors.hpp"
#include "fusim/tableau.hpp"
#include "test_util.hpp"

using namespace fusim;
using namespace fusim::test;

namespace fusim {
// Verifies the invariants the algorithms rely on: stabilizers commute,
// each destabilizer anticommutes with its own stabilizer and commutes with
// all others.
class TableauCheck {
 public:
  static bool valid(const Tableau& t) {
    const std::size_t n = t.num_qubits();
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        if (!t.stab_[i].commutes_with(t.stab_[j])) return false;
        const bool want_anti = i == j;
        if (t.destab_[i].commutes_with(t.stab_[j]) == want_anti) return false;
      }
    return true;
  }
};
}  // namespace fusim

TEST_CASE("fresh tableau stabilizes |0..0>") {
  Tableau t(3);
  CHECK(t.expectation(PauliString::parse("ZII")) == 1);
  CHECK(t.expectation(PauliString::parse("IZI")) == 1);
  CHECK(t.expectation(PauliString::parse("ZZZ")) == 1);
  CHECK(t.expectation(PauliString::parse("XII")) == 0);
  CHECK(TableauCheck::valid(t));
}

TEST_CASE("bell pair expectations are exact") {
  Tableau t(2);
  t.apply_h(0);
  t.apply_cnot(0, 1);
  t.apply_x(1);  // psi+
  CHECK(t.expectation(PauliString::parse("ZZ")) == -1);
  CHECK(t.expectation(PauliString::parse("XX")) == +1);
  CHECK(t.expectation(PauliString::parse("YY")) == +1);
  CHECK(t.expectation(PauliString::parse("ZI")) == 0);
}

TEST_CASE("random circuits: tableau matches dense expectations exactly") {
  Rng rng(123);
  for (int rep = 0; rep < 30; ++rep) {
    const int n = 2 + static_cast<int>(rng() % 11);  // up to 12 qubits
    const auto circuit = random_clifford_circuit(n, 60, rng);
    DenseState d(n);
    Tableau t(n);
    apply_circuit(d, circuit);
    apply_circuit(t, circuit);
    REQUIRE(TableauCheck::valid(t));
    for (int k = 0; k < 40; ++k) {
      const auto p = random_pauli(n, rng);
      const double dv = d.expectation(p);
      const int tv = t.expectation(p);
      CHECK(std::abs(dv - tv) < 1e-10);
    }
  }
}

TEST_CASE("measurement statistics and collapse") {
  Rng rng(9);
  Tableau t(2);
  t.apply_h(0);
  t.apply_cnot(0, 1);  // |00> + |11>
  const auto r = t.measure_z(0, rng);
  CHECK(r.was_random);
  // Outcomes on the two qubits are perfectly correlated afterwards.
  const auto r2 = t.measure_z(1, rng);
  CHECK(!r2.was_random);
  CHECK(r2.outcome == r.outcome);
  CHECK(TableauCheck::valid(t));
}

TEST_CASE("forced measurement of an impossible branch throws") {
  Tableau t(1);  // |0>
  Rng rng(1);
  CHECK_THROWS_AS(t.measure_z(0, rng, -1), ZeroProbabilityBranch);
  CHECK(t.measure_z(0, rng, +1).outcome == +1);
}

TEST_CASE("joint Pauli measurement projects without resolving singles") {
  // |++>: measuring ZZ = -1 must leave psi+ (XX = +1 preserved).
  Rng rng(3);
  Tableau t(2);
  t.apply_h(0);
  t.apply_h(1);
  PauliString zz = PauliString::parse("ZZ");
  const auto r = t.measure_pauli(zz, rng, -1);
  CHECK(r.outcome == -1);
  CHECK(r.was_random);
  CHECK(t.expectation(PauliString::parse("ZZ")) == -1);
  CHECK(t.expectation(PauliString::parse("XX")) == +1);
  CHECK(t.expectation(PauliString::parse("ZI")) == 0);
  CHECK(TableauCheck::valid(t));
}

TEST_CASE("append and drop qubits") {
  Rng rng(4);
  Tableau t(2);
  t.apply_h(0);
  t.apply_cnot(0, 1);
  t.append_qubit();
  CHECK(t.num_qubits() == 3);
  CHECK(t.expectation(PauliString::parse("IIZ")) == 1);
  // Entangle then uncopy the third qubit; drop must preserve the pair.
  t.apply_cnot(1, 2);
  t.apply_cnot(1, 2);
  CHECK(t.drop_qubit(2) == +1);
  CHECK(t.num_qubits() == 2);
  CHECK(t.expectation(PauliString::parse("XX")) == +1);
  CHECK(t.expectation(PauliString::parse("ZZ")) == +1);
  CHECK(TableauCheck::valid(t));

  // Dropping |1> reports -1.
  Tableau u(2);
  u.apply_x(1);
  CHECK(u.drop_qubit(1) == -1);
  CHECK(u.num_qubits() == 1);

  // Dropping an uncollapsed qubit is rejected.
  Tableau v(2);
  v.apply_h(0);
  CHECK_THROWS_AS(v.drop_qubit(0), SimError);
}

TEST_CASE("drop keeps invariants over random scrambles") {
  Rng rng(77);
  for (int rep = 0; rep < 20; ++rep) {
    const int n = 4 + static_cast<int>(rng() % 5);
    Tableau t(n);
    apply_circuit(t, random_clifford_circuit(n, 50, rng));
    // Collapse some qubit, fix it to |0>, and drop it.
    const int q = static_cast<int>(rng() % n);
    const auto m = t.measure_z(q, rng);
    if (m.outcome < 0) t.apply_x(q);
    t.drop_qubit(q);
    CHECK(t.num_qubits() == static_cast<std::size_t>(n - 1));
    CHECK(TableauCheck::valid(t));
  }
}

TEST_CASE("measurement agreement with dense under forced outcomes") {
  Rng rng(55);
  for (int rep = 0; rep < 15; ++rep) {
    const int n = 3 + static_cast<int>(rng() % 4);
    const auto circuit = random_clifford_circuit(n, 40, rng);
    DenseState d(n);
    Tableau t(n);
    apply_circuit(d, circuit);
    apply_circuit(t, circuit);
    const int q = static_cast<int>(rng() % n);
    const double p1 = d.prob_one(q);
    Rng r1(1);
    if (p1 > 1e-9) {
      auto res = t.measure_pauli(PauliString::single(n, q, PauliLetter::Z), r1, -1);
      CHECK(res.outcome == -1);
      CHECK(res.was_random == (p1 < 1.0 - 1e-9));
    } else {
      CHECK_THROWS_AS(
          t.measure_pauli(PauliString::single(n, q, PauliLetter::Z), r1, -1),
          ZeroProbabilityBranch);
    }
  }
}
