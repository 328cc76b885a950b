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

#ifndef FUSIM_TABLEAU_HPP
#define FUSIM_TABLEAU_HPP

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "fusim/pauli.hpp"

namespace fusim {

using Rng = std::mt19937_64;

// One Pauli row in packed form. The row represents the Hermitian operator
// sign * i^{|Y|} * prod_q X^{x_q} Z^{z_q} (each X=Z=1 pair is a Y letter).
struct PackedRow {
  std::vector<std::uint64_t> x, z;
  bool neg = false;  // true when the sign is -1

  explicit PackedRow(std::size_t words = 0) : x(words, 0), z(words, 0) {}

  bool xbit(std::size_t q) const { return (x[q >> 6] >> (q & 63)) & 1; }
  bool zbit(std::size_t q) const { return (z[q >> 6] >> (q & 63)) & 1; }
  void set_xbit(std::size_t q, bool v);
  void set_zbit(std::size_t q, bool v);

  bool commutes_with(const PackedRow& other) const;
  // this <- this * other; asserts the product has a real sign.
  void multiply_right(const PackedRow& other);

  PauliString to_pauli(std::size_t n) const;
  static PackedRow from_pauli(const PauliString& p, std::size_t words);
};

// Binary symplectic tableau over GF(2) in the destabilizer/stabilizer form:
// n destabilizer rows and n stabilizer rows with real sign bits. Supports
// the Clifford gate set, Z and general Pauli measurements, and register
// growth/shrink for photon emission and herald removal.
class Tableau {
 public:
  Tableau() = default;
  explicit Tableau(std::size_t n);  // |0...0>

  std::size_t num_qubits() const { return n_; }

  void apply_h(std::size_t q);
  void apply_s(std::size_t q);     // diag(1, i)
  void apply_sdg(std::size_t q);
  void apply_x(std::size_t q);
  void apply_y(std::size_t q);
  void apply_z(std::size_t q);
  void apply_cnot(std::size_t c, std::size_t t);
  void apply_cz(std::size_t a, std::size_t b);
  void apply_pauli(const PauliString& p);

  void append_qubit();  // |0> at the end
  // Removes a qubit that is in a definite computational state and is not
  // entangled with the rest (its Z value is determined). Returns +1 for
  // |0>, -1 for |1>.
  int drop_qubit(std::size_t q);

  struct MeasureResult {
    int outcome;      // +1 or -1
    bool was_random;  // probability was 1/2, else deterministic
  };
  // Projective Z measurement. forced = 0 samples; +1/-1 demands the outcome
  // and throws ZeroProbabilityBranch when impossible.
  MeasureResult measure_z(std::size_t q, Rng& rng, int forced = 0);
  // Measurement of a general Hermitian Pauli observable.
  MeasureResult measure_pauli(const PauliString& p, Rng& rng, int forced = 0);

  // Exact expectation of a Pauli observable: -1, 0 or +1.
  int expectation(const PauliString& p) const;

  std::vector<PauliString> stabilizer_rows() const;
  const PackedRow& stabilizer(std::size_t i) const { return stab_[i]; }

  std::string str() const;

 private:
  friend class TableauCheck;

  bool any_stab_anticommutes(const PackedRow& p, std::size_t* row) const;
  // Product of stabilizers reproducing a Pauli that commutes with the whole
  // group, found through the destabilizer pairing.
  PackedRow group_member_matching(const PackedRow& p) const;

  std::size_t n_ = 0;
  std::size_t words_ = 0;
  std::vector<PackedRow> destab_, stab_;
};

}  // namespace fusim

#endif
