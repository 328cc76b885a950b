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

#ifndef FUSIM_DENSE_STATE_HPP
#define FUSIM_DENSE_STATE_HPP

#include <array>
#include <complex>
#include <cstdint>
#include <random>
#include <vector>

#include "fusim/pauli.hpp"

namespace fusim {

using cplx = std::complex<double>;
using Rng = std::mt19937_64;

// Dense state-vector register. Qubit q maps to bit (n-1-q) of the amplitude
// index, so kets read left to right: amps[0b01] of a 2-qubit state is the
// |01> amplitude.
class DenseState {
 public:
  static constexpr int kDefaultMaxQubits = 24;

  DenseState() = default;
  explicit DenseState(int n, int max_qubits = kDefaultMaxQubits);

  int num_qubits() const { return n_; }
  int max_qubits() const { return max_qubits_; }
  const std::vector<cplx>& amplitudes() const { return amps_; }
  std::vector<cplx>& amplitudes() { return amps_; }

  void apply_single(int q, const std::array<cplx, 4>& u);  // row-major 2x2
  void apply_h(int q);
  void apply_x(int q);
  void apply_y(int q);
  void apply_z(int q);
  void apply_phase_z(int q, double phi);  // diag(1, e^{i phi})
  // |0> -> cos(t/2)|0> + e^{-i phase} sin(t/2)|1>,
  // |1> -> -e^{i phase} sin(t/2)|0> + cos(t/2)|1>.  phase = 0 is the plain
  // y-axis rotation used throughout the emission protocols.
  void apply_rotation(int q, double theta, double phase = 0.0);
  void apply_cnot(int control, int target);
  void apply_cz(int a, int b);
  void apply_pauli(const PauliString& p);

  // Register growth/shrink. append_qubit adds |0> at the end. drop_qubit
  // requires the qubit to be in a definite computational basis state
  // (within tolerance) and removes it.
  void append_qubit();
  void drop_qubit(int q);

  double norm_sq() const;
  void normalize();

  // Probability that qubit q reads 1 in the Z basis.
  double prob_one(int q) const;
  // Projective Z measurement. Returns outcome in {+1,-1} (+1 for |0>).
  int measure_z(int q, Rng& rng);
  // Collapse onto the given Z outcome; returns the branch probability.
  double project_z(int q, int outcome);
  // Project the pair (q1,q2) onto odd (Z x Z = -1) or even parity.
  // Returns branch probability; leaves the state unnormalized unless
  // renorm is set.
  double project_parity(int q1, int q2, bool odd, bool renorm = true);

  double expectation(const PauliString& p) const;
  cplx overlap(const DenseState& other) const;

  static DenseState random_state(int n, Rng& rng, int max_qubits = kDefaultMaxQubits);

 private:
  std::uint64_t stride(int q) const { return 1ull << (n_ - 1 - q); }

  int n_ = 0;
  int max_qubits_ = kDefaultMaxQubits;
  std::vector<cplx> amps_;
};

}  // namespace fusim

#endif
