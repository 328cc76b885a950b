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

#ifndef FUSIM_REGISTER_HPP
#define FUSIM_REGISTER_HPP

#include <optional>
#include <string>
#include <vector>

#include "fusim/dense_state.hpp"
#include "fusim/tableau.hpp"

namespace fusim {

enum class Backend { Dense, Tableau };
enum class Basis { X, Y, Z };
enum class SpinInit { Zero, Plus, PairBell };
enum class HeraldMode { Sample, ForceSuccess, ForceFailure };

char basis_char(Basis b);
Basis basis_from_char(char c);

enum class QubitKind { Spin, Photon };

struct QubitId {
  QubitKind kind;
  int emitter;         // 1 or 2
  int emission_order;  // photons: 1-based global emission count; spins: 0
  std::string label() const;
};

// Photon polarization convention: |0> = R, |1> = L (spin |1,+1> emits R).
enum class Polarization { R, L };

struct HeraldOutcome {
  bool success = false;
  Polarization pattern_first = Polarization::R;
  Polarization pattern_second = Polarization::L;
  double probability = 0.0;
};

// Two-emitter quantum register over a dense or tableau backend. Qubit slots
// are register positions: the two spins live at slots 0 and 1 and never
// move; photons append at the end and herald photons are removed again by
// fuse().
class QuantumState {
 public:
  QuantumState() = default;
  static QuantumState make(Backend backend, SpinInit init, int dense_limit = DenseState::kDefaultMaxQubits);

  Backend backend() const { return backend_; }
  int num_qubits() const;
  const std::vector<QubitId>& order() const { return order_; }
  int photon_count() const { return photons_emitted_; }

  // Gate set. theta/phase conventions follow DenseState::apply_rotation.
  // On the tableau backend non-Clifford angles raise NonCliffordOnTableau.
  void apply_rotation(int slot, double theta, double phase = 0.0);
  void apply_hadamard(int slot);
  void apply_pauli_letter(int slot, PauliLetter l);
  void apply_phase_z(int slot, double phi);
  void apply_cnot(int c, int t);
  void apply_cz(int a, int b);

  // Emission isometry |b>_spin -> |b>_spin |b>_photon. Returns the slot of
  // the new photon.
  int emit_photon(int spin_slot);

  // Cavity-assisted fusion: emits one photon from each spin, measures the
  // photon-pair polarization parity (success = one R and one L click),
  // removes the herald photons and returns the branch record.
  HeraldOutcome fuse(Rng& rng, HeraldMode mode = HeraldMode::Sample);

  struct Measurement {
    int outcome;  // +1 / -1
    double probability;
  };
  // Projective measurement in the given basis; collapses the state. When
  // drop is set the qubit is removed from the register afterwards.
  Measurement measure(int slot, Basis basis, Rng& rng, bool drop = false, int forced = 0);

  double expectation(const PauliString& p) const;
  std::vector<double> expectations(const std::vector<PauliString>& ps) const;

  // Dense-backend helpers. state() throws on the tableau backend;
  // to_dense() reconstructs a dense vector from the tableau (test-sized
  // registers only).
  const DenseState& state() const;
  DenseState& state();
  const Tableau& tableau() const;
  DenseState to_dense() const;

  double overlap_abs(const DenseState& reference) const;

 private:
  void ensure_clifford_angle(double angle, const char* what) const;
  void apply_clifford_phase(int slot, int quarter_turns);
  void apply_clifford_rotation(int slot, int quarter_turns);

  Backend backend_ = Backend::Dense;
  DenseState dense_;
  Tableau tab_;
  std::vector<QubitId> order_;
  int photons_emitted_ = 0;
  int dense_limit_ = DenseState::kDefaultMaxQubits;
};

// True when every rotation/phase angle in a circuit is a multiple of pi/2,
// making the whole circuit representable on the tableau backend.
bool is_clifford_angle(double angle, double tol = 1e-9);

}  // namespace fusim

#endif
