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

#include "fusim/register.hpp"

#include <cassert>
#include <cmath>

#include "fusim/errors.hpp"

namespace fusim {

namespace {
constexpr double kPi = 3.14159265358979323846;
constexpr double kAngleTol = 1e-9;

// Quarter turns of an angle, or -1 when it is not a multiple of pi/2.
int quarter_turns(double angle) {
  const double q = angle / (kPi / 2);
  const double r = std::round(q);
  if (std::abs(q - r) > kAngleTol) return -1;
  return ((static_cast<long long>(r) % 4) + 4) % 4;
}
}  // namespace

bool is_clifford_angle(double angle, double tol) {
  const double q = angle / (kPi / 2);
  return std::abs(q - std::round(q)) <= tol;
}

char basis_char(Basis b) {
  switch (b) {
    case Basis::X: return 'X';
    case Basis::Y: return 'Y';
    case Basis::Z: return 'Z';
  }
  return '?';
}

Basis basis_from_char(char c) {
  switch (c) {
    case 'X': return Basis::X;
    case 'Y': return Basis::Y;
    case 'Z': return Basis::Z;
    default: throw ParseError(std::string("bad basis '") + c + "'");
  }
}

std::string QubitId::label() const {
  if (kind == QubitKind::Spin) return "s" + std::to_string(emitter);
  return "p" + std::to_string(emission_order);
}

QuantumState QuantumState::make(Backend backend, SpinInit init, int dense_limit) {
  QuantumState st;
  st.backend_ = backend;
  st.dense_limit_ = dense_limit;
  st.order_ = {{QubitKind::Spin, 1, 0}, {QubitKind::Spin, 2, 0}};
  if (backend == Backend::Dense)
    st.dense_ = DenseState(2, dense_limit);
  else
    st.tab_ = Tableau(2);
  switch (init) {
    case SpinInit::Zero:
      break;
    case SpinInit::Plus:
      st.apply_hadamard(0);
      st.apply_hadamard(1);
      break;
    case SpinInit::PairBell:
      // (|01> + |10>)/sqrt(2)
      st.apply_hadamard(0);
      st.apply_cnot(0, 1);
      st.apply_pauli_letter(1, PauliLetter::X);
      break;
  }
  return st;
}

int QuantumState::num_qubits() const {
  return backend_ == Backend::Dense ? dense_.num_qubits() : static_cast<int>(tab_.num_qubits());
}

void QuantumState::ensure_clifford_angle(double angle, const char* what) const {
  if (!is_clifford_angle(angle))
    throw NonCliffordOnTableau(std::string(what) + " with angle " + std::to_string(angle) +
                               " is not Clifford; use the dense backend");
}

void QuantumState::apply_clifford_phase(int slot, int k) {
  for (int i = 0; i < k; ++i) tab_.apply_s(slot);
}

void QuantumState::apply_clifford_rotation(int slot, int k) {
  // Ry(pi/2) = H Z (Z first); Ry(pi) = Y up to global phase.
  switch (k) {
    case 0: break;
    case 1:
      tab_.apply_z(slot);
      tab_.apply_h(slot);
      break;
    case 2: tab_.apply_y(slot); break;
    case 3:
      tab_.apply_h(slot);
      tab_.apply_z(slot);
      break;
  }
}

void QuantumState::apply_rotation(int slot, double theta, double phase) {
  if (backend_ == Backend::Dense) {
    dense_.apply_rotation(slot, theta, phase);
    return;
  }
  ensure_clifford_angle(theta, "rotation");
  if (phase != 0.0) ensure_clifford_angle(phase, "rotation axis phase");
  // R(theta, phase) = PhaseZ(-phase) Ry(theta) PhaseZ(phase).
  const int kp = phase == 0.0 ? 0 : quarter_turns(phase);
  const int kt = quarter_turns(theta);
  apply_clifford_phase(slot, kp);
  apply_clifford_rotation(slot, kt);
  apply_clifford_phase(slot, (4 - kp) % 4);
}

void QuantumState::apply_hadamard(int slot) {
  if (backend_ == Backend::Dense)
    dense_.apply_h(slot);
  else
    tab_.apply_h(slot);
}

void QuantumState::apply_pauli_letter(int slot, PauliLetter l) {
  if (backend_ == Backend::Dense) {
    switch (l) {
      case PauliLetter::I: break;
      case PauliLetter::X: dense_.apply_x(slot); break;
      case PauliLetter::Y: dense_.apply_y(slot); break;
      case PauliLetter::Z: dense_.apply_z(slot); break;
    }
  } else {
    switch (l) {
      case PauliLetter::I: break;
      case PauliLetter::X: tab_.apply_x(slot); break;
      case PauliLetter::Y: tab_.apply_y(slot); break;
      case PauliLetter::Z: tab_.apply_z(slot); break;
    }
  }
}

void QuantumState::apply_phase_z(int slot, double phi) {
  if (backend_ == Backend::Dense) {
    dense_.apply_phase_z(slot, phi);
    return;
  }
  ensure_clifford_angle(phi, "phase_z");
  apply_clifford_phase(slot, quarter_turns(phi));
}

void QuantumState::apply_cnot(int c, int t) {
  if (backend_ == Backend::Dense)
    dense_.apply_cnot(c, t);
  else
    tab_.apply_cnot(c, t);
}

void QuantumState::apply_cz(int a, int b) {
  if (backend_ == Backend::Dense)
    dense_.apply_cz(a, b);
  else
    tab_.apply_cz(a, b);
}

int QuantumState::emit_photon(int spin_slot) {
  assert(order_[spin_slot].kind == QubitKind::Spin);
  const int photon_slot = num_qubits();
  if (backend_ == Backend::Dense)
    dense_.append_qubit();
  else
    tab_.append_qubit();
  ++photons_emitted_;
  order_.push_back({QubitKind::Photon, order_[spin_slot].emitter, photons_emitted_});
  apply_cnot(spin_slot, photon_slot);
  return photon_slot;
}

HeraldOutcome QuantumState::fuse(Rng& rng, HeraldMode mode) {
  const int a = emit_photon(0);
  const int b = emit_photon(1);
  HeraldOutcome out;

  // The click pattern "one photon per detector" measures the photon-pair
  // polarization parity Z_a Z_b without resolving which photon carried R:
  // odd parity heralds success and projects the spins onto {|01>,|10>}.
  bool odd = false;
  if (backend_ == Backend::Dense) {
    DenseState probe = dense_;
    const double p_odd = probe.project_parity(a, b, true, false);
    switch (mode) {
      case HeraldMode::Sample: {
        std::uniform_real_distribution<double> dist(0.0, 1.0);
        odd = dist(rng) < p_odd;
        break;
      }
      case HeraldMode::ForceSuccess:
        if (p_odd < 1e-12)
          throw ZeroProbabilityBranch("fusion success branch has probability 0");
        odd = true;
        break;
      case HeraldMode::ForceFailure:
        if (p_odd > 1.0 - 1e-12)
          throw ZeroProbabilityBranch("fusion failure branch has probability 0");
        odd = false;
        break;
    }
    out.probability = odd ? p_odd : 1.0 - p_odd;
    dense_.project_parity(a, b, odd, true);
  } else {
    PauliString zz(num_qubits());
    zz.set(a, PauliLetter::Z);
    zz.set(b, PauliLetter::Z);
    int forced = 0;
    if (mode == HeraldMode::ForceSuccess) forced = -1;
    if (mode == HeraldMode::ForceFailure) forced = +1;
    const auto r = tab_.measure_pauli(zz, rng, forced);
    odd = r.outcome < 0;
    out.probability = r.was_random ? 0.5 : 1.0;
  }
  out.success = odd;

  // Disentangle the herald photons (they are copies of the spins within
  // every branch) and drop them from the register.
  apply_cnot(0, a);
  apply_cnot(1, b);
  if (backend_ == Backend::Dense) {
    dense_.drop_qubit(b);
    dense_.drop_qubit(a);
  } else {
    tab_.drop_qubit(b);
    tab_.drop_qubit(a);
  }
  order_.erase(order_.begin() + b);
  order_.erase(order_.begin() + a);

  if (odd) {
    out.pattern_first = Polarization::R;
    out.pattern_second = Polarization::L;
  } else {
    // Failure branch: both photons in one detector; resolve RR vs LL by
    // reading one spin (the photons were spin copies).
    const int spin_bit = measure(0, Basis::Z, rng).outcome;
    out.pattern_first = out.pattern_second =
        spin_bit > 0 ? Polarization::R : Polarization::L;
  }
  return out;
}

QuantumState::Measurement QuantumState::measure(int slot, Basis basis, Rng& rng, bool drop,
                                                int forced) {
  // Rotate the observable eigenbasis onto Z, measure, rotate back.
  const auto pre = [&] {
    if (basis == Basis::X) apply_hadamard(slot);
    if (basis == Basis::Y) {
      // V = H Sdg maps Y to Z.
      if (backend_ == Backend::Dense)
        dense_.apply_phase_z(slot, -kPi / 2);
      else
        tab_.apply_sdg(slot);
      apply_hadamard(slot);
    }
  };
  const auto post = [&] {
    if (basis == Basis::X) apply_hadamard(slot);
    if (basis == Basis::Y) {
      apply_hadamard(slot);
      if (backend_ == Backend::Dense)
        dense_.apply_phase_z(slot, kPi / 2);
      else
        tab_.apply_s(slot);
    }
  };

  pre();
  Measurement m{};
  if (backend_ == Backend::Dense) {
    const double p1 = dense_.prob_one(slot);
    int outcome;
    if (forced != 0) {
      outcome = forced;
      const double p = outcome < 0 ? p1 : 1.0 - p1;
      if (p < 1e-12) throw ZeroProbabilityBranch("forced measurement outcome has probability 0");
    } else {
      std::uniform_real_distribution<double> dist(0.0, 1.0);
      outcome = dist(rng) < p1 ? -1 : +1;
    }
    m.outcome = outcome;
    m.probability = outcome < 0 ? p1 : 1.0 - p1;
    dense_.project_z(slot, outcome);
  } else {
    const auto r = tab_.measure_z(slot, rng, forced);
    m.outcome = r.outcome;
    m.probability = r.was_random ? 0.5 : 1.0;
  }
  if (drop) {
    if (backend_ == Backend::Dense)
      dense_.drop_qubit(slot);
    else
      tab_.drop_qubit(slot);
    order_.erase(order_.begin() + slot);
  } else {
    post();
  }
  return m;
}

double QuantumState::expectation(const PauliString& p) const {
  if (backend_ == Backend::Dense) return dense_.expectation(p);
  return static_cast<double>(tab_.expectation(p));
}

std::vector<double> QuantumState::expectations(const std::vector<PauliString>& ps) const {
  std::vector<double> out;
  out.reserve(ps.size());
  for (const auto& p : ps) out.push_back(expectation(p));
  return out;
}

const DenseState& QuantumState::state() const {
  if (backend_ != Backend::Dense) throw SimError("state(): not a dense-backend register");
  return dense_;
}

DenseState& QuantumState::state() {
  if (backend_ != Backend::Dense) throw SimError("state(): not a dense-backend register");
  return dense_;
}

const Tableau& QuantumState::tableau() const {
  if (backend_ != Backend::Tableau) throw SimError("tableau(): not a tableau-backend register");
  return tab_;
}

DenseState QuantumState::to_dense() const {
  if (backend_ == Backend::Dense) return dense_;
  const int n = static_cast<int>(tab_.num_qubits());
  if (n > dense_limit_) throw TooLarge("tableau register too large for dense reconstruction");
  // Apply the stabilizer projector prod (1+S_i)/2 to a fixed seed state.
  Rng rng(0x5eed);
  const auto gens = tab_.stabilizer_rows();
  for (int attempt = 0; attempt < 16; ++attempt) {
    DenseState psi = DenseState::random_state(n, rng, dense_limit_);
    for (const auto& g : gens) {
      DenseState flipped = psi;
      flipped.apply_pauli(g);
      auto& a = psi.amplitudes();
      const auto& b = flipped.amplitudes();
      for (std::size_t i = 0; i < a.size(); ++i) a[i] = 0.5 * (a[i] + b[i]);
    }
    const double nrm = psi.norm_sq();
    if (nrm > 1e-6) {
      for (auto& amp : psi.amplitudes()) amp /= std::sqrt(nrm);
      return psi;
    }
  }
  throw SimError("to_dense: seed states kept annihilating under the projector");
}

double QuantumState::overlap_abs(const DenseState& reference) const {
  DenseState mine = to_dense();
  return std::abs(mine.overlap(reference));
}

}  // namespace fusim
