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

#include "fusim/dense_state.hpp"

#include <cassert>
#include <cmath>

#include "fusim/errors.hpp"

namespace fusim {

namespace {
constexpr double kDropTol = 1e-9;
const double kInvSqrt2 = 1.0 / std::sqrt(2.0);
}  // namespace

DenseState::DenseState(int n, int max_qubits) : n_(n), max_qubits_(max_qubits) {
  if (n > max_qubits_)
    throw TooLarge("dense register of " + std::to_string(n) + " qubits exceeds limit " +
                   std::to_string(max_qubits_));
  amps_.assign(1ull << n, cplx(0.0, 0.0));
  amps_[0] = 1.0;
}

void DenseState::apply_single(int q, const std::array<cplx, 4>& u) {
  const std::uint64_t s = stride(q);
  const std::uint64_t size = amps_.size();
  for (std::uint64_t base = 0; base < size; base += 2 * s) {
    for (std::uint64_t i = base; i < base + s; ++i) {
      const cplx a0 = amps_[i], a1 = amps_[i + s];
      amps_[i] = u[0] * a0 + u[1] * a1;
      amps_[i + s] = u[2] * a0 + u[3] * a1;
    }
  }
}

void DenseState::apply_h(int q) {
  apply_single(q, {kInvSqrt2, kInvSqrt2, kInvSqrt2, -kInvSqrt2});
}

void DenseState::apply_x(int q) {
  const std::uint64_t s = stride(q);
  for (std::uint64_t base = 0; base < amps_.size(); base += 2 * s)
    for (std::uint64_t i = base; i < base + s; ++i) std::swap(amps_[i], amps_[i + s]);
}

void DenseState::apply_y(int q) {
  const std::uint64_t s = stride(q);
  for (std::uint64_t base = 0; base < amps_.size(); base += 2 * s)
    for (std::uint64_t i = base; i < base + s; ++i) {
      const cplx a0 = amps_[i], a1 = amps_[i + s];
      amps_[i] = cplx(0, -1) * a1;
      amps_[i + s] = cplx(0, 1) * a0;
    }
}

void DenseState::apply_z(int q) {
  const std::uint64_t s = stride(q);
  for (std::uint64_t base = s; base < amps_.size(); base += 2 * s)
    for (std::uint64_t i = base; i < base + s; ++i) amps_[i] = -amps_[i];
}

void DenseState::apply_phase_z(int q, double phi) {
  const cplx f = std::polar(1.0, phi);
  const std::uint64_t s = stride(q);
  for (std::uint64_t base = s; base < amps_.size(); base += 2 * s)
    for (std::uint64_t i = base; i < base + s; ++i) amps_[i] *= f;
}

void DenseState::apply_rotation(int q, double theta, double phase) {
  const double c = std::cos(theta / 2), sn = std::sin(theta / 2);
  if (phase == 0.0) {
    apply_single(q, {cplx(c), cplx(-sn), cplx(sn), cplx(c)});
  } else {
    const cplx e = std::polar(1.0, phase);
    apply_single(q, {cplx(c), -sn * e, sn * std::conj(e), cplx(c)});
  }
}

void DenseState::apply_cnot(int control, int target) {
  const std::uint64_t sc = stride(control), st = stride(target);
  for (std::uint64_t i = 0; i < amps_.size(); ++i) {
    if ((i & sc) && !(i & st)) std::swap(amps_[i], amps_[i | st]);
  }
}

void DenseState::apply_cz(int a, int b) {
  const std::uint64_t sa = stride(a), sb = stride(b);
  for (std::uint64_t i = 0; i < amps_.size(); ++i)
    if ((i & sa) && (i & sb)) amps_[i] = -amps_[i];
}

void DenseState::apply_pauli(const PauliString& p) {
  assert(static_cast<int>(p.num_qubits()) == n_);
  for (int q = 0; q < n_; ++q) {
    switch (p.at(q)) {
      case PauliLetter::I: break;
      case PauliLetter::X: apply_x(q); break;
      case PauliLetter::Y: apply_y(q); break;
      case PauliLetter::Z: apply_z(q); break;
    }
  }
  if (p.sign() < 0)
    for (auto& a : amps_) a = -a;
}

void DenseState::append_qubit() {
  if (n_ + 1 > max_qubits_)
    throw TooLarge("dense register would exceed limit of " + std::to_string(max_qubits_) +
                   " qubits");
  std::vector<cplx> next(amps_.size() * 2, cplx(0.0, 0.0));
  for (std::uint64_t i = 0; i < amps_.size(); ++i) next[2 * i] = amps_[i];
  amps_ = std::move(next);
  ++n_;
}

void DenseState::drop_qubit(int q) {
  const double p1 = prob_one(q);
  int value;
  if (p1 < kDropTol)
    value = 0;
  else if (p1 > 1.0 - kDropTol)
    value = 1;
  else
    throw SimError("drop_qubit: qubit " + std::to_string(q) + " is not in a definite state");
  const std::uint64_t s = stride(q);
  std::vector<cplx> next(amps_.size() / 2);
  std::uint64_t j = 0;
  for (std::uint64_t base = 0; base < amps_.size(); base += 2 * s)
    for (std::uint64_t i = base; i < base + s; ++i) next[j++] = amps_[i + (value ? s : 0)];
  amps_ = std::move(next);
  --n_;
  normalize();
}

double DenseState::norm_sq() const {
  double t = 0;
  for (const auto& a : amps_) t += std::norm(a);
  return t;
}

void DenseState::normalize() {
  const double n = std::sqrt(norm_sq());
  if (n <= 0) throw SimError("cannot normalize zero state");
  for (auto& a : amps_) a /= n;
}

double DenseState::prob_one(int q) const {
  const std::uint64_t s = stride(q);
  double t = 0;
  for (std::uint64_t base = s; base < amps_.size(); base += 2 * s)
    for (std::uint64_t i = base; i < base + s; ++i) t += std::norm(amps_[i]);
  return t;
}

int DenseState::measure_z(int q, Rng& rng) {
  const double p1 = prob_one(q);
  std::uniform_real_distribution<double> dist(0.0, 1.0);
  const int bit = dist(rng) < p1 ? 1 : 0;
  project_z(q, bit ? -1 : +1);
  return bit ? -1 : +1;
}

double DenseState::project_z(int q, int outcome) {
  const int keep_bit = outcome < 0 ? 1 : 0;
  const std::uint64_t s = stride(q);
  double p = 0;
  for (std::uint64_t i = 0; i < amps_.size(); ++i) {
    const int bit = (i & s) ? 1 : 0;
    if (bit != keep_bit)
      amps_[i] = 0;
    else
      p += std::norm(amps_[i]);
  }
  if (p <= 0) throw ZeroProbabilityBranch("Z projection onto zero-probability outcome");
  const double inv = 1.0 / std::sqrt(p);
  for (auto& a : amps_) a *= inv;
  return p;
}

double DenseState::project_parity(int q1, int q2, bool odd, bool renorm) {
  const std::uint64_t s1 = stride(q1), s2 = stride(q2);
  double p = 0;
  for (std::uint64_t i = 0; i < amps_.size(); ++i) {
    const bool is_odd = (((i & s1) != 0) ^ ((i & s2) != 0));
    if (is_odd != odd)
      amps_[i] = 0;
    else
      p += std::norm(amps_[i]);
  }
  if (renorm) {
    if (p <= 0) throw ZeroProbabilityBranch("parity projection onto zero-probability branch");
    const double inv = 1.0 / std::sqrt(p);
    for (auto& a : amps_) a *= inv;
  }
  return p;
}

double DenseState::expectation(const PauliString& p) const {
  DenseState tmp = *this;
  tmp.apply_pauli(p);
  return overlap(tmp).real();
}

cplx DenseState::overlap(const DenseState& other) const {
  assert(n_ == other.n_);
  cplx t = 0;
  for (std::uint64_t i = 0; i < amps_.size(); ++i) t += std::conj(amps_[i]) * other.amps_[i];
  return t;
}

DenseState DenseState::random_state(int n, Rng& rng, int max_qubits) {
  DenseState st(n, max_qubits);
  std::normal_distribution<double> g(0.0, 1.0);
  for (auto& a : st.amps_) a = cplx(g(rng), g(rng));
  st.normalize();
  return st;
}

}  // namespace fusim
