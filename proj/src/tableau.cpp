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

#include "fusim/tableau.hpp"

#include <bit>
#include <cassert>

#include "fusim/errors.hpp"

namespace fusim {

namespace {
inline int pop(std::uint64_t w) { return std::popcount(w); }
}  // namespace

void PackedRow::set_xbit(std::size_t q, bool v) {
  const std::uint64_t m = 1ull << (q & 63);
  if (v)
    x[q >> 6] |= m;
  else
    x[q >> 6] &= ~m;
}

void PackedRow::set_zbit(std::size_t q, bool v) {
  const std::uint64_t m = 1ull << (q & 63);
  if (v)
    z[q >> 6] |= m;
  else
    z[q >> 6] &= ~m;
}

bool PackedRow::commutes_with(const PackedRow& other) const {
  int anti = 0;
  for (std::size_t w = 0; w < x.size(); ++w)
    anti += pop(x[w] & other.z[w]) + pop(z[w] & other.x[w]);
  return anti % 2 == 0;
}

void PackedRow::multiply_right(const PackedRow& other) {
  // Phase exponent of i: |Y1| + |Y2| - |Y3| + 2*popcount(z1 & x2), mod 4.
  int exp4 = 0;
  for (std::size_t w = 0; w < x.size(); ++w) {
    const std::uint64_t x1 = x[w], z1 = z[w], x2 = other.x[w], z2 = other.z[w];
    const std::uint64_t x3 = x1 ^ x2, z3 = z1 ^ z2;
    exp4 += pop(x1 & z1) + pop(x2 & z2) - pop(x3 & z3) + 2 * pop(z1 & x2);
    x[w] = x3;
    z[w] = z3;
  }
  exp4 = ((exp4 % 4) + 4) % 4;
  assert(exp4 % 2 == 0 && "Pauli product with imaginary sign");
  if (exp4 == 2) neg = !neg;
  if (other.neg) neg = !neg;
}

PauliString PackedRow::to_pauli(std::size_t n) const {
  PauliString p(n, neg ? -1 : +1);
  for (std::size_t q = 0; q < n; ++q) {
    const bool xb = xbit(q), zb = zbit(q);
    if (xb && zb)
      p.set(q, PauliLetter::Y);
    else if (xb)
      p.set(q, PauliLetter::X);
    else if (zb)
      p.set(q, PauliLetter::Z);
  }
  return p;
}

PackedRow PackedRow::from_pauli(const PauliString& p, std::size_t words) {
  PackedRow r(words);
  r.neg = p.sign() < 0;
  for (std::size_t q = 0; q < p.num_qubits(); ++q) {
    switch (p.at(q)) {
      case PauliLetter::I: break;
      case PauliLetter::X: r.set_xbit(q, true); break;
      case PauliLetter::Y: r.set_xbit(q, true); r.set_zbit(q, true); break;
      case PauliLetter::Z: r.set_zbit(q, true); break;
    }
  }
  return r;
}

Tableau::Tableau(std::size_t n) : n_(n), words_((n + 63) / 64) {
  destab_.assign(n, PackedRow(words_));
  stab_.assign(n, PackedRow(words_));
  for (std::size_t i = 0; i < n; ++i) {
    destab_[i].set_xbit(i, true);
    stab_[i].set_zbit(i, true);
  }
}

void Tableau::apply_h(std::size_t q) {
  const std::size_t w = q >> 6;
  const std::uint64_t m = 1ull << (q & 63);
  for (auto* rows : {&destab_, &stab_})
    for (auto& r : *rows) {
      const bool xb = r.x[w] & m, zb = r.z[w] & m;
      if (xb && zb) r.neg = !r.neg;
      if (xb != zb) {
        r.x[w] ^= m;
        r.z[w] ^= m;
      }
    }
}

void Tableau::apply_s(std::size_t q) {
  const std::size_t w = q >> 6;
  const std::uint64_t m = 1ull << (q & 63);
  for (auto* rows : {&destab_, &stab_})
    for (auto& r : *rows) {
      const bool xb = r.x[w] & m, zb = r.z[w] & m;
      if (xb && zb) r.neg = !r.neg;
      if (xb) r.z[w] ^= m;
    }
}

void Tableau::apply_sdg(std::size_t q) {
  apply_s(q);
  apply_z(q);
}

void Tableau::apply_x(std::size_t q) {
  const std::size_t w = q >> 6;
  const std::uint64_t m = 1ull << (q & 63);
  for (auto* rows : {&destab_, &stab_})
    for (auto& r : *rows)
      if (r.z[w] & m) r.neg = !r.neg;
}

void Tableau::apply_z(std::size_t q) {
  const std::size_t w = q >> 6;
  const std::uint64_t m = 1ull << (q & 63);
  for (auto* rows : {&destab_, &stab_})
    for (auto& r : *rows)
      if (r.x[w] & m) r.neg = !r.neg;
}

void Tableau::apply_y(std::size_t q) {
  const std::size_t w = q >> 6;
  const std::uint64_t m = 1ull << (q & 63);
  for (auto* rows : {&destab_, &stab_})
    for (auto& r : *rows)
      if (bool(r.x[w] & m) != bool(r.z[w] & m)) r.neg = !r.neg;
}

void Tableau::apply_cnot(std::size_t c, std::size_t t) {
  const std::size_t wc = c >> 6, wt = t >> 6;
  const std::uint64_t mc = 1ull << (c & 63), mt = 1ull << (t & 63);
  for (auto* rows : {&destab_, &stab_})
    for (auto& r : *rows) {
      const bool xc = r.x[wc] & mc, zc = r.z[wc] & mc;
      const bool xt = r.x[wt] & mt, zt = r.z[wt] & mt;
      if (xc && zt && (xt == zc)) r.neg = !r.neg;
      if (xc) r.x[wt] ^= mt;
      if (zt) r.z[wc] ^= mc;
    }
}

void Tableau::apply_cz(std::size_t a, std::size_t b) {
  apply_h(b);
  apply_cnot(a, b);
  apply_h(b);
}

void Tableau::apply_pauli(const PauliString& p) {
  for (std::size_t q = 0; q < p.num_qubits(); ++q) {
    switch (p.at(q)) {
      case PauliLetter::I: break;
      case PauliLetter::X: apply_x(q); break;
      case PauliLetter::Y: apply_y(q); break;
      case PauliLetter::Z: apply_z(q); break;
    }
  }
  // A global -1 on a Pauli gate is unobservable; nothing to track.
}

void Tableau::append_qubit() {
  const std::size_t q = n_;
  ++n_;
  const std::size_t new_words = (n_ + 63) / 64;
  if (new_words != words_) {
    words_ = new_words;
    for (auto* rows : {&destab_, &stab_})
      for (auto& r : *rows) {
        r.x.resize(words_, 0);
        r.z.resize(words_, 0);
      }
  }
  destab_.emplace_back(words_);
  stab_.emplace_back(words_);
  destab_.back().set_xbit(q, true);
  stab_.back().set_zbit(q, true);
}

bool Tableau::any_stab_anticommutes(const PackedRow& p, std::size_t* row) const {
  for (std::size_t i = 0; i < n_; ++i)
    if (!stab_[i].commutes_with(p)) {
      if (row) *row = i;
      return true;
    }
  return false;
}

PackedRow Tableau::group_member_matching(const PackedRow& p) const {
  PackedRow acc(words_);
  for (std::size_t i = 0; i < n_; ++i)
    if (!destab_[i].commutes_with(p)) acc.multiply_right(stab_[i]);
  return acc;
}

Tableau::MeasureResult Tableau::measure_z(std::size_t q, Rng& rng, int forced) {
  PauliString zq = PauliString::single(n_, q, PauliLetter::Z);
  return measure_pauli(zq, rng, forced);
}

Tableau::MeasureResult Tableau::measure_pauli(const PauliString& p, Rng& rng, int forced) {
  const PackedRow target = PackedRow::from_pauli(p, words_);
  std::size_t pivot = 0;
  if (any_stab_anticommutes(target, &pivot)) {
    // Random outcome: both branches have probability 1/2.
    int outcome = forced;
    if (outcome == 0) outcome = (rng() & 1) ? -1 : +1;
    for (std::size_t i = 0; i < n_; ++i) {
      if (i != pivot && !stab_[i].commutes_with(target)) stab_[i].multiply_right(stab_[pivot]);
      if (!destab_[i].commutes_with(target)) {
        if (i == pivot)
          continue;  // replaced below
        destab_[i].multiply_right(stab_[pivot]);
      }
    }
    destab_[pivot] = stab_[pivot];
    // The post-measurement stabilizer is outcome * p.
    stab_[pivot] = target;
    stab_[pivot].neg = (outcome < 0) ^ (p.sign() < 0);
    return {outcome, true};
  }
  // Deterministic: p (up to sign) is in the stabilizer group.
  PackedRow member = group_member_matching(target);
  // member equals +-p as an operator; compare signs.
  for (std::size_t w = 0; w < words_; ++w)
    if (member.x[w] != target.x[w] || member.z[w] != target.z[w])
      throw SimError("measure_pauli: observable is not in the stabilizer group closure");
  const int outcome = (member.neg == (p.sign() < 0)) ? +1 : -1;
  if (forced != 0 && forced != outcome)
    throw ZeroProbabilityBranch("forced Pauli measurement outcome has probability 0");
  return {outcome, false};
}

int Tableau::expectation(const PauliString& p) const {
  const PackedRow target = PackedRow::from_pauli(p, words_);
  if (any_stab_anticommutes(target, nullptr)) return 0;
  PackedRow member = group_member_matching(target);
  for (std::size_t w = 0; w < words_; ++w)
    if (member.x[w] != target.x[w] || member.z[w] != target.z[w])
      throw SimError("expectation: observable is not in the stabilizer group closure");
  return (member.neg == (p.sign() < 0)) ? +1 : -1;
}

int Tableau::drop_qubit(std::size_t q) {
  // The qubit must have a deterministic Z value: no stabilizer may touch
  // its X column.
  for (const auto& r : stab_)
    if (r.xbit(q)) throw SimError("drop_qubit: qubit " + std::to_string(q) + " not collapsed");

  // Express +-Z_q as a product of stabilizer rows (destabilizer pairing) and
  // swap it in as a generator.
  PackedRow zq(words_);
  zq.set_zbit(q, true);
  std::size_t j = n_;
  PackedRow acc(words_);
  for (std::size_t i = 0; i < n_; ++i)
    if (!destab_[i].commutes_with(zq)) {
      acc.multiply_right(stab_[i]);
      j = i;
    }
  if (j == n_) throw SimError("drop_qubit: Z value of qubit is not determined");
  const int outcome = acc.neg ? -1 : +1;
  stab_[j] = acc;  // = +-Z_q exactly

  // Restore destabilizer relations against the new generator.
  for (std::size_t i = 0; i < n_; ++i) {
    if (i != j && destab_[i].xbit(q)) destab_[i].multiply_right(destab_[j]);
  }
  // Clear the Z column everywhere else by multiplying with +-Z_q.
  for (std::size_t i = 0; i < n_; ++i) {
    if (i != j && stab_[i].zbit(q)) stab_[i].multiply_right(stab_[j]);
    if (i != j && destab_[i].zbit(q)) destab_[i].multiply_right(stab_[j]);
  }

  // Remove pair j and excise the column.
  stab_.erase(stab_.begin() + j);
  destab_.erase(destab_.begin() + j);
  const std::size_t new_n = n_ - 1;
  const std::size_t new_words = (new_n + 63) / 64;
  for (auto* rows : {&destab_, &stab_})
    for (auto& r : *rows) {
      PackedRow nr(new_words);
      nr.neg = r.neg;
      for (std::size_t c = 0, nc = 0; c < n_; ++c) {
        if (c == q) continue;
        nr.set_xbit(nc, r.xbit(c));
        nr.set_zbit(nc, r.zbit(c));
        ++nc;
      }
      r = std::move(nr);
    }
  n_ = new_n;
  words_ = new_words;
  return outcome;
}

std::vector<PauliString> Tableau::stabilizer_rows() const {
  std::vector<PauliString> out;
  out.reserve(n_);
  for (const auto& r : stab_) out.push_back(r.to_pauli(n_));
  return out;
}

std::string Tableau::str() const {
  std::string s;
  for (const auto& r : stab_) {
    s += r.to_pauli(n_).str();
    s += '\n';
  }
  return s;
}

}  // namespace fusim
