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

#include "fusim/pauli.hpp"

#include <cassert>

#include "fusim/errors.hpp"

namespace fusim {

char to_char(PauliLetter l) {
  switch (l) {
    case PauliLetter::I: return 'I';
    case PauliLetter::X: return 'X';
    case PauliLetter::Y: return 'Y';
    case PauliLetter::Z: return 'Z';
  }
  return '?';
}

PauliLetter letter_from_char(char c) {
  switch (c) {
    case 'I': return PauliLetter::I;
    case 'X': return PauliLetter::X;
    case 'Y': return PauliLetter::Y;
    case 'Z': return PauliLetter::Z;
    default: throw ParseError(std::string("bad Pauli letter '") + c + "'");
  }
}

PauliString PauliString::single(std::size_t n, std::size_t q, PauliLetter l, int sign) {
  PauliString p(n);
  p.sign_ = sign;
  p.letters_[q] = l;
  return p;
}

PauliString PauliString::parse(const std::string& text) {
  std::size_t i = 0;
  int sign = +1;
  if (i < text.size() && (text[i] == '+' || text[i] == '-')) {
    sign = text[i] == '-' ? -1 : +1;
    ++i;
  }
  PauliString p(text.size() - i);
  p.sign_ = sign;
  for (std::size_t q = 0; i < text.size(); ++i, ++q) p.letters_[q] = letter_from_char(text[i]);
  return p;
}

bool PauliString::is_identity() const {
  for (auto l : letters_)
    if (l != PauliLetter::I) return false;
  return true;
}

std::size_t PauliString::weight() const {
  std::size_t w = 0;
  for (auto l : letters_) w += l != PauliLetter::I;
  return w;
}

std::vector<std::size_t> PauliString::support() const {
  std::vector<std::size_t> s;
  for (std::size_t q = 0; q < letters_.size(); ++q)
    if (letters_[q] != PauliLetter::I) s.push_back(q);
  return s;
}

bool PauliString::commutes_with(const PauliString& other) const {
  assert(num_qubits() == other.num_qubits());
  int anti = 0;
  for (std::size_t q = 0; q < letters_.size(); ++q) {
    PauliLetter a = letters_[q], b = other.letters_[q];
    if (a != PauliLetter::I && b != PauliLetter::I && a != b) ++anti;
  }
  return anti % 2 == 0;
}

void PauliString::multiply_right(const PauliString& other) {
  assert(num_qubits() == other.num_qubits());
  // Per-qubit X/Z bit arithmetic. With rows meaning i^(#Y) * prod X^x Z^z,
  // the product phase exponent is |y1| + |y2| - |y3| + 2*(z1&x2), mod 4.
  int exp4 = 0;
  for (std::size_t q = 0; q < letters_.size(); ++q) {
    int x1 = letters_[q] == PauliLetter::X || letters_[q] == PauliLetter::Y;
    int z1 = letters_[q] == PauliLetter::Z || letters_[q] == PauliLetter::Y;
    int x2 = other.letters_[q] == PauliLetter::X || other.letters_[q] == PauliLetter::Y;
    int z2 = other.letters_[q] == PauliLetter::Z || other.letters_[q] == PauliLetter::Y;
    int x3 = x1 ^ x2, z3 = z1 ^ z2;
    exp4 += (x1 & z1) + (x2 & z2) - (x3 & z3) + 2 * (z1 & x2);
    static constexpr PauliLetter table[2][2] = {
        {PauliLetter::I, PauliLetter::Z}, {PauliLetter::X, PauliLetter::Y}};
    letters_[q] = table[x3][z3];
  }
  exp4 = ((exp4 % 4) + 4) % 4;
  assert(exp4 % 2 == 0 && "product is not Hermitian with real sign");
  if (exp4 == 2) sign_ = -sign_;
  sign_ *= other.sign_;
}

std::string PauliString::str() const {
  std::string s;
  s.reserve(letters_.size() + 1);
  s.push_back(sign_ < 0 ? '-' : '+');
  for (auto l : letters_) s.push_back(to_char(l));
  return s;
}

}  // namespace fusim
