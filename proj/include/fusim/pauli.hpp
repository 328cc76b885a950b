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

#ifndef FUSIM_PAULI_HPP
#define FUSIM_PAULI_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace fusim {

enum class PauliLetter : uint8_t { I = 0, X = 1, Y = 2, Z = 3 };

char to_char(PauliLetter l);
PauliLetter letter_from_char(char c);

// Hermitian n-qubit Pauli operator with a real global sign.
// Signs are restricted to +1/-1; that is all the stabilizer formalism
// of this library ever produces.
class PauliString {
 public:
  PauliString() = default;
  explicit PauliString(std::size_t n) : letters_(n, PauliLetter::I) {}
  PauliString(std::size_t n, int sign) : sign_(sign), letters_(n, PauliLetter::I) {}

  static PauliString single(std::size_t n, std::size_t q, PauliLetter l, int sign = +1);
  // Parse "+XZIY" / "-ZZ" / "XIX".
  static PauliString parse(const std::string& text);

  std::size_t num_qubits() const { return letters_.size(); }
  int sign() const { return sign_; }
  void set_sign(int s) { sign_ = s; }
  PauliLetter at(std::size_t q) const { return letters_[q]; }
  void set(std::size_t q, PauliLetter l) { letters_[q] = l; }

  bool is_identity() const;
  std::size_t weight() const;
  std::vector<std::size_t> support() const;

  bool commutes_with(const PauliString& other) const;

  // In-place product this <- this * other. Requires the result to be
  // Hermitian with a real sign (i.e. the anti-commuting letter count is
  // even); asserts otherwise.
  void multiply_right(const PauliString& other);

  std::string str() const;

  bool operator==(const PauliString& other) const {
    return sign_ == other.sign_ && letters_ == other.letters_;
  }

 private:
  int sign_ = +1;
  std::vector<PauliLetter> letters_;
};

}  // namespace fusim

#endif
