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

#include "fusim/errors.hpp"
#include "fusim/pauli.hpp"

using namespace fusim;

TEST_CASE("parse and format round trip") {
  for (const char* s : {"+XZIY", "-ZZ", "+I", "-XXXX"}) {
    CHECK(PauliString::parse(s).str() == s);
  }
  CHECK(PauliString::parse("XIZ").str() == "+XIZ");
  CHECK_THROWS_AS(PauliString::parse("+AB"), ParseError);
}

TEST_CASE("commutation") {
  const auto xx = PauliString::parse("XX");
  const auto zz = PauliString::parse("ZZ");
  const auto zi = PauliString::parse("ZI");
  const auto yy = PauliString::parse("YY");
  CHECK(xx.commutes_with(zz));
  CHECK(!xx.commutes_with(zi));
  CHECK(xx.commutes_with(yy));
  CHECK(zz.commutes_with(yy));
}

TEST_CASE("products of commuting strings keep real signs") {
  auto xx = PauliString::parse("XX");
  xx.multiply_right(PauliString::parse("ZZ"));
  CHECK(xx.str() == "-YY");

  auto a = PauliString::parse("+XZZ");
  a.multiply_right(PauliString::parse("+ZXZ"));
  CHECK(a.str() == "+YYI");

  auto self = PauliString::parse("-XZX");
  self.multiply_right(PauliString::parse("-XZX"));
  CHECK(self.str() == "+III");
}

TEST_CASE("weight and support") {
  const auto p = PauliString::parse("+XIZY");
  CHECK(p.weight() == 3);
  CHECK(p.support() == std::vector<std::size_t>{0, 2, 3});
  CHECK(!p.is_identity());
  CHECK(PauliString(4).is_identity());
}
