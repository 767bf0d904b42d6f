// Copyright 2026 The Poncelet Loci Authors
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

// Arithmetic expressions over triangle quantities, used for barycentric
// weight functions in the center registry.
//
// Grammar (whitespace ignored):
//   expr   := term (('+' | '-') term)*
//   term   := unary (('*' | '/') unary)*
//   unary  := ('+' | '-') unary | power
//   power  := atom ('^' unary)?
//   atom   := number | name | func '(' expr ')' | '(' expr ')'
//
// Cyclic names (rotated per vertex): s1 s2 s3 (alias a b c) are sidelengths,
// t1 t2 t3 (alias A B C) the internal angles in radians. Symmetric names:
// area, omega (Brocard angle), R, r, pi. Functions: sin cos tan cot sec csc
// sqrt abs. The Unicode minus sign U+2212 is accepted for '-'.

#ifndef PONCELET_CENTER_EXPR_HPP_
#define PONCELET_CENTER_EXPR_HPP_

#include <array>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace poncelet {

struct WeightVars {
  std::array<double, 3> s{};
  std::array<double, 3> t{};
  double area = 0.0;
  double omega = 0.0;
  double circumradius = 0.0;
  double inradius = 0.0;
};

class WeightExpr {
 public:
  // Throws ParseError carrying the 1-based column of the offending token.
  static WeightExpr parse(std::string_view text);

  double evaluate(const WeightVars& vars) const;
  const std::string& source() const { return source_; }

 private:
  enum class Op : std::uint8_t {
    kConst, kVar, kNeg, kAdd, kSub, kMul, kDiv, kPow,
    kSin, kCos, kTan, kCot, kSec, kCsc, kSqrt, kAbs,
  };
  struct Instr {
    Op op;
    std::uint8_t var = 0;
    double value = 0.0;
  };
  friend class ExprParser;

  std::string source_;
  std::vector<Instr> code_;  // postfix
  std::size_t max_depth_ = 0;
};

}  // namespace poncelet

#endif  // PONCELET_CENTER_EXPR_HPP_
