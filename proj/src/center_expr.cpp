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

#include "poncelet/center_expr.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <string>

#include "poncelet/errors.hpp"

namespace poncelet {

namespace {

constexpr std::uint8_t kVarS1 = 0;  // 0..2 sides, 3..5 angles
constexpr std::uint8_t kVarT1 = 3;
constexpr std::uint8_t kVarArea = 6;
constexpr std::uint8_t kVarOmega = 7;
constexpr std::uint8_t kVarR = 8;
constexpr std::uint8_t kVarInr = 9;

}  // namespace

class ExprParser {
 public:
  explicit ExprParser(std::string_view text) : text_(text) {}

  WeightExpr run() {
    WeightExpr e;
    e.source_ = std::string(text_);
    out_ = &e;
    skip_ws();
    if (pos_ >= text_.size()) fail("empty expression");
    expr();
    skip_ws();
    if (pos_ < text_.size()) fail("unexpected character");
    e.max_depth_ = max_depth_;
    return e;
  }

 private:
  using Op = WeightExpr::Op;

  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError(msg + " at column " + std::to_string(pos_ + 1), 0,
                     static_cast<int>(pos_ + 1));
  }

  void emit(Op op, std::uint8_t var = 0, double value = 0.0) {
    out_->code_.push_back({op, var, value});
    switch (op) {
      case Op::kConst:
      case Op::kVar:
        ++depth_;
        break;
      case Op::kAdd:
      case Op::kSub:
      case Op::kMul:
      case Op::kDiv:
      case Op::kPow:
        --depth_;
        break;
      default:
        break;
    }
    max_depth_ = std::max(max_depth_, depth_);
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  // Returns '-' for the UTF-8 minus sign and advances past all its bytes.
  char peek() {
    skip_ws();
    if (pos_ >= text_.size()) return '\0';
    if (text_.substr(pos_, 3) == "\xE2\x88\x92") return '-';
    return text_[pos_];
  }
  void advance() { pos_ += text_.substr(pos_, 3) == "\xE2\x88\x92" ? 3 : 1; }

  void expr() {
    term();
    for (char c = peek(); c == '+' || c == '-'; c = peek()) {
      advance();
      term();
      emit(c == '+' ? Op::kAdd : Op::kSub);
    }
  }

  void term() {
    unary();
    for (char c = peek(); c == '*' || c == '/'; c = peek()) {
      advance();
      unary();
      emit(c == '*' ? Op::kMul : Op::kDiv);
    }
  }

  void unary() {
    const char c = peek();
    if (c == '+' || c == '-') {
      advance();
      unary();
      if (c == '-') emit(Op::kNeg);
      return;
    }
    power();
  }

  void power() {
    atom();
    if (peek() == '^') {
      advance();
      unary();
      emit(Op::kPow);
    }
  }

  void atom() {
    const char c = peek();
    if (c == '(') {
      advance();
      expr();
      if (peek() != ')') fail("expected ')'");
      advance();
      return;
    }
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') {
      number();
      return;
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      name();
      return;
    }
    fail(c == '\0' ? "unexpected end of expression" : "unexpected character");
  }

  void number() {
    const char* first = text_.data() + pos_;
    const char* last = text_.data() + text_.size();
    double v = 0.0;
    auto [ptr, ec] = std::from_chars(first, last, v);
    if (ec != std::errc()) fail("malformed number");
    pos_ += static_cast<std::size_t>(ptr - first);
    emit(Op::kConst, 0, v);
  }

  void name() {
    const std::size_t start = pos_;
    while (pos_ < text_.size() &&
           (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
      ++pos_;
    }
    const std::string_view id = text_.substr(start, pos_ - start);
    static constexpr struct { std::string_view name; Op op; } kFuncs[] = {
        {"sin", Op::kSin}, {"cos", Op::kCos}, {"tan", Op::kTan}, {"cot", Op::kCot},
        {"sec", Op::kSec}, {"csc", Op::kCsc}, {"sqrt", Op::kSqrt}, {"abs", Op::kAbs},
    };
    for (const auto& f : kFuncs) {
      if (id == f.name) {
        if (peek() != '(') fail("expected '(' after function name");
        advance();
        expr();
        if (peek() != ')') fail("expected ')'");
        advance();
        emit(f.op);
        return;
      }
    }
    static constexpr struct { std::string_view name; std::uint8_t var; } kVars[] = {
        {"s1", kVarS1}, {"s2", kVarS1 + 1}, {"s3", kVarS1 + 2},
        {"a", kVarS1}, {"b", kVarS1 + 1}, {"c", kVarS1 + 2},
        {"t1", kVarT1}, {"t2", kVarT1 + 1}, {"t3", kVarT1 + 2},
        {"A", kVarT1}, {"B", kVarT1 + 1}, {"C", kVarT1 + 2},
        {"area", kVarArea}, {"omega", kVarOmega}, {"R", kVarR}, {"r", kVarInr},
    };
    for (const auto& v : kVars) {
      if (id == v.name) {
        emit(Op::kVar, v.var);
        return;
      }
    }
    if (id == "pi") {
      emit(Op::kConst, 0, 3.14159265358979323846);
      return;
    }
    pos_ = start;
    fail("unknown name '" + std::string(id) + "'");
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  std::size_t depth_ = 0;
  std::size_t max_depth_ = 0;
  WeightExpr* out_ = nullptr;
};

WeightExpr WeightExpr::parse(std::string_view text) { return ExprParser(text).run(); }

double WeightExpr::evaluate(const WeightVars& vars) const {
  double vals[10] = {vars.s[0], vars.s[1], vars.s[2], vars.t[0], vars.t[1], vars.t[2],
                     vars.area, vars.omega, vars.circumradius, vars.inradius};
  // Expressions in the registry are short; a fixed stack avoids allocation.
  constexpr std::size_t kMaxStack = 64;
  if (max_depth_ > kMaxStack) throw ParseError("expression nests too deeply");
  double st[kMaxStack];
  std::size_t sp = 0;
  for (const Instr& in : code_) {
    switch (in.op) {
      case Op::kConst: st[sp++] = in.value; break;
      case Op::kVar: st[sp++] = vals[in.var]; break;
      case Op::kNeg: st[sp - 1] = -st[sp - 1]; break;
      case Op::kAdd: --sp; st[sp - 1] += st[sp]; break;
      case Op::kSub: --sp; st[sp - 1] -= st[sp]; break;
      case Op::kMul: --sp; st[sp - 1] *= st[sp]; break;
      case Op::kDiv: --sp; st[sp - 1] /= st[sp]; break;
      case Op::kPow: {
        --sp;
        const double e = st[sp];
        double& base = st[sp - 1];
        base = (e == 2.0) ? base * base : std::pow(base, e);
        break;
      }
      case Op::kSin: st[sp - 1] = std::sin(st[sp - 1]); break;
      case Op::kCos: st[sp - 1] = std::cos(st[sp - 1]); break;
      case Op::kTan: st[sp - 1] = std::tan(st[sp - 1]); break;
      case Op::kCot: st[sp - 1] = 1.0 / std::tan(st[sp - 1]); break;
      case Op::kSec: st[sp - 1] = 1.0 / std::cos(st[sp - 1]); break;
      case Op::kCsc: st[sp - 1] = 1.0 / std::sin(st[sp - 1]); break;
      case Op::kSqrt: st[sp - 1] = std::sqrt(st[sp - 1]); break;
      case Op::kAbs: st[sp - 1] = std::abs(st[sp - 1]); break;
    }
  }
  return st[0];
}

}  // namespace poncelet
