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


// The conserved-quantity matrix behind `poncelet verify`.

#ifndef PONCELET_VERIFY_HPP_
#define PONCELET_VERIFY_HPP_

#include <string>
#include <vector>

namespace poncelet {

struct VerifyOptions {
  std::vector<double> ab_sweep{1.2, 1.5, 2.0, 3.0};
  int samples = 720;
  double tol = 1e-7;
  // Relative enlargement of every caustic; a closure negative control.
  double caustic_perturbation = 0.0;
};

struct VerifyCheck {
  std::string group;  // closure, fixed, invariant, negative
  std::string family;
  std::string subject;
  bool pass = false;
  std::string detail;
};

struct VerifyResult {
  std::vector<VerifyCheck> checks;
  // Invariants detected beyond the expected set, one line per family.
  std::vector<std::string> findings;
  bool all_pass() const;
};

VerifyResult run_verify(const VerifyOptions& opts = {});
std::string format_verify(const VerifyResult& r);

}  // namespace poncelet

#endif  // PONCELET_VERIFY_HPP_
