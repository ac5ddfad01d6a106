/*
   Copyright 2026 The idealcount Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#pragma once

#include <cstdint>
#include <string>

#include "idealcount/field.hpp"
#include "idealcount/ideal_counter.hpp"

namespace idealcount {

enum class ResidueMethod { imaginary_sum, real_logsin, empirical, rational };

std::string to_string(ResidueMethod m);

struct Residue {
  double value = 0.0;
  ResidueMethod method = ResidueMethod::empirical;
  double est_error = 0.0;
};

/// Residue at s = 1 of the Dedekind zeta function of Q(sqrt D) from the
/// finite character sums. Throws NotFundamental.
Residue kappa_quadratic(std::int64_t D);

/// prefix[X] / X, with est_error = thm_bound(field, X) / X for n >= 2 and
/// 5 value X^{-1/3} otherwise. Throws TableTooSmall below X = 10^4.
Residue kappa_empirical(const TauTable& table);

/// Exact for degree 1 and quadratic fields, kappa_empirical otherwise.
Residue kappa_for(const TauTable& table);

struct LouboutinCheck {
  double kappa = 0.0;
  double bound = 0.0;
  bool ok = false;
};

/// Exact kappa of a quadratic field against (e log|D| / 2)^{n-1}.
LouboutinCheck kappa_vs_louboutin(const FieldSpec& field);

/// kappa w sqrt|D| / (2 pi) for D < 0, which is the class number.
double class_number_from_kappa(std::int64_t D, double kappa);

}  // namespace idealcount
