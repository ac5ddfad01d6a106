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

namespace idealcount {

/// Kronecker symbol (a/b) for any integers, b >= 0 or b < 0.
int kronecker_symbol(std::int64_t a, std::int64_t b);

/// chi_D(m) for a fundamental discriminant D and m >= 1. Throws NotFundamental.
int kronecker(std::int64_t D, std::int64_t m);

}  // namespace idealcount
