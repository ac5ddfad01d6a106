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

#include "idealcount/kronecker.hpp"

#include <cstdlib>

#include "idealcount/errors.hpp"
#include "idealcount/field.hpp"

namespace idealcount {

int kronecker_symbol(std::int64_t a, std::int64_t b) {
  if (b == 0) return (a == 1 || a == -1) ? 1 : 0;
  if (a % 2 == 0 && b % 2 == 0) return 0;
  int result = 1;
  // Strip the factor 2 from b using (a/2) = (-1)^{(a^2-1)/8} for odd a.
  int twos = 0;
  while (b % 2 == 0) {
    b /= 2;
    ++twos;
  }
  if (twos % 2 == 1) {
    const std::int64_t r = ((a % 8) + 8) % 8;
    if (r == 3 || r == 5) result = -result;
  }
  if (b < 0) {
    b = -b;
    if (a < 0) result = -result;
  }
  // Jacobi symbol for odd positive b.
  std::int64_t aa = a % b;
  if (aa < 0) aa += b;
  std::int64_t bb = b;
  while (aa != 0) {
    while (aa % 2 == 0) {
      aa /= 2;
      const std::int64_t r = bb % 8;
      if (r == 3 || r == 5) result = -result;
    }
    std::swap(aa, bb);
    if (aa % 4 == 3 && bb % 4 == 3) result = -result;
    aa %= bb;
  }
  return bb == 1 ? result : 0;
}

int kronecker(std::int64_t D, std::int64_t m) {
  if (!is_fundamental_discriminant(D)) throw NotFundamental("kronecker: " + std::to_string(D) + " is not a fundamental discriminant");
  if (m < 1) throw DomainError("kronecker: m must be positive");
  return kronecker_symbol(D, m);
}

}  // namespace idealcount
