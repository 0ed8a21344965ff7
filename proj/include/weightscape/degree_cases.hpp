// Copyright 2026 The Weightscape Authors
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

#pragma once

#include <cstdint>
#include <string>

#include "weightscape/error.hpp"

namespace weightscape {

/// Outcome of the vanishing test for H^0(omega_C(B + Sigma) (x) M^-N) on an
/// irreducible nodal curve, with M = omega^k(kB + D) ample.
enum class VanishingCase {
  Vanishes,
  Exceptional1,  // d = 0, k = 1, g = 0, b = 3
  Exceptional2,  // d = 0, k = 1, g = 1, b = 1 (only constant sections)
  Nonvanishing,  // degree is nonnegative and the parameters fall outside the
                 // (sigma, N) ranges where vanishing is asserted
};

inline const char* to_string(VanishingCase c) {
  switch (c) {
    case VanishingCase::Vanishes: return "Vanishes";
    case VanishingCase::Exceptional1: return "Exceptional1";
    case VanishingCase::Exceptional2: return "Exceptional2";
    case VanishingCase::Nonvanishing: return "Nonvanishing";
  }
  return "?";
}

struct LineSeriesParams {
  int genus = 0;  // g
  int b = 0;      // degree of B
  int d = 0;      // degree of D
  int k = 1;
  int sigma = 0;  // length of Sigma
  int N = 2;

  std::int64_t log_degree() const { return 2 * genus - 2 + b; }
  std::int64_t degree_m() const { return k * log_degree() + d; }
  /// (1 - Nk)(2g - 2 + b) + sigma - N d
  std::int64_t degree_f() const {
    return (1 - static_cast<std::int64_t>(N) * k) * log_degree() + sigma -
           static_cast<std::int64_t>(N) * d;
  }
};

inline void check_params(const LineSeriesParams& p) {
  if (p.k <= 0 || p.N < 2 || p.sigma < 0 || p.sigma > 2 || p.b < 0 || p.d < 0 || p.genus < 0)
    throw Error(ErrorKind::InvalidArgument,
                "need k > 0, N >= 2, sigma in {0,1,2}, b, d, g >= 0");
  if (p.degree_m() < 1)
    throw Error(ErrorKind::InvalidArgument,
                "M = omega^k(kB + D) has degree " + std::to_string(p.degree_m()) +
                    " and cannot be ample");
}

inline VanishingCase degree_vanishing_case(const LineSeriesParams& p) {
  check_params(p);
  if (p.sigma == 0) return VanishingCase::Vanishes;
  if (p.degree_f() < 0) return VanishingCase::Vanishes;
  const bool covered = (p.sigma <= 2 && p.N >= 3) || (p.sigma <= 1 && p.N >= 2);
  if (covered && p.d == 0 && p.k == 1) {
    if (p.genus == 0 && p.b == 3) return VanishingCase::Exceptional1;
    if (p.genus == 1 && p.b == 1) return VanishingCase::Exceptional2;
  }
  if (covered)
    throw Error(ErrorKind::Internal, "nonnegative degree outside the exceptional cases");
  return VanishingCase::Nonvanishing;
}

inline VanishingCase degree_vanishing_case(int g, int b, int d, int k, int sigma, int N) {
  return degree_vanishing_case(LineSeriesParams{g, b, d, k, sigma, N});
}

}  // namespace weightscape
