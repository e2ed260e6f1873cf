#pragma once

#include "gloves/types.hpp"

namespace gloves {

// n! for n in [0, 100], tabulated once. Entries through 20! are exact
// integers in the 64-bit significand; beyond that the value is correct to
// one unit in the last place, which is all the sums below can use anyway.
long double factorial(int n);

// Wigner small-d matrix element d^j_{m_row, m_col}(beta) in the
// Condon-Shortley basis, so d^j = exp(-i beta Jy) and d^1_{0,0} = cos(beta).
// Quantum numbers are doubled; two_j in [0, 40], |two_m| <= two_j with
// matching parity. Throws DomainError otherwise.
double wigner_small_d(int two_j, int two_m_row, int two_m_col, double beta);

// Full rotation matrix element
//   D^j_{m_row, m_col}(alpha, beta, gamma)
//     = exp(-i alpha m_row) d^j(beta) exp(-i gamma m_col),
// the active z-y-z convention.
cplx wigner_D(int two_j, int two_m_row, int two_m_col, double alpha,
              double beta, double gamma);

// Clebsch-Gordan coefficient <j1 m1; j2 m2 | J M> with the Condon-Shortley
// phase convention (highest-weight coefficient real positive, all
// coefficients real). Doubled quantum numbers throughout. Returns 0 when
// M != m1 + m2 or the triangle rule fails; throws DomainError for malformed
// inputs (negative j, |m| > j, parity mismatch).
double clebsch_gordan(int two_j1, int two_m1, int two_j2, int two_m2,
                      int two_J, int two_M);

}  // namespace gloves
