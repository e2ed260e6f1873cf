#include "gloves/angular.hpp"

#include <array>
#include <cmath>

namespace gloves {

namespace {

// Inputs are capped at two_j <= 40, but the Racah sum needs factorials up to
// (j1 + j2 + J + 1)! which can reach 81! at that cap.
constexpr int kFactorialMax = 100;
constexpr int kTwoJMax = 40;

std::array<long double, kFactorialMax + 1> build_factorials() {
  std::array<long double, kFactorialMax + 1> table{};
  table[0] = 1.0L;
  for (int n = 1; n <= kFactorialMax; ++n) table[n] = table[n - 1] * n;
  return table;
}

const std::array<long double, kFactorialMax + 1>& factorial_table() {
  static const auto table = build_factorials();
  return table;
}

// factorial of a doubled quantum number combination; the argument must be an
// even doubled value, i.e. an integer count.
long double fact2(int doubled) {
  return factorial(doubled / 2);
}

void check_jm(int two_j, int two_m, const char* what) {
  if (two_j < 0 || two_j > kTwoJMax)
    throw DomainError(std::string(what) + ": two_j out of range");
  if (std::abs(two_m) > two_j || (two_j - two_m) % 2 != 0)
    throw DomainError(std::string(what) + ": two_m incompatible with two_j");
}

}  // namespace

long double factorial(int n) {
  if (n < 0 || n > kFactorialMax)
    throw DomainError("factorial argument out of tabulated range");
  return factorial_table()[n];
}

double wigner_small_d(int two_j, int two_m_row, int two_m_col, double beta) {
  check_jm(two_j, two_m_row, "wigner_small_d");
  check_jm(two_j, two_m_col, "wigner_small_d");
  if (!std::isfinite(beta)) throw DomainError("wigner_small_d: beta not finite");

  const double c = std::cos(beta / 2.0);
  const double s = std::sin(beta / 2.0);

  // s ranges over integers with all factorial arguments nonnegative:
  //   (j + m_col - s)!, s!, (m_row - m_col + s)!, (j - m_row - s)!
  const int s_min = std::max(0, (two_m_col - two_m_row) / 2);
  const int s_max = std::min((two_j + two_m_col) / 2, (two_j - two_m_row) / 2);

  const long double pref =
      std::sqrt(fact2(two_j + two_m_row) * fact2(two_j - two_m_row) *
                fact2(two_j + two_m_col) * fact2(two_j - two_m_col));

  long double sum = 0.0L;
  const int dm = (two_m_row - two_m_col) / 2;  // m_row - m_col
  for (int sidx = s_min; sidx <= s_max; ++sidx) {
    const long double denom =
        fact2(two_j + two_m_col - 2 * sidx) * factorial(sidx) *
        factorial(dm + sidx) * fact2(two_j - two_m_row - 2 * sidx);
    const int cos_pow = (2 * two_j + two_m_col - two_m_row) / 2 - 2 * sidx;
    const int sin_pow = dm + 2 * sidx;
    long double term = 1.0L / denom;
    term *= std::pow(static_cast<long double>(c), cos_pow);
    term *= std::pow(static_cast<long double>(s), sin_pow);
    if ((dm + sidx) % 2 != 0) term = -term;
    sum += term;
  }
  return static_cast<double>(pref * sum);
}

cplx wigner_D(int two_j, int two_m_row, int two_m_col, double alpha,
              double beta, double gamma) {
  const double d = wigner_small_d(two_j, two_m_row, two_m_col, beta);
  const double phase = -(alpha * two_m_row + gamma * two_m_col) / 2.0;
  return std::polar(d, phase);
}

double clebsch_gordan(int two_j1, int two_m1, int two_j2, int two_m2,
                      int two_J, int two_M) {
  check_jm(two_j1, two_m1, "clebsch_gordan");
  check_jm(two_j2, two_m2, "clebsch_gordan");
  check_jm(two_J, two_M, "clebsch_gordan");
  if ((two_j1 + two_j2 + two_J) % 2 != 0)
    throw DomainError("clebsch_gordan: j1 + j2 + J must be an integer");

  if (two_M != two_m1 + two_m2) return 0.0;
  if (two_J < std::abs(two_j1 - two_j2) || two_J > two_j1 + two_j2) return 0.0;

  const long double delta =
      std::sqrt(fact2(two_j1 + two_j2 - two_J) * fact2(two_j1 - two_j2 + two_J) *
                fact2(-two_j1 + two_j2 + two_J) /
                fact2(two_j1 + two_j2 + two_J + 2));

  const long double pref = std::sqrt(
      (two_J + 1.0L) * fact2(two_J + two_M) * fact2(two_J - two_M) *
      fact2(two_j1 - two_m1) * fact2(two_j1 + two_m1) *
      fact2(two_j2 - two_m2) * fact2(two_j2 + two_m2));

  // k bounds keep every factorial argument nonnegative.
  const int k_min = std::max(
      {0, (two_j2 - two_J - two_m1) / 2, (two_j1 - two_J + two_m2) / 2});
  const int k_max =
      std::min({(two_j1 + two_j2 - two_J) / 2, (two_j1 - two_m1) / 2,
                (two_j2 + two_m2) / 2});

  long double sum = 0.0L;
  for (int k = k_min; k <= k_max; ++k) {
    const long double denom =
        factorial(k) * fact2(two_j1 + two_j2 - two_J - 2 * k) *
        fact2(two_j1 - two_m1 - 2 * k) * fact2(two_j2 + two_m2 - 2 * k) *
        fact2(two_J - two_j2 + two_m1 + 2 * k) *
        fact2(two_J - two_j1 - two_m2 + 2 * k);
    sum += (k % 2 == 0 ? 1.0L : -1.0L) / denom;
  }
  return static_cast<double>(delta * pref * sum);
}

}  // namespace gloves
