#pragma once

// Special-function kernel: Gamma family, Pochhammer symbols, classical
// orthogonal polynomials (exact coefficients and floating evaluation),
// Bessel functions, partial Bell polynomials and exact polynomial powers.

#include <boost/multiprecision/gmp.hpp>

#include <cstddef>
#include <functional>
#include <span>
#include <vector>

#include "oscent/errors.hpp"

namespace oscent {

using Rational = boost::multiprecision::mpq_rational;
using BigInt = boost::multiprecision::mpz_int;

inline Rational make_rational(long num, long den = 1) { return Rational(num, den); }
inline double to_double(const Rational& r) { return r.convert_to<double>(); }

Rational factorial_exact(int n);

// ln Gamma(x) for x > 0.
double log_gamma(double x);

// psi(x) = Gamma'(x)/Gamma(x) for x > 0.
double digamma(double x);

// Rising factorial x (x+1) ... (x+n-1), exact.
Rational pochhammer(const Rational& x, int n);

// Polynomial with exact rational coefficients in ascending degree order.
// Trailing zero coefficients are trimmed; the zero polynomial is [0].
class RationalPoly {
 public:
  RationalPoly() : coeffs_{Rational(0)} {}
  explicit RationalPoly(std::vector<Rational> coeffs);

  const std::vector<Rational>& coefficients() const noexcept { return coeffs_; }
  int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.size() == 1 && coeffs_[0] == 0; }

  // Coefficient of x^k; zero past the degree.
  Rational coefficient(std::size_t k) const {
    return k < coeffs_.size() ? coeffs_[k] : Rational(0);
  }

  // Horner evaluation in extended precision.
  long double operator()(long double x) const;

  friend RationalPoly operator*(const RationalPoly& a, const RationalPoly& b);
  friend bool operator==(const RationalPoly& a, const RationalPoly& b) {
    return a.coeffs_ == b.coeffs_;
  }

 private:
  std::vector<Rational> coeffs_;
};

// An orthonormal polynomial stored as base / sqrt(norm_square) with exact
// base coefficients, so powers stay exact.
struct OrthonormalPoly {
  RationalPoly base;
  Rational norm_square;

  double operator()(double t) const;
};

// Classical Jacobi polynomial P_n^{(a,b)}, exact coefficients in t.
RationalPoly jacobi_poly(int n, const Rational& a, const Rational& b);

// Jacobi polynomial with its squared L2 norm against (1-t)^a (1+t)^b.
// Requires integer a, b >= 0 so that the norm is rational.
OrthonormalPoly orthonormal_jacobi(int n, const Rational& a, const Rational& b);

// Floating evaluation of P_n^{(a,b)}(t) by the three-term recurrence.
double jacobi_eval(int n, double a, double b, double t);

// C_n^{(lam)}(t) through the Jacobi identity
// C_n^{(lam)} = (2 lam)_n / (lam + 1/2)_n * P_n^{(lam-1/2, lam-1/2)}.
double gegenbauer_eval(int n, double lam, double t);

// Generalized Laguerre polynomial L_n^{(alpha)}, exact coefficients.
RationalPoly laguerre_poly(int n, const Rational& alpha);

// L_n^{(alpha)}(x) by the three-term recurrence in extended precision. With
// `orthonormal`, divides by sqrt(Gamma(n+alpha+1)/n!).
double laguerre_eval(int n, double alpha, double x, bool orthonormal = false);

// Orthonormal Laguerre function Lhat_n^{(alpha)}(x) * sqrt(x^alpha e^{-x}),
// evaluated by the normalized recurrence in extended precision so that
// neither the polynomial nor the weight overflows for degrees in the
// thousands.
long double laguerre_function(int n, double alpha, long double x);

// L_n^{(alpha)}(x) for arbitrary real alpha by the explicit finite sum.
double laguerre_eval_negparam(int n, double alpha, double x);

// Same finite sum in exact arithmetic.
Rational laguerre_eval_exact(int n, const Rational& alpha, const Rational& x);

// Bessel function of the first kind J_alpha(x).
double bessel_j(double alpha, double x);

// Table B[n][k] of partial exponential Bell polynomials for 0 <= n <= n_max,
// 0 <= k <= k_max, with x[i-1] holding x_i. Missing x_i count as zero.
template <class T>
std::vector<std::vector<T>> bell_table(int n_max, int k_max, std::span<const T> x) {
  std::vector<std::vector<T>> table(n_max + 1, std::vector<T>(k_max + 1, T(0)));
  table[0][0] = T(1);
  // binom(n-1, i-1) row by row
  std::vector<T> binom_row{T(1)};
  for (int n = 1; n <= n_max; ++n) {
    if (n > 1) {
      std::vector<T> next(binom_row.size() + 1, T(0));
      next.front() = T(1);
      next.back() = T(1);
      for (std::size_t j = 1; j + 1 < next.size(); ++j) next[j] = binom_row[j - 1] + binom_row[j];
      binom_row = std::move(next);
    }
    for (int k = 1; k <= std::min(n, k_max); ++k) {
      T acc(0);
      for (int i = 1; i <= n - k + 1; ++i) {
        if (static_cast<std::size_t>(i) > x.size()) break;
        const T& xi = x[i - 1];
        if (xi == T(0)) continue;
        const T& prev = table[n - i][k - 1];
        if (prev == T(0)) continue;
        acc += binom_row[i - 1] * xi * prev;
      }
      table[n][k] = acc;
    }
  }
  return table;
}

// Partial exponential Bell polynomial B_{n,k}(x_1, ..., x_{n-k+1}).
template <class T>
T bell_partial(int n, int k, std::span<const T> x) {
  if (k < 0 || n < 0 || k > n) {
    throw DomainError("bell_partial requires 0 <= k <= n");
  }
  return bell_table<T>(n, k, x)[n][k];
}

// poly^q by repeated exact convolution.
RationalPoly poly_power_convolution(const RationalPoly& poly, int q);

// poly^q through A_{k,q} = q!/(k+q)! B_{k+q,q}(c_0, 2! c_1, ..., (k+1)! c_k).
RationalPoly poly_power_bell(const RationalPoly& poly, int q);

// poly^q computed by both routes; throws std::logic_error if they differ.
RationalPoly poly_power(const RationalPoly& poly, int q);

// Roots of f on [lo, hi] located by sign changes on `grid` and refined by
// bracketing. `grid` must be ascending.
std::vector<double> bracket_roots(const std::function<double(double)>& f,
                                  std::span<const double> grid);

// The n zeros of C_n^{(lam)} in (-1, 1), ascending.
std::vector<double> gegenbauer_roots(int n, double lam);

// The n zeros of L_n^{(alpha)} on (0, inf), ascending.
std::vector<double> laguerre_roots(int n, double alpha);

}  // namespace oscent
