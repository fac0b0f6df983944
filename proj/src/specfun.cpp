#include "oscent/specfun.hpp"

#include <boost/math/special_functions/bessel.hpp>
#include <boost/math/special_functions/digamma.hpp>
#include <boost/math/special_functions/gamma.hpp>
#include <boost/math/tools/roots.hpp>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace oscent {

Rational factorial_exact(int n) {
  if (n < 0) throw DomainError("factorial of a negative integer");
  BigInt f = 1;
  for (int i = 2; i <= n; ++i) f *= i;
  return Rational(f);
}

double log_gamma(double x) {
  if (!(x > 0.0)) throw DomainError("log_gamma requires x > 0, got " + std::to_string(x));
  return boost::math::lgamma(x);
}

double digamma(double x) {
  if (!(x > 0.0)) throw DomainError("digamma requires x > 0, got " + std::to_string(x));
  return boost::math::digamma(x);
}

Rational pochhammer(const Rational& x, int n) {
  if (n < 0) throw DomainError("pochhammer requires n >= 0");
  Rational acc(1);
  for (int i = 0; i < n; ++i) {
    acc *= x + i;
    if (acc == 0) break;
  }
  return acc;
}

RationalPoly::RationalPoly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
  while (coeffs_.size() > 1 && coeffs_.back() == 0) coeffs_.pop_back();
  if (coeffs_.empty()) coeffs_.emplace_back(0);
}

long double RationalPoly::operator()(long double x) const {
  long double acc = 0.0L;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc = acc * x + static_cast<long double>(it->convert_to<double>());
  }
  return acc;
}

RationalPoly operator*(const RationalPoly& a, const RationalPoly& b) {
  const auto& ca = a.coeffs_;
  const auto& cb = b.coeffs_;
  std::vector<Rational> out(ca.size() + cb.size() - 1, Rational(0));
  for (std::size_t i = 0; i < ca.size(); ++i) {
    if (ca[i] == 0) continue;
    for (std::size_t j = 0; j < cb.size(); ++j) {
      if (cb[j] == 0) continue;
      out[i + j] += ca[i] * cb[j];
    }
  }
  return RationalPoly(std::move(out));
}

double OrthonormalPoly::operator()(double t) const {
  return static_cast<double>(base(t) / std::sqrt(static_cast<long double>(to_double(norm_square))));
}

namespace {

bool is_integer(const Rational& r) { return denominator(r) == 1; }

// Coefficients of sum_i d_i ((1 - t)/2)^i in powers of t.
std::vector<Rational> shifted_to_monomial(const std::vector<Rational>& d) {
  const std::size_t n = d.size();
  std::vector<Rational> out(n, Rational(0));
  // monomial coefficients of ((1 - t)/2)^i, built incrementally
  std::vector<Rational> power{Rational(1)};
  const Rational half(1, 2);
  for (std::size_t i = 0; i < n; ++i) {
    if (i > 0) {
      std::vector<Rational> next(power.size() + 1, Rational(0));
      for (std::size_t j = 0; j < power.size(); ++j) {
        next[j] += power[j] * half;
        next[j + 1] -= power[j] * half;
      }
      power = std::move(next);
    }
    if (d[i] == 0) continue;
    for (std::size_t j = 0; j < power.size(); ++j) out[j] += d[i] * power[j];
  }
  return out;
}

}  // namespace

RationalPoly jacobi_poly(int n, const Rational& a, const Rational& b) {
  if (n < 0) throw DomainError("jacobi_poly requires n >= 0");
  if (a <= -1 || b <= -1) throw DomainError("jacobi_poly requires a > -1 and b > -1");
  // P_n = (a+1)_n / n! * 2F1(-n, n+a+b+1; a+1; (1-t)/2)
  const Rational lead = pochhammer(a + 1, n) / factorial_exact(n);
  std::vector<Rational> d(n + 1);
  Rational term(1);
  for (int i = 0; i <= n; ++i) {
    d[i] = lead * term;
    // ratio of consecutive hypergeometric terms
    term *= Rational(i - n) * (n + a + b + 1 + i) / ((a + 1 + i) * (i + 1));
  }
  return RationalPoly(shifted_to_monomial(d));
}

OrthonormalPoly orthonormal_jacobi(int n, const Rational& a, const Rational& b) {
  if (a <= -1 || b <= -1) throw DomainError("orthonormal_jacobi requires a > -1 and b > -1");
  if (!is_integer(a) || !is_integer(b)) {
    throw DomainError("orthonormal_jacobi keeps an exact norm only for integer parameters");
  }
  const int ia = numerator(a).convert_to<int>();
  const int ib = numerator(b).convert_to<int>();
  // 2^{a+b+1} Gamma(n+a+1) Gamma(n+b+1) / (n! (2n+a+b+1) Gamma(n+a+b+1))
  Rational h = Rational(BigInt(1) << (ia + ib + 1));
  h *= factorial_exact(n + ia) * factorial_exact(n + ib);
  h /= factorial_exact(n) * (2 * n + ia + ib + 1) * factorial_exact(n + ia + ib);
  return OrthonormalPoly{jacobi_poly(n, a, b), h};
}

double jacobi_eval(int n, double a, double b, double t) {
  if (n < 0) throw DomainError("jacobi_eval requires n >= 0");
  long double p_prev = 1.0L;
  if (n == 0) return 1.0;
  long double p = (a + 1.0L) + (a + b + 2.0L) * (t - 1.0L) / 2.0L;
  for (int k = 1; k < n; ++k) {
    const long double s = 2.0L * k + a + b;
    const long double c1 = 2.0L * (k + 1) * (k + a + b + 1) * s;
    const long double c2 = (s + 1) * ((s + 2) * s * t + static_cast<long double>(a) * a -
                                      static_cast<long double>(b) * b);
    const long double c3 = 2.0L * (k + a) * (k + b) * (s + 2);
    const long double p_next = (c2 * p - c3 * p_prev) / c1;
    p_prev = p;
    p = p_next;
  }
  return static_cast<double>(p);
}

double gegenbauer_eval(int n, double lam, double t) {
  if (!(lam > 0.0)) throw DomainError("gegenbauer_eval requires lam > 0");
  long double prefactor = 1.0L;
  for (int i = 0; i < n; ++i) prefactor *= (2.0L * lam + i) / (lam + 0.5L + i);
  return static_cast<double>(prefactor * jacobi_eval(n, lam - 0.5, lam - 0.5, t));
}

RationalPoly laguerre_poly(int n, const Rational& alpha) {
  if (n < 0) throw DomainError("laguerre_poly requires n >= 0");
  std::vector<Rational> c(n + 1);
  for (int k = 0; k <= n; ++k) {
    Rational v = pochhammer(alpha + k + 1, n - k) / (factorial_exact(n - k) * factorial_exact(k));
    c[k] = (k % 2 == 0) ? v : Rational(-v);
  }
  return RationalPoly(std::move(c));
}

double laguerre_eval(int n, double alpha, double x, bool orthonormal) {
  if (n < 0) throw DomainError("laguerre_eval requires n >= 0");
  if (orthonormal && !(alpha > -1.0)) {
    throw DomainError("orthonormal Laguerre evaluation requires alpha > -1");
  }
  long double prev = 1.0L;
  long double cur = 1.0L;
  if (n >= 1) cur = 1.0L + alpha - x;
  for (int k = 1; k < n; ++k) {
    const long double next = ((2.0L * k + 1 + alpha - x) * cur - (k + alpha) * prev) / (k + 1);
    prev = cur;
    cur = next;
  }
  if (n == 0) cur = 1.0L;
  if (orthonormal) {
    const long double log_norm =
        0.5L * (std::lgamma(static_cast<long double>(n) + alpha + 1) - std::lgamma(n + 1.0L));
    cur *= std::exp(-log_norm);
  }
  return static_cast<double>(cur);
}

long double laguerre_function(int n, double alpha, long double x) {
  if (n < 0) throw DomainError("laguerre_function requires n >= 0");
  if (!(alpha > -1.0)) throw DomainError("laguerre_function requires alpha > -1");
  if (x <= 0.0L) {
    if (x < 0.0L || alpha > 0.0) return 0.0L;
  }
  const long double log_w0 =
      0.5L * ((x > 0.0L ? alpha * std::log(x) : 0.0L) - x - std::lgamma(alpha + 1.0L));
  long double prev = 0.0L;
  long double cur = std::exp(log_w0);
  for (int k = 0; k < n; ++k) {
    const long double a = std::sqrt(static_cast<long double>(k + 1) * (k + 1 + alpha));
    const long double b = std::sqrt(static_cast<long double>(k) * (k + alpha));
    const long double next = ((2.0L * k + alpha + 1 - x) * cur - b * prev) / a;
    prev = cur;
    cur = next;
  }
  return cur;
}

double laguerre_eval_negparam(int n, double alpha, double x) {
  if (n < 0) throw DomainError("laguerre_eval_negparam requires n >= 0");
  // sum_k (-1)^k (alpha+k+1)_{n-k} / ((n-k)! k!) x^k
  long double sum = 0.0L;
  for (int k = 0; k <= n; ++k) {
    long double c = 1.0L;
    for (int j = 0; j < n - k; ++j) c *= (alpha + k + 1 + j) / static_cast<long double>(j + 1);
    for (int j = 1; j <= k; ++j) c *= -static_cast<long double>(x) / j;
    sum += c;
  }
  return static_cast<double>(sum);
}

Rational laguerre_eval_exact(int n, const Rational& alpha, const Rational& x) {
  if (n < 0) throw DomainError("laguerre_eval_exact requires n >= 0");
  Rational sum(0);
  Rational xk(1);
  for (int k = 0; k <= n; ++k) {
    Rational term = pochhammer(alpha + k + 1, n - k) / (factorial_exact(n - k) * factorial_exact(k)) * xk;
    if (k % 2 == 0) sum += term; else sum -= term;
    xk *= x;
  }
  return sum;
}

double bessel_j(double alpha, double x) {
  if (x == 0.0) return alpha == 0.0 ? 1.0 : 0.0;
  return boost::math::cyl_bessel_j(alpha, x);
}

RationalPoly poly_power_convolution(const RationalPoly& poly, int q) {
  if (q < 1) throw DomainError("poly_power requires q >= 1");
  RationalPoly result = poly;
  for (int i = 1; i < q; ++i) result = result * poly;
  return result;
}

RationalPoly poly_power_bell(const RationalPoly& poly, int q) {
  if (q < 1) throw DomainError("poly_power requires q >= 1");
  const int d = poly.degree();
  const int top = d * q;
  // x_i = i! c_{i-1}
  std::vector<Rational> x(d + 1);
  Rational fact(1);
  for (int i = 1; i <= d + 1; ++i) {
    fact *= i;
    x[i - 1] = fact * poly.coefficient(i - 1);
  }
  const auto table = bell_table<Rational>(top + q, q, std::span<const Rational>(x));
  std::vector<Rational> out(top + 1);
  const Rational q_fact = factorial_exact(q);
  Rational kq_fact = q_fact;  // (k+q)!
  for (int k = 0; k <= top; ++k) {
    if (k > 0) kq_fact *= k + q;
    out[k] = q_fact / kq_fact * table[k + q][q];
  }
  return RationalPoly(std::move(out));
}

RationalPoly poly_power(const RationalPoly& poly, int q) {
  RationalPoly by_convolution = poly_power_convolution(poly, q);
  RationalPoly by_bell = poly_power_bell(poly, q);
  if (!(by_convolution == by_bell)) {
    throw std::logic_error("poly_power: Bell-polynomial and convolution routes disagree");
  }
  return by_convolution;
}

std::vector<double> bracket_roots(const std::function<double(double)>& f,
                                  std::span<const double> grid) {
  std::vector<double> roots;
  if (grid.size() < 2) return roots;
  double a = grid[0];
  double fa = f(a);
  for (std::size_t i = 1; i < grid.size(); ++i) {
    const double b = grid[i];
    const double fb = f(b);
    if (fa == 0.0) {
      roots.push_back(a);
    } else if ((fa < 0.0) != (fb < 0.0) && fb != 0.0) {
      std::uintmax_t iters = 200;
      const auto bracket = boost::math::tools::toms748_solve(
          f, a, b, fa, fb, boost::math::tools::eps_tolerance<double>(52), iters);
      roots.push_back(0.5 * (bracket.first + bracket.second));
    }
    a = b;
    fa = fb;
  }
  return roots;
}

std::vector<double> gegenbauer_roots(int n, double lam) {
  if (n <= 0) return {};
  for (int density = 64; density <= 4096; density *= 4) {
    const int points = density * (n + 1);
    std::vector<double> grid(points + 1);
    // uniform in the angle so that clustering near +-1 is resolved
    for (int i = 0; i <= points; ++i) {
      grid[i] = -std::cos(std::numbers::pi * (i + 0.5) / (points + 1));
    }
    auto roots = bracket_roots([&](double t) { return gegenbauer_eval(n, lam, t); }, grid);
    if (static_cast<int>(roots.size()) == n) return roots;
  }
  throw Error("gegenbauer_roots: failed to isolate all zeros");
}

std::vector<double> laguerre_roots(int n, double alpha) {
  if (n <= 0) return {};
  const double nu = 4.0 * n + 2.0 * alpha + 2.0;
  const double s_max = std::sqrt(nu + 4.0 * std::cbrt(nu) + 10.0);
  auto f = [&](double s) { return static_cast<double>(laguerre_function(n, alpha, static_cast<long double>(s) * s)); };
  for (int refine = 8; refine <= 128; refine *= 2) {
    const double step = std::numbers::pi / (refine * std::sqrt(nu));
    std::vector<double> grid;
    for (double s = step * 0.5; s < s_max; s += step) grid.push_back(s);
    grid.push_back(s_max);
    auto roots = bracket_roots(f, grid);
    if (static_cast<int>(roots.size()) == n) {
      for (double& r : roots) r *= r;
      return roots;
    }
  }
  throw Error("laguerre_roots: failed to isolate all zeros");
}

}  // namespace oscent
