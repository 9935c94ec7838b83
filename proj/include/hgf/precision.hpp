#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <boost/multiprecision/mpfr.hpp>

#include <stdexcept>
#include <string>

namespace hgf {

/// High-precision real scalar. Precision is set process-wide (per thread)
/// through set_precision(); all values constructed afterwards carry at
/// least that many bits.
using Real = boost::multiprecision::number<boost::multiprecision::mpfr_float_backend<0>,
                                           boost::multiprecision::et_off>;

/// Exact rational, used for Gaussian rates so rate arithmetic never drifts.
using Rational = boost::multiprecision::cpp_rational;

struct CapError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct NumericalError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Working precision of all high-precision scalars plus the equality
/// tolerance derived from it.
struct PrecisionContext {
  unsigned bits = 256;
  Real tol;  // 2^(-bits/2) unless overridden
};

void set_precision(unsigned bits);
void set_precision(unsigned bits, const Real& tol);
const PrecisionContext& precision();

/// Equality tolerance of the active context.
const Real& tol();

Real make_real(const Rational& r);
Rational rational_from_decimal(const std::string& s);

Real pi_r();
Real sqrt_two_pi();   // sqrt(2*pi)
Real erfc_r(const Real& x);

/// Complex scalar over Real. std::complex is only specified for the
/// builtin floating types, so we carry our own minimal pair.
struct Cplx {
  Real re, im;

  Cplx() = default;
  Cplx(const Real& r) : re(r) {}
  Cplx(Real&& r) : re(std::move(r)) {}
  Cplx(const Real& r, const Real& i) : re(r), im(i) {}
  Cplx(double r) : re(r) {}
  Cplx(int r) : re(r) {}

  static Cplx i() { return Cplx(Real(0), Real(1)); }
  /// i^k for integer k (k may be negative).
  static Cplx i_pow(long k);

  Cplx conj() const { return Cplx(re, -im); }
  Real abs2() const { return re * re + im * im; }
  Real abs() const { return sqrt(abs2()); }
  /// max(|re|, |im|) — the componentwise magnitude canonicalization uses.
  Real linf() const;
  bool is_finite() const;

  Cplx& operator+=(const Cplx& o) {
    re += o.re;
    im += o.im;
    return *this;
  }
  Cplx& operator-=(const Cplx& o) {
    re -= o.re;
    im -= o.im;
    return *this;
  }
};

inline Cplx operator+(const Cplx& a, const Cplx& b) { return Cplx(a.re + b.re, a.im + b.im); }
inline Cplx operator-(const Cplx& a, const Cplx& b) { return Cplx(a.re - b.re, a.im - b.im); }
inline Cplx operator-(const Cplx& a) { return Cplx(-a.re, -a.im); }
inline Cplx operator*(const Cplx& a, const Cplx& b) {
  return Cplx(a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re);
}
inline Cplx operator*(const Cplx& a, const Real& s) { return Cplx(a.re * s, a.im * s); }
inline Cplx operator*(const Real& s, const Cplx& a) { return a * s; }
inline Cplx operator/(const Cplx& a, const Real& s) { return Cplx(a.re / s, a.im / s); }
inline Cplx operator/(const Cplx& a, const Cplx& b) {
  Real d = b.abs2();
  Cplx n = a * b.conj();
  return Cplx(n.re / d, n.im / d);
}
inline bool operator==(const Cplx& a, const Cplx& b) { return a.re == b.re && a.im == b.im; }

}  // namespace hgf
