#pragma once

#include "hgf/precision.hpp"

#include <variant>
#include <vector>

namespace hgf {

/// Dense polynomial; entry k is the coefficient of x^k. Canonical form
/// trims trailing (near-)zeros, so an empty vector is the zero polynomial.
using Poly = std::vector<Cplx>;

namespace poly {
Poly trim(Poly p);
Poly add(const Poly& a, const Poly& b);
Poly scale(const Poly& a, const Cplx& s);
Poly mul(const Poly& a, const Poly& b);
Poly derive(const Poly& a);
Cplx eval(const Poly& a, const Real& x);
Poly shift_up(const Poly& a, int k);  // multiply by x^k
}  // namespace poly

/// One summand P(x) * exp(-rate * x^2), rate > 0 exact rational.
struct GaussianTerm {
  Rational rate;
  Poly coeffs;
};

struct FullLine {};
struct HalfLine {
  Real endpoint;
  bool right;  // true: [endpoint, inf), false: (-inf, endpoint]
};
struct Interval {
  Real lo, hi;
};
struct IntervalUnion {
  std::vector<Interval> parts;  // pairwise disjoint, lo < hi each
};
using Region = std::variant<FullLine, HalfLine, IntervalUnion>;

/// Exact representative of a Schwartz function in the closed class
/// { sum_i P_i(x) exp(-c_i x^2) }. Terms are kept sorted by strictly
/// increasing rate; the empty sum is the zero function. Values are
/// immutable once built and all operations are pure.
class GaussianPolySum {
 public:
  GaussianPolySum() = default;  // zero

  static GaussianPolySum from_terms(std::vector<GaussianTerm> terms);
  static GaussianPolySum term(const Rational& rate, Poly coeffs);
  static GaussianPolySum zero() { return {}; }

  const std::vector<GaussianTerm>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  /// Largest polynomial degree across terms; -1 for zero.
  int degree() const;

  Cplx eval(const Real& x) const;
  Cplx integral(const Region& region) const;

  GaussianPolySum scaled(const Cplx& s) const;
  GaussianPolySum times_poly(const Poly& q) const;
  GaussianPolySum derivative() const;
  GaussianPolySum conjugated() const;
  /// x -> -x
  GaussianPolySum reflected() const;

  Real max_abs_coeff() const;

  friend GaussianPolySum operator+(const GaussianPolySum& a, const GaussianPolySum& b);
  friend GaussianPolySum operator-(const GaussianPolySum& a, const GaussianPolySum& b);
  friend GaussianPolySum operator*(const GaussianPolySum& a, const GaussianPolySum& b);

 private:
  std::vector<GaussianTerm> terms_;
};

/// L^inf distance between coefficient lists after exact rate alignment.
Real distance(const GaussianPolySum& a, const GaussianPolySum& b);

/// <f, g> = integral of f * conj(g) over the line.
Cplx inner(const GaussianPolySum& f, const GaussianPolySum& g);

/// Harmonic-oscillator operator with (N+1) h_n = (n+1) h_n under the
/// exp(-x^2/4) Hermite scaling: (N+1) f = -f'' + (x^2/4) f + f/2.
GaussianPolySum number_op(const GaussianPolySum& f);

/// ||f||_m = l2 norm of (N+1)^m f.
Real norm_m(const GaussianPolySum& f, unsigned m);

/// Unitary Fourier transform F(f)(t) = (2*pi)^(-1/2) * integral e^{-itx} f(x) dx,
/// exact within the class (rate c -> 1/(4c)). The inverse is the exact
/// two-sided inverse, F^{-1}(f)(x) = F(f)(-x).
GaussianPolySum fourier(const GaussianPolySum& f, bool inverse = false);

/// (f * g)(t) = integral f(t-x) g(x) dx, computed exactly through the
/// Fourier route sqrt(2*pi) * F^{-1}(F(f) . F(g)).
GaussianPolySum convolve(const GaussianPolySum& f, const GaussianPolySum& g);

}  // namespace hgf
