#include "hgf/precision.hpp"

#include <cmath>
#include <map>
#include <mutex>

namespace hgf {

namespace {

PrecisionContext g_ctx;
bool g_initialized = false;
std::mutex g_mu;

unsigned digits10_for_bits(unsigned bits) {
  // mpfr precision is requested in decimal digits by the boost wrapper;
  // round up so we hold at least `bits` binary digits.
  return static_cast<unsigned>(std::ceil(bits * 0.30103)) + 2;
}

void apply(unsigned bits, const Real* tol_override) {
  if (bits < 64) throw CapError("precision must be at least 64 bits");
  Real::default_precision(digits10_for_bits(bits));
  g_ctx.bits = bits;
  g_ctx.tol = tol_override ? *tol_override : ldexp(Real(1), -static_cast<int>(bits / 2));
  g_initialized = true;
}

}  // namespace

void set_precision(unsigned bits) { apply(bits, nullptr); }

void set_precision(unsigned bits, const Real& tol) { apply(bits, &tol); }

const PrecisionContext& precision() {
  if (!g_initialized) apply(256, nullptr);
  return g_ctx;
}

const Real& tol() { return precision().tol; }

Real make_real(const Rational& r) {
  precision();
  return Real(numerator(r).str()) / Real(denominator(r).str());
}

Rational rational_from_decimal(const std::string& s) {
  std::string t = s;
  bool neg = false;
  if (!t.empty() && (t[0] == '+' || t[0] == '-')) {
    neg = t[0] == '-';
    t.erase(0, 1);
  }
  std::string digits;
  long frac_len = 0;
  bool seen_dot = false;
  for (char c : t) {
    if (c == '.') {
      if (seen_dot) throw std::invalid_argument("bad decimal: " + s);
      seen_dot = true;
    } else if (c >= '0' && c <= '9') {
      digits += c;
      if (seen_dot) ++frac_len;
    } else {
      throw std::invalid_argument("bad decimal: " + s);
    }
  }
  if (digits.empty()) throw std::invalid_argument("bad decimal: " + s);
  boost::multiprecision::cpp_int num(digits);
  boost::multiprecision::cpp_int den = 1;
  for (long i = 0; i < frac_len; ++i) den *= 10;
  Rational r(num, den);
  return neg ? -r : r;
}

Real pi_r() {
  precision();
  Real p;
  mpfr_const_pi(p.backend().data(), MPFR_RNDN);
  return p;
}

Real sqrt_two_pi() { return sqrt(2 * pi_r()); }

Real erfc_r(const Real& x) {
  precision();
  Real r;
  mpfr_erfc(r.backend().data(), x.backend().data(), MPFR_RNDN);
  return r;
}

Cplx Cplx::i_pow(long k) {
  long m = ((k % 4) + 4) % 4;
  switch (m) {
    case 0: return Cplx(Real(1), Real(0));
    case 1: return Cplx(Real(0), Real(1));
    case 2: return Cplx(Real(-1), Real(0));
    default: return Cplx(Real(0), Real(-1));
  }
}

Real Cplx::linf() const {
  Real a = re < 0 ? Real(-re) : re;
  Real b = im < 0 ? Real(-im) : im;
  return a > b ? a : b;
}

bool Cplx::is_finite() const {
  return mpfr_number_p(re.backend().data()) && mpfr_number_p(im.backend().data());
}

}  // namespace hgf
