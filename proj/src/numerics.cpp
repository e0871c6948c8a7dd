#include "gross/numerics.hpp"

#include <cassert>
#include <cmath>
#include <cstdio>
#include <memory>
#include <stdexcept>

namespace gross {

Real& Real::operator=(const Real& o) {
  if (this != &o) {
    mpfr_set_prec(v_, mpfr_get_prec(o.v_));
    mpfr_set(v_, o.v_, MPFR_RNDN);
  }
  return *this;
}

Real Real::of(long v, mpfr_prec_t prec) {
  Real r(prec);
  mpfr_set_si(r.v_, v, MPFR_RNDN);
  return r;
}

Real Real::of(const mpz_class& v, mpfr_prec_t prec) {
  Real r(prec);
  mpfr_set_z(r.v_, v.get_mpz_t(), MPFR_RNDN);
  return r;
}

Real Real::parse(const std::string& s, mpfr_prec_t prec) {
  Real r(prec);
  if (mpfr_set_str(r.v_, s.c_str(), 10, MPFR_RNDN) != 0)
    throw std::domain_error("Real::parse: bad decimal literal: " + s);
  return r;
}

Real Real::pow10(long e, mpfr_prec_t prec) {
  Real r(prec);
  mpfr_set_si(r.v_, 10, MPFR_RNDN);
  mpfr_pow_si(r.v_, r.v_, e, MPFR_RNDN);
  return r;
}

mpz_class Real::round_to_integer() const {
  Real t(prec());
  mpfr_round(t.v_, v_);
  mpz_class z;
  mpfr_get_z(z.get_mpz_t(), t.v_, MPFR_RNDN);
  return z;
}

std::string Real::str(size_t digits) const {
  if (digits == 0) digits = 1;
  // %.*Re prints one digit before the point and digits-1 after.
  int n = mpfr_snprintf(nullptr, 0, "%.*Re", static_cast<int>(digits - 1), v_);
  if (n < 0) throw std::runtime_error("mpfr_snprintf failed");
  std::string buf(static_cast<size_t>(n) + 1, '\0');
  mpfr_snprintf(buf.data(), buf.size(), "%.*Re", static_cast<int>(digits - 1), v_);
  buf.resize(static_cast<size_t>(n));
  return buf;
}

Real Real::operator-() const {
  Real r(prec());
  mpfr_neg(r.v_, v_, MPFR_RNDN);
  return r;
}

Real Real::bin(const Real& a, const Real& b, mpfr_bin_fn f) {
  Real r(std::max(a.prec(), b.prec()));
  f(r.v_, a.v_, b.v_, MPFR_RNDN);
  return r;
}

Real operator*(const Real& a, long k) {
  Real r(a.prec());
  mpfr_mul_si(r.raw(), a.raw(), k, MPFR_RNDN);
  return r;
}

Real operator/(const Real& a, long k) {
  Real r(a.prec());
  mpfr_div_si(r.raw(), a.raw(), k, MPFR_RNDN);
  return r;
}

Real operator+(const Real& a, long k) {
  Real r(a.prec());
  mpfr_add_si(r.raw(), a.raw(), k, MPFR_RNDN);
  return r;
}

Real operator-(const Real& a, long k) {
  Real r(a.prec());
  mpfr_sub_si(r.raw(), a.raw(), k, MPFR_RNDN);
  return r;
}

Real abs(const Real& x) {
  Real r(x.prec());
  mpfr_abs(r.raw(), x.raw(), MPFR_RNDN);
  return r;
}

Real sqrt(const Real& x) {
  if (x.sign() < 0) throw std::domain_error("sqrt of negative real");
  Real r(x.prec());
  mpfr_sqrt(r.raw(), x.raw(), MPFR_RNDN);
  return r;
}

Real exp(const Real& x) {
  Real r(x.prec());
  mpfr_exp(r.raw(), x.raw(), MPFR_RNDN);
  return r;
}

Real log(const Real& x) {
  if (x.sign() <= 0) throw std::domain_error("log of non-positive real");
  Real r(x.prec());
  mpfr_log(r.raw(), x.raw(), MPFR_RNDN);
  return r;
}

Real pow(const Real& x, const Real& y) {
  Real r(std::max(x.prec(), y.prec()));
  mpfr_pow(r.raw(), x.raw(), y.raw(), MPFR_RNDN);
  return r;
}

Real atan2(const Real& y, const Real& x) {
  Real r(std::max(x.prec(), y.prec()));
  mpfr_atan2(r.raw(), y.raw(), x.raw(), MPFR_RNDN);
  return r;
}

int cmp_abs(const Real& a, const Real& b) { return mpfr_cmpabs(a.raw(), b.raw()); }

Real Complex::abs() const {
  Real r(std::max(re.prec(), im.prec()));
  mpfr_hypot(r.raw(), re.raw(), im.raw(), MPFR_RNDN);
  return r;
}

Complex operator/(const Complex& a, const Complex& b) {
  Real n = b.norm();
  return {(a.re * b.re + a.im * b.im) / n, (a.im * b.re - a.re * b.im) / n};
}

Complex pow_int(const Complex& z, long n, mpfr_prec_t prec) {
  if (n < 0) throw std::domain_error("pow_int: negative exponent");
  Complex acc{Real::of(1, prec), Real::of(0, prec)};
  Complex base = z;
  while (n > 0) {
    if (n & 1) acc = acc * base;
    base = base * base;
    n >>= 1;
  }
  return acc;
}

Complex root_principal(const Complex& z, long n) {
  if (n <= 0) throw std::domain_error("root_principal: order must be positive");
  mpfr_prec_t p = std::max(z.re.prec(), z.im.prec());
  Real a = atan2(z.im, z.re);  // (-pi, pi]
  if (a.sign() < 0) {
    Real two_pi(p);
    mpfr_const_pi(two_pi.raw(), MPFR_RNDN);
    a += two_pi;
    a += two_pi;  // add 2*pi
  }
  a /= n;
  Real r = pow(z.abs(), Real::of(1, p) / n);
  Real c(p), s(p);
  mpfr_sin_cos(s.raw(), c.raw(), a.raw(), MPFR_RNDN);
  return {r * c, r * s};
}

namespace {

constexpr double kLn10 = 2.302585092994046;
constexpr double kLn2Pi = 1.8378770664093453;

}  // namespace

PrecisionContext::PrecisionContext(unsigned decimal_digits, unsigned guard_digits)
    : digits_(decimal_digits), guard_(guard_digits) {
  if (decimal_digits < 1 || decimal_digits > 10000)
    throw std::domain_error("PrecisionContext: decimal digits out of range");
  double total = static_cast<double>(digits_) + guard_;
  bits_ = static_cast<mpfr_prec_t>(std::ceil(total * kLn10 / std::log(2.0))) + 8;
  // Spouge error ~ a^(-1/2) (2pi)^(-(a+1/2)); pick a for the full digit target.
  spouge_a_ = static_cast<int>(std::ceil((total + 4) * kLn10 / kLn2Pi)) + 3;
  // The coefficient sum loses ~a*log10(e) digits to cancellation; evaluate at
  // elevated precision so the rounded result is still correct to bits().
  gbits_ = bits_ + static_cast<mpfr_prec_t>(std::ceil(spouge_a_ * 1.4427)) + 64;

  pi_ = Real(bits_);
  mpfr_const_pi(pi_.raw(), MPFR_RNDN);
  two_pi_ = pi_ * 2;
  Real pi_hi(gbits_);
  mpfr_const_pi(pi_hi.raw(), MPFR_RNDN);
  log_2pi_ = log(pi_hi * 2);

  spouge_c_.reserve(static_cast<size_t>(spouge_a_));
  spouge_c_.push_back(sqrt(pi_hi * 2));  // c_0 = sqrt(2*pi)
  Real fact = Real::of(1, gbits_);       // (k-1)!
  for (int k = 1; k < spouge_a_; ++k) {
    // c_k = (-1)^(k-1) (a-k)^(k-1/2) e^(a-k) / (k-1)!
    Real ak = Real::of(spouge_a_ - k, gbits_);
    Real t = exp((Real::of(2 * k - 1, gbits_) / 2) * log(ak) + ak) / fact;
    spouge_c_.push_back((k % 2 == 1) ? t : -t);
    fact *= k;
  }
}

Real PrecisionContext::gamma(const Real& x) const {
  if (x.is_nan() || x.sign() <= 0)
    throw std::domain_error("gamma: argument must be positive");
  Real z(gbits_);
  mpfr_set(z.raw(), x.raw(), MPFR_RNDN);
  Real shift = Real::of(1, gbits_);  // product of promoted arguments
  Real one = Real::of(1, gbits_);
  while (z < one) {
    shift *= z;
    z += one;
  }
  z -= one;  // Gamma(z+1) form
  Real s = spouge_c_[0];
  for (int k = 1; k < spouge_a_; ++k) s += spouge_c_[static_cast<size_t>(k)] / (z + k);
  Real za = z + spouge_a_;
  Real g = exp((z + one / 2) * log(za) - za) * s / shift;
  Real out(bits_);
  mpfr_set(out.raw(), g.raw(), MPFR_RNDN);
  return out;
}

}  // namespace gross
