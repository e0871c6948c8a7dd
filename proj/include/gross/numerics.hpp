#pragma once
// Arbitrary-precision real and complex arithmetic on top of MPFR, plus the
// special functions the rest of the code needs (pi, exp/log/sqrt, Gamma).
// Precision policy: a PrecisionContext fixes P decimal digits plus guard
// digits and maps them to a bit precision; every value created through the
// context carries that precision, and arithmetic propagates the larger
// operand precision.

#include <gmpxx.h>
#include <mpfr.h>

#include <string>
#include <utility>
#include <vector>

namespace gross {

class Real {
 public:
  Real() { mpfr_init2(v_, 53); mpfr_set_nan(v_); }
  explicit Real(mpfr_prec_t prec) { mpfr_init2(v_, prec); mpfr_set_nan(v_); }
  Real(const Real& o) { mpfr_init2(v_, mpfr_get_prec(o.v_)); mpfr_set(v_, o.v_, MPFR_RNDN); }
  Real(Real&& o) noexcept { mpfr_init2(v_, 53); mpfr_swap(v_, o.v_); }
  Real& operator=(const Real& o);
  Real& operator=(Real&& o) noexcept { mpfr_swap(v_, o.v_); return *this; }
  ~Real() { mpfr_clear(v_); }

  static Real of(long v, mpfr_prec_t prec);
  static Real of(const mpz_class& v, mpfr_prec_t prec);
  static Real parse(const std::string& s, mpfr_prec_t prec);  // decimal string
  static Real pow10(long e, mpfr_prec_t prec);                // 10^e

  mpfr_prec_t prec() const { return mpfr_get_prec(v_); }
  int sign() const { return mpfr_sgn(v_); }
  bool is_nan() const { return mpfr_nan_p(v_) != 0; }
  double approx() const { return mpfr_get_d(v_, MPFR_RNDN); }
  mpz_class round_to_integer() const;

  // Scientific notation with `digits` significant digits, e.g. "1.25e+00".
  std::string str(size_t digits) const;

  mpfr_ptr raw() { return v_; }
  mpfr_srcptr raw() const { return v_; }

  Real operator-() const;
  Real& operator+=(const Real& o) { mpfr_add(v_, v_, o.v_, MPFR_RNDN); return *this; }
  Real& operator-=(const Real& o) { mpfr_sub(v_, v_, o.v_, MPFR_RNDN); return *this; }
  Real& operator*=(const Real& o) { mpfr_mul(v_, v_, o.v_, MPFR_RNDN); return *this; }
  Real& operator/=(const Real& o) { mpfr_div(v_, v_, o.v_, MPFR_RNDN); return *this; }
  Real& operator*=(long k) { mpfr_mul_si(v_, v_, k, MPFR_RNDN); return *this; }
  Real& operator/=(long k) { mpfr_div_si(v_, v_, k, MPFR_RNDN); return *this; }

  friend Real operator+(const Real& a, const Real& b) { return bin(a, b, mpfr_add); }
  friend Real operator-(const Real& a, const Real& b) { return bin(a, b, mpfr_sub); }
  friend Real operator*(const Real& a, const Real& b) { return bin(a, b, mpfr_mul); }
  friend Real operator/(const Real& a, const Real& b) { return bin(a, b, mpfr_div); }
  friend Real operator*(const Real& a, long k);
  friend Real operator/(const Real& a, long k);
  friend Real operator+(const Real& a, long k);
  friend Real operator-(const Real& a, long k);

  friend bool operator<(const Real& a, const Real& b) { return mpfr_less_p(a.v_, b.v_); }
  friend bool operator>(const Real& a, const Real& b) { return mpfr_greater_p(a.v_, b.v_); }
  friend bool operator<=(const Real& a, const Real& b) { return mpfr_lessequal_p(a.v_, b.v_); }
  friend bool operator>=(const Real& a, const Real& b) { return mpfr_greaterequal_p(a.v_, b.v_); }
  friend bool operator==(const Real& a, const Real& b) { return mpfr_equal_p(a.v_, b.v_); }

 private:
  using mpfr_bin_fn = int (*)(mpfr_ptr, mpfr_srcptr, mpfr_srcptr, mpfr_rnd_t);
  static Real bin(const Real& a, const Real& b, mpfr_bin_fn f);
  mpfr_t v_;
};

Real abs(const Real& x);
Real sqrt(const Real& x);  // domain_error for x < 0
Real exp(const Real& x);
Real log(const Real& x);   // domain_error for x <= 0
Real pow(const Real& x, const Real& y);
Real atan2(const Real& y, const Real& x);
int cmp_abs(const Real& a, const Real& b);

struct Complex {
  Real re, im;

  Complex() = default;
  Complex(Real r, Real i) : re(std::move(r)), im(std::move(i)) {}

  Complex conj() const { return {re, -im}; }
  Real norm() const { return re * re + im * im; }  // |z|^2
  Real abs() const;

  Complex operator-() const { return {-re, -im}; }
  friend Complex operator+(const Complex& a, const Complex& b) { return {a.re + b.re, a.im + b.im}; }
  friend Complex operator-(const Complex& a, const Complex& b) { return {a.re - b.re, a.im - b.im}; }
  friend Complex operator*(const Complex& a, const Complex& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  friend Complex operator*(const Complex& a, const Real& s) { return {a.re * s, a.im * s}; }
  friend Complex operator/(const Complex& a, const Complex& b);
  Complex& operator+=(const Complex& o) { re += o.re; im += o.im; return *this; }
  Complex& operator*=(const Complex& o) { *this = *this * o; return *this; }
};

Complex pow_int(const Complex& z, long n, mpfr_prec_t prec);  // n >= 0
// Principal n-th root: |z|^(1/n) * cis(arg/n) with arg taken in [0, 2pi).
Complex root_principal(const Complex& z, long n);

// Decimal precision target plus cached constants and Gamma machinery.
// Immutable after construction; safe to share across threads read-only.
class PrecisionContext {
 public:
  explicit PrecisionContext(unsigned decimal_digits, unsigned guard_digits = 15);

  unsigned decimal_digits() const { return digits_; }
  unsigned guard_digits() const { return guard_; }
  mpfr_prec_t bits() const { return bits_; }

  Real real(long v) const { return Real::of(v, bits_); }
  Real real(const mpz_class& v) const { return Real::of(v, bits_); }
  Real real(const std::string& s) const { return Real::parse(s, bits_); }
  Complex complex(long re, long im) const { return {real(re), real(im)}; }

  const Real& pi() const { return pi_; }
  const Real& two_pi() const { return two_pi_; }
  const Real& log_2pi() const { return log_2pi_; }

  // Gamma(x) for real x > 0 via Spouge's approximation with argument
  // promotion below 1; evaluated at elevated internal precision to absorb
  // cancellation across the coefficient sum, then rounded to bits().
  Real gamma(const Real& x) const;
  Real log_gamma(const Real& x) const { return log(gamma(x)); }

  int spouge_a() const { return spouge_a_; }
  mpfr_prec_t internal_bits() const { return gbits_; }

 private:
  unsigned digits_, guard_;
  mpfr_prec_t bits_, gbits_;
  int spouge_a_;
  Real pi_, two_pi_, log_2pi_;
  std::vector<Real> spouge_c_;  // c_0 .. c_{a-1} at internal precision
};

}  // namespace gross
