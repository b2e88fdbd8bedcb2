#pragma once

#include <gmpxx.h>
#include <mpfr.h>

#include <string>
#include <utility>

namespace dimer {

// Arbitrary-precision real. Every value carries its working precision in bits;
// binary operations round at the larger of the two operand precisions.
class HPReal {
public:
    explicit HPReal(mpfr_prec_t prec = 64) { mpfr_init2(v_, prec); mpfr_set_zero(v_, 1); }
    HPReal(long x, mpfr_prec_t prec) { mpfr_init2(v_, prec); mpfr_set_si(v_, x, MPFR_RNDN); }
    HPReal(int x, mpfr_prec_t prec) : HPReal(static_cast<long>(x), prec) {}
    HPReal(double x, mpfr_prec_t prec) { mpfr_init2(v_, prec); mpfr_set_d(v_, x, MPFR_RNDN); }

    HPReal(const HPReal& o) { mpfr_init2(v_, o.prec()); mpfr_set(v_, o.v_, MPFR_RNDN); }
    HPReal(HPReal&& o) noexcept { mpfr_init2(v_, o.prec()); mpfr_swap(v_, o.v_); }
    HPReal& operator=(HPReal o) noexcept { mpfr_swap(v_, o.v_); return *this; }
    ~HPReal() { mpfr_clear(v_); }

    mpfr_prec_t prec() const { return mpfr_get_prec(v_); }
    mpfr_ptr raw() { return v_; }
    mpfr_srcptr raw() const { return v_; }

    static HPReal pi(mpfr_prec_t prec);

    bool is_zero() const { return mpfr_zero_p(v_); }
    int sign() const { return mpfr_sgn(v_); }
    double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
    std::string str(int digits = 20) const;

    // Nearest integer, as an exact big integer.
    mpz_class round_to_integer() const;

    friend HPReal operator+(const HPReal& a, const HPReal& b);
    friend HPReal operator-(const HPReal& a, const HPReal& b);
    friend HPReal operator-(const HPReal& a);
    friend HPReal operator*(const HPReal& a, const HPReal& b);
    friend HPReal operator/(const HPReal& a, const HPReal& b);
    friend bool operator<(const HPReal& a, const HPReal& b) { return mpfr_less_p(a.v_, b.v_); }
    friend bool operator>(const HPReal& a, const HPReal& b) { return mpfr_greater_p(a.v_, b.v_); }
    friend bool operator<=(const HPReal& a, const HPReal& b) { return mpfr_lessequal_p(a.v_, b.v_); }

private:
    mpfr_t v_;
};

HPReal hp_cos(const HPReal& x);
HPReal hp_log(const HPReal& x);
HPReal hp_sqrt(const HPReal& x);
HPReal hp_exp(const HPReal& x);
HPReal hp_abs(const HPReal& x);
// 2^e at the given precision.
HPReal hp_pow2(long e, mpfr_prec_t prec);
HPReal hp_from_bigint(const mpz_class& z, mpfr_prec_t prec);

}  // namespace dimer
