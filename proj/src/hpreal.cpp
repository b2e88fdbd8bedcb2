#include "dimer/hpreal.hpp"

#include <algorithm>
#include <cstdio>
#include <vector>

namespace dimer {

namespace {
mpfr_prec_t join(const HPReal& a, const HPReal& b) {
    return std::max(a.prec(), b.prec());
}
}  // namespace

HPReal HPReal::pi(mpfr_prec_t prec) {
    HPReal r(prec);
    mpfr_const_pi(r.v_, MPFR_RNDN);
    return r;
}

std::string HPReal::str(int digits) const {
    char fmt[32];
    std::snprintf(fmt, sizeof(fmt), "%%.%dRg", digits);
    char* s = nullptr;
    mpfr_asprintf(&s, fmt, v_);
    std::string out(s);
    mpfr_free_str(s);
    return out;
}

mpz_class HPReal::round_to_integer() const {
    mpz_class z;
    mpfr_get_z(z.get_mpz_t(), v_, MPFR_RNDN);
    return z;
}

HPReal operator+(const HPReal& a, const HPReal& b) {
    HPReal r(join(a, b));
    mpfr_add(r.v_, a.v_, b.v_, MPFR_RNDN);
    return r;
}

HPReal operator-(const HPReal& a, const HPReal& b) {
    HPReal r(join(a, b));
    mpfr_sub(r.v_, a.v_, b.v_, MPFR_RNDN);
    return r;
}

HPReal operator-(const HPReal& a) {
    HPReal r(a.prec());
    mpfr_neg(r.v_, a.v_, MPFR_RNDN);
    return r;
}

HPReal operator*(const HPReal& a, const HPReal& b) {
    HPReal r(join(a, b));
    mpfr_mul(r.v_, a.v_, b.v_, MPFR_RNDN);
    return r;
}

HPReal operator/(const HPReal& a, const HPReal& b) {
    HPReal r(join(a, b));
    mpfr_div(r.v_, a.v_, b.v_, MPFR_RNDN);
    return r;
}

HPReal hp_cos(const HPReal& x) {
    HPReal r(x.prec());
    mpfr_cos(r.raw(), x.raw(), MPFR_RNDN);
    return r;
}

HPReal hp_log(const HPReal& x) {
    HPReal r(x.prec());
    mpfr_log(r.raw(), x.raw(), MPFR_RNDN);
    return r;
}

HPReal hp_sqrt(const HPReal& x) {
    HPReal r(x.prec());
    mpfr_sqrt(r.raw(), x.raw(), MPFR_RNDN);
    return r;
}

HPReal hp_exp(const HPReal& x) {
    HPReal r(x.prec());
    mpfr_exp(r.raw(), x.raw(), MPFR_RNDN);
    return r;
}

HPReal hp_abs(const HPReal& x) {
    HPReal r(x.prec());
    mpfr_abs(r.raw(), x.raw(), MPFR_RNDN);
    return r;
}

HPReal hp_pow2(long e, mpfr_prec_t prec) {
    HPReal r(1L, prec);
    mpfr_mul_2si(r.raw(), r.raw(), e, MPFR_RNDN);
    return r;
}

HPReal hp_from_bigint(const mpz_class& z, mpfr_prec_t prec) {
    HPReal r(prec);
    mpfr_set_z(r.raw(), z.get_mpz_t(), MPFR_RNDN);
    return r;
}

}  // namespace dimer
