#pragma once

#include <vector>

#include "dimer/errors.hpp"
#include "dimer/hpreal.hpp"

namespace dimer {

// Catalan's constant G = 1 - 1/9 + 1/25 - 1/49 + ..., summed with alternating
// series acceleration (the raw series needs ~10^k terms for k digits).
HPReal catalan_constant(mpfr_prec_t precision_bits);

// Integrand of the entropy double integral:
//   (1/2) log|2 cos(pi s) + 2i cos(pi t)| = (1/4) log(4 cos^2 pi s + 4 cos^2 pi t).
double entropy_integrand(double s, double t);

// (1/2) int_0^1 int_0^1 log|2 cos(pi s) + 2i cos(pi t)| ds dt, by adaptive
// quadrature around the log singularity at (1/2, 1/2). Equals G/pi. Throws
// ToleranceNotMet if the error estimate cannot be driven below tolerance.
HPReal entropy_integral(double tolerance);

struct EntropyReport {
    int n = 0;
    HPReal per_site_log;  // (1/n^2) log N(n,n), from the spectral double sum
    HPReal target;        // G/pi
    HPReal gap;           // target - per_site_log
};

// Reports for every even n <= n_max. The double sum avoids the rounded integer
// count, so large n stays cheap.
std::vector<EntropyReport> finite_size_entropy(int n_max, mpfr_prec_t precision_bits);

}  // namespace dimer
