#include "dimer/asymptotics.hpp"

#include <cmath>

#include "dimer/errors.hpp"

namespace dimer {

HPReal catalan_constant(mpfr_prec_t precision_bits) {
    if (precision_bits < 16) precision_bits = 16;
    const mpfr_prec_t wp = precision_bits + 64;

    // Cohen-Rodriguez Villegas-Zagier acceleration of sum (-1)^k a_k with
    // a_k = 1/(2k+1)^2; error decays like (3+sqrt 8)^-n.
    const long n = static_cast<long>(std::ceil(precision_bits * 0.3927)) + 8;

    // d_n = ((3+sqrt 8)^n + (3-sqrt 8)^n)/2, an exact integer.
    mpz_class d0 = 1, d1 = 3;
    for (long k = 1; k < n; ++k) {
        mpz_class next = 6 * d1 - d0;
        d0 = d1;
        d1 = next;
    }
    const HPReal d = hp_from_bigint(n == 0 ? d0 : d1, wp);

    HPReal b(-1L, wp);
    HPReal c = -d;
    HPReal s(0L, wp);
    for (long k = 0; k < n; ++k) {
        c = b - c;
        const HPReal denom(static_cast<long>(2 * k + 1), wp);
        s = s + c / (denom * denom);
        // b_{k+1} = b_k * 2(k+n)(k-n) / ((2k+1)(k+1))
        b = b * HPReal(2 * (k + n), wp) * HPReal(k - n, wp) /
            (denom * HPReal(k + 1, wp));
    }
    HPReal g = s / d;

    HPReal out(precision_bits);
    mpfr_set(out.raw(), g.raw(), MPFR_RNDN);
    return out;
}

double entropy_integrand(double s, double t) {
    const double cs = std::cos(M_PI * s), ct = std::cos(M_PI * t);
    return 0.25 * std::log(4 * cs * cs + 4 * ct * ct);
}

namespace {

// 5-point Gauss-Legendre on [-1, 1].
constexpr double kGlNode[5] = {-0.906179845938664, -0.538469310105683, 0.0,
                               0.538469310105683, 0.906179845938664};
constexpr double kGlWeight[5] = {0.236926885056189, 0.478628670499366,
                                 0.568888888888889, 0.478628670499366,
                                 0.236926885056189};

double gl_cell(double x0, double y0, double h) {
    const double cx = x0 + h / 2, cy = y0 + h / 2, r = h / 2;
    double sum = 0;
    for (int i = 0; i < 5; ++i)
        for (int j = 0; j < 5; ++j)
            sum += kGlWeight[i] * kGlWeight[j] *
                   entropy_integrand(cx + r * kGlNode[i], cy + r * kGlNode[j]);
    return sum * r * r;
}

struct Quadrature {
    double err = 0;

    double refine(double x0, double y0, double h, double tol, int depth) {
        const double coarse = gl_cell(x0, y0, h);
        const double hh = h / 2;
        const double fine = gl_cell(x0, y0, hh) + gl_cell(x0 + hh, y0, hh) +
                            gl_cell(x0, y0 + hh, hh) + gl_cell(x0 + hh, y0 + hh, hh);
        const double diff = std::abs(fine - coarse);
        if (diff < tol || depth >= 30) {
            err += diff;
            return fine;
        }
        return refine(x0, y0, hh, tol / 4, depth + 1) +
               refine(x0 + hh, y0, hh, tol / 4, depth + 1) +
               refine(x0, y0 + hh, hh, tol / 4, depth + 1) +
               refine(x0 + hh, y0 + hh, hh, tol / 4, depth + 1);
    }
};

}  // namespace

HPReal entropy_integral(double tolerance) {
    // Double-precision quadrature cannot certify below ~1e-13.
    if (tolerance < 1e-13)
        throw ToleranceNotMet("requested tolerance below the certification floor");
    // The integrand is symmetric under s -> 1-s and t -> 1-t, so integrate the
    // lower-left quadrant (singularity at its far corner) and quadruple.
    Quadrature q;
    const double quadrant = q.refine(0.0, 0.0, 0.5, tolerance / 64, 0);
    const double total = 4 * quadrant;
    if (4 * q.err > tolerance)
        throw ToleranceNotMet("quadrature error estimate above tolerance");
    return HPReal(total, 64);
}

std::vector<EntropyReport> finite_size_entropy(int n_max, mpfr_prec_t precision_bits) {
    const mpfr_prec_t prec = precision_bits > 0 ? precision_bits : 256;
    const HPReal target = catalan_constant(prec) / HPReal::pi(prec);

    std::vector<EntropyReport> out;
    for (int n = 2; n <= n_max; n += 2) {
        // log N(n,n) = (1/4) sum_{j,k} log(4cos^2(pi j/(n+1)) + 4cos^2(pi k/(n+1)))
        std::vector<HPReal> sq;
        const HPReal pi = HPReal::pi(prec);
        for (int j = 1; j <= n; ++j) {
            HPReal c = HPReal(2L, prec) * hp_cos(HPReal(j, prec) * pi / HPReal(n + 1, prec));
            sq.push_back(c * c);
        }
        HPReal sum(0L, prec);
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k) sum = sum + hp_log(sq[j] + sq[k]);
        HPReal per_site = sum / HPReal(4L * n * n, prec);
        out.push_back({n, per_site, target, target - per_site});
    }
    return out;
}

}  // namespace dimer
