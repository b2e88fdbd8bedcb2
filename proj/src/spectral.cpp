#include "dimer/spectral.hpp"

#include <mutex>

#include "dimer/kasteleyn.hpp"

namespace dimer {

namespace {

// 2 cos(pi num/den) at the given precision, exact 0 when num/den is an odd
// multiple of 1/2.
HPReal two_cos(long num, long den, mpfr_prec_t prec) {
    if ((2 * num) % (2 * den) == den || (2 * num) % (2 * den) == -den)
        return HPReal(0L, prec);
    HPReal angle = HPReal(num, prec) * HPReal::pi(prec) / HPReal(den, prec);
    return HPReal(2L, prec) * hp_cos(angle);
}

void require_near_integer(const HPReal& x, const mpz_class& z) {
    // Below this precision the working format cannot even distinguish adjacent
    // integers near z, so "rounds to an integer" would be vacuous.
    if (static_cast<mpfr_prec_t>(mpz_sizeinbase(z.get_mpz_t(), 2)) + 32 > x.prec())
        throw PrecisionExhausted("working precision too low to certify rounding");
    HPReal gap = hp_abs(x - hp_from_bigint(z, x.prec()));
    HPReal scale = hp_from_bigint(z >= 1 ? z : mpz_class(1), x.prec());
    if (!(gap < hp_pow2(-32, x.prec()) * scale))
        throw PrecisionExhausted("spectral product did not round to an integer");
}

}  // namespace

std::vector<HPReal> eigenvalues(const SpectrumSpec& spec, mpfr_prec_t precision_bits) {
    std::vector<HPReal> out;
    out.reserve(spec.side);
    for (int j = 1; j <= spec.side; ++j) {
        switch (spec.kind) {
            case SpectrumKind::PathGraph:
                out.push_back(two_cos(j, spec.side + 1, precision_bits));
                break;
            case SpectrumKind::CirculantPlus:
                out.push_back(two_cos(2 * j, spec.side, precision_bits));
                break;
            case SpectrumKind::CirculantMinus:
                out.push_back(two_cos(2 * j - 1, spec.side, precision_bits));
                break;
        }
    }
    return out;
}

mpfr_prec_t default_precision(int m, int n) {
    return static_cast<mpfr_prec_t>(m) * n + 64;
}

BigCount count_rectangle_spectral(int m, int n, mpfr_prec_t precision_bits) {
    GridSpec{m, n, Topology::Rectangle}.validate();
    const mpfr_prec_t prec = precision_bits ? precision_bits : default_precision(m, n);

    std::vector<HPReal> row_sq, col_sq;  // 4 cos^2 terms
    for (const HPReal& v : eigenvalues({m, SpectrumKind::PathGraph}, prec))
        row_sq.push_back(v * v);
    for (const HPReal& v : eigenvalues({n, SpectrumKind::PathGraph}, prec))
        col_sq.push_back(v * v);

    HPReal product(1L, prec);
    for (int j = 0; j < m; ++j)
        for (int k = 0; k < n / 2; ++k) product = product * (row_sq[j] + col_sq[k]);

    HPReal root = hp_sqrt(product);  // product = N^2
    mpz_class count = root.round_to_integer();
    require_near_integer(root, count);
    return count;
}

std::array<HPReal, 4> torus_spectral_products(int m, int n, mpfr_prec_t precision_bits) {
    const mpfr_prec_t prec = precision_bits ? precision_bits : default_precision(m, n);
    auto row_plus = eigenvalues({m, SpectrumKind::CirculantPlus}, prec);
    auto row_minus = eigenvalues({m, SpectrumKind::CirculantMinus}, prec);
    auto col_plus = eigenvalues({n, SpectrumKind::CirculantPlus}, prec);
    auto col_minus = eigenvalues({n, SpectrumKind::CirculantMinus}, prec);

    // A_k = D_m^{s} (x) I + I (x) i D_n^{t}: eigenvalues mu_j + i nu_k. B1
    // negates the row-wrap edges (antiperiodic rows, D_m^-), B2 the
    // column-wrap edges (antiperiodic columns, D_n^-), B3 both.
    const std::array<std::pair<const std::vector<HPReal>*, const std::vector<HPReal>*>, 4>
        spectra{{{&row_plus, &col_plus},
                 {&row_minus, &col_plus},
                 {&row_plus, &col_minus},
                 {&row_minus, &col_minus}}};

    std::array<HPReal, 4> out;
    for (int k = 0; k < 4; ++k) {
        HPReal re(1L, prec), im(0L, prec);
        bool zero = false;
        for (const HPReal& mu : *spectra[k].first) {
            for (const HPReal& nu : *spectra[k].second) {
                if (mu.is_zero() && nu.is_zero()) {
                    zero = true;
                    break;
                }
                HPReal nre = re * mu - im * nu;
                im = re * nu + im * mu;
                re = nre;
            }
            if (zero) break;
        }
        if (zero) {
            out[k] = HPReal(0L, prec);
            continue;
        }
        HPReal scale = hp_abs(re) + HPReal(1L, prec);
        if (!(hp_abs(im) < hp_pow2(-32, prec) * scale))
            throw PrecisionExhausted("torus spectral product has imaginary residue");
        if (re.sign() < 0)
            throw SignCalibrationFailure("torus spectral product is negative");
        out[k] = re;
    }
    return out;
}

std::array<int, 4> torus_calibrated_signs(int m, int n) {
    // One calibration per (m mod 4, n mod 4) parity class, at its smallest
    // member, against the exact determinants.
    const int cls = torus_negated_class(m, n);
    static std::array<std::array<int, 4>, 4> signs;
    static std::array<std::once_flag, 4> once;
    std::call_once(once[cls], [cls] {
        const int cm = (cls & 1) ? 2 : 4, cn = (cls & 2) ? 2 : 4;
        const auto d = torus_determinants(cm, cn, 1);
        const int g = torus_reference_sign(cm, cn);
        for (int k = 0; k < 4; ++k) signs[cls][k] = g * sgn(d[k].re);
    });
    return signs[cls];
}

BigCount count_torus_spectral(int m, int n, mpfr_prec_t precision_bits, bool experimental) {
    GridSpec{m, n, Topology::Torus}.validate();
    if (!experimental && (m % 4 != 0 || n % 4 != 0))
        throw InvalidDimensions(
            "validated spectral torus path requires sides divisible by 4 "
            "(use the experimental flag for other even sizes)");
    const mpfr_prec_t prec = precision_bits ? precision_bits : default_precision(m, n);

    const int kstar = torus_negated_class(m, n);
    const auto products = torus_spectral_products(m, n, prec);
    if (!products[kstar].is_zero())
        throw SignCalibrationFailure("negated torus spectral product expected to vanish");
    const auto signs = torus_calibrated_signs(m, n);

    HPReal sum(0L, prec);
    for (int k = 0; k < 4; ++k) {
        HPReal term = hp_sqrt(products[k]);
        const int combination = (k == kstar) ? -1 : 1;
        if (combination * signs[k] < 0) term = -term;
        sum = sum + term;
    }
    sum = sum / HPReal(2L, prec);

    mpz_class count = sum.round_to_integer();
    if (count < 0) throw SignCalibrationFailure("negative torus spectral count");
    require_near_integer(sum, count);
    return count;
}

}  // namespace dimer
