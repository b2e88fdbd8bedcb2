#include "dimer/gaussian.hpp"

#include <utility>

namespace dimer {

std::string GaussianInt::str() const {
    if (im == 0) return re.get_str();
    std::string s = re.get_str();
    s += (im < 0) ? "-" : "+";
    s += BigInt(abs(im)).get_str();
    s += "i";
    return s;
}

GaussianInt operator+(const GaussianInt& a, const GaussianInt& b) {
    return {a.re + b.re, a.im + b.im};
}

GaussianInt operator-(const GaussianInt& a, const GaussianInt& b) {
    return {a.re - b.re, a.im - b.im};
}

GaussianInt operator-(const GaussianInt& a) { return {-a.re, -a.im}; }

GaussianInt operator*(const GaussianInt& a, const GaussianInt& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}

GaussianInt exact_div(const GaussianInt& a, const GaussianInt& b) {
    if (b.is_zero()) throw InexactDivision("division by zero in Z[i]");
    // a/b = a*conj(b) / |b|^2, both components must divide exactly.
    const BigInt norm = b.re * b.re + b.im * b.im;
    const GaussianInt num{a.re * b.re + a.im * b.im, a.im * b.re - a.re * b.im};
    BigInt qr, rr, qi, ri;
    mpz_tdiv_qr(qr.get_mpz_t(), rr.get_mpz_t(), num.re.get_mpz_t(), norm.get_mpz_t());
    mpz_tdiv_qr(qi.get_mpz_t(), ri.get_mpz_t(), num.im.get_mpz_t(), norm.get_mpz_t());
    if (rr != 0 || ri != 0)
        throw InexactDivision("inexact Gaussian-integer division");
    return {std::move(qr), std::move(qi)};
}

GaussianMatrix GaussianMatrix::identity(int dim) {
    GaussianMatrix m(dim);
    for (int i = 0; i < dim; ++i) m.at(i, i) = GaussianInt(1);
    return m;
}

GaussianMatrix GaussianMatrix::transpose() const {
    GaussianMatrix t(dim_);
    for (int r = 0; r < dim_; ++r)
        for (int c = 0; c < dim_; ++c) t.at(c, r) = at(r, c);
    return t;
}

GaussianInt det_exact(const GaussianMatrix& input) {
    const int n = input.dim();
    if (n == 0) return GaussianInt(1);

    GaussianMatrix m = input;
    int sign = 1;
    GaussianInt prev(1);

    for (int k = 0; k + 1 < n; ++k) {
        // First nonzero entry in column order within the trailing block.
        int pr = -1, pc = -1;
        for (int c = k; c < n && pr < 0; ++c)
            for (int r = k; r < n; ++r)
                if (!m.at(r, c).is_zero()) {
                    pr = r;
                    pc = c;
                    break;
                }
        if (pr < 0) return GaussianInt(0);
        if (pr != k) {
            for (int c = 0; c < n; ++c) std::swap(m.at(pr, c), m.at(k, c));
            sign = -sign;
        }
        if (pc != k) {
            for (int r = 0; r < n; ++r) std::swap(m.at(r, pc), m.at(r, k));
            sign = -sign;
        }

        for (int i = k + 1; i < n; ++i) {
            for (int j = k + 1; j < n; ++j)
                m.at(i, j) =
                    exact_div(m.at(k, k) * m.at(i, j) - m.at(i, k) * m.at(k, j), prev);
            m.at(i, k) = GaussianInt(0);
        }
        prev = m.at(k, k);
    }

    GaussianInt det = m.at(n - 1, n - 1);
    if (sign < 0) det = -det;
    return det;
}

}  // namespace dimer
