#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

#include "dimer/errors.hpp"

namespace dimer {

using BigInt = mpz_class;
using BigCount = mpz_class;

// Exact complex integer a+bi. Components are arbitrary precision.
struct GaussianInt {
    BigInt re;
    BigInt im;

    GaussianInt() : re(0), im(0) {}
    GaussianInt(long r, long i = 0) : re(r), im(i) {}
    GaussianInt(BigInt r, BigInt i) : re(std::move(r)), im(std::move(i)) {}

    bool is_zero() const { return re == 0 && im == 0; }
    std::string str() const;

    friend bool operator==(const GaussianInt&, const GaussianInt&) = default;
};

GaussianInt operator+(const GaussianInt& a, const GaussianInt& b);
GaussianInt operator-(const GaussianInt& a, const GaussianInt& b);
GaussianInt operator-(const GaussianInt& a);
GaussianInt operator*(const GaussianInt& a, const GaussianInt& b);

// Throws InexactDivision unless b divides a exactly in Z[i].
GaussianInt exact_div(const GaussianInt& a, const GaussianInt& b);

// Dense square matrix over Z[i].
class GaussianMatrix {
public:
    explicit GaussianMatrix(int dim) : dim_(dim), entries_(dim * dim) {}

    int dim() const { return dim_; }
    GaussianInt& at(int r, int c) { return entries_[r * dim_ + c]; }
    const GaussianInt& at(int r, int c) const { return entries_[r * dim_ + c]; }

    static GaussianMatrix identity(int dim);
    GaussianMatrix transpose() const;

private:
    int dim_;
    std::vector<GaussianInt> entries_;
};

// Exact determinant by fraction-free (Bareiss) elimination with row/column
// pivoting on the first nonzero entry. Returns 0 for singular input.
GaussianInt det_exact(const GaussianMatrix& m);

}  // namespace dimer
