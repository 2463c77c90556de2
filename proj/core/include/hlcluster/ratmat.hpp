#pragma once

#include <gmpxx.h>

#include <vector>

namespace hlc {

/// Dense matrix over exact rationals; just enough linear algebra for
/// intertwiner spaces, kernels and images of representation maps.
class RatMat {
public:
    RatMat() = default;
    RatMat(int rows, int cols) : rows_(rows), cols_(cols), a_(static_cast<size_t>(rows) * cols, 0) {}

    static RatMat identity(int n);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    mpq_class& operator()(int r, int c) { return a_[static_cast<size_t>(r) * cols_ + c]; }
    const mpq_class& operator()(int r, int c) const { return a_[static_cast<size_t>(r) * cols_ + c]; }

    RatMat operator*(const RatMat& o) const;
    RatMat operator+(const RatMat& o) const;
    RatMat operator-(const RatMat& o) const;
    bool operator==(const RatMat& o) const = default;

    RatMat transpose() const;

    int rank() const;
    /// Columns form a basis of the null space.
    RatMat kernel_basis() const;
    /// Columns form a basis of the column space.
    RatMat image_basis() const;

    /// Horizontal / vertical stacking.
    static RatMat hstack(const RatMat& a, const RatMat& b);
    static RatMat vstack(const RatMat& a, const RatMat& b);

    /// Solves A X = B exactly (free variables set to 0); throws
    /// std::domain_error if the system is inconsistent.
    static RatMat solve(const RatMat& A, const RatMat& B);
    RatMat inverse() const;

private:
    int rows_ = 0, cols_ = 0;
    std::vector<mpq_class> a_;
};

}  // namespace hlc
