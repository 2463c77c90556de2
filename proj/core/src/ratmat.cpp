#include "hlcluster/ratmat.hpp"

#include <stdexcept>

namespace hlc {

RatMat RatMat::identity(int n) {
    RatMat m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

RatMat RatMat::operator*(const RatMat& o) const {
    if (cols_ != o.rows_) throw std::invalid_argument("RatMat: dimension mismatch");
    RatMat p(rows_, o.cols_);
    for (int r = 0; r < rows_; ++r)
        for (int k = 0; k < cols_; ++k) {
            const mpq_class& v = (*this)(r, k);
            if (v == 0) continue;
            for (int c = 0; c < o.cols_; ++c) p(r, c) += v * o(k, c);
        }
    return p;
}

RatMat RatMat::operator+(const RatMat& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("RatMat: dimension mismatch");
    RatMat p(*this);
    for (size_t i = 0; i < a_.size(); ++i) p.a_[i] += o.a_[i];
    return p;
}

RatMat RatMat::operator-(const RatMat& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("RatMat: dimension mismatch");
    RatMat p(*this);
    for (size_t i = 0; i < a_.size(); ++i) p.a_[i] -= o.a_[i];
    return p;
}

RatMat RatMat::transpose() const {
    RatMat t(cols_, rows_);
    for (int r = 0; r < rows_; ++r)
        for (int c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
    return t;
}

namespace {

// Reduced row echelon form in place; returns pivot columns.
std::vector<int> rref(RatMat& m) {
    std::vector<int> pivots;
    int row = 0;
    for (int col = 0; col < m.cols() && row < m.rows(); ++col) {
        int sel = -1;
        for (int r = row; r < m.rows(); ++r)
            if (m(r, col) != 0) { sel = r; break; }
        if (sel < 0) continue;
        if (sel != row)
            for (int c = 0; c < m.cols(); ++c) std::swap(m(sel, c), m(row, c));
        mpq_class inv = 1 / m(row, col);
        for (int c = 0; c < m.cols(); ++c) m(row, c) *= inv;
        for (int r = 0; r < m.rows(); ++r) {
            if (r == row || m(r, col) == 0) continue;
            mpq_class f = m(r, col);
            for (int c = 0; c < m.cols(); ++c) m(r, c) -= f * m(row, c);
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

}  // namespace

int RatMat::rank() const {
    RatMat m(*this);
    return static_cast<int>(rref(m).size());
}

RatMat RatMat::kernel_basis() const {
    RatMat m(*this);
    auto pivots = rref(m);
    std::vector<bool> is_pivot(cols_, false);
    for (int p : pivots) is_pivot[p] = true;
    int nfree = cols_ - static_cast<int>(pivots.size());
    RatMat K(cols_, nfree);
    int k = 0;
    for (int col = 0; col < cols_; ++col) {
        if (is_pivot[col]) continue;
        K(col, k) = 1;
        for (size_t pr = 0; pr < pivots.size(); ++pr)
            K(pivots[pr], k) = -m(static_cast<int>(pr), col);
        ++k;
    }
    return K;
}

RatMat RatMat::image_basis() const {
    RatMat m(*this);
    auto pivots = rref(m);
    RatMat I(rows_, static_cast<int>(pivots.size()));
    for (size_t k = 0; k < pivots.size(); ++k)
        for (int r = 0; r < rows_; ++r) I(r, static_cast<int>(k)) = (*this)(r, pivots[k]);
    return I;
}

RatMat RatMat::hstack(const RatMat& a, const RatMat& b) {
    if (a.rows_ != b.rows_) throw std::invalid_argument("hstack: row mismatch");
    RatMat m(a.rows_, a.cols_ + b.cols_);
    for (int r = 0; r < a.rows_; ++r) {
        for (int c = 0; c < a.cols_; ++c) m(r, c) = a(r, c);
        for (int c = 0; c < b.cols_; ++c) m(r, a.cols_ + c) = b(r, c);
    }
    return m;
}

RatMat RatMat::vstack(const RatMat& a, const RatMat& b) {
    if (a.cols_ != b.cols_) throw std::invalid_argument("vstack: column mismatch");
    RatMat m(a.rows_ + b.rows_, a.cols_);
    for (int c = 0; c < a.cols_; ++c) {
        for (int r = 0; r < a.rows_; ++r) m(r, c) = a(r, c);
        for (int r = 0; r < b.rows_; ++r) m(a.rows_ + r, c) = b(r, c);
    }
    return m;
}

RatMat RatMat::solve(const RatMat& A, const RatMat& B) {
    if (A.rows_ != B.rows_) throw std::invalid_argument("solve: row mismatch");
    RatMat aug = hstack(A, B);
    auto pivots = rref(aug);
    for (size_t r = 0; r < pivots.size(); ++r)
        if (pivots[r] >= A.cols_) throw std::domain_error("solve: inconsistent system");
    RatMat X(A.cols_, B.cols_);
    for (size_t r = 0; r < pivots.size(); ++r)
        for (int c = 0; c < B.cols_; ++c) X(pivots[r], c) = aug(static_cast<int>(r), A.cols_ + c);
    return X;
}

RatMat RatMat::inverse() const {
    if (rows_ != cols_) throw std::invalid_argument("inverse: not square");
    RatMat X = solve(*this, identity(rows_));
    if (!((*this) * X == identity(rows_))) throw std::domain_error("inverse: singular matrix");
    return X;
}

}  // namespace hlc
