#pragma once

#include <functional>
#include <vector>

#include "whitefox/rings.hpp"

namespace wf {

// Ring descriptor traits: how to make 0 and 1 of each element type.
template <class T>
struct RingTraits;

template <>
struct RingTraits<Laurent> {
    using Desc = CoeffRing;
    static Laurent zero(const Desc& d) { return Laurent::zero(d); }
    static Laurent one(const Desc& d) { return Laurent::one(d); }
};

template <>
struct RingTraits<GroupRingElem> {
    using Desc = i64;  // cyclic order n
    static GroupRingElem zero(const Desc& n) { return GroupRingElem::zero(n); }
    static GroupRingElem one(const Desc& n) { return GroupRingElem::one(n); }
};

template <>
struct RingTraits<NormQuotElem> {
    using Desc = i64;
    static NormQuotElem zero(const Desc& n) { return NormQuotElem::zero(n); }
    static NormQuotElem one(const Desc& n) { return NormQuotElem::one(n); }
};

// Dense exact matrix over any of the supported rings.
template <class T>
class Matrix {
public:
    using Desc = typename RingTraits<T>::Desc;

    Matrix() = default;
    Matrix(Desc ring, int rows, int cols)
        : ring_(ring), rows_(rows), cols_(cols),
          a_(static_cast<size_t>(rows) * static_cast<size_t>(cols), RingTraits<T>::zero(ring)) {
        if (rows < 0 || cols < 0) fail(Errc::DimensionMismatch, "negative matrix dimension");
    }

    static Matrix identity(Desc ring, int k) {
        Matrix m(ring, k, k);
        for (int i = 0; i < k; ++i) m.at(i, i) = RingTraits<T>::one(ring);
        return m;
    }

    static Matrix diagonal(Desc ring, const std::vector<T>& d) {
        Matrix m(ring, static_cast<int>(d.size()), static_cast<int>(d.size()));
        for (size_t i = 0; i < d.size(); ++i) m.at(static_cast<int>(i), static_cast<int>(i)) = d[i];
        return m;
    }

    const Desc& ring() const { return ring_; }
    int rows() const { return rows_; }
    int cols() const { return cols_; }
    bool is_square() const { return rows_ == cols_; }

    T& at(int i, int j) { return a_[index(i, j)]; }
    const T& at(int i, int j) const { return a_[index(i, j)]; }

    bool operator==(const Matrix& o) const = default;

    Matrix operator+(const Matrix& o) const {
        require_same_shape(o);
        Matrix r = *this;
        for (size_t i = 0; i < a_.size(); ++i) r.a_[i] = r.a_[i] + o.a_[i];
        return r;
    }

    Matrix operator-(const Matrix& o) const {
        require_same_shape(o);
        Matrix r = *this;
        for (size_t i = 0; i < a_.size(); ++i) r.a_[i] = r.a_[i] - o.a_[i];
        return r;
    }

    Matrix operator*(const Matrix& o) const {
        if (!(ring_ == o.ring_)) fail(Errc::ModulusMismatch, "matrix ring mismatch");
        if (cols_ != o.rows_) fail(Errc::DimensionMismatch, "matrix product shape mismatch");
        Matrix r(ring_, rows_, o.cols_);
        for (int i = 0; i < rows_; ++i)
            for (int k = 0; k < cols_; ++k) {
                const T& lhs = at(i, k);
                for (int j = 0; j < o.cols_; ++j) r.at(i, j) = r.at(i, j) + lhs * o.at(k, j);
            }
        return r;
    }

    Matrix scaled(const T& c) const {
        Matrix r = *this;
        for (auto& e : r.a_) e = e * c;
        return r;
    }

    bool is_zero() const {
        const T z = RingTraits<T>::zero(ring_);
        for (const auto& e : a_)
            if (!(e == z)) return false;
        return true;
    }

    // row i += r * row j
    void row_op(int i, int j, const T& r) {
        for (int c = 0; c < cols_; ++c) at(i, c) = at(i, c) + r * at(j, c);
    }

    // col i += r * col j
    void col_op(int i, int j, const T& r) {
        for (int r0 = 0; r0 < rows_; ++r0) at(r0, i) = at(r0, i) + r * at(r0, j);
    }

    void scale_row(int i, const T& u) {
        for (int c = 0; c < cols_; ++c) at(i, c) = at(i, c) * u;
    }

    void scale_col(int j, const T& u) {
        for (int r0 = 0; r0 < rows_; ++r0) at(r0, j) = at(r0, j) * u;
    }

    Matrix<T> map(const std::function<T(const T&)>& f, Desc out_ring) const {
        Matrix<T> r(out_ring, rows_, cols_);
        for (int i = 0; i < rows_; ++i)
            for (int j = 0; j < cols_; ++j) r.at(i, j) = f(at(i, j));
        return r;
    }

private:
    size_t index(int i, int j) const {
        if (i < 0 || i >= rows_ || j < 0 || j >= cols_) fail(Errc::DimensionMismatch, "matrix index out of range");
        return static_cast<size_t>(i) * static_cast<size_t>(cols_) + static_cast<size_t>(j);
    }

    void require_same_shape(const Matrix& o) const {
        if (!(ring_ == o.ring_) || rows_ != o.rows_ || cols_ != o.cols_)
            fail(Errc::DimensionMismatch, "matrix shape or ring mismatch");
    }

    Desc ring_{};
    int rows_ = 0;
    int cols_ = 0;
    std::vector<T> a_;
};

// Block diagonal A + identity of size m (the stabilization padding).
template <class T>
Matrix<T> pad_identity(const Matrix<T>& A, int m) {
    if (m < 0) fail(Errc::DimensionMismatch, "negative padding");
    Matrix<T> r(A.ring(), A.rows() + m, A.cols() + m);
    for (int i = 0; i < A.rows(); ++i)
        for (int j = 0; j < A.cols(); ++j) r.at(i, j) = A.at(i, j);
    for (int i = 0; i < m; ++i) r.at(A.rows() + i, A.cols() + i) = RingTraits<T>::one(A.ring());
    return r;
}

namespace detail {

template <class T>
T det_cofactor(const Matrix<T>& A, std::vector<int> cols) {
    const int k = static_cast<int>(cols.size());
    const int row = A.rows() - k;
    if (k == 1) return A.at(row, cols[0]);
    T acc = RingTraits<T>::zero(A.ring());
    for (int c = 0; c < k; ++c) {
        const T& pivot = A.at(row, cols[c]);
        std::vector<int> rest;
        rest.reserve(cols.size() - 1);
        for (int d = 0; d < k; ++d)
            if (d != c) rest.push_back(cols[d]);
        T minor = det_cofactor(A, rest);
        T term = pivot * minor;
        acc = (c % 2 == 0) ? acc + term : acc - term;
    }
    return acc;
}

// Bareiss fraction-free elimination; requires exact division (used over the
// Laurent rings with field coefficients).
Laurent det_bareiss_laurent(const Matrix<Laurent>& A);

}  // namespace detail

template <class T>
T det(const Matrix<T>& A) {
    if (!A.is_square()) fail(Errc::NonSquare, "determinant of a non-square matrix");
    if (A.rows() == 0) return RingTraits<T>::one(A.ring());
    std::vector<int> cols(static_cast<size_t>(A.cols()));
    for (int j = 0; j < A.cols(); ++j) cols[static_cast<size_t>(j)] = j;
    if constexpr (std::is_same_v<T, Laurent>) {
        if (A.rows() > 4 && A.ring().is_field()) return detail::det_bareiss_laurent(A);
    }
    return detail::det_cofactor(A, cols);
}

using LaurentMatrix = Matrix<Laurent>;
using GroupRingMatrix = Matrix<GroupRingElem>;
using NormQuotMatrix = Matrix<NormQuotElem>;

}  // namespace wf
