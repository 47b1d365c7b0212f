#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "nyq/error.hpp"

namespace nyq {

/// Largest dimension accepted by det(); Laplace expansion cost grows as n 2^n.
inline constexpr std::size_t kMaxDetSize = 6;

/// Dense row-major matrix over a commutative ring element type T.
/// T must be constructible from long (0 and 1) and provide + - *.
template <class T>
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, T(0)) {}
    Matrix(std::size_t rows, std::size_t cols, std::vector<T> data)
        : rows_(rows), cols_(cols), data_(std::move(data)) {
        if (data_.size() != rows * cols) throw Error(ErrorKind::DimensionMismatch, "matrix data size mismatch");
    }
    Matrix(std::initializer_list<std::initializer_list<T>> rows) {
        rows_ = rows.size();
        cols_ = rows_ ? rows.begin()->size() : 0;
        for (const auto& r : rows) {
            if (r.size() != cols_) throw Error(ErrorKind::DimensionMismatch, "ragged matrix literal");
            data_.insert(data_.end(), r.begin(), r.end());
        }
    }

    static Matrix identity(std::size_t n) {
        Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1);
        return m;
    }
    static Matrix scalar(T value) { return Matrix(1, 1, {std::move(value)}); }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool is_square() const { return rows_ == cols_; }

    T& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const T& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
    const std::vector<T>& data() const { return data_; }

    Matrix transpose() const {
        Matrix t(cols_, rows_);
        for (std::size_t r = 0; r < rows_; ++r)
            for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
        return t;
    }

    template <class F>
    auto map(F&& f) const -> Matrix<decltype(f(std::declval<const T&>()))> {
        using U = decltype(f(std::declval<const T&>()));
        std::vector<U> out;
        out.reserve(data_.size());
        for (const auto& x : data_) out.push_back(f(x));
        return Matrix<U>(rows_, cols_, std::move(out));
    }

    Matrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
        Matrix b(nr, nc);
        for (std::size_t r = 0; r < nr; ++r)
            for (std::size_t c = 0; c < nc; ++c) b(r, c) = (*this)(r0 + r, c0 + c);
        return b;
    }

    friend Matrix operator+(const Matrix& a, const Matrix& b) {
        a.require_same_shape(b);
        Matrix out = a;
        for (std::size_t k = 0; k < out.data_.size(); ++k) out.data_[k] = a.data_[k] + b.data_[k];
        return out;
    }
    friend Matrix operator-(const Matrix& a, const Matrix& b) {
        a.require_same_shape(b);
        Matrix out = a;
        for (std::size_t k = 0; k < out.data_.size(); ++k) out.data_[k] = a.data_[k] - b.data_[k];
        return out;
    }
    Matrix operator-() const {
        Matrix out = *this;
        for (auto& x : out.data_) x = -x;
        return out;
    }
    friend Matrix operator*(const Matrix& a, const Matrix& b) {
        if (a.cols_ != b.rows_) {
            throw Error(ErrorKind::DimensionMismatch, "matrix product " + a.shape() + " * " + b.shape());
        }
        Matrix out(a.rows_, b.cols_);
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t j = 0; j < b.cols_; ++j) {
                T acc(0);
                for (std::size_t k = 0; k < a.cols_; ++k) acc = acc + a(i, k) * b(k, j);
                out(i, j) = std::move(acc);
            }
        return out;
    }
    friend Matrix operator*(const T& s, const Matrix& m) {
        Matrix out = m;
        for (auto& x : out.data_) x = s * x;
        return out;
    }

    friend bool operator==(const Matrix& a, const Matrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }

    std::string shape() const { return std::to_string(rows_) + "x" + std::to_string(cols_); }

private:
    void require_same_shape(const Matrix& o) const {
        if (rows_ != o.rows_ || cols_ != o.cols_) {
            throw Error(ErrorKind::DimensionMismatch, "shape " + shape() + " vs " + o.shape());
        }
    }

    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<T> data_;
};

/// Exact determinant by Laplace expansion along rows, memoized over column subsets.
template <class T>
T det(const Matrix<T>& m) {
    if (!m.is_square()) throw Error(ErrorKind::DimensionMismatch, "determinant of non-square " + m.shape() + " matrix");
    const std::size_t n = m.rows();
    if (n == 0) return T(1);
    if (n > kMaxDetSize) throw Error(ErrorKind::InvalidArgument, "determinant size exceeds 6x6 cap");
    std::unordered_map<std::uint32_t, T> memo;
    std::function<T(std::size_t, std::uint32_t)> minor = [&](std::size_t row, std::uint32_t cols) -> T {
        if (row == n) return T(1);
        if (auto it = memo.find(cols); it != memo.end()) return it->second;
        T acc(0);
        int sign = 1;
        for (std::size_t c = 0; c < n; ++c) {
            if (!(cols & (1u << c))) continue;
            const T& a = m(row, c);
            T term = a * minor(row + 1, cols & ~(1u << c));
            acc = sign > 0 ? acc + term : acc - term;
            sign = -sign;
        }
        memo.emplace(cols, acc);
        return acc;
    };
    return minor(0, (1u << n) - 1u);
}

/// Adjugate: adj(M) M = M adj(M) = det(M) I.
template <class T>
Matrix<T> adjugate(const Matrix<T>& m) {
    if (!m.is_square()) throw Error(ErrorKind::DimensionMismatch, "adjugate of non-square matrix");
    const std::size_t n = m.rows();
    Matrix<T> adj(n, n);
    if (n == 1) {
        adj(0, 0) = T(1);
        return adj;
    }
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            Matrix<T> minor(n - 1, n - 1);
            for (std::size_t r = 0, rr = 0; r < n; ++r) {
                if (r == j) continue;
                for (std::size_t c = 0, cc = 0; c < n; ++c) {
                    if (c == i) continue;
                    minor(rr, cc++) = m(r, c);
                }
                ++rr;
            }
            T d = det(minor);
            adj(i, j) = ((i + j) % 2 == 0) ? d : -d;
        }
    return adj;
}

/// [top; bottom]
template <class T>
Matrix<T> vstack(const Matrix<T>& top, const Matrix<T>& bottom) {
    if (top.cols() != bottom.cols()) throw Error(ErrorKind::DimensionMismatch, "vstack column mismatch");
    Matrix<T> out(top.rows() + bottom.rows(), top.cols());
    for (std::size_t r = 0; r < top.rows(); ++r)
        for (std::size_t c = 0; c < top.cols(); ++c) out(r, c) = top(r, c);
    for (std::size_t r = 0; r < bottom.rows(); ++r)
        for (std::size_t c = 0; c < top.cols(); ++c) out(top.rows() + r, c) = bottom(r, c);
    return out;
}

/// [left, right]
template <class T>
Matrix<T> hstack(const Matrix<T>& left, const Matrix<T>& right) {
    if (left.rows() != right.rows()) throw Error(ErrorKind::DimensionMismatch, "hstack row mismatch");
    Matrix<T> out(left.rows(), left.cols() + right.cols());
    for (std::size_t r = 0; r < left.rows(); ++r) {
        for (std::size_t c = 0; c < left.cols(); ++c) out(r, c) = left(r, c);
        for (std::size_t c = 0; c < right.cols(); ++c) out(r, left.cols() + c) = right(r, c);
    }
    return out;
}

}  // namespace nyq
