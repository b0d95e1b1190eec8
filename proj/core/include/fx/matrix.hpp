#pragma once

#include <cstddef>
#include <vector>

#include "fx/errors.hpp"

namespace fx {

/// Minimal row-major 2-D array of plain values (doubles, bit counts, ...).
template <typename T>
struct Matrix {
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<T> data;

    Matrix() = default;
    Matrix(std::size_t r, std::size_t c, T fill = T{}) : rows(r), cols(c), data(r * c, fill) {}
    Matrix(std::size_t r, std::size_t c, std::vector<T> d) : rows(r), cols(c), data(std::move(d)) {
        if (data.size() != rows * cols)
            throw DimensionMismatch("matrix data length does not match dimensions");
    }

    T& operator()(std::size_t r, std::size_t c) { return data[r * cols + c]; }
    const T& operator()(std::size_t r, std::size_t c) const { return data[r * cols + c]; }

    std::size_t size() const noexcept { return data.size(); }
    bool same_shape(const Matrix& other) const noexcept {
        return rows == other.rows && cols == other.cols;
    }

    friend bool operator==(const Matrix&, const Matrix&) = default;
};

template <typename T>
Matrix<T> zeros(std::size_t rows, std::size_t cols) {
    return Matrix<T>(rows, cols, T{});
}

template <typename T>
Matrix<T> filled(std::size_t rows, std::size_t cols, T v) {
    return Matrix<T>(rows, cols, v);
}

template <typename T>
Matrix<T> eye(std::size_t n) {
    Matrix<T> m(n, n, T{});
    for (std::size_t i = 0; i < n; ++i)
        m(i, i) = T{1};
    return m;
}

} // namespace fx
