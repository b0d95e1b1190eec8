#pragma once

#include <complex>
#include <cstdint>
#include <utility>
#include <vector>

#include "fx/complex.hpp"
#include "fx/fixed.hpp"
#include "fx/matrix.hpp"
#include "fx/tally.hpp"

namespace fx {

/// 2-D array of fixed-point values.  Every element keeps its own
/// representation, so a single tensor may mix specs freely.
template <typename Elem>
class FixedTensor {
public:
    FixedTensor() = default;
    FixedTensor(std::size_t rows, std::size_t cols, std::vector<Elem> elems)
        : rows_(rows), cols_(cols), elems_(std::move(elems)) {
        if (elems_.size() != rows_ * cols_)
            throw DimensionMismatch("tensor element count does not match dimensions");
    }
    FixedTensor(std::size_t rows, std::size_t cols, const Elem& fill)
        : rows_(rows), cols_(cols), elems_(rows * cols, fill) {}

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    std::size_t size() const noexcept { return elems_.size(); }

    Elem& operator()(std::size_t r, std::size_t c) { return elems_[r * cols_ + c]; }
    const Elem& operator()(std::size_t r, std::size_t c) const { return elems_[r * cols_ + c]; }

    std::vector<Elem>& elements() noexcept { return elems_; }
    const std::vector<Elem>& elements() const noexcept { return elems_; }

    bool same_shape(const FixedTensor& other) const noexcept {
        return rows_ == other.rows_ && cols_ == other.cols_;
    }

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Elem> elems_;
};

using RealTensor = FixedTensor<FixedScalar>;
using ComplexTensor = FixedTensor<FixedComplex>;

/// Value-wise equality (specs may differ as long as values agree).
bool operator==(const RealTensor& a, const RealTensor& b);
bool operator==(const ComplexTensor& a, const ComplexTensor& b);

// --- construction -----------------------------------------------------

/// Quantize `values` element by element: element (r,c) gets
/// spec(int_bits(r,c), frac_bits(r,c)).  All three matrices must share
/// dimensions.  Scalar overloads below broadcast a single bit count.
RealTensor tensor_make(const Matrix<int>& int_bits, const Matrix<int>& frac_bits,
                       const Matrix<double>& values, OpTally* tally = nullptr);
RealTensor tensor_make(int int_bits, const Matrix<int>& frac_bits,
                       const Matrix<double>& values, OpTally* tally = nullptr);
RealTensor tensor_make(const Matrix<int>& int_bits, int frac_bits,
                       const Matrix<double>& values, OpTally* tally = nullptr);
RealTensor tensor_make(int int_bits, int frac_bits, const Matrix<double>& values,
                       OpTally* tally = nullptr);

/// Two-argument forms: values default to all zeros of the bit-count shape.
RealTensor tensor_make(const Matrix<int>& int_bits, const Matrix<int>& frac_bits,
                       OpTally* tally = nullptr);
RealTensor tensor_make(int int_bits, int frac_bits, OpTally* tally = nullptr);

/// Build from plain numbers: each element keeps the integer part of its
/// input (truncated toward zero) under the smallest spec that holds it,
/// with frac_bits = 0.  Complex inputs are handled per part.
RealTensor tensor_from_integers(const Matrix<double>& v);
ComplexTensor tensor_from_integers(const Matrix<std::complex<double>>& v);

// --- elementwise and matrix operations --------------------------------

enum class BinaryOp { add, sub, mul, div };

RealTensor map_binary(BinaryOp op, const RealTensor& a, const RealTensor& b,
                      OpTally* tally = nullptr);
RealTensor map_binary(BinaryOp op, const RealTensor& a, const FixedScalar& b,
                      OpTally* tally = nullptr);
ComplexTensor map_binary(BinaryOp op, const ComplexTensor& a, const ComplexTensor& b,
                         OpTally* tally = nullptr);
ComplexTensor map_binary(BinaryOp op, const ComplexTensor& a, const FixedComplex& b,
                         OpTally* tally = nullptr);

/// c(i,j) = fold of add over mul(a(i,k), b(k,j)) with k ascending.  The
/// accumulation order is part of the contract: wrap semantics make it
/// observable.
RealTensor matmul(const RealTensor& a, const RealTensor& b, OpTally* tally = nullptr);
ComplexTensor matmul(const ComplexTensor& a, const ComplexTensor& b, OpTally* tally = nullptr);

enum class Axis { rows, cols };

/// Stack along an axis; elements are copied with their individual specs.
template <typename Elem>
FixedTensor<Elem> concat(Axis axis, const FixedTensor<Elem>& a, const FixedTensor<Elem>& b);

// --- field access ------------------------------------------------------

enum class Field { value, sign, int_bits, frac_bits };

/// Same-shaped plain matrix of the requested per-element field.
Matrix<double> get_field(const RealTensor& t, Field field);

/// Per-element refix to a new bit count.  Only int_bits and frac_bits are
/// assignable; the value field is read-only by design.
RealTensor set_field(const RealTensor& t, Field field, int v, OpTally* tally = nullptr);
RealTensor set_field(const RealTensor& t, Field field, const Matrix<int>& v,
                     OpTally* tally = nullptr);

template <typename Elem>
FixedTensor<Elem> operator+(const FixedTensor<Elem>& a, const FixedTensor<Elem>& b) {
    return map_binary(BinaryOp::add, a, b);
}
template <typename Elem>
FixedTensor<Elem> operator-(const FixedTensor<Elem>& a, const FixedTensor<Elem>& b) {
    return map_binary(BinaryOp::sub, a, b);
}
template <typename Elem>
FixedTensor<Elem> operator*(const FixedTensor<Elem>& a, const FixedTensor<Elem>& b) {
    return map_binary(BinaryOp::mul, a, b);
}

} // namespace fx
