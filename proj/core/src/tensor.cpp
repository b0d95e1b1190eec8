#include "fx/tensor.hpp"

#include <cmath>

namespace fx {
namespace {

void require_same_shape(std::size_t ar, std::size_t ac, std::size_t br, std::size_t bc,
                        const char* what) {
    if (ar != br || ac != bc)
        throw DimensionMismatch(std::string(what) + ": shapes " + std::to_string(ar) + "x" +
                                std::to_string(ac) + " and " + std::to_string(br) + "x" +
                                std::to_string(bc) + " differ");
}

// Scalar-element operation shims; the complex overloads count per part.
FixedScalar elem_op(BinaryOp op, const FixedScalar& a, const FixedScalar& b, OpTally* tally,
                    std::uint64_t* /*overflow*/) {
    switch (op) {
    case BinaryOp::add:
        if (tally) tally->record(OpKind::add);
        return add(a, b);
    case BinaryOp::sub:
        if (tally) tally->record(OpKind::sub);
        return sub(a, b);
    case BinaryOp::mul:
        if (tally) tally->record(OpKind::mul);
        return mul(a, b);
    case BinaryOp::div:
        if (tally) tally->record(OpKind::div);
        return div(a, b);
    }
    throw Error("unknown binary operation");
}

FixedComplex elem_op(BinaryOp op, const FixedComplex& a, const FixedComplex& b, OpTally* tally,
                     std::uint64_t* overflow) {
    switch (op) {
    case BinaryOp::add: return cadd(a, b, tally, overflow);
    case BinaryOp::sub: return csub(a, b, tally, overflow);
    case BinaryOp::mul: return cmul(a, b, tally, overflow);
    case BinaryOp::div: throw Error("complex elementwise division is not supported");
    }
    throw Error("unknown binary operation");
}

FixedScalar elem_mul(const FixedScalar& a, const FixedScalar& b, OpTally* tally) {
    if (tally) tally->record(OpKind::mul);
    return mul(a, b);
}
FixedScalar elem_add(const FixedScalar& a, const FixedScalar& b, OpTally* tally) {
    if (tally) tally->record(OpKind::add);
    return add(a, b);
}
FixedComplex elem_mul(const FixedComplex& a, const FixedComplex& b, OpTally* tally) {
    return cmul(a, b, tally);
}
FixedComplex elem_add(const FixedComplex& a, const FixedComplex& b, OpTally* tally) {
    return cadd(a, b, tally);
}

template <typename Elem>
FixedTensor<Elem> map_binary_impl(BinaryOp op, const FixedTensor<Elem>& a,
                                  const FixedTensor<Elem>& b, OpTally* tally) {
    require_same_shape(a.rows(), a.cols(), b.rows(), b.cols(), "elementwise operation");
    std::vector<Elem> out;
    out.reserve(a.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        out.push_back(elem_op(op, a.elements()[i], b.elements()[i], tally, nullptr));
    return {a.rows(), a.cols(), std::move(out)};
}

template <typename Elem>
FixedTensor<Elem> map_binary_scalar_impl(BinaryOp op, const FixedTensor<Elem>& a, const Elem& b,
                                         OpTally* tally) {
    std::vector<Elem> out;
    out.reserve(a.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        out.push_back(elem_op(op, a.elements()[i], b, tally, nullptr));
    return {a.rows(), a.cols(), std::move(out)};
}

template <typename Elem>
FixedTensor<Elem> matmul_impl(const FixedTensor<Elem>& a, const FixedTensor<Elem>& b,
                              OpTally* tally) {
    if (a.cols() != b.rows())
        throw DimensionMismatch("matmul: inner dimensions " + std::to_string(a.cols()) + " and " +
                                std::to_string(b.rows()) + " differ");
    std::vector<Elem> out;
    out.reserve(a.rows() * b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < b.cols(); ++j) {
            // left-to-right fold; with wrap semantics the order matters
            Elem acc = elem_mul(a(i, 0), b(0, j), tally);
            for (std::size_t k = 1; k < a.cols(); ++k)
                acc = elem_add(acc, elem_mul(a(i, k), b(k, j), tally), tally);
            out.push_back(acc);
        }
    }
    return {a.rows(), b.cols(), std::move(out)};
}

Matrix<int> broadcast_bits(int v, std::size_t rows, std::size_t cols) {
    return Matrix<int>(rows, cols, v);
}

} // namespace

bool operator==(const RealTensor& a, const RealTensor& b) {
    if (!a.same_shape(b))
        return false;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (!(a.elements()[i] == b.elements()[i]))
            return false;
    return true;
}

bool operator==(const ComplexTensor& a, const ComplexTensor& b) {
    if (!a.same_shape(b))
        return false;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (!(a.elements()[i] == b.elements()[i]))
            return false;
    return true;
}

RealTensor tensor_make(const Matrix<int>& int_bits, const Matrix<int>& frac_bits,
                       const Matrix<double>& values, OpTally* tally) {
    require_same_shape(int_bits.rows, int_bits.cols, values.rows, values.cols, "tensor_make");
    require_same_shape(frac_bits.rows, frac_bits.cols, values.rows, values.cols, "tensor_make");
    std::vector<FixedScalar> elems;
    elems.reserve(values.size());
    for (std::size_t i = 0; i < values.size(); ++i)
        elems.push_back(quantize(make_spec(int_bits.data[i], frac_bits.data[i]), values.data[i]));
    if (tally)
        tally->record(OpKind::quantize, values.size());
    return {values.rows, values.cols, std::move(elems)};
}

RealTensor tensor_make(int int_bits, const Matrix<int>& frac_bits, const Matrix<double>& values,
                       OpTally* tally) {
    return tensor_make(broadcast_bits(int_bits, values.rows, values.cols), frac_bits, values, tally);
}

RealTensor tensor_make(const Matrix<int>& int_bits, int frac_bits, const Matrix<double>& values,
                       OpTally* tally) {
    return tensor_make(int_bits, broadcast_bits(frac_bits, values.rows, values.cols), values, tally);
}

RealTensor tensor_make(int int_bits, int frac_bits, const Matrix<double>& values, OpTally* tally) {
    return tensor_make(broadcast_bits(int_bits, values.rows, values.cols),
                       broadcast_bits(frac_bits, values.rows, values.cols), values, tally);
}

RealTensor tensor_make(const Matrix<int>& int_bits, const Matrix<int>& frac_bits, OpTally* tally) {
    return tensor_make(int_bits, frac_bits, zeros<double>(int_bits.rows, int_bits.cols), tally);
}

RealTensor tensor_make(int int_bits, int frac_bits, OpTally* tally) {
    return tensor_make(int_bits, frac_bits, zeros<double>(1, 1), tally);
}

RealTensor tensor_from_integers(const Matrix<double>& v) {
    std::vector<FixedScalar> elems;
    elems.reserve(v.size());
    for (double x : v.data) {
        if (!std::isfinite(x))
            throw NonFiniteInput("tensor_from_integers: input must be finite");
        const auto whole = static_cast<std::int64_t>(std::trunc(x));
        elems.push_back(quantize(make_spec(min_int_bits(whole), 0), static_cast<double>(whole)));
    }
    return {v.rows, v.cols, std::move(elems)};
}

ComplexTensor tensor_from_integers(const Matrix<std::complex<double>>& v) {
    std::vector<FixedComplex> elems;
    elems.reserve(v.size());
    for (const auto& x : v.data) {
        // real and imaginary parts are treated separately
        const auto re = static_cast<std::int64_t>(std::trunc(x.real()));
        const auto im = static_cast<std::int64_t>(std::trunc(x.imag()));
        elems.push_back({quantize(make_spec(min_int_bits(re), 0), static_cast<double>(re)),
                         quantize(make_spec(min_int_bits(im), 0), static_cast<double>(im))});
    }
    return {v.rows, v.cols, std::move(elems)};
}

RealTensor map_binary(BinaryOp op, const RealTensor& a, const RealTensor& b, OpTally* tally) {
    return map_binary_impl(op, a, b, tally);
}
RealTensor map_binary(BinaryOp op, const RealTensor& a, const FixedScalar& b, OpTally* tally) {
    return map_binary_scalar_impl(op, a, b, tally);
}
ComplexTensor map_binary(BinaryOp op, const ComplexTensor& a, const ComplexTensor& b,
                         OpTally* tally) {
    return map_binary_impl(op, a, b, tally);
}
ComplexTensor map_binary(BinaryOp op, const ComplexTensor& a, const FixedComplex& b,
                         OpTally* tally) {
    return map_binary_scalar_impl(op, a, b, tally);
}

RealTensor matmul(const RealTensor& a, const RealTensor& b, OpTally* tally) {
    return matmul_impl(a, b, tally);
}
ComplexTensor matmul(const ComplexTensor& a, const ComplexTensor& b, OpTally* tally) {
    return matmul_impl(a, b, tally);
}

template <typename Elem>
FixedTensor<Elem> concat(Axis axis, const FixedTensor<Elem>& a, const FixedTensor<Elem>& b) {
    if (axis == Axis::rows) {
        if (a.cols() != b.cols())
            throw DimensionMismatch("concat rows: column counts differ");
        std::vector<Elem> out = a.elements();
        out.insert(out.end(), b.elements().begin(), b.elements().end());
        return {a.rows() + b.rows(), a.cols(), std::move(out)};
    }
    if (a.rows() != b.rows())
        throw DimensionMismatch("concat cols: row counts differ");
    std::vector<Elem> out;
    out.reserve(a.size() + b.size());
    for (std::size_t r = 0; r < a.rows(); ++r) {
        for (std::size_t c = 0; c < a.cols(); ++c)
            out.push_back(a(r, c));
        for (std::size_t c = 0; c < b.cols(); ++c)
            out.push_back(b(r, c));
    }
    return {a.rows(), a.cols() + b.cols(), std::move(out)};
}

template FixedTensor<FixedScalar> concat(Axis, const FixedTensor<FixedScalar>&,
                                         const FixedTensor<FixedScalar>&);
template FixedTensor<FixedComplex> concat(Axis, const FixedTensor<FixedComplex>&,
                                          const FixedTensor<FixedComplex>&);

Matrix<double> get_field(const RealTensor& t, Field field) {
    Matrix<double> out(t.rows(), t.cols());
    for (std::size_t i = 0; i < t.size(); ++i) {
        const FixedScalar& e = t.elements()[i];
        switch (field) {
        case Field::value: out.data[i] = e.to_real(); break;
        case Field::sign: out.data[i] = sign(e); break;
        case Field::int_bits: out.data[i] = e.spec.int_bits; break;
        case Field::frac_bits: out.data[i] = e.spec.frac_bits; break;
        }
    }
    return out;
}

RealTensor set_field(const RealTensor& t, Field field, const Matrix<int>& v, OpTally* tally) {
    if (field != Field::int_bits && field != Field::frac_bits)
        throw Error("set_field: only the bit-count fields are assignable");
    require_same_shape(t.rows(), t.cols(), v.rows, v.cols, "set_field");
    std::vector<FixedScalar> out;
    out.reserve(t.size());
    for (std::size_t i = 0; i < t.size(); ++i) {
        const FixedScalar& e = t.elements()[i];
        const FixedSpec to = field == Field::int_bits
                                 ? make_spec(v.data[i], e.spec.frac_bits)
                                 : make_spec(e.spec.int_bits, v.data[i]);
        out.push_back(refix(e, to));
    }
    if (tally)
        tally->record(OpKind::refix, t.size());
    return {t.rows(), t.cols(), std::move(out)};
}

RealTensor set_field(const RealTensor& t, Field field, int v, OpTally* tally) {
    return set_field(t, field, broadcast_bits(v, t.rows(), t.cols()), tally);
}

} // namespace fx
