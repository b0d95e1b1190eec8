#include "fx/complex.hpp"

namespace fx {
namespace {

void bump(std::uint64_t* overflow, bool wrapped) {
    if (overflow && wrapped)
        ++*overflow;
}

} // namespace

FixedComplex quantize(FixedSpec spec, std::complex<double> x) {
    return {quantize(spec, x.real()), quantize(spec, x.imag())};
}

std::complex<double> to_complex(const FixedComplex& a) noexcept {
    return {a.re.to_real(), a.im.to_real()};
}

FixedComplex cadd(const FixedComplex& a, const FixedComplex& b, OpTally* tally,
                  std::uint64_t* overflow) {
    const WrapResult re = add_detect(a.re, b.re);
    const WrapResult im = add_detect(a.im, b.im);
    if (tally)
        tally->record(OpKind::add, 2);
    bump(overflow, re.wrapped);
    bump(overflow, im.wrapped);
    return {re.value, im.value};
}

FixedComplex csub(const FixedComplex& a, const FixedComplex& b, OpTally* tally,
                  std::uint64_t* overflow) {
    const WrapResult nre = neg_detect(b.re);
    const WrapResult nim = neg_detect(b.im);
    const WrapResult re = add_detect(a.re, nre.value);
    const WrapResult im = add_detect(a.im, nim.value);
    if (tally)
        tally->record(OpKind::sub, 2);
    bump(overflow, nre.wrapped);
    bump(overflow, nim.wrapped);
    bump(overflow, re.wrapped);
    bump(overflow, im.wrapped);
    return {re.value, im.value};
}

FixedComplex cmul(const FixedComplex& a, const FixedComplex& b, OpTally* tally,
                  std::uint64_t* overflow) {
    const WrapResult rr = mul_detect(a.re, b.re);
    const WrapResult ii = mul_detect(a.im, b.im);
    const WrapResult ri = mul_detect(a.re, b.im);
    const WrapResult ir = mul_detect(a.im, b.re);
    const WrapResult nii = neg_detect(ii.value);
    const WrapResult re = add_detect(rr.value, nii.value);
    const WrapResult im = add_detect(ri.value, ir.value);
    if (tally) {
        tally->record(OpKind::mul, 4);
        tally->record(OpKind::add, 2);
    }
    bump(overflow, rr.wrapped);
    bump(overflow, ii.wrapped);
    bump(overflow, ri.wrapped);
    bump(overflow, ir.wrapped);
    bump(overflow, nii.wrapped);
    bump(overflow, re.wrapped);
    bump(overflow, im.wrapped);
    return {re.value, im.value};
}

FixedComplex conj(const FixedComplex& a, OpTally* tally) {
    if (tally)
        tally->record(OpKind::neg, 1);
    return {a.re, neg(a.im)};
}

} // namespace fx
