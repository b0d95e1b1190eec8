#pragma once

#include <complex>
#include <cstdint>

#include "fx/fixed.hpp"
#include "fx/tally.hpp"

namespace fx {

/// Complex fixed-point value; real and imaginary parts carry independent
/// representations.
struct FixedComplex {
    FixedScalar re;
    FixedScalar im;
};

inline FixedComplex make_complex(FixedScalar re, FixedScalar im) { return {re, im}; }

/// Both parts quantized to the same spec.
FixedComplex quantize(FixedSpec spec, std::complex<double> x);

std::complex<double> to_complex(const FixedComplex& a) noexcept;

/// Componentwise sum.  Records 2 adds; wrap events are added to
/// *overflow when given.
FixedComplex cadd(const FixedComplex& a, const FixedComplex& b,
                  OpTally* tally = nullptr, std::uint64_t* overflow = nullptr);

/// Componentwise difference (negate-and-add per part).  Records 2 subs.
FixedComplex csub(const FixedComplex& a, const FixedComplex& b,
                  OpTally* tally = nullptr, std::uint64_t* overflow = nullptr);

/// Schoolbook complex product: 4 real multiplies and 2 real additions,
/// each with fixed-point promotion, floor quantization and wrap.  The
/// 4/2 shape is deliberate: it models the hardware butterfly cost, so the
/// tally stays deterministic.
FixedComplex cmul(const FixedComplex& a, const FixedComplex& b,
                  OpTally* tally = nullptr, std::uint64_t* overflow = nullptr);

/// (re, -im); records one neg.
FixedComplex conj(const FixedComplex& a, OpTally* tally = nullptr);

inline FixedComplex operator+(const FixedComplex& a, const FixedComplex& b) { return cadd(a, b); }
inline FixedComplex operator-(const FixedComplex& a, const FixedComplex& b) { return csub(a, b); }
inline FixedComplex operator*(const FixedComplex& a, const FixedComplex& b) { return cmul(a, b); }

inline bool operator==(const FixedComplex& a, const FixedComplex& b) {
    return a.re == b.re && a.im == b.im;
}

} // namespace fx
