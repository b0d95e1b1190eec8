#pragma once

#include <compare>
#include <cstdint>

#include "fx/errors.hpp"

namespace fx {

/// Magnitude bits available for one value: 64-bit words, minus the sign
/// bit, minus one guard bit.
inline constexpr int kMaxMagnitudeBits = 62;

/// Shape of a twos-complement fixed-point representation: `int_bits`
/// magnitude bits left of the binary point, `frac_bits` right of it, plus
/// an implicit sign bit.  A value with this spec covers
/// [-2^int_bits, 2^int_bits - 2^-frac_bits] in steps of 2^-frac_bits.
struct FixedSpec {
    int int_bits = 0;
    int frac_bits = 0;

    friend bool operator==(const FixedSpec&, const FixedSpec&) = default;
};

/// Validating constructor: throws SpecOutOfRange unless
/// 0 <= int_bits, 0 <= frac_bits and int_bits + frac_bits <= 62.
FixedSpec make_spec(int int_bits, int frac_bits);

bool spec_valid(FixedSpec spec) noexcept;

/// Combined spec of a binary operation: elementwise max of both fields.
/// Throws SpecOutOfRange when the promoted spec exceeds the word budget.
FixedSpec promote(FixedSpec a, FixedSpec b);

/// Smallest/largest stored integer representable under `spec`.
std::int64_t stored_min(FixedSpec spec) noexcept;
std::int64_t stored_max(FixedSpec spec) noexcept;

/// One twos-complement fixed-point value.  `stored` counts units of
/// 2^-frac_bits and stays within [stored_min(spec), stored_max(spec)].
struct FixedScalar {
    std::int64_t stored = 0;
    FixedSpec spec;

    double to_real() const noexcept;
};

/// Convert a finite real to `spec`, rounding to the nearest stored unit
/// with ties away from zero; out-of-range inputs saturate to the range
/// endpoints (A/D-converter behaviour).  Throws NonFiniteInput on NaN or
/// infinity.
FixedScalar quantize(FixedSpec spec, double x);

/// Wrap a raw stored value into `spec` (for tests and bit-level tooling).
FixedScalar from_stored(FixedSpec spec, std::int64_t stored);

double to_real(FixedScalar a) noexcept;

/// Change representation.  The fractional change happens first: dropping
/// frac bits is an arithmetic right shift (floor), adding them is a
/// lossless left shift.  Then a narrowing integer change keeps the sign
/// and drops most-significant magnitude bits:
/// magnitude' = |stored| mod 2^(int_bits+frac_bits).  Widening is
/// lossless.
FixedScalar refix(FixedScalar a, FixedSpec to);

/// Sum under the promoted spec; the exact result wraps into the
/// twos-complement range of that spec (excess bits are dropped).
FixedScalar add(FixedScalar a, FixedScalar b);

/// sub(a, b) == add(a, neg(b)); the negation wraps in b's own spec.
FixedScalar sub(FixedScalar a, FixedScalar b);

/// Exact product, floor-quantized onto the promoted spec's grid
/// (arithmetic shift), then wrapped into its range.
FixedScalar mul(FixedScalar a, FixedScalar b);

/// Exact quotient, floor-quantized onto the promoted spec's grid, then
/// wrapped.  Throws DivisionByZero when b is zero.
FixedScalar div(FixedScalar a, FixedScalar b);

/// Wrapping negation: the most negative stored value maps to itself.
FixedScalar neg(FixedScalar a) noexcept;

/// -1, 0 or +1.
int sign(FixedScalar a) noexcept;

/// Exact value ordering, independent of the two representations.
std::strong_ordering compare(FixedScalar a, FixedScalar b) noexcept;

/// Smallest int_bits such that -2^int_bits <= v <= 2^int_bits - 1 with
/// frac_bits = 0; min_int_bits(0) == 0.
int min_int_bits(std::int64_t v);

/// Value-level scale by 2^-n at unchanged spec (arithmetic shift, floor).
FixedScalar arith_shift_right(FixedScalar a, int n) noexcept;

/// Wrap-detecting variants; `wrapped` is true when the exact result fell
/// outside the promoted range and high bits were dropped.
struct WrapResult {
    FixedScalar value;
    bool wrapped = false;
};
WrapResult add_detect(FixedScalar a, FixedScalar b);
WrapResult mul_detect(FixedScalar a, FixedScalar b);
WrapResult neg_detect(FixedScalar a) noexcept;

inline FixedScalar operator+(FixedScalar a, FixedScalar b) { return add(a, b); }
inline FixedScalar operator-(FixedScalar a, FixedScalar b) { return sub(a, b); }
inline FixedScalar operator*(FixedScalar a, FixedScalar b) { return mul(a, b); }
inline FixedScalar operator/(FixedScalar a, FixedScalar b) { return div(a, b); }
inline FixedScalar operator-(FixedScalar a) { return neg(a); }

inline bool operator==(FixedScalar a, FixedScalar b) { return compare(a, b) == std::strong_ordering::equal; }
inline std::strong_ordering operator<=>(FixedScalar a, FixedScalar b) { return compare(a, b); }

} // namespace fx
