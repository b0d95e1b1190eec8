#include "fx/fixed.hpp"

#include <bit>
#include <cmath>
#include <string>

namespace fx {
namespace {

using int128 = __int128;
using uint128 = unsigned __int128;

int width_of(FixedSpec spec) noexcept { return spec.int_bits + spec.frac_bits; }

/// Reduce an exact stored value modulo 2^(width+1) into the signed range
/// [-2^width, 2^width - 1]: the twos-complement "drop the excess bits".
std::int64_t wrap_stored(int128 v, int width) noexcept {
    const uint128 modulus = uint128{1} << (width + 1);
    uint128 bits = static_cast<uint128>(v) & (modulus - 1);
    if (bits >= (modulus >> 1))
        return static_cast<std::int64_t>(static_cast<int128>(bits) - static_cast<int128>(modulus));
    return static_cast<std::int64_t>(bits);
}

std::int64_t wrap_stored_bits64(std::uint64_t bits, int width) noexcept {
    return wrap_stored(static_cast<int128>(static_cast<std::int64_t>(bits)), width);
}

/// floor division for an int128 numerator and non-zero int64 denominator.
int128 floor_div(int128 num, std::int64_t den) noexcept {
    int128 q = num / den;
    if ((num % den) != 0 && ((num < 0) != (den < 0)))
        --q;
    return q;
}

std::string spec_text(FixedSpec s) {
    return "(" + std::to_string(s.int_bits) + ", " + std::to_string(s.frac_bits) + ")";
}

} // namespace

FixedSpec make_spec(int int_bits, int frac_bits) {
    FixedSpec spec{int_bits, frac_bits};
    if (!spec_valid(spec))
        throw SpecOutOfRange("invalid representation " + spec_text(spec) +
                             ": bit counts must be non-negative and total at most " +
                             std::to_string(kMaxMagnitudeBits));
    return spec;
}

bool spec_valid(FixedSpec spec) noexcept {
    return spec.int_bits >= 0 && spec.frac_bits >= 0 &&
           spec.int_bits + spec.frac_bits <= kMaxMagnitudeBits;
}

FixedSpec promote(FixedSpec a, FixedSpec b) {
    return make_spec(a.int_bits > b.int_bits ? a.int_bits : b.int_bits,
                     a.frac_bits > b.frac_bits ? a.frac_bits : b.frac_bits);
}

std::int64_t stored_min(FixedSpec spec) noexcept {
    return -(std::int64_t{1} << width_of(spec));
}

std::int64_t stored_max(FixedSpec spec) noexcept {
    return (std::int64_t{1} << width_of(spec)) - 1;
}

double FixedScalar::to_real() const noexcept {
    return std::ldexp(static_cast<double>(stored), -spec.frac_bits);
}

double to_real(FixedScalar a) noexcept { return a.to_real(); }

FixedScalar quantize(FixedSpec spec, double x) {
    if (!spec_valid(spec))
        throw SpecOutOfRange("quantize: invalid representation " + spec_text(spec));
    if (!std::isfinite(x))
        throw NonFiniteInput("quantize: input must be finite");

    const std::int64_t lo = stored_min(spec);
    const std::int64_t hi = stored_max(spec);
    const double scaled = std::ldexp(x, spec.frac_bits);
    const double limit = std::ldexp(1.0, width_of(spec)); // 2^width

    std::int64_t stored;
    if (scaled >= limit) {
        stored = hi;
    } else if (scaled < -limit) {
        stored = lo;
    } else {
        // |scaled| <= 2^62, safe for llround; ties away from zero.
        stored = std::llround(scaled);
        if (stored > hi)
            stored = hi;
        if (stored < lo)
            stored = lo;
    }
    return {stored, spec};
}

FixedScalar from_stored(FixedSpec spec, std::int64_t stored) {
    if (!spec_valid(spec))
        throw SpecOutOfRange("from_stored: invalid representation " + spec_text(spec));
    return {wrap_stored(stored, width_of(spec)), spec};
}

FixedScalar refix(FixedScalar a, FixedSpec to) {
    if (!spec_valid(to))
        throw SpecOutOfRange("refix: invalid representation " + spec_text(to));

    int128 s = a.stored;
    const int dfrac = to.frac_bits - a.spec.frac_bits;
    if (dfrac >= 0)
        s <<= dfrac; // lossless
    else
        s >>= -dfrac; // arithmetic shift: floor toward -infinity

    if (to.int_bits < a.spec.int_bits) {
        // Keep the sign, drop most-significant magnitude bits.
        const uint128 mask = (uint128{1} << width_of(to)) - 1;
        uint128 mag = static_cast<uint128>(s < 0 ? -s : s) & mask;
        s = s < 0 ? -static_cast<int128>(mag) : static_cast<int128>(mag);
    }
    return {static_cast<std::int64_t>(s), to};
}

WrapResult add_detect(FixedScalar a, FixedScalar b) {
    const FixedSpec rs = promote(a.spec, b.spec);
    const int128 sa = int128{a.stored} << (rs.frac_bits - a.spec.frac_bits);
    const int128 sb = int128{b.stored} << (rs.frac_bits - b.spec.frac_bits);
    const int128 exact = sa + sb;
    const std::int64_t wrapped = wrap_stored(exact, width_of(rs));
    return {{wrapped, rs}, wrapped != exact};
}

FixedScalar add(FixedScalar a, FixedScalar b) { return add_detect(a, b).value; }

FixedScalar sub(FixedScalar a, FixedScalar b) { return add(a, neg(b)); }

WrapResult mul_detect(FixedScalar a, FixedScalar b) {
    const FixedSpec rs = promote(a.spec, b.spec);
    // Exact product sits on the (a.frac + b.frac) grid; floor it onto the
    // promoted grid, then wrap.
    int128 p = int128{a.stored} * int128{b.stored};
    const int drop = a.spec.frac_bits + b.spec.frac_bits - rs.frac_bits;
    p >>= drop;
    const std::int64_t wrapped = wrap_stored(p, width_of(rs));
    return {{wrapped, rs}, wrapped != p};
}

FixedScalar mul(FixedScalar a, FixedScalar b) { return mul_detect(a, b).value; }

FixedScalar div(FixedScalar a, FixedScalar b) {
    if (b.stored == 0)
        throw DivisionByZero("fixed-point division by zero");
    const FixedSpec rs = promote(a.spec, b.spec);
    // quotient on the promoted grid: floor(a.stored * 2^e / b.stored)
    // with e = rs.frac - a.frac + b.frac (always >= 0).
    const int e = rs.frac_bits - a.spec.frac_bits + b.spec.frac_bits;

    if (e <= 63) {
        const int128 num = int128{a.stored} << e;
        return {wrap_stored(floor_div(num, b.stored), width_of(rs)), rs};
    }

    // Wide-exponent path: long division in chunks, accumulating the
    // quotient modulo 2^64 (the final wrap keeps fewer bits than that).
    const bool neg_quot = (a.stored < 0) != (b.stored < 0);
    uint128 rem = a.stored < 0 ? static_cast<uint128>(-int128{a.stored})
                               : static_cast<uint128>(a.stored);
    const std::uint64_t den = b.stored < 0 ? static_cast<std::uint64_t>(-int128{b.stored})
                                           : static_cast<std::uint64_t>(b.stored);
    std::uint64_t quot = static_cast<std::uint64_t>(rem / den);
    rem %= den;
    for (int left = e; left > 0;) {
        const int chunk = left < 60 ? left : 60;
        rem <<= chunk;
        quot = (quot << chunk) + static_cast<std::uint64_t>(rem / den);
        rem %= den;
        left -= chunk;
    }
    if (neg_quot) {
        quot = ~quot + 1;
        if (rem != 0)
            --quot; // floor toward -infinity
    }
    return {wrap_stored_bits64(quot, width_of(rs)), rs};
}

FixedScalar neg(FixedScalar a) noexcept {
    return {wrap_stored(-int128{a.stored}, width_of(a.spec)), a.spec};
}

WrapResult neg_detect(FixedScalar a) noexcept {
    return {neg(a), a.stored == stored_min(a.spec)};
}

int sign(FixedScalar a) noexcept { return (a.stored > 0) - (a.stored < 0); }

std::strong_ordering compare(FixedScalar a, FixedScalar b) noexcept {
    // Exact: cross-scale both stored values onto the common grid.
    const int128 va = int128{a.stored} << b.spec.frac_bits;
    const int128 vb = int128{b.stored} << a.spec.frac_bits;
    if (va < vb)
        return std::strong_ordering::less;
    if (va > vb)
        return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

int min_int_bits(std::int64_t v) {
    const std::int64_t limit = std::int64_t{1} << kMaxMagnitudeBits;
    if (v > limit || v < -limit)
        throw SpecOutOfRange("min_int_bits: |value| exceeds 2^62");
    if (v >= 0)
        return std::bit_width(static_cast<std::uint64_t>(v));
    return std::bit_width(static_cast<std::uint64_t>(-v) - 1);
}

FixedScalar arith_shift_right(FixedScalar a, int n) noexcept {
    return {a.stored >> n, a.spec};
}

} // namespace fx
