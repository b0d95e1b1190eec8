#pragma once

#include <complex>
#include <cstdint>
#include <span>
#include <vector>

#include "fx/complex.hpp"
#include "fx/fixed.hpp"
#include "fx/tally.hpp"

namespace fx {

/// How a fixed-point transform absorbs the up-to-2-bit growth of each
/// radix-4 stage.
///
///  - grow:         every stage widens int_bits by 2, frac_bits unchanged;
///                  nothing can overflow, the word just gets longer.
///  - truncate_lsb: every stage trades 2 frac bits for 2 int bits; total
///                  width stays constant, precision is lost instead.
///  - fixed_width:  the spec never changes; butterfly sums wrap, and
///                  after each stage every element is shifted right by 2
///                  (floor), so the whole transform carries a 1/N factor.
enum class ScalingPolicy { grow, truncate_lsb, fixed_width };

/// Variant switch for fixed_width: per_stage_quarter is the reference
/// behaviour (shift right 2 after each stage); none keeps the values
/// unscaled so overflow behaviour can be studied in isolation.
enum class FixedWidthScaling { per_stage_quarter, none };

/// Base-4 digit reversal of each index over log4(n) digits.  The
/// permutation is an involution.  Throws SizeNotPowerOfFour.
std::vector<std::size_t> digit_reverse_permutation(std::size_t n);

/// Unit-circle coefficients e^(+j*2*pi*k/n) for k in [0, n).  When built
/// with a spec (int_bits >= 1 so that 1 is exact) both parts are
/// quantized to it; entry 0 is always exactly 1.
struct TwiddleTable {
    std::size_t size = 0;
    std::vector<std::complex<double>> floating;
    std::vector<FixedComplex> fixed;

    bool is_fixed() const noexcept { return !fixed.empty(); }
};

TwiddleTable twiddle_table(std::size_t n);
TwiddleTable twiddle_table(std::size_t n, FixedSpec spec);

/// Floating radix-4 inverse transform: (1/N) * sum_k X[k] e^(+j2pikn/N).
/// Decimation in time, digit-reversed input ordering, natural output.
std::vector<std::complex<double>> ifft_radix4(std::span<const std::complex<double>> x);

struct FixedTransformResult {
    std::vector<FixedComplex> values;
    /// Wrap events observed inside butterfly arithmetic.
    std::uint64_t overflow_count = 0;
};

/// Fixed-point radix-4 inverse transform.  All inputs must share one
/// spec.  Butterfly evaluation order is fixed (the four phased terms
/// accumulate in index order) because wrap semantics make the order
/// observable.
FixedTransformResult ifft_radix4(std::span<const FixedComplex> x, ScalingPolicy policy,
                                 OpTally* tally = nullptr,
                                 FixedWidthScaling scaling = FixedWidthScaling::per_stage_quarter);

/// Floating forward transform, sum_n x[n] e^(-j2pink/N) with no 1/N, so
/// fft_forward(ifft_radix4(X)) == X.
std::vector<std::complex<double>> fft_forward(std::span<const std::complex<double>> x);

/// Direct O(N^2) evaluation of (1/N) * sum_k X[k] e^(+j2pikn/N); any
/// length >= 1.  Correctness oracle for the fast transforms.
std::vector<std::complex<double>> dft_reference(std::span<const std::complex<double>> x);

} // namespace fx
