#pragma once

#include <complex>
#include <cstdint>
#include <span>
#include <vector>

#include "fx/complex.hpp"
#include "fx/fft.hpp"
#include "fx/prng.hpp"
#include "fx/tally.hpp"

namespace fx {

/// One experiment point: a 64-QAM OFDM modulator whose IFFT runs in
/// fixed point (everything else is ideal), measuring bit errors against
/// the RMS backoff of the frequency-domain signal.
struct OfdmConfig {
    std::size_t n_fft = 64;   ///< transform size, power of 4
    std::size_t n_used = 52;  ///< occupied subcarriers (even, DC unused)
    int bits_n = 12;          ///< magnitude bits; the word is bits_n + 1 with sign
    double backoff_db = 0.0;  ///< full-scale-to-RMS ratio in dB
    std::size_t n_symbols = 1;
    std::uint64_t seed = 0;
};

struct SweepRecord {
    int bits_n = 0;
    double backoff_db = 0.0;
    std::size_t n_symbols = 0;
    std::uint64_t total_bits = 0;
    std::uint64_t bit_errors = 0;
    double ber = 0.0;
};

/// Gray-labelled 64-QAM point for a 6-bit group (first three bits select
/// the I level, last three the Q level), scaled by 1/sqrt(42) for unit
/// mean power.
std::complex<double> qam64_map(unsigned bits6) noexcept;

/// Hard-decision slicer, thresholds at the even levels; a point exactly
/// on a threshold resolves to the higher level.
unsigned qam64_demap(std::complex<double> p) noexcept;

/// Data-carrier FFT bins in placement order: logical subcarriers
/// -n_used/2 .. -1, +1 .. +n_used/2.
std::vector<std::size_t> used_carriers(const OfdmConfig& cfg);

/// Map n_used * 6 bits onto the used carriers and scale every point by
/// g = 2^bits_n * 10^(-backoff_db/20), which makes full scale over
/// frequency-domain RMS equal the backoff.  Unused carriers are zero.
/// Throws InsufficientBits when the stream is too short.
std::vector<std::complex<double>> build_frame(std::span<const std::uint8_t> bits,
                                              const OfdmConfig& cfg);

struct ModulateResult {
    std::vector<FixedComplex> samples;
    std::uint64_t overflow_count = 0;
};

/// Quantize the frame to spec(1, bits_n - 1) after dividing by 2^bits_n
/// (full scale maps to half the representable range), then run the
/// fixed-width radix-4 IFFT.  Internal overflows wrap and are counted.
ModulateResult modulate(std::span<const std::complex<double>> frame, const OfdmConfig& cfg,
                        OpTally* tally = nullptr);

/// Ideal receiver: exact floating forward FFT, known-gain removal,
/// hard-decision demapping.  Returns n_used * 6 bits.
std::vector<std::uint8_t> demodulate_ideal(std::span<const FixedComplex> x,
                                           const OfdmConfig& cfg);

/// Run cfg.n_symbols random frames end to end and count bit errors.
/// Deterministic for a given cfg.
SweepRecord run_point(const OfdmConfig& cfg, OpTally* tally = nullptr);

/// run_point over the (bits, backoff) grid, bits outer.  Each point gets
/// an independent seed derived as seed ^ splitmix64(index), so results do
/// not depend on evaluation order.
std::vector<SweepRecord> sweep(std::span<const int> bits_list,
                               std::span<const double> backoff_list,
                               std::size_t n_symbols, std::uint64_t seed,
                               OpTally* tally = nullptr);

} // namespace fx
