#include "fx/ofdm.hpp"

#include <cmath>
#include <string>

namespace fx {
namespace {

constexpr int kBitsPerSymbol = 6; // 64-QAM

// Per-axis Gray labels, indexed by level (0 -> -7 ... 7 -> +7).
constexpr unsigned kGrayByLevel[8] = {0b000, 0b001, 0b011, 0b010, 0b110, 0b111, 0b101, 0b100};

constexpr unsigned kLevelByGray[8] = {
    0, // 000 -> -7
    1, // 001 -> -5
    3, // 010 -> -1
    2, // 011 -> -3
    7, // 100 -> +7
    6, // 101 -> +5
    4, // 110 -> +1
    5, // 111 -> +3
};

const double kQamScale = 1.0 / std::sqrt(42.0);

int axis_level(double v) noexcept {
    // thresholds at even levels; exact ties go to the higher level
    const double u = (v / kQamScale + 8.0) / 2.0;
    int level = static_cast<int>(std::floor(u));
    if (level < 0)
        level = 0;
    if (level > 7)
        level = 7;
    return level;
}

void validate(const OfdmConfig& cfg) {
    if (cfg.n_used == 0 || cfg.n_used % 2 != 0 || cfg.n_used / 2 >= cfg.n_fft / 2)
        throw Error("ofdm: n_used must be even and leave the DC and guard bins free");
    if (cfg.bits_n < 2 || cfg.bits_n > kMaxMagnitudeBits)
        throw Error("ofdm: bits_n out of range");
    if (cfg.n_symbols == 0)
        throw Error("ofdm: n_symbols must be at least 1");
}

double frame_gain(const OfdmConfig& cfg) {
    return std::ldexp(1.0, cfg.bits_n) * std::pow(10.0, -cfg.backoff_db / 20.0);
}

} // namespace

std::complex<double> qam64_map(unsigned bits6) noexcept {
    const unsigned i_level = kLevelByGray[(bits6 >> 3) & 7u];
    const unsigned q_level = kLevelByGray[bits6 & 7u];
    return {(2.0 * i_level - 7.0) * kQamScale, (2.0 * q_level - 7.0) * kQamScale};
}

unsigned qam64_demap(std::complex<double> p) noexcept {
    const unsigned i_bits = kGrayByLevel[axis_level(p.real())];
    const unsigned q_bits = kGrayByLevel[axis_level(p.imag())];
    return (i_bits << 3) | q_bits;
}

std::vector<std::size_t> used_carriers(const OfdmConfig& cfg) {
    validate(cfg);
    std::vector<std::size_t> bins;
    bins.reserve(cfg.n_used);
    const std::size_t half = cfg.n_used / 2;
    for (std::size_t k = half; k >= 1; --k)
        bins.push_back(cfg.n_fft - k); // logical -half .. -1
    for (std::size_t k = 1; k <= half; ++k)
        bins.push_back(k); // logical +1 .. +half
    return bins;
}

std::vector<std::complex<double>> build_frame(std::span<const std::uint8_t> bits,
                                              const OfdmConfig& cfg) {
    const auto carriers = used_carriers(cfg);
    if (bits.size() < carriers.size() * kBitsPerSymbol)
        throw InsufficientBits("build_frame: need " +
                               std::to_string(carriers.size() * kBitsPerSymbol) + " bits, got " +
                               std::to_string(bits.size()));

    const double gain = frame_gain(cfg);
    std::vector<std::complex<double>> frame(cfg.n_fft, {0.0, 0.0});
    std::size_t pos = 0;
    for (std::size_t bin : carriers) {
        unsigned group = 0;
        for (int b = 0; b < kBitsPerSymbol; ++b)
            group = (group << 1) | (bits[pos++] & 1u);
        frame[bin] = gain * qam64_map(group);
    }
    return frame;
}

ModulateResult modulate(std::span<const std::complex<double>> frame, const OfdmConfig& cfg,
                        OpTally* tally) {
    validate(cfg);
    if (frame.size() != cfg.n_fft)
        throw DimensionMismatch("modulate: frame length must equal n_fft");

    // Full scale 2^bits_n maps to value 1.0 under spec(1, bits_n - 1); the
    // extra integer bit is headroom for constellation peaks and rotations.
    const FixedSpec spec = make_spec(1, cfg.bits_n - 1);
    std::vector<FixedComplex> fixed_frame;
    fixed_frame.reserve(frame.size());
    for (const auto& v : frame)
        fixed_frame.push_back(quantize(spec, {std::ldexp(v.real(), -cfg.bits_n),
                                              std::ldexp(v.imag(), -cfg.bits_n)}));
    if (tally)
        tally->record(OpKind::quantize, 2 * frame.size());

    auto result = ifft_radix4(fixed_frame, ScalingPolicy::fixed_width, tally);
    return {std::move(result.values), result.overflow_count};
}

std::vector<std::uint8_t> demodulate_ideal(std::span<const FixedComplex> x,
                                           const OfdmConfig& cfg) {
    validate(cfg);
    if (x.size() != cfg.n_fft)
        throw DimensionMismatch("demodulate: sample count must equal n_fft");

    std::vector<std::complex<double>> time(x.size());
    for (std::size_t i = 0; i < x.size(); ++i)
        time[i] = to_complex(x[i]);
    const auto freq = fft_forward(time);

    // post-modulator gain is g / 2^bits_n; the transform pair carries no
    // net scale (1/N in the modulator, none in the receiver)
    const double gain = frame_gain(cfg) * std::ldexp(1.0, -cfg.bits_n);
    std::vector<std::uint8_t> bits;
    bits.reserve(cfg.n_used * kBitsPerSymbol);
    for (std::size_t bin : used_carriers(cfg)) {
        const unsigned group = qam64_demap(freq[bin] / gain);
        for (int b = kBitsPerSymbol - 1; b >= 0; --b)
            bits.push_back(static_cast<std::uint8_t>((group >> b) & 1u));
    }
    return bits;
}

SweepRecord run_point(const OfdmConfig& cfg, OpTally* tally) {
    validate(cfg);
    const std::size_t bits_per_frame = cfg.n_used * kBitsPerSymbol;
    BitSource source(cfg.seed);

    std::uint64_t errors = 0;
    std::vector<std::uint8_t> tx(bits_per_frame);
    for (std::size_t s = 0; s < cfg.n_symbols; ++s) {
        for (auto& b : tx)
            b = source.next_bit();
        const auto frame = build_frame(tx, cfg);
        const auto modulated = modulate(frame, cfg, tally);
        const auto rx = demodulate_ideal(modulated.samples, cfg);
        for (std::size_t i = 0; i < bits_per_frame; ++i)
            errors += tx[i] != rx[i];
    }

    SweepRecord rec;
    rec.bits_n = cfg.bits_n;
    rec.backoff_db = cfg.backoff_db;
    rec.n_symbols = cfg.n_symbols;
    rec.total_bits = static_cast<std::uint64_t>(cfg.n_symbols) * bits_per_frame;
    rec.bit_errors = errors;
    rec.ber = rec.total_bits ? static_cast<double>(errors) / static_cast<double>(rec.total_bits)
                             : 0.0;
    return rec;
}

std::vector<SweepRecord> sweep(std::span<const int> bits_list,
                               std::span<const double> backoff_list, std::size_t n_symbols,
                               std::uint64_t seed, OpTally* tally) {
    if (bits_list.empty() || backoff_list.empty())
        throw Error("sweep: bits and backoff lists must be non-empty");

    std::vector<SweepRecord> records;
    records.reserve(bits_list.size() * backoff_list.size());
    std::uint64_t index = 0;
    for (int bits : bits_list) {
        for (double backoff : backoff_list) {
            OfdmConfig cfg;
            cfg.bits_n = bits;
            cfg.backoff_db = backoff;
            cfg.n_symbols = n_symbols;
            cfg.seed = seed ^ SplitMix64{index}.next(); // order-insensitive per-point seed
            records.push_back(run_point(cfg, tally));
            ++index;
        }
    }
    return records;
}

} // namespace fx
