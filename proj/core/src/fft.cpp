#include "fx/fft.hpp"

#include <cmath>
#include <numbers>

namespace fx {
namespace {

/// log4(n) when n is a power of four, otherwise -1.
int log4_of(std::size_t n) {
    if (n == 0)
        return -1;
    int stages = 0;
    std::size_t m = n;
    while (m > 1) {
        if (m % 4 != 0)
            return -1;
        m /= 4;
        ++stages;
    }
    return stages;
}

int require_power_of_four(std::size_t n) {
    const int stages = log4_of(n);
    if (stages < 0)
        throw SizeNotPowerOfFour("transform size " + std::to_string(n) +
                                 " is not a power of four");
    return stages;
}

std::complex<double> unit_root(std::size_t k, std::size_t n) {
    const double angle = 2.0 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(n);
    return {std::cos(angle), std::sin(angle)};
}

// Floating-point engine for the shared radix-4 loop.  sign is +1 for the
// inverse convention and -1 for the forward one.
struct FloatEngine {
    using Value = std::complex<double>;

    int sign;
    std::vector<Value> table; // e^(+j 2 pi k / span) for the current stage

    void begin_stage(std::vector<Value>& /*data*/, int /*stage*/, std::size_t span) {
        table.resize(span);
        for (std::size_t k = 0; k < span; ++k)
            table[k] = unit_root(k, span);
    }

    void end_stage(std::vector<Value>& /*data*/, int /*stage*/) {}

    Value mul_tw(const Value& a, std::size_t t) const {
        const Value w = sign > 0 ? table[t] : std::conj(table[t]);
        return {a.real() * w.real() - a.imag() * w.imag(),
                a.real() * w.imag() + a.imag() * w.real()};
    }

    // multiply by i^(sign * r)
    Value rot(const Value& a, unsigned r) const {
        const unsigned q = sign > 0 ? (r & 3u) : ((4u - (r & 3u)) & 3u);
        switch (q) {
        case 0: return a;
        case 1: return {-a.imag(), a.real()};
        case 2: return {-a.real(), -a.imag()};
        default: return {a.imag(), -a.real()};
        }
    }

    Value add(const Value& a, const Value& b) const { return a + b; }
};

// Fixed-point engine: drives the scaling policy, counts operations into
// the tally and wrap events into overflow_count.
struct FixedEngine {
    using Value = FixedComplex;

    ScalingPolicy policy;
    FixedWidthScaling scaling;
    OpTally* tally = nullptr;
    std::uint64_t overflow_count = 0;
    FixedSpec data_spec;
    std::vector<FixedComplex> table;

    void begin_stage(std::vector<Value>& data, int /*stage*/, std::size_t span) {
        if (policy == ScalingPolicy::grow || policy == ScalingPolicy::truncate_lsb) {
            const int dfrac = policy == ScalingPolicy::grow ? 0 : -2;
            const FixedSpec wider =
                make_spec(data_spec.int_bits + 2, data_spec.frac_bits + dfrac);
            for (auto& v : data) {
                v.re = refix(v.re, wider);
                v.im = refix(v.im, wider);
            }
            if (tally)
                tally->record(OpKind::refix, 2 * data.size());
            data_spec = wider;
        }
        const TwiddleTable tw = twiddle_table(span, make_spec(1, data_spec.frac_bits));
        table = tw.fixed;
    }

    void end_stage(std::vector<Value>& data, int /*stage*/) {
        if (policy == ScalingPolicy::fixed_width &&
            scaling == FixedWidthScaling::per_stage_quarter) {
            for (auto& v : data) {
                v.re = arith_shift_right(v.re, 2);
                v.im = arith_shift_right(v.im, 2);
            }
            if (tally)
                tally->record(OpKind::div, 2 * data.size());
        }
    }

    Value mul_tw(const Value& a, std::size_t t) {
        return cmul(a, table[t], tally, &overflow_count);
    }

    Value rot(const Value& a, unsigned r) {
        // IFFT sign: multiply by i^r via component swaps and negations.
        auto negate = [&](const FixedScalar& s) {
            const WrapResult n = neg_detect(s);
            if (tally)
                tally->record(OpKind::neg);
            if (n.wrapped)
                ++overflow_count;
            return n.value;
        };
        switch (r & 3u) {
        case 0: return a;
        case 1: return {negate(a.im), a.re};
        case 2: return {negate(a.re), negate(a.im)};
        default: return {a.im, negate(a.re)};
        }
    }

    Value add(const Value& a, const Value& b) {
        return cadd(a, b, tally, &overflow_count);
    }
};

/// Shared decimation-in-time radix-4 stage loop.  `data` must already be
/// in digit-reversed order; output is natural.  Butterfly terms
/// accumulate strictly in index order.
template <typename Engine>
void radix4_stages(std::vector<typename Engine::Value>& data, Engine& eng) {
    const std::size_t n = data.size();
    std::size_t quarter = 1;
    int stage = 0;
    while (quarter * 4 <= n) {
        const std::size_t span = quarter * 4;
        eng.begin_stage(data, stage, span);
        for (std::size_t base = 0; base < n; base += span) {
            for (std::size_t j = 0; j < quarter; ++j) {
                auto a0 = data[base + j];
                auto a1 = data[base + j + quarter];
                auto a2 = data[base + j + 2 * quarter];
                auto a3 = data[base + j + 3 * quarter];
                if (j != 0) {
                    a1 = eng.mul_tw(a1, j);
                    a2 = eng.mul_tw(a2, 2 * j);
                    a3 = eng.mul_tw(a3, 3 * j);
                }
                for (unsigned k = 0; k < 4; ++k) {
                    auto acc = eng.add(a0, eng.rot(a1, k));
                    acc = eng.add(acc, eng.rot(a2, 2 * k));
                    acc = eng.add(acc, eng.rot(a3, 3 * k));
                    data[base + j + k * quarter] = acc;
                }
            }
        }
        eng.end_stage(data, stage);
        quarter = span;
        ++stage;
    }
}

template <typename Value>
std::vector<Value> digit_reversed_copy(std::span<const Value> x) {
    const auto perm = digit_reverse_permutation(x.size());
    std::vector<Value> out(x.size());
    for (std::size_t i = 0; i < x.size(); ++i)
        out[i] = x[perm[i]];
    return out;
}

} // namespace

std::vector<std::size_t> digit_reverse_permutation(std::size_t n) {
    const int stages = require_power_of_four(n);
    std::vector<std::size_t> perm(n);
    for (std::size_t i = 0; i < n; ++i) {
        std::size_t v = i;
        std::size_t r = 0;
        for (int d = 0; d < stages; ++d) {
            r = r * 4 + (v & 3);
            v >>= 2;
        }
        perm[i] = r;
    }
    return perm;
}

TwiddleTable twiddle_table(std::size_t n) {
    require_power_of_four(n);
    TwiddleTable t;
    t.size = n;
    t.floating.resize(n);
    for (std::size_t k = 0; k < n; ++k)
        t.floating[k] = unit_root(k, n);
    return t;
}

TwiddleTable twiddle_table(std::size_t n, FixedSpec spec) {
    if (!spec_valid(spec) || spec.int_bits < 1)
        throw SpecOutOfRange("twiddle_table: spec must be valid with int_bits >= 1");
    TwiddleTable t = twiddle_table(n);
    t.fixed.reserve(n);
    for (const auto& w : t.floating)
        t.fixed.push_back(quantize(spec, w));
    return t;
}

std::vector<std::complex<double>> ifft_radix4(std::span<const std::complex<double>> x) {
    require_power_of_four(x.size());
    auto data = digit_reversed_copy(x);
    FloatEngine eng{+1, {}};
    radix4_stages(data, eng);
    const double scale = 1.0 / static_cast<double>(x.size());
    for (auto& v : data)
        v *= scale;
    return data;
}

FixedTransformResult ifft_radix4(std::span<const FixedComplex> x, ScalingPolicy policy,
                                 OpTally* tally, FixedWidthScaling scaling) {
    require_power_of_four(x.size());
    if (x.empty())
        throw SizeNotPowerOfFour("transform size 0 is not a power of four");
    const FixedSpec spec = x.front().re.spec;
    for (const auto& v : x)
        if (v.re.spec != spec || v.im.spec != spec)
            throw std::invalid_argument("fixed transform inputs must share one spec");

    auto data = digit_reversed_copy(x);
    FixedEngine eng;
    eng.policy = policy;
    eng.scaling = scaling;
    eng.tally = tally;
    eng.data_spec = spec;
    radix4_stages(data, eng);
    return {std::move(data), eng.overflow_count};
}

std::vector<std::complex<double>> fft_forward(std::span<const std::complex<double>> x) {
    require_power_of_four(x.size());
    auto data = digit_reversed_copy(x);
    FloatEngine eng{-1, {}};
    radix4_stages(data, eng);
    return data;
}

std::vector<std::complex<double>> dft_reference(std::span<const std::complex<double>> x) {
    const std::size_t n = x.size();
    if (n == 0)
        throw Error("dft_reference: length must be at least 1");
    std::vector<std::complex<double>> out(n);
    for (std::size_t i = 0; i < n; ++i) {
        std::complex<double> acc{0.0, 0.0};
        for (std::size_t k = 0; k < n; ++k)
            acc += x[k] * unit_root((k * i) % n, n);
        out[i] = acc / static_cast<double>(n);
    }
    return out;
}

} // namespace fx
