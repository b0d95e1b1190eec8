#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <complex>
#include <vector>

#include "fx/fft.hpp"
#include "fx/prng.hpp"

using namespace fx;

namespace {

std::vector<std::complex<double>> random_input(SplitMix64& rng, std::size_t n, double amplitude) {
    std::vector<std::complex<double>> v(n);
    for (auto& x : v)
        x = {amplitude * (2.0 * rng.next_double() - 1.0),
             amplitude * (2.0 * rng.next_double() - 1.0)};
    return v;
}

std::vector<FixedComplex> quantize_all(FixedSpec spec,
                                       std::span<const std::complex<double>> x) {
    std::vector<FixedComplex> out;
    out.reserve(x.size());
    for (const auto& v : x)
        out.push_back(quantize(spec, v));
    return out;
}

double max_error(std::span<const std::complex<double>> a,
                 std::span<const std::complex<double>> b) {
    double worst = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i)
        worst = std::max(worst, std::abs(a[i] - b[i]));
    return worst;
}

std::vector<std::complex<double>> to_float(std::span<const FixedComplex> x) {
    std::vector<std::complex<double>> out(x.size());
    for (std::size_t i = 0; i < x.size(); ++i)
        out[i] = to_complex(x[i]);
    return out;
}

} // namespace

TEST_CASE("digit reversal permutes base-4 digits") {
    const auto p16 = digit_reverse_permutation(16);
    CHECK(p16[0] == 0);
    CHECK(p16[1] == 4);
    CHECK(digit_reverse_permutation(64)[1] == 16);

    for (std::size_t n : {std::size_t{1}, std::size_t{4}, std::size_t{16}, std::size_t{64},
                          std::size_t{256}}) {
        const auto p = digit_reverse_permutation(n);
        for (std::size_t i = 0; i < n; ++i)
            CHECK(p[p[i]] == i); // involution
    }

    CHECK_THROWS_AS(digit_reverse_permutation(0), SizeNotPowerOfFour);
    CHECK_THROWS_AS(digit_reverse_permutation(8), SizeNotPowerOfFour);
    CHECK_THROWS_AS(digit_reverse_permutation(60), SizeNotPowerOfFour);
}

TEST_CASE("twiddle tables carry the inverse-transform phase") {
    const TwiddleTable t4 = twiddle_table(4);
    CHECK(t4.floating[0] == std::complex<double>{1.0, 0.0});
    CHECK(std::abs(t4.floating[1] - std::complex<double>{0.0, 1.0}) < 1e-15);

    const TwiddleTable fixed8 = twiddle_table(16, make_spec(1, 8));
    CHECK(fixed8.is_fixed());
    CHECK(to_complex(fixed8.fixed[0]) == std::complex<double>{1.0, 0.0});
    // cos(pi/4) at 8 fractional bits rounds to 181/256
    CHECK(fixed8.fixed[2].re.stored == 181);
    CHECK(fixed8.fixed[2].im.stored == 181);

    CHECK_THROWS_AS(twiddle_table(16, FixedSpec{0, 8}), SpecOutOfRange);
    CHECK_THROWS_AS(twiddle_table(12), SizeNotPowerOfFour);
}

TEST_CASE("quantized twiddles stay near the unit circle") {
    for (int fb : {4, 8, 12}) {
        const TwiddleTable t = twiddle_table(64, make_spec(1, fb));
        const double bound = 1.0 + std::ldexp(1.0, -fb);
        for (const auto& w : t.fixed)
            CHECK(std::abs(to_complex(w)) <= bound);
    }
}

TEST_CASE("floating inverse transform of impulses and constants") {
    std::vector<std::complex<double>> delta(64, {0.0, 0.0});
    delta[0] = {1.0, 0.0};
    for (const auto& v : ifft_radix4(delta))
        CHECK(std::abs(v - std::complex<double>{1.0 / 64.0, 0.0}) < 1e-15);

    const std::vector<std::complex<double>> ones(64, {1.0, 0.0});
    const auto x = ifft_radix4(ones);
    CHECK(std::abs(x[0] - std::complex<double>{1.0, 0.0}) < 1e-12);
    for (std::size_t i = 1; i < x.size(); ++i)
        CHECK(std::abs(x[i]) < 1e-12);

    const std::vector<std::complex<double>> single{{2.5, -1.5}};
    CHECK(ifft_radix4(single)[0] == std::complex<double>{2.5, -1.5});
}

TEST_CASE("floating transform matches the direct evaluation") {
    SplitMix64 rng{101};
    for (std::size_t n : {std::size_t{16}, std::size_t{64}, std::size_t{256}}) {
        for (int trial = 0; trial < 20; ++trial) {
            const auto x = random_input(rng, n, 1.0);
            CHECK(max_error(ifft_radix4(x), dft_reference(x)) < 1e-9);
        }
    }
    CHECK_THROWS_AS(ifft_radix4(random_input(rng, 60, 1.0)), SizeNotPowerOfFour);
}

TEST_CASE("forward transform inverts the inverse transform") {
    SplitMix64 rng{103};
    for (int trial = 0; trial < 20; ++trial) {
        const auto x = random_input(rng, 64, 1.0);
        CHECK(max_error(fft_forward(ifft_radix4(x)), x) < 1e-9);
    }

    std::vector<std::complex<double>> delta(16, {0.0, 0.0});
    delta[0] = {1.0, 0.0};
    for (const auto& v : fft_forward(delta))
        CHECK(std::abs(v - std::complex<double>{1.0, 0.0}) < 1e-12);
}

TEST_CASE("Parseval holds for the transform pair") {
    SplitMix64 rng{107};
    const auto X = random_input(rng, 64, 1.0);
    const auto x = ifft_radix4(X);
    double time_power = 0.0, freq_power = 0.0;
    for (std::size_t i = 0; i < 64; ++i) {
        time_power += std::norm(x[i]);
        freq_power += std::norm(X[i]);
    }
    CHECK(time_power == doctest::Approx(freq_power / 64.0).epsilon(1e-9));
}

TEST_CASE("direct evaluation of impulses and constants") {
    std::vector<std::complex<double>> delta(12, {0.0, 0.0});
    delta[0] = {1.0, 0.0};
    for (const auto& v : dft_reference(delta))
        CHECK(std::abs(v - std::complex<double>{1.0 / 12.0, 0.0}) < 1e-15);

    const std::vector<std::complex<double>> ones(12, {1.0, 0.0});
    const auto spike = dft_reference(ones);
    CHECK(std::abs(spike[0] - std::complex<double>{1.0, 0.0}) < 1e-12);
    for (std::size_t i = 1; i < spike.size(); ++i)
        CHECK(std::abs(spike[i]) < 1e-12);
}

TEST_CASE("direct evaluation is linear and handles any length") {
    SplitMix64 rng{109};
    const auto x = random_input(rng, 12, 1.0);
    const auto y = random_input(rng, 12, 1.0);
    std::vector<std::complex<double>> combo(12);
    const std::complex<double> a{0.7, -0.3}, b{-1.1, 0.25};
    for (std::size_t i = 0; i < 12; ++i)
        combo[i] = a * x[i] + b * y[i];
    const auto dx = dft_reference(x);
    const auto dy = dft_reference(y);
    const auto dc = dft_reference(combo);
    for (std::size_t i = 0; i < 12; ++i)
        CHECK(std::abs(dc[i] - (a * dx[i] + b * dy[i])) < 1e-12);

    CHECK_THROWS_AS(dft_reference(std::vector<std::complex<double>>{}), Error);
}

TEST_CASE("fixed-width transform tracks the floating one at high precision") {
    SplitMix64 rng{113};
    const FixedSpec spec = make_spec(1, 28);
    const double tol = std::ldexp(1.0, -20);
    for (int trial = 0; trial < 20; ++trial) {
        const auto small = random_input(rng, 64, 0.125);
        const auto fixed_in = quantize_all(spec, small);
        const auto float_in = to_float(fixed_in);
        const auto fixed_out = ifft_radix4(fixed_in, ScalingPolicy::fixed_width);
        CHECK(fixed_out.overflow_count == 0);
        CHECK(max_error(to_float(fixed_out.values), ifft_radix4(float_in)) < tol);
        for (const auto& v : fixed_out.values)
            CHECK(v.re.spec == spec); // spec never changes under fixed_width
    }
}

TEST_CASE("grow policy widens two bits per stage and cannot overflow") {
    SplitMix64 rng{127};
    const FixedSpec spec = make_spec(2, 16);
    for (int trial = 0; trial < 50; ++trial) {
        const auto input = quantize_all(spec, random_input(rng, 64, 1.0));
        const auto out = ifft_radix4(input, ScalingPolicy::grow);
        CHECK(out.overflow_count == 0);
        for (const auto& v : out.values) {
            CHECK(v.re.spec == FixedSpec{8, 16}); // 2 +  2*log4(64)
            CHECK(v.im.spec == FixedSpec{8, 16});
        }
        // unscaled accumulation: N times the normalized inverse transform
        const auto reference = ifft_radix4(to_float(input));
        for (std::size_t i = 0; i < 64; ++i)
            CHECK(std::abs(to_complex(out.values[i]) - 64.0 * reference[i]) < 0.01);
    }

    // width grows with 2 log4(N) at other sizes too
    const auto out16 = ifft_radix4(quantize_all(spec, random_input(rng, 16, 1.0)),
                                   ScalingPolicy::grow);
    CHECK(out16.values.front().re.spec == FixedSpec{6, 16});
    const auto out256 = ifft_radix4(quantize_all(spec, random_input(rng, 256, 1.0)),
                                    ScalingPolicy::grow);
    CHECK(out256.values.front().re.spec == FixedSpec{10, 16});
    CHECK(out16.overflow_count + out256.overflow_count == 0);

    // exceeding the word budget is an error
    const auto big = quantize_all(make_spec(58, 0), random_input(rng, 64, 4.0));
    CHECK_THROWS_AS(ifft_radix4(big, ScalingPolicy::grow), SpecOutOfRange);
}

TEST_CASE("truncate_lsb trades fraction bits for integer bits") {
    SplitMix64 rng{131};
    const FixedSpec spec = make_spec(2, 16);
    const auto input = quantize_all(spec, random_input(rng, 64, 1.0));
    const auto out = ifft_radix4(input, ScalingPolicy::truncate_lsb);
    CHECK(out.overflow_count == 0);
    for (const auto& v : out.values) {
        CHECK(v.re.spec == FixedSpec{8, 10});
        CHECK(v.re.spec.int_bits + v.re.spec.frac_bits == 18); // constant total width
    }
    const auto reference = ifft_radix4(to_float(input));
    for (std::size_t i = 0; i < 64; ++i)
        CHECK(std::abs(to_complex(out.values[i]) - 64.0 * reference[i]) < 0.25);

    // not enough fraction bits to cut
    const auto shallow = quantize_all(make_spec(2, 4), random_input(rng, 64, 1.0));
    CHECK_THROWS_AS(ifft_radix4(shallow, ScalingPolicy::truncate_lsb), SpecOutOfRange);
}

TEST_CASE("fixed-width without per-stage scaling leaves the sum unnormalized") {
    SplitMix64 rng{137};
    const FixedSpec spec = make_spec(1, 20);
    const auto input = quantize_all(spec, random_input(rng, 64, 0.004));
    const auto out = ifft_radix4(input, ScalingPolicy::fixed_width, nullptr,
                                 FixedWidthScaling::none);
    CHECK(out.overflow_count == 0);
    const auto reference = ifft_radix4(to_float(input));
    for (std::size_t i = 0; i < 64; ++i)
        CHECK(std::abs(to_complex(out.values[i]) - 64.0 * reference[i]) < std::ldexp(1.0, -12));
}

TEST_CASE("fixed-width overflow events are counted") {
    SplitMix64 rng{139};
    const FixedSpec spec = make_spec(1, 10);
    std::vector<std::complex<double>> loud(64);
    for (auto& v : loud)
        v = {1.9, 1.9};
    const auto out = ifft_radix4(quantize_all(spec, loud), ScalingPolicy::fixed_width);
    CHECK(out.overflow_count > 0);
}

TEST_CASE("fixed-width tally is a deterministic function of the size") {
    SplitMix64 rng{149};
    const FixedSpec spec = make_spec(1, 14);
    const auto a = quantize_all(spec, random_input(rng, 64, 0.3));
    const auto b = quantize_all(spec, random_input(rng, 64, 0.3));

    OpTally ta, tb;
    ifft_radix4(a, ScalingPolicy::fixed_width, &ta);
    ifft_radix4(b, ScalingPolicy::fixed_width, &tb);
    CHECK(ta == tb); // counts depend on N only, not on the data

    OpTally again;
    ifft_radix4(a, ScalingPolicy::fixed_width, &again);
    CHECK(again == ta);
    CHECK(ta.count(OpKind::mul) == 4 * (36 + 45)); // stages 1 and 2 twiddle products
}

TEST_CASE("mixed input specs are rejected") {
    std::vector<FixedComplex> mixed = {
        quantize(make_spec(3, 2), std::complex<double>{1.0, 0.0}),
        quantize(make_spec(3, 3), std::complex<double>{1.0, 0.0}),
        quantize(make_spec(3, 2), std::complex<double>{1.0, 0.0}),
        quantize(make_spec(3, 2), std::complex<double>{1.0, 0.0}),
    };
    CHECK_THROWS_AS(ifft_radix4(mixed, ScalingPolicy::fixed_width), std::invalid_argument);
}
