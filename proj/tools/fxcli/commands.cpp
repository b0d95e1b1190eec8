#include "fxcli/commands.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdio>
#include <fstream>

#include "fx/fft.hpp"
#include "fx/prng.hpp"

namespace fxcli {
namespace {

std::string printf_str(const char* fmt, double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, fmt, v);
    // the CSV decimal point is '.' no matter what LC_NUMERIC says
    for (char& c : buf) {
        if (c == '\0')
            break;
        if (c == ',')
            c = '.';
    }
    return buf;
}

std::vector<std::complex<double>> random_vector(std::size_t n, fx::SplitMix64& rng,
                                                double amplitude) {
    std::vector<std::complex<double>> v(n);
    for (auto& x : v)
        x = {amplitude * (2.0 * rng.next_double() - 1.0),
             amplitude * (2.0 * rng.next_double() - 1.0)};
    return v;
}

double max_error(std::span<const std::complex<double>> a,
                 std::span<const std::complex<double>> b) {
    double worst = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i)
        worst = std::max(worst, std::abs(a[i] - b[i]));
    return worst;
}

} // namespace

std::string format_backoff(double v) {
    if (v == std::floor(v) && std::abs(v) < 1e15) {
        char buf[32];
        std::snprintf(buf, sizeof buf, "%lld", static_cast<long long>(v));
        return buf;
    }
    return printf_str("%.6g", v);
}

std::string format_ber(double v) { return printf_str("%.6g", v); }

void write_sweep_csv(std::ostream& out, std::span<const fx::SweepRecord> records) {
    out << "bits,backoff_db,symbols,total_bits,bit_errors,ber\n";
    for (const auto& r : records) {
        out << r.bits_n << ',' << format_backoff(r.backoff_db) << ',' << r.n_symbols << ','
            << r.total_bits << ',' << r.bit_errors << ',' << format_ber(r.ber) << '\n';
    }
}

void write_tally_report(std::ostream& out, const fx::OpTally& tally) {
    for (const auto& [kind, count] : tally.report())
        out << fx::to_string(kind) << ' ' << count << '\n';
}

std::vector<double> backoff_grid(double start, double stop, double step) {
    std::vector<double> grid;
    if (stop < start)
        return grid;
    if (step <= 0.0) {
        grid.push_back(start);
        return grid;
    }
    const auto count = static_cast<std::size_t>(std::floor((stop - start) / step + 1e-9)) + 1;
    grid.reserve(count);
    for (std::size_t i = 0; i < count; ++i)
        grid.push_back(start + static_cast<double>(i) * step);
    return grid;
}

int run_ifft_check(std::size_t n, std::size_t trials, std::uint64_t seed, std::ostream& out) {
    const double float_tol = 1e-9;
    const double fixed_tol = std::ldexp(1.0, -20);

    fx::SplitMix64 rng{seed};
    double worst_float = 0.0;
    double worst_round_trip = 0.0;
    double worst_fixed = 0.0;
    const fx::FixedSpec spec = fx::make_spec(1, 28);

    for (std::size_t t = 0; t < trials; ++t) {
        const auto x = random_vector(n, rng, 1.0);
        const auto fast = fx::ifft_radix4(x);
        const auto direct = fx::dft_reference(x);
        worst_float = std::max(worst_float, max_error(fast, direct));
        worst_round_trip = std::max(worst_round_trip, max_error(fx::fft_forward(fast), x));

        // fixed check at high precision and small amplitude
        const auto small = random_vector(n, rng, 0.125);
        std::vector<fx::FixedComplex> fixed_in;
        fixed_in.reserve(n);
        std::vector<std::complex<double>> float_in(n);
        for (std::size_t i = 0; i < n; ++i) {
            fixed_in.push_back(fx::quantize(spec, small[i]));
            float_in[i] = fx::to_complex(fixed_in.back());
        }
        const auto fixed_out = fx::ifft_radix4(fixed_in, fx::ScalingPolicy::fixed_width);
        const auto float_out = fx::ifft_radix4(float_in);
        for (std::size_t i = 0; i < n; ++i)
            worst_fixed =
                std::max(worst_fixed, std::abs(fx::to_complex(fixed_out.values[i]) - float_out[i]));
    }

    out << "ifft vs direct evaluation: max error " << worst_float << " (tolerance " << float_tol
        << ")\n";
    out << "fft(ifft(x)) round trip:   max error " << worst_round_trip << " (tolerance "
        << float_tol << ")\n";
    out << "fixed (1,28) vs floating:  max error " << worst_fixed << " (tolerance " << fixed_tol
        << ")\n";
    const bool ok =
        worst_float < float_tol && worst_round_trip < float_tol && worst_fixed < fixed_tol;
    out << (ok ? "PASS" : "FAIL") << "\n";
    return ok ? 0 : 1;
}

int run_ofdm_sweep(const SweepOptions& options, std::ostream& log) {
    const auto grid = backoff_grid(options.backoff_start, options.backoff_stop,
                                   options.backoff_step);
    if (options.bits.empty() || grid.empty()) {
        log << "error: empty sweep grid\n";
        return 1;
    }

    fx::OpTally tally;
    const auto records = fx::sweep(options.bits, grid, options.symbols, options.seed, &tally);

    std::ofstream file(options.out_path, std::ios::binary);
    if (!file) {
        log << "error: cannot open " << options.out_path << " for writing\n";
        return 1;
    }
    write_sweep_csv(file, records);
    file.flush();
    if (!file) {
        log << "error: failed writing " << options.out_path << "\n";
        return 1;
    }

    log << records.size() << " sweep points written to " << options.out_path << "\n";
    log << "fixed-point operation counts:\n";
    write_tally_report(log, tally);
    return 0;
}

} // namespace fxcli
