#pragma once

#include <cstdint>
#include <ostream>
#include <span>
#include <string>
#include <vector>

#include "fx/ofdm.hpp"
#include "fx/tally.hpp"

namespace fxcli {

/// `bits,backoff_db,symbols,total_bits,bit_errors,ber` rows in grid order.
/// Output is byte-deterministic: single newlines, '.' decimal point,
/// integral backoffs print as integers, ber with 6 significant digits.
void write_sweep_csv(std::ostream& out, std::span<const fx::SweepRecord> records);

/// Two-column `kind count` report in the fixed kind order.
void write_tally_report(std::ostream& out, const fx::OpTally& tally);

std::string format_backoff(double v);
std::string format_ber(double v);

/// Inclusive backoff grid from start to stop in `step` increments.
std::vector<double> backoff_grid(double start, double stop, double step);

/// Floating transform against the direct evaluation plus a
/// high-precision fixed-vs-floating comparison; prints max errors.
/// Returns 0 when both stay within tolerance, 1 otherwise.
int run_ifft_check(std::size_t n, std::size_t trials, std::uint64_t seed, std::ostream& out);

struct SweepOptions {
    std::vector<int> bits;
    double backoff_start = 0.0;
    double backoff_stop = 24.0;
    double backoff_step = 1.0;
    std::size_t symbols = 700;
    std::uint64_t seed = 1;
    std::string out_path;
};

/// Runs the sweep, writes the CSV to options.out_path and a tally
/// summary to `log`.  Returns 0 on success, 1 on I/O failure.
int run_ofdm_sweep(const SweepOptions& options, std::ostream& log);

} // namespace fxcli
