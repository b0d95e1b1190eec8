#include <cstdint>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "fx/errors.hpp"
#include "fxcli/commands.hpp"
#include "fxcli/selftest.hpp"

int main(int argc, char** argv) {
    CLI::App app{"bit-accurate fixed-point arithmetic and OFDM modulator experiments"};
    app.require_subcommand(1);

    auto* selftest = app.add_subcommand("selftest", "run the built-in golden checks");

    std::size_t ifft_n = 64;
    std::size_t ifft_trials = 100;
    std::uint64_t ifft_seed = 1;
    auto* ifft = app.add_subcommand("ifft-check", "verify the transforms against the direct sum");
    ifft->add_option("--n", ifft_n, "transform size (power of 4)");
    ifft->add_option("--trials", ifft_trials, "random trials");
    ifft->add_option("--seed", ifft_seed, "random seed");

    fxcli::SweepOptions sweep;
    sweep.out_path = "sweep.csv";
    auto* ofdm = app.add_subcommand("ofdm-sweep", "bit-error-rate sweep over word width and backoff");
    ofdm->add_option("--bits", sweep.bits, "magnitude bit counts, e.g. 9,11,13")
        ->required()
        ->delimiter(',');
    ofdm->add_option("--backoff-start", sweep.backoff_start, "first backoff in dB");
    ofdm->add_option("--backoff-stop", sweep.backoff_stop, "last backoff in dB");
    ofdm->add_option("--backoff-step", sweep.backoff_step, "grid step in dB");
    ofdm->add_option("--symbols", sweep.symbols, "OFDM symbols per grid point");
    ofdm->add_option("--seed", sweep.seed, "sweep seed");
    ofdm->add_option("--out", sweep.out_path, "CSV output path");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2; // usage errors exit 2
    }

    try {
        if (selftest->parsed())
            return fxcli::run_selftest(std::cout) == 0 ? 0 : 1;
        if (ifft->parsed())
            return fxcli::run_ifft_check(ifft_n, ifft_trials, ifft_seed, std::cout);
        if (ofdm->parsed())
            return fxcli::run_ofdm_sweep(sweep, std::cout);
    } catch (const fx::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
