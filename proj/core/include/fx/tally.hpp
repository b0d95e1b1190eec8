#pragma once

#include <array>
#include <cstdint>
#include <string_view>
#include <utility>
#include <vector>

namespace fx {

/// Operation kinds tracked for complexity analysis, in report order.
enum class OpKind { add, sub, mul, div, neg, compare, refix, quantize };

inline constexpr std::array<OpKind, 8> kOpKinds = {
    OpKind::add, OpKind::sub,     OpKind::mul,   OpKind::div,
    OpKind::neg, OpKind::compare, OpKind::refix, OpKind::quantize,
};

std::string_view to_string(OpKind kind) noexcept;

/// Counter set for fixed-point operations.  A tally is an explicit handle
/// threaded through computations; there is no ambient global state, so
/// independent computations can count into independent tallies and merge
/// the results afterwards.  Counts only move while the tally is enabled.
class OpTally {
public:
    explicit OpTally(bool enabled = true) noexcept : enabled_(enabled) {}

    void record(OpKind kind, std::uint64_t n = 1) noexcept {
        if (enabled_)
            counts_[static_cast<std::size_t>(kind)] += n;
    }

    /// Zero all counts; the enabled flag is preserved.
    void reset() noexcept { counts_.fill(0); }

    bool enabled() const noexcept { return enabled_; }
    void set_enabled(bool on) noexcept { enabled_ = on; }

    std::uint64_t count(OpKind kind) const noexcept {
        return counts_[static_cast<std::size_t>(kind)];
    }

    /// (kind, count) pairs in the fixed kOpKinds order.
    std::vector<std::pair<OpKind, std::uint64_t>> report() const;

    /// Add another tally's counts into this one (enabled flags untouched).
    void merge(const OpTally& other) noexcept;

    friend bool operator==(const OpTally& a, const OpTally& b) noexcept {
        return a.counts_ == b.counts_;
    }

private:
    bool enabled_ = true;
    std::array<std::uint64_t, 8> counts_{};
};

} // namespace fx
