#include "fx/tally.hpp"

namespace fx {

std::string_view to_string(OpKind kind) noexcept {
    switch (kind) {
    case OpKind::add: return "add";
    case OpKind::sub: return "sub";
    case OpKind::mul: return "mul";
    case OpKind::div: return "div";
    case OpKind::neg: return "neg";
    case OpKind::compare: return "compare";
    case OpKind::refix: return "refix";
    case OpKind::quantize: return "quantize";
    }
    return "?";
}

std::vector<std::pair<OpKind, std::uint64_t>> OpTally::report() const {
    std::vector<std::pair<OpKind, std::uint64_t>> out;
    out.reserve(kOpKinds.size());
    for (OpKind kind : kOpKinds)
        out.emplace_back(kind, count(kind));
    return out;
}

void OpTally::merge(const OpTally& other) noexcept {
    for (std::size_t i = 0; i < counts_.size(); ++i)
        counts_[i] += other.counts_[i];
}

} // namespace fx
