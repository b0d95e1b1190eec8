#include "fxcli/selftest.hpp"

#include <functional>
#include <iomanip>
#include <sstream>
#include <string>
#include <vector>

#include "fx/fixed.hpp"
#include "fx/matrix.hpp"
#include "fx/tensor.hpp"

namespace fxcli {
namespace {

struct Case {
    std::string name;
    std::string expected;
    std::string actual;
    bool pass() const { return expected == actual; }
};

std::string fmt(double v) {
    std::ostringstream os;
    os << std::setprecision(15) << v;
    return os.str();
}

std::string fmt(const fx::Matrix<double>& m) {
    std::ostringstream os;
    os << "[";
    for (std::size_t i = 0; i < m.size(); ++i)
        os << (i ? " " : "") << std::setprecision(15) << m.data[i];
    os << "]";
    return os.str();
}

fx::FixedScalar q72(double v) { return fx::quantize(fx::make_spec(7, 2), v); }

std::vector<Case> build_cases() {
    using namespace fx;
    std::vector<Case> cases;

    cases.push_back({"quantize 200 into (7,2) saturates", fmt(127.75), fmt(q72(200).to_real())});
    cases.push_back({"(7,2) 127 + 2 wraps", fmt(-127.0), fmt(add(q72(127), q72(2)).to_real())});
    cases.push_back({"(7,2) -127 + -2 wraps", fmt(127.0), fmt(add(q72(-127), q72(-2)).to_real())});
    cases.push_back(
        {"refix -127.25 to (6,2)", fmt(-63.25), fmt(refix(q72(-127.25), make_spec(6, 2)).to_real())});
    cases.push_back(
        {"refix 127.25 to (6,2)", fmt(63.25), fmt(refix(q72(127.25), make_spec(6, 2)).to_real())});
    cases.push_back(
        {"refix -127.25 to (7,1)", fmt(-127.5), fmt(refix(q72(-127.25), make_spec(7, 1)).to_real())});
    cases.push_back(
        {"refix 127.25 to (7,1)", fmt(127.0), fmt(refix(q72(127.25), make_spec(7, 1)).to_real())});

    {
        const FixedScalar c = add(q72(1), quantize(make_spec(6, 3), 1.0));
        cases.push_back({"(7,2) + (6,3) promotes to (7,3)", "7 3",
                         std::to_string(c.spec.int_bits) + " " + std::to_string(c.spec.frac_bits)});
    }
    {
        std::string got;
        for (std::int64_t v = 1; v <= 4; ++v)
            got += (got.empty() ? "" : " ") + std::to_string(min_int_bits(v));
        cases.push_back({"minimum int bits for 1..4", "1 2 2 3", got});
    }
    {
        Matrix<double> ramp(1, 7);
        for (int i = 0; i < 7; ++i)
            ramp.data[i] = i - 3;
        const RealTensor t = tensor_make(7, 2, ramp);
        cases.push_back({"sign field of -3..3 under (7,2)", "[-1 -1 -1 0 1 1 1]",
                         fmt(get_field(t, Field::sign))});
        cases.push_back({"int-bits field of -3..3 under (7,2)", "[7 7 7 7 7 7 7]",
                         fmt(get_field(t, Field::int_bits))});
        cases.push_back({"frac-bits field of -3..3 under (7,2)", "[2 2 2 2 2 2 2]",
                         fmt(get_field(t, Field::frac_bits))});
    }
    {
        const RealTensor t = tensor_make(7, 2, Matrix<double>(1, 2, std::vector<double>{3.25, 3.25}));
        const RealTensor r = set_field(t, Field::frac_bits, Matrix<int>(1, 2, std::vector<int>{0, 2}));
        cases.push_back({"frac-bits change [3.25 3.25] -> [0 2]", "[3 3.25]",
                         fmt(get_field(r, Field::value))});
    }
    {
        const Matrix<int> ib(1, 2, 7);
        const Matrix<int> fb(1, 2, 2);
        const bool equal = tensor_make(ib, fb) == tensor_make(ib, fb, zeros<double>(1, 2));
        cases.push_back({"two-argument constructor means zeros", "equal", equal ? "equal" : "differs"});
    }
    return cases;
}

} // namespace

int run_selftest(std::ostream& out) {
    int failures = 0;
    const auto cases = build_cases();
    for (const auto& c : cases) {
        if (!c.pass())
            ++failures;
        out << (c.pass() ? "ok   " : "FAIL ") << c.name << ": expected " << c.expected
            << ", got " << c.actual << "\n";
    }
    out << cases.size() - failures << "/" << cases.size() << " checks passed\n";
    return failures;
}

} // namespace fxcli
