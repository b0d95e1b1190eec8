#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <complex>
#include <vector>

#include "fx/prng.hpp"
#include "fx/tensor.hpp"

using namespace fx;

namespace {

Matrix<double> row(std::vector<double> v) {
    const std::size_t n = v.size();
    return Matrix<double>(1, n, std::move(v));
}

RealTensor random_tensor(SplitMix64& rng, std::size_t rows, std::size_t cols, int max_width) {
    std::vector<FixedScalar> elems;
    for (std::size_t i = 0; i < rows * cols; ++i) {
        const int ib = static_cast<int>(rng.next() % static_cast<unsigned>(max_width + 1));
        const int fb = static_cast<int>(rng.next() % static_cast<unsigned>(max_width - ib + 1));
        const FixedSpec s = make_spec(ib, fb);
        const std::int64_t range = stored_max(s) - stored_min(s) + 1;
        elems.push_back({stored_min(s) + static_cast<std::int64_t>(rng.next() % range), s});
    }
    return {rows, cols, std::move(elems)};
}

} // namespace

TEST_CASE("tensor_make broadcasts bit counts and quantizes per element") {
    // mostly (3,1) with (7,1) down the diagonal
    Matrix<int> ib(10, 10, 3);
    for (int i = 0; i < 10; ++i)
        ib(i, i) = 7;
    const RealTensor d = tensor_make(ib, 1, eye<double>(10));
    for (std::size_t r = 0; r < 10; ++r) {
        for (std::size_t c = 0; c < 10; ++c) {
            CHECK(d(r, c).spec == (r == c ? FixedSpec{7, 1} : FixedSpec{3, 1}));
            CHECK(d(r, c).to_real() == (r == c ? 1.0 : 0.0));
        }
    }
}

TEST_CASE("two-argument tensor_make means an all-zero value matrix") {
    const Matrix<int> ib(1, 2, 7);
    const Matrix<int> fb(1, 2, 2);
    CHECK(tensor_make(ib, fb) == tensor_make(ib, fb, zeros<double>(1, 2)));
}

TEST_CASE("tensor_make rejects mismatched dimensions") {
    CHECK_THROWS_AS(tensor_make(Matrix<int>(2, 2, 3), 1, row({1.0, 2.0})), DimensionMismatch);
    CHECK_THROWS_AS(tensor_make(3, Matrix<int>(2, 1, 1), row({1.0, 2.0})), DimensionMismatch);
}

TEST_CASE("scalar bit counts equal explicitly expanded matrices") {
    const Matrix<double> values(2, 3, 1.25);
    CHECK(tensor_make(5, 2, values) ==
          tensor_make(Matrix<int>(2, 3, 5), Matrix<int>(2, 3, 2), values));
}

TEST_CASE("tensor_from_integers infers minimal widths") {
    const RealTensor t = tensor_from_integers(row({1, 2, 3, 4}));
    CHECK(t(0, 0).spec == FixedSpec{1, 0});
    CHECK(t(0, 1).spec == FixedSpec{2, 0});
    CHECK(t(0, 2).spec == FixedSpec{2, 0});
    CHECK(t(0, 3).spec == FixedSpec{3, 0});
    for (int c = 0; c < 4; ++c)
        CHECK(t(0, c).to_real() == c + 1.0);

    const RealTensor zero = tensor_from_integers(row({0}));
    CHECK(zero(0, 0).spec == FixedSpec{0, 0});
    CHECK(zero(0, 0).to_real() == 0.0);

    const RealTensor negative = tensor_from_integers(row({-4}));
    CHECK(negative(0, 0).spec == FixedSpec{2, 0});
    CHECK(negative(0, 0).to_real() == -4.0);

    // fractional inputs keep only the integer part
    const RealTensor truncated = tensor_from_integers(row({2.75, -2.75}));
    CHECK(truncated(0, 0).to_real() == 2.0);
    CHECK(truncated(0, 1).to_real() == -2.0);
}

TEST_CASE("tensor_from_integers treats complex parts separately") {
    Matrix<std::complex<double>> m(1, 2);
    m(0, 0) = {3.0, -4.0};
    m(0, 1) = {0.0, 1.0};
    const ComplexTensor t = tensor_from_integers(m);
    CHECK(t(0, 0).re.spec == FixedSpec{2, 0});
    CHECK(t(0, 0).im.spec == FixedSpec{2, 0});
    CHECK(to_complex(t(0, 0)) == std::complex<double>{3.0, -4.0});
    CHECK(t(0, 1).re.spec == FixedSpec{0, 0});
    CHECK(t(0, 1).im.spec == FixedSpec{1, 0});
}

TEST_CASE("elementwise operations promote each element independently") {
    const RealTensor a = tensor_make(7, 2, Matrix<double>(2, 2, 1.0));
    const RealTensor b = tensor_make(6, 3, Matrix<double>(2, 2, 1.0));
    const RealTensor c = map_binary(BinaryOp::add, a, b);
    for (const auto& e : c.elements()) {
        CHECK(e.spec == FixedSpec{7, 3});
        CHECK(e.to_real() == 2.0);
    }

    const RealTensor zero_like = tensor_make(7, 2, zeros<double>(2, 2));
    CHECK(map_binary(BinaryOp::add, a, zero_like) == a);
}

TEST_CASE("elementwise operations equal a plain scalar loop") {
    SplitMix64 rng{23};
    for (int trial = 0; trial < 2000; ++trial) {
        const RealTensor a = random_tensor(rng, 2, 2, 3);
        const RealTensor b = random_tensor(rng, 2, 2, 3);
        for (BinaryOp op : {BinaryOp::add, BinaryOp::sub, BinaryOp::mul, BinaryOp::div}) {
            bool divides_by_zero = false;
            if (op == BinaryOp::div)
                for (const auto& e : b.elements())
                    divides_by_zero |= e.stored == 0;
            if (divides_by_zero)
                continue;
            const RealTensor got = map_binary(op, a, b);
            for (std::size_t r = 0; r < 2; ++r) {
                for (std::size_t c = 0; c < 2; ++c) {
                    FixedScalar want;
                    switch (op) {
                    case BinaryOp::add: want = add(a(r, c), b(r, c)); break;
                    case BinaryOp::sub: want = sub(a(r, c), b(r, c)); break;
                    case BinaryOp::mul: want = mul(a(r, c), b(r, c)); break;
                    case BinaryOp::div: want = div(a(r, c), b(r, c)); break;
                    }
                    REQUIRE(got(r, c).stored == want.stored);
                    REQUIRE(got(r, c).spec == want.spec);
                }
            }
        }
    }
}

TEST_CASE("scalar operand broadcasts over the tensor") {
    const RealTensor a = tensor_make(5, 2, Matrix<double>(2, 2, 3.0));
    const FixedScalar half = quantize(make_spec(5, 2), 0.5);
    const RealTensor sum = map_binary(BinaryOp::add, a, half);
    for (const auto& e : sum.elements())
        CHECK(e.to_real() == 3.5);
}

TEST_CASE("elementwise division reports zero denominators") {
    const RealTensor a = tensor_make(5, 2, Matrix<double>(1, 2, 1.0));
    const RealTensor b = tensor_make(5, 2, row({2.0, 0.0}));
    CHECK_THROWS_AS(map_binary(BinaryOp::div, a, b), DivisionByZero);
}

TEST_CASE("mismatched shapes are rejected") {
    const RealTensor a = tensor_make(5, 2, Matrix<double>(2, 2, 1.0));
    const RealTensor b = tensor_make(5, 2, Matrix<double>(1, 2, 1.0));
    CHECK_THROWS_AS(map_binary(BinaryOp::add, a, b), DimensionMismatch);
}

TEST_CASE("matmul against the identity and the scalar fold") {
    SplitMix64 rng{29};
    const RealTensor a = tensor_make(6, 3, Matrix<double>(2, 2, std::vector<double>{1.5, -2.0, 0.25, 3.0}));
    const RealTensor ident = tensor_make(6, 3, eye<double>(2));
    CHECK(matmul(ident, a) == a);

    // 1x1 matmul is a scalar multiply
    const RealTensor x = tensor_make(4, 2, Matrix<double>(1, 1, 2.5));
    const RealTensor y = tensor_make(4, 2, Matrix<double>(1, 1, -1.25));
    CHECK(matmul(x, y)(0, 0).stored == mul(x(0, 0), y(0, 0)).stored);

    for (int trial = 0; trial < 500; ++trial) {
        const RealTensor p = random_tensor(rng, 2, 3, 3);
        const RealTensor q = random_tensor(rng, 3, 2, 3);
        const RealTensor got = matmul(p, q);
        REQUIRE(got.rows() == 2);
        REQUIRE(got.cols() == 2);
        for (std::size_t i = 0; i < 2; ++i) {
            for (std::size_t j = 0; j < 2; ++j) {
                FixedScalar acc = mul(p(i, 0), q(0, j));
                for (std::size_t k = 1; k < 3; ++k)
                    acc = add(acc, mul(p(i, k), q(k, j)));
                REQUIRE(got(i, j).stored == acc.stored);
                REQUIRE(got(i, j).spec == acc.spec);
            }
        }
    }

    CHECK_THROWS_AS(matmul(a, tensor_make(5, 2, Matrix<double>(3, 2, 1.0))), DimensionMismatch);
}

TEST_CASE("concat keeps per-element representations") {
    const RealTensor a = tensor_make(7, 2, row({1.0, 2.0}));
    const RealTensor b = tensor_make(6, 3, row({3.0, 4.0}));

    const RealTensor cols_joined = concat(Axis::cols, a, b);
    REQUIRE(cols_joined.rows() == 1);
    REQUIRE(cols_joined.cols() == 4);
    CHECK(cols_joined(0, 0).spec == FixedSpec{7, 2});
    CHECK(cols_joined(0, 3).spec == FixedSpec{6, 3});

    // concat then slice returns the originals element for element
    for (std::size_t c = 0; c < 2; ++c) {
        CHECK(cols_joined(0, c).stored == a(0, c).stored);
        CHECK(cols_joined(0, c).spec == a(0, c).spec);
        CHECK(cols_joined(0, c + 2).stored == b(0, c).stored);
        CHECK(cols_joined(0, c + 2).spec == b(0, c).spec);
    }

    const RealTensor rows_joined = concat(Axis::rows, a, b);
    REQUIRE(rows_joined.rows() == 2);
    CHECK(rows_joined(1, 1).spec == FixedSpec{6, 3});

    CHECK_THROWS_AS(concat(Axis::rows, a, tensor_make(7, 2, row({1.0, 2.0, 3.0}))),
                    DimensionMismatch);
}

TEST_CASE("get_field returns plain same-shaped matrices") {
    Matrix<double> ramp(1, 7);
    for (int i = 0; i < 7; ++i)
        ramp.data[i] = i - 3;
    const RealTensor t = tensor_make(7, 2, ramp);

    CHECK(get_field(t, Field::sign) == row({-1, -1, -1, 0, 1, 1, 1}));
    CHECK(get_field(t, Field::int_bits) == Matrix<double>(1, 7, 7.0));
    CHECK(get_field(t, Field::frac_bits) == Matrix<double>(1, 7, 2.0));
    CHECK(get_field(t, Field::value) == ramp);

    const RealTensor empty;
    CHECK(get_field(empty, Field::value).size() == 0);
}

TEST_CASE("set_field refixes per element") {
    const RealTensor t = tensor_make(7, 2, row({3.25, 3.25}));
    const RealTensor changed = set_field(t, Field::frac_bits, Matrix<int>(1, 2, std::vector<int>{0, 2}));
    CHECK(get_field(changed, Field::value) == row({3.0, 3.25}));

    // assigning the current width is the identity
    CHECK(set_field(t, Field::frac_bits, 2) == t);

    const RealTensor narrowed =
        set_field(tensor_make(7, 2, row({-127.25})), Field::int_bits, 6);
    CHECK(narrowed(0, 0).to_real() == -63.25);

    CHECK_THROWS_AS(set_field(t, Field::value, 3), Error);
    CHECK_THROWS_AS(set_field(t, Field::sign, 1), Error);
    CHECK_THROWS_AS(set_field(t, Field::frac_bits, 70), SpecOutOfRange);
}

TEST_CASE("get_field after set_field returns the assigned bit counts") {
    SplitMix64 rng{31};
    const RealTensor t = random_tensor(rng, 3, 2, 4);
    Matrix<int> widths(3, 2);
    for (auto& w : widths.data)
        w = static_cast<int>(rng.next() % 6);
    const RealTensor changed = set_field(t, Field::frac_bits, widths);
    const Matrix<double> read = get_field(changed, Field::frac_bits);
    for (std::size_t i = 0; i < widths.size(); ++i)
        CHECK(read.data[i] == widths.data[i]);
}

TEST_CASE("complex tensors share the elementwise machinery") {
    const FixedSpec s = make_spec(3, 2);
    ComplexTensor a(1, 2, FixedComplex{quantize(s, 1.0), quantize(s, 0.5)});
    ComplexTensor b(1, 2, FixedComplex{quantize(s, 0.0), quantize(s, 1.0)});

    const ComplexTensor sum = map_binary(BinaryOp::add, a, b);
    CHECK(to_complex(sum(0, 0)) == std::complex<double>{1.0, 1.5});

    const ComplexTensor prod = map_binary(BinaryOp::mul, a, b);
    CHECK(to_complex(prod(0, 0)) == std::complex<double>{-0.5, 1.0});

    CHECK_THROWS_AS(map_binary(BinaryOp::div, a, b), Error);

    const ComplexTensor stacked = concat(Axis::cols, a, b);
    CHECK(stacked.cols() == 4);
}

TEST_CASE("tensor operations count their constituent scalar operations") {
    OpTally tally;
    const RealTensor a = tensor_make(6, 3, Matrix<double>(2, 2, 1.5), &tally);
    CHECK(tally.count(OpKind::quantize) == 4);

    map_binary(BinaryOp::add, a, a, &tally);
    CHECK(tally.count(OpKind::add) == 4);

    matmul(a, a, &tally); // 2x2: 8 multiplies, 4 fold additions
    CHECK(tally.count(OpKind::mul) == 8);
    CHECK(tally.count(OpKind::add) == 8);

    set_field(a, Field::frac_bits, 1, &tally);
    CHECK(tally.count(OpKind::refix) == 4);
}
