#include "sela/sela.hpp"

#include <gtest/gtest.h>

using namespace sela;
using Q = Rational;

namespace {

template <class F>
void expect_associative_on_basis(const Algebra<F>& a) {
    for (std::size_t i = 0; i < a.dim(); ++i)
        for (std::size_t j = 0; j < a.dim(); ++j)
            for (std::size_t k = 0; k < a.dim(); ++k)
                ASSERT_EQ(a.mul(a.mul(a.basis(i), a.basis(j)), a.basis(k)),
                          a.mul(a.basis(i), a.mul(a.basis(j), a.basis(k))));
}

}  // namespace

TEST(Algebra, UnitIsFirstBasisElement) {
    for (const auto& a : {matrix_algebra<Q>(2), matrix_algebra<Q>(3), quaternion_algebra<Q>(-1, -1), trunc_poly<Q>(4),
                          ground_field<Q>()}) {
        for (std::size_t i = 0; i < a.dim(); ++i) {
            EXPECT_EQ(a.mul(a.one(), a.basis(i)), a.basis(i));
            EXPECT_EQ(a.mul(a.basis(i), a.one()), a.basis(i));
        }
    }
}

TEST(Algebra, ConstructorsAreAssociative) {
    expect_associative_on_basis(matrix_algebra<Q>(3));
    expect_associative_on_basis(quaternion_algebra<Q>(2, -3));
    expect_associative_on_basis(trunc_poly<FpA>(5));
    expect_associative_on_basis(opposite(quaternion_algebra<Q>(-1, -1)));
}

TEST(Algebra, DimensionsAndCenters) {
    EXPECT_EQ(matrix_algebra<Q>(3).dim(), 9u);
    EXPECT_EQ(derived_spaces(matrix_algebra<Q>(2)).center.dim(), 1u);
    EXPECT_EQ(derived_spaces(matrix_algebra<Q>(3)).commutator.dim(), 8u);
    EXPECT_EQ(derived_spaces(quaternion_algebra<Q>(-1, -1)).center.dim(), 1u);
    EXPECT_EQ(derived_spaces(quaternion_algebra<Q>(-1, -1)).commutator.dim(), 3u);
    EXPECT_EQ(derived_spaces(trunc_poly<Q>(3)).center.dim(), 3u);
    EXPECT_EQ(derived_spaces(trunc_poly<Q>(3)).commutator.dim(), 0u);
    EXPECT_TRUE(trunc_poly<Q>(3).is_commutative());
    EXPECT_FALSE(matrix_algebra<Q>(2).is_commutative());
}

TEST(Algebra, QuaternionRelations) {
    const auto H = quaternion_algebra<Q>(-1, -1);
    const auto i = H.basis(1), j = H.basis(2), k = H.basis(3);
    EXPECT_EQ(H.mul(i, i), scaled(Q(-1), H.one()));
    EXPECT_EQ(H.mul(j, j), scaled(Q(-1), H.one()));
    EXPECT_EQ(H.mul(i, j), k);
    EXPECT_EQ(H.mul(j, i), scaled(Q(-1), k));
    EXPECT_EQ(H.mul(k, k), scaled(Q(-1), H.one()));
}

TEST(Algebra, QuaternionRejectsZeroParameter) {
    EXPECT_THROW(quaternion_algebra<Q>(0, 1), std::invalid_argument);
}

TEST(Algebra, StandardInvolutionGivesReducedTraceAndNorm) {
    const auto H = quaternion_algebra<Q>(-1, -1);
    const auto bar = standard_involution(H);
    const Vec<Q> x{Q(1), Q(2), Q(-3), Q(5)};
    auto tr = x;
    axpy(tr, Q(1), bar(x));
    EXPECT_EQ(tr, scaled(Q(2), H.one()));
    // x * xbar = N(x) = 1 + 4 + 9 + 25.
    EXPECT_EQ(H.mul(x, bar(x)), scaled(Q(39), H.one()));
}

TEST(Algebra, OppositeReversesProducts) {
    const auto A = matrix_algebra<Q>(2);
    const auto B = opposite(A);
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j) EXPECT_EQ(B.mul(B.basis(i), B.basis(j)), A.mul(A.basis(j), A.basis(i)));
}

TEST(Algebra, TruncatedPolynomialPowers) {
    const auto A = trunc_poly<Q>(4);
    const auto x = A.basis(1);
    EXPECT_FALSE(is_zero_vec(A.power(x, 3)));
    EXPECT_TRUE(is_zero_vec(A.power(x, 4)));
}

TEST(Algebra, QuotientByIdealOfTruncatedPolynomials) {
    const auto A = trunc_poly<Q>(4);
    const auto I = ideal_generated(A, {A.power(A.basis(1), 2)});
    EXPECT_EQ(I.dim(), 2u);
    const auto q = quotient_algebra(A, I);
    EXPECT_EQ(q.algebra.dim(), 2u);
    EXPECT_TRUE(is_zero_vec(q.algebra.power(q.algebra.basis(1), 2)));
    EXPECT_EQ(q.projection * A.one(), q.algebra.one());
}

TEST(Algebra, MatrixAlgebraIsSimple) {
    const auto A = matrix_algebra<Q>(2);
    for (std::size_t i = 1; i < 4; ++i) EXPECT_EQ(ideal_generated(A, {A.basis(i)}).dim(), 4u);
}

TEST(Algebra, JsonRoundTripIsBitExact) {
    for (const auto& a : {matrix_algebra<Q>(2), quaternion_algebra<Q>(Q(1, 2), -3), trunc_poly<Q>(3)}) {
        const auto j = to_json(a);
        const auto b = algebra_from_json<Q>(j);
        EXPECT_EQ(a, b);
        EXPECT_EQ(to_json(b).dump(), j.dump());
    }
}

TEST(Algebra, JsonInputIsRebasedWhenUnitIsNotFirst) {
    // k x k with idempotent basis e1, e2 and unit e1 + e2.
    const auto j = nlohmann::json::parse(R"({"dim": 2, "unit": [1, 1],
        "mul": [[0, 0, 0, "1"], [1, 1, 1, "1"]]})");
    const auto a = algebra_from_json<Q>(j);
    EXPECT_EQ(a.dim(), 2u);
    EXPECT_EQ(a.mul(a.one(), a.basis(1)), a.basis(1));
    EXPECT_TRUE(a.is_commutative());
}

TEST(Algebra, JsonRejectsUnitLawViolation) {
    const auto j = nlohmann::json::parse(R"({"dim": 2, "unit": [1, 0],
        "mul": [[0, 0, 0, "1"], [0, 1, 1, "1"], [1, 0, 1, "-1"], [1, 1, 0, "1"]]})");
    EXPECT_THROW(algebra_from_json<Q>(j), std::invalid_argument);
}

TEST(Algebra, JsonRejectsNonAssociativeTableWithTriple) {
    // 1, x, y with xy = 1 and all other products of x, y zero: (xx)y = 0 but x(xy) = x.
    const auto j = nlohmann::json::parse(R"({"dim": 3, "labels": ["1", "x", "y"], "unit": [1, 0, 0],
        "mul": [[0, 0, 0, "1"], [0, 1, 1, "1"], [1, 0, 1, "1"], [0, 2, 2, "1"], [2, 0, 2, "1"],
                [1, 2, 0, "1"]]})");
    try {
        algebra_from_json<Q>(j);
        FAIL() << "expected rejection";
    } catch (const std::invalid_argument& e) {
        EXPECT_NE(std::string(e.what()).find("associativity fails on (x, x, y)"), std::string::npos) << e.what();
    }
}

TEST(Algebra, ConversionToPrimeFieldPreservesStructure) {
    const auto a = quaternion_algebra<Q>(Q(1, 3), -2);
    const auto b = quaternion_algebra<FpA>(Q(1, 3), -2);
    EXPECT_EQ(a.convert<FpA>(), b);
}

TEST(Algebra, TensorProductDimensionAndUnit) {
    const auto t = tensor_product(matrix_algebra<Q>(2), trunc_poly<Q>(2));
    EXPECT_EQ(t.dim(), 8u);
    expect_associative_on_basis(t);
    EXPECT_EQ(derived_spaces(t).center.dim(), 2u);
}
