#include "sela/sela.hpp"

#include <gtest/gtest.h>

using namespace sela;
using Q = Rational;

namespace {

template <class F>
QuotientResult<F> seligman(const GradedLie<F>& L, const std::vector<long>& lambda, bool relaxed = true) {
    SeligmanOptions<F> o;
    o.relaxed = relaxed;
    return compute_seligman(L, lambda, o);
}

template <class F>
Vec<F> can_h(const GradedLie<F>& L, const QuotientResult<F>& r, std::size_t i, const Vec<F>& a) {
    return can(L, r, L.h(i, a));
}

}  // namespace

TEST(Generators, LieInL0WithWeightZero) {
    GradedLie<Q> L(matrix_algebra<Q>(2), 3);
    const auto g = jlambda_generators(L, {1, 0}, 3, true);
    ASSERT_FALSE(g.elements.empty());
    for (const auto& u : g.elements)
        for (const auto& [m, c] : u)
            for (char16_t x : m) EXPECT_TRUE(L.in_l0(x)) << L.labels()[x];
}

TEST(Generators, LeadingTermOfStringForSl2) {
    // Top degree of pi0(e(a1)..e(a_{l+1}) f(1)^{l+1}) is (l+1)! h(a1)..h(a_{l+1}).
    const auto A = trunc_poly<Q>(3);
    GradedLie<Q> L(A, 2);
    Envelope<Q> env(L);
    for (std::size_t p = 0; p < A.dim(); ++p)
        for (std::size_t q = 0; q < A.dim(); ++q) {
            const auto u = env.pi0({L.e(1, A.basis(p)), L.e(1, A.basis(q)), L.f(1, A.one()), L.f(1, A.one())});
            PbwElement<Q> top;
            for (const auto& [m, c] : u)
                if (m.size() == 2) top.emplace(m, c);
            PbwElement<Q> expected{{make_mono({L.h_letter(1, p), L.h_letter(1, q)}), Q(2)}};
            EXPECT_EQ(top, expected) << p << "," << q;
        }
}

TEST(Bound, Values) {
    EXPECT_EQ(dim_bound(GradedLie<Q>(trunc_poly<Q>(2), 2), {2}), 3);
    EXPECT_EQ(dim_bound(GradedLie<Q>(matrix_algebra<Q>(2), 3), {0, 0}), 1);
}

TEST(Seligman, LambdaZeroIsGroundField) {
    for (const auto& A : {ground_field<Q>(), trunc_poly<Q>(2), matrix_algebra<Q>(2), quaternion_algebra<Q>(-1, -1)}) {
        GradedLie<Q> L(A, 3);
        const auto r = seligman(L, {0, 0});
        EXPECT_EQ(r.status, QuotientStatus::certified);
        EXPECT_EQ(r.quotient_dim, 1u);
    }
}

TEST(Seligman, TruncatedPolynomialsAtTwiceFundamentalWeight) {
    const auto A = trunc_poly<Q>(2);
    GradedLie<Q> L(A, 2);
    SeligmanOptions<Q> o;
    o.target = ts_lambda_target(L, {2});
    const auto r = compute_seligman(L, {2}, o);
    EXPECT_EQ(r.status, QuotientStatus::certified);
    EXPECT_EQ(r.quotient_dim, 3u);
    EXPECT_GE(r.bound, mpz_class(static_cast<unsigned long>(r.quotient_dim)));
    ASSERT_TRUE(r.sandwich.has_value());
    EXPECT_TRUE(r.sandwich->is_admissible);
    EXPECT_EQ(r.sandwich->image_dim, 3u);
    EXPECT_TRUE(check_iso(L, r, *o.target).ok);
}

TEST(Seligman, IsoWithSymmetricSquareOverTruncatedCubic) {
    GradedLie<Q> L(trunc_poly<Q>(3), 2);
    const auto t = ts_lambda_target(L, {2});
    const auto r = seligman(L, {2});
    ASSERT_EQ(r.status, QuotientStatus::certified);
    const auto iso = check_iso(L, r, t);
    EXPECT_TRUE(iso.ok) << iso.failure;
}

TEST(Seligman, IsoNegativeControlWrongEll) {
    GradedLie<Q> L(trunc_poly<Q>(3), 2);
    const auto t = ts_lambda_target(L, {2});
    const auto r = seligman(L, {1});
    ASSERT_EQ(r.status, QuotientStatus::certified);
    EXPECT_EQ(r.quotient_dim, 3u);
    const auto iso = check_iso(L, r, t);
    EXPECT_FALSE(iso.ok);
    EXPECT_NE(iso.failure.find("dimension mismatch"), std::string::npos) << iso.failure;
}

TEST(Seligman, RepresentativesAreShortHProductsForCommutativeSl2) {
    // Coset representatives are products of at most ell h-letters.
    GradedLie<Q> L(trunc_poly<Q>(3), 2);
    const auto r = seligman(L, {2});
    ASSERT_EQ(r.status, QuotientStatus::certified);
    for (const auto& m : r.basis) {
        EXPECT_LE(m.size(), 2u);
        for (char16_t x : m) EXPECT_EQ(L.letter(x).block, Block::zero);
    }
}

TEST(Seligman, RelaxedGeneratorsDoNotChangeTheIdeal) {
    {
        GradedLie<Q> L(trunc_poly<Q>(2), 2);
        const auto a = seligman(L, {2}, true), b = seligman(L, {2}, false);
        EXPECT_EQ(a.quotient_dim, b.quotient_dim);
        EXPECT_EQ(a.status, b.status);
        EXPECT_EQ(a.basis, b.basis);
    }
    {
        GradedLie<Q> L(matrix_algebra<Q>(2), 3);
        const auto a = seligman(L, {1, 0}, true), b = seligman(L, {1, 0}, false);
        EXPECT_EQ(a.quotient_dim, b.quotient_dim);
        EXPECT_EQ(a.status, b.status);
    }
}

TEST(Seligman, ClosedLevelsAreMonotone) {
    GradedLie<Q> L(matrix_algebra<Q>(2), 3);
    SeligmanOptions<Q> o;
    o.n_max = 4;
    const auto r = compute_seligman(L, {1, 1}, o);
    std::optional<std::size_t> last;
    for (const auto& t : r.trace) {
        if (!t.closed) continue;
        if (last) {
            EXPECT_LE(t.reps, *last);
        }
        last = t.reps;
    }
}

TEST(Seligman, FundamentalWeightGivesCoefficientAlgebra) {
    const auto A = matrix_algebra<Q>(2);
    GradedLie<Q> L(A, 3);
    const auto t = ts_lambda_target(L, {1, 0});
    const auto r = seligman(L, {1, 0});
    ASSERT_EQ(r.status, QuotientStatus::certified);
    EXPECT_EQ(r.quotient_dim, 4u);
    EXPECT_TRUE(check_iso(L, r, t).ok);
}

TEST(Seligman, LastFundamentalWeightGivesOppositeAlgebra) {
    const auto A = quaternion_algebra<Q>(-1, 3);
    GradedLie<Q> L(A, 3);
    const auto t = ts_lambda_target(L, {0, 1});
    const auto r = seligman(L, {0, 1});
    ASSERT_EQ(r.status, QuotientStatus::certified);
    EXPECT_TRUE(check_iso(L, r, t).ok);
}

TEST(Seligman, CentralSimpleOfDegreeTwoAtOddMiddleWeightVanishes) {
    GradedLie<FpA> L(matrix_algebra<FpA>(2), 4);
    const auto r = seligman(L, {0, 1, 0});
    EXPECT_EQ(r.status, QuotientStatus::certified_zero);
    EXPECT_EQ(r.quotient_dim, 0u);
}

TEST(Seligman, CentralSimpleOfDegreeTwoAtEvenMiddleWeight) {
    GradedLie<FpA> L(matrix_algebra<FpA>(2), 4);
    const auto r = seligman(L, {0, 2, 0});
    ASSERT_EQ(r.status, QuotientStatus::certified);
    EXPECT_EQ(r.quotient_dim, 1u);
    const auto se2 = subalgebra_Se_i(L, r, 2);
    EXPECT_EQ(se2.space.dim(), 1u);
    // can(h_2([A,A])) = 0 in the middle node.
    const auto& A = L.coeff();
    for (std::size_t p = 0; p < A.dim(); ++p)
        for (std::size_t q = 0; q < A.dim(); ++q)
            EXPECT_TRUE(is_zero_vec(can_h(L, r, 2, A.commutator(A.basis(p), A.basis(q)))));
    const auto tr = trace_target(L, 2, 2);
    EXPECT_TRUE(check_iso(L, r, tr).ok);
}

TEST(Seligman, QuaternionRelationsAtFirstPlusSecondWeight) {
    const auto H = quaternion_algebra<Q>(-1, -1);
    GradedLie<Q> L(H, 4);
    SeligmanOptions<Q> o;
    o.target = quaternion_target(L);
    const auto r = compute_seligman(L, {1, 1, 0}, o);
    ASSERT_EQ(r.status, QuotientStatus::certified);
    ASSERT_EQ(r.quotient_dim, 4u);
    EXPECT_TRUE(check_iso(L, r, *o.target).ok);
    const auto& S = r.algebra;
    for (std::size_t p = 0; p < 4; ++p)
        for (std::size_t q = 0; q < 4; ++q) {
            const auto a = H.basis(p), b = H.basis(q);
            const auto ab = H.mul(a, b), br = H.commutator(a, b);
            auto rhs1 = can_h(L, r, 1, ab);
            axpy(rhs1, Q(1), can_h(L, r, 2, br));
            EXPECT_EQ(S.mul(can_h(L, r, 1, a), can_h(L, r, 1, b)), rhs1);
            EXPECT_EQ(S.mul(can_h(L, r, 2, a), can_h(L, r, 2, b)), can_h(L, r, 2, ab));
            auto rhs3 = S.mul(can_h(L, r, 1, a), can_h(L, r, 2, b));
            axpy(rhs3, Q(1), can_h(L, r, 2, br));
            EXPECT_EQ(S.mul(can_h(L, r, 2, b), can_h(L, r, 1, a)), rhs3);
        }
}

TEST(Seligman, MatrixAlgebraAtFirstPlusSecondWeight) {
    GradedLie<Q> L(matrix_algebra<Q>(2), 4);
    const auto t = quaternion_target(L);
    const auto r = seligman(L, {1, 1, 0});
    ASSERT_EQ(r.status, QuotientStatus::certified);
    EXPECT_EQ(r.quotient_dim, 4u);
    const auto iso = check_iso(L, r, t);
    EXPECT_TRUE(iso.ok) << iso.failure;
}

TEST(Seligman, PrimeFieldsAgreeWithRationals) {
    GradedLie<Q> Lq(matrix_algebra<Q>(2), 3);
    GradedLie<FpA> La(matrix_algebra<FpA>(2), 3);
    GradedLie<FpB> Lb(matrix_algebra<FpB>(2), 3);
    const auto q = seligman(Lq, {1, 1});
    const auto a = seligman(La, {1, 1});
    const auto b = seligman(Lb, {1, 1});
    EXPECT_EQ(q.quotient_dim, a.quotient_dim);
    EXPECT_EQ(q.quotient_dim, b.quotient_dim);
    EXPECT_EQ(q.basis, a.basis);
}

TEST(Seligman, StructureConstantsAreAssociativeAndUnital) {
    GradedLie<Q> L(matrix_algebra<Q>(2), 3);
    const auto r = seligman(L, {2, 0});
    ASSERT_EQ(r.status, QuotientStatus::certified);
    const auto& S = r.algebra;
    EXPECT_NO_THROW(S.verify());
    EXPECT_EQ(S.dim(), 10u);
}

TEST(SubalgebraSe, ZeroCoordinateGivesScalars) {
    GradedLie<Q> L(matrix_algebra<Q>(2), 3);
    const auto r = seligman(L, {2, 0});
    ASSERT_EQ(r.status, QuotientStatus::certified);
    EXPECT_EQ(subalgebra_Se_i(L, r, 2).space.dim(), 1u);
    EXPECT_EQ(subalgebra_Se_i(L, r, 1).space.dim(), 10u);
}

TEST(SubalgebraSe, ProductDecompositionForSeparatedWeights) {
    // lambda = (1,0,1) is totally disconnected: Se = Se_1 (x) Se_3.
    GradedLie<FpA> L(trunc_poly<FpA>(2), 4);
    const auto r = seligman(L, {1, 0, 1});
    ASSERT_EQ(r.status, QuotientStatus::certified);
    const auto s1 = subalgebra_Se_i(L, r, 1), s3 = subalgebra_Se_i(L, r, 3);
    EXPECT_TRUE(subalgebras_commute(r.algebra, s1.space, s3.space));
    EXPECT_EQ(s1.space.dim() * s3.space.dim(), r.quotient_dim);
    std::vector<Vec<FpA>> products;
    for (const auto& x : s1.space.basis())
        for (const auto& y : s3.space.basis()) products.push_back(r.algebra.mul(x, y));
    EXPECT_EQ(Subspace<FpA>::span(r.quotient_dim, products).dim(), r.quotient_dim);
}

TEST(SubalgebraSe, SecondNodeGeneratesQuaternionCase) {
    // a -> h_2(a) is onto Se^(1,1,0), so Se_2 is everything.
    const auto H = quaternion_algebra<FpA>(-1, -1);
    GradedLie<FpA> L(H, 4);
    const auto r = seligman(L, {1, 1, 0});
    ASSERT_EQ(r.status, QuotientStatus::certified);
    const auto se1 = subalgebra_Se_i(L, r, 1);
    const auto se2 = subalgebra_Se_i(L, r, 2);
    EXPECT_EQ(se2.space.dim(), 4u);
    EXPECT_GE(se1.space.dim(), 1u);
}

TEST(Criterion, SymRealizationOnCommutativeAlgebra) {
    GradedLie<Q> L(trunc_poly<Q>(2), 2);
    for (long ell : {1L, 2L}) {
        const auto t = ts_lambda_target(L, {ell});
        const auto c = symmetric_identity_criterion(L, 1, t, static_cast<unsigned>(ell + 1));
        EXPECT_TRUE(c.identity_holds);
        EXPECT_TRUE(c.strings_vanish);
    }
}

TEST(Criterion, ZeroMapAtEllOne) {
    GradedLie<Q> L(matrix_algebra<Q>(2), 2);
    Target<Q> zero{"zero", ground_field<Q>(), std::vector<Vec<Q>>(L.l0_dim(), Vec<Q>{Q(0)})};
    const auto c = symmetric_identity_criterion(L, 1, zero, 1);
    EXPECT_TRUE(c.identity_holds);
    EXPECT_TRUE(c.strings_vanish);
}

TEST(Criterion, BrokenScalingFailsOnBothSides) {
    GradedLie<Q> L(trunc_poly<Q>(2), 2);
    auto t = ts_lambda_target(L, {1});
    for (auto& v : t.eta0) v = scaled(Q(2), v);
    const auto c = symmetric_identity_criterion(L, 1, t, 2);
    EXPECT_FALSE(c.identity_holds);
    EXPECT_FALSE(c.strings_vanish);
    EXPECT_TRUE(c.agree());
}

TEST(Criterion, TraceOnMatricesNeedsEvenEll) {
    GradedLie<Q> L(matrix_algebra<Q>(2), 4);
    EXPECT_FALSE(symmetric_identity_criterion(L, 2, trace_target(L, 2, 1), 2).identity_holds);
    const auto c = symmetric_identity_criterion(L, 2, trace_target(L, 2, 2), 3);
    EXPECT_TRUE(c.identity_holds);
    EXPECT_TRUE(c.strings_vanish);
}

TEST(Sandwich, AdmissibleTargetsBoundFromBelow) {
    GradedLie<Q> L(matrix_algebra<Q>(2), 3);
    const auto t = ts_lambda_target(L, {1, 0});
    const auto gens = jlambda_generators(L, {1, 0}, 3, true).elements;
    const auto s = sandwich_certify(L, gens, t);
    EXPECT_TRUE(s.lie_hom);
    EXPECT_TRUE(s.is_admissible);
    EXPECT_EQ(s.image_dim, 4u);
    // The same target is not admissible for the wrong weight.
    const auto wrong = sandwich_certify(L, jlambda_generators(L, {0, 1}, 3, true).elements, t);
    EXPECT_FALSE(wrong.is_admissible);
}

TEST(Saturation, JTimesL0StaysInJ) {
    // J is a two-sided ideal: right multiples of generators by L0 letters stay in J.
    GradedLie<Q> L(matrix_algebra<Q>(2), 3);
    const auto gens = jlambda_generators(L, {1, 0}, 3, true).elements;
    Saturation<Q> sat(L, gens, true);
    sat.run(3);
    auto& st = sat.straightener();
    std::size_t checked = 0;
    for (const auto& g : gens) {
        if (pbw_degree(g) > 1) continue;
        for (std::size_t x = L.l0_begin(); x < L.l0_end(); ++x) {
            const PbwElement<Q> lx{{Mono(1, static_cast<char16_t>(x)), Q(1)}};
            EXPECT_TRUE(sat.contains(st.multiply(g, lx, 3)));
            ++checked;
        }
    }
    EXPECT_GT(checked, 0u);
}

TEST(Seligman, SandwichAloneCertifiesAndCarriesStructure) {
    // With the regular witness disabled the admissible target closes the gap.
    GradedLie<Q> L(trunc_poly<Q>(3), 2);
    SeligmanOptions<Q> o;
    o.witness_cap = 1;
    o.target = ts_lambda_target(L, {2});
    const auto r = compute_seligman(L, {2}, o);
    ASSERT_EQ(r.status, QuotientStatus::certified);
    EXPECT_FALSE(r.regular_witness);
    EXPECT_EQ(r.quotient_dim, 6u);
    const auto iso = check_iso(L, r, *o.target);
    EXPECT_TRUE(iso.ok) << iso.failure;
    // Same structure as the regular witness gives.
    const auto reg = compute_seligman(L, {2}, SeligmanOptions<Q>{});
    EXPECT_EQ(reg.algebra, r.algebra);
}

TEST(Seligman, TooSmallDegreeIsInconclusive) {
    GradedLie<Q> L(trunc_poly<Q>(2), 2);
    SeligmanOptions<Q> o;
    o.n_max = 1;
    const auto r = compute_seligman(L, {2}, o);
    EXPECT_EQ(r.status, QuotientStatus::inconclusive);
    EXPECT_FALSE(r.has_structure());
}
