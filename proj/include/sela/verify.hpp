#pragma once

/**
 * @file verify.hpp
 * @brief The acceptance suite: eleven criteria, each run at its declared
 *        scale and summarized as one outcome. Shared by the acceptance test
 *        binary and the `verify-all` command.
 */

#include "sela/report.hpp"

#include <chrono>
#include <functional>
#include <set>
#include <sstream>

namespace sela {

struct VerifyOptions {
    bool quick = false;
    bool timing = false;
};

struct CriterionOutcome {
    int id = 0;
    std::string title;
    bool passed = false;
    bool reproduced = true;  ///< false: scale not reached, reported but not failed
    std::vector<std::string> notes;
    Report data = Report::object();
    double seconds = 0;
};

namespace detail {

inline std::size_t binomial(std::size_t n, std::size_t k) {
    mpz_class r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r.get_ui();
}

inline std::string lambda_str(const std::vector<long>& l) {
    std::string s = "(";
    for (std::size_t i = 0; i < l.size(); ++i) s += (i ? "," : "") + std::to_string(l[i]);
    return s + ")";
}

/// Quotient dimensions seen by criteria 3-7, for the bound check.
struct BoundRecord {
    std::string label;
    std::size_t dim;
    mpz_class bound;
};

class Suite {
public:
    explicit Suite(VerifyOptions o) : opt_(o) {}

    CriterionOutcome run(int id) {
        CriterionOutcome c;
        c.id = id;
        const auto t0 = std::chrono::steady_clock::now();
        try {
            switch (id) {
                case 1: c1(c); break;
                case 2: c2(c); break;
                case 3: c3(c); break;
                case 4: c4(c); break;
                case 5: c5(c); break;
                case 6: c6(c); break;
                case 7: c7(c); break;
                case 8: c8(c); break;
                case 9: c9(c); break;
                case 10: c10(c); break;
                case 11: c11(c); break;
                default: throw std::invalid_argument("no criterion " + std::to_string(id));
            }
        } catch (const std::exception& e) {
            c.passed = false;
            c.notes.push_back(std::string("error: ") + e.what());
        }
        c.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        done_.insert(id);
        return c;
    }

private:
    using Q = Rational;

    void check(CriterionOutcome& c, bool ok, const std::string& what) {
        if (!ok) {
            c.passed = false;
            c.notes.push_back("FAIL " + what);
        }
    }

    template <class F>
    void record(const std::string& label, const QuotientResult<F>& r) {
        bounds_.push_back({label, r.quotient_dim, r.bound});
    }

    // 1. sym_ell satisfies the (ell+1)-st identity; recursion agrees with the direct evaluator.
    void c1(CriterionOutcome& c) {
        c.title = "symmetrization satisfies the symmetric identity; recursion oracle agrees";
        c.passed = true;
        const std::vector<std::pair<std::string, Algebra<Q>>> algs{
            {"Mat2", matrix_algebra<Q>(2)}, {"quaternion(1,-1)", quaternion_algebra<Q>(1, -1)}, {"truncpoly3", trunc_poly<Q>(3)}};
        for (const auto& [name, A] : algs)
            for (unsigned ell = 1; ell <= 3; ++ell) {
                if (opt_.quick && ell > 2) continue;
                SymTensorAlgebra<Q> ts(A, ell);
                const auto& B = ts.algebra();
                const LinearMap<Q> rho = ts.sym_map();
                auto id = check_symmetric_identity(A, B, rho, ell + 1);
                check(c, id.holds, name + " ell=" + std::to_string(ell) + " identity");
                const Q scale(static_cast<long>(factorial(ell + 1)));
                std::size_t agree = 0, total = 0;
                for (const auto& a : sample_family<Q>(A.dim())) {
                    SeligmanRecursion<Q> g(A, B, rho);
                    const auto lhs = sym_identity_lhs(A, B, rho, a, ell + 1);
                    ++total;
                    if (g(std::vector<Vec<Q>>(ell + 1, a)) == scaled(scale, lhs)) ++agree;
                }
                check(c, agree == total, name + " ell=" + std::to_string(ell) + " recursion");
                c.data[name + " ell=" + std::to_string(ell)] = {{"identity", id.holds}, {"samples", total},
                                                                {"recursion_agrees", agree}};
            }
    }

    // 2. TS dimensions and centers.
    void c2(CriterionOutcome& c) {
        c.title = "TS basis dimension and Schur-Weyl center count";
        c.passed = true;
        const std::vector<std::pair<std::string, Algebra<Q>>> algs{{"k", ground_field<Q>()},
                                                                   {"Mat2", matrix_algebra<Q>(2)},
                                                                   {"quaternion(1,1)", quaternion_algebra<Q>(1, 1)},
                                                                   {"truncpoly2", trunc_poly<Q>(2)},
                                                                   {"truncpoly3", trunc_poly<Q>(3)}};
        for (const auto& [name, A] : algs)
            for (std::size_t ell = 1; ell <= 3; ++ell) {
                SymTensorAlgebra<Q> ts(A, ell);
                const std::size_t want = binomial(A.dim() + ell - 1, ell);
                check(c, ts.dim() == want, "dim TS^" + std::to_string(ell) + "(" + name + ")");
                c.data["dim TS^" + std::to_string(ell) + "(" + name + ")"] = ts.dim();
            }
        for (unsigned ell = 2; ell <= 3; ++ell) {
            SymTensorAlgebra<Q> ts(matrix_algebra<Q>(2), ell);
            const std::size_t center = derived_spaces(ts.algebra()).center.dim();
            std::size_t count = 0;
            for (const auto& d : partitions(ell)) {
                unsigned parts = 0;
                for (unsigned m : d.p) parts += m;
                if (parts <= 2) ++count;
            }
            check(c, center == count, "center TS^" + std::to_string(ell) + "(Mat2)");
            c.data["center TS^" + std::to_string(ell) + "(Mat2)"] = {{"computed", center}, {"partitions", count}};
        }
    }

    template <class F>
    void seligman_iso(CriterionOutcome& c, const Algebra<F>& A, const std::string& name, std::size_t n,
                      const std::vector<long>& lambda, std::optional<std::size_t> want, bool want_iso,
                      std::optional<Target<F>> target = std::nullopt) {
        GradedLie<F> L(A, n);
        SeligmanOptions<F> o;
        o.target = target ? *target : ts_lambda_target(L, lambda);
        auto r = compute_seligman(L, lambda, o);
        const std::string label = "sl" + std::to_string(n) + "(" + name + ") " + lambda_str(lambda);
        record(label, r);
        const bool cert = r.has_structure();
        check(c, cert, label + " certified (got " + status_name(r.status) + ")");
        if (want) check(c, r.quotient_dim == *want, label + " dim " + std::to_string(r.quotient_dim));
        bool iso = false;
        if (want_iso && cert) {
            auto ic = check_iso(L, r, *o.target);
            iso = ic.ok;
            check(c, ic.ok, label + " iso to " + o.target->name + ": " + ic.failure);
        }
        c.data[label] = {{"status", status_name(r.status)},
                         {"dim", r.quotient_dim},
                         {"target", o.target->name},
                         {"iso", iso},
                         {"scalar_mode", r.scalar_mode}};
    }

    // 3. Commutative coefficients: Se ≅ tensor product of TS.
    void c3(CriterionOutcome& c) {
        c.title = "commutative coefficients: Se^lambda is a tensor product of symmetric tensor algebras";
        c.passed = true;
        for (std::size_t m = 2; m <= 3; ++m)
            for (long ell = 1; ell <= 3; ++ell) {
                if (opt_.quick && ell > 2) continue;
                seligman_iso(c, trunc_poly<Q>(m), "truncpoly" + std::to_string(m), 2, {ell},
                             binomial(m + ell - 1, ell), true);
            }
        seligman_iso(c, trunc_poly<Q>(2), "truncpoly2", 3, {1, 1}, 4, true);
    }

    // 4. lambda = 0 gives k.
    void c4(CriterionOutcome& c) {
        c.title = "lambda = 0 gives Se = k";
        c.passed = true;
        seligman_iso(c, ground_field<Q>(), "k", 2, {0}, 1, true);
        seligman_iso(c, trunc_poly<Q>(2), "truncpoly2", 2, {0}, 1, true);
        seligman_iso(c, trunc_poly<Q>(3), "truncpoly3", 3, {0, 0}, 1, true);
        seligman_iso(c, matrix_algebra<Q>(2), "Mat2", 3, {0, 0}, 1, true);
        seligman_iso(c, quaternion_algebra<Q>(1, 1), "quaternion(1,1)", 4, {0, 0, 0}, 1, true);
    }

    // 5. Totally disconnected weights for sl4(Mat2), and the trace criterion.
    void c5(CriterionOutcome& c) {
        c.title = "totally disconnected weights and the central simple divisibility criterion";
        c.passed = true;
        const auto A = matrix_algebra<Q>(2);
        GradedLie<Q> L(A, 4);
        for (long ell = 1; ell <= 2; ++ell) {
            const std::vector<long> lambda{0, ell, 0};
            auto tr = trace_target(L, 2, ell);
            SeligmanOptions<Q> o;
            o.target = tr;
            auto r = compute_seligman(L, lambda, o);
            record("sl4(Mat2) " + lambda_str(lambda), r);
            const bool divides = ell % 2 == 0;
            check(c, r.sandwich->is_admissible == divides, "trace target admissible iff 2 | " + std::to_string(ell));
            if (divides) {
                check(c, r.status == QuotientStatus::certified && r.quotient_dim == 1, "2w2 certified dim 1");
                auto se2 = subalgebra_Se_i(L, r, 2);
                check(c, se2.space.dim() == 1, "Se_2 = Se");
            } else {
                check(c, r.status == QuotientStatus::certified_zero, "w2 certified zero");
            }
            c.data["sl4(Mat2) " + lambda_str(lambda)] = {{"status", status_name(r.status)},
                                                        {"dim", r.quotient_dim},
                                                        {"trace_target_admissible", r.sandwich->is_admissible}};
        }
        for (long ell = 1; ell <= 2; ++ell) {
            seligman_iso(c, A, "Mat2", 4, {ell, 0, 0}, binomial(4 + ell - 1, ell), true);
            seligman_iso(c, A, "Mat2", 4, {0, 0, ell}, binomial(4 + ell - 1, ell), true);
        }
    }

    template <class F>
    void quaternion_case(CriterionOutcome& c, const Rational& a, const Rational& b, bool relations) {
        const auto A = quaternion_algebra<F>(a, b);
        const std::string name = "quaternion(" + a.get_str() + "," + b.get_str() + ")";
        GradedLie<F> L(A, 4);
        SeligmanOptions<F> o;
        o.target = quaternion_target(L);
        auto r = compute_seligman(L, {1, 1, 0}, o);
        record("sl4(" + name + ") (1,1,0)", r);
        check(c, r.status == QuotientStatus::certified && r.quotient_dim == 4, name + " certified dim 4");
        if (!r.has_structure()) return;
        auto ic = check_iso(L, r, *o.target);
        check(c, ic.ok, name + " iso: " + ic.failure);
        bool h2_ok = true;
        for (std::size_t p = 0; p < A.dim(); ++p)
            if (ic.ok && ic.eta_bar(can(L, r, L.h(2, A.basis(p)))) != A.basis(p)) h2_ok = false;
        check(c, h2_ok, name + " a -> h2(a) inverts the iso");
        bool rel = true;
        if (relations) {
            const auto& S = r.algebra;
            for (std::size_t p = 0; p < A.dim(); ++p)
                for (std::size_t q = 0; q < A.dim(); ++q) {
                    const auto x = A.basis(p), y = A.basis(q);
                    auto h1 = [&](const Vec<F>& v) { return can(L, r, L.h(1, v)); };
                    auto h2 = [&](const Vec<F>& v) { return can(L, r, L.h(2, v)); };
                    Vec<F> r1 = h1(A.mul(x, y));
                    axpy(r1, F(1), h2(A.commutator(x, y)));
                    if (S.mul(h1(x), h1(y)) != r1) rel = false;
                    if (S.mul(h2(x), h2(y)) != h2(A.mul(x, y))) rel = false;
                    Vec<F> r3 = S.mul(h1(x), h2(y));
                    axpy(r3, F(1), h2(A.commutator(x, y)));
                    if (S.mul(h2(y), h1(x)) != r3) rel = false;
                }
            check(c, rel, name + " h1/h2 relations");
        }
        c.data["sl4(" + name + ") (1,1,0)"] = {{"status", status_name(r.status)},
                                              {"dim", r.quotient_dim},
                                              {"iso", ic.ok},
                                              {"h2_inverse", h2_ok},
                                              {"relations", rel}};
    }

    // 6. Quaternion coefficients, lambda = w1 + w2.
    void c6(CriterionOutcome& c) {
        c.title = "quaternion coefficients: Se^(w1+w2) is isomorphic to A";
        c.passed = true;
        quaternion_case<Q>(c, 1, 1, true);
        quaternion_case<Q>(c, 1, -1, true);
        quaternion_case<Q>(c, 2, 3, true);
    }

    template <class F>
    QuotientStatus mat4_run(CriterionOutcome& c) {
        GradedLie<F> L(matrix_algebra<F>(4), 4);
        SeligmanOptions<F> o;
        o.n_max = 4;
        auto r = compute_seligman(L, {1, 1, 0}, o);
        record("sl4(Mat4) (1,1,0) " + r.scalar_mode, r);
        c.data["sl4(Mat4) (1,1,0) " + r.scalar_mode] = {
            {"status", status_name(r.status)}, {"dim", r.quotient_dim}, {"N", r.N}};
        return r.status;
    }

    // 7. Mat4 vanishing over two primes.
    void c7(CriterionOutcome& c) {
        c.title = "Mat4 coefficients: Se^(w1+w2) = 0 over two primes";
        if (opt_.quick) {
            c.passed = true;
            c.reproduced = false;
            c.notes.push_back("skipped in quick profile");
            return;
        }
        const auto a = mat4_run<FpA>(c);
        const auto b = mat4_run<FpB>(c);
        if (a == QuotientStatus::certified_zero && b == QuotientStatus::certified_zero) {
            c.passed = true;
        } else if (a == QuotientStatus::inconclusive || b == QuotientStatus::inconclusive) {
            c.passed = true;
            c.reproduced = false;
            c.notes.push_back("not reproduced at configured scale");
        } else {
            c.passed = false;
            c.notes.push_back("FAIL unexpected status " + status_name(a) + " / " + status_name(b));
        }
    }

    // 8. Dimension bound on every result of 3-7.
    void c8(CriterionOutcome& c) {
        c.title = "quotient dimension bounded by (ell_max+1)^(dim L0 - dim h)";
        for (int id = 3; id <= 7; ++id)
            if (!done_.count(id)) {
                CriterionOutcome tmp;
                switch (id) {
                    case 3: c3(tmp); break;
                    case 4: c4(tmp); break;
                    case 5: c5(tmp); break;
                    case 6: c6(tmp); break;
                    case 7: if (!opt_.quick) c7(tmp); break;
                }
                done_.insert(id);
            }
        c.passed = !bounds_.empty();
        for (const auto& b : bounds_) {
            check(c, mpz_class(static_cast<unsigned long>(b.dim)) <= b.bound, b.label);
            c.data[b.label] = {{"dim", b.dim}, {"bound", b.bound.get_str()}};
        }
    }

    // 9. pi_0 identities.
    void c9(CriterionOutcome& c) {
        c.title = "pi_0 identities, multiplicativity, symmetry and the identity criterion";
        c.passed = true;
        // Leading term and multiplicativity on sl3(Mat2), i = 1 and 2.
        const auto M2 = matrix_algebra<Q>(2);
        GradedLie<Q> L(M2, 3);
        Envelope<Q> env(L);
        auto& st = env.straightener();
        std::size_t leading = 0;
        for (std::size_t i = 1; i <= 2; ++i)
            for (std::size_t t = 1; t <= 3; ++t) {
                const std::vector<std::size_t> as{1, 2, 3}, bs{2, 0, 1};
                std::vector<Vec<Q>> word;
                for (std::size_t s = 0; s < t; ++s) word.push_back(L.e(i, M2.basis(as[s])));
                for (std::size_t s = 0; s < t; ++s) word.push_back(L.f(i, M2.basis(bs[s])));
                PbwElement<Q> lhs = env.pi0(word);
                std::vector<std::size_t> perm(t);
                for (std::size_t s = 0; s < t; ++s) perm[s] = s;
                do {
                    std::vector<Vec<Q>> hs;
                    for (std::size_t s = 0; s < t; ++s) hs.push_back(L.H(i, M2.basis(as[s]), M2.basis(bs[perm[s]])));
                    add_scaled(lhs, Q(-1), st.word(hs));
                } while (std::next_permutation(perm.begin(), perm.end()));
                const bool ok = pbw_degree(lhs) < t;
                check(c, ok, "leading term i=" + std::to_string(i) + " t=" + std::to_string(t));
                leading += ok;
            }
        c.data["leading_term_cases"] = leading;

        std::mt19937 gen(11);
        std::size_t mult = 0;
        for (int trial = 0; trial < 12; ++trial) {
            auto word = [&](std::size_t len) {
                std::vector<Vec<Q>> w;
                std::uniform_int_distribution<std::size_t> pick(0, M2.dim() - 1), root(1, 2);
                for (std::size_t s = 0; s < len; ++s) {
                    const std::size_t i = root(gen);
                    w.push_back(L.e(i, M2.basis(pick(gen))));
                    w.push_back(L.f(i, M2.basis(pick(gen))));
                }
                std::shuffle(w.begin(), w.end(), gen);
                return w;
            };
            auto u = word(1 + trial % 2), v = word(1);
            auto uv = u;
            uv.insert(uv.end(), v.begin(), v.end());
            const bool ok = env.pi0(uv) == st.multiply(env.pi0(u), env.pi0(v), 8);
            check(c, ok, "multiplicativity trial " + std::to_string(trial));
            mult += ok;
        }
        c.data["multiplicativity_trials"] = mult;

        bool sym = true;
        for (std::size_t p = 0; p < M2.dim(); ++p)
            for (std::size_t q = 0; q < M2.dim(); ++q) {
                const auto a = M2.basis(1), b1 = M2.basis(p), b2 = M2.basis(q);
                auto x = env.pi0({L.e(1, a), L.e(1, M2.basis(2)), L.f(1, b1), L.f(1, b2)});
                auto y = env.pi0({L.e(1, a), L.e(1, M2.basis(2)), L.f(1, b2), L.f(1, b1)});
                auto z = env.pi0({L.e(1, M2.basis(2)), L.e(1, a), L.f(1, b1), L.f(1, b2)});
                if (x != y || x != z) sym = false;
            }
        check(c, sym, "argument symmetry");
        c.data["argument_symmetry"] = sym;

        // The recursion for g_t = eta o pi_0(e(a..)f(1)^t) with eta into TS^2.
        const auto T2 = trunc_poly<Q>(2);
        GradedLie<Q> L2(T2, 2);
        auto eta = ts_lambda_target(L2, {2});
        {
            Envelope<Q> e2(L2);
            std::vector<Vec<Q>> rho_imgs;
            for (std::size_t p = 0; p < T2.dim(); ++p)
                rho_imgs.push_back(eval_target(L2, eta, PbwElement<Q>{{Mono(1, char16_t(L2.h_letter(1, p))), Q(1)}}));
            auto rho = LinearMap<Q>::from_images(eta.algebra.dim(), rho_imgs);
            bool rec = true;
            for (const auto& args : std::vector<std::vector<std::size_t>>{{0, 1}, {1, 1}, {0, 1, 1}, {1, 1, 1}}) {
                std::vector<Vec<Q>> word, as;
                for (auto p : args) {
                    word.push_back(L2.e(1, T2.basis(p)));
                    as.push_back(T2.basis(p));
                }
                for (std::size_t s = 0; s < args.size(); ++s) word.push_back(L2.f(1, T2.one()));
                SeligmanRecursion<Q> g(T2, eta.algebra, rho);
                if (eval_target(L2, eta, e2.pi0(word)) != g(as)) rec = false;
            }
            check(c, rec, "g_t satisfies the recursion");
            c.data["recursion"] = rec;
        }

        // Criterion equivalence on three maps.
        auto crit1 = symmetric_identity_criterion(L2, 1, eta, 3);
        check(c, crit1.agree() && crit1.identity_holds, "sym realization passes both sides");
        GradedLie<Q> LM(M2, 2);
        Target<Q> zero{"zero map to k", ground_field<Q>(), std::vector<Vec<Q>>(LM.l0_dim(), Vec<Q>{Q(0)})};
        auto crit2 = symmetric_identity_criterion(LM, 1, zero, 1);
        check(c, crit2.agree() && crit2.identity_holds, "zero map passes both sides");
        Target<Q> broken = eta;
        broken.name = "2 sym";
        for (auto& v : broken.eta0) v = scaled(Q(2), v);
        auto crit3 = symmetric_identity_criterion(L2, 1, broken, 3);
        check(c, crit3.agree() && !crit3.identity_holds, "scaled realization fails both sides");
        c.data["criterion"] = {{"sym", {crit1.identity_holds, crit1.strings_vanish}},
                               {"zero", {crit2.identity_holds, crit2.strings_vanish}},
                               {"scaled", {crit3.identity_holds, crit3.strings_vanish}}};
    }

    // 10. theta.
    void c10(CriterionOutcome& c) {
        c.title = "theta isomorphism onto sl_n(A^op)";
        c.passed = true;
        auto theta_check = [&](const Algebra<Q>& A, std::size_t n, const std::string& name) {
            GradedLie<Q> L(A, n), Lop(opposite(A), n);
            auto th = theta_map(L, Lop);
            const bool ok = theta_is_lie_hom(L, Lop, th) && th.m.rank() == L.dim();
            check(c, ok, "theta on sl" + std::to_string(n) + "(" + name + ")");
            c.data["theta sl" + std::to_string(n) + "(" + name + ")"] = ok;
        };
        theta_check(matrix_algebra<Q>(2), 3, "Mat2");
        theta_check(quaternion_algebra<Q>(1, 1), 4, "quaternion(1,1)");
        for (std::size_t n = 3; n <= 4; ++n)
            for (std::size_t i = 1; i < n; ++i) {
                std::vector<long> w(n - 1, 0), v(n - 1, 0);
                w[i - 1] = 1;
                v[n - i - 1] = 1;
                check(c, RootDatumA::theta_star(w) == v, "theta* on fundamental weight");
            }
        const auto A = matrix_algebra<Q>(2);
        GradedLie<Q> L(A, 3), Lop(opposite(A), 3);
        const std::vector<long> lam{1, 0};
        auto r1 = compute_seligman(L, lam);
        auto r2 = compute_seligman(Lop, RootDatumA::theta_star(lam));
        check(c, r1.has_structure() && r2.has_structure() && r1.quotient_dim == r2.quotient_dim,
              "Se dimensions agree under theta");
        c.data["Se^w1(sl3(Mat2))"] = r1.quotient_dim;
        c.data["Se^w2(sl3(Mat2^op))"] = r2.quotient_dim;
    }

    // 11. Weyl slices.
    void c11(CriterionOutcome& c) {
        c.title = "global Weyl module slices and the annihilator comparison";
        c.passed = true;
        {
            GradedLie<Q> L(ground_field<Q>(), 2);
            auto w = weyl_module(L, {2}, 4);
            std::vector<std::size_t> dims;
            for (std::size_t d = 0; d <= 4; ++d) dims.push_back(w.slice.total_at_depth(d));
            check(c, dims == std::vector<std::size_t>{1, 1, 1, 0, 0}, "V(2w) weight dims");
            check(c, w.relations_hold && w.cyclic, "defining relations and cyclicity");
            c.data["sl2(k) 2w"] = slice_json(w.slice);
        }
        {
            GradedLie<Q> L(trunc_poly<Q>(2), 2);
            auto w = weyl_module(L, {1}, 2);
            check(c, w.slice.total_at_depth(0) == 2, "dim W(w)_w = 2");
            check(c, w.relations_hold && w.cyclic, "defining relations and cyclicity");
            auto a = ann_vs_J(L, {1}, 2);
            check(c, a.j_in_ann && a.ann_in_j, "truncated equality of J and Ann at N = 2");
            c.data["sl2(truncpoly2) w"] = slice_json(w.slice);
            c.data["ann_vs_J"] = ann_json(a);
        }
    }

    VerifyOptions opt_;
    std::set<int> done_;
    std::vector<BoundRecord> bounds_;
};

}  // namespace detail

/// Runs the requested criteria (all when empty) in order.
inline std::vector<CriterionOutcome> run_acceptance(const VerifyOptions& opt, std::vector<int> ids = {}) {
    if (ids.empty())
        for (int i = 1; i <= 11; ++i) ids.push_back(i);
    detail::Suite suite(opt);
    std::vector<CriterionOutcome> out;
    for (int id : ids) out.push_back(suite.run(id));
    return out;
}

inline Report outcome_json(const CriterionOutcome& c, bool timing) {
    Report j;
    j["criterion"] = c.id;
    j["title"] = c.title;
    j["status"] = !c.passed ? "fail" : c.reproduced ? "pass" : "not-reproduced";
    j["notes"] = c.notes;
    j["data"] = c.data;
    if (timing) j["seconds"] = c.seconds;
    return j;
}

}  // namespace sela
