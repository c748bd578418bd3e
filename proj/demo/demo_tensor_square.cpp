// TS^2(Mat_2) and the Seligman algebra of sl_3(Mat_2) at lambda = (2,0).

#include "sela/sela.hpp"

#include <iostream>

int main() {
    using Q = sela::Rational;
    const auto A = sela::matrix_algebra<Q>(2);

    sela::SymTensorAlgebra<Q> ts(A, 2);
    std::cout << "dim TS^2(Mat_2) = " << ts.dim() << "\n";
    std::cout << "dim center = " << sela::derived_spaces(ts.algebra()).center.dim() << "\n";

    sela::GradedLie<Q> L(A, 3);
    sela::SeligmanOptions<Q> opt;
    opt.target = sela::ts_lambda_target(L, {2, 0});
    const auto r = sela::compute_seligman(L, {2, 0}, opt);
    std::cout << "dim Se^(2,0) = " << r.quotient_dim << " (" << sela::status_name(r.status) << ", N = " << r.N << ")\n";

    const auto iso = sela::check_iso(L, r, *opt.target);
    std::cout << "isomorphic to " << opt.target->name << ": " << (iso.ok ? "yes" : "no") << "\n";
    return iso.ok ? 0 : 1;
}
