// Se^(1,1,0) of sl_4 over the real quaternions, in both scalar modes.

#include "sela/sela.hpp"

#include <iostream>

template <class F>
std::string show(const F& x) {
    if constexpr (std::is_same_v<F, sela::Rational>) return x.get_str();
    else return sela::to_string(x);
}

template <class F>
int run(const char* mode) {
    const auto H = sela::quaternion_algebra<F>(-1, -1);
    sela::GradedLie<F> L(H, 4);
    sela::SeligmanOptions<F> opt;
    opt.target = sela::quaternion_target(L);
    const auto r = sela::compute_seligman(L, {1, 1, 0}, opt);
    const auto iso = sela::check_iso(L, r, *opt.target);
    std::cout << mode << ": dim " << r.quotient_dim << ", " << sela::status_name(r.status)
              << ", isomorphic to H: " << (iso.ok ? "yes" : "no") << "\n";
    const auto& S = r.algebra;
    for (std::size_t i = 1; i < S.dim(); ++i) {
        std::cout << "  (" << S.labels()[i] << ")^2 =";
        const auto sq = S.mul(S.basis(i), S.basis(i));
        for (std::size_t k = 0; k < S.dim(); ++k)
            if (!sela::is_zero(sq[k])) std::cout << " " << show(sq[k]) << "*" << S.labels()[k];
        std::cout << "\n";
    }
    return iso.ok ? 0 : 1;
}

int main() {
    int rc = run<sela::Rational>("Q");
    rc |= run<sela::FpA>("F_p");
    return rc;
}
