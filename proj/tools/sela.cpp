// sela: command-line front end.
//
// Exit codes: 0 success (certified for `seligman`), 2 stable, 3 inconclusive,
// 1 error or failed verification.

#include "sela/sela.hpp"

#include "CLI11.hpp"

#include <filesystem>
#include <fstream>
#include <iostream>

namespace {

using sela::Report;

struct Config {
    std::string algebra = "matrix:2";
    std::size_t n = 2;
    std::string lambda;
    std::size_t ell = 1;
    std::size_t order = 0;
    std::string map = "sym";
    std::string scalar = "q";
    std::uint32_t prime = sela::kPrimeA;
    std::size_t nmax = 0;
    std::size_t depth = 0;
    bool depth_set = false;
    std::size_t ann_n = 0;
    std::string target = "auto";
    bool no_relaxed = false;
    bool json = false;
    std::string out;
    bool quick = false;
    bool timing = false;
};

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : s) {
        if (c == sep) {
            out.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    out.push_back(cur);
    return out;
}

std::vector<long> parse_lambda(const std::string& s, std::size_t n) {
    std::vector<long> out;
    if (s.empty()) return std::vector<long>(n - 1, 0);
    for (const auto& t : split(s, ',')) {
        std::size_t pos = 0;
        long v = std::stol(t, &pos);
        if (pos != t.size() || v < 0) throw std::invalid_argument("lambda coordinates must be nonnegative integers");
        out.push_back(v);
    }
    if (out.size() != n - 1)
        throw std::invalid_argument("--lambda needs " + std::to_string(n - 1) + " coordinates for n = " + std::to_string(n));
    return out;
}

/// matrix:d | quaternion:a,b | truncpoly:m | field | op:<spec> | path to a JSON file.
template <class F>
sela::Algebra<F> make_algebra(const std::string& spec) {
    if (spec.rfind("op:", 0) == 0) return sela::opposite(make_algebra<F>(spec.substr(3)));
    const auto colon = spec.find(':');
    const std::string kind = spec.substr(0, colon);
    const std::string arg = colon == std::string::npos ? "" : spec.substr(colon + 1);
    if (kind == "matrix") return sela::matrix_algebra<F>(std::stoul(arg));
    if (kind == "truncpoly") return sela::trunc_poly<F>(std::stoul(arg));
    if (kind == "field" || kind == "k") return sela::ground_field<F>();
    if (kind == "quaternion") {
        auto ab = split(arg, ',');
        if (ab.size() != 2) throw std::invalid_argument("quaternion needs two parameters a,b");
        return sela::quaternion_algebra<F>(sela::parse_rational(ab[0]), sela::parse_rational(ab[1]));
    }
    if (std::filesystem::exists(spec)) {
        std::ifstream in(spec);
        return sela::algebra_from_json<F>(nlohmann::json::parse(in));
    }
    throw std::invalid_argument("unknown algebra '" + spec +
                                "' (use matrix:d, quaternion:a,b, truncpoly:m, field, op:<spec> or a JSON file)");
}

sela::ScalarMode scalar_mode(const Config& c) {
    if (c.scalar == "q") return sela::ScalarMode::rational;
    if (c.scalar == "fp") return sela::ScalarMode::prime;
    throw std::invalid_argument("--scalar must be q or fp");
}

Report config_echo(const std::string& command, const Config& c) {
    Report j;
    j["command"] = command;
    j["algebra"] = c.algebra;
    j["n"] = c.n;
    j["lambda"] = c.lambda;
    j["scalar"] = c.scalar;
    if (c.scalar == "fp") j["prime"] = c.prime;
    return j;
}

void emit(const Config& c, const Report& report, const std::string& summary) {
    if (!c.out.empty()) {
        std::ofstream f(c.out);
        f << report.dump(2) << "\n";
    }
    if (c.json) std::cout << report.dump(2) << "\n";
    else std::cout << summary;
}

int cmd_tsa(const Config& c) {
    return sela::with_field(scalar_mode(c), c.prime, [&](auto tag) {
        using F = typename decltype(tag)::type;
        const auto A = make_algebra<F>(c.algebra);
        sela::SymTensorAlgebra<F> ts(A, c.ell);
        const std::size_t center = sela::derived_spaces(ts.algebra()).center.dim();
        Report data;
        data["algebra_hash"] = sela::algebra_hash(A);
        data["dim"] = ts.dim();
        data["tb_basis"] = ts.algebra().labels();
        data["center_dim"] = center;
        data["structure_constants"] = sela::structure_json(ts.algebra());
        Report r{{"command", "tsa"}, {"config", config_echo("tsa", c)}};
        r["config"]["ell"] = c.ell;
        r["claims"] = Report::array({sela::claim("symmetric tensor algebra: basis of symmetrized products and center",
                                                 "computed", data)});
        std::ostringstream s;
        s << "TS^" << c.ell << "(" << c.algebra << "): dim " << ts.dim() << ", center dim " << center << "\n";
        emit(c, r, s.str());
        return 0;
    });
}

int cmd_symcheck(const Config& c) {
    return sela::with_field(scalar_mode(c), c.prime, [&](auto tag) {
        using F = typename decltype(tag)::type;
        const auto A = make_algebra<F>(c.algebra);
        const unsigned order = static_cast<unsigned>(c.order ? c.order : c.ell + 1);
        sela::Algebra<F> B;
        sela::LinearMap<F> rho;
        std::optional<sela::SymTensorAlgebra<F>> ts;
        if (c.map == "sym") {
            ts.emplace(A, c.ell);
            B = ts->algebra();
            rho = ts->sym_map();
        } else if (c.map == "trace") {
            B = sela::ground_field<F>();
            rho = sela::LinearMap<F>(sela::center_projection(A).m.scaled(F(static_cast<long>(c.ell))));
        } else if (c.map == "identity") {
            B = A;
            rho = sela::LinearMap<F>(sela::Matrix<F>::identity(A.dim()));
        } else {
            throw std::invalid_argument("--map must be sym, trace or identity");
        }
        auto id = sela::check_symmetric_identity(A, B, rho, order);
        std::size_t agree = 0, total = 0;
        std::optional<sela::Vec<F>> disagree;
        const F scale(static_cast<long>(sela::factorial(order)));
        for (const auto& a : sela::sample_family<F>(A.dim(), 500, 20)) {
            sela::SeligmanRecursion<F> g(A, B, rho);
            ++total;
            if (g(std::vector<sela::Vec<F>>(order, a)) == sela::scaled(scale, sela::sym_identity_lhs(A, B, rho, a, order)))
                ++agree;
            else if (!disagree)
                disagree = a;
        }
        Report data;
        data["map"] = c.map;
        data["ell"] = c.ell;
        data["order"] = order;
        data["identity_holds"] = id.holds;
        data["decided_by_polarization"] = id.exhaustive;
        data["samples"] = id.samples;
        if (id.witness) data["failing_element"] = sela::vec_json(*id.witness);
        data["recursion_samples"] = total;
        data["recursion_agrees"] = agree;
        if (disagree) data["recursion_disagrees_at"] = sela::vec_json(*disagree);
        Report r{{"command", "symcheck"}, {"config", config_echo("symcheck", c)}};
        r["claims"] = Report::array({sela::claim("symmetric identity: direct evaluation against the recursion",
                                                 id.holds ? "pass" : "fail", data)});
        std::ostringstream s;
        s << c.map << " (ell " << c.ell << ") on " << c.algebra << ", identity of order " << order << ": "
          << (id.holds ? "pass" : "fail");
        if (id.witness) {
            s << " at a = (";
            for (std::size_t i = 0; i < id.witness->size(); ++i)
                s << (i ? "," : "") << sela::Field<F>::to_string((*id.witness)[i]);
            s << ")";
        }
        s << "; recursion agrees on " << agree << "/" << total << " samples\n";
        emit(c, r, s.str());
        return agree == total ? 0 : 1;
    });
}

int exit_for(sela::QuotientStatus s) {
    switch (s) {
        case sela::QuotientStatus::certified:
        case sela::QuotientStatus::certified_zero: return 0;
        case sela::QuotientStatus::stable: return 2;
        default: return 3;
    }
}

template <class F>
std::optional<sela::Target<F>> pick_target(const Config& c, const sela::GradedLie<F>& L, const std::vector<long>& lambda) {
    if (c.target == "none") return std::nullopt;
    if (c.target == "quaternion") return sela::quaternion_target(L);
    if (c.target.rfind("trace:", 0) == 0) {
        const std::size_t i = std::stoul(c.target.substr(6));
        if (i < 1 || i >= L.n()) throw std::invalid_argument("trace target index out of range");
        return sela::trace_target(L, i, lambda[i - 1]);
    }
    if (c.target == "ts") return sela::ts_lambda_target(L, lambda);
    if (c.target != "auto") throw std::invalid_argument("--target must be auto, none, ts, quaternion or trace:i");
    try {
        return sela::ts_lambda_target(L, lambda);
    } catch (const std::invalid_argument&) {
    }
    if (L.n() == 4 && L.coeff().dim() == 4 && lambda == std::vector<long>{1, 1, 0}) {
        try {
            return sela::quaternion_target(L);
        } catch (const std::exception&) {
        }
    }
    return std::nullopt;
}

int cmd_seligman(const Config& c) {
    return sela::with_field(scalar_mode(c), c.prime, [&](auto tag) {
        using F = typename decltype(tag)::type;
        const auto t0 = std::chrono::steady_clock::now();
        const auto A = make_algebra<F>(c.algebra);
        sela::GradedLie<F> L(A, c.n);
        const auto lambda = parse_lambda(c.lambda, c.n);
        sela::SeligmanOptions<F> o;
        o.n_max = c.nmax;
        o.relaxed = !c.no_relaxed;
        o.target = pick_target(c, L, lambda);
        auto r = sela::compute_seligman(L, lambda, o);
        Report data = sela::quotient_json(r);
        data["algebra_hash"] = sela::algebra_hash(A);
        data["dim_L0"] = L.l0_dim();
        Report claims = Report::array();
        claims.push_back(sela::claim("Seligman algebra U(L0)/J^lambda by truncated saturation", status_name(r.status), data));
        std::ostringstream s;
        const bool any_closed =
            std::any_of(r.trace.begin(), r.trace.end(), [](const auto& t) { return t.closed || t.one_in_J; });
        s << "Se^" << sela::detail::lambda_str(lambda) << "(sl" << c.n << "(" << c.algebra << ")): ";
        if (any_closed) s << "dim " << r.quotient_dim;
        else s << "dim undetermined";
        s << ", " << status_name(r.status) << " at N = " << r.N << " [" << r.scalar_mode << "]\n";
        if (!r.diagnostics.empty()) s << "  " << r.diagnostics << "\n";
        if (o.target && r.has_structure()) {
            auto ic = sela::check_iso(L, r, *o.target);
            Report iso{{"target", o.target->name}, {"target_dim", o.target->algebra.dim()}, {"iso", ic.ok}};
            if (!ic.failure.empty()) iso["failure"] = ic.failure;
            claims.push_back(sela::claim("isomorphism with the explicit target algebra", ic.ok ? "pass" : "fail", iso));
            s << "  target " << o.target->name << ": " << (ic.ok ? "isomorphic" : "not isomorphic (" + ic.failure + ")")
              << "\n";
        }
        Report rep{{"command", "seligman"}, {"config", config_echo("seligman", c)}, {"claims", claims}};
        if (c.timing)
            rep["timing"] = {{"seconds", std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count()}};
        emit(c, rep, s.str());
        return exit_for(r.status);
    });
}

int cmd_weyl(const Config& c) {
    return sela::with_field(scalar_mode(c), c.prime, [&](auto tag) {
        using F = typename decltype(tag)::type;
        const auto A = make_algebra<F>(c.algebra);
        sela::GradedLie<F> L(A, c.n);
        const auto lambda = parse_lambda(c.lambda, c.n);
        std::size_t height = 0;
        for (long l : lambda) height += static_cast<std::size_t>(l);
        const std::size_t depth = c.depth_set ? c.depth : height + 2;
        auto w = sela::weyl_module(L, lambda, depth);
        const std::size_t ann_n = c.ann_n ? c.ann_n : static_cast<std::size_t>(height) + 1;
        auto a = sela::ann_vs_J(L, lambda, ann_n);
        Report slice = sela::slice_json(w.slice);
        slice["relations_hold"] = w.relations_hold;
        slice["cyclic"] = w.cyclic;
        Report claims = Report::array();
        claims.push_back(sela::claim("global Weyl module as induced module of the regular Seligman module",
                                     w.slice.stable ? "stable" : "inconclusive", slice));
        claims.push_back(sela::claim("annihilator of the highest weight vector against J^lambda",
                                     a.j_in_ann && a.ann_in_j ? "equal" : "different", sela::ann_json(a)));
        Report rep{{"command", "weyl"}, {"config", config_echo("weyl", c)}, {"claims", claims}};
        std::ostringstream s;
        s << "W" << sela::detail::lambda_str(lambda) << " for sl" << c.n << "(" << c.algebra << "), depth " << depth
          << "\n";
        for (const auto& ws : w.slice.spaces) {
            s << "  lambda -";
            for (std::size_t i = 0; i < ws.k.size(); ++i) s << (i ? " -" : "") << " " << ws.k[i] << "a" << i + 1;
            s << ": dim " << ws.dim << " (" << ws.status << ")\n";
        }
        s << "  Ann vs J at N = " << ann_n << ": " << (a.j_in_ann && a.ann_in_j ? "equal" : "different")
          << (a.exact ? " (exact)" : "") << "\n";
        emit(c, rep, s.str());
        return w.slice.stable ? 0 : 3;
    });
}

int cmd_verify_all(const Config& c) {
    sela::VerifyOptions opt;
    opt.quick = c.quick;
    opt.timing = c.timing;
    auto outcomes = sela::run_acceptance(opt);
    Report rep{{"command", "verify-all"}, {"config", {{"quick", c.quick}}}};
    Report claims = Report::array();
    std::ostringstream s;
    bool ok = true;
    for (const auto& o : outcomes) {
        claims.push_back(sela::outcome_json(o, c.timing));
        s << "criterion " << o.id << ": " << (!o.passed ? "FAIL" : o.reproduced ? "PASS" : "NOT REPRODUCED") << " - "
          << o.title << "\n";
        for (const auto& n : o.notes) s << "    " << n << "\n";
        ok = ok && o.passed;
    }
    rep["claims"] = claims;
    rep["all_pass"] = ok;
    emit(c, rep, s.str());
    return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"sela: Seligman algebras of sl_n(A) in exact arithmetic"};
    app.require_subcommand(1);
    Config c;

    auto common = [&](CLI::App* sub) {
        sub->add_option("--algebra", c.algebra, "matrix:d, quaternion:a,b, truncpoly:m, field, op:<spec> or JSON file");
        sub->add_option("--scalar", c.scalar, "q (rationals) or fp (prime field)")->check(CLI::IsMember({"q", "fp"}));
        sub->add_option("--prime", c.prime, "prime for --scalar fp");
        sub->add_flag("--json", c.json, "print the JSON report instead of the summary");
        sub->add_option("--out", c.out, "also write the JSON report to this file");
        sub->add_flag("--timing", c.timing, "include wall time in the report");
    };

    auto* tsa = app.add_subcommand("tsa", "symmetric tensor algebra TS^ell(A)");
    common(tsa);
    tsa->add_option("--ell", c.ell, "tensor degree")->check(CLI::PositiveNumber);

    auto* sym = app.add_subcommand("symcheck", "symmetric identity for a named map");
    common(sym);
    sym->add_option("--ell", c.ell, "degree of sym / multiple of the trace");
    sym->add_option("--order", c.order, "order of the identity (default ell+1)");
    sym->add_option("--map", c.map, "sym, trace or identity")->check(CLI::IsMember({"sym", "trace", "identity"}));

    auto* sel = app.add_subcommand("seligman", "compute and certify Se^lambda");
    common(sel);
    sel->add_option("--n", c.n, "rank + 1 of sl_n")->check(CLI::Range(2, 12));
    sel->add_option("--lambda", c.lambda, "comma-separated coordinates in fundamental weights");
    sel->add_option("--nmax", c.nmax, "maximal saturation degree (default max(3, ell_max+2))");
    sel->add_option("--target", c.target, "auto, none, ts, quaternion or trace:i");
    sel->add_flag("--no-relaxed", c.no_relaxed, "omit the redundant longer strings");

    auto* weyl = app.add_subcommand("weyl", "slice of the global Weyl module and Ann vs J");
    common(weyl);
    weyl->add_option("--n", c.n, "rank + 1 of sl_n")->check(CLI::Range(2, 12));
    weyl->add_option("--lambda", c.lambda, "comma-separated coordinates in fundamental weights");
    weyl->add_option("--depth", c.depth, "depth of the slice (default height of lambda + 2)");
    weyl->add_option("--ann-n", c.ann_n, "degree for the annihilator comparison");

    auto* all = app.add_subcommand("verify-all", "run the acceptance suite");
    all->add_flag("--quick", c.quick, "reduced profile");
    all->add_flag("--json", c.json, "print the JSON report");
    all->add_option("--out", c.out, "also write the JSON report to this file");
    all->add_flag("--timing", c.timing, "include wall time per criterion");

    CLI11_PARSE(app, argc, argv);
    c.depth_set = weyl->count("--depth") > 0;
    try {
        if (*tsa) return cmd_tsa(c);
        if (*sym) return cmd_symcheck(c);
        if (*sel) return cmd_seligman(c);
        if (*weyl) return cmd_weyl(c);
        if (*all) return cmd_verify_all(c);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 1;
}
