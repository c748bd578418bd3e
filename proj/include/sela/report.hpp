#pragma once

/**
 * @file report.hpp
 * @brief JSON reports for computed results. Key order is fixed by
 *        nlohmann::ordered_json, so reports are byte-deterministic.
 */

#include "sela/weylmod.hpp"

#include "json.hpp"

#include <algorithm>
#include <cstdio>

namespace sela {

using Report = nlohmann::ordered_json;

/// FNV-1a over the canonical JSON dump of an algebra.
template <class F>
std::string algebra_hash(const Algebra<F>& a) {
    const std::string s = to_json(a).dump();
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ull;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

template <class F>
Report vec_json(const Vec<F>& v) {
    Report out = Report::array();
    for (const auto& x : v) out.push_back(Field<F>::to_string(x));
    return out;
}

/// Structure constants as [i, j, k, value] for b_i b_j = sum value b_k.
template <class F>
Report structure_json(const Algebra<F>& a) {
    Report out = Report::array();
    for (std::size_t i = 0; i < a.dim(); ++i)
        for (std::size_t j = 0; j < a.dim(); ++j)
            for (const auto& [k, v] : a.product(i, j)) out.push_back(Report::array({i, j, k, Field<F>::to_string(v)}));
    return out;
}

inline Report lambda_json(const std::vector<long>& lambda) {
    Report out = Report::array();
    for (long l : lambda) out.push_back(l);
    return out;
}

template <class F>
Report quotient_json(const QuotientResult<F>& r) {
    Report j;
    j["lambda"] = lambda_json(r.lambda);
    j["scalar_mode"] = r.scalar_mode;
    j["status"] = status_name(r.status);
    const bool determined =
        std::any_of(r.trace.begin(), r.trace.end(), [](const auto& t) { return t.closed || t.one_in_J; });
    if (determined) j["quotient_dim"] = r.quotient_dim;
    else j["quotient_dim"] = nullptr;
    j["saturation_degree"] = r.N;
    j["dim_bound"] = r.bound.get_str();
    j["generators"] = r.generator_count;
    Report trace = Report::array();
    for (const auto& t : r.trace)
        trace.push_back({{"N", t.N},
                         {"free_letters", t.free_letters},
                         {"ideal_rank", t.rank},
                         {"representatives", t.reps},
                         {"closed", t.closed},
                         {"one_in_J", t.one_in_J}});
    j["trace"] = trace;
    j["basis"] = r.basis_labels;
    if (r.status == QuotientStatus::certified && r.algebra.dim() > 0)
        j["structure_constants"] = structure_json(r.algebra);
    Report w;
    w["regular_representation"] = r.regular_witness;
    if (r.sandwich) {
        w["target"] = r.target_name;
        w["lie_homomorphism"] = r.sandwich->lie_hom;
        w["admissible"] = r.sandwich->is_admissible;
        w["image_dim"] = r.sandwich->image_dim;
        if (!r.sandwich->failure.empty()) w["failure"] = r.sandwich->failure;
    }
    j["witness"] = w;
    if (!r.diagnostics.empty()) j["diagnostics"] = r.diagnostics;
    return j;
}

template <class F>
Report slice_json(const InducedModuleSlice<F>& s) {
    Report j;
    j["lambda"] = lambda_json(s.lambda);
    j["depth"] = s.depth;
    j["window"] = s.window;
    j["module_dim"] = s.module_dim;
    j["stable_across_windows"] = s.stable;
    Report ws = Report::array();
    for (const auto& w : s.spaces) {
        Report k = Report::array();
        for (long t : w.k) k.push_back(t);
        ws.push_back({{"lambda_minus", k}, {"depth", w.depth}, {"dim", w.dim}, {"status", w.status}});
    }
    j["weights"] = ws;
    return j;
}

template <class F>
Report ann_json(const AnnComparison<F>& a) {
    Report j;
    j["N"] = a.N;
    j["J_in_Ann"] = a.j_in_ann;
    j["Ann_in_J"] = a.ann_in_j;
    j["generators_in_Ann"] = a.generators_in_ann;
    j["J_representatives"] = a.j_reps;
    j["Ann_representatives"] = a.ann_reps;
    j["Ann_closed"] = a.ann_closed;
    if (a.se_dim) j["se_dim"] = *a.se_dim;
    j["exact_equality"] = a.exact;
    if (!a.witness.empty()) j["witness"] = a.witness;
    return j;
}

inline Report claim(const std::string& paper_ref, const std::string& status, Report data) {
    return {{"paper_ref", paper_ref}, {"status", status}, {"data", std::move(data)}};
}

}  // namespace sela
