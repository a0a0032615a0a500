/*
   Copyright 2026 The casinv Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#pragma once

/*
 * The six invariance theorems: each builds the determinant for a set tuple
 * and the determinant for the involuted tuple with shifted parameters, and
 * compares the two polynomials coefficientwise.
 */

#include <algorithm>
#include <array>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "builders.hpp"
#include "checks.hpp"
#include "report.hpp"

namespace casinv {

enum class TheoremId { CharlierInv, HermiteInv, MeixnerInv, LaguerreInv, HahnInv, JacobiInv };

inline constexpr std::array<TheoremId, 6> kAllTheorems = {TheoremId::CharlierInv, TheoremId::HermiteInv,
                                                          TheoremId::MeixnerInv,  TheoremId::LaguerreInv,
                                                          TheoremId::HahnInv,     TheoremId::JacobiInv};

inline std::string_view to_string(TheoremId t) {
    switch (t) {
        case TheoremId::CharlierInv:
            return "charlier";
        case TheoremId::HermiteInv:
            return "hermite";
        case TheoremId::MeixnerInv:
            return "meixner";
        case TheoremId::LaguerreInv:
            return "laguerre";
        case TheoremId::HahnInv:
            return "hahn";
        case TheoremId::JacobiInv:
            return "jacobi";
    }
    return "unknown";
}

inline std::optional<TheoremId> theorem_from_string(std::string_view name) {
    for (auto t : kAllTheorems)
        if (to_string(t) == name) return t;
    return std::nullopt;
}

/// Number of set components each theorem takes.
inline std::size_t component_count(TheoremId t) {
    switch (t) {
        case TheoremId::CharlierInv:
        case TheoremId::HermiteInv:
            return 1;
        case TheoremId::HahnInv:
            return 3;
        default:
            return 2;
    }
}

/// A report together with the two compared polynomials (absent when skipped).
struct InvarianceResult {
    VerificationReport report;
    std::optional<Poly> lhs;
    std::optional<Poly> rhs;
};

namespace detail {

inline void require_components(TheoremId t, const SetTuple& sets) {
    if (sets.size() != component_count(t))
        throw InvalidParams(std::string(to_string(t)) + " takes " + std::to_string(component_count(t)) +
                            " set(s), got " + std::to_string(sets.size()));
}

inline Gaussian gmax(const FiniteSet& F) { return Gaussian(static_cast<long>(F.max())); }

inline Poly reflect(const Poly& p) { return compose_affine(p, Gaussian(-1), Gaussian(0)); }

inline CheckEntry degree_law(const Poly& p, long w) {
    const bool ok = p.degree() && static_cast<long>(*p.degree()) == w;
    CheckEntry e{"degree", ok ? Status::Pass : Status::Fail, "", "", ""};
    if (!ok) {
        e.lhs = p.degree() ? std::to_string(*p.degree()) : "-inf";
        e.rhs = std::to_string(w);
    }
    return e;
}

}  // namespace detail

inline InvarianceResult verify_invariance_detailed(TheoremId t, const SetTuple& sets, const ParamSet& params) {
    detail::require_components(t, sets);
    InvarianceResult out;
    auto& rep = out.report;
    rep.theorem = std::string(to_string(t));
    rep.inputs["sets"] = to_text(sets);
    rep.inputs["params"] = to_text(params);
    const SetTuple inv = involute_tuple(sets);
    const long w = weight_tuple(sets);
    for (const auto& F : sets)
        if (F.empty()) {
            rep.notes.push_back("I(empty) taken as empty");
            break;
        }
    Poly lhs, rhs;
    switch (t) {
        case TheoremId::CharlierInv: {
            const Gaussian a = params.get("a");
            lhs = casorati_charlier(sets[0], a);
            rhs = detail::reflect(casorati_charlier(inv[0], -a)) * sign_power(w);
            rep.add(detail::degree_law(lhs, w));
            if (!sets[0].empty() && sets[0][0] == 0) {
                const FiniteSet down = downarrow(sets[0]);
                rep.add(detail::check_equal("reduction to " + to_text(down), lhs, casorati_charlier(down, a)));
            }
            break;
        }
        case TheoremId::HermiteInv:
            lhs = wronskian_hermite(sets[0]);
            rhs = compose_affine(wronskian_hermite(inv[0]), -Gaussian::i(), Gaussian(0)) * i_power(w);
            rep.add(detail::degree_law(lhs, w));
            break;
        case TheoremId::MeixnerInv: {
            const Gaussian a = params.get("a"), c = params.get("c");
            const Gaussian c2 = -c - detail::gmax(sets[0]) - detail::gmax(sets[1]);
            lhs = quasi_casorati_meixner(sets[0], sets[1], a, c);
            rhs = detail::reflect(quasi_casorati_meixner(inv[0], inv[1], a, c2)) * sign_power(w);
            rep.add(detail::degree_law(lhs, w));
            break;
        }
        case TheoremId::LaguerreInv: {
            const Gaussian alpha = params.get("alpha");
            const Gaussian alpha2 = -alpha - detail::gmax(sets[0]) - detail::gmax(sets[1]) - Gaussian(2);
            lhs = quasi_wronskian_laguerre(sets[0], sets[1], alpha);
            rhs = detail::reflect(quasi_wronskian_laguerre(inv[0], inv[1], alpha2)) * sign_power(w);
            rep.add(detail::degree_law(lhs, w));
            break;
        }
        case TheoremId::HahnInv: {
            const Gaussian alpha = params.get("alpha"), beta = params.get("beta"), N = params.get("N");
            const Gaussian m1 = detail::gmax(sets[0]), m2 = detail::gmax(sets[1]), m3 = detail::gmax(sets[2]);
            const auto left = quasi_casorati_hahn(sets[0], sets[1], sets[2], alpha, beta, N);
            const auto right = quasi_casorati_hahn(inv[0], inv[1], inv[2], -alpha - m1 - m2 - Gaussian(2),
                                                   -beta - m1 + m2, -N + m1 + m3);
            if (left.degenerate || right.degenerate) {
                rep.add(detail::skipped("invariance", left.degenerate ? "d_F = 0" : "d_I(F) = 0"));
                rep.notes.push_back("degenerate normalization; the sign is undefined, comparison skipped");
                rep.settle();
                return out;
            }
            lhs = left.normalized;
            const long r = lhs.degree() ? static_cast<long>(*lhs.degree()) : 0;
            rhs = detail::reflect(right.normalized) * sign_power(r);
            if (r != w) rep.notes.push_back("degree " + std::to_string(r) + " differs from w_F = " + std::to_string(w));
            break;
        }
        case TheoremId::JacobiInv: {
            const Gaussian alpha = params.get("alpha"), beta = params.get("beta");
            const Gaussian m1 = detail::gmax(sets[0]), m2 = detail::gmax(sets[1]);
            const auto left = quasi_wronskian_jacobi(sets[0], sets[1], alpha, beta);
            const auto right =
                quasi_wronskian_jacobi(inv[0], inv[1], -alpha - m1 - m2 - Gaussian(2), -beta - m1 + m2);
            if (left.degenerate || right.degenerate) {
                rep.add(detail::skipped("invariance", left.degenerate ? "u_F = 0" : "u_I(F) = 0"));
                rep.settle();
                return out;
            }
            lhs = left.normalized;
            rhs = right.normalized;
            if (lhs.degree() != Degree(static_cast<std::size_t>(w)))
                rep.notes.push_back("degree differs from w_F = " + std::to_string(w));
            break;
        }
    }
    rep.add(detail::check_equal("invariance", lhs, rhs));
    rep.settle();
    rep.lhs = to_text(lhs);
    rep.rhs = to_text(rhs);
    out.lhs = std::move(lhs);
    out.rhs = std::move(rhs);
    return out;
}

inline VerificationReport verify_invariance(TheoremId t, const SetTuple& sets, const ParamSet& params) {
    return verify_invariance_detailed(t, sets, params).report;
}

struct SweepBounds {
    unsigned min_elem = 0;
    unsigned max_elem = 7;
    std::size_t max_size = 3;
    bool allow_empty = false;  // include empty components
};

struct SweepSummary {
    std::size_t pass = 0;
    std::size_t fail = 0;
    std::size_t skipped = 0;
    std::vector<VerificationReport> reports;  // canonical order: grid point, then set tuple

    bool ok() const noexcept { return fail == 0; }
};

/// All set tuples for the theorem within the bounds, in lexicographic order.
inline std::vector<SetTuple> sweep_tuples(TheoremId t, const SweepBounds& b) {
    const auto sets = enumerate_sets(b.min_elem, b.max_elem, b.allow_empty ? 0 : 1, b.max_size);
    std::vector<SetTuple> out{{}};
    for (std::size_t c = 0; c < component_count(t); ++c) {
        std::vector<SetTuple> next;
        for (const auto& prefix : out)
            for (const auto& F : sets) {
                auto tuple = prefix;
                tuple.push_back(F);
                next.push_back(std::move(tuple));
            }
        out = std::move(next);
    }
    return out;
}

/// Runs verify_invariance over every tuple and grid point. Cases needing the
/// maximum of an empty component are counted as skipped; errors raised by a
/// build count as failures with the error recorded.
inline SweepSummary sweep(TheoremId t, const SweepBounds& bounds, const std::vector<ParamSet>& grid,
                          unsigned workers = 0) {
    const auto tuples = sweep_tuples(t, bounds);
    const std::size_t total = tuples.size() * grid.size();
    std::vector<VerificationReport> reports(total);
    auto run = [&](std::size_t idx) {
        const auto& params = grid[idx / tuples.size()];
        const auto& sets = tuples[idx % tuples.size()];
        try {
            reports[idx] = verify_invariance(t, sets, params);
        } catch (const EmptyComponent& e) {
            VerificationReport r;
            r.theorem = std::string(to_string(t));
            r.inputs["sets"] = to_text(sets);
            r.inputs["params"] = to_text(params);
            r.status = Status::SkippedDegenerate;
            r.notes.push_back(std::string("empty component: ") + e.what());
            reports[idx] = std::move(r);
        } catch (const Error& e) {
            VerificationReport r;
            r.theorem = std::string(to_string(t));
            r.inputs["sets"] = to_text(sets);
            r.inputs["params"] = to_text(params);
            r.status = Status::Fail;
            r.lhs = "error";
            r.rhs = e.what();
            r.notes.push_back(std::string("error: ") + e.what());
            reports[idx] = std::move(r);
        }
    };
    if (workers == 0) workers = std::max(1u, std::thread::hardware_concurrency());
    if (workers <= 1 || total < 2) {
        for (std::size_t i = 0; i < total; ++i) run(i);
    } else {
        std::vector<std::thread> pool;
        for (unsigned w = 0; w < workers; ++w)
            pool.emplace_back([&, w] {
                for (std::size_t i = w; i < total; i += workers) run(i);
            });
        for (auto& th : pool) th.join();
    }
    SweepSummary s;
    for (auto& r : reports) {
        if (r.status == Status::Pass) ++s.pass;
        else if (r.status == Status::Fail) ++s.fail;
        else ++s.skipped;
    }
    s.reports = std::move(reports);
    return s;
}

}  // namespace casinv
