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
 * Limit transitions between families, checked by exact evaluation at a
 * rational probe point for a sequence of scale parameters t:
 *
 *   CharlierToHermite, WronskianLimitCH   a = 2 t^2 (so sqrt(2a) = 2t)
 *   MeixnerToLaguerre, WronskianLimitML   a = 1 - 1/t
 *   HahnToJacobi, HahnDegenerate          N = t
 *
 * The relative error against the limit must shrink by a factor of at least
 * 5 between consecutive scale points and end below 1e-3.
 */

#include <optional>
#include <string>
#include <vector>

#include "builders.hpp"
#include "checks.hpp"

namespace casinv {

enum class LimitKind {
    CharlierToHermite,
    MeixnerToLaguerre,
    HahnToJacobi,
    HahnDegenerate,
    WronskianLimitCH,
    WronskianLimitML
};

inline constexpr std::array<LimitKind, 6> kAllLimits = {
    LimitKind::CharlierToHermite, LimitKind::MeixnerToLaguerre, LimitKind::HahnToJacobi,
    LimitKind::HahnDegenerate,    LimitKind::WronskianLimitCH,  LimitKind::WronskianLimitML};

inline std::string_view to_string(LimitKind k) {
    switch (k) {
        case LimitKind::CharlierToHermite:
            return "charlier-hermite";
        case LimitKind::MeixnerToLaguerre:
            return "meixner-laguerre";
        case LimitKind::HahnToJacobi:
            return "hahn-jacobi";
        case LimitKind::HahnDegenerate:
            return "hahn-degenerate";
        case LimitKind::WronskianLimitCH:
            return "casoratian-wronskian-hermite";
        case LimitKind::WronskianLimitML:
            return "casoratian-wronskian-laguerre";
    }
    return "unknown";
}

inline std::optional<LimitKind> limit_from_string(std::string_view name) {
    for (auto k : kAllLimits)
        if (to_string(k) == name) return k;
    return std::nullopt;
}

struct LimitOptions {
    std::size_t n = 3;
    SetTuple sets = {FiniteSet{1, 2}};  // Wronskian kinds; a missing F2 is empty
    Rational probe{1, 3};
    Rational c{5, 3};      // Meixner kinds
    Rational alpha{1, 3};  // Hahn kinds
    Rational beta{1, 5};
    Rational y{1, 2};  // HahnDegenerate shift
};

/// Value of the scaled expression and of its limit at the probe.
struct LimitSample {
    Gaussian value;
    Gaussian target;
};

inline LimitSample limit_sample(LimitKind kind, const Rational& t, const LimitOptions& o) {
    const Gaussian x(o.probe), tg(t), one(1), two(2);
    const auto n = o.n;
    auto set_at = [&](std::size_t i) { return i < o.sets.size() ? o.sets[i] : FiniteSet{}; };
    switch (kind) {
        case LimitKind::CharlierToHermite: {
            const Gaussian a = two * tg * tg;
            const Gaussian v = power(tg, -static_cast<long>(n)) * charlier(n, a).eval(two * tg * x + a);
            return {v, hermite(n).eval(x) * detail::inv_factorial(n)};
        }
        case LimitKind::WronskianLimitCH: {
            const FiniteSet F = set_at(0);
            const Gaussian a = two * tg * tg;
            const Gaussian v = power(tg, -weight(F)) * casorati_charlier_at(F, a, two * tg * x + a);
            return {v, wronskian_hermite(F).eval(x)};
        }
        case LimitKind::MeixnerToLaguerre: {
            const Gaussian a = one - tg.inverse(), c(o.c);
            const Gaussian v = power(a - one, static_cast<long>(n)) * meixner(n, a, c).eval(x * tg);
            return {v, laguerre(n, c - one).eval(x)};
        }
        case LimitKind::WronskianLimitML: {
            const FiniteSet F1 = set_at(0), F2 = set_at(1);
            const Gaussian a = one - tg.inverse(), c(o.c);
            const long w = weight(F1) + weight(F2);
            const Gaussian v = power(tg.inverse(), w) * quasi_casorati_meixner(F1, F2, a, c).eval(x * tg);
            return {v, quasi_wronskian_laguerre(F1, F2, c - one).eval(x)};
        }
        case LimitKind::HahnToJacobi: {
            const Gaussian alpha(o.alpha), beta(o.beta);
            const Gaussian at = (one - x) * tg / two;
            const Gaussian v = hahn(n, alpha, beta, tg).eval(at) / pochhammer(-tg, n);
            return {v, jacobi(n, alpha, beta).eval(x)};
        }
        case LimitKind::HahnDegenerate: {
            const Gaussian alpha(o.alpha), beta(o.beta);
            const Gaussian at = (one - x) * tg / two + Gaussian(o.y);
            const Gaussian v =
                hahn(n, -beta - tg - one, -alpha - tg - one, tg).eval(at) / pochhammer(-tg, 2 * n);
            return {v, power(x, static_cast<long>(n)) * detail::inv_factorial(n)};
        }
    }
    throw InvalidParams("unknown limit");
}

/// Squared relative error |v - T|^2 / |T|^2 (absolute when T = 0).
inline Rational squared_relative_error(const LimitSample& s) {
    const Rational err = (s.value - s.target).norm();
    const Rational ref = s.target.norm();
    return sgn(ref) == 0 ? err : Rational(err / ref);
}

inline std::string error_text(const Rational& squared) {
    if (sgn(squared) == 0) return "0";
    mpf_class f(squared, 128);
    f = sqrt(f);
    mp_exp_t exp = 0;
    std::string mant = f.get_str(exp, 10, 4);
    std::string out = mant.substr(0, 1);
    if (mant.size() > 1) out += "." + mant.substr(1);
    return out + "e" + std::to_string(static_cast<long>(exp) - 1);
}

inline VerificationReport verify_limit(LimitKind kind, const std::vector<Rational>& scales, const LimitOptions& o = {}) {
    if (scales.empty()) throw InvalidParams("at least one scale point is needed");
    for (const auto& t : scales)
        if (sgn(t) <= 0) throw InvalidParams("scale points must be positive");
    if ((kind == LimitKind::MeixnerToLaguerre || kind == LimitKind::WronskianLimitML))
        for (const auto& t : scales)
            if (t <= 1) throw InvalidParams("Meixner limits need scale t > 1 (a = 1 - 1/t in (0,1))");
    VerificationReport rep;
    rep.theorem = "limit:" + std::string(to_string(kind));
    rep.inputs["probe"] = to_text(o.probe);
    if (kind == LimitKind::WronskianLimitCH || kind == LimitKind::WronskianLimitML)
        rep.inputs["sets"] = to_text(o.sets);
    else
        rep.inputs["n"] = std::to_string(o.n);
    if (kind == LimitKind::MeixnerToLaguerre || kind == LimitKind::WronskianLimitML) rep.inputs["c"] = to_text(o.c);
    if (kind == LimitKind::HahnToJacobi || kind == LimitKind::HahnDegenerate) {
        rep.inputs["alpha"] = to_text(o.alpha);
        rep.inputs["beta"] = to_text(o.beta);
    }
    if (kind == LimitKind::HahnDegenerate) rep.inputs["y"] = to_text(o.y);
    std::string scale_text;
    for (const auto& t : scales) scale_text += (scale_text.empty() ? "" : ",") + to_text(t);
    rep.inputs["scales"] = scale_text;

    std::vector<Rational> errs;
    for (const auto& t : scales) {
        const auto s = limit_sample(kind, t, o);
        errs.push_back(squared_relative_error(s));
        CheckEntry e{"t=" + to_text(t), Status::Pass, to_scientific(s.value.re()), to_scientific(s.target.re()),
                     "relative error " + error_text(errs.back())};
        rep.add(std::move(e));
    }
    for (std::size_t i = 0; i + 1 < errs.size(); ++i) {
        // factor 5 in the error is factor 25 in its square
        const bool ok = errs[i] >= 25 * errs[i + 1];
        CheckEntry e{"decrease t=" + to_text(scales[i]) + " to t=" + to_text(scales[i + 1]),
                     ok ? Status::Pass : Status::Fail, error_text(errs[i]), error_text(errs[i + 1]), ""};
        rep.add(std::move(e));
    }
    const bool final_ok = errs.back() < Rational(1, 1000000);
    rep.add({"final error below 1e-3", final_ok ? Status::Pass : Status::Fail, error_text(errs.back()), "1e-3", ""});
    rep.settle();
    return rep;
}

}  // namespace casinv
