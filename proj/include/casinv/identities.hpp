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
 * Structural identities of the families: recurrences, difference and
 * differential ladders, reflections and dualities. Polynomial identities
 * are compared coefficientwise, dualities as exact scalars over the grid
 * 0 <= n, m <= n_max.
 */

#include <functional>
#include <string>

#include "checks.hpp"
#include "families.hpp"
#include "report.hpp"

namespace casinv {

namespace detail {

inline Gaussian gl(std::size_t v) { return Gaussian(static_cast<long>(v)); }

/// Folds one identity over an index range into a single check; the first
/// failing index is reported as the witness.
inline CheckEntry identity_over(std::string name, std::size_t count,
                                const std::function<CheckEntry(std::size_t)>& at) {
    for (std::size_t i = 0; i < count; ++i) {
        auto e = at(i);
        if (e.status == Status::Fail) {
            e.note = name + " fails at " + e.name;
            e.name = name;
            return e;
        }
    }
    CheckEntry ok;
    ok.name = std::move(name);
    return ok;
}

inline CheckEntry duality_over(std::string name, std::size_t n_max,
                               const std::function<std::pair<Gaussian, Gaussian>(std::size_t, std::size_t)>& sides) {
    const std::size_t side = n_max + 1;
    return identity_over(std::move(name), side * side, [&](std::size_t idx) {
        const std::size_t n = idx / side, m = idx % side;
        auto [l, r] = sides(n, m);
        return check_equal("n=" + std::to_string(n) + ",m=" + std::to_string(m), l, r);
    });
}

/// The terminating sum (-N)_n (alpha+1)_n / n! 3F2(-n, -x, x+alpha+beta+1; alpha+1, -N; 1) as a
/// polynomial in x, with (-N)_n/(-N)_j written as (-N+j)_{n-j}.
inline Poly dual_hahn_hypergeometric(std::size_t n, const Gaussian& alpha, const Gaussian& beta, const Gaussian& N) {
    Poly acc;
    const Gaussian s = alpha + beta + Gaussian(1);
    for (std::size_t j = 0; j <= n; ++j) {
        Gaussian c = pochhammer(Gaussian(-static_cast<long>(n)), j) * pochhammer(-N + gl(j), n - j) *
                     pochhammer(alpha + gl(j + 1), n - j) * inv_factorial(j) * inv_factorial(n);
        if (c.is_zero()) continue;
        acc += rising_of_minus_x(j) * pochhammer_poly(s, j) * c;
    }
    return acc;
}

}  // namespace detail

/// Checks every structural identity recorded for the family, for indices up to n_max.
inline VerificationReport family_identity_check(FamilyId id, const ParamSet& params, std::size_t n_max) {
    validate_params(id, params);
    VerificationReport rep;
    rep.theorem = "identities:" + std::string(to_string(id));
    rep.inputs["params"] = to_text(params);
    rep.inputs["n_max"] = std::to_string(n_max);
    using detail::gl;
    const Poly X = Poly::x();
    auto p = [&](std::size_t n) { return family_poly(id, n, params); };

    switch (id) {
        case FamilyId::Charlier: {
            const Gaussian a = params.get("a");
            rep.add(detail::identity_over("three-term recurrence", n_max + 1, [&](std::size_t n) {
                Poly rhs = p(n + 1) * gl(n + 1) + p(n) * (gl(n) + a);
                if (n > 0) rhs += p(n - 1) * a;
                return detail::check_equal("n=" + std::to_string(n), X * p(n), rhs);
            }));
            rep.add(detail::identity_over("difference equation", n_max + 1, [&](std::size_t n) {
                const Poly c = p(n);
                Poly lhs = -(X * shift(c, Gaussian(-1))) + Poly{a, Gaussian(1)} * c - shift(c, Gaussian(1)) * a;
                return detail::check_equal("n=" + std::to_string(n), lhs, c * gl(n));
            }));
            rep.add(detail::identity_over("forward difference ladder", n_max + 1, [&](std::size_t n) {
                return detail::check_equal("n=" + std::to_string(n), delta(p(n)), n ? p(n - 1) : Poly{});
            }));
            rep.add(detail::duality_over("duality", n_max, [&](std::size_t n, std::size_t m) {
                Gaussian l = power(-a, static_cast<long>(m)) * Gaussian(factorial_q(n)) * p(n).eval(gl(m));
                Gaussian r = power(-a, static_cast<long>(n)) * Gaussian(factorial_q(m)) * p(m).eval(gl(n));
                return std::make_pair(l, r);
            }));
            break;
        }
        case FamilyId::Meixner: {
            const Gaussian a = params.get("a"), c = params.get("c");
            rep.add(detail::identity_over("reflection", n_max + 1, [&](std::size_t n) {
                Poly rhs = compose_affine(meixner(n, a.inverse(), c), Gaussian(-1), -c) * sign_power(static_cast<long>(n));
                return detail::check_equal("n=" + std::to_string(n), p(n), rhs);
            }));
            if (c.is_zero()) {
                rep.add({"duality", Status::SkippedDegenerate, "", "", "(1+c)_{-1} needs c != 0"});
                break;
            }
            rep.add(detail::duality_over("duality", n_max, [&](std::size_t n, std::size_t m) {
                const long diff = static_cast<long>(m) - static_cast<long>(n);
                Gaussian l = power(a, diff) * Gaussian(factorial_q(n)) *
                             pochhammer_signed(Gaussian(1) + c, static_cast<long>(m) - 1) * p(n).eval(gl(m));
                Gaussian r = power(a - Gaussian(1), diff) * Gaussian(factorial_q(m)) *
                             pochhammer_signed(Gaussian(1) + c, static_cast<long>(n) - 1) * p(m).eval(gl(n));
                return std::make_pair(l, r);
            }));
            break;
        }
        case FamilyId::Hermite:
            rep.add(detail::identity_over("derivative ladder", n_max + 1, [&](std::size_t n) {
                return detail::check_equal("n=" + std::to_string(n), derivative(p(n)),
                                             n ? p(n - 1) * gl(2 * n) : Poly{});
            }));
            break;
        case FamilyId::Hahn:
        case FamilyId::DualHahn: {
            const Gaussian alpha = params.get("alpha"), beta = params.get("beta"), N = params.get("N");
            if (id == FamilyId::DualHahn) {
                rep.add(detail::identity_over("hypergeometric representation", n_max + 1, [&](std::size_t n) {
                    const Poly r = p(n);
                    const Poly lam = lambda_map(alpha, beta);
                    Poly composed, lam_pow(1);
                    for (const auto& c : r.coeffs()) {
                        composed += lam_pow * c;
                        lam_pow *= lam;
                    }
                    return detail::check_equal("n=" + std::to_string(n), composed,
                                                 detail::dual_hahn_hypergeometric(n, alpha, beta, N));
                }));
            }
            if (detail::is_negative_integer(alpha)) {
                rep.add({"duality", Status::SkippedDegenerate, "", "", "dual family needs alpha not a negative integer"});
                break;
            }
            rep.add(detail::duality_over("duality", n_max, [&](std::size_t n, std::size_t m) {
                auto scale = [&](std::size_t j) {
                    return pochhammer(-N, j) * pochhammer(alpha + Gaussian(1), j) * detail::inv_factorial(j);
                };
                Gaussian l = scale(m) * hahn(n, alpha, beta, N).eval(gl(m));
                Gaussian r = scale(n) * dual_hahn(m, alpha, beta, N).eval(lambda_value(alpha, beta, gl(n)));
                return std::make_pair(l, r);
            }));
            break;
        }
        case FamilyId::Laguerre: {
            const Gaussian alpha = params.get("alpha");
            rep.add(detail::identity_over("derivative ladder", n_max + 1, [&](std::size_t n) {
                return detail::check_equal("n=" + std::to_string(n), derivative(p(n)),
                                             n ? -laguerre(n - 1, alpha + Gaussian(1)) : Poly{});
            }));
            break;
        }
        case FamilyId::Jacobi: {
            const Gaussian alpha = params.get("alpha"), beta = params.get("beta");
            rep.add(detail::identity_over("derivative ladder", n_max + 1, [&](std::size_t n) {
                Poly rhs;
                if (n)
                    rhs = jacobi(n - 1, alpha + Gaussian(1), beta + Gaussian(1)) *
                          ((gl(n) + alpha + beta + Gaussian(1)) * g(1, 2));
                return detail::check_equal("n=" + std::to_string(n), derivative(p(n)), rhs);
            }));
            rep.add(detail::identity_over("reflection", n_max + 1, [&](std::size_t n) {
                Poly rhs = jacobi(n, beta, alpha) * sign_power(static_cast<long>(n));
                return detail::check_equal("n=" + std::to_string(n), compose_affine(p(n), Gaussian(-1), Gaussian(0)),
                                             rhs);
            }));
            break;
        }
    }
    rep.settle();
    return rep;
}

}  // namespace casinv
