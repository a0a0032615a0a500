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
 * The Casoratian and Wronskian builders. Row indices run over the
 * components of the set tuple in order, column index j from 0 to k-1.
 * Hahn and Jacobi builders divide by their prescribed polynomial after
 * the determinant is formed, so a nonzero remainder is always reported.
 */

#include <cstddef>
#include <vector>

#include "determinant.hpp"
#include "families.hpp"
#include "sets.hpp"

namespace casinv {

/// A determinant together with its normalization by a prescribed
/// leading-coefficient formula.
struct BuilderResult {
    Poly raw;
    Poly normalized;
    Gaussian prescribed_leading;
    bool degenerate = false;
};

namespace detail {

inline long choose2(std::size_t k) { return k ? static_cast<long>(k * (k - 1) / 2) : 0; }

inline Gaussian gauss(const Integer& v) { return Gaussian(Rational(v)); }

inline BuilderResult normalize(Poly raw, Gaussian lead) {
    BuilderResult out;
    out.prescribed_leading = lead;
    if (lead.is_zero()) {
        out.degenerate = true;
        out.normalized = Poly(1);
    } else {
        out.normalized = raw * lead.inverse();
    }
    out.raw = std::move(raw);
    return out;
}

}  // namespace detail

/// |c^a_{f_i}(x+j)|, cross-checked against the index-shifted form |c^a_{f_i-j}(x)|.
inline Poly casorati_charlier(const FiniteSet& F, const Gaussian& a) {
    if (a.is_zero()) throw InvalidParams("Charlier: a must be nonzero");
    const std::size_t k = F.size();
    if (k == 0) return Poly(1);
    PolyMatrix shifted(k, k), lowered(k, k);
    for (std::size_t i = 0; i < k; ++i) {
        const Poly base = charlier(F[i], a);
        for (std::size_t j = 0; j < k; ++j) {
            shifted(i, j) = shift(base, Gaussian(static_cast<long>(j)));
            if (j <= F[i]) lowered(i, j) = charlier(F[i] - j, a);
        }
    }
    Poly out = det_exact(shifted);
    if (!(out == det_exact(lowered)))
        throw InternalInconsistency("Casorati-Charlier determinant differs from its index-shifted form for F=" +
                                    to_text(F));
    return out;
}

/// The scalar |c^a_{f_i}(x0+j)|, i.e. casorati_charlier(F, a) evaluated at x0
/// without forming the polynomial.
inline Gaussian casorati_charlier_at(const FiniteSet& F, const Gaussian& a, const Gaussian& x0) {
    if (a.is_zero()) throw InvalidParams("Charlier: a must be nonzero");
    const std::size_t k = F.size();
    ScalarMatrix m(k * k);
    for (std::size_t i = 0; i < k; ++i) {
        const Poly base = charlier(F[i], a);
        for (std::size_t j = 0; j < k; ++j) m[i * k + j] = base.eval(x0 + Gaussian(static_cast<long>(j)));
    }
    return scalar_det(std::move(m), k);
}

/// Wronskian of Hermite polynomials normalized by 2^{C(k,2)} prod f!.
inline Poly wronskian_hermite(const FiniteSet& F) {
    const std::size_t k = F.size();
    if (k == 0) return Poly(1);
    PolyMatrix M(k, k);
    for (std::size_t i = 0; i < k; ++i) {
        const Poly base = hermite(F[i]);
        for (std::size_t j = 0; j < k; ++j) M(i, j) = derivative(base, j);
    }
    Rational scale(Integer(1) << static_cast<mp_bitcnt_t>(detail::choose2(k)));
    scale *= Rational(factorial_product(F));
    return det_exact(M) * Gaussian(Rational(1 / scale));
}

/// Quasi Casoratian of Meixner polynomials: rows m^{a,c}_f(x+j) for F1 and
/// m^{1/a,c}_f(x+j)/a^j for F2, divided by a^{C(k2,2)-k2(k-1)} (1-a)^{k1 k2}.
inline Poly quasi_casorati_meixner(const FiniteSet& F1, const FiniteSet& F2, const Gaussian& a, const Gaussian& c) {
    if (a.is_zero() || a.is_one()) throw InvalidParams("Meixner: a must differ from 0 and 1");
    const std::size_t k1 = F1.size(), k2 = F2.size(), k = k1 + k2;
    if (k == 0) return Poly(1);
    const Gaussian a_inv = a.inverse();
    PolyMatrix M(k, k);
    for (std::size_t i = 0; i < k1; ++i) {
        const Poly base = meixner(F1[i], a, c);
        for (std::size_t j = 0; j < k; ++j) M(i, j) = shift(base, Gaussian(static_cast<long>(j)));
    }
    for (std::size_t i = 0; i < k2; ++i) {
        const Poly base = meixner(F2[i], a_inv, c);
        for (std::size_t j = 0; j < k; ++j)
            M(k1 + i, j) = shift(base, Gaussian(static_cast<long>(j))) * power(a_inv, static_cast<long>(j));
    }
    const long a_exp = detail::choose2(k2) - static_cast<long>(k2 * (k - 1));
    const Gaussian scale = power(a, a_exp) * power(Gaussian(1) - a, static_cast<long>(k1 * k2));
    return det_exact(M) * scale.inverse();
}

/// (-1)^{sum F1} times the quasi Wronskian with rows (L^alpha_f)^{(j)}(x) for F1
/// and L^{alpha+j}_f(-x) for F2.
inline Poly quasi_wronskian_laguerre(const FiniteSet& F1, const FiniteSet& F2, const Gaussian& alpha) {
    const std::size_t k1 = F1.size(), k2 = F2.size(), k = k1 + k2;
    if (k == 0) return Poly(1);
    PolyMatrix M(k, k);
    long sum1 = 0;
    for (std::size_t i = 0; i < k1; ++i) {
        sum1 += F1[i];
        const Poly base = laguerre(F1[i], alpha);
        for (std::size_t j = 0; j < k; ++j) M(i, j) = derivative(base, j);
    }
    for (std::size_t i = 0; i < k2; ++i)
        for (std::size_t j = 0; j < k; ++j)
            M(k1 + i, j) = compose_affine(laguerre(F2[i], alpha + Gaussian(static_cast<long>(j))), Gaussian(-1),
                                          Gaussian(0));
    return det_exact(M) * sign_power(sum1);
}

/// Leading coefficient d_F predicted for the quasi Casorati-Hahn determinant.
inline Gaussian hahn_leading(const FiniteSet& F1, const FiniteSet& F2, const FiniteSet& F3, const Gaussian& alpha,
                             const Gaussian& beta, const Gaussian& N) {
    const long k1 = static_cast<long>(F1.size()), k2 = static_cast<long>(F2.size()),
               k3 = static_cast<long>(F3.size());
    Gaussian acc = sign_power(k1 * k2 + k1 * k3 + k2 * k3);
    const Gaussian one(1);
    const Gaussian eta[3] = {alpha + beta + one, alpha - beta + one, -alpha - beta - Gaussian(2) * N - one};
    const FiniteSet* comps[3] = {&F1, &F2, &F3};
    for (int s = 0; s < 3; ++s) {
        acc *= detail::gauss(vandermonde(*comps[s]));
        for (auto f : *comps[s])
            acc *= pochhammer(Gaussian(static_cast<long>(f)) + eta[s], f) * detail::inv_factorial(f);
    }
    for (auto u : F1)
        for (auto v : F2) acc *= beta + Gaussian(static_cast<long>(u) - static_cast<long>(v));
    for (auto u : F1)
        for (auto w : F3) acc *= alpha + beta + N + one + Gaussian(static_cast<long>(u) - static_cast<long>(w));
    for (auto v : F2)
        for (auto w : F3) acc *= N + alpha + one + Gaussian(static_cast<long>(v) - static_cast<long>(w));
    return acc;
}

/// Quasi Casorati-Hahn determinant, divided exactly by
/// prod_s prod_{i=0}^{kt_s-2} (xi_s+x+i)^{kt_s-i-1}, then normalized by d_F.
inline BuilderResult quasi_casorati_hahn(const FiniteSet& F1, const FiniteSet& F2, const FiniteSet& F3,
                                         const Gaussian& alpha, const Gaussian& beta, const Gaussian& N) {
    const std::size_t k1 = F1.size(), k2 = F2.size(), k3 = F3.size(), k = k1 + k2 + k3;
    const Gaussian lead = hahn_leading(F1, F2, F3, alpha, beta, N);
    if (k == 0) return detail::normalize(Poly(1), lead);
    const Gaussian one(1);
    const Gaussian xi_alpha = alpha + one, xi_n = -N, xi_beta = -beta - N;
    PolyMatrix M(k, k);
    auto fill = [&](std::size_t row0, const FiniteSet& F, const Gaussian& s1, const Gaussian& s2, const Gaussian& pa,
                    const Gaussian& pb, const Gaussian& pn) {
        for (std::size_t i = 0; i < F.size(); ++i) {
            const Poly base = hahn(F[i], pa, pb, pn);
            for (std::size_t j = 0; j < k; ++j)
                M(row0 + i, j) = pochhammer_poly(s1, j) * pochhammer_poly(s2, j) *
                                 shift(base, Gaussian(static_cast<long>(j)));
        }
    };
    fill(0, F1, xi_alpha, xi_n, alpha, beta, N);
    fill(k1, F2, xi_alpha, xi_beta, alpha, -beta, beta + N);
    fill(k1 + k2, F3, xi_n, xi_beta, -beta - N - one, -alpha - N - one, N);

    Poly divisor(1);
    const std::pair<std::size_t, Gaussian> blocks[3] = {{k1 + k2, xi_alpha}, {k1 + k3, xi_n}, {k2 + k3, xi_beta}};
    for (const auto& [kt, xi] : blocks)
        for (std::size_t i = 0; i + 1 < kt; ++i) {
            const Poly factor{xi + Gaussian(static_cast<long>(i)), one};
            for (std::size_t e = 0; e < kt - i - 1; ++e) divisor *= factor;
        }
    return detail::normalize(exact_div(det_exact(M), divisor), lead);
}

/// Leading coefficient u_F predicted for the quasi Wronskian of Jacobi polynomials.
inline Gaussian jacobi_leading(const FiniteSet& F1, const FiniteSet& F2, const Gaussian& alpha, const Gaussian& beta) {
    Gaussian num = detail::gauss(vandermonde(F1) * vandermonde(F2));
    const Gaussian one(1);
    long exp2 = 0;
    Integer facts = factorial_product(F1) * factorial_product(F2);
    for (auto f : F1) {
        num *= pochhammer(alpha + beta + Gaussian(static_cast<long>(f)) + one, f);
        exp2 += f;
    }
    for (auto f : F2) {
        num *= pochhammer(alpha - beta + Gaussian(static_cast<long>(f)) + one, f);
        exp2 += f;
    }
    for (auto u : F1)
        for (auto v : F2) num *= beta + Gaussian(static_cast<long>(u) - static_cast<long>(v));
    Rational den(Integer(facts) << static_cast<mp_bitcnt_t>(exp2));
    Gaussian out = num * Gaussian(Rational(1 / den));
    return out * sign_power(detail::choose2(F1.size()) + detail::choose2(F2.size()));
}

/// Quasi Wronskian of Jacobi polynomials divided exactly by (1+x)^{k2(k2-1)},
/// then normalized by u_F.
inline BuilderResult quasi_wronskian_jacobi(const FiniteSet& F1, const FiniteSet& F2, const Gaussian& alpha,
                                            const Gaussian& beta) {
    const std::size_t k1 = F1.size(), k2 = F2.size(), k = k1 + k2;
    const Gaussian lead = jacobi_leading(F1, F2, alpha, beta);
    if (k == 0) return detail::normalize(Poly(1), lead);
    const Poly one_plus_x{Gaussian(1), Gaussian(1)};
    std::vector<Poly> opx_pow{Poly(1)};
    for (std::size_t e = 1; e < k; ++e) opx_pow.push_back(opx_pow.back() * one_plus_x);
    PolyMatrix M(k, k);
    for (std::size_t i = 0; i < k1; ++i) {
        const Poly base = jacobi(F1[i], alpha, beta);
        for (std::size_t j = 0; j < k; ++j) M(i, j) = derivative(base, j) * sign_power(static_cast<long>(j));
    }
    for (std::size_t i = 0; i < k2; ++i) {
        const Gaussian f(static_cast<long>(F2[i]));
        for (std::size_t j = 0; j < k; ++j) {
            const Gaussian jj(static_cast<long>(j));
            M(k1 + i, j) = opx_pow[k - 1 - j] * jacobi(F2[i], alpha + jj, -beta - jj) * pochhammer(beta - f, j);
        }
    }
    Poly divisor(1);
    for (long e = 0; e < 2 * detail::choose2(k2); ++e) divisor *= one_plus_x;
    return detail::normalize(exact_div(det_exact(M), divisor), lead);
}

/// Phi_n = |c^a_{n+j}(f_i)|.
inline Gaussian phi_charlier(const FiniteSet& F, const Gaussian& a, std::size_t n) {
    if (a.is_zero()) throw InvalidParams("Charlier: a must be nonzero");
    const std::size_t k = F.size();
    ScalarMatrix m(k * k);
    for (std::size_t j = 0; j < k; ++j) {
        const Poly p = charlier(n + j, a);
        for (std::size_t i = 0; i < k; ++i) m[i * k + j] = p.eval(Gaussian(static_cast<long>(F[i])));
    }
    return scalar_det(std::move(m), k);
}

/// Checks C^a_F(n) = prod_{i<k} (n+i)! / ((-a)^{kn-w_F} prod f!) * Phi_n.
inline bool phi_bridge_holds(const FiniteSet& F, const Gaussian& a, std::size_t n) {
    const std::size_t k = F.size();
    const Gaussian lhs = casorati_charlier(F, a).eval(Gaussian(static_cast<long>(n)));
    Integer num = 1;
    for (std::size_t i = 0; i < k; ++i) num *= factorial(n + i);
    const long e = static_cast<long>(k * n) - weight(F);
    Gaussian rhs = detail::gauss(num) * power(-a, -e) * Gaussian(Rational(Rational(1) / Rational(factorial_product(F))));
    return lhs == rhs * phi_charlier(F, a, n);
}

}  // namespace casinv
