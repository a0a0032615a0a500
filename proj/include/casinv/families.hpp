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

#include <array>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "special.hpp"

namespace casinv {

enum class FamilyId { Charlier, Meixner, Hahn, DualHahn, Hermite, Laguerre, Jacobi };

inline constexpr std::array<FamilyId, 7> kAllFamilies = {FamilyId::Charlier, FamilyId::Meixner,
                                                         FamilyId::Hahn,     FamilyId::DualHahn,
                                                         FamilyId::Hermite,  FamilyId::Laguerre,
                                                         FamilyId::Jacobi};

inline std::string_view to_string(FamilyId id) {
    switch (id) {
        case FamilyId::Charlier:
            return "charlier";
        case FamilyId::Meixner:
            return "meixner";
        case FamilyId::Hahn:
            return "hahn";
        case FamilyId::DualHahn:
            return "dualhahn";
        case FamilyId::Hermite:
            return "hermite";
        case FamilyId::Laguerre:
            return "laguerre";
        case FamilyId::Jacobi:
            return "jacobi";
    }
    return "?";
}

inline std::optional<FamilyId> family_from_string(std::string_view name) {
    for (auto id : kAllFamilies)
        if (to_string(id) == name) return id;
    return std::nullopt;
}

/// Named parameter values; names are a, c, alpha, beta, N.
class ParamSet {
   public:
    ParamSet() = default;
    ParamSet(std::initializer_list<std::pair<const std::string, Gaussian>> init) : values_(init) {}

    ParamSet& set(const std::string& name, Gaussian value) {
        values_[name] = std::move(value);
        return *this;
    }

    bool has(const std::string& name) const { return values_.count(name) != 0; }

    const Gaussian& get(const std::string& name) const {
        auto it = values_.find(name);
        if (it == values_.end()) throw InvalidParams("missing parameter '" + name + "'");
        return it->second;
    }

    const std::map<std::string, Gaussian>& values() const noexcept { return values_; }

    friend bool operator==(const ParamSet&, const ParamSet&) = default;

   private:
    std::map<std::string, Gaussian> values_;
};

inline std::string to_text(const ParamSet& p) {
    std::string out;
    for (const auto& [k, v] : p.values()) {
        if (!out.empty()) out += ",";
        out += k + "=" + to_text(v);
    }
    return out;
}

namespace detail {

inline bool is_nonpositive_integer(const Gaussian& z) {
    return z.is_real() && z.re().get_den() == 1 && sgn(z.re()) <= 0;
}

inline bool is_negative_integer(const Gaussian& z) {
    return z.is_real() && z.re().get_den() == 1 && sgn(z.re()) < 0;
}

/// (-x)_j as a polynomial in x.
inline Poly rising_of_minus_x(std::size_t j) {
    return compose_affine(pochhammer_poly(Gaussian(0), j), Gaussian(-1), Gaussian(0));
}

inline Gaussian inv_factorial(std::size_t n) { return Gaussian(Rational(1 / factorial_q(n))); }

}  // namespace detail

// ---------------------------------------------------------------------------
// Family constructors. Each returns a polynomial of exact degree n.

/// c_n^a(x) = 1/n! sum_j (-a)^{n-j} C(n,j) x(x-1)...(x-j+1), leading coefficient 1/n!.
inline Poly charlier(std::size_t n, const Gaussian& a) {
    if (a.is_zero()) throw InvalidParams("Charlier polynomials need a != 0");
    Poly acc;
    const Gaussian minus_a = -a;
    for (std::size_t j = 0; j <= n; ++j) {
        Gaussian c = power(minus_a, static_cast<long>(n - j)) *
                     Gaussian(Rational(factorial(n) / (factorial(j) * factorial(n - j))));
        acc += falling_poly(j) * c;
    }
    return acc * detail::inv_factorial(n);
}

/// m_n^{a,c}(x) = a^n/(1-a)^n sum_j a^{-j} C(x,j) C(-x-c, n-j).
inline Poly meixner(std::size_t n, const Gaussian& a, const Gaussian& c) {
    if (a.is_zero() || a.is_one()) throw InvalidParams("Meixner polynomials need a != 0, 1");
    const Gaussian a_inv = a.inverse();
    Poly acc;
    Gaussian a_pow(1);
    for (std::size_t j = 0; j <= n; ++j) {
        // C(-x-c, r) = (-x-c)(-x-c-1)...(-x-c-r+1)/r!
        Poly reflected = compose_affine(binom_poly(n - j), Gaussian(-1), -c);
        acc += binom_poly(j) * reflected * a_pow;
        a_pow *= a_inv;
    }
    return acc * power(a / (Gaussian(1) - a), static_cast<long>(n));
}

/// h_n^{alpha,beta,N}(x) = (-N)_n (alpha+1)_n / n! 3F2(-n, -x, n+alpha+beta+1; alpha+1, -N; 1),
/// written with (-N+j)_{n-j} (alpha+1+j)_{n-j} so that no parameter appears in a denominator.
/// The degree drops below n only when alpha+beta is a negative integer.
inline Poly hahn(std::size_t n, const Gaussian& alpha, const Gaussian& beta, const Gaussian& N) {
    Poly acc;
    const Gaussian top = Gaussian(static_cast<long>(n)) + alpha + beta + Gaussian(1);
    for (std::size_t j = 0; j <= n; ++j) {
        Gaussian c = pochhammer(Gaussian(-static_cast<long>(n)), j) * pochhammer(top, j) *
                     pochhammer(-N + Gaussian(static_cast<long>(j)), n - j) *
                     pochhammer(alpha + Gaussian(static_cast<long>(j + 1)), n - j) * detail::inv_factorial(j);
        if (c.is_zero()) continue;
        acc += detail::rising_of_minus_x(j) * c;
    }
    return acc * detail::inv_factorial(n);
}

/// R_n^{alpha,beta,N}(x), x standing for lambda(x) = x(x+alpha+beta+1).
inline Poly dual_hahn(std::size_t n, const Gaussian& alpha, const Gaussian& beta, const Gaussian& N) {
    if (detail::is_negative_integer(alpha)) throw InvalidParams("dual Hahn polynomials need alpha != -1, -2, ...");
    Poly acc;
    Poly product(1);  // prod_{i<j} (x - i(alpha+beta+1+i))
    const Gaussian s = alpha + beta + Gaussian(1);
    for (std::size_t j = 0; j <= n; ++j) {
        if (j > 0) {
            const Gaussian i(static_cast<long>(j - 1));
            product *= Poly{-(i * (s + i)), Gaussian(1)};
        }
        Gaussian c = pochhammer(Gaussian(-static_cast<long>(n)), j) *
                     pochhammer(-N + Gaussian(static_cast<long>(j)), n - j) *
                     pochhammer(alpha + Gaussian(static_cast<long>(j + 1)), n - j) * detail::inv_factorial(j) *
                     sign_power(static_cast<long>(j));
        if (c.is_zero()) continue;
        acc += product * c;
    }
    return acc * detail::inv_factorial(n);
}

/// H_n(x) = n! sum_j (-1)^j (2x)^{n-2j} / (j! (n-2j)!)
inline Poly hermite(std::size_t n) {
    std::vector<Gaussian> coeffs(n + 1, Gaussian(0));
    for (std::size_t j = 0; 2 * j <= n; ++j) {
        Integer num = factorial(n);
        num <<= static_cast<mp_bitcnt_t>(n - 2 * j);
        Rational c(num, factorial(j) * factorial(n - 2 * j));
        c.canonicalize();
        if (j % 2) c = -c;
        coeffs[n - 2 * j] = Gaussian(c);
    }
    return Poly(std::move(coeffs));
}

/// L_n^alpha(x) = sum_j (-1)^j (alpha+j+1)_{n-j} / ((n-j)! j!) x^j
inline Poly laguerre(std::size_t n, const Gaussian& alpha) {
    std::vector<Gaussian> coeffs(n + 1, Gaussian(0));
    for (std::size_t j = 0; j <= n; ++j) {
        coeffs[j] = pochhammer(alpha + Gaussian(static_cast<long>(j + 1)), n - j) * sign_power(static_cast<long>(j)) *
                    Gaussian(Rational(1 / (factorial_q(n - j) * factorial_q(j))));
    }
    return Poly(std::move(coeffs));
}

/// P_n^{alpha,beta}(x) = sum_s (alpha+s+1)_{n-s}/(n-s)! (beta+n-s+1)_s/s! ((x-1)/2)^s ((x+1)/2)^{n-s}
inline Poly jacobi(std::size_t n, const Gaussian& alpha, const Gaussian& beta) {
    const Poly xm = Poly{g(-1, 2), g(1, 2)};
    const Poly xp = Poly{g(1, 2), g(1, 2)};
    std::vector<Poly> xm_pow{Poly(1)}, xp_pow{Poly(1)};
    for (std::size_t k = 0; k < n; ++k) {
        xm_pow.push_back(xm_pow.back() * xm);
        xp_pow.push_back(xp_pow.back() * xp);
    }
    Poly acc;
    for (std::size_t s = 0; s <= n; ++s) {
        Gaussian c = pochhammer(alpha + Gaussian(static_cast<long>(s + 1)), n - s) * detail::inv_factorial(n - s) *
                     pochhammer(beta + Gaussian(static_cast<long>(n - s + 1)), s) * detail::inv_factorial(s);
        if (c.is_zero()) continue;
        acc += xm_pow[s] * xp_pow[n - s] * c;
    }
    return acc;
}

/// lambda^{alpha,beta}(x) = x(x+alpha+beta+1)
inline Poly lambda_map(const Gaussian& alpha, const Gaussian& beta) {
    return Poly{Gaussian(0), alpha + beta + Gaussian(1), Gaussian(1)};
}

inline Gaussian lambda_value(const Gaussian& alpha, const Gaussian& beta, const Gaussian& x) {
    return x * (x + alpha + beta + Gaussian(1));
}

/// Checks the per-family parameter preconditions; throws InvalidParams.
inline void validate_params(FamilyId id, const ParamSet& p) {
    switch (id) {
        case FamilyId::Charlier:
            if (p.get("a").is_zero()) throw InvalidParams("Charlier: a must be nonzero");
            return;
        case FamilyId::Meixner: {
            const auto& a = p.get("a");
            p.get("c");
            if (a.is_zero() || a.is_one()) throw InvalidParams("Meixner: a must differ from 0 and 1");
            return;
        }
        case FamilyId::Hahn:
            p.get("N");
            if (detail::is_negative_integer(p.get("alpha") + p.get("beta")))
                throw InvalidParams("Hahn: alpha+beta must not be a negative integer");
            return;
        case FamilyId::DualHahn:
            p.get("beta");
            p.get("N");
            if (detail::is_negative_integer(p.get("alpha")))
                throw InvalidParams("dual Hahn: alpha must not be a negative integer");
            return;
        case FamilyId::Hermite:
            return;
        case FamilyId::Laguerre:
            p.get("alpha");
            return;
        case FamilyId::Jacobi:
            p.get("alpha");
            p.get("beta");
            return;
    }
}

inline Poly family_poly(FamilyId id, std::size_t n, const ParamSet& p) {
    validate_params(id, p);
    switch (id) {
        case FamilyId::Charlier:
            return charlier(n, p.get("a"));
        case FamilyId::Meixner:
            return meixner(n, p.get("a"), p.get("c"));
        case FamilyId::Hahn:
            return hahn(n, p.get("alpha"), p.get("beta"), p.get("N"));
        case FamilyId::DualHahn:
            return dual_hahn(n, p.get("alpha"), p.get("beta"), p.get("N"));
        case FamilyId::Hermite:
            return hermite(n);
        case FamilyId::Laguerre:
            return laguerre(n, p.get("alpha"));
        case FamilyId::Jacobi:
            return jacobi(n, p.get("alpha"), p.get("beta"));
    }
    throw InvalidParams("unknown family");
}

}  // namespace casinv
