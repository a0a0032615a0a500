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

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <optional>
#include <ostream>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

#include "gaussian.hpp"

namespace casinv {

inline bool is_zero(const Rational& r) { return sgn(r) == 0; }
inline bool is_zero(const Gaussian& z) { return z.is_zero(); }

/// Degree of a polynomial; std::nullopt stands for the degree of the
/// zero polynomial (minus infinity).
using Degree = std::optional<std::size_t>;

/*
 * Dense univariate polynomial over an exact field. Coefficients are
 * stored by increasing power with trailing zeros removed, so the zero
 * polynomial is the empty vector and equality is coefficientwise.
 */
template <class F>
class Polynomial {
   public:
    using field_type = F;

    Polynomial() = default;
    Polynomial(const F& constant) {
        if (!casinv::is_zero(constant)) coeffs_.push_back(constant);
    }
    Polynomial(int constant) : Polynomial(F(constant)) {}
    explicit Polynomial(std::vector<F> coeffs) : coeffs_(std::move(coeffs)) { trim(); }
    Polynomial(std::initializer_list<F> coeffs) : coeffs_(coeffs) { trim(); }

    /// The polynomial x.
    static Polynomial x() { return Polynomial(std::vector<F>{F(0), F(1)}); }

    static Polynomial monomial(const F& c, std::size_t k) {
        if (casinv::is_zero(c)) return {};
        std::vector<F> v(k + 1, F(0));
        v[k] = c;
        return Polynomial(std::move(v));
    }

    bool is_zero() const noexcept { return coeffs_.empty(); }

    Degree degree() const noexcept {
        if (coeffs_.empty()) return std::nullopt;
        return coeffs_.size() - 1;
    }

    /// Leading coefficient; zero for the zero polynomial.
    F leading() const { return coeffs_.empty() ? F(0) : coeffs_.back(); }

    F coeff(std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : F(0); }

    const std::vector<F>& coeffs() const noexcept { return coeffs_; }

    F operator()(const F& point) const { return eval(point); }

    /// Horner evaluation.
    F eval(const F& point) const {
        F acc(0);
        for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
            acc *= point;
            acc += *it;
        }
        return acc;
    }

    Polynomial& operator+=(const Polynomial& o) {
        if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), F(0));
        for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] += o.coeffs_[k];
        trim();
        return *this;
    }
    Polynomial& operator-=(const Polynomial& o) {
        if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), F(0));
        for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] -= o.coeffs_[k];
        trim();
        return *this;
    }
    Polynomial& operator*=(const F& c) {
        if (casinv::is_zero(c)) {
            coeffs_.clear();
            return *this;
        }
        for (auto& v : coeffs_) v *= c;
        return *this;
    }
    Polynomial& operator*=(const Polynomial& o) {
        *this = *this * o;
        return *this;
    }

    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator*(Polynomial a, const F& c) { return a *= c; }
    friend Polynomial operator*(const F& c, Polynomial a) { return a *= c; }
    friend Polynomial operator-(Polynomial a) {
        for (auto& v : a.coeffs_) v = -v;
        return a;
    }

    // Schoolbook product.
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
        if (a.is_zero() || b.is_zero()) return {};
        std::vector<F> out(a.coeffs_.size() + b.coeffs_.size() - 1, F(0));
        for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
            if (casinv::is_zero(a.coeffs_[i])) continue;
            for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
        }
        return Polynomial(std::move(out));
    }

    friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.coeffs_ == b.coeffs_; }

   private:
    void trim() {
        while (!coeffs_.empty() && casinv::is_zero(coeffs_.back())) coeffs_.pop_back();
    }

    std::vector<F> coeffs_;
};

using Poly = Polynomial<Gaussian>;

/// p(slope*x + intercept), expanded.
template <class F>
Polynomial<F> compose_affine(const Polynomial<F>& p, const F& slope, const F& intercept) {
    const auto& c = p.coeffs();
    if (c.empty()) return {};
    // Horner in the ring: acc <- acc*(slope x + intercept) + c_k
    std::vector<F> acc{c.back()};
    for (std::size_t k = c.size() - 1; k-- > 0;) {
        std::vector<F> next(acc.size() + 1, F(0));
        for (std::size_t j = 0; j < acc.size(); ++j) {
            next[j + 1] += acc[j] * slope;
            next[j] += acc[j] * intercept;
        }
        next[0] += c[k];
        acc = std::move(next);
    }
    return Polynomial<F>(std::move(acc));
}

/// p(x + t)
template <class F>
Polynomial<F> shift(const Polynomial<F>& p, const F& t) {
    return compose_affine(p, F(1), t);
}

template <class F>
Polynomial<F> derivative(const Polynomial<F>& p) {
    const auto& c = p.coeffs();
    if (c.size() <= 1) return {};
    std::vector<F> out(c.size() - 1, F(0));
    for (std::size_t k = 1; k < c.size(); ++k) out[k - 1] = c[k] * F(static_cast<long>(k));
    return Polynomial<F>(std::move(out));
}

template <class F>
Polynomial<F> derivative(const Polynomial<F>& p, std::size_t order) {
    Polynomial<F> out = p;
    for (std::size_t k = 0; k < order && !out.is_zero(); ++k) out = derivative(out);
    return out;
}

/// Forward difference p(x+1) - p(x).
template <class F>
Polynomial<F> delta(const Polynomial<F>& p) {
    return shift(p, F(1)) - p;
}

/// Euclidean division; returns (quotient, remainder).
template <class F>
std::pair<Polynomial<F>, Polynomial<F>> divmod(const Polynomial<F>& p, const Polynomial<F>& q) {
    if (q.is_zero()) throw DivisionByZero("polynomial division by the zero polynomial");
    std::vector<F> rem = p.coeffs();
    const auto& d = q.coeffs();
    if (rem.size() < d.size()) return {Polynomial<F>{}, p};
    const F lead_inv = F(1) / d.back();
    std::vector<F> quot(rem.size() - d.size() + 1, F(0));
    for (std::size_t k = quot.size(); k-- > 0;) {
        F t = rem[k + d.size() - 1] * lead_inv;
        if (is_zero(t)) continue;
        for (std::size_t j = 0; j < d.size(); ++j) rem[k + j] -= t * d[j];
        quot[k] = std::move(t);
    }
    return {Polynomial<F>(std::move(quot)), Polynomial<F>(std::move(rem))};
}

/// p / q, which must leave no remainder.
template <class F>
Polynomial<F> exact_div(const Polynomial<F>& p, const Polynomial<F>& q) {
    auto [quot, rem] = divmod(p, q);
    if (!rem.is_zero()) throw NonzeroRemainder("exact division left a nonzero remainder");
    return quot;
}

namespace detail {

inline bool is_integer(const Rational& r) { return r.get_den() == 1; }

inline std::string coefficient_prefix(const Gaussian& c) {
    if (c.is_one()) return "";
    if (c == Gaussian(-1)) return "-";
    if (c.is_real()) {
        if (is_integer(c.re())) return to_text(c.re());
        return to_text(c.re()) + "*";
    }
    return "(" + to_text(c) + ")*";
}

inline std::string coefficient_prefix(const Rational& c) {
    if (c == 1) return "";
    if (c == -1) return "-";
    if (is_integer(c)) return to_text(c);
    return to_text(c) + "*";
}

}  // namespace detail

/// Descending powers, e.g. "4x^2-2", "1/2*x^2-3/2*x+2", "(1+i)*x".
template <class F>
std::string to_text(const Polynomial<F>& p) {
    const auto& c = p.coeffs();
    if (c.empty()) return "0";
    std::string out;
    for (std::size_t k = c.size(); k-- > 0;) {
        if (is_zero(c[k])) continue;
        std::string term;
        if (k == 0) {
            term = to_text(c[k]);
            if constexpr (std::is_same_v<F, Gaussian>) {
                if (!c[k].is_real() && sgn(c[k].re()) != 0) term = "(" + term + ")";
            }
        } else {
            term = detail::coefficient_prefix(c[k]) + (k == 1 ? std::string("x") : "x^" + std::to_string(k));
        }
        if (!out.empty() && term[0] != '-') out += "+";
        out += term;
    }
    return out;
}

template <class F>
std::ostream& operator<<(std::ostream& os, const Polynomial<F>& p) {
    return os << to_text(p);
}

}  // namespace casinv
