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

#include <ostream>
#include <string>
#include <string_view>
#include <utility>

#include "rational.hpp"

namespace casinv {

/// Exact element re + im*i of Q(i).
class Gaussian {
   public:
    Gaussian() = default;
    Gaussian(int v) : re_(v) {}
    Gaussian(long v) : re_(v) {}
    Gaussian(Rational re) : re_(std::move(re)) {}
    Gaussian(Rational re, Rational im) : re_(std::move(re)), im_(std::move(im)) {}

    static Gaussian i() { return {Rational(0), Rational(1)}; }

    const Rational& re() const noexcept { return re_; }
    const Rational& im() const noexcept { return im_; }

    bool is_zero() const noexcept { return sgn(re_) == 0 && sgn(im_) == 0; }
    bool is_real() const noexcept { return sgn(im_) == 0; }
    bool is_one() const noexcept { return re_ == 1 && sgn(im_) == 0; }

    /// re² + im²
    Rational norm() const { return re_ * re_ + im_ * im_; }
    Gaussian conj() const { return {re_, -im_}; }

    Gaussian inverse() const {
        if (is_zero()) throw DivisionByZero("inverse of zero Gaussian rational");
        if (is_real()) return Gaussian(Rational(1 / re_));
        Rational n = norm();
        return {re_ / n, -im_ / n};
    }

    Gaussian& operator+=(const Gaussian& o) {
        re_ += o.re_;
        if (!o.is_real()) im_ += o.im_;
        return *this;
    }
    Gaussian& operator-=(const Gaussian& o) {
        re_ -= o.re_;
        if (!o.is_real()) im_ -= o.im_;
        return *this;
    }
    Gaussian& operator*=(const Gaussian& o) {
        if (is_real() && o.is_real()) {
            re_ *= o.re_;
        } else {
            Rational r = re_ * o.re_ - im_ * o.im_;
            Rational m = re_ * o.im_ + im_ * o.re_;
            re_ = std::move(r);
            im_ = std::move(m);
        }
        return *this;
    }
    Gaussian& operator/=(const Gaussian& o) {
        if (o.is_real()) {
            if (sgn(o.re_) == 0) throw DivisionByZero("division by zero Gaussian rational");
            re_ /= o.re_;
            if (!is_real()) im_ /= o.re_;
            return *this;
        }
        return *this *= o.inverse();
    }

    friend Gaussian operator+(Gaussian a, const Gaussian& b) { return a += b; }
    friend Gaussian operator-(Gaussian a, const Gaussian& b) { return a -= b; }
    friend Gaussian operator*(Gaussian a, const Gaussian& b) { return a *= b; }
    friend Gaussian operator/(Gaussian a, const Gaussian& b) { return a /= b; }
    friend Gaussian operator-(const Gaussian& a) { return {-a.re_, -a.im_}; }

    friend bool operator==(const Gaussian& a, const Gaussian& b) {
        return a.re_ == b.re_ && a.im_ == b.im_;
    }

    /// Lexicographic on (re, im); only for use as a map key.
    friend bool operator<(const Gaussian& a, const Gaussian& b) {
        if (a.re_ != b.re_) return a.re_ < b.re_;
        return a.im_ < b.im_;
    }

   private:
    Rational re_{0};
    Rational im_{0};
};

/// "p/q", "r/s*i" or "p/q+r/s*i" (q, s omitted when 1).
inline std::string to_text(const Gaussian& z) {
    if (z.is_real()) return to_text(z.re());
    std::string im;
    if (z.im() == 1)
        im = "i";
    else if (z.im() == -1)
        im = "-i";
    else
        im = to_text(z.im()) + "*i";
    if (sgn(z.re()) == 0) return im;
    if (im[0] == '-') return to_text(z.re()) + im;
    return to_text(z.re()) + "+" + im;
}

inline std::ostream& operator<<(std::ostream& os, const Gaussian& z) { return os << to_text(z); }

namespace detail {

inline Rational parse_imaginary_coefficient(std::string_view s) {
    // s is the imaginary term without its trailing "i" / "*i".
    s = trim(s);
    if (s.empty() || s == "+") return Rational(1);
    if (s == "-") return Rational(-1);
    return parse_rational(s);
}

}  // namespace detail

/// Inverse of to_text; also accepts "i", "-i", "r*i" and surrounding blanks.
inline Gaussian parse_gaussian(std::string_view text) {
    auto s = detail::trim(text);
    if (s.empty()) throw ParseError("empty number");
    if (s.back() != 'i') return Gaussian(parse_rational(s));
    s.remove_suffix(1);
    if (!s.empty() && s.back() == '*') s.remove_suffix(1);
    // split at the last sign that is not the leading character
    std::size_t split = std::string_view::npos;
    for (std::size_t k = s.size(); k-- > 1;) {
        if (s[k] == '+' || s[k] == '-') {
            split = k;
            break;
        }
    }
    if (split == std::string_view::npos) return {Rational(0), detail::parse_imaginary_coefficient(s)};
    Rational re = parse_rational(s.substr(0, split));
    return {re, detail::parse_imaginary_coefficient(s.substr(split))};
}

}  // namespace casinv
