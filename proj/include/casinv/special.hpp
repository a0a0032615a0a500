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

#include <cstdint>
#include <map>
#include <mutex>
#include <shared_mutex>
#include <utility>
#include <vector>

#include "polynomial.hpp"

namespace casinv {

namespace detail {

// Memo tables for factorials and Pochhammer symbols. Entries are written
// once per key and never modified; concurrent first writers compute the
// same exact value, so whichever insert wins is indistinguishable.
class SpecialCache {
   public:
    static SpecialCache& instance() {
        static SpecialCache cache;
        return cache;
    }

    Integer factorial(std::size_t n) {
        {
            std::shared_lock lock(mutex_);
            if (n < factorials_.size()) return factorials_[n];
        }
        std::unique_lock lock(mutex_);
        if (factorials_.empty()) factorials_.push_back(1);
        while (factorials_.size() <= n) {
            Integer next = factorials_.back() * static_cast<unsigned long>(factorials_.size());
            factorials_.push_back(std::move(next));
        }
        return factorials_[n];
    }

    template <class Compute>
    Gaussian pochhammer(const Gaussian& base, std::size_t n, Compute&& compute) {
        auto key = std::make_pair(base, n);
        {
            std::shared_lock lock(mutex_);
            if (auto it = pochhammers_.find(key); it != pochhammers_.end()) return it->second;
        }
        Gaussian value = compute();
        std::unique_lock lock(mutex_);
        if (pochhammers_.size() > kMaxPochhammerEntries) pochhammers_.clear();
        pochhammers_.emplace(std::move(key), value);
        return value;
    }

   private:
    static constexpr std::size_t kMaxPochhammerEntries = 1u << 16;

    std::shared_mutex mutex_;
    std::vector<Integer> factorials_;
    std::map<std::pair<Gaussian, std::size_t>, Gaussian> pochhammers_;
};

}  // namespace detail

inline Integer factorial(std::size_t n) { return detail::SpecialCache::instance().factorial(n); }

inline Rational factorial_q(std::size_t n) { return Rational(factorial(n)); }

/// (a)_n = a(a+1)...(a+n-1), (a)_0 = 1.
inline Gaussian pochhammer(const Gaussian& base, std::size_t n) {
    if (n == 0) return Gaussian(1);
    return detail::SpecialCache::instance().pochhammer(base, n, [&] {
        Gaussian acc(1);
        Gaussian term = base;
        for (std::size_t k = 0; k < n; ++k) {
            acc *= term;
            if (acc.is_zero()) break;
            term += Gaussian(1);
        }
        return acc;
    });
}

/// Pochhammer symbol for any integer n, with (a)_{-n} = 1/((a-1)(a-2)...(a-n)).
inline Gaussian pochhammer_signed(const Gaussian& base, long n) {
    if (n >= 0) return pochhammer(base, static_cast<std::size_t>(n));
    Gaussian denom(1);
    for (long k = 1; k <= -n; ++k) denom *= base - Gaussian(k);
    if (denom.is_zero()) throw ZeroDenominator("negative-index Pochhammer symbol has a zero factor");
    return denom.inverse();
}

/// The polynomial (x+shift)(x+shift+1)...(x+shift+n-1).
inline Poly pochhammer_poly(const Gaussian& shift_by, std::size_t n) {
    Poly acc(1);
    for (std::size_t k = 0; k < n; ++k)
        acc *= Poly{shift_by + Gaussian(static_cast<long>(k)), Gaussian(1)};
    return acc;
}

/// x(x-1)...(x-j+1)
inline Poly falling_poly(std::size_t j) {
    Poly acc(1);
    for (std::size_t k = 0; k < j; ++k) acc *= Poly{Gaussian(-static_cast<long>(k)), Gaussian(1)};
    return acc;
}

/// binom(x, j) as a polynomial: x(x-1)...(x-j+1)/j!
inline Poly binom_poly(std::size_t j) {
    return falling_poly(j) * Gaussian(Rational(1) / factorial_q(j));
}

/// i^m for any integer m.
inline Gaussian i_power(long m) {
    switch (((m % 4) + 4) % 4) {
        case 0:
            return Gaussian(1);
        case 1:
            return Gaussian::i();
        case 2:
            return Gaussian(-1);
        default:
            return -Gaussian::i();
    }
}

/// base^e for integer e (negative exponents need base != 0).
inline Gaussian power(const Gaussian& base, long e) {
    if (e < 0) return power(base.inverse(), -e);
    Gaussian acc(1);
    Gaussian sq = base;
    auto k = static_cast<unsigned long>(e);
    while (k) {
        if (k & 1u) acc *= sq;
        k >>= 1u;
        if (k) sq *= sq;
    }
    return acc;
}

inline Gaussian sign_power(long e) { return (e % 2 == 0) ? Gaussian(1) : Gaussian(-1); }

inline Gaussian g(long v) { return Gaussian(v); }
inline Gaussian g(long num, long den) { return Gaussian(make_rational(num, den)); }

}  // namespace casinv
