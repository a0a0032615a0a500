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
#include <cctype>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <string_view>
#include <vector>

#include "special.hpp"

namespace casinv {

/// Strictly increasing finite set of nonnegative integers.
class FiniteSet {
   public:
    using value_type = std::uint32_t;

    FiniteSet() = default;

    /// Rejects unsorted or repeated input instead of normalizing it.
    explicit FiniteSet(std::vector<value_type> elements) : elems_(std::move(elements)) {
        for (std::size_t k = 1; k < elems_.size(); ++k)
            if (elems_[k - 1] >= elems_[k])
                throw InvalidParams("finite set elements must be strictly increasing");
    }
    FiniteSet(std::initializer_list<value_type> elements)
        : FiniteSet(std::vector<value_type>(elements)) {}

    std::size_t size() const noexcept { return elems_.size(); }
    bool empty() const noexcept { return elems_.empty(); }
    const std::vector<value_type>& elements() const noexcept { return elems_; }
    auto begin() const noexcept { return elems_.begin(); }
    auto end() const noexcept { return elems_.end(); }
    value_type operator[](std::size_t k) const { return elems_[k]; }

    bool contains(value_type v) const { return std::binary_search(elems_.begin(), elems_.end(), v); }

    value_type max() const {
        if (elems_.empty()) throw EmptyComponent("maximum of the empty set is undefined");
        return elems_.back();
    }

    /// All elements >= 1.
    bool is_positive() const noexcept { return elems_.empty() || elems_.front() >= 1; }

    /// F = {1, 2, ..., k} (k >= 1).
    bool is_initial_segment() const noexcept {
        if (elems_.empty()) return false;
        for (std::size_t k = 0; k < elems_.size(); ++k)
            if (elems_[k] != k + 1) return false;
        return true;
    }

    friend bool operator==(const FiniteSet&, const FiniteSet&) = default;
    friend auto operator<=>(const FiniteSet&, const FiniteSet&) = default;

   private:
    std::vector<value_type> elems_;
};

using SetTuple = std::vector<FiniteSet>;

/// w_F = sum(F) - C(|F|, 2)
inline long weight(const FiniteSet& F) {
    long sum = 0;
    for (auto f : F) sum += static_cast<long>(f);
    auto k = static_cast<long>(F.size());
    return sum - k * (k - 1) / 2;
}

/// I(F) = {0..max F} minus {max F - f : f in F}; I(empty) = empty.
inline FiniteSet involute(const FiniteSet& F) {
    if (F.empty()) return {};
    const auto top = F.max();
    std::vector<bool> removed(top + 1, false);
    for (auto f : F) removed[top - f] = true;
    std::vector<FiniteSet::value_type> out;
    for (FiniteSet::value_type v = 0; v <= top; ++v)
        if (!removed[v]) out.push_back(v);
    return FiniteSet(std::move(out));
}

/// s_F: 1 for the empty set, k+1 for {1..k}, else the first s with s < f_s.
/// Only meaningful for sets of positive integers.
inline std::size_t s_of(const FiniteSet& F) {
    if (F.empty()) return 1;
    if (F.is_initial_segment()) return F.size() + 1;
    for (std::size_t s = 1; s <= F.size(); ++s)
        if (s < F[s - 1]) return s;
    // unreachable for positive sets that are not {1..k}
    throw InvalidParams("s_F is defined only for sets of positive integers");
}

/// F with the initial run {1..s_F-1} removed and the rest shifted down by s_F;
/// a leading 0 is dropped first.
inline FiniteSet downarrow(const FiniteSet& F) {
    if (!F.empty() && F[0] == 0) {
        std::vector<FiniteSet::value_type> rest(F.begin() + 1, F.end());
        return downarrow(FiniteSet(std::move(rest)));
    }
    if (F.empty() || F.is_initial_segment()) return {};
    const auto s = s_of(F);
    std::vector<FiniteSet::value_type> out;
    for (std::size_t k = s - 1; k < F.size(); ++k) out.push_back(F[k] - static_cast<FiniteSet::value_type>(s));
    return FiniteSet(std::move(out));
}

/// prod_{i<j} (f_j - f_i)
inline Integer vandermonde(const FiniteSet& F) {
    Integer acc = 1;
    for (std::size_t i = 0; i < F.size(); ++i)
        for (std::size_t j = i + 1; j < F.size(); ++j) acc *= static_cast<unsigned long>(F[j] - F[i]);
    return acc;
}

inline Integer factorial_product(const FiniteSet& F) {
    Integer acc = 1;
    for (auto f : F) acc *= factorial(f);
    return acc;
}

inline long weight_tuple(const SetTuple& T) {
    long sum = 0;
    for (const auto& F : T) sum += weight(F);
    return sum;
}

inline SetTuple involute_tuple(const SetTuple& T) {
    SetTuple out;
    out.reserve(T.size());
    for (const auto& F : T) out.push_back(involute(F));
    return out;
}

/// (x - f_1)...(x - f_k)
inline Poly annihilator(const FiniteSet& F) {
    Poly acc(1);
    for (auto f : F) acc *= Poly{Gaussian(-static_cast<long>(f)), Gaussian(1)};
    return acc;
}

/// "{}" or "{1,2,5}"
inline std::string to_text(const FiniteSet& F) {
    std::string out = "{";
    for (std::size_t k = 0; k < F.size(); ++k) {
        if (k) out += ",";
        out += std::to_string(F[k]);
    }
    return out + "}";
}

inline std::string to_text(const SetTuple& T) {
    std::string out = "(";
    for (std::size_t k = 0; k < T.size(); ++k) {
        if (k) out += ",";
        out += to_text(T[k]);
    }
    return out + ")";
}

/// Result of reading a set literal; `normalized` records whether the
/// literal had to be sorted or deduplicated.
struct ParsedSet {
    FiniteSet set;
    bool normalized = false;
};

/// Parses "{}" or "{n1,n2,...}" (decimal nonnegative integers, blanks ignored).
/// Unsorted or repeated entries are sorted and deduplicated, and reported.
inline ParsedSet parse_set(std::string_view text) {
    std::string s;
    for (char ch : text)
        if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
    if (s.size() < 2 || s.front() != '{' || s.back() != '}')
        throw ParseError("set literal must look like {n1,n2,...}: '" + std::string(text) + "'");
    std::string body = s.substr(1, s.size() - 2);
    std::vector<FiniteSet::value_type> raw;
    if (!body.empty()) {
        std::size_t start = 0;
        while (true) {
            auto comma = body.find(',', start);
            auto item = body.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
            if (item.empty() || !std::all_of(item.begin(), item.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
                throw ParseError("set element is not a nonnegative integer: '" + item + "'");
            if (item.size() > 9) throw ParseError("set element too large: '" + item + "'");
            raw.push_back(static_cast<FiniteSet::value_type>(std::stoul(item)));
            if (comma == std::string::npos) break;
            start = comma + 1;
        }
    }
    auto sorted = raw;
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    bool normalized = sorted != raw;
    return {FiniteSet(std::move(sorted)), normalized};
}

/// All subsets of {lo..hi} with size in [min_size, max_size], in
/// lexicographic order of their element lists.
inline std::vector<FiniteSet> enumerate_sets(FiniteSet::value_type lo, FiniteSet::value_type hi,
                                             std::size_t min_size, std::size_t max_size) {
    std::vector<FiniteSet> out;
    std::vector<FiniteSet::value_type> cur;
    auto rec = [&](auto&& self, FiniteSet::value_type next) -> void {
        if (cur.size() >= min_size) out.emplace_back(cur);
        if (cur.size() == max_size) return;
        for (auto v = next; v <= hi; ++v) {
            cur.push_back(v);
            self(self, v + 1);
            cur.pop_back();
        }
    };
    if (lo <= hi) rec(rec, lo);
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace casinv
