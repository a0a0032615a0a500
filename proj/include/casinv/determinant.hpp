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
 * Exact determinants of matrices with polynomial entries.
 *
 * det_exact works by evaluation and interpolation: with D an upper bound
 * for the degree of the determinant, it evaluates the matrix at the
 * integer nodes 0..D, takes D+1 scalar determinants by fraction-free
 * (Bareiss) elimination, and interpolates the unique polynomial of degree
 * <= D through the values (Newton form on equally spaced nodes).
 *
 * The degree bound is the largest sum of entry degrees along a permutation
 * (an assignment problem, solved by DP over row subsets), which never
 * exceeds the row-sum or column-sum bound.
 */

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <thread>
#include <vector>

#include "polynomial.hpp"

namespace casinv {

/// Row-major matrix of polynomials.
class PolyMatrix {
   public:
    PolyMatrix() = default;
    PolyMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), entries_(rows * cols) {}

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }

    Poly& operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
    const Poly& operator()(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }

    const std::vector<Poly>& entries() const noexcept { return entries_; }

    void swap_rows(std::size_t a, std::size_t b) {
        for (std::size_t c = 0; c < cols_; ++c) std::swap((*this)(a, c), (*this)(b, c));
    }

   private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Poly> entries_;
};

/// Dense square matrix of scalars, row-major.
using ScalarMatrix = std::vector<Gaussian>;

/// Bareiss fraction-free elimination; `m` is n*n row-major and is consumed.
inline Gaussian scalar_det(ScalarMatrix m, std::size_t n) {
    if (m.size() != n * n) throw NotSquare("scalar matrix has wrong number of entries");
    if (n == 0) return Gaussian(1);
    Gaussian prev(1);
    bool negate = false;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m[k * n + k].is_zero()) {
            std::size_t p = k + 1;
            while (p < n && m[p * n + k].is_zero()) ++p;
            if (p == n) return Gaussian(0);
            for (std::size_t c = k; c < n; ++c) std::swap(m[k * n + c], m[p * n + c]);
            negate = !negate;
        }
        const Gaussian& pivot = m[k * n + k];
        for (std::size_t i = k + 1; i < n; ++i) {
            const Gaussian lead = m[i * n + k];
            for (std::size_t j = k + 1; j < n; ++j) {
                Gaussian v = m[i * n + j] * pivot;
                if (!lead.is_zero()) v -= lead * m[k * n + j];
                if (!prev.is_one()) v /= prev;
                m[i * n + j] = std::move(v);
            }
            m[i * n + k] = Gaussian(0);
        }
        prev = pivot;
    }
    Gaussian out = m[n * n - 1];
    return negate ? -out : out;
}

/// Upper bound on deg det(M): max over permutations of the summed entry
/// degrees. Returns nullopt when every permutation hits a zero entry
/// (the determinant is then identically zero).
inline Degree det_degree_bound(const PolyMatrix& M) {
    const std::size_t n = M.rows();
    if (n == 0) return std::size_t{0};
    constexpr long kNone = std::numeric_limits<long>::min();
    auto deg = [&](std::size_t r, std::size_t c) -> long {
        auto d = M(r, c).degree();
        return d ? static_cast<long>(*d) : kNone;
    };
    if (n > 16) {
        // DP is too large; fall back to the smaller of row and column sums
        long rows = 0, cols = 0;
        for (std::size_t r = 0; r < n; ++r) {
            long best = kNone;
            for (std::size_t c = 0; c < n; ++c) best = std::max(best, deg(r, c));
            if (best == kNone) return std::nullopt;
            rows += best;
        }
        for (std::size_t c = 0; c < n; ++c) {
            long best = kNone;
            for (std::size_t r = 0; r < n; ++r) best = std::max(best, deg(r, c));
            if (best == kNone) return std::nullopt;
            cols += best;
        }
        return static_cast<std::size_t>(std::min(rows, cols));
    }
    // best[mask]: max degree sum assigning rows 0..popcount(mask)-1 to the columns in mask
    std::vector<long> best(std::size_t{1} << n, kNone);
    best[0] = 0;
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
        if (best[mask] == kNone) continue;
        const auto r = static_cast<std::size_t>(__builtin_popcount(mask));
        if (r == n) continue;
        for (std::size_t c = 0; c < n; ++c) {
            if (mask & (1u << c)) continue;
            long d = deg(r, c);
            if (d == kNone) continue;
            auto& slot = best[mask | (1u << c)];
            slot = std::max(slot, best[mask] + d);
        }
    }
    long top = best[(std::size_t{1} << n) - 1];
    if (top == kNone) return std::nullopt;
    return static_cast<std::size_t>(top);
}

/// The polynomial of degree <= values.size()-1 taking values[t] at x = t.
inline Poly interpolate_on_range(std::vector<Gaussian> values) {
    const std::size_t count = values.size();
    if (count == 0) return {};
    // divided differences on nodes 0..D: spacing j at order j
    for (std::size_t j = 1; j < count; ++j) {
        const Gaussian step(static_cast<long>(j));
        for (std::size_t i = count - 1; i >= j; --i) {
            values[i] = (values[i] - values[i - 1]) / step;
            if (i == j) break;
        }
    }
    // Newton form to monomial basis: p = c_D; p = p*(x - i) + c_i
    std::vector<Gaussian> acc{values.back()};
    for (std::size_t i = count - 1; i-- > 0;) {
        std::vector<Gaussian> next(acc.size() + 1, Gaussian(0));
        const Gaussian node(static_cast<long>(i));
        for (std::size_t k = 0; k < acc.size(); ++k) {
            next[k + 1] += acc[k];
            if (!acc[k].is_zero() && i != 0) next[k] -= acc[k] * node;
        }
        next[0] += values[i];
        acc = std::move(next);
    }
    return Poly(std::move(acc));
}

namespace detail {

inline Gaussian det_at_node(const PolyMatrix& M, long node) {
    const std::size_t n = M.rows();
    ScalarMatrix s(n * n);
    const Gaussian t(node);
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c) s[r * n + c] = M(r, c).eval(t);
    return scalar_det(std::move(s), n);
}

}  // namespace detail

/// Exact determinant of a square polynomial matrix; the 0x0 determinant is 1.
/// Node evaluations are spread over hardware threads when more than one is
/// available; the result does not depend on the split.
inline Poly det_exact(const PolyMatrix& M) {
    if (M.rows() != M.cols()) throw NotSquare("determinant of a non-square matrix");
    const std::size_t n = M.rows();
    if (n == 0) return Poly(1);
    if (n == 1) return M(0, 0);
    auto bound = det_degree_bound(M);
    if (!bound) return {};
    const std::size_t nodes = *bound + 1;
    std::vector<Gaussian> values(nodes);

    const std::size_t workers =
        std::min<std::size_t>(std::max(1u, std::thread::hardware_concurrency()), nodes / 8 + 1);
    if (workers <= 1) {
        for (std::size_t t = 0; t < nodes; ++t) values[t] = detail::det_at_node(M, static_cast<long>(t));
    } else {
        std::vector<std::thread> pool;
        pool.reserve(workers);
        for (std::size_t w = 0; w < workers; ++w) {
            pool.emplace_back([&, w] {
                for (std::size_t t = w; t < nodes; t += workers)
                    values[t] = detail::det_at_node(M, static_cast<long>(t));
            });
        }
        for (auto& th : pool) th.join();
    }
    return interpolate_on_range(std::move(values));
}

}  // namespace casinv
