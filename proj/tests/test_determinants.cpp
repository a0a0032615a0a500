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

#include <gtest/gtest.h>

#include <random>

#include "casinv/builders.hpp"
#include "oracles.hpp"

using namespace casinv;
using oracle::lin;
using oracle::q;
using oracle::X;

namespace {

PolyMatrix from_rows(const std::vector<std::vector<Poly>>& rows) {
    PolyMatrix M(rows.size(), rows.empty() ? 0 : rows[0].size());
    for (std::size_t r = 0; r < rows.size(); ++r)
        for (std::size_t c = 0; c < rows[r].size(); ++c) M(r, c) = rows[r][c];
    return M;
}

/// Casoratian of the recurrence-built Charlier polynomials, by cofactors.
Poly charlier_casoratian_oracle(const FiniteSet& F, const Gaussian& a) {
    auto table = oracle::charlier_table(F.empty() ? 0 : F.max(), a);
    std::vector<std::vector<Poly>> rows;
    for (auto f : F) {
        std::vector<Poly> row;
        for (std::size_t j = 0; j < F.size(); ++j) row.push_back(compose_affine(table[f], q(1), Gaussian(static_cast<long>(j))));
        rows.push_back(row);
    }
    return oracle::cofactor_det(rows);
}

const Gaussian kAlpha = q(1, 3), kBeta = q(1, 5), kN = q(17, 2);

}  // namespace

TEST(Determinant, SmallCases) {
    EXPECT_EQ(det_exact(from_rows({{Poly(1), Poly(), Poly()}, {Poly(), Poly(1), Poly()}, {Poly(), Poly(), Poly(1)}})), Poly(1));
    EXPECT_EQ(det_exact(from_rows({{X(), Poly(1)}, {X() * X(), X()}})), Poly());
    EXPECT_EQ(det_exact(PolyMatrix(0, 0)), Poly(1));
    EXPECT_THROW(det_exact(PolyMatrix(2, 3)), NotSquare);
}

TEST(Determinant, ScalarBareiss) {
    ScalarMatrix m{q(0), q(2), q(1), q(3), q(1), q(0), q(1), q(1), q(1)};
    // 0(1-0) - 2(3-0) + 1(3-1) = -4
    EXPECT_EQ(scalar_det(m, 3), q(-4));
    EXPECT_EQ(scalar_det({q(1), q(2), q(2), q(4)}, 2), q(0));
}

TEST(Determinant, MatchesCofactorOracle) {
    std::mt19937 rng(7);
    for (std::size_t n = 1; n <= 5; ++n) {
        for (int t = 0; t < 6; ++t) {
            std::vector<std::vector<Poly>> rows(n, std::vector<Poly>(n));
            for (auto& row : rows)
                for (auto& e : row) e = oracle::random_poly(rng, 3, t % 2 == 1);
            EXPECT_EQ(det_exact(from_rows(rows)), oracle::cofactor_det(rows)) << "n=" << n;
        }
    }
}

TEST(Determinant, Alternating) {
    std::mt19937 rng(11);
    for (int t = 0; t < 10; ++t) {
        std::vector<std::vector<Poly>> rows(4, std::vector<Poly>(4));
        for (auto& row : rows)
            for (auto& e : row) e = oracle::random_poly(rng, 2);
        PolyMatrix M = from_rows(rows);
        Poly d = det_exact(M);
        M.swap_rows(0, 3);
        EXPECT_EQ(det_exact(M), -d);
    }
}

TEST(Determinant, DegreeBound) {
    EXPECT_EQ(det_degree_bound(from_rows({{X(), Poly()}, {Poly(), X() * X()}})), std::optional<std::size_t>(3));
    EXPECT_FALSE(det_degree_bound(from_rows({{Poly(), Poly()}, {X(), Poly(1)}})).has_value());
}

TEST(Builders, CharlierExamples) {
    for (const Gaussian& a : {q(2), q(-3, 2), q(7, 5)}) {
        EXPECT_EQ(casorati_charlier(FiniteSet{1, 2}, a), (Poly{a * a, q(1) - q(2) * a, q(1)} * q(1, 2)));
        for (unsigned k = 0; k <= 5; ++k) EXPECT_EQ(casorati_charlier(FiniteSet{k}, a), charlier(k, a));
    }
    EXPECT_EQ(casorati_charlier(FiniteSet{1, 2}, q(2)), (Poly{q(4), q(-3), q(1)} * q(1, 2)));
    EXPECT_EQ(casorati_charlier(FiniteSet{}, q(2)), Poly(1));
}

TEST(Builders, CharlierAgainstOracleAndLaws) {
    for (const Gaussian& a : {q(2), q(-3, 2), q(7, 5)}) {
        for (const auto& F : enumerate_sets(0, 6, 1, 3)) {
            // The builder also cross-checks its two determinant forms internally.
            Poly C = casorati_charlier(F, a);
            EXPECT_EQ(C, charlier_casoratian_oracle(F, a)) << to_text(F);
            EXPECT_EQ(static_cast<long>(*C.degree()), weight(F)) << to_text(F);
            EXPECT_EQ(casorati_charlier_at(F, a, q(3, 2)), C.eval(q(3, 2)));
            if (F.is_positive()) {
                Rational vf(vandermonde(F), factorial_product(F));
                vf.canonicalize();
                EXPECT_EQ(C.eval(q(0)), power(-a, weight(F)) * Gaussian(vf)) << to_text(F);
            }
        }
    }
}

TEST(Builders, Hermite) {
    auto table = oracle::hermite_table(8);
    for (unsigned k = 0; k <= 6; ++k)
        EXPECT_EQ(wronskian_hermite(FiniteSet{k}), table[k] * Gaussian(1 / oracle::fact(k)));
    std::vector<std::vector<Poly>> m{{table[1], derivative(table[1])}, {table[2], derivative(table[2])}};
    EXPECT_EQ(oracle::cofactor_det(m) * q(1, 4), (Poly{q(1), q(0), q(2)}));
    EXPECT_EQ(wronskian_hermite(FiniteSet{1, 2}), (Poly{q(1), q(0), q(2)}));
    for (const auto& F : enumerate_sets(0, 6, 1, 3))
        EXPECT_EQ(static_cast<long>(*wronskian_hermite(F).degree()), weight(F)) << to_text(F);
    EXPECT_EQ(wronskian_hermite(FiniteSet{}), Poly(1));
}

TEST(Builders, Meixner) {
    const Gaussian a = q(3, 7), c = q(5, 3);
    EXPECT_EQ(quasi_casorati_meixner(FiniteSet{1}, FiniteSet{}, a, c), lin(-(a * c * (q(1) - a).inverse()), q(1)));
    EXPECT_EQ(quasi_casorati_meixner(FiniteSet{}, FiniteSet{}, a, c), Poly(1));
    // F2 empty: plain Casoratian of Meixner polynomials
    FiniteSet F{1, 3};
    std::vector<std::vector<Poly>> rows;
    for (auto f : F)
        rows.push_back({oracle::meixner(f, a, c), compose_affine(oracle::meixner(f, a, c), q(1), q(1))});
    EXPECT_EQ(quasi_casorati_meixner(F, FiniteSet{}, a, c), oracle::cofactor_det(rows));
    for (const auto& F1 : enumerate_sets(0, 4, 0, 2))
        for (const auto& F2 : enumerate_sets(0, 4, 0, 2))
            EXPECT_EQ(static_cast<long>(*quasi_casorati_meixner(F1, F2, a, c).degree()), weight_tuple({F1, F2}))
                << to_text(F1) << to_text(F2);
}

TEST(Builders, Laguerre) {
    const Gaussian al = q(1, 4);
    auto table = oracle::laguerre_table(6, al);
    for (unsigned k = 0; k <= 5; ++k)
        EXPECT_EQ(quasi_wronskian_laguerre(FiniteSet{k}, FiniteSet{}, al), table[k] * power(q(-1), k));
    EXPECT_EQ(quasi_wronskian_laguerre(FiniteSet{}, FiniteSet{1}, al), lin(al + q(1), q(1)));
    EXPECT_EQ(quasi_wronskian_laguerre(FiniteSet{}, FiniteSet{}, al), Poly(1));
    for (const auto& F1 : enumerate_sets(0, 4, 0, 2))
        for (const auto& F2 : enumerate_sets(0, 4, 0, 2))
            EXPECT_EQ(static_cast<long>(*quasi_wronskian_laguerre(F1, F2, al).degree()), weight_tuple({F1, F2}));
}

TEST(Builders, Hahn) {
    auto one = quasi_casorati_hahn(FiniteSet{1}, FiniteSet{}, FiniteSet{}, kAlpha, kBeta, kN);
    EXPECT_EQ(one.raw, lin(-(kN * (kAlpha + q(1))), kAlpha + kBeta + q(2)));
    EXPECT_EQ(one.prescribed_leading, kAlpha + kBeta + q(2));
    EXPECT_EQ(one.normalized.leading(), q(1));
    auto none = quasi_casorati_hahn(FiniteSet{}, FiniteSet{}, FiniteSet{}, kAlpha, kBeta, kN);
    EXPECT_EQ(none.raw, Poly(1));
    EXPECT_EQ(none.prescribed_leading, q(1));
    const auto sets = enumerate_sets(1, 3, 0, 2);
    for (const auto& F1 : sets)
        for (const auto& F2 : sets)
            for (const auto& F3 : sets) {
                auto r = quasi_casorati_hahn(F1, F2, F3, kAlpha, kBeta, kN);
                ASSERT_FALSE(r.degenerate);
                EXPECT_EQ(static_cast<long>(*r.raw.degree()), weight_tuple({F1, F2, F3}));
                EXPECT_EQ(r.raw.leading(), r.prescribed_leading);
            }
}

TEST(Builders, Jacobi) {
    auto one = quasi_wronskian_jacobi(FiniteSet{1}, FiniteSet{}, kAlpha, kBeta);
    EXPECT_EQ(one.raw, lin((kAlpha - kBeta) * q(1, 2), (kAlpha + kBeta + q(2)) * q(1, 2)));
    EXPECT_EQ(quasi_wronskian_jacobi(FiniteSet{}, FiniteSet{}, kAlpha, kBeta).raw, Poly(1));
    const auto sets = enumerate_sets(1, 4, 0, 2);
    for (const auto& F1 : sets)
        for (const auto& F2 : sets) {
            auto r = quasi_wronskian_jacobi(F1, F2, kAlpha, kBeta);
            ASSERT_FALSE(r.degenerate);
            EXPECT_EQ(static_cast<long>(*r.raw.degree()), weight_tuple({F1, F2}));
            EXPECT_EQ(r.raw.leading(), r.prescribed_leading);
        }
}

TEST(Builders, Phi) {
    auto table = oracle::charlier_table(6, q(2));
    for (unsigned k = 1; k <= 4; ++k) {
        EXPECT_EQ(phi_charlier(FiniteSet{k}, q(2), 0), q(1));
        for (std::size_t n = 0; n <= 6; ++n)
            EXPECT_EQ(phi_charlier(FiniteSet{k}, q(2), n), table[n].eval(Gaussian(static_cast<long>(k))));
    }
    for (std::size_t n = 0; n <= 4; ++n) EXPECT_TRUE(phi_bridge_holds(FiniteSet{1, 2}, q(2), n));
    EXPECT_FALSE(phi_charlier(FiniteSet{1, 2}, q(7, 5), 3).is_zero());
}
