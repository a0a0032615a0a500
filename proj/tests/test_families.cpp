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

#include "casinv/identities.hpp"
#include "oracles.hpp"

using namespace casinv;
using oracle::lin;
using oracle::q;
using oracle::X;

namespace {

ParamSet params(std::initializer_list<std::pair<const char*, Gaussian>> kv) {
    ParamSet p;
    for (const auto& [k, v] : kv) p.set(k, v);
    return p;
}

const Gaussian kAlpha = q(1, 3), kBeta = q(1, 5), kN = q(17, 2);

}  // namespace

TEST(Families, CharlierSmall) {
    EXPECT_EQ(charlier(0, q(5)), Poly(1));
    EXPECT_EQ(charlier(1, q(3)), lin(q(-3), q(1)));
    for (const Gaussian& a : {q(2), q(-3, 2), q(7, 5)})
        EXPECT_EQ(charlier(2, a), (Poly{a * a, -(q(2) * a + q(1)), q(1)} * q(1, 2)));
}

TEST(Families, CharlierMatchesRecurrence) {
    for (const Gaussian& a : {q(2), q(-3, 2), q(7, 5), Gaussian(Rational(1), Rational(1))}) {
        auto table = oracle::charlier_table(10, a);
        for (long n = 0; n <= 10; ++n) {
            EXPECT_EQ(charlier(n, a), table[n]) << "n=" << n;
            EXPECT_EQ(charlier(n, a).leading(), Gaussian(1 / oracle::fact(n)));
            EXPECT_EQ(charlier(n, a).eval(q(0)), power(-a, n) * Gaussian(1 / oracle::fact(n)));
        }
    }
}

TEST(Families, Hermite) {
    EXPECT_EQ(hermite(2), (Poly{q(-2), q(0), q(4)}));
    auto table = oracle::hermite_table(12);
    for (long n = 0; n <= 12; ++n) EXPECT_EQ(hermite(n), table[n]);
}

TEST(Families, Meixner) {
    const Gaussian a = q(3, 7), c = q(5, 3);
    EXPECT_EQ(meixner(1, a, c), lin(-(a * c * (q(1) - a).inverse()), q(1)));
    for (long n = 0; n <= 7; ++n) EXPECT_EQ(meixner(n, a, c), oracle::meixner(n, a, c)) << "n=" << n;
}

TEST(Families, Hahn) {
    EXPECT_EQ(hahn(1, kAlpha, kBeta, kN), lin(-(kN * (kAlpha + q(1))), kAlpha + kBeta + q(2)));
    for (long n = 0; n <= 7; ++n) EXPECT_EQ(hahn(n, kAlpha, kBeta, kN), oracle::hahn(n, kAlpha, kBeta, kN)) << "n=" << n;
}

TEST(Families, DualHahn) {
    EXPECT_EQ(dual_hahn(1, kAlpha, kBeta, kN), lin(-(kN * (kAlpha + q(1))), q(1)));
    for (long n = 0; n <= 6; ++n) {
        Poly r = dual_hahn(n, kAlpha, kBeta, kN);
        for (long x = -2; x <= 6; ++x) {
            const Gaussian xv = q(2 * x + 1, 3);
            EXPECT_EQ(r.eval(lambda_value(kAlpha, kBeta, xv)), oracle::dual_hahn_at(n, kAlpha, kBeta, kN, xv));
        }
    }
    EXPECT_THROW(dual_hahn(1, q(-2), kBeta, kN), InvalidParams);
}

TEST(Families, Laguerre) {
    EXPECT_EQ(laguerre(1, q(1, 4)), lin(q(5, 4), q(-1)));
    for (const Gaussian& al : {q(1, 4), q(-3, 2), q(2)}) {
        auto table = oracle::laguerre_table(9, al);
        for (long n = 0; n <= 9; ++n) EXPECT_EQ(laguerre(n, al), table[n]);
    }
}

TEST(Families, Jacobi) {
    EXPECT_EQ(jacobi(1, kAlpha, kBeta), lin((kAlpha - kBeta) * q(1, 2), (kAlpha + kBeta + q(2)) * q(1, 2)));
    auto table = oracle::jacobi_table(8, kAlpha, kBeta);
    for (long n = 0; n <= 8; ++n) {
        EXPECT_EQ(jacobi(n, kAlpha, kBeta), table[n]) << "n=" << n;
        EXPECT_EQ(jacobi(n, kAlpha, kBeta).leading(),
                  oracle::rising(Gaussian(n + 1) + kAlpha + kBeta, n) * Gaussian(1 / (oracle::fact(n) * Rational(1L << n))));
    }
}

TEST(Families, DegreeIsN) {
    const std::vector<std::pair<FamilyId, ParamSet>> cases = {
        {FamilyId::Charlier, params({{"a", q(2)}})},
        {FamilyId::Meixner, params({{"a", q(3, 7)}, {"c", q(5, 3)}})},
        {FamilyId::Hahn, params({{"alpha", kAlpha}, {"beta", kBeta}, {"N", kN}})},
        {FamilyId::DualHahn, params({{"alpha", kAlpha}, {"beta", kBeta}, {"N", kN}})},
        {FamilyId::Hermite, ParamSet{}},
        {FamilyId::Laguerre, params({{"alpha", q(1, 4)}})},
        {FamilyId::Jacobi, params({{"alpha", kAlpha}, {"beta", kBeta}})},
    };
    for (const auto& [id, p] : cases)
        for (std::size_t n = 0; n <= 8; ++n) EXPECT_EQ(*family_poly(id, n, p).degree(), n) << to_string(id);
}

TEST(Families, InvalidParams) {
    EXPECT_THROW(family_poly(FamilyId::Charlier, 2, params({{"a", q(0)}})), InvalidParams);
    EXPECT_THROW(family_poly(FamilyId::Meixner, 2, params({{"a", q(1)}, {"c", q(1)}})), InvalidParams);
    EXPECT_THROW(family_poly(FamilyId::Charlier, 2, ParamSet{}), InvalidParams);
    EXPECT_THROW(family_poly(FamilyId::Hahn, 2, params({{"alpha", q(-1)}, {"beta", q(-1)}, {"N", kN}})), InvalidParams);
}

TEST(Families, LambdaMap) {
    EXPECT_EQ(lambda_map(q(1, 2), q(-3, 2)), X() * X());
    EXPECT_EQ(lambda_map(q(0), q(0)), (Poly{q(0), q(1), q(1)}));
    EXPECT_EQ(lambda_map(kAlpha, kBeta).eval(q(0)), q(0));
}

TEST(Families, Names) {
    for (FamilyId id : kAllFamilies) EXPECT_EQ(family_from_string(to_string(id)), id);
    EXPECT_FALSE(family_from_string("legendre").has_value());
}

TEST(Identities, CharlierDualityByHand) {
    // (-a)^2 1! c_1(2) = (-a) 2! c_2(1), both a^2 (2 - a)
    for (const Gaussian& a : {q(2), q(-3, 2), q(7, 5)}) {
        const Gaussian lhs = a * a * charlier(1, a).eval(q(2));
        const Gaussian rhs = -a * q(2) * charlier(2, a).eval(q(1));
        EXPECT_EQ(lhs, a * a * (q(2) - a));
        EXPECT_EQ(rhs, lhs);
    }
}

TEST(Identities, CharlierDifferenceEquation) {
    const Gaussian a = q(7, 5);
    for (std::size_t n = 0; n <= 10; ++n) {
        Poly c = charlier(n, a);
        Poly lhs = -X() * shift(c, q(-1)) + lin(a, q(1)) * c - shift(c, q(1)) * a;
        EXPECT_EQ(lhs, c * Gaussian(static_cast<long>(n)));
    }
}

TEST(Identities, AllFamiliesPassOnGrid) {
    const std::vector<std::pair<FamilyId, ParamSet>> cases = {
        {FamilyId::Charlier, params({{"a", q(2)}})},
        {FamilyId::Charlier, params({{"a", q(-3, 2)}})},
        {FamilyId::Charlier, params({{"a", q(7, 5)}})},
        {FamilyId::Meixner, params({{"a", q(3, 7)}, {"c", q(5, 3)}})},
        {FamilyId::Hahn, params({{"alpha", kAlpha}, {"beta", kBeta}, {"N", kN}})},
        {FamilyId::DualHahn, params({{"alpha", kAlpha}, {"beta", kBeta}, {"N", kN}})},
        {FamilyId::Hermite, ParamSet{}},
        {FamilyId::Laguerre, params({{"alpha", q(1, 4)}})},
        {FamilyId::Jacobi, params({{"alpha", kAlpha}, {"beta", kBeta}})},
    };
    for (const auto& [id, p] : cases) {
        auto r = family_identity_check(id, p, 8);
        EXPECT_EQ(r.status, Status::Pass) << report_text(r);
        EXPECT_FALSE(r.checks.empty());
    }
}

TEST(Identities, CharlierCoversAllFour) {
    auto r = family_identity_check(FamilyId::Charlier, params({{"a", q(2)}}), 8);
    std::set<std::string> names;
    for (const auto& c : r.checks) names.insert(c.name);
    EXPECT_TRUE(names.count("three-term recurrence"));
    EXPECT_TRUE(names.count("difference equation"));
    EXPECT_TRUE(names.count("forward difference ladder"));
    EXPECT_TRUE(names.count("duality"));
}
