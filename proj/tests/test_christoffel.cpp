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

#include "casinv/christoffel.hpp"
#include "oracles.hpp"

using namespace casinv;
using oracle::q;

namespace {

ParamSet params(std::initializer_list<std::pair<const char*, Gaussian>> kv) {
    ParamSet p;
    for (const auto& [k, v] : kv) p.set(k, v);
    return p;
}

Gaussian at(long v) { return Gaussian(v); }

}  // namespace

TEST(Christoffel, EmptySetGivesBaseSequence) {
    SequenceProvider seq(FamilyId::Charlier, params({{"a", q(2)}}));
    for (std::size_t n = 0; n <= 5; ++n) EXPECT_EQ(christoffel_q(seq, FiniteSet{}, n).q, charlier(n, q(2)));
}

TEST(Christoffel, CharlierLeadingLawAndRoundTrip) {
    const Gaussian a = q(2);
    SequenceProvider seq(FamilyId::Charlier, params({{"a", a}}));
    auto table = oracle::charlier_table(12, a);
    const FiniteSet F{1, 2};
    for (std::size_t n = 0; n <= 6; ++n) {
        auto r = christoffel_q(seq, F, n);
        ASSERT_FALSE(r.degenerate);
        EXPECT_EQ(*r.q.degree(), n);
        EXPECT_EQ(r.q * annihilator(F), r.numerator);
        // Phi_n by hand, 2x2
        const Gaussian phi = table[n].eval(at(1)) * table[n + 1].eval(at(2)) - table[n + 1].eval(at(1)) * table[n].eval(at(2));
        EXPECT_EQ(r.phi, phi);
        EXPECT_EQ(r.q.leading(), phi * Gaussian(1 / oracle::fact(n + 2)));
        EXPECT_TRUE(r.leading_law);
    }
}

TEST(Christoffel, CoincidentNodesRejected) {
    SequenceProvider seq(FamilyId::Charlier, params({{"a", q(2)}}));
    EXPECT_THROW(christoffel_q(seq, std::vector<Gaussian>{q(1), q(1)}, 2), InvalidParams);
}

TEST(Christoffel, MeixnerDegreeAndDivisor) {
    const Gaussian a = q(3, 7), c = q(5, 3);
    for (std::size_t n = 0; n <= 3; ++n) {
        auto r = christoffel_q_meixner(FiniteSet{1}, FiniteSet{1}, a, c, n);
        ASSERT_FALSE(r.degenerate);
        EXPECT_EQ(*r.q.degree(), n);
        // (x - 1)(x + c + 1) divides the numerator
        Poly divisor = Poly{q(-1), q(1)} * Poly{c + q(1), q(1)};
        EXPECT_EQ(exact_div(r.numerator, divisor) * divisor, r.numerator);
    }
}

TEST(Christoffel, QtildeCharlier) {
    const Gaussian a = q(2);
    auto minus = oracle::charlier_table(2, -a);  // I({1,2}) = {2}
    for (std::size_t n = 0; n <= 4; ++n) {
        Poly qt = qtilde_charlier(FiniteSet{1, 2}, a, n);
        EXPECT_EQ(*qt.degree(), n);
        EXPECT_EQ(qt.leading(), minus[2].eval(at(-static_cast<long>(n))) * Gaussian(1 / oracle::fact(n)));
    }
}

TEST(Christoffel, QtildeMeixnerWellFormed) {
    Poly qt = qtilde_meixner(FiniteSet{1}, FiniteSet{1}, q(3, 7), q(5, 3), 0);
    ASSERT_TRUE(qt.degree().has_value());
    EXPECT_EQ(*qt.degree(), 0u);
}

TEST(Christoffel, GammaMatchesProportionality) {
    for (const Gaussian& a : {q(2), q(-3, 2)}) {
        SequenceProvider seq(FamilyId::Charlier, params({{"a", a}}));
        for (const FiniteSet& F : {FiniteSet{1, 2}, FiniteSet{2, 3}, FiniteSet{1, 3}})
            for (std::size_t n = 0; n <= 5; ++n) {
                const Gaussian gamma = gamma_charlier(F, a, n);
                EXPECT_FALSE(gamma.is_zero());
                EXPECT_EQ(qtilde_charlier(F, a, n) * gamma, christoffel_q(seq, F, n).q) << to_text(F) << " n=" << n;
            }
    }
}

TEST(Christoffel, ProportionalityReports) {
    EXPECT_EQ(proportionality_check(ChristoffelKind::Charlier, {FiniteSet{1, 2}}, params({{"a", q(2)}}), 6).status, Status::Pass);
    EXPECT_EQ(proportionality_check(ChristoffelKind::Charlier, {FiniteSet{2, 3}}, params({{"a", q(-3, 2)}}), 6).status,
              Status::Pass);
    auto empty = proportionality_check(ChristoffelKind::Charlier, {FiniteSet{}}, params({{"a", q(2)}}), 3);
    EXPECT_EQ(empty.status, Status::SkippedDegenerate);
    EXPECT_FALSE(empty.notes.empty() && empty.checks.empty());
    auto mx = proportionality_check(ChristoffelKind::Meixner, {FiniteSet{1, 2}, FiniteSet{2}},
                                    params({{"a", q(3, 7)}, {"c", q(5, 3)}}), 3);
    EXPECT_EQ(mx.status, Status::Pass) << report_text(mx);
}

TEST(Christoffel, ProportionalitySweep) {
    for (const Gaussian& a : {q(2), q(-3, 2)})
        for (const auto& F : enumerate_sets(1, 5, 1, 2)) {
            auto r = proportionality_check(ChristoffelKind::Charlier, {F}, params({{"a", a}}), 5);
            EXPECT_EQ(r.status, Status::Pass) << to_text(F) << "\n" << report_text(r);
        }
}

TEST(Christoffel, RatioIdentity) {
    EXPECT_EQ(ratio_identity_check(FiniteSet{1, 2}, q(2), 8).status, Status::Pass);
    EXPECT_EQ(ratio_identity_check(FiniteSet{1, 3}, q(7, 5), 8).status, Status::Pass);
    // base case by hand: C^a_{F,0} = (-1)^{w_F} C^{-a}_{I(F),0}; F={1,2}: a^2/2 = c_2^{-a}(0)
    EXPECT_EQ(casorati_charlier(FiniteSet{1, 2}, q(2)).eval(q(0)), oracle::charlier_table(2, q(-2))[2].eval(q(0)));
}

TEST(Christoffel, RatioIdentitySweep) {
    for (const Gaussian& a : {q(2), q(7, 5)})
        for (const auto& F : enumerate_sets(1, 6, 1, 3)) {
            auto r = ratio_identity_check(F, a, 8);
            EXPECT_EQ(r.status, Status::Pass) << to_text(F) << "\n" << report_text(r);
        }
}

TEST(Measures, DualHahnOrthogonality) {
    MeasureSpec m;
    m.kind = MeasureKind::DualHahnBase;
    m.params = params({{"alpha", q(1)}, {"beta", q(1)}, {"N", q(3)}});
    const Gaussian al = q(1), be = q(1);
    auto r1 = dual_hahn(1, al, be, q(3)), r0 = dual_hahn(0, al, be, q(3));
    auto ip = discrete_inner(m, r1, r0);
    EXPECT_TRUE(ip.exact);
    EXPECT_TRUE(ip.value.is_zero());
    auto r4 = dual_hahn(4, al, be, q(3));
    EXPECT_TRUE(discrete_inner(m, r4, r4).value.is_zero());
    EXPECT_FALSE(discrete_inner(m, r1, r1).value.is_zero());
}

TEST(Measures, DualHahnOrthogonalityAllPairs) {
    for (long N : {3, 5, 6}) {
        MeasureSpec m;
        m.kind = MeasureKind::DualHahnBase;
        m.params = params({{"alpha", q(1, 3)}, {"beta", q(1, 5)}, {"N", at(N)}});
        std::vector<Poly> R;
        for (long n = 0; n <= N; ++n) R.push_back(dual_hahn(n, q(1, 3), q(1, 5), at(N)));
        for (long n = 0; n <= N; ++n)
            for (long k = n + 1; k <= N; ++k) EXPECT_TRUE(discrete_inner(m, R[n], R[k]).value.is_zero()) << N << n << k;
    }
}

TEST(Measures, CharlierNorms) {
    const long X = 200;
    for (const Rational& a : {Rational(1, 2), Rational(1)}) {
        MeasureSpec m;
        m.kind = MeasureKind::CharlierBase;
        m.params = params({{"a", Gaussian(a)}});
        m.truncation = X;
        const Rational e = oracle::exp_series(a, X);
        // exp tail beyond X is below 2 a^{X+1}/(X+1)! for a <= 1
        Rational exp_tail = 2;
        for (long k = 1; k <= X + 1; ++k) exp_tail = exp_tail * a / k;
        for (std::size_t n = 0; n <= 5; ++n) {
            Poly c = charlier(n, Gaussian(a));
            auto ip = discrete_inner(m, c, c);
            EXPECT_FALSE(ip.exact);
            Rational scale = 1;
            for (std::size_t k = 0; k < n; ++k) scale *= a;
            scale /= oracle::fact(n);
            const Rational diff = abs(ip.value.re() - scale * e);
            EXPECT_TRUE(ip.value.is_real());
            EXPECT_LE(diff, ip.bound + scale * exp_tail) << "n=" << n;
            EXPECT_LT(ip.bound, Rational(1, 1000000) * Rational(1, 1000000));
        }
    }
}

TEST(Measures, ClaimCheck) {
    auto r = claim_d_check(FiniteSet{1, 2}, Rational(1, 2), 4, 200);
    EXPECT_EQ(r.status, Status::Pass) << report_text(r);
    EXPECT_THROW(claim_d_check(FiniteSet{1, 2}, Rational(-1, 2), 2, 200), InvalidParams);
}

TEST(Measures, SzeCheck) {
    auto p = params({{"alpha", q(1)}, {"beta", q(2)}, {"N", q(6)}});
    auto r = sze_check(p, {FiniteSet{1}, FiniteSet{}, FiniteSet{}}, 2);
    EXPECT_EQ(r.status, Status::Pass) << report_text(r);
    auto single = sze_check(p, {FiniteSet{1}, FiniteSet{1}, FiniteSet{1}}, 2);
    EXPECT_EQ(single.status, Status::Pass) << report_text(single);
    auto base = sze_check(p, {FiniteSet{}, FiniteSet{}, FiniteSet{}}, 2);
    EXPECT_EQ(base.status, Status::Pass) << report_text(base);
}

TEST(Measures, SzeSkipsVanishingPhi) {
    auto p = params({{"alpha", q(1)}, {"beta", q(2)}, {"N", q(6)}});
    auto r = sze_check(p, {FiniteSet{2}, FiniteSet{}, FiniteSet{}}, 2);
    EXPECT_NE(r.status, Status::Fail);
    bool skipped = false;
    for (const auto& c : r.checks) skipped = skipped || c.status == Status::SkippedDegenerate;
    EXPECT_TRUE(skipped) << report_text(r);
}
