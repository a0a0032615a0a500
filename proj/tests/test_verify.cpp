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

#include "casinv/limits.hpp"
#include "casinv/theorems.hpp"
#include "oracles.hpp"

using namespace casinv;
using oracle::q;

namespace {

ParamSet params(std::initializer_list<std::pair<const char*, Gaussian>> kv) {
    ParamSet p;
    for (const auto& [k, v] : kv) p.set(k, v);
    return p;
}

const ParamSet kHahn = params({{"alpha", q(1, 3)}, {"beta", q(1, 5)}, {"N", q(17, 2)}});
const ParamSet kJacobi = params({{"alpha", q(1, 3)}, {"beta", q(1, 5)}});
const ParamSet kMeixner = params({{"a", q(3, 7)}, {"c", q(5, 3)}});
const ParamSet kLaguerre = params({{"alpha", q(1, 4)}});

/// Hermite Wronskian at a point from the recurrence table and cofactors.
Gaussian hermite_wronskian_at(const FiniteSet& F, const Gaussian& x) {
    auto table = oracle::hermite_table(F.empty() ? 0 : F.max());
    std::vector<std::vector<Poly>> rows;
    Rational norm = 1;
    for (auto f : F) {
        std::vector<Poly> row;
        Poly p = table[f];
        for (std::size_t j = 0; j < F.size(); ++j) {
            row.push_back(Poly(p.eval(x)));
            p = derivative(p);
        }
        rows.push_back(row);
        norm *= oracle::fact(f);
    }
    for (std::size_t j = 1; j < F.size(); ++j) norm *= Rational(1L << j);
    return oracle::cofactor_det(rows).eval(q(0)) * Gaussian(1 / norm);
}

}  // namespace

TEST(Invariance, CharlierExample) {
    auto r = verify_invariance_detailed(TheoremId::CharlierInv, {FiniteSet{1, 2}}, params({{"a", q(2)}}));
    EXPECT_EQ(r.report.status, Status::Pass);
    const Poly expected = Poly{q(4), q(-3), q(1)} * q(1, 2);
    EXPECT_EQ(*r.lhs, expected);
    EXPECT_EQ(*r.rhs, expected);
}

TEST(Invariance, CharlierEmptySet) {
    auto r = verify_invariance_detailed(TheoremId::CharlierInv, {FiniteSet{}}, params({{"a", q(2)}}));
    EXPECT_EQ(r.report.status, Status::Pass);
    EXPECT_EQ(*r.lhs, Poly(1));
    EXPECT_EQ(*r.rhs, Poly(1));
    EXPECT_FALSE(r.report.notes.empty());
}

TEST(Invariance, HermiteExamples) {
    auto r = verify_invariance_detailed(TheoremId::HermiteInv, {FiniteSet{1, 2}}, ParamSet{});
    EXPECT_EQ(r.report.status, Status::Pass);
    EXPECT_EQ(*r.lhs, (Poly{q(1), q(0), q(2)}));
    EXPECT_EQ(*r.rhs, (Poly{q(1), q(0), q(2)}));
    auto table = oracle::hermite_table(7);
    for (unsigned k = 1; k <= 6; ++k) {
        std::vector<unsigned> v;
        for (unsigned i = 1; i <= k; ++i) v.push_back(i);
        const Poly expected = compose_affine(table[k], -Gaussian::i(), q(0)) * (i_power(k) * Gaussian(1 / oracle::fact(k)));
        EXPECT_EQ(wronskian_hermite(FiniteSet(v)), expected) << "k=" << k;
    }
}

TEST(Invariance, CharlierZeroReduction) {
    auto r = verify_invariance(TheoremId::CharlierInv, {FiniteSet{0, 2, 5}}, params({{"a", q(7, 5)}}));
    EXPECT_EQ(r.status, Status::Pass);
    bool found = false;
    for (const auto& c : r.checks) found = found || c.name == "reduction to {1,4}";
    EXPECT_TRUE(found);
    EXPECT_EQ(casorati_charlier(FiniteSet{0, 2, 5}, q(7, 5)), casorati_charlier(FiniteSet{1, 4}, q(7, 5)));
}

TEST(Invariance, EachTheoremOnce) {
    EXPECT_EQ(verify_invariance(TheoremId::MeixnerInv, {FiniteSet{1, 2}, FiniteSet{2}}, kMeixner).status, Status::Pass);
    EXPECT_EQ(verify_invariance(TheoremId::LaguerreInv, {FiniteSet{1, 3}, FiniteSet{2}}, kLaguerre).status, Status::Pass);
    EXPECT_EQ(verify_invariance(TheoremId::HahnInv, {FiniteSet{1, 2}, FiniteSet{3}, FiniteSet{1, 3}}, kHahn).status,
              Status::Pass);
    EXPECT_EQ(verify_invariance(TheoremId::JacobiInv, {FiniteSet{1, 2}, FiniteSet{4}}, kJacobi).status, Status::Pass);
}

TEST(Invariance, EmptyComponentsRejected) {
    EXPECT_THROW(verify_invariance(TheoremId::MeixnerInv, {FiniteSet{}, FiniteSet{2}}, kMeixner), EmptyComponent);
    EXPECT_THROW(verify_invariance(TheoremId::HahnInv, {FiniteSet{1}, FiniteSet{}, FiniteSet{2}}, kHahn), EmptyComponent);
}

TEST(Invariance, HahnSignIsFalsifiable) {
    // with the opposite sign the comparison must fail whenever both sides are nonzero
    const auto sets = enumerate_sets(1, 3, 1, 2);
    int odd = 0;
    for (const auto& F1 : sets)
        for (const auto& F3 : sets) {
            auto r = verify_invariance_detailed(TheoremId::HahnInv, {F1, FiniteSet{2}, F3}, kHahn);
            if (r.report.status != Status::Pass) continue;
            EXPECT_NE(*r.lhs, -*r.rhs);
            odd += *r.lhs->degree() % 2;
        }
    EXPECT_GT(odd, 0);
}

TEST(Invariance, RandomPointRecheck) {
    std::mt19937 rng(2026);
    auto points = [&] {
        std::vector<Gaussian> v;
        for (int i = 0; i < 3; ++i) v.emplace_back(oracle::random_rational(rng));
        return v;
    };
    for (const Gaussian& a : {q(2), q(-3, 2), q(7, 5)})
        for (const auto& F : enumerate_sets(0, 6, 1, 3)) {
            auto r = verify_invariance(TheoremId::CharlierInv, {F}, params({{"a", a}}));
            ASSERT_EQ(r.status, Status::Pass);
            for (const auto& x : points())
                EXPECT_EQ(casorati_charlier_at(F, a, x),
                          sign_power(weight(F)) * casorati_charlier_at(involute(F), -a, -x));
        }
    for (const auto& F : enumerate_sets(0, 6, 1, 3)) {
        ASSERT_EQ(verify_invariance(TheoremId::HermiteInv, {F}, ParamSet{}).status, Status::Pass);
        for (const auto& x : points())
            EXPECT_EQ(hermite_wronskian_at(F, x),
                      i_power(weight(F)) * hermite_wronskian_at(involute(F), -Gaussian::i() * x)) << to_text(F);
    }
    const std::vector<std::pair<TheoremId, ParamSet>> others = {
        {TheoremId::MeixnerInv, kMeixner}, {TheoremId::LaguerreInv, kLaguerre}, {TheoremId::JacobiInv, kJacobi}};
    for (const auto& [t, p] : others)
        for (const auto& tuple : sweep_tuples(t, SweepBounds{1, 3, 2, false})) {
            auto r = verify_invariance_detailed(t, tuple, p);
            if (r.report.status != Status::Pass) continue;
            for (const auto& x : points()) EXPECT_EQ(r.lhs->eval(x) - r.rhs->eval(x), q(0));
        }
}

TEST(Sweep, CanonicalOrderAndCounts) {
    const std::vector<ParamSet> grid{params({{"a", q(2)}}), params({{"a", q(7, 5)}})};
    SweepBounds b{0, 4, 2, false};
    auto serial = sweep(TheoremId::CharlierInv, b, grid, 1);
    auto threaded = sweep(TheoremId::CharlierInv, b, grid, 3);
    EXPECT_EQ(serial.reports, threaded.reports);
    EXPECT_EQ(serial.pass, 2u * (5u + 10u));
    EXPECT_TRUE(serial.ok());
}

TEST(Sweep, EmptyComponentsCountAsSkipped) {
    SweepBounds b{0, 2, 1, true};
    auto s = sweep(TheoremId::MeixnerInv, b, {kMeixner});
    EXPECT_EQ(s.fail, 0u);
    EXPECT_EQ(s.skipped, 7u);  // 4x4 tuples, 7 with an empty component
    EXPECT_EQ(s.pass, 9u);
}

TEST(Report, JsonRoundTrip) {
    for (auto t : kAllTheorems) {
        ParamSet p = t == TheoremId::CharlierInv ? params({{"a", q(7, 5)}})
                     : t == TheoremId::MeixnerInv  ? kMeixner
                     : t == TheoremId::LaguerreInv ? kLaguerre
                     : t == TheoremId::HahnInv     ? kHahn
                     : t == TheoremId::JacobiInv   ? kJacobi
                                                   : ParamSet{};
        SetTuple sets(component_count(t), FiniteSet{1, 3});
        auto r = verify_invariance(t, sets, p);
        EXPECT_EQ(parse_report(print_report(r)), r);
        auto j = to_json(r);
        for (const char* field : {"theorem", "inputs", "status", "lhs", "rhs", "notes", "version"})
            EXPECT_TRUE(j.contains(field)) << field;
    }
    VerificationReport fail;
    fail.theorem = "x";
    fail.add({"c", Status::Fail, "1", "2", "note"});
    fail.settle();
    EXPECT_EQ(parse_report(print_report(fail)), fail);
    EXPECT_THROW(parse_report("{not json"), ParseError);
}

TEST(Limits, CharlierHermiteThreeDecades) {
    LimitOptions o;
    o.n = 3;
    auto r = verify_limit(LimitKind::CharlierToHermite, {Rational(10), Rational(100), Rational(1000)}, o);
    EXPECT_EQ(r.status, Status::Pass) << report_text(r);
}

TEST(Limits, MeixnerLaguerreDecreases) {
    LimitOptions o;
    o.n = 2;
    auto r = verify_limit(LimitKind::MeixnerToLaguerre, {Rational(10), Rational(100), Rational(1000)}, o);
    for (const auto& c : r.checks) {
        if (c.name.rfind("decrease", 0) == 0) {
            EXPECT_EQ(c.status, Status::Pass) << c.name;
        }
    }
}

TEST(Limits, WronskianTargets) {
    LimitOptions o;
    auto s = limit_sample(LimitKind::WronskianLimitCH, Rational(10), o);
    EXPECT_EQ(s.target, wronskian_hermite(FiniteSet{1, 2}).eval(Gaussian(o.probe)));
    auto r = verify_limit(LimitKind::WronskianLimitCH, {Rational(10), Rational(100), Rational(1000), Rational(10000)}, o);
    EXPECT_EQ(r.status, Status::Pass) << report_text(r);
}

TEST(Limits, BadScales) {
    EXPECT_THROW(verify_limit(LimitKind::CharlierToHermite, {}), InvalidParams);
    EXPECT_THROW(verify_limit(LimitKind::MeixnerToLaguerre, {Rational(1, 2)}), InvalidParams);
    for (auto k : kAllLimits) EXPECT_EQ(limit_from_string(to_string(k)), k);
}
