/*
   Copyright 2026 The chaincodes Authors

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

#include <algorithm>
#include <numeric>
#include <random>

#include "chaincodes/decomposition.hpp"
#include "chaincodes/error.hpp"
#include "chaincodes/io.hpp"
#include "support.hpp"

namespace chaincodes {
namespace {

using testing::random_unit;

Decomposition binary_seven() {
    auto F = Field::create(2, 1);
    return compute_decomposition(F, 7, F->one(), F->one());
}

TEST(Decomposition, BinaryLengthSevenIdempotents) {
    const auto d = binary_seven();
    ASSERT_EQ(d.r(), 3U);
    const auto& amb = d.ambient();
    EXPECT_EQ(d.factors[0].e,
              io::parse_ambient(amb, "x^6 + (u^2+1)*x^5 + x^4 + (u^2+1)*x^3 + x^2 + (u^2+1)*x + 1"));
    EXPECT_EQ(d.factors[1].e, io::parse_ambient(amb, "x^4 + x^2 + (u^2+1)*x + 1"));
    EXPECT_EQ(d.factors[2].e, io::parse_ambient(amb, "x^6 + (u^2+1)*x^5 + (u^2+1)*x^3 + 1"));
    EXPECT_EQ(d.factors[1].e * d.factors[2].e, AmbientElement::zero(amb));
    EXPECT_EQ(d.tau, (std::vector<std::size_t>{0, 2, 1}));
    EXPECT_EQ(d.rho, 1U);
    EXPECT_EQ(d.eps_pairs, 1U);
    EXPECT_TRUE(d.self_dual_ambient());
    EXPECT_TRUE(verify_decomposition(d).empty());
}

TEST(Decomposition, LengthOneHasTrivialIdempotent) {
    std::mt19937_64 rng(2);
    for (auto [p, m] : {std::pair{2, 1}, std::pair{3, 1}, std::pair{2, 2}, std::pair{5, 1}}) {
        auto F = Field::create(p, m);
        const auto d = compute_decomposition(F, 1, F->one(), random_unit(*F, rng));
        ASSERT_EQ(d.r(), 1U);
        EXPECT_TRUE(d.factors[0].eps.is_one());
        EXPECT_EQ(d.factors[0].e, AmbientElement::one(d.ambient()));
        EXPECT_EQ(d.tau, std::vector<std::size_t>{0});
    }
}

TEST(Decomposition, RejectsBadParameters) {
    auto F = Field::create(3, 1);
    EXPECT_THROW(compute_decomposition(F, 4, F->element(2), F->zero()), Error);
    EXPECT_THROW(compute_decomposition(F, 4, F->zero(), F->one()), Error);
    try {
        compute_decomposition(F, 9, F->one(), F->one());
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::NotCoprime);
    }
}

TEST(Decomposition, TauTwoWaysAgreeForFifteen) {
    auto F = Field::create(2, 1);
    const auto d = compute_decomposition(F, 15, F->one(), F->one());
    EXPECT_EQ(d.r(), 5U);
    EXPECT_EQ(compute_tau(d), reciprocal_tau(d));
    // a brute-force reciprocal match, independent of both
    for (std::size_t j = 0; j < d.r(); ++j) {
        const Poly rec = monic(reciprocal(d.factors[j].f));
        const auto it = std::find_if(d.factors.begin(), d.factors.end(), [&](const FactorData& f) { return f.f == rec; });
        ASSERT_NE(it, d.factors.end());
        EXPECT_EQ(d.tau[j], static_cast<std::size_t>(it - d.factors.begin()));
    }
}

TEST(Decomposition, CanonicalRearrangeOnBinarySevenIsIdentity) {
    const auto d = binary_seven();
    const auto c = canonical_rearrange(d);
    EXPECT_TRUE(c.rearranged);
    for (std::size_t j = 0; j < d.r(); ++j) EXPECT_EQ(c.factors[j].f, d.factors[j].f);
    EXPECT_EQ(c.tau, d.tau);
    EXPECT_TRUE(verify_decomposition(c).empty());
}

TEST(Decomposition, CanonicalRearrangeLayout) {
    auto F = Field::create(2, 1);
    for (std::size_t n : {15U, 21U, 31U, 9U, 17U}) {
        const auto d = canonical_rearrange(compute_decomposition(F, n, F->one(), F->one()));
        const std::size_t rho = *d.rho, eps = *d.eps_pairs;
        EXPECT_EQ(rho + 2 * eps, d.r());
        for (std::size_t j = 0; j < rho; ++j) EXPECT_EQ(d.tau[j], j);
        for (std::size_t i = 0; i < eps; ++i) {
            EXPECT_EQ(d.tau[rho + i], rho + eps + i);
            EXPECT_TRUE(canonical_less(d.factors[rho + i].f, d.factors[rho + eps + i].f));
        }
        for (std::size_t j = 1; j < rho; ++j) EXPECT_TRUE(canonical_less(d.factors[j - 1].f, d.factors[j].f));
        for (std::size_t i = 1; i < eps; ++i) {
            EXPECT_TRUE(canonical_less(d.factors[rho + i - 1].f, d.factors[rho + i].f));
        }
        AmbientElement sum = AmbientElement::zero(d.ambient());
        for (const auto& f : d.factors) sum += f.e;
        EXPECT_EQ(sum, AmbientElement::one(d.ambient()));
        EXPECT_TRUE(verify_decomposition(d).empty()) << n;
    }
}

TEST(Decomposition, AllSelfReciprocal) {
    // x^3 - 1 over F_4 splits into linear factors x - 1, x - w, x - w^2; only
    // x - 1 is self-reciprocal. Over F_2 with n = 3: x + 1 and x^2 + x + 1, both
    // self-reciprocal.
    auto F = Field::create(2, 1);
    const auto d = compute_decomposition(F, 3, F->one(), F->one());
    const auto c = canonical_rearrange(d);
    EXPECT_EQ(c.rho, 2U);
    EXPECT_EQ(c.eps_pairs, 0U);
    EXPECT_EQ(c.tau, (std::vector<std::size_t>{0, 1}));
    for (std::size_t j = 0; j < d.r(); ++j) EXPECT_EQ(c.factors[j].f, d.factors[j].f);
}

TEST(Decomposition, RearrangeNeedsInvolution) {
    auto F = Field::create(5, 1);
    const auto d = compute_decomposition(F, 4, F->element(2), F->one());
    EXPECT_FALSE(d.tau_is_involution_domain());
    EXPECT_FALSE(d.rho.has_value());
    EXPECT_THROW(canonical_rearrange(d), Error);
}

TEST(Decomposition, TauIsEquivariantUnderReordering) {
    auto F = Field::create(2, 1);
    const auto d = compute_decomposition(F, 21, F->one(), F->one());
    std::vector<std::size_t> perm(d.r());
    std::iota(perm.begin(), perm.end(), 0);
    std::mt19937_64 rng(4);
    std::shuffle(perm.begin(), perm.end(), rng);
    std::vector<Poly> shuffled;
    for (auto i : perm) shuffled.push_back(d.factors[i].f);
    const auto s = decomposition_from_factors(F, 21, F->one(), F->one(), shuffled);
    // s index k holds d index perm[k]; tau must be conjugated accordingly
    for (std::size_t k = 0; k < s.r(); ++k) EXPECT_EQ(perm[s.tau[k]], d.tau[perm[k]]);
    EXPECT_TRUE(verify_decomposition(s).empty());
}

TEST(Decomposition, FromFactorsRejectsNonFactorization) {
    auto F = Field::create(2, 1);
    std::vector<Poly> wrong{Poly::from_values(F, {1, 1}), Poly::from_values(F, {1, 1, 0, 1})};
    EXPECT_THROW(decomposition_from_factors(F, 7, F->one(), F->one(), wrong), Error);
}

TEST(Decomposition, DualDecompositionParameters) {
    auto F = Field::create(5, 1);
    const auto d = compute_decomposition(F, 6, F->element(2), F->element(3));
    const auto dd = dual_decomposition(d);
    EXPECT_TRUE(compatible(*dd.ambient(), *d.ambient()->dual()));
    EXPECT_TRUE(verify_decomposition(dd).empty());
    // e_j(x^{-1}) is the tau(j)-th idempotent of the dual ambient
    for (std::size_t j = 0; j < d.r(); ++j) EXPECT_EQ(tau_map(d.factors[j].e), dd.factors[d.tau[j]].e);
}

TEST(Decomposition, VerifyCatchesCorruption) {
    auto d = binary_seven();
    d.factors[1].g = d.factors[1].g + Poly::constant(d.field, d.field->one());
    EXPECT_FALSE(verify_decomposition(d).empty());
    auto e = binary_seven();
    std::swap(e.tau[1], e.tau[2]);
    e.tau[0] = 1;
    EXPECT_FALSE(verify_decomposition(e).empty());
}

class DecompositionProperties : public ::testing::TestWithParam<testing::Instance> {};

TEST_P(DecompositionProperties, Identities) {
    std::mt19937_64 rng(41 + GetParam().n);
    for (int trial = 0; trial < 3; ++trial) {
        const auto d = testing::decompose_random(GetParam(), rng);
        const Poly xn = xn_minus(d.field, d.n, d.delta);
        const Poly mod = xn * xn;
        Poly total(d.field);
        AmbientElement e_total = AmbientElement::zero(d.ambient());
        for (std::size_t j = 0; j < d.r(); ++j) {
            const auto& fj = d.factors[j];
            const Poly f2 = fj.f * fj.f;
            EXPECT_TRUE((fj.g * fj.cofactor * fj.cofactor + fj.h * f2).is_one());
            EXPECT_EQ((fj.eps * fj.eps) % mod, fj.eps);
            EXPECT_TRUE(((fj.omega * fj.omega_inv) % f2).is_one());
            EXPECT_EQ((xn * d.field->inv(d.alpha)) % f2, (fj.omega * fj.f) % f2);
            EXPECT_EQ(fj.e * fj.e, fj.e);
            EXPECT_EQ(d.factors[d.tau[j]].degree, fj.degree);
            for (std::size_t l = j + 1; l < d.r(); ++l) {
                EXPECT_TRUE(((fj.eps * d.factors[l].eps) % mod).is_zero());
                EXPECT_TRUE((fj.e * d.factors[l].e).is_zero());
            }
            total += fj.eps;
            e_total += fj.e;
        }
        EXPECT_TRUE((total % mod).is_one());
        EXPECT_EQ(e_total, AmbientElement::one(d.ambient()));
        EXPECT_EQ(reciprocal_tau(d), d.tau);
        EXPECT_TRUE(verify_decomposition(d).empty());
        if (d.tau_is_involution_domain()) {
            for (std::size_t j = 0; j < d.r(); ++j) EXPECT_EQ(d.tau[d.tau[j]], j);
            EXPECT_TRUE(verify_decomposition(canonical_rearrange(d)).empty());
        }
    }
}

INSTANTIATE_TEST_SUITE_P(Property, DecompositionProperties, ::testing::ValuesIn(testing::property_instances()));

}  // namespace
}  // namespace chaincodes
