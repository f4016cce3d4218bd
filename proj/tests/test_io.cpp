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

#include <random>

#include "chaincodes/error.hpp"
#include "chaincodes/io.hpp"
#include "support.hpp"

namespace chaincodes {
namespace {

TEST(Io, FormatPoly) {
    auto F = Field::create(2, 1);
    EXPECT_EQ(io::format_poly(Poly::from_values(F, {1, 1, 0, 1})), "x^3 + x + 1");
    EXPECT_EQ(io::format_poly(Poly(F)), "0");
    auto F3 = Field::create(3, 1);
    EXPECT_EQ(io::format_poly(Poly::from_values(F3, {2, 0, 2})), "2*x^2 + 2");
    auto F4 = Field::create(2, 2);
    EXPECT_EQ(io::format_poly(Poly::from_values(F4, {3, 2}), FieldDisplay::Polynomial), "y*x + y+1");
    EXPECT_EQ(io::format_poly(Poly::from_values(F4, {0, 3}), FieldDisplay::Polynomial), "(y+1)*x");
}

TEST(Io, FormatAmbient) {
    auto F = Field::create(2, 1);
    ChainRing R(F);
    auto amb = Ambient::create(F, 7, R.delta_alpha(F->one(), F->one()));
    const auto a = AmbientElement::monomial(amb, R.delta_alpha(F->one(), F->one()), 5) +
                   AmbientElement::monomial(amb, R.u_power(2), 4) + AmbientElement::one(amb);
    EXPECT_EQ(io::format_ambient(a), "(u^2+1)*x^5 + u^2*x^4 + 1");
    EXPECT_EQ(io::format_ambient(AmbientElement::zero(amb)), "0");
}

TEST(Io, ParseRoundTrip) {
    std::mt19937_64 rng(3);
    for (auto [p, m] : {std::pair{2, 1}, std::pair{3, 1}, std::pair{2, 2}, std::pair{5, 1}}) {
        auto F = Field::create(p, m);
        auto amb = Ambient::create(F, 6, ChainRing(F).delta_alpha(testing::random_unit(*F, rng), testing::random_unit(*F, rng)));
        for (int i = 0; i < 50; ++i) {
            const auto a = testing::random_ambient(amb, rng);
            EXPECT_EQ(io::parse_ambient(amb, io::format_ambient(a)), a);
            const auto f = testing::random_poly(F, 9, rng);
            EXPECT_EQ(io::parse_poly(F, io::format_poly(f)), f);
            const auto r = testing::random_ring(*F, rng);
            EXPECT_EQ(io::parse_ring(*F, amb->ring().format(r)), r);
        }
    }
}

TEST(Io, ParseAcceptsLooseInput) {
    auto F = Field::create(2, 1);
    ChainRing R(F);
    auto amb = Ambient::create(F, 3, R.one());
    EXPECT_EQ(io::parse_ambient(amb, "x^3"), AmbientElement::one(amb));  // folded
    EXPECT_EQ(io::parse_ambient(amb, "x+x"), AmbientElement::zero(amb));
    EXPECT_EQ(io::parse_ring(*F, "u^5 + 1"), R.one());
    EXPECT_EQ(io::parse_poly(F, "x^2+ 1*x^2"), Poly(F));
}

TEST(Io, ParseErrors) {
    auto F = Field::create(2, 1);
    auto amb = Ambient::create(F, 3, ChainRing(F).one());
    for (const char* bad : {"", "x +", "(u+1*x", "2*x", "x^", "u*x^a", "(u+1)x", "y"}) {
        EXPECT_THROW(io::parse_ambient(amb, bad), Error) << bad;
    }
    EXPECT_THROW(io::parse_poly(F, "3"), Error);
}

TEST(Io, DecompositionJsonRoundTrip) {
    std::mt19937_64 rng(5);
    for (const auto& inst : testing::property_instances()) {
        auto d = testing::decompose_random(inst, rng);
        if (d.tau_is_involution_domain()) d = canonical_rearrange(d);
        const auto j = io::to_json(d);
        const auto back = io::decomposition_from_json(io::Json::parse(j.dump()));
        EXPECT_TRUE(verify_decomposition(back).empty());
        EXPECT_EQ(io::to_json(back), j);
    }
}

TEST(Io, LoadedCorruptionIsDetected) {
    auto F = Field::create(2, 1);
    const auto d = canonical_rearrange(compute_decomposition(F, 7, F->one(), F->one()));
    auto j = io::to_json(d);
    j["factors"][1]["omega"]["coeffs"][0] = 0;
    EXPECT_FALSE(verify_decomposition(io::decomposition_from_json(j)).empty());
    auto k = io::to_json(d);
    k["tau"] = {1, 2, 3};
    EXPECT_FALSE(verify_decomposition(io::decomposition_from_json(k)).empty());
    auto bad = io::to_json(d);
    bad.erase("factors");
    EXPECT_THROW(io::decomposition_from_json(bad), Error);
    auto tau0 = io::to_json(d);
    tau0["tau"] = {0, 2, 1};
    EXPECT_THROW(io::decomposition_from_json(tau0), Error);
}

TEST(Io, CodeRecordJson) {
    auto F = Field::create(2, 1);
    const auto d = canonical_rearrange(compute_decomposition(F, 7, F->one(), F->one()));
    const auto j = io::to_json(dual_code(d, CodeIndex({2, 2, 2})));
    EXPECT_EQ(j["index"], io::Json::parse("[2,2,2]"));
    EXPECT_EQ(j["log_q_size"], 14);
    EXPECT_EQ(j["lambda"], io::Json::parse("[1,0,1,0]"));
    EXPECT_EQ(j["self_dual"], true);
    EXPECT_EQ(j["text"], "u^2");
    EXPECT_FALSE(io::to_json(build_code(d, CodeIndex({2, 2, 2}))).contains("self_dual"));
}

}  // namespace
}  // namespace chaincodes
