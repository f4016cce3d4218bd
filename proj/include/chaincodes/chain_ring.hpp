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

#pragma once

#include <array>
#include <memory>
#include <string>
#include <vector>

#include "chaincodes/field.hpp"

namespace chaincodes {

/// c[0] + u c[1] + u^2 c[2] + u^3 c[3] in R = F_q[u] / <u^4>.
struct RingElement {
    std::array<FieldElement, 4> c{};

    bool is_zero() const noexcept { return c[0].is_zero() && c[1].is_zero() && c[2].is_zero() && c[3].is_zero(); }
    /// R is a chain ring with maximal ideal <u>.
    bool is_unit() const noexcept { return !c[0].is_zero(); }
    /// Largest k with the element in <u^k>; 4 for zero.
    int u_valuation() const noexcept;

    friend bool operator==(const RingElement&, const RingElement&) = default;
};

/// Arithmetic of R over a fixed F_q.
class ChainRing {
   public:
    explicit ChainRing(FieldPtr field);

    const FieldPtr& field() const noexcept { return field_; }

    RingElement zero() const noexcept { return {}; }
    RingElement one() const noexcept { return make(field_->one()); }
    RingElement u_power(int k) const noexcept;
    RingElement make(FieldElement c0, FieldElement c1 = {}, FieldElement c2 = {}, FieldElement c3 = {}) const noexcept {
        return RingElement{{c0, c1, c2, c3}};
    }
    /// delta + alpha u^2, the shift constant of the codes studied here.
    RingElement delta_alpha(FieldElement delta, FieldElement alpha) const noexcept { return make(delta, {}, alpha, {}); }

    RingElement add(const RingElement& a, const RingElement& b) const noexcept;
    RingElement sub(const RingElement& a, const RingElement& b) const noexcept;
    RingElement neg(const RingElement& a) const noexcept;
    RingElement mul(const RingElement& a, const RingElement& b) const noexcept;
    RingElement scale(FieldElement s, const RingElement& a) const noexcept;
    RingElement inv(const RingElement& a) const;

    std::string format(const RingElement& a, FieldDisplay display = FieldDisplay::Integer) const;

   private:
    FieldPtr field_;
};

}  // namespace chaincodes
