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

#include <memory>

#include "chaincodes/ambient.hpp"
#include "chaincodes/poly.hpp"

namespace chaincodes {

class BigQuotient;
using BigQuotientPtr = std::shared_ptr<const BigQuotient>;

/**
 * A + vA with A = F_q[x] / <(x^n - delta)^2> and v^2 = alpha^{-1}(x^n - delta).
 *
 * The ring carries the matching ambient R[x] / <x^n - (delta + alpha u^2)>
 * so that psi_map knows its codomain.
 */
class BigQuotient {
   public:
    static BigQuotientPtr create(FieldPtr field, std::size_t n, FieldElement delta, FieldElement alpha);

    const FieldPtr& field() const noexcept { return field_; }
    std::size_t length() const noexcept { return n_; }
    FieldElement delta() const noexcept { return delta_; }
    FieldElement alpha() const noexcept { return alpha_; }
    /// (x^n - delta)^2
    const Poly& modulus() const noexcept { return modulus_; }
    /// alpha^{-1}(x^n - delta), the value of v^2.
    const Poly& v_square() const noexcept { return v_square_; }
    const AmbientPtr& ambient() const noexcept { return ambient_; }

   private:
    BigQuotient(FieldPtr field, std::size_t n, FieldElement delta, FieldElement alpha);

    FieldPtr field_;
    std::size_t n_;
    FieldElement delta_;
    FieldElement alpha_;
    Poly modulus_;
    Poly v_square_;
    AmbientPtr ambient_;
};

/// xi0 + v xi1 with both coordinates reduced mod (x^n - delta)^2.
class BigQuotientElement {
   public:
    BigQuotientElement(BigQuotientPtr ring, Poly xi0, Poly xi1);

    static BigQuotientElement v(BigQuotientPtr ring);
    static BigQuotientElement from_poly(BigQuotientPtr ring, Poly xi0);

    const BigQuotientPtr& ring() const noexcept { return ring_; }
    const Poly& xi0() const noexcept { return xi0_; }
    const Poly& xi1() const noexcept { return xi1_; }

    friend BigQuotientElement operator+(const BigQuotientElement& a, const BigQuotientElement& b);
    friend BigQuotientElement operator*(const BigQuotientElement& a, const BigQuotientElement& b);
    friend bool operator==(const BigQuotientElement& a, const BigQuotientElement& b) {
        return a.xi0_ == b.xi0_ && a.xi1_ == b.xi1_;
    }

   private:
    BigQuotientPtr ring_;
    Poly xi0_;
    Poly xi1_;
};

/// The ring isomorphism A + vA -> R[x]/<x^n - (delta + alpha u^2)> with
/// x^i -> x^i (i < n), x^n -> delta + alpha u^2 and v -> u.
AmbientElement psi_map(const BigQuotientElement& b);
BigQuotientElement psi_inverse(const BigQuotientPtr& ring, const AmbientElement& a);

}  // namespace chaincodes
