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

#include "chaincodes/poly.hpp"

namespace chaincodes {

class LocalRing;
using LocalRingPtr = std::shared_ptr<const LocalRing>;

/**
 * K_j + v K_j with K_j = F_q[x] / <f_j^2> and v^2 = omega_j f_j.
 *
 * This is a chain ring with maximal ideal <v> and v of nilpotency index 4;
 * its ideals are exactly <v^l>, l = 0..4.
 */
class LocalRing {
   public:
    /// omega_inv must be the inverse of omega modulo f^2.
    static LocalRingPtr create(Poly f, Poly omega, Poly omega_inv);

    const FieldPtr& field() const noexcept { return f_.field(); }
    const Poly& f() const noexcept { return f_; }
    std::size_t degree() const noexcept { return static_cast<std::size_t>(f_.degree()); }
    const Poly& modulus() const noexcept { return modulus_; }
    const Poly& omega() const noexcept { return omega_; }
    const Poly& omega_inv() const noexcept { return omega_inv_; }

   private:
    LocalRing(Poly f, Poly omega, Poly omega_inv);

    Poly f_;
    Poly modulus_;
    Poly omega_;
    Poly omega_inv_;
};

/// Coefficients t_0..t_3 of e = t_0 + v t_1 + v^2 t_2 + v^3 t_3, each of
/// degree below d_j.
using VExpansion = std::array<Poly, 4>;

class LocalElement {
   public:
    LocalElement(LocalRingPtr ring, Poly a, Poly b);

    static LocalElement from_poly(LocalRingPtr ring, Poly a);
    static LocalElement v(LocalRingPtr ring);
    static LocalElement one(LocalRingPtr ring);

    const LocalRingPtr& ring() const noexcept { return ring_; }
    const Poly& a() const noexcept { return a_; }
    const Poly& b() const noexcept { return b_; }

    bool is_zero() const noexcept { return a_.is_zero() && b_.is_zero(); }
    VExpansion v_expansion() const;
    bool is_unit() const { return !v_expansion()[0].is_zero(); }
    static LocalElement recompose(LocalRingPtr ring, const VExpansion& t);

    friend LocalElement operator+(const LocalElement& x, const LocalElement& y);
    friend LocalElement operator*(const LocalElement& x, const LocalElement& y);
    friend bool operator==(const LocalElement& x, const LocalElement& y) { return x.a_ == y.a_ && x.b_ == y.b_; }

   private:
    LocalRingPtr ring_;
    Poly a_;
    Poly b_;
};

}  // namespace chaincodes
