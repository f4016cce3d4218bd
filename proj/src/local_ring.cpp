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

#include "chaincodes/local_ring.hpp"

#include "chaincodes/error.hpp"

namespace chaincodes {

LocalRingPtr LocalRing::create(Poly f, Poly omega, Poly omega_inv) {
    return LocalRingPtr(new LocalRing(std::move(f), std::move(omega), std::move(omega_inv)));
}

LocalRing::LocalRing(Poly f, Poly omega, Poly omega_inv)
    : f_(std::move(f)), modulus_(f_ * f_), omega_(omega % modulus_), omega_inv_(omega_inv % modulus_) {
    if (f_.degree() < 1) throw Error(ErrorCode::InvalidInput, "local ring needs a nonconstant f");
    if (!mulmod(omega_, omega_inv_, modulus_).is_one()) {
        throw Error(ErrorCode::NotAUnit, "omega_inv is not the inverse of omega mod f^2");
    }
}

LocalElement::LocalElement(LocalRingPtr ring, Poly a, Poly b)
    : ring_(std::move(ring)), a_(a % ring_->modulus()), b_(b % ring_->modulus()) {}

LocalElement LocalElement::from_poly(LocalRingPtr ring, Poly a) {
    Poly zero(ring->field());
    return LocalElement(std::move(ring), std::move(a), std::move(zero));
}

LocalElement LocalElement::v(LocalRingPtr ring) {
    const auto& f = ring->field();
    return LocalElement(ring, Poly(f), Poly::constant(f, f->one()));
}

LocalElement LocalElement::one(LocalRingPtr ring) {
    const auto& f = ring->field();
    return LocalElement(ring, Poly::constant(f, f->one()), Poly(f));
}

LocalElement operator+(const LocalElement& x, const LocalElement& y) {
    return LocalElement(x.ring_, x.a_ + y.a_, x.b_ + y.b_);
}

LocalElement operator*(const LocalElement& x, const LocalElement& y) {
    const auto& ring = *x.ring_;
    const Poly& mod = ring.modulus();
    const Poly v2 = mulmod(ring.omega(), ring.f(), mod);
    Poly a = mulmod(x.a_, y.a_, mod) + mulmod(v2, mulmod(x.b_, y.b_, mod), mod);
    Poly b = mulmod(x.a_, y.b_, mod) + mulmod(x.b_, y.a_, mod);
    return LocalElement(x.ring_, std::move(a), std::move(b));
}

VExpansion LocalElement::v_expansion() const {
    const Poly& f = ring_->f();
    // f-adic digits of each coordinate, then f = v^2 omega^{-1} moves the
    // upper digit onto v^2.
    auto split = [&](const Poly& p) {
        auto [hi, lo] = divmod(p, f);
        Poly moved = mulmod(ring_->omega_inv(), hi, ring_->modulus()) % f;
        return std::pair{std::move(lo), std::move(moved)};
    };
    auto [t0, t2] = split(a_);
    auto [t1, t3] = split(b_);
    return {std::move(t0), std::move(t1), std::move(t2), std::move(t3)};
}

LocalElement LocalElement::recompose(LocalRingPtr ring, const VExpansion& t) {
    const auto& field = ring->field();
    const LocalElement v = LocalElement::v(ring);
    LocalElement acc(ring, Poly(field), Poly(field));
    LocalElement v_power = LocalElement::one(ring);
    for (const auto& coeff : t) {
        if (coeff.degree() >= static_cast<int>(ring->degree())) {
            throw Error(ErrorCode::InvalidInput, "v-expansion digit must have degree below deg f");
        }
        acc = acc + from_poly(ring, coeff) * v_power;
        v_power = v_power * v;
    }
    return acc;
}

}  // namespace chaincodes
