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

#include "chaincodes/big_quotient.hpp"

#include "chaincodes/error.hpp"

namespace chaincodes {

BigQuotientPtr BigQuotient::create(FieldPtr field, std::size_t n, FieldElement delta, FieldElement alpha) {
    return BigQuotientPtr(new BigQuotient(std::move(field), n, delta, alpha));
}

BigQuotient::BigQuotient(FieldPtr field, std::size_t n, FieldElement delta, FieldElement alpha)
    : field_(std::move(field)), n_(n), delta_(delta), alpha_(alpha), modulus_(field_), v_square_(field_) {
    if (n_ == 0) throw Error(ErrorCode::InvalidInput, "length n must be positive");
    if (delta.is_zero() || alpha.is_zero()) throw Error(ErrorCode::InvalidInput, "delta and alpha must be nonzero");
    const Poly base = xn_minus(field_, n_, delta_);
    modulus_ = base * base;
    v_square_ = base * field_->inv(alpha_);
    ambient_ = Ambient::create(field_, n_, ChainRing(field_).delta_alpha(delta_, alpha_));
}

BigQuotientElement::BigQuotientElement(BigQuotientPtr ring, Poly xi0, Poly xi1)
    : ring_(std::move(ring)), xi0_(xi0 % ring_->modulus()), xi1_(xi1 % ring_->modulus()) {}

BigQuotientElement BigQuotientElement::v(BigQuotientPtr ring) {
    const auto& f = ring->field();
    return BigQuotientElement(ring, Poly(f), Poly::constant(f, f->one()));
}

BigQuotientElement BigQuotientElement::from_poly(BigQuotientPtr ring, Poly xi0) {
    Poly zero(ring->field());
    return BigQuotientElement(std::move(ring), std::move(xi0), std::move(zero));
}

BigQuotientElement operator+(const BigQuotientElement& a, const BigQuotientElement& b) {
    return BigQuotientElement(a.ring_, a.xi0_ + b.xi0_, a.xi1_ + b.xi1_);
}

BigQuotientElement operator*(const BigQuotientElement& a, const BigQuotientElement& b) {
    const Poly& mod = a.ring_->modulus();
    Poly c0 = mulmod(a.xi0_, b.xi0_, mod) + mulmod(a.ring_->v_square(), mulmod(a.xi1_, b.xi1_, mod), mod);
    Poly c1 = mulmod(a.xi0_, b.xi1_, mod) + mulmod(a.xi1_, b.xi0_, mod);
    return BigQuotientElement(a.ring_, std::move(c0), std::move(c1));
}

AmbientElement psi_map(const BigQuotientElement& b) {
    const auto& ring = *b.ring();
    const std::size_t n = ring.length();
    const auto [a2, a0] = divmod(b.xi0(), ring.v_square());
    const auto [a3, a1] = divmod(b.xi1(), ring.v_square());
    std::vector<RingElement> coeffs(n);
    for (std::size_t i = 0; i < n; ++i) {
        coeffs[i] = RingElement{{a0.coeff(i), a1.coeff(i), a2.coeff(i), a3.coeff(i)}};
    }
    return AmbientElement(ring.ambient(), std::move(coeffs));
}

BigQuotientElement psi_inverse(const BigQuotientPtr& ring, const AmbientElement& a) {
    if (!compatible(*a.ambient(), *ring->ambient())) {
        throw Error(ErrorCode::AmbientMismatch, "psi inverse expects an element of R[x]/<x^n - (delta + alpha u^2)>");
    }
    const std::size_t n = ring->length();
    std::array<std::vector<FieldElement>, 4> parts;
    for (auto& p : parts) p.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
        for (int k = 0; k < 4; ++k) parts[k][i] = a[i].c[k];
    }
    const auto& f = ring->field();
    const Poly& w = ring->v_square();
    Poly xi0 = Poly(f, parts[0]) + w * Poly(f, parts[2]);
    Poly xi1 = Poly(f, parts[1]) + w * Poly(f, parts[3]);
    return BigQuotientElement(ring, std::move(xi0), std::move(xi1));
}

}  // namespace chaincodes
