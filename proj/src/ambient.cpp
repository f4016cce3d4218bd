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

#include "chaincodes/ambient.hpp"

#include "chaincodes/error.hpp"

namespace chaincodes {

AmbientPtr Ambient::create(FieldPtr field, std::size_t n, RingElement lambda) {
    return AmbientPtr(new Ambient(std::move(field), n, lambda));
}

Ambient::Ambient(FieldPtr field, std::size_t n, RingElement lambda) : ring_(std::move(field)), n_(n), lambda_(lambda) {
    if (n_ == 0) throw Error(ErrorCode::InvalidInput, "ambient length must be positive");
    for (auto c : lambda_.c) {
        if (!ring_.field()->contains(c)) throw Error(ErrorCode::InvalidInput, "lambda has a coordinate outside F_q");
    }
    if (!lambda_.is_unit()) throw Error(ErrorCode::NotAUnit, "x^n - lambda needs a unit lambda");
}

AmbientPtr Ambient::dual() const { return create(field(), n_, ring_.inv(lambda_)); }

bool compatible(const Ambient& a, const Ambient& b) noexcept { return &a == &b || a == b; }

AmbientElement::AmbientElement(AmbientPtr ambient) : ambient_(std::move(ambient)) {
    if (!ambient_) throw Error(ErrorCode::InvalidInput, "ambient element needs an ambient");
    coeffs_.assign(ambient_->length(), RingElement{});
}

AmbientElement::AmbientElement(AmbientPtr ambient, std::vector<RingElement> coeffs)
    : ambient_(std::move(ambient)), coeffs_(std::move(coeffs)) {
    if (!ambient_) throw Error(ErrorCode::InvalidInput, "ambient element needs an ambient");
    if (coeffs_.size() != ambient_->length()) {
        throw Error(ErrorCode::InvalidInput, "ambient element must have exactly n coefficients");
    }
    for (const auto& r : coeffs_) {
        for (auto c : r.c) {
            if (!ambient_->field()->contains(c)) throw Error(ErrorCode::InvalidInput, "coefficient outside F_q");
        }
    }
}

AmbientElement AmbientElement::one(AmbientPtr ambient) {
    AmbientElement e(std::move(ambient));
    e.coeffs_[0] = e.ambient_->ring().one();
    return e;
}

AmbientElement AmbientElement::monomial(AmbientPtr ambient, const RingElement& c, std::size_t k) {
    AmbientElement e(std::move(ambient));
    const auto& ring = e.ambient_->ring();
    const std::size_t n = e.ambient_->length();
    RingElement coeff = c;
    for (std::size_t wraps = k / n; wraps > 0; --wraps) coeff = ring.mul(coeff, e.ambient_->lambda());
    e.coeffs_[k % n] = coeff;
    return e;
}

bool AmbientElement::is_zero() const noexcept {
    for (const auto& c : coeffs_) {
        if (!c.is_zero()) return false;
    }
    return true;
}

void AmbientElement::check_compatible(const AmbientElement& other) const {
    if (!compatible(*ambient_, *other.ambient_)) {
        throw Error(ErrorCode::AmbientMismatch, "elements of different quotient rings R[x]/<x^n - lambda>");
    }
}

AmbientElement AmbientElement::shift() const {
    AmbientElement out(ambient_);
    const std::size_t n = coeffs_.size();
    out.coeffs_[0] = ambient_->ring().mul(ambient_->lambda(), coeffs_[n - 1]);
    for (std::size_t i = 1; i < n; ++i) out.coeffs_[i] = coeffs_[i - 1];
    return out;
}

AmbientElement& AmbientElement::operator+=(const AmbientElement& rhs) {
    check_compatible(rhs);
    const auto& ring = ambient_->ring();
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] = ring.add(coeffs_[i], rhs.coeffs_[i]);
    return *this;
}

AmbientElement& AmbientElement::operator-=(const AmbientElement& rhs) {
    check_compatible(rhs);
    const auto& ring = ambient_->ring();
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] = ring.sub(coeffs_[i], rhs.coeffs_[i]);
    return *this;
}

AmbientElement operator*(const AmbientElement& a, const AmbientElement& b) {
    a.check_compatible(b);
    const auto& ring = a.ambient_->ring();
    const std::size_t n = a.coeffs_.size();
    // Full product has degree <= 2n - 2; fold the upper half with lambda.
    std::vector<RingElement> low(n), high(n);
    for (std::size_t i = 0; i < n; ++i) {
        if (a.coeffs_[i].is_zero()) continue;
        for (std::size_t j = 0; j < n; ++j) {
            const RingElement t = ring.mul(a.coeffs_[i], b.coeffs_[j]);
            auto& slot = i + j < n ? low[i + j] : high[i + j - n];
            slot = ring.add(slot, t);
        }
    }
    for (std::size_t i = 0; i < n; ++i) low[i] = ring.add(low[i], ring.mul(a.ambient_->lambda(), high[i]));
    return AmbientElement(a.ambient_, std::move(low));
}

AmbientElement operator*(const RingElement& s, const AmbientElement& a) {
    AmbientElement out = a;
    const auto& ring = a.ambient_->ring();
    for (auto& c : out.coeffs_) c = ring.mul(s, c);
    return out;
}

bool operator==(const AmbientElement& a, const AmbientElement& b) {
    a.check_compatible(b);
    return a.coeffs_ == b.coeffs_;
}

AmbientElement tau_map(const AmbientElement& a) {
    const auto& source = *a.ambient();
    const auto& ring = source.ring();
    const std::size_t n = source.length();
    std::vector<RingElement> out(n);
    // The i = 0 term is lambda a_0 x^n = a_0 in the target.
    out[0] = a[0];
    for (std::size_t i = 1; i < n; ++i) out[n - i] = ring.mul(source.lambda(), a[i]);
    return AmbientElement(source.dual(), std::move(out));
}

}  // namespace chaincodes
