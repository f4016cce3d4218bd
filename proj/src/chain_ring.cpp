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

#include "chaincodes/chain_ring.hpp"

#include <sstream>

#include "chaincodes/error.hpp"

namespace chaincodes {

int RingElement::u_valuation() const noexcept {
    for (int k = 0; k < 4; ++k) {
        if (!c[k].is_zero()) return k;
    }
    return 4;
}

ChainRing::ChainRing(FieldPtr field) : field_(std::move(field)) {
    if (!field_) throw Error(ErrorCode::InvalidInput, "chain ring needs a field");
}

RingElement ChainRing::u_power(int k) const noexcept {
    RingElement r;
    if (k >= 0 && k < 4) r.c[k] = field_->one();
    return r;
}

RingElement ChainRing::add(const RingElement& a, const RingElement& b) const noexcept {
    RingElement r;
    for (int k = 0; k < 4; ++k) r.c[k] = field_->add(a.c[k], b.c[k]);
    return r;
}

RingElement ChainRing::sub(const RingElement& a, const RingElement& b) const noexcept {
    RingElement r;
    for (int k = 0; k < 4; ++k) r.c[k] = field_->sub(a.c[k], b.c[k]);
    return r;
}

RingElement ChainRing::neg(const RingElement& a) const noexcept {
    RingElement r;
    for (int k = 0; k < 4; ++k) r.c[k] = field_->neg(a.c[k]);
    return r;
}

RingElement ChainRing::mul(const RingElement& a, const RingElement& b) const noexcept {
    RingElement r;
    for (int i = 0; i < 4; ++i) {
        if (a.c[i].is_zero()) continue;
        for (int j = 0; i + j < 4; ++j) r.c[i + j] = field_->add(r.c[i + j], field_->mul(a.c[i], b.c[j]));
    }
    return r;
}

RingElement ChainRing::scale(FieldElement s, const RingElement& a) const noexcept {
    RingElement r;
    for (int k = 0; k < 4; ++k) r.c[k] = field_->mul(s, a.c[k]);
    return r;
}

RingElement ChainRing::inv(const RingElement& a) const {
    if (!a.is_unit()) throw Error(ErrorCode::NotAUnit, "element of R with zero constant term is not invertible");
    // a = c0 (1 + N) with N nilpotent of index <= 4.
    const FieldElement c0_inv = field_->inv(a.c[0]);
    RingElement nil = scale(c0_inv, a);
    nil.c[0] = field_->zero();
    const RingElement nil2 = mul(nil, nil);
    const RingElement nil3 = mul(nil2, nil);
    RingElement series = sub(add(one(), nil2), add(nil, nil3));
    return scale(c0_inv, series);
}

std::string ChainRing::format(const RingElement& a, FieldDisplay display) const {
    std::ostringstream os;
    bool first = true;
    for (int k = 3; k >= 0; --k) {
        const FieldElement c = a.c[k];
        if (c.is_zero()) continue;
        const bool leading = first;
        if (!leading) os << "+";
        first = false;
        std::string coeff = field_->format(c, display);
        const bool compound = coeff.find('+') != std::string::npos;
        if (k == 0) {
            os << (compound && !leading ? "(" + coeff + ")" : coeff);
            continue;
        }
        if (c != field_->one()) os << (compound ? "(" + coeff + ")" : coeff) << "*";
        os << "u";
        if (k > 1) os << "^" << k;
    }
    return first ? "0" : os.str();
}

}  // namespace chaincodes
