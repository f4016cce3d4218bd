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

#include "chaincodes/poly.hpp"

#include <algorithm>

#include "chaincodes/error.hpp"

namespace chaincodes {

Poly::Poly(FieldPtr field) : field_(std::move(field)) {
    if (!field_) throw Error(ErrorCode::InvalidInput, "polynomial needs a field");
}

Poly::Poly(FieldPtr field, std::vector<FieldElement> coeffs) : field_(std::move(field)), coeffs_(std::move(coeffs)) {
    if (!field_) throw Error(ErrorCode::InvalidInput, "polynomial needs a field");
    for (auto c : coeffs_) {
        if (!field_->contains(c)) throw Error(ErrorCode::InvalidInput, "coefficient outside the field");
    }
    trim();
}

Poly Poly::from_values(FieldPtr field, std::initializer_list<std::uint32_t> values) {
    return from_values(std::move(field), std::vector<std::uint32_t>(values));
}

Poly Poly::from_values(FieldPtr field, const std::vector<std::uint32_t>& values) {
    std::vector<FieldElement> c;
    c.reserve(values.size());
    for (auto v : values) c.push_back(field->element(v));
    return Poly(std::move(field), std::move(c));
}

Poly Poly::constant(FieldPtr field, FieldElement c) { return Poly(std::move(field), {c}); }

Poly Poly::monomial(FieldPtr field, FieldElement c, std::size_t k) {
    std::vector<FieldElement> v(k + 1);
    v[k] = c;
    return Poly(std::move(field), std::move(v));
}

std::vector<std::uint32_t> Poly::values() const {
    std::vector<std::uint32_t> v;
    v.reserve(coeffs_.size());
    for (auto c : coeffs_) v.push_back(c.value);
    return v;
}

void Poly::trim() noexcept {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

void Poly::check_field(const Poly& other) const {
    if (!same_field(field_, other.field_)) throw Error(ErrorCode::InvalidInput, "polynomials over different fields");
}

Poly Poly::operator-() const {
    Poly r = *this;
    for (auto& c : r.coeffs_) c = field_->neg(c);
    return r;
}

Poly& Poly::operator+=(const Poly& rhs) {
    check_field(rhs);
    if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
    for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] = field_->add(coeffs_[i], rhs.coeffs_[i]);
    trim();
    return *this;
}

Poly& Poly::operator-=(const Poly& rhs) {
    check_field(rhs);
    if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
    for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] = field_->sub(coeffs_[i], rhs.coeffs_[i]);
    trim();
    return *this;
}

Poly& Poly::operator*=(const Poly& rhs) {
    check_field(rhs);
    if (is_zero() || rhs.is_zero()) {
        coeffs_.clear();
        return *this;
    }
    std::vector<FieldElement> out(coeffs_.size() + rhs.coeffs_.size() - 1);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i].is_zero()) continue;
        for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) {
            out[i + j] = field_->add(out[i + j], field_->mul(coeffs_[i], rhs.coeffs_[j]));
        }
    }
    coeffs_ = std::move(out);
    trim();
    return *this;
}

Poly& Poly::operator*=(FieldElement s) {
    for (auto& c : coeffs_) c = field_->mul(c, s);
    trim();
    return *this;
}

Poly operator/(const Poly& a, const Poly& b) { return divmod(a, b).quotient; }
Poly operator%(const Poly& a, const Poly& b) { return divmod(a, b).remainder; }

FieldElement Poly::evaluate(FieldElement at) const {
    FieldElement acc{};
    for (std::size_t i = coeffs_.size(); i-- > 0;) acc = field_->add(field_->mul(acc, at), coeffs_[i]);
    return acc;
}

DivMod divmod(const Poly& a, const Poly& b) {
    if (b.is_zero()) throw Error(ErrorCode::DivisionByZero, "polynomial division by zero");
    if (!same_field(a.field(), b.field())) throw Error(ErrorCode::InvalidInput, "polynomials over different fields");
    const auto& field = *a.field();
    if (a.degree() < b.degree()) return {Poly(a.field()), a};

    std::vector<FieldElement> r = a.coeffs();
    const auto& d = b.coeffs();
    const std::size_t db = d.size() - 1;
    std::vector<FieldElement> q(r.size() - db);
    const FieldElement lead_inv = field.inv(d.back());
    for (std::size_t k = r.size(); k-- > db;) {
        const FieldElement c = field.mul(r[k], lead_inv);
        q[k - db] = c;
        if (c.is_zero()) continue;
        for (std::size_t i = 0; i <= db; ++i) r[k - db + i] = field.sub(r[k - db + i], field.mul(c, d[i]));
    }
    r.resize(db);
    return {Poly(a.field(), std::move(q)), Poly(a.field(), std::move(r))};
}

Poly monic(const Poly& a) {
    if (a.is_zero()) return a;
    return a * a.field()->inv(a.leading());
}

Bezout ext_gcd(const Poly& a, const Poly& b) {
    if (a.is_zero() && b.is_zero()) throw Error(ErrorCode::InvalidInput, "gcd of two zero polynomials");
    const auto& f = a.field();
    Poly r0 = a, r1 = b;
    Poly s0 = Poly::constant(f, f->one()), s1(f);
    Poly t0(f), t1 = Poly::constant(f, f->one());
    while (!r1.is_zero()) {
        auto [q, r] = divmod(r0, r1);
        Poly s2 = s0 - q * s1;
        Poly t2 = t0 - q * t1;
        r0 = std::move(r1);
        r1 = std::move(r);
        s0 = std::move(s1);
        s1 = std::move(s2);
        t0 = std::move(t1);
        t1 = std::move(t2);
    }
    const FieldElement scale = f->inv(r0.leading());
    return {r0 * scale, s0 * scale, t0 * scale};
}

Poly gcd(const Poly& a, const Poly& b) {
    Poly r0 = a, r1 = b;
    while (!r1.is_zero()) {
        Poly r = r0 % r1;
        r0 = std::move(r1);
        r1 = std::move(r);
    }
    return monic(r0);
}

Poly mulmod(const Poly& a, const Poly& b, const Poly& modulus) { return (a * b) % modulus; }

Poly powmod(const Poly& base, std::uint64_t e, const Poly& modulus) {
    Poly result = Poly::constant(base.field(), base.field()->one()) % modulus;
    Poly b = base % modulus;
    for (; e > 0; e >>= 1) {
        if (e & 1) result = mulmod(result, b, modulus);
        if (e > 1) b = mulmod(b, b, modulus);
    }
    return result;
}

Poly reciprocal(const Poly& a) {
    std::vector<FieldElement> c = a.coeffs();
    std::reverse(c.begin(), c.end());
    return Poly(a.field(), std::move(c));
}

Poly xn_minus(FieldPtr field, std::size_t n, FieldElement delta) {
    std::vector<FieldElement> c(n + 1);
    c[0] = field->neg(delta);
    c[n] = field->add(c[n], field->one());
    return Poly(std::move(field), std::move(c));
}

}  // namespace chaincodes
