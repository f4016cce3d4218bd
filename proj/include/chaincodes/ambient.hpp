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
#include <string>
#include <vector>

#include "chaincodes/chain_ring.hpp"

namespace chaincodes {

class Ambient;
using AmbientPtr = std::shared_ptr<const Ambient>;

/// The quotient R[x] / <x^n - lambda> for a unit lambda of R. Two ambients
/// are compatible when field, n and lambda agree.
class Ambient {
   public:
    static AmbientPtr create(FieldPtr field, std::size_t n, RingElement lambda);

    const FieldPtr& field() const noexcept { return ring_.field(); }
    const ChainRing& ring() const noexcept { return ring_; }
    std::size_t length() const noexcept { return n_; }
    const RingElement& lambda() const noexcept { return lambda_; }

    /// R[x] / <x^n - lambda^{-1}>, the home of dual codes.
    AmbientPtr dual() const;

    friend bool operator==(const Ambient& a, const Ambient& b) noexcept {
        return *a.field() == *b.field() && a.n_ == b.n_ && a.lambda_ == b.lambda_;
    }

   private:
    Ambient(FieldPtr field, std::size_t n, RingElement lambda);

    ChainRing ring_;
    std::size_t n_;
    RingElement lambda_;
};

/// sum_{i<n} c_i x^i with c_i in R, reduced by x^n = lambda.
class AmbientElement {
   public:
    explicit AmbientElement(AmbientPtr ambient);
    AmbientElement(AmbientPtr ambient, std::vector<RingElement> coeffs);

    static AmbientElement zero(AmbientPtr ambient) { return AmbientElement(std::move(ambient)); }
    static AmbientElement one(AmbientPtr ambient);
    /// c x^k for any k >= 0, folded with x^n = lambda.
    static AmbientElement monomial(AmbientPtr ambient, const RingElement& c, std::size_t k);

    const AmbientPtr& ambient() const noexcept { return ambient_; }
    const std::vector<RingElement>& coeffs() const noexcept { return coeffs_; }
    const RingElement& operator[](std::size_t i) const { return coeffs_.at(i); }
    std::size_t length() const noexcept { return coeffs_.size(); }
    bool is_zero() const noexcept;

    /// Multiplication by x: (c_0, ..., c_{n-1}) -> (lambda c_{n-1}, c_0, ..., c_{n-2}).
    AmbientElement shift() const;

    AmbientElement& operator+=(const AmbientElement& rhs);
    AmbientElement& operator-=(const AmbientElement& rhs);
    friend AmbientElement operator+(AmbientElement a, const AmbientElement& b) { return a += b; }
    friend AmbientElement operator-(AmbientElement a, const AmbientElement& b) { return a -= b; }
    friend AmbientElement operator*(const AmbientElement& a, const AmbientElement& b);
    friend AmbientElement operator*(const RingElement& s, const AmbientElement& a);

    /// Throws AmbientMismatch when the ambients differ.
    friend bool operator==(const AmbientElement& a, const AmbientElement& b);

   private:
    void check_compatible(const AmbientElement& other) const;

    AmbientPtr ambient_;
    std::vector<RingElement> coeffs_;
};

bool compatible(const Ambient& a, const Ambient& b) noexcept;

/// a(x) -> a(x^{-1}) = lambda * sum_i a_i x^{n-i}, a ring isomorphism from
/// R[x]/<x^n - lambda> onto R[x]/<x^n - lambda^{-1}>.
AmbientElement tau_map(const AmbientElement& a);

}  // namespace chaincodes
