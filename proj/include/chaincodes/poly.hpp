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

#include <cstdint>
#include <initializer_list>
#include <limits>
#include <utility>
#include <vector>

#include "chaincodes/field.hpp"

namespace chaincodes {

/// Degree of the zero polynomial; compares below every real degree.
inline constexpr int kZeroDegree = std::numeric_limits<int>::min();

/**
 * Dense univariate polynomial over F_q, coefficients in ascending order with
 * trailing zeros stripped (the zero polynomial has no coefficients).
 */
class Poly {
   public:
    explicit Poly(FieldPtr field);
    Poly(FieldPtr field, std::vector<FieldElement> coeffs);

    /// Ascending integer encodings, e.g. {1, 1, 0, 1} is x^3 + x + 1.
    static Poly from_values(FieldPtr field, std::initializer_list<std::uint32_t> values);
    static Poly from_values(FieldPtr field, const std::vector<std::uint32_t>& values);
    static Poly constant(FieldPtr field, FieldElement c);
    static Poly monomial(FieldPtr field, FieldElement c, std::size_t k);
    static Poly x(FieldPtr field) { return monomial(field, FieldElement{1}, 1); }

    const FieldPtr& field() const noexcept { return field_; }
    const std::vector<FieldElement>& coeffs() const noexcept { return coeffs_; }

    int degree() const noexcept { return coeffs_.empty() ? kZeroDegree : static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const noexcept { return coeffs_.empty(); }
    bool is_one() const noexcept { return coeffs_.size() == 1 && coeffs_[0] == FieldElement{1}; }
    bool is_monic() const noexcept { return !coeffs_.empty() && coeffs_.back() == FieldElement{1}; }
    FieldElement leading() const noexcept { return coeffs_.empty() ? FieldElement{} : coeffs_.back(); }
    /// Coefficient of x^i; zero past the degree.
    FieldElement coeff(std::size_t i) const noexcept { return i < coeffs_.size() ? coeffs_[i] : FieldElement{}; }
    std::vector<std::uint32_t> values() const;

    Poly operator-() const;
    Poly& operator+=(const Poly& rhs);
    Poly& operator-=(const Poly& rhs);
    Poly& operator*=(const Poly& rhs);
    Poly& operator*=(FieldElement s);

    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator*(Poly a, const Poly& b) { return a *= b; }
    friend Poly operator*(Poly a, FieldElement s) { return a *= s; }
    friend Poly operator*(FieldElement s, Poly a) { return a *= s; }
    friend Poly operator/(const Poly& a, const Poly& b);
    friend Poly operator%(const Poly& a, const Poly& b);

    friend bool operator==(const Poly& a, const Poly& b) noexcept {
        return same_field(a.field_, b.field_) && a.coeffs_ == b.coeffs_;
    }

    FieldElement evaluate(FieldElement at) const;

   private:
    void trim() noexcept;
    void check_field(const Poly& other) const;

    FieldPtr field_;
    std::vector<FieldElement> coeffs_;
};

struct DivMod {
    Poly quotient;
    Poly remainder;
};

/// a = quotient * b + remainder with deg(remainder) < deg(b).
DivMod divmod(const Poly& a, const Poly& b);

struct Bezout {
    Poly gcd;  // monic
    Poly s;
    Poly t;
};

/// s * a + t * b = gcd(a, b). The extended Euclidean algorithm keeps
/// deg(s) < deg(b) - deg(gcd) and deg(t) < deg(a) - deg(gcd) whenever neither
/// input divides the other.
Bezout ext_gcd(const Poly& a, const Poly& b);
Poly gcd(const Poly& a, const Poly& b);
Poly monic(const Poly& a);
Poly mulmod(const Poly& a, const Poly& b, const Poly& modulus);
Poly powmod(const Poly& base, std::uint64_t e, const Poly& modulus);
/// x^deg(a) * a(1/x).
Poly reciprocal(const Poly& a);
/// x^n - delta.
Poly xn_minus(FieldPtr field, std::size_t n, FieldElement delta);

}  // namespace chaincodes
