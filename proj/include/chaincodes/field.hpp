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

#include <compare>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace chaincodes {

/**
 * Element of F_q stored by its integer encoding enc(a) = sum_i a_i p^i, where
 * (a_0, ..., a_{m-1}) are the coordinates in the power basis of the field
 * modulus. The encoding is a bijection onto [0, q), so 0 is the zero element
 * and 1 is the identity in every field.
 */
struct FieldElement {
    std::uint32_t value = 0;

    constexpr FieldElement() = default;
    constexpr explicit FieldElement(std::uint32_t v) : value(v) {}

    constexpr bool is_zero() const noexcept { return value == 0; }
    constexpr auto operator<=>(const FieldElement&) const = default;
};

enum class FieldDisplay { Integer, Polynomial };

class Field;
using FieldPtr = std::shared_ptr<const Field>;

/**
 * The finite field F_q = F_p[y] / <modulus(y)>, q = p^m.
 *
 * Construction validates that p is prime and the modulus is monic,
 * of degree m and irreducible over F_p. Multiplication goes through
 * discrete log / antilog tables built once per field, so q is capped at
 * kMaxOrder.
 */
class Field {
   public:
    static constexpr std::uint64_t kMaxOrder = std::uint64_t{1} << 22;

    /// Modulus coefficients are given over F_p in ascending order, leading 1
    /// included (length m + 1). Without a modulus the smallest irreducible
    /// monic polynomial of degree m is chosen (see smallest_irreducible).
    static FieldPtr create(std::uint32_t p, std::uint32_t m,
                           std::optional<std::vector<std::uint32_t>> modulus = std::nullopt);

    /// Smallest monic irreducible of degree m over F_p, where candidates are
    /// compared from the leading coefficient downwards.
    static std::vector<std::uint32_t> smallest_irreducible(std::uint32_t p, std::uint32_t m);

    std::uint32_t characteristic() const noexcept { return p_; }
    std::uint32_t degree() const noexcept { return m_; }
    std::uint32_t order() const noexcept { return q_; }
    const std::vector<std::uint32_t>& modulus() const noexcept { return modulus_; }

    FieldElement zero() const noexcept { return FieldElement{0}; }
    FieldElement one() const noexcept { return FieldElement{1}; }
    /// Checked conversion from an integer encoding.
    FieldElement element(std::uint64_t enc) const;
    bool contains(FieldElement a) const noexcept { return a.value < q_; }

    FieldElement add(FieldElement a, FieldElement b) const noexcept;
    FieldElement sub(FieldElement a, FieldElement b) const noexcept;
    FieldElement neg(FieldElement a) const noexcept;
    FieldElement mul(FieldElement a, FieldElement b) const noexcept;
    FieldElement inv(FieldElement a) const;
    FieldElement div(FieldElement a, FieldElement b) const;
    FieldElement pow(FieldElement a, std::uint64_t e) const noexcept;

    std::vector<std::uint32_t> coords(FieldElement a) const;
    FieldElement from_coords(const std::vector<std::uint32_t>& c) const;

    /// Generator of the multiplicative group used for the log tables.
    FieldElement primitive() const noexcept { return FieldElement{exp_[1]}; }

    std::string format(FieldElement a, FieldDisplay display = FieldDisplay::Integer) const;

    friend bool operator==(const Field& a, const Field& b) noexcept {
        return a.p_ == b.p_ && a.m_ == b.m_ && a.modulus_ == b.modulus_;
    }

   private:
    Field(std::uint32_t p, std::uint32_t m, std::vector<std::uint32_t> modulus);

    std::uint32_t p_;
    std::uint32_t m_;
    std::uint32_t q_;
    std::vector<std::uint32_t> modulus_;
    std::vector<std::uint32_t> exp_;  // exp_[i] = g^i, length 2(q-1) so sums of logs need no reduction
    std::vector<std::uint32_t> log_;  // log_[0] unused
};

/// Fields are compared by value; two independently created copies of the
/// same field are interchangeable.
inline bool same_field(const FieldPtr& a, const FieldPtr& b) noexcept {
    return a == b || (a && b && *a == *b);
}

bool is_prime(std::uint64_t n) noexcept;

}  // namespace chaincodes
