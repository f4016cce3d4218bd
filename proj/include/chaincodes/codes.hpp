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
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "chaincodes/decomposition.hpp"

namespace chaincodes {

/// (l_1, ..., l_r) with 0 <= l_j <= 4: the code sum_j <u^{l_j} e_j(x)>.
class CodeIndex {
   public:
    CodeIndex() = default;
    explicit CodeIndex(std::vector<int> ls) : ls_(std::move(ls)) {}

    /// Comma separated, e.g. "2,0,4".
    static CodeIndex parse(std::string_view text);

    const std::vector<int>& values() const noexcept { return ls_; }
    std::size_t size() const noexcept { return ls_.size(); }
    int operator[](std::size_t j) const { return ls_.at(j); }

    /// Throws InvalidIndex unless the length is r and every entry is in [0, 4].
    void validate(std::size_t r) const;
    std::string to_string() const;

    friend auto operator<=>(const CodeIndex&, const CodeIndex&) = default;

   private:
    std::vector<int> ls_;
};

struct CodeRecord {
    CodeIndex index;
    AmbientElement generator;
    /// |C| = q^log_q_size
    std::uint64_t log_q_size = 0;
    RingElement lambda;
    std::optional<bool> self_dual;
};

/// sum_j u^{l_j} e_j(x) in R[x]/<x^n - (delta + alpha u^2)>, |C| = q^{sum (4 - l_j) d_j}.
CodeRecord build_code(const Decomposition& d, const CodeIndex& idx);

/// The r terms u^{l_j} e_j(x) generating the same ideal.
std::vector<AmbientElement> code_generators(const Decomposition& d, const CodeIndex& idx);

/// Number of codes, 5^r, or nullopt when it does not fit in 64 bits.
std::optional<std::uint64_t> code_count(std::size_t r);

/// Lexicographic rank of idx among all 5^r indices (l_1 most significant).
std::uint64_t index_rank(const CodeIndex& idx);
CodeIndex index_unrank(std::size_t r, std::uint64_t rank);

/**
 * Streams all codes of the ambient ring in lexicographic index
 * order without materializing them. `first` selects the starting index and
 * `limit` caps the number of records.
 */
class CodeStream {
   public:
    CodeStream(const Decomposition& d, std::optional<CodeIndex> first = std::nullopt,
               std::optional<std::uint64_t> limit = std::nullopt);

    std::optional<CodeRecord> next();

   private:
    const Decomposition* d_;
    std::vector<int> current_;
    bool done_ = false;
    std::optional<std::uint64_t> remaining_;
};

CodeStream enumerate_codes(const Decomposition& d, std::optional<CodeIndex> first = std::nullopt,
                           std::optional<std::uint64_t> limit = std::nullopt);

/**
 * The dual code tau(<sum_j u^{4 - l_j} e_j(x)>) in R[x]/<x^n - lambda^{-1}>.
 * The returned index is relative to dual_decomposition(d):
 * entry tau(j) is 4 - l_j.
 */
CodeRecord dual_code(const Decomposition& d, const CodeIndex& idx);

/**
 * Self-dual codes for q = 2^m and delta = 1: l_j = 2 on tau-fixed indices and
 * l_{tau(j)} = 4 - l_j on each swapped pair. Pair representatives (the smaller
 * index of each 2-cycle) run in lexicographic order; 5^eps_pairs records.
 */
class SelfDualStream {
   public:
    explicit SelfDualStream(const Decomposition& d);

    std::optional<CodeRecord> next();
    std::uint64_t count() const noexcept;

   private:
    const Decomposition* d_;
    std::vector<std::size_t> reps_;
    std::vector<int> digits_;
    bool done_ = false;
};

SelfDualStream self_dual_codes(const Decomposition& d);

}  // namespace chaincodes
