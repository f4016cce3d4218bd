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

#include "chaincodes/codes.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

#include "chaincodes/error.hpp"

namespace chaincodes {

CodeIndex CodeIndex::parse(std::string_view text) {
    std::vector<int> ls;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const std::size_t comma = std::min(text.find(',', pos), text.size());
        std::string_view item = text.substr(pos, comma - pos);
        while (!item.empty() && item.front() == ' ') item.remove_prefix(1);
        while (!item.empty() && item.back() == ' ') item.remove_suffix(1);
        int value = 0;
        auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), value);
        if (item.empty() || ec != std::errc{} || ptr != item.data() + item.size()) {
            throw Error(ErrorCode::InvalidIndex, "cannot parse code index '" + std::string(text) + "'");
        }
        ls.push_back(value);
        pos = comma + 1;
    }
    return CodeIndex(std::move(ls));
}

void CodeIndex::validate(std::size_t r) const {
    if (ls_.size() != r) {
        throw Error(ErrorCode::InvalidIndex,
                    "index has " + std::to_string(ls_.size()) + " entries, expected r = " + std::to_string(r));
    }
    for (int l : ls_) {
        if (l < 0 || l > 4) throw Error(ErrorCode::InvalidIndex, "index entry " + std::to_string(l) + " not in [0, 4]");
    }
}

std::string CodeIndex::to_string() const {
    std::ostringstream os;
    os << "(";
    for (std::size_t j = 0; j < ls_.size(); ++j) os << (j ? "," : "") << ls_[j];
    os << ")";
    return os.str();
}

std::vector<AmbientElement> code_generators(const Decomposition& d, const CodeIndex& idx) {
    idx.validate(d.r());
    const auto& ring = d.ambient()->ring();
    std::vector<AmbientElement> out;
    for (std::size_t j = 0; j < d.r(); ++j) out.push_back(ring.u_power(idx[j]) * d.factors[j].e);
    return out;
}

CodeRecord build_code(const Decomposition& d, const CodeIndex& idx) {
    idx.validate(d.r());
    const auto& ring = d.ambient()->ring();
    AmbientElement gen = AmbientElement::zero(d.ambient());
    std::uint64_t log_size = 0;
    for (std::size_t j = 0; j < d.r(); ++j) {
        if (idx[j] < 4) gen += ring.u_power(idx[j]) * d.factors[j].e;
        log_size += static_cast<std::uint64_t>(4 - idx[j]) * d.factors[j].degree;
    }
    return CodeRecord{idx, std::move(gen), log_size, d.lambda(), std::nullopt};
}

std::optional<std::uint64_t> code_count(std::size_t r) {
    std::uint64_t total = 1;
    for (std::size_t j = 0; j < r; ++j) {
        if (total > UINT64_MAX / 5) return std::nullopt;
        total *= 5;
    }
    return total;
}

std::uint64_t index_rank(const CodeIndex& idx) {
    if (!code_count(idx.size())) throw Error(ErrorCode::InvalidInput, "rank overflows 64 bits");
    idx.validate(idx.size());
    std::uint64_t rank = 0;
    for (int l : idx.values()) rank = rank * 5 + static_cast<std::uint64_t>(l);
    return rank;
}

CodeIndex index_unrank(std::size_t r, std::uint64_t rank) {
    const auto total = code_count(r);
    if (total && rank >= *total) throw Error(ErrorCode::InvalidIndex, "rank beyond 5^r");
    std::vector<int> ls(r);
    for (std::size_t j = r; j-- > 0;) {
        ls[j] = static_cast<int>(rank % 5);
        rank /= 5;
    }
    return CodeIndex(std::move(ls));
}

CodeStream::CodeStream(const Decomposition& d, std::optional<CodeIndex> first, std::optional<std::uint64_t> limit)
    : d_(&d), current_(d.r(), 0), remaining_(limit) {
    if (first) {
        first->validate(d.r());
        current_ = first->values();
    }
}

std::optional<CodeRecord> CodeStream::next() {
    if (done_ || (remaining_ && *remaining_ == 0)) return std::nullopt;
    CodeRecord rec = build_code(*d_, CodeIndex(current_));
    if (remaining_) --*remaining_;
    // Odometer with l_r least significant.
    std::size_t j = current_.size();
    for (;;) {
        if (j == 0) {
            done_ = true;
            break;
        }
        --j;
        if (++current_[j] <= 4) break;
        current_[j] = 0;
    }
    return rec;
}

CodeStream enumerate_codes(const Decomposition& d, std::optional<CodeIndex> first, std::optional<std::uint64_t> limit) {
    return CodeStream(d, std::move(first), limit);
}

CodeRecord dual_code(const Decomposition& d, const CodeIndex& idx) {
    idx.validate(d.r());
    const auto& ring = d.ambient()->ring();
    AmbientElement complement = AmbientElement::zero(d.ambient());
    std::vector<int> dual_ls(d.r(), 0);
    std::uint64_t log_size = 0;
    for (std::size_t j = 0; j < d.r(); ++j) {
        complement += ring.u_power(4 - idx[j]) * d.factors[j].e;
        dual_ls.at(d.tau.at(j)) = 4 - idx[j];
        log_size += static_cast<std::uint64_t>(idx[j]) * d.factors[j].degree;
    }
    AmbientElement gen = tau_map(complement);
    RingElement lambda = gen.ambient()->lambda();
    std::optional<bool> self_dual;
    if (d.self_dual_ambient()) self_dual = dual_ls == idx.values();
    return CodeRecord{CodeIndex(std::move(dual_ls)), std::move(gen), log_size, lambda, self_dual};
}

SelfDualStream::SelfDualStream(const Decomposition& d) : d_(&d) {
    const auto& field = *d.field;
    if (field.characteristic() != 2 || d.delta != field.one()) {
        throw Error(ErrorCode::SelfDualUnsupported,
                    "self-dual classification covers only q = 2^m with delta = 1");
    }
    for (std::size_t j = 0; j < d.r(); ++j) {
        if (d.tau.at(j) > j) reps_.push_back(j);
    }
    digits_.assign(reps_.size(), 0);
}

std::uint64_t SelfDualStream::count() const noexcept {
    std::uint64_t total = 1;
    for (std::size_t i = 0; i < reps_.size(); ++i) total *= 5;
    return total;
}

std::optional<CodeRecord> SelfDualStream::next() {
    if (done_) return std::nullopt;
    std::vector<int> ls(d_->r(), 2);
    for (std::size_t i = 0; i < reps_.size(); ++i) {
        ls[reps_[i]] = digits_[i];
        ls[d_->tau[reps_[i]]] = 4 - digits_[i];
    }
    CodeRecord rec = build_code(*d_, CodeIndex(std::move(ls)));
    rec.self_dual = true;
    std::size_t i = digits_.size();
    for (;;) {
        if (i == 0) {
            done_ = true;
            break;
        }
        --i;
        if (++digits_[i] <= 4) break;
        digits_[i] = 0;
    }
    return rec;
}

SelfDualStream self_dual_codes(const Decomposition& d) { return SelfDualStream(d); }

}  // namespace chaincodes
