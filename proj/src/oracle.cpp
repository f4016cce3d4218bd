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

#include "chaincodes/oracle.hpp"

#include <algorithm>

#include "chaincodes/error.hpp"

namespace chaincodes::oracle {

namespace {

RingElement r_mul(const Field& F, const RingElement& a, const RingElement& b) {
    RingElement r;
    for (int t = 0; t < 4; ++t) {
        FieldElement acc{};
        for (int k = 0; k <= t; ++k) acc = F.add(acc, F.mul(a.c[k], b.c[t - k]));
        r.c[t] = acc;
    }
    return r;
}

// Solves a * b = 1 one u-coordinate at a time.
RingElement r_inverse(const Field& F, const RingElement& a) {
    if (a.c[0].is_zero()) throw Error(ErrorCode::NotAUnit, "lambda is not a unit");
    RingElement b;
    const FieldElement a0_inv = F.inv(a.c[0]);
    b.c[0] = a0_inv;
    for (int t = 1; t < 4; ++t) {
        FieldElement acc{};
        for (int k = 1; k <= t; ++k) acc = F.add(acc, F.mul(a.c[k], b.c[t - k]));
        b.c[t] = F.neg(F.mul(a0_inv, acc));
    }
    return b;
}

RingElement at(const FlatVector& v, std::size_t i) {
    return RingElement{{v[4 * i], v[4 * i + 1], v[4 * i + 2], v[4 * i + 3]}};
}

bool is_zero(const FlatVector& v) {
    return std::all_of(v.begin(), v.end(), [](FieldElement c) { return c.is_zero(); });
}

}  // namespace

FlatCode::FlatCode(FieldPtr field, std::size_t n, RingElement lambda)
    : field_(std::move(field)), n_(n), lambda_(lambda) {}

FlatVector FlatCode::reduce(FlatVector v) const {
    const Field& F = *field_;
    for (std::size_t r = 0; r < rows_.size(); ++r) {
        const FieldElement c = v[pivots_[r]];
        if (c.is_zero()) continue;
        const FlatVector& row = rows_[r];
        for (std::size_t col = pivots_[r]; col < v.size(); ++col) {
            if (!row[col].is_zero()) v[col] = F.sub(v[col], F.mul(c, row[col]));
        }
    }
    return v;
}

bool FlatCode::contains(const FlatVector& v) const { return is_zero(reduce(v)); }

bool FlatCode::insert(FlatVector v) {
    if (v.size() != columns()) throw Error(ErrorCode::InvalidInput, "flat vector has the wrong length");
    const Field& F = *field_;
    v = reduce(std::move(v));
    auto lead = std::find_if(v.begin(), v.end(), [](FieldElement c) { return !c.is_zero(); });
    if (lead == v.end()) return false;
    const auto pivot = static_cast<std::size_t>(lead - v.begin());
    const FieldElement scale = F.inv(*lead);
    for (std::size_t col = pivot; col < v.size(); ++col) v[col] = F.mul(scale, v[col]);
    for (auto& row : rows_) {
        const FieldElement c = row[pivot];
        if (c.is_zero()) continue;
        for (std::size_t col = pivot; col < v.size(); ++col) row[col] = F.sub(row[col], F.mul(c, v[col]));
    }
    auto pos = std::lower_bound(pivots_.begin(), pivots_.end(), pivot);
    const auto offset = pos - pivots_.begin();
    pivots_.insert(pos, pivot);
    rows_.insert(rows_.begin() + offset, std::move(v));
    return true;
}

FlatVector flatten(const AmbientElement& a) {
    FlatVector v;
    v.reserve(4 * a.length());
    for (const auto& r : a.coeffs()) v.insert(v.end(), r.c.begin(), r.c.end());
    return v;
}

FlatVector twisted_shift(const Field& field, const RingElement& lambda, const FlatVector& v) {
    const std::size_t n = v.size() / 4;
    FlatVector out(v.size());
    const RingElement wrapped = r_mul(field, lambda, at(v, n - 1));
    std::copy(wrapped.c.begin(), wrapped.c.end(), out.begin());
    std::copy(v.begin(), v.end() - 4, out.begin() + 4);
    return out;
}

FlatVector times_u(const FlatVector& v) {
    FlatVector out(v.size());
    for (std::size_t i = 0; i < v.size(); i += 4) {
        out[i + 1] = v[i];
        out[i + 2] = v[i + 1];
        out[i + 3] = v[i + 2];
    }
    return out;
}

RingElement inner_product(const Field& field, const FlatVector& a, const FlatVector& b) {
    RingElement acc;
    for (std::size_t i = 0; i < a.size() / 4; ++i) {
        const RingElement t = r_mul(field, at(a, i), at(b, i));
        for (int k = 0; k < 4; ++k) acc.c[k] = field.add(acc.c[k], t.c[k]);
    }
    return acc;
}

FlatCode span_ideal(const AmbientElement& g) {
    const auto& amb = *g.ambient();
    const Field& F = *amb.field();
    FlatCode code(amb.field(), amb.length(), amb.lambda());
    FlatVector u_power = flatten(g);
    for (int k = 0; k < 4; ++k) {
        FlatVector cur = u_power;
        for (std::size_t i = 0; i < amb.length(); ++i) {
            code.insert(cur);
            cur = twisted_shift(F, amb.lambda(), cur);
        }
        u_power = times_u(u_power);
    }
    return code;
}

bool check_cardinality(const CodeRecord& rec) { return span_ideal(rec.generator).dim() == rec.log_q_size; }

bool check_constacyclic(const FlatCode& fc) {
    for (const auto& row : fc.basis()) {
        if (!fc.contains(twisted_shift(*fc.field(), fc.lambda(), row))) return false;
    }
    return true;
}

bool check_u_closed(const FlatCode& fc) {
    for (const auto& row : fc.basis()) {
        if (!fc.contains(times_u(row))) return false;
    }
    return true;
}

bool check_duality(const FlatCode& c, const FlatCode& dual) {
    if (c.length() != dual.length()) return false;
    if (c.dim() + dual.dim() != c.columns()) return false;
    for (const auto& a : c.basis()) {
        for (const auto& b : dual.basis()) {
            if (!inner_product(*c.field(), a, b).is_zero()) return false;
        }
    }
    return true;
}

FlatCode orthogonal_complement(const FlatCode& c) {
    const Field& F = *c.field();
    const std::size_t cols = c.columns();
    // Coordinate t of <a, b> is sum_i sum_{k <= t} a_{i,k} b_{i,t-k}; one
    // linear equation in a per basis row b and per t.
    FlatCode equations(c.field(), c.length(), c.lambda());
    for (const auto& b : c.basis()) {
        for (int t = 0; t < 4; ++t) {
            FlatVector eq(cols);
            for (std::size_t i = 0; i < c.length(); ++i) {
                for (int k = 0; k <= t; ++k) eq[4 * i + k] = b[4 * i + t - k];
            }
            equations.insert(std::move(eq));
        }
    }
    FlatCode out(c.field(), c.length(), r_inverse(F, c.lambda()));
    const auto& pivots = equations.pivots();
    for (std::size_t free = 0; free < cols; ++free) {
        if (std::binary_search(pivots.begin(), pivots.end(), free)) continue;
        FlatVector v(cols);
        v[free] = F.one();
        for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = F.neg(equations.basis()[r][free]);
        out.insert(std::move(v));
    }
    return out;
}

bool check_self_dual(const CodeRecord& rec) {
    const auto& amb = *rec.generator.ambient();
    const Field& F = *amb.field();
    if (!(r_mul(F, amb.lambda(), amb.lambda()) == RingElement{{F.one(), {}, {}, {}}})) {
        throw Error(ErrorCode::AmbientMismatch, "self-duality needs lambda^{-1} = lambda");
    }
    const FlatCode code = span_ideal(rec.generator);
    return code == orthogonal_complement(code);
}

}  // namespace chaincodes::oracle
