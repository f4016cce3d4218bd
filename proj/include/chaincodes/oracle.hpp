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

#include <vector>

#include "chaincodes/ambient.hpp"
#include "chaincodes/codes.hpp"

namespace chaincodes::oracle {

using FlatVector = std::vector<FieldElement>;

/**
 * A code realized as an F_q-subspace of F_q^{4n}. Position i and u-power k
 * of an R^n vector map to column 4i + k. The basis is kept in reduced row
 * echelon form, so two equal subspaces have identical bases.
 *
 * Nothing here goes through the chain-ring, ambient or decomposition
 * arithmetic: only field operations and the raw coefficients of the input.
 */
class FlatCode {
   public:
    FlatCode(FieldPtr field, std::size_t n, RingElement lambda);

    const FieldPtr& field() const noexcept { return field_; }
    std::size_t length() const noexcept { return n_; }
    std::size_t columns() const noexcept { return 4 * n_; }
    const RingElement& lambda() const noexcept { return lambda_; }
    std::size_t dim() const noexcept { return rows_.size(); }
    const std::vector<FlatVector>& basis() const noexcept { return rows_; }
    const std::vector<std::size_t>& pivots() const noexcept { return pivots_; }

    /// Adds v to the span; returns false if it was already there.
    bool insert(FlatVector v);
    /// Residual of v after elimination against the basis.
    FlatVector reduce(FlatVector v) const;
    bool contains(const FlatVector& v) const;

    friend bool operator==(const FlatCode& a, const FlatCode& b) noexcept {
        return a.n_ == b.n_ && a.lambda_ == b.lambda_ && a.rows_ == b.rows_;
    }

   private:
    FieldPtr field_;
    std::size_t n_;
    RingElement lambda_;
    std::vector<FlatVector> rows_;
    std::vector<std::size_t> pivots_;
};

FlatVector flatten(const AmbientElement& a);
/// (c_0, ..., c_{n-1}) -> (lambda c_{n-1}, c_0, ..., c_{n-2}).
FlatVector twisted_shift(const Field& field, const RingElement& lambda, const FlatVector& v);
FlatVector times_u(const FlatVector& v);
/// Euclidean inner product sum_i a_i b_i in R.
RingElement inner_product(const Field& field, const FlatVector& a, const FlatVector& b);

/// The ideal <g> as the span of u^k x^i g, 0 <= k < 4, 0 <= i < n.
FlatCode span_ideal(const AmbientElement& g);

bool check_cardinality(const CodeRecord& rec);
/// Every basis row's twisted shift lies in the span.
bool check_constacyclic(const FlatCode& fc);
/// Closed under multiplication by u.
bool check_u_closed(const FlatCode& fc);
/// Pairwise orthogonal over R and dim(c) + dim(dual) = 4n.
bool check_duality(const FlatCode& c, const FlatCode& dual);
/// The full Euclidean dual over R, computed as a null space; it lives in
/// the ambient of lambda^{-1}.
FlatCode orthogonal_complement(const FlatCode& c);
/// Requires a self-inverse lambda (AmbientMismatch otherwise).
bool check_self_dual(const CodeRecord& rec);

}  // namespace chaincodes::oracle
