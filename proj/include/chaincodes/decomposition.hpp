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

#include <optional>
#include <string>
#include <vector>

#include "chaincodes/ambient.hpp"
#include "chaincodes/big_quotient.hpp"
#include "chaincodes/factor.hpp"
#include "chaincodes/local_ring.hpp"

namespace chaincodes {

/// Everything attached to one irreducible factor f_j of x^n - delta.
struct FactorData {
    Poly f;
    std::size_t degree;
    Poly cofactor;   // F_j = (x^n - delta) / f_j
    Poly g;          // g_j F_j^2 + h_j f_j^2 = 1
    Poly h;
    Poly eps;        // eps_j = g_j F_j^2 mod (x^n - delta)^2, degree < 2n
    Poly e0;         // eps_j = e0 + alpha^{-1}(x^n - delta) e1
    Poly e1;
    AmbientElement e;  // e0 + u^2 e1
    Poly omega;      // alpha^{-1} F_j mod f_j^2
    Poly omega_inv;  // alpha g_j F_j mod f_j^2
};

/**
 * CRT data for R[x]/<x^n - (delta + alpha u^2)>.
 *
 * tau maps each index j to the index of the primitive idempotent e_j(x^{-1})
 * in the dual ambient R[x]/<x^n - (delta + alpha u^2)^{-1}>, whose
 * decomposition is dual_decomposition(*this). When delta^2 = 1 both
 * factorizations coincide, tau is an involution on {0..r-1} and rho /
 * eps_pairs count its fixed points and 2-cycles.
 */
struct Decomposition {
    FieldPtr field;
    std::size_t n = 0;
    FieldElement delta;
    FieldElement alpha;
    BigQuotientPtr big;
    std::vector<FactorData> factors;
    std::vector<std::size_t> tau;
    std::optional<std::size_t> rho;
    std::optional<std::size_t> eps_pairs;
    bool rearranged = false;

    std::size_t r() const noexcept { return factors.size(); }
    const AmbientPtr& ambient() const noexcept { return big->ambient(); }
    const RingElement& lambda() const noexcept { return ambient()->lambda(); }
    /// lambda^{-1} == lambda, i.e. duals live in the same ambient.
    bool self_dual_ambient() const;
    /// tau permutes this decomposition's own index set (delta^2 = 1).
    bool tau_is_involution_domain() const;
    std::vector<std::size_t> degrees() const;
    Factorization factorization() const;
    LocalRingPtr local_ring(std::size_t j) const;
};

/// Factors x^n - delta (canonical order) and builds all per-factor data plus tau.
Decomposition compute_decomposition(const FieldPtr& field, std::size_t n, FieldElement delta, FieldElement alpha,
                                    std::uint64_t seed = kDefaultSeed);

/// Same as compute_decomposition but with a prescribed factor order.
Decomposition decomposition_from_factors(const FieldPtr& field, std::size_t n, FieldElement delta,
                                         FieldElement alpha, std::vector<Poly> factors);

/// tau via idempotent matching: e_j(x^{-1}) is compared with every
/// idempotent of the dual ambient.
std::vector<std::size_t> compute_tau(const Decomposition& d);

/// tau via reciprocal polynomials: f_{tau(j)} = monic(x^{d_j} f_j(1/x)).
std::vector<std::size_t> reciprocal_tau(const Decomposition& d);

/// Reorders factors as fixed points of tau, pair representatives, partners.
/// Requires delta^2 = 1.
Decomposition canonical_rearrange(const Decomposition& d);

/// Decomposition of the dual ambient (delta^{-1}, -alpha delta^{-2}), with
/// factor order aligned to d whenever the factor sets agree.
Decomposition dual_decomposition(const Decomposition& d);

/// Rechecks every algebraic identity; returns human-readable failures.
std::vector<std::string> verify_decomposition(const Decomposition& d);

}  // namespace chaincodes
