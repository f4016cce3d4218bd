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

#include "chaincodes/decomposition.hpp"

#include <algorithm>
#include <numeric>

#include "chaincodes/error.hpp"

namespace chaincodes {

namespace {

struct DualParams {
    FieldElement delta;
    FieldElement alpha;
};

// (delta + alpha u^2)^{-1} = delta^{-1} - alpha delta^{-2} u^2.
DualParams dual_params(const Decomposition& d) {
    const auto& F = *d.field;
    const FieldElement delta_inv = F.inv(d.delta);
    return {delta_inv, F.neg(F.mul(d.alpha, F.mul(delta_inv, delta_inv)))};
}

Decomposition build_base(const FieldPtr& field, std::size_t n, FieldElement delta, FieldElement alpha,
                         std::vector<Poly> factors) {
    Decomposition d;
    d.field = field;
    d.n = n;
    d.delta = delta;
    d.alpha = alpha;
    d.big = BigQuotient::create(field, n, delta, alpha);

    const Poly base = xn_minus(field, n, delta);
    const Poly& modulus = d.big->modulus();
    const FieldElement alpha_inv = field->inv(alpha);
    d.factors.reserve(factors.size());
    for (auto& f : factors) {
        auto [cofactor, rest] = divmod(base, f);
        if (!rest.is_zero()) throw Error(ErrorCode::InvalidInput, "factor does not divide x^n - delta");
        const Poly f2 = f * f;
        const Poly cof2 = cofactor * cofactor;
        Bezout bz = ext_gcd(cof2, f2);
        if (!bz.gcd.is_one()) throw Error(ErrorCode::InvalidInput, "factors of x^n - delta are not coprime");
        Poly eps = mulmod(bz.s, cof2, modulus);
        auto [e1, e0] = divmod(eps, d.big->v_square());
        AmbientElement e = psi_map(BigQuotientElement::from_poly(d.big, eps));
        Poly omega = (cofactor * alpha_inv) % f2;
        Poly omega_inv = (bz.s * cofactor * alpha) % f2;
        const auto degree = static_cast<std::size_t>(f.degree());
        d.factors.push_back(FactorData{std::move(f), degree, std::move(cofactor), std::move(bz.s), std::move(bz.t),
                                       std::move(eps), std::move(e0), std::move(e1), std::move(e), std::move(omega),
                                       std::move(omega_inv)});
    }
    return d;
}

// Factor list of the dual ambient's x^n - delta^{-1}: the same list when
// delta^2 = 1, otherwise the monic reciprocals in canonical order.
std::vector<Poly> dual_factor_list(const Decomposition& d) {
    std::vector<Poly> out;
    for (const auto& fd : d.factors) out.push_back(d.tau_is_involution_domain() ? fd.f : monic(reciprocal(fd.f)));
    if (!d.tau_is_involution_domain()) std::sort(out.begin(), out.end(), canonical_less);
    return out;
}

void finalize(Decomposition& d) {
    d.tau = compute_tau(d);
    if (!d.tau_is_involution_domain()) {
        d.rho.reset();
        d.eps_pairs.reset();
        return;
    }
    std::size_t fixed = 0;
    for (std::size_t j = 0; j < d.r(); ++j) {
        if (d.tau[d.tau[j]] != j) throw Error(ErrorCode::InternalError, "tau is not an involution");
        if (d.tau[j] == j) ++fixed;
    }
    d.rho = fixed;
    d.eps_pairs = (d.r() - fixed) / 2;
}

}  // namespace

bool Decomposition::self_dual_ambient() const {
    const auto& ring = ambient()->ring();
    return ring.inv(lambda()) == lambda();
}

bool Decomposition::tau_is_involution_domain() const { return field->mul(delta, delta) == field->one(); }

std::vector<std::size_t> Decomposition::degrees() const {
    std::vector<std::size_t> out;
    for (const auto& f : factors) out.push_back(f.degree);
    return out;
}

Factorization Decomposition::factorization() const {
    Factorization out{field, n, delta, {}};
    for (const auto& f : factors) out.factors.push_back(f.f);
    return out;
}

LocalRingPtr Decomposition::local_ring(std::size_t j) const {
    const auto& fd = factors.at(j);
    return LocalRing::create(fd.f, fd.omega, fd.omega_inv);
}

Decomposition compute_decomposition(const FieldPtr& field, std::size_t n, FieldElement delta, FieldElement alpha,
                                    std::uint64_t seed) {
    if (!field->contains(alpha) || alpha.is_zero()) throw Error(ErrorCode::InvalidInput, "alpha must be nonzero");
    Factorization fac = factor_xn_minus_delta(field, n, delta, seed);
    return decomposition_from_factors(field, n, delta, alpha, std::move(fac.factors));
}

Decomposition decomposition_from_factors(const FieldPtr& field, std::size_t n, FieldElement delta,
                                         FieldElement alpha, std::vector<Poly> factors) {
    Poly product = Poly::constant(field, field->one());
    for (const auto& f : factors) {
        if (!f.is_monic() || !is_irreducible(f)) throw Error(ErrorCode::InvalidInput, "factors must be monic irreducible");
        product *= f;
    }
    if (!(product == xn_minus(field, n, delta))) throw Error(ErrorCode::InvalidInput, "factors do not multiply to x^n - delta");
    Decomposition d = build_base(field, n, delta, alpha, std::move(factors));
    finalize(d);
    return d;
}

std::vector<std::size_t> compute_tau(const Decomposition& d) {
    std::vector<AmbientElement> targets;
    if (d.self_dual_ambient()) {
        for (const auto& fd : d.factors) targets.push_back(fd.e);
    } else {
        const DualParams dp = dual_params(d);
        Decomposition dual = build_base(d.field, d.n, dp.delta, dp.alpha, dual_factor_list(d));
        for (auto& fd : dual.factors) targets.push_back(std::move(fd.e));
    }
    std::vector<std::size_t> tau(d.r());
    std::vector<bool> hit(targets.size(), false);
    for (std::size_t j = 0; j < d.r(); ++j) {
        const AmbientElement image = tau_map(d.factors[j].e);
        auto it = std::find(targets.begin(), targets.end(), image);
        if (it == targets.end()) throw Error(ErrorCode::InternalError, "e_j(x^{-1}) matches no primitive idempotent");
        tau[j] = static_cast<std::size_t>(it - targets.begin());
        if (hit[tau[j]]) throw Error(ErrorCode::InternalError, "tau is not injective");
        hit[tau[j]] = true;
    }
    return tau;
}

std::vector<std::size_t> reciprocal_tau(const Decomposition& d) {
    const std::vector<Poly> targets = dual_factor_list(d);
    std::vector<std::size_t> tau(d.r());
    for (std::size_t j = 0; j < d.r(); ++j) {
        const Poly rec = monic(reciprocal(d.factors[j].f));
        auto it = std::find(targets.begin(), targets.end(), rec);
        if (it == targets.end()) throw Error(ErrorCode::InternalError, "reciprocal factor not found");
        tau[j] = static_cast<std::size_t>(it - targets.begin());
    }
    return tau;
}

Decomposition canonical_rearrange(const Decomposition& d) {
    if (!d.tau_is_involution_domain()) {
        throw Error(ErrorCode::InvalidInput, "rearrangement by tau needs delta^2 = 1");
    }
    auto by_factor = [&](std::size_t a, std::size_t b) { return canonical_less(d.factors[a].f, d.factors[b].f); };
    std::vector<std::size_t> fixed, reps;
    for (std::size_t j = 0; j < d.r(); ++j) {
        if (d.tau[j] == j) {
            fixed.push_back(j);
        } else if (by_factor(j, d.tau[j])) {
            reps.push_back(j);
        }
    }
    std::sort(fixed.begin(), fixed.end(), by_factor);
    std::sort(reps.begin(), reps.end(), by_factor);
    std::vector<std::size_t> perm = fixed;
    perm.insert(perm.end(), reps.begin(), reps.end());
    for (auto j : reps) perm.push_back(d.tau[j]);

    std::vector<std::size_t> pos(d.r());
    for (std::size_t i = 0; i < perm.size(); ++i) pos[perm[i]] = i;

    Decomposition out = d;
    out.factors.clear();
    for (auto j : perm) out.factors.push_back(d.factors[j]);
    for (std::size_t i = 0; i < perm.size(); ++i) out.tau[i] = pos[d.tau[perm[i]]];
    out.rearranged = true;
    return out;
}

Decomposition dual_decomposition(const Decomposition& d) {
    const DualParams dp = dual_params(d);
    Decomposition dual = build_base(d.field, d.n, dp.delta, dp.alpha, dual_factor_list(d));
    finalize(dual);
    dual.rearranged = d.rearranged && d.tau_is_involution_domain();
    return dual;
}

std::vector<std::string> verify_decomposition(const Decomposition& d) {
    std::vector<std::string> failures;
    auto expect = [&](bool ok, const std::string& what) {
        if (!ok) failures.push_back(what);
    };
    const auto& field = d.field;
    const Poly base = xn_minus(field, d.n, d.delta);
    const Poly& modulus = d.big->modulus();
    const Poly one = Poly::constant(field, field->one());
    const auto& ring = d.ambient()->ring();

    std::size_t degree_sum = 0;
    Poly product = one;
    Poly eps_sum(field);
    AmbientElement e_sum = AmbientElement::zero(d.ambient());
    for (std::size_t j = 0; j < d.r(); ++j) {
        const auto& fd = d.factors[j];
        const std::string tag = "factor " + std::to_string(j + 1) + ": ";
        const Poly f2 = fd.f * fd.f;
        expect(fd.f.is_monic() && is_irreducible(fd.f), tag + "f_j is not monic irreducible");
        expect(static_cast<int>(fd.degree) == fd.f.degree(), tag + "stored degree is wrong");
        expect(fd.cofactor * fd.f == base, tag + "F_j f_j != x^n - delta");
        expect(fd.g * fd.cofactor * fd.cofactor + fd.h * f2 == one, tag + "Bezout identity fails");
        expect(fd.eps == mulmod(fd.g, fd.cofactor * fd.cofactor, modulus), tag + "eps_j != g_j F_j^2");
        expect(mulmod(fd.eps, fd.eps, modulus) == fd.eps, tag + "eps_j is not idempotent");
        expect(fd.e0.degree() < static_cast<int>(d.n) && fd.e1.degree() < static_cast<int>(d.n),
               tag + "e_{j,i} degree not below n");
        expect(fd.e0 + d.big->v_square() * fd.e1 == fd.eps, tag + "eps_j split is wrong");
        std::vector<RingElement> formula(d.n);
        for (std::size_t i = 0; i < d.n; ++i) formula[i] = ring.make(fd.e0.coeff(i), {}, fd.e1.coeff(i));
        expect(fd.e == AmbientElement(d.ambient(), formula), tag + "e_j != e_{j,0} + u^2 e_{j,1}");
        expect(fd.e == psi_map(BigQuotientElement::from_poly(d.big, fd.eps)), tag + "e_j != Psi(eps_j)");
        expect(fd.e * fd.e == fd.e, tag + "e_j is not idempotent");
        expect(fd.omega == (fd.cofactor * field->inv(d.alpha)) % f2, tag + "omega_j != alpha^{-1} F_j");
        expect(mulmod(fd.omega, fd.omega_inv, f2).is_one(), tag + "omega_j inverse is wrong");
        expect(d.big->v_square() % f2 == mulmod(fd.omega, fd.f, f2), tag + "alpha^{-1}(x^n - delta) != omega_j f_j");
        for (std::size_t l = j + 1; l < d.r(); ++l) {
            const auto& other = d.factors[l];
            expect(!(other.f == fd.f), tag + "repeated factor");
            expect(mulmod(fd.eps, other.eps, modulus).is_zero(), tag + "eps_j eps_l != 0");
            expect((fd.e * other.e).is_zero(), tag + "e_j e_l != 0");
        }
        product *= fd.f;
        degree_sum += fd.degree;
        eps_sum += fd.eps;
        e_sum += fd.e;
    }
    expect(product == base, "product of factors != x^n - delta");
    expect(degree_sum == d.n, "factor degrees do not sum to n");
    expect(eps_sum == one, "sum of eps_j != 1");
    expect(e_sum == AmbientElement::one(d.ambient()), "sum of e_j != 1");

    expect(d.tau.size() == d.r(), "tau has the wrong size");
    if (d.tau.size() == d.r()) {
        try {
            expect(compute_tau(d) == d.tau, "stored tau differs from idempotent matching");
        } catch (const Error& err) {
            failures.push_back(std::string("tau recomputation failed: ") + err.what());
        }
        if (d.tau_is_involution_domain()) {
            std::size_t fixed = 0;
            for (std::size_t j = 0; j < d.r(); ++j) {
                expect(d.tau[j] < d.r() && d.tau[d.tau[j]] == j, "tau is not an involution");
                expect(d.tau[j] < d.r() && d.factors[d.tau[j]].degree == d.factors[j].degree,
                       "tau does not preserve degrees");
                if (d.tau[j] == j) ++fixed;
            }
            expect(d.rho == fixed, "rho disagrees with tau");
            expect(d.rho && d.eps_pairs && *d.rho + 2 * *d.eps_pairs == d.r(), "rho + 2 eps != r");
            if (d.rearranged && d.rho && d.eps_pairs) {
                const std::size_t rho = *d.rho, eps = *d.eps_pairs;
                for (std::size_t j = 0; j < rho; ++j) expect(d.tau[j] == j, "rearranged layout: fixed block");
                for (std::size_t i = 0; i < eps; ++i) {
                    expect(d.tau[rho + i] == rho + eps + i, "rearranged layout: pair block");
                }
            }
        }
    }
    return failures;
}

}  // namespace chaincodes
