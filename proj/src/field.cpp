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

#include "chaincodes/field.hpp"

#include <algorithm>
#include <sstream>

#include "chaincodes/error.hpp"

namespace chaincodes {

namespace {

// Minimal dense arithmetic over the prime field, used before a Field exists.
using PrimePoly = std::vector<std::uint32_t>;

void trim(PrimePoly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

std::uint32_t inv_mod(std::uint32_t a, std::uint32_t p) {
    std::uint64_t result = 1, base = a % p;
    for (std::uint64_t e = p - 2; e > 0; e >>= 1) {
        if (e & 1) result = result * base % p;
        base = base * base % p;
    }
    return static_cast<std::uint32_t>(result);
}

PrimePoly rem(PrimePoly a, const PrimePoly& b, std::uint32_t p) {
    trim(a);
    const std::uint32_t lead_inv = inv_mod(b.back(), p);
    while (a.size() >= b.size()) {
        const std::uint64_t c = std::uint64_t{a.back()} * lead_inv % p;
        const std::size_t shift = a.size() - b.size();
        for (std::size_t i = 0; i < b.size(); ++i) {
            a[shift + i] = static_cast<std::uint32_t>((a[shift + i] + p - c * b[i] % p) % p);
        }
        trim(a);
    }
    return a;
}

PrimePoly mulmod(const PrimePoly& a, const PrimePoly& b, const PrimePoly& f, std::uint32_t p) {
    if (a.empty() || b.empty()) return {};
    PrimePoly c(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        for (std::size_t j = 0; j < b.size(); ++j) {
            c[i + j] = static_cast<std::uint32_t>((c[i + j] + std::uint64_t{a[i]} * b[j]) % p);
        }
    }
    return rem(std::move(c), f, p);
}

PrimePoly powmod(PrimePoly base, std::uint64_t e, const PrimePoly& f, std::uint32_t p) {
    PrimePoly result{1};
    base = rem(std::move(base), f, p);
    for (; e > 0; e >>= 1) {
        if (e & 1) result = mulmod(result, base, f, p);
        base = mulmod(base, base, f, p);
    }
    return rem(std::move(result), f, p);
}

PrimePoly gcd(PrimePoly a, PrimePoly b, std::uint32_t p) {
    trim(a);
    trim(b);
    while (!b.empty()) {
        PrimePoly r = rem(a, b, p);
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

bool irreducible_over_prime(const PrimePoly& f, std::uint32_t p) {
    const std::size_t m = f.size() - 1;
    if (m <= 1) return m == 1;
    PrimePoly h{0, 1};  // x
    for (std::size_t k = 1; k <= m / 2; ++k) {
        h = powmod(h, p, f, p);  // x^{p^k} mod f
        PrimePoly diff = h;
        diff.resize(std::max<std::size_t>(diff.size(), 2), 0);
        diff[1] = (diff[1] + p - 1) % p;
        trim(diff);
        if (diff.empty()) return false;  // f divides x^{p^k} - x
        if (gcd(diff, f, p).size() > 1) return false;
    }
    return true;
}

}  // namespace

bool is_prime(std::uint64_t n) noexcept {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) return false;
    }
    return true;
}

std::vector<std::uint32_t> Field::smallest_irreducible(std::uint32_t p, std::uint32_t m) {
    if (!is_prime(p)) throw Error(ErrorCode::InvalidInput, "characteristic " + std::to_string(p) + " is not prime");
    if (m == 0) throw Error(ErrorCode::InvalidInput, "extension degree must be positive");
    if (m == 1) return {0, 1};
    std::uint64_t count = 1;
    for (std::uint32_t i = 0; i < m; ++i) {
        count *= p;
        if (count > kMaxOrder) throw Error(ErrorCode::InvalidInput, "field order exceeds supported maximum");
    }
    // Counting upwards in base p with c_{m-1} most significant visits the
    // candidates in the required order.
    for (std::uint64_t k = 0; k < count; ++k) {
        PrimePoly f(m + 1, 0);
        std::uint64_t rest = k;
        for (std::uint32_t i = 0; i < m; ++i) {
            f[i] = static_cast<std::uint32_t>(rest % p);
            rest /= p;
        }
        f[m] = 1;
        if (f[0] != 0 && irreducible_over_prime(f, p)) return f;
    }
    throw Error(ErrorCode::InternalError, "no irreducible polynomial found");
}

FieldPtr Field::create(std::uint32_t p, std::uint32_t m, std::optional<std::vector<std::uint32_t>> modulus) {
    if (!is_prime(p)) throw Error(ErrorCode::InvalidInput, "characteristic " + std::to_string(p) + " is not prime");
    if (m == 0) throw Error(ErrorCode::InvalidInput, "extension degree must be positive");
    std::uint64_t q = 1;
    for (std::uint32_t i = 0; i < m; ++i) {
        q *= p;
        if (q > kMaxOrder) throw Error(ErrorCode::InvalidInput, "field order exceeds supported maximum");
    }
    std::vector<std::uint32_t> f;
    if (modulus) {
        f = *modulus;
        if (f.size() != m + 1) throw Error(ErrorCode::InvalidInput, "modulus must have degree m");
        if (f.back() != 1) throw Error(ErrorCode::InvalidInput, "modulus must be monic");
        for (auto c : f) {
            if (c >= p) throw Error(ErrorCode::InvalidInput, "modulus coefficient out of range");
        }
        if (!irreducible_over_prime(f, p)) throw Error(ErrorCode::InvalidInput, "modulus is not irreducible");
    } else {
        f = smallest_irreducible(p, m);
    }
    return FieldPtr(new Field(p, m, std::move(f)));
}

Field::Field(std::uint32_t p, std::uint32_t m, std::vector<std::uint32_t> modulus)
    : p_(p), m_(m), q_(1), modulus_(std::move(modulus)) {
    for (std::uint32_t i = 0; i < m_; ++i) q_ *= p_;
    log_.assign(q_, 0);
    exp_.assign(2 * std::size_t{q_ - 1} + 1, 0);
    if (q_ == 2) {
        exp_ = {1, 1, 1};
        return;
    }
    auto to_poly = [&](std::uint32_t enc) {
        PrimePoly c(m_, 0);
        for (std::uint32_t i = 0; i < m_; ++i) {
            c[i] = enc % p_;
            enc /= p_;
        }
        trim(c);
        return c;
    };
    auto to_enc = [&](const PrimePoly& c) {
        std::uint32_t enc = 0;
        for (std::size_t i = c.size(); i-- > 0;) enc = enc * p_ + c[i];
        return enc;
    };
    for (std::uint32_t candidate = 2; candidate < q_; ++candidate) {
        const PrimePoly g = to_poly(candidate);
        std::uint32_t cur = 1;
        std::uint32_t order = 0;
        PrimePoly cur_poly{1};
        do {
            exp_[order] = cur;
            ++order;
            cur_poly = m_ == 1 ? PrimePoly{static_cast<std::uint32_t>(std::uint64_t{cur} * candidate % p_)}
                               : mulmod(cur_poly, g, modulus_, p_);
            trim(cur_poly);
            cur = to_enc(cur_poly);
        } while (cur != 1 && order < q_);
        if (order == q_ - 1) break;
        if (candidate + 1 == q_) throw Error(ErrorCode::InternalError, "no primitive element found");
    }
    for (std::uint32_t i = 0; i < q_ - 1; ++i) {
        log_[exp_[i]] = i;
        exp_[i + q_ - 1] = exp_[i];
    }
}

FieldElement Field::element(std::uint64_t enc) const {
    if (enc >= q_) {
        throw Error(ErrorCode::InvalidInput,
                    "field element encoding " + std::to_string(enc) + " out of range for q = " + std::to_string(q_));
    }
    return FieldElement{static_cast<std::uint32_t>(enc)};
}

FieldElement Field::add(FieldElement a, FieldElement b) const noexcept {
    if (p_ == 2) return FieldElement{a.value ^ b.value};
    if (m_ == 1) return FieldElement{(a.value + b.value) % p_};
    std::uint32_t result = 0, scale = 1;
    std::uint32_t x = a.value, y = b.value;
    for (std::uint32_t i = 0; i < m_; ++i) {
        result += ((x % p_ + y % p_) % p_) * scale;
        x /= p_;
        y /= p_;
        scale *= p_;
    }
    return FieldElement{result};
}

FieldElement Field::neg(FieldElement a) const noexcept {
    if (p_ == 2) return a;
    if (m_ == 1) return FieldElement{(p_ - a.value) % p_};
    std::uint32_t result = 0, scale = 1;
    std::uint32_t x = a.value;
    for (std::uint32_t i = 0; i < m_; ++i) {
        result += ((p_ - x % p_) % p_) * scale;
        x /= p_;
        scale *= p_;
    }
    return FieldElement{result};
}

FieldElement Field::sub(FieldElement a, FieldElement b) const noexcept { return add(a, neg(b)); }

FieldElement Field::mul(FieldElement a, FieldElement b) const noexcept {
    if (a.is_zero() || b.is_zero()) return zero();
    return FieldElement{exp_[log_[a.value] + log_[b.value]]};
}

FieldElement Field::inv(FieldElement a) const {
    if (a.is_zero()) throw Error(ErrorCode::DivisionByZero, "inverse of zero in F_" + std::to_string(q_));
    return FieldElement{exp_[(q_ - 1 - log_[a.value]) % (q_ - 1)]};
}

FieldElement Field::div(FieldElement a, FieldElement b) const { return mul(a, inv(b)); }

FieldElement Field::pow(FieldElement a, std::uint64_t e) const noexcept {
    if (e == 0) return one();
    if (a.is_zero()) return zero();
    return FieldElement{exp_[(std::uint64_t{log_[a.value]} * (e % (q_ - 1))) % (q_ - 1)]};
}

std::vector<std::uint32_t> Field::coords(FieldElement a) const {
    std::vector<std::uint32_t> c(m_, 0);
    std::uint32_t x = a.value;
    for (std::uint32_t i = 0; i < m_; ++i) {
        c[i] = x % p_;
        x /= p_;
    }
    return c;
}

FieldElement Field::from_coords(const std::vector<std::uint32_t>& c) const {
    if (c.size() != m_) throw Error(ErrorCode::InvalidInput, "coordinate vector must have length m");
    std::uint32_t enc = 0;
    for (std::size_t i = c.size(); i-- > 0;) {
        if (c[i] >= p_) throw Error(ErrorCode::InvalidInput, "coordinate out of range");
        enc = enc * p_ + c[i];
    }
    return FieldElement{enc};
}

std::string Field::format(FieldElement a, FieldDisplay display) const {
    if (display == FieldDisplay::Integer || m_ == 1) return std::to_string(a.value);
    const auto c = coords(a);
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = c.size(); i-- > 0;) {
        if (c[i] == 0) continue;
        if (!first) os << "+";
        first = false;
        if (i == 0 || c[i] != 1) os << c[i];
        if (i > 0 && c[i] != 1) os << "*";
        if (i >= 1) os << "y";
        if (i >= 2) os << "^" << i;
    }
    if (first) return "0";
    return os.str();
}

}  // namespace chaincodes
