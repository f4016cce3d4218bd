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

#include "chaincodes/io.hpp"

#include <cctype>
#include <charconv>

#include "chaincodes/error.hpp"

namespace chaincodes::io {

namespace {

std::string wrap_if_sum(const std::string& s) { return s.find('+') == std::string::npos ? s : "(" + s + ")"; }

std::string power(char var, std::size_t k) {
    if (k == 0) return "";
    std::string out(1, var);
    if (k > 1) out += "^" + std::to_string(k);
    return out;
}

std::string term(const std::string& coeff, bool is_one, char var, std::size_t k) {
    if (k == 0) return coeff;
    if (is_one) return power(var, k);
    return wrap_if_sum(coeff) + "*" + power(var, k);
}

std::string strip_spaces(std::string_view text) {
    std::string out;
    for (char c : text) {
        if (!std::isspace(static_cast<unsigned char>(c))) out.push_back(c);
    }
    return out;
}

[[noreturn]] void bad(std::string_view text, const std::string& why) {
    throw Error(ErrorCode::InvalidInput, "cannot parse '" + std::string(text) + "': " + why);
}

// Splits on '+' outside parentheses.
std::vector<std::string> split_terms(const std::string& s, std::string_view original) {
    std::vector<std::string> out;
    int depth = 0;
    std::string cur;
    for (char c : s) {
        if (c == '(') ++depth;
        if (c == ')' && --depth < 0) bad(original, "unbalanced parentheses");
        if (c == '+' && depth == 0) {
            out.push_back(std::move(cur));
            cur.clear();
        } else {
            cur.push_back(c);
        }
    }
    if (depth != 0) bad(original, "unbalanced parentheses");
    out.push_back(std::move(cur));
    for (const auto& t : out) {
        if (t.empty()) bad(original, "empty term");
    }
    return out;
}

std::uint64_t parse_uint(std::string_view s, std::string_view original) {
    std::uint64_t v = 0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size() || s.empty()) bad(original, "expected an integer, got '" + std::string(s) + "'");
    return v;
}

// "c", "var", "var^k", "c*var", "c*var^k" -> (c, k).
std::pair<std::uint64_t, std::size_t> parse_monomial(std::string_view t, char var, std::string_view original) {
    const auto at = t.find(var);
    if (at == std::string_view::npos) return {parse_uint(t, original), 0};
    std::uint64_t c = 1;
    if (at > 0) {
        if (t[at - 1] != '*') bad(original, "expected '*' before " + std::string(1, var));
        c = parse_uint(t.substr(0, at - 1), original);
    }
    std::string_view rest = t.substr(at + 1);
    if (rest.empty()) return {c, 1};
    if (rest[0] != '^') bad(original, "expected '^' after " + std::string(1, var));
    return {c, static_cast<std::size_t>(parse_uint(rest.substr(1), original))};
}

std::uint32_t json_enc(const Json& j) { return j.get<std::uint32_t>(); }

Poly poly_from_json(const FieldPtr& field, const Json& j) {
    return Poly::from_values(field, j.at("coeffs").get<std::vector<std::uint32_t>>());
}

RingElement ring_from_json(const Field& field, const Json& j) {
    const auto c = j.get<std::vector<std::uint32_t>>();
    if (c.size() != 4) throw Error(ErrorCode::InvalidInput, "R element needs 4 coordinates");
    RingElement r;
    for (int k = 0; k < 4; ++k) r.c[k] = field.element(c[k]);
    return r;
}

AmbientElement ambient_from_json(const AmbientPtr& ambient, const Json& j) {
    if (j.at("n").get<std::size_t>() != ambient->length()) throw Error(ErrorCode::AmbientMismatch, "length differs");
    if (!(ring_from_json(*ambient->field(), j.at("lambda")) == ambient->lambda())) {
        throw Error(ErrorCode::AmbientMismatch, "lambda differs");
    }
    std::vector<RingElement> coeffs;
    for (const auto& c : j.at("coeffs")) coeffs.push_back(ring_from_json(*ambient->field(), c));
    return AmbientElement(ambient, std::move(coeffs));
}

Json one_based(const std::vector<std::size_t>& v) {
    Json out = Json::array();
    for (const auto i : v) out.push_back(i + 1);
    return out;
}

Json optional_json(const std::optional<std::size_t>& v) { return v ? Json(*v) : Json(nullptr); }

}  // namespace

std::string format_poly(const Poly& a, FieldDisplay display) {
    if (a.is_zero()) return "0";
    const Field& F = *a.field();
    std::string out;
    for (std::size_t k = a.coeffs().size(); k-- > 0;) {
        const FieldElement c = a.coeffs()[k];
        if (c.is_zero()) continue;
        if (!out.empty()) out += " + ";
        out += term(F.format(c, display), c == F.one(), 'x', k);
    }
    return out;
}

std::string format_ambient(const AmbientElement& a, FieldDisplay display) {
    const ChainRing& ring = a.ambient()->ring();
    std::string out;
    for (std::size_t k = a.length(); k-- > 0;) {
        const RingElement& c = a[k];
        if (c.is_zero()) continue;
        if (!out.empty()) out += " + ";
        out += term(ring.format(c, display), c == ring.one(), 'x', k);
    }
    return out.empty() ? "0" : out;
}

Poly parse_poly(const FieldPtr& field, std::string_view text) {
    Poly out(field);
    for (const auto& t : split_terms(strip_spaces(text), text)) {
        const auto [c, k] = parse_monomial(t, 'x', text);
        out += Poly::monomial(field, field->element(c), k);
    }
    return out;
}

RingElement parse_ring(const Field& field, std::string_view text) {
    RingElement out;
    for (const auto& t : split_terms(strip_spaces(text), text)) {
        const auto [c, k] = parse_monomial(t, 'u', text);
        if (k > 3) continue;  // u^4 = 0
        out.c[k] = field.add(out.c[k], field.element(c));
    }
    return out;
}

AmbientElement parse_ambient(const AmbientPtr& ambient, std::string_view text) {
    const Field& F = *ambient->field();
    AmbientElement out(ambient);
    for (const auto& t : split_terms(strip_spaces(text), text)) {
        std::string_view coeff = t;
        std::size_t k = 0;
        const auto at = t.find('x');
        if (at != std::string::npos) {
            coeff = std::string_view(t).substr(0, at);
            if (!coeff.empty()) {
                if (coeff.back() != '*') bad(text, "expected '*' before x");
                coeff.remove_suffix(1);
            }
            k = parse_monomial(std::string_view(t).substr(at), 'x', text).second;
        }
        RingElement c = ambient->ring().one();
        if (!coeff.empty()) {
            if (coeff.front() == '(') {
                if (coeff.back() != ')') bad(text, "unbalanced parentheses");
                coeff = coeff.substr(1, coeff.size() - 2);
            }
            c = parse_ring(F, coeff);
        }
        out += AmbientElement::monomial(ambient, c, k);
    }
    return out;
}

Json to_json(const Poly& a) { return Json{{"coeffs", a.values()}}; }

Json to_json(const RingElement& a) {
    Json out = Json::array();
    for (const auto& c : a.c) out.push_back(c.value);
    return out;
}

Json to_json(const AmbientElement& a) {
    Json coeffs = Json::array();
    for (const auto& c : a.coeffs()) coeffs.push_back(to_json(c));
    return Json{{"n", a.length()}, {"lambda", to_json(a.ambient()->lambda())}, {"coeffs", std::move(coeffs)}};
}

Json to_json(const CodeRecord& rec) {
    Json out{{"index", rec.index.values()},
             {"generator", to_json(rec.generator)},
             {"text", format_ambient(rec.generator)},
             {"log_q_size", rec.log_q_size},
             {"lambda", to_json(rec.lambda)}};
    if (rec.self_dual) out["self_dual"] = *rec.self_dual;
    return out;
}

Json field_to_json(const Field& field) {
    return Json{{"p", field.characteristic()}, {"m", field.degree()}, {"modulus", field.modulus()}};
}

Json to_json(const Decomposition& d) {
    Json factors = Json::array();
    for (const auto& f : d.factors) {
        factors.push_back(Json{{"f", to_json(f.f)},
                               {"degree", f.degree},
                               {"cofactor", to_json(f.cofactor)},
                               {"g", to_json(f.g)},
                               {"h", to_json(f.h)},
                               {"eps", to_json(f.eps)},
                               {"e0", to_json(f.e0)},
                               {"e1", to_json(f.e1)},
                               {"e", to_json(f.e)},
                               {"omega", to_json(f.omega)},
                               {"omega_inv", to_json(f.omega_inv)},
                               {"text", {{"f", format_poly(f.f)}, {"e", format_ambient(f.e)}}}});
    }
    return Json{{"field", field_to_json(*d.field)},
                {"n", d.n},
                {"delta", d.delta.value},
                {"alpha", d.alpha.value},
                {"lambda", to_json(d.lambda())},
                {"rearranged", d.rearranged},
                {"factors", std::move(factors)},
                {"tau", one_based(d.tau)},
                {"rho", optional_json(d.rho)},
                {"eps_pairs", optional_json(d.eps_pairs)}};
}

Decomposition decomposition_from_json(const Json& j) {
    try {
        const Json& fj = j.at("field");
        auto field = Field::create(fj.at("p").get<std::uint32_t>(), fj.at("m").get<std::uint32_t>(),
                                   fj.at("modulus").get<std::vector<std::uint32_t>>());
        Decomposition d;
        d.field = field;
        d.n = j.at("n").get<std::size_t>();
        d.delta = field->element(json_enc(j.at("delta")));
        d.alpha = field->element(json_enc(j.at("alpha")));
        d.big = BigQuotient::create(field, d.n, d.delta, d.alpha);
        if (!(ring_from_json(*field, j.at("lambda")) == d.lambda())) {
            throw Error(ErrorCode::InvalidInput, "lambda does not equal delta + alpha u^2");
        }
        d.rearranged = j.at("rearranged").get<bool>();
        for (const auto& f : j.at("factors")) {
            d.factors.push_back(FactorData{poly_from_json(field, f.at("f")),
                                           f.at("degree").get<std::size_t>(),
                                           poly_from_json(field, f.at("cofactor")),
                                           poly_from_json(field, f.at("g")),
                                           poly_from_json(field, f.at("h")),
                                           poly_from_json(field, f.at("eps")),
                                           poly_from_json(field, f.at("e0")),
                                           poly_from_json(field, f.at("e1")),
                                           ambient_from_json(d.ambient(), f.at("e")),
                                           poly_from_json(field, f.at("omega")),
                                           poly_from_json(field, f.at("omega_inv"))});
        }
        for (const auto t : j.at("tau").get<std::vector<std::size_t>>()) {
            if (t == 0) throw Error(ErrorCode::InvalidInput, "tau entries are 1-based");
            d.tau.push_back(t - 1);
        }
        if (!j.at("rho").is_null()) d.rho = j.at("rho").get<std::size_t>();
        if (!j.at("eps_pairs").is_null()) d.eps_pairs = j.at("eps_pairs").get<std::size_t>();
        return d;
    } catch (const nlohmann::json::exception& e) {
        throw Error(ErrorCode::InvalidInput, std::string("malformed decomposition JSON: ") + e.what());
    }
}

}  // namespace chaincodes::io
