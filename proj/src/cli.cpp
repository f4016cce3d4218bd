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

#include "chaincodes/cli.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdlib>
#include <exception>
#include <functional>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>

#include "chaincodes/codes.hpp"
#include "chaincodes/decomposition.hpp"
#include "chaincodes/error.hpp"
#include "chaincodes/io.hpp"
#include "chaincodes/oracle.hpp"

namespace chaincodes::cli {

namespace {

using io::Json;

constexpr std::uint64_t kEnumerationCap = 1'000'000;
// Records materialized at once when enumerating; output is flushed per block.
constexpr std::uint64_t kBlock = 4096;

struct JobConfig {
    std::uint32_t p = 0;
    std::uint32_t m = 1;
    std::vector<std::uint32_t> modulus;
    std::size_t n = 0;
    std::uint32_t delta = 1;
    std::uint32_t alpha = 1;
    std::uint64_t seed = kDefaultSeed;
    std::string format = "text";
    std::string field_display = "integer";
    std::uint64_t offset = 0;
    std::uint64_t limit = 0;
    bool has_limit = false;
    bool force = false;
    unsigned jobs = 1;
    std::string index;
    std::string scope = "all";
    bool multi_generator = false;

    bool json() const { return format == "json"; }
    FieldDisplay display() const { return field_display == "polynomial" ? FieldDisplay::Polynomial : FieldDisplay::Integer; }
};

struct Params {
    FieldPtr field;
    FieldElement delta;
    FieldElement alpha;
};

Params validate(const JobConfig& cfg) {
    auto field = Field::create(cfg.p, cfg.m,
                               cfg.modulus.empty() ? std::nullopt : std::optional(cfg.modulus));
    if (cfg.delta == 0) throw Error(ErrorCode::InvalidInput, "delta must be a nonzero element of F_q");
    if (cfg.alpha == 0) throw Error(ErrorCode::InvalidInput, "alpha must be a nonzero element of F_q");
    if (cfg.n == 0) throw Error(ErrorCode::InvalidInput, "n must be positive");
    if (cfg.n % cfg.p == 0) {
        throw Error(ErrorCode::NotCoprime,
                    "n = " + std::to_string(cfg.n) + " is divisible by p = " + std::to_string(cfg.p));
    }
    const FieldElement delta = field->element(cfg.delta);
    const FieldElement alpha = field->element(cfg.alpha);
    return Params{field, delta, alpha};
}

// The decomposition every subcommand works with; rearranged whenever tau
// acts on its own factors.
Decomposition decompose(const JobConfig& cfg) {
    const Params prm = validate(cfg);
    Decomposition d = compute_decomposition(prm.field, cfg.n, prm.delta, prm.alpha, cfg.seed);
    if (d.tau_is_involution_domain()) d = canonical_rearrange(d);
    return d;
}

std::string field_name(const Field& field) {
    std::string out = "F_" + std::to_string(field.order());
    if (field.degree() == 1) return out;
    auto prime = Field::create(field.characteristic(), 1);
    std::string mod = io::format_poly(Poly::from_values(prime, field.modulus()));
    std::replace(mod.begin(), mod.end(), 'x', 'y');
    return out + " = F_" + std::to_string(field.characteristic()) + "[y]/<" + mod + ">";
}

std::string ambient_name(const Ambient& amb, FieldDisplay display) {
    return "R[x]/<x^" + std::to_string(amb.length()) + " - (" + amb.ring().format(amb.lambda(), display) + ")>";
}

std::string size_text(const Field& field, std::uint64_t log_q) {
    return std::to_string(field.order()) + "^" + std::to_string(log_q);
}

Json poly_entry(const Poly& f) {
    return Json{{"coeffs", f.values()}, {"degree", f.degree()}, {"text", io::format_poly(f)}};
}

void emit(std::ostream& out, const Json& j) { out << j.dump(2) << '\n'; }

template <class Fn>
auto parallel_map(std::uint64_t first, std::uint64_t count, unsigned jobs, Fn fn) {
    using T = decltype(fn(first));
    std::vector<std::optional<T>> slots(count);
    std::vector<std::exception_ptr> errors(count);
    std::atomic<std::uint64_t> next{0};
    auto worker = [&] {
        for (std::uint64_t i = next++; i < count; i = next++) {
            try {
                slots[i] = fn(first + i);
            } catch (...) {
                errors[i] = std::current_exception();
            }
        }
    };
    const auto threads = static_cast<unsigned>(std::min<std::uint64_t>(std::max(jobs, 1U), count));
    if (threads <= 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
        for (auto& t : pool) t.join();
    }
    std::vector<T> results;
    results.reserve(count);
    for (std::uint64_t i = 0; i < count; ++i) {
        if (errors[i]) std::rethrow_exception(errors[i]);
        results.push_back(std::move(*slots[i]));
    }
    return results;
}

// Runs fn over ranks [first, first + count) block by block, handing each
// ordered block to sink.
template <class Fn, class Sink>
void for_each_block(std::uint64_t first, std::uint64_t count, unsigned jobs, Fn fn, Sink sink) {
    for (std::uint64_t done = 0; done < count;) {
        const std::uint64_t size = std::min(kBlock, count - done);
        for (auto& item : parallel_map(first + done, size, jobs, fn)) sink(item);
        done += size;
    }
}

struct Range {
    std::uint64_t first;
    std::uint64_t count;
};

Range enumeration_range(const JobConfig& cfg, std::size_t r) {
    const auto total = code_count(r);
    const std::uint64_t available = total ? *total : UINT64_MAX;
    if (cfg.offset > available) throw Error(ErrorCode::InvalidInput, "offset beyond the number of codes");
    std::uint64_t count = available - cfg.offset;
    if (cfg.has_limit) count = std::min(count, cfg.limit);
    if ((!total || count > kEnumerationCap) && !cfg.force) {
        throw Error(ErrorCode::InvalidInput,
                    "refusing to enumerate more than 10^6 codes (5^" + std::to_string(r) + " in total); use --limit or --force");
    }
    if (!total && !cfg.has_limit) throw Error(ErrorCode::InvalidInput, "5^r overflows 64 bits; give --limit");
    return Range{cfg.offset, count};
}

Json record_json(const Decomposition& d, const CodeRecord& rec, bool multi) {
    Json j = io::to_json(rec);
    if (multi) {
        Json gens = Json::array();
        for (const auto& g : code_generators(d, rec.index)) gens.push_back(io::to_json(g));
        j["generators"] = std::move(gens);
    }
    return j;
}

std::string record_line(const Field& field, const CodeRecord& rec, FieldDisplay display) {
    return "C" + rec.index.to_string() + " |C| = " + size_text(field, rec.log_q_size) + " <" +
           io::format_ambient(rec.generator, display) + ">";
}

int cmd_factor(const JobConfig& cfg, std::ostream& out) {
    const Params prm = validate(cfg);
    const Factorization fac = factor_xn_minus_delta(prm.field, cfg.n, prm.delta, cfg.seed);
    const Poly target = xn_minus(prm.field, cfg.n, prm.delta);
    if (cfg.json()) {
        Json factors = Json::array();
        for (const auto& f : fac.factors) factors.push_back(poly_entry(f));
        emit(out, Json{{"field", io::field_to_json(*prm.field)},
                       {"n", cfg.n},
                       {"delta", prm.delta.value},
                       {"polynomial", poly_entry(target)},
                       {"factors", std::move(factors)}});
        return kExitOk;
    }
    const auto display = cfg.display();
    out << "field: " << field_name(*prm.field) << '\n';
    out << io::format_poly(target, display) << " = ";
    for (const auto& f : fac.factors) out << '(' << io::format_poly(f, display) << ')';
    out << "\nr = " << fac.size() << '\n';
    for (std::size_t j = 0; j < fac.size(); ++j) {
        out << "f_" << j + 1 << " = " << io::format_poly(fac.factors[j], display) << '\n';
    }
    return kExitOk;
}

int cmd_idempotents(const JobConfig& cfg, std::ostream& out) {
    const Decomposition d = decompose(cfg);
    if (cfg.json()) {
        emit(out, io::to_json(d));
        return kExitOk;
    }
    const auto display = cfg.display();
    out << "field: " << field_name(*d.field) << '\n';
    out << "ambient: " << ambient_name(*d.ambient(), display) << '\n';
    out << "r = " << d.r() << '\n';
    for (std::size_t j = 0; j < d.r(); ++j) {
        const auto& fd = d.factors[j];
        const auto k = std::to_string(j + 1);
        out << "f_" << k << " = " << io::format_poly(fd.f, display) << " (degree " << fd.degree << ")\n";
        out << "  eps_" << k << " = " << io::format_poly(fd.eps, display) << '\n';
        out << "  e_" << k << " = " << io::format_ambient(fd.e, display) << '\n';
        out << "  omega_" << k << " = " << io::format_poly(fd.omega, display) << '\n';
    }
    out << (d.tau_is_involution_domain() ? "tau:" : "tau (onto the factors of the dual ambient):");
    for (std::size_t j = 0; j < d.r(); ++j) out << ' ' << j + 1 << "->" << d.tau[j] + 1;
    out << '\n';
    if (d.rho && d.eps_pairs) {
        out << "rho = " << *d.rho << ", eps = " << *d.eps_pairs << '\n';
    } else {
        out << "rho, eps: undefined (delta^2 != 1)\n";
    }
    return kExitOk;
}

int cmd_code_index(const JobConfig& cfg, const Decomposition& d, std::ostream& out) {
    const CodeIndex idx = CodeIndex::parse(cfg.index);
    const CodeRecord rec = build_code(d, idx);
    const CodeRecord dual = dual_code(d, idx);
    if (cfg.json()) {
        emit(out, Json{{"code", record_json(d, rec, cfg.multi_generator)},
                       {"dual", io::to_json(dual)},
                       {"log_q_product", rec.log_q_size + dual.log_q_size}});
        return kExitOk;
    }
    const auto display = cfg.display();
    const Field& F = *d.field;
    out << record_line(F, rec, display) << '\n';
    out << "dual: C" << idx.to_string() << "^perp = C" << dual.index.to_string() << " in "
        << ambient_name(*dual.generator.ambient(), display) << ", |C^perp| = " << size_text(F, dual.log_q_size)
        << " <" << io::format_ambient(dual.generator, display) << ">\n";
    out << "|C| * |C^perp| = " << size_text(F, rec.log_q_size + dual.log_q_size) << '\n';
    return kExitOk;
}

int cmd_codes(const JobConfig& cfg, std::ostream& out) {
    const Decomposition d = decompose(cfg);
    if (!cfg.index.empty()) return cmd_code_index(cfg, d, out);
    const Range range = enumeration_range(cfg, d.r());
    auto build = [&](std::uint64_t rank) { return build_code(d, index_unrank(d.r(), rank)); };
    if (cfg.json()) {
        Json codes = Json::array();
        for_each_block(range.first, range.count, cfg.jobs, build,
                       [&](const CodeRecord& rec) { codes.push_back(record_json(d, rec, cfg.multi_generator)); });
        emit(out, Json{{"lambda", io::to_json(d.lambda())},
                       {"r", d.r()},
                       {"offset", range.first},
                       {"count", range.count},
                       {"codes", std::move(codes)}});
        return kExitOk;
    }
    for_each_block(range.first, range.count, cfg.jobs, build,
                   [&](const CodeRecord& rec) { out << record_line(*d.field, rec, cfg.display()) << '\n'; });
    return kExitOk;
}

int cmd_dual(const JobConfig& cfg, std::ostream& out) {
    const Decomposition d = decompose(cfg);
    const CodeIndex idx = CodeIndex::parse(cfg.index);
    const CodeRecord dual = dual_code(d, idx);
    if (cfg.json()) {
        emit(out, Json{{"of", idx.values()}, {"dual", io::to_json(dual)}});
        return kExitOk;
    }
    const auto display = cfg.display();
    out << "C" << idx.to_string() << "^perp = C" << dual.index.to_string() << " in "
        << ambient_name(*dual.generator.ambient(), display) << '\n';
    out << "|C^perp| = " << size_text(*d.field, dual.log_q_size) << '\n';
    out << "generator: " << io::format_ambient(dual.generator, display) << '\n';
    if (dual.self_dual) out << "self-dual: " << (*dual.self_dual ? "yes" : "no") << '\n';
    return kExitOk;
}

int cmd_selfdual(const JobConfig& cfg, std::ostream& out) {
    const Decomposition d = decompose(cfg);
    SelfDualStream stream = self_dual_codes(d);
    const std::uint64_t count = stream.count();
    if (count > kEnumerationCap && !cfg.force) {
        throw Error(ErrorCode::InvalidInput, "refusing to list more than 10^6 self-dual codes; use --force");
    }
    if (cfg.json()) {
        Json codes = Json::array();
        while (auto rec = stream.next()) codes.push_back(record_json(d, *rec, cfg.multi_generator));
        emit(out, Json{{"lambda", io::to_json(d.lambda())},
                       {"rho", d.rho ? Json(*d.rho) : Json(nullptr)},
                       {"eps_pairs", d.eps_pairs ? Json(*d.eps_pairs) : Json(nullptr)},
                       {"count", count},
                       {"codes", std::move(codes)}});
        return kExitOk;
    }
    out << "self-dual codes: " << count << '\n';
    while (auto rec = stream.next()) out << record_line(*d.field, *rec, cfg.display()) << '\n';
    return kExitOk;
}

struct CheckRow {
    CodeIndex index;
    std::uint64_t log_q_size = 0;
    std::size_t dim = 0;
    std::size_t dual_dim = 0;
    bool cardinality = false;
    bool constacyclic = false;
    bool u_closed = false;
    bool duality = false;
    bool dual_is_complement = false;
    std::optional<bool> self_dual;

    bool ok() const {
        return cardinality && constacyclic && u_closed && duality && dual_is_complement && self_dual.value_or(true);
    }
};

CheckRow check_code(const Decomposition& d, const CodeIndex& idx, bool expect_self_dual) {
    const CodeRecord rec = build_code(d, idx);
    const CodeRecord dual = dual_code(d, idx);
    const oracle::FlatCode code = oracle::span_ideal(rec.generator);
    const oracle::FlatCode dual_code = oracle::span_ideal(dual.generator);
    CheckRow row;
    row.index = idx;
    row.log_q_size = rec.log_q_size;
    row.dim = code.dim();
    row.dual_dim = dual_code.dim();
    row.cardinality = code.dim() == rec.log_q_size && dual_code.dim() == dual.log_q_size;
    row.constacyclic = oracle::check_constacyclic(code) && oracle::check_constacyclic(dual_code);
    row.u_closed = oracle::check_u_closed(code) && oracle::check_u_closed(dual_code);
    row.duality = oracle::check_duality(code, dual_code);
    row.dual_is_complement = dual_code == oracle::orthogonal_complement(code);
    if (expect_self_dual) row.self_dual = oracle::check_self_dual(rec);
    return row;
}

Json row_json(const CheckRow& row) {
    Json j{{"index", row.index.values()},
           {"log_q_size", row.log_q_size},
           {"dim", row.dim},
           {"dual_dim", row.dual_dim},
           {"cardinality", row.cardinality},
           {"constacyclic", row.constacyclic},
           {"u_closed", row.u_closed},
           {"duality", row.duality},
           {"dual_is_complement", row.dual_is_complement}};
    if (row.self_dual) j["self_dual"] = *row.self_dual;
    j["ok"] = row.ok();
    return j;
}

std::string yes_no(bool b) { return b ? "yes" : "NO"; }

std::string row_line(const CheckRow& row) {
    std::string s = "C" + row.index.to_string() + " dim " + std::to_string(row.dim) + "/" +
                    std::to_string(row.log_q_size) + " cardinality " + yes_no(row.cardinality) + ", constacyclic " +
                    yes_no(row.constacyclic) + ", u-closed " + yes_no(row.u_closed) + ", duality " +
                    yes_no(row.duality && row.dual_is_complement);
    if (row.self_dual) s += ", self-dual " + yes_no(*row.self_dual);
    return s;
}

int cmd_verify(const JobConfig& cfg, std::ostream& out) {
    const auto start = std::chrono::steady_clock::now();
    const Decomposition d = decompose(cfg);
    const std::vector<std::string> failures = verify_decomposition(d);

    std::vector<CheckRow> rows;
    if (cfg.scope == "index") {
        if (cfg.index.empty()) throw Error(ErrorCode::InvalidIndex, "--scope index needs --index");
        rows.push_back(check_code(d, CodeIndex::parse(cfg.index), false));
    } else if (cfg.scope == "selfdual") {
        SelfDualStream stream = self_dual_codes(d);
        std::vector<CodeIndex> indices;
        while (auto rec = stream.next()) indices.push_back(rec->index);
        rows = parallel_map(0, indices.size(), cfg.jobs,
                            [&](std::uint64_t i) { return check_code(d, indices[i], true); });
    } else {
        const Range range = enumeration_range(cfg, d.r());
        for_each_block(range.first, range.count, cfg.jobs,
                       [&](std::uint64_t rank) { return check_code(d, index_unrank(d.r(), rank), false); },
                       [&](CheckRow& row) { rows.push_back(std::move(row)); });
    }
    const auto passed = static_cast<std::size_t>(std::count_if(rows.begin(), rows.end(), [](const CheckRow& r) { return r.ok(); }));
    const bool ok = failures.empty() && passed == rows.size();
    const double elapsed_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();

    if (cfg.json()) {
        Json results = Json::array();
        for (const auto& row : rows) results.push_back(row_json(row));
        emit(out, Json{{"scope", cfg.scope},
                       {"decomposition_ok", failures.empty()},
                       {"decomposition_failures", failures},
                       {"checked", rows.size()},
                       {"passed", passed},
                       {"ok", ok},
                       {"results", std::move(results)},
                       {"elapsed_ms", elapsed_ms}});
    } else {
        out << "decomposition: " << (failures.empty() ? "ok" : "FAILED") << '\n';
        for (const auto& f : failures) out << "  " << f << '\n';
        for (const auto& row : rows) out << row_line(row) << '\n';
        out << "passed " << passed << "/" << rows.size() << '\n';
        out << "elapsed: " << static_cast<std::uint64_t>(elapsed_ms) << " ms\n";
    }
    return ok ? kExitOk : kExitVerification;
}

std::uint64_t default_seed() {
    const char* env = std::getenv(kSeedEnv);
    if (env == nullptr || *env == '\0') return kDefaultSeed;
    try {
        std::size_t used = 0;
        const std::uint64_t seed = std::stoull(env, &used, 0);
        if (used == std::string(env).size()) return seed;
    } catch (const std::exception&) {
    }
    throw Error(ErrorCode::InvalidInput, std::string(kSeedEnv) + " is not an unsigned integer");
}

void add_common(CLI::App* sub, JobConfig& cfg) {
    sub->add_option("--p", cfg.p, "field characteristic")->required();
    sub->add_option("--m", cfg.m, "extension degree, q = p^m")->capture_default_str();
    sub->add_option("--modulus", cfg.modulus,
                    "field modulus over F_p, ascending comma-separated coefficients with the leading 1")
        ->delimiter(',');
    sub->add_option("--n", cfg.n, "code length")->required();
    sub->add_option("--delta", cfg.delta, "delta as an enc integer")->capture_default_str();
    sub->add_option("--alpha", cfg.alpha, "alpha as an enc integer")->capture_default_str();
    sub->add_option("--seed", cfg.seed, std::string("factorization seed (default from ") + kSeedEnv + ")");
    sub->add_option("--format", cfg.format, "output format")
        ->check(CLI::IsMember({"text", "json"}))
        ->capture_default_str();
    sub->add_option("--field-display", cfg.field_display, "print F_q elements as integers or y-polynomials")
        ->check(CLI::IsMember({"integer", "polynomial"}))
        ->capture_default_str();
}

void add_enumeration(CLI::App* sub, JobConfig& cfg) {
    sub->add_option("--offset", cfg.offset, "rank of the first index");
    sub->add_option("--limit", cfg.limit, "maximum number of indices")->each([&cfg](const std::string&) {
        cfg.has_limit = true;
    });
    sub->add_flag("--force", cfg.force, "allow enumerations beyond 10^6 codes");
    sub->add_option("--jobs", cfg.jobs, "worker threads")->check(CLI::PositiveNumber);
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    JobConfig cfg;
    try {
        cfg.seed = default_seed();
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return kExitValidation;
    }

    CLI::App app{"Constacyclic codes over F_q[u]/<u^4>"};
    app.name("chaincodes");
    app.require_subcommand(1);
    app.set_help_all_flag("--help-all");

    auto* factor = app.add_subcommand("factor", "canonical factorization of x^n - delta");
    add_common(factor, cfg);

    auto* idem = app.add_subcommand("idempotents", "primitive idempotents, tau, rho and eps");
    add_common(idem, cfg);

    auto* codes = app.add_subcommand("codes", "list all codes, or one code and its dual");
    add_common(codes, cfg);
    add_enumeration(codes, cfg);
    codes->add_option("--index", cfg.index, "code index l_1,...,l_r");
    codes->add_flag("--multi-generator", cfg.multi_generator, "add the r-term generating set to JSON records");

    auto* dual = app.add_subcommand("dual", "dual of one code");
    add_common(dual, cfg);
    dual->add_option("--index", cfg.index, "code index l_1,...,l_r")->required();

    auto* selfdual = app.add_subcommand("selfdual", "all self-dual codes (q = 2^m, delta = 1)");
    add_common(selfdual, cfg);
    selfdual->add_flag("--force", cfg.force, "allow listings beyond 10^6 codes");
    selfdual->add_flag("--multi-generator", cfg.multi_generator, "add the r-term generating set to JSON records");

    auto* verify = app.add_subcommand("verify", "check codes against the brute-force oracle");
    add_common(verify, cfg);
    add_enumeration(verify, cfg);
    verify->add_option("--scope", cfg.scope, "which codes to check")
        ->check(CLI::IsMember({"all", "index", "selfdual"}))
        ->capture_default_str();
    verify->add_option("--index", cfg.index, "code index for --scope index");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitValidation;
    }

    try {
        if (factor->parsed()) return cmd_factor(cfg, out);
        if (idem->parsed()) return cmd_idempotents(cfg, out);
        if (codes->parsed()) return cmd_codes(cfg, out);
        if (dual->parsed()) return cmd_dual(cfg, out);
        if (selfdual->parsed()) return cmd_selfdual(cfg, out);
        if (verify->parsed()) return cmd_verify(cfg, out);
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return e.code() == ErrorCode::InternalError ? kExitVerification : kExitValidation;
    }
    return kExitValidation;
}

}  // namespace chaincodes::cli
