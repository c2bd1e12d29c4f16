#include "parity/parity.h"

#include "cache.hpp"
#include "errors.hpp"
#include "serialize.hpp"

#include <cstdlib>
#include <cstring>
#include <memory>
#include <new>
#include <sstream>

using namespace parity;

struct parity_engine {
    std::shared_ptr<EquationCache> cache;
    std::unique_ptr<Engine> engine;
};

namespace {

thread_local std::string last_error;

parity_status status_of(ErrorKind k) {
    switch (k) {
        case ErrorKind::InvalidArgument: return PARITY_INVALID_ARGUMENT;
        case ErrorKind::Parse: return PARITY_PARSE;
        case ErrorKind::Domain: return PARITY_DOMAIN;
        case ErrorKind::Divergent: return PARITY_DIVERGENT;
        case ErrorKind::Unsupported: return PARITY_UNSUPPORTED;
        case ErrorKind::Precision: return PARITY_PRECISION;
        case ErrorKind::Io: return PARITY_IO;
        case ErrorKind::Internal: return PARITY_INTERNAL;
    }
    return PARITY_INTERNAL;
}

template <class F>
parity_status guarded(F&& f) {
    last_error.clear();
    try {
        return f();
    } catch (const Error& e) {
        last_error = e.what();
        return status_of(e.kind());
    } catch (const std::bad_alloc&) {
        last_error = "out of memory";
        return PARITY_INTERNAL;
    } catch (const std::exception& e) {
        last_error = e.what();
        return PARITY_INTERNAL;
    }
}

void emit(char** out, const std::string& text) {
    if (!out) fail(ErrorKind::InvalidArgument, "null output pointer");
    char* p = static_cast<char*>(std::malloc(text.size() + 1));
    if (!p) throw std::bad_alloc();
    std::memcpy(p, text.c_str(), text.size() + 1);
    *out = p;
}

Engine& engine_of(parity_engine* e) {
    if (!e) fail(ErrorKind::InvalidArgument, "null engine");
    return *e->engine;
}

std::string required(const char* s, const char* what) {
    if (!s) fail(ErrorKind::InvalidArgument, std::string("null ") + what);
    return s;
}

Format format_of(parity_format f) {
    switch (f) {
        case PARITY_FORMAT_TEXT: return Format::Text;
        case PARITY_FORMAT_LATEX: return Format::Latex;
        case PARITY_FORMAT_JSON: return Format::Json;
    }
    fail(ErrorKind::InvalidArgument, "unknown format");
}

VerifyOptions options_of(const parity_verify_options* o) {
    VerifyOptions v;
    if (!o) return v;
    if (o->samples < 1) fail(ErrorKind::InvalidArgument, "need at least one sample");
    if (!(o->tolerance > 0)) fail(ErrorKind::InvalidArgument, "tolerance must be positive");
    if (o->digits < 30) fail(ErrorKind::InvalidArgument, "precision must be at least 30 digits");
    v.samples = o->samples;
    v.tolerance = o->tolerance;
    v.digits = o->digits;
    v.seed = o->seed;
    return v;
}

std::vector<RootOfUnity> parse_roots(const std::string& text) {
    std::vector<RootOfUnity> roots;
    std::stringstream in(text);
    std::string item;
    while (std::getline(in, item, ',')) roots.push_back(RootOfUnity::parse(item));
    if (roots.empty()) fail(ErrorKind::Parse, "empty root list");
    return roots;
}

std::string numeric_str(const Cplx& z) {
    std::ostringstream out;
    out << z.re.str(25);
    if (z.im != 0) out << (z.im < 0 ? " - " : " + ") << Real(boost::multiprecision::abs(z.im)).str(25) << "*i";
    return out.str();
}

struct ClosedForm {
    std::string lhs;
    CzvCombination value;
};

// Closed reductions for MZVs in depth two and three and alternating sums in depth two.
std::optional<ClosedForm> closed_form(const IndexVector& n, const std::vector<RootOfUnity>& roots, Format f) {
    const bool ones = std::all_of(roots.begin(), roots.end(), [](auto& r) { return r.is_one(); });
    const bool signs = std::all_of(roots.begin(), roots.end(), [](auto& r) { return r.n <= 2; });
    const int w = weight(n);
    const std::string label = render(CzvCombination::of(li_symbol(n, roots)), f);
    if (ones && n.size() == 2 && w % 2 && n[1] >= 2) return ClosedForm{label, reduce_mzv_depth2(n[0], n[1])};
    if (ones && n.size() == 3 && w % 2 == 0 && n[2] >= 2) return ClosedForm{label, reduce_mzv_depth3(n[0], n[1], n[2])};
    if (signs && n.size() == 2 && w % 2)
        return ClosedForm{label, alt_depth2(n[0], n[1], roots[0].is_one() ? 1 : -1, roots[1].is_one() ? 1 : -1)};
    return std::nullopt;
}

CzvCombination display_form(const CzvCombination& c) {
    return pi_powers_to_zeta2(normalize_even_zetas(fold_alternating_depth1(reduce_odd_double_zetas(substitute_zeta_zero(c)))));
}

std::string reduce_impl(Engine& engine, const IndexVector& n, const std::vector<RootOfUnity>& roots, bool want_closed,
                        Format f) {
    if (roots.size() != n.size()) fail(ErrorKind::InvalidArgument, "need one root per index entry");
    const CzvCombination special = display_form(specialize(engine.pli(n), roots));
    const std::string lhs = specialization_lhs(n, roots, f);
    std::optional<ClosedForm> closed;
    if (want_closed) closed = closed_form(n, roots, f);

    PrecisionGuard guard(40);
    const Real target("1e-32");
    const Cplx value = eval_czv(special, target).value;

    if (f == Format::Json) {
        std::vector<std::string> rs;
        for (auto& r : roots) rs.push_back(r.str());
        Json j{{"index", n}, {"roots", rs}, {"lhs", lhs}, {"specialization", czv_to_json(special)}, {"numeric", numeric_str(value)}};
        if (want_closed) {
            if (closed) {
                const CzvCombination v = fold_alternating_depth1(substitute_zeta_zero(closed->value));
                j["closed_form"] = Json{{"lhs", closed->lhs}, {"value", czv_to_json(v)}, {"numeric", numeric_str(eval_czv(v, target).value)}};
            } else {
                j["closed_form"] = nullptr;
            }
        }
        return j.dump(2);
    }
    std::ostringstream out;
    const char* eq = f == Format::Latex ? " &= " : " = ";
    out << lhs << eq << render(special, f) << '\n';
    if (f == Format::Text) out << "  ~ " << numeric_str(value) << '\n';
    if (want_closed) {
        if (closed) {
            const CzvCombination v = fold_alternating_depth1(substitute_zeta_zero(closed->value));
            out << closed->lhs << eq << render(v, f) << '\n';
            if (f == Format::Text) out << "  ~ " << numeric_str(eval_czv(v, target).value) << '\n';
        } else if (f == Format::Text) {
            out << "(no closed reduction applies)\n";
        }
    }
    return out.str();
}

std::string table_impl(Engine& engine, int max_weight, Format f) {
    if (max_weight < 1) fail(ErrorKind::InvalidArgument, "max weight must be at least 1");
    std::vector<PliResult> results;
    for (int w = 1; w <= max_weight; ++w)
        for (auto& n : compositions(w)) results.push_back(engine.pli(n));
    if (f == Format::Json) {
        Json eqs = Json::array();
        for (auto& r : results) eqs.push_back(result_to_json(r));
        return Json{{"engine_version", kEngineVersion}, {"max_weight", max_weight}, {"count", results.size()}, {"equations", eqs}}
                   .dump(2) +
               '\n';
    }
    std::ostringstream out;
    int current = 0;
    for (auto& r : results) {
        if (r.weight != current) {
            current = r.weight;
            out << (f == Format::Latex ? "% weight " : "# weight ") << current << '\n';
        }
        if (f == Format::Latex)
            out << "\\begin{dmath*}\n" << render_result(r, f) << "\n\\end{dmath*}\n";
        else
            out << render_result(r, f) << '\n';
    }
    return out.str();
}

std::string verify_all_impl(Engine& engine, int max_weight, const VerifyOptions& opts, Format f, bool& all_pass) {
    if (max_weight < 1) fail(ErrorKind::InvalidArgument, "max weight must be at least 1");
    std::vector<VerifyReport> reports;
    all_pass = true;
    for (int w = 1; w <= max_weight; ++w)
        for (auto& n : compositions(w)) {
            reports.push_back(verify_feq(engine.pli(n), opts));
            all_pass = all_pass && reports.back().pass;
        }
    const size_t passed = std::count_if(reports.begin(), reports.end(), [](auto& r) { return r.pass; });
    if (f == Format::Json) {
        Json rs = Json::array();
        for (auto& r : reports) rs.push_back(report_to_json(r));
        return Json{{"max_weight", max_weight}, {"passed", passed}, {"total", reports.size()}, {"pass", all_pass}, {"reports", rs}}
            .dump(2);
    }
    std::ostringstream out;
    for (auto& r : reports) out << render_report(r, Format::Text) << '\n';
    out << passed << "/" << reports.size() << " equations verified\n";
    return out.str();
}

std::string bernoulli_impl(int n, bool polynomial, Format f) {
    if (n < 0) fail(ErrorKind::InvalidArgument, "Bernoulli index must be non-negative");
    if (!polynomial) {
        const BigRational b = bernoulli_number(n);
        if (f == Format::Json) return Json{{"n", n}, {"value", to_string(b)}}.dump(2);
        return "B_" + std::to_string(n) + " = " + to_string(b);
    }
    const RatPolynomial p = bernoulli_polynomial(n);
    if (f == Format::Json) {
        std::vector<std::string> cs;
        for (auto& c : p.coeffs()) cs.push_back(to_string(c));
        return Json{{"n", n}, {"coefficients", cs}}.dump(2);
    }
    std::ostringstream out;
    out << "B_" << n << "(x) =";
    bool first = true;
    for (int k = p.degree(); k >= 0; --k) {
        const BigRational c = p.coeff(k);
        if (c == 0) continue;
        out << (c < 0 ? (first ? " -" : " - ") : (first ? " " : " + "));
        const BigRational mag = c < 0 ? BigRational(-c) : c;
        const bool unit = mag == 1 && k > 0;
        if (!unit) out << to_string(mag);
        if (k > 0) out << (unit ? "" : "*") << "x" << (k > 1 ? "^" + std::to_string(k) : "");
        first = false;
    }
    return out.str();
}

}  // namespace

extern "C" {

parity_verify_options parity_verify_defaults(void) {
    VerifyOptions v;
    return {v.samples, v.tolerance, v.digits, v.seed};
}

parity_status parity_engine_create(const char* cache_dir, parity_engine** out) {
    return guarded([&] {
        if (!out) fail(ErrorKind::InvalidArgument, "null output pointer");
        auto e = std::make_unique<parity_engine>();
        if (cache_dir) {
            const std::filesystem::path dir = *cache_dir ? std::filesystem::path(cache_dir) : EquationCache::default_dir();
            e->cache = std::make_shared<EquationCache>(dir);
        }
        e->engine = e->cache ? std::make_unique<Engine>(e->cache) : std::make_unique<Engine>();
        *out = e.release();
        return PARITY_OK;
    });
}

void parity_engine_destroy(parity_engine* engine) { delete engine; }

const char* parity_last_error(void) { return last_error.c_str(); }

const char* parity_status_name(parity_status status) {
    switch (status) {
        case PARITY_OK: return "ok";
        case PARITY_INVALID_ARGUMENT: return "invalid argument";
        case PARITY_PARSE: return "parse error";
        case PARITY_DOMAIN: return "domain error";
        case PARITY_DIVERGENT: return "divergent";
        case PARITY_UNSUPPORTED: return "unsupported";
        case PARITY_PRECISION: return "precision";
        case PARITY_IO: return "i/o error";
        case PARITY_VERIFY_FAILED: return "verification failed";
        case PARITY_INTERNAL: return "internal error";
    }
    return "unknown";
}

const char* parity_version(void) { return kEngineVersion; }

void parity_string_free(char* s) { std::free(s); }

parity_status parity_feq(parity_engine* engine, const char* index, parity_form form, parity_format format, int log_basis,
                         char** out) {
    return guarded([&] {
        const IndexVector n = parse_index(required(index, "index"));
        const Form fm = form == PARITY_FORM_COMPACT ? Form::Compact : Form::Canonical;
        emit(out, render_result(engine_of(engine).pli(n, fm), format_of(format), log_basis != 0));
        return PARITY_OK;
    });
}

parity_status parity_verify(parity_engine* engine, const char* index, const parity_verify_options* options,
                            parity_format format, char** out) {
    return guarded([&] {
        const IndexVector n = parse_index(required(index, "index"));
        const VerifyReport r = verify_feq(engine_of(engine).pli(n), options_of(options));
        emit(out, render_report(r, format_of(format)));
        if (r.pass) return PARITY_OK;
        last_error = "verification failed for " + index_str(n);
        return PARITY_VERIFY_FAILED;
    });
}

parity_status parity_verify_all(parity_engine* engine, int max_weight, const parity_verify_options* options,
                                parity_format format, char** out) {
    return guarded([&] {
        bool pass = false;
        emit(out, verify_all_impl(engine_of(engine), max_weight, options_of(options), format_of(format), pass));
        if (pass) return PARITY_OK;
        last_error = "some equations failed verification";
        return PARITY_VERIFY_FAILED;
    });
}

parity_status parity_reduce(parity_engine* engine, const char* index, const char* roots, int closed_form,
                            parity_format format, char** out) {
    return guarded([&] {
        const IndexVector n = parse_index(required(index, "index"));
        const auto rs = parse_roots(required(roots, "roots"));
        emit(out, reduce_impl(engine_of(engine), n, rs, closed_form != 0, format_of(format)));
        return PARITY_OK;
    });
}

parity_status parity_table(parity_engine* engine, int max_weight, parity_format format, char** out) {
    return guarded([&] {
        emit(out, table_impl(engine_of(engine), max_weight, format_of(format)));
        return PARITY_OK;
    });
}

parity_status parity_bernoulli(int n, int polynomial, parity_format format, char** out) {
    return guarded([&] {
        emit(out, bernoulli_impl(n, polynomial != 0, format_of(format)));
        return PARITY_OK;
    });
}

}  // extern "C"
