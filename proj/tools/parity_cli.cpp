// parity: functional equations of PLi_n, their specializations at roots of unity,
// numeric verification and the weight-bounded equation table.
#include "parity/parity.h"

#include <CLI11.hpp>

#include <cstdio>
#include <cstring>
#include <fstream>
#include <iostream>
#include <map>
#include <string>

namespace {

struct Config {
    std::string format = "text";
    std::string form = "canonical";
    std::string cache;
    bool no_cache = false;
    int samples = 3;
    double tol = 1e-10;
    unsigned prec = 50;
    std::string output;
};

const std::map<std::string, parity_format> formats{
    {"text", PARITY_FORMAT_TEXT}, {"latex", PARITY_FORMAT_LATEX}, {"json", PARITY_FORMAT_JSON}};

int report(parity_status s) {
    std::fprintf(stderr, "parity: %s: %s\n", parity_status_name(s), parity_last_error());
    return s == PARITY_INVALID_ARGUMENT || s == PARITY_PARSE ? 2 : 1;
}

// Prints and frees a library string; writes to the output file when one is set.
bool deliver(char* text, const std::string& path) {
    bool ok = true;
    if (path.empty()) {
        std::fputs(text, stdout);
        if (*text && text[std::strlen(text) - 1] != '\n') std::fputc('\n', stdout);
    } else {
        std::ofstream out(path, std::ios::binary | std::ios::trunc);
        out << text;
        ok = static_cast<bool>(out);
        if (!ok) std::fprintf(stderr, "parity: cannot write %s\n", path.c_str());
    }
    parity_string_free(text);
    return ok;
}

parity_verify_options verify_options(const Config& c) {
    parity_verify_options o = parity_verify_defaults();
    o.samples = c.samples;
    o.tolerance = c.tol;
    o.digits = c.prec;
    return o;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Parity functional equations of multiple polylogarithms.\n"
                 "Indices are comma separated, n1 first: Li_{n1,...,nd}(z1,...,zd) = sum over 0<k1<...<kd of\n"
                 "z1^k1...zd^kd / (k1^n1...kd^nd), so n1 pairs with the smallest summation variable."};
    app.require_subcommand(1);
    Config cfg;

    auto common = [&](CLI::App* sub) {
        sub->add_option("--format", cfg.format, "text, latex or json")->check(CLI::IsMember({"text", "latex", "json"}));
        sub->add_option("--cache", cfg.cache, "equation cache directory (default: $PARITY_CACHE_DIR or ~/.cache/parity)");
        sub->add_flag("--no-cache", cfg.no_cache, "do not read or write the equation cache");
        sub->add_option("--output,-o", cfg.output, "write to this file instead of stdout");
    };
    auto numeric = [&](CLI::App* sub) {
        sub->add_option("--samples", cfg.samples, "sample points per equation")->check(CLI::PositiveNumber);
        sub->add_option("--tol", cfg.tol, "verification tolerance")->check(CLI::PositiveNumber);
        sub->add_option("--prec", cfg.prec, "working precision in decimal digits")->check(CLI::Range(30u, 2000u));
    };

    std::string index, roots;
    bool verify = false, closed = false, logs = false, polynomial = false;
    int max_weight = 0, bern = 0;

    auto* feq = app.add_subcommand("feq", "print the functional equation of PLi_n");
    feq->add_option("index", index, "n1,n2,...")->required();
    feq->add_option("--form", cfg.form, "canonical or compact")->check(CLI::IsMember({"canonical", "compact"}));
    feq->add_flag("--verify", verify, "check the equation numerically first");
    feq->add_flag("--logs", logs, "expand ber factors into powers of log(-z) and zeta(2)");
    common(feq);
    numeric(feq);

    auto* reduce = app.add_subcommand("reduce", "specialize PLi_n to roots of unity");
    reduce->add_option("index", index, "n1,n2,...")->required();
    reduce->add_option("--roots", roots, "k1/N1,k2/N2,... one root of unity exp(2 pi i k/N) per entry")->required();
    reduce->add_flag("--closed-form", closed, "also print the closed reduction when one applies");
    common(reduce);

    auto* ver = app.add_subcommand("verify", "verify every equation up to a weight");
    ver->add_option("--max-weight", max_weight, "largest weight |n|")->required()->check(CLI::PositiveNumber);
    common(ver);
    numeric(ver);

    auto* table = app.add_subcommand("table", "write all equations up to a weight");
    table->add_option("--max-weight", max_weight, "largest weight |n|")->required()->check(CLI::PositiveNumber);
    common(table);

    auto* ber = app.add_subcommand("bernoulli", "Bernoulli numbers and polynomials");
    ber->add_option("n", bern, "index")->required()->check(CLI::NonNegativeNumber);
    ber->add_flag("--polynomial", polynomial, "print B_n(x) instead of B_n");
    ber->add_option("--format", cfg.format, "text or json")->check(CLI::IsMember({"text", "latex", "json"}));

    CLI11_PARSE(app, argc, argv);
    const parity_format fmt = formats.at(cfg.format);
    char* text = nullptr;

    if (ber->parsed()) {
        if (auto s = parity_bernoulli(bern, polynomial, fmt, &text); s != PARITY_OK) return report(s);
        return deliver(text, cfg.output) ? 0 : 1;
    }

    parity_engine* engine = nullptr;
    const char* cache_dir = cfg.no_cache ? nullptr : cfg.cache.c_str();
    if (auto s = parity_engine_create(cache_dir, &engine); s != PARITY_OK) return report(s);
    struct Closer {
        parity_engine* e;
        ~Closer() { parity_engine_destroy(e); }
    } closer{engine};

    const parity_verify_options vopts = verify_options(cfg);
    parity_status s = PARITY_OK;
    if (feq->parsed()) {
        if (verify) {
            char* rep = nullptr;
            s = parity_verify(engine, index.c_str(), &vopts, PARITY_FORMAT_TEXT, &rep);
            if (rep) {
                std::fprintf(stderr, "%s\n", rep);
                parity_string_free(rep);
            }
            if (s != PARITY_OK) return report(s);
        }
        s = parity_feq(engine, index.c_str(), cfg.form == "compact" ? PARITY_FORM_COMPACT : PARITY_FORM_CANONICAL, fmt, logs,
                       &text);
    } else if (reduce->parsed()) {
        s = parity_reduce(engine, index.c_str(), roots.c_str(), closed, fmt, &text);
    } else if (ver->parsed()) {
        s = parity_verify_all(engine, max_weight, &vopts, fmt, &text);
        if (text) deliver(text, cfg.output);
        return s == PARITY_OK ? 0 : report(s);
    } else if (table->parsed()) {
        s = parity_table(engine, max_weight, fmt, &text);
    }
    if (s != PARITY_OK) return report(s);
    return deliver(text, cfg.output) ? 0 : 1;
}
