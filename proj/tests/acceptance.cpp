// One PASS/FAIL line per acceptance criterion; exits nonzero if any fails.
#include "closed_forms.hpp"
#include "oracle.hpp"
#include "roots.hpp"
#include "serialize.hpp"
#include "word.hpp"

#include <parity/parity.h>

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <functional>
#include <map>
#include <sstream>
#include <string>
#include <unistd.h>

using namespace parity;
namespace fs = std::filesystem;

namespace {

// Tolerances, fixed here and nowhere else.
constexpr double kInversionTol = 1e-12;
constexpr double kTolUpTo5 = 1e-10;
constexpr double kTolWeight6 = 1e-9;
constexpr double kConstantTol = 1e-10;
constexpr double kZeta152Tol = 1e-9;
constexpr double kFourthRootTol = 1e-10;
constexpr double kSweepBudgetSeconds = 30 * 60;

Engine& engine() {
    static Engine e;
    return e;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

double dist(const Cplx& a, const Cplx& b) { return abs(a - b).convert_to<double>(); }

double tol_for(int w) { return w <= 5 ? kTolUpTo5 : kTolWeight6; }

struct Outcome {
    bool pass = true;
    std::string detail;
};

int failures = 0;

void run(int id, const char* name, const std::function<Outcome()>& body) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
        o = body();
    } catch (const std::exception& e) {
        o = {false, std::string("exception: ") + e.what()};
    }
    if (!o.pass) ++failures;
    std::printf("%s criterion %2d: %s | %s (%.1fs)\n", o.pass ? "PASS" : "FAIL", id, name, o.detail.c_str(), seconds_since(t0));
    std::fflush(stdout);
}

std::string fmt(const char* f, double a) {
    char buf[128];
    std::snprintf(buf, sizeof buf, f, a);
    return buf;
}

// 1 ---------------------------------------------------------------------------

Outcome depth1_inversion() {
    PrecisionGuard guard(50);
    const Real target("1e-40");
    double worst = 0;
    bool shape = true;
    for (int n = 1; n <= 6; ++n) {
        shape = shape && engine().pli({n}).equation == single(make_generator(1, {n}, {}), -1);
        for (std::uint64_t s = 0; s < 10; ++s) {
            const Cplx z = sample_domain_point(1, 7000 + 37 * n + s)[0];
            const Cplx li = eval_li_series({n}, {z}, target).value;
            const Cplx li_inv = eval_li_hyperlog({n}, {Cplx(1) / z}, target).value;
            const Real sign = n % 2 ? -1 : 1;
            worst = std::max(worst, dist(li + sign * li_inv + ber_value(n, z), Cplx(0)));
        }
    }
    return {shape && worst < kInversionTol, fmt("max residual %.3g over 60 points", worst) + (shape ? "" : ", engine shape wrong")};
}

// 2 ---------------------------------------------------------------------------

Outcome example_12() {
    const ConsProd z1{1, 1, false}, z12{1, 2, false}, z2{2, 2, false};
    // logs[0] is log(-z1 z2), logs[1] is log(-z2)
    auto mono = [](int zeta2, int l12, int l2, std::vector<LiFactor> lis) { return LogMonomial{zeta2, {l12, l2}, std::move(lis)}; };
    LogExpansion expect;
    expect.ambient = 2;
    expect.add(mono(0, 0, 0, {li({3}, {z1})}), 1);
    expect.add(mono(0, 0, 0, {li({3}, {z2})}), 2);
    expect.add(mono(0, 0, 0, {li({3}, {z12})}), -1);
    expect.add(mono(1, 0, 1, {}), 2);
    expect.add(mono(0, 1, 0, {li({2}, {z2})}), -1);
    expect.add(mono(0, 1, 0, {li({2}, {z1})}), -1);
    expect.add(mono(1, 1, 0, {}), -1);
    expect.add(mono(0, 1, 2, {}), make_rational(-1, 2));
    expect.add(mono(0, 2, 0, {li({1}, {z1})}), make_rational(1, 2));
    expect.add(mono(0, 0, 2, {li({1}, {z1})}), make_rational(-1, 2));
    expect.add(mono(0, 0, 3, {}), make_rational(1, 3));

    const PliResult r = engine().pli({1, 2});
    const LogExpansion got = expand_ber_to_logs(r.equation);
    const bool exact = got.ambient == expect.ambient && got.terms == expect.terms;

    VerifyOptions opts;
    opts.samples = 5;
    opts.tolerance = kTolUpTo5;
    const VerifyReport rep = verify_feq(r, opts);
    return {exact && rep.pass, std::string(exact ? "log basis matches term by term" : "log basis differs") +
                                   fmt(", max error %.3g at 5 points", rep.max_error)};
}

// 3 ---------------------------------------------------------------------------

Outcome sweep() {
    const auto t0 = std::chrono::steady_clock::now();
    int low = 0, low_pass = 0, high = 0, high_pass = 0;
    double worst = 0;
    std::string failed;
    for (int w = 1; w <= 6; ++w)
        for (auto& n : compositions(w)) {
            VerifyOptions opts;
            opts.samples = 3;
            opts.tolerance = tol_for(w);
            const VerifyReport rep = verify_feq(engine().pli(n), opts);
            worst = std::max(worst, rep.max_error);
            (w <= 5 ? low : high) += 1;
            if (rep.pass) (w <= 5 ? low_pass : high_pass) += 1;
            else failed += " " + index_str(n);
        }
    const double elapsed = seconds_since(t0);
    const bool ok = low == 31 && high == 32 && low_pass == low && high_pass == high && elapsed < kSweepBudgetSeconds;
    std::ostringstream s;
    s << low_pass << "/" << low << " with |n|<=5, " << high_pass << "/" << high << " with |n|=6, max error " << worst << ", "
      << static_cast<int>(elapsed) << "s of " << static_cast<int>(kSweepBudgetSeconds) << "s";
    if (!failed.empty()) s << ", failed:" << failed;
    return {ok, s.str()};
}

// 4 ---------------------------------------------------------------------------

Outcome invariants() {
    int count = 0;
    std::string bad;
    for (int w = 1; w <= 6; ++w)
        for (auto& n : compositions(w)) {
            const LinComb& eq = engine().pli(n).equation;
            ++count;
            if (eq.max_depth() > depth(n) - 1 || eq.homogeneous_weight() != w || !eq.integral()) bad += " " + index_str(n);
        }
    return {bad.empty() && count == 63, std::to_string(count) + " equations" + (bad.empty() ? ", all hold" : ", violations:" + bad)};
}

// 5 ---------------------------------------------------------------------------

Outcome closed_forms() {
    int checked = 0;
    double worst = 0;
    std::string failed;
    for (int w = 2; w <= 6; ++w)
        for (auto& n : compositions(w)) {
            if (n.size() != 2 && n.size() != 3) continue;
            for (Form f : {Form::Canonical, Form::Compact}) {
                const PliResult r = n.size() == 2 ? pli_depth2_closed(n[0], n[1], f) : pli_depth3_closed(n[0], n[1], n[2], f);
                VerifyOptions opts;
                opts.samples = 3;
                opts.tolerance = tol_for(w);
                const VerifyReport rep = verify_feq(r, opts);
                ++checked;
                worst = std::max(worst, rep.max_error);
                if (!rep.pass) failed += " " + index_str(n) + "/" + form_name(f);
            }
        }
    // 15 depth-2 and 20 depth-3 indices, both forms
    return {failed.empty() && checked == 2 * (15 + 20),
            std::to_string(checked) + " closed formulas" + fmt(", max error %.3g", worst) + (failed.empty() ? "" : ", failed:" + failed)};
}

// 6 ---------------------------------------------------------------------------

Outcome corollaries() {
    PrecisionGuard guard(50);
    const Real target("1e-40");
    const RootOfUnity one, minus_one(1, 2), i4(1, 4);
    const Real zeta3 = zeta_value(3);
    const Real im_li2_i = li_root_depth1(2, 1, 4).im;
    auto reduced = [&](const IndexVector& n, std::vector<RootOfUnity> roots) {
        return fold_alternating_depth1(normalize_even_zetas(substitute_zeta_zero(specialize(engine().pli(n), roots))));
    };

    // zeta(1,2) = zeta(3): the specialization is 2 zeta(1,2) = 2 zeta(3)
    const bool e1 = reduced({1, 2}, {one, one}) == CzvCombination::of(zeta_symbol(3), 2);
    const double r1 = dist(eval_li_at_roots({{1, 2}, {one, one}}, target), Cplx(zeta3));

    const bool e2 = reduced({1, 2}, {one, minus_one}) == CzvCombination::of(zeta_symbol(3), make_rational(1, 4));
    const double r2 = dist(Real(2) * eval_li_at_roots({{1, 2}, {one, minus_one}}, target), Cplx(zeta3 / 4));

    // PLi_{1,2}(1, i) = Li_{1,2}(1, i) + Li_{1,2}(1, -i) = 2 Re Li_{1,2}(1, i)
    const Real rhs = Real(29) / 32 * zeta3 - pi() / 2 * im_li2_i;
    const Cplx special = eval_czv(specialize(engine().pli({1, 2}), {one, i4}), target).value;
    const Real direct = 2 * eval_li_at_roots({{1, 2}, {one, i4}}, target).re;
    const double r3 = std::max(dist(special, Cplx(rhs)), abs(Cplx(direct - rhs)).convert_to<double>());

    const double worst = std::max({r1, r2, r3});
    return {e1 && e2 && worst < kConstantTol,
            std::string(e1 && e2 ? "exact reductions hold" : "exact reduction differs") + fmt(", residuals %.3g", r1) +
                fmt(" %.3g", r2) + fmt(" %.3g", r3)};
}

// 7 ---------------------------------------------------------------------------

Outcome zeta_152() {
    PrecisionGuard guard(50);
    const Real target("1e-40");
    const CzvCombination got = substitute_zeta_zero(reduce_mzv_depth3(1, 5, 2));
    auto prod = [](std::initializer_list<int> ks) {
        CzvSymbol s;
        for (int k : ks) s = s * zeta_symbol(k);
        return s;
    };
    CzvCombination expect = CzvCombination::of(zeta_symbol(8), 7);
    expect.add(prod({2, 6}), 3);
    expect.add(prod({4, 2, 2}), -5);
    expect.add(prod({2, 3, 3}), 2);
    expect.add(prod({3, 5}), -3);
    expect.add(mzv_symbol({1, 7}), 7);
    expect.add(prod({4, 4}), make_rational(3, 2));
    expect.add(mzv_symbol({5, 3}), make_rational(1, 2));
    expect.add(mzv_symbol({6, 2}), make_rational(-1, 2));
    const bool exact = got == expect;

    const RootOfUnity one;
    const Real z2 = zeta_value(2), z3 = zeta_value(3), z5 = zeta_value(5);
    const Real z35 = eval_li_at_roots({{3, 5}, {one, one}}, target).re;
    const Real witness = Real(703) / 875 * z2 * z2 * z2 * z2 - Real(17) / 2 * z3 * z5 - Real(7) / 10 * z35 + 2 * z2 * z3 * z3;
    const Cplx value = eval_czv(got, target).value;
    const Cplx triple = eval_li_at_roots({{1, 5, 2}, {one, one, one}}, target);
    const double r = std::max(dist(value, Cplx(witness)), dist(triple, Cplx(witness)));
    return {exact && r < kZeta152Tol, std::string(exact ? "rational coefficients match" : "rational coefficients differ") +
                                          fmt(", numeric residual %.3g", r)};
}

// 8 ---------------------------------------------------------------------------

Outcome bernoulli() {
    bool half = true;
    for (int s = 1; s <= 20; ++s) {
        BigRational pow2 = 1;
        for (int i = 0; i < 2 * s - 1; ++i) pow2 /= 2;
        half = half && bernoulli_polynomial(2 * s)(make_rational(1, 2)) == (pow2 - 1) * bernoulli_number(2 * s);
    }
    int pairs = 0;
    bool bivariate = true;
    for (int n1 = 0; n1 <= 8; ++n1)
        for (int n2 = 0; n1 + n2 <= 8; ++n2, ++pairs) bivariate = bivariate && bernoulli_identity_check(n1, n2);
    return {half && bivariate, std::string(half ? "half values hold for s<=20" : "half value fails") + ", bivariate identity " +
                                   (bivariate ? "holds" : "fails") + " on " + std::to_string(pairs) + " pairs"};
}

// 9 ---------------------------------------------------------------------------

Outcome fourth_roots() {
    PrecisionGuard guard(50);
    const Real target("1e-40");
    const RootOfUnity i4(1, 4), minus_i4(3, 4);
    double worst = 0;
    for (int n : {3, 5}) {
        const PliResult r = engine().pli({n, 1});
        const Cplx lhs = eval_czv(specialize(r, {i4, i4}), target).value + eval_czv(specialize(r, {i4, minus_i4}), target).value;
        // the same sum from the nested series directly: PLi = Li(z) - Li(1/z) for odd n
        auto pli_direct = [&](RootOfUnity a, RootOfUnity b) {
            return eval_li_at_roots({{n, 1}, {a, b}}, target) - eval_li_at_roots({{n, 1}, {a.inverse(), b.inverse()}}, target);
        };
        const Cplx lhs_direct = pli_direct(i4, i4) + pli_direct(i4, minus_i4);

        Cplx rhs(0, Real(-2 * n) * li_root_depth1(n + 1, 1, 4).im);
        for (int s = 1; s <= (n - 1) / 2; ++s) {
            // (i pi)^{2s} = (-1)^s pi^{2s}
            const BigRational c = BigRational((s % 2 ? -1 : 1) * ((1L << (2 * s)) - 1)) / BigRational(factorial(2 * s)) *
                                  bernoulli_number(2 * s);
            Real pis = 1;
            for (int k = 0; k < 2 * s; ++k) pis *= pi();
            rhs -= Cplx(0, 2 * to_real(c) * pis * li_root_depth1(n + 1 - 2 * s, 1, 4).im);
        }
        worst = std::max({worst, dist(lhs, rhs), dist(lhs_direct, rhs)});
    }
    return {worst < kFourthRootTol, fmt("max residual %.3g for n = 3, 5", worst)};
}

// 10 --------------------------------------------------------------------------

using StrSum = std::map<std::string, long>;

StrSum str_shuffle(const std::string& u, const std::string& v) {
    if (u.empty()) return {{v, 1}};
    if (v.empty()) return {{u, 1}};
    StrSum out;
    for (auto& [w, c] : str_shuffle(u.substr(1), v)) out[u[0] + w] += c;
    for (auto& [w, c] : str_shuffle(u, v.substr(1))) out[v[0] + w] += c;
    return out;
}

Letter letter(char c) {
    if (c == '0') return Letter::omega0();
    return Letter::omega(ArgExpr::constant(c == 'a' ? RootOfUnity() : RootOfUnity(1, 2)));
}

Word spell(const std::string& s) {
    Word w;
    for (char c : s) w.push_back(letter(c));
    return w;
}

// Right-hand side of the regularization identity built from string shuffles alone.
StrSum reg_rhs(const std::string& u, char tau, const std::string& s) {
    StrSum out;
    const size_t r = s.size();
    for (size_t k = 0; k <= r; ++k) {
        std::string rev = s.substr(0, k);
        std::reverse(rev.begin(), rev.end());
        for (auto& [a, ca] : str_shuffle(u, rev))
            for (auto& [b, cb] : str_shuffle(a + tau, s.substr(k))) out[b] += (k % 2 ? -1 : 1) * ca * cb;
    }
    std::erase_if(out, [](auto& kv) { return kv.second == 0; });
    return out;
}

Outcome shuffle_machinery() {
    std::vector<std::string> words{""};
    for (size_t i = 0; i < words.size(); ++i)
        if (words[i].size() < 3)
            for (char c : std::string("0ab")) words.push_back(words[i] + c);
    int checked = 0, bad = 0;
    for (auto& u : words)
        for (char tau : std::string("0ab"))
            for (auto& s : words) {
                const WordSum lib = shuffle_reg_rewrite(spell(u), letter(tau), spell(s));
                const StrSum oracle = reg_rhs(u, tau, s);
                WordSum oracle_sum;
                for (auto& [w, c] : oracle) oracle_sum.add(spell(w), c);
                const bool ok = oracle == StrSum{{u + tau + s, 1}} && lib == oracle_sum;
                ++checked;
                bad += !ok;
            }
    const RootOfUnity one, minus_one(1, 2);
    const CzvCombination x0 = regularized_limit_factor({2, 1}, {minus_one, one});
    const CzvCombination expect = CzvCombination::of(li_symbol({1, 2}, {minus_one, minus_one}), -1) -
                                  CzvCombination::of(li_symbol({1, 2}, {minus_one, one}));
    const bool example = x0 == expect;
    return {bad == 0 && example && checked == 40 * 3 * 40,
            std::to_string(checked - bad) + "/" + std::to_string(checked) + " identities, x0 = " + render(x0, Format::Text)};
}

// 11 --------------------------------------------------------------------------

std::string table_via_capi(const char* cache_dir, parity_format format, parity_status& status) {
    parity_engine* e = nullptr;
    status = parity_engine_create(cache_dir, &e);
    if (status != PARITY_OK) return {};
    char* out = nullptr;
    status = parity_table(e, 6, format, &out);
    std::string s = out ? out : "";
    parity_string_free(out);
    parity_engine_destroy(e);
    return s;
}

Outcome table() {
    std::string tmpl = (fs::temp_directory_path() / "parity-accept-XXXXXX").string();
    const fs::path dir = ::mkdtemp(tmpl.data());
    parity_status s1, s2, s3;
    const std::string cold = table_via_capi(dir.c_str(), PARITY_FORMAT_JSON, s1);
    const std::string warm = table_via_capi(dir.c_str(), PARITY_FORMAT_JSON, s2);
    const std::string uncached = table_via_capi(nullptr, PARITY_FORMAT_JSON, s3);
    size_t entries = 0;
    for (auto& p : fs::directory_iterator(dir)) entries += p.path().filename().string().rfind("pli_", 0) == 0;
    fs::remove_all(dir);
    if (s1 != PARITY_OK || s2 != PARITY_OK || s3 != PARITY_OK) return {false, parity_last_error()};
    const Json j = Json::parse(cold);
    const size_t count = j["equations"].size();
    const bool ok = count == 63 && j["count"] == 63 && cold == warm && cold == uncached;
    return {ok, std::to_string(count) + " equations, " + std::to_string(entries) + " cache entries, warm rerun " +
                    (cold == warm ? "byte-identical" : "differs") + ", uncached " + (cold == uncached ? "identical" : "differs")};
}

}  // namespace

int main() {
    run(1, "depth-1 inversion", depth1_inversion);
    run(2, "PLi_{1,2} in the log basis", example_12);
    run(3, "full sweep |n| <= 6", sweep);
    run(4, "structural invariants", invariants);
    run(5, "closed forms vs engine", closed_forms);
    run(6, "MZV corollaries", corollaries);
    run(7, "zeta(1,5,2)", zeta_152);
    run(8, "Bernoulli identities", bernoulli);
    run(9, "fourth-root identity", fourth_roots);
    run(10, "shuffle regularization", shuffle_machinery);
    run(11, "table generation", table);
    std::printf("%d of 11 criteria failed\n", failures);
    return failures ? 1 : 0;
}
