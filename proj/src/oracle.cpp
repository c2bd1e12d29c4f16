#include "oracle.hpp"

#include "errors.hpp"

#include <cmath>
#include <complex>
#include <map>
#include <numbers>
#include <random>

namespace parity {

namespace {

double unit_draw(std::mt19937_64& gen) { return double(gen() >> 11) * 0x1.0p-53; }

double distance_to_positive_ray(std::complex<double> w) { return w.real() >= 0 ? std::abs(w.imag()) : std::abs(w); }

std::uint64_t index_hash(const IndexVector& n) {
    std::uint64_t h = 1469598103934665603ull;
    for (int x : n) {
        h ^= static_cast<std::uint64_t>(x) + 0x9e;
        h *= 1099511628211ull;
    }
    return h;
}

}  // namespace

std::vector<Cplx> sample_domain_point(int d, std::uint64_t seed, double margin) {
    if (d < 1) fail(ErrorKind::InvalidArgument, "need at least one variable");
    std::mt19937_64 gen(seed);
    const double two_pi = 2 * std::numbers::pi;
    for (int attempt = 0; attempt < 100000; ++attempt) {
        std::vector<std::complex<double>> z(d);
        for (auto& x : z) {
            const double r = 0.3 + 0.6 * unit_draw(gen);
            const double phi = 0.2 + (two_pi - 0.4) * unit_draw(gen);
            x = std::polar(r, phi);
        }
        bool ok = true;
        for (int i = 0; i < d && ok; ++i) {
            std::complex<double> p = 1;
            for (int j = i; j < d && ok; ++j) {
                p *= z[j];
                ok = distance_to_positive_ray(p) >= margin;
            }
        }
        if (!ok) continue;
        std::vector<Cplx> out;
        for (auto& x : z) out.emplace_back(Real(x.real()), Real(x.imag()));
        return out;
    }
    fail(ErrorKind::Domain, "could not sample a point in the domain");
}

HPComplex eval_lincomb(const LinComb& c, const std::vector<Cplx>& z, const Real& target) {
    const int n = c.ambient();
    if (static_cast<int>(z.size()) != n) fail(ErrorKind::InvalidArgument, "point dimension differs from ambient");
    auto product = [&](const ConsProd& a) {
        Cplx p(1);
        for (int i = a.start; i <= a.end; ++i) p = p * z[i - 1];
        return a.inverted ? Cplx(1) / p : p;
    };
    std::map<std::pair<int, int>, Cplx> bers;
    std::map<LiFactor, HPComplex> lis;
    auto ber_of = [&](int start, int k) -> const Cplx& {
        auto key = std::make_pair(start, k);
        auto it = bers.find(key);
        if (it == bers.end()) it = bers.emplace(key, ber_value(k, product(ConsProd{start, n, false}))).first;
        return it->second;
    };
    auto li_of = [&](const LiFactor& f) -> const HPComplex& {
        auto it = lis.find(f);
        if (it != lis.end()) return it->second;
        bool inverted = f.args.front().inverted;
        for (auto& a : f.args)
            if (a.inverted != inverted) fail(ErrorKind::Unsupported, "Li factor mixing inverted and plain arguments");
        std::vector<Cplx> y;
        for (auto& a : f.args) y.push_back(product(a));
        HPComplex v = inverted ? eval_li_hyperlog(f.indices, y, target) : eval_li_series(f.indices, y, target);
        return lis.emplace(f, std::move(v)).first->second;
    };

    HPComplex total{Cplx(0), Real(0)};
    for (auto& [g, coeff] : c.terms()) {
        Cplx v(to_real(coeff));
        Real err = 0;
        for (int i = 0; i < n; ++i)
            if (g.ber[i]) v = v * ber_of(i + 1, g.ber[i]);
        std::vector<const HPComplex*> factors;
        for (auto& f : g.lis) factors.push_back(&li_of(f));
        for (size_t i = 0; i < factors.size(); ++i) {
            Real others = abs(v);
            for (size_t j = 0; j < factors.size(); ++j)
                if (j != i) others *= abs(factors[j]->value) + factors[j]->error;
            err += others * factors[i]->error;
        }
        for (auto* f : factors) v = v * f->value;
        total.value += v;
        total.error += err;
    }
    return total;
}

HPComplex eval_generator(const Generator& g, const std::vector<Cplx>& z, const Real& target) {
    return eval_lincomb(single(g), z, target);
}

HPComplex eval_pli_direct(const IndexVector& n, const std::vector<Cplx>& z, const Real& target) {
    HPComplex plain = eval_li_series(n, z, target);
    std::vector<Cplx> inv;
    for (auto& x : z) inv.push_back(Cplx(1) / x);
    HPComplex flipped = eval_li_hyperlog(n, inv, target);
    const bool even = (weight(n) - depth(n)) % 2 == 0;
    return {even ? plain.value - flipped.value : plain.value + flipped.value, plain.error + flipped.error};
}

Cplx eval_li_at_roots(const LiAtRoot& l, const Real& target) {
    if (!l.convergent()) fail(ErrorKind::Divergent, "divergent Li at roots of unity");
    if (l.indices.size() == 1) {
        const RootOfUnity& r = l.roots[0];
        if (l.indices[0] >= 2) return li_root_depth1(l.indices[0], r.k, r.n);
        return -log(Cplx(1) - root_value(r.k, r.n));
    }
    std::vector<Cplx> y;
    for (auto& r : l.roots) y.push_back(root_value(r.k, r.n));
    return eval_li_hyperlog(l.indices, y, target).value;
}

HPComplex eval_czv(const CzvCombination& c, const Real& target) {
    std::map<LiAtRoot, Cplx> cache;
    std::map<int, Real> zetas;
    Cplx total(0);
    const Cplx tpi = two_pi_i();
    for (auto& [s, coeff] : c.terms()) {
        Cplx v = to_real(coeff) * pow(tpi, s.two_pi_i);
        for (int z : s.even_zetas) {
            auto it = zetas.find(z);
            if (it == zetas.end()) it = zetas.emplace(z, z == 0 ? Real(-0.5) : zeta_value(z)).first;
            v = it->second * v;
        }
        for (auto& l : s.lis) {
            auto it = cache.find(l);
            if (it == cache.end()) it = cache.emplace(l, eval_li_at_roots(l, target)).first;
            v = v * it->second;
        }
        total += v;
    }
    return {total, target * Real(c.terms().size() + 1)};
}

VerifyReport verify_feq(const PliResult& result, const VerifyOptions& opts) {
    PrecisionGuard guard(opts.digits);
    const Real target = boost::multiprecision::pow(Real(10), -static_cast<int>(opts.digits) + 10);
    VerifyReport report;
    report.index = result.index;
    report.tolerance = opts.tolerance;
    const int d = depth(result.index);
    std::uint64_t seed = opts.seed ^ index_hash(result.index);
    double worst = 0;
    for (int i = 0; i < opts.samples; ++i) {
        for (int attempt = 0;; ++attempt) {
            seed += 0x9e3779b97f4a7c15ull;
            auto z = sample_domain_point(d, seed);
            try {
                HPComplex lhs = eval_pli_direct(result.index, z, target);
                HPComplex rhs = eval_lincomb(result.equation, z, target);
                worst = std::max(worst, abs(lhs.value - rhs.value).convert_to<double>());
                break;
            } catch (const Error& e) {
                if (e.kind() != ErrorKind::Domain || attempt >= 10) throw;
            }
        }
        ++report.samples;
    }
    report.max_error = worst;
    report.pass = std::isfinite(worst) && worst <= opts.tolerance;
    return report;
}

}  // namespace parity
