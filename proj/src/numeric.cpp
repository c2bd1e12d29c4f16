#include "numeric.hpp"

#include "errors.hpp"

#include <algorithm>
#include <cmath>

namespace parity {

PrecisionGuard::PrecisionGuard(unsigned digits) : saved_(Real::default_precision()) {
    Real::default_precision(digits);
}

PrecisionGuard::~PrecisionGuard() { Real::default_precision(saved_); }

Cplx operator/(const Cplx& a, const Cplx& b) {
    Real den = b.re * b.re + b.im * b.im;
    if (den == 0) fail(ErrorKind::Domain, "complex division by zero");
    return {(a.re * b.re + a.im * b.im) / den, (a.im * b.re - a.re * b.im) / den};
}

Real abs(const Cplx& z) { return boost::multiprecision::hypot(z.re, z.im); }
Cplx conj(const Cplx& z) { return {z.re, -z.im}; }

Cplx log(const Cplx& z) {
    if (z.re == 0 && z.im == 0) fail(ErrorKind::Domain, "log(0)");
    return {boost::multiprecision::log(abs(z)), boost::multiprecision::atan2(z.im, z.re)};
}

Cplx exp(const Cplx& z) {
    Real m = boost::multiprecision::exp(z.re);
    return {m * boost::multiprecision::cos(z.im), m * boost::multiprecision::sin(z.im)};
}

Cplx pow(const Cplx& z, int k) {
    if (k < 0) return Cplx(1) / pow(z, -k);
    Cplx r(1), b = z;
    while (k) {
        if (k & 1) r = r * b;
        b = b * b;
        k >>= 1;
    }
    return r;
}

Real pi() {
    Real r;
    mpfr_const_pi(r.backend().data(), MPFR_RNDN);
    return r;
}

Cplx two_pi_i() { return {Real(0), 2 * pi()}; }

Real to_real(const BigRational& q) {
    Real n(numerator(q).str()), d(denominator(q).str());
    return n / d;
}

Cplx root_value(long k, long n) {
    k %= n;
    if (k < 0) k += n;
    if (k == 0) return {Real(1), Real(0)};
    if (2 * k == n) return {Real(-1), Real(0)};
    if (4 * k == n) return {Real(0), Real(1)};
    if (4 * k == 3 * n) return {Real(0), Real(-1)};
    Real t = 2 * pi() * k / n;
    return {boost::multiprecision::cos(t), boost::multiprecision::sin(t)};
}

Cplx ber_value(int k, const Cplx& z) {
    if (k < 0) fail(ErrorKind::InvalidArgument, "negative ber order");
    const Cplx tpi = two_pi_i();
    Cplx x = Cplx(Real(1) / 2) + log(-z) / tpi;
    const RatPolynomial poly = bernoulli_polynomial(k);
    const auto& c = poly.coeffs();
    Cplx acc(0);
    for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * x + Cplx(to_real(*it));
    return (Real(1) / to_real(BigRational(factorial(k)))) * (pow(tpi, k) * acc);
}

namespace {

// Terms with largest summation index K number C(K-1, d-1) and are bounded by rho^K.
long series_cutoff(int d, double rho, double target) {
    if (rho >= 1) fail(ErrorKind::Domain, "series argument outside the unit disc");
    const double log_target = std::log(target);
    auto log_term = [&](long k) {
        return std::lgamma(double(k)) - std::lgamma(double(d)) - std::lgamma(double(k - d + 1)) + k * std::log(rho);
    };
    for (long k = std::max(d, 1); k < 50'000'000; ++k) {
        const long next = k + 1;
        const double ratio = rho * double(next) / double(next - d + 1);
        if (ratio >= 1) continue;
        if (log_term(next) - std::log1p(-ratio) < log_target) return k;
    }
    fail(ErrorKind::Precision, "series would need too many terms");
}

}  // namespace

HPComplex eval_li_series(const IndexVector& n, const std::vector<Cplx>& z, const Real& target) {
    validate_index(n);
    const int d = depth(n);
    if (static_cast<int>(z.size()) != d) fail(ErrorKind::InvalidArgument, "argument count differs from depth");
    double rho = 0;
    Cplx tail(1);
    for (int i = d; i-- > 0;) {
        tail = tail * z[i];
        rho = std::max(rho, abs(tail).convert_to<double>());
    }
    if (rho == 0) return {Cplx(0), Real(0)};
    const double tgt = std::max(target.convert_to<double>(), 1e-300);
    const long cutoff = series_cutoff(d, rho, tgt);

    std::vector<Cplx> power(d, Cplx(1)), partial(d + 1, Cplx(0));
    partial[0] = Cplx(1);
    for (long m = 1; m <= cutoff; ++m) {
        const Real rm(m);
        for (int j = d; j >= 1; --j) {
            power[j - 1] = power[j - 1] * z[j - 1];
            if (m < j) continue;
            Real den = 1;
            for (int e = 0; e < n[j - 1]; ++e) den *= rm;
            partial[j] += (Real(1) / den) * (power[j - 1] * partial[j - 1]);
        }
    }
    return {partial[d], Real(tgt)};
}

namespace {

struct StepRun {
    std::vector<Cplx> suffix;  // suffix[l] = integral of the last l letters from 0 to the endpoint
    Real error = 0;
};

// Taylor continuation of all suffix integrals along [0, p].
StepRun run_suffix_integrals(const std::vector<NumLetter>& word, const Real& p, const Real& target) {
    const size_t r = word.size();
    std::vector<Cplx> s(r + 1, Cplx(0));
    s[0] = Cplx(1);
    Real c = 0, err = 0;
    const Real half = Real(1) / 2;
    const double log_target = std::log(std::max(target.convert_to<double>(), 1e-300)) - std::log(1e6);
    std::vector<std::vector<Cplx>> a(r + 1);
    int guard = 0;
    while (c < p) {
        if (++guard > 100000) fail(ErrorKind::Precision, "hyperlogarithm continuation did not finish");
        Real radius = -1;
        for (auto& l : word) {
            Real dist;
            if (l.zero) {
                if (c == 0) continue;
                dist = c;
            } else {
                dist = abs(Cplx(c) - l.sigma);
            }
            if (radius < 0 || dist < radius) radius = dist;
        }
        if (radius == 0) fail(ErrorKind::Domain, "integration path meets a singular letter");
        const Real remaining = p - c;
        const Real half_radius = radius * half;
        Real h = (radius < 0 || remaining < half_radius) ? remaining : half_radius;
        const double q = radius < 0 ? 0.5 : (h / radius).convert_to<double>();
        int terms = q <= 0 ? 2 : static_cast<int>(std::ceil(log_target / std::log(q))) + 4;
        terms = std::clamp(terms, 4, 4000);

        a[0].assign(terms + 1, Cplx(0));
        a[0][0] = Cplx(1);
        for (size_t l = 1; l <= r; ++l) {
            const NumLetter& letter = word[r - l];
            auto& cur = a[l];
            const auto& prev = a[l - 1];
            cur.assign(terms + 1, Cplx(0));
            cur[0] = s[l];
            if (letter.zero && c == 0) {
                for (int j = 0; j < terms; ++j) cur[j + 1] = prev[j + 1] / Real(j + 1);
            } else {
                const Cplx g0 = Cplx(1) / (Cplx(c) - (letter.zero ? Cplx(0) : letter.sigma));
                const Cplx qq = -g0;
                Cplx pj(0);
                for (int j = 0; j < terms; ++j) {
                    pj = prev[j] * g0 + qq * pj;
                    cur[j + 1] = pj / Real(j + 1);
                }
            }
        }
        for (size_t l = 1; l <= r; ++l) {
            Cplx acc(0);
            for (int j = terms; j >= 0; --j) acc = acc * Cplx(h) + a[l][j];
            s[l] = acc;
            Real tail = abs(a[l][terms]);
            for (int j = 0; j < terms; ++j) tail *= h;
            err += 4 * tail;
        }
        c += h;
        if (p - c < target * Real(1e-10)) c = p;
    }
    return {std::move(s), err};
}

}  // namespace

HPComplex eval_word(const std::vector<NumLetter>& input, const Real& target) {
    if (input.empty()) return {Cplx(1), Real(0)};
    const Real snap = target * Real(1e-6);
    std::vector<NumLetter> word = input;
    for (auto& l : word) {
        if (l.zero) continue;
        if (abs(l.sigma) < snap) {
            l = NumLetter{true, Cplx(0)};
            continue;
        }
        if (abs(l.sigma - Cplx(1)) < snap) l.sigma = Cplx(1);
        if (boost::multiprecision::abs(l.sigma.im) < snap && l.sigma.re > 0 && l.sigma.re < 1)
            fail(ErrorKind::Domain, "letter on the integration path");
    }
    if (word.back().zero) fail(ErrorKind::Divergent, "innermost letter w(0) diverges");
    if (!word.front().zero && word.front().sigma.re == 1 && word.front().sigma.im == 0)
        fail(ErrorKind::Divergent, "outermost letter w(1) diverges");

    const size_t r = word.size();
    std::vector<NumLetter> mirrored(r);
    for (size_t i = 0; i < r; ++i) {
        const NumLetter& l = word[r - 1 - i];
        Cplx m = Cplx(1) - (l.zero ? Cplx(0) : l.sigma);
        bool z = l.zero ? false : (m.re == 0 && m.im == 0);
        mirrored[i] = NumLetter{z, z ? Cplx(0) : m};
    }
    const Real half = Real(1) / 2;
    StepRun lower = run_suffix_integrals(word, half, target);
    StepRun upper = run_suffix_integrals(mirrored, half, target);
    Cplx total(0);
    for (size_t m = 0; m <= r; ++m) {
        Cplx term = upper.suffix[m] * lower.suffix[r - m];
        if (m % 2)
            total -= term;
        else
            total += term;
    }
    return {total, lower.error + upper.error};
}

HPComplex eval_li_hyperlog(const IndexVector& n, const std::vector<Cplx>& y, const Real& target) {
    validate_index(n);
    const size_t d = n.size();
    if (y.size() != d) fail(ErrorKind::InvalidArgument, "argument count differs from depth");
    std::vector<Cplx> sigma(d);
    Cplx tail(1);
    for (size_t i = d; i-- > 0;) {
        tail = tail * y[i];
        if (tail.re == 0 && tail.im == 0) return {Cplx(0), Real(0)};
        sigma[i] = Cplx(1) / tail;
    }
    std::vector<NumLetter> word;
    for (size_t i = d; i-- > 0;) {
        for (int z = 1; z < n[i]; ++z) word.push_back(NumLetter{true, Cplx(0)});
        word.push_back(NumLetter{false, sigma[i]});
    }
    HPComplex r = eval_word(word, target);
    if (d % 2) r.value = -r.value;
    return r;
}

Real hurwitz_zeta(int s, const Real& q) {
    if (s < 2) fail(ErrorKind::Divergent, "Hurwitz zeta needs s >= 2");
    if (q <= 0) fail(ErrorKind::Domain, "Hurwitz zeta needs q > 0");
    const int digits = static_cast<int>(Real::default_precision());
    const int m = digits + 10;
    const int p = digits / 2 + 10;
    Real sum = 0;
    for (int k = 0; k < m; ++k) sum += boost::multiprecision::pow(q + k, -s);
    const Real x = q + m;
    sum += boost::multiprecision::pow(x, 1 - s) / (s - 1);
    sum += boost::multiprecision::pow(x, -s) / 2;
    Real rising = s;  // s (s+1) ... (s+2j-2)
    Real xp = boost::multiprecision::pow(x, -s - 1);
    const Real x2 = x * x;
    for (int j = 1; j <= p; ++j) {
        if (j > 1) rising *= Real(s + 2 * j - 3) * Real(s + 2 * j - 2);
        sum += to_real(bernoulli_number(2 * j) / BigRational(factorial(2 * j))) * rising * xp;
        xp /= x2;
    }
    return sum;
}

Real zeta_value(int s) { return hurwitz_zeta(s, Real(1)); }

Cplx li_root_depth1(int s, long k, long n) {
    if (n <= 0) fail(ErrorKind::InvalidArgument, "root order must be positive");
    Cplx acc(0);
    for (long r = 1; r <= n; ++r) acc += hurwitz_zeta(s, Real(r) / n) * root_value(k * r, n);
    return boost::multiprecision::pow(Real(n), -s) * acc;
}

}  // namespace parity
