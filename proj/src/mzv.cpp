#include "errors.hpp"
#include "roots.hpp"

namespace parity {

namespace {

BigRational sgn(int e) { return e % 2 ? -1 : 1; }
BigRational binom(int n, int k) { return n < 0 ? BigRational(0) : BigRational(binomial(n, k)); }

CzvSymbol product(std::initializer_list<CzvSymbol> parts) {
    CzvSymbol s;
    for (auto& p : parts) s = s * p;
    return s;
}

}  // namespace

CzvCombination reduce_mzv_depth2(int n1, int n2) {
    if (n1 < 1 || n2 < 2) fail(ErrorKind::InvalidArgument, "need n1 >= 1 and n2 >= 2");
    const int w = n1 + n2;
    if (w % 2 == 0) fail(ErrorKind::InvalidArgument, "even weight: use the even-weight relation instead");
    CzvCombination out;
    for (int k = 3; k <= w; k += 2) {
        const int twos = w - k;
        BigRational c = binom(k - 1, n1 - 1) + binom(k - 1, n2 - 1) - (k == n1 ? 1 : 0);
        out.add(product({zeta_symbol(twos), zeta_symbol(k)}), sgn(n1) * c);
    }
    out.add(product({zeta_symbol(0), zeta_symbol(w)}), 1);
    return out;
}

CzvCombination reduce_mzv_depth3(int n1, int n2, int n3) {
    if (n1 < 1 || n2 < 1 || n3 < 2) fail(ErrorKind::InvalidArgument, "need n1, n2 >= 1 and n3 >= 2");
    const int w = n1 + n2 + n3;
    if (w % 2) fail(ErrorKind::InvalidArgument, "depth-three reduction needs even weight");
    CzvCombination out;
    const CzvSymbol z0 = zeta_symbol(0);
    out.add(z0 * mzv_symbol({n1 + n2, n3}), 1);
    out.add(z0 * mzv_symbol({n1, n2 + n3}), 1);
    out.add(z0 * zeta_symbol(w), 1);
    for (int twos = 0; twos <= w; twos += 2)
        for (int mu = 1; mu + twos < w; ++mu) {
            const int nu = w - twos - mu;
            const CzvSymbol z2s = zeta_symbol(twos);
            if (mu >= n2 && nu >= n3)
                out.add(z2s * mzv_symbol({mu, nu}), sgn(n1) * binom(mu - 1, n2 - 1) * binom(nu - 1, n3 - 1));
            if (mu >= n3 && nu > n1)
                out.add(product({z2s, zeta_symbol(mu), zeta_symbol(nu)}),
                        sgn(n2 + mu) * binom(mu - 1, n3 - 1) * binom(nu - 1, n1 - 1));
            if (mu >= n2 && nu > n1)
                out.add(z2s * mzv_symbol({mu, nu}), sgn(n3) * binom(mu - 1, n2 - 1) * binom(nu - 1, n1 - 1));
        }
    for (int twos = 0; n1 + twos < w; twos += 2) {
        const int nu = w - n1 - twos;
        if (nu <= n2) continue;
        const CzvSymbol z2s = zeta_symbol(twos);
        const BigRational c = -sgn(n3) * binom(nu - 1, n2 - 1);
        out.add(z2s * mzv_symbol({n1, nu}), c);
        out.add(z2s * zeta_symbol(n1 + nu), c);
    }
    return out;
}

CzvCombination alt_depth2(int n1, int n2, int s1, int s2) {
    if (n1 < 1 || n2 < 1) fail(ErrorKind::InvalidArgument, "index entries must be positive");
    if ((s1 != 1 && s1 != -1) || (s2 != 1 && s2 != -1)) fail(ErrorKind::InvalidArgument, "signs must be +1 or -1");
    const int w = n1 + n2;
    if (w % 2 == 0) fail(ErrorKind::InvalidArgument, "alternating reduction needs odd weight");
    if (n2 == 1 && s2 == 1) fail(ErrorKind::Divergent, "divergent head: last index 1 at root 1");
    const RootOfUnity r1(s1 == 1 ? 0 : 1, 2), r2(s2 == 1 ? 0 : 1, 2), r12 = r1 * r2;
    // Li_k(1) with k = 1 is regularized to zero; Li_0(+-1) = -1/2.
    auto li1 = [](int k, const RootOfUnity& r) {
        if (k == 0) return CzvCombination::constant(BigRational(-1, 2));
        if (k == 1 && r.is_one()) return CzvCombination{};
        return CzvCombination::of(li_symbol({k}, {r}));
    };
    CzvCombination out;
    for (int k = 1; k <= w; k += 2) {
        const int twos = w - k;
        CzvCombination bracket = li1(k, r1);
        bracket *= binom(k - 1, n1 - 1);
        CzvCombination second = li1(k, r2);
        second *= binom(k - 1, n2 - 1);
        bracket += second;
        CzvCombination term = li1(twos, r12) * bracket;
        term *= sgn(n1);
        out += term;
    }
    CzvCombination last = li1(w, r12);
    last *= BigRational(-1, 2);
    out += last;
    if (n2 % 2 == 0) out += li1(n1, r1) * li1(n2, r2);
    return out;
}

namespace {

// Polynomials in x, y with rational coefficients.
using Poly2 = std::map<std::pair<int, int>, BigRational>;

void add_to(Poly2& p, const Poly2& q, const BigRational& c) {
    for (auto& [e, x] : q) {
        p[e] += c * x;
        if (p[e] == 0) p.erase(e);
    }
}

Poly2 mul(const Poly2& a, const Poly2& b) {
    Poly2 r;
    for (auto& [ea, xa] : a)
        for (auto& [eb, xb] : b) {
            auto e = std::make_pair(ea.first + eb.first, ea.second + eb.second);
            r[e] += xa * xb;
            if (r[e] == 0) r.erase(e);
        }
    return r;
}

Poly2 bernoulli_in(int n, bool in_x) {
    Poly2 r;
    auto b = bernoulli_polynomial(n);
    for (int k = 0; k <= b.degree(); ++k)
        if (b.coeff(k) != 0) r[in_x ? std::make_pair(k, 0) : std::make_pair(0, k)] = b.coeff(k);
    return r;
}

// B_n(x + y) = sum_j C(n, j) B_j(x) y^{n-j}
Poly2 bernoulli_sum(int n) {
    Poly2 r;
    for (int j = 0; j <= n; ++j) {
        Poly2 yp{{{0, n - j}, BigRational(1)}};
        add_to(r, mul(bernoulli_in(j, true), yp), BigRational(binomial(n, j)));
    }
    return r;
}

}  // namespace

bool bernoulli_identity_check(int n1, int n2) {
    if (n1 < 0 || n2 < 0) fail(ErrorKind::InvalidArgument, "indices must be non-negative");
    const int w = n1 + n2;
    Poly2 lhs;
    for (int mu = 0; mu <= w; ++mu) {
        Poly2 bracket;
        if (mu >= n1) add_to(bracket, bernoulli_in(mu, true), signed_binomial(-n1, mu - n1));
        if (mu >= n2) add_to(bracket, bernoulli_in(mu, false), signed_binomial(-n2, mu - n2));
        if (mu == 0) add_to(bracket, Poly2{{{0, 0}, BigRational(1)}}, -1);
        add_to(lhs, mul(bernoulli_sum(w - mu), bracket), BigRational(binomial(w, mu)));
    }
    Poly2 rhs;
    add_to(rhs, mul(bernoulli_in(n1, true), bernoulli_in(n2, false)), BigRational(binomial(w, n1)));
    return lhs == rhs;
}

}  // namespace parity
