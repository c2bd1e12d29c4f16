#include "roots.hpp"

#include "errors.hpp"
#include "word.hpp"

#include <algorithm>

namespace parity {

ExactPiValue ber_at_root(int k, const RootOfUnity& zeta, Branch branch) {
    if (k < 0) fail(ErrorKind::InvalidArgument, "negative ber order");
    BigRational x(zeta.k, zeta.n);
    if (zeta.is_one() && branch == Branch::Lower) x = 1;
    return {bernoulli_polynomial(k)(x) / BigRational(factorial(k)), k};
}

int CzvSymbol::weight() const {
    int w = two_pi_i;
    for (int z : even_zetas) w += z;
    for (auto& l : lis) w += parity::weight(l.indices);
    return w;
}

int CzvSymbol::depth() const {
    int d = 0;
    for (auto& l : lis) d += static_cast<int>(l.indices.size());
    return d;
}

CzvSymbol operator*(const CzvSymbol& a, const CzvSymbol& b) {
    CzvSymbol r = a;
    r.two_pi_i += b.two_pi_i;
    r.even_zetas.insert(r.even_zetas.end(), b.even_zetas.begin(), b.even_zetas.end());
    std::sort(r.even_zetas.begin(), r.even_zetas.end());
    r.lis.insert(r.lis.end(), b.lis.begin(), b.lis.end());
    std::sort(r.lis.begin(), r.lis.end());
    return r;
}

CzvSymbol li_symbol(IndexVector n, std::vector<RootOfUnity> roots) {
    validate_index(n);
    if (n.size() != roots.size()) fail(ErrorKind::InvalidArgument, "index and root count differ");
    CzvSymbol s;
    s.lis.push_back(LiAtRoot{std::move(n), std::move(roots)});
    return s;
}

CzvSymbol zeta_symbol(int m) {
    if (m < 0 || m == 1) fail(ErrorKind::InvalidArgument, "zeta(" + std::to_string(m) + ") is not a valid symbol");
    CzvSymbol s;
    if (m % 2 == 0)
        s.even_zetas.push_back(m);
    else
        s.lis.push_back(LiAtRoot{{m}, {RootOfUnity::one()}});
    return s;
}

CzvSymbol mzv_symbol(IndexVector n) {
    if (n.size() == 1) return zeta_symbol(n[0]);
    std::vector<RootOfUnity> ones(n.size());
    return li_symbol(std::move(n), std::move(ones));
}

void CzvCombination::add(const CzvSymbol& s, const BigRational& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(s, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

CzvCombination& CzvCombination::operator+=(const CzvCombination& o) {
    for (auto& [s, c] : o.terms_) add(s, c);
    return *this;
}

CzvCombination& CzvCombination::operator*=(const BigRational& c) {
    if (c == 0) terms_.clear();
    for (auto& [s, x] : terms_) x *= c;
    return *this;
}

CzvCombination operator-(CzvCombination a, const CzvCombination& b) {
    for (auto& [s, c] : b.terms_) a.add(s, -c);
    return a;
}

CzvCombination operator*(const CzvCombination& a, const CzvCombination& b) {
    CzvCombination r;
    for (auto& [sa, ca] : a.terms_)
        for (auto& [sb, cb] : b.terms_) r.add(sa * sb, ca * cb);
    return r;
}

int CzvCombination::max_depth() const {
    int d = 0;
    for (auto& [s, c] : terms_) d = std::max(d, s.depth());
    return d;
}

int CzvCombination::homogeneous_weight() const {
    int w = -1;
    for (auto& [s, c] : terms_) {
        if (w == -1)
            w = s.weight();
        else if (w != s.weight())
            return -2;
    }
    return w;
}

CzvCombination CzvCombination::constant(const BigRational& c) { return of(CzvSymbol{}, c); }

CzvCombination CzvCombination::of(const CzvSymbol& s, const BigRational& c) {
    CzvCombination r;
    r.add(s, c);
    return r;
}

CzvCombination regularized_limit_factor(const IndexVector& m, const std::vector<RootOfUnity>& roots) {
    validate_index(m);
    if (m.size() != roots.size()) fail(ErrorKind::InvalidArgument, "index and root count differ");
    if (!roots.back().is_one() || m.back() != 1) return CzvCombination::of(li_symbol(m, roots));

    std::vector<ArgExpr> args;
    for (auto& r : roots) args.push_back(ArgExpr::constant(r));
    const Word v = li_to_word(m, args).second;
    const int s = static_cast<int>(m.size());
    const Letter one = Letter::omega(ArgExpr::constant(RootOfUnity::one()));
    size_t r = 0;
    while (r < v.size() && v[r] == one) ++r;
    if (r == v.size()) return {};  // pure power of log(1 - y_s)

    const Letter tau = v[r];
    const Word u(v.begin() + static_cast<long>(r) + 1, v.end());
    const WordSum body = concat({tau}, shuffle(u, Word(r, one)));
    CzvCombination out;
    const int outer = (s + static_cast<int>(r)) % 2 ? -1 : 1;
    for (auto& [w, c] : body.terms()) {
        LiWord lw = word_to_li(w);
        std::vector<RootOfUnity> ys;
        for (auto& a : lw.args) {
            if (!a.is_constant()) fail(ErrorKind::Internal, "non-constant letter in root regularization");
            ys.push_back(a.root);
        }
        if (lw.indices.back() == 1 && ys.back().is_one())
            fail(ErrorKind::Internal, "regularization produced a divergent symbol");
        out.add(li_symbol(lw.indices, ys), BigRational(outer * lw.sign) * c);
    }
    return out;
}

CzvCombination specialize_equation(const LinComb& eq, const std::vector<RootOfUnity>& roots, Branch branch) {
    const int n = eq.ambient();
    if (static_cast<int>(roots.size()) != n) fail(ErrorKind::InvalidArgument, "need one root per variable");
    CzvCombination out;
    auto product = [&](const ConsProd& a) {
        RootOfUnity p;
        for (int i = a.start; i <= a.end; ++i) p = p * roots[i - 1];
        return a.inverted ? p.inverse() : p;
    };
    for (auto& [g, c] : eq.terms()) {
        CzvCombination term = CzvCombination::constant(c);
        for (int i = 0; i < n; ++i) {
            if (g.ber[i] == 0) continue;
            ExactPiValue v = ber_at_root(g.ber[i], product(ConsProd{i + 1, n, false}), branch);
            CzvSymbol s;
            s.two_pi_i = v.two_pi_i_power;
            term = term * CzvCombination::of(s, v.coeff);
        }
        for (auto& f : g.lis) {
            if (f.args.empty()) continue;
            for (auto& a : f.args)
                if (a.inverted) fail(ErrorKind::InvalidArgument, "specialization needs the canonical form");
            std::vector<RootOfUnity> ys;
            for (auto& a : f.args) ys.push_back(product(a));
            term = term * regularized_limit_factor(f.indices, ys);
        }
        out += term;
    }
    return out;
}

CzvCombination specialize(const PliResult& result, const std::vector<RootOfUnity>& roots, Branch branch) {
    if (roots.size() != result.index.size()) fail(ErrorKind::InvalidArgument, "need one root per index entry");
    if (result.index.back() == 1 && roots.back().is_one())
        fail(ErrorKind::Divergent, "divergent head: last index 1 at root 1");
    if (result.form != Form::Canonical) fail(ErrorKind::InvalidArgument, "specialization needs the canonical form");
    return specialize_equation(result.equation, roots, branch);
}

CzvCombination substitute_zeta_zero(const CzvCombination& c) {
    CzvCombination out;
    for (auto& [s, x] : c.terms()) {
        CzvSymbol t = s;
        BigRational f = x;
        auto it = std::remove(t.even_zetas.begin(), t.even_zetas.end(), 0);
        for (auto j = it; j != t.even_zetas.end(); ++j) f *= BigRational(-1, 2);
        t.even_zetas.erase(it, t.even_zetas.end());
        out.add(t, f);
    }
    return out;
}

namespace {

// zeta(2k) = -B_2k (2 pi i)^2k / (2 (2k)!)
BigRational even_zeta_factor(int twok) { return -bernoulli_number(twok) / BigRational(2 * factorial(twok)); }

}  // namespace

CzvCombination normalize_even_zetas(const CzvCombination& c) {
    CzvCombination out;
    for (auto& [s, x] : c.terms()) {
        CzvSymbol t;
        t.two_pi_i = s.two_pi_i;
        BigRational f = x;
        for (int z : s.even_zetas) {
            f *= even_zeta_factor(z);
            t.two_pi_i += z;
        }
        for (auto& l : s.lis) {
            const bool real_root = l.roots.size() == 1 && (l.roots[0].is_one() || l.roots[0].n == 2);
            if (real_root && l.indices[0] % 2 == 0) {
                const int k = l.indices[0];
                f *= even_zeta_factor(k);
                if (!l.roots[0].is_one()) {
                    BigInt p = 1;
                    p <<= (k - 1);
                    f *= BigRational(1) / BigRational(p) - 1;
                }
                t.two_pi_i += k;
            } else {
                t.lis.push_back(l);
            }
        }
        out.add(t, f);
    }
    return out;
}

CzvCombination fold_alternating_depth1(const CzvCombination& c) {
    CzvCombination out;
    for (auto& [s, x] : c.terms()) {
        CzvSymbol t;
        t.two_pi_i = s.two_pi_i;
        t.even_zetas = s.even_zetas;
        BigRational f = x;
        for (auto& l : s.lis) {
            if (l.indices.size() == 1 && l.indices[0] >= 2 && l.roots[0] == RootOfUnity(1, 2)) {
                BigInt p = 1;
                p <<= (l.indices[0] - 1);
                f *= BigRational(1) / BigRational(p) - 1;
                t = t * zeta_symbol(l.indices[0]);
            } else {
                t.lis.push_back(l);
            }
        }
        std::sort(t.lis.begin(), t.lis.end());
        out.add(t, f);
    }
    return out;
}

CzvCombination reduce_odd_double_zetas(const CzvCombination& c) {
    CzvCombination out;
    for (auto& [s, x] : c.terms()) {
        CzvSymbol rest = s;
        rest.lis.clear();
        CzvCombination term = CzvCombination::of(rest, x);
        for (auto& l : s.lis) {
            const bool odd_mzv = l.indices.size() == 2 && l.roots[0].is_one() && l.roots[1].is_one() &&
                                 weight(l.indices) % 2 == 1 && l.indices[1] >= 2;
            term = term * (odd_mzv ? substitute_zeta_zero(reduce_mzv_depth2(l.indices[0], l.indices[1]))
                                   : CzvCombination::of(li_symbol(l.indices, l.roots)));
        }
        out += term;
    }
    return out;
}

CzvCombination pi_powers_to_zeta2(const CzvCombination& c) {
    CzvCombination out;
    for (auto& [s, x] : c.terms()) {
        CzvSymbol t = s;
        BigRational f = x;
        const int k = s.two_pi_i / 2;
        t.two_pi_i = s.two_pi_i % 2;
        for (int i = 0; i < k; ++i) {
            f *= -24;
            t.even_zetas.push_back(2);
        }
        std::sort(t.even_zetas.begin(), t.even_zetas.end());
        out.add(t, f);
    }
    return out;
}

bool integrality_check(const CzvCombination& c) {
    return std::all_of(c.terms().begin(), c.terms().end(), [](auto& t) { return is_integer(t.second); });
}

bool integrality_check(const PliResult& r) { return r.equation.integral(); }

std::string root_str(const RootOfUnity& r) {
    if (r.is_one()) return "1";
    if (r.n == 2) return "-1";
    if (r.n == 4) return r.k == 1 ? "i" : "-i";
    return "e(" + r.str() + ")";
}

}  // namespace parity
