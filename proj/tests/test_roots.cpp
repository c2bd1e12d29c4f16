#include "errors.hpp"
#include "oracle.hpp"
#include "roots.hpp"

#include <doctest.h>

using namespace parity;

namespace {

Engine& shared_engine() {
    static Engine e;
    return e;
}

const RootOfUnity one = RootOfUnity::one(), minus_one(1, 2), i4(1, 4), minus_i4(3, 4);

CzvCombination li_of(IndexVector n, std::vector<RootOfUnity> r, const BigRational& c = 1) {
    return CzvCombination::of(li_symbol(std::move(n), std::move(r)), c);
}

CzvCombination zeta(int m, const BigRational& c = 1) { return CzvCombination::of(zeta_symbol(m), c); }

double dist(const Cplx& a, const Cplx& b) { return abs(a - b).convert_to<double>(); }

// Li_n at roots as a plain nested sum with n_d >= 2, for a cross-check independent of the hyperlog path.
Cplx li_at_roots_by_series(const IndexVector& n, const std::vector<RootOfUnity>& roots, long terms) {
    std::vector<Cplx> partial(n.size() + 1, Cplx(0));
    partial[0] = Cplx(1);
    for (long k = 1; k <= terms; ++k)
        for (size_t j = n.size(); j >= 1; --j) {
            if (k < static_cast<long>(j)) continue;
            Real den = 1;
            for (int e = 0; e < n[j - 1]; ++e) den *= Real(k);
            partial[j] += (Real(1) / den) * (root_value(roots[j - 1].k * k, roots[j - 1].n) * partial[j - 1]);
        }
    return partial.back();
}

}  // namespace

TEST_CASE("roots of unity") {
    CHECK(RootOfUnity(2, 4) == minus_one);
    CHECK(RootOfUnity(-1, 4) == minus_i4);
    CHECK(RootOfUnity(4, 4).is_one());
    CHECK((i4 * i4) == minus_one);
    CHECK(i4.inverse() == minus_i4);
    CHECK(RootOfUnity::parse("3/6") == minus_one);
    CHECK(RootOfUnity::parse("0/1").is_one());
    CHECK_THROWS_AS(RootOfUnity::parse("1/0"), Error);
    CHECK_THROWS_AS(RootOfUnity::parse("x"), Error);
    CHECK(root_str(i4) == "i");
    CHECK(root_str(RootOfUnity(1, 3)) == "e(1/3)");
}

TEST_CASE("ber at roots") {
    // ber_2(1) = (2 pi i)^2 B_2(0)/2 = -pi^2/3 on either side
    for (auto b : {Branch::Upper, Branch::Lower}) {
        const ExactPiValue v = ber_at_root(2, one, b);
        CHECK(v.coeff == make_rational(1, 12));
        CHECK(v.two_pi_i_power == 2);
    }
    CHECK(ber_at_root(1, one, Branch::Upper).coeff == make_rational(-1, 2));
    CHECK(ber_at_root(1, one, Branch::Lower).coeff == make_rational(1, 2));
    CHECK(ber_at_root(1, minus_one).coeff == 0);
    // ber_k(exp(2 pi i a)) = (2 pi i)^k B_k(a)/k!
    CHECK(ber_at_root(3, RootOfUnity(1, 3)).coeff == bernoulli_polynomial(3)(make_rational(1, 3)) / 6);
}

TEST_CASE("regularized limit example at (-1, 1)") {
    const CzvCombination x0 = regularized_limit_factor({2, 1}, {minus_one, one});
    CHECK(x0 == li_of({1, 2}, {minus_one, minus_one}, -1) - li_of({1, 2}, {minus_one, one}));
    // convergent inputs are returned unchanged
    CHECK(regularized_limit_factor({1, 2}, {i4, one}) == li_of({1, 2}, {i4, one}));
}

TEST_CASE("specialization of PLi_{1,2}") {
    const PliResult r = shared_engine().pli({1, 2});
    // 2 zeta(1,2) = 2 zeta(3)
    const CzvCombination c = normalize_even_zetas(substitute_zeta_zero(specialize(r, {one, one})));
    CHECK(c == zeta(3, 2));
    // 2 Li_{1,2}(1,-1) = zeta(3) + Li_3(-1) = zeta(3)/4
    const CzvCombination alt = fold_alternating_depth1(normalize_even_zetas(specialize(r, {one, minus_one})));
    CHECK(alt == zeta(3, make_rational(1, 4)));
    CHECK_THROWS_AS(specialize(shared_engine().pli({1, 1}), {one, one}), Error);
    CHECK_THROWS_AS(specialize(shared_engine().pli({1, 2}, Form::Compact), {one, i4}), Error);
}

TEST_CASE("closed reductions") {
    // zeta(1,2) = zeta(3), zeta(2,3) = 3 zeta(2) zeta(3) - 11/2 zeta(5)
    CHECK(substitute_zeta_zero(reduce_mzv_depth2(1, 2)) == zeta(3));
    const CzvCombination z23 = CzvCombination::of(zeta_symbol(2) * zeta_symbol(3), 3) + zeta(5, make_rational(-11, 2));
    CHECK(substitute_zeta_zero(reduce_mzv_depth2(2, 3)) == z23);
    CHECK_THROWS_AS(reduce_mzv_depth2(2, 2), Error);
    // Li_{1,2}(1,-1) = zeta(3)/8
    CHECK(fold_alternating_depth1(alt_depth2(1, 2, 1, -1)) == zeta(3, make_rational(1, 8)));
    CHECK_THROWS_AS(alt_depth2(2, 1, 1, 1), Error);
}

TEST_CASE("zeta(1,5,2)") {
    const CzvCombination got = substitute_zeta_zero(reduce_mzv_depth3(1, 5, 2));
    CzvCombination expect = zeta(8, 7);
    expect += CzvCombination::of(zeta_symbol(2) * zeta_symbol(6), 3);
    expect += CzvCombination::of(zeta_symbol(4) * zeta_symbol(2) * zeta_symbol(2), -5);
    expect += CzvCombination::of(zeta_symbol(2) * zeta_symbol(3) * zeta_symbol(3), 2);
    expect += CzvCombination::of(zeta_symbol(3) * zeta_symbol(5), -3);
    expect += CzvCombination::of(mzv_symbol({1, 7}), 7);
    expect += CzvCombination::of(zeta_symbol(4) * zeta_symbol(4), make_rational(3, 2));
    expect += CzvCombination::of(mzv_symbol({5, 3}), make_rational(1, 2));
    expect += CzvCombination::of(mzv_symbol({6, 2}), make_rational(-1, 2));
    CHECK(got == expect);
    CHECK(got.homogeneous_weight() == 8);
    CHECK(got.max_depth() == 2);
    CHECK_FALSE(integrality_check(got));
    CHECK(integrality_check(reduce_mzv_depth3(1, 5, 2)));
}

TEST_CASE("odd double zetas fold away at z = 1") {
    // the (2 pi i) part of 2 zeta(1,5,2) vanishes once weight-7 double zetas reduce
    const CzvCombination c =
        normalize_even_zetas(reduce_odd_double_zetas(substitute_zeta_zero(specialize(shared_engine().pli({1, 5, 2}), {one, one, one}))));
    for (auto& [s, x] : c.terms()) CHECK(s.two_pi_i % 2 == 0);
    CHECK(reduce_odd_double_zetas(li_of({2, 3}, {one, one})) == substitute_zeta_zero(reduce_mzv_depth2(2, 3)));
    CHECK(reduce_odd_double_zetas(li_of({2, 3}, {one, minus_one})) == li_of({2, 3}, {one, minus_one}));
}

TEST_CASE("Bernoulli identities") {
    for (int n1 = 0; n1 <= 8; ++n1)
        for (int n2 = 0; n1 + n2 <= 8; ++n2) CHECK(bernoulli_identity_check(n1, n2));
}

TEST_CASE("integrality") {
    const PliResult r = shared_engine().pli({2, 1, 2});
    CHECK(integrality_check(r));
    PliResult halved = r;
    halved.equation *= make_rational(1, 2);
    CHECK_FALSE(integrality_check(halved));
}

TEST_CASE("specializations keep depth and weight, N in {1,2,3,4,6}") {
    for (long N : {1, 2, 3, 4, 6})
        for (int w = 2; w <= 5; ++w)
            for (auto& n : compositions(w)) {
                if (n.size() < 2) continue;
                const PliResult r = shared_engine().pli(n);
                for (long seed = 0; seed < 3; ++seed) {
                    std::vector<RootOfUnity> roots;
                    for (size_t i = 0; i < n.size(); ++i) roots.emplace_back((seed * 5 + static_cast<long>(i) * 7 + 1) % N, N);
                    if (n.back() == 1 && roots.back().is_one()) roots.back() = RootOfUnity(N > 1 ? 1 : 0, N);
                    if (n.back() == 1 && roots.back().is_one()) continue;
                    CAPTURE(index_str(n));
                    CAPTURE(N);
                    const CzvCombination c = substitute_zeta_zero(specialize(r, roots));
                    CHECK(c.max_depth() <= depth(n) - 1);
                    CHECK((c.homogeneous_weight() == w || c.empty()));
                }
            }
}

TEST_CASE("specializations agree numerically with the nested sums") {
    PrecisionGuard guard(40);
    const Real target("1e-30");
    struct Case {
        IndexVector n;
        std::vector<RootOfUnity> roots;
    };
    const std::vector<Case> cases{{{1, 2}, {one, i4}},        {{2, 2}, {minus_one, i4}},  {{1, 3}, {RootOfUnity(1, 3), one}},
                                  {{2, 1, 2}, {one, i4, i4}}, {{1, 1, 3}, {i4, one, one}}, {{3, 1}, {i4, i4}},
                                  {{1, 1, 1, 2}, {one, one, minus_one, one}}};
    for (auto& c : cases) {
        CAPTURE(index_str(c.n));
        const Cplx rhs = eval_czv(specialize(shared_engine().pli(c.n), c.roots), target).value;
        std::vector<RootOfUnity> inv;
        for (auto& r : c.roots) inv.push_back(r.inverse());
        const Real s = (weight(c.n) - depth(c.n)) % 2 ? -1 : 1;
        const Cplx lhs = eval_li_at_roots({c.n, c.roots}, target) - s * eval_li_at_roots({c.n, inv}, target);
        CHECK(dist(lhs, rhs) < 1e-25);
        // real when |n| - d is odd, imaginary otherwise
        CHECK(abs(Cplx(s < 0 ? rhs.im : rhs.re)).convert_to<double>() < 1e-25);
    }
    // hyperlogarithm values at roots against a long partial sum
    const Cplx h = eval_li_at_roots({{1, 3}, {i4, minus_i4}}, target);
    const Cplx series = li_at_roots_by_series({1, 3}, {i4, minus_i4}, 4000);
    CHECK(dist(h, series) < 1e-5);
}
