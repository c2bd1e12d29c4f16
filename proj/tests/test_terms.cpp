#include "errors.hpp"
#include "terms.hpp"

#include <doctest.h>

using namespace parity;

namespace {

const ConsProd z1{1, 1, false}, z2{2, 2, false}, z3{3, 3, false}, z12{1, 2, false}, z23{2, 3, false};

}  // namespace

TEST_CASE("combination arithmetic cancels and merges") {
    LinComb a(2), b(2);
    const Generator g = make_generator(2, {}, {li({3}, {z1})});
    const Generator h = make_generator(2, {1, 0}, {li({2}, {z2})});
    a.add(g, 2);
    a.add(h, make_rational(1, 2));
    b.add(g, -2);
    const LinComb s = a + b;
    CHECK(s.size() == 1);
    CHECK(s.homogeneous_weight() == 3);
    CHECK_FALSE(s.integral());
    CHECK((a - a).empty());
    CHECK(LinComb(2).homogeneous_weight() == -1);
    LinComb mixed = a;
    mixed.add(unit_generator(2), 1);
    CHECK(mixed.homogeneous_weight() == -2);
}

TEST_CASE("generator products") {
    const Generator a = make_generator(3, {0, 2, 0}, {li({1}, {z1})});
    const Generator b = make_generator(3, {1, 0, 0}, {li({2}, {z3})});
    const Generator p = multiply(a, b);
    CHECK(p.ber == std::vector<int>{1, 2, 0});
    CHECK(p.weight() == 6);
    CHECK(p.depth() == 2);
    CHECK(multiply(a, b) == multiply(b, a));
    CHECK_THROWS_AS(multiply(a, a), Error);
}

TEST_CASE("canonical generators") {
    CHECK(is_canonical(make_generator(3, {}, {li({1, 2}, {z1, z23})})));
    CHECK(is_canonical(make_generator(3, {}, {li({1}, {z1}), li({2}, {z23})})));
    CHECK_FALSE(is_canonical(make_generator(3, {}, {li({1}, {z12}), li({2}, {z23})})));
    CHECK_FALSE(is_canonical(make_generator(2, {}, {li({1, 2}, {z2, z1})})));
    CHECK_FALSE(is_canonical(make_generator(2, {}, {li({2}, {ConsProd{1, 2, true}})})));
    CHECK_THROWS_AS(validate_generator(make_generator(3, {}, {li({1, 2}, {z1, z23})}), 1, 3), Error);
    CHECK_THROWS_AS(validate_generator(make_generator(3, {}, {li({1, 2}, {z1, z23})}), 2, 4), Error);
    CHECK_NOTHROW(validate_generator(make_generator(3, {0, 0, 1}, {li({1, 2}, {z1, z2})}), 2, 4));
}

TEST_CASE("depth-one inversion and stuffle swap have the expected shape") {
    const LinComb inv = invert_depth1(3, z23, 3);
    CHECK(inv.size() == 2);
    CHECK(inv.terms().at(make_generator(3, {}, {li({3}, {z23})})) == 1);
    CHECK(inv.terms().at(make_generator(3, {0, 3, 0}, {})) == 1);
    CHECK(invert_depth1(2, z2, 2).terms().at(make_generator(2, {0, 2}, {})) == -1);
    CHECK_THROWS_AS(invert_depth1(2, z1, 2), Error);

    const LinComb sw = stuffle_swap_depth2(1, 2, z1, z23, 3);
    CHECK(sw.size() == 3);
    CHECK(sw.terms().at(make_generator(3, {}, {li({1, 2}, {z1, z23})})) == -1);
    CHECK(sw.terms().at(make_generator(3, {}, {li({3}, {ConsProd{1, 3, false}})})) == -1);
    CHECK_THROWS_AS(stuffle_swap_depth2(1, 2, z1, z3, 3), Error);
}

TEST_CASE("ber factors in the log basis") {
    // ber_k = sum_j B_{k-j}(1/2) (2 pi i)^{k-j} L^j / ((k-j)! j!), with (2 pi i)^2 = -24 zeta(2)
    for (int k = 0; k <= 12; ++k) {
        const auto c = ber_log_coefficients(k);
        REQUIRE(static_cast<int>(c.size()) == k + 1);
        for (int j = 0; j <= k; ++j) {
            const int m = k - j;
            if (m % 2) {
                CHECK(c[j] == 0);
                continue;
            }
            BigRational expect = bernoulli_polynomial(m)(make_rational(1, 2)) / BigRational(factorial(m) * factorial(j));
            for (int i = 0; i < m / 2; ++i) expect *= -24;
            CHECK(c[j] == expect);
        }
    }
    // ber_2 = L^2/2 + zeta(2)
    const auto b2 = ber_log_coefficients(2);
    CHECK(b2[0] == 1);
    CHECK(b2[2] == make_rational(1, 2));

    LinComb c(2);
    c.add(make_generator(2, {1, 2}, {li({1}, {z1})}), 3);
    const LogExpansion e = expand_ber_to_logs(c);
    // 3 L12 (L2^2/2 + zeta(2)) Li_1(z1)
    CHECK(e.terms.size() == 2);
    CHECK(e.terms.at(LogMonomial{0, {1, 2}, {li({1}, {z1})}}) == make_rational(3, 2));
    CHECK(e.terms.at(LogMonomial{1, {1, 0}, {li({1}, {z1})}}) == 3);
}
