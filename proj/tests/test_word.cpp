#include "errors.hpp"
#include "word.hpp"

#include <doctest.h>

#include <map>
#include <string>

using namespace parity;

namespace {

// Letters spelled as characters: '0' is omega_0, 'a'/'b'/'c' are omega at 1, -1, i.
Letter letter(char c) {
    switch (c) {
        case '0': return Letter::omega0();
        case 'a': return Letter::omega(ArgExpr::constant(RootOfUnity::one()));
        case 'b': return Letter::omega(ArgExpr::constant(RootOfUnity(1, 2)));
        default: return Letter::omega(ArgExpr::constant(RootOfUnity(1, 4)));
    }
}

Word spell(const std::string& s) {
    Word w;
    for (char c : s) w.push_back(letter(c));
    return w;
}

using StrSum = std::map<std::string, long>;

StrSum str_shuffle(const std::string& u, const std::string& v) {
    if (u.empty()) return {{v, 1}};
    if (v.empty()) return {{u, 1}};
    StrSum out;
    for (auto& [w, c] : str_shuffle(u.substr(1), v)) out[u[0] + w] += c;
    for (auto& [w, c] : str_shuffle(u, v.substr(1))) out[v[0] + w] += c;
    return out;
}

WordSum to_sum(const StrSum& s) {
    WordSum out;
    for (auto& [w, c] : s) out.add(spell(w), c);
    return out;
}

std::vector<std::string> all_words(const std::string& alphabet, size_t max_len) {
    std::vector<std::string> out{""};
    for (size_t i = 0; i < out.size(); ++i)
        if (out[i].size() < max_len)
            for (char c : alphabet) out.push_back(out[i] + c);
    return out;
}

}  // namespace

TEST_CASE("shuffle against string interleavings") {
    for (auto& u : all_words("0ab", 3))
        for (auto& v : all_words("0ab", 3)) CHECK(shuffle(spell(u), spell(v)) == to_sum(str_shuffle(u, v)));
}

TEST_CASE("shuffle is commutative and associative") {
    const Word a = spell("0a"), b = spell("b0"), c = spell("ab");
    CHECK(shuffle(a, b) == shuffle(b, a));
    CHECK(shuffle(shuffle(a, b), WordSum(c)) == shuffle(WordSum(a), shuffle(b, c)));
    BigRational total = 0;
    const WordSum sh = shuffle(spell("0ab"), spell("ba0"));
    for (auto& [w, x] : sh.terms()) total += x;
    CHECK(total == 20);
}

TEST_CASE("shuffle regularization identity, exhaustive for |u| <= 3 and r <= 3") {
    const auto us = all_words("0ab", 3);
    const auto ss = all_words("0ab", 3);
    int checked = 0;
    for (auto& u : us)
        for (char tau : std::string("0ab"))
            for (auto& s : ss) {
                const WordSum lhs(spell(u + tau + s));
                REQUIRE(shuffle_reg_rewrite(spell(u), letter(tau), spell(s)) == lhs);
                ++checked;
            }
    CHECK(checked == 40 * 3 * 40);
}

TEST_CASE("reversed regularization identity") {
    for (auto& lead : all_words("ab", 3))
        for (auto& u : all_words("0ab", 2)) CHECK(shuffle_reg_rewrite_reversed(spell(lead), letter('c'), spell(u)) == WordSum(spell(lead + "c" + u)));
}

TEST_CASE("Li words") {
    // Li_{1,2}(y1, y2) = int w0 w(1/y2) w(1/(y1 y2))
    const ArgExpr y1 = ArgExpr::variable(1), y2 = ArgExpr::variable(2);
    auto [sign, w] = li_to_word({1, 2}, {y1, y2});
    CHECK(sign == 1);
    REQUIRE(w.size() == 3);
    CHECK(w[0] == Letter::omega0());
    CHECK(w[1] == Letter::omega(y2.inverse()));
    CHECK(w[2] == Letter::omega((y1 * y2).inverse()));

    const IndexVector n{3, 1, 2};
    const std::vector<ArgExpr> args{y1, ArgExpr::variable(2, -1), ArgExpr::constant(RootOfUnity(1, 3)) * ArgExpr::variable(3)};
    auto [s2, w2] = li_to_word(n, args);
    const LiWord back = word_to_li(w2);
    CHECK(back.sign == s2);
    CHECK(back.indices == n);
    CHECK(back.args == args);
    CHECK_THROWS_AS(word_to_li(spell("a0")), Error);
}
