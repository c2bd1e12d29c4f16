#pragma once

#include "index.hpp"
#include "rational.hpp"
#include "root.hpp"

#include <compare>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace parity {

// A root of unity times a Laurent monomial in the variables z_1, z_2, ...
struct ArgExpr {
    RootOfUnity root;
    std::vector<std::pair<int, int>> powers;  // (variable, exponent), sorted by variable, no zero exponents

    static ArgExpr variable(int i, int exponent = 1);
    static ArgExpr constant(RootOfUnity r) { return {r, {}}; }

    bool is_one() const { return root.is_one() && powers.empty(); }
    bool is_constant() const { return powers.empty(); }
    ArgExpr inverse() const;
    friend ArgExpr operator*(const ArgExpr& a, const ArgExpr& b);
    auto operator<=>(const ArgExpr&) const = default;

    std::string str() const;
};

// omega_0 = dt/t or omega_sigma = dt/(t - sigma).
struct Letter {
    bool zero = true;
    ArgExpr sigma;

    static Letter omega0() { return {}; }
    static Letter omega(ArgExpr s) { return {false, std::move(s)}; }
    auto operator<=>(const Letter&) const = default;

    std::string str() const;
};

// Leftmost letter is the outermost integration.
using Word = std::vector<Letter>;
std::string word_str(const Word& w);

class WordSum {
public:
    WordSum() = default;
    explicit WordSum(Word w, BigRational c = 1) { add(std::move(w), std::move(c)); }

    void add(const Word& w, const BigRational& c);
    WordSum& operator+=(const WordSum& other);
    WordSum& operator*=(const BigRational& c);
    friend WordSum operator+(WordSum a, const WordSum& b) { return a += b; }
    friend WordSum operator-(WordSum a, const WordSum& b);
    friend bool operator==(const WordSum&, const WordSum&) = default;

    const std::map<Word, BigRational>& terms() const { return terms_; }
    bool empty() const { return terms_.empty(); }
    size_t size() const { return terms_.size(); }
    std::string str() const;

private:
    std::map<Word, BigRational> terms_;
};

WordSum shuffle(const Word& u, const Word& v);
WordSum shuffle(const WordSum& a, const WordSum& b);
// prefix . s . suffix, word by word
WordSum concat(const Word& prefix, const WordSum& s, const Word& suffix = {});

// u tau sigma_1...sigma_r = sum_k (-1)^k [(u sh sigma_k...sigma_1) tau] sh sigma_{k+1}...sigma_r
WordSum shuffle_reg_rewrite(const Word& u, const Letter& tau, const Word& sigmas);
// a_1...a_r tau u = sum_k (-1)^k (a_1...a_{r-k}) sh tau (u sh a_r...a_{r-k+1})
WordSum shuffle_reg_rewrite_reversed(const Word& leading, const Letter& tau, const Word& u);

// Integral over [0,1] of a word versus Li: Li_n(y) = sign * int(word).
struct LiWord {
    int sign = 1;
    IndexVector indices;
    std::vector<ArgExpr> args;
};
LiWord word_to_li(const Word& w);
std::pair<int, Word> li_to_word(const IndexVector& n, const std::vector<ArgExpr>& args);

}  // namespace parity
