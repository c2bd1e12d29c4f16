#include "word.hpp"

#include "errors.hpp"

#include <algorithm>

namespace parity {

ArgExpr ArgExpr::variable(int i, int exponent) {
    ArgExpr a;
    if (exponent != 0) a.powers.push_back({i, exponent});
    return a;
}

ArgExpr ArgExpr::inverse() const {
    ArgExpr a{root.inverse(), powers};
    for (auto& p : a.powers) p.second = -p.second;
    return a;
}

ArgExpr operator*(const ArgExpr& a, const ArgExpr& b) {
    ArgExpr r{a.root * b.root, {}};
    std::map<int, int> exps;
    for (auto& [v, e] : a.powers) exps[v] += e;
    for (auto& [v, e] : b.powers) exps[v] += e;
    for (auto& [v, e] : exps)
        if (e != 0) r.powers.push_back({v, e});
    return r;
}

std::string ArgExpr::str() const {
    std::string s;
    if (!root.is_one() || powers.empty()) {
        if (root.is_one())
            s = "1";
        else if (root.n == 2)
            s = "-1";
        else
            s = "e(" + root.str() + ")";
    }
    for (auto& [v, e] : powers) {
        if (!s.empty()) s += "*";
        s += "z" + std::to_string(v);
        if (e != 1) s += "^" + std::to_string(e);
    }
    return s;
}

std::string Letter::str() const { return zero ? "w(0)" : "w(" + sigma.str() + ")"; }

std::string word_str(const Word& w) {
    std::string s;
    for (auto& l : w) s += l.str();
    return s.empty() ? "1" : s;
}

void WordSum::add(const Word& w, const BigRational& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(w, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

WordSum& WordSum::operator+=(const WordSum& other) {
    for (auto& [w, c] : other.terms_) add(w, c);
    return *this;
}

WordSum& WordSum::operator*=(const BigRational& c) {
    if (c == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [w, x] : terms_) x *= c;
    return *this;
}

WordSum operator-(WordSum a, const WordSum& b) {
    for (auto& [w, c] : b.terms_) a.add(w, -c);
    return a;
}

std::string WordSum::str() const {
    if (terms_.empty()) return "0";
    std::string s;
    for (auto& [w, c] : terms_) {
        if (!s.empty()) s += " + ";
        s += to_string(c) + " " + word_str(w);
    }
    return s;
}

namespace {

using ShuffleMemo = std::map<std::pair<size_t, size_t>, WordSum>;

const WordSum& shuffle_tail(const Word& u, const Word& v, size_t i, size_t j, ShuffleMemo& memo) {
    auto key = std::make_pair(i, j);
    if (auto it = memo.find(key); it != memo.end()) return it->second;
    WordSum out;
    if (i == u.size()) {
        out.add(Word(v.begin() + j, v.end()), 1);
    } else if (j == v.size()) {
        out.add(Word(u.begin() + i, u.end()), 1);
    } else {
        out += concat({u[i]}, shuffle_tail(u, v, i + 1, j, memo));
        out += concat({v[j]}, shuffle_tail(u, v, i, j + 1, memo));
    }
    return memo.emplace(key, std::move(out)).first->second;
}

}  // namespace

WordSum shuffle(const Word& u, const Word& v) {
    ShuffleMemo memo;
    return shuffle_tail(u, v, 0, 0, memo);
}

WordSum shuffle(const WordSum& a, const WordSum& b) {
    WordSum out;
    for (auto& [u, cu] : a.terms())
        for (auto& [v, cv] : b.terms()) {
            WordSum s = shuffle(u, v);
            s *= cu * cv;
            out += s;
        }
    return out;
}

WordSum concat(const Word& prefix, const WordSum& s, const Word& suffix) {
    WordSum out;
    for (auto& [w, c] : s.terms()) {
        Word x = prefix;
        x.insert(x.end(), w.begin(), w.end());
        x.insert(x.end(), suffix.begin(), suffix.end());
        out.add(x, c);
    }
    return out;
}

WordSum shuffle_reg_rewrite(const Word& u, const Letter& tau, const Word& sigmas) {
    const size_t r = sigmas.size();
    WordSum out;
    for (size_t k = 0; k <= r; ++k) {
        Word head(sigmas.rend() - static_cast<long>(k), sigmas.rend());  // sigma_k ... sigma_1
        Word tail(sigmas.begin() + static_cast<long>(k), sigmas.end());
        WordSum inner = concat({}, shuffle(u, head), {tau});
        WordSum term = shuffle(inner, WordSum(tail));
        if (k % 2) term *= BigRational(-1);
        out += term;
    }
    return out;
}

WordSum shuffle_reg_rewrite_reversed(const Word& leading, const Letter& tau, const Word& u) {
    auto reversed = [](Word w) {
        std::reverse(w.begin(), w.end());
        return w;
    };
    WordSum forward = shuffle_reg_rewrite(reversed(u), tau, reversed(leading));
    WordSum out;
    for (auto& [w, c] : forward.terms()) out.add(reversed(w), c);
    return out;
}

LiWord word_to_li(const Word& w) {
    if (w.empty()) fail(ErrorKind::InvalidArgument, "empty word has no polylogarithm form");
    if (w.back().zero) fail(ErrorKind::InvalidArgument, "word ending in w(0) is not a polylogarithm: " + word_str(w));
    std::vector<int> outer_to_inner_n;
    std::vector<ArgExpr> outer_to_inner_sigma;
    int zeros = 0;
    for (auto& l : w) {
        if (l.zero) {
            ++zeros;
            continue;
        }
        outer_to_inner_n.push_back(zeros + 1);
        outer_to_inner_sigma.push_back(l.sigma);
        zeros = 0;
    }
    const size_t d = outer_to_inner_n.size();
    LiWord li;
    li.sign = d % 2 ? -1 : 1;
    li.indices.assign(outer_to_inner_n.rbegin(), outer_to_inner_n.rend());
    std::vector<ArgExpr> sigma(outer_to_inner_sigma.rbegin(), outer_to_inner_sigma.rend());  // sigma_1..sigma_d
    li.args.resize(d);
    for (size_t i = 0; i < d; ++i) li.args[i] = i + 1 < d ? sigma[i + 1] * sigma[i].inverse() : sigma[i].inverse();
    return li;
}

std::pair<int, Word> li_to_word(const IndexVector& n, const std::vector<ArgExpr>& args) {
    validate_index(n);
    if (n.size() != args.size()) fail(ErrorKind::InvalidArgument, "index and argument count differ");
    const size_t d = n.size();
    std::vector<ArgExpr> sigma(d);
    ArgExpr tail;
    for (size_t i = d; i-- > 0;) {
        tail = tail * args[i];
        sigma[i] = tail.inverse();
    }
    Word w;
    for (size_t i = d; i-- > 0;) {
        for (int z = 1; z < n[i]; ++z) w.push_back(Letter::omega0());
        w.push_back(Letter::omega(sigma[i]));
    }
    return {d % 2 ? -1 : 1, w};
}

}  // namespace parity
