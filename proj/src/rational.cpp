#include "rational.hpp"

#include "errors.hpp"

#include <mutex>

namespace parity {

BigRational make_rational(long num, long den) {
    if (den == 0) fail(ErrorKind::InvalidArgument, "zero denominator");
    return BigRational(num) / BigRational(den);
}

bool is_integer(const BigRational& q) { return denominator(q) == 1; }

std::string to_string(const BigRational& q) {
    if (is_integer(q)) return numerator(q).str();
    return numerator(q).str() + "/" + denominator(q).str();
}

BigRational parse_rational(std::string_view text) {
    auto valid_int = [](std::string_view s) {
        if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
        if (s.empty()) return false;
        for (char c : s)
            if (c < '0' || c > '9') return false;
        return true;
    };
    auto slash = text.find('/');
    std::string_view num = text.substr(0, slash);
    std::string_view den = slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
    if (!valid_int(num) || !valid_int(den)) fail(ErrorKind::Parse, "malformed rational '" + std::string(text) + "'");
    BigInt n(std::string(num.front() == '+' ? num.substr(1) : num));
    BigInt d(std::string(den.front() == '+' ? den.substr(1) : den));
    if (d == 0) fail(ErrorKind::Parse, "zero denominator in '" + std::string(text) + "'");
    return BigRational(n, d);
}

RatPolynomial::RatPolynomial(std::vector<BigRational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

void RatPolynomial::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

BigRational RatPolynomial::coeff(int k) const {
    if (k < 0 || k > degree()) return 0;
    return coeffs_[k];
}

BigRational RatPolynomial::operator()(const BigRational& x) const {
    BigRational acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

RatPolynomial RatPolynomial::substitute_affine(const BigRational& a, const BigRational& b) const {
    RatPolynomial lin({b, a});
    RatPolynomial acc;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * lin + RatPolynomial({*it});
    return acc;
}

RatPolynomial operator+(const RatPolynomial& p, const RatPolynomial& q) {
    std::vector<BigRational> c(std::max(p.coeffs_.size(), q.coeffs_.size()));
    for (size_t i = 0; i < c.size(); ++i) c[i] = p.coeff(int(i)) + q.coeff(int(i));
    return RatPolynomial(std::move(c));
}

RatPolynomial operator-(const RatPolynomial& p, const RatPolynomial& q) {
    return p + BigRational(-1) * q;
}

RatPolynomial operator*(const RatPolynomial& p, const RatPolynomial& q) {
    if (p.coeffs_.empty() || q.coeffs_.empty()) return {};
    std::vector<BigRational> c(p.coeffs_.size() + q.coeffs_.size() - 1);
    for (size_t i = 0; i < p.coeffs_.size(); ++i)
        for (size_t j = 0; j < q.coeffs_.size(); ++j) c[i + j] += p.coeffs_[i] * q.coeffs_[j];
    return RatPolynomial(std::move(c));
}

RatPolynomial operator*(const BigRational& c, const RatPolynomial& p) {
    std::vector<BigRational> r = p.coeffs_;
    for (auto& x : r) x *= c;
    return RatPolynomial(std::move(r));
}

BigInt binomial(long n, long k) {
    if (n < 0) fail(ErrorKind::InvalidArgument, "binomial with negative top");
    if (k < 0 || k > n) return 0;
    BigInt r;
    mpz_bin_uiui(r.backend().data(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return r;
}

BigRational signed_binomial(long a, long k) {
    if (k < 0) return 0;
    BigInt num = 1;
    for (long i = 0; i < k; ++i) num *= (a - i);
    return BigRational(num, factorial(k));
}

BigInt factorial(long n) {
    if (n < 0) fail(ErrorKind::InvalidArgument, "factorial of negative number");
    BigInt r;
    mpz_fac_ui(r.backend().data(), static_cast<unsigned long>(n));
    return r;
}

namespace {

std::mutex bernoulli_mutex;
std::vector<BigRational> bernoulli_cache{BigRational(1)};

}  // namespace

BigRational bernoulli_number(int n) {
    if (n < 0) fail(ErrorKind::InvalidArgument, "negative Bernoulli index");
    std::lock_guard lock(bernoulli_mutex);
    // sum_{k<=m} C(m+1,k) B_k = 0
    for (int m = static_cast<int>(bernoulli_cache.size()); m <= n; ++m) {
        if (m > 1 && m % 2 == 1) {
            bernoulli_cache.emplace_back(0);
            continue;
        }
        BigRational s = 0;
        for (int k = 0; k < m; ++k)
            if (bernoulli_cache[k] != 0) s += BigRational(binomial(m + 1, k)) * bernoulli_cache[k];
        bernoulli_cache.push_back(-s / (m + 1));
    }
    return bernoulli_cache[n];
}

RatPolynomial bernoulli_polynomial(int n) {
    if (n < 0) fail(ErrorKind::InvalidArgument, "negative Bernoulli index");
    std::vector<BigRational> c(n + 1);
    for (int k = 0; k <= n; ++k) c[k] = BigRational(binomial(n, k)) * bernoulli_number(n - k);
    return RatPolynomial(std::move(c));
}

}  // namespace parity
