#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <string>
#include <string_view>
#include <vector>

namespace parity {

using BigInt = boost::multiprecision::mpz_int;
using BigRational = boost::multiprecision::mpq_rational;

BigRational make_rational(long num, long den = 1);
bool is_integer(const BigRational& q);

// "p" for integers, "p/q" otherwise.
std::string to_string(const BigRational& q);
BigRational parse_rational(std::string_view text);

// Dense univariate polynomial with rational coefficients, coeffs_[k] multiplies x^k.
class RatPolynomial {
public:
    RatPolynomial() = default;
    explicit RatPolynomial(std::vector<BigRational> coeffs);

    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    BigRational coeff(int k) const;
    const std::vector<BigRational>& coeffs() const { return coeffs_; }
    BigRational operator()(const BigRational& x) const;

    // p(a*x + b)
    RatPolynomial substitute_affine(const BigRational& a, const BigRational& b) const;

    friend RatPolynomial operator+(const RatPolynomial& p, const RatPolynomial& q);
    friend RatPolynomial operator-(const RatPolynomial& p, const RatPolynomial& q);
    friend RatPolynomial operator*(const RatPolynomial& p, const RatPolynomial& q);
    friend RatPolynomial operator*(const BigRational& c, const RatPolynomial& p);
    friend bool operator==(const RatPolynomial& p, const RatPolynomial& q) = default;

private:
    void trim();
    std::vector<BigRational> coeffs_;
};

// B_n with B_1 = -1/2. Thread-safe, memoized.
BigRational bernoulli_number(int n);
RatPolynomial bernoulli_polynomial(int n);

// n choose k for n >= 0, zero outside 0 <= k <= n.
BigInt binomial(long n, long k);
// a(a-1)...(a-k+1)/k! for any integer a, zero for k < 0.
BigRational signed_binomial(long a, long k);
BigInt factorial(long n);

}  // namespace parity
