#pragma once

#include "index.hpp"
#include "rational.hpp"

#include <boost/multiprecision/mpfr.hpp>

#include <vector>

namespace parity {

using Real = boost::multiprecision::mpfr_float;

// Default precision for Real arithmetic on the calling thread.
class PrecisionGuard {
public:
    explicit PrecisionGuard(unsigned digits);
    ~PrecisionGuard();
    PrecisionGuard(const PrecisionGuard&) = delete;
    PrecisionGuard& operator=(const PrecisionGuard&) = delete;

private:
    unsigned saved_;
};

struct Cplx {
    Real re = 0;
    Real im = 0;

    Cplx() = default;
    Cplx(Real r, Real i = 0) : re(std::move(r)), im(std::move(i)) {}
    Cplx(int r) : re(r), im(0) {}

    friend Cplx operator+(const Cplx& a, const Cplx& b) { return {a.re + b.re, a.im + b.im}; }
    friend Cplx operator-(const Cplx& a, const Cplx& b) { return {a.re - b.re, a.im - b.im}; }
    friend Cplx operator-(const Cplx& a) { return {-a.re, -a.im}; }
    friend Cplx operator*(const Cplx& a, const Cplx& b) { return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re}; }
    friend Cplx operator*(const Real& s, const Cplx& a) { return {s * a.re, s * a.im}; }
    friend Cplx operator/(const Cplx& a, const Cplx& b);
    friend Cplx operator/(const Cplx& a, const Real& s) { return {a.re / s, a.im / s}; }
    Cplx& operator+=(const Cplx& b) {
        re += b.re;
        im += b.im;
        return *this;
    }
    Cplx& operator-=(const Cplx& b) {
        re -= b.re;
        im -= b.im;
        return *this;
    }
    Cplx& operator*=(const Cplx& b) { return *this = *this * b; }
};

Real abs(const Cplx& z);
Cplx conj(const Cplx& z);
Cplx log(const Cplx& z);  // principal branch, cut along (-inf, 0]
Cplx exp(const Cplx& z);
Cplx pow(const Cplx& z, int k);
Real pi();
Cplx two_pi_i();
Real to_real(const BigRational& q);
Cplx root_value(long k, long n);  // exp(2 pi i k/n)

struct HPComplex {
    Cplx value;
    Real error = 0;  // estimated absolute error bound
};

// ber_k(z) = (2 pi i)^k/k! B_k(1/2 + log(-z)/(2 pi i)).
Cplx ber_value(int k, const Cplx& z);

// Nested series; requires every tail product |z_i...z_d| < 1.
HPComplex eval_li_series(const IndexVector& n, const std::vector<Cplx>& z, const Real& target);

// Letters of an iterated integral along [0,1]; zero letters flagged explicitly.
struct NumLetter {
    bool zero = false;
    Cplx sigma;
};

// int_0^1 of the word, outermost letter first.  The innermost letter must be nonzero,
// the outermost must differ from 1 and no letter may lie in (0,1).
HPComplex eval_word(const std::vector<NumLetter>& word, const Real& target);

// Li_n(y) as a hyperlogarithm; valid wherever the straight path avoids the letters.
HPComplex eval_li_hyperlog(const IndexVector& n, const std::vector<Cplx>& y, const Real& target);

// Li_s(exp(2 pi i k/N)) for s >= 2 from Hurwitz zeta values.
Cplx li_root_depth1(int s, long k, long n);
Real hurwitz_zeta(int s, const Real& q);
Real zeta_value(int s);

}  // namespace parity
