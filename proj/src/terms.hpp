#pragma once

#include "index.hpp"
#include "rational.hpp"

#include <compare>
#include <functional>
#include <map>
#include <string>
#include <vector>

namespace parity {

// z_start * ... * z_end, or its reciprocal.
struct ConsProd {
    int start = 1;
    int end = 1;
    bool inverted = false;

    auto operator<=>(const ConsProd&) const = default;
};

struct LiFactor {
    IndexVector indices;
    std::vector<ConsProd> args;

    int weight() const { return parity::weight(indices); }
    int depth() const { return static_cast<int>(indices.size()); }
    auto operator<=>(const LiFactor& o) const {
        if (auto c = args <=> o.args; c != 0) return c;
        return indices <=> o.indices;
    }
    bool operator==(const LiFactor&) const = default;
};

// prod_i ber_{ber[i]}(z_{i+1} ... z_N) * prod Li factors, ambient N = ber.size().
struct Generator {
    std::vector<int> ber;
    std::vector<LiFactor> lis;  // sorted

    int ambient() const { return static_cast<int>(ber.size()); }
    int weight() const;
    int depth() const;
    bool operator==(const Generator&) const = default;
};

struct GeneratorOrder {
    bool operator()(const Generator& a, const Generator& b) const;
};

// Integer or rational combination of generators in a fixed ambient dimension.
class LinComb {
public:
    explicit LinComb(int ambient = 0) : ambient_(ambient) {}

    int ambient() const { return ambient_; }
    const std::map<Generator, BigRational, GeneratorOrder>& terms() const { return terms_; }
    bool empty() const { return terms_.empty(); }
    size_t size() const { return terms_.size(); }

    void add(const Generator& g, const BigRational& c);
    LinComb& operator+=(const LinComb& o);
    LinComb& operator-=(const LinComb& o);
    LinComb& operator*=(const BigRational& c);
    friend LinComb operator+(LinComb a, const LinComb& b) { return a += b; }
    friend LinComb operator-(LinComb a, const LinComb& b) { return a -= b; }
    friend LinComb operator*(const BigRational& c, LinComb a) { return a *= c; }
    friend bool operator==(const LinComb&, const LinComb&) = default;

    int max_depth() const;
    // -1 when empty, -2 when not homogeneous
    int homogeneous_weight() const;
    bool integral() const;

private:
    int ambient_;
    std::map<Generator, BigRational, GeneratorOrder> terms_;
};

Generator unit_generator(int ambient);
Generator make_generator(int ambient, std::vector<int> ber, std::vector<LiFactor> lis);
LinComb single(const Generator& g, const BigRational& c = 1);
LiFactor li(IndexVector indices, std::vector<ConsProd> args);

// Product of generators; throws Unsupported when two ber factors share an argument.
Generator multiply(const Generator& a, const Generator& b);
LinComb multiply(const LinComb& a, const LinComb& b);

LinComb normalize(const LinComb& c);

// Canonical generator: non-inverted Li arguments that are disjoint and increasing
// across all factors.  Throws InvalidArgument with a reason otherwise.
void validate_generator(const Generator& g, int max_depth, int weight);
bool is_canonical(const Generator& g);
bool is_canonical(const LinComb& c);

// Li_n(1/x) = (-1)^n (-Li_n(x) - ber_n(x)) for a tail product x = z_i...z_N.
LinComb invert_depth1(int n, const ConsProd& x, int ambient);
// Li_{n2,n1}(a2,a1) = Li_{n1}(a1) Li_{n2}(a2) - Li_{n1,n2}(a1,a2) - Li_{n1+n2}(a1 a2), a1 then a2 adjacent.
LinComb stuffle_swap_depth2(int n1, int n2, const ConsProd& a1, const ConsProd& a2, int ambient);

// Monomial in the log basis: zeta(2)^p * prod_i log(-z_i...z_N)^{e_i} * Li factors.
struct LogMonomial {
    int zeta2_power = 0;
    std::vector<int> logs;
    std::vector<LiFactor> lis;
    auto operator<=>(const LogMonomial&) const = default;
};

struct LogExpansion {
    int ambient = 0;
    std::map<LogMonomial, BigRational> terms;
    void add(const LogMonomial& m, const BigRational& c);
};

// ber_k(x) = sum_{k-j even} L^j/j! (2pi i)^{k-j} (2^{1-k+j}-1) B_{k-j}/(k-j)!, (2pi i)^2 = -24 zeta(2).
LogExpansion expand_ber_to_logs(const LinComb& c);
// Coefficients of ber_k in the log basis: entry j is the coefficient of L^j zeta(2)^{(k-j)/2}.
std::vector<BigRational> ber_log_coefficients(int k);

}  // namespace parity
